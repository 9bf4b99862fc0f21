//! Orientations of a fixed labelled undirected graph, reduced to the least
//! member of their orbit under a group of its automorphisms.
//!
//! Edges are listed as `(a, b)` with `a < b` in lexicographic order. An
//! orientation is a bit string over that list, `true` meaning `a → b`; as a
//! `u64`, edge `i` sits at bit `m − 1 − i` so numeric order is lexicographic.

use super::AutGroup;
use crate::error::{Error, Result};
use crate::graph::{Digraph, UnderlyingGraph, MAX_N};

/// One non-identity group element acting on edge bit strings.
#[derive(Clone, Debug)]
struct EdgeImage {
    /// `src[j]`: the edge that lands on edge `j`.
    src: Vec<u8>,
    /// Bit `j` (string position) set when the landing edge is reversed.
    flip: Vec<bool>,
}

#[derive(Clone, Debug)]
pub struct OrientationAction {
    u: UnderlyingGraph,
    edges: Vec<(u8, u8)>,
    /// Edge masks indexed by vertex: the bits of the edges at that vertex.
    incident: [u64; MAX_N],
    images: Vec<EdgeImage>,
}

impl OrientationAction {
    pub fn new(u: &UnderlyingGraph, group: &AutGroup) -> Result<Self> {
        let edges = u.edges();
        let m = edges.len();
        if m > 64 {
            return Err(Error::TooLarge(format!("{m} edges; orientation strings hold at most 64")));
        }
        let mut index = vec![[u8::MAX; MAX_N]; u.n()];
        for (i, &(a, b)) in edges.iter().enumerate() {
            index[a][b] = i as u8;
            index[b][a] = i as u8;
        }
        let mut incident = [0u64; MAX_N];
        for (i, &(a, b)) in edges.iter().enumerate() {
            incident[a] |= 1 << (m - 1 - i);
            incident[b] |= 1 << (m - 1 - i);
        }
        let mut images = Vec::new();
        for g in group.elements() {
            if g.len() != u.n() {
                return Err(Error::LengthMismatch { perm: g.len(), n: u.n() });
            }
            if g.is_identity() {
                continue;
            }
            if !u.is_automorphism(g) {
                return Err(Error::NotUnderlyingAut);
            }
            let mut src = vec![0u8; m];
            let mut flip = vec![false; m];
            for (i, &(a, b)) in edges.iter().enumerate() {
                let (ga, gb) = (g.apply(a), g.apply(b));
                let j = index[ga][gb] as usize;
                src[j] = i as u8;
                flip[j] = ga > gb;
            }
            images.push(EdgeImage { src, flip });
        }
        Ok(OrientationAction {
            u: *u,
            edges: edges.iter().map(|&(a, b)| (a as u8, b as u8)).collect(),
            incident,
            images,
        })
    }

    pub fn underlying(&self) -> &UnderlyingGraph {
        &self.u
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of non-identity elements acting.
    pub fn group_size(&self) -> usize {
        self.images.len() + 1
    }

    #[inline]
    fn bit(&self, o: u64, j: usize) -> bool {
        o >> (self.edges.len() - 1 - j) & 1 == 1
    }

    /// Compares the image of `o` under `img` with `bound`, stopping at the
    /// first differing edge.
    #[inline]
    fn cmp_image(&self, o: u64, img: &EdgeImage, bound: u64) -> std::cmp::Ordering {
        for j in 0..self.edges.len() {
            let b = self.bit(o, img.src[j] as usize) ^ img.flip[j];
            let c = self.bit(bound, j);
            if b != c {
                return b.cmp(&c);
            }
        }
        std::cmp::Ordering::Equal
    }

    fn image(&self, o: u64, img: &EdgeImage) -> u64 {
        let m = self.edges.len();
        let mut r = 0u64;
        for j in 0..m {
            if self.bit(o, img.src[j] as usize) ^ img.flip[j] {
                r |= 1 << (m - 1 - j);
            }
        }
        r
    }

    /// Images of `o` under the non-identity elements, in group order.
    pub fn images(&self, o: u64) -> impl Iterator<Item = u64> + '_ {
        self.images.iter().map(move |img| self.image(o, img))
    }

    /// The least element of the orbit of `o`.
    pub fn orbit_min(&self, o: u64) -> u64 {
        let mut best = o;
        for img in &self.images {
            if self.cmp_image(o, img, best) == std::cmp::Ordering::Less {
                best = self.image(o, img);
            }
        }
        best
    }

    pub fn is_orbit_min(&self, o: u64) -> bool {
        self.images.iter().all(|img| self.cmp_image(o, img, o) != std::cmp::Ordering::Less)
    }

    /// The orientation with every edge at `v` reversed.
    #[inline]
    pub fn switch_bits(&self, o: u64, v: usize) -> u64 {
        o ^ self.incident[v]
    }

    /// Edge bits at `v`.
    pub fn incident_mask(&self, v: usize) -> u64 {
        self.incident[v]
    }

    pub fn to_digraph(&self, o: u64) -> Digraph {
        let mut arcs = Vec::with_capacity(self.edges.len());
        for (j, &(a, b)) in self.edges.iter().enumerate() {
            let (a, b) = (a as usize, b as usize);
            arcs.push(if self.bit(o, j) { (a, b) } else { (b, a) });
        }
        Digraph::from_arcs(self.u.n(), &arcs, true).expect("orientation of a simple graph")
    }

    /// The orientation string of `g`, if `g` is an orientation of exactly
    /// this labelled graph.
    pub fn from_digraph(&self, g: &Digraph) -> Option<u64> {
        if g.n() != self.u.n() || !g.is_oriented() || g.underlying() != self.u {
            return None;
        }
        let m = self.edges.len();
        let mut o = 0u64;
        for (j, &(a, b)) in self.edges.iter().enumerate() {
            if g.has_arc(a as usize, b as usize) {
                o |= 1 << (m - 1 - j);
            }
        }
        Some(o)
    }
}

/// The lexicographically least orientation in the orbit of `o` under `group`.
/// Works for any number of edges; [`OrientationAction`] is the fast path.
pub fn orientation_orbit_min(u: &UnderlyingGraph, group: &AutGroup, o: &[bool]) -> Vec<bool> {
    let edges = u.edges();
    assert_eq!(o.len(), edges.len(), "one direction per edge");
    let mut best = o.to_vec();
    let mut cand = vec![false; o.len()];
    for g in group.elements() {
        for (i, &(a, b)) in edges.iter().enumerate() {
            let (ga, gb) = (g.apply(a), g.apply(b));
            let key = (ga.min(gb), ga.max(gb));
            let j = edges.binary_search(&key).expect("group acts on the edges");
            cand[j] = o[i] ^ (ga > gb);
        }
        if cand < best {
            best.copy_from_slice(&cand);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{aut_group_undirected, canonical_code};

    fn to_bools(o: u64, m: usize) -> Vec<bool> {
        (0..m).map(|j| o >> (m - 1 - j) & 1 == 1).collect()
    }

    #[test]
    fn identity_group_fixes_everything() {
        let u = UnderlyingGraph::path(4).unwrap();
        let trivial = AutGroup::from_sorted(vec![crate::graph::Permutation::identity(4)]);
        let act = OrientationAction::new(&u, &trivial).unwrap();
        for o in 0..8 {
            assert_eq!(act.orbit_min(o), o);
            assert_eq!(orientation_orbit_min(&u, &trivial, &to_bools(o, 3)), to_bools(o, 3));
        }
    }

    #[test]
    fn triangle_and_square() {
        let c3 = UnderlyingGraph::cycle(3).unwrap();
        let a = aut_group_undirected(&c3).unwrap();
        // edges (0,1), (0,2), (1,2); clockwise 0→1→2→0
        let cw = vec![true, false, true];
        let min = orientation_orbit_min(&c3, &a, &cw);
        let act = OrientationAction::new(&c3, &a).unwrap();
        let mut orbit: Vec<u64> = a
            .elements()
            .iter()
            .map(|g| act.from_digraph(&act.to_digraph(0b101).permuted(g)).unwrap())
            .collect();
        orbit.sort();
        orbit.dedup();
        assert_eq!(orbit.len(), 2);
        assert_eq!(min, to_bools(orbit[0], 3));

        let c4 = UnderlyingGraph::cycle(4).unwrap();
        let a = aut_group_undirected(&c4).unwrap();
        let act = OrientationAction::new(&c4, &a).unwrap();
        // edges (0,1), (0,3), (1,2), (2,3); alternating: 0→1←2→3←0
        let alt = Digraph::from_arcs(4, &[(0, 1), (2, 1), (2, 3), (0, 3)], true).unwrap();
        let o = act.from_digraph(&alt).unwrap();
        let rot2 = alt.permuted(&crate::graph::Permutation::rotation(4, 2));
        assert_eq!(act.from_digraph(&rot2), Some(o));
        let orbit: std::collections::BTreeSet<u64> =
            a.elements().iter().map(|g| act.from_digraph(&alt.permuted(g)).unwrap()).collect();
        assert_eq!(8 % orbit.len(), 0);
        assert_eq!(act.orbit_min(o), *orbit.iter().next().unwrap());
    }

    #[test]
    fn exhaustive_small_graphs() {
        // every graph on at most 5 vertices with at most 10 edges, sampled by edge mask
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
            for mask in 0u32..1 << pairs.len() {
                if n == 5 && mask % 7 != 0 {
                    continue;
                }
                let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
                let u = UnderlyingGraph::from_edges(n, &edges).unwrap();
                let a = aut_group_undirected(&u).unwrap();
                let act = OrientationAction::new(&u, &a).unwrap();
                let m = edges.len();
                let mins: Vec<u64> = (0..1u64 << m).map(|o| act.orbit_min(o)).collect();
                for o in 0..1u64 << m {
                    let min = mins[o as usize];
                    assert!(min <= o);
                    assert_eq!(act.orbit_min(min), min);
                    assert!(act.is_orbit_min(min));
                    assert_eq!(act.is_orbit_min(o), min == o);
                    assert_eq!(orientation_orbit_min(&u, &a, &to_bools(o, m)), to_bools(min, m));
                }
                // equal minima iff isomorphic orientations
                let codes: Vec<_> = (0..1u64 << m).map(|o| canonical_code(&act.to_digraph(o))).collect();
                for o in 0..1usize << m {
                    for p in o + 1..1usize << m {
                        assert_eq!(mins[o] == mins[p], codes[o] == codes[p]);
                    }
                }
            }
        }
    }
}
