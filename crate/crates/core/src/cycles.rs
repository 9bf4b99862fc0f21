//! Rotations of oriented cycles and the switching sets that realize them.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use crate::enumerate::EdgeDir;
use crate::error::{Error, Result};
use crate::graph::{Digraph, Permutation, VertexSet};
use crate::search::{run_census_with, CensusOptions, GraphClass, SearchReport, TRange};
use crate::stability::solve_switch_iso;
use crate::switching::switch_vertex;

/// An orientation of the cycle `0, 1, …, n−1`; edge `i` joins `i` and
/// `i + 1 mod n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleOrientation {
    dirs: Vec<EdgeDir>,
}

impl CycleOrientation {
    pub fn new(dirs: Vec<EdgeDir>) -> Result<Self> {
        if dirs.len() < 3 {
            return Err(Error::TooSmall(dirs.len()));
        }
        if dirs.len() > 32 {
            return Err(Error::InvalidOrder(dirs.len()));
        }
        Ok(CycleOrientation { dirs })
    }

    /// Reads the orientation off a digraph whose underlying graph is the
    /// labelled cycle `0, 1, …, n−1`.
    pub fn from_digraph(g: &Digraph) -> Result<Self> {
        let n = g.n();
        if n < 3 {
            return Err(Error::TooSmall(n));
        }
        if g.underlying() != crate::graph::UnderlyingGraph::cycle(n)? {
            return Err(Error::MixedUnderlying);
        }
        let dirs = (0..n)
            .map(|i| {
                let j = (i + 1) % n;
                match (g.has_arc(i, j), g.has_arc(j, i)) {
                    (true, true) => EdgeDir::Digon,
                    (true, false) => EdgeDir::Fwd,
                    _ => EdgeDir::Bwd,
                }
            })
            .collect();
        CycleOrientation::new(dirs)
    }

    pub fn directed(n: usize) -> Result<Self> {
        CycleOrientation::new(vec![EdgeDir::Fwd; n])
    }

    pub fn n(&self) -> usize {
        self.dirs.len()
    }

    pub fn dirs(&self) -> &[EdgeDir] {
        &self.dirs
    }

    pub fn to_digraph(&self) -> Digraph {
        let n = self.n();
        let mut arcs = Vec::with_capacity(n + 1);
        for (i, d) in self.dirs.iter().enumerate() {
            let j = (i + 1) % n;
            match d {
                EdgeDir::Fwd => arcs.push((i, j)),
                EdgeDir::Bwd => arcs.push((j, i)),
                EdgeDir::Digon => arcs.extend([(i, j), (j, i)]),
            }
        }
        let oriented = !self.dirs.contains(&EdgeDir::Digon);
        Digraph::from_arcs(n, &arcs, oriented).expect("valid cycle")
    }

    fn switched(&self, v: usize) -> CycleOrientation {
        CycleOrientation::from_digraph(&switch_vertex(&self.to_digraph(), v).expect("vertex in range"))
            .expect("switching keeps the cycle")
    }
}

/// The rotation `v ↦ v + r mod n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rotation {
    n: usize,
    r: usize,
}

impl Rotation {
    pub fn new(n: usize, r: usize) -> Self {
        assert!(n > 0, "rotation of an empty cycle");
        Rotation { n, r: r % n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shift(&self) -> usize {
        self.r
    }

    pub fn order(&self) -> usize {
        self.n / gcd(self.n, self.r)
    }

    pub fn inverse(&self) -> Rotation {
        Rotation::new(self.n, self.n - self.r)
    }

    pub fn apply(&self, v: usize) -> usize {
        (v + self.r) % self.n
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::rotation(self.n, self.r)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `W(G, δ)`: the set `W` with `G_W = G^δ` and `|W| < n/2`, if there is one.
///
/// On an oriented cycle the solutions are exactly some `W` and its
/// complement. Digons cut the cycle into independent arcs, each of which
/// may be flipped; the solution returned then puts the first vertex of each
/// arc outside `W` before normalizing.
pub fn find_w(g: &CycleOrientation, delta: &Rotation) -> Result<Option<VertexSet>> {
    let n = g.n();
    if delta.n() != n {
        return Err(Error::LengthMismatch { perm: delta.n(), n });
    }
    let Some(w) = solve_switch_iso(&g.to_digraph(), &delta.to_permutation())? else {
        return Ok(None);
    };
    Ok(normalize(w, n))
}

fn normalize(w: VertexSet, n: usize) -> Option<VertexSet> {
    match (2 * w.len()).cmp(&n) {
        std::cmp::Ordering::Less => Some(w),
        std::cmp::Ordering::Equal => None,
        std::cmp::Ordering::Greater => Some(w.complement(n)),
    }
}

/// Pairwise distances along the cycle between the members of `w`.
pub fn cyclic_distances(n: usize, w: VertexSet) -> BTreeSet<usize> {
    let vs: Vec<usize> = w.iter().collect();
    let mut out = BTreeSet::new();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            let d = b.abs_diff(a);
            out.insert(d.min(n - d));
        }
    }
    out
}

/// `dist(G, δ)`.
pub fn dist_set(g: &CycleOrientation, delta: &Rotation) -> Result<BTreeSet<usize>> {
    let w = find_w(g, delta)?.ok_or(Error::WUndefined)?;
    Ok(cyclic_distances(g.n(), w))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WSizeReport {
    pub w_size: usize,
    /// `|W(G_v, δ)|` for each `v`, `None` where undefined.
    pub card_sizes: Vec<Option<usize>>,
    pub max_card_size: usize,
    pub violations: Vec<String>,
}

impl WSizeReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `|W(G, δ)|` can be read off the cards: every `W(G_v, δ)` is
/// defined and the largest has two more elements. Needs `n > 2|W| + 8`.
pub fn verify_w_size_reconstruction(g: &CycleOrientation, delta: &Rotation) -> Result<WSizeReport> {
    let n = g.n();
    let w = find_w(g, delta)?.ok_or(Error::WUndefined)?;
    if n <= 2 * w.len() + 8 {
        return Err(Error::HypothesisUnmet(format!("n = {n} but |W| = {}", w.len())));
    }
    let mut violations = Vec::new();
    let mut card_sizes = Vec::with_capacity(n);
    for v in 0..n {
        let s = find_w(&g.switched(v), delta)?.map(VertexSet::len);
        if s.is_none() {
            violations.push(format!("W undefined for the switching at {v}"));
        }
        card_sizes.push(s);
    }
    let max_card_size = card_sizes.iter().flatten().copied().max().unwrap_or(0);
    if max_card_size != w.len() + 2 {
        violations.push(format!("largest card W has {max_card_size} elements, expected {}", w.len() + 2));
    }
    Ok(WSizeReport { w_size: w.len(), card_sizes, max_card_size, violations })
}

/// All families of oriented cycles (or cycles with digons) sharing a
/// t-deck, for each order and `t` in range.
pub fn search_cycle_families(n_range: RangeInclusive<usize>, t_range: TRange, digons: bool) -> Result<SearchReport> {
    let class = if digons { GraphClass::DigonCycles } else { GraphClass::Cycles };
    run_census_with(class, n_range, t_range, &CensusOptions { heavy: true, ..Default::default() })
}
