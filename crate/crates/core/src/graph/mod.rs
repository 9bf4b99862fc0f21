//! Bit-set digraphs on at most 32 vertices.
//!
//! A [`Digraph`] stores one 32-bit out-neighbourhood mask per vertex. Every
//! value is immutable once built; operations return new graphs. Vertex labels
//! are always `0..n`.

mod digraph6;
mod perm;

use std::fmt;
use std::hash::{Hash, Hasher};

pub use digraph6::{format_digraph6, parse_digraph6, parse_digraph6_stream};
pub use perm::Permutation;

use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_N: usize = 32;

#[inline]
pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidOrder(n))
    }
}

/// A subset of the vertex set, as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        VertexSet(full_mask(n))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 32 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `V ∖ self` inside a vertex set of order `n`.
    pub fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & full_mask(n))
    }

    pub fn symmetric_difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 ^ other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(v)
            }
        })
    }

    pub fn image(self, perm: &Permutation) -> Self {
        VertexSet(perm.apply_mask(self.0))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A labelled digraph without loops.
///
/// When the `oriented` flag is set the graph also has no digons. Equality,
/// hashing and ordering look at the arcs only.
#[derive(Clone, Copy)]
pub struct Digraph {
    n: u8,
    oriented: bool,
    out: [u32; MAX_N],
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.out[..self.n()] == other.out[..other.n()]
    }
}

impl Eq for Digraph {}

impl Hash for Digraph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.out[..self.n()].hash(state);
    }
}

impl PartialOrd for Digraph {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Digraph {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, &self.out[..self.n()]).cmp(&(other.n, &other.out[..other.n()]))
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph({}, {:?})", self.n, self.arcs().collect::<Vec<_>>())
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_digraph6(self))
    }
}

impl Digraph {
    /// Builds a digraph from an arc list.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)], oriented: bool) -> Result<Self> {
        check_order(n)?;
        let mut g = Digraph { n: n as u8, oriented, out: [0; MAX_N] };
        for &(v, w) in arcs {
            for x in [v, w] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if v == w {
                return Err(Error::LoopArc(v));
            }
            g.out[v] |= 1 << w;
        }
        if oriented {
            if let Some((v, w)) = g.first_digon() {
                return Err(Error::DigonViolation(v, w));
            }
        }
        Ok(g)
    }

    /// Like [`Digraph::from_arcs`] but with 1-based labels, as drawn in figures.
    pub fn from_one_based_arcs(n: usize, arcs: &[(usize, usize)], oriented: bool) -> Result<Self> {
        let mut shifted = Vec::with_capacity(arcs.len());
        for &(v, w) in arcs {
            if v == 0 || w == 0 {
                return Err(Error::VertexOutOfRange { vertex: 0, n });
            }
            shifted.push((v - 1, w - 1));
        }
        Self::from_arcs(n, &shifted, oriented)
    }

    /// The graph on `n` vertices without arcs.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Digraph { n: n as u8, oriented: true, out: [0; MAX_N] })
    }

    /// Builds a graph from out-neighbourhood masks. Loops and out-of-range bits
    /// are rejected; the oriented flag is set iff there is no digon.
    pub fn from_out_masks(masks: &[u32]) -> Result<Self> {
        let n = masks.len();
        check_order(n)?;
        let mut g = Digraph { n: n as u8, oriented: true, out: [0; MAX_N] };
        for (v, &m) in masks.iter().enumerate() {
            if m >> v & 1 == 1 {
                return Err(Error::LoopArc(v));
            }
            if m & !full_mask(n) != 0 {
                let w = (m & !full_mask(n)).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
            g.out[v] = m;
        }
        g.oriented = g.first_digon().is_none();
        Ok(g)
    }

    /// Internal constructor; callers guarantee the masks are valid.
    #[inline]
    pub(crate) fn from_raw(n: usize, oriented: bool, out: [u32; MAX_N]) -> Self {
        debug_assert!((1..=MAX_N).contains(&n));
        Digraph { n: n as u8, oriented, out }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Whether the graph was built as an oriented graph (no digons allowed).
    pub fn is_oriented(&self) -> bool {
        self.oriented
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn has_arc(&self, v: usize, w: usize) -> bool {
        self.out[v] >> w & 1 == 1
    }

    #[inline]
    pub fn out_mask(&self, v: usize) -> u32 {
        self.out[v]
    }

    #[inline]
    pub(crate) fn out_masks(&self) -> &[u32; MAX_N] {
        &self.out
    }

    pub fn in_mask(&self, v: usize) -> u32 {
        let mut m = 0;
        for w in 0..self.n() {
            m |= (self.out[w] >> v & 1) << w;
        }
        m
    }

    pub fn in_masks(&self) -> [u32; MAX_N] {
        let mut inn = [0u32; MAX_N];
        for v in 0..self.n() {
            let mut m = self.out[v];
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                inn[w] |= 1 << v;
            }
        }
        inn
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_mask(v).count_ones() as usize
    }

    pub fn arc_count(&self) -> usize {
        self.out[..self.n()].iter().map(|m| m.count_ones() as usize).sum()
    }

    /// All arcs in row-major order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |v| VertexSet(self.out[v]).iter().map(move |w| (v, w)))
    }

    fn first_digon(&self) -> Option<(usize, usize)> {
        self.arcs().find(|&(v, w)| v < w && self.has_arc(w, v))
    }

    pub fn has_digon(&self) -> bool {
        self.first_digon().is_some()
    }

    /// The graph obtained by forgetting arc directions.
    pub fn underlying(&self) -> UnderlyingGraph {
        let inn = self.in_masks();
        let mut adj = [0u32; MAX_N];
        for v in 0..self.n() {
            adj[v] = self.out[v] | inn[v];
        }
        UnderlyingGraph { n: self.n, adj }
    }

    /// `G^γ`: `γ(v) → γ(w)` is an arc iff `v → w` is.
    pub fn apply_perm(&self, gamma: &Permutation) -> Result<Digraph> {
        if gamma.len() != self.n() {
            return Err(Error::LengthMismatch { perm: gamma.len(), n: self.n() });
        }
        Ok(self.permuted(gamma))
    }

    pub(crate) fn permuted(&self, gamma: &Permutation) -> Digraph {
        let mut out = [0u32; MAX_N];
        for v in 0..self.n() {
            out[gamma.apply(v)] = gamma.apply_mask(self.out[v]);
        }
        Digraph { n: self.n, oriented: self.oriented, out }
    }

    /// The subgraph induced by `set`, relabelled to `0..|set|` in increasing order.
    pub fn induced(&self, set: VertexSet) -> Result<Digraph> {
        let verts: Vec<usize> = set.iter().filter(|&v| v < self.n()).collect();
        check_order(verts.len())?;
        let mut out = [0u32; MAX_N];
        for (i, &v) in verts.iter().enumerate() {
            for (j, &w) in verts.iter().enumerate() {
                if self.has_arc(v, w) {
                    out[i] |= 1 << j;
                }
            }
        }
        Ok(Digraph { n: verts.len() as u8, oriented: self.oriented, out })
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Digraph) -> Result<Digraph> {
        let n = self.n() + other.n();
        check_order(n)?;
        let mut out = self.out;
        for v in 0..other.n() {
            out[self.n() + v] = other.out[v] << self.n();
        }
        Ok(Digraph { n: n as u8, oriented: self.oriented && other.oriented, out })
    }

    /// Disjoint union of several graphs in order.
    pub fn union_of(parts: &[Digraph]) -> Result<Digraph> {
        let (first, rest) = parts.split_first().ok_or(Error::InvalidOrder(0))?;
        rest.iter().try_fold(*first, |acc, p| acc.disjoint_union(p))
    }

    /// Weakly connected components, ordered by least vertex.
    pub fn components(&self) -> ComponentDecomposition {
        let blocks = self.underlying().component_blocks();
        let parts = blocks.iter().map(|&b| self.induced(b).expect("non-empty block")).collect();
        ComponentDecomposition { blocks, parts }
    }

    pub fn is_weakly_connected(&self) -> bool {
        self.underlying().is_connected()
    }
}

/// An undirected simple graph on at most 32 vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnderlyingGraph {
    n: u8,
    adj: [u32; MAX_N],
}

impl fmt::Debug for UnderlyingGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", self.n, self.edges())
    }
}

impl UnderlyingGraph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_order(n)?;
        let mut adj = [0u32; MAX_N];
        for &(v, w) in edges {
            for x in [v, w] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if v == w {
                return Err(Error::LoopArc(v));
            }
            adj[v] |= 1 << w;
            adj[w] |= 1 << v;
        }
        Ok(UnderlyingGraph { n: n as u8, adj })
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_order(n)?;
        let mut adj = [0u32; MAX_N];
        for (v, a) in adj.iter_mut().enumerate().take(n) {
            *a = full_mask(n) & !(1 << v);
        }
        Ok(UnderlyingGraph { n: n as u8, adj })
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooSmall(n));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn adj_mask(&self, v: usize) -> u32 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, v: usize, w: usize) -> bool {
        self.adj[v] >> w & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(v, w)` with `v < w`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for v in 0..self.n() {
            for w in VertexSet(self.adj[v] & !full_mask(v + 1)).iter() {
                e.push((v, w));
            }
        }
        e
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n() * (self.n() - 1) / 2
    }

    /// The symmetric digraph with a digon for every edge.
    pub fn as_digraph(&self) -> Digraph {
        Digraph { n: self.n, oriented: false, out: self.adj }
    }

    pub fn apply_perm(&self, gamma: &Permutation) -> Result<UnderlyingGraph> {
        if gamma.len() != self.n() {
            return Err(Error::LengthMismatch { perm: gamma.len(), n: self.n() });
        }
        let mut adj = [0u32; MAX_N];
        for v in 0..self.n() {
            adj[gamma.apply(v)] = gamma.apply_mask(self.adj[v]);
        }
        Ok(UnderlyingGraph { n: self.n, adj })
    }

    pub fn is_automorphism(&self, gamma: &Permutation) -> bool {
        gamma.len() == self.n() && (0..self.n()).all(|v| self.adj[gamma.apply(v)] == gamma.apply_mask(self.adj[v]))
    }

    pub fn induced(&self, set: VertexSet) -> Result<UnderlyingGraph> {
        let d = self.as_digraph().induced(set)?;
        Ok(UnderlyingGraph { n: d.n, adj: d.out })
    }

    /// Vertex sets of the connected components, ordered by least vertex.
    pub fn component_blocks(&self) -> Vec<VertexSet> {
        let mut seen = 0u32;
        let mut blocks = Vec::new();
        for v in 0..self.n() {
            if seen >> v & 1 == 1 {
                continue;
            }
            let mut block = 1u32 << v;
            let mut frontier = block;
            while frontier != 0 {
                let w = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = self.adj[w] & !block;
                block |= new;
                frontier |= new;
            }
            seen |= block;
            blocks.push(VertexSet(block));
        }
        blocks
    }

    pub fn is_connected(&self) -> bool {
        self.component_blocks().len() == 1
    }
}

/// Weakly connected components of a digraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecomposition {
    /// Vertex sets, ordered by least vertex.
    pub blocks: Vec<VertexSet>,
    /// `parts[i]` is the subgraph induced by `blocks[i]`, relabelled.
    pub parts: Vec<Digraph>,
}

impl ComponentDecomposition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// `n_C(G)`: the number of components of `g` isomorphic to `c`.
pub fn count_components_iso(g: &Digraph, c: &Digraph) -> Result<usize> {
    if !c.is_weakly_connected() {
        return Err(Error::NotConnected);
    }
    let target = crate::canon::canonical_code(c);
    Ok(g.components()
        .parts
        .iter()
        .filter(|p| p.n() == c.n() && crate::canon::canonical_code(p) == target)
        .count())
}
