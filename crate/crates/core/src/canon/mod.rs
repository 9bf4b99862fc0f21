//! Isomorphism: canonical codes, automorphism groups and orientation orbits.
//!
//! Two tiers are provided. [`canonical_code`] works for any digraph and is
//! used wherever graphs with different underlying graphs meet. Inside a single
//! labelled underlying graph, [`OrientationAction`] identifies an orientation
//! with the least member of its orbit under the underlying automorphism
//! group, which is much cheaper and is what the censuses use.

mod aut;
mod orbit;
mod search;

use std::fmt;

pub use aut::{aut_group, aut_group_undirected, AutGroup, MAX_GROUP_ELEMENTS};
pub use orbit::{orientation_orbit_min, OrientationAction};

use crate::graph::{format_digraph6, Digraph, Permutation};
use search::CanonSearch;

/// A relabelling-invariant fingerprint of a digraph's isomorphism class.
///
/// Holds the order and the rows of the lexicographically least relabelled
/// adjacency matrix. Codes of different orders never compare equal; the order
/// is the primary sort key.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    n: u8,
    rows: Vec<u32>,
}

impl CanonicalCode {
    /// The code of the graph with no vertices.
    pub fn empty() -> Self {
        CanonicalCode { n: 0, rows: Vec::new() }
    }

    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Rows of the canonical adjacency matrix; column `j` of row `i` is bit
    /// `n − 1 − j`.
    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// The canonical representative, or `None` for the empty code.
    pub fn to_digraph(&self) -> Option<Digraph> {
        if self.n == 0 {
            return None;
        }
        let n = self.order();
        let masks: Vec<u32> = self.rows.iter().map(|r| r.reverse_bits() >> (32 - n)).collect();
        Some(Digraph::from_out_masks(&masks).expect("valid code"))
    }

    /// digraph6 of the canonical representative (`"&?"` is never produced;
    /// the empty code renders as `"-"`).
    pub fn to_digraph6(&self) -> String {
        self.to_digraph().map_or_else(|| "-".to_string(), |g| format_digraph6(&g))
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code({})", self.to_digraph6())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_digraph6())
    }
}

/// The canonical code together with a labelling that realizes it.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub code: CanonicalCode,
    /// `labelling.apply(v)` is the position of `v` in the canonical graph.
    pub labelling: Permutation,
}

pub fn canonical_form(g: &Digraph) -> CanonicalForm {
    let n = g.n();
    let res = CanonSearch::new(g).run();
    let mut pos = vec![0usize; n];
    for (i, &v) in res.order.iter().enumerate().take(n) {
        pos[v as usize] = i;
    }
    CanonicalForm {
        code: CanonicalCode { n: n as u8, rows: res.rows },
        labelling: Permutation::from_images(&pos).expect("leaf order is a bijection"),
    }
}

pub fn canonical_code(g: &Digraph) -> CanonicalCode {
    CanonicalCode { n: g.n() as u8, rows: CanonSearch::new(g).run().rows }
}

/// The canonically relabelled graph.
pub fn canonical_graph(g: &Digraph) -> Digraph {
    let f = canonical_form(g);
    g.permuted(&f.labelling)
}

pub fn is_isomorphic(g: &Digraph, h: &Digraph) -> bool {
    g.n() == h.n()
        && g.arc_count() == h.arc_count()
        && canonical_code(g) == canonical_code(h)
}

/// Some automorphisms found as a by-product of canonical labelling; they
/// generate a subgroup of `Aut(G)`, usually all of it.
pub fn automorphism_generators(g: &Digraph) -> Vec<Permutation> {
    let n = g.n();
    CanonSearch::new(g)
        .run()
        .generators
        .iter()
        .map(|gen| Permutation::from_images(&gen[..n].iter().map(|&x| x as usize).collect::<Vec<_>>()).unwrap())
        .collect()
}
