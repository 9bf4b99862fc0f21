//! Families of disconnected digraphs: components, stable parts, and the
//! two ways such a family can arise.

use std::collections::BTreeSet;

use crate::canon::{canonical_code, CanonicalCode};
use crate::decks::{deck, matching_t, t_deck, Deck};
use crate::error::{Error, Result};
use crate::graph::{Digraph, VertexSet};
use crate::stability::{is_switching_stable, is_switching_stable_set};
use crate::switching::switchings;

use super::family::Family;

/// Some single-vertex switching of `a` is isomorphic to `b`.
pub fn switching_adjacent(a: &Digraph, b: &Digraph) -> Result<bool> {
    if !a.is_weakly_connected() || !b.is_weakly_connected() {
        return Err(Error::NotConnected);
    }
    if a.n() != b.n() {
        return Ok(false);
    }
    let target = canonical_code(b);
    Ok(switchings(a).any(|s| canonical_code(&s) == target))
}

/// A list of graphs to search for deck-mates. Only universes known to hold
/// every graph that could share a deck with the query may answer component
/// questions.
#[derive(Clone, Copy, Debug)]
pub struct Universe<'a> {
    graphs: &'a [Digraph],
    closed: bool,
}

impl<'a> Universe<'a> {
    /// The caller asserts that `graphs` contains, up to isomorphism, every
    /// graph with the same order and underlying graph as any query.
    pub fn closed(graphs: &'a [Digraph]) -> Self {
        Universe { graphs, closed: true }
    }

    pub fn ad_hoc(graphs: &'a [Digraph]) -> Self {
        Universe { graphs, closed: false }
    }

    fn deck_mates(&self, g: &Digraph) -> Result<Vec<&'a Digraph>> {
        if !self.closed {
            return Err(Error::UniverseNotClosed);
        }
        let d = deck(g);
        Ok(self.graphs.iter().filter(|h| h.n() == g.n() && deck(h) == d).collect())
    }
}

fn component_codes(g: &Digraph) -> BTreeSet<CanonicalCode> {
    g.components().parts.iter().map(canonical_code).collect()
}

/// Components occurring in some graph with the deck of `g`.
pub fn possible_components(g: &Digraph, universe: &Universe<'_>) -> Result<BTreeSet<CanonicalCode>> {
    let mut out = component_codes(g);
    for h in universe.deck_mates(g)? {
        out.extend(component_codes(h));
    }
    Ok(out)
}

/// Components occurring in every graph with the deck of `g`.
pub fn definite_components(g: &Digraph, universe: &Universe<'_>) -> Result<BTreeSet<CanonicalCode>> {
    let mut out = component_codes(g);
    for h in universe.deck_mates(g)? {
        let c = component_codes(h);
        out.retain(|x| c.contains(x));
    }
    Ok(out)
}

/// A graph split into its switching-stable components and the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stripped {
    /// The components that are not switching-stable; `None` when there are
    /// none.
    pub residue: Option<Digraph>,
    pub stable_part: Option<Digraph>,
    /// Vertices in the stable part.
    pub t: usize,
}

impl Stripped {
    /// The t-deck of the residue, with `t` the size of the stable part. An
    /// absent residue has the deck of `t` empty cards.
    pub fn residue_t_deck(&self) -> Result<Deck> {
        match &self.residue {
            Some(r) => t_deck(r, self.t as i64),
            None => Ok(Deck::from_codes(vec![CanonicalCode::empty(); self.t])),
        }
    }
}

pub fn strip_stable_components(g: &Digraph) -> Stripped {
    let comps = g.components();
    let mut stable = VertexSet::EMPTY;
    for (block, part) in comps.blocks.iter().zip(&comps.parts) {
        if is_switching_stable(part) {
            stable = VertexSet(stable.bits() | block.bits());
        }
    }
    let rest = stable.complement(g.n());
    let induced = |s: VertexSet| (!s.is_empty()).then(|| g.induced(s).expect("non-empty vertex set"));
    Stripped { residue: induced(rest), stable_part: induced(stable), t: stable.len() }
}

/// Which way a family of disconnected graphs can be explained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DichotomyReport {
    /// The components of all members, when every member has exactly two
    /// components, all of one order, and they form a switching-stable set of
    /// at most four classes.
    pub stable_set: Option<Vec<CanonicalCode>>,
    /// The single unstable component of each member and the `t` at which
    /// they share a t-deck, when every member has exactly one.
    pub unstable_components: Option<(Vec<CanonicalCode>, i64)>,
}

impl DichotomyReport {
    pub fn holds(&self) -> bool {
        self.stable_set.is_some() || self.unstable_components.is_some()
    }
}

/// Checks a deck family (`t = 0`) of disconnected graphs. The family must be
/// maximal, as census families are, so that its components are exactly the
/// possible components.
pub fn verify_disconnected_dichotomy(family: &Family) -> Result<DichotomyReport> {
    if family.t() != 0 {
        return Err(Error::HypothesisUnmet(format!("family is grouped by {}-deck, not deck", family.t())));
    }
    let graphs = family.graphs();
    if graphs.iter().any(Digraph::is_weakly_connected) {
        return Err(Error::NotDisconnected);
    }

    let mut comps: BTreeSet<CanonicalCode> = BTreeSet::new();
    for g in &graphs {
        comps.extend(component_codes(g));
    }
    let comp_graphs: Vec<Digraph> = comps.iter().map(|c| c.to_digraph().expect("non-empty")).collect();
    let two_equal_parts = graphs.iter().all(|g| g.components().len() == 2)
        && comps.iter().all(|c| c.order() == comps.first().map_or(0, CanonicalCode::order));
    let stable_set = (two_equal_parts && comps.len() <= 4 && is_switching_stable_set(&comp_graphs)?)
        .then(|| comps.iter().cloned().collect());

    let unstable = graphs
        .iter()
        .map(|g| {
            let s = strip_stable_components(g);
            s.residue.filter(Digraph::is_weakly_connected)
        })
        .collect::<Option<Vec<Digraph>>>();
    let unstable_components = match unstable {
        Some(rs) => {
            let ts = rs[1..].iter().map(|r| matching_t(&rs[0], r).ok().flatten()).collect::<Option<BTreeSet<i64>>>();
            match ts {
                Some(ts) if ts.len() == 1 && ts.first().is_some_and(|&t| t >= 0) => {
                    Some((rs.iter().map(canonical_code).collect(), *ts.first().unwrap()))
                }
                _ => None,
            }
        }
        None => None,
    };

    let report = DichotomyReport { stable_set, unstable_components };
    if !report.holds() {
        let names: Vec<String> = family.members().iter().map(|c| c.to_digraph6()).collect();
        return Err(Error::DichotomyViolated(names.join(" ")));
    }
    Ok(report)
}
