//! Generators emitting one representative per isomorphism class.

mod maxdeg2;
mod oriented;
mod tournaments;
mod underlying;
mod words;

pub use maxdeg2::{
    for_each_of_shape, gen_oriented_maxdeg2, gen_underlying_maxdeg2, maxdeg2_digraph, maxdeg2_key, maxdeg2_shapes,
    ComponentKind, Shape,
};
pub(crate) use maxdeg2::{comp_cards, comp_parts};
pub use oriented::{gen_all_oriented, orientation_classes};
pub use tournaments::{gen_tournaments, MAX_TOURNAMENT_ORDER};
pub use underlying::{gen_underlying_graphs, MAX_UNDERLYING_ORDER};
pub use words::{Bracelets, CycleSpace, EdgeDir, PathSpace};

use crate::error::Result;
use crate::graph::Digraph;

/// Oriented paths on `n` vertices, one per class.
pub fn gen_oriented_paths(n: usize) -> Result<impl Iterator<Item = Digraph>> {
    let space = PathSpace::new(n)?;
    Ok((0..1u64 << (n - 1)).filter(move |&w| w <= space.reverse(w)).map(move |w| space.to_digraph(w)))
}

/// Orientations of the `n`-cycle, one per class; with `digons`, edges may
/// also carry both arcs.
pub fn gen_oriented_cycles(n: usize, digons: bool) -> Result<impl Iterator<Item = Digraph>> {
    let space = CycleSpace::new(n, digons)?;
    Ok(space.bracelets().map(move |w| space.to_digraph(w)))
}
