//! Switching reconstruction of digraphs.
//!
//! Switching a digraph at a vertex reverses every arc at that vertex. The
//! deck of a digraph is the multiset of isomorphism classes of its
//! single-vertex switchings; this crate computes decks, finds digraphs that
//! share them, and enumerates the graph classes needed to search for such
//! families exhaustively.

pub mod canon;
pub mod cycles;
pub mod decks;
pub mod enumerate;
pub mod error;
pub mod figures;
pub mod graph;
pub mod search;
pub mod stability;
pub mod switching;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
pub use graph::{
    format_digraph6, parse_digraph6, ComponentDecomposition, Digraph, Permutation, UnderlyingGraph, VertexSet,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/overview.md")]
    mod overview {}
    #[doc = include_str!("../../../book/src/digraphs.md")]
    mod digraphs {}
    #[doc = include_str!("../../../book/src/switching.md")]
    mod switching {}
    #[doc = include_str!("../../../book/src/decks.md")]
    mod decks {}
    #[doc = include_str!("../../../book/src/canon.md")]
    mod canon {}
    #[doc = include_str!("../../../book/src/enumerate.md")]
    mod enumerate {}
    #[doc = include_str!("../../../book/src/stability.md")]
    mod stability {}
    #[doc = include_str!("../../../book/src/cycles.md")]
    mod cycles {}
    #[doc = include_str!("../../../book/src/census.md")]
    mod census {}
    #[doc = include_str!("../../../book/src/disconnected.md")]
    mod disconnected {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
