//! Undirected graphs up to isomorphism by canonical edge augmentation.
//!
//! Each graph is reached from exactly one parent: a child `P + e` is kept
//! only when `e` lies in the automorphism orbit of the child's canonical
//! deletion edge, the edge whose canonical labels are largest.

use crate::canon::{aut_group_undirected, canonical_form, AutGroup};
use crate::error::{Error, Result};
use crate::graph::UnderlyingGraph;

/// Largest order handled by [`gen_underlying_graphs`].
pub const MAX_UNDERLYING_ORDER: usize = 8;

fn pair(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn with_edge(g: &UnderlyingGraph, e: (usize, usize)) -> UnderlyingGraph {
    let mut edges = g.edges();
    edges.push(e);
    UnderlyingGraph::from_edges(g.n(), &edges).expect("valid edge")
}

fn canonical_deletion(g: &UnderlyingGraph) -> (usize, usize) {
    let lab = canonical_form(&g.as_digraph()).labelling;
    g.edges()
        .into_iter()
        .max_by_key(|&(a, b)| {
            let (x, y) = (lab.apply(a), lab.apply(b));
            (x.max(y), x.min(y))
        })
        .expect("at least one edge")
}

fn edge_orbit(group: &AutGroup, e: (usize, usize)) -> Vec<(usize, usize)> {
    let mut orbit: Vec<_> = group.elements().iter().map(|p| pair(p.apply(e.0), p.apply(e.1))).collect();
    orbit.sort_unstable();
    orbit.dedup();
    orbit
}

fn augment(g: &UnderlyingGraph, group: &AutGroup, out: &mut Vec<UnderlyingGraph>) -> Result<()> {
    out.push(*g);
    let n = g.n();
    let mut done: Vec<(usize, usize)> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) || done.binary_search(&(a, b)).is_ok() {
                continue;
            }
            done.extend(edge_orbit(group, (a, b)));
            done.sort_unstable();
            let child = with_edge(g, (a, b));
            let child_group = aut_group_undirected(&child)?;
            let d = canonical_deletion(&child);
            if d == (a, b) || edge_orbit(&child_group, d).binary_search(&(a, b)).is_ok() {
                augment(&child, &child_group, out)?;
            }
        }
    }
    Ok(())
}

/// One graph per isomorphism class on `n ≤ 8` vertices, by edge count and
/// then generation order.
pub fn gen_underlying_graphs(n: usize) -> Result<Vec<UnderlyingGraph>> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    if n > MAX_UNDERLYING_ORDER {
        return Err(Error::TooLarge(format!("undirected graphs are generated up to order {MAX_UNDERLYING_ORDER}")));
    }
    let empty = UnderlyingGraph::from_edges(n, &[])?;
    let group = aut_group_undirected(&empty)?;
    let mut out = Vec::new();
    augment(&empty, &group, &mut out)?;
    out.sort_by_key(|g| g.edge_count());
    Ok(out)
}
