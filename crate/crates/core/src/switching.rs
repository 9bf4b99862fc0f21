//! Switching: reversing every arc incident with a vertex.
//!
//! Switching at a set `W` reverses exactly the arcs with one endpoint in `W`.
//! Digons are fixed by every switching. Multisets of vertices are not
//! supported; reduce multiplicities mod 2 first.

use crate::error::{Error, Result};
use crate::graph::{full_mask, Digraph, VertexSet, MAX_N};

/// `G_v`.
pub fn switch_vertex(g: &Digraph, v: usize) -> Result<Digraph> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(switch_set(g, VertexSet::singleton(v)))
}

/// `G_W`.
pub fn switch_set(g: &Digraph, w: VertexSet) -> Digraph {
    let n = g.n();
    let all = full_mask(n);
    let w = w.bits() & all;
    if w == 0 || w == all {
        return *g;
    }
    let inn = g.in_masks();
    let out = g.out_masks();
    let mut new = [0u32; MAX_N];
    for v in 0..n {
        let same = if w >> v & 1 == 1 { w } else { all & !w };
        // Digon partners sit in both masks, so they survive on the far side.
        new[v] = (out[v] & same) | (inn[v] & !same & all);
    }
    Digraph::from_raw(n, g.is_oriented(), new)
}

/// All `n` single-vertex switchings, in vertex order.
pub fn switchings(g: &Digraph) -> impl Iterator<Item = Digraph> + '_ {
    (0..g.n()).map(move |v| switch_set(g, VertexSet::singleton(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    fn tri() -> Digraph {
        Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)], true).unwrap()
    }

    #[test]
    fn single_vertex_examples() {
        let s = switch_vertex(&tri(), 0).unwrap();
        assert_eq!(s, Digraph::from_arcs(3, &[(1, 0), (1, 2), (0, 2)], true).unwrap());

        let arc = Digraph::from_arcs(2, &[(0, 1)], true).unwrap();
        assert_eq!(switch_vertex(&arc, 0).unwrap(), Digraph::from_arcs(2, &[(1, 0)], true).unwrap());

        let c4 = Digraph::from_arcs(4, &[(0, 1), (1, 3), (3, 2), (0, 2)], true).unwrap();
        let s = switch_vertex(&c4, 0).unwrap();
        assert_ne!(s, c4);
        assert!(is_isomorphic(&s, &c4));

        assert_eq!(switch_vertex(&arc, 2), Err(Error::VertexOutOfRange { vertex: 2, n: 2 }));
    }

    #[test]
    fn set_examples() {
        let t = tri();
        assert_eq!(switch_set(&t, VertexSet::EMPTY), t);
        assert_eq!(switch_set(&t, VertexSet::full(3)), t);
        let w: VertexSet = [0, 1].into_iter().collect();
        assert_eq!(switch_set(&t, w), Digraph::from_arcs(3, &[(0, 1), (2, 1), (0, 2)], true).unwrap());
    }

    #[test]
    fn digons_are_fixed() {
        let g = Digraph::from_arcs(3, &[(0, 1), (1, 0), (1, 2)], false).unwrap();
        let s = switch_vertex(&g, 1).unwrap();
        assert_eq!(s, Digraph::from_arcs(3, &[(0, 1), (1, 0), (2, 1)], false).unwrap());
        assert_eq!(switch_vertex(&s, 1).unwrap(), g);
    }
}
