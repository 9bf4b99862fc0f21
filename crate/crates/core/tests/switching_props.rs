mod common;

use std::collections::HashMap;

use common::{all_labelled_oriented, arb_connected, arb_digraph, arb_perm};
use proptest::prelude::*;
use switchrecon::stability::{gamma_group, solve_switch_iso};
use switchrecon::switching::{switch_set, switch_vertex};
use switchrecon::{Digraph, UnderlyingGraph, VertexSet};

fn fold(g: &Digraph, vs: &[usize]) -> Digraph {
    vs.iter().fold(*g, |h, &v| switch_vertex(&h, v).unwrap())
}

proptest! {
    #![proptest_config(common::cfg(2500))]

    #[test]
    fn involution_and_commutation(g in arb_digraph(1..=10, true), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let (v, w) = (a.index(g.n()), b.index(g.n()));
        prop_assert_eq!(fold(&g, &[v, v]), g);
        prop_assert_eq!(fold(&g, &[v, w]), fold(&g, &[w, v]));
    }

    #[test]
    fn equivariance(
        (g, p) in arb_digraph(1..=10, true).prop_flat_map(|g| { let n = g.n(); (Just(g), arb_perm(n)) }),
        a in any::<prop::sample::Index>(),
    ) {
        let v = a.index(g.n());
        let lhs = switch_vertex(&g, v).unwrap().apply_perm(&p).unwrap();
        let rhs = switch_vertex(&g.apply_perm(&p).unwrap(), p.apply(v)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn set_form_complement_and_parity(g in arb_digraph(1..=12, true), bits in any::<u32>(), extra in proptest::collection::vec(any::<prop::sample::Index>(), 0..12)) {
        let n = g.n();
        let w = VertexSet(bits & ((1u64 << n) - 1) as u32);
        let members: Vec<usize> = w.iter().collect();
        let mut shuffled = members.clone();
        shuffled.reverse();
        prop_assert_eq!(switch_set(&g, w), fold(&g, &members));
        prop_assert_eq!(switch_set(&g, w), fold(&g, &shuffled));
        prop_assert_eq!(switch_set(&g, w), switch_set(&g, w.complement(n)));
        // a multiset acts through the parity of its multiplicities
        let multiset: Vec<usize> = extra.iter().map(|i| i.index(n)).collect();
        let parity = multiset.iter().fold(0u32, |acc, &v| acc ^ (1 << v));
        prop_assert_eq!(fold(&g, &multiset), switch_set(&g, VertexSet(parity)));
    }

    #[test]
    fn underlying_is_preserved(g in arb_digraph(1..=12, false), bits in any::<u32>()) {
        let h = switch_set(&g, VertexSet(bits));
        prop_assert_eq!(h.underlying(), g.underlying());
        prop_assert_eq!(h.arc_count(), g.arc_count());
    }

    #[test]
    fn switch_sets_up_to_complement(g in arb_connected(2..=8)) {
        let n = g.n();
        let mut seen: HashMap<Digraph, Vec<u32>> = HashMap::new();
        for w in 0..1u32 << n {
            seen.entry(switch_set(&g, VertexSet(w))).or_default().push(w);
        }
        let full = (1u32 << n) - 1;
        prop_assert_eq!(seen.len(), 1 << (n - 1));
        for ws in seen.values() {
            prop_assert_eq!(ws.len(), 2);
            prop_assert_eq!(ws[0] ^ ws[1], full);
        }
    }
}

/// Orientations of graphs with many automorphisms, where `Γ` is rarely trivial.
fn symmetric_underlying() -> Vec<UnderlyingGraph> {
    let mut out = Vec::new();
    for n in 3..=8 {
        out.push(UnderlyingGraph::cycle(n).unwrap());
    }
    out.push(UnderlyingGraph::complete(4).unwrap());
    let cube: Vec<(usize, usize)> =
        (0..8).flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b)))).filter(|(a, b)| a < b).collect();
    out.push(UnderlyingGraph::from_edges(8, &cube).unwrap());
    let k33: Vec<(usize, usize)> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
    out.push(UnderlyingGraph::from_edges(6, &k33).unwrap());
    out
}

fn conjugation_holds(g: &Digraph) {
    for delta in gamma_group(g).unwrap().elements() {
        let w = solve_switch_iso(g, delta).unwrap().expect("element of gamma");
        assert_eq!(switch_set(g, w), g.apply_perm(delta).unwrap());
        for v in 0..g.n() {
            let gv = switch_vertex(g, v).unwrap();
            let moved = VertexSet(w.bits() ^ (1 << v) ^ (1 << delta.apply(v)));
            assert_eq!(switch_set(&gv, moved), gv.apply_perm(delta).unwrap(), "{g:?} v={v}");
        }
    }
}

#[test]
fn conjugated_switching_on_symmetric_orientations() {
    for u in symmetric_underlying() {
        let edges = u.edges();
        let m = edges.len();
        let step = if m > 12 { 97 } else { 1 };
        for bits in (0..1u64 << m).step_by(step) {
            let arcs: Vec<(usize, usize)> =
                edges.iter().enumerate().map(|(i, &(a, b))| if bits >> i & 1 == 1 { (b, a) } else { (a, b) }).collect();
            conjugation_holds(&Digraph::from_arcs(u.n(), &arcs, true).unwrap());
        }
    }
}

#[test]
fn exhaustive_small_orders() {
    for n in 1..=5 {
        for g in all_labelled_oriented(n) {
            for v in 0..n {
                let gv = switch_vertex(&g, v).unwrap();
                assert_eq!(switch_vertex(&gv, v).unwrap(), g);
                assert_eq!(gv.underlying(), g.underlying());
                for w in 0..n {
                    assert_eq!(switch_vertex(&gv, w).unwrap(), fold(&g, &[w, v]));
                }
            }
            let full = VertexSet::full(n);
            assert_eq!(switch_set(&g, full), g);
        }
    }
}
