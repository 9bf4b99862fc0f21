#![allow(dead_code)]

use proptest::prelude::*;
use switchrecon::{Digraph, Permutation};

/// `codes[k]` picks the state of the k-th vertex pair: none, forward,
/// backward, or (when allowed) a digon.
pub fn from_pair_codes(n: usize, codes: &[u8]) -> Digraph {
    let mut arcs = Vec::new();
    let mut oriented = true;
    let mut k = 0;
    for v in 0..n {
        for w in v + 1..n {
            match codes[k] {
                0 => {}
                1 => arcs.push((v, w)),
                2 => arcs.push((w, v)),
                _ => {
                    arcs.extend([(v, w), (w, v)]);
                    oriented = false;
                }
            }
            k += 1;
        }
    }
    Digraph::from_arcs(n, &arcs, oriented).unwrap()
}

pub fn arb_digraph(n: std::ops::RangeInclusive<usize>, digons: bool) -> impl Strategy<Value = Digraph> {
    let states = if digons { 4u8 } else { 3 };
    n.prop_flat_map(move |n| {
        proptest::collection::vec(0..states, n * (n - 1) / 2).prop_map(move |c| from_pair_codes(n, &c))
    })
}

/// A weakly connected oriented graph: a random tree plus random extra arcs.
pub fn arb_connected(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Digraph> {
    n.prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        (
            proptest::collection::vec((any::<prop::sample::Index>(), any::<bool>()), n - 1),
            proptest::collection::vec(0..3u8, m),
        )
            .prop_map(move |(tree, extra)| {
                let mut codes = extra;
                let idx = |v: usize, w: usize| {
                    let (a, b) = (v.min(w), v.max(w));
                    a * (2 * n - a - 1) / 2 + (b - a - 1)
                };
                for (i, (p, fwd)) in tree.iter().enumerate() {
                    let v = i + 1;
                    let parent = p.index(v);
                    let k = idx(parent, v);
                    codes[k] = if *fwd == (parent < v) { 1 } else { 2 };
                }
                from_pair_codes(n, &codes)
            })
    })
}

pub fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|p| Permutation::from_images(&p).unwrap())
}

pub fn all_labelled_oriented(n: usize) -> impl Iterator<Item = Digraph> {
    let m = n * (n - 1) / 2;
    (0..3usize.pow(m as u32)).map(move |mut c| {
        let codes: Vec<u8> = (0..m)
            .map(|_| {
                let d = (c % 3) as u8;
                c /= 3;
                d
            })
            .collect();
        from_pair_codes(n, &codes)
    })
}

pub fn all_perms(n: usize) -> Vec<Permutation> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if cur.len() == used.len() {
            out.push(Permutation::from_images(cur).unwrap());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn brute_isomorphic(g: &Digraph, h: &Digraph) -> bool {
    g.n() == h.n() && all_perms(g.n()).iter().any(|p| g.apply_perm(p).unwrap() == *h)
}

pub fn cfg(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

/// Two digraphs of the same order.
pub fn arb_pair(n: std::ops::RangeInclusive<usize>, digons: bool) -> impl Strategy<Value = (Digraph, Digraph)> {
    n.prop_flat_map(move |n| (arb_digraph(n..=n, digons), arb_digraph(n..=n, digons)))
}
