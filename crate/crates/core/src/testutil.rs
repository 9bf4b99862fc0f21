//! Test helpers and permutation-complete oracles.

use rand::Rng;

use crate::graph::{Digraph, Permutation};

pub fn random_digraph(rng: &mut impl Rng, n: usize, oriented: bool) -> Digraph {
    let mut arcs = Vec::new();
    for v in 0..n {
        for w in v + 1..n {
            match rng.gen_range(0..if oriented { 3 } else { 4 }) {
                0 => {}
                1 => arcs.push((v, w)),
                2 => arcs.push((w, v)),
                _ => {
                    arcs.push((v, w));
                    arcs.push((w, v));
                }
            }
        }
    }
    Digraph::from_arcs(n, &arcs, oriented).unwrap()
}

/// A random weakly connected oriented graph: a random spanning tree plus
/// random extra arcs.
pub fn random_connected_oriented(rng: &mut impl Rng, n: usize, extra: f64) -> Digraph {
    let mut arcs = Vec::new();
    let mut present = vec![vec![false; n]; n];
    for v in 1..n {
        let p = rng.gen_range(0..v);
        present[p][v] = true;
        present[v][p] = true;
        arcs.push(if rng.gen_bool(0.5) { (p, v) } else { (v, p) });
    }
    for v in 0..n {
        for w in v + 1..n {
            if !present[v][w] && rng.gen_bool(extra) {
                arcs.push(if rng.gen_bool(0.5) { (v, w) } else { (w, v) });
            }
        }
    }
    Digraph::from_arcs(n, &arcs, true).unwrap()
}

pub fn random_perm(rng: &mut impl Rng, n: usize) -> Permutation {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    Permutation::from_images(&p).unwrap()
}

/// Every labelled oriented graph on `n` vertices (3^(n choose 2) of them).
pub fn all_labelled_oriented(n: usize) -> Vec<Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (v + 1..n).map(move |w| (v, w))).collect();
    let total = 3usize.pow(pairs.len() as u32);
    (0..total)
        .map(|mut code| {
            let mut arcs = Vec::new();
            for &(v, w) in &pairs {
                match code % 3 {
                    1 => arcs.push((v, w)),
                    2 => arcs.push((w, v)),
                    _ => {}
                }
                code /= 3;
            }
            Digraph::from_arcs(n, &arcs, true).unwrap()
        })
        .collect()
}

pub mod brute {
    use super::*;

    pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
        fn rec(cur: &mut Vec<usize>, used: &mut [bool], n: usize, out: &mut Vec<Vec<usize>>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(cur, used, n, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], n, &mut out);
        out
    }

    pub fn isomorphic(g: &Digraph, h: &Digraph) -> bool {
        g.n() == h.n()
            && all_perms(g.n())
                .iter()
                .any(|p| g.apply_perm(&Permutation::from_images(p).unwrap()).unwrap() == *h)
    }

    pub fn aut_order(g: &Digraph) -> usize {
        all_perms(g.n())
            .iter()
            .filter(|p| g.apply_perm(&Permutation::from_images(p).unwrap()).unwrap() == *g)
            .count()
    }

    /// Isomorphism-class representatives by pairwise brute-force comparison.
    pub fn dedupe(graphs: &[Digraph]) -> Vec<Digraph> {
        let mut reps: Vec<Digraph> = Vec::new();
        'outer: for g in graphs {
            for r in &reps {
                if r.arc_count() == g.arc_count() && isomorphic(r, g) {
                    continue 'outer;
                }
            }
            reps.push(*g);
        }
        reps
    }
}
