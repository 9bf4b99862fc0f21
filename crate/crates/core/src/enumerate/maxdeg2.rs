//! Graphs of maximum degree at most 2: disjoint unions of paths and cycles.
//!
//! An oriented component is identified by a `u64` key packing its kind,
//! length and canonical orientation string; a graph is the sorted multiset of
//! its component keys. Two unions are isomorphic exactly when their key
//! multisets agree, so no general isomorphism test is needed.

use std::collections::HashMap;

use super::words::{CycleSpace, PathSpace};
use crate::error::{Error, Result};
use crate::graph::{Digraph, UnderlyingGraph, MAX_N};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentKind {
    Path,
    Cycle,
}

/// The underlying class of a max-degree-2 graph: component kinds and
/// lengths, longest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape(pub Vec<(ComponentKind, usize)>);

impl Shape {
    pub fn order(&self) -> usize {
        self.0.iter().map(|&(_, l)| l).sum()
    }

    pub fn underlying(&self) -> UnderlyingGraph {
        let mut edges = Vec::new();
        let mut base = 0;
        for &(kind, len) in &self.0 {
            for i in 0..len.saturating_sub(1) {
                edges.push((base + i, base + i + 1));
            }
            if kind == ComponentKind::Cycle {
                edges.push((base, base + len - 1));
            }
            base += len;
        }
        UnderlyingGraph::from_edges(self.order(), &edges).expect("shape fits")
    }
}

impl std::fmt::Display for Shape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(k, l)| match k {
                ComponentKind::Path => format!("P{l}"),
                ComponentKind::Cycle => format!("C{l}"),
            })
            .collect();
        f.write_str(&parts.join("+"))
    }
}

/// All shapes on `n` vertices, in a fixed order.
pub fn maxdeg2_shapes(n: usize) -> Vec<Shape> {
    fn rec(rest: usize, max: (usize, ComponentKind), cur: &mut Vec<(ComponentKind, usize)>, out: &mut Vec<Shape>) {
        if rest == 0 {
            out.push(Shape(cur.clone()));
            return;
        }
        for len in (1..=rest.min(max.0)).rev() {
            for kind in [ComponentKind::Cycle, ComponentKind::Path] {
                if kind == ComponentKind::Cycle && len < 3 {
                    continue;
                }
                if (len, kind) > max {
                    continue;
                }
                cur.push((kind, len));
                rec(rest - len, (len, kind), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, (n, ComponentKind::Cycle), &mut Vec::new(), &mut out);
    out
}

pub fn gen_underlying_maxdeg2(n: usize) -> Result<Vec<UnderlyingGraph>> {
    check(n)?;
    Ok(maxdeg2_shapes(n).iter().map(Shape::underlying).collect())
}

fn check(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::InvalidOrder(n));
    }
    Ok(())
}

const LEN_SHIFT: u32 = 40;
const KIND_SHIFT: u32 = 39;
const WORD_MASK: u64 = (1 << KIND_SHIFT) - 1;

#[inline]
pub(crate) fn comp_key(kind: ComponentKind, len: usize, word: u64) -> u64 {
    (len as u64) << LEN_SHIFT | ((kind == ComponentKind::Cycle) as u64) << KIND_SHIFT | word
}

#[inline]
pub(crate) fn comp_parts(key: u64) -> (ComponentKind, usize, u64) {
    let kind = if key >> KIND_SHIFT & 1 == 1 { ComponentKind::Cycle } else { ComponentKind::Path };
    (kind, (key >> LEN_SHIFT) as usize, key & WORD_MASK)
}

pub(crate) fn comp_digraph(key: u64) -> Digraph {
    match comp_parts(key) {
        (ComponentKind::Path, len, w) => PathSpace::new(len).unwrap().to_digraph(w),
        (ComponentKind::Cycle, len, w) => CycleSpace::new(len, false).unwrap().to_digraph(w),
    }
}

/// Keys of the `len` single-vertex switchings of a component, by vertex.
pub(crate) fn comp_cards(key: u64, out: &mut Vec<u64>) {
    out.clear();
    match comp_parts(key) {
        (ComponentKind::Path, len, w) => {
            let s = PathSpace::new(len).unwrap();
            out.extend((0..len).map(|v| comp_key(ComponentKind::Path, len, s.canonical(s.switch(w, v)))));
        }
        (ComponentKind::Cycle, len, w) => {
            let s = CycleSpace::new(len, false).unwrap();
            out.extend((0..len).map(|v| comp_key(ComponentKind::Cycle, len, s.canonical(s.switch(w, v)))));
        }
    }
}

/// The key of a connected max-degree-2 oriented graph, or `None`.
pub(crate) fn comp_key_of(g: &Digraph) -> Option<u64> {
    let n = g.n();
    if !g.is_oriented() || !g.is_weakly_connected() {
        return None;
    }
    let u = g.underlying();
    if u.max_degree() > 2 {
        return None;
    }
    let cyclic = u.edge_count() == n && n >= 3;
    // walk from an end (or from 0 on a cycle) to relabel as 0, 1, …
    let start = if cyclic { 0 } else { (0..n).find(|&v| u.degree(v) <= 1)? };
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < n {
        let next = (0..n).find(|&w| u.has_edge(cur, w) && w != prev && !order.contains(&w))?;
        order.push(next);
        prev = cur;
        cur = next;
    }
    let dirs_fwd = |i: usize, j: usize| g.has_arc(order[i], order[j]);
    if cyclic {
        let s = CycleSpace::new(n, false).ok()?;
        let w = (0..n).fold(0u64, |w, i| w << 1 | dirs_fwd(i, (i + 1) % n) as u64);
        Some(comp_key(ComponentKind::Cycle, n, s.canonical(w)))
    } else {
        let s = PathSpace::new(n).ok()?;
        let w = (0..n - 1).fold(0u64, |w, i| w << 1 | dirs_fwd(i, i + 1) as u64);
        Some(comp_key(ComponentKind::Path, n, s.canonical(w)))
    }
}

/// The sorted component-key multiset of a max-degree-2 oriented graph.
pub fn maxdeg2_key(g: &Digraph) -> Option<Vec<u64>> {
    let mut keys = Vec::new();
    for part in g.components().parts {
        keys.push(comp_key_of(&part)?);
    }
    keys.sort_unstable();
    Some(keys)
}

pub fn maxdeg2_digraph(keys: &[u64]) -> Digraph {
    let parts: Vec<Digraph> = keys.iter().map(|&k| comp_digraph(k)).collect();
    Digraph::union_of(&parts).expect("at most 32 vertices")
}

fn class_keys(kind: ComponentKind, len: usize) -> Vec<u64> {
    match kind {
        ComponentKind::Path => {
            PathSpace::new(len).unwrap().classes().map(|w| comp_key(kind, len, w)).collect()
        }
        ComponentKind::Cycle => {
            CycleSpace::new(len, false).unwrap().bracelets().map(|w| comp_key(kind, len, w)).collect()
        }
    }
}

fn stream_class_keys(kind: ComponentKind, len: usize, f: &mut dyn FnMut(u64)) {
    match kind {
        ComponentKind::Path => PathSpace::new(len).unwrap().classes().for_each(|w| f(comp_key(kind, len, w))),
        ComponentKind::Cycle => {
            CycleSpace::new(len, false).unwrap().bracelets().for_each(|w| f(comp_key(kind, len, w)))
        }
    }
}

/// Calls `f` once per oriented graph of the given shape, with its sorted key
/// multiset. A component type longer than half the order occurs once and is
/// streamed; all other class lists are small and held in memory.
pub fn for_each_of_shape(shape: &Shape, f: &mut dyn FnMut(&[u64])) {
    let mut types: Vec<((ComponentKind, usize), usize)> = Vec::new();
    for &t in &shape.0 {
        match types.last_mut() {
            Some((last, m)) if *last == t => *m += 1,
            _ => types.push((t, 1)),
        }
    }
    let n = shape.order();
    let (streamed, rest): (Vec<_>, Vec<_>) = types.into_iter().partition(|&((_, len), m)| m == 1 && 2 * len > n);
    let mut cache: HashMap<(ComponentKind, usize), Vec<u64>> = HashMap::new();
    let lists: Vec<(Vec<u64>, usize)> = rest
        .iter()
        .map(|&(t, m)| (cache.entry(t).or_insert_with(|| class_keys(t.0, t.1)).clone(), m))
        .collect();
    let mut buf: Vec<u64> = Vec::with_capacity(shape.0.len());
    let mut sorted: Vec<u64> = Vec::with_capacity(shape.0.len());
    let mut emit = |buf: &[u64]| {
        sorted.clear();
        sorted.extend_from_slice(buf);
        sorted.sort_unstable();
        f(&sorted);
    };
    match streamed.first() {
        Some(&((kind, len), _)) => stream_class_keys(kind, len, &mut |k| {
            buf.clear();
            buf.push(k);
            multisets(&lists, 0, 0, &mut buf, &mut emit);
        }),
        None => multisets(&lists, 0, 0, &mut buf, &mut emit),
    }
}

/// Combinations with repetition across the typed lists.
fn multisets(lists: &[(Vec<u64>, usize)], t: usize, from: usize, buf: &mut Vec<u64>, emit: &mut dyn FnMut(&[u64])) {
    if t == lists.len() {
        emit(buf);
        return;
    }
    let (list, m) = &lists[t];
    let placed = buf.iter().filter(|&&k| list.binary_search(&k).is_ok()).count();
    if placed == *m {
        multisets(lists, t + 1, 0, buf, emit);
        return;
    }
    for i in from..list.len() {
        buf.push(list[i]);
        multisets(lists, t, i, buf, emit);
        buf.pop();
    }
}

/// Every oriented graph of maximum degree at most 2 on `n` vertices, once
/// per isomorphism class, grouped by shape.
pub fn gen_oriented_maxdeg2(n: usize) -> Result<impl Iterator<Item = Digraph>> {
    check(n)?;
    Ok(maxdeg2_shapes(n).into_iter().flat_map(|shape| {
        let mut out = Vec::new();
        for_each_of_shape(&shape, &mut |keys| out.push(maxdeg2_digraph(keys)));
        out.into_iter()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;
    use crate::testutil::{all_labelled_oriented, brute};
    use std::collections::BTreeSet;

    #[test]
    fn shape_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| maxdeg2_shapes(n).len()).collect();
        assert_eq!(counts[..4], [1, 2, 4, 7]);
        assert_eq!(gen_underlying_maxdeg2(3).unwrap().len(), 4);
        // n = 4: P4, P3+P1, P2+P2, P2+P1+P1, 4·P1, C4, C3+P1
        let names: BTreeSet<String> = maxdeg2_shapes(4).iter().map(|s| s.to_string()).collect();
        for s in ["P4", "P3+P1", "P2+P2", "P2+P1+P1", "P1+P1+P1+P1", "C4", "C3+P1"] {
            assert!(names.contains(s), "{s}");
        }
    }

    #[test]
    fn class_counts_match_brute_force() {
        for n in 1..=5 {
            let ours: Vec<Digraph> = gen_oriented_maxdeg2(n).unwrap().collect();
            let codes: BTreeSet<_> = ours.iter().map(canonical_code).collect();
            assert_eq!(codes.len(), ours.len(), "duplicates at n={n}");
            let all: Vec<Digraph> = all_labelled_oriented(n)
                .into_iter()
                .filter(|g| g.underlying().max_degree() <= 2)
                .collect();
            let expected: BTreeSet<_> = all.iter().map(canonical_code).collect();
            assert_eq!(codes, expected, "n={n}");
        }
        assert_eq!(gen_oriented_maxdeg2(2).unwrap().count(), 2);
        assert_eq!(gen_oriented_maxdeg2(3).unwrap().count(), 7);
        let three: Vec<Digraph> = gen_oriented_maxdeg2(3).unwrap().collect();
        assert_eq!(brute::dedupe(&three).len(), 7);
    }

    #[test]
    fn keys_round_trip() {
        for n in 1..=7 {
            for g in gen_oriented_maxdeg2(n).unwrap() {
                let keys = maxdeg2_key(&g).unwrap();
                assert_eq!(maxdeg2_digraph(&keys), g);
                for (v, part) in g.components().parts.iter().enumerate() {
                    let k = comp_key_of(part).unwrap();
                    let mut cards = Vec::new();
                    comp_cards(k, &mut cards);
                    for (u, &c) in cards.iter().enumerate() {
                        let s = crate::switching::switch_vertex(&comp_digraph(k), u).unwrap();
                        assert_eq!(comp_key_of(&s), Some(c), "component {v}");
                    }
                }
            }
        }
    }
}
