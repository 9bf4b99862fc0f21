mod common;

use std::collections::BTreeMap;

use common::cfg;
use proptest::prelude::*;
use switchrecon::canon::canonical_code;
use switchrecon::cycles::{find_w, verify_w_size_reconstruction, CycleOrientation, Rotation};
use switchrecon::enumerate::EdgeDir;
use switchrecon::search::{group_by_deck, run_census, GraphClass, TRange};
use switchrecon::{Digraph, VertexSet};

/// A cycle orientation `G` with `G_W = G^δ` for the given `W` and shift, if
/// the cut of `W` is consistent with the rotation.
fn with_w(n: usize, r: usize, w: VertexSet, seeds: &[bool]) -> Option<CycleOrientation> {
    // edge i joins i and i+1; the rotation sends edge i to edge i+r, and
    // G_W reverses the edges cut by W
    let cut = |i: usize| w.contains(i) != w.contains((i + 1) % n);
    let mut dir: Vec<Option<bool>> = vec![None; n];
    for start in 0..n {
        if dir[start].is_some() {
            continue;
        }
        dir[start] = Some(seeds[start]);
        let mut i = start;
        loop {
            let j = (i + r) % n;
            let want = dir[i].unwrap() ^ cut(j);
            match dir[j] {
                None => dir[j] = Some(want),
                Some(d) if d == want => break,
                Some(_) => return None,
            }
            i = j;
        }
    }
    let dirs = dir.into_iter().map(|d| if d.unwrap() { EdgeDir::Fwd } else { EdgeDir::Bwd }).collect();
    Some(CycleOrientation::new(dirs).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { max_global_rejects: 1 << 20, ..cfg(3000) })]

    #[test]
    fn size_of_w_is_seen_by_the_cards(
        n in 11usize..=30,
        r in 1usize..30,
        picks in proptest::collection::vec(0usize..30, 0..5),
        seeds in proptest::collection::vec(any::<bool>(), 30),
    ) {
        let r = r % n;
        prop_assume!(r != 0);
        let w: VertexSet = picks.iter().map(|p| p % n).collect();
        let g = with_w(n, r, w, &seeds);
        prop_assume!(g.is_some());
        let g = g.unwrap();
        let delta = Rotation::new(n, r);
        let found = find_w(&g, &delta).unwrap();
        let expect = if 2 * w.len() < n { w } else { w.complement(n) };
        prop_assert_eq!(found, Some(expect));
        prop_assume!(n > 2 * expect.len() + 8);
        let rep = verify_w_size_reconstruction(&g, &delta).unwrap();
        prop_assert!(rep.holds(), "{:?}", rep);
    }
}

/// The necklace census agrees with brute force: every labelled orientation,
/// deduplicated by canonical code and grouped by general decks.
#[test]
fn census_matches_general_engine() {
    for n in 3..=12 {
        let mut reps: BTreeMap<_, Digraph> = BTreeMap::new();
        for bits in 0..1u32 << n {
            let dirs = (0..n).map(|i| if bits >> i & 1 == 1 { EdgeDir::Fwd } else { EdgeDir::Bwd }).collect();
            let g = CycleOrientation::new(dirs).unwrap().to_digraph();
            reps.entry(canonical_code(&g)).or_insert(g);
        }
        let report = run_census(GraphClass::Cycles, n..=n, TRange::full(), false).unwrap();
        assert_eq!(report.counts[&n].classes, reps.len() as u64);
        let mut general = Vec::new();
        for t in -1..=n as i64 {
            general.extend(group_by_deck(reps.values().copied(), t).unwrap());
        }
        general.sort();
        let mut fams = report.families.clone();
        fams.sort();
        assert_eq!(fams, general, "n = {n}");
    }
}
