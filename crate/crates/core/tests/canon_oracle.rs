mod common;

use common::{arb_digraph, arb_perm, brute_isomorphic};
use proptest::prelude::*;
use switchrecon::canon::{aut_group, canonical_code, canonical_form, is_isomorphic};

proptest! {
    #![proptest_config(common::cfg(1500))]

    #[test]
    fn codes_decide_isomorphism(g in arb_digraph(1..=6, true), h in arb_digraph(1..=6, true)) {
        prop_assert_eq!(is_isomorphic(&g, &h), brute_isomorphic(&g, &h));
    }

    #[test]
    fn relabelled_copies_share_codes(
        (g, p) in arb_digraph(1..=6, true).prop_flat_map(|g| { let n = g.n(); (Just(g), arb_perm(n)) }),
    ) {
        let h = g.apply_perm(&p).unwrap();
        prop_assert_eq!(canonical_code(&g), canonical_code(&h));
        let f = canonical_form(&h);
        prop_assert_eq!(f.code.to_digraph().unwrap(), h.apply_perm(&f.labelling).unwrap());
    }

    #[test]
    fn automorphisms_by_brute_force(g in arb_digraph(1..=6, true)) {
        let brute = common::all_perms(g.n()).into_iter().filter(|p| g.apply_perm(p).unwrap() == g).count();
        prop_assert_eq!(aut_group(&g).unwrap().order(), brute);
    }

    #[test]
    fn digon_graphs_too(g in arb_digraph(1..=6, true), h in arb_digraph(1..=6, false)) {
        prop_assert_eq!(is_isomorphic(&g, &h), brute_isomorphic(&g, &h));
        let h2 = h.apply_perm(&switchrecon::Permutation::rotation(h.n(), 1)).unwrap();
        prop_assert!(is_isomorphic(&h, &h2));
    }
}

/// Near misses: graphs with equal degree sequences that are not isomorphic.
#[test]
fn equal_degree_sequences() {
    let c6 = switchrecon::Digraph::from_arcs(6, &(0..6).map(|v| (v, (v + 1) % 6)).collect::<Vec<_>>(), true).unwrap();
    let two_c3 =
        switchrecon::Digraph::from_arcs(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)], true).unwrap();
    assert!(!is_isomorphic(&c6, &two_c3));
    assert!(!brute_isomorphic(&c6, &two_c3));
}
