//! Class keys with cheap card computation.
//!
//! A keyer names each isomorphism class of one graph universe by a key and
//! lists the keys of a graph's single-vertex switchings. The census engine
//! only ever compares keys, never graphs.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::canon::{canonical_code, CanonicalCode, OrientationAction};
use crate::decks::code_hash;
use crate::enumerate::{comp_cards, comp_parts, maxdeg2_digraph, CycleSpace, PathSpace};
use crate::graph::Digraph;
use crate::switching::switchings;

#[inline]
pub(crate) fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Per-class deck summary used for bucketing.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Profile {
    /// Wrapping sum of the card hashes.
    pub sig: u64,
    /// Hash of the class itself.
    pub own: u64,
    /// How many cards are the class itself.
    pub own_cards: u32,
}

impl Profile {
    /// Bucket key of the t-deck, or `None` when the (−1)-deck is undefined.
    #[inline]
    pub fn t_sig(&self, t: i64) -> Option<u64> {
        if t < 0 && self.own_cards < t.unsigned_abs() as u32 {
            return None;
        }
        Some(self.sig.wrapping_add(self.own.wrapping_mul(t as u64)))
    }
}

pub trait CardKeyer: Sync {
    type Key: Clone + Ord + Send + Sync + std::fmt::Debug;

    fn hash(&self, key: &Self::Key) -> u64;

    /// Keys of the single-vertex switchings, one per vertex.
    fn cards(&self, key: &Self::Key) -> Vec<Self::Key>;

    fn to_digraph(&self, key: &Self::Key) -> Digraph;

    fn profile(&self, key: &Self::Key) -> Profile {
        let mut p = Profile { own: self.hash(key), ..Profile::default() };
        for c in self.cards(key) {
            p.sig = p.sig.wrapping_add(self.hash(&c));
            p.own_cards += (c == *key) as u32;
        }
        p
    }
}

/// Any digraph, keyed by its canonical code.
pub struct GeneralKeyer;

impl CardKeyer for GeneralKeyer {
    type Key = CanonicalCode;

    fn hash(&self, key: &CanonicalCode) -> u64 {
        code_hash(key) as u64
    }

    fn cards(&self, key: &CanonicalCode) -> Vec<CanonicalCode> {
        switchings(&self.to_digraph(key)).map(|s| canonical_code(&s)).collect()
    }

    fn to_digraph(&self, key: &CanonicalCode) -> Digraph {
        key.to_digraph().expect("nonempty code")
    }
}

/// Orientations of the `n`-cycle (optionally with digons), keyed by their
/// dihedral-least string.
pub struct CycleKeyer(pub CycleSpace);

impl CardKeyer for CycleKeyer {
    type Key = u64;

    fn hash(&self, key: &u64) -> u64 {
        mix64(*key ^ 0xC7C1_E000_0000_0000)
    }

    fn cards(&self, key: &u64) -> Vec<u64> {
        (0..self.0.n()).map(|v| self.0.canonical(self.0.switch(*key, v))).collect()
    }

    fn to_digraph(&self, key: &u64) -> Digraph {
        self.0.to_digraph(*key)
    }

    fn profile(&self, key: &u64) -> Profile {
        let mut p = Profile { own: self.hash(key), ..Profile::default() };
        for v in 0..self.0.n() {
            let c = self.0.canonical(self.0.switch(*key, v));
            p.sig = p.sig.wrapping_add(self.hash(&c));
            p.own_cards += (c == *key) as u32;
        }
        p
    }
}

/// Oriented paths keyed by the lesser of their string and its reversal.
pub struct PathKeyer(pub PathSpace);

impl CardKeyer for PathKeyer {
    type Key = u64;

    fn hash(&self, key: &u64) -> u64 {
        mix64(*key ^ 0x0FA7_0000_0000_0000)
    }

    fn cards(&self, key: &u64) -> Vec<u64> {
        (0..self.0.n()).map(|v| self.0.canonical(self.0.switch(*key, v))).collect()
    }

    fn to_digraph(&self, key: &u64) -> Digraph {
        self.0.to_digraph(*key)
    }
}

/// Orientations of one labelled underlying graph keyed by their least
/// string under its automorphism group.
pub struct OrientationKeyer(pub OrientationAction);

impl CardKeyer for OrientationKeyer {
    type Key = u64;

    fn hash(&self, key: &u64) -> u64 {
        mix64(*key ^ 0x5EED_0000_0000_0001)
    }

    fn cards(&self, key: &u64) -> Vec<u64> {
        let n = self.0.underlying().n();
        (0..n).map(|v| self.0.orbit_min(self.0.switch_bits(*key, v))).collect()
    }

    fn to_digraph(&self, key: &u64) -> Digraph {
        self.0.to_digraph(*key)
    }
}

/// Max-degree-2 oriented graphs keyed by their sorted component keys.
///
/// The class hash is the plain sum of component hashes. A card replaces one
/// component, so the card-hash sum splits into per-component terms, which are
/// memoized for short components.
pub struct Maxdeg2Keyer;

/// Per component: card-hash sum, cards equal to the component.
type CompTerms = (u64, u32);

const MEMO_MAX_LEN: usize = 20;
const MEMO_MAX_ENTRIES: usize = 1 << 20;

thread_local! {
    static COMP_MEMO: RefCell<HashMap<u64, CompTerms>> = RefCell::new(HashMap::new());
}

impl Maxdeg2Keyer {
    #[inline]
    fn comp_hash(c: u64) -> u64 {
        mix64(c ^ 0xD2D2_0000_0000_0000)
    }

    fn comp_terms_uncached(c: u64, buf: &mut Vec<u64>) -> CompTerms {
        comp_cards(c, buf);
        let d = buf.iter().fold(0u64, |s, &x| s.wrapping_add(Self::comp_hash(x)));
        (d, buf.iter().filter(|&&x| x == c).count() as u32)
    }

    fn comp_terms(c: u64, buf: &mut Vec<u64>) -> CompTerms {
        if comp_parts(c).1 > MEMO_MAX_LEN {
            return Self::comp_terms_uncached(c, buf);
        }
        COMP_MEMO.with(|m| {
            let mut m = m.borrow_mut();
            if let Some(&t) = m.get(&c) {
                return t;
            }
            if m.len() >= MEMO_MAX_ENTRIES {
                m.clear();
            }
            let t = Self::comp_terms_uncached(c, buf);
            m.insert(c, t);
            t
        })
    }
}

impl CardKeyer for Maxdeg2Keyer {
    type Key = Vec<u64>;

    fn hash(&self, key: &Vec<u64>) -> u64 {
        key.iter().fold(0u64, |s, &c| s.wrapping_add(Self::comp_hash(c)))
    }

    fn cards(&self, key: &Vec<u64>) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        let mut buf = Vec::new();
        for (i, &c) in key.iter().enumerate() {
            comp_cards(c, &mut buf);
            for &card in &buf {
                let mut k = key.clone();
                k[i] = card;
                k.sort_unstable();
                out.push(k);
            }
        }
        out
    }

    fn to_digraph(&self, key: &Vec<u64>) -> Digraph {
        maxdeg2_digraph(key)
    }

    fn profile(&self, key: &Vec<u64>) -> Profile {
        // a card of component c hashes to total - h(c) + h(card)
        let total = self.hash(key);
        let mut p = Profile { own: total, ..Profile::default() };
        let mut buf = Vec::new();
        let mut prev = None;
        for &c in key {
            let (len, h) = (comp_parts(c).1 as u64, Self::comp_hash(c));
            let (d, e) = match prev {
                Some((pc, terms)) if pc == c => terms,
                _ => Self::comp_terms(c, &mut buf),
            };
            prev = Some((c, (d, e)));
            let base = total.wrapping_sub(h).wrapping_mul(len);
            p.sig = p.sig.wrapping_add(base).wrapping_add(d);
            p.own_cards += e;
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::aut_group_undirected;
    use crate::enumerate::{for_each_of_shape, maxdeg2_key, maxdeg2_shapes};
    use crate::graph::UnderlyingGraph;

    /// Keyed cards must be exactly the canonical cards.
    fn check<K: CardKeyer>(keyer: &K, keys: &[K::Key], canon: impl Fn(&Digraph) -> K::Key) {
        for k in keys {
            let g = keyer.to_digraph(k);
            assert_eq!(canon(&g), *k);
            let cards = keyer.cards(k);
            let direct: Vec<K::Key> = switchings(&g).map(|s| canon(&s)).collect();
            let (mut a, mut b) = (cards.clone(), direct);
            a.sort();
            b.sort();
            assert_eq!(a, b);
            let p = keyer.profile(k);
            let q = Profile {
                sig: cards.iter().fold(0u64, |s, c| s.wrapping_add(keyer.hash(c))),
                own: keyer.hash(k),
                own_cards: cards.iter().filter(|c| *c == k).count() as u32,
            };
            assert_eq!(p, q);
        }
    }

    #[test]
    fn keyers_agree_with_switching() {
        for n in 3..=9 {
            let s = CycleSpace::new(n, false).unwrap();
            let keys: Vec<u64> = s.bracelets().collect();
            check(&CycleKeyer(s), &keys, |g| s.canonical(s.from_digraph(g).unwrap()));
            let s = CycleSpace::new(n, true).unwrap();
            let keys: Vec<u64> = s.bracelets().collect();
            check(&CycleKeyer(s), &keys, |g| s.canonical(s.from_digraph(g).unwrap()));
        }
        for n in 1..=9 {
            let s = PathSpace::new(n).unwrap();
            let keys: Vec<u64> = s.classes().collect();
            check(&PathKeyer(s), &keys, |g| s.canonical(s.from_digraph(g).unwrap()));
        }
        for n in 1..=8 {
            for shape in maxdeg2_shapes(n) {
                let mut keys = Vec::new();
                for_each_of_shape(&shape, &mut |k| keys.push(k.to_vec()));
                check(&Maxdeg2Keyer, &keys, |g| maxdeg2_key(g).unwrap());
            }
        }
        let u = UnderlyingGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let act = OrientationAction::new(&u, &aut_group_undirected(&u).unwrap()).unwrap();
        let keys: Vec<u64> = (0..1u64 << 5).filter(|&o| act.is_orbit_min(o)).collect();
        let a2 = act.clone();
        check(&OrientationKeyer(act), &keys, move |g| a2.orbit_min(a2.from_digraph(g).unwrap()));
        let codes: Vec<CanonicalCode> =
            crate::enumerate::gen_tournaments(5).unwrap().iter().map(canonical_code).collect();
        check(&GeneralKeyer, &codes, canonical_code);
    }
}
