//! Decks, t-decks and order-independent deck signatures.

use std::fmt;

use crate::canon::{canonical_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::switching::switchings;

/// A multiset of isomorphism classes, stored as sorted `(code, multiplicity)`
/// runs with positive multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Deck {
    cards: Vec<(CanonicalCode, u32)>,
}

impl Deck {
    pub fn from_codes(mut codes: Vec<CanonicalCode>) -> Self {
        codes.sort_unstable();
        let mut cards: Vec<(CanonicalCode, u32)> = Vec::new();
        for c in codes {
            match cards.last_mut() {
                Some((last, k)) if *last == c => *k += 1,
                _ => cards.push((c, 1)),
            }
        }
        Deck { cards }
    }

    /// Total number of cards counted with multiplicity.
    pub fn len(&self) -> usize {
        self.cards.iter().map(|&(_, k)| k as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cards.is_empty()
    }

    pub fn distinct(&self) -> usize {
        self.cards.len()
    }

    pub fn runs(&self) -> &[(CanonicalCode, u32)] {
        &self.cards
    }

    pub fn multiplicity(&self, code: &CanonicalCode) -> u32 {
        self.cards
            .binary_search_by(|(c, _)| c.cmp(code))
            .map_or(0, |i| self.cards[i].1)
    }

    /// Adds `delta` copies of `code`; `None` if that would go negative.
    pub fn adjusted(&self, code: &CanonicalCode, delta: i64) -> Option<Deck> {
        let mut cards = self.cards.clone();
        match cards.binary_search_by(|(c, _)| c.cmp(code)) {
            Ok(i) => {
                let k = cards[i].1 as i64 + delta;
                match k {
                    k if k < 0 => return None,
                    0 => {
                        cards.remove(i);
                    }
                    k => cards[i].1 = k as u32,
                }
            }
            Err(i) => match delta {
                d if d < 0 => return None,
                0 => {}
                d => cards.insert(i, (code.clone(), d as u32)),
            },
        }
        Some(Deck { cards })
    }

    pub fn signature(&self) -> DeckSignature {
        let mut s = DeckSignature::ZERO;
        for (c, k) in &self.cards {
            s = s.add_scaled(code_hash(c), *k as i64);
        }
        s
    }
}

impl fmt::Display for Deck {
    /// One line per distinct card: digraph6 of the canonical representative
    /// and its multiplicity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, k) in &self.cards {
            writeln!(f, "{c} x{k}")?;
        }
        Ok(())
    }
}

/// `𝒞(G)`: the classes of the `n` single-vertex switchings.
pub fn deck(g: &Digraph) -> Deck {
    Deck::from_codes(switchings(g).map(|s| canonical_code(&s)).collect())
}

/// The deck with the multiplicity of `⟨G⟩` raised by `t` (`t ≥ −1`).
pub fn t_deck(g: &Digraph, t: i64) -> Result<Deck> {
    t_deck_from(&deck(g), &canonical_code(g), t)
}

/// [`t_deck`] from an already computed deck and code.
pub fn t_deck_from(deck: &Deck, own: &CanonicalCode, t: i64) -> Result<Deck> {
    if t < -1 {
        return Err(Error::InvalidT(t));
    }
    deck.adjusted(own, t).ok_or(Error::CardAbsent)
}

/// The unique `t ∈ [−1, n]` for which `G` and `H` have equal t-decks.
///
/// Beyond `n` no match is possible: the t-deck of `G` holds more than `n`
/// copies of `⟨G⟩`, while that of `H` holds at most its `n` ordinary cards
/// of that class.
pub fn matching_t(g: &Digraph, h: &Digraph) -> Result<Option<i64>> {
    if g.n() != h.n() {
        return Err(Error::OrderMismatch(g.n(), h.n()));
    }
    let (cg, ch) = (canonical_code(g), canonical_code(h));
    if cg == ch {
        return Err(Error::IsomorphicInputs);
    }
    let (dg, dh) = (deck(g), deck(h));
    let found: Vec<i64> = (-1..=g.n() as i64)
        .filter(|&t| match (dg.adjusted(&cg, t), dh.adjusted(&ch, t)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        })
        .collect();
    assert!(found.len() <= 1, "two t values give equal t-decks: {found:?}");
    Ok(found.first().copied())
}

/// An order-independent 128-bit digest of a card multiset.
///
/// Signatures are sums of per-card hashes, so the t-deck signature is
/// `sig(deck) + t·h(⟨G⟩)` and shards of a census can be merged freely.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DeckSignature(pub u128);

impl DeckSignature {
    pub const ZERO: DeckSignature = DeckSignature(0);

    #[inline]
    pub fn add(self, h: u128) -> Self {
        DeckSignature(self.0.wrapping_add(h))
    }

    #[inline]
    pub fn add_scaled(self, h: u128, k: i64) -> Self {
        DeckSignature(self.0.wrapping_add(h.wrapping_mul(k as i128 as u128)))
    }
}

#[inline]
fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A stable 128-bit hash of a word sequence, identical on every platform.
pub fn hash_words(words: impl IntoIterator<Item = u64>) -> u128 {
    let (mut a, mut b) = (0x243F_6A88_85A3_08D3u64, 0x1319_8A2E_0370_7344u64);
    for w in words {
        a = splitmix(a ^ w);
        b = splitmix(b.rotate_left(17) ^ w ^ 0xA409_3822_299F_31D0);
    }
    (a as u128) << 64 | b as u128
}

/// Mixes a 128-bit value; used to hash sums of hashes.
#[inline]
pub fn mix128(x: u128) -> u128 {
    hash_words([x as u64, (x >> 64) as u64])
}

pub fn code_hash(c: &CanonicalCode) -> u128 {
    hash_words(std::iter::once(c.order() as u64).chain(c.rows().iter().map(|&r| r as u64)))
}
