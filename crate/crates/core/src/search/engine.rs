//! Grouping a graph universe by t-deck.
//!
//! Each class is reduced to a [`Profile`]; the t-deck bucket key is
//! `sig + t·own`, so one profile serves every `t`. Buckets holding two or
//! more classes are re-checked by exact comparison of sorted card keys.
//! When a universe has more classes than fit the profile cache, the bucket
//! space is split into passes and the universe is streamed once per pass.

use std::collections::HashMap;

use rayon::prelude::*;

use super::keyers::{CardKeyer, Profile};

/// Restricts a census to bucket keys `≡ index (mod count)`. Equal t-decks
/// share a bucket key, so shards never split a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shard {
    pub index: u64,
    pub count: u64,
}

impl Shard {
    pub const ALL: Shard = Shard { index: 0, count: 1 };

    #[inline]
    fn keeps(&self, sig: u64, passes: u64, pass: u64) -> bool {
        sig % self.count == self.index && (sig / self.count) % passes == pass
    }
}

impl Default for Shard {
    fn default() -> Self {
        Shard::ALL
    }
}

#[derive(Clone, Copy, Debug)]
pub struct EngineLimits {
    /// Profiles held in memory at once (24 bytes each).
    pub cache_entries: usize,
    /// Classes handed to the thread pool per batch.
    pub chunk: usize,
}

impl Default for EngineLimits {
    fn default() -> Self {
        EngineLimits { cache_entries: 1 << 25, chunk: 1 << 14 }
    }
}

/// A stream of class keys; calling it again replays the same sequence.
pub type Source<'a, K> = &'a (dyn Fn(&mut dyn FnMut(&K)) + Sync);

/// Classes with equal t-decks, found for one `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeyGroup<K> {
    pub t: i64,
    pub keys: Vec<K>,
}

pub struct GroupOutcome<K> {
    pub classes: u64,
    pub groups: Vec<KeyGroup<K>>,
}

fn profiles_in_chunks<K: CardKeyer>(
    keyer: &K,
    source: Source<'_, K::Key>,
    chunk: usize,
    sink: &mut dyn FnMut(u64, &[Profile]),
) -> u64 {
    let mut buf: Vec<K::Key> = Vec::with_capacity(chunk);
    let mut start = 0u64;
    let mut out: Vec<Profile> = Vec::with_capacity(chunk);
    let mut flush = |buf: &mut Vec<K::Key>, start: &mut u64| {
        buf.par_iter().map(|k| keyer.profile(k)).collect_into_vec(&mut out);
        sink(*start, &out);
        *start += buf.len() as u64;
        buf.clear();
    };
    source(&mut |k| {
        buf.push(k.clone());
        if buf.len() == chunk {
            flush(&mut buf, &mut start);
        }
    });
    if !buf.is_empty() {
        flush(&mut buf, &mut start);
    }
    start
}

/// Sorted `(bucket, rank)` pairs; returns the rank lists of buckets with at
/// least two entries.
fn crowded(mut entries: Vec<(u64, u64)>) -> Vec<Vec<u64>> {
    entries.par_sort_unstable();
    let mut runs = Vec::new();
    let mut i = 0;
    while i < entries.len() {
        let mut j = i + 1;
        while j < entries.len() && entries[j].0 == entries[i].0 {
            j += 1;
        }
        if j - i >= 2 {
            runs.push(entries[i..j].iter().map(|e| e.1).collect());
        }
        i = j;
    }
    runs
}

/// The t-deck of a class as a sorted key list.
pub fn exact_t_deck<K: CardKeyer>(keyer: &K, key: &K::Key, t: i64) -> Option<Vec<K::Key>> {
    let mut cards = keyer.cards(key);
    if t >= 0 {
        cards.extend(std::iter::repeat_n(key.clone(), t as usize));
    } else {
        for _ in 0..t.unsigned_abs() {
            let i = cards.iter().position(|c| c == key)?;
            cards.swap_remove(i);
        }
    }
    cards.sort();
    Some(cards)
}

/// Groups the classes of `source` by t-deck for every `t` in `ts`.
///
/// Groups are maximal, have at least two classes, list keys in increasing
/// order, and come sorted by `(t, first key)`.
pub fn deck_groups<K: CardKeyer>(
    keyer: &K,
    source: Source<'_, K::Key>,
    ts: &[i64],
    shard: Shard,
    limits: &EngineLimits,
) -> GroupOutcome<K::Key> {
    let mut cache: Vec<Profile> = Vec::new();
    let mut cached = true;
    let classes = profiles_in_chunks(keyer, source, limits.chunk, &mut |_, ps| {
        if cached {
            cache.extend_from_slice(ps);
            if cache.len() > limits.cache_entries {
                cached = false;
                cache = Vec::new();
            }
        }
    });

    let mut runs: Vec<(i64, Vec<u64>)> = Vec::new();
    if cached {
        for &t in ts {
            let entries: Vec<(u64, u64)> = cache
                .iter()
                .enumerate()
                .filter_map(|(r, p)| p.t_sig(t).filter(|&s| shard.keeps(s, 1, 0)).map(|s| (s, r as u64)))
                .collect();
            runs.extend(crowded(entries).into_iter().map(|r| (t, r)));
        }
    } else {
        let passes = classes.div_ceil(limits.cache_entries as u64).max(1);
        for &t in ts {
            for pass in 0..passes {
                let mut entries = Vec::new();
                profiles_in_chunks(keyer, source, limits.chunk, &mut |start, ps| {
                    for (i, p) in ps.iter().enumerate() {
                        if let Some(s) = p.t_sig(t).filter(|&s| shard.keeps(s, passes, pass)) {
                            entries.push((s, start + i as u64));
                        }
                    }
                });
                runs.extend(crowded(entries).into_iter().map(|r| (t, r)));
            }
        }
    }
    drop(cache);

    let mut wanted: Vec<u64> = runs.iter().flat_map(|(_, r)| r.iter().copied()).collect();
    wanted.sort_unstable();
    wanted.dedup();
    let mut keys: HashMap<u64, K::Key> = HashMap::with_capacity(wanted.len());
    if !wanted.is_empty() {
        let mut rank = 0u64;
        let mut next = 0usize;
        source(&mut |k| {
            if next < wanted.len() && wanted[next] == rank {
                keys.insert(rank, k.clone());
                next += 1;
            }
            rank += 1;
        });
    }

    let mut groups: Vec<KeyGroup<K::Key>> = runs
        .par_iter()
        .flat_map_iter(|(t, ranks)| {
            let mut decks: Vec<(Vec<K::Key>, K::Key)> = ranks
                .iter()
                .map(|r| {
                    let k = keys[r].clone();
                    (exact_t_deck(keyer, &k, *t).expect("bucketed only when defined"), k)
                })
                .collect();
            decks.sort();
            let mut out = Vec::new();
            let mut i = 0;
            while i < decks.len() {
                let mut j = i + 1;
                while j < decks.len() && decks[j].0 == decks[i].0 {
                    j += 1;
                }
                if j - i >= 2 {
                    let mut members: Vec<K::Key> = decks[i..j].iter().map(|d| d.1.clone()).collect();
                    members.sort();
                    out.push(KeyGroup { t: *t, keys: members });
                }
                i = j;
            }
            out
        })
        .collect();
    groups.sort_by(|a, b| (a.t, &a.keys).cmp(&(b.t, &b.keys)));
    GroupOutcome { classes, groups }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::CycleSpace;
    use crate::search::keyers::CycleKeyer;

    fn run(n: usize, ts: &[i64], shard: Shard, limits: &EngineLimits) -> GroupOutcome<u64> {
        let s = CycleSpace::new(n, false).unwrap();
        let keyer = CycleKeyer(s);
        let src = move |f: &mut dyn FnMut(&u64)| s.bracelets().for_each(|w| f(&w));
        deck_groups(&keyer, &src, ts, shard, limits)
    }

    #[test]
    fn passes_and_shards_agree() {
        let ts: Vec<i64> = (-1..=8).collect();
        let full = run(8, &ts, Shard::ALL, &EngineLimits::default());
        assert_eq!(full.classes, 22);
        let tiny = EngineLimits { cache_entries: 3, chunk: 2 };
        assert_eq!(run(8, &ts, Shard::ALL, &tiny).groups, full.groups);
        let mut merged: Vec<KeyGroup<u64>> =
            (0..3).flat_map(|i| run(8, &ts, Shard { index: i, count: 3 }, &tiny).groups).collect();
        merged.sort_by(|a, b| (a.t, &a.keys).cmp(&(b.t, &b.keys)));
        assert_eq!(merged, full.groups);
        let sizes: Vec<usize> = full.groups.iter().filter(|g| g.t == 0).map(|g| g.keys.len()).collect();
        let mut sorted = sizes.clone();
        sorted.sort();
        assert_eq!(sorted, [2, 2, 2, 2, 3, 4]);
    }
}
