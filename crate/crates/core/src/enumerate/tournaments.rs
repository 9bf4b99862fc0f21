use std::collections::BTreeSet;

use crate::canon::{canonical_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::{Digraph, MAX_N};

/// Largest order handled by [`gen_tournaments`].
pub const MAX_TOURNAMENT_ORDER: usize = 8;

/// One tournament per isomorphism class, in canonical-code order.
///
/// Level `k + 1` is built by joining a new vertex to every level-`k`
/// representative in all `2^k` ways and keeping one graph per code.
pub fn gen_tournaments(n: usize) -> Result<Vec<Digraph>> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    if n > MAX_TOURNAMENT_ORDER {
        return Err(Error::TooLarge(format!("tournaments are generated up to order {MAX_TOURNAMENT_ORDER}")));
    }
    let mut level: Vec<Digraph> = vec![Digraph::empty(1)?];
    for k in 1..n {
        let mut seen: BTreeSet<CanonicalCode> = BTreeSet::new();
        for g in &level {
            for pattern in 0u32..1 << k {
                let mut out = [0u32; MAX_N];
                out[..k].copy_from_slice(&g.out_masks()[..k]);
                for (j, o) in out.iter_mut().enumerate().take(k) {
                    if pattern >> j & 1 == 0 {
                        *o |= 1 << k;
                    }
                }
                out[k] = pattern;
                let h = Digraph::from_raw(k + 1, true, out);
                seen.insert(canonical_code(&h));
            }
        }
        level = seen.iter().map(|c| c.to_digraph().expect("nonempty")).collect();
    }
    Ok(level)
}
