use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_code, CanonicalCode};
use crate::decks::t_deck;
use crate::error::{Error, Result};
use crate::graph::{parse_digraph6, Digraph};

/// A maximal set of at least two pairwise non-isomorphic digraphs sharing a
/// t-deck. Construction re-checks every claim by direct deck comparison.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "FamilyRecord", try_from = "FamilyRecord")]
pub struct Family {
    n: usize,
    t: i64,
    members: Vec<CanonicalCode>,
}

#[derive(Serialize, Deserialize)]
struct FamilyRecord {
    n: usize,
    t: i64,
    members: Vec<String>,
    #[serde(default)]
    size: usize,
}

impl From<Family> for FamilyRecord {
    fn from(f: Family) -> Self {
        FamilyRecord {
            n: f.n,
            t: f.t,
            size: f.members.len(),
            members: f.members.iter().map(CanonicalCode::to_digraph6).collect(),
        }
    }
}

impl TryFrom<FamilyRecord> for Family {
    type Error = Error;

    fn try_from(r: FamilyRecord) -> Result<Family> {
        let gs = r.members.iter().map(|s| parse_digraph6(s)).collect::<Result<Vec<_>>>()?;
        let f = Family::new(r.t, &gs)?;
        if f.n != r.n {
            return Err(Error::InvalidFamily(format!("declared order {} but members have {}", r.n, f.n)));
        }
        Ok(f)
    }
}

impl Family {
    pub fn new(t: i64, members: &[Digraph]) -> Result<Family> {
        if members.len() < 2 {
            return Err(Error::InvalidFamily(format!("{} member(s)", members.len())));
        }
        let n = members[0].n();
        if let Some(g) = members.iter().find(|g| g.n() != n) {
            return Err(Error::OrderMismatch(n, g.n()));
        }
        let mut codes: Vec<(CanonicalCode, &Digraph)> = members.iter().map(|g| (canonical_code(g), g)).collect();
        codes.sort_by(|a, b| a.0.cmp(&b.0));
        if codes.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::IsomorphicInputs);
        }
        let first = t_deck(codes[0].1, t)?;
        for (code, g) in &codes[1..] {
            if t_deck(g, t)? != first {
                return Err(Error::InvalidFamily(format!("{} has a different {t}-deck", code)));
            }
        }
        Ok(Family { n, t, members: codes.into_iter().map(|c| c.0).collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> i64 {
        self.t
    }

    pub fn members(&self) -> &[CanonicalCode] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn graphs(&self) -> Vec<Digraph> {
        self.members.iter().map(|c| c.to_digraph().expect("non-empty code")).collect()
    }

    /// Unordered pairs of members.
    pub fn pairs(&self) -> usize {
        self.len() * (self.len() - 1) / 2
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderCounts {
    /// Isomorphism classes in the searched universe.
    pub classes: u64,
    pub families: usize,
    /// Distinct graphs occurring in some family (at any `t`).
    pub graphs_in_families: usize,
    pub pairs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub class: String,
    pub n_range: [usize; 2],
    pub t_range: [i64; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shard: Option<[u64; 2]>,
    pub families: Vec<Family>,
    pub counts: BTreeMap<usize, OrderCounts>,
    pub elapsed_ms: u64,
}

impl SearchReport {
    /// Sorts the families and fills the family-derived counts.
    pub(crate) fn finish(&mut self) {
        self.families.sort_by(|a, b| (a.n, a.t, &a.members).cmp(&(b.n, b.t, &b.members)));
        for c in self.counts.values_mut() {
            *c = OrderCounts { classes: c.classes, ..Default::default() };
        }
        let mut seen: BTreeMap<usize, BTreeSet<&CanonicalCode>> = BTreeMap::new();
        for f in &self.families {
            let c = self.counts.entry(f.n).or_default();
            c.families += 1;
            c.pairs += f.pairs();
            seen.entry(f.n).or_default().extend(f.members.iter());
        }
        for (n, s) in seen {
            self.counts.get_mut(&n).expect("inserted above").graphs_in_families = s.len();
        }
    }

    pub fn total_graphs(&self) -> usize {
        self.counts.values().map(|c| c.graphs_in_families).sum()
    }

    pub fn total_pairs(&self) -> usize {
        self.counts.values().map(|c| c.pairs).sum()
    }

    /// Family sizes at one order and `t`, ascending.
    pub fn sizes(&self, n: usize, t: i64) -> Vec<usize> {
        let mut s: Vec<usize> =
            self.families.iter().filter(|f| f.n == n && f.t == t).map(Family::len).collect();
        s.sort_unstable();
        s
    }
}

/// Combines reports of disjoint shards of the same census.
pub fn merge_reports(reports: Vec<SearchReport>) -> Result<SearchReport> {
    let mut it = reports.into_iter();
    let mut out = it.next().ok_or_else(|| Error::InvalidFamily("nothing to merge".into()))?;
    let mut shards: BTreeSet<u64> = out.shard.iter().map(|s| s[0]).collect();
    let total = out.shard.map(|s| s[1]);
    for r in it {
        if (&r.class, r.n_range, r.t_range) != (&out.class, out.n_range, out.t_range) {
            return Err(Error::InvalidFamily(format!(
                "cannot merge {} {:?} with {} {:?}",
                r.class, r.n_range, out.class, out.n_range
            )));
        }
        if r.shard.map(|s| s[1]) != total || r.shard.is_some_and(|s| !shards.insert(s[0])) {
            return Err(Error::InvalidFamily("shards overlap or come from different splits".into()));
        }
        out.families.extend(r.families);
        for (n, c) in r.counts {
            let e = out.counts.entry(n).or_default();
            e.classes = e.classes.max(c.classes);
        }
        out.elapsed_ms += r.elapsed_ms;
    }
    out.shard = match total {
        Some(k) if shards.len() as u64 == k => None,
        _ => out.shard,
    };
    out.finish();
    Ok(out)
}
