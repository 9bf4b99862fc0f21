use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::Instant;

use crate::canon::{canonical_code, CanonicalCode};
use crate::enumerate::{
    for_each_of_shape, gen_tournaments, gen_underlying_graphs, maxdeg2_shapes, orientation_classes, CycleSpace,
    PathSpace,
};
use crate::error::{Error, Result};
use crate::graph::Digraph;

use super::engine::{deck_groups, EngineLimits, KeyGroup, Shard};
use super::family::{Family, OrderCounts, SearchReport};
use super::keyers::{CardKeyer, CycleKeyer, GeneralKeyer, Maxdeg2Keyer, OrientationKeyer, PathKeyer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphClass {
    Paths,
    Cycles,
    DigonCycles,
    Maxdeg2,
    Tournaments,
    AllOriented,
}

impl GraphClass {
    pub const ALL: [GraphClass; 6] = [
        GraphClass::Paths,
        GraphClass::Cycles,
        GraphClass::DigonCycles,
        GraphClass::Maxdeg2,
        GraphClass::Tournaments,
        GraphClass::AllOriented,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Paths => "paths",
            GraphClass::Cycles => "cycles",
            GraphClass::DigonCycles => "digon-cycles",
            GraphClass::Maxdeg2 => "maxdeg2",
            GraphClass::Tournaments => "tournaments",
            GraphClass::AllOriented => "all-oriented",
        }
    }

    /// Orders a census of this class accepts.
    pub fn orders(self) -> RangeInclusive<usize> {
        match self {
            GraphClass::Paths | GraphClass::Maxdeg2 => 1..=30,
            GraphClass::Cycles => 3..=30,
            GraphClass::DigonCycles => 3..=20,
            GraphClass::Tournaments | GraphClass::AllOriented => 1..=8,
        }
    }

    /// Whether a census at order `n` needs the heavy flag.
    pub fn is_heavy(self, n: usize) -> bool {
        match self {
            GraphClass::Paths => n > 24,
            GraphClass::Cycles => n > 20,
            GraphClass::DigonCycles | GraphClass::Maxdeg2 => n > 16,
            GraphClass::Tournaments => false,
            GraphClass::AllOriented => n >= 8,
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GraphClass::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

/// Upper end of a t-range; `Order` stands for the graph order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TBound {
    Value(i64),
    Order,
}

/// `lo..hi` with `lo ≥ −1`; `t` values above `n` are dropped at order `n`,
/// since no two graphs of order `n` can share a t-deck for such `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TRange {
    pub lo: i64,
    pub hi: TBound,
}

impl TRange {
    pub fn new(lo: i64, hi: TBound) -> Result<Self> {
        if lo < -1 {
            return Err(Error::InvalidT(lo));
        }
        if let TBound::Value(h) = hi {
            if h < -1 {
                return Err(Error::InvalidT(h));
            }
        }
        Ok(TRange { lo, hi })
    }

    pub fn single(t: i64) -> Result<Self> {
        TRange::new(t, TBound::Value(t))
    }

    pub fn full() -> Self {
        TRange { lo: -1, hi: TBound::Order }
    }

    pub fn values(&self, n: usize) -> Vec<i64> {
        let hi = match self.hi {
            TBound::Value(h) => h.min(n as i64),
            TBound::Order => n as i64,
        };
        (self.lo..=hi).collect()
    }

    fn report_bounds(&self, n_hi: usize) -> [i64; 2] {
        [self.lo, match self.hi { TBound::Value(h) => h, TBound::Order => n_hi as i64 }]
    }
}

impl fmt::Display for TRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.hi {
            TBound::Value(h) => write!(f, "{}..{}", self.lo, h),
            TBound::Order => write!(f, "{}..n", self.lo),
        }
    }
}

impl FromStr for TRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::RangeTooLarge(s.to_string(), "expected lo..hi with hi an integer or n".into());
        let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
        let lo = lo.trim().parse::<i64>().map_err(|_| bad())?;
        let hi = match hi.trim() {
            "n" => TBound::Order,
            h => TBound::Value(h.parse::<i64>().map_err(|_| bad())?),
        };
        TRange::new(lo, hi)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CensusOptions {
    pub heavy: bool,
    pub shard: Shard,
    pub limits: EngineLimits,
    /// Print one line per finished order to standard error.
    pub progress: bool,
}

pub fn check_bounds(class: GraphClass, n_range: &RangeInclusive<usize>, heavy: bool) -> Result<()> {
    let ok = class.orders();
    if n_range.is_empty() || n_range.start() < ok.start() || n_range.end() > ok.end() {
        return Err(Error::RangeTooLarge(
            format!("{}..{}", n_range.start(), n_range.end()),
            format!("{class} supports {}..{}", ok.start(), ok.end()),
        ));
    }
    if !heavy {
        if let Some(n) = n_range.clone().find(|&n| class.is_heavy(n)) {
            return Err(Error::HeavyFlagRequired(format!("{class} at n = {n}")));
        }
    }
    Ok(())
}

pub fn run_census(class: GraphClass, n_range: RangeInclusive<usize>, t_range: TRange, heavy: bool) -> Result<SearchReport> {
    run_census_with(class, n_range, t_range, &CensusOptions { heavy, ..Default::default() })
}

pub fn run_census_with(
    class: GraphClass,
    n_range: RangeInclusive<usize>,
    t_range: TRange,
    opts: &CensusOptions,
) -> Result<SearchReport> {
    check_bounds(class, &n_range, opts.heavy)?;
    if opts.shard.count == 0 || opts.shard.index >= opts.shard.count {
        return Err(Error::RangeTooLarge(format!("shard {}/{}", opts.shard.index, opts.shard.count), "need i < k".into()));
    }
    let start = Instant::now();
    let mut report = SearchReport {
        class: class.name().to_string(),
        n_range: [*n_range.start(), *n_range.end()],
        t_range: t_range.report_bounds(*n_range.end()),
        shard: (opts.shard.count > 1).then_some([opts.shard.index, opts.shard.count]),
        families: Vec::new(),
        counts: Default::default(),
        elapsed_ms: 0,
    };
    for n in n_range {
        let ts = t_range.values(n);
        let mut acc = Accumulator { ts: &ts, opts, classes: 0, families: Vec::new() };
        match class {
            GraphClass::Paths => {
                let space = PathSpace::new(n)?;
                acc.run(&PathKeyer(space), &|f| space.classes().for_each(|w| f(&w)))?;
            }
            GraphClass::Cycles | GraphClass::DigonCycles => {
                let space = CycleSpace::new(n, class == GraphClass::DigonCycles)?;
                acc.run(&CycleKeyer(space), &|f| space.bracelets().for_each(|w| f(&w)))?;
            }
            GraphClass::Maxdeg2 => {
                for shape in maxdeg2_shapes(n) {
                    acc.run(&Maxdeg2Keyer, &|f| for_each_of_shape(&shape, &mut |c| f(&c.to_vec())))?;
                }
            }
            GraphClass::Tournaments => {
                let codes = tournament_codes(n)?;
                acc.run(&GeneralKeyer, &|f| codes.iter().for_each(|c| f(c)))?;
            }
            GraphClass::AllOriented => {
                for u in gen_underlying_graphs(n)? {
                    if u.is_complete() && n > 1 {
                        let codes = tournament_codes(n)?;
                        acc.run(&GeneralKeyer, &|f| codes.iter().for_each(|c| f(c)))?;
                    } else {
                        let (action, classes) = orientation_classes(&u)?;
                        acc.run(&OrientationKeyer(action), &|f| classes.iter().for_each(|o| f(o)))?;
                    }
                }
            }
        }
        let Accumulator { classes, families, .. } = acc;
        if opts.progress {
            eprintln!("{class} n={n}: {classes} classes, {} families ({:.1?})", families.len(), start.elapsed());
        }
        report.counts.insert(n, OrderCounts { classes, ..Default::default() });
        report.families.extend(families);
    }
    report.finish();
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn tournament_codes(n: usize) -> Result<Vec<CanonicalCode>> {
    Ok(gen_tournaments(n)?.iter().map(canonical_code).collect())
}

struct Accumulator<'a> {
    ts: &'a [i64],
    opts: &'a CensusOptions,
    classes: u64,
    families: Vec<Family>,
}

impl Accumulator<'_> {
    fn run<K: CardKeyer>(&mut self, keyer: &K, source: super::engine::Source<'_, K::Key>) -> Result<()> {
        let out = deck_groups(keyer, source, self.ts, self.opts.shard, &self.opts.limits);
        self.classes += out.classes;
        for KeyGroup { t, keys } in out.groups {
            let graphs: Vec<Digraph> = keys.iter().map(|k| keyer.to_digraph(k)).collect();
            self.families.push(Family::new(t, &graphs)?);
        }
        Ok(())
    }
}

/// Groups pairwise non-isomorphic graphs by t-deck. Graphs whose (−1)-deck is
/// undefined are skipped at `t = −1`.
pub fn group_by_deck(graphs: impl IntoIterator<Item = Digraph>, t: i64) -> Result<Vec<Family>> {
    if t < -1 {
        return Err(Error::InvalidT(t));
    }
    let codes: Vec<CanonicalCode> = graphs.into_iter().map(|g| canonical_code(&g)).collect();
    let mut sorted = codes.clone();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::IsomorphicInputs);
    }
    let out = deck_groups(&GeneralKeyer, &|f| codes.iter().for_each(|c| f(c)), &[t], Shard::ALL, &EngineLimits::default());
    let mut fams = out
        .groups
        .into_iter()
        .map(|g| Family::new(g.t, &g.keys.iter().map(|k| GeneralKeyer.to_digraph(k)).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?;
    fams.sort();
    Ok(fams)
}
