//! Finding families of digraphs that share a t-deck.

mod census;
mod disconnected;
mod engine;
mod family;
mod keyers;

pub use census::{check_bounds, group_by_deck, run_census, run_census_with, CensusOptions, GraphClass, TBound, TRange};
pub use disconnected::{
    definite_components, possible_components, strip_stable_components, switching_adjacent, verify_disconnected_dichotomy,
    DichotomyReport, Stripped, Universe,
};
pub use engine::{deck_groups, exact_t_deck, EngineLimits, GroupOutcome, KeyGroup, Shard, Source};
pub use family::{merge_reports, Family, OrderCounts, SearchReport};
pub use keyers::{CardKeyer, CycleKeyer, GeneralKeyer, Maxdeg2Keyer, OrientationKeyer, PathKeyer, Profile};
