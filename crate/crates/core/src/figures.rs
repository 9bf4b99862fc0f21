//! The bundled example families and their checks.

use std::fmt;

use crate::canon::canonical_code;
use crate::error::{Error, Result};
use crate::graph::{parse_digraph6, Digraph};
use crate::search::Family;
use crate::stability::is_switching_stable;

pub const FIXTURE_TEXT: &str = include_str!("../fixtures/families.d6");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureCheck {
    /// Every member is switching-stable.
    Stable,
    /// The members form a family at this `t`.
    TDeck(i64),
}

impl fmt::Display for FixtureCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureCheck::Stable => f.write_str("stable"),
            FixtureCheck::TDeck(t) => write!(f, "t={t}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub description: String,
    pub check: FixtureCheck,
    pub graphs: Vec<Digraph>,
}

/// Parses blocks of the form
///
/// ```text
/// # description
/// == name stable|t=<t>
/// <digraph6>
/// ...
/// ```
pub fn parse_fixtures(text: &str) -> Result<Vec<Fixture>> {
    let mut out: Vec<Fixture> = Vec::new();
    let mut comment = String::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() {
            continue;
        }
        if let Some(c) = line.strip_prefix('#') {
            comment = c.trim().to_string();
        } else if let Some(h) = line.strip_prefix("==") {
            let mut parts = h.split_whitespace();
            let (Some(name), Some(check), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(Error::InvalidFamily(format!("bad fixture header {line:?}")));
            };
            let check = match check {
                "stable" => FixtureCheck::Stable,
                c => FixtureCheck::TDeck(
                    c.strip_prefix("t=")
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| Error::InvalidFamily(format!("bad fixture check {c:?}")))?,
                ),
            };
            out.push(Fixture { name: name.to_string(), description: std::mem::take(&mut comment), check, graphs: Vec::new() });
        } else {
            let fx = out.last_mut().ok_or_else(|| Error::InvalidFamily("graph before first header".into()))?;
            fx.graphs.push(parse_digraph6(line)?);
        }
    }
    Ok(out)
}

pub fn fixtures() -> Vec<Fixture> {
    parse_fixtures(FIXTURE_TEXT).expect("bundled fixtures parse")
}

pub fn fixture(name: &str) -> Option<Fixture> {
    fixtures().into_iter().find(|f| f.name == name)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FigureCheck {
    pub name: String,
    pub check: FixtureCheck,
    pub members: usize,
    pub passed: bool,
    pub detail: String,
}

pub fn check_fixture(fx: &Fixture) -> FigureCheck {
    let outcome = match fx.check {
        FixtureCheck::Stable => {
            let mut codes: Vec<_> = fx.graphs.iter().map(canonical_code).collect();
            codes.sort();
            if codes.windows(2).any(|w| w[0] == w[1]) {
                Err("two members are isomorphic".to_string())
            } else if let Some(g) = fx.graphs.iter().find(|g| !is_switching_stable(g)) {
                Err(format!("{} is not switching-stable", canonical_code(g)))
            } else {
                Ok("all members switching-stable".to_string())
            }
        }
        FixtureCheck::TDeck(t) => Family::new(t, &fx.graphs)
            .map(|f| format!("{} non-isomorphic members share their {t}-deck", f.len()))
            .map_err(|e| e.to_string()),
    };
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    FigureCheck { name: fx.name.clone(), check: fx.check, members: fx.graphs.len(), passed, detail }
}

pub fn verify_figures() -> Vec<FigureCheck> {
    fixtures().iter().map(check_fixture).collect()
}
