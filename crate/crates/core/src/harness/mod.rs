//! Law suite: numerical checks of the inequalities and identities relating
//! coinvariant top degrees, dimensions, Noether numbers and Davenport constants,
//! evaluated over fixed instance families.

pub mod laws;
pub mod report;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::repaction::RepSpec;

pub use laws::Ctx;
pub use report::{ExplorationRow, LawCase, RunReport, REPORT_VERSION};

/// Environment variable overriding the Hilbert-ideal degree cap.
pub const CAP_ENV: &str = "COINV_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LawId {
    L1,
    L2,
    L3,
    L4,
    L5,
    L6,
    L7,
    L8,
    L9,
    L10,
    L11,
    L12,
    L13,
}

impl LawId {
    pub const ALL: [LawId; 13] = [
        LawId::L1,
        LawId::L2,
        LawId::L3,
        LawId::L4,
        LawId::L5,
        LawId::L6,
        LawId::L7,
        LawId::L8,
        LawId::L9,
        LawId::L10,
        LawId::L11,
        LawId::L12,
        LawId::L13,
    ];

    pub fn description(self) -> &'static str {
        match self {
            LawId::L1 => "subgroup monotonicity",
            LawId::L2 => "submodule monotonicity",
            LawId::L3 => "direct-sum subadditivity",
            LawId::L4 => "regular representation bound",
            LawId::L5 => "dimension exceeds top degree",
            LawId::L6 => "modular growth of top degree",
            LawId::L7 => "growth of dimension",
            LawId::L8 => "non-modular Noether chain",
            LawId::L9 => "relative index bound",
            LawId::L10 => "polarization of Hilbert-ideal elements",
            LawId::L11 => "pure-power lead terms fix the top degree",
            LawId::L12 => "Steinberg bound",
            LawId::L13 => "Davenport constant and coinvariants",
        }
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}", *self as usize + 1)
    }
}

impl FromStr for LawId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSpec(format!("unknown law {s:?} (expected L1..L13)"));
        let n: usize = s
            .trim()
            .strip_prefix(['L', 'l'])
            .ok_or_else(bad)?
            .parse()
            .map_err(|_| bad())?;
        LawId::ALL.get(n.wrapping_sub(1)).copied().ok_or_else(bad)
    }
}

/// Parses `all` or a comma list such as `L1,L5`.
pub fn parse_suite(s: &str) -> Result<Vec<LawId>> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(LawId::ALL.to_vec());
    }
    let mut laws = s.split(',').map(LawId::from_str).collect::<Result<Vec<_>>>()?;
    laws.sort();
    laws.dedup();
    Ok(laws)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub laws: Vec<LawId>,
    /// Overrides the per-group Hilbert-ideal degree cap.
    pub degree_cap: Option<u32>,
    /// Also run the informational copies exploration.
    pub explore: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            laws: LawId::ALL.to_vec(),
            degree_cap: None,
            explore: true,
        }
    }
}

impl SuiteConfig {
    /// Reads the degree cap from `COINV_CAP` when set.
    pub fn with_env_cap(mut self) -> Result<Self> {
        if let Ok(v) = std::env::var(CAP_ENV) {
            let cap = v
                .trim()
                .parse()
                .map_err(|_| Error::InvalidSpec(format!("{CAP_ENV} must be a positive integer, got {v:?}")))?;
            self.degree_cap = Some(cap);
        }
        Ok(self)
    }
}

/// Runs every selected law on its instance family. Cases run in parallel; the
/// report lists them in law order, then family order.
pub fn run_law_suite(config: &SuiteConfig) -> RunReport {
    let ctx = Ctx::new(config.degree_cap);
    let jobs: Vec<laws::Job> = config.laws.iter().flat_map(|&l| laws::jobs_for(l)).collect();
    let results: Vec<(LawCase, f64)> = jobs
        .par_iter()
        .map(|j| {
            let start = Instant::now();
            let (observed, pass, error) = match (j.eval)(&ctx) {
                Ok((obs, pass)) => (obs, pass, None),
                Err(e) => (json!({ "error": e.to_string() }), false, Some(e.to_string())),
            };
            let case = LawCase {
                law_id: j.law.to_string(),
                instance: j.instance.clone(),
                expected: j.expected.clone(),
                observed,
                pass,
                error,
            };
            (case, start.elapsed().as_secs_f64())
        })
        .collect();
    let exploration = if config.explore {
        explore_copies(&ctx, &laws::exploration_instances())
    } else {
        Vec::new()
    };
    let (cases, timings) = results.into_iter().unzip();
    RunReport::new(cases, exploration, timings)
}

/// Compares `topdeg F[V^m]_G` with `topdeg F[V]_G`. Reported only; equality is
/// not known in general and is not asserted.
pub fn explore_copies(ctx: &Ctx, instances: &[(RepSpec, usize)]) -> Vec<ExplorationRow> {
    instances
        .par_iter()
        .map(|(spec, m)| {
            let copies = RepSpec::vector_copies(spec.clone(), *m);
            let single = ctx.topdeg_dim(spec).map(|x| x.0);
            let multi = ctx.topdeg_dim(&copies).map(|x| x.0);
            let error = match (&single, &multi) {
                (Err(e), _) | (_, Err(e)) => Some(e.to_string()),
                _ => None,
            };
            let (s, t) = (single.ok(), multi.ok());
            ExplorationRow {
                instance: json!({ "rep": spec }),
                copies: *m,
                topdeg_single: s,
                topdeg_copies: t,
                equal: s.zip(t).map(|(a, b)| a == b),
                error,
            }
        })
        .collect()
}
