use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const REPORT_VERSION: &str = concat!("coinv ", env!("CARGO_PKG_VERSION"));

/// One evaluated instance of a law.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LawCase {
    pub law_id: String,
    /// Re-runnable description: rep specs plus any subgroup or copy data.
    pub instance: Value,
    pub expected: String,
    pub observed: Value,
    pub pass: bool,
    /// Set when the computation itself failed (cap exceeded, bad input).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Informational comparison of `topdeg F[V^m]_G` against `topdeg F[V]_G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ExplorationRow {
    pub instance: Value,
    pub copies: usize,
    pub topdeg_single: Option<u32>,
    pub topdeg_copies: Option<u32>,
    pub equal: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub version: String,
    /// Field description, `"mixed"` when cases span several fields.
    pub field: String,
    pub cases: Vec<LawCase>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub exploration: Vec<ExplorationRow>,
    pub verdict: String,
    /// Seconds per case, parallel to `cases`. Not part of the canonical JSON.
    #[serde(skip)]
    pub timings: Vec<f64>,
}

impl RunReport {
    pub fn new(cases: Vec<LawCase>, exploration: Vec<ExplorationRow>, timings: Vec<f64>) -> Self {
        let passed = cases.iter().all(|c| c.pass);
        RunReport {
            version: REPORT_VERSION.to_string(),
            field: "mixed".to_string(),
            cases,
            exploration,
            verdict: if passed { "pass" } else { "fail" }.to_string(),
            timings,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawCase> {
        self.cases.iter().filter(|c| !c.pass)
    }

    /// Deterministic JSON; timings are excluded.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
