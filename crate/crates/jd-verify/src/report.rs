//! Reports: one record per suite run, serialized as stable JSON.

use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

/// Default seed for the sampled cases.
pub const DEFAULT_SEED: u64 = 20_240_611;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedResource,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub id: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
}

impl Case {
    /// Passes exactly when both sides agree.
    pub fn compare(id: impl Into<String>, expected: impl Into<String>, computed: impl Into<String>) -> Case {
        let (expected, computed) = (expected.into(), computed.into());
        let status = if expected == computed { Status::Pass } else { Status::Fail };
        Case { id: id.into(), expected, computed, status }
    }

    pub fn skipped(id: impl Into<String>, expected: impl Into<String>, reason: impl Into<String>) -> Case {
        Case { id: id.into(), expected: expected.into(), computed: reason.into(), status: Status::SkippedResource }
    }
}

/// Suite parameters. Unset fields select each suite's default range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Params {
    /// Restrict to one genus.
    pub genus: Option<u16>,
    /// Upper bound on the suite's degree parameter.
    pub degree: Option<usize>,
    /// Lower the i-degree cap below the built-in one.
    pub max_ideg: Option<usize>,
    pub seed: u64,
    /// Number of sampled cases where a suite samples.
    pub samples: usize,
    /// Record wall time (makes reports non-reproducible).
    pub timed: bool,
}

impl Default for Params {
    fn default() -> Self {
        Params { genus: None, degree: None, max_ideg: None, seed: DEFAULT_SEED, samples: 200, timed: false }
    }
}

impl Params {
    pub fn genus(g: u16) -> Self {
        Params { genus: Some(g), ..Params::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub suite: String,
    pub params: Params,
    pub cases: Vec<Case>,
    pub passed: bool,
    pub wall_time_ms: Option<u64>,
    pub format_version: u32,
}

impl Report {
    pub fn new(suite: &str, params: &Params, cases: Vec<Case>, wall_time_ms: Option<u64>) -> Report {
        // Skipped cases never count as passes.
        let passed = !cases.is_empty() && cases.iter().all(|c| c.status == Status::Pass);
        Report { suite: suite.to_string(), params: params.clone(), cases, passed, wall_time_ms, format_version: FORMAT_VERSION }
    }

    pub fn failures(&self) -> usize {
        self.cases.iter().filter(|c| c.status == Status::Fail).count()
    }

    pub fn skipped(&self) -> usize {
        self.cases.iter().filter(|c| c.status == Status::SkippedResource).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per case.
    pub fn to_text(&self) -> String {
        let mut out = format!("suite {}: {}\n", self.suite, if self.passed { "PASS" } else { "FAIL" });
        for c in &self.cases {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::SkippedResource => "skip",
            };
            out.push_str(&format!("  [{tag}] {}: expected {}; computed {}\n", c.id, c.expected, c.computed));
        }
        out
    }
}
