//! Randomized verification suites and their reports.
//!
//! Every suite is driven by a seeded ChaCha stream, so a [`RunConfig`]
//! fully determines the report bytes.

mod sampling;
mod suites;

use std::fmt::Write as _;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraParams;
use crate::error::{Error, Result};

pub use sampling::{random_member, random_number, random_unit_member, seeded, SuiteRng};
pub use suites::{algebra_suite, group_suite, mesh_report, surface_suite, GroupOptions, MEMBER_RANGE};

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_SAMPLES: usize = 10_000;
pub const DEFAULT_TOL_REL: f64 = 1e-9;
pub const DEFAULT_TOL_ABS: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub alpha: f64,
    pub beta: f64,
    pub seed: u64,
    pub samples: usize,
    pub tol_rel: f64,
    pub tol_abs: f64,
    pub output_path: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            alpha: 1.0,
            beta: 1.0,
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
            tol_rel: DEFAULT_TOL_REL,
            tol_abs: DEFAULT_TOL_ABS,
            output_path: None,
        }
    }
}

impl RunConfig {
    pub fn with_params(alpha: f64, beta: f64) -> Self {
        Self {
            alpha,
            beta,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<AlgebraParams> {
        if self.samples == 0 {
            return Err(Error::InvalidArgument("samples must be at least 1".into()));
        }
        for (name, tol) in [("tol-rel", self.tol_rel), ("tol-abs", self.tol_abs)] {
            if !(tol > 0.0 && tol.is_finite()) {
                return Err(Error::InvalidArgument(format!("{name} must be positive, got {tol}")));
            }
        }
        AlgebraParams::new(self.alpha, self.beta)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseResult {
    pub name: String,
    pub passed: bool,
    /// Worst observed deviation. Non-finite deviations and errors raised
    /// while sampling are reported as `f64::MAX`.
    pub max_deviation: f64,
    pub tolerance: f64,
    pub samples: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
    #[serde(rename = "config_echo")]
    pub config: RunConfig,
    /// Which identities the suite exercises.
    pub anchor: String,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    /// One JSON object, no trailing newline.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "[{status}] {} ({})", self.suite, self.anchor);
        for c in &self.cases {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            let _ = writeln!(
                out,
                "  {mark} {:<32} max_dev={:<12.3e} tol={:<9.1e} n={}",
                c.name, c.max_deviation, c.tolerance, c.samples
            );
        }
        out
    }
}

/// Running maximum of one named check.
#[derive(Debug, Clone)]
pub(crate) struct Case {
    name: &'static str,
    tolerance: f64,
    max_deviation: f64,
    samples: usize,
}

impl Case {
    pub(crate) fn new(name: &'static str, tolerance: f64) -> Self {
        Self {
            name,
            tolerance,
            max_deviation: 0.0,
            samples: 0,
        }
    }

    pub(crate) fn record(&mut self, deviation: f64) {
        self.samples += 1;
        let d = if deviation.is_finite() { deviation } else { f64::MAX };
        self.max_deviation = self.max_deviation.max(d);
    }

    pub(crate) fn record_result(&mut self, deviation: Result<f64>) {
        self.record(deviation.unwrap_or(f64::MAX));
    }

    pub(crate) fn finish(self) -> CaseResult {
        CaseResult {
            name: self.name.to_string(),
            passed: self.max_deviation <= self.tolerance,
            max_deviation: self.max_deviation,
            tolerance: self.tolerance,
            samples: self.samples,
        }
    }
}
