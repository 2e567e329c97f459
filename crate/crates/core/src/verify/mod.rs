//! Verification suites: every structural statement about D_n, its
//! Grothendieck ring and the McKay spectra is a named check run in exact
//! arithmetic and shadowed by a floating-point oracle. Reports serialize to
//! JSON or to a one-line-per-check text listing.

mod checks;
mod context;

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use checks::CHECKS;
pub use context::SuiteContext;

/// Orders covered by the default run.
pub const DEFAULT_ORDERS: [usize; 6] = [3, 5, 7, 9, 11, 13];

/// Largest n accepted unless overridden by [`MAX_N_ENV`].
pub const DEFAULT_MAX_N: usize = 13;

/// Environment variable overriding the largest accepted n.
pub const MAX_N_ENV: &str = "MCKAY_MAX_N";

/// Oracle residuals at or above this fail the check.
pub const ORACLE_TOLERANCE: f64 = 1e-9;

/// The configured maximum n: [`MAX_N_ENV`] if set to a number, else 13.
pub fn max_n() -> usize {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

/// Reject even n, n < 3 and n above `max`.
pub fn validate_order(n: usize, max: usize) -> Result<()> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidOrder(n as i64));
    }
    if n > max {
        return Err(Error::OrderTooLarge { n, max });
    }
    Ok(())
}

/// What a single check reports before timing and status are attached.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub exact: bool,
    pub oracle_residual: f64,
    /// A minimal counterexample or note when something failed.
    pub detail: Option<String>,
}

impl Outcome {
    pub fn new(exact: bool, oracle_residual: f64) -> Self {
        Outcome { exact, oracle_residual, detail: None }
    }

    pub fn with_detail(mut self, detail: Option<String>) -> Self {
        if self.detail.is_none() {
            self.detail = detail;
        }
        self
    }
}

/// A named check.
pub struct CheckSpec {
    pub id: &'static str,
    pub summary: &'static str,
    pub run: fn(&SuiteContext) -> Result<Outcome>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    /// Outcome of the exact computation.
    pub exact: bool,
    /// Worst floating-point discrepancy seen by the oracle.
    pub oracle_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub n: usize,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

/// Look up check ids; an empty selection means every check.
pub fn resolve_selection(selection: &[String]) -> Result<Vec<&'static CheckSpec>> {
    if selection.is_empty() {
        return Ok(CHECKS.iter().collect());
    }
    selection
        .iter()
        .map(|id| {
            CHECKS
                .iter()
                .find(|c| c.id == id.trim())
                .ok_or_else(|| Error::UnknownCheck(id.clone()))
        })
        .collect()
}

fn run_one(spec: &CheckSpec, cx: &SuiteContext) -> CheckResult {
    let start = Instant::now();
    let outcome = match (spec.run)(cx) {
        Ok(o) => o,
        Err(e) => Outcome::new(false, f64::MAX).with_detail(Some(format!("error: {e}"))),
    };
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    let oracle_ok = outcome.oracle_residual < ORACLE_TOLERANCE;
    let mut detail = outcome.detail;
    if outcome.exact && !oracle_ok && detail.is_none() {
        detail = Some(format!(
            "exact pass but oracle residual {:.3e} ≥ {ORACLE_TOLERANCE:e}",
            outcome.oracle_residual
        ));
    }
    CheckResult {
        id: spec.id.to_string(),
        status: if outcome.exact && oracle_ok { Status::Pass } else { Status::Fail },
        exact: outcome.exact,
        oracle_residual: outcome.oracle_residual,
        elapsed_ms: Some(elapsed),
        detail,
    }
}

/// Run the selected checks (all when `selection` is empty) for one n.
/// Checks run concurrently; results come back in registry order.
pub fn run_suite(n: usize, selection: &[String]) -> Result<SuiteReport> {
    validate_order(n, max_n())?;
    let specs = resolve_selection(selection)?;
    let cx = SuiteContext::new(n)?;
    let checks = specs.par_iter().map(|spec| run_one(spec, &cx)).collect();
    Ok(SuiteReport { n, checks })
}

/// Run several orders; reports come back in the order given.
pub fn run_suites(orders: &[usize], selection: &[String]) -> Result<Vec<SuiteReport>> {
    let max = max_n();
    for &n in orders {
        validate_order(n, max)?;
    }
    resolve_selection(selection)?;
    orders.par_iter().map(|&n| run_suite(n, selection)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Text,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "text" => Ok(ReportFormat::Text),
            _ => Err(Error::InvalidArgument(format!("unknown format `{s}` (expected json or text)"))),
        }
    }
}

/// Serialize reports. Without `timings` the output is byte-for-byte
/// reproducible across runs.
pub fn emit_report(reports: &[SuiteReport], format: ReportFormat, timings: bool) -> String {
    let reports: Vec<SuiteReport> = reports
        .iter()
        .map(|r| {
            let mut r = r.clone();
            if !timings {
                for c in &mut r.checks {
                    c.elapsed_ms = None;
                }
            }
            r
        })
        .collect();
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&reports).expect("reports serialize");
            s.push('\n');
            s
        }
        ReportFormat::Text => {
            let mut s = String::new();
            for r in &reports {
                let passed = r.checks.iter().filter(|c| c.status == Status::Pass).count();
                s.push_str(&format!("n = {}: {passed}/{} checks pass\n", r.n, r.checks.len()));
                for c in &r.checks {
                    let mark = if c.status == Status::Pass { '✓' } else { '✗' };
                    s.push_str(&format!("  {mark} {:<34} oracle {:.1e}", c.id, c.oracle_residual));
                    if let Some(ms) = c.elapsed_ms {
                        s.push_str(&format!("  {ms:.1} ms"));
                    }
                    if let Some(d) = &c.detail {
                        s.push_str(&format!("  — {d}"));
                    }
                    s.push('\n');
                }
            }
            s
        }
    }
}

#[cfg(test)]
mod tests;
