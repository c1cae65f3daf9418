//! Verification suites and their reports.
//!
//! A suite runs a list of named checks and never stops at the first failure.
//! Conjecture checks carry their own statuses and do not affect
//! [`Report::passed`].

mod suites;
mod tables;

pub use suites::{verify_all, verify_bijections, verify_equinumeration, verify_statistics};
pub use tables::{alpha_beta_gamma_distributions, reference_joint_table, stats_table, StatSelector, StatTable};

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::enumeration::default_jobs;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "CONJECTURE-CONFIRMED-AT-SCALE")]
    ConjectureConfirmed,
    #[serde(rename = "CONJECTURE-REFUTED")]
    ConjectureRefuted,
    /// Reported data with no verdict.
    #[serde(rename = "info")]
    Info,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ConjectureConfirmed => "CONJECTURE-CONFIRMED-AT-SCALE",
            Status::ConjectureRefuted => "CONJECTURE-REFUTED",
            Status::Info => "info",
        }
    }

    pub fn is_conjecture(self) -> bool {
        matches!(self, Status::ConjectureConfirmed | Status::ConjectureRefuted)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub details: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, status: Status, details: Value) {
        self.checks.push(Check { name: name.into(), status, details });
    }

    /// A theorem-level check.
    pub fn check(&mut self, name: impl Into<String>, ok: bool, details: Value) {
        self.push(name, if ok { Status::Pass } else { Status::Fail }, details);
    }

    /// Conjecture checks are prefixed with `CONJECTURE`.
    pub fn conjecture(&mut self, name: impl AsRef<str>, holds: bool, details: Value) {
        let status = if holds { Status::ConjectureConfirmed } else { Status::ConjectureRefuted };
        self.push(format!("CONJECTURE {}", name.as_ref()), status, details);
    }

    pub fn info(&mut self, name: impl Into<String>, details: Value) {
        self.push(name, Status::Info, details);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// True iff no non-conjecture check failed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization is infallible")
    }

    /// One line per check: status, name, compact details.
    pub fn to_table(&self) -> String {
        let width = self.checks.iter().map(|c| c.status.label().len()).max().unwrap_or(0);
        let mut out = format!("suite {}\n", self.suite);
        for c in &self.checks {
            let _ = writeln!(out, "{:<width$}  {}  {}", c.status.label(), c.name, c.details);
        }
        let failed = self.failures().count();
        let _ = writeln!(out, "{} checks, {} failed", self.checks.len(), failed);
        out
    }
}

/// Largest sizes the suites accept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Caps {
    pub triangles: usize,
    pub trapezoids: usize,
    pub pentagons: usize,
    pub zdet: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { triangles: 6, trapezoids: 7, pentagons: 8, zdet: 6 }
    }
}

impl Caps {
    pub fn check(cap: usize, n: usize) -> Result<()> {
        if n > cap {
            Err(Error::CapExceeded { n, cap })
        } else {
            Ok(())
        }
    }
}

/// Sizes a suite run covers. Pentagons with arbitrary parameters are
/// enumerated up to `min(pentagons, triangles)`; the `(n,3,3,3)` case goes
/// up to `pentagons`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Scope {
    pub triangles: usize,
    pub trapezoids: usize,
    pub pentagons: usize,
    pub zdet: usize,
}

impl Scope {
    pub fn uniform(n_max: usize) -> Self {
        Scope { triangles: n_max, trapezoids: n_max, pentagons: n_max, zdet: n_max }
    }

    pub fn validate(&self, caps: &Caps) -> Result<()> {
        Caps::check(caps.triangles, self.triangles)?;
        Caps::check(caps.trapezoids, self.trapezoids)?;
        Caps::check(caps.pentagons, self.pentagons)?;
        Caps::check(caps.zdet, self.zdet)
    }
}

impl From<Caps> for Scope {
    fn from(c: Caps) -> Self {
        Scope { triangles: c.triangles, trapezoids: c.trapezoids, pentagons: c.pentagons, zdet: c.zdet }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Config {
    pub caps: Caps,
    pub jobs: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { caps: Caps::default(), jobs: default_jobs() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn report_status_and_json() {
        let mut r = Report::new("demo");
        r.check("a", true, json!({"n": 3}));
        r.conjecture("b", false, json!(null));
        r.info("c", json!([1, 2]));
        assert!(r.passed());
        assert_eq!(
            r.to_json(),
            r#"{"suite":"demo","checks":[{"name":"a","status":"pass","details":{"n":3}},{"name":"CONJECTURE b","status":"CONJECTURE-REFUTED","details":null},{"name":"c","status":"info","details":[1,2]}]}"#
        );
        r.check("d", false, json!("x"));
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
        assert!(r.to_table().ends_with("4 checks, 1 failed\n"));
    }

    #[test]
    fn caps() {
        let caps = Caps::default();
        assert!(Scope::from(caps).validate(&caps).is_ok());
        assert_eq!(Scope::uniform(7).validate(&caps), Err(Error::CapExceeded { n: 7, cap: 6 }));
        assert!(Scope::uniform(6).validate(&caps).is_ok());
    }
}
