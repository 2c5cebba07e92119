//! Run reports: what a command checked and what it produced.

use std::fmt::Write as _;

use manin_forge_core::report::VecDisplay;
use manin_forge_core::{Check, Report};
use serde::Serialize;

use crate::error::{EXIT_CHECK_FAILED, EXIT_PASS};
use crate::schema::{canonical_json, Document, Scalar, FORMAT};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FailureRecord {
    pub witness: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub total_failures: usize,
    pub failures: Vec<FailureRecord>,
}

impl From<&Check> for CheckRecord {
    fn from(c: &Check) -> Self {
        let scalars = |v: &[manin_forge_core::Rational]| v.iter().map(Scalar::from_rational).collect();
        CheckRecord {
            name: c.name.clone(),
            passed: c.passed(),
            total_failures: c.total_failures,
            failures: c
                .failures
                .iter()
                .map(|f| FailureRecord { witness: f.witness.clone(), lhs: scalars(&f.lhs), rhs: scalars(&f.rhs) })
                .collect(),
        }
    }
}

/// Everything a command reports. `exit_code` is 0 exactly when every check
/// passed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub format: String,
    pub command: String,
    pub inputs: Vec<String>,
    pub status: String,
    pub exit_code: i32,
    pub checks: Vec<CheckRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outputs: Option<Document>,
}

impl RunReport {
    pub fn new(command: &str, inputs: Vec<String>, report: &Report, outputs: Option<Document>) -> Self {
        let checks: Vec<CheckRecord> = report.checks().iter().map(CheckRecord::from).collect();
        let passed = checks.iter().all(|c| c.passed);
        RunReport {
            format: FORMAT.into(),
            command: command.into(),
            inputs,
            status: if passed { "pass" } else { "fail" }.into(),
            exit_code: if passed { EXIT_PASS } else { EXIT_CHECK_FAILED },
            checks,
            outputs,
        }
    }

    pub fn passed(&self) -> bool {
        self.exit_code == EXIT_PASS
    }

    pub fn to_json(&self) -> String {
        canonical_json(self)
    }

    /// One line per check, failures indented beneath.
    pub fn to_human(&self, report: &Report) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} [{}]: {}", self.command, self.inputs.join(", "), self.status);
        for c in report.checks() {
            let mark = if c.passed() { "ok  " } else { "FAIL" };
            let _ = writeln!(s, "  {mark} {}", c.name);
            for f in &c.failures {
                let _ = writeln!(s, "       at {:?}: {} != {}", f.witness, VecDisplay(&f.lhs), VecDisplay(&f.rhs));
            }
            if c.total_failures > c.failures.len() {
                let _ = writeln!(s, "       ... {} failures in total", c.total_failures);
            }
        }
        let total = report.checks().len();
        let failed = report.failed_checks().count();
        let _ = writeln!(s, "{} checks, {} failed", total, failed);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use manin_forge_core::matrix::int;

    #[test]
    fn exit_code_tracks_checks() {
        let mut r = Report::new();
        r.expect("fine", &[], true);
        assert_eq!(RunReport::new("verify", vec![], &r, None).exit_code, 0);
        r.expect_eq("broken", &[0, 1], vec![int(1)], vec![int(2)]);
        let run = RunReport::new("verify", vec!["a.json".into()], &r, None);
        assert_eq!(run.exit_code, 1);
        assert_eq!(run.status, "fail");
        let json = run.to_json();
        assert!(json.contains("\"witness\""));
        assert!(run.to_human(&r).contains("FAIL broken"));
    }
}
