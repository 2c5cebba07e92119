//! Check reports.
//!
//! A [`Report`] lists every named check that ran, in order, together with
//! the failures it found. A failure carries the basis indices that witness
//! it and both sides of the violated identity.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::matrix::Rational;

/// At most this many failures are stored per check; the total is still
/// counted.
pub const MAX_STORED_FAILURES: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub witness: Vec<usize>,
    pub lhs: Vec<Rational>,
    pub rhs: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub failures: Vec<Failure>,
    pub total_failures: usize,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.total_failures == 0
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// The same checks with every name prefixed.
    pub fn prefixed(self, prefix: &str) -> Self {
        Report {
            checks: self
                .checks
                .into_iter()
                .map(|mut c| {
                    c.name = alloc::format!("{prefix}{}", c.name);
                    c
                })
                .collect(),
        }
    }

    pub fn from_checks(checks: impl IntoIterator<Item = Check>) -> Self {
        let mut r = Report::new();
        for c in checks {
            r.merge(Report { checks: alloc::vec![c] });
        }
        r
    }

    /// Registers a check as having run. Idempotent.
    pub fn run(&mut self, name: &str) -> &mut Check {
        let idx = match self.checks.iter().position(|c| c.name == name) {
            Some(i) => i,
            None => {
                self.checks.push(Check { name: name.into(), failures: Vec::new(), total_failures: 0 });
                self.checks.len() - 1
            }
        };
        &mut self.checks[idx]
    }

    pub fn fail(&mut self, name: &str, witness: &[usize], lhs: Vec<Rational>, rhs: Vec<Rational>) {
        let check = self.run(name);
        check.total_failures += 1;
        if check.failures.len() < MAX_STORED_FAILURES {
            check.failures.push(Failure { witness: witness.to_vec(), lhs, rhs });
        }
    }

    /// Records a failure unless `lhs == rhs`.
    pub fn expect_eq(&mut self, name: &str, witness: &[usize], lhs: Vec<Rational>, rhs: Vec<Rational>) {
        if lhs == rhs {
            self.run(name);
        } else {
            self.fail(name, witness, lhs, rhs);
        }
    }

    /// Records a boolean condition; failures carry no values.
    pub fn expect(&mut self, name: &str, witness: &[usize], ok: bool) {
        if ok {
            self.run(name);
        } else {
            self.fail(name, witness, Vec::new(), Vec::new());
        }
    }

    pub fn merge(&mut self, other: Report) {
        for c in other.checks {
            let mine = self.run(&c.name);
            mine.total_failures += c.total_failures;
            for f in c.failures {
                if mine.failures.len() < MAX_STORED_FAILURES {
                    mine.failures.push(f);
                }
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// `Some(true)` when the check ran and passed, `None` when it never ran.
    pub fn passed_check(&self, name: &str) -> Option<bool> {
        self.check(name).map(Check::passed)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.failed_checks().next().map(|c| c.name.as_str())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.passed() {
                writeln!(f, "pass  {}", c.name)?;
                continue;
            }
            writeln!(f, "FAIL  {} ({} failures)", c.name, c.total_failures)?;
            for fl in &c.failures {
                write!(f, "      at {:?}", fl.witness)?;
                if !fl.lhs.is_empty() || !fl.rhs.is_empty() {
                    write!(f, ": lhs = {} rhs = {}", VecDisplay(&fl.lhs), VecDisplay(&fl.rhs))?;
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Formats a rational vector as `[a, b, c]`.
pub struct VecDisplay<'a>(pub &'a [Rational]);

impl fmt::Display for VecDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::int;
    use alloc::vec;

    #[test]
    fn passed_iff_no_failures() {
        let mut r = Report::new();
        r.expect_eq("a", &[0], vec![int(1)], vec![int(1)]);
        assert!(r.passed());
        assert_eq!(r.passed_check("a"), Some(true));
        r.expect_eq("b", &[1, 2], vec![int(1)], vec![int(2)]);
        assert!(!r.passed());
        assert_eq!(r.first_failure(), Some("b"));
        assert_eq!(r.check("b").unwrap().failures[0].witness, [1, 2]);
        assert_eq!(r.passed_check("missing"), None);
    }

    #[test]
    fn stored_failures_are_capped() {
        let mut r = Report::new();
        for i in 0..20 {
            r.fail("x", &[i], vec![], vec![]);
        }
        let c = r.check("x").unwrap();
        assert_eq!(c.total_failures, 20);
        assert_eq!(c.failures.len(), MAX_STORED_FAILURES);
    }

    #[test]
    fn merge_keeps_order_and_counts() {
        let mut a = Report::new();
        a.run("one");
        let mut b = Report::new();
        b.fail("two", &[], vec![], vec![]);
        b.run("one");
        a.merge(b);
        let names: Vec<_> = a.checks().iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["one", "two"]);
        assert!(!a.passed());
    }
}
