//! Pass/fail records for verification suites.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Serialized counterexample or other detail on failure.
    pub detail: Option<String>,
}

/// An ordered list of named checks; passes iff every check passes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: None,
        });
    }

    pub fn fail(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed: false,
            detail: Some(detail.into()),
        });
    }

    /// Records a check, attaching `detail()` only when it fails.
    pub fn check_with(
        &mut self,
        name: impl Into<String>,
        passed: bool,
        detail: impl FnOnce() -> String,
    ) {
        let detail = if passed { None } else { Some(detail()) };
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail,
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// Appends `other` with every check name prefixed.
    pub fn merge(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = alloc::format!("{}: {}", prefix, c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{} {}", if c.passed { "ok  " } else { "FAIL" }, c.name)?;
            if let Some(d) = &c.detail {
                write!(f, "  [{}]", d)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
