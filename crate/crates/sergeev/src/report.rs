//! Suite runs with timing.

use std::time::{Duration, Instant};

use serde_json::{json, Value};
use sergeev_core::suites::Suite;
use sergeev_core::Report;

use crate::json::report_to_json;

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: Suite,
    pub max_n: usize,
    pub report: Report,
    pub duration: Duration,
}

impl VerificationReport {
    pub fn run(suite: Suite, max_n: usize) -> sergeev_core::Result<Self> {
        let start = Instant::now();
        let report = suite.run(max_n)?;
        Ok(VerificationReport {
            suite,
            max_n,
            report,
            duration: start.elapsed(),
        })
    }

    pub fn passed(&self) -> bool {
        self.report.passed()
    }

    /// Machine form. The duration is left out so the output is reproducible.
    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "max_n": self.max_n,
            "passed": self.passed(),
            "checks": report_to_json(&self.report),
        })
    }

    pub fn summary(&self) -> String {
        format!(
            "suite {} (n <= {}): {} ({} checks)",
            self.suite.name(),
            self.max_n,
            if self.passed() { "PASS" } else { "FAIL" },
            self.report.len()
        )
    }
}

/// Runs the suites on separate threads; results come back in input order.
pub fn run_parallel(
    suites: &[Suite],
    max_n: usize,
) -> sergeev_core::Result<Vec<VerificationReport>> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&s| scope.spawn(move || VerificationReport::run(s, max_n)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    })
}
