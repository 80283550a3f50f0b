//! Verification reports as key-value text.
//!
//! ```text
//! suite = min-coideal
//! n_range = 2..4
//! seed = 0
//!
//! [min-coideal/n2/parabolic-coideal-dim]
//! anchor = minimal nonzero coideal of M^n has dimension n-1
//! expected = 1
//! observed = 1
//! pass = true
//!
//! summary.checks = 1
//! summary.passed = 1
//! summary.failed = 0
//! result = PASS
//! ```
//!
//! Records are sorted by check id, so a report depends only on the suite,
//! the range and the seed.

use std::fmt::{self, Write};
use std::ops::RangeInclusive;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    pub id: String,
    pub anchor: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

impl CheckRecord {
    pub fn new(
        id: impl Into<String>,
        anchor: impl Into<String>,
        expected: impl fmt::Display,
        observed: impl fmt::Display,
        pass: bool,
    ) -> Self {
        Self {
            id: id.into(),
            anchor: anchor.into(),
            expected: expected.to_string(),
            observed: observed.to_string(),
            pass,
        }
    }

    /// A record whose pass flag is `expected == observed` on the rendered values.
    pub fn equal(
        id: impl Into<String>,
        anchor: impl Into<String>,
        expected: impl fmt::Display,
        observed: impl fmt::Display,
    ) -> Self {
        let (e, o) = (expected.to_string(), observed.to_string());
        let pass = e == o;
        Self::new(id, anchor, e, o, pass)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub n_range: RangeInclusive<usize>,
    pub seed: u64,
    records: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, n_range: RangeInclusive<usize>, seed: u64) -> Self {
        Self {
            suite: suite.into(),
            n_range,
            seed,
            records: Vec::new(),
        }
    }

    pub fn push(&mut self, record: CheckRecord) {
        let at = self.records.partition_point(|r| r.id <= record.id);
        self.records.insert(at, record);
    }

    pub fn extend(&mut self, records: impl IntoIterator<Item = CheckRecord>) {
        for r in records {
            self.push(r);
        }
    }

    pub fn records(&self) -> &[CheckRecord] {
        &self.records
    }

    pub fn record(&self, id: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    pub fn passed(&self) -> usize {
        self.records.iter().filter(|r| r.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.records.len() - self.passed()
    }

    pub fn all_pass(&self) -> bool {
        self.failed() == 0
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "suite = {}", self.suite).unwrap();
        writeln!(
            out,
            "n_range = {}..{}",
            self.n_range.start(),
            self.n_range.end()
        )
        .unwrap();
        writeln!(out, "seed = {}", self.seed).unwrap();
        for r in &self.records {
            writeln!(out).unwrap();
            writeln!(out, "[{}]", r.id).unwrap();
            writeln!(out, "anchor = {}", r.anchor).unwrap();
            writeln!(out, "expected = {}", r.expected).unwrap();
            writeln!(out, "observed = {}", r.observed).unwrap();
            writeln!(out, "pass = {}", r.pass).unwrap();
        }
        writeln!(out).unwrap();
        writeln!(out, "summary.checks = {}", self.records.len()).unwrap();
        writeln!(out, "summary.passed = {}", self.passed()).unwrap();
        writeln!(out, "summary.failed = {}", self.failed()).unwrap();
        writeln!(
            out,
            "result = {}",
            if self.all_pass() { "PASS" } else { "FAIL" }
        )
        .unwrap();
        out
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_are_sorted_and_counted() {
        let mut r = VerificationReport::new("demo", 2..=3, 1);
        r.push(CheckRecord::equal("b", "x", 1, 1));
        r.push(CheckRecord::equal("a", "x", 1, 2));
        assert_eq!(r.records()[0].id, "a");
        assert_eq!((r.passed(), r.failed()), (1, 1));
        assert!(!r.all_pass());
        let text = r.render();
        assert!(text.contains("[a]\nanchor = x\nexpected = 1\nobserved = 2\npass = false"));
        assert!(text.ends_with("result = FAIL\n"));
    }

    #[test]
    fn empty_report_passes() {
        let r = VerificationReport::new("demo", 2..=2, 0);
        assert!(r.all_pass());
        assert!(r.render().contains("summary.checks = 0"));
    }
}
