//! Command-line front end for the `parabolic` crate: JSON basis documents,
//! small-n corpora, and the verification suites behind `parabolic verify`.

pub mod commands;
pub mod corpus;
pub mod document;
pub mod report;
pub mod suites;

pub use document::{parse_basis_document, BasisDocument, DocumentError};
pub use report::{CheckRecord, VerificationReport};
pub use suites::{run_verification, run_verification_with, Suite, SuiteError, SuiteOptions};

/// Parses `3`, `2..4`, `2..=4` or `2-4` into an inclusive range.
pub fn parse_n_range(text: &str) -> Result<std::ops::RangeInclusive<usize>, String> {
    let bad = || format!("invalid size range {text:?}; expected N or A..B");
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let t = text.trim();
    let (a, b) = if let Some((a, b)) = t.split_once("..=") {
        (num(a)?, num(b)?)
    } else if let Some((a, b)) = t.split_once("..").or_else(|| t.split_once('-')) {
        (num(a)?, num(b)?)
    } else {
        let n = num(t)?;
        (n, n)
    };
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}
