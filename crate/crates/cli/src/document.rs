//! JSON basis documents.
//!
//! ```json
//! {"n": 2, "field": "Q", "basis": [[["1", "0"], ["0", "1"]]]}
//! ```
//!
//! Each basis element is a list of `n` rows of `n` entries. Entries are
//! strings matching `[+-]?digits(/digits)?` with a nonzero denominator.

use parabolic::exactlin::{format_scalar, parse_scalar, ParseScalarError};
use parabolic::{RationalMatrix, Subspace};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DocumentError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: {message}")]
    Field { path: String, message: String },
    #[error("{path}: zero denominator in {entry:?}")]
    ZeroDenominator { path: String, entry: String },
    #[error("{path}: expected {expected} entries, found {found}")]
    Shape {
        path: String,
        expected: usize,
        found: usize,
    },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    n: usize,
    field: String,
    basis: Vec<Vec<Vec<String>>>,
}

/// A list of `n×n` rational matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisDocument {
    pub n: usize,
    pub basis: Vec<RationalMatrix>,
}

impl BasisDocument {
    pub fn new(n: usize, basis: Vec<RationalMatrix>) -> Self {
        Self { n, basis }
    }

    /// The RREF basis of a subspace of `M_n`, one matrix per vector.
    pub fn from_subspace(n: usize, space: &Subspace) -> Self {
        let basis = space
            .basis()
            .iter()
            .map(|v| RationalMatrix::from_coords(n, v).expect("subspace of M_n"))
            .collect();
        Self { n, basis }
    }

    pub fn to_json(&self) -> String {
        let raw = RawDocument {
            n: self.n,
            field: "Q".into(),
            basis: self
                .basis
                .iter()
                .map(|m| {
                    (0..m.rows())
                        .map(|i| m.row(i).iter().map(format_scalar).collect())
                        .collect()
                })
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("plain data serializes")
    }
}

/// Parses a basis document, reporting the position or field path of the
/// first problem found.
pub fn parse_basis_document(text: &str) -> Result<BasisDocument, DocumentError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if raw.n == 0 {
        return Err(DocumentError::Field {
            path: "n".into(),
            message: "must be positive".into(),
        });
    }
    if raw.field != "Q" {
        return Err(DocumentError::Field {
            path: "field".into(),
            message: format!("unsupported field {:?}, only \"Q\"", raw.field),
        });
    }
    let n = raw.n;
    let mut basis = Vec::with_capacity(raw.basis.len());
    for (k, rows) in raw.basis.iter().enumerate() {
        if rows.len() != n {
            return Err(DocumentError::Shape {
                path: format!("basis[{k}]"),
                expected: n,
                found: rows.len(),
            });
        }
        let mut parsed = Vec::with_capacity(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(DocumentError::Shape {
                    path: format!("basis[{k}][{i}]"),
                    expected: n,
                    found: row.len(),
                });
            }
            let mut entries = Vec::with_capacity(n);
            for (j, entry) in row.iter().enumerate() {
                let path = format!("basis[{k}][{i}][{j}]");
                entries.push(parse_scalar(entry).map_err(|e| match e {
                    ParseScalarError::ZeroDenominator(_) => DocumentError::ZeroDenominator {
                        path,
                        entry: entry.clone(),
                    },
                    other => DocumentError::Field {
                        path,
                        message: other.to_string(),
                    },
                })?);
            }
            parsed.push(entries);
        }
        basis.push(RationalMatrix::from_rows(parsed).expect("shape checked"));
    }
    Ok(BasisDocument { n, basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use parabolic::exactlin::ratio;

    #[test]
    fn identity_document() {
        let doc =
            parse_basis_document(r#"{"n":2,"field":"Q","basis":[[["1","0"],["0","1"]]]}"#).unwrap();
        assert_eq!(doc.n, 2);
        assert_eq!(doc.basis, vec![RationalMatrix::identity(2)]);
    }

    #[test]
    fn zero_denominator_is_located() {
        let err = parse_basis_document(r#"{"n":1,"field":"Q","basis":[[["1/0"]]]}"#).unwrap_err();
        assert_eq!(
            err,
            DocumentError::ZeroDenominator {
                path: "basis[0][0][0]".into(),
                entry: "1/0".into()
            }
        );
    }

    #[test]
    fn entries_are_canonicalized() {
        let doc = parse_basis_document(r#"{"n":1,"field":"Q","basis":[[["3/6"]]]}"#).unwrap();
        assert_eq!(doc.basis[0][(0, 0)], ratio(1, 2));
        assert!(doc.to_json().contains("\"1/2\""));
    }

    #[test]
    fn shape_errors() {
        let err =
            parse_basis_document(r#"{"n":2,"field":"Q","basis":[[["1","0"],["0"]]]}"#).unwrap_err();
        assert_eq!(
            err,
            DocumentError::Shape {
                path: "basis[0][1]".into(),
                expected: 2,
                found: 1
            }
        );
        let err = parse_basis_document(r#"{"n":2,"field":"Q","basis":[[["1","0"]]]}"#).unwrap_err();
        assert!(matches!(err, DocumentError::Shape { found: 1, .. }));
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_basis_document("{\"n\": 2,\n \"field\": Q}").unwrap_err();
        assert!(
            matches!(err, DocumentError::Syntax { line: 2, .. }),
            "{err:?}"
        );
        let err = parse_basis_document(r#"{"n":1,"field":"R","basis":[]}"#).unwrap_err();
        assert!(matches!(err, DocumentError::Field { ref path, .. } if path == "field"));
        let err = parse_basis_document(r#"{"n":1,"field":"Q","basis":[[["1.5"]]]}"#).unwrap_err();
        assert!(matches!(err, DocumentError::Field { ref path, .. } if path == "basis[0][0][0]"));
    }
}
