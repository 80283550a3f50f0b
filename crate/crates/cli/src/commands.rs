//! The `construct` and `analyze` commands, separated from argument parsing.

use std::fmt::Write;
use std::str::FromStr;

use parabolic::algebra::{
    is_parabolic, parabolic_subalgebra, radical, semisimple_blocks_with, BlockSizes,
    WedderburnOptions,
};
use parabolic::coalgebra::{is_coideal, parabolic_coideal, perp, Axiom};
use parabolic::exactlin::format_scalar;
use parabolic::nilpotent::{is_nil_subspace, nonnil_witness_search, NilVerdict};
use parabolic::{Composition, MatrixAlgebra, RationalMatrix, Subspace};

use crate::document::BasisDocument;

#[derive(Debug, thiserror::Error)]
pub enum CommandError {
    #[error("input does not span a unital algebra: {0}")]
    NotAnAlgebra(String),
    #[error("{0}")]
    Failed(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construct {
    Algebra,
    Coideal,
}

/// The standard parabolic algebra of type `comp`, or the coideal
/// annihilating it.
pub fn construct(comp: &Composition, what: Construct) -> Result<BasisDocument, CommandError> {
    let n = comp.n();
    let space = match what {
        Construct::Algebra => parabolic_subalgebra(comp).space().clone(),
        Construct::Coideal => parabolic_coideal(comp)
            .map_err(|e| CommandError::Failed(e.to_string()))?
            .space()
            .clone(),
    };
    Ok(BasisDocument::from_subspace(n, &space))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Analysis {
    Closure,
    Radical,
    Blocks,
    IsParabolic,
    IsCoideal,
    Perp,
    Nil,
}

impl FromStr for Analysis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "closure" => Analysis::Closure,
            "radical" => Analysis::Radical,
            "blocks" => Analysis::Blocks,
            "is-parabolic" => Analysis::IsParabolic,
            "is-coideal" => Analysis::IsCoideal,
            "perp" => Analysis::Perp,
            "nil" => Analysis::Nil,
            other => return Err(format!("unknown analysis {other:?}")),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub seed: u64,
    pub trials: usize,
    pub budget: usize,
}

fn span(doc: &BasisDocument) -> Subspace {
    Subspace::from_vectors(
        doc.basis.iter().map(|m| m.coords().to_vec()).collect(),
        doc.n * doc.n,
    )
    .expect("document matrices are n×n")
}

fn algebra(doc: &BasisDocument) -> Result<MatrixAlgebra, CommandError> {
    MatrixAlgebra::from_space(doc.n, span(doc))
        .map_err(|e| CommandError::NotAnAlgebra(e.to_string()))
}

fn failed(e: impl std::fmt::Display) -> CommandError {
    CommandError::Failed(e.to_string())
}

fn write_matrix(out: &mut String, key: &str, m: &RationalMatrix) {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let entries: Vec<String> = m.row(i).iter().map(format_scalar).collect();
            format!("[{}]", entries.join(", "))
        })
        .collect();
    writeln!(out, "{key} = [{}]", rows.join(", ")).unwrap();
}

/// Runs one analysis. Subspace-valued results are basis documents in JSON;
/// the rest are key-value text.
pub fn analyze(
    doc: &BasisDocument,
    what: Analysis,
    opts: &AnalyzeOptions,
) -> Result<String, CommandError> {
    let n = doc.n;
    let mut out = String::new();
    match what {
        Analysis::Closure => {
            let a = MatrixAlgebra::closure(n, &doc.basis).map_err(failed)?;
            out = BasisDocument::from_subspace(n, a.space()).to_json();
            out.push('\n');
        }
        Analysis::Radical => {
            let rad = radical(&algebra(doc)?).map_err(failed)?;
            out = BasisDocument::from_subspace(n, &rad).to_json();
            out.push('\n');
        }
        Analysis::Blocks => {
            let a = algebra(doc)?;
            let options = WedderburnOptions {
                seed: opts.seed,
                ..WedderburnOptions::default()
            };
            let data = semisimple_blocks_with(&a, &options).map_err(failed)?;
            writeln!(out, "dim = {}", a.dim()).unwrap();
            writeln!(out, "radical_dim = {}", data.radical_dim).unwrap();
            writeln!(out, "semisimple_dim = {}", data.semisimple_dim).unwrap();
            match &data.block_sizes {
                BlockSizes::Split(sizes) => {
                    let s: Vec<String> = sizes.iter().map(ToString::to_string).collect();
                    writeln!(out, "block_sizes = {}", s.join(",")).unwrap();
                }
                BlockSizes::NonSplit => writeln!(out, "block_sizes = non-split").unwrap(),
            }
        }
        Analysis::IsParabolic => {
            let check = is_parabolic(&algebra(doc)?).map_err(failed)?;
            writeln!(out, "parabolic = {}", check.is_parabolic).unwrap();
            if let Some(c) = &check.composition {
                writeln!(out, "type = {c}").unwrap();
            }
            if let Some(w) = &check.witness {
                write_matrix(&mut out, "witness", w);
            }
        }
        Analysis::IsCoideal => match is_coideal(&span(doc)) {
            Ok(x) => {
                writeln!(out, "coideal = true").unwrap();
                writeln!(out, "dim = {}", x.dim()).unwrap();
            }
            Err(e) => match e.failed_axiom() {
                Some(axiom) => {
                    writeln!(out, "coideal = false").unwrap();
                    let name = match axiom {
                        Axiom::Counit => "counit",
                        Axiom::Comultiplication => "comultiplication",
                    };
                    writeln!(out, "failed_axiom = {name}").unwrap();
                    writeln!(out, "reason = {e}").unwrap();
                }
                None => return Err(failed(e)),
            },
        },
        Analysis::Perp => {
            out = BasisDocument::from_subspace(n, &perp(&span(doc))).to_json();
            out.push('\n');
        }
        Analysis::Nil => {
            let s = span(doc);
            let cert = is_nil_subspace(&s, opts.budget).map_err(failed)?;
            let (verdict, witness) = match cert.verdict {
                NilVerdict::Undetermined => {
                    let found =
                        nonnil_witness_search(&s, opts.seed, opts.trials).map_err(failed)?;
                    match found {
                        Some(w) => ("witness-found", Some(w)),
                        None => ("undetermined", None),
                    }
                }
                NilVerdict::AllNilpotent => ("all-nilpotent", None),
                NilVerdict::WitnessFound => ("witness-found", cert.witness),
            };
            writeln!(out, "dim = {}", s.dim()).unwrap();
            writeln!(out, "verdict = {verdict}").unwrap();
            if let Some(w) = &witness {
                write_matrix(&mut out, "witness", w);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> AnalyzeOptions {
        AnalyzeOptions {
            seed: 0,
            trials: 16,
            budget: 10_000,
        }
    }

    #[test]
    fn construct_both_kinds() {
        let comp: Composition = "1,2".parse().unwrap();
        assert_eq!(construct(&comp, Construct::Algebra).unwrap().basis.len(), 7);
        assert_eq!(construct(&comp, Construct::Coideal).unwrap().basis.len(), 2);
    }

    #[test]
    fn analyses_of_upper_triangular() {
        let doc = BasisDocument::from_subspace(2, MatrixAlgebra::upper_triangular(2).space());
        let blocks = analyze(&doc, Analysis::Blocks, &opts()).unwrap();
        assert!(blocks.contains("radical_dim = 1\n"));
        assert!(blocks.contains("block_sizes = 1,1\n"));
        let para = analyze(&doc, Analysis::IsParabolic, &opts()).unwrap();
        assert!(para.starts_with("parabolic = true\ntype = (1,1)\n"));
        let nil = analyze(&doc, Analysis::Nil, &opts()).unwrap();
        assert!(nil.contains("verdict = witness-found"));
    }

    #[test]
    fn non_algebra_is_rejected() {
        let doc = BasisDocument::new(2, vec![RationalMatrix::unit(2, 0, 1)]);
        assert!(matches!(
            analyze(&doc, Analysis::Radical, &opts()),
            Err(CommandError::NotAnAlgebra(_))
        ));
        let coideal = analyze(&doc, Analysis::IsCoideal, &opts()).unwrap();
        assert_eq!(coideal, "coideal = true\ndim = 1\n");
    }
}
