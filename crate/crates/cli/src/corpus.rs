//! Test corpora of subalgebras of `M_n(Q)`.
//!
//! For `n ≤ 3` the backbone is the exhaustive family of unit-pattern
//! algebras: spans of `e_{i,j}` over a position set that contains the
//! diagonal and is transitively closed. Seeded conjugates and random
//! closures are added on top. At `n = 4` the corpus is built from standard
//! parabolics, their conjugates, random closures and a few named algebras.

use std::collections::HashSet;

use parabolic::algebra::parabolic_subalgebra;
use parabolic::composition::compositions;
use parabolic::sampling::Sampler;
use parabolic::{MatrixAlgebra, RationalMatrix, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CorpusError {
    #[error("n = {n} is outside the supported range {min}..={max}")]
    Unsupported { n: usize, min: usize, max: usize },
}

fn check_range(n: usize, min: usize, max: usize) -> Result<(), CorpusError> {
    if (min..=max).contains(&n) {
        Ok(())
    } else {
        Err(CorpusError::Unsupported { n, min, max })
    }
}

fn off_diagonal(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect()
}

fn transitively_closed(n: usize, pattern: &[(usize, usize)]) -> bool {
    let mut rel = vec![false; n * n];
    for i in 0..n {
        rel[i * n + i] = true;
    }
    for &(i, j) in pattern {
        rel[i * n + j] = true;
    }
    (0..n).all(|i| {
        (0..n).all(|j| !rel[i * n + j] || (0..n).all(|k| !rel[j * n + k] || rel[i * n + k]))
    })
}

/// Every unital algebra spanned by matrix units, for `n ∈ {2, 3}`, sorted
/// by dimension.
pub fn enumerate_unit_pattern_subalgebras(n: usize) -> Result<Vec<MatrixAlgebra>, CorpusError> {
    check_range(n, 2, 3)?;
    let positions = off_diagonal(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << positions.len()) {
        let pattern: Vec<(usize, usize)> = positions
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        if !transitively_closed(n, &pattern) {
            continue;
        }
        let span = MatrixAlgebra::unit_span(n, (0..n).map(|i| (i, i)).chain(pattern));
        let algebra = MatrixAlgebra::from_space(n, span).expect("closed pattern is an algebra");
        if seen.insert(algebra.clone()) {
            out.push(algebra);
        }
    }
    out.sort_by_key(MatrixAlgebra::dim);
    Ok(out)
}

/// All `2^(n²)` spans of sets of matrix units, for `n ≤ 3`.
pub fn unit_pattern_subspaces(n: usize) -> Result<Vec<Subspace>, CorpusError> {
    check_range(n, 1, 3)?;
    let m = n * n;
    Ok((0u32..(1 << m))
        .map(|mask| {
            MatrixAlgebra::unit_span(
                n,
                (0..m)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| (b / n, b % n)),
            )
        })
        .collect())
}

/// `K·I` plus every `e_{i,j}` with `i < ⌊n/2⌋ ≤ j`: a commutative algebra
/// of dimension `⌊n²/4⌋ + 1`.
pub fn commutative_extremal(n: usize) -> MatrixAlgebra {
    let h = n / 2;
    let mut gens = vec![RationalMatrix::identity(n)];
    for i in 0..h {
        for j in h..n {
            gens.push(RationalMatrix::unit(n, i, j));
        }
    }
    MatrixAlgebra::closure(n, &gens).expect("square generators")
}

/// Closures of `1..=max_generators` random generators. Densities and the
/// number of generators cycle so that small and commutative algebras
/// appear alongside ones that fill `M_n`.
pub fn random_closures(
    n: usize,
    count: usize,
    max_generators: usize,
    seed: u64,
) -> Vec<MatrixAlgebra> {
    let mut sampler = Sampler::new(seed);
    let densities = [0.15, 0.3, 0.6, 1.0];
    (0..count)
        .map(|k| {
            let g = 1 + k % max_generators.max(1);
            let density = densities[(k / max_generators.max(1)) % densities.len()];
            let gens: Vec<RationalMatrix> =
                (0..g).map(|_| sampler.sparse_matrix(n, density)).collect();
            MatrixAlgebra::closure(n, &gens).expect("square generators")
        })
        .collect()
}

/// A corpus algebra with a short description of where it came from.
#[derive(Debug, Clone)]
pub struct CorpusAlgebra {
    pub label: String,
    pub algebra: MatrixAlgebra,
}

/// The algebra corpus for `n ∈ 2..=4`, deterministic in `seed` and free of
/// duplicates.
pub fn algebra_corpus(n: usize, seed: u64) -> Result<Vec<CorpusAlgebra>, CorpusError> {
    check_range(n, 2, 4)?;
    let mut sampler = Sampler::new(seed ^ 0x5eed_c0de);
    let mut entries: Vec<CorpusAlgebra> = Vec::new();
    let mut push =
        |label: String, algebra: MatrixAlgebra| entries.push(CorpusAlgebra { label, algebra });

    if n <= 3 {
        for (k, a) in enumerate_unit_pattern_subalgebras(n)?
            .into_iter()
            .enumerate()
        {
            let c = sampler.invertible(n);
            let conjugated = a.conjugate(&c).expect("invertible");
            push(format!("pattern-{k}"), a);
            push(format!("pattern-{k}-conjugate"), conjugated);
        }
    } else {
        for comp in compositions(n) {
            let standard = parabolic_subalgebra(&comp);
            for t in 0..2 {
                let c = sampler.invertible(n);
                push(
                    format!("parabolic{comp}-conjugate-{t}"),
                    standard.conjugate(&c).expect("invertible"),
                );
            }
            push(format!("parabolic{comp}"), standard);
        }
        push("diagonal".into(), MatrixAlgebra::diagonal(n));
        push(
            "scalars".into(),
            MatrixAlgebra::closure(n, &[]).expect("empty"),
        );
    }
    push("commutative-extremal".into(), commutative_extremal(n));
    let closures = if n <= 3 { 16 } else { 24 };
    for (k, a) in random_closures(n, closures, 3, seed)
        .into_iter()
        .enumerate()
    {
        push(format!("closure-{k}"), a);
    }

    let mut seen = HashSet::new();
    entries.retain(|e| seen.insert(e.algebra.clone()));
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_counts_match_preorders() {
        // Transitive reflexive relations on n labelled points: 4 and 29.
        assert_eq!(enumerate_unit_pattern_subalgebras(2).unwrap().len(), 4);
        assert_eq!(enumerate_unit_pattern_subalgebras(3).unwrap().len(), 29);
        assert!(enumerate_unit_pattern_subalgebras(4).is_err());
    }

    #[test]
    fn n2_patterns() {
        let dims: Vec<usize> = enumerate_unit_pattern_subalgebras(2)
            .unwrap()
            .iter()
            .map(MatrixAlgebra::dim)
            .collect();
        assert_eq!(dims, vec![2, 3, 3, 4]);
    }

    #[test]
    fn n3_max_proper_dim() {
        let max = enumerate_unit_pattern_subalgebras(3)
            .unwrap()
            .iter()
            .filter(|a| a.is_proper())
            .map(MatrixAlgebra::dim)
            .max();
        assert_eq!(max, Some(7));
    }

    #[test]
    fn commutative_extremal_dims() {
        for n in 2..=5 {
            let a = commutative_extremal(n);
            assert!(a.is_commutative());
            assert_eq!(a.dim(), n * n / 4 + 1);
        }
    }

    #[test]
    fn corpus_is_deterministic() {
        let a = algebra_corpus(3, 5).unwrap();
        let b = algebra_corpus(3, 5).unwrap();
        assert_eq!(a.len(), b.len());
        assert!(a
            .iter()
            .zip(&b)
            .all(|(x, y)| x.algebra == y.algebra && x.label == y.label));
        assert!(algebra_corpus(5, 0).is_err());
    }

    #[test]
    fn subspace_patterns() {
        assert_eq!(unit_pattern_subspaces(2).unwrap().len(), 16);
        assert_eq!(unit_pattern_subspaces(3).unwrap().len(), 512);
    }
}
