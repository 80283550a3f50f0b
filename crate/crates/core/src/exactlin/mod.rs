//! Exact linear algebra over the rationals: scalars, dense matrices, and
//! subspaces held in canonical reduced row-echelon form.
//!
//! Matrix space coordinates are fixed once for the whole crate: an `n × n`
//! matrix is flattened row-major, so the unit `e_{i,j}` (zero-based) sits at
//! coordinate `i·n + j`.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::RationalMatrix;
pub use scalar::{
    format_scalar, int, is_canonical, one, parse_scalar, ratio, zero, ParseScalarError, Scalar,
};
pub use subspace::{CoordinateSystem, Subspace};

use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("vectors are linearly dependent")]
    Dependent,
}

/// A coordinate vector.
pub type Vector = Vec<Scalar>;

/// In-place Gauss-Jordan elimination restricted to the first `pivot_cols`
/// columns. On return the leading rows are the pivot rows, ordered by pivot
/// column, each with a unit pivot and zeros above and below it; the returned
/// list holds the pivot columns. Entries right of `pivot_cols` are carried
/// along (augmented systems).
pub(crate) fn reduce_rows(rows: &mut [Vector], pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..pivot_cols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = rows[next][col].recip();
        if !inv.is_one() {
            for v in rows[next].iter_mut().filter(|v| !v.is_zero()) {
                *v *= &inv;
            }
        }
        let support: Vec<usize> = (0..rows[next].len())
            .filter(|&k| !rows[next][k].is_zero())
            .collect();
        let (before, rest) = rows.split_at_mut(next);
        let (pivot_row, after) = rest.split_first_mut().expect("pivot row present");
        for other in before.iter_mut().chain(after.iter_mut()) {
            if other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for &k in &support {
                let delta = &factor * &pivot_row[k];
                other[k] -= delta;
            }
        }
        pivots.push(col);
        next += 1;
    }
    pivots
}

/// Finds one exact solution of `coefficients · x = rhs`, or `None` when the
/// system is inconsistent.
pub fn solve_linear(
    coefficients: &RationalMatrix,
    rhs: &[Scalar],
) -> Result<Option<Vector>, LinalgError> {
    if rhs.len() != coefficients.rows() {
        return Err(LinalgError::DimensionMismatch {
            expected: coefficients.rows(),
            found: rhs.len(),
        });
    }
    let cols = coefficients.cols();
    let mut aug: Vec<Vector> = (0..coefficients.rows())
        .map(|i| {
            let mut r = coefficients.row(i).to_vec();
            r.push(rhs[i].clone());
            r
        })
        .collect();
    let pivots = reduce_rows(&mut aug, cols);
    if aug[pivots.len()..].iter().any(|r| !r[cols].is_zero()) {
        return Ok(None);
    }
    let mut x = vec![Scalar::zero(); cols];
    for (row, &p) in aug.iter().zip(&pivots) {
        x[p] = row[cols].clone();
    }
    Ok(Some(x))
}

/// The right kernel `{x : coefficients · x = 0}` as a canonical subspace.
pub fn kernel(coefficients: &RationalMatrix) -> Subspace {
    kernel_of_rows(coefficients.row_vecs(), coefficients.cols())
}

/// Kernel of the linear map whose matrix rows are `rows` (each of length `dim`).
pub fn kernel_of_rows(mut rows: Vec<Vector>, dim: usize) -> Subspace {
    let pivots = reduce_rows(&mut rows, dim);
    let mut basis = Vec::with_capacity(dim - pivots.len());
    let mut is_pivot = vec![false; dim];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for free in (0..dim).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Scalar::zero(); dim];
        v[free] = Scalar::one();
        for (row, &p) in rows.iter().zip(&pivots) {
            if !row[free].is_zero() {
                v[p] = -row[free].clone();
            }
        }
        basis.push(v);
    }
    Subspace::from_vectors(basis, dim).expect("kernel vectors have ambient length")
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_identity_system() {
        let x = solve_linear(&RationalMatrix::identity(2), &[int(3), int(5)])
            .unwrap()
            .unwrap();
        assert_eq!(x, vec![int(3), int(5)]);
    }

    #[test]
    fn solve_inconsistent_system() {
        let a = RationalMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(solve_linear(&a, &[int(0), int(1)]).unwrap(), None);
    }

    #[test]
    fn solve_diagonal_system() {
        let a = RationalMatrix::from_i64(&[&[2, 0], &[0, 4]]);
        let x = solve_linear(&a, &[int(1), int(2)]).unwrap().unwrap();
        assert_eq!(x, vec![ratio(1, 2), ratio(1, 2)]);
    }

    #[test]
    fn solve_underdetermined_returns_a_solution() {
        let a = RationalMatrix::from_i64(&[&[1, 2, 3]]);
        let x = solve_linear(&a, &[int(6)]).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x), vec![int(6)]);
    }

    #[test]
    fn solve_rejects_bad_rhs() {
        let a = RationalMatrix::identity(2);
        assert!(matches!(
            solve_linear(&a, &[int(1)]),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = RationalMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        let k = kernel(&a);
        assert_eq!(k.dim(), 1);
        assert_eq!(a.mul_vec(&k.basis()[0]), vec![int(0), int(0)]);
    }
}
