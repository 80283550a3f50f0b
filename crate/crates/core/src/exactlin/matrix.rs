use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_traits::{One, Zero};

use super::scalar::{format_scalar, Scalar};
use super::{reduce_rows, LinalgError};

/// A dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// The matrix unit `e_{i,j}` (zero-based indices).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = Scalar::one();
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(LinalgError::DimensionMismatch {
                    expected: c,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self {
            rows: r,
            cols: c,
            data,
        })
    }

    /// Convenience constructor from integer rows.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| super::int(v)).collect())
                .collect(),
        )
        .expect("ragged integer matrix")
    }

    /// Reshapes a row-major coordinate vector of length `n²` into an `n × n`
    /// matrix. Coordinate `i·n + j` holds entry `(i, j)`.
    pub fn from_coords(n: usize, coords: &[Scalar]) -> Result<Self, LinalgError> {
        if coords.len() != n * n {
            return Err(LinalgError::DimensionMismatch {
                expected: n * n,
                found: coords.len(),
            });
        }
        Ok(Self {
            rows: n,
            cols: n,
            data: coords.to_vec(),
        })
    }

    /// Row-major flattening; inverse of [`RationalMatrix::from_coords`].
    pub fn coords(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.data
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn from_columns(columns: &[Vec<Scalar>]) -> Result<Self, LinalgError> {
        let c = columns.len();
        let r = columns.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (j, col) in columns.iter().enumerate() {
            if col.len() != r {
                return Err(LinalgError::DimensionMismatch {
                    expected: r,
                    found: col.len(),
                });
            }
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        Ok(m)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .fold(Scalar::zero(), |acc, v| acc + v)
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * k).collect(),
        }
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// `self^k` for square matrices; `self^0` is the identity.
    pub fn pow(&self, k: u32) -> Self {
        assert!(self.is_square(), "pow of a non-square matrix");
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.row_vecs();
        reduce_rows(&mut rows, self.cols).len()
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| {
                    if i == j {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    }
                }));
                r
            })
            .collect();
        let pivots = reduce_rows(&mut aug, n);
        if pivots.len() < n {
            return Err(LinalgError::Singular);
        }
        Self::from_rows(aug.into_iter().map(|r| r[n..].to_vec()).collect())
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// `self · x · self⁻¹` given the precomputed inverse.
    pub fn conjugate_with(&self, inverse: &Self, x: &Self) -> Self {
        &(self * x) * inverse
    }

    pub fn is_strictly_upper(&self) -> bool {
        (0..self.rows)
            .all(|i| (0..=i.min(self.cols.saturating_sub(1))).all(|j| self[(i, j)].is_zero()))
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;

    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.checked_mul(rhs)
            .expect("matrix product shape mismatch")
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;

    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "sum shape mismatch"
        );
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;

    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "difference shape mismatch"
        );
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(format_scalar).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(format_scalar).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let row: Vec<String> = cells[i * self.cols..(i + 1) * self.cols]
                .iter()
                .map(|c| format!("{c:>width$}"))
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, ratio};

    #[test]
    fn inverse_roundtrip() {
        let a = RationalMatrix::from_i64(&[&[2, 1, 0], &[0, 1, -1], &[1, 0, 3]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, RationalMatrix::identity(3));
        assert_eq!(&inv * &a, RationalMatrix::identity(3));
    }

    #[test]
    fn singular_has_no_inverse() {
        let a = RationalMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(a.inverse(), Err(LinalgError::Singular));
        assert!(!a.is_invertible());
    }

    #[test]
    fn coordinates_are_row_major() {
        let e12 = RationalMatrix::unit(3, 0, 1);
        let coords = e12.coords();
        assert_eq!(coords[1], int(1));
        assert_eq!(coords.iter().filter(|c| !c.is_zero()).count(), 1);
        assert_eq!(RationalMatrix::from_coords(3, coords).unwrap(), e12);
    }

    #[test]
    fn unit_products() {
        let e12 = RationalMatrix::unit(2, 0, 1);
        let e21 = RationalMatrix::unit(2, 1, 0);
        assert_eq!(&e12 * &e21, RationalMatrix::unit(2, 0, 0));
        assert_eq!(&e21 * &e12, RationalMatrix::unit(2, 1, 1));
        assert!((&e12 * &e12).is_zero());
    }

    #[test]
    fn trace_and_pow() {
        let a = RationalMatrix::from_rows(vec![vec![ratio(1, 2), int(1)], vec![int(0), int(2)]])
            .unwrap();
        assert_eq!(a.trace(), ratio(5, 2));
        assert_eq!(a.pow(2).trace(), ratio(17, 4));
        assert_eq!(a.pow(0), RationalMatrix::identity(2));
    }
}
