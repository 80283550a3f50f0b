use num_traits::{One, Zero};

use super::{kernel_of_rows, reduce_rows, LinalgError, Scalar, Vector};

/// A subspace of `Q^ambient_dim` stored by its reduced row-echelon basis.
///
/// The basis is canonical: two subspaces are equal as sets exactly when
/// their bases (and hence the derived `PartialEq`) agree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Subspace")
            .field("ambient_dim", &self.ambient_dim)
            .field("dim", &self.dim())
            .field("pivots", &self.pivots)
            .finish()
    }
}

fn check_len(v: &[Scalar], dim: usize) -> Result<(), LinalgError> {
    if v.len() == dim {
        Ok(())
    } else {
        Err(LinalgError::DimensionMismatch {
            expected: dim,
            found: v.len(),
        })
    }
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![Scalar::zero(); ambient_dim];
                v[i] = Scalar::one();
                v
            })
            .collect();
        Self {
            ambient_dim,
            basis,
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Canonical span of `vectors`.
    pub fn from_vectors(mut vectors: Vec<Vector>, ambient_dim: usize) -> Result<Self, LinalgError> {
        for v in &vectors {
            check_len(v, ambient_dim)?;
        }
        let pivots = reduce_rows(&mut vectors, ambient_dim);
        vectors.truncate(pivots.len());
        Ok(Self {
            ambient_dim,
            basis: vectors,
            pivots,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection along the echelon basis; zero iff `v` is a member.
    fn residual(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let factor = r[p].clone();
            for (x, y) in r.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, LinalgError> {
        check_len(v, self.ambient_dim)?;
        Ok(self.residual(v).iter().all(Zero::is_zero))
    }

    /// Adds `v` to the subspace, keeping the basis canonical. Returns `true`
    /// when the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> Result<bool, LinalgError> {
        check_len(v, self.ambient_dim)?;
        let mut r = self.residual(v);
        let Some(pivot) = r.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = r[pivot].recip();
        for x in r.iter_mut().filter(|x| !x.is_zero()) {
            *x *= &inv;
        }
        for b in &mut self.basis {
            if b[pivot].is_zero() {
                continue;
            }
            let factor = b[pivot].clone();
            for (x, y) in b.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.basis.insert(at, r);
        Ok(true)
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinalgError> {
        self.same_ambient(other)?;
        let mut out = self.clone();
        for v in &other.basis {
            out.insert(v)?;
        }
        Ok(out)
    }

    /// Intersection, computed as the annihilator of the sum of annihilators.
    pub fn intersect(&self, other: &Self) -> Result<Self, LinalgError> {
        self.same_ambient(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// `{w : w · v = 0 for all v in self}` under the standard dot product.
    pub fn annihilator(&self) -> Self {
        kernel_of_rows(self.basis.clone(), self.ambient_dim)
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool, LinalgError> {
        self.same_ambient(other)?;
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn same_ambient(&self, other: &Self) -> Result<(), LinalgError> {
        if self.ambient_dim == other.ambient_dim {
            Ok(())
        } else {
            Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            })
        }
    }

    /// Standard basis vectors that, appended to this basis, give a basis of
    /// the ambient space (greedy, lowest index first).
    pub fn complement_units(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim).filter(|&i| !is_pivot[i]).collect()
    }
}

/// Coordinates with respect to a fixed list of linearly independent vectors.
#[derive(Debug, Clone)]
pub struct CoordinateSystem {
    ambient_dim: usize,
    len: usize,
    echelon: Vec<Vector>,
    pivots: Vec<usize>,
    transform: Vec<Vector>,
}

impl CoordinateSystem {
    pub fn new(vectors: &[Vector], ambient_dim: usize) -> Result<Self, LinalgError> {
        let k = vectors.len();
        let mut aug = Vec::with_capacity(k);
        for (i, v) in vectors.iter().enumerate() {
            check_len(v, ambient_dim)?;
            let mut row = v.clone();
            row.extend((0..k).map(|j| {
                if i == j {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            }));
            aug.push(row);
        }
        let pivots = reduce_rows(&mut aug, ambient_dim);
        if pivots.len() < k {
            return Err(LinalgError::Dependent);
        }
        let (echelon, transform) = aug
            .into_iter()
            .map(|mut row| {
                let t = row.split_off(ambient_dim);
                (row, t)
            })
            .unzip();
        Ok(Self {
            ambient_dim,
            len: k,
            echelon,
            pivots,
            transform,
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Coefficients `c` with `v = Σ c_i vectors[i]`, or `None` when `v` lies
    /// outside the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let mut coords = vec![Scalar::zero(); self.len];
        let mut residual = v.to_vec();
        for ((row, t), &p) in self.echelon.iter().zip(&self.transform).zip(&self.pivots) {
            let c = residual[p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, y) in residual.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &c * y;
                }
            }
            for (x, y) in coords.iter_mut().zip(t) {
                if !y.is_zero() {
                    *x += &c * y;
                }
            }
        }
        residual.iter().all(Zero::is_zero).then_some(coords)
    }
}
