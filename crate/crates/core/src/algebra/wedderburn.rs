//! Radical and semisimple block structure of matrix algebras.
//!
//! The radical of an algebra of matrices over a field of characteristic zero
//! is the kernel of the trace form `(x, y) ↦ Tr(xy)`. The semisimple quotient
//! `A / rad A` is described by structure constants on a complement basis;
//! its block sizes come from the primitive central idempotents, which are
//! obtained from the minimal polynomial of a random central element.

use num_traits::{One, Zero};

use super::poly::Polynomial;
use super::{span_closure, AlgebraError, MatrixAlgebra};
use crate::exactlin::{kernel_of_rows, CoordinateSystem, RationalMatrix, Scalar, Subspace};
use crate::sampling::Sampler;

/// `Tr(a·b)` without forming the product.
fn trace_of_product(a: &RationalMatrix, b: &RationalMatrix) -> Scalar {
    let n = a.rows();
    let mut acc = Scalar::zero();
    for i in 0..n {
        for k in 0..n {
            let x = &a[(i, k)];
            if x.is_zero() {
                continue;
            }
            let y = &b[(k, i)];
            if !y.is_zero() {
                acc += x * y;
            }
        }
    }
    acc
}

/// Product space `span{x·y : x ∈ left, y ∈ right}`.
fn product_space(n: usize, left: &[RationalMatrix], right: &[RationalMatrix]) -> Subspace {
    let mut out = Subspace::zero(n * n);
    for x in left {
        for y in right {
            out.insert((x * y).coords()).expect("n×n product");
        }
    }
    out
}

fn matrices(n: usize, space: &Subspace) -> Vec<RationalMatrix> {
    space
        .basis()
        .iter()
        .map(|v| RationalMatrix::from_coords(n, v).expect("length n²"))
        .collect()
}

/// The powers `N, N², ...` of a subspace, stopping before the first zero
/// power (or after `n + 1` steps if the powers never vanish).
pub(crate) fn power_spaces(n: usize, generators: &Subspace) -> Vec<Subspace> {
    let base = matrices(n, generators);
    let mut out = Vec::new();
    let mut power = generators.clone();
    while !power.is_zero() && out.len() <= n {
        let next = product_space(n, &matrices(n, &power), &base);
        out.push(power);
        power = next;
    }
    out
}

/// Number of steps until the powers `N, N², ...` reach zero, or `None` when
/// they stabilize at a nonzero space within `limit` steps.
pub(crate) fn nilpotency_index(n: usize, generators: &Subspace, limit: usize) -> Option<usize> {
    let base = matrices(n, generators);
    let mut power = generators.clone();
    for k in 1..=limit + 1 {
        if power.is_zero() {
            return Some(k - 1);
        }
        power = product_space(n, &matrices(n, &power), &base);
    }
    None
}

/// The radical `{x ∈ A : Tr(x·b) = 0 for all b ∈ A}`.
///
/// The result is certified as a two-sided ideal whose powers vanish before
/// it is returned; a failed certificate is reported as
/// [`AlgebraError::Inconsistent`].
pub fn radical(a: &MatrixAlgebra) -> Result<Subspace, AlgebraError> {
    let n = a.n();
    let basis = a.basis_matrices();
    let gram: Vec<Vec<Scalar>> = basis
        .iter()
        .map(|x| basis.iter().map(|y| trace_of_product(x, y)).collect())
        .collect();
    let coefficients = kernel_of_rows(gram, basis.len());
    let mut rad = Subspace::zero(n * n);
    for c in coefficients.basis() {
        let mut x = vec![Scalar::zero(); n * n];
        for (coef, b) in c.iter().zip(&basis) {
            if coef.is_zero() {
                continue;
            }
            for (xi, bi) in x.iter_mut().zip(b.coords()) {
                if !bi.is_zero() {
                    *xi += coef * bi;
                }
            }
        }
        rad.insert(&x)?;
    }

    let rad_basis = matrices(n, &rad);
    for x in &rad_basis {
        for b in &basis {
            if !rad.contains((x * b).coords())? || !rad.contains((b * x).coords())? {
                return Err(AlgebraError::Inconsistent(
                    "trace-form kernel is not a two-sided ideal".into(),
                ));
            }
        }
    }
    if nilpotency_index(n, &rad, a.dim()).is_none() {
        return Err(AlgebraError::Inconsistent(
            "trace-form kernel is not nilpotent".into(),
        ));
    }
    Ok(rad)
}

/// Block sizes of the semisimple part, or the marker for a center that does
/// not split over Q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockSizes {
    /// Sizes `n_i` of the simple components, in ascending order.
    Split(Vec<usize>),
    NonSplit,
}

impl BlockSizes {
    pub fn sizes(&self) -> Option<&[usize]> {
        match self {
            Self::Split(s) => Some(s),
            Self::NonSplit => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedderburnData {
    pub radical_space: Subspace,
    pub radical_dim: usize,
    pub semisimple_dim: usize,
    pub block_sizes: BlockSizes,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WedderburnOptions {
    pub seed: u64,
    /// Random central elements tried before giving up on a generic one.
    pub retries: usize,
}

impl Default for WedderburnOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            retries: 8,
        }
    }
}

/// The semisimple quotient `A / rad A` as structure constants.
struct Quotient {
    dim: usize,
    /// `table[i][j]` = coordinates of `q_i · q_j`.
    table: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
}

impl Quotient {
    fn new(a: &MatrixAlgebra, rad: &Subspace) -> Result<Self, AlgebraError> {
        let n = a.n();
        let mut span = rad.clone();
        let mut complement = Vec::new();
        for v in a.space().basis() {
            if span.insert(v)? {
                complement.push(RationalMatrix::from_coords(n, v)?);
            }
        }
        let mut combined: Vec<Vec<Scalar>> = rad.basis().to_vec();
        combined.extend(complement.iter().map(|m| m.coords().to_vec()));
        let coords = CoordinateSystem::new(&combined, n * n)?;
        let r = rad.dim();
        let project = |m: &RationalMatrix| -> Result<Vec<Scalar>, AlgebraError> {
            let c = coords
                .coordinates(m.coords())
                .ok_or_else(|| AlgebraError::Inconsistent("product left the algebra".into()))?;
            Ok(c[r..].to_vec())
        };
        let table = complement
            .iter()
            .map(|x| complement.iter().map(|y| project(&(x * y))).collect())
            .collect::<Result<Vec<Vec<_>>, _>>()?;
        let unit = project(&RationalMatrix::identity(n))?;
        Ok(Self {
            dim: complement.len(),
            table,
            unit,
        })
    }

    fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let f = xi * yj;
                for (o, c) in out.iter_mut().zip(&self.table[i][j]) {
                    if !c.is_zero() {
                        *o += &f * c;
                    }
                }
            }
        }
        out
    }

    fn unit_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim];
        v[i] = Scalar::one();
        v
    }

    fn center(&self) -> Subspace {
        // z·q_i − q_i·z = 0 for every i, linear in z.
        let mut rows = Vec::new();
        for i in 0..self.dim {
            for k in 0..self.dim {
                rows.push(
                    (0..self.dim)
                        .map(|j| &self.table[j][i][k] - &self.table[i][j][k])
                        .collect(),
                );
            }
        }
        kernel_of_rows(rows, self.dim)
    }

    /// Monic minimal polynomial of `z` together with its degree.
    fn minimal_polynomial(&self, z: &[Scalar]) -> Result<Polynomial, AlgebraError> {
        let mut powers = vec![self.unit.clone()];
        loop {
            let next = self.mul(powers.last().expect("nonempty"), z);
            if let Ok(cs) = CoordinateSystem::new(&powers, self.dim) {
                if let Some(c) = cs.coordinates(&next) {
                    let mut coeffs: Vec<Scalar> = c.into_iter().map(|v| -v).collect();
                    coeffs.push(Scalar::one());
                    return Ok(Polynomial::new(coeffs));
                }
            }
            powers.push(next);
            if powers.len() > self.dim + 1 {
                return Err(AlgebraError::Inconsistent(
                    "minimal polynomial degree exceeds algebra dimension".into(),
                ));
            }
        }
    }

    /// `p(z)` evaluated in the quotient algebra.
    fn eval(&self, p: &Polynomial, z: &[Scalar]) -> Vec<Scalar> {
        let mut acc = vec![Scalar::zero(); self.dim];
        for c in p.coeffs().iter().rev() {
            acc = self.mul(&acc, z);
            for (a, u) in acc.iter_mut().zip(&self.unit) {
                *a += c * u;
            }
        }
        acc
    }
}

/// Tries one central element; `Ok(None)` asks for a retry.
fn blocks_from_central(
    quotient: &Quotient,
    center: &Subspace,
    sampler: &mut Sampler,
) -> Result<Option<BlockSizes>, AlgebraError> {
    let s = center.dim();
    let weights = sampler.coefficients(s);
    let mut z = vec![Scalar::zero(); quotient.dim];
    for (w, b) in weights.iter().zip(center.basis()) {
        for (zi, bi) in z.iter_mut().zip(b) {
            *zi += w * bi;
        }
    }
    let minpoly = quotient.minimal_polynomial(&z)?;
    if minpoly.degree() != Some(s) {
        // z does not generate the center.
        return Ok(None);
    }
    // z generates the center, so the center is Q[t]/(minpoly) and it splits
    // exactly when minpoly does.
    let Some(roots) = minpoly.split_roots() else {
        return Ok(Some(BlockSizes::NonSplit));
    };
    let mut sizes = Vec::with_capacity(s);
    for (i, root) in roots.iter().enumerate() {
        // e_i = Π_{j≠i} (z − λ_j) / (λ_i − λ_j)
        let mut lagrange = Polynomial::new(vec![Scalar::one()]);
        for (j, other) in roots.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = (root - other).recip();
            let factor = Polynomial::new(vec![-other * &denom, denom]);
            lagrange = poly_mul(&lagrange, &factor);
        }
        let idempotent = quotient.eval(&lagrange, &z);
        let mut ideal = Subspace::zero(quotient.dim);
        for k in 0..quotient.dim {
            ideal.insert(&quotient.mul(&idempotent, &quotient.unit_vector(k)))?;
        }
        let d = ideal.dim();
        let root_d = (d as f64).sqrt().round() as usize;
        if root_d * root_d != d {
            return Err(AlgebraError::Inconsistent(format!(
                "simple component of dimension {d} is not a square"
            )));
        }
        sizes.push(root_d);
    }
    sizes.sort_unstable();
    Ok(Some(BlockSizes::Split(sizes)))
}

fn poly_mul(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() || b.is_zero() {
        return Polynomial::new(Vec::new());
    }
    let mut out = vec![Scalar::zero(); a.coeffs().len() + b.coeffs().len() - 1];
    for (i, x) in a.coeffs().iter().enumerate() {
        for (j, y) in b.coeffs().iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    Polynomial::new(out)
}

pub fn semisimple_blocks(a: &MatrixAlgebra) -> Result<WedderburnData, AlgebraError> {
    semisimple_blocks_with(a, &WedderburnOptions::default())
}

/// Radical, semisimple dimension and block sizes `n_i` with
/// `Σ n_i² = dim A − dim rad A`.
///
/// A component that is central simple over Q but not a full matrix algebra
/// (a quaternion algebra, say) is reported by its size over the algebraic
/// closure, which is what the dimension bounds use.
pub fn semisimple_blocks_with(
    a: &MatrixAlgebra,
    options: &WedderburnOptions,
) -> Result<WedderburnData, AlgebraError> {
    let rad = radical(a)?;
    let quotient = Quotient::new(a, &rad)?;
    let center = quotient.center();
    let mut sampler = Sampler::new(options.seed);
    let mut block_sizes = BlockSizes::NonSplit;
    for _ in 0..options.retries.max(1) {
        if let Some(found) = blocks_from_central(&quotient, &center, &mut sampler)? {
            block_sizes = found;
            break;
        }
    }
    if let BlockSizes::Split(sizes) = &block_sizes {
        let total: usize = sizes.iter().map(|s| s * s).sum();
        if total != quotient.dim {
            return Err(AlgebraError::Inconsistent(format!(
                "block sizes {sizes:?} do not fill the semisimple part of dimension {}",
                quotient.dim
            )));
        }
    }
    Ok(WedderburnData {
        radical_dim: rad.dim(),
        radical_space: rad,
        semisimple_dim: quotient.dim,
        block_sizes,
    })
}

/// The non-unital algebra generated by `generators`, and whether it is nilpotent.
pub(crate) fn generated_nilpotent(
    n: usize,
    generators: &[RationalMatrix],
) -> Result<(Subspace, bool), AlgebraError> {
    let space = span_closure(n, generators, false)?;
    let nilpotent = nilpotency_index(n, &space, n).is_some();
    Ok((space, nilpotent))
}

/// `Tr(x·b) = 0` for every `b`, computed as a dot product with `xᵀ`.
#[cfg(test)]
pub(crate) fn trace_orthogonal(x: &RationalMatrix, basis: &[RationalMatrix]) -> bool {
    basis
        .iter()
        .all(|b| crate::exactlin::dot(&x.transpose().into_coords(), b.coords()).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parabolic_subalgebra;
    use crate::composition::Composition;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn full_algebra_is_semisimple() {
        for n in 1..=4 {
            assert!(radical(&MatrixAlgebra::full(n)).unwrap().is_zero());
        }
        let data = semisimple_blocks(&MatrixAlgebra::full(3)).unwrap();
        assert_eq!(data.radical_dim, 0);
        assert_eq!(data.block_sizes, BlockSizes::Split(vec![3]));
    }

    #[test]
    fn radical_of_upper_two() {
        let rad = radical(&MatrixAlgebra::upper_triangular(2)).unwrap();
        assert_eq!(rad, MatrixAlgebra::unit_span(2, [(0, 1)]));
    }

    #[test]
    fn radical_of_parabolic_one_two() {
        let p = parabolic_subalgebra(&comp(&[1, 2]));
        let rad = radical(&p).unwrap();
        assert_eq!(rad, MatrixAlgebra::unit_span(3, [(0, 1), (0, 2)]));
        // Brute-force oracle: every radical element is trace-orthogonal to A.
        let basis = p.basis_matrices();
        for v in rad.basis() {
            let x = RationalMatrix::from_coords(3, v).unwrap();
            assert!(trace_orthogonal(&x, &basis));
        }
    }

    #[test]
    fn diagonal_blocks() {
        let data = semisimple_blocks(&MatrixAlgebra::diagonal(3)).unwrap();
        assert_eq!(data.radical_dim, 0);
        assert_eq!(data.block_sizes, BlockSizes::Split(vec![1, 1, 1]));
    }

    #[test]
    fn parabolic_blocks() {
        let data = semisimple_blocks(&parabolic_subalgebra(&comp(&[1, 2]))).unwrap();
        assert_eq!(data.radical_dim, 2);
        assert_eq!(data.semisimple_dim, 5);
        assert_eq!(data.block_sizes, BlockSizes::Split(vec![1, 2]));
        let data = semisimple_blocks(&parabolic_subalgebra(&comp(&[2, 1, 2]))).unwrap();
        assert_eq!(data.block_sizes, BlockSizes::Split(vec![1, 2, 2]));
        assert_eq!(data.radical_dim + 9, 25 - 8);
    }

    #[test]
    fn gaussian_rationals_do_not_split() {
        // Q[J] with J² = −I is the field Q(i): semisimple with a non-split center.
        let j = RationalMatrix::from_i64(&[&[0, -1], &[1, 0]]);
        let a = MatrixAlgebra::closure(2, &[j]).unwrap();
        let data = semisimple_blocks(&a).unwrap();
        assert_eq!(data.radical_dim, 0);
        assert_eq!(data.block_sizes, BlockSizes::NonSplit);
    }

    #[test]
    fn nilpotent_jordan_block() {
        let mut jordan = RationalMatrix::zeros(3, 3);
        jordan[(0, 1)] = Scalar::one();
        jordan[(1, 2)] = Scalar::one();
        let a = MatrixAlgebra::closure(3, &[jordan]).unwrap();
        let data = semisimple_blocks(&a).unwrap();
        assert_eq!(data.radical_dim, 2);
        assert_eq!(data.block_sizes, BlockSizes::Split(vec![1]));
    }

    #[test]
    fn generated_algebra_of_strict_upper_is_nilpotent() {
        let gens = vec![RationalMatrix::unit(3, 0, 1), RationalMatrix::unit(3, 1, 2)];
        let (space, nil) = generated_nilpotent(3, &gens).unwrap();
        assert_eq!(space.dim(), 3);
        assert!(nil);
        let gens = vec![RationalMatrix::unit(2, 0, 1), RationalMatrix::unit(2, 1, 0)];
        assert!(!generated_nilpotent(2, &gens).unwrap().1);
    }
}
