//! Unital subalgebras of the matrix algebra `M_n(Q)`.
//!
//! A [`MatrixAlgebra`] is a subspace of the `n²`-dimensional matrix space
//! (row-major coordinates) that is closed under multiplication and contains
//! the identity. Besides construction by closure and conjugation, this module
//! hosts the structure theory: the radical and Wedderburn block sizes
//! ([`radical`], [`semisimple_blocks`]), invariant flags and parabolic
//! recognition ([`invariant_flag`], [`is_parabolic`]), and the dimension
//! extremal problems ([`optimal_composition`], [`absorption_probe`]).

mod flag;
mod poly;
mod wedderburn;

pub use flag::{flag_stabilizer, invariant_flag, is_parabolic, Flag, ParabolicCheck};
pub use poly::Polynomial;
pub(crate) use wedderburn::{generated_nilpotent, power_spaces};
pub use wedderburn::{
    radical, semisimple_blocks, semisimple_blocks_with, BlockSizes, WedderburnData,
    WedderburnOptions,
};

use crate::composition::{compositions, Composition};
use crate::exactlin::{LinalgError, RationalMatrix, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("expected a {expected}x{expected} matrix, got {rows}x{cols}")]
    Shape {
        expected: usize,
        rows: usize,
        cols: usize,
    },
    #[error("matrix size must be at least {min}, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("conjugating matrix is singular")]
    Singular,
    #[error("subspace is not closed under multiplication")]
    NotClosed,
    #[error("subspace does not contain the identity")]
    NotUnital,
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A unital subalgebra of `M_n(Q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatrixAlgebra {
    n: usize,
    space: Subspace,
    unital: bool,
}

fn check_shape(n: usize, m: &RationalMatrix) -> Result<(), AlgebraError> {
    if m.rows() == n && m.cols() == n {
        Ok(())
    } else {
        Err(AlgebraError::Shape {
            expected: n,
            rows: m.rows(),
            cols: m.cols(),
        })
    }
}

/// Smallest subspace containing `generators` (and the identity when
/// `unital`) that is closed under products.
pub fn span_closure(
    n: usize,
    generators: &[RationalMatrix],
    unital: bool,
) -> Result<Subspace, AlgebraError> {
    let mut space = Subspace::zero(n * n);
    let mut spanning: Vec<RationalMatrix> = Vec::new();
    let identity = RationalMatrix::identity(n);
    let seeds = unital.then_some(&identity).into_iter().chain(generators);
    for g in seeds {
        check_shape(n, g)?;
        if space.insert(g.coords())? {
            spanning.push(g.clone());
        }
    }
    // Products of every pair of spanning elements, new elements processed as
    // they arrive.
    let mut next = 0;
    while next < spanning.len() && !space.is_full() {
        let fresh = spanning[next].clone();
        for k in 0..=next {
            if space.is_full() {
                break;
            }
            let other = spanning[k].clone();
            for product in [&fresh * &other, &other * &fresh] {
                if space.insert(product.coords())? {
                    spanning.push(product);
                }
            }
        }
        next += 1;
    }
    Ok(space)
}

impl MatrixAlgebra {
    /// The smallest unital subalgebra containing `generators`.
    pub fn closure(n: usize, generators: &[RationalMatrix]) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::TooSmall { n, min: 1 });
        }
        let space = span_closure(n, generators, true)?;
        Ok(Self {
            n,
            space,
            unital: true,
        })
    }

    /// Wraps a subspace after checking closure and unitality on its basis.
    pub fn from_space(n: usize, space: Subspace) -> Result<Self, AlgebraError> {
        if space.ambient_dim() != n * n {
            return Err(LinalgError::DimensionMismatch {
                expected: n * n,
                found: space.ambient_dim(),
            }
            .into());
        }
        let algebra = Self {
            n,
            space,
            unital: true,
        };
        if !algebra.contains(&RationalMatrix::identity(n)) {
            return Err(AlgebraError::NotUnital);
        }
        if !algebra.is_closed() {
            return Err(AlgebraError::NotClosed);
        }
        Ok(algebra)
    }

    /// Trusted constructor for spaces that are algebras by construction.
    pub(crate) fn from_trusted(n: usize, space: Subspace) -> Self {
        debug_assert_eq!(space.ambient_dim(), n * n);
        Self {
            n,
            space,
            unital: true,
        }
    }

    pub fn full(n: usize) -> Self {
        Self::from_trusted(n, Subspace::full(n * n))
    }

    /// Span of the matrix units at the given zero-based positions.
    pub fn unit_span(n: usize, positions: impl IntoIterator<Item = (usize, usize)>) -> Subspace {
        let vectors = positions
            .into_iter()
            .map(|(i, j)| RationalMatrix::unit(n, i, j).into_coords())
            .collect();
        Subspace::from_vectors(vectors, n * n).expect("unit vectors have length n²")
    }

    pub fn diagonal(n: usize) -> Self {
        Self::from_trusted(n, Self::unit_span(n, (0..n).map(|i| (i, i))))
    }

    /// Upper triangular matrices `U_n`.
    pub fn upper_triangular(n: usize) -> Self {
        parabolic_subalgebra(&Composition::ones(n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_unital(&self) -> bool {
        self.unital
    }

    pub fn is_proper(&self) -> bool {
        self.dim() < self.n * self.n
    }

    pub fn basis_matrices(&self) -> Vec<RationalMatrix> {
        self.space
            .basis()
            .iter()
            .map(|v| RationalMatrix::from_coords(self.n, v).expect("basis vector of length n²"))
            .collect()
    }

    pub fn contains(&self, m: &RationalMatrix) -> bool {
        m.rows() == self.n && m.cols() == self.n && self.space.contains(m.coords()).unwrap_or(false)
    }

    /// Checks `b₁·b₂ ∈ A` for every pair of basis elements.
    pub fn is_closed(&self) -> bool {
        let basis = self.basis_matrices();
        basis
            .iter()
            .all(|a| basis.iter().all(|b| self.contains(&(a * b))))
    }

    pub fn is_commutative(&self) -> bool {
        let basis = self.basis_matrices();
        basis
            .iter()
            .enumerate()
            .all(|(i, a)| basis[i + 1..].iter().all(|b| a * b == b * a))
    }

    /// `C · A · C⁻¹`.
    pub fn conjugate(&self, c: &RationalMatrix) -> Result<Self, AlgebraError> {
        check_shape(self.n, c)?;
        let inverse = c.inverse().map_err(|_| AlgebraError::Singular)?;
        let vectors = self
            .basis_matrices()
            .iter()
            .map(|b| c.conjugate_with(&inverse, b).into_coords())
            .collect();
        let space = Subspace::from_vectors(vectors, self.n * self.n)?;
        Ok(Self::from_trusted(self.n, space))
    }
}

/// The standard block upper triangular algebra of type `comp`: the span of
/// `e_{i,j}` with `block(i) ≤ block(j)`.
pub fn parabolic_subalgebra(comp: &Composition) -> MatrixAlgebra {
    let n = comp.n();
    let block = comp.block_of();
    let positions = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| block[i] <= block[j]);
    MatrixAlgebra::from_trusted(n, MatrixAlgebra::unit_span(n, positions))
}

/// Closure of `a` together with `x`. For a maximal parabolic `a` and any
/// `x ∉ a` the result is all of `M_n`.
pub fn absorption_probe(
    a: &MatrixAlgebra,
    x: &RationalMatrix,
) -> Result<MatrixAlgebra, AlgebraError> {
    check_shape(a.n(), x)?;
    if a.contains(x) {
        return Ok(a.clone());
    }
    let mut generators = a.basis_matrices();
    generators.push(x.clone());
    MatrixAlgebra::closure(a.n(), &generators)
}

/// Maximum of `(n² + Σ n_i²)/2` over compositions with at least two parts,
/// with every composition attaining it.
pub fn optimal_composition(n: usize) -> Result<(Vec<Composition>, usize), AlgebraError> {
    if n < 2 {
        return Err(AlgebraError::TooSmall { n, min: 2 });
    }
    let mut best = 0;
    let mut argmax = Vec::new();
    for comp in compositions(n).into_iter().filter(|c| c.len() >= 2) {
        let d = comp.parabolic_dim();
        if d > best {
            best = d;
            argmax.clear();
        }
        if d == best {
            argmax.push(comp);
        }
    }
    Ok((argmax, best))
}

/// Outcome of the commutative dimension bound check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchurCheck {
    pub commutative: bool,
    /// `Some(dim ≤ ⌊n²/4⌋ + 1)` for commutative algebras, `None` otherwise.
    pub bound_holds: Option<bool>,
}

pub fn schur_bound(n: usize) -> usize {
    n * n / 4 + 1
}

pub fn schur_commutative_check(a: &MatrixAlgebra) -> SchurCheck {
    let commutative = a.is_commutative();
    SchurCheck {
        commutative,
        bound_holds: commutative.then(|| a.dim() <= schur_bound(a.n())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize, j: usize) -> RationalMatrix {
        RationalMatrix::unit(n, i - 1, j - 1)
    }

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn closure_of_nothing_is_scalars() {
        let a = MatrixAlgebra::closure(2, &[]).unwrap();
        assert_eq!(a.dim(), 1);
        assert!(a.contains(&RationalMatrix::identity(2)));
    }

    #[test]
    fn closure_of_off_diagonal_units_is_everything() {
        let a = MatrixAlgebra::closure(2, &[e(2, 1, 2), e(2, 2, 1)]).unwrap();
        assert_eq!(a.dim(), 4);
    }

    #[test]
    fn upper_units_are_already_closed() {
        let gens: Vec<_> = (1..=3)
            .flat_map(|i| (i..=3).map(move |j| e(3, i, j)))
            .collect();
        let a = MatrixAlgebra::closure(3, &gens).unwrap();
        assert_eq!(a.dim(), 6);
        assert_eq!(a, MatrixAlgebra::upper_triangular(3));
    }

    #[test]
    fn closure_rejects_wrong_shape() {
        assert!(matches!(
            MatrixAlgebra::closure(2, &[RationalMatrix::identity(3)]),
            Err(AlgebraError::Shape { .. })
        ));
    }

    #[test]
    fn from_space_validates() {
        let strictly_upper = MatrixAlgebra::unit_span(2, [(0, 1)]);
        assert_eq!(
            MatrixAlgebra::from_space(2, strictly_upper),
            Err(AlgebraError::NotUnital)
        );
        let everything = MatrixAlgebra::unit_span(2, [(0, 0), (1, 1), (0, 1), (1, 0)]);
        assert!(MatrixAlgebra::from_space(2, everything).is_ok());
        let bad = MatrixAlgebra::unit_span(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)]);
        assert_eq!(
            MatrixAlgebra::from_space(3, bad),
            Err(AlgebraError::NotClosed)
        );
    }

    #[test]
    fn conjugate_by_identity_is_noop() {
        let u = MatrixAlgebra::upper_triangular(3);
        assert_eq!(u.conjugate(&RationalMatrix::identity(3)).unwrap(), u);
    }

    #[test]
    fn conjugate_by_swap_gives_lower_triangular() {
        let swap = RationalMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        let lower = MatrixAlgebra::upper_triangular(2).conjugate(&swap).unwrap();
        let expected = MatrixAlgebra::unit_span(2, [(0, 0), (1, 0), (1, 1)]);
        assert_eq!(lower.space(), &expected);
    }

    #[test]
    fn conjugate_rejects_singular() {
        let singular = RationalMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(
            MatrixAlgebra::full(2).conjugate(&singular),
            Err(AlgebraError::Singular)
        );
    }

    #[test]
    fn parabolic_examples() {
        assert_eq!(parabolic_subalgebra(&comp(&[3])).dim(), 9);
        let p12 = parabolic_subalgebra(&comp(&[1, 2]));
        assert_eq!(p12.dim(), 7);
        assert!(!p12.contains(&e(3, 2, 1)));
        assert!(!p12.contains(&e(3, 3, 1)));
        assert!(p12.contains(&e(3, 3, 2)));
        assert!(p12.is_closed());
        for n in 1..=5 {
            assert_eq!(MatrixAlgebra::upper_triangular(n).dim(), n * (n + 1) / 2);
        }
    }

    #[test]
    fn absorption_of_lower_unit() {
        let p = parabolic_subalgebra(&comp(&[1, 2]));
        assert_eq!(absorption_probe(&p, &e(3, 2, 1)).unwrap().dim(), 9);
        assert_eq!(absorption_probe(&p, &e(3, 1, 3)).unwrap(), p);
    }

    #[test]
    fn optimal_examples() {
        let (args, d) = optimal_composition(3).unwrap();
        assert_eq!(d, 7);
        assert_eq!(args, vec![comp(&[1, 2]), comp(&[2, 1])]);
        assert_eq!(optimal_composition(2).unwrap(), (vec![comp(&[1, 1])], 3));
        let (args, d) = optimal_composition(8).unwrap();
        assert_eq!(d, 57);
        assert_eq!(args, vec![comp(&[1, 7]), comp(&[7, 1])]);
        assert!(optimal_composition(1).is_err());
    }

    #[test]
    fn schur_examples() {
        let diag = schur_commutative_check(&MatrixAlgebra::diagonal(3));
        assert_eq!(
            diag,
            SchurCheck {
                commutative: true,
                bound_holds: Some(true)
            }
        );
        let span = MatrixAlgebra::closure(2, &[e(2, 1, 2)]).unwrap();
        assert_eq!(span.dim(), 2);
        assert_eq!(schur_commutative_check(&span).bound_holds, Some(true));
        let u2 = schur_commutative_check(&MatrixAlgebra::upper_triangular(2));
        assert_eq!(
            u2,
            SchurCheck {
                commutative: false,
                bound_holds: None
            }
        );
    }
}
