//! The matrix coalgebra `M^n(Q)` and its coideals.
//!
//! `M^n(Q)` shares its underlying space and coordinates with `M_n(Q)`, with
//! `Δ(e_{i,j}) = Σ_k e_{i,k} ⊗ e_{k,j}` and `ε(e_{i,j}) = δ_{i,j}`. Tensors
//! live in the `n⁴`-dimensional space where the pair of matrix coordinates
//! `(a, b)` maps to `a·n² + b`.
//!
//! The annihilator pairing is the dual-basis one,
//! `⟨e_{i,j}, e_{k,l}⟩ = δ_{i,k} δ_{j,l}`, i.e. `⟨A, B⟩ = Tr(A·Bᵀ)`.

use num_traits::{One, Zero};

use crate::composition::Composition;
use crate::exactlin::{LinalgError, RationalMatrix, Scalar, Subspace};
use crate::nilpotent::{matrix_size, NilError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoidealError {
    #[error("ambient dimension {0} is not a perfect square")]
    NotMatrixSpace(usize),
    #[error("counit does not vanish on {element:?}")]
    Counit { element: RationalMatrix },
    #[error("comultiplication of {element:?} leaves X⊗C + C⊗X")]
    Comultiplication { element: RationalMatrix },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

impl From<NilError> for CoidealError {
    fn from(e: NilError) -> Self {
        match e {
            NilError::NotMatrixSpace(d) => Self::NotMatrixSpace(d),
            other => unreachable!("matrix_size only reports shape errors: {other}"),
        }
    }
}

/// Which coideal axiom a rejected subspace violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Counit,
    Comultiplication,
}

impl CoidealError {
    pub fn failed_axiom(&self) -> Option<Axiom> {
        match self {
            Self::Counit { .. } => Some(Axiom::Counit),
            Self::Comultiplication { .. } => Some(Axiom::Comultiplication),
            _ => None,
        }
    }
}

/// An element of `M^n(Q)` in the `e_{i,j}` basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalgebraElement {
    n: usize,
    coefficients: Vec<Scalar>,
}

impl CoalgebraElement {
    pub fn new(n: usize, coefficients: Vec<Scalar>) -> Result<Self, LinalgError> {
        if coefficients.len() != n * n {
            return Err(LinalgError::DimensionMismatch {
                expected: n * n,
                found: coefficients.len(),
            });
        }
        Ok(Self { n, coefficients })
    }

    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        Self {
            n,
            coefficients: RationalMatrix::unit(n, i, j).into_coords(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coefficients
    }
}

/// `Δ(x)` in tensor coordinates together with `ε(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comultiplied {
    pub tensor: Vec<Scalar>,
    pub counit: Scalar,
}

pub fn counit(x: &CoalgebraElement) -> Scalar {
    (0..x.n)
        .map(|i| &x.coefficients[i * x.n + i])
        .fold(Scalar::zero(), |acc, v| acc + v)
}

pub fn comultiply(x: &CoalgebraElement) -> Comultiplied {
    let n = x.n;
    let m = n * n;
    let mut tensor = vec![Scalar::zero(); m * m];
    for i in 0..n {
        for j in 0..n {
            let c = &x.coefficients[i * n + j];
            if c.is_zero() {
                continue;
            }
            for k in 0..n {
                tensor[(i * n + k) * m + (k * n + j)] += c;
            }
        }
    }
    Comultiplied {
        tensor,
        counit: counit(x),
    }
}

/// `(ε ⊗ id)(t)` for a tensor `t` in `M^n ⊗ M^n`.
pub fn counit_left(n: usize, tensor: &[Scalar]) -> Vec<Scalar> {
    let m = n * n;
    let mut out = vec![Scalar::zero(); m];
    for i in 0..n {
        let a = i * n + i;
        for (b, o) in out.iter_mut().enumerate() {
            *o += &tensor[a * m + b];
        }
    }
    out
}

/// `(id ⊗ ε)(t)`.
pub fn counit_right(n: usize, tensor: &[Scalar]) -> Vec<Scalar> {
    let m = n * n;
    let mut out = vec![Scalar::zero(); m];
    for (a, o) in out.iter_mut().enumerate() {
        for i in 0..n {
            *o += &tensor[a * m + i * n + i];
        }
    }
    out
}

/// `x ⊗ y` in tensor coordinates.
pub fn tensor_product(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); x.len() * y.len()];
    for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
        for (b, yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            out[a * y.len() + b] = xa * yb;
        }
    }
    out
}

/// A subspace of `M^n(Q)` certified to satisfy `ε(X) = 0` and
/// `Δ(X) ⊆ X⊗C + C⊗X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coideal {
    n: usize,
    space: Subspace,
    certified: bool,
}

impl Coideal {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }
}

/// `X⊗C + C⊗X`, spanned by `x⊗e_b` for all `b` together with `e_a⊗x` for
/// the unit vectors `e_a` completing a basis of `X` to one of `C`.
fn coideal_tensor_space(n: usize, s: &Subspace) -> Result<Subspace, LinalgError> {
    let m = n * n;
    let unit = |a: usize| {
        let mut e = vec![Scalar::zero(); m];
        e[a] = Scalar::one();
        e
    };
    let mut vectors = Vec::new();
    for x in s.basis() {
        for b in 0..m {
            vectors.push(tensor_product(x, &unit(b)));
        }
        for a in s.complement_units() {
            vectors.push(tensor_product(&unit(a), x));
        }
    }
    Subspace::from_vectors(vectors, m * m)
}

/// Certifies `s` as a coideal by checking both axioms on its basis.
pub fn is_coideal(s: &Subspace) -> Result<Coideal, CoidealError> {
    let n = matrix_size(s.ambient_dim())?;
    let elements: Vec<CoalgebraElement> = s
        .basis()
        .iter()
        .map(|v| CoalgebraElement::new(n, v.clone()))
        .collect::<Result<_, _>>()?;
    let as_matrix =
        |x: &CoalgebraElement| RationalMatrix::from_coords(n, x.coefficients()).expect("length n²");
    for x in &elements {
        if !counit(x).is_zero() {
            return Err(CoidealError::Counit {
                element: as_matrix(x),
            });
        }
    }
    if !elements.is_empty() {
        let target = coideal_tensor_space(n, s)?;
        for x in &elements {
            if !target.contains(&comultiply(x).tensor)? {
                return Err(CoidealError::Comultiplication {
                    element: as_matrix(x),
                });
            }
        }
    }
    Ok(Coideal {
        n,
        space: s.clone(),
        certified: true,
    })
}

/// Annihilator of `s` under the dual-basis pairing.
pub fn perp(s: &Subspace) -> Subspace {
    s.annihilator()
}

/// Span of `e_{i,j}` with `block(i) > block(j)`: the annihilator of the
/// standard parabolic algebra of the same type, certified as a coideal.
pub fn parabolic_coideal(comp: &Composition) -> Result<Coideal, CoidealError> {
    let n = comp.n();
    let block = comp.block_of();
    let vectors = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| block[i] > block[j])
        .map(|(i, j)| RationalMatrix::unit(n, i, j).into_coords())
        .collect();
    is_coideal(&Subspace::from_vectors(vectors, n * n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parabolic_subalgebra, MatrixAlgebra};
    use crate::exactlin::int;
    use crate::sampling::Sampler;

    fn tensor_index(n: usize, (i, j): (usize, usize), (k, l): (usize, usize)) -> usize {
        (i * n + j) * n * n + (k * n + l)
    }

    #[test]
    fn comultiply_e12() {
        let d = comultiply(&CoalgebraElement::unit(2, 0, 1));
        assert_eq!(d.counit, int(0));
        let nonzero: Vec<usize> = (0..16).filter(|&t| !d.tensor[t].is_zero()).collect();
        assert_eq!(
            nonzero,
            vec![
                tensor_index(2, (0, 0), (0, 1)),
                tensor_index(2, (0, 1), (1, 1))
            ]
        );
    }

    #[test]
    fn counit_on_diagonal_unit() {
        assert_eq!(counit(&CoalgebraElement::unit(3, 0, 0)), int(1));
        assert_eq!(counit(&CoalgebraElement::unit(3, 1, 2)), int(0));
    }

    #[test]
    fn counit_laws() {
        let mut sampler = Sampler::new(2);
        for n in 1..=3 {
            let x = CoalgebraElement::new(n, sampler.matrix(n).into_coords()).unwrap();
            let d = comultiply(&x);
            assert_eq!(counit_left(n, &d.tensor), x.coefficients());
            assert_eq!(counit_right(n, &d.tensor), x.coefficients());
        }
    }

    #[test]
    fn lower_unit_is_coideal() {
        let s = MatrixAlgebra::unit_span(2, [(1, 0)]);
        let c = is_coideal(&s).unwrap();
        assert!(c.is_certified());
        assert_eq!(c.dim(), 1);
    }

    #[test]
    fn diagonal_unit_fails_counit() {
        let s = MatrixAlgebra::unit_span(2, [(0, 0)]);
        let err = is_coideal(&s).unwrap_err();
        assert_eq!(err.failed_axiom(), Some(Axiom::Counit));
    }

    #[test]
    fn comultiplication_failure() {
        // Δ(e₁₂) has the term e₁₃ ⊗ e₃₂ with neither factor in X.
        let s = MatrixAlgebra::unit_span(3, [(0, 1)]);
        let err = is_coideal(&s).unwrap_err();
        assert_eq!(err.failed_axiom(), Some(Axiom::Comultiplication));
    }

    #[test]
    fn zero_is_coideal() {
        assert!(is_coideal(&Subspace::zero(9)).unwrap().is_certified());
    }

    #[test]
    fn perp_examples() {
        assert!(perp(&Subspace::full(9)).is_zero());
        let u2 = MatrixAlgebra::upper_triangular(2);
        assert_eq!(perp(u2.space()), MatrixAlgebra::unit_span(2, [(1, 0)]));
        let mut sampler = Sampler::new(4);
        for d in 0..=9 {
            let vectors = (0..d).map(|_| sampler.matrix(3).into_coords()).collect();
            let s = Subspace::from_vectors(vectors, 9).unwrap();
            assert_eq!(perp(&s).dim(), 9 - s.dim());
            assert_eq!(perp(&perp(&s)), s);
        }
    }

    #[test]
    fn parabolic_coideal_examples() {
        let c = parabolic_coideal(&Composition::new(vec![1, 2]).unwrap()).unwrap();
        assert_eq!(c.space(), &MatrixAlgebra::unit_span(3, [(1, 0), (2, 0)]));
        assert_eq!(c.dim(), 2);
        assert!(parabolic_coideal(&Composition::new(vec![3]).unwrap())
            .unwrap()
            .space()
            .is_zero());
        for n in 1..=4 {
            let ones = Composition::ones(n);
            let c = parabolic_coideal(&ones).unwrap();
            assert_eq!(c.dim(), n * (n - 1) / 2);
            assert_eq!(c.space(), &perp(parabolic_subalgebra(&ones).space()));
        }
    }
}
