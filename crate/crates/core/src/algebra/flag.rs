//! Invariant flags, flag stabilizers, and parabolic recognition.
//!
//! A parabolic algebra is the stabilizer of a flag `0 ⊂ V_1 ⊂ ... ⊂ V_s = Q^n`.
//! Given an algebra `A`, the first member of its invariant flag is the common
//! kernel of `rad A`; the remaining members come from the same construction
//! applied to the action of `A` on the quotient space, lifted back.

use num_traits::Zero;

use super::wedderburn::radical;
use super::{parabolic_subalgebra, AlgebraError, MatrixAlgebra};
use crate::composition::Composition;
use crate::exactlin::{kernel_of_rows, RationalMatrix, Scalar, Subspace};

/// A strictly increasing chain of nonzero subspaces of `Q^n` ending at `Q^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    n: usize,
    subspaces: Vec<Subspace>,
}

impl Flag {
    pub fn new(n: usize, subspaces: Vec<Subspace>) -> Result<Self, AlgebraError> {
        let invalid = |msg: &str| Err(AlgebraError::Inconsistent(format!("invalid flag: {msg}")));
        match subspaces.last() {
            Some(last) if last.ambient_dim() == n && last.is_full() => {}
            _ => return invalid("last member must be the whole space"),
        }
        for s in &subspaces {
            if s.ambient_dim() != n || s.is_zero() {
                return invalid("members must be nonzero subspaces of Q^n");
            }
        }
        for w in subspaces.windows(2) {
            if w[0].dim() >= w[1].dim() || !w[0].is_subspace_of(&w[1])? {
                return invalid("inclusions must be strict");
            }
        }
        Ok(Self { n, subspaces })
    }

    /// `0 ⊂ Q^n`.
    pub fn trivial(n: usize) -> Self {
        Self {
            n,
            subspaces: vec![Subspace::full(n)],
        }
    }

    /// The coordinate flag with members spanned by the first `d` unit vectors
    /// for each `d` in `comp.flag_dims()`.
    pub fn standard(comp: &Composition) -> Self {
        let n = comp.n();
        let subspaces = comp
            .flag_dims()
            .into_iter()
            .map(|d| {
                let mut s = Subspace::zero(n);
                for i in 0..d {
                    let mut v = vec![Scalar::zero(); n];
                    v[i] = crate::exactlin::one();
                    s.insert(&v).expect("length n");
                }
                s
            })
            .collect();
        Self { n, subspaces }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn subspaces(&self) -> &[Subspace] {
        &self.subspaces
    }

    pub fn dims(&self) -> Vec<usize> {
        self.subspaces.iter().map(Subspace::dim).collect()
    }

    /// Successive dimension gaps as a composition of `n`.
    pub fn composition(&self) -> Composition {
        Composition::from_flag_dims(&self.dims()).expect("flag dims strictly increase")
    }

    /// Columns of a basis of `Q^n` adapted to the flag: the first
    /// `dim V_1` columns span `V_1`, the first `dim V_2` span `V_2`, and so on.
    pub fn adapted_basis(&self) -> RationalMatrix {
        let mut span = Subspace::zero(self.n);
        let mut columns = Vec::with_capacity(self.n);
        for member in &self.subspaces {
            for v in member.basis() {
                if span.insert(v).expect("length n") {
                    columns.push(v.clone());
                }
            }
        }
        RationalMatrix::from_columns(&columns).expect("n columns of length n")
    }
}

/// Flag members for the algebra spanned by `basis` acting on `Q^n`.
fn flag_members(n: usize, basis: Vec<RationalMatrix>) -> Result<Vec<Subspace>, AlgebraError> {
    let algebra = MatrixAlgebra::from_trusted(
        n,
        Subspace::from_vectors(basis.iter().map(|b| b.coords().to_vec()).collect(), n * n)?,
    );
    let rad = radical(&algebra)?;
    if rad.is_zero() {
        return Ok(vec![Subspace::full(n)]);
    }
    // Common kernel of the radical: stack the rows of every radical element.
    let rows: Vec<Vec<Scalar>> = rad
        .basis()
        .iter()
        .flat_map(|v| v.chunks(n).map(<[Scalar]>::to_vec).collect::<Vec<_>>())
        .collect();
    let first = kernel_of_rows(rows, n);
    let k = first.dim();
    if k == 0 || k == n {
        return Err(AlgebraError::Inconsistent(
            "common kernel of a nonzero nilpotent ideal must be proper and nonzero".into(),
        ));
    }
    let mut columns: Vec<Vec<Scalar>> = first.basis().to_vec();
    for i in first.complement_units() {
        let mut v = vec![Scalar::zero(); n];
        v[i] = crate::exactlin::one();
        columns.push(v);
    }
    let change = RationalMatrix::from_columns(&columns)?;
    let change_inv = change.inverse()?;
    let m = n - k;
    let induced: Vec<RationalMatrix> = basis
        .iter()
        .map(|b| {
            let c = &(&change_inv * b) * &change;
            let mut block = RationalMatrix::zeros(m, m);
            for i in 0..m {
                for j in 0..m {
                    block[(i, j)] = c[(k + i, k + j)].clone();
                }
            }
            block
        })
        .collect();
    let mut members = vec![first.clone()];
    for w in flag_members(m, induced)? {
        let mut lifted = first.clone();
        for wv in w.basis() {
            let mut v = vec![Scalar::zero(); n];
            for (t, coef) in wv.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                for (vi, ci) in v.iter_mut().zip(&columns[k + t]) {
                    *vi += coef * ci;
                }
            }
            lifted.insert(&v)?;
        }
        members.push(lifted);
    }
    Ok(members)
}

/// The flag `V_1 ⊂ V_2 ⊂ ... ⊂ Q^n` built from common kernels of radicals.
pub fn invariant_flag(a: &MatrixAlgebra) -> Result<Flag, AlgebraError> {
    let members = flag_members(a.n(), a.basis_matrices())?;
    Flag::new(a.n(), members)
}

/// `{x ∈ M_n : x·V ⊆ V for every member V}`.
pub fn flag_stabilizer(f: &Flag) -> MatrixAlgebra {
    let n = f.n();
    // x·v ∈ V  ⟺  w·x·v = 0 for every w in the annihilator of V.
    let mut rows = Vec::new();
    for member in f.subspaces() {
        let annihilator = member.annihilator();
        for w in annihilator.basis() {
            for v in member.basis() {
                let mut row = vec![Scalar::zero(); n * n];
                for (i, wi) in w.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    for (j, vj) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                        row[i * n + j] = wi * vj;
                    }
                }
                rows.push(row);
            }
        }
    }
    MatrixAlgebra::from_trusted(n, kernel_of_rows(rows, n * n))
}

/// Result of [`is_parabolic`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicCheck {
    pub is_parabolic: bool,
    pub composition: Option<Composition>,
    /// `C` with `C · A · C⁻¹` equal to the standard block upper algebra.
    pub witness: Option<RationalMatrix>,
}

/// Decides whether `a` is conjugate to a standard block upper triangular
/// algebra by comparing it with the stabilizer of its invariant flag.
///
/// The full algebra `M_n` is reported as parabolic of type `(n)`.
pub fn is_parabolic(a: &MatrixAlgebra) -> Result<ParabolicCheck, AlgebraError> {
    let flag = invariant_flag(a)?;
    let stabilizer = flag_stabilizer(&flag);
    let comp = flag.composition();
    if stabilizer.space() != a.space() || a.dim() != comp.parabolic_dim() {
        return Ok(ParabolicCheck {
            is_parabolic: false,
            composition: None,
            witness: None,
        });
    }
    let witness = flag.adapted_basis().inverse()?;
    let standard = parabolic_subalgebra(&comp);
    if a.conjugate(&witness)? != standard {
        return Err(AlgebraError::Inconsistent(
            "adapted basis does not conjugate onto the standard block algebra".into(),
        ));
    }
    Ok(ParabolicCheck {
        is_parabolic: true,
        composition: Some(comp),
        witness: Some(witness),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::Sampler;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn full_algebra_has_trivial_flag() {
        let f = invariant_flag(&MatrixAlgebra::full(3)).unwrap();
        assert_eq!(f, Flag::trivial(3));
        assert_eq!(f.dims(), vec![3]);
    }

    #[test]
    fn upper_triangular_has_full_flag() {
        let f = invariant_flag(&MatrixAlgebra::upper_triangular(3)).unwrap();
        assert_eq!(f.dims(), vec![1, 2, 3]);
        assert_eq!(f, Flag::standard(&Composition::ones(3)));
    }

    #[test]
    fn parabolic_one_two_flag() {
        let f = invariant_flag(&parabolic_subalgebra(&comp(&[1, 2]))).unwrap();
        assert_eq!(f.dims(), vec![1, 3]);
    }

    #[test]
    fn stabilizer_examples() {
        assert_eq!(flag_stabilizer(&Flag::trivial(3)), MatrixAlgebra::full(3));
        let line = Flag::standard(&comp(&[1, 1]));
        assert_eq!(flag_stabilizer(&line), MatrixAlgebra::upper_triangular(2));
        for n in 1..=5 {
            let full = Flag::standard(&Composition::ones(n));
            assert_eq!(flag_stabilizer(&full), MatrixAlgebra::upper_triangular(n));
        }
        let c = comp(&[2, 1, 2]);
        assert_eq!(
            flag_stabilizer(&Flag::standard(&c)),
            parabolic_subalgebra(&c)
        );
    }

    #[test]
    fn flag_validation() {
        assert!(Flag::new(2, vec![]).is_err());
        assert!(Flag::new(2, vec![Subspace::full(2), Subspace::full(2)]).is_err());
        assert!(Flag::new(2, vec![Subspace::zero(2), Subspace::full(2)]).is_err());
    }

    #[test]
    fn upper_triangular_is_parabolic() {
        for n in 2..=4 {
            let check = is_parabolic(&MatrixAlgebra::upper_triangular(n)).unwrap();
            assert!(check.is_parabolic);
            assert_eq!(check.composition, Some(Composition::ones(n)));
        }
    }

    #[test]
    fn conjugated_parabolic_round_trip() {
        let c = comp(&[2, 1]);
        let standard = parabolic_subalgebra(&c);
        let mut sampler = Sampler::new(11);
        for _ in 0..5 {
            let g = sampler.invertible(3);
            let conjugated = standard.conjugate(&g).unwrap();
            let check = is_parabolic(&conjugated).unwrap();
            assert!(check.is_parabolic);
            assert_eq!(check.composition.as_ref(), Some(&c));
            let witness = check.witness.unwrap();
            assert_eq!(conjugated.conjugate(&witness).unwrap(), standard);
        }
    }

    #[test]
    fn diagonal_is_not_parabolic() {
        let check = is_parabolic(&MatrixAlgebra::diagonal(3)).unwrap();
        assert!(!check.is_parabolic);
        assert_eq!(check.composition, None);
        assert!(invariant_flag(&MatrixAlgebra::diagonal(3)).unwrap() == Flag::trivial(3));
    }
}
