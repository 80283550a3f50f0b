//! Nil subspaces of `M_n(Q)`: certification, witness search and
//! triangularization.
//!
//! Over a field of characteristic zero a matrix `x` is nilpotent iff
//! `Tr(x^k) = 0` for `k = 1..n`. For a subspace with basis `b_1..b_d` the
//! generic element is `S(λ) = Σ λ_i b_i`; the subspace is nil exactly when
//! every polynomial `Tr(S(λ)^k)` vanishes identically.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{generated_nilpotent, power_spaces, AlgebraError};
use crate::exactlin::{int, kernel_of_rows, RationalMatrix, Scalar, Subspace};
use crate::sampling::Sampler;

/// Default cap on `dim^n`, the size of the symbolic expansion.
pub const DEFAULT_TERM_BUDGET: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NilError {
    #[error("ambient dimension {0} is not a perfect square")]
    NotMatrixSpace(usize),
    #[error("generated algebra is not nilpotent; no triangularizing basis exists")]
    NotTriangularizable,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NilVerdict {
    AllNilpotent,
    WitnessFound,
    Undetermined,
}

/// Summary of the expansion of `Tr(S(λ)^k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerReport {
    pub power: usize,
    pub monomials: usize,
    pub nonzero_coefficients: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilCertificate {
    pub verdict: NilVerdict,
    pub witness: Option<RationalMatrix>,
    pub checked_powers: Vec<PowerReport>,
}

pub(crate) fn matrix_size(ambient_dim: usize) -> Result<usize, NilError> {
    let n = (ambient_dim as f64).sqrt().round() as usize;
    if n * n == ambient_dim && n > 0 {
        Ok(n)
    } else {
        Err(NilError::NotMatrixSpace(ambient_dim))
    }
}

fn basis_matrices(n: usize, s: &Subspace) -> Vec<RationalMatrix> {
    s.basis()
        .iter()
        .map(|v| RationalMatrix::from_coords(n, v).expect("length n²"))
        .collect()
}

fn combination(n: usize, basis: &[RationalMatrix], weights: &[Scalar]) -> RationalMatrix {
    basis
        .iter()
        .zip(weights)
        .filter(|(_, w)| !w.is_zero())
        .fold(RationalMatrix::zeros(n, n), |acc, (b, w)| {
            &acc + &b.scale(w)
        })
}

/// Smallest `k ≤ n` with `Tr(x^k) ≠ 0`, if any.
pub fn nonzero_trace_power(x: &RationalMatrix) -> Option<usize> {
    let n = x.rows();
    let mut power = x.clone();
    for k in 1..=n {
        if !power.trace().is_zero() {
            return Some(k);
        }
        power = &power * x;
    }
    None
}

/// Monomial λ^α stored as the sorted multiset of variable indices.
type Monomial = Vec<usize>;

fn eval_trace_poly(poly: &BTreeMap<Monomial, Scalar>, point: &[Scalar]) -> Scalar {
    poly.iter().fold(Scalar::zero(), |acc, (mono, c)| {
        acc + mono.iter().fold(c.clone(), |t, &i| t * &point[i])
    })
}

/// A point where the nonzero polynomial `poly` (total degree `degree`) does
/// not vanish. The grid `{0..=degree}^d` always contains one.
fn nonvanishing_point(
    poly: &BTreeMap<Monomial, Scalar>,
    d: usize,
    degree: usize,
    seed: u64,
) -> Vec<Scalar> {
    let ones = vec![int(1); d];
    if !eval_trace_poly(poly, &ones).is_zero() {
        return ones;
    }
    for i in 0..d {
        let mut e = vec![int(0); d];
        e[i] = int(1);
        if !eval_trace_poly(poly, &e).is_zero() {
            return e;
        }
    }
    let mut sampler = Sampler::new(seed);
    for _ in 0..64 {
        let p = sampler.coefficients(d);
        if !eval_trace_poly(poly, &p).is_zero() {
            return p;
        }
    }
    let base = degree + 1;
    let mut digits = vec![0usize; d];
    loop {
        let p: Vec<Scalar> = digits.iter().map(|&v| int(v as i64)).collect();
        if !eval_trace_poly(poly, &p).is_zero() {
            return p;
        }
        let mut i = 0;
        loop {
            assert!(i < d, "nonzero polynomial vanished on the whole grid");
            digits[i] += 1;
            if digits[i] < base {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Decides whether every element of `s` is nilpotent by expanding
/// `Tr(S(λ)^k)` symbolically for `k = 1..n`.
///
/// When `dim(s)^n` exceeds `budget` the verdict is
/// [`NilVerdict::Undetermined`]; use [`nonnil_witness_search`] instead.
pub fn is_nil_subspace(s: &Subspace, budget: usize) -> Result<NilCertificate, NilError> {
    let n = matrix_size(s.ambient_dim())?;
    let d = s.dim();
    let terms = (d as u128).saturating_pow(n as u32);
    if terms > budget as u128 {
        return Ok(NilCertificate {
            verdict: NilVerdict::Undetermined,
            witness: None,
            checked_powers: Vec::new(),
        });
    }
    let basis = basis_matrices(n, s);
    let mut checked_powers = Vec::with_capacity(n);
    // Coefficient matrices of S(λ)^k, keyed by monomial.
    let mut power: BTreeMap<Monomial, RationalMatrix> = BTreeMap::new();
    power.insert(Vec::new(), RationalMatrix::identity(n));
    for k in 1..=n {
        if d == 0 {
            break;
        }
        let mut next: BTreeMap<Monomial, RationalMatrix> = BTreeMap::new();
        for (mono, m) in &power {
            for (i, b) in basis.iter().enumerate() {
                let mut key = mono.clone();
                let at = key.partition_point(|&v| v <= i);
                key.insert(at, i);
                let product = m * b;
                next.entry(key)
                    .and_modify(|acc| *acc = &*acc + &product)
                    .or_insert(product);
            }
        }
        power = next;
        let trace_poly: BTreeMap<Monomial, Scalar> = power
            .iter()
            .map(|(mono, m)| (mono.clone(), m.trace()))
            .filter(|(_, t)| !t.is_zero())
            .collect();
        checked_powers.push(PowerReport {
            power: k,
            monomials: power.len(),
            nonzero_coefficients: trace_poly.len(),
        });
        if !trace_poly.is_empty() {
            let point = nonvanishing_point(&trace_poly, d, k, k as u64);
            let witness = combination(n, &basis, &point);
            debug_assert!(!witness.pow(k as u32).trace().is_zero());
            return Ok(NilCertificate {
                verdict: NilVerdict::WitnessFound,
                witness: Some(witness),
                checked_powers,
            });
        }
    }
    Ok(NilCertificate {
        verdict: NilVerdict::AllNilpotent,
        witness: None,
        checked_powers,
    })
}

/// Samples random small-integer combinations of the basis of `s` and
/// returns the first that is not nilpotent.
pub fn nonnil_witness_search(
    s: &Subspace,
    seed: u64,
    trials: usize,
) -> Result<Option<RationalMatrix>, NilError> {
    let n = matrix_size(s.ambient_dim())?;
    if s.is_zero() {
        return Ok(None);
    }
    let basis = basis_matrices(n, s);
    let mut sampler = Sampler::new(seed);
    for _ in 0..trials {
        let x = combination(n, &basis, &sampler.coefficients(basis.len()));
        if nonzero_trace_power(&x).is_some() {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Finds `C` with `C·x·C⁻¹` strictly upper triangular for every `x ∈ s`.
///
/// Succeeds exactly when the associative algebra generated by `s` is
/// nilpotent; the flag `V_k = ker N^k` is refined to a full flag and the
/// result is checked on every basis element before it is returned.
pub fn triangularize_nil(s: &Subspace) -> Result<RationalMatrix, NilError> {
    let n = matrix_size(s.ambient_dim())?;
    let basis = basis_matrices(n, s);
    let (generated, nilpotent) = generated_nilpotent(n, &basis)?;
    if !nilpotent {
        return Err(NilError::NotTriangularizable);
    }
    let mut span = Subspace::zero(n);
    let mut columns: Vec<Vec<Scalar>> = Vec::with_capacity(n);
    for power in power_spaces(n, &generated) {
        let rows: Vec<Vec<Scalar>> = power
            .basis()
            .iter()
            .flat_map(|v| v.chunks(n).map(<[Scalar]>::to_vec).collect::<Vec<_>>())
            .collect();
        for v in kernel_of_rows(rows, n).basis() {
            if span.insert(v).map_err(AlgebraError::from)? {
                columns.push(v.clone());
            }
        }
    }
    // The last member, ker N^m = Q^n.
    for i in 0..n {
        let mut e = vec![Scalar::zero(); n];
        e[i] = int(1);
        if span.insert(&e).map_err(AlgebraError::from)? {
            columns.push(e);
        }
    }
    let adapted = RationalMatrix::from_columns(&columns).map_err(AlgebraError::from)?;
    let conjugator = adapted.inverse().map_err(AlgebraError::from)?;
    for b in &basis {
        if !conjugator.conjugate_with(&adapted, b).is_strictly_upper() {
            return Err(AlgebraError::Inconsistent(
                "kernel flag does not triangularize the subspace".into(),
            )
            .into());
        }
    }
    Ok(conjugator)
}
