//! Univariate polynomials over Q, with exact rational root extraction.
//!
//! Roots are found without integer factorization: real roots are isolated
//! with a Sturm sequence and each isolating interval is shrunk until it can
//! hold at most one rational whose denominator divides the leading
//! coefficient of the primitive integer form. The simplest rational in the
//! interval is then the only possible candidate and is tested exactly.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactlin::{format_scalar, int, Scalar};

/// Coefficients from the constant term upwards; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lead) => {
                let inv = lead.recip();
                Self::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
            None => self.clone(),
        }
    }

    /// Remainder of division by a nonzero `divisor`.
    pub fn rem(&self, divisor: &Self) -> Self {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.coeffs[d].recip();
        let mut r = self.coeffs.clone();
        while r.len() > d && !r.is_empty() {
            let shift = r.len() - 1 - d;
            let factor = r.last().expect("nonempty") * &lead_inv;
            if !factor.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    r[shift + i] -= &factor * c;
                }
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Self::new(r)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_square_free(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Leading coefficient of the primitive integer polynomial proportional to `self`.
    fn primitive_leading(&self) -> BigInt {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        (ints.last().expect("nonzero polynomial") / content).abs()
    }

    fn sturm_sequence(&self) -> Vec<Self> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(Self::new(r.coeffs.into_iter().map(|c| -c).collect()));
        }
        seq
    }

    /// All roots when the polynomial splits over Q into distinct linear
    /// factors; `None` otherwise.
    pub fn split_roots(&self) -> Option<Vec<Scalar>> {
        let degree = self.degree()?;
        if degree == 0 {
            return Some(Vec::new());
        }
        if !self.is_square_free() {
            return None;
        }
        let sturm = self.sturm_sequence();
        let lead = self.coeffs[degree].abs();
        let bound = self.coeffs[..degree]
            .iter()
            .map(|c| c.abs() / &lead)
            .fold(Scalar::zero(), |a, b| if b > a { b } else { a })
            + Scalar::one();
        let lo = -bound.clone();
        if count_roots(&sturm, &lo, &bound) != degree {
            return None;
        }
        let max_den = self.primitive_leading();
        let width_limit = Scalar::new(BigInt::one(), &max_den * &max_den);
        let mut roots = Vec::with_capacity(degree);
        let mut pending = vec![(lo, bound)];
        while let Some((a, b)) = pending.pop() {
            let count = count_roots(&sturm, &a, &b);
            if count == 0 {
                continue;
            }
            if count == 1 {
                let candidate = simplest_in(&a, true, Some(&b), false);
                if self.eval(&candidate).is_zero() {
                    roots.push(candidate);
                    continue;
                }
                if &b - &a < width_limit {
                    return None;
                }
            }
            let mid = (&a + &b) / int(2);
            pending.push((a, mid.clone()));
            pending.push((mid, b));
        }
        roots.sort();
        Some(roots)
    }
}

fn sign_changes(sturm: &[Polynomial], x: &Scalar) -> usize {
    let signs: Vec<bool> = sturm
        .iter()
        .map(|p| p.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Distinct real roots in the half-open interval `(a, b]`.
fn count_roots(sturm: &[Polynomial], a: &Scalar, b: &Scalar) -> usize {
    sign_changes(sturm, a) - sign_changes(sturm, b)
}

/// The rational with the smallest denominator in the interval from `lo` to
/// `hi` (unbounded above when `hi` is `None`), each end open or closed.
pub(crate) fn simplest_in(
    lo: &Scalar,
    lo_open: bool,
    hi: Option<&Scalar>,
    hi_open: bool,
) -> Scalar {
    let first_int = if lo_open {
        lo.floor() + Scalar::one()
    } else {
        lo.ceil()
    };
    let fits = match hi {
        None => true,
        Some(h) => &first_int < h || (&first_int == h && !hi_open),
    };
    if fits {
        return first_int;
    }
    // The interval lies inside [fl, fl + 1]; write x = fl + 1/y and recurse on y.
    let fl = lo.floor();
    let hi = hi.expect("bounded when no integer fits");
    let y_lo = (hi - &fl).recip();
    let y_hi = (lo != &fl).then(|| (lo - &fl).recip());
    let y = simplest_in(&y_lo, hi_open, y_hi.as_ref(), lo_open);
    fl + y.recip()
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format_scalar(c),
                1 => format!("{}*t", format_scalar(c)),
                _ => format!("{}*t^{i}", format_scalar(c)),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::ratio;

    fn from_roots(roots: &[Scalar]) -> Polynomial {
        let mut coeffs = vec![Scalar::one()];
        for r in roots {
            let mut next = vec![Scalar::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * r;
            }
            coeffs = next;
        }
        Polynomial::new(coeffs)
    }

    #[test]
    fn split_integer_roots() {
        let p = from_roots(&[int(-2), int(0), int(3)]);
        assert_eq!(p.split_roots(), Some(vec![int(-2), int(0), int(3)]));
    }

    #[test]
    fn split_fractional_roots() {
        let roots = vec![ratio(-7, 3), ratio(1, 2), ratio(5, 4), int(9)];
        let p = from_roots(&roots);
        assert_eq!(p.split_roots(), Some(roots.clone()));
        let scaled = Polynomial::new(p.coeffs().iter().map(|c| c * ratio(12, 5)).collect());
        assert_eq!(scaled.split_roots(), Some(roots));
    }

    #[test]
    fn close_roots_are_separated() {
        let roots = vec![ratio(1, 1000), ratio(1, 999)];
        assert_eq!(from_roots(&roots).split_roots(), Some(roots));
    }

    #[test]
    fn irreducible_quadratic_does_not_split() {
        assert_eq!(Polynomial::from_i64(&[1, 0, 1]).split_roots(), None);
        assert_eq!(Polynomial::from_i64(&[-2, 0, 1]).split_roots(), None);
    }

    #[test]
    fn repeated_root_does_not_split() {
        assert_eq!(Polynomial::from_i64(&[1, -2, 1]).split_roots(), None);
        assert!(!Polynomial::from_i64(&[1, -2, 1]).is_square_free());
    }

    #[test]
    fn mixed_factors_do_not_split() {
        // (t - 1)(t² - 3)
        assert_eq!(Polynomial::from_i64(&[3, -3, -1, 1]).split_roots(), None);
    }

    #[test]
    fn simplest_rational() {
        let closed = |a: Scalar, b: Scalar| simplest_in(&a, false, Some(&b), false);
        assert_eq!(closed(ratio(1, 3), ratio(1, 2)), ratio(1, 2));
        assert_eq!(closed(ratio(3, 10), ratio(4, 10)), ratio(1, 3));
        assert_eq!(closed(ratio(-1, 2), ratio(1, 2)), int(0));
        assert_eq!(closed(ratio(-5, 2), ratio(-3, 2)), int(-2));
        assert_eq!(closed(ratio(-2, 5), ratio(-3, 10)), ratio(-1, 3));
        assert_eq!(
            simplest_in(&int(0), true, Some(&ratio(1, 2)), false),
            ratio(1, 2)
        );
        assert_eq!(
            simplest_in(&int(0), true, Some(&ratio(1, 2)), true),
            ratio(1, 3)
        );
        assert_eq!(simplest_in(&ratio(1, 2), true, None, false), int(1));
    }

    #[test]
    fn root_at_left_endpoint_neighbour() {
        // Roots 0 and 1/2: the isolating interval for 1/2 starts at the root 0.
        let p = from_roots(&[int(0), ratio(1, 2), int(5)]);
        assert_eq!(p.split_roots(), Some(vec![int(0), ratio(1, 2), int(5)]));
    }

    #[test]
    fn gcd_and_rem() {
        let a = from_roots(&[int(1), int(2)]);
        let b = from_roots(&[int(2), int(5)]);
        assert_eq!(a.gcd(&b), from_roots(&[int(2)]));
        assert!(a.rem(&from_roots(&[int(1)])).is_zero());
    }
}
