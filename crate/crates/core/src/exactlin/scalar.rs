//! Exact rational scalars.
//!
//! [`Scalar`] is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator. Every value produced by the arithmetic operators is
//! already canonical, so structural equality is value equality.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The ground field: exact rationals.
pub type Scalar = BigRational;

/// Builds a scalar from an integer.
pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

/// Builds the scalar `num / den`, reduced. Panics when `den == 0`.
pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseScalarError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal {0:?}")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

fn is_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

/// Parses `[+-]digits[/digits]` into a canonical scalar.
///
/// The grammar is stricter than `BigRational::from_str`: no whitespace, no
/// sign on the denominator, no digit separators.
pub fn parse_scalar(text: &str) -> Result<Scalar, ParseScalarError> {
    if text.is_empty() {
        return Err(ParseScalarError::Empty);
    }
    let unsigned = text.strip_prefix(['+', '-']).unwrap_or(text);
    let negative = text.starts_with('-');
    let (num, den) = match unsigned.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (unsigned, None),
    };
    if !is_digits(num) || !den.is_none_or(is_digits) {
        return Err(ParseScalarError::Malformed(text.to_string()));
    }
    let mut numerator: BigInt = num
        .parse()
        .map_err(|_| ParseScalarError::Malformed(text.to_string()))?;
    if negative {
        numerator = -numerator;
    }
    let denominator: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| ParseScalarError::Malformed(text.to_string()))?,
        None => BigInt::one(),
    };
    if denominator.is_zero() {
        return Err(ParseScalarError::ZeroDenominator(text.to_string()));
    }
    Ok(Scalar::new(numerator, denominator))
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_scalar(value: &Scalar) -> String {
    Canonical(value).to_string()
}

struct Canonical<'a>(&'a Scalar);

impl fmt::Display for Canonical<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// `true` when the scalar is stored in lowest terms with positive denominator.
pub fn is_canonical(value: &Scalar) -> bool {
    use num_integer::Integer;
    value.denom().is_positive() && value.numer().gcd(value.denom()).is_one()
}
