//! Ordered compositions of `n`: the block-size data of parabolic types.

use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CompositionError {
    #[error("a composition needs at least one part")]
    Empty,
    #[error("composition parts must be positive, got {0:?}")]
    ZeroPart(Vec<usize>),
    #[error("cannot parse composition part {0:?}")]
    BadPart(String),
}

/// An ordered tuple `(n_1, ..., n_s)` of positive integers. `(1,2)` and
/// `(2,1)` are different compositions of 3.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, CompositionError> {
        if parts.is_empty() {
            return Err(CompositionError::Empty);
        }
        if parts.contains(&0) {
            return Err(CompositionError::ZeroPart(parts));
        }
        Ok(Self { parts })
    }

    /// The composition `(1, 1, ..., 1)` of `n`.
    pub fn ones(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum_of_squares(&self) -> usize {
        self.parts.iter().map(|p| p * p).sum()
    }

    /// `(n² + Σ n_i²) / 2`, the dimension of the block upper triangular
    /// algebra of this type. The numerator is always even.
    pub fn parabolic_dim(&self) -> usize {
        let n = self.n();
        (n * n + self.sum_of_squares()) / 2
    }

    /// Block index of every row/column, zero-based.
    pub fn block_of(&self) -> Vec<usize> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(b, &len)| std::iter::repeat_n(b, len))
            .collect()
    }

    /// Cumulative dimensions `(n_1, n_1 + n_2, ..., n)` of the standard flag.
    pub fn flag_dims(&self) -> Vec<usize> {
        self.parts
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// Rebuilds a composition from strictly increasing flag dimensions.
    pub fn from_flag_dims(dims: &[usize]) -> Result<Self, CompositionError> {
        let mut prev = 0;
        let mut parts = Vec::with_capacity(dims.len());
        for &d in dims {
            parts.push(d.saturating_sub(prev));
            prev = d;
        }
        Self::new(parts)
    }
}

/// Every composition of `n`, in lexicographic order of parts. There are
/// `2^(n-1)` of them for `n ≥ 1`.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn go(rest: usize, current: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition {
                parts: current.clone(),
            });
            return;
        }
        for first in 1..=rest {
            current.push(first);
            go(rest - first, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, &mut Vec::new(), &mut out);
    }
    out
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Accepts `1,2,3` with optional surrounding parentheses.
impl FromStr for Composition {
    type Err = CompositionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim();
        let inner = inner
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(inner);
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| CompositionError::BadPart(p.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parts)
    }
}
