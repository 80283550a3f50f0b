//! Verification suites. Each suite runs a family of exact checks over a
//! range of matrix sizes and collects one [`CheckRecord`] per check.

use std::collections::HashMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use parabolic::algebra::{
    absorption_probe, is_parabolic, optimal_composition, parabolic_subalgebra, radical,
    schur_bound, schur_commutative_check, semisimple_blocks, BlockSizes,
};
use parabolic::coalgebra::{is_coideal, parabolic_coideal, perp};
use parabolic::composition::compositions;
use parabolic::exactlin::Subspace;
use parabolic::nilpotent::{
    is_nil_subspace, nonnil_witness_search, triangularize_nil, NilVerdict, DEFAULT_TERM_BUDGET,
};
use parabolic::sampling::Sampler;
use parabolic::{Composition, MatrixAlgebra, RationalMatrix};

use crate::corpus::{
    algebra_corpus, commutative_extremal, enumerate_unit_pattern_subalgebras, random_closures,
    unit_pattern_subspaces, CorpusAlgebra,
};
use crate::report::{CheckRecord, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    MaxSubalgebra,
    DimensionFormula,
    TheoremBound,
    Maximality,
    OptimalType,
    Gerstenhaber,
    Wedderburn,
    MinCoideal,
    Schur,
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 9] = [
        Suite::MaxSubalgebra,
        Suite::DimensionFormula,
        Suite::TheoremBound,
        Suite::Maximality,
        Suite::OptimalType,
        Suite::Gerstenhaber,
        Suite::Wedderburn,
        Suite::MinCoideal,
        Suite::Schur,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MaxSubalgebra => "max-subalgebra",
            Suite::DimensionFormula => "dimension-formula",
            Suite::TheoremBound => "theorem-bound",
            Suite::Maximality => "maximality",
            Suite::OptimalType => "optimal-type",
            Suite::Gerstenhaber => "gerstenhaber",
            Suite::Wedderburn => "wedderburn",
            Suite::MinCoideal => "min-coideal",
            Suite::Schur => "schur",
            Suite::All => "all",
        }
    }

    /// Sizes the suite accepts.
    pub fn supported(self) -> RangeInclusive<usize> {
        match self {
            Suite::MaxSubalgebra => 2..=6,
            Suite::DimensionFormula => 1..=10,
            Suite::Maximality => 2..=5,
            Suite::OptimalType => 2..=12,
            Suite::TheoremBound
            | Suite::Gerstenhaber
            | Suite::Wedderburn
            | Suite::MinCoideal
            | Suite::Schur
            | Suite::All => 2..=4,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::INDIVIDUAL
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| SuiteError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("empty size range {start}..{end}")]
    EmptyRange { start: usize, end: usize },
    #[error("suite {suite} does not support n = {n} (supported {min}..{max})")]
    Unsupported {
        suite: Suite,
        n: usize,
        min: usize,
        max: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Overrides the default number of random trials of each suite.
    pub trials: Option<usize>,
    /// Term budget for the symbolic nil-subspace check.
    pub budget: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            trials: None,
            budget: DEFAULT_TERM_BUDGET,
        }
    }
}

pub fn run_verification(
    suite: Suite,
    n_range: RangeInclusive<usize>,
    seed: u64,
) -> Result<VerificationReport, SuiteError> {
    run_verification_with(suite, n_range, seed, &SuiteOptions::default())
}

pub fn run_verification_with(
    suite: Suite,
    n_range: RangeInclusive<usize>,
    seed: u64,
    options: &SuiteOptions,
) -> Result<VerificationReport, SuiteError> {
    if n_range.is_empty() {
        return Err(SuiteError::EmptyRange {
            start: *n_range.start(),
            end: *n_range.end(),
        });
    }
    let supported = suite.supported();
    for n in [*n_range.start(), *n_range.end()] {
        if !supported.contains(&n) {
            return Err(SuiteError::Unsupported {
                suite,
                n,
                min: *supported.start(),
                max: *supported.end(),
            });
        }
    }
    let mut report = VerificationReport::new(suite.name(), n_range.clone(), seed);
    let mut ctx = Context {
        seed,
        options: *options,
        corpora: HashMap::new(),
    };
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::INDIVIDUAL.to_vec(),
        s => vec![s],
    };
    for s in suites {
        for n in n_range.clone() {
            match ctx.run(s, n) {
                Ok(records) => report.extend(records),
                Err(message) => report.push(CheckRecord::new(
                    format!("{}/n{n}/internal", s.name()),
                    "computation completes without error",
                    "no error",
                    message,
                    false,
                )),
            }
        }
    }
    Ok(report)
}

type Checks = Result<Vec<CheckRecord>, String>;

struct Context {
    seed: u64,
    options: SuiteOptions,
    corpora: HashMap<usize, Vec<CorpusAlgebra>>,
}

fn id(suite: Suite, n: usize, check: &str) -> String {
    format!("{}/n{n}/{check}", suite.name())
}

fn err(e: impl fmt::Display) -> String {
    e.to_string()
}

/// Seed for one (suite, n) pair, so suites draw independent streams.
fn stream(seed: u64, suite: Suite, n: usize) -> u64 {
    let tag = Suite::INDIVIDUAL
        .iter()
        .position(|&s| s == suite)
        .unwrap_or(0) as u64;
    seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ (tag << 32) ^ n as u64
}

/// `R^n = 0` for the products of an ideal with itself, computed as spans.
fn is_nilpotent_space(n: usize, space: &Subspace) -> bool {
    let basis: Vec<RationalMatrix> = matrices(n, space);
    let mut power = space.clone();
    for _ in 1..n {
        if power.is_zero() {
            return true;
        }
        let current = matrices(n, &power);
        let products = current
            .iter()
            .flat_map(|p| basis.iter().map(move |b| (p * b).into_coords()))
            .collect();
        power = Subspace::from_vectors(products, n * n).expect("length n²");
    }
    power.is_zero()
}

fn matrices(n: usize, space: &Subspace) -> Vec<RationalMatrix> {
    space
        .basis()
        .iter()
        .map(|v| RationalMatrix::from_coords(n, v).expect("length n²"))
        .collect()
}

fn is_two_sided_ideal(a: &MatrixAlgebra, space: &Subspace) -> bool {
    let n = a.n();
    let ideal = matrices(n, space);
    a.basis_matrices().iter().all(|x| {
        ideal.iter().all(|r| {
            space.contains((x * r).coords()).expect("length n²")
                && space.contains((r * x).coords()).expect("length n²")
        })
    })
}

fn strictly_upper(n: usize) -> Subspace {
    MatrixAlgebra::unit_span(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

fn maximal_type(n: usize, l: usize) -> Composition {
    Composition::new(vec![l, n - l]).expect("positive parts")
}

/// Number of reflexive transitive relations on `n` labelled points.
const PREORDER_COUNTS: [usize; 4] = [1, 1, 4, 29];

/// Number of acyclic directed graphs on `n` labelled points.
const ACYCLIC_DIGRAPH_COUNTS: [usize; 4] = [1, 1, 3, 25];

impl Context {
    fn trials(&self, default: usize) -> usize {
        self.options.trials.unwrap_or(default)
    }

    fn corpus(&mut self, n: usize) -> Result<&[CorpusAlgebra], String> {
        if !self.corpora.contains_key(&n) {
            let corpus = algebra_corpus(n, self.seed).map_err(err)?;
            self.corpora.insert(n, corpus);
        }
        Ok(&self.corpora[&n])
    }

    fn run(&mut self, suite: Suite, n: usize) -> Checks {
        match suite {
            Suite::MaxSubalgebra => self.max_subalgebra(n),
            Suite::DimensionFormula => Ok(dimension_formula(n)),
            Suite::TheoremBound => self.theorem_bound(n),
            Suite::Maximality => self.maximality(n),
            Suite::OptimalType => optimal_type(n),
            Suite::Gerstenhaber => self.gerstenhaber(n),
            Suite::Wedderburn => self.wedderburn(n),
            Suite::MinCoideal => self.min_coideal(n),
            Suite::Schur => self.schur(n),
            Suite::All => unreachable!("expanded by the caller"),
        }
    }

    fn max_subalgebra(&mut self, n: usize) -> Checks {
        let s = Suite::MaxSubalgebra;
        let anchor = "max proper unital dim = n^2-n+1";
        let bound = n * n - n + 1;
        let mut out = Vec::new();

        let (mut observed_max, mut exceed, mut sampled) = (0, 0, 0);
        if n <= 3 {
            let patterns = enumerate_unit_pattern_subalgebras(n).map_err(err)?;
            out.push(CheckRecord::equal(
                id(s, n, "pattern-count"),
                "unit-pattern algebras correspond to preorders on n points",
                PREORDER_COUNTS[n],
                patterns.len(),
            ));
            for a in patterns.iter().filter(|a| a.is_proper()) {
                observed_max = observed_max.max(a.dim());
                exceed += usize::from(a.dim() > bound);
            }
            sampled = patterns.len();
        }
        let trials = self.trials(200);
        for a in random_closures(n, trials, 3, stream(self.seed, s, n)) {
            if a.is_proper() {
                observed_max = observed_max.max(a.dim());
                exceed += usize::from(a.dim() > bound);
            }
        }
        sampled += trials;
        let extremal = parabolic_subalgebra(&maximal_type(n, 1));
        observed_max = observed_max.max(extremal.dim());
        out.push(CheckRecord::new(
            id(s, n, "max-proper-unital-dim"),
            anchor,
            bound,
            format!("{observed_max} ({exceed} of {sampled} algebras exceed)"),
            observed_max == bound && exceed == 0,
        ));
        out.push(CheckRecord::new(
            id(s, n, "parabolic-1-n-1"),
            anchor,
            format!("proper unital of dim {bound}"),
            format!(
                "{} unital of dim {}",
                if extremal.is_proper() {
                    "proper"
                } else {
                    "full"
                },
                extremal.dim()
            ),
            extremal.is_proper() && extremal.is_unital() && extremal.dim() == bound,
        ));
        Ok(out)
    }

    fn theorem_bound(&mut self, n: usize) -> Checks {
        let s = Suite::TheoremBound;
        let anchor = "dim A <= (n^2 + sum n_i^2)/2, equality only for parabolics";
        let (mut split, mut violations, mut equal, mut recognized) = (0, 0, 0, 0);
        for entry in self.corpus(n)? {
            let data = semisimple_blocks(&entry.algebra).map_err(err)?;
            let BlockSizes::Split(sizes) = &data.block_sizes else {
                continue;
            };
            split += 1;
            let squares: usize = sizes.iter().map(|x| x * x).sum();
            let dim = entry.algebra.dim();
            if 2 * dim > n * n + squares {
                violations += 1;
            } else if 2 * dim == n * n + squares {
                equal += 1;
                let check = is_parabolic(&entry.algebra).map_err(err)?;
                let mut parts = check
                    .composition
                    .map(|c| c.parts().to_vec())
                    .unwrap_or_default();
                parts.sort_unstable();
                if check.is_parabolic && &parts == sizes {
                    recognized += 1;
                }
            }
        }
        Ok(vec![
            CheckRecord::new(
                id(s, n, "bound"),
                anchor,
                format!("0 violations among {split} split algebras"),
                format!("{violations} violations among {split} split algebras"),
                violations == 0 && split > 0,
            ),
            CheckRecord::new(
                id(s, n, "equality-is-parabolic"),
                anchor,
                format!("{equal} of {equal} equality cases parabolic"),
                format!("{recognized} of {equal} equality cases parabolic"),
                recognized == equal && equal > 0,
            ),
        ])
    }

    fn maximality(&mut self, n: usize) -> Checks {
        let s = Suite::Maximality;
        let trials = self.trials(100);
        let full = MatrixAlgebra::full(n);
        let mut sampler = Sampler::new(stream(self.seed, s, n));
        let mut out = Vec::new();
        for l in 1..n {
            let comp = maximal_type(n, l);
            let a = parabolic_subalgebra(&comp);
            let mut absorbed = 0;
            let mut drawn = 0;
            while drawn < trials {
                let x = sampler.matrix(n);
                if a.contains(&x) {
                    continue;
                }
                drawn += 1;
                absorbed += usize::from(absorption_probe(&a, &x).map_err(err)? == full);
            }
            out.push(CheckRecord::equal(
                id(s, n, &format!("absorb{comp}")),
                "maximal parabolic subalgebras are maximal proper subalgebras",
                format!("{trials}/{trials}"),
                format!("{absorbed}/{trials}"),
            ));
        }
        Ok(out)
    }

    fn gerstenhaber(&mut self, n: usize) -> Checks {
        let s = Suite::Gerstenhaber;
        let anchor = "nil subspace of M_n has dim <= n(n-1)/2";
        let bound = n * (n - 1) / 2;
        let budget = self.options.budget;
        let mut out = Vec::new();

        if n <= 3 {
            let (mut nil, mut max_dim, mut undetermined) = (0, 0, 0);
            for space in unit_pattern_subspaces(n).map_err(err)? {
                match is_nil_subspace(&space, budget).map_err(err)?.verdict {
                    NilVerdict::AllNilpotent => {
                        nil += 1;
                        max_dim = max_dim.max(space.dim());
                    }
                    NilVerdict::WitnessFound => {}
                    NilVerdict::Undetermined => undetermined += 1,
                }
            }
            out.push(CheckRecord::new(
                id(s, n, "nil-patterns"),
                anchor,
                format!("max dim {bound}, 0 undetermined"),
                format!("max dim {max_dim} over {nil} nil patterns, {undetermined} undetermined"),
                max_dim == bound && undetermined == 0,
            ));
            out.push(CheckRecord::equal(
                id(s, n, "nil-pattern-count"),
                "a span of matrix units is nil iff its position graph is acyclic",
                ACYCLIC_DIGRAPH_COUNTS[n],
                nil,
            ));
        } else {
            let verdict = is_nil_subspace(&strictly_upper(n), budget)
                .map_err(err)?
                .verdict;
            out.push(CheckRecord::equal(
                id(s, n, "strictly-upper-nil"),
                anchor,
                format!("{:?}", NilVerdict::AllNilpotent),
                format!("{verdict:?}"),
            ));
        }

        let mut sampler = Sampler::new(stream(self.seed, s, n));
        let trials = self.trials(100);
        let mut witnessed = 0;
        for t in 0..trials {
            let mut space = Subspace::zero(n * n);
            while space.dim() < bound + 1 {
                space.insert(sampler.matrix(n).coords()).map_err(err)?;
            }
            let cert = is_nil_subspace(&space, budget).map_err(err)?;
            let witness = match cert.witness {
                Some(w) => Some(w),
                None => nonnil_witness_search(&space, stream(self.seed, s, t), 64).map_err(err)?,
            };
            if let Some(w) = witness {
                if space.contains(w.coords()).map_err(err)? && !w.pow(n as u32).is_zero() {
                    witnessed += 1;
                }
            }
        }
        out.push(CheckRecord::equal(
            id(s, n, "random-witnesses"),
            format!(
                "{anchor}; dimension {} forces a non-nilpotent element",
                bound + 1
            ),
            format!("{trials}/{trials}"),
            format!("{witnessed}/{trials}"),
        ));

        let conjugates = self.options.trials.map_or(50, |t| t.div_ceil(2));
        let target = strictly_upper(n);
        let mut restored = 0;
        for _ in 0..conjugates {
            let c = sampler.invertible(n);
            let c_inv = c.inverse().map_err(err)?;
            let conjugated = Subspace::from_vectors(
                matrices(n, &target)
                    .iter()
                    .map(|x| c.conjugate_with(&c_inv, x).into_coords())
                    .collect(),
                n * n,
            )
            .map_err(err)?;
            let t = triangularize_nil(&conjugated).map_err(err)?;
            let t_inv = t.inverse().map_err(err)?;
            let image = Subspace::from_vectors(
                matrices(n, &conjugated)
                    .iter()
                    .map(|x| t.conjugate_with(&t_inv, x).into_coords())
                    .collect(),
                n * n,
            )
            .map_err(err)?;
            restored += usize::from(image == target);
        }
        out.push(CheckRecord::equal(
            id(s, n, "triangularize-conjugates"),
            "a nil subspace of maximal dimension is conjugate to the strictly upper triangular matrices",
            format!("{conjugates}/{conjugates}"),
            format!("{restored}/{conjugates}"),
        ));
        Ok(out)
    }

    fn wedderburn(&mut self, n: usize) -> Checks {
        let s = Suite::Wedderburn;
        let anchor = "A = S + rad A with S a sum of matrix algebras";
        let (mut split, mut nonsplit, mut balanced, mut nil_ideal) = (0, 0, 0, 0);
        let total = self.corpus(n)?.len();
        for entry in self.corpus(n)? {
            let a = &entry.algebra;
            let data = semisimple_blocks(a).map_err(err)?;
            if is_two_sided_ideal(a, &data.radical_space)
                && is_nilpotent_space(n, &data.radical_space)
            {
                nil_ideal += 1;
            }
            match &data.block_sizes {
                BlockSizes::Split(sizes) => {
                    split += 1;
                    let squares: usize = sizes.iter().map(|x| x * x).sum();
                    balanced += usize::from(data.radical_dim + squares == a.dim());
                }
                BlockSizes::NonSplit => nonsplit += 1,
            }
        }
        let full_radical = radical(&MatrixAlgebra::full(n)).map_err(err)?;
        Ok(vec![
            CheckRecord::new(
                id(s, n, "dimension-balance"),
                anchor,
                format!("{split}/{split} split algebras"),
                format!("{balanced}/{split} split algebras ({nonsplit} non-split skipped)"),
                balanced == split && split > 0,
            ),
            CheckRecord::equal(
                id(s, n, "radical-nilpotent-ideal"),
                "the radical is the largest nilpotent two-sided ideal",
                format!("{total}/{total}"),
                format!("{nil_ideal}/{total}"),
            ),
            CheckRecord::equal(
                id(s, n, "full-algebra-radical"),
                "M_n is simple",
                0,
                full_radical.dim(),
            ),
        ])
    }

    fn min_coideal(&mut self, n: usize) -> Checks {
        let s = Suite::MinCoideal;
        let anchor = "minimal nonzero coideal dim = n-1";
        let mut out = Vec::new();
        let mut certified = 0;
        let mut involutive = 0;
        let mut min_dim = usize::MAX;
        let total = self.corpus(n)?.len();
        for entry in self.corpus(n)? {
            let space = entry.algebra.space();
            let p = perp(space);
            if let Ok(x) = is_coideal(&p) {
                if x.is_certified() && x.dim() + space.dim() == n * n {
                    certified += 1;
                    if x.dim() > 0 {
                        min_dim = min_dim.min(x.dim());
                    }
                }
            }
            involutive += usize::from(&perp(&p) == space);
        }
        out.push(CheckRecord::equal(
            id(s, n, "perp-of-algebra-is-coideal"),
            "perp maps subalgebras to coideals",
            format!("{total}/{total}"),
            format!("{certified}/{total}"),
        ));
        out.push(CheckRecord::equal(
            id(s, n, "perp-involution"),
            "perp of perp is the identity",
            format!("{total}/{total}"),
            format!("{involutive}/{total}"),
        ));

        let minimal = parabolic_coideal(&maximal_type(n, 1)).map_err(err)?;
        out.push(CheckRecord::equal(
            id(s, n, "parabolic-coideal-dim"),
            anchor,
            n - 1,
            minimal.dim(),
        ));
        min_dim = min_dim.min(minimal.dim());

        if n <= 3 {
            let (mut found, mut pattern_min) = (0, usize::MAX);
            for space in unit_pattern_subspaces(n).map_err(err)? {
                if space.is_zero() {
                    continue;
                }
                if is_coideal(&space).is_ok() {
                    found += 1;
                    pattern_min = pattern_min.min(space.dim());
                }
            }
            out.push(CheckRecord::new(
                id(s, n, "unit-pattern-coideals"),
                anchor,
                n - 1,
                format!("{pattern_min} over {found} nonzero coideals"),
                pattern_min == n - 1,
            ));
            out.push(CheckRecord::equal(
                id(s, n, "unit-pattern-coideal-count"),
                "perp is a bijection between unit-pattern algebras and unit-pattern coideals",
                PREORDER_COUNTS[n] - 1,
                found,
            ));
            min_dim = min_dim.min(pattern_min);
        }
        out.push(CheckRecord::equal(
            id(s, n, "minimal-nonzero-coideal-dim"),
            anchor,
            n - 1,
            min_dim,
        ));
        Ok(out)
    }

    fn schur(&mut self, n: usize) -> Checks {
        let s = Suite::Schur;
        let bound = schur_bound(n);
        let (mut commutative, mut within, mut max_dim) = (0, 0, 0);
        for entry in self.corpus(n)? {
            let check = schur_commutative_check(&entry.algebra);
            if check.commutative {
                commutative += 1;
                within += usize::from(check.bound_holds == Some(true));
                max_dim = max_dim.max(entry.algebra.dim());
            }
        }
        let extremal = commutative_extremal(n);
        Ok(vec![
            CheckRecord::new(
                id(s, n, "commutative-bound"),
                "commutative subalgebras of M_n have dim <= floor(n^2/4)+1",
                format!("{commutative}/{commutative} within {bound}"),
                format!("{within}/{commutative} within {bound}, max {max_dim}"),
                within == commutative && commutative > 0,
            ),
            CheckRecord::new(
                id(s, n, "bound-attained"),
                "commutative subalgebras of M_n have dim <= floor(n^2/4)+1",
                format!("commutative of dim {bound}"),
                format!(
                    "{} of dim {}",
                    if extremal.is_commutative() {
                        "commutative"
                    } else {
                        "noncommutative"
                    },
                    extremal.dim()
                ),
                extremal.is_commutative() && extremal.dim() == bound,
            ),
        ])
    }
}

fn dimension_formula(n: usize) -> Vec<CheckRecord> {
    let all = compositions(n);
    let matching = all
        .iter()
        .filter(|c| {
            let squares: usize = c.parts().iter().map(|p| p * p).sum();
            2 * parabolic_subalgebra(c).dim() == n * n + squares
        })
        .count();
    vec![CheckRecord::equal(
        id(Suite::DimensionFormula, n, "parabolic-dims"),
        "dim of parabolic of type (n_1,...,n_s) = (n^2 + sum n_i^2)/2",
        format!("{0}/{0}", all.len()),
        format!("{matching}/{}", all.len()),
    )]
}

fn optimal_type(n: usize) -> Checks {
    let s = Suite::OptimalType;
    let (argmax, value) = optimal_composition(n).map_err(err)?;
    let mut expected = vec![maximal_type(n, 1).to_string()];
    if n > 2 {
        expected.push(maximal_type(n, n - 1).to_string());
    }
    let observed: Vec<String> = argmax.iter().map(ToString::to_string).collect();
    Ok(vec![
        CheckRecord::equal(
            id(s, n, "argmax"),
            "largest proper parabolics have type (1,n-1) or (n-1,1)",
            expected.join(" "),
            observed.join(" "),
        ),
        CheckRecord::equal(
            id(s, n, "max-value"),
            "largest proper parabolics have type (1,n-1) or (n-1,1)",
            n * n - n + 1,
            value,
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::INDIVIDUAL.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn unsupported_ranges() {
        assert!(matches!(
            run_verification(Suite::Schur, 2..=5, 0),
            Err(SuiteError::Unsupported { n: 5, .. })
        ));
        #[allow(clippy::reversed_empty_ranges)]
        let empty = 3..=2;
        assert!(matches!(
            run_verification(Suite::Schur, empty, 0),
            Err(SuiteError::EmptyRange { .. })
        ));
    }

    #[test]
    fn optimal_type_records() {
        let report = run_verification(Suite::OptimalType, 2..=4, 0).unwrap();
        assert!(report.all_pass(), "{report}");
        assert_eq!(
            report.record("optimal-type/n2/argmax").unwrap().observed,
            "(1,1)"
        );
        assert_eq!(
            report.record("optimal-type/n4/argmax").unwrap().observed,
            "(1,3) (3,1)"
        );
    }

    #[test]
    fn nilpotent_space_helper() {
        assert!(is_nilpotent_space(3, &strictly_upper(3)));
        assert!(!is_nilpotent_space(2, &Subspace::full(4)));
    }
}
