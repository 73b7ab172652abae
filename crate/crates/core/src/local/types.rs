//! Row distributions of `n × b` matrices and the sizes of their type classes.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::BaseField;
use crate::linalg::Matrix;

/// A probability distribution `τ` on `F_q^b` with exact rational masses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeDistribution {
    q: u64,
    b: usize,
    entries: BTreeMap<Vec<u8>, BigRational>,
    n_hint: Option<usize>,
}

impl TypeDistribution {
    /// Validates symbols, non-negativity and total mass one; zero masses are
    /// dropped. With `n_hint`, every `n·τ(v)` must be an integer.
    pub fn new(
        q: u64,
        b: usize,
        entries: impl IntoIterator<Item = (Vec<u8>, BigRational)>,
        n_hint: Option<usize>,
    ) -> Result<Self> {
        BaseField::get(q)?;
        let mut map = BTreeMap::new();
        for (v, p) in entries {
            if v.len() != b {
                return Err(Error::LengthMismatch { expected: b, got: v.len() });
            }
            if v.iter().any(|&s| s as u64 >= q) {
                return Err(Error::DomainError(format!("vector {v:?} has a symbol outside F_{q}")));
            }
            if p.is_negative() {
                return Err(Error::DomainError(format!("negative mass {p} at {v:?}")));
            }
            if map.contains_key(&v) {
                return Err(Error::DomainError(format!("vector {v:?} listed twice")));
            }
            if !p.is_zero() {
                map.insert(v, p);
            }
        }
        let total: BigRational = map.values().sum();
        if !total.is_one() {
            return Err(Error::DomainError(format!("masses sum to {total}, not 1")));
        }
        let tau = TypeDistribution { q, b, entries: map, n_hint };
        if let Some(n) = n_hint {
            if !tau.is_integral(n) {
                return Err(Error::DomainError(format!("n·τ(v) is not integral for n = {n}")));
            }
        }
        Ok(tau)
    }

    /// The distribution with the given row counts, `τ(v) = count/n`.
    pub fn from_counts(q: u64, b: usize, counts: impl IntoIterator<Item = (Vec<u8>, usize)>) -> Result<Self> {
        let counts: Vec<(Vec<u8>, usize)> = counts.into_iter().collect();
        let n: usize = counts.iter().map(|(_, c)| c).sum();
        if n == 0 {
            return Err(Error::DomainError("row counts are all zero".into()));
        }
        let entries = counts.into_iter().map(|(v, c)| (v, ratio(c, n)));
        TypeDistribution::new(q, b, entries, Some(n))
    }

    pub fn point_mass(q: u64, v: Vec<u8>) -> Result<Self> {
        let b = v.len();
        TypeDistribution::new(q, b, [(v, BigRational::one())], None)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn n_hint(&self) -> Option<usize> {
        self.n_hint
    }

    /// Support vectors with their masses, in lexicographic order.
    pub fn entries(&self) -> &BTreeMap<Vec<u8>, BigRational> {
        &self.entries
    }

    pub fn mass(&self, v: &[u8]) -> BigRational {
        self.entries.get(v).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_integral(&self, n: usize) -> bool {
        let n = BigRational::from_integer(BigInt::from(n));
        self.entries.values().all(|p| (p * &n).is_integer())
    }

    /// Row multiplicities `n·τ(v)`, or `None` when some is not an integer.
    pub fn counts(&self, n: usize) -> Option<Vec<(Vec<u8>, usize)>> {
        let nr = BigRational::from_integer(BigInt::from(n));
        self.entries
            .iter()
            .map(|(v, p)| {
                let c = p * &nr;
                c.is_integer().then(|| (v.clone(), c.to_integer().to_usize().expect("count fits")))
            })
            .collect()
    }

    /// Shannon entropy `H_q(τ) = -Σ τ(v) log_q τ(v)`.
    pub fn entropy(&self) -> f64 {
        let ln_q = (self.q as f64).ln();
        self.entries
            .values()
            .map(|p| {
                let x = p.to_f64().expect("finite mass");
                -x * x.ln() / ln_q
            })
            .sum()
    }
}

fn ratio(a: usize, b: usize) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// `τ(v) = |{i : A_i = v}| / n` for the rows of the `n × b` matrix `a`.
pub fn empirical_row_distribution(q: u64, a: &Matrix) -> Result<TypeDistribution> {
    if a.rows() == 0 {
        return Err(Error::BadDimensions("empirical distribution of a matrix with no rows".into()));
    }
    let mut counts: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
    for r in 0..a.rows() {
        *counts.entry(a.row(r).to_vec()).or_default() += 1;
    }
    TypeDistribution::from_counts(q, a.cols(), counts)
}

/// `|M_{n,τ}|` together with its comparison against `q^{n·H_q(τ)}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TypeClassSize {
    pub size: BigUint,
    /// False when some `n·τ(v)` is fractional; then `size` is 0.
    pub integral: bool,
    /// `n·H_q(τ)`, the exponent of the upper estimate.
    pub log_q_bound: f64,
    /// `size ≤ q^{n·H_q(τ)}`, with the float bound rounded up.
    pub bound_holds: bool,
    /// `size / q^{n·H_q(τ)}`; the estimate's lower side is `(n+1)^{-q^b}`.
    pub ratio: f64,
    /// `ratio ≥ (n+1)^{-q^b}`.
    pub lower_holds: bool,
}

/// Relative inflation covering the rounding error of `exp` and `ln`.
const BOUND_SLACK: f64 = 1e-12;

/// Rounds a positive float bound upward past its evaluation error.
pub(crate) fn round_up(x: f64) -> f64 {
    (x * (1.0 + BOUND_SLACK)).next_up()
}

/// Exact `a ≤ bound` for a float bound already rounded up.
pub(crate) fn le_float(a: &BigRational, bound: f64) -> bool {
    if bound.is_infinite() {
        return true;
    }
    *a <= BigRational::from_float(bound).expect("finite bound")
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, i| acc * i)
}

/// The multinomial `n! / ∏ (n·τ(v))!`.
pub fn type_class_size(n: usize, tau: &TypeDistribution) -> TypeClassSize {
    let log_q_bound = n as f64 * tau.entropy();
    let Some(counts) = tau.counts(n) else {
        return TypeClassSize {
            size: BigUint::zero(),
            integral: false,
            log_q_bound,
            bound_holds: true,
            ratio: 0.0,
            lower_holds: false,
        };
    };
    let size = counts.iter().fold(factorial(n), |acc, (_, c)| acc / factorial(*c));
    let ln_q = (tau.q as f64).ln();
    let bound = round_up((log_q_bound * ln_q).exp());
    let bound_holds = le_float(&BigRational::from_integer(BigInt::from(size.clone())), bound);
    let ratio = (size.to_f64().expect("finite").ln() - log_q_bound * ln_q).exp();
    let cells = (tau.q as f64).powi(tau.b as i32);
    let lower_holds = ratio.ln() >= -cells * ((n + 1) as f64).ln() - 1e-9;
    TypeClassSize {
        size,
        integral: true,
        log_q_bound,
        bound_holds,
        ratio,
        lower_holds,
    }
}

/// Rank over `F_q` of the support of `τ`.
pub fn tau_dim(tau: &TypeDistribution) -> usize {
    let f = BaseField::get(tau.q).expect("validated on construction");
    let rows: Vec<Vec<u8>> = tau.entries.keys().cloned().collect();
    Matrix::from_rows_with_cols(f.q(), tau.b, rows).expect("validated symbols").rank(&f)
}

/// The vector of `F_q^b` with lexicographic index `i` (first coordinate most significant).
pub fn vector_at(q: u64, b: usize, mut i: u64) -> Vec<u8> {
    let mut v = vec![0u8; b];
    for s in v.iter_mut().rev() {
        *s = (i % q) as u8;
        i /= q;
    }
    v
}

/// Every `τ` on `F_q^b` with all `n·τ(v)` integral, i.e. every composition
/// of `n` into `q^b` parts.
pub fn enumerate_types(q: u64, b: usize, n: usize) -> Result<Vec<TypeDistribution>> {
    let cells = q.checked_pow(b as u32).filter(|&c| c <= 1 << 12).ok_or_else(|| {
        Error::ParameterTooLarge(format!("q^b = {q}^{b} cells"))
    })? as usize;
    let vectors: Vec<Vec<u8>> = (0..cells as u64).map(|i| vector_at(q, b, i)).collect();
    let mut out = Vec::new();
    let mut parts = vec![0usize; cells];
    fn rec(i: usize, left: usize, parts: &mut [usize], f: &mut dyn FnMut(&[usize])) {
        if i + 1 == parts.len() {
            parts[i] = left;
            f(parts);
            return;
        }
        for c in 0..=left {
            parts[i] = c;
            rec(i + 1, left - c, parts, f);
        }
    }
    let mut err = None;
    rec(0, n, &mut parts, &mut |p| {
        let counts = vectors.iter().cloned().zip(p.iter().copied()).filter(|(_, c)| *c > 0);
        match TypeDistribution::from_counts(q, b, counts) {
            Ok(t) => out.push(t),
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Iterates every matrix of `M_{n,τ}` exactly once, as distinct
/// permutations of the sorted row multiset.
pub struct Arrangements {
    rows: Vec<Vec<u8>>,
    b: usize,
    started: bool,
    done: bool,
}

pub fn arrangements(tau: &TypeDistribution, n: usize) -> Arrangements {
    match tau.counts(n) {
        Some(counts) => Arrangements {
            rows: counts.into_iter().flat_map(|(v, c)| std::iter::repeat_n(v, c)).collect(),
            b: tau.b,
            started: false,
            done: false,
        },
        None => Arrangements {
            rows: Vec::new(),
            b: tau.b,
            started: true,
            done: true,
        },
    }
}

impl Iterator for Arrangements {
    type Item = Matrix;

    fn next(&mut self) -> Option<Matrix> {
        if self.done {
            return None;
        }
        if self.started {
            // Next lexicographic permutation.
            let r = &mut self.rows;
            let Some(i) = (1..r.len()).rev().find(|&i| r[i - 1] < r[i]) else {
                self.done = true;
                return None;
            };
            let j = (i..r.len()).rev().find(|&j| r[j] > r[i - 1]).expect("successor exists");
            r.swap(i - 1, j);
            r[i..].reverse();
        }
        self.started = true;
        let data = self.rows.concat();
        Some(Matrix::from_flat(self.rows.len(), self.b, data))
    }
}
