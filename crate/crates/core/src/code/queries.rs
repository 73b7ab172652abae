use super::{EnsembleKind, LinearCode, Provenance};
use crate::error::{Error, Result};
use crate::field::BaseField;
use crate::linalg::{axpy, solve_left, Matrix};

/// Default cap on the number of codewords a brute-force query may visit.
pub const DEFAULT_BUDGET: u128 = 1 << 22;

pub fn weight(v: &[u8]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

pub fn distance(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// The code `{y : <x, y> = 0 for all x in C}`, generated by a nullspace basis.
pub fn dual_code(code: &LinearCode) -> LinearCode {
    let g = code.generator().nullspace(code.base());
    let mut prov = Provenance::explicit();
    prov.kind = EnsembleKind::Dual;
    LinearCode::new(code.base().clone(), g, prov)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceReport {
    /// Minimum nonzero weight, or `n + 1` for the zero code.
    pub distance: usize,
    pub witness: Option<Vec<u8>>,
    /// Set when the code has no nonzero codeword and `distance` is the sentinel.
    pub zero_code: bool,
}

/// Exact minimum distance by enumerating all `q^rank` codewords.
pub fn min_distance(code: &LinearCode, budget: u128) -> Result<DistanceReport> {
    let mut best: Option<(usize, Vec<u8>)> = None;
    let mut words = enumerate_codewords(code, budget)?;
    while let Some(w) = words.next_ref() {
        let wt = weight(w);
        if wt > 0 && best.as_ref().is_none_or(|(b, _)| wt < *b) {
            best = Some((wt, w.to_vec()));
            if wt == 1 {
                break;
            }
        }
    }
    Ok(match best {
        Some((d, w)) => DistanceReport {
            distance: d,
            witness: Some(w),
            zero_code: false,
        },
        None => DistanceReport {
            distance: code.n() + 1,
            witness: None,
            zero_code: true,
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Containment {
    pub contained: bool,
    /// `X` with `X · G = Aᵀ` when every column is a codeword.
    pub solution: Option<Matrix>,
}

/// Whether every column of the `n × b` matrix `a` is a codeword.
pub fn contains_matrix(code: &LinearCode, a: &Matrix) -> Result<Containment> {
    if a.rows() != code.n() {
        return Err(Error::DimensionMismatch(format!(
            "matrix has {} rows, code length is {}",
            a.rows(),
            code.n()
        )));
    }
    if a.cols() == 0 {
        return Err(Error::DimensionMismatch("matrix needs at least one column".into()));
    }
    let solution = solve_left(code.base(), code.generator(), &a.transpose())?;
    Ok(Containment {
        contained: solution.is_some(),
        solution,
    })
}

/// All `q^rank` codewords, each exactly once, in lexicographic order of the
/// message over a greedily chosen set of independent generator rows.
pub fn enumerate_codewords(code: &LinearCode, budget: u128) -> Result<Codewords> {
    let rank = code.rank();
    let needed = (code.q() as u128).checked_pow(rank as u32).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let idx = code.generator().independent_rows(code.base());
    Ok(Codewords {
        base: code.base().clone(),
        basis: code.generator().select_rows(&idx),
        message: vec![0; rank],
        word: vec![0; code.n()],
        started: false,
        done: false,
    })
}

/// Odometer over messages; the last message position changes fastest.
pub struct Codewords {
    base: std::sync::Arc<BaseField>,
    basis: Matrix,
    message: Vec<u8>,
    word: Vec<u8>,
    started: bool,
    done: bool,
}

impl Codewords {
    /// Advances and borrows the next codeword without allocating.
    pub fn next_ref(&mut self) -> Option<&[u8]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.word);
        }
        let q = self.base.q() as u8;
        let f = &self.base;
        let mut i = self.message.len();
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            let old = self.message[i];
            let new = if old + 1 == q { 0 } else { old + 1 };
            self.message[i] = new;
            axpy(f, &mut self.word, f.sub(new, old), self.basis.row(i));
            if new != 0 {
                return Some(&self.word);
            }
        }
    }

    /// The message (over the independent rows) of the current codeword.
    pub fn message(&self) -> &[u8] {
        &self.message
    }
}

impl Iterator for Codewords {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        self.next_ref().map(<[u8]>::to_vec)
    }
}
