//! Containment and local-similarity estimators over an ensemble, either
//! exhaustively over every tape or by seeded Monte Carlo.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::properties::{cell_counts, matching_tuples};
use super::stats::clopper_pearson;
use super::types::{le_float, round_up, tau_dim, TypeDistribution};
use crate::code::{enumerate_codewords, EnsembleKind, LinearCode};
use crate::ensembles::EnsembleSpec;
use crate::error::{Error, Result};
use crate::field::BaseField;
use crate::linalg::Matrix;

/// Largest tape space enumerated exhaustively.
pub const EXHAUSTIVE_TAPE_LIMIT: u128 = 1 << 24;
/// Confidence level of Monte Carlo intervals.
pub const CONFIDENCE: f64 = 0.99;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EstimateMode {
    /// Every tape once; results are exact rationals.
    Exhaustive,
    /// `trials` codes from the per-trial tapes of `seed`.
    MonteCarlo { trials: u64, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundVerdict {
    Holds,
    Violated,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContainmentEstimate {
    /// Containment in the dual code rather than the code.
    pub dual: bool,
    pub exact: bool,
    pub hits: u64,
    pub samples: u64,
    pub estimate: f64,
    /// The bound is `q^{-bound_exponent}`: `(n-k)·b` primal, `k·b` dual.
    pub bound_exponent: u64,
    pub bound: f64,
    /// Clopper-Pearson interval in Monte Carlo mode.
    pub interval: Option<(f64, f64)>,
    /// Primal: estimate ≤ bound (interval lower end for Monte Carlo).
    /// Dual: estimate equals the bound (bound inside the interval for Monte Carlo).
    pub verdict: BoundVerdict,
    /// Monte Carlo point estimate above the bound although the interval allows it.
    pub suspect: bool,
}

impl ContainmentEstimate {
    pub fn probability(&self) -> BigRational {
        BigRational::new(BigInt::from(self.hits), BigInt::from(self.samples))
    }
}

fn samples_for(spec: &EnsembleSpec, mode: EstimateMode) -> Result<u64> {
    spec.validate()?;
    match mode {
        EstimateMode::Exhaustive => {
            let size = spec.tape_space();
            if size > EXHAUSTIVE_TAPE_LIMIT {
                return Err(Error::TapeSpaceTooLarge { size, limit: EXHAUSTIVE_TAPE_LIMIT });
            }
            Ok(size as u64)
        }
        EstimateMode::MonteCarlo { trials, .. } => Ok(trials),
    }
}

fn sample_at(spec: &EnsembleSpec, mode: EstimateMode, i: u64) -> Result<LinearCode> {
    match mode {
        EstimateMode::Exhaustive => spec.sample_enumerated(i as u128),
        EstimateMode::MonteCarlo { seed, .. } => spec.sample_trial(seed, i),
    }
}

/// Sums per-code integer tallies over all samples; the sum is independent of
/// the order in which worker threads finish.
fn tally(
    spec: &EnsembleSpec,
    mode: EstimateMode,
    width: usize,
    per_code: impl Fn(&LinearCode) -> Result<Vec<u128>> + Sync,
) -> Result<(u64, Vec<u128>)> {
    let samples = samples_for(spec, mode)?;
    let sums = (0..samples)
        .into_par_iter()
        .map(|i| per_code(&sample_at(spec, mode, i)?))
        .try_reduce(
            || vec![0u128; width],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                Ok(a)
            },
        )?;
    Ok((samples, sums))
}

fn check_matrix(f: &BaseField, spec: &EnsembleSpec, a: &Matrix) -> Result<()> {
    if a.rows() != spec.n || a.cols() == 0 {
        return Err(Error::DimensionMismatch(format!(
            "expected an {} × b matrix with b ≥ 1, got {} × {}",
            spec.n,
            a.rows(),
            a.cols()
        )));
    }
    let rank = a.rank(f);
    if rank != a.cols() {
        return Err(Error::NotFullRank { rank, b: a.cols() });
    }
    Ok(())
}

/// `Pr[A ⊆ C]` (or `Pr[A ⊆ C^⊥]` with `dual`) for each full-rank `A`, from one
/// pass over the sampled codes.
pub fn estimate_containment_many(
    spec: &EnsembleSpec,
    matrices: &[Matrix],
    mode: EstimateMode,
    dual: bool,
) -> Result<Vec<ContainmentEstimate>> {
    let f = BaseField::get(spec.q)?;
    for a in matrices {
        check_matrix(&f, spec, a)?;
    }
    let columns: Vec<Vec<Vec<u8>>> = matrices
        .iter()
        .map(|a| (0..a.cols()).map(|c| a.column(c)).collect())
        .collect();
    let (samples, hits) = tally(spec, mode, matrices.len(), |code| {
        Ok(matrices
            .iter()
            .zip(&columns)
            .map(|(a, cols)| {
                let inside = if dual {
                    code.generator().mul(code.base(), a).expect("shapes checked").is_zero()
                } else {
                    cols.iter().all(|c| code.contains(c))
                };
                u128::from(inside)
            })
            .collect())
    })?;
    Ok(matrices
        .iter()
        .zip(hits)
        .map(|(a, h)| containment_verdict(spec, a.cols(), h as u64, samples, mode, dual))
        .collect())
}

pub fn estimate_containment(spec: &EnsembleSpec, a: &Matrix, mode: EstimateMode, dual: bool) -> Result<ContainmentEstimate> {
    Ok(estimate_containment_many(spec, std::slice::from_ref(a), mode, dual)?.remove(0))
}

fn containment_verdict(spec: &EnsembleSpec, b: usize, hits: u64, samples: u64, mode: EstimateMode, dual: bool) -> ContainmentEstimate {
    let e = (if dual { spec.k } else { spec.n - spec.k } * b) as u64;
    let bound = (spec.q as f64).powi(-(e as i32));
    let estimate = if samples == 0 { 0.0 } else { hits as f64 / samples as f64 };
    // hits / samples versus q^{-e}, cross-multiplied.
    let scaled = BigUint::from(hits) * BigUint::from(spec.q).pow(e as u32);
    let samples_big = BigUint::from(samples);
    let (exact, interval, holds, suspect) = match mode {
        EstimateMode::Exhaustive => {
            let holds = if dual { scaled == samples_big } else { scaled <= samples_big };
            (true, None, holds, false)
        }
        EstimateMode::MonteCarlo { .. } => {
            let (lo, hi) = clopper_pearson(hits, samples, CONFIDENCE);
            let holds = if dual { lo <= bound && bound <= hi } else { lo <= bound };
            (false, Some((lo, hi)), holds, !dual && scaled > samples_big)
        }
    };
    ContainmentEstimate {
        dual,
        exact,
        hits,
        samples,
        estimate,
        bound_exponent: e,
        bound,
        interval,
        verdict: if holds { BoundVerdict::Holds } else { BoundVerdict::Violated },
        suspect,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimilarityEstimate {
    pub b: usize,
    /// `n·τ(v)` is fractional somewhere, so `M_{n,τ}` is empty.
    pub vacuous: bool,
    pub exact: bool,
    /// Contained matrices of type `τ`, summed over all sampled codes.
    pub total: u128,
    pub samples: u64,
    pub expectation: f64,
    /// `(H_q(τ) - b(1-R))·n`.
    pub log_q_bound: f64,
    /// `q^{log_q_bound}`, rounded up.
    pub bound: f64,
    pub verdict: BoundVerdict,
    /// `n / (log_q n · q^{2ℓ})`; the asymptotic regime needs this large.
    pub context_ratio: f64,
}

impl SimilarityEstimate {
    pub fn expectation_exact(&self) -> BigRational {
        BigRational::new(BigInt::from(self.total), BigInt::from(self.samples.max(1)))
    }
}

/// `E[#{A ∈ M_{n,τ} : A ⊆ C}]` for each full-rank `τ`, counted by matching
/// row distributions of ordered codeword tuples.
pub fn similarity_many(
    spec: &EnsembleSpec,
    taus: &[TypeDistribution],
    mode: EstimateMode,
    budget: u128,
) -> Result<Vec<SimilarityEstimate>> {
    let q = spec.q;
    for tau in taus {
        if tau.q() != q {
            return Err(Error::DimensionMismatch(format!("type over F_{} for an ensemble over F_{q}", tau.q())));
        }
        let dim = tau_dim(tau);
        if dim != tau.b() {
            return Err(Error::NotFullRankTau { dim, b: tau.b() });
        }
        if spec.kind != EnsembleKind::Rlc && tau.b() > spec.ell {
            return Err(Error::ArityExceedsLocality { b: tau.b(), ell: spec.ell });
        }
        let needed = (q as u128).checked_pow((spec.k * tau.b()) as u32).unwrap_or(u128::MAX);
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
    }
    let targets: Vec<Option<Vec<usize>>> = taus.iter().map(|t| cell_counts(t, spec.n)).collect();
    let (samples, totals) = tally(spec, mode, taus.len(), |code| {
        let words: Vec<Vec<u8>> = enumerate_codewords(code, budget)?.collect();
        Ok(taus
            .iter()
            .zip(&targets)
            .map(|(tau, target)| match target {
                Some(t) => u128::from(matching_tuples(&words, q as usize, tau.b(), t, &mut |_| true)),
                None => 0,
            })
            .collect())
    })?;
    let (n, k) = (spec.n as f64, spec.k as f64);
    let ln_q = (q as f64).ln();
    let context_ratio = n / ((n.ln() / ln_q) * (q as f64).powi(2 * spec.ell as i32));
    Ok(taus
        .iter()
        .zip(&targets)
        .zip(totals)
        .map(|((tau, target), total)| {
            let b = tau.b() as f64;
            let log_q_bound = (tau.entropy() - b * (1.0 - k / n)) * n;
            let bound = round_up((log_q_bound * ln_q).exp());
            let exact = mode == EstimateMode::Exhaustive;
            let est = SimilarityEstimate {
                b: tau.b(),
                vacuous: target.is_none(),
                exact,
                total,
                samples,
                expectation: total as f64 / samples.max(1) as f64,
                log_q_bound,
                bound,
                verdict: BoundVerdict::Holds,
                context_ratio,
            };
            let holds = if exact { le_float(&est.expectation_exact(), bound) } else { est.expectation <= bound };
            SimilarityEstimate {
                verdict: if holds { BoundVerdict::Holds } else { BoundVerdict::Violated },
                ..est
            }
        })
        .collect())
}

pub fn similarity_expectation(
    spec: &EnsembleSpec,
    tau: &TypeDistribution,
    mode: EstimateMode,
    budget: u128,
) -> Result<SimilarityEstimate> {
    Ok(similarity_many(spec, std::slice::from_ref(tau), mode, budget)?.remove(0))
}
