//! Samplers for the code ensembles.
//!
//! Every sampler is a pure function of its parameters and a
//! [`RandomnessTape`]; the tape meters the bits actually consumed.

mod pclp;
mod pcrcp;
mod rlc;
mod wozencraft;

pub use pclp::{pclp_dual, sample_pclp, EncodeMode, PclpCode};
pub use pcrcp::{sample_pcrcp, PcrcpCode};
pub use rlc::sample_rlc;
pub use wozencraft::sample_wozencraft;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::code::{EnsembleKind, LinearCode};
use crate::error::{Error, Result};
use crate::field::BaseField;
use crate::tape::RandomnessTape;

/// Parameters of one ensemble. For Wozencraft codes `n = r·k`; random linear
/// codes ignore `ell`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EnsembleSpec {
    pub kind: EnsembleKind,
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub ell: usize,
}

impl EnsembleSpec {
    pub fn pclp(q: u64, n: usize, k: usize, ell: usize) -> Self {
        EnsembleSpec { kind: EnsembleKind::Pclp, q, n, k, ell }
    }

    pub fn pcrcp(q: u64, n: usize, k: usize, ell: usize) -> Self {
        EnsembleSpec { kind: EnsembleKind::Pcrcp, q, n, k, ell }
    }

    pub fn wozencraft(q: u64, k: usize, r: usize, ell: usize) -> Self {
        EnsembleSpec {
            kind: EnsembleKind::Wozencraft,
            q,
            n: r * k,
            k,
            ell,
        }
    }

    pub fn rlc(q: u64, n: usize, k: usize) -> Self {
        EnsembleSpec { kind: EnsembleKind::Rlc, q, n, k, ell: 1 }
    }

    /// Number of polynomial blocks `r` of a Wozencraft code.
    pub fn r(&self) -> Option<usize> {
        (self.kind == EnsembleKind::Wozencraft && self.k > 0).then(|| self.n / self.k)
    }

    pub fn validate(&self) -> Result<()> {
        BaseField::get(self.q)?;
        match self.kind {
            EnsembleKind::Wozencraft => {
                if self.k == 0 || self.n % self.k != 0 || self.n / self.k < 2 {
                    return Err(Error::BadDimensions(format!(
                        "wozencraft needs n = r·k with r >= 2, got n = {}, k = {}",
                        self.n, self.k
                    )));
                }
            }
            EnsembleKind::Dual | EnsembleKind::Explicit => {
                return Err(Error::UnknownEnsemble(self.kind.name().into()));
            }
            _ => {}
        }
        Ok(())
    }

    pub fn design_rate(&self) -> Ratio<usize> {
        Ratio::new(self.k, self.n.max(1))
    }

    /// Symbols drawn per sample, in draw order.
    pub fn tape_symbols(&self) -> usize {
        match self.kind {
            EnsembleKind::Pclp => self.ell * self.n,
            EnsembleKind::Pcrcp => 2 * self.ell * self.n,
            EnsembleKind::Wozencraft => (self.n - self.k) * self.ell,
            EnsembleKind::Rlc => (self.n - self.k) * self.n,
            EnsembleKind::Dual | EnsembleKind::Explicit => 0,
        }
    }

    /// `q^{tape_symbols}`, the number of distinct symbol tapes.
    pub fn tape_space(&self) -> u128 {
        (self.q as u128).checked_pow(self.tape_symbols() as u32).unwrap_or(u128::MAX)
    }

    pub fn nominal_bits(&self) -> Result<u64> {
        crate::audit::nominal_bits(self.kind, self.q, self.n, self.k, self.ell)
    }

    pub fn sample(&self, tape: &mut RandomnessTape) -> Result<LinearCode> {
        self.validate()?;
        match self.kind {
            EnsembleKind::Pclp => Ok(sample_pclp(self.q, self.n, self.k, self.ell, tape)?.into_code()),
            EnsembleKind::Pcrcp => Ok(sample_pcrcp(self.q, self.n, self.k, self.ell, tape)?.into_code()),
            EnsembleKind::Wozencraft => {
                sample_wozencraft(self.q, self.k, self.r().expect("validated"), self.ell, tape)
            }
            EnsembleKind::Rlc => sample_rlc(self.q, self.n, self.k, tape),
            EnsembleKind::Dual | EnsembleKind::Explicit => Err(Error::UnknownEnsemble(self.kind.name().into())),
        }
    }

    /// The sample drawn from the `index`-th tape of the exhaustive enumeration.
    pub fn sample_enumerated(&self, index: u128) -> Result<LinearCode> {
        let base = BaseField::get(self.q)?;
        let mut tape = RandomnessTape::enumerated(&base, self.tape_symbols(), index);
        self.sample(&mut tape)
    }

    /// The sample for trial `index` of a seeded experiment.
    pub fn sample_trial(&self, seed: u64, index: u64) -> Result<LinearCode> {
        self.sample(&mut RandomnessTape::for_trial(seed, index))
    }
}
