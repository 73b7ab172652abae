//! Linear codes given by generator matrices, and the queries run against them.

mod queries;

use std::sync::{Arc, OnceLock};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{BaseField, FieldDescriptor};
use crate::linalg::{Echelon, Matrix};
use crate::tape::TapeOrigin;

pub use queries::{
    contains_matrix, distance, dual_code, enumerate_codewords, min_distance, weight, Codewords, Containment,
    DistanceReport, DEFAULT_BUDGET,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EnsembleKind {
    Pclp,
    Pcrcp,
    Wozencraft,
    Rlc,
    /// Dual of another code, computed by elimination or algebraically.
    Dual,
    /// Supplied directly as a generator matrix.
    Explicit,
}

impl EnsembleKind {
    pub fn name(self) -> &'static str {
        match self {
            EnsembleKind::Pclp => "pclp",
            EnsembleKind::Pcrcp => "pcrcp",
            EnsembleKind::Wozencraft => "wozencraft",
            EnsembleKind::Rlc => "rlc",
            EnsembleKind::Dual => "dual",
            EnsembleKind::Explicit => "explicit",
        }
    }
}

impl std::str::FromStr for EnsembleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pclp" => Ok(EnsembleKind::Pclp),
            "pcrcp" => Ok(EnsembleKind::Pcrcp),
            "wozencraft" => Ok(EnsembleKind::Wozencraft),
            "rlc" => Ok(EnsembleKind::Rlc),
            "dual" => Ok(EnsembleKind::Dual),
            "explicit" => Ok(EnsembleKind::Explicit),
            other => Err(Error::UnknownEnsemble(other.to_string())),
        }
    }
}

/// Conditions worth surfacing about a sampled code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CodeFlag {
    /// Generator rank is below the design dimension.
    DegenerateRank,
    /// Kernel sampling produced more than `k` basis vectors.
    ExcessDimension,
}

/// Random coefficients behind a sampled code, as coordinate vectors.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AuxData {
    pub f: Vec<Vec<u8>>,
    pub g: Vec<Vec<u8>>,
    /// Parity-check matrix rows (random linear codes).
    pub h: Vec<Vec<u8>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub kind: EnsembleKind,
    pub ell: Option<usize>,
    pub r: Option<usize>,
    pub tape: Option<TapeOrigin>,
    pub bits_consumed: u64,
    pub nominal_bits: Option<u64>,
    /// The extension field the construction worked in.
    pub field: Option<FieldDescriptor>,
    pub aux: AuxData,
    pub flags: Vec<CodeFlag>,
}

impl Provenance {
    pub fn explicit() -> Self {
        Provenance {
            kind: EnsembleKind::Explicit,
            ell: None,
            r: None,
            tape: None,
            bits_consumed: 0,
            nominal_bits: None,
            field: None,
            aux: AuxData::default(),
            flags: Vec::new(),
        }
    }
}

/// Rank and rate of a code; rates are exact fractions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankRate {
    pub rank: usize,
    pub design_rate: Ratio<usize>,
    pub actual_rate: Ratio<usize>,
}

/// A `k × n` generator matrix over `F_q` with provenance.
#[derive(Debug, Clone)]
pub struct LinearCode {
    base: Arc<BaseField>,
    generator: Matrix,
    provenance: Provenance,
    echelon: OnceLock<Echelon>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.q() == other.q() && self.generator == other.generator && self.provenance == other.provenance
    }
}

impl LinearCode {
    pub fn new(base: Arc<BaseField>, generator: Matrix, provenance: Provenance) -> Self {
        LinearCode {
            base,
            generator,
            provenance,
            echelon: OnceLock::new(),
        }
    }

    /// A code given directly by its generator rows.
    pub fn from_generator(q: u64, n: usize, rows: Vec<Vec<u8>>) -> Result<Self> {
        let base = BaseField::get(q)?;
        let g = Matrix::from_rows_with_cols(base.q(), n, rows)?;
        Ok(Self::new(base, g, Provenance::explicit()))
    }

    pub fn base(&self) -> &Arc<BaseField> {
        &self.base
    }

    pub fn q(&self) -> usize {
        self.base.q()
    }

    /// Block length.
    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    /// Design dimension (number of generator rows).
    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn provenance_mut(&mut self) -> &mut Provenance {
        &mut self.provenance
    }

    pub fn echelon(&self) -> &Echelon {
        self.echelon.get_or_init(|| Echelon::new(&self.base, &self.generator))
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    pub fn rank_rate(&self) -> RankRate {
        let n = self.n().max(1);
        RankRate {
            rank: self.rank(),
            design_rate: Ratio::new(self.k(), n),
            actual_rate: Ratio::new(self.rank(), n),
        }
    }

    pub fn contains(&self, word: &[u8]) -> bool {
        word.len() == self.n() && self.echelon().contains(&self.base, word)
    }

    /// `message · G`.
    pub fn encode(&self, message: &[u8]) -> Result<Vec<u8>> {
        self.generator.vec_mul(&self.base, message)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_rates() {
        let zero = LinearCode::from_generator(2, 4, vec![vec![0; 4]; 2]).unwrap();
        let rr = zero.rank_rate();
        assert_eq!(rr.rank, 0);
        assert_eq!(rr.actual_rate, Ratio::new(0, 1));
        assert_eq!(rr.design_rate, Ratio::new(1, 2));

        let id = LinearCode::from_generator(3, 5, vec![vec![1, 0, 0, 0, 0], vec![0, 1, 0, 0, 0]]).unwrap();
        assert_eq!(id.rank(), 2);
        assert!(id.contains(&[2, 1, 0, 0, 0]));
        assert!(!id.contains(&[0, 0, 1, 0, 0]));
    }

    #[test]
    fn ensemble_names_parse() {
        for k in [EnsembleKind::Pclp, EnsembleKind::Pcrcp, EnsembleKind::Wozencraft, EnsembleKind::Rlc] {
            assert_eq!(k.name().parse::<EnsembleKind>().unwrap(), k);
        }
        assert!(matches!("ldpc".parse::<EnsembleKind>(), Err(Error::UnknownEnsemble(_))));
    }
}
