//! Random linear codes: the kernel of a uniformly random `(n-k) × n`
//! parity-check matrix.

use crate::code::{AuxData, CodeFlag, EnsembleKind, LinearCode, Provenance};
use crate::error::{Error, Result};
use crate::field::BaseField;
use crate::linalg::Matrix;
use crate::tape::RandomnessTape;

/// Draws `H` row by row; the generator is a nullspace basis of `H`, so it has
/// `n - rank(H) >= k` rows.
pub fn sample_rlc(q: u64, n: usize, k: usize, tape: &mut RandomnessTape) -> Result<LinearCode> {
    if k > n || n == 0 {
        return Err(Error::BadDimensions(format!("need 0 <= k <= n and n >= 1, got k = {k}, n = {n}")));
    }
    let base = BaseField::get(q)?;
    let start = tape.consumed_bits();
    let rows: Vec<Vec<u8>> = (0..n - k).map(|_| tape.draw_symbols(&base, n)).collect::<Result<_>>()?;
    let bits = tape.consumed_bits() - start;
    let h = Matrix::from_rows_with_cols(base.q(), n, rows)?;
    let g = h.nullspace(&base);
    let mut flags = Vec::new();
    if g.rows() > k {
        flags.push(CodeFlag::ExcessDimension);
    }
    let prov = Provenance {
        kind: EnsembleKind::Rlc,
        ell: None,
        r: None,
        tape: Some(tape.origin().clone()),
        bits_consumed: bits,
        nominal_bits: crate::audit::nominal_bits(EnsembleKind::Rlc, q, n, k, 1).ok(),
        field: None,
        aux: AuxData {
            h: h.row_vecs(),
            ..AuxData::default()
        },
        flags,
    };
    Ok(LinearCode::new(base, g, prov))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_space_when_k_equals_n() {
        let mut t = RandomnessTape::explicit(vec![]);
        let c = sample_rlc(2, 5, 5, &mut t).unwrap();
        assert_eq!(c.rank(), 5);
        assert_eq!(c.provenance().bits_consumed, 0);
    }

    #[test]
    fn zero_tape_flags_excess_dimension() {
        let mut t = RandomnessTape::explicit(vec![false; 8]);
        let c = sample_rlc(2, 4, 2, &mut t).unwrap();
        assert_eq!(c.rank(), 4);
        assert_eq!(c.provenance().flags, vec![CodeFlag::ExcessDimension]);
        assert_eq!(c.provenance().bits_consumed, 8);
    }

    #[test]
    fn generator_spans_kernel() {
        for seed in 0..30 {
            let mut t = RandomnessTape::seeded(seed);
            let c = sample_rlc(3, 7, 3, &mut t).unwrap();
            let base = c.base().clone();
            let h = Matrix::from_rows_with_cols(3, 7, c.provenance().aux.h.clone()).unwrap();
            assert!(h.mul(&base, &c.generator().transpose()).unwrap().is_zero());
            assert_eq!(c.rank() + h.rank(&base), 7);
            assert!(c.rank() >= 3);
        }
    }
}
