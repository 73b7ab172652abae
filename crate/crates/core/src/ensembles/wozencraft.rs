//! The generalized Wozencraft ensemble over `F_{q^k}`: codewords
//! `(φ(α), φ(f_1(α)), …, φ(f_{r-1}(α)))` for `α ∈ F_{q^k}`, with independent
//! random linearized polynomials `f_j` of `q`-degree below `ℓ`. Block length
//! `r·k`, rate exactly `1/r`.

use crate::code::{AuxData, EnsembleKind, LinearCode, Provenance};
use crate::error::{Error, Result};
use crate::field::{make_extension, LinearizedPoly};
use crate::linalg::Matrix;
use crate::tape::RandomnessTape;

pub fn sample_wozencraft(q: u64, k: usize, r: usize, ell: usize, tape: &mut RandomnessTape) -> Result<LinearCode> {
    if r < 2 {
        return Err(Error::BadDimensions(format!("need r >= 2, got {r}")));
    }
    if k == 0 || ell == 0 {
        return Err(Error::BadDimensions("need k >= 1 and ell >= 1".into()));
    }
    let field = make_extension(q, k)?;
    let start = tape.consumed_bits();
    let polys: Vec<LinearizedPoly> = (1..r)
        .map(|_| tape.draw_elems(&field, ell).map(LinearizedPoly::new))
        .collect::<Result<_>>()?;
    let bits = tape.consumed_bits() - start;
    let n = r * k;
    let mut g = Matrix::zeros(k, n);
    for i in 0..k {
        let alpha = field.lambda_pow(i);
        let row = g.row_mut(i);
        row[i] = 1;
        for (j, p) in polys.iter().enumerate() {
            let start = (j + 1) * k;
            row[start..start + k].copy_from_slice(p.eval(&field, &alpha).coeffs());
        }
    }
    let prov = Provenance {
        kind: EnsembleKind::Wozencraft,
        ell: Some(ell),
        r: Some(r),
        tape: Some(tape.origin().clone()),
        bits_consumed: bits,
        nominal_bits: crate::audit::nominal_bits(EnsembleKind::Wozencraft, q, n, k, ell).ok(),
        field: Some(field.descriptor()),
        aux: AuxData {
            f: polys.iter().flat_map(|p| p.coeffs.iter().map(|c| c.coeffs().to_vec())).collect(),
            ..AuxData::default()
        },
        flags: Vec::new(),
    };
    Ok(LinearCode::new(field.base().clone(), g, prov))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{ExtField, FieldElem};

    #[test]
    fn metering_and_shape() {
        let mut t = RandomnessTape::seeded(7);
        let c = sample_wozencraft(2, 4, 2, 3, &mut t).unwrap();
        assert_eq!(c.provenance().bits_consumed, 12);
        assert_eq!((c.k(), c.n()), (4, 8));
        let mut t = RandomnessTape::seeded(7);
        let c = sample_wozencraft(4, 3, 4, 2, &mut t).unwrap();
        assert_eq!(c.provenance().bits_consumed, 3 * 2 * 3 * 2);
        assert_eq!(c.rank(), 3);
        assert!(sample_wozencraft(2, 4, 1, 1, &mut t).is_err());
    }

    #[test]
    fn zero_tape_keeps_identity_block() {
        let mut t = RandomnessTape::explicit(vec![false; 4]);
        let c = sample_wozencraft(2, 4, 2, 1, &mut t).unwrap();
        assert_eq!(c.rank(), 4);
        for i in 0..4 {
            let row = c.generator().row(i);
            assert_eq!(row[i], 1);
            assert!(row[4..].iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn classic_wozencraft_is_multiplication_by_beta() {
        // r = 2, ℓ = 1: codeword for α is (φ(α), φ(βα)).
        let field: std::sync::Arc<ExtField> = make_extension(3, 3).unwrap();
        let mut t = RandomnessTape::seeded(11);
        let c = sample_wozencraft(3, 3, 2, 1, &mut t).unwrap();
        let beta = field.elem(c.provenance().aux.f[0].clone()).unwrap();
        for idx in 0..27u128 {
            let alpha: FieldElem = field.from_index(idx);
            let word = c.encode(alpha.coeffs()).unwrap();
            assert_eq!(&word[..3], alpha.coeffs());
            assert_eq!(&word[3..], field.mul(&beta, &alpha).coeffs());
        }
    }
}
