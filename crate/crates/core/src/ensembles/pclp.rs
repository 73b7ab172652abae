//! Codes from linearized polynomials: `C = φ(f(V))` for a random
//! `f(X) = Σ_{i<ℓ} f_i X^{q^i}` over `F_{q^n}` and `V = span{1, λ, …, λ^{k-1}}`.

use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::code::{AuxData, CodeFlag, EnsembleKind, LinearCode, Provenance};
use crate::error::{Error, Result};
use crate::field::{dual_coordinates, make_extension, poly_mul_mod, ExtField, FieldElem, LinearizedPoly, MulMode};
use crate::linalg::Matrix;
use crate::tape::{RandomnessTape, TapeOrigin};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EncodeMode {
    /// `message · G` against the materialized generator.
    Naive,
    /// Frobenius shifts and modular products, without forming `G`.
    Fast,
}

#[derive(Debug)]
pub struct PclpCode {
    field: Arc<ExtField>,
    k: usize,
    f: LinearizedPoly,
    tape: Option<TapeOrigin>,
    bits_consumed: u64,
    code: OnceLock<LinearCode>,
}

impl PclpCode {
    /// Wraps given coefficients; `f` must have at least one slot.
    pub fn new(field: Arc<ExtField>, k: usize, f: LinearizedPoly) -> Result<Self> {
        check_dims(field.degree(), k, f.len())?;
        Ok(PclpCode {
            field,
            k,
            f,
            tape: None,
            bits_consumed: 0,
            code: OnceLock::new(),
        })
    }

    pub fn field(&self) -> &Arc<ExtField> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.field.degree()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ell(&self) -> usize {
        self.f.len()
    }

    pub fn f(&self) -> &LinearizedPoly {
        &self.f
    }

    pub fn bits_consumed(&self) -> u64 {
        self.bits_consumed
    }

    /// `φ(f(λ^i))`, the generator row for basis vector `i` of `V`.
    pub fn generator_row(&self, i: usize) -> Vec<u8> {
        self.f.eval(&self.field, &self.field.lambda_pow(i)).into_coeffs()
    }

    /// The code with its generator matrix, built on first use.
    pub fn code(&self) -> &LinearCode {
        self.code.get_or_init(|| {
            let rows: Vec<Vec<u8>> = (0..self.k).map(|i| self.generator_row(i)).collect();
            let g = Matrix::from_rows_with_cols(self.field.q(), self.n(), rows).expect("rows have length n");
            let mut code = LinearCode::new(self.field.base().clone(), g, self.provenance());
            if code.rank() < self.k {
                code.provenance_mut().flags.push(CodeFlag::DegenerateRank);
            }
            code
        })
    }

    pub fn into_code(self) -> LinearCode {
        self.code();
        self.code.into_inner().expect("initialized above")
    }

    fn provenance(&self) -> Provenance {
        Provenance {
            kind: EnsembleKind::Pclp,
            ell: Some(self.ell()),
            r: None,
            tape: self.tape.clone(),
            bits_consumed: self.bits_consumed,
            nominal_bits: crate::audit::nominal_bits(EnsembleKind::Pclp, self.field.q() as u64, self.n(), self.k, self.ell()).ok(),
            field: Some(self.field.descriptor()),
            aux: AuxData {
                f: self.f.coeffs.iter().map(|c| c.coeffs().to_vec()).collect(),
                ..AuxData::default()
            },
            flags: Vec::new(),
        }
    }

    pub fn encode(&self, message: &[u8], mode: EncodeMode) -> Result<Vec<u8>> {
        if message.len() != self.k {
            return Err(Error::LengthMismatch {
                expected: self.k,
                got: message.len(),
            });
        }
        if message.iter().any(|&c| c as usize >= self.field.q()) {
            return Err(Error::FieldMismatch);
        }
        match mode {
            EncodeMode::Naive => self.code().encode(message),
            EncodeMode::Fast => Ok(self.encode_fast(message)),
        }
    }

    // α = Σ x_i λ^i has power-basis coordinates x padded with zeros. Since the
    // coordinates lie in F_q, α^q is obtained by moving coefficient j to
    // degree jq and reducing; then f(α) = Σ_j f_j · α^{q^j}.
    fn encode_fast(&self, message: &[u8]) -> Vec<u8> {
        let field = &self.field;
        let n = self.n();
        let mut h = message.to_vec();
        h.resize(n, 0);
        let mut h = field.elem_unchecked(h);
        let mut out = vec![0u8; n];
        for (j, coeff) in self.f.coeffs.iter().enumerate() {
            if j > 0 {
                h = field.frobenius_with(&h, MulMode::Fast);
            }
            if coeff.is_zero() {
                continue;
            }
            let term = poly_mul_mod(coeff.coeffs(), h.coeffs(), field, MulMode::Fast).expect("operands have length n");
            crate::field::poly::add_assign(field.base(), &mut out, &term);
        }
        out
    }
}

pub(crate) fn check_dims(n: usize, k: usize, ell: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::BadDimensions(format!("need 1 <= k <= n, got k = {k}, n = {n}")));
    }
    if ell == 0 {
        return Err(Error::BadDimensions("need ell >= 1".into()));
    }
    Ok(())
}

/// Draws `f_0, …, f_{ℓ-1}` uniformly from `F_{q^n}` in that order.
pub fn sample_pclp(q: u64, n: usize, k: usize, ell: usize, tape: &mut RandomnessTape) -> Result<PclpCode> {
    check_dims(n, k, ell)?;
    let field = make_extension(q, n)?;
    let start = tape.consumed_bits();
    let coeffs = tape.draw_elems(&field, ell)?;
    let mut code = PclpCode::new(field, k, LinearizedPoly::new(coeffs))?;
    code.tape = Some(tape.origin().clone());
    code.bits_consumed = tape.consumed_bits() - start;
    Ok(code)
}

/// The dual code computed algebraically: with `g = f_0^{-1} f` and
/// `W = {β : Tr(αβ) = 0 for all α in g(V)}`, the dual is `{ψ(f_0^{-1} β) : β ∈ W}`
/// where `ψ` takes coordinates in the trace-dual of the power basis.
pub fn pclp_dual(code: &PclpCode) -> Result<LinearCode> {
    let field = &code.field;
    let n = code.n();
    let k = code.k;
    let f0 = &code.f.coeffs[0];
    if f0.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let rank = code.code().rank();
    if rank < k {
        return Err(Error::KernelIntersectsV { dim: rank, k });
    }
    let f0_inv = field.inv(f0)?;
    let g = LinearizedPoly::new(code.f.coeffs.iter().map(|c| field.mul(&f0_inv, c)).collect());
    // S[i][j] = Tr(g(λ^i) λ^j); W is its right kernel in power-basis coordinates.
    let mut s = Matrix::zeros(k, n);
    let lambda = field.lambda();
    for i in 0..k {
        let mut y: FieldElem = g.eval(field, &field.lambda_pow(i));
        for j in 0..n {
            s.set(i, j, field.trace(&y));
            if j + 1 < n {
                y = field.mul(&y, &lambda);
            }
        }
    }
    let w = s.nullspace(field.base());
    let rows: Vec<Vec<u8>> = (0..w.rows())
        .map(|r| {
            let beta = field.elem_unchecked(w.row(r).to_vec());
            dual_coordinates(field, &field.mul(&f0_inv, &beta))
        })
        .collect();
    let g = Matrix::from_rows_with_cols(field.q(), n, rows)?;
    let mut prov = Provenance::explicit();
    prov.kind = EnsembleKind::Dual;
    prov.field = Some(field.descriptor());
    Ok(LinearCode::new(field.base().clone(), g, prov))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::dual_code;
    use crate::field::BaseField;

    fn identity_poly(field: &ExtField, ell: usize) -> LinearizedPoly {
        let mut c = vec![field.zero(); ell];
        c[0] = field.one();
        LinearizedPoly::new(c)
    }

    #[test]
    fn zero_tape_gives_zero_code() {
        let mut t = RandomnessTape::explicit(vec![false; 16]);
        let c = sample_pclp(2, 8, 4, 2, &mut t).unwrap();
        assert!(c.code().generator().is_zero());
        assert_eq!(c.code().provenance().flags, vec![CodeFlag::DegenerateRank]);
        assert_eq!(c.bits_consumed(), 16);
    }

    #[test]
    fn metered_bits() {
        let mut t = RandomnessTape::seeded(3);
        assert_eq!(sample_pclp(2, 8, 4, 2, &mut t).unwrap().bits_consumed(), 16);
        let mut t = RandomnessTape::seeded(3);
        assert_eq!(sample_pclp(2, 16, 8, 3, &mut t).unwrap().bits_consumed(), 48);
        let mut t = RandomnessTape::explicit(vec![false; 15]);
        assert!(matches!(sample_pclp(2, 8, 4, 2, &mut t), Err(Error::TapeExhausted { consumed: 15 })));
        let mut t = RandomnessTape::seeded(0);
        assert!(matches!(sample_pclp(2, 4, 5, 1, &mut t), Err(Error::BadDimensions(_))));
        assert!(matches!(sample_pclp(2, 4, 2, 0, &mut t), Err(Error::BadDimensions(_))));
    }

    #[test]
    fn identity_polynomial_gives_standard_rows() {
        let base = BaseField::get(2).unwrap();
        let field = make_extension(2, 6).unwrap();
        // Tape encoding f_0 = 1, f_1 = 0.
        let mut symbols = vec![0u8; 12];
        symbols[0] = 1;
        let mut t = RandomnessTape::from_symbols(&base, &symbols);
        let c = sample_pclp(2, 6, 3, 2, &mut t).unwrap();
        assert_eq!(c.f(), &identity_poly(&field, 2));
        for i in 0..3 {
            let mut e = vec![0u8; 6];
            e[i] = 1;
            assert_eq!(c.code().generator().row(i), &e[..]);
            let mut msg = vec![0u8; 3];
            msg[i] = 1;
            assert_eq!(c.encode(&msg, EncodeMode::Fast).unwrap(), e);
        }
        assert_eq!(c.encode(&[0, 0, 0], EncodeMode::Fast).unwrap(), vec![0; 6]);
        assert_eq!(c.code().rank(), 3);
    }

    #[test]
    fn fast_matches_naive() {
        for (q, n, k, ell, seed) in [(2u64, 16usize, 8usize, 3usize, 1u64), (3, 9, 4, 2, 2), (4, 7, 3, 3, 3), (2, 70, 30, 4, 4), (5, 5, 5, 1, 5)] {
            let mut t = RandomnessTape::seeded(seed);
            let c = sample_pclp(q, n, k, ell, &mut t).unwrap();
            let mut mt = RandomnessTape::seeded(seed + 100);
            for _ in 0..20 {
                let msg = mt.draw_symbols(c.field().base(), k).unwrap();
                assert_eq!(c.encode(&msg, EncodeMode::Fast).unwrap(), c.encode(&msg, EncodeMode::Naive).unwrap());
            }
        }
    }

    #[test]
    fn dual_of_identity_polynomial() {
        let field = make_extension(2, 5).unwrap();
        let full = PclpCode::new(field.clone(), 5, identity_poly(&field, 1)).unwrap();
        assert_eq!(pclp_dual(&full).unwrap().rank(), 0);
        let c = PclpCode::new(field.clone(), 2, identity_poly(&field, 2)).unwrap();
        let d = pclp_dual(&c).unwrap();
        assert!(d.generator().same_row_space(field.base(), dual_code(c.code()).generator()));
        let mut coeffs = identity_poly(&field, 2).coeffs;
        coeffs.swap(0, 1);
        let z = PclpCode::new(field, 2, LinearizedPoly::new(coeffs)).unwrap();
        assert_eq!(pclp_dual(&z).unwrap_err(), Error::ZeroConstantTerm);
    }

    #[test]
    fn dual_matches_elimination_across_fields() {
        for (q, n, k, ell) in [(2u64, 8usize, 4usize, 3usize), (3, 5, 2, 2), (4, 4, 2, 2), (2, 7, 6, 2)] {
            let mut checked = 0;
            for seed in 0..60 {
                let mut t = RandomnessTape::seeded(seed);
                let c = sample_pclp(q, n, k, ell, &mut t).unwrap();
                match pclp_dual(&c) {
                    Ok(d) => {
                        assert!(d.generator().same_row_space(c.field().base(), dual_code(c.code()).generator()));
                        checked += 1;
                    }
                    Err(Error::ZeroConstantTerm | Error::KernelIntersectsV { .. }) => {}
                    Err(e) => panic!("{e}"),
                }
            }
            assert!(checked > 20, "q={q} n={n}: only {checked} samples met the preconditions");
        }
    }
}
