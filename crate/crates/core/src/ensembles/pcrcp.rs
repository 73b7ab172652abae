//! Row-column polynomial codes: `G = G' + G''` where row `i` of `G'` is
//! `φ(f(α_i))` and column `j` of `G''` is `ψ_k(g(α_j))`, for random ordinary
//! polynomials `f, g` of degree below `ℓ` and fixed distinct `α_1, …, α_n`.
//!
//! The points are `α_i = λ^{i-1}`. Distinctness alone is not enough for `xG'`
//! to be uniform: the argument needs `(α_i^0, …, α_i^{ℓ-1})` to stay
//! independent over `F_q`, and with the first `n` field elements in index
//! order `0 + 1 + λ + (λ+1) = 0` kills a fixed message for every tape.
//! Powers of `λ` form a basis, so `Σ x_i α_i ≠ 0` for every nonzero `x` and
//! uniformity holds whenever `ℓ ≥ 2`.

use std::sync::Arc;

use crate::code::{AuxData, CodeFlag, EnsembleKind, LinearCode, Provenance};
use crate::error::Result;
use crate::field::{make_extension, CoordMap, ExtField, FieldElem, OrdinaryPoly};
use crate::linalg::Matrix;
use crate::tape::RandomnessTape;

use super::pclp::check_dims;

#[derive(Debug, Clone)]
pub struct PcrcpCode {
    field: Arc<ExtField>,
    k: usize,
    f: OrdinaryPoly,
    g: OrdinaryPoly,
    alphas: Vec<FieldElem>,
    g_prime: Matrix,
    g_dblprime: Matrix,
    code: LinearCode,
}

impl PcrcpCode {
    pub fn from_polys(field: Arc<ExtField>, k: usize, f: OrdinaryPoly, g: OrdinaryPoly) -> Result<Self> {
        Self::build(field, k, f, g, Provenance::explicit())
    }

    fn build(field: Arc<ExtField>, k: usize, f: OrdinaryPoly, g: OrdinaryPoly, mut prov: Provenance) -> Result<Self> {
        let n = field.degree();
        check_dims(n, k, f.len().max(g.len()))?;
        let alphas: Vec<FieldElem> = (0..n).map(|i| field.lambda_pow(i)).collect();
        let q = field.q();
        let mut g_prime = Matrix::zeros(k, n);
        for (i, alpha) in alphas.iter().take(k).enumerate() {
            g_prime.row_mut(i).copy_from_slice(f.eval(&field, alpha).coeffs());
        }
        let mut g_dblprime = Matrix::zeros(k, n);
        for (j, alpha) in alphas.iter().enumerate() {
            let col = field.coord_map(&g.eval(&field, alpha), CoordMap::Psi(k))?;
            for (i, &c) in col.iter().enumerate() {
                g_dblprime.set(i, j, c);
            }
        }
        let generator = g_prime.add(field.base(), &g_dblprime)?;
        prov.kind = EnsembleKind::Pcrcp;
        prov.ell = Some(f.len().max(g.len()));
        prov.field = Some(field.descriptor());
        prov.nominal_bits = crate::audit::nominal_bits(EnsembleKind::Pcrcp, q as u64, n, k, f.len()).ok();
        prov.aux = AuxData {
            f: f.coeffs.iter().map(|c| c.coeffs().to_vec()).collect(),
            g: g.coeffs.iter().map(|c| c.coeffs().to_vec()).collect(),
            h: Vec::new(),
        };
        let mut code = LinearCode::new(field.base().clone(), generator, prov);
        if code.rank() < k {
            code.provenance_mut().flags.push(CodeFlag::DegenerateRank);
        }
        Ok(PcrcpCode {
            field,
            k,
            f,
            g,
            alphas,
            g_prime,
            g_dblprime,
            code,
        })
    }

    pub fn field(&self) -> &Arc<ExtField> {
        &self.field
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn f(&self) -> &OrdinaryPoly {
        &self.f
    }

    pub fn g(&self) -> &OrdinaryPoly {
        &self.g
    }

    pub fn alphas(&self) -> &[FieldElem] {
        &self.alphas
    }

    pub fn g_prime(&self) -> &Matrix {
        &self.g_prime
    }

    pub fn g_dblprime(&self) -> &Matrix {
        &self.g_dblprime
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn into_code(self) -> LinearCode {
        self.code
    }
}

/// Draws `f_0, …, f_{ℓ-1}` and then `g_0, …, g_{ℓ-1}` uniformly from `F_{q^n}`.
pub fn sample_pcrcp(q: u64, n: usize, k: usize, ell: usize, tape: &mut RandomnessTape) -> Result<PcrcpCode> {
    check_dims(n, k, ell)?;
    let field = make_extension(q, n)?;
    let start = tape.consumed_bits();
    let f = OrdinaryPoly::new(tape.draw_elems(&field, ell)?);
    let g = OrdinaryPoly::new(tape.draw_elems(&field, ell)?);
    let mut prov = Provenance::explicit();
    prov.tape = Some(tape.origin().clone());
    prov.bits_consumed = tape.consumed_bits() - start;
    PcrcpCode::build(field, k, f, g, prov)
}
