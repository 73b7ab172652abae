//! The extension `F_{q^n} = F_q[X]/(m(X))` in the power basis `1, λ, …, λ^{n-1}`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::base::BaseField;
use super::irreducible::smallest_irreducible;
use super::poly::{self, MulMode, Reducer};
use crate::error::{Error, Result};

/// Below this degree the schoolbook path is used for field multiplication.
const FAST_MUL_THRESHOLD: usize = 64;

/// An element of `F_{q^n}`: its `n` power-basis coordinates, constant term first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem {
    coeffs: Vec<u8>,
}

impl FieldElem {
    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u8> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElem{:?}", self.coeffs)
    }
}

/// Arithmetic operations accepted by [`ExtField::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Inv,
    Neg,
}

/// Serializable description of an extension field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub q: u64,
    pub p: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_modulus: Option<String>,
    pub n: usize,
    pub modulus: String,
}

#[derive(Debug)]
pub struct ExtField {
    base: Arc<BaseField>,
    n: usize,
    modulus: Vec<u8>,
    reducer: OnceLock<Reducer>,
    basis_traces: OnceLock<Vec<u8>>,
}

fn cache() -> &'static Mutex<HashMap<(u64, usize), Arc<ExtField>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, usize), Arc<ExtField>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Builds `F_{q^n}` with the smallest irreducible modulus. Results are cached,
/// so repeated calls with the same parameters share one instance.
pub fn make_extension(q: u64, n: usize) -> Result<Arc<ExtField>> {
    let base = BaseField::get(q)?;
    if n == 0 {
        return Err(Error::BadDimensions("extension degree n must be at least 1".into()));
    }
    if let Some(f) = cache().lock().unwrap().get(&(q, n)) {
        return Ok(f.clone());
    }
    // Searched outside the lock; a racing duplicate computes the same modulus.
    let modulus = smallest_irreducible(&base, n)?;
    let field = Arc::new(ExtField {
        base,
        n,
        modulus,
        reducer: OnceLock::new(),
        basis_traces: OnceLock::new(),
    });
    Ok(cache().lock().unwrap().entry((q, n)).or_insert(field).clone())
}

impl ExtField {
    pub fn base(&self) -> &Arc<BaseField> {
        &self.base
    }

    pub fn q(&self) -> usize {
        self.base.q()
    }

    /// Extension degree over `F_q`.
    pub fn degree(&self) -> usize {
        self.n
    }

    /// The modulus `m(X)`, low degree first, monic of length `n + 1`.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            q: self.q() as u64,
            p: self.base.characteristic() as u64,
            base_modulus: self.base.base_modulus().map(|m| crate::io::symbols_to_string(self.base.characteristic(), m)),
            n: self.n,
            modulus: crate::io::symbols_to_string(self.q(), &self.modulus),
        }
    }

    pub fn reducer(&self) -> &Reducer {
        self.reducer.get_or_init(|| Reducer::new(&self.base, &self.modulus))
    }

    /// Multiplication strategy used by the field operations at this degree.
    pub fn default_mode(&self) -> MulMode {
        if self.n >= FAST_MUL_THRESHOLD {
            MulMode::Fast
        } else {
            MulMode::Schoolbook
        }
    }

    /// Wraps a coordinate vector, checking length and symbol range.
    pub fn elem(&self, coeffs: Vec<u8>) -> Result<FieldElem> {
        if coeffs.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: coeffs.len(),
            });
        }
        if coeffs.iter().any(|&c| c as usize >= self.q()) {
            return Err(Error::FieldMismatch);
        }
        Ok(FieldElem { coeffs })
    }

    pub(crate) fn elem_unchecked(&self, coeffs: Vec<u8>) -> FieldElem {
        debug_assert_eq!(coeffs.len(), self.n);
        FieldElem { coeffs }
    }

    /// Embeds a base-field symbol.
    pub fn constant(&self, c: u8) -> FieldElem {
        let mut v = vec![0u8; self.n];
        v[0] = c;
        FieldElem { coeffs: v }
    }

    pub fn zero(&self) -> FieldElem {
        self.constant(0)
    }

    pub fn one(&self) -> FieldElem {
        self.constant(1)
    }

    /// The residue `λ` of `X`.
    pub fn lambda(&self) -> FieldElem {
        if self.n == 1 {
            // X = -m_0 modulo X + m_0.
            return self.constant(self.base.neg(self.modulus[0]));
        }
        let mut v = vec![0u8; self.n];
        v[1] = 1;
        FieldElem { coeffs: v }
    }

    /// `λ^i`, the `i`-th power-basis vector for `i < n`.
    pub fn lambda_pow(&self, i: usize) -> FieldElem {
        if i < self.n && self.n > 1 {
            let mut v = vec![0u8; self.n];
            v[i] = 1;
            return FieldElem { coeffs: v };
        }
        self.pow(&self.lambda(), i as u128)
    }

    /// Element with base-`q` index `idx` (coordinate 0 least significant).
    pub fn from_index(&self, mut idx: u128) -> FieldElem {
        let q = self.q() as u128;
        let coeffs = (0..self.n)
            .map(|_| {
                let d = (idx % q) as u8;
                idx /= q;
                d
            })
            .collect();
        FieldElem { coeffs }
    }

    /// Base-`q` index of an element; `None` if it does not fit in 128 bits.
    pub fn to_index(&self, x: &FieldElem) -> Option<u128> {
        let q = self.q() as u128;
        x.coeffs
            .iter()
            .rev()
            .try_fold(0u128, |acc, &d| acc.checked_mul(q)?.checked_add(d as u128))
    }

    /// `q^n`, saturating at `u128::MAX`.
    pub fn order(&self) -> u128 {
        (self.q() as u128).checked_pow(self.n as u32).unwrap_or(u128::MAX)
    }

    fn check(&self, x: &FieldElem) -> Result<()> {
        if x.coeffs.len() != self.n || x.coeffs.iter().any(|&c| c as usize >= self.q()) {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let mut v = a.coeffs.clone();
        poly::add_assign(&self.base, &mut v, &b.coeffs);
        FieldElem { coeffs: v }
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let mut v = a.coeffs.clone();
        poly::sub_assign(&self.base, &mut v, &b.coeffs);
        FieldElem { coeffs: v }
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        FieldElem {
            coeffs: a.coeffs.iter().map(|&c| self.base.neg(c)).collect(),
        }
    }

    /// Multiplication by a base-field scalar.
    pub fn scale(&self, c: u8, a: &FieldElem) -> FieldElem {
        let row = self.base.mul_row(c);
        FieldElem {
            coeffs: a.coeffs.iter().map(|&x| row[x as usize]).collect(),
        }
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.mul_with(a, b, self.default_mode())
    }

    pub fn mul_with(&self, a: &FieldElem, b: &FieldElem, mode: MulMode) -> FieldElem {
        FieldElem {
            coeffs: self.reducer().mul_mod(&self.base, &a.coeffs, &b.coeffs, mode),
        }
    }

    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::DivideByZero);
        }
        let v = poly::inverse_mod(&self.base, &a.coeffs, &self.modulus).ok_or(Error::DivideByZero)?;
        Ok(FieldElem { coeffs: v })
    }

    pub fn pow(&self, a: &FieldElem, mut e: u128) -> FieldElem {
        let mut acc = self.one();
        let mut b = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            e >>= 1;
            if e > 0 {
                b = self.mul(&b, &b);
            }
        }
        acc
    }

    /// Checked arithmetic entry point; `b` is required for the binary operations.
    pub fn arith(&self, a: &FieldElem, op: ArithOp, b: Option<&FieldElem>) -> Result<FieldElem> {
        self.check(a)?;
        if let Some(b) = b {
            self.check(b)?;
        }
        let need_b = || b.ok_or_else(|| Error::BadDimensions(format!("{op:?} needs two operands")));
        match op {
            ArithOp::Add => Ok(self.add(a, need_b()?)),
            ArithOp::Mul => Ok(self.mul(a, need_b()?)),
            ArithOp::Neg => Ok(self.neg(a)),
            ArithOp::Inv => self.inv(a),
        }
    }

    /// One application of `x ↦ x^q`: spread coefficient `j` to degree `jq`
    /// (base-field symbols are fixed by the `q`-th power) and reduce.
    pub fn frobenius_with(&self, x: &FieldElem, mode: MulMode) -> FieldElem {
        let q = self.q();
        if self.n == 1 {
            return x.clone();
        }
        let mut spread = vec![0u8; (self.n - 1) * q + 1];
        for (j, &c) in x.coeffs.iter().enumerate() {
            spread[j * q] = c;
        }
        FieldElem {
            coeffs: self.reducer().reduce(&self.base, &spread, mode),
        }
    }

    /// `x^{q^i}`.
    pub fn frobenius_power(&self, x: &FieldElem, i: usize) -> FieldElem {
        let mode = self.default_mode();
        let mut y = x.clone();
        for _ in 0..(i % self.n) {
            y = self.frobenius_with(&y, mode);
        }
        y
    }

    /// `Tr(λ^j)` for `j < n`, from Newton's identities on the modulus.
    pub fn basis_traces(&self) -> &[u8] {
        self.basis_traces.get_or_init(|| {
            let f = &self.base;
            let n = self.n;
            let a = &self.modulus;
            let mut p = vec![0u8; n];
            p[0] = f.from_int(n as u64);
            for j in 1..n {
                // p_j = -(sum_{i=1}^{j-1} a_{n-i} p_{j-i} + j a_{n-j})
                let mut s = f.mul(f.from_int(j as u64), a[n - j]);
                for i in 1..j {
                    s = f.add(s, f.mul(a[n - i], p[j - i]));
                }
                p[j] = f.neg(s);
            }
            p
        })
    }

    /// `Tr(x) = sum_{i<n} x^{q^i}`, computed as the linear functional on coordinates.
    pub fn trace(&self, x: &FieldElem) -> u8 {
        let t = self.basis_traces();
        x.coeffs
            .iter()
            .zip(t)
            .fold(0u8, |acc, (&c, &tr)| self.base.add(acc, self.base.mul(c, tr)))
    }

    /// The first `t` elements in base-`q` index order.
    pub fn enumerate_elements(&self, t: usize) -> Result<Vec<FieldElem>> {
        let order = self.order();
        if t as u128 > order {
            return Err(Error::TooManyRequested {
                requested: t as u128,
                available: order,
            });
        }
        Ok((0..t as u128).map(|i| self.from_index(i)).collect())
    }
}

/// A coordinate map out of `F_{q^n}` in the power basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoordMap {
    /// The bijection `φ: F_{q^n} → F_q^n`.
    Phi,
    /// `ψ_k`: `φ` followed by truncation to the first `k` coordinates.
    Psi(usize),
}

impl ExtField {
    pub fn coord_map(&self, x: &FieldElem, map: CoordMap) -> Result<Vec<u8>> {
        self.check(x)?;
        match map {
            CoordMap::Phi => Ok(x.coeffs.clone()),
            CoordMap::Psi(k) => {
                if k > self.n {
                    return Err(Error::BadDimensions(format!("ψ_k needs k <= n, got k = {k}")));
                }
                Ok(x.coeffs[..k].to_vec())
            }
        }
    }

    /// Inverse of `φ`, or the zero-padding section of `ψ_k`.
    pub fn coord_unmap(&self, v: &[u8], map: CoordMap) -> Result<FieldElem> {
        let expected = match map {
            CoordMap::Phi => self.n,
            CoordMap::Psi(k) => k.min(self.n),
        };
        if v.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                got: v.len(),
            });
        }
        let mut coeffs = v.to_vec();
        coeffs.resize(self.n, 0);
        self.elem(coeffs)
    }
}
