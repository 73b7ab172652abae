//! The base alphabet `F_q`, `q = p^m <= 256`.
//!
//! Symbols are `u8` values in `0..q`. A symbol `s` stands for the polynomial
//! `d_0 + d_1 Y + ... + d_{m-1} Y^{m-1}` over `F_p` where `s = sum d_i p^i`,
//! reduced modulo the smallest monic irreducible `base_modulus` of degree `m`.
//! When `q` is a power of two, addition is plain XOR on symbols.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// Largest supported alphabet.
pub const MAX_Q: u64 = 256;

/// Table-driven arithmetic in `F_q`.
#[derive(Debug)]
pub struct BaseField {
    q: usize,
    p: usize,
    m: usize,
    base_modulus: Option<Vec<u8>>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

/// Splits `q` into `(p, m)` with `q = p^m`, `p` prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let mut rest = q;
    let mut m = 0;
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

fn cache() -> &'static Mutex<HashMap<u64, Arc<BaseField>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<BaseField>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

// Polynomials over F_p with small integer coefficients, low degree first.
fn fp_polymulmod(a: &[usize], b: &[usize], modulus: &[usize], p: usize) -> Vec<usize> {
    let m = modulus.len() - 1;
    let mut prod = vec![0usize; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for d in (m..prod.len()).rev() {
        let c = prod[d];
        if c != 0 {
            for (t, &mc) in modulus.iter().enumerate() {
                let idx = d - m + t;
                prod[idx] = (prod[idx] + p * p - c * mc % p) % p;
            }
        }
    }
    prod.truncate(m);
    prod
}

fn fp_has_factor_of_degree(poly: &[usize], d: usize, p: usize) -> bool {
    // Exhaustive trial division by every monic polynomial of degree d.
    let count = p.pow(d as u32);
    for idx in 0..count {
        let mut div = vec![0usize; d + 1];
        let mut t = idx;
        for c in div.iter_mut().take(d) {
            *c = t % p;
            t /= p;
        }
        div[d] = 1;
        let mut r = poly.to_vec();
        for top in (d..r.len()).rev() {
            let c = r[top];
            if c != 0 {
                for (k, &dc) in div.iter().enumerate() {
                    let i = top - d + k;
                    r[i] = (r[i] + p * p - c * dc % p) % p;
                }
            }
        }
        if r[..d].iter().all(|&c| c == 0) {
            return true;
        }
    }
    false
}

fn smallest_irreducible_fp(p: usize, m: usize) -> Vec<usize> {
    let count = p.pow(m as u32);
    for tail in 0..count {
        let mut poly = vec![0usize; m + 1];
        let mut t = tail;
        for c in poly.iter_mut().take(m) {
            *c = t % p;
            t /= p;
        }
        poly[m] = 1;
        if (1..=m / 2).all(|d| !fp_has_factor_of_degree(&poly, d, p)) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl BaseField {
    /// Returns the (shared, cached) field with `q` elements.
    pub fn get(q: u64) -> Result<Arc<BaseField>> {
        if q > MAX_Q {
            return Err(Error::ParameterTooLarge(format!("q = {q} exceeds {MAX_Q}")));
        }
        let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let mut guard = cache().lock().expect("base field cache poisoned");
        if let Some(f) = guard.get(&q) {
            return Ok(f.clone());
        }
        let f = Arc::new(Self::build(q as usize, p as usize, m as usize));
        guard.insert(q, f.clone());
        Ok(f)
    }

    fn build(q: usize, p: usize, m: usize) -> Self {
        let modulus = if m > 1 {
            Some(smallest_irreducible_fp(p, m))
        } else {
            None
        };
        let digits = |s: usize| -> Vec<usize> {
            let mut out = vec![0; m];
            let mut t = s;
            for d in out.iter_mut() {
                *d = t % p;
                t /= p;
            }
            out
        };
        let undigits = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &x| acc * p + x) };
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = undigits(&sum) as u8;
                let prod = match &modulus {
                    Some(md) => undigits(&fp_polymulmod(&da, &db, md, p)),
                    None => (a * b) % p,
                };
                mul[a * q + b] = prod as u8;
            }
        }
        let mut neg = vec![0u8; q];
        let mut inv = vec![0u8; q];
        for a in 0..q {
            for b in 0..q {
                if add[a * q + b] == 0 {
                    neg[a] = b as u8;
                }
                if mul[a * q + b] == 1 {
                    inv[a] = b as u8;
                }
            }
        }
        BaseField {
            q,
            p,
            m,
            base_modulus: modulus.map(|v| v.into_iter().map(|c| c as u8).collect()),
            add,
            mul,
            neg,
            inv,
        }
    }

    #[inline]
    pub fn q(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn characteristic(&self) -> usize {
        self.p
    }

    /// Degree of `F_q` over its prime field.
    #[inline]
    pub fn degree(&self) -> usize {
        self.m
    }

    /// Monic irreducible defining `F_q` over `F_p`, low degree first; `None` for prime `q`.
    pub fn base_modulus(&self) -> Option<&[u8]> {
        self.base_modulus.as_deref()
    }

    /// `Some(log2 q)` when `q` is a power of two.
    pub fn log2_exact(&self) -> Option<u32> {
        self.q.is_power_of_two().then(|| self.q.trailing_zeros())
    }

    /// Bits per rejection-sampling block, `ceil(log2 q)`.
    pub fn symbol_width(&self) -> u32 {
        usize::BITS - (self.q - 1).leading_zeros()
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: u8) -> Option<u8> {
        (a != 0).then(|| self.inv[a as usize])
    }

    /// `a * b + c`.
    #[inline]
    pub fn mul_add(&self, a: u8, b: u8, c: u8) -> u8 {
        self.add(self.mul(a, b), c)
    }

    pub fn pow(&self, mut a: u8, mut e: u64) -> u8 {
        let mut acc = 1u8;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// The image of the integer `j` in the prime subfield.
    #[inline]
    pub fn from_int(&self, j: u64) -> u8 {
        (j % self.p as u64) as u8
    }

    /// The row of the multiplication table for a fixed left factor.
    #[inline]
    pub fn mul_row(&self, a: u8) -> &[u8] {
        let start = a as usize * self.q;
        &self.mul[start..start + self.q]
    }

    #[inline]
    pub fn is_char_two(&self) -> bool {
        self.p == 2
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        (0..self.q).map(|s| s as u8)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(251), Some((251, 1)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(0), None);
        assert!(matches!(BaseField::get(12), Err(Error::NotPrimePower(12))));
        assert!(matches!(BaseField::get(512), Err(Error::ParameterTooLarge(_))));
    }

    #[test]
    fn base_moduli_are_smallest() {
        assert_eq!(BaseField::get(4).unwrap().base_modulus(), Some(&[1u8, 1, 1][..]));
        assert_eq!(BaseField::get(8).unwrap().base_modulus(), Some(&[1u8, 1, 0, 1][..]));
        // Y^2 + 1 is irreducible over F_3 and is the smallest tail.
        assert_eq!(BaseField::get(9).unwrap().base_modulus(), Some(&[1u8, 0, 1][..]));
        assert_eq!(BaseField::get(7).unwrap().base_modulus(), None);
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            let f = BaseField::get(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                    // Fermat: a^(q-1) = 1.
                    assert_eq!(f.pow(a, q - 1), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements().step_by(3) {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
            }
            assert_eq!(f.inv(0), None);
        }
    }

    #[test]
    fn char_two_addition_is_xor() {
        for q in [2u64, 4, 8, 16, 256] {
            let f = BaseField::get(q).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.add(a, b), a ^ b);
                }
            }
        }
    }

    #[test]
    fn symbol_widths() {
        assert_eq!(BaseField::get(2).unwrap().symbol_width(), 1);
        assert_eq!(BaseField::get(3).unwrap().symbol_width(), 2);
        assert_eq!(BaseField::get(8).unwrap().symbol_width(), 3);
        assert_eq!(BaseField::get(9).unwrap().symbol_width(), 4);
        assert_eq!(BaseField::get(256).unwrap().symbol_width(), 8);
        assert_eq!(BaseField::get(8).unwrap().log2_exact(), Some(3));
        assert_eq!(BaseField::get(9).unwrap().log2_exact(), None);
    }
}
