//! Dense univariate polynomials over `F_q`, coefficients low degree first.
//!
//! Two multiplication/reduction paths are provided: a quadratic schoolbook path
//! (product plus long division) and a fast path (Karatsuba product plus
//! reduction through a precomputed power-series inverse of the reversed
//! modulus). Both return identical coefficient vectors.

use super::base::BaseField;

const KARATSUBA_CUTOFF: usize = 32;

/// Multiplication / reduction strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MulMode {
    Schoolbook,
    Fast,
}

/// Strips trailing zero coefficients.
pub fn trim(a: &mut Vec<u8>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Degree of `a`, `None` for the zero polynomial.
pub fn degree(a: &[u8]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn add_assign(f: &BaseField, acc: &mut Vec<u8>, b: &[u8]) {
    if acc.len() < b.len() {
        acc.resize(b.len(), 0);
    }
    if f.is_char_two() {
        for (x, &y) in acc.iter_mut().zip(b) {
            *x ^= y;
        }
    } else {
        for (x, &y) in acc.iter_mut().zip(b) {
            *x = f.add(*x, y);
        }
    }
}

pub fn sub_assign(f: &BaseField, acc: &mut Vec<u8>, b: &[u8]) {
    if acc.len() < b.len() {
        acc.resize(b.len(), 0);
    }
    for (x, &y) in acc.iter_mut().zip(b) {
        *x = f.sub(*x, y);
    }
}

/// `out[i] += a[i]` on equal-length prefixes.
#[inline]
fn accumulate(f: &BaseField, out: &mut [u8], a: &[u8]) {
    if f.is_char_two() {
        for (x, &y) in out.iter_mut().zip(a) {
            *x ^= y;
        }
    } else {
        for (x, &y) in out.iter_mut().zip(a) {
            *x = f.add(*x, y);
        }
    }
}

#[inline]
fn subtract(f: &BaseField, out: &mut [u8], a: &[u8]) {
    if f.is_char_two() {
        for (x, &y) in out.iter_mut().zip(a) {
            *x ^= y;
        }
    } else {
        for (x, &y) in out.iter_mut().zip(a) {
            *x = f.sub(*x, y);
        }
    }
}

/// Adds `a * b` into `out` (`out.len() >= a.len() + b.len() - 1`).
fn schoolbook_into(f: &BaseField, a: &[u8], b: &[u8], out: &mut [u8]) {
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let row = f.mul_row(x);
        let dst = &mut out[i..i + b.len()];
        if f.is_char_two() {
            for (o, &y) in dst.iter_mut().zip(b) {
                *o ^= row[y as usize];
            }
        } else {
            for (o, &y) in dst.iter_mut().zip(b) {
                *o = f.add(*o, row[y as usize]);
            }
        }
    }
}

/// Full product by the quadratic method; length `a.len() + b.len() - 1`.
pub fn mul_schoolbook(f: &BaseField, a: &[u8], b: &[u8]) -> Vec<u8> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u8; a.len() + b.len() - 1];
    schoolbook_into(f, a, b, &mut out);
    out
}

/// Full product by Karatsuba recursion; identical output to [`mul_schoolbook`].
pub fn mul_karatsuba(f: &BaseField, a: &[u8], b: &[u8]) -> Vec<u8> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let out_len = a.len() + b.len() - 1;
    if a.len().min(b.len()) <= KARATSUBA_CUTOFF {
        return mul_schoolbook(f, a, b);
    }
    let mut out = vec![0u8; out_len];
    // Split the longer operand into blocks of the shorter one's length.
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let s = short.len();
    let mut scratch = vec![0u8; 2 * s];
    for (blk, chunk) in long.chunks(s).enumerate() {
        scratch.iter_mut().for_each(|x| *x = 0);
        if chunk.len() == s {
            karatsuba_square_into(f, chunk, short, &mut scratch[..2 * s - 1]);
        } else {
            let p = mul_karatsuba(f, chunk, short);
            scratch[..p.len()].copy_from_slice(&p);
        }
        let off = blk * s;
        let len = (chunk.len() + s - 1).min(out_len - off);
        accumulate(f, &mut out[off..off + len], &scratch[..len]);
    }
    out
}

/// Adds `a * b` into `out` for equal-length operands (`out.len() == 2n - 1`).
fn karatsuba_square_into(f: &BaseField, a: &[u8], b: &[u8], out: &mut [u8]) {
    let n = a.len();
    debug_assert_eq!(b.len(), n);
    if n <= KARATSUBA_CUTOFF {
        schoolbook_into(f, a, b, out);
        return;
    }
    let h = n / 2;
    let hi = n - h;
    let (a0, a1) = a.split_at(h);
    let (b0, b1) = b.split_at(h);

    let mut z0 = vec![0u8; 2 * h - 1];
    karatsuba_square_into(f, a0, b0, &mut z0);
    let mut z2 = vec![0u8; 2 * hi - 1];
    karatsuba_square_into(f, a1, b1, &mut z2);

    let mut sa = a1.to_vec();
    accumulate(f, &mut sa[..h], a0);
    let mut sb = b1.to_vec();
    accumulate(f, &mut sb[..h], b0);
    let mut z1 = vec![0u8; 2 * hi - 1];
    karatsuba_square_into(f, &sa, &sb, &mut z1);
    subtract(f, &mut z1[..z0.len()], &z0);
    subtract(f, &mut z1, &z2);

    accumulate(f, &mut out[..z0.len()], &z0);
    accumulate(f, &mut out[h..h + z1.len()], &z1);
    accumulate(f, &mut out[2 * h..2 * h + z2.len()], &z2);
}

pub fn mul(f: &BaseField, a: &[u8], b: &[u8], mode: MulMode) -> Vec<u8> {
    match mode {
        MulMode::Schoolbook => mul_schoolbook(f, a, b),
        MulMode::Fast => mul_karatsuba(f, a, b),
    }
}

/// Long division by a monic divisor; returns `(quotient, remainder)`, the
/// remainder padded to `divisor.len() - 1` coefficients.
pub fn divrem_monic(f: &BaseField, a: &[u8], divisor: &[u8]) -> (Vec<u8>, Vec<u8>) {
    let d = divisor.len() - 1;
    debug_assert_eq!(divisor[d], 1, "divisor must be monic");
    let mut r = a.to_vec();
    if r.len() <= d {
        r.resize(d, 0);
        return (Vec::new(), r);
    }
    let mut quot = vec![0u8; r.len() - d];
    for top in (d..r.len()).rev() {
        let c = r[top];
        if c == 0 {
            continue;
        }
        quot[top - d] = c;
        let row = f.mul_row(c);
        for (k, &dc) in divisor.iter().enumerate() {
            let i = top - d + k;
            r[i] = f.sub(r[i], row[dc as usize]);
        }
    }
    r.truncate(d);
    (quot, r)
}

/// Division by an arbitrary nonzero divisor.
pub fn divrem(f: &BaseField, a: &[u8], divisor: &[u8]) -> (Vec<u8>, Vec<u8>) {
    let mut d = divisor.to_vec();
    trim(&mut d);
    let lead = *d.last().expect("division by the zero polynomial");
    let lead_inv = f.inv(lead).expect("nonzero leading coefficient");
    let monic: Vec<u8> = d.iter().map(|&c| f.mul(c, lead_inv)).collect();
    let (mut quot, rem) = divrem_monic(f, a, &monic);
    for c in quot.iter_mut() {
        *c = f.mul(*c, lead_inv);
    }
    (quot, rem)
}

/// Power-series inverse of `a` (with `a[0] != 0`) modulo `X^prec`, by Newton iteration.
pub fn series_inverse(f: &BaseField, a: &[u8], prec: usize) -> Vec<u8> {
    let a0_inv = f.inv(a[0]).expect("series inverse needs a unit constant term");
    let mut g = vec![a0_inv];
    let mut have = 1;
    while have < prec {
        let next = (2 * have).min(prec);
        // g <- g + g * (1 - a g)  (mod X^next)
        let a_trunc = &a[..a.len().min(next)];
        let mut e = mul_karatsuba(f, a_trunc, &g);
        e.resize(next, 0);
        let mut t: Vec<u8> = e.iter().map(|&c| f.neg(c)).collect();
        t[0] = f.add(t[0], 1);
        let mut corr = mul_karatsuba(f, &g, &t);
        corr.resize(next, 0);
        g.resize(next, 0);
        add_assign(f, &mut g, &corr);
        g.truncate(next);
        have = next;
    }
    g.truncate(prec);
    g
}

/// Monic greatest common divisor.
pub fn gcd(f: &BaseField, a: &[u8], b: &[u8]) -> Vec<u8> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, mut r) = divrem(f, &x, &y);
        trim(&mut r);
        x = std::mem::replace(&mut y, r);
    }
    if let Some(&lead) = x.last() {
        let li = f.inv(lead).unwrap();
        for c in x.iter_mut() {
            *c = f.mul(*c, li);
        }
    }
    x
}

/// Inverse of `a` modulo `modulus` by the extended Euclidean algorithm.
pub fn inverse_mod(f: &BaseField, a: &[u8], modulus: &[u8]) -> Option<Vec<u8>> {
    let n = modulus.len() - 1;
    let mut r0 = modulus.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r1);
    let mut s0: Vec<u8> = Vec::new();
    let mut s1: Vec<u8> = vec![1];
    while !r1.is_empty() {
        let (quot, mut rem) = divrem(f, &r0, &r1);
        trim(&mut rem);
        let mut s2 = s0.clone();
        let mut prod = mul_schoolbook(f, &quot, &s1);
        trim(&mut prod);
        sub_assign(f, &mut s2, &prod);
        trim(&mut s2);
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r0 is the gcd (a unit if a is invertible).
    if r0.len() != 1 {
        return None;
    }
    let c = f.inv(r0[0])?;
    let mut out: Vec<u8> = s0.iter().map(|&s| f.mul(s, c)).collect();
    let (_, mut rem) = divrem_monic(f, &out, modulus);
    rem.resize(n, 0);
    out = rem;
    Some(out)
}

/// Reduction modulo a fixed monic polynomial of degree `n`.
#[derive(Debug, Clone)]
pub struct Reducer {
    modulus: Vec<u8>,
    // (reverse of modulus)^{-1} mod X^n
    rev_inv: Vec<u8>,
}

impl Reducer {
    pub fn new(f: &BaseField, modulus: &[u8]) -> Self {
        let n = modulus.len() - 1;
        let rev: Vec<u8> = modulus.iter().rev().copied().collect();
        let rev_inv = if n == 0 { Vec::new() } else { series_inverse(f, &rev, n) };
        Reducer {
            modulus: modulus.to_vec(),
            rev_inv,
        }
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    /// Remainder of `a` modulo the modulus, as exactly `n` coefficients.
    pub fn reduce(&self, f: &BaseField, a: &[u8], mode: MulMode) -> Vec<u8> {
        let n = self.degree();
        match mode {
            MulMode::Schoolbook => divrem_monic(f, a, &self.modulus).1,
            MulMode::Fast => {
                let mut buf = a.to_vec();
                let mut len = buf.len();
                while len > n {
                    let w = len.min(2 * n);
                    let start = len - w;
                    let rem = self.reduce_window(f, &buf[start..len]);
                    buf[start..start + n].copy_from_slice(&rem);
                    len = start + n;
                }
                buf.truncate(len);
                buf.resize(n, 0);
                buf
            }
        }
    }

    // Barrett-style reduction of a window of length n < L <= 2n.
    fn reduce_window(&self, f: &BaseField, a: &[u8]) -> Vec<u8> {
        let n = self.degree();
        let len = a.len();
        let qlen = len - n;
        let ra: Vec<u8> = a.iter().rev().take(qlen).copied().collect();
        let mut rq = mul_karatsuba(f, &ra, &self.rev_inv[..qlen]);
        rq.truncate(qlen);
        rq.resize(qlen, 0);
        let quot: Vec<u8> = rq.into_iter().rev().collect();
        let prod = mul_karatsuba(f, &quot, &self.modulus);
        let mut r = a[..n].to_vec();
        subtract(f, &mut r, &prod[..n]);
        r
    }

    /// `a * b mod modulus` for `a`, `b` of degree `< n`.
    pub fn mul_mod(&self, f: &BaseField, a: &[u8], b: &[u8], mode: MulMode) -> Vec<u8> {
        let prod = mul(f, a, b, mode);
        self.reduce(f, &prod, mode)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rand_poly(q: usize, len: usize, seed: u64) -> Vec<u8> {
        let mut s = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (0..len)
            .map(|_| {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((s >> 33) % q as u64) as u8
            })
            .collect()
    }

    #[test]
    fn karatsuba_matches_schoolbook_uneven() {
        for q in [2u64, 3, 4, 7, 9] {
            let f = BaseField::get(q).unwrap();
            for (la, lb) in [(1, 1), (33, 33), (100, 37), (37, 200), (257, 256), (64, 1000)] {
                let a = rand_poly(q as usize, la, la as u64 * 31 + lb as u64);
                let b = rand_poly(q as usize, lb, lb as u64 * 17 + 5);
                assert_eq!(mul_karatsuba(&f, &a, &b), mul_schoolbook(&f, &a, &b), "q={q} {la}x{lb}");
            }
        }
    }

    #[test]
    fn division_identity() {
        let f = BaseField::get(5).unwrap();
        let a = rand_poly(5, 40, 3);
        let mut d = rand_poly(5, 11, 4);
        d[10] = 3;
        let (quot, rem) = divrem(&f, &a, &d);
        let mut back = mul_schoolbook(&f, &quot, &d);
        add_assign(&f, &mut back, &rem);
        trim(&mut back);
        let mut a2 = a.clone();
        trim(&mut a2);
        assert_eq!(back, a2);
    }

    #[test]
    fn series_inverse_is_inverse() {
        let f = BaseField::get(3).unwrap();
        let mut a = rand_poly(3, 70, 9);
        a[0] = 2;
        let inv = series_inverse(&f, &a, 70);
        let mut prod = mul_schoolbook(&f, &a, &inv);
        prod.truncate(70);
        let mut expect = vec![0u8; 70];
        expect[0] = 1;
        assert_eq!(prod, expect);
    }

    #[test]
    fn gcd_and_inverse() {
        let f = BaseField::get(2).unwrap();
        // X^3 + X + 1 is irreducible over F_2.
        let m = [1u8, 1, 0, 1];
        let a = [0u8, 1, 1];
        let inv = inverse_mod(&f, &a, &m).unwrap();
        let r = Reducer::new(&f, &m);
        assert_eq!(r.mul_mod(&f, &a, &inv, MulMode::Schoolbook), vec![1, 0, 0]);
        // (X+1)^2 and (X+1)(X^2+X+1) share X+1.
        let g = gcd(&f, &[1, 0, 1], &[1, 0, 0, 1]);
        assert_eq!(g, vec![1, 1]);
        assert_eq!(inverse_mod(&f, &[1, 1], &[1, 0, 1]), None);
    }

    proptest! {
        #[test]
        fn fast_reduction_matches_long_division(
            q in prop::sample::select(vec![2u64, 3, 4, 5, 8]),
            n in 1usize..90,
            extra in 0usize..400,
            seed in any::<u64>(),
        ) {
            let f = BaseField::get(q).unwrap();
            let mut m = rand_poly(q as usize, n + 1, seed);
            m[n] = 1;
            let a = rand_poly(q as usize, n + extra, seed ^ 0xabcdef);
            let r = Reducer::new(&f, &m);
            prop_assert_eq!(r.reduce(&f, &a, MulMode::Fast), r.reduce(&f, &a, MulMode::Schoolbook));
        }
    }
}
