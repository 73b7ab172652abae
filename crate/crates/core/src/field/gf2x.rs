//! Bit-packed polynomials over `F_2`, used by the irreducibility search at
//! large extension degrees.

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Gf2Poly {
    words: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Gf2Poly { words: Vec::new() }
    }

    pub fn monomial(d: usize) -> Self {
        let mut p = Gf2Poly {
            words: vec![0; d / 64 + 1],
        };
        p.words[d / 64] = 1 << (d % 64);
        p
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut words = vec![0u64; bits.len().div_ceil(64)];
        for (i, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        let mut p = Gf2Poly { words };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    pub fn bit(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn xor_assign(&mut self, other: &Gf2Poly) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        self.normalize();
    }

    /// `self ^= other << shift`.
    fn xor_shifted(&mut self, other: &Gf2Poly, shift: usize) {
        if other.is_zero() {
            return;
        }
        let ws = shift / 64;
        let bs = shift % 64;
        let need = other.words.len() + ws + 1;
        if self.words.len() < need {
            self.words.resize(need, 0);
        }
        if bs == 0 {
            for (i, &w) in other.words.iter().enumerate() {
                self.words[i + ws] ^= w;
            }
        } else {
            for (i, &w) in other.words.iter().enumerate() {
                self.words[i + ws] ^= w << bs;
                self.words[i + ws + 1] ^= w >> (64 - bs);
            }
        }
    }

    fn shr(&self, shift: usize) -> Gf2Poly {
        let ws = shift / 64;
        let bs = shift % 64;
        if ws >= self.words.len() {
            return Gf2Poly::zero();
        }
        let src = &self.words[ws..];
        let mut words = vec![0u64; src.len()];
        for i in 0..src.len() {
            words[i] = if bs == 0 {
                src[i]
            } else {
                let hi = src.get(i + 1).map_or(0, |w| w << (64 - bs));
                (src[i] >> bs) | hi
            };
        }
        let mut p = Gf2Poly { words };
        p.normalize();
        p
    }

    fn truncate_bits(&mut self, n: usize) {
        let full = n / 64;
        let rem = n % 64;
        if self.words.len() > full {
            if rem == 0 {
                self.words.truncate(full);
            } else {
                self.words.truncate(full + 1);
                self.words[full] &= (1u64 << rem) - 1;
            }
        }
        self.normalize();
    }

    pub fn square(&self) -> Gf2Poly {
        let mut words = vec![0u64; self.words.len() * 2];
        for (i, &w) in self.words.iter().enumerate() {
            words[2 * i] = spread(w as u32);
            words[2 * i + 1] = spread((w >> 32) as u32);
        }
        let mut p = Gf2Poly { words };
        p.normalize();
        p
    }

    /// Remainder modulo a general nonzero divisor (bitwise long division).
    pub fn rem(&self, divisor: &Gf2Poly) -> Gf2Poly {
        let d = divisor.degree().expect("division by zero polynomial");
        let mut r = self.clone();
        while let Some(top) = r.degree() {
            if top < d {
                break;
            }
            r.xor_shifted(divisor, top - d);
            r.normalize();
        }
        r
    }

    pub fn gcd(a: &Gf2Poly, b: &Gf2Poly) -> Gf2Poly {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let r = x.rem(&y);
            x = std::mem::replace(&mut y, r);
        }
        x
    }
}

fn spread(x: u32) -> u64 {
    let mut v = x as u64;
    v = (v | (v << 16)) & 0x0000_FFFF_0000_FFFF;
    v = (v | (v << 8)) & 0x00FF_00FF_00FF_00FF;
    v = (v | (v << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    v = (v | (v << 2)) & 0x3333_3333_3333_3333;
    v = (v | (v << 1)) & 0x5555_5555_5555_5555;
    v
}

/// Reduction modulo `X^n + tail(X)` with `deg tail < n`, by folding the part
/// above degree `n` back through `tail`.
pub(crate) struct SparseModulus {
    n: usize,
    tail_terms: Vec<usize>,
    tail_degree: usize,
}

impl SparseModulus {
    pub fn new(n: usize, tail: &Gf2Poly) -> Self {
        let tail_terms: Vec<usize> = (0..=tail.degree().unwrap_or(0)).filter(|&i| tail.bit(i)).collect();
        SparseModulus {
            n,
            tail_degree: tail.degree().unwrap_or(0),
            tail_terms,
        }
    }

    pub fn reduce(&self, mut a: Gf2Poly) -> Gf2Poly {
        debug_assert!(self.tail_degree < self.n);
        loop {
            match a.degree() {
                Some(d) if d >= self.n => {}
                _ => return a,
            }
            let high = a.shr(self.n);
            a.truncate_bits(self.n);
            for &t in &self.tail_terms {
                a.xor_shifted(&high, t);
            }
            a.normalize();
        }
    }
}

/// Rabin's irreducibility test for `X^n + tail`, `tail(0) = 1`.
pub(crate) fn is_irreducible_sparse(n: usize, tail: &Gf2Poly) -> bool {
    if n == 1 {
        return true;
    }
    let modulus = SparseModulus::new(n, tail);
    let mut full = tail.clone();
    full.xor_assign(&Gf2Poly::monomial(n));
    let prime_divs = prime_divisors(n);
    let checkpoints: Vec<usize> = prime_divs.iter().map(|r| n / r).collect();
    let x = Gf2Poly::monomial(1);
    let mut acc = x.clone();
    let mut saved = Vec::new();
    for i in 1..=n {
        acc = modulus.reduce(acc.square());
        if checkpoints.contains(&i) {
            saved.push(acc.clone());
        }
    }
    if acc != x {
        return false;
    }
    saved.iter().all(|s| {
        let mut t = s.clone();
        t.xor_assign(&x);
        let g = Gf2Poly::gcd(&full, &t);
        g.degree() == Some(0)
    })
}

pub(crate) fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Irreducible polynomials over `F_2` of degree `1..=max_deg`, packed in `u32`.
pub(crate) fn small_irreducibles(max_deg: u32) -> Vec<(u32, u32)> {
    let mut found: Vec<(u32, u32)> = Vec::new();
    for d in 1..=max_deg {
        for tail in 0u32..(1 << d) {
            let p = (1u32 << d) | tail;
            if d > 1 && tail & 1 == 0 {
                continue;
            }
            let reducible = found
                .iter()
                .take_while(|&&(_, dq)| 2 * dq <= d)
                .any(|&(g, _)| small_rem(p as u64, g) == 0);
            if !reducible {
                found.push((p, d));
            }
        }
    }
    found
}

pub(crate) fn small_rem(mut a: u64, m: u32) -> u32 {
    let dm = 31 - m.leading_zeros();
    while a != 0 {
        let da = 63 - a.leading_zeros();
        if da < dm {
            break;
        }
        a ^= (m as u64) << (da - dm);
    }
    a as u32
}

pub(crate) fn small_mulmod(a: u32, b: u32, m: u32) -> u32 {
    let mut prod = 0u64;
    for i in 0..32 {
        if (b >> i) & 1 == 1 {
            prod ^= (a as u64) << i;
        }
    }
    small_rem(prod, m)
}

/// `X^e mod m` for a small modulus.
pub(crate) fn small_x_pow(e: usize, m: u32) -> u32 {
    let mut acc = small_rem(1, m);
    let mut base = small_rem(2, m);
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = small_mulmod(acc, base, m);
        }
        base = small_mulmod(base, base, m);
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_matches_bitwise() {
        let p = Gf2Poly::from_bits(&[1, 1, 0, 1, 0, 0, 1]);
        let s = p.square();
        // (sum x^i)^2 = sum x^(2i) in characteristic 2.
        for i in 0..20 {
            assert_eq!(s.bit(i), i % 2 == 0 && p.bit(i / 2));
        }
    }

    #[test]
    fn known_small_irreducibles() {
        let irr = small_irreducibles(4);
        let polys: Vec<u32> = irr.iter().map(|&(p, _)| p).collect();
        assert_eq!(polys, vec![0b10, 0b11, 0b111, 0b1011, 0b1101, 0b10011, 0b11001, 0b11111]);
    }

    #[test]
    fn rabin_agrees_with_small_list() {
        let irr = small_irreducibles(10);
        for d in 2..=10usize {
            for tail in (1u32..(1 << d)).step_by(2) {
                let expect = irr.contains(&((1 << d) | tail, d as u32));
                let bits: Vec<u8> = (0..d).map(|i| ((tail >> i) & 1) as u8).collect();
                let got = is_irreducible_sparse(d, &Gf2Poly::from_bits(&bits));
                assert_eq!(got, expect, "d={d} tail={tail:b}");
            }
        }
    }
}
