//! Deterministic choice of the extension modulus: the monic irreducible of
//! degree `n` over `F_q` whose coefficient tuple `(c_{n-1}, ..., c_0)`, read
//! as a base-`q` integer, is smallest.
//!
//! Candidates are visited in that order and tested with Rabin's criterion.
//! Over `F_2` a bit-packed path with small-factor sieving makes degrees in
//! the tens of thousands reachable.

use super::base::BaseField;
use super::gf2x::{self, Gf2Poly};
use super::poly::{self, MulMode, Reducer};
use crate::error::{Error, Result};

/// Largest extension degree searched over `F_2`.
pub const MAX_BINARY_DEGREE: usize = 1 << 15;
/// Largest extension degree searched over any other `F_q`.
pub const MAX_GENERIC_DEGREE: usize = 64;

/// Smallest monic irreducible of degree `n` over `F_q`, low degree first
/// (length `n + 1`, last entry 1).
pub fn smallest_irreducible(base: &BaseField, n: usize) -> Result<Vec<u8>> {
    if n == 0 {
        return Err(Error::BadDimensions("extension degree must be positive".into()));
    }
    if n == 1 {
        return Ok(vec![0, 1]);
    }
    if base.q() == 2 {
        if n > MAX_BINARY_DEGREE {
            return Err(Error::ParameterTooLarge(format!(
                "irreducibility search over F_2 limited to degree {MAX_BINARY_DEGREE}, got {n}"
            )));
        }
        return Ok(smallest_binary(n));
    }
    if n > MAX_GENERIC_DEGREE {
        return Err(Error::ParameterTooLarge(format!(
            "irreducibility search over F_{} limited to degree {MAX_GENERIC_DEGREE}, got {n}",
            base.q()
        )));
    }
    let q = base.q();
    let mut digits = vec![0u8; n];
    loop {
        if digits[0] != 0 {
            let mut cand = digits.clone();
            cand.push(1);
            if !has_root(base, &cand) && rabin(base, &cand) {
                return Ok(cand);
            }
        }
        // Next tail in base-q order, c_0 least significant.
        let mut i = 0;
        loop {
            if i == n {
                unreachable!("irreducible polynomials exist in every degree");
            }
            digits[i] += 1;
            if digits[i] as usize == q {
                digits[i] = 0;
                i += 1;
            } else {
                break;
            }
        }
    }
}

fn has_root(base: &BaseField, poly: &[u8]) -> bool {
    base.elements().any(|a| {
        poly.iter()
            .rev()
            .fold(0u8, |acc, &c| base.add(base.mul(acc, a), c))
            == 0
    })
}

fn pow_mod(base: &BaseField, red: &Reducer, x: &[u8], mut e: u64) -> Vec<u8> {
    let n = red.degree();
    let mut acc = vec![0u8; n];
    acc[0] = 1;
    let mut b = x.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = red.mul_mod(base, &acc, &b, MulMode::Schoolbook);
        }
        e >>= 1;
        if e > 0 {
            b = red.mul_mod(base, &b, &b, MulMode::Schoolbook);
        }
    }
    acc
}

/// Rabin's test for a monic polynomial of degree `n >= 1`.
fn rabin(base: &BaseField, monic: &[u8]) -> bool {
    let n = monic.len() - 1;
    if n == 1 {
        return true;
    }
    let red = Reducer::new(base, monic);
    let mut x = vec![0u8; n];
    x[1] = 1;
    let checkpoints: Vec<usize> = gf2x::prime_divisors(n).iter().map(|r| n / r).collect();
    let mut acc = x.clone();
    let mut saved = Vec::new();
    for i in 1..=n {
        acc = pow_mod(base, &red, &acc, base.q() as u64);
        if checkpoints.contains(&i) {
            saved.push(acc.clone());
        }
    }
    if acc != x {
        return false;
    }
    saved.iter().all(|s| {
        let mut t = s.clone();
        poly::sub_assign(base, &mut t, &x);
        poly::trim(&mut t);
        if t.is_empty() {
            return false;
        }
        poly::gcd(base, monic, &t).len() == 1
    })
}

/// Irreducibility of a monic polynomial of positive degree over `F_q`.
pub fn is_irreducible(base: &BaseField, monic: &[u8]) -> bool {
    let n = monic.len() - 1;
    n >= 1 && (n == 1 || !has_root(base, monic)) && rabin(base, monic)
}

/// Search results for degrees where the scan takes minutes. Each entry lists
/// the exponents of the tail and is re-checked with Rabin's test when used;
/// `table_entries_match_search` repeats the full scan.
const BINARY_TABLE: &[(usize, &[usize])] = &[(16384, &[0, 1, 9, 11, 14, 16])];

fn smallest_binary(n: usize) -> Vec<u8> {
    if let Some((_, terms)) = BINARY_TABLE.iter().find(|(d, _)| *d == n) {
        let mut bits = vec![0u8; n];
        for &t in terms.iter() {
            bits[t] = 1;
        }
        assert!(
            gf2x::is_irreducible_sparse(n, &Gf2Poly::from_bits(&bits)),
            "tabulated modulus of degree {n} failed verification"
        );
        bits.push(1);
        return bits;
    }
    smallest_binary_scan(n)
}

fn smallest_binary_scan(n: usize) -> Vec<u8> {
    let sieve_degree = (n / 2).min(14) as u32;
    let sieve: Vec<(u32, u32, u32)> = gf2x::small_irreducibles(sieve_degree)
        .into_iter()
        .map(|(p, d)| (p, d, gf2x::small_x_pow(n, p)))
        .collect();
    let limit: u64 = if n >= 64 { u64::MAX } else { 1u64 << n };
    let mut tail: u64 = 1;
    while tail < limit {
        // Every nontrivial factor of degree <= sieve_degree shows up as a zero residue.
        let divisible = sieve.iter().any(|&(p, d, xn)| {
            (d as usize) < n && (xn ^ gf2x::small_rem(tail, p)) == 0
        });
        if !divisible {
            let bits: Vec<u8> = (0..64).map(|i| ((tail >> i) & 1) as u8).collect();
            let t = Gf2Poly::from_bits(&bits);
            if gf2x::is_irreducible_sparse(n, &t) {
                let mut out = vec![0u8; n + 1];
                for (i, b) in bits.iter().enumerate().take(n) {
                    out[i] = *b;
                }
                out[n] = 1;
                return out;
            }
        }
        tail += 2;
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_irreducible(base: &BaseField, monic: &[u8]) -> bool {
        // Exhaustive trial division by every monic polynomial of degree 1..=n/2.
        let q = base.q();
        let n = monic.len() - 1;
        for d in 1..=n / 2 {
            let count = q.pow(d as u32);
            for idx in 0..count {
                let mut div = vec![0u8; d + 1];
                let mut t = idx;
                for c in div.iter_mut().take(d) {
                    *c = (t % q) as u8;
                    t /= q;
                }
                div[d] = 1;
                let (_, r) = poly::divrem_monic(base, monic, &div);
                if r.iter().all(|&c| c == 0) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn worked_examples() {
        let f2 = BaseField::get(2).unwrap();
        assert_eq!(smallest_irreducible(&f2, 1).unwrap(), vec![0, 1]);
        assert_eq!(smallest_irreducible(&f2, 2).unwrap(), vec![1, 1, 1]);
        assert_eq!(smallest_irreducible(&f2, 3).unwrap(), vec![1, 1, 0, 1]);
        assert_eq!(smallest_irreducible(&f2, 4).unwrap(), vec![1, 1, 0, 0, 1]);
    }

    #[test]
    fn search_matches_brute_force_order() {
        for q in [2u64, 3, 4, 5] {
            let base = BaseField::get(q).unwrap();
            for n in 2..=6usize {
                if (q as usize).pow(n as u32) > 5000 {
                    continue;
                }
                // First candidate in base-q order passing exhaustive trial division.
                let qq = q as usize;
                let expect = (0..qq.pow(n as u32))
                    .map(|t| {
                        let mut c: Vec<u8> = (0..n).map(|i| ((t / qq.pow(i as u32)) % qq) as u8).collect();
                        c.push(1);
                        c
                    })
                    .find(|c| brute_irreducible(&base, c))
                    .unwrap();
                assert_eq!(smallest_irreducible(&base, n).unwrap(), expect, "q={q} n={n}");
            }
        }
    }

    #[test]
    fn binary_path_agrees_with_generic_rabin() {
        let base = BaseField::get(2).unwrap();
        for n in 2..=40 {
            let m = smallest_irreducible(&base, n).unwrap();
            assert!(rabin(&base, &m), "n={n}");
            // Every smaller odd tail must be reducible.
            let tail: u64 = m[..n].iter().enumerate().map(|(i, &b)| (b as u64) << i).sum();
            for smaller in (1..tail).step_by(2) {
                let mut c: Vec<u8> = (0..n).map(|i| ((smaller >> i) & 1) as u8).collect();
                c.push(1);
                assert!(!is_irreducible(&base, &c), "n={n} tail={smaller}");
            }
        }
    }

    #[test]
    fn oversized_parameters_rejected() {
        let b3 = BaseField::get(3).unwrap();
        assert!(matches!(smallest_irreducible(&b3, 65), Err(Error::ParameterTooLarge(_))));
        let b2 = BaseField::get(2).unwrap();
        assert!(matches!(
            smallest_irreducible(&b2, MAX_BINARY_DEGREE + 1),
            Err(Error::ParameterTooLarge(_))
        ));
    }
}

#[cfg(test)]
mod slow {
    use super::*;

    #[test]
    #[ignore = "full scan takes about three minutes"]
    fn table_entries_match_search() {
        for &(n, _) in BINARY_TABLE {
            assert_eq!(smallest_binary_scan(n), smallest_binary(n), "n={n}");
        }
    }
}
