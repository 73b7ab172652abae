//! Extension moduli against trial division by every monic polynomial of
//! degree at most `n/2`.

use pseudocodes::field::{make_extension, BaseField};

/// Remainder of `a` modulo the monic `m`, both low degree first.
fn rem(f: &BaseField, a: &[u8], m: &[u8]) -> Vec<u8> {
    let mut r = a.to_vec();
    let d = m.len() - 1;
    while r.len() > d {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - d;
        for (i, &c) in m.iter().enumerate() {
            r[shift + i] = f.sub(r[shift + i], f.mul(lead, c));
        }
        r.pop();
    }
    r
}

fn monic(q: usize, d: usize, mut idx: usize) -> Vec<u8> {
    let mut p = Vec::with_capacity(d + 1);
    for _ in 0..d {
        p.push((idx % q) as u8);
        idx /= q;
    }
    p.push(1);
    p
}

fn irreducible_by_division(f: &BaseField, p: &[u8]) -> bool {
    let n = p.len() - 1;
    let q = f.q();
    (1..=n / 2).all(|d| (0..q.pow(d as u32)).all(|i| rem(f, p, &monic(q, d, i)).iter().any(|&c| c != 0)))
}

#[test]
fn moduli_are_irreducible() {
    for q in [2u64, 3, 4, 5, 7, 8, 9, 16] {
        let f = BaseField::get(q).unwrap();
        for n in 1..=24usize {
            if (q as u128).pow(n.div_ceil(2) as u32) > 1 << 16 {
                break;
            }
            let ext = make_extension(q, n).unwrap();
            assert_eq!(ext.modulus().len(), n + 1);
            assert!(irreducible_by_division(&f, ext.modulus()), "q={q} n={n} {:?}", ext.modulus());
        }
    }
}

#[test]
fn moduli_are_smallest() {
    for q in [2u64, 3, 4, 5, 7] {
        let f = BaseField::get(q).unwrap();
        for n in 1..=12usize {
            if (q as u128).pow(n as u32) > 1 << 12 {
                break;
            }
            let ext = make_extension(q, n).unwrap();
            let value = |p: &[u8]| p.iter().rev().fold(0usize, |acc, &c| acc * q as usize + c as usize);
            let target = value(&ext.modulus()[..n]);
            for i in 0..target {
                let cand = monic(q as usize, n, i);
                assert!(!irreducible_by_division(&f, &cand), "q={q} n={n}: {cand:?} precedes the modulus");
            }
        }
    }
}
