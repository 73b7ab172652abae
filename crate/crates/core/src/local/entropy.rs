//! The `q`-ary entropy function and its inverse on `[0, 1 - 1/q]`.

use crate::error::{Error, Result};

fn check_q(q: u64) -> Result<()> {
    if q < 2 {
        return Err(Error::DomainError(format!("entropy needs q >= 2, got {q}")));
    }
    Ok(())
}

/// `h_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x)`, extended
/// continuously to `h_q(0) = 0` and `h_q(1) = log_q(q-1)`.
pub fn q_ary_entropy(q: u64, x: f64) -> Result<f64> {
    check_q(q)?;
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::DomainError(format!("entropy argument {x} outside [0, 1]")));
    }
    let ln_q = (q as f64).ln();
    let xlogx = |t: f64| if t == 0.0 { 0.0 } else { t * (1.0 / t).ln() };
    Ok((x * ((q - 1) as f64).ln() + xlogx(x) + xlogx(1.0 - x)) / ln_q)
}

/// The unique `x ∈ [0, 1 - 1/q]` with `h_q(x) = y`, by bisection carried to
/// full double precision.
pub fn q_ary_entropy_inv(q: u64, y: f64) -> Result<f64> {
    check_q(q)?;
    if !(0.0..=1.0).contains(&y) {
        return Err(Error::DomainError(format!("inverse entropy argument {y} outside [0, 1]")));
    }
    let (mut lo, mut hi) = (0.0f64, 1.0 - 1.0 / q as f64);
    if y == 0.0 {
        return Ok(0.0);
    }
    if y == 1.0 {
        return Ok(hi);
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if q_ary_entropy(q, mid)? < y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        assert_eq!(q_ary_entropy(2, 0.0).unwrap(), 0.0);
        assert!((q_ary_entropy(2, 0.5).unwrap() - 1.0).abs() < 1e-12);
        assert!((q_ary_entropy(3, 2.0 / 3.0).unwrap() - 1.0).abs() < 1e-12);
        assert!((q_ary_entropy(4, 1.0).unwrap() - 3f64.ln() / 4f64.ln()).abs() < 1e-15);
        assert!(q_ary_entropy(2, 1.5).is_err());
        assert!(q_ary_entropy(2, f64::NAN).is_err());
        assert!(q_ary_entropy(1, 0.5).is_err());
    }

    #[test]
    fn inverse_values() {
        assert_eq!(q_ary_entropy_inv(2, 0.0).unwrap(), 0.0);
        assert!((q_ary_entropy_inv(2, 1.0).unwrap() - 0.5).abs() < 1e-12);
        let x = q_ary_entropy_inv(2, 0.5).unwrap();
        assert!((x - 0.110_027_8).abs() < 1e-6, "{x}");
        assert!(q_ary_entropy_inv(2, -0.1).is_err());
    }

    #[test]
    fn monotone_and_round_trip() {
        for q in [2u64, 3, 4, 8] {
            let top = 1.0 - 1.0 / q as f64;
            let mut prev = -1.0;
            let mut x = 0.0;
            while x <= top {
                let h = q_ary_entropy(q, x).unwrap();
                assert!(h > prev, "q={q} x={x}");
                prev = h;
                x += 1e-3;
            }
            for i in 0..=100 {
                let y = i as f64 / 100.0;
                let back = q_ary_entropy(q, q_ary_entropy_inv(q, y).unwrap()).unwrap();
                assert!((back - y).abs() < 1e-8, "q={q} y={y} back={back}");
            }
        }
    }
}
