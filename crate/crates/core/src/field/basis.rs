//! Trace-dual bases of `F_{q^n}` over `F_q`.

use super::ext::{ExtField, FieldElem};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Returns `β_1, …, β_n` with `Tr(α_i β_j) = δ_ij`.
///
/// Writes `β_i = Σ_r b_{ir} α_r`; the trace matrix `T_{jr} = Tr(α_j α_r)` is
/// symmetric and invertible for a basis, so `b_i` is the `i`-th column of `T^{-1}`.
pub fn dual_basis(field: &ExtField, basis: &[FieldElem]) -> Result<Vec<FieldElem>> {
    let n = field.degree();
    let q = field.q();
    if basis.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: basis.len(),
        });
    }
    for b in basis {
        field.elem(b.coeffs().to_vec())?;
    }
    let coords = Matrix::from_rows(q, basis.iter().map(|b| b.coeffs().to_vec()).collect())?;
    let rank = coords.rank(field.base());
    if rank < n {
        return Err(Error::NotABasis { rank, n });
    }
    let mut t = Matrix::zeros(n, n);
    for j in 0..n {
        for r in j..n {
            let v = field.trace(&field.mul(&basis[j], &basis[r]));
            t.set(j, r, v);
            t.set(r, j, v);
        }
    }
    let t_inv = t.inverse(field.base()).ok_or(Error::NotABasis { rank, n })?;
    Ok((0..n)
        .map(|i| {
            let mut acc = field.zero();
            for (r, alpha) in basis.iter().enumerate() {
                let c = t_inv.get(r, i);
                if c != 0 {
                    acc = field.add(&acc, &field.scale(c, alpha));
                }
            }
            acc
        })
        .collect())
}

/// The power basis `1, λ, …, λ^{n-1}`.
pub fn power_basis(field: &ExtField) -> Vec<FieldElem> {
    (0..field.degree()).map(|i| field.lambda_pow(i)).collect()
}

/// Coordinates in the dual of the power basis: `x = Σ_i c_i β_i` with
/// `c_i = Tr(λ^{i-1} x)`.
pub fn dual_coordinates(field: &ExtField, x: &FieldElem) -> Vec<u8> {
    let n = field.degree();
    let mut out = Vec::with_capacity(n);
    let lambda = field.lambda();
    let mut y = x.clone();
    for i in 0..n {
        out.push(field.trace(&y));
        if i + 1 < n {
            y = field.mul(&y, &lambda);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_extension;

    #[test]
    fn small_examples() {
        let f2 = make_extension(2, 1).unwrap();
        assert_eq!(dual_basis(&f2, &[f2.one()]).unwrap(), vec![f2.one()]);

        let f4 = make_extension(2, 2).unwrap();
        let d = dual_basis(&f4, &power_basis(&f4)).unwrap();
        assert_eq!(d, vec![f4.elem(vec![1, 1]).unwrap(), f4.one()]);
    }

    #[test]
    fn dependent_input_rejected() {
        let f = make_extension(2, 3).unwrap();
        let b = vec![f.one(), f.lambda(), f.add(&f.one(), &f.lambda())];
        assert!(matches!(dual_basis(&f, &b), Err(Error::NotABasis { rank: 2, n: 3 })));
    }

    #[test]
    fn duality_exhaustive_small_fields() {
        for (q, n) in [(2u64, 1usize), (2, 4), (2, 9), (2, 16), (3, 5), (4, 3), (5, 4), (8, 2), (9, 3), (7, 6)] {
            let f = make_extension(q, n).unwrap();
            let a = power_basis(&f);
            let b = dual_basis(&f, &a).unwrap();
            for i in 0..n {
                for j in 0..n {
                    let want = u8::from(i == j);
                    assert_eq!(f.trace(&f.mul(&a[i], &b[j])), want, "q={q} n={n} i={i} j={j}");
                }
            }
            // Involution.
            assert_eq!(dual_basis(&f, &b).unwrap(), a);
            // Dual coordinates reconstruct the element.
            for idx in (0..f.order().min(300)).step_by(11) {
                let x = f.from_index(idx);
                let c = dual_coordinates(&f, &x);
                let mut back = f.zero();
                for (ci, bi) in c.iter().zip(&b) {
                    back = f.add(&back, &f.scale(*ci, bi));
                }
                assert_eq!(back, x);
            }
        }
    }

    #[test]
    fn involution_on_random_bases() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for (q, n) in [(2u64, 6usize), (3, 4), (4, 5)] {
            let f = make_extension(q, n).unwrap();
            let mut tried = 0;
            while tried < 10 {
                let b: Vec<FieldElem> = (0..n)
                    .map(|_| f.elem((0..n).map(|_| rng.random_range(0..q as u8)).collect()).unwrap())
                    .collect();
                if let Ok(d) = dual_basis(&f, &b) {
                    assert_eq!(dual_basis(&f, &d).unwrap(), b);
                    tried += 1;
                }
            }
        }
    }
}
