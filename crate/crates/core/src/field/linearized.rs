//! Polynomials with coefficients in `F_{q^n}`.

use super::ext::{ExtField, FieldElem};

/// `f(X) = Σ_i f_i X^{q^i}`, coefficient of `X^{q^i}` at index `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearizedPoly {
    pub coeffs: Vec<FieldElem>,
}

impl LinearizedPoly {
    pub fn new(coeffs: Vec<FieldElem>) -> Self {
        LinearizedPoly { coeffs }
    }

    /// Number of coefficient slots (the `ℓ` of the representation).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest `i` with `f_i ≠ 0`; `None` for the zero polynomial.
    pub fn q_degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn eval(&self, field: &ExtField, x: &FieldElem) -> FieldElem {
        let mode = field.default_mode();
        let mut acc = field.zero();
        let mut power = x.clone();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                power = field.frobenius_with(&power, mode);
            }
            if !c.is_zero() {
                acc = field.add(&acc, &field.mul_with(c, &power, mode));
            }
        }
        acc
    }
}

/// `f(X) = Σ_i f_i X^i`, coefficient of `X^i` at index `i`. Fixed length, so
/// the top coefficient may be zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinaryPoly {
    pub coeffs: Vec<FieldElem>,
}

impl OrdinaryPoly {
    pub fn new(coeffs: Vec<FieldElem>) -> Self {
        OrdinaryPoly { coeffs }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, field: &ExtField, x: &FieldElem) -> FieldElem {
        self.coeffs
            .iter()
            .rev()
            .fold(field.zero(), |acc, c| field.add(&field.mul(&acc, x), c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_extension;

    #[test]
    fn linearized_is_additive_and_fq_linear() {
        let f = make_extension(3, 4).unwrap();
        let p = LinearizedPoly::new((0..3).map(|i| f.from_index(5 + 17 * i)).collect());
        for a in (0..81).step_by(7) {
            for b in (0..81).step_by(13) {
                let (x, y) = (f.from_index(a), f.from_index(b));
                assert_eq!(p.eval(&f, &f.add(&x, &y)), f.add(&p.eval(&f, &x), &p.eval(&f, &y)));
                assert_eq!(p.eval(&f, &f.scale(2, &x)), f.scale(2, &p.eval(&f, &x)));
            }
        }
    }

    #[test]
    fn q_degree_and_identity() {
        let f = make_extension(2, 4).unwrap();
        let id = LinearizedPoly::new(vec![f.one(), f.zero()]);
        assert_eq!(id.q_degree(), Some(0));
        assert_eq!(LinearizedPoly::new(vec![f.zero(); 3]).q_degree(), None);
        for i in 0..16 {
            assert_eq!(id.eval(&f, &f.from_index(i)), f.from_index(i));
        }
    }

    #[test]
    fn horner_matches_powers() {
        let f = make_extension(4, 3).unwrap();
        let p = OrdinaryPoly::new(vec![f.from_index(3), f.from_index(40), f.from_index(9)]);
        for i in 0..64 {
            let x = f.from_index(i);
            let direct = f.add(&f.add(&p.coeffs[0], &f.mul(&p.coeffs[1], &x)), &f.mul(&p.coeffs[2], &f.pow(&x, 2)));
            assert_eq!(p.eval(&f, &x), direct);
        }
    }
}
