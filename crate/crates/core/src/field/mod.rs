//! Arithmetic in `F_q` and `F_{q^n}`.

mod base;
mod basis;
mod ext;
mod gf2x;
mod irreducible;
mod linearized;
pub mod poly;

pub use base::{prime_power, BaseField, MAX_Q};
pub use basis::{dual_basis, dual_coordinates, power_basis};
pub use ext::{make_extension, ArithOp, CoordMap, ExtField, FieldDescriptor, FieldElem};
pub use irreducible::{is_irreducible, smallest_irreducible, MAX_BINARY_DEGREE, MAX_GENERIC_DEGREE};
pub use linearized::{LinearizedPoly, OrdinaryPoly};
pub use poly::MulMode;

use crate::error::{Error, Result};

/// `a·b mod m(X)` for coefficient vectors of length at most `n`.
pub fn poly_mul_mod(a: &[u8], b: &[u8], field: &ExtField, mode: MulMode) -> Result<Vec<u8>> {
    let n = field.degree();
    for v in [a, b] {
        if v.len() > n {
            let deg = poly::degree(v).unwrap_or(0);
            if deg >= n {
                return Err(Error::DegreeTooLarge { degree: deg, limit: n - 1 });
            }
        }
        if v.iter().any(|&c| c as usize >= field.q()) {
            return Err(Error::FieldMismatch);
        }
    }
    let trunc = |v: &[u8]| v[..v.len().min(n)].to_vec();
    Ok(field.reducer().mul_mod(field.base(), &trunc(a), &trunc(b), mode))
}
