//! Dense matrices over `F_q` and Gaussian elimination.

use crate::error::{Error, Result};
use crate::field::BaseField;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows, checking that they have equal length and
    /// symbols below `q`. An empty row list gives a `0 × 0` matrix.
    pub fn from_rows(q: usize, rows: Vec<Vec<u8>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(q, cols, rows)
    }

    /// Like [`Matrix::from_rows`] but with an explicit width, so that zero-row
    /// matrices keep their column count.
    pub fn from_rows_with_cols(q: usize, cols: usize, rows: Vec<Vec<u8>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::BadDimensions(format!("row {i} has length {}, expected {cols}", r.len())));
            }
            if let Some(&bad) = r.iter().find(|&&c| c as usize >= q) {
                return Err(Error::Parse(format!("symbol {bad} out of range for q = {q}")));
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub(crate) fn from_flat(rows: usize, cols: usize, data: Vec<u8>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [u8] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<u8> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn add(&self, f: &BaseField, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(Matrix::from_flat(self.rows, self.cols, data))
    }

    pub fn mul(&self, f: &BaseField, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a != 0 {
                    axpy(f, out.row_mut(r), a, other.row(k));
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix: `Σ_i v_i · row_i`.
    pub fn vec_mul(&self, f: &BaseField, v: &[u8]) -> Result<Vec<u8>> {
        if v.len() != self.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                got: v.len(),
            });
        }
        let mut out = vec![0u8; self.cols];
        for (i, &c) in v.iter().enumerate() {
            if c != 0 {
                axpy(f, &mut out, c, self.row(i));
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self, f: &BaseField) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = rref_in_place(f, &mut m, None);
        (m, pivots)
    }

    pub fn rank(&self, f: &BaseField) -> usize {
        self.rref(f).1.len()
    }

    /// Basis of `{x : M xᵀ = 0}`, one vector per free column in increasing order.
    pub fn nullspace(&self, f: &BaseField) -> Matrix {
        let (r, pivots) = self.rref(f);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = Matrix::zeros(free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, 1);
            for (row, &pc) in pivots.iter().enumerate() {
                out.set(i, pc, f.neg(r.get(row, fc)));
            }
        }
        out
    }

    pub fn inverse(&self, f: &BaseField) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let e = Echelon::new(f, self);
        (e.rank() == self.rows).then(|| e.transform)
    }

    /// Whether two matrices with the same width span the same row space.
    pub fn same_row_space(&self, f: &BaseField, other: &Matrix) -> bool {
        if self.cols != other.cols {
            return false;
        }
        let (a, pa) = self.rref(f);
        let (b, pb) = other.rref(f);
        pa == pb && (0..pa.len()).all(|r| a.row(r) == b.row(r))
    }

    /// Indices of rows kept by a greedy left-to-right independence scan.
    pub fn independent_rows(&self, f: &BaseField) -> Vec<usize> {
        let mut basis = Echelon::empty(self.cols);
        (0..self.rows).filter(|&r| basis.insert(f, self.row(r))).collect()
    }

    /// Sub-matrix of the given rows.
    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        Matrix::from_flat(idx.len(), self.cols, data)
    }
}

/// `dst += a · src`.
#[inline]
pub(crate) fn axpy(f: &BaseField, dst: &mut [u8], a: u8, src: &[u8]) {
    if f.is_char_two() && a == 1 {
        for (d, &s) in dst.iter_mut().zip(src) {
            *d ^= s;
        }
        return;
    }
    let row = f.mul_row(a);
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = f.add(*d, row[s as usize]);
    }
}

fn rref_in_place(f: &BaseField, m: &mut Matrix, mut track: Option<&mut Matrix>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
            continue;
        };
        if p != row {
            swap_rows(m, p, row);
            if let Some(t) = track.as_deref_mut() {
                swap_rows(t, p, row);
            }
        }
        let inv = f.inv(m.get(row, col)).expect("nonzero pivot");
        if inv != 1 {
            scale_row(f, m, row, inv);
            if let Some(t) = track.as_deref_mut() {
                scale_row(f, t, row, inv);
            }
        }
        let pivot_row = m.row(row).to_vec();
        let pivot_track = track.as_deref().map(|t| t.row(row).to_vec());
        for r in 0..m.rows {
            if r == row {
                continue;
            }
            let c = m.get(r, col);
            if c != 0 {
                let neg = f.neg(c);
                axpy(f, m.row_mut(r), neg, &pivot_row);
                if let (Some(t), Some(pt)) = (track.as_deref_mut(), pivot_track.as_ref()) {
                    axpy(f, t.row_mut(r), neg, pt);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

fn swap_rows(m: &mut Matrix, a: usize, b: usize) {
    for c in 0..m.cols {
        m.data.swap(a * m.cols + c, b * m.cols + c);
    }
}

fn scale_row(f: &BaseField, m: &mut Matrix, r: usize, s: u8) {
    let t = f.mul_row(s).to_vec();
    for x in m.row_mut(r) {
        *x = t[*x as usize];
    }
}

/// Reduced echelon form of a generator together with the row operations that
/// produced it, so that membership queries also return a message.
#[derive(Clone, Debug)]
pub struct Echelon {
    reduced: Matrix,
    pivots: Vec<usize>,
    /// `transform · G = reduced` (only the first `rank` rows of `reduced` are nonzero).
    transform: Matrix,
}

impl Echelon {
    pub fn new(f: &BaseField, g: &Matrix) -> Self {
        let mut reduced = g.clone();
        let mut transform = Matrix::identity(g.rows);
        let pivots = rref_in_place(f, &mut reduced, Some(&mut transform));
        Echelon {
            reduced,
            pivots,
            transform,
        }
    }

    fn empty(cols: usize) -> Self {
        Echelon {
            reduced: Matrix::zeros(0, cols),
            pivots: Vec::new(),
            transform: Matrix::zeros(0, 0),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Nonzero rows of the reduced form.
    pub fn basis(&self) -> Matrix {
        self.reduced.select_rows(&(0..self.rank()).collect::<Vec<_>>())
    }

    /// Whether `v` lies in the row space.
    pub fn contains(&self, f: &BaseField, v: &[u8]) -> bool {
        self.residual(f, v).iter().all(|&x| x == 0)
    }

    fn residual(&self, f: &BaseField, v: &[u8]) -> Vec<u8> {
        let mut r = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = r[p];
            if c != 0 {
                axpy(f, &mut r, f.neg(c), self.reduced.row(i));
            }
        }
        r
    }

    /// A message `x` with `x · G = v`, if one exists.
    pub fn solve(&self, f: &BaseField, v: &[u8]) -> Option<Vec<u8>> {
        if !self.contains(f, v) {
            return None;
        }
        let mut x = vec![0u8; self.transform.cols];
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = v[p];
            if c != 0 {
                axpy(f, &mut x, c, self.transform.row(i));
            }
        }
        Some(x)
    }

    /// Adds `v` to the span if it is independent; returns whether it was.
    fn insert(&mut self, f: &BaseField, v: &[u8]) -> bool {
        let mut r = self.residual(f, v);
        let Some(p) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(r[p]).expect("nonzero");
        let t = f.mul_row(inv).to_vec();
        for x in r.iter_mut() {
            *x = t[*x as usize];
        }
        // Keep existing rows reduced at the new pivot.
        for i in 0..self.rank() {
            let c = self.reduced.get(i, p);
            if c != 0 {
                axpy(f, self.reduced.row_mut(i), f.neg(c), &r);
            }
        }
        self.reduced.data.extend_from_slice(&r);
        self.reduced.rows += 1;
        self.pivots.push(p);
        true
    }
}

/// Solves `X · G = T` row by row; `None` if some row of `T` is outside the row space.
pub fn solve_left(f: &BaseField, g: &Matrix, t: &Matrix) -> Result<Option<Matrix>> {
    if g.cols() != t.cols() {
        return Err(Error::DimensionMismatch(format!(
            "target has {} columns, generator has {}",
            t.cols(),
            g.cols()
        )));
    }
    let e = Echelon::new(f, g);
    let mut data = Vec::with_capacity(t.rows() * g.rows());
    for r in 0..t.rows() {
        match e.solve(f, t.row(r)) {
            Some(x) => data.extend(x),
            None => return Ok(None),
        }
    }
    Ok(Some(Matrix::from_flat(t.rows(), g.rows(), data)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(q: usize, rows: &[&[u8]]) -> Matrix {
        Matrix::from_rows(q, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn rank_and_nullspace() {
        let f = BaseField::get(2).unwrap();
        let a = m(2, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[1, 0, 1, 0]]);
        assert_eq!(a.rank(&f), 2);
        let ns = a.nullspace(&f);
        assert_eq!(ns.rows(), 2);
        assert!(a.mul(&f, &ns.transpose()).unwrap().is_zero());
        let parity = m(2, &[&[1, 1, 1, 1]]);
        assert_eq!(parity.nullspace(&f).rank(&f), 3);
    }

    #[test]
    fn inverse_and_solve() {
        let f = BaseField::get(5).unwrap();
        let a = m(5, &[&[1, 2, 0], &[0, 1, 4], &[3, 0, 2]]);
        let inv = a.inverse(&f).unwrap();
        assert_eq!(a.mul(&f, &inv).unwrap(), Matrix::identity(3));
        let t = m(5, &[&[4, 3, 2]]);
        let x = solve_left(&f, &a, &t).unwrap().unwrap();
        assert_eq!(x.mul(&f, &a).unwrap(), t);
        let singular = m(5, &[&[1, 2], &[2, 4]]);
        assert!(singular.inverse(&f).is_none());
        assert!(solve_left(&f, &singular, &m(5, &[&[0, 1]])).unwrap().is_none());
    }

    #[test]
    fn independent_rows_greedy() {
        let f = BaseField::get(3).unwrap();
        let a = m(3, &[&[0, 0, 0], &[1, 2, 0], &[2, 1, 0], &[0, 0, 1], &[1, 2, 1]]);
        assert_eq!(a.independent_rows(&f), vec![1, 3]);
    }

    #[test]
    fn bad_rows_rejected() {
        assert!(Matrix::from_rows(2, vec![vec![0, 1], vec![1]]).is_err());
        assert!(Matrix::from_rows(2, vec![vec![0, 2]]).is_err());
    }

    fn small_matrix() -> impl Strategy<Value = (u64, Vec<Vec<u8>>)> {
        (prop::sample::select(vec![2u64, 3, 4, 7]), 1usize..7, 1usize..9).prop_flat_map(|(q, r, c)| {
            (Just(q), prop::collection::vec(prop::collection::vec(0..q as u8, c), r))
        })
    }

    proptest! {
        #[test]
        fn rank_nullity((q, rows) in small_matrix()) {
            let f = BaseField::get(q).unwrap();
            let a = Matrix::from_rows(q as usize, rows).unwrap();
            let ns = a.nullspace(&f);
            prop_assert_eq!(a.rank(&f) + ns.rows(), a.cols());
            prop_assert!(a.mul(&f, &ns.transpose()).unwrap().is_zero());
            prop_assert_eq!(ns.rank(&f), ns.rows());
            let e = Echelon::new(&f, &a);
            prop_assert!(e.basis().same_row_space(&f, &a));
            for r in 0..a.rows() {
                let x = e.solve(&f, a.row(r)).unwrap();
                prop_assert_eq!(a.vec_mul(&f, &x).unwrap(), a.row(r).to_vec());
            }
            prop_assert_eq!(a.independent_rows(&f).len(), a.rank(&f));
        }
    }
}
