//! Dense matrices over a prime field `F_p`.
//!
//! Matrices act on coordinate columns: a `rows × cols` matrix is a linear map
//! `F_p^cols → F_p^rows`. All reductions use a fixed pivot order (leftmost
//! column, topmost row) so that kernels and cokernels come out in canonical
//! bases.

use std::fmt;

use crate::error::{Error, Result};

/// Arithmetic in `Z/pZ` for a prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::input(format!("{p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(self) -> u32 {
        self.p
    }

    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.p as u64 - b as u64) % self.p as u64) as u32
    }

    pub fn neg(self, a: u32) -> u32 {
        self.sub(0, a)
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse by Fermat; `a` must be non-zero.
    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.p));
        let mut base = a as u64 % self.p as u64;
        let mut exp = self.p as u64 - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p as u64;
            }
            base = base * base % self.p as u64;
            exp >>= 1;
        }
        acc as u32
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Row-major matrix with entries already reduced mod p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "{}x{}", self.rows, self.cols)?;
        out.debug_list().entries(self.to_rows()).finish()
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for k in 0..n {
            m.data[k * n + k] = 1;
        }
        m
    }

    pub fn from_data(rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(rows * cols, data.len());
        Matrix { rows, cols, data }
    }

    /// Builds from a list of rows; `cols` is needed for the zero-row case.
    pub fn from_rows(rows: &[Vec<u32>], cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::input(format!("matrix row {r} has {} entries, expected {cols}", row.len())));
            }
            data.extend_from_slice(row);
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    /// Permutation matrix of `perm`, sending basis vector `x` to `perm[x]`.
    pub fn permutation(perm: &[usize], target: usize) -> Self {
        let mut m = Matrix::zeros(target, perm.len());
        for (x, &y) in perm.iter().enumerate() {
            m.set(y, x, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
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

    /// `self · rhs`, i.e. apply `rhs` first.
    pub fn mul(&self, rhs: &Matrix, field: PrimeField) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let p = field.modulus() as u64;
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k) as u64;
                if a == 0 {
                    continue;
                }
                for c in 0..rhs.cols {
                    let idx = r * rhs.cols + c;
                    out.data[idx] = ((out.data[idx] as u64 + a * rhs.get(k, c) as u64) % p) as u32;
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Matrix, field: PrimeField) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| field.sub(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// Kronecker product; basis pair `(x, y)` sits at index `x·dim₂ + y`.
    pub fn kronecker(&self, rhs: &Matrix, field: PrimeField) -> Matrix {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = Matrix::zeros(rows, cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a == 0 {
                    continue;
                }
                for r2 in 0..rhs.rows {
                    for c2 in 0..rhs.cols {
                        out.set(r1 * rhs.rows + r2, c1 * rhs.cols + c2, field.mul(a, rhs.get(r2, c2)));
                    }
                }
            }
        }
        out
    }

    /// Rows `r` listed in `which`, in that order.
    pub fn select_rows(&self, which: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(which.len(), self.cols);
        for (k, &r) in which.iter().enumerate() {
            for c in 0..self.cols {
                out.set(k, c, self.get(r, c));
            }
        }
        out
    }

    pub fn select_cols(&self, which: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, which.len());
        for r in 0..self.rows {
            for (k, &c) in which.iter().enumerate() {
                out.set(r, k, self.get(r, c));
            }
        }
        out
    }

    /// Stacks blocks vertically; all must share `cols`.
    pub fn vstack(blocks: &[Matrix], cols: usize) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols);
            data.extend_from_slice(&b.data);
        }
        Matrix { rows, cols, data }
    }

    /// Places blocks side by side; all must share `rows`.
    pub fn hstack(blocks: &[Matrix], rows: usize) -> Matrix {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for r in 0..rows {
                for c in 0..b.cols {
                    out.set(r, offset + c, b.get(r, c));
                }
            }
            offset += b.cols;
        }
        out
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self, field: PrimeField) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(found) = (row..m.rows).find(|&r| m.get(r, col) != 0) else { continue };
            m.swap_rows(row, found);
            let scale = field.inv(m.get(row, col));
            for c in 0..m.cols {
                let v = field.mul(m.get(row, c), scale);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in 0..m.cols {
                    let v = field.sub(m.get(r, c), field.mul(factor, m.get(row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self, field: PrimeField) -> usize {
        self.rref(field).1.len()
    }

    pub fn inverse(&self, field: PrimeField) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = Matrix::hstack(&[self.clone(), Matrix::identity(n)], n);
        let (red, pivots) = aug.rref(field);
        if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(k, &c)| c != k) {
            return None;
        }
        let right: Vec<usize> = (n..2 * n).collect();
        Some(red.select_cols(&right))
    }
}

/// Kernel of `d` as the columns of a basis matrix, plus the coordinates at
/// which that basis matrix restricts to the identity.
///
/// One basis vector per non-pivot column `f` of `rref(d)`: entry 1 at `f`,
/// `-rref[r][f]` at the pivot column of row `r`.
pub fn kernel(d: &Matrix, field: PrimeField) -> (Matrix, Vec<usize>) {
    let (red, pivots) = d.rref(field);
    let free: Vec<usize> = (0..d.cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Matrix::zeros(d.cols, free.len());
    for (k, &f) in free.iter().enumerate() {
        basis.set(f, k, 1);
        for (r, &pc) in pivots.iter().enumerate() {
            basis.set(pc, k, field.neg(red.get(r, f)));
        }
    }
    (basis, free)
}

/// Projection onto the cokernel of `d`, plus the target coordinates whose
/// basis vectors map to the quotient basis.
///
/// The image of `d` is put in reduced column echelon form with pivot rows
/// `P`; the quotient basis is the classes of `e_j` for `j ∉ P`.
pub fn cokernel(d: &Matrix, field: PrimeField) -> (Matrix, Vec<usize>) {
    let (red, pivots) = d.transpose().rref(field);
    let m = d.rows;
    let rest: Vec<usize> = (0..m).filter(|r| !pivots.contains(r)).collect();
    let mut proj = Matrix::zeros(rest.len(), m);
    for (t, &j) in rest.iter().enumerate() {
        proj.set(t, j, 1);
        for (k, &pk) in pivots.iter().enumerate() {
            proj.set(t, pk, field.neg(red.get(k, j)));
        }
    }
    (proj, rest)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    fn f3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    #[test]
    fn primes() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(0).is_err());
        assert!(PrimeField::new(7).is_ok());
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn kernel_of_projection_difference() {
        let d = Matrix::from_rows(&[vec![0, 0], vec![0, 1]], 2).unwrap();
        let (k, free) = kernel(&d, f2());
        assert_eq!(k, Matrix::from_rows(&[vec![1], vec![0]], 1).unwrap());
        assert_eq!(free, vec![0]);
        assert!(d.mul(&k, f2()).is_zero());
    }

    #[test]
    fn cokernel_kills_image() {
        let f = f3();
        let d = Matrix::from_rows(&[vec![1, 2], vec![2, 1], vec![0, 0]], 2).unwrap();
        let (q, rest) = cokernel(&d, f);
        assert_eq!(q.rows(), 3 - d.rank(f));
        assert!(q.mul(&d, f).is_zero());
        assert_eq!(q.rank(f), q.rows());
        for (t, &j) in rest.iter().enumerate() {
            assert_eq!(q.get(t, j), 1);
        }
    }

    #[test]
    fn inverse_round_trip() {
        let f = f3();
        let a = Matrix::from_rows(&[vec![1, 2], vec![0, 1]], 2).unwrap();
        let inv = a.inverse(f).unwrap();
        assert_eq!(a.mul(&inv, f), Matrix::identity(2));
        let singular = Matrix::from_rows(&[vec![1, 2], vec![2, 1]], 2).unwrap();
        assert!(singular.inverse(f).is_none());
        assert_eq!(Matrix::identity(0).inverse(f), Some(Matrix::identity(0)));
    }
}
