//! Exact integer matrices: Smith normal form with unimodular transforms,
//! saturated kernels, and integer/rational linear solvers.
//!
//! Entries are arbitrary-precision (`BigInt`). Smith elimination blows up
//! intermediate coefficients even on small inputs, so fixed-width arithmetic
//! is not an option here.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("entry count {got} does not match a {rows}x{cols} matrix")]
    Shape { rows: usize, cols: usize, got: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not unimodular (determinant {det})")]
    NotUnimodular { det: BigInt },
    #[error("no multiplicative order found below cap {cap}")]
    OrderCapExceeded { cap: usize },
}

/// Dense integer matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::Shape { rows, cols, got: entries.len() });
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        IntMatrix { rows, cols, entries: entries.iter().map(|&x| BigInt::from(x)).collect() }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_columns(cols: Vec<Vec<BigInt>>) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        assert!(cols.iter().all(|col| col.len() == r), "ragged columns");
        let mut m = IntMatrix::zeros(r, c);
        for (j, col) in cols.into_iter().enumerate() {
            for (i, x) in col.into_iter().enumerate() {
                *m.at_mut(i, j) = x;
            }
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut p = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.at(k, j);
                    *p.at_mut(i, j) += add;
                }
            }
        }
        p
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        IntMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        IntMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows);
        let mut m = IntMatrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *m.at_mut(i, j) = self.at(i, j).clone();
            }
            for j in 0..other.cols {
                *m.at_mut(i, self.cols + j) = other.at(i, j).clone();
            }
        }
        m
    }

    pub fn pow(&self, k: usize) -> IntMatrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = IntMatrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn mul_qvec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| BigRational::from_integer(self.at(i, j).clone()) * &v[j])
                    .sum()
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.at(i, j).is_one()
                    } else {
                        self.at(i, j).is_zero()
                    }
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i)).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = &num / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        sign * m[n - 1][n - 1].clone()
    }

    /// Transposed cofactor matrix; `self * adjugate = det * I`.
    pub fn adjugate(&self) -> IntMatrix {
        assert_eq!(self.rows, self.cols, "adjugate of a non-square matrix");
        let n = self.rows;
        let mut adj = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let cof = self.minor(i, j).determinant();
                let sign = if (i + j) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                *adj.at_mut(j, i) = sign * cof;
            }
        }
        adj
    }

    /// Inverse of a unimodular matrix, computed via the adjugate.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let det = self.determinant();
        if !det.clone().abs().is_one() {
            return Err(MatrixError::NotUnimodular { det });
        }
        let adj = self.adjugate();
        let inv = if det.is_one() { adj } else { adj.neg() };
        debug_assert!(self.mul(&inv).is_identity());
        Ok(inv)
    }

    fn minor(&self, drop_row: usize, drop_col: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows - 1, self.cols - 1);
        let mut r = 0;
        for i in 0..self.rows {
            if i == drop_row {
                continue;
            }
            let mut c = 0;
            for j in 0..self.cols {
                if j == drop_col {
                    continue;
                }
                *m.at_mut(r, c) = self.at(i, j).clone();
                c += 1;
            }
            r += 1;
        }
        m
    }

    /// Smallest `k >= 1` with `self^k = 1`, or an error past `cap`.
    pub fn multiplicative_order(&self, cap: usize) -> Result<usize, MatrixError> {
        assert_eq!(self.rows, self.cols);
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.is_identity() {
                return Ok(k);
            }
            acc = acc.mul(self);
        }
        Err(MatrixError::OrderCapExceeded { cap })
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

// Small vector helpers shared by the lattice modules.

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_q(a: &[BigRational], b: &[BigInt]) -> BigRational {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| x * BigRational::from_integer(y.clone()))
        .sum()
}

pub fn vec_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_neg(a: &[BigInt]) -> Vec<BigInt> {
    a.iter().map(|x| -x).collect()
}

pub fn vec_scale(c: &BigInt, a: &[BigInt]) -> Vec<BigInt> {
    a.iter().map(|x| c * x).collect()
}

pub fn vec_is_zero(a: &[BigInt]) -> bool {
    a.iter().all(Zero::is_zero)
}

pub fn vec_i64(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// `A = U D V` with `U`, `V` unimodular and `D` diagonal with the invariant
/// factors `d_1 | d_2 | ...` followed by zeros. `u_inv` and `v_inv` are the
/// exact inverses accumulated during elimination.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        (0..self.d.rows().min(self.d.cols()))
            .take_while(|&i| !self.d.at(i, i).is_zero())
            .count()
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d.at(i, i).clone()).collect()
    }

    pub fn verify(&self, a: &IntMatrix) -> bool {
        if self.u.mul(&self.d).mul(&self.v) != *a {
            return false;
        }
        if !self.u.mul(&self.u_inv).is_identity() || !self.v.mul(&self.v_inv).is_identity() {
            return false;
        }
        if !self.u.determinant().abs().is_one() || !self.v.determinant().abs().is_one() {
            return false;
        }
        let diag = self.diagonal();
        for win in diag.windows(2) {
            if !win[0].is_zero() && !win[1].is_zero() && !win[1].is_multiple_of(&win[0]) {
                return false;
            }
            if win[0].is_zero() && !win[1].is_zero() {
                return false;
            }
        }
        diag.iter().all(|d| !d.is_negative())
    }
}

struct SnfWorker {
    w: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl SnfWorker {
    fn new(a: &IntMatrix) -> Self {
        SnfWorker {
            w: a.clone(),
            u: IntMatrix::identity(a.rows()),
            u_inv: IntMatrix::identity(a.rows()),
            v: IntMatrix::identity(a.cols()),
            v_inv: IntMatrix::identity(a.cols()),
        }
    }

    // Row ops act as w <- E w; the invariant A = u w v forces u <- u E^{-1}.
    fn row_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.w.cols() {
            let tmp = self.w.at(i, c).clone();
            *self.w.at_mut(i, c) = self.w.at(j, c).clone();
            *self.w.at_mut(j, c) = tmp;
        }
        for r in 0..self.u.rows() {
            let tmp = self.u.at(r, i).clone();
            *self.u.at_mut(r, i) = self.u.at(r, j).clone();
            *self.u.at_mut(r, j) = tmp;
        }
        for c in 0..self.u_inv.cols() {
            let tmp = self.u_inv.at(i, c).clone();
            *self.u_inv.at_mut(i, c) = self.u_inv.at(j, c).clone();
            *self.u_inv.at_mut(j, c) = tmp;
        }
    }

    /// row_i += c * row_j
    fn row_add(&mut self, i: usize, j: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for k in 0..self.w.cols() {
            let add = c * self.w.at(j, k);
            *self.w.at_mut(i, k) += add;
        }
        // u <- u (I - c e_ij): col_j(u) -= c * col_i(u)
        for r in 0..self.u.rows() {
            let sub = c * self.u.at(r, i);
            *self.u.at_mut(r, j) -= sub;
        }
        // u_inv <- (I + c e_ij) u_inv: row_i += c * row_j
        for k in 0..self.u_inv.cols() {
            let add = c * self.u_inv.at(j, k);
            *self.u_inv.at_mut(i, k) += add;
        }
    }

    fn row_neg(&mut self, i: usize) {
        for k in 0..self.w.cols() {
            let x = -self.w.at(i, k).clone();
            *self.w.at_mut(i, k) = x;
        }
        for r in 0..self.u.rows() {
            let x = -self.u.at(r, i).clone();
            *self.u.at_mut(r, i) = x;
        }
        for k in 0..self.u_inv.cols() {
            let x = -self.u_inv.at(i, k).clone();
            *self.u_inv.at_mut(i, k) = x;
        }
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.w.rows() {
            let tmp = self.w.at(r, i).clone();
            *self.w.at_mut(r, i) = self.w.at(r, j).clone();
            *self.w.at_mut(r, j) = tmp;
        }
        for c in 0..self.v.cols() {
            let tmp = self.v.at(i, c).clone();
            *self.v.at_mut(i, c) = self.v.at(j, c).clone();
            *self.v.at_mut(j, c) = tmp;
        }
        for r in 0..self.v_inv.rows() {
            let tmp = self.v_inv.at(r, i).clone();
            *self.v_inv.at_mut(r, i) = self.v_inv.at(r, j).clone();
            *self.v_inv.at_mut(r, j) = tmp;
        }
    }

    /// col_j += c * col_i
    fn col_add(&mut self, j: usize, i: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for r in 0..self.w.rows() {
            let add = c * self.w.at(r, i);
            *self.w.at_mut(r, j) += add;
        }
        // v <- (I - c e_ij) v: row_i(v) -= c * row_j(v)
        for k in 0..self.v.cols() {
            let sub = c * self.v.at(j, k);
            *self.v.at_mut(i, k) -= sub;
        }
        // v_inv <- v_inv (I + c e_ij): col_j += c * col_i
        for r in 0..self.v_inv.rows() {
            let add = c * self.v_inv.at(r, i);
            *self.v_inv.at_mut(r, j) += add;
        }
    }

    /// Position of the smallest nonzero |entry| in the trailing submatrix.
    fn pivot(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in k..self.w.rows() {
            for j in k..self.w.cols() {
                let x = self.w.at(i, j);
                if x.is_zero() {
                    continue;
                }
                let a = x.abs();
                match &best {
                    Some((_, _, b)) if *b <= a => {}
                    _ => best = Some((i, j, a)),
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn reduce(&mut self) {
        let t = self.w.rows().min(self.w.cols());
        for k in 0..t {
            loop {
                let Some((pi, pj)) = self.pivot(k) else {
                    return; // trailing submatrix is zero
                };
                self.row_swap(k, pi);
                self.col_swap(k, pj);
                let mut clean = true;
                for i in k + 1..self.w.rows() {
                    if !self.w.at(i, k).is_zero() {
                        let q = self.w.at(i, k).div_floor(self.w.at(k, k));
                        self.row_add(i, k, &-q);
                        if !self.w.at(i, k).is_zero() {
                            clean = false;
                        }
                    }
                }
                for j in k + 1..self.w.cols() {
                    if !self.w.at(k, j).is_zero() {
                        let q = self.w.at(k, j).div_floor(self.w.at(k, k));
                        self.col_add(j, k, &-q);
                        if !self.w.at(k, j).is_zero() {
                            clean = false;
                        }
                    }
                }
                if !clean {
                    continue; // smaller remainders appeared; re-pivot
                }
                // Pivot must divide the whole trailing block for the
                // divisibility chain; drag a bad row up and go again.
                let piv = self.w.at(k, k).clone();
                let mut divisible = true;
                'scan: for i in k + 1..self.w.rows() {
                    for j in k + 1..self.w.cols() {
                        if !self.w.at(i, j).is_multiple_of(&piv) {
                            self.row_add(k, i, &BigInt::one());
                            divisible = false;
                            break 'scan;
                        }
                    }
                }
                if divisible {
                    break;
                }
            }
            if self.w.at(k, k).is_negative() {
                self.row_neg(k);
            }
        }
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let mut worker = SnfWorker::new(a);
    worker.reduce();
    let snf = SmithDecomposition {
        u: worker.u,
        d: worker.w,
        v: worker.v,
        u_inv: worker.u_inv,
        v_inv: worker.v_inv,
    };
    debug_assert!(snf.verify(a));
    snf
}

/// Basis of the saturated integer kernel of `a`, returned as matrix columns.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    let r = snf.rank();
    let cols: Vec<Vec<BigInt>> = (r..a.cols()).map(|j| snf.v_inv.col(j)).collect();
    if cols.is_empty() {
        IntMatrix::zeros(a.cols(), 0)
    } else {
        IntMatrix::from_columns(cols)
    }
}

/// Some rational solution of `a z = b`, or `None` when the system is
/// inconsistent over Q.
pub fn solve_rational(a: &IntMatrix, b: &[BigRational]) -> Option<Vec<BigRational>> {
    assert_eq!(b.len(), a.rows());
    let snf = smith_normal_form(a);
    let c = snf.u_inv.mul_qvec(b);
    let t = a.rows().min(a.cols());
    let mut y = vec![BigRational::from_integer(BigInt::zero()); a.cols()];
    for (i, ci) in c.iter().enumerate() {
        if i < t && !snf.d.at(i, i).is_zero() {
            y[i] = ci / BigRational::from_integer(snf.d.at(i, i).clone());
        } else if !ci.is_zero() {
            return None;
        }
    }
    Some(snf.v_inv.mul_qvec(&y))
}

/// Some integer solution of `a z = b`, or `None` when none exists over Z.
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(b.len(), a.rows());
    let snf = smith_normal_form(a);
    let c = snf.u_inv.mul_vec(b);
    let t = a.rows().min(a.cols());
    let mut y = vec![BigInt::zero(); a.cols()];
    for (i, ci) in c.iter().enumerate() {
        if i < t && !snf.d.at(i, i).is_zero() {
            let d = snf.d.at(i, i);
            if !ci.is_multiple_of(d) {
                return None;
            }
            y[i] = ci / d;
        } else if !ci.is_zero() {
            return None;
        }
    }
    Some(snf.v_inv.mul_vec(&y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snf_diag_2_3() {
        let a = IntMatrix::from_i64(2, 2, &[2, 0, 0, 3]);
        let snf = smith_normal_form(&a);
        assert!(snf.verify(&a));
        assert_eq!(snf.diagonal(), vec_i64(&[1, 6]));
    }

    #[test]
    fn snf_identity() {
        let a = IntMatrix::identity(4);
        let snf = smith_normal_form(&a);
        assert!(snf.u.is_identity() && snf.d.is_identity() && snf.v.is_identity());
    }

    #[test]
    fn snf_zero() {
        let a = IntMatrix::zeros(2, 2);
        let snf = smith_normal_form(&a);
        assert!(snf.verify(&a));
        assert!(snf.d.is_zero());
    }

    #[test]
    fn snf_rectangular() {
        let a = IntMatrix::from_i64(2, 3, &[2, 4, 4, -6, 6, 12]);
        let snf = smith_normal_form(&a);
        assert!(snf.verify(&a));
        assert_eq!(snf.diagonal(), vec_i64(&[2, 6]));
    }

    #[test]
    fn kernel_of_sum_functional() {
        let a = IntMatrix::from_i64(1, 2, &[1, 1]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).is_zero());
        // primitive generator, up to sign
        let g = k.col(0);
        assert!(g == vec_i64(&[1, -1]) || g == vec_i64(&[-1, 1]));
    }

    #[test]
    fn kernel_of_invertible_is_empty() {
        let a = IntMatrix::from_i64(2, 2, &[1, 2, 0, 1]);
        assert_eq!(kernel_basis(&a).cols(), 0);
    }

    #[test]
    fn kernel_of_zero_on_z1() {
        let a = IntMatrix::zeros(1, 1);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 1);
        assert_eq!(k.col(0), vec_i64(&[1]));
    }

    #[test]
    fn solve_rational_halves() {
        let a = IntMatrix::from_i64(1, 1, &[2]);
        let b = vec![BigRational::from_integer(BigInt::one())];
        let z = solve_rational(&a, &b).unwrap();
        assert_eq!(z[0], BigRational::new(BigInt::one(), BigInt::from(2)));
    }

    #[test]
    fn solve_rational_inconsistent() {
        let a = IntMatrix::zeros(1, 1);
        let b = vec![BigRational::from_integer(BigInt::one())];
        assert!(solve_rational(&a, &b).is_none());
    }

    #[test]
    fn solve_rational_underdetermined() {
        let a = IntMatrix::from_i64(2, 2, &[1, 1, 1, 1]);
        let b = vec![
            BigRational::from_integer(BigInt::one()),
            BigRational::from_integer(BigInt::one()),
        ];
        let z = solve_rational(&a, &b).unwrap();
        assert_eq!(&z[0] + &z[1], BigRational::from_integer(BigInt::one()));
    }

    #[test]
    fn solve_integer_divisibility() {
        let a = IntMatrix::from_i64(1, 1, &[2]);
        assert!(solve_integer(&a, &vec_i64(&[1])).is_none());
        assert_eq!(solve_integer(&a, &vec_i64(&[6])).unwrap(), vec_i64(&[3]));
    }

    #[test]
    fn determinant_and_inverse() {
        let a = IntMatrix::from_i64(3, 3, &[1, 2, 3, 0, 1, 4, 0, 0, 1]);
        assert_eq!(a.determinant(), BigInt::one());
        let inv = a.inverse_unimodular().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(inv.mul(&a).is_identity());
    }

    #[test]
    fn determinant_singular() {
        let a = IntMatrix::from_i64(2, 2, &[1, 2, 2, 4]);
        assert!(a.determinant().is_zero());
        assert!(a.inverse_unimodular().is_err());
    }

    #[test]
    fn multiplicative_order_of_rotation() {
        // order-3 companion matrix of x^2 + x + 1
        let a = IntMatrix::from_i64(2, 2, &[0, -1, 1, -1]);
        assert_eq!(a.multiplicative_order(10).unwrap(), 3);
        let id = IntMatrix::identity(2);
        assert_eq!(id.multiplicative_order(10).unwrap(), 1);
    }

    #[test]
    fn order_cap_exceeded() {
        let a = IntMatrix::from_i64(1, 1, &[2]);
        assert!(matches!(
            a.multiplicative_order(5),
            Err(MatrixError::OrderCapExceeded { cap: 5 })
        ));
    }
}
