//! Exact integer linear algebra over arbitrary-precision integers.
//!
//! Everything the toric machinery needs from lattices lives here: primitive
//! vectors, the column Hermite normal form, Smith-style diagonalization,
//! saturated kernel bases and integer linear solving.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vector of arbitrary-precision integers, ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntVec(#[serde(with = "crate::json::bigint_vec")] pub Vec<BigInt>);

impl IntVec {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVec(entries)
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        IntVec(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zeros(len: usize) -> Self {
        IntVec(vec![BigInt::zero(); len])
    }

    /// Unit vector `e_i` of length `len`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[i] = BigInt::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BigInt> {
        self.0.iter()
    }

    pub fn dot(&self, other: &IntVec) -> BigInt {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn add(&self, other: &IntVec) -> IntVec {
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &IntVec) -> IntVec {
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &BigInt) -> IntVec {
        IntVec(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> IntVec {
        IntVec(self.0.iter().map(|a| -a).collect())
    }

    /// gcd of all entries (0 for the zero vector).
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    /// Entries as `i64`, if they all fit.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.0.iter().map(|x| x.to_i64()).collect()
    }
}

impl Index<usize> for IntVec {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for IntVec {
    fn from(v: Vec<i64>) -> Self {
        IntVec::from_i64(&v)
    }
}

/// Divides `v` by the gcd of its entries. The sign of `v` is preserved.
pub fn primitive_vector(v: &IntVec) -> Result<IntVec> {
    let g = v.content();
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(IntVec(v.0.iter().map(|x| x / &g).collect()))
}

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let r: Vec<IntVec> = rows.iter().map(|x| IntVec::from_i64(x)).collect();
        let cols = r.first().map_or(0, IntVec::len);
        Self::from_rows(r.len(), cols, &r)
    }

    /// Builds a matrix from row vectors; `cols` is needed when there are no rows.
    pub fn from_rows(rows: usize, cols: usize, r: &[IntVec]) -> Self {
        assert_eq!(r.len(), rows);
        let mut m = Self::zeros(rows, cols);
        for (i, row) in r.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, x) in row.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, c: &[IntVec]) -> Self {
        let mut m = Self::zeros(rows, c.len());
        for (j, col) in c.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged columns");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> IntVec {
        IntVec(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> IntVec {
        IntVec((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn columns(&self) -> Vec<IntVec> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row_vecs(&self) -> Vec<IntVec> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "incompatible matrix product");
        let mut p = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * p.cols + j;
                        p.data[idx] += a * b;
                    }
                }
            }
        }
        p
    }

    pub fn mul_vec(&self, v: &IntVec) -> IntVec {
        assert_eq!(self.cols, v.len(), "incompatible matrix-vector product");
        IntVec((0..self.rows).map(|i| self.row(i).dot(v)).collect())
    }

    /// Keeps only the listed columns, in the given order.
    pub fn select_columns(&self, idx: &[usize]) -> IntMat {
        let cols: Vec<IntVec> = idx.iter().map(|&j| self.column(j)).collect();
        IntMat::from_columns(self.rows, &cols)
    }

    pub fn select_rows(&self, idx: &[usize]) -> IntMat {
        let rows: Vec<IntVec> = idx.iter().map(|&i| self.row(i)).collect();
        IntMat::from_rows(idx.len(), self.cols, &rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// col[dst] -= q * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = self.get(i, src) * q;
            self.data[i * self.cols + dst] -= s;
        }
    }

    /// row[dst] -= q * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = self.get(src, j) * q;
            self.data[dst * self.cols + j] -= s;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let idx = i * self.cols + j;
            self.data[idx] = -&self.data[idx];
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let idx = i * self.cols + j;
            self.data[idx] = -&self.data[idx];
        }
    }
}

impl fmt::Display for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// Column-style Hermite normal form `h = m·u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteResult {
    pub h: IntMat,
    pub u: IntMat,
    /// Pivot row of each of the first `rank` columns of `h`.
    pub pivots: Vec<usize>,
}

impl HermiteResult {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Computes `h = m·u` with `u` unimodular and `h` in lower staircase form:
/// the first `rank` columns carry positive pivots in strictly increasing
/// rows, the remaining columns are zero, and entries to the left of a pivot
/// lie in `[0, pivot)`.
pub fn hermite_normal_form(m: &IntMat) -> HermiteResult {
    let mut h = m.clone();
    let mut u = IntMat::identity(m.cols);
    let mut pivots = Vec::new();
    let mut k = 0;
    for i in 0..h.rows {
        if k == h.cols {
            break;
        }
        loop {
            let best = (k..h.cols)
                .filter(|&j| !h.get(i, j).is_zero())
                .min_by(|&a, &b| h.get(i, a).abs().cmp(&h.get(i, b).abs()));
            let Some(best) = best else { break };
            h.swap_cols(k, best);
            u.swap_cols(k, best);
            let mut done = true;
            for j in k + 1..h.cols {
                if h.get(i, j).is_zero() {
                    continue;
                }
                let q = h.get(i, j).div_floor(h.get(i, k));
                h.col_axpy(j, k, &q);
                u.col_axpy(j, k, &q);
                if !h.get(i, j).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(i, k).is_zero() {
            continue;
        }
        if h.get(i, k).is_negative() {
            h.negate_col(k);
            u.negate_col(k);
        }
        let p = h.get(i, k).clone();
        for j in 0..k {
            let q = h.get(i, j).div_floor(&p);
            h.col_axpy(j, k, &q);
            u.col_axpy(j, k, &q);
        }
        pivots.push(i);
        k += 1;
    }
    HermiteResult { h, u, pivots }
}

/// Smith-style diagonalization `u·m·v = d`.
#[derive(Clone, Debug)]
pub struct SmithResult {
    pub d: IntMat,
    pub u: IntMat,
    pub v: IntMat,
    /// Nonzero diagonal entries, each dividing the next.
    pub diagonal: Vec<BigInt>,
}

impl SmithResult {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

pub fn smith_normal_form(m: &IntMat) -> SmithResult {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntMat::identity(rows);
    let mut v = IntMat::identity(cols);
    let mut diagonal = Vec::new();
    for t in 0..rows.min(cols) {
        'pivot: loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = d.get(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break 'pivot };
            d.swap_rows(t, bi);
            u.swap_rows(t, bi);
            d.swap_cols(t, bj);
            v.swap_cols(t, bj);
            let mut clean = true;
            for i in t + 1..rows {
                let q = d.get(i, t).div_floor(d.get(t, t));
                d.row_axpy(i, t, &q);
                u.row_axpy(i, t, &q);
                if !d.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = d.get(t, j).div_floor(d.get(t, t));
                d.col_axpy(j, t, &q);
                v.col_axpy(j, t, &q);
                if !d.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let p = d.get(t, t).clone();
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d.get(i, j).is_multiple_of(&p)));
            if let Some(i) = offender {
                // fold the offending row into the pivot row and retry
                let minus_one = -BigInt::one();
                d.row_axpy(t, i, &minus_one);
                u.row_axpy(t, i, &minus_one);
                continue;
            }
            if p.is_negative() {
                d.negate_row(t);
                u.negate_row(t);
            }
            diagonal.push(d.get(t, t).clone());
            break 'pivot;
        }
        if diagonal.len() <= t {
            break;
        }
    }
    SmithResult { d, u, v, diagonal }
}

/// Basis (as columns) of the saturated lattice `{v ∈ ℤ^cols : m·v = 0}`,
/// brought into column Hermite form so the output is canonical.
pub fn saturated_kernel_basis(m: &IntMat) -> IntMat {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    let idx: Vec<usize> = (rank..m.cols).collect();
    let k = snf.v.select_columns(&idx);
    canonical_basis(&k)
}

/// Column Hermite form of a full-column-rank basis matrix (zero columns dropped).
pub fn canonical_basis(basis: &IntMat) -> IntMat {
    let hnf = hermite_normal_form(basis);
    let idx: Vec<usize> = (0..hnf.rank()).collect();
    hnf.h.select_columns(&idx)
}

pub fn rank(m: &IntMat) -> usize {
    hermite_normal_form(m).rank()
}

/// One integer solution of `a·x = b` together with a basis of the kernel of `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerSolution {
    pub particular: IntVec,
    pub kernel: IntMat,
}

pub fn solve_integer_linear(a: &IntMat, b: &IntVec) -> Result<Option<IntegerSolution>> {
    if b.len() != a.rows {
        return Err(Error::DimensionMismatch { expected: a.rows, got: b.len() });
    }
    let hnf = hermite_normal_form(a);
    let rank = hnf.rank();
    let mut y = vec![BigInt::zero(); a.cols];
    let mut k = 0;
    for i in 0..a.rows {
        let acc: BigInt = (0..k).map(|j| hnf.h.get(i, j) * &y[j]).sum();
        let rest = &b[i] - acc;
        if k < rank && hnf.pivots[k] == i {
            let p = hnf.h.get(i, k);
            if !rest.is_multiple_of(p) {
                return Ok(None);
            }
            y[k] = rest / p;
            k += 1;
        } else if !rest.is_zero() {
            return Ok(None);
        }
    }
    let particular = hnf.u.mul_vec(&IntVec(y));
    let idx: Vec<usize> = (rank..a.cols).collect();
    let kernel = hnf.u.select_columns(&idx);
    Ok(Some(IntegerSolution { particular, kernel }))
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &IntMat) -> BigInt {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a.get(k, k).is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                return BigInt::zero();
            };
            a.swap_rows(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let val = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                a.set(i, j, val);
            }
        }
        prev = a.get(k, k).clone();
    }
    sign * a.get(n - 1, n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn euclid_gcd(mut a: i64, mut b: i64) -> i64 {
        a = a.abs();
        b = b.abs();
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    }

    #[test]
    fn primitive_vectors() {
        assert_eq!(primitive_vector(&IntVec::from_i64(&[2, -4, 6])).unwrap(), IntVec::from_i64(&[1, -2, 3]));
        assert_eq!(primitive_vector(&IntVec::from_i64(&[0, 1])).unwrap(), IntVec::from_i64(&[0, 1]));
        let g = euclid_gcd(-3, -3);
        assert_eq!(g, 3);
        assert_eq!(primitive_vector(&IntVec::from_i64(&[-3, -3])).unwrap(), IntVec::from_i64(&[-3 / g, -3 / g]));
        assert_eq!(primitive_vector(&IntVec::zeros(3)), Err(Error::ZeroVector));
    }

    #[test]
    fn hermite_identity() {
        let id = IntMat::identity(2);
        let r = hermite_normal_form(&id);
        assert_eq!(r.h, id);
        assert_eq!(r.u, id);
    }

    #[test]
    fn hermite_two_by_two() {
        let m = IntMat::from_rows_i64(&[vec![2, 1], vec![0, 1]]);
        let r = hermite_normal_form(&m);
        assert_eq!(m.mul(&r.u), r.h);
        assert_eq!(determinant(&r.u).abs(), BigInt::one());
        assert_eq!(determinant(&r.h).abs(), BigInt::from(2));
        assert_eq!(r.h, IntMat::from_rows_i64(&[vec![1, 0], vec![1, 2]]));
    }

    #[test]
    fn hermite_row_vector() {
        let m = IntMat::from_rows_i64(&[vec![6, 4]]);
        let r = hermite_normal_form(&m);
        assert_eq!(r.h, IntMat::from_rows_i64(&[vec![euclid_gcd(6, 4), 0]]));
    }

    #[test]
    fn kernel_of_square_rays() {
        let m = IntMat::from_rows_i64(&[vec![1, -1, 0, 0], vec![0, 0, 1, -1]]);
        let k = saturated_kernel_basis(&m);
        assert_eq!(k, IntMat::from_rows_i64(&[vec![1, 0], vec![1, 0], vec![0, 1], vec![0, 1]]));
    }

    #[test]
    fn kernel_of_pentagon_rays() {
        let m = IntMat::from_rows_i64(&[vec![1, 1, 0, -1, 0], vec![0, 1, 1, 0, -1]]);
        let k = saturated_kernel_basis(&m);
        let expected = IntMat::from_columns(
            5,
            &[
                IntVec::from_i64(&[1, 0, 0, 1, 0]),
                IntVec::from_i64(&[0, 1, 0, 1, 1]),
                IntVec::from_i64(&[0, 0, 1, 0, 1]),
            ],
        );
        assert_eq!(k, expected);
    }

    #[test]
    fn kernel_of_full_rank_is_empty() {
        let m = IntMat::from_rows_i64(&[vec![2, 1], vec![1, 1]]);
        assert_eq!(saturated_kernel_basis(&m).cols(), 0);
    }

    #[test]
    fn kernel_is_saturated() {
        // kernel of (2, 4) is spanned by (-2, 1), not by a multiple of it
        let m = IntMat::from_rows_i64(&[vec![2, 4]]);
        let k = saturated_kernel_basis(&m);
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0).content(), BigInt::one());
    }

    #[test]
    fn solve_identity_and_parity() {
        let b = IntVec::from_i64(&[3, -7]);
        let s = solve_integer_linear(&IntMat::identity(2), &b).unwrap().unwrap();
        assert_eq!(s.particular, b);
        assert_eq!(s.kernel.cols(), 0);
        let none = solve_integer_linear(&IntMat::from_rows_i64(&[vec![2]]), &IntVec::from_i64(&[3])).unwrap();
        assert!(none.is_none());
        assert!(matches!(
            solve_integer_linear(&IntMat::identity(2), &IntVec::from_i64(&[1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn solve_planted_system() {
        let a = IntMat::from_rows_i64(&[vec![3, 1, 4, 1, 5], vec![9, 2, 6, 5, 3], vec![5, 8, 9, 7, 9]]);
        let x = IntVec::from_i64(&[2, -7, 1, 8, -2]);
        let b = a.mul_vec(&x);
        let s = solve_integer_linear(&a, &b).unwrap().unwrap();
        assert_eq!(a.mul_vec(&s.particular), b);
        assert_eq!(s.kernel.cols(), 2);
        for k in s.kernel.columns() {
            assert_eq!(a.mul_vec(&s.particular.add(&k)), b);
        }
    }

    #[test]
    fn smith_diagonal_divides() {
        let m = IntMat::from_rows_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.u.mul(&m).mul(&s.v), s.d);
        assert_eq!(s.diagonal, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
    }

    #[test]
    fn bareiss_determinant() {
        let m = IntMat::from_rows_i64(&[vec![0, 2, 1], vec![1, 0, 3], vec![4, 1, 0]]);
        // cofactor expansion: 0*(0-3) - 2*(0-12) + 1*(1-0) = 25
        assert_eq!(determinant(&m), BigInt::from(25));
    }
}
