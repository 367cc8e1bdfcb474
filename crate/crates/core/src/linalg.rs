//! Dense exact matrices over [`GaussRat`].
//!
//! Elimination always pivots on the first nonzero entry in column order, so
//! ranks, kernels and solutions are reproducible run to run.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::GaussRat;

/// Largest column count the dense routines are meant for
/// (a degree-6 tensor power of a 4-dimensional space).
pub const DENSE_COL_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("{what} needs {size} columns, above the cap of {cap}")]
    TooLarge { what: String, size: usize, cap: usize },
    #[error("invalid permutation {0:?}")]
    BadPermutation(Vec<usize>),
}

/// A dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<GaussRat>,
}

pub type Vector = Vec<GaussRat>;

pub fn zero_vec(n: usize) -> Vector {
    vec![GaussRat::zero(); n]
}

pub fn unit_vec(n: usize, k: usize) -> Vector {
    let mut v = zero_vec(n);
    v[k] = GaussRat::one();
    v
}

pub fn is_zero_vec(v: &[GaussRat]) -> bool {
    v.iter().all(GaussRat::is_zero)
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![GaussRat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = GaussRat::one();
        }
        m
    }

    pub fn scalar(n: usize, s: &GaussRat) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = s.clone();
        }
        m
    }

    pub fn diag(entries: &[GaussRat]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussRat>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Shape("ragged rows".into()));
        }
        Ok(Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(rows: usize, cols: &[Vector]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| GaussRat::from_int(v)).collect()).collect(),
        )
        .expect("ragged integer rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[GaussRat] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[GaussRat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = &self[(i, j)];
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &GaussRat) -> Self {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|e| e * s).collect() }
    }

    pub fn trace(&self) -> GaussRat {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn apply(&self, v: &[GaussRat]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                let mut acc = GaussRat::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn try_mul(&self, o: &Mat) -> Result<Mat, LinalgError> {
        if self.cols != o.rows {
            return Err(LinalgError::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Mat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        let p = a * b;
                        out[(i, j)] += p;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Mat {
        let mut acc = Mat::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Kronecker product; `kron(A,B)·(u⊗v) = (A·u)⊗(B·v)` with `u⊗v` indexed `i·dim(v)+j`.
    pub fn kron(&self, o: &Mat) -> Mat {
        let mut out = Mat::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = &o[(k, l)];
                        if !b.is_zero() {
                            out[(i * o.rows + k, j * o.cols + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal sum.
    pub fn direct_sum(blocks: &[Mat]) -> Mat {
        let r: usize = blocks.iter().map(Mat::rows).sum();
        let c: usize = blocks.iter().map(Mat::cols).sum();
        let mut out = Mat::zeros(r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                if !m[(r, j)].is_zero() {
                    m[(r, j)] = &m[(r, j)] * &inv;
                }
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        let d = &f * &m[(r, j)];
                        m[(i, j)] -= &d;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for i in 0..self.rows {
            e.insert(self.row(i).to_vec());
        }
        e.rank()
    }

    /// Kernel basis in echelon normal form: vector `k` has a 1 in the `k`-th free
    /// column and 0 in every other free column.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = zero_vec(self.cols);
                v[f] = GaussRat::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -&r[(row, f)];
                }
                v
            })
            .collect()
    }

    /// One solution of `A·x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[GaussRat]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zero_vec(self.cols);
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = GaussRat::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Row-major entries as canonical scalar strings.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(GaussRat::to_canonical).collect()).collect()
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = GaussRat;
    fn index(&self, (i, j): (usize, usize)) -> &GaussRat {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussRat {
        &mut self.data[i * self.cols + j]
    }
}

impl<'a> Mul<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn mul(self, o: &Mat) -> Mat {
        self.try_mul(o).expect("matrix shape mismatch")
    }
}

impl<'a> Add<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn add(self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn sub(self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// The matrix on `V_1⊗…⊗V_n` (factor dimensions `dims`) sending the factor in
/// position `i` to position `perm[i]`. Positions are 0-based.
pub fn permute_factors(n: usize, dims: &[usize], perm: &[usize]) -> Result<Mat, LinalgError> {
    if dims.len() != n || perm.len() != n {
        return Err(LinalgError::Shape(format!("{n} factors, dims {dims:?}, perm {perm:?}")));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(LinalgError::BadPermutation(perm.to_vec()));
        }
        seen[p] = true;
    }
    let total: usize = dims.iter().product();
    if total > DENSE_COL_CAP {
        return Err(LinalgError::TooLarge {
            what: "factor permutation".into(),
            size: total,
            cap: DENSE_COL_CAP,
        });
    }
    let mut out_dims = vec![0; n];
    for i in 0..n {
        out_dims[perm[i]] = dims[i];
    }
    let mut m = Mat::zeros(total, total);
    let mut digits = vec![0usize; n];
    for col in 0..total {
        let mut rest = col;
        for i in (0..n).rev() {
            digits[i] = rest % dims[i];
            rest /= dims[i];
        }
        let mut row = 0;
        for k in 0..n {
            let src = perm.iter().position(|&p| p == k).expect("bijection");
            row = row * out_dims[k] + digits[src];
        }
        m[(row, col)] = GaussRat::one();
    }
    Ok(m)
}

/// Incremental row-echelon basis of a subspace, remembering how each stored
/// row was built from the inserted vectors so membership tests can also
/// return coordinates.
#[derive(Clone, Debug)]
pub struct Echelon {
    len: usize,
    /// Rows normalised to 1 at their pivot, sorted by insertion.
    rows: Vec<(usize, Vector, Vector)>,
}

impl Echelon {
    pub fn new(len: usize) -> Self {
        Echelon { len, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.len
    }

    /// Reduces `v` against the stored rows; returns the remainder and the
    /// combination (over inserted vectors) that was subtracted.
    fn reduce(&self, v: &mut Vector) -> Vector {
        let mut combo = zero_vec(self.rows.len());
        for (pivot, row, rc) in &self.rows {
            let f = v[*pivot].clone();
            if f.is_zero() {
                continue;
            }
            for (a, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *a -= &(&f * b);
                }
            }
            for (a, b) in combo.iter_mut().zip(rc) {
                if !b.is_zero() {
                    *a += &(&f * b);
                }
            }
        }
        combo
    }

    /// Adds `v` if it is independent of the stored span; returns whether it was added.
    pub fn insert(&mut self, mut v: Vector) -> bool {
        assert_eq!(v.len(), self.len, "vector length");
        let combo = self.reduce(&mut v);
        let Some(pivot) = v.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        let inv = v[pivot].inv().expect("nonzero pivot");
        for e in v.iter_mut() {
            if !e.is_zero() {
                *e = &*e * &inv;
            }
        }
        // The new row equals (inserted_k - combo) * inv in terms of inserted vectors.
        let k = self.rows.len();
        let mut rc: Vector = combo.iter().map(|c| -(c * &inv)).collect();
        rc.push(inv);
        for (_, _, old) in self.rows.iter_mut() {
            old.push(GaussRat::zero());
        }
        // Keep the stored rows fully reduced at the new pivot.
        for idx in 0..k {
            let f = self.rows[idx].1[pivot].clone();
            if f.is_zero() {
                continue;
            }
            let (row, rcv) = (&mut self.rows[idx].1, &v);
            for (a, b) in row.iter_mut().zip(rcv) {
                if !b.is_zero() {
                    *a -= &(&f * b);
                }
            }
            let old = &mut self.rows[idx].2;
            for (a, b) in old.iter_mut().zip(&rc) {
                if !b.is_zero() {
                    *a -= &(&f * b);
                }
            }
        }
        self.rows.push((pivot, v, rc));
        true
    }

    pub fn contains(&self, v: &[GaussRat]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero_vec(&w)
    }

    /// Coordinates of `v` with respect to the independent vectors inserted so
    /// far (in insertion order), or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &[GaussRat]) -> Option<Vector> {
        let mut w = v.to_vec();
        let combo = self.reduce(&mut w);
        is_zero_vec(&w).then_some(combo)
    }

    pub fn basis(&self) -> Vec<Vector> {
        self.rows.iter().map(|(_, r, _)| r.clone()).collect()
    }
}

/// Whether two families of vectors span the same subspace.
pub fn same_span(a: &[Vector], b: &[Vector]) -> bool {
    let n = a.first().or(b.first()).map_or(0, Vec::len);
    let mut ea = Echelon::new(n);
    for v in a {
        ea.insert(v.clone());
    }
    let mut eb = Echelon::new(n);
    for v in b {
        eb.insert(v.clone());
    }
    ea.rank() == eb.rank() && b.iter().all(|v| ea.contains(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    #[test]
    fn kron_examples() {
        assert!(Mat::identity(2).kron(&Mat::identity(3)).is_identity());
        let x = Mat::diag(&[gi(1), gi(-1)]);
        assert_eq!(x.kron(&x), Mat::diag(&[gi(1), gi(-1), gi(-1), gi(1)]));
        assert!(Mat::identity(2).kron(&Mat::zeros(2, 3)).is_zero());
    }

    #[test]
    fn rank_kernel_solve() {
        assert_eq!(Mat::identity(4).rank(), 4);
        let m = Mat::from_ints(&[&[1, 1], &[1, 1]]);
        assert_eq!(m.kernel_basis(), vec![vec![gi(-1), gi(1)]]);
        assert_eq!(m.solve(&[gi(2), gi(2)]), Some(vec![gi(2), gi(0)]));
        assert_eq!(m.solve(&[gi(1), gi(2)]), None);
    }

    #[test]
    fn flips() {
        let f = permute_factors(2, &[2, 2], &[1, 0]).unwrap();
        let expect = Mat::from_ints(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
        assert_eq!(f, expect);
        assert!((&f * &f).is_identity());
        assert!(permute_factors(3, &[2, 3, 2], &[0, 1, 2]).unwrap().is_identity());
        assert!(permute_factors(2, &[2, 2], &[0, 0]).is_err());
    }

    #[test]
    fn echelon_coordinates() {
        let mut e = Echelon::new(3);
        assert!(e.insert(vec![gi(1), gi(1), gi(0)]));
        assert!(e.insert(vec![gi(0), gi(1), gi(1)]));
        assert!(!e.insert(vec![gi(1), gi(2), gi(1)]));
        assert_eq!(e.coordinates(&[gi(2), gi(5), gi(3)]), Some(vec![gi(2), gi(3)]));
        assert_eq!(e.coordinates(&[gi(0), gi(0), gi(1)]), None);
    }
}
