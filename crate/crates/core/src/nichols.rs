//! Nichols algebra data of a braided vector space, computed degreewise as the
//! image of the quantum symmetrizer.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{same_span, Mat, Vector};
use crate::scalar::GaussRat;
use crate::sparse::{add_term, axpy, from_dense, to_dense, SVec, SparseEchelon};

/// Largest `dⁿ` handled by default.
pub const DEFAULT_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NicholsError {
    #[error("tensor power of dimension {0} exceeds the cap {1}")]
    CapExceeded(usize, usize),
    #[error("not a braiding: {0}")]
    NotBraided(String),
}

/// A vector space `V` with an invertible `c: V⊗V → V⊗V` satisfying the braid
/// equation. `V⊗V` is indexed by `i·d + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidedSpace {
    pub dim: usize,
    pub c: Mat,
    /// Sparse columns of `c`.
    cols: Vec<Vec<(usize, GaussRat)>>,
}

impl BraidedSpace {
    /// Validates invertibility and the braid equation.
    pub fn new(dim: usize, c: Mat) -> Result<Self, NicholsError> {
        let b = Self::new_unchecked(dim, c)?;
        if !b.c.is_invertible() {
            return Err(NicholsError::NotBraided("not invertible".into()));
        }
        if !b.satisfies_braid_equation() {
            return Err(NicholsError::NotBraided("braid equation fails".into()));
        }
        Ok(b)
    }

    /// Only checks the shape.
    pub fn new_unchecked(dim: usize, c: Mat) -> Result<Self, NicholsError> {
        if c.rows() != dim * dim || c.cols() != dim * dim {
            return Err(NicholsError::NotBraided(format!("expected {0}x{0}", dim * dim)));
        }
        let cols = (0..dim * dim)
            .map(|j| (0..dim * dim).filter(|&i| !c[(i, j)].is_zero()).map(|i| (i, c[(i, j)].clone())).collect())
            .collect();
        Ok(BraidedSpace { dim, c, cols })
    }

    pub fn satisfies_braid_equation(&self) -> bool {
        let id = Mat::identity(self.dim);
        let c1 = self.c.kron(&id);
        let c2 = id.kron(&self.c);
        &(&c1 * &c2) * &c1 == &(&c2 * &c1) * &c2
    }

    /// `σ_i` (acting on tensor positions `i, i+1`, zero-based) applied to a sparse vector in `V^{⊗n}`.
    pub fn apply_sigma(&self, n: usize, i: usize, v: &SVec) -> SVec {
        let d = self.dim;
        let low = d.pow((n - i - 2) as u32);
        let mut out = SVec::new();
        for (key, coeff) in v {
            let pair = (key / low) % (d * d);
            let base = key - pair * low;
            for (p, c) in &self.cols[pair] {
                add_term(&mut out, base + p * low, coeff * c);
            }
        }
        out
    }

    /// `T_k = 1 + σ_{k-1} + σ_{k-1}σ_{k-2} + … + σ_{k-1}⋯σ_1` on the first `k` of `n` factors (one-based σ).
    fn apply_t(&self, n: usize, k: usize, v: &SVec) -> SVec {
        let mut w = v.clone();
        for j in 0..k - 1 {
            let mut next = v.clone();
            axpy(&mut next, &GaussRat::one(), &self.apply_sigma(n, j, &w));
            w = next;
        }
        w
    }

    /// `S_n v` via `S_n = (S_{n-1} ⊗ id) T_n`.
    pub fn apply_symmetrizer(&self, n: usize, v: &SVec) -> SVec {
        let mut w = v.clone();
        for k in (2..=n).rev() {
            w = self.apply_t(n, k, &w);
        }
        w
    }

    fn check_cap(&self, n: usize, cap: usize) -> Result<usize, NicholsError> {
        let size = self.dim.checked_pow(n as u32).unwrap_or(usize::MAX);
        if size > cap {
            Err(NicholsError::CapExceeded(size, cap))
        } else {
            Ok(size)
        }
    }
}

/// A reduced word (zero-based adjacent transpositions) for a permutation of `0..n`.
pub fn reduced_word(perm: &[usize]) -> Vec<usize> {
    let mut p = perm.to_vec();
    let mut word = Vec::new();
    // Bubble sort records each swap; reversing gives a word for `perm`.
    loop {
        let mut swapped = false;
        for i in 0..p.len().saturating_sub(1) {
            if p[i] > p[i + 1] {
                p.swap(i, i + 1);
                word.push(i);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    word.reverse();
    word
}

/// The product `σ_{w_1} ⋯ σ_{w_k}` on `V^{⊗n}` as a dense matrix.
pub fn braided_lift_word(word: &[usize], n: usize, b: &BraidedSpace) -> Mat {
    let size = b.dim.pow(n as u32);
    let cols: Vec<Vector> = (0..size)
        .map(|j| {
            let mut v = SVec::new();
            v.insert(j, GaussRat::one());
            for &i in word.iter().rev() {
                v = b.apply_sigma(n, i, &v);
            }
            to_dense(&v, size)
        })
        .collect();
    Mat::from_cols(size, &cols)
}

/// The Matsumoto lift of a permutation of `0..n`.
pub fn braided_lift(perm: &[usize], b: &BraidedSpace) -> Mat {
    braided_lift_word(&reduced_word(perm), perm.len(), b)
}

/// The quantum symmetrizer on `V^{⊗n}` as a dense matrix.
pub fn quantum_symmetrizer(n: usize, b: &BraidedSpace, cap: usize) -> Result<Mat, NicholsError> {
    let size = b.check_cap(n, cap)?;
    let cols: Vec<Vector> = (0..size)
        .into_par_iter()
        .map(|j| {
            let mut v = SVec::new();
            v.insert(j, GaussRat::one());
            to_dense(&b.apply_symmetrizer(n, &v), size)
        })
        .collect();
    Ok(Mat::from_cols(size, &cols))
}

/// `dim B(V)_n`: the rank of the symmetrizer in degree `n`.
pub fn nichols_component_dim(n: usize, b: &BraidedSpace, cap: usize) -> Result<usize, NicholsError> {
    let size = b.check_cap(n, cap)?;
    if n == 0 {
        return Ok(1);
    }
    let images: Vec<SVec> = (0..size)
        .into_par_iter()
        .map(|j| {
            let mut v = SVec::new();
            v.insert(j, GaussRat::one());
            b.apply_symmetrizer(n, &v)
        })
        .collect();
    let mut ech = SparseEchelon::new();
    for v in images {
        ech.insert(v);
    }
    Ok(ech.rank())
}

/// Dimensions of the Nichols algebra in degrees `0..=maxdeg`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertPrefix {
    pub dims: Vec<usize>,
}

impl HilbertPrefix {
    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Whether the last computed component vanishes (then all higher ones do too).
    pub fn terminates(&self) -> bool {
        self.dims.last() == Some(&0)
    }
}

pub fn hilbert_prefix(b: &BraidedSpace, maxdeg: usize, cap: usize) -> Result<HilbertPrefix, NicholsError> {
    let mut dims = Vec::with_capacity(maxdeg + 1);
    for n in 0..=maxdeg {
        dims.push(nichols_component_dim(n, b, cap)?);
    }
    Ok(HilbertPrefix { dims })
}

/// Basis of `ker(1 + c)`, the quadratic relations of the Nichols algebra.
pub fn quadratic_relations(b: &BraidedSpace) -> Vec<Vector> {
    let s2 = &Mat::identity(b.dim * b.dim) + &b.c;
    s2.kernel_basis()
}

/// Whether `claimed` spans the quadratic relation space.
pub fn relations_match(b: &BraidedSpace, claimed: &[Vector]) -> bool {
    same_span(&quadratic_relations(b), claimed)
}

/// `v ⊗ v` in `V⊗V`.
pub fn square(v: &[GaussRat]) -> Vector {
    let d = v.len();
    let mut out = vec![GaussRat::zero(); d * d];
    for i in 0..d {
        for j in 0..d {
            out[i * d + j] = &v[i] * &v[j];
        }
    }
    out
}

/// Whether `c(v⊗v) = v⊗v` for a nonzero `v`.
pub fn is_eigenvalue_one(b: &BraidedSpace, v: &[GaussRat]) -> bool {
    let vv = square(v);
    v.iter().any(|c| !c.is_zero()) && b.c.apply(&vv) == vv
}

/// `S_n(v^{⊗n}) ≠ 0` for `n = 1..=maxdeg`.
pub fn line_survives(b: &BraidedSpace, v: &[GaussRat], maxdeg: usize) -> Vec<bool> {
    let d = b.dim;
    let sv = from_dense(v);
    let mut power = SVec::new();
    power.insert(0, GaussRat::one());
    (1..=maxdeg)
        .map(|n| {
            let mut next = SVec::new();
            for (k, c) in &power {
                for (i, ci) in &sv {
                    add_term(&mut next, k * d + i, c * ci);
                }
            }
            power = next;
            !b.apply_symmetrizer(n, &power).is_empty()
        })
        .collect()
}

/// `q_{ij}` with `c(e_i⊗e_j) = q_{ij} e_j⊗e_i`, when the braiding is diagonal in this basis.
pub fn diagonal_data(b: &BraidedSpace) -> Option<Vec<Vec<GaussRat>>> {
    let d = b.dim;
    let mut q = vec![vec![GaussRat::zero(); d]; d];
    for i in 0..d {
        for j in 0..d {
            let col = &b.cols[i * d + j];
            match col.as_slice() {
                [(p, c)] if *p == j * d + i => q[i][j] = c.clone(),
                _ => return None,
            }
        }
    }
    Some(q)
}

fn poly_trim(mut p: Vec<GaussRat>) -> Vec<GaussRat> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Remainder of `a` divided by `b` (coefficients in increasing degree).
fn poly_rem(a: &[GaussRat], b: &[GaussRat]) -> Vec<GaussRat> {
    let mut r = poly_trim(a.to_vec());
    let b = poly_trim(b.to_vec());
    let lead = b.last().expect("nonzero divisor").inv().expect("nonzero");
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let f = r.last().expect("nonempty") * &lead;
        for (k, c) in b.iter().enumerate() {
            r[shift + k] -= &(&f * c);
        }
        r = poly_trim(r);
    }
    r
}

/// Greatest common divisor of polynomials over `Q(i)`; the empty vector is zero.
pub fn poly_gcd(polys: &[Vec<GaussRat>]) -> Vec<GaussRat> {
    let mut g: Vec<GaussRat> = Vec::new();
    for p in polys {
        let mut a = poly_trim(p.clone());
        let mut b = g;
        while !b.is_empty() {
            let r = poly_rem(&a, &b);
            a = b;
            b = r;
        }
        g = a;
    }
    g
}

/// For a 2-dimensional space, decides whether some nonzero `v` over the
/// algebraic closure has `c(v⊗v) = v⊗v`. `None` for other dimensions.
pub fn eigenvalue_one_exists_2d(b: &BraidedSpace) -> Option<bool> {
    if b.dim != 2 {
        return None;
    }
    let m = &b.c - &Mat::identity(4);
    // v = (0, 1).
    if (0..4).all(|k| m[(k, 3)].is_zero()) {
        return Some(true);
    }
    // v = (1, s): each coordinate of (c - 1)(v⊗v) is a quadratic in s.
    let polys: Vec<Vec<GaussRat>> =
        (0..4).map(|k| vec![m[(k, 0)].clone(), &m[(k, 1)] + &m[(k, 2)], m[(k, 3)].clone()]).collect();
    Some(poly_gcd(&polys).len() != 1)
}

/// For a 2-dimensional space, the nonzero `v` with `c(v⊗v) = v⊗v` whose
/// coordinates lie in `Q(i)`, normalized to `(0, 1)` or `(1, s)`.
pub fn eigenvalue_one_rational_2d(b: &BraidedSpace) -> Vec<Vector> {
    if b.dim != 2 {
        return Vec::new();
    }
    let m = &b.c - &Mat::identity(4);
    let mut out = Vec::new();
    if (0..4).all(|k| m[(k, 3)].is_zero()) {
        out.push(vec![GaussRat::zero(), GaussRat::one()]);
    }
    let polys: Vec<Vec<GaussRat>> =
        (0..4).map(|k| vec![m[(k, 0)].clone(), &m[(k, 1)] + &m[(k, 2)], m[(k, 3)].clone()]).collect();
    let g = poly_gcd(&polys);
    let roots: Vec<GaussRat> = match g.len() {
        // Zero polynomial: every `s` works.
        0 => vec![GaussRat::zero()],
        2 => vec![-(&g[0] / &g[1])],
        3 => {
            let (p, q) = (&g[1] / &g[2], &g[0] / &g[2]);
            let disc = &(&p * &p) - &(&GaussRat::from_int(4) * &q);
            match disc.sqrt_exact() {
                Some(r) => {
                    let half = GaussRat::half();
                    let mut rs = vec![&half * &(&-&p + &r), &half * &(&-&p - &r)];
                    rs.dedup();
                    rs
                }
                None => Vec::new(),
            }
        }
        _ => Vec::new(),
    };
    out.extend(roots.into_iter().map(|s| vec![GaussRat::one(), s]));
    out
}
