//! The Drinfeld double `D = D(H^cop)`, its presentation by `a, b, c, d, x, y, t`,
//! and its 88 simple modules.
//!
//! `D = A^{*cop} ⊗ A` with `A = H^cop`. On the basis `f_α ⊗ h`, `f_α` runs
//! over the dual words `a^α₀ b^α₁ c^α₂ d^α₃` (index `α₀ + 2α₁ + 4α₂ + 8α₃`)
//! and `h` over the monomials of `H`. Basis index is `16·α + h`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use hb1_core::hopf::FDHopf;
use hb1_core::linalg::Mat;
use hb1_core::presentation::{concat, GeneratorSymbol, LinComb, Presentation, SegmentDir, Sort};
use hb1_core::scalar::GaussRat;
use hb1_core::sparse::{add_term, axpy, basis_vec, SVec, STensor};
use serde::Serialize;
use thiserror::Error;

use crate::kashina::{build_dual_generators, h_exponents, h_label, kashina, NamedCheck, DIM_H};

pub const DIM_D: usize = 256;

/// Generator names of `D`, in presentation order.
pub const D_GENERATORS: [&str; 7] = ["a", "b", "c", "d", "x", "y", "t"];

pub const D_H_RELATIONS: [&str; 6] = crate::kashina::H_RELATIONS;

pub const D_DUAL_RELATIONS: [&str; 10] = [
    "a^2 = 1", "b^2 = 1", "c^2 = 1", "b a = a b", "c a = a c", "c b = b c", "d^2 = a", "d a = a d", "d b = c d",
    "d c = b d",
];

pub const D_CROSS_RELATIONS: [&str; 12] = [
    "x a = a x",
    "x b = b x",
    "x c = c x",
    "x d = b c d x",
    "y a = a y",
    "y b = b y",
    "y c = c y",
    "y d = d y",
    "t a = a t",
    "t b = b x^2 t",
    "t c = c x^2 t",
    "t d = a d y t",
];

pub fn d_relations() -> impl Iterator<Item = &'static str> {
    D_H_RELATIONS.iter().chain(D_DUAL_RELATIONS.iter()).chain(D_CROSS_RELATIONS.iter()).copied()
}

/// Dual letters at level 0, `x, y` at level 1, `t` at level 2.
pub fn d_presentation() -> Presentation {
    let gens = D_GENERATORS
        .iter()
        .map(|n| {
            let level = match *n {
                "x" | "y" => 1,
                "t" => 2,
                _ => 0,
            };
            GeneratorSymbol::new(n, Sort::GroupLike, level)
        })
        .collect();
    let mut p = Presentation::new(gens, vec![SegmentDir::LeftFirst, SegmentDir::RightFirst, SegmentDir::RightFirst])
        .expect("distinct names");
    let none = HashMap::new();
    for r in d_relations() {
        p.add_relation_str(r, &none).expect("well formed");
    }
    p
}

/// Generator letters with no rules, for parsing words in `D`.
fn free_d_presentation() -> Presentation {
    Presentation::new(
        D_GENERATORS.iter().map(|n| GeneratorSymbol::new(n, Sort::GroupLike, 0)).collect(),
        vec![],
    )
    .expect("distinct names")
}

pub fn parse_d(expr: &str) -> LinComb {
    free_d_presentation().parse_relation(expr, &HashMap::new()).unwrap_or_else(|e| panic!("{e}"))
}

/// Evaluates a combination of words in an algebra given by generator images.
pub fn eval_words<T: Clone>(
    lc: &LinComb,
    unit: &T,
    gens: &[T],
    mul: &dyn Fn(&T, &T) -> T,
    axpy: &dyn Fn(&mut T, &GaussRat, &T),
    zero: T,
) -> T {
    let mut out = zero;
    for (w, c) in lc {
        let v = w.iter().fold(unit.clone(), |acc, &g| mul(&acc, &gens[g as usize]));
        axpy(&mut out, c, &v);
    }
    out
}

pub struct Double {
    pub hopf: FDHopf,
    /// Columns: the dual words `f_α` as functionals (values on the 16 monomials).
    pub dual_words: Vec<Vec<GaussRat>>,
    /// Dual-basis functional `e^i` in dual-word coordinates.
    pub delta_in_words: Vec<SVec>,
}

static DOUBLE: OnceLock<Double> = OnceLock::new();

pub fn double() -> &'static Double {
    DOUBLE.get_or_init(build)
}

/// The double as a Hopf algebra.
pub fn build_double() -> FDHopf {
    double().hopf.clone()
}

pub fn d_index(alpha: usize, h: usize) -> usize {
    16 * alpha + h
}

fn dual_word_label(alpha: usize) -> String {
    let s: String = ["a", "b", "c", "d"].iter().enumerate().filter(|(k, _)| alpha >> k & 1 == 1).map(|(_, n)| *n).collect();
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

fn build() -> Double {
    let h = &kashina().hopf;
    let n = DIM_H;
    // Monomials of H form a group under multiplication.
    let mono = |i: usize, j: usize| -> usize { *h.mul_basis(i, j).keys().next().expect("monomial") };
    // Product in A* = (H^cop)*: (pq)(u) = p(u₂) q(u₁).
    let fmul = |p: &[GaussRat], q: &[GaussRat]| -> Vec<GaussRat> {
        (0..n)
            .map(|u| h.comult[u].iter().map(|((u1, u2), c)| c * &(&p[*u2] * &q[*u1])).sum())
            .collect()
    };
    let gens = build_dual_generators();
    let dense = |v: &SVec| hb1_core::sparse::to_dense(v, n);
    let letters = [dense(&gens.a), dense(&gens.b), dense(&gens.c), dense(&gens.d)];
    let eps = vec![GaussRat::one(); n];
    let dual_words: Vec<Vec<GaussRat>> = (0..16)
        .map(|alpha| {
            (0..4).filter(|k| alpha >> k & 1 == 1).fold(eps.clone(), |acc, k| fmul(&acc, &letters[k]))
        })
        .collect();
    let fmat = Mat::from_cols(n, &dual_words);
    let finv = fmat.inverse().expect("dual words form a basis");
    let to_words = |v: &[GaussRat]| -> SVec { hb1_core::sparse::from_dense(&finv.apply(v)) };
    let delta_in_words: Vec<SVec> = (0..n).map(|i| to_words(&hb1_core::linalg::unit_vec(n, i))).collect();

    // Products of dual words, in word coordinates.
    let mut word_mul = vec![SVec::new(); 256];
    for p in 0..16 {
        for q in 0..16 {
            word_mul[p * 16 + q] = to_words(&fmul(&dual_words[p], &dual_words[q]));
        }
    }

    let s_h = h.antipode.as_ref().expect("H carries its antipode");
    // Δ² in A = H^cop: (a1, a2, a3)_A = (a₃, a₂, a₁)_H.
    let delta2 = |j: usize| -> Vec<(GaussRat, usize, usize, usize)> {
        let mut acc: BTreeMap<(usize, usize, usize), GaussRat> = BTreeMap::new();
        for ((u, v), c) in &h.comult[j] {
            for ((p, q), d) in &h.comult[*u] {
                add_term(&mut acc, (*v, *q, *p), c * d);
            }
        }
        acc.into_iter().map(|((a1, a2, a3), c)| (c, a1, a2, a3)).collect()
    };
    // Exchange table: (ε⊗e_j)(f_β⊗1) = Σ ⟨q₃,a₁⟩⟨q₁,S_A⁻¹(a₃)⟩ q₂ ⊗ a₂ with S_A⁻¹ = S_H,
    // where the functional q₂ is u ↦ q(S_H(a₃) u a₁).
    let mut exchange = vec![SVec::new(); 256];
    for j in 0..n {
        let d2 = delta2(j);
        for beta in 0..16 {
            let q = &dual_words[beta];
            let mut out = SVec::new();
            for (c, a1, a2, a3) in &d2 {
                let conj: Vec<GaussRat> = (0..n)
                    .map(|u| s_h[*a3].iter().map(|(s, cs)| cs * &q[mono(mono(*s, u), *a1)]).sum())
                    .collect();
                for (gamma, cg) in to_words(&conj) {
                    add_term(&mut out, d_index(gamma, *a2), c * &cg);
                }
            }
            exchange[j * 16 + beta] = out;
        }
    }

    let mut mult = Vec::with_capacity(DIM_D * DIM_D);
    for left in 0..DIM_D {
        let (alpha, j) = (left / 16, left % 16);
        for right in 0..DIM_D {
            let (beta, l) = (right / 16, right % 16);
            let mut out = SVec::new();
            for (mid, c) in &exchange[j * 16 + beta] {
                let (gamma, m) = (mid / 16, mid % 16);
                let hm = mono(m, l);
                for (delta, cw) in &word_mul[alpha * 16 + gamma] {
                    add_term(&mut out, d_index(*delta, hm), c * cw);
                }
            }
            mult.push(out);
        }
    }

    // Coalgebra: tensor product of A^{*cop} and A.
    let word_comult: Vec<Vec<(GaussRat, usize, usize)>> = (0..16)
        .map(|alpha| {
            // Δ_{A*}(f)(u⊗v) = f(uv); the cop flips the legs.
            let mut tm = vec![vec![GaussRat::zero(); n]; n];
            for u in 0..n {
                for v in 0..n {
                    tm[v][u] = dual_words[alpha][mono(u, v)].clone();
                }
            }
            // Convert both legs to word coordinates.
            let mut out: BTreeMap<(usize, usize), GaussRat> = BTreeMap::new();
            let rows: Vec<SVec> = tm.iter().map(|r| to_words(r)).collect();
            for (gamma_col, _) in (0..16).map(|g| (g, ())) {
                let col: Vec<GaussRat> =
                    (0..n).map(|i| rows[i].get(&gamma_col).cloned().unwrap_or_else(GaussRat::zero)).collect();
                for (gamma_row, c) in to_words(&col) {
                    add_term(&mut out, (gamma_row, gamma_col), c);
                }
            }
            out.into_iter().map(|((p, q), c)| (c, p, q)).collect()
        })
        .collect();
    let mut comult = Vec::with_capacity(DIM_D);
    let mut counit = Vec::with_capacity(DIM_D);
    for k in 0..DIM_D {
        let (alpha, j) = (k / 16, k % 16);
        let mut t = STensor::new();
        for (c, p1, p2) in &word_comult[alpha] {
            for ((u, v), d) in &h.comult[j] {
                // Δ_A = Δ^cop_H.
                add_term(&mut t, (d_index(*p1, *v), d_index(*p2, *u)), c * d);
            }
        }
        comult.push(t);
        counit.push(&dual_words[alpha][0] * &h.counit[j]);
    }
    let labels: Vec<String> = (0..DIM_D)
        .map(|k| {
            let (alpha, j) = (k / 16, k % 16);
            match (alpha, j) {
                (0, _) => h_label(j),
                (_, 0) => dual_word_label(alpha),
                _ => format!("{}·{}", dual_word_label(alpha), h_label(j)),
            }
        })
        .collect();
    let mut hopf = FDHopf::new(labels, mult, basis_vec(0), comult, counit).expect("shapes");
    let gens: Vec<(String, SVec)> = D_GENERATORS
        .iter()
        .map(|name| {
            let idx = match *name {
                "a" => d_index(1, 0),
                "b" => d_index(2, 0),
                "c" => d_index(4, 0),
                "d" => d_index(8, 0),
                "x" => d_index(0, 1),
                "y" => d_index(0, 4),
                _ => d_index(0, 8),
            };
            (name.to_string(), basis_vec(idx))
        })
        .collect();
    hopf.generators = gens;

    // S_D(f⊗a) = (ε⊗S_A(a))(S_{A*cop}(f)⊗1) with S_A = S_H⁻¹ and S_{A*cop} = S_H^T.
    let s_inv = hb1_core::hopf::invert_cols(s_h, n).expect("S_H invertible");
    let mut antipode = Vec::with_capacity(DIM_D);
    for k in 0..DIM_D {
        let (alpha, j) = (k / 16, k % 16);
        let f = &dual_words[alpha];
        let sf: Vec<GaussRat> = (0..n).map(|u| s_h[u].iter().map(|(v, c)| c * &f[*v]).sum()).collect();
        let sf_words = to_words(&sf);
        let mut out = SVec::new();
        for (m, cm) in &s_inv[j] {
            for (beta, cb) in &sf_words {
                axpy(&mut out, &(cm * cb), &exchange[m * 16 + beta]);
            }
        }
        antipode.push(out);
    }
    hopf.antipode = Some(antipode);
    Double { hopf, dual_words, delta_in_words }
}

/// Checks every defining relation of `D` as an identity in `D`, and that
/// the relations present an algebra of dimension 256.
pub fn verify_double_presentation(d: &FDHopf) -> Vec<NamedCheck> {
    let gens: Vec<SVec> = d.generators.iter().map(|(_, g)| g.clone()).collect();
    let mut out: Vec<NamedCheck> = d_relations()
        .map(|r| NamedCheck::new(r, relation_holds_in(d, &gens, r)))
        .collect();
    let p = d_presentation();
    out.push(NamedCheck::new("presentation confluent", p.check_confluence().is_empty()));
    out.push(NamedCheck::new(
        "presentation has 256 normal words",
        p.enumerate_basis(1024).map(|b| b.len() == DIM_D).unwrap_or(false),
    ));
    out
}

/// Whether relation `r` (in the letters `a, b, c, d, x, y, t`) holds for the given elements.
pub fn relation_holds_in(d: &FDHopf, gens: &[SVec], r: &str) -> bool {
    let lc = parse_d(r);
    let v = eval_words(&lc, &d.unit, gens, &|p, q| d.mul(p, q), &|acc, c, v| axpy(acc, c, v), SVec::new());
    v.is_empty()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DoubleError {
    #[error("label out of range: {0}")]
    OutOfRange(String),
}

/// Labels of the simple `D`-modules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SimpleLabel {
    Char { i: u8, j: u8, k: u8, l: u8 },
    V { i: u8, j: u8, k: u8, l: u8, m: u8, n: u8 },
    W { i: u8, j: u8, k: u8, l: u8 },
    U { i: u8, j: u8, k: u8, l: u8 },
}

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SimpleLabel::Char { i, j, k, l } => write!(f, "chi({i},{j},{k},{l})"),
            SimpleLabel::V { i, j, k, l, m, n } => write!(f, "V({i},{j},{k},{l},{m},{n})"),
            SimpleLabel::W { i, j, k, l } => write!(f, "W({i},{j},{k},{l})"),
            SimpleLabel::U { i, j, k, l } => write!(f, "U({i},{j},{k},{l})"),
        }
    }
}

impl SimpleLabel {
    pub fn dim(&self) -> usize {
        match self {
            SimpleLabel::Char { .. } => 1,
            _ => 2,
        }
    }

    /// Membership in the index sets of the catalog.
    pub fn in_catalog_range(&self) -> bool {
        match *self {
            SimpleLabel::Char { i, j, k, l } => i < 2 && j < 4 && k < 2 && l < 2,
            SimpleLabel::V { i, j, k, l, m, n } => {
                let bits = [i, j, k, l, m, n].iter().all(|&b| b < 2);
                let omega1 = i == 0 && (m + n) % 2 == 1;
                let omega2 = k == 0 && (m + n) % 2 == 0 && (j + l) % 2 == 1;
                bits && (omega1 || omega2)
            }
            SimpleLabel::W { i, j, k, l } => i == 1 && j < 2 && k < 4 && l < 2,
            SimpleLabel::U { i, j, k, l } => i == 1 && j < 4 && k < 2 && l < 2,
        }
    }

    /// The 88 catalog labels: 32 characters, then `V`, `W`, `U`.
    pub fn catalog() -> Vec<SimpleLabel> {
        let mut out = Vec::new();
        for i in 0..2 {
            for j in 0..4 {
                for k in 0..2 {
                    for l in 0..2 {
                        out.push(SimpleLabel::Char { i, j, k, l });
                    }
                }
            }
        }
        for bits in 0..64u8 {
            let b = |s: u8| (bits >> (5 - s)) & 1;
            let v = SimpleLabel::V { i: b(0), j: b(1), k: b(2), l: b(3), m: b(4), n: b(5) };
            if v.in_catalog_range() {
                out.push(v);
            }
        }
        for j in 0..2 {
            for k in 0..4 {
                for l in 0..2 {
                    out.push(SimpleLabel::W { i: 1, j, k, l });
                }
            }
        }
        for j in 0..4 {
            for k in 0..2 {
                for l in 0..2 {
                    out.push(SimpleLabel::U { i: 1, j, k, l });
                }
            }
        }
        out
    }
}

/// A representation of `D`: one matrix per generator `a, b, c, d, x, y, t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenRep {
    pub dim: usize,
    pub mats: Vec<Mat>,
}

impl GenRep {
    pub fn get(&self, name: &str) -> &Mat {
        &self.mats[D_GENERATORS.iter().position(|n| *n == name).expect("generator name")]
    }

    /// Matrix of a combination of words.
    pub fn eval(&self, lc: &LinComb) -> Mat {
        eval_words(
            lc,
            &Mat::identity(self.dim),
            &self.mats,
            &|p, q| p * q,
            &|acc, c, v| *acc = &*acc + &v.scale(c),
            Mat::zeros(self.dim, self.dim),
        )
    }

    pub fn direct_sum(&self, other: &GenRep) -> GenRep {
        GenRep {
            dim: self.dim + other.dim,
            mats: self.mats.iter().zip(&other.mats).map(|(p, q)| Mat::direct_sum(&[p.clone(), q.clone()])).collect(),
        }
    }

    /// Action of a `D` basis element `f_α ⊗ h`.
    pub fn basis_action(&self, alpha: usize, h: usize) -> Mat {
        let mut m = Mat::identity(self.dim);
        for (k, name) in ["a", "b", "c", "d"].iter().enumerate() {
            if alpha >> k & 1 == 1 {
                m = &m * self.get(name);
            }
        }
        let (e, f, g) = h_exponents(h);
        for (name, p) in [("x", e), ("y", f), ("t", g)] {
            for _ in 0..p {
                m = &m * self.get(name);
            }
        }
        m
    }

    /// Action of an element of `D` in basis coordinates.
    pub fn act(&self, v: &SVec) -> Mat {
        let mut m = Mat::zeros(self.dim, self.dim);
        for (k, c) in v {
            m = &m + &self.basis_action(k / 16, k % 16).scale(c);
        }
        m
    }
}

/// Failing relations of `D` for a representation (empty when it is a module).
pub fn verify_rep(r: &GenRep) -> Vec<String> {
    d_relations().filter(|rel| !r.eval(&parse_d(rel)).is_zero()).map(str::to_string).collect()
}

fn sign(e: u8) -> GaussRat {
    GaussRat::sign(e as i64)
}

fn xi(e: i64) -> GaussRat {
    GaussRat::xi_power(e)
}

fn diag2(p: GaussRat, q: GaussRat) -> Mat {
    Mat::diag(&[p, q])
}

fn anti2(p: GaussRat, q: GaussRat) -> Mat {
    Mat::from_rows(vec![vec![GaussRat::zero(), p], vec![q, GaussRat::zero()]]).expect("2x2")
}

/// The matrices of a label's template, without the range check.
pub fn template_module(label: SimpleLabel) -> GenRep {
    let one = GaussRat::one;
    match label {
        SimpleLabel::Char { i, j, k, l } => {
            let s = |v: GaussRat| Mat::scalar(1, &v);
            GenRep {
                dim: 1,
                mats: vec![s(sign(j)), s(sign(l)), s(sign(l)), s(xi(j as i64)), s(sign(i)), s(sign(j)), s(sign(k))],
            }
        }
        SimpleLabel::V { i, j, k, l, m, n } => GenRep {
            dim: 2,
            mats: vec![
                Mat::scalar(2, &sign(l)),
                diag2(sign(m), sign(n)),
                diag2(sign(n), sign(m)),
                anti2(one(), sign(l)),
                diag2(sign(i), sign(i + m + n)),
                Mat::scalar(2, &sign(j)),
                diag2(sign(k), sign(j + l + k)),
            ],
        },
        SimpleLabel::W { i, j, k, l } => GenRep {
            dim: 2,
            mats: vec![
                Mat::scalar(2, &sign(k)),
                diag2(sign(l), sign(l + 1)),
                diag2(sign(l), sign(l + 1)),
                diag2(xi(k as i64), &sign(j + k) * &xi(k as i64)),
                diag2(xi(i as i64), xi(-(i as i64))),
                Mat::scalar(2, &sign(j)),
                anti2(one(), one()),
            ],
        },
        SimpleLabel::U { i, j, k, l } => GenRep {
            dim: 2,
            mats: vec![
                Mat::scalar(2, &sign(k)),
                diag2(sign(l), sign(l + 1)),
                diag2(sign(l + 1), sign(l)),
                anti2(xi(j as i64), &sign(j + k) * &xi(j as i64)),
                diag2(xi(i as i64), xi(-(i as i64))),
                Mat::scalar(2, &sign(j)),
                anti2(one(), one()),
            ],
        },
    }
}

/// The catalog module of a label inside the documented index ranges.
pub fn simple_module(label: SimpleLabel) -> Result<GenRep, DoubleError> {
    if !label.in_catalog_range() {
        return Err(DoubleError::OutOfRange(label.to_string()));
    }
    Ok(template_module(label))
}

/// Dimension of the commutant of the generator matrices.
pub fn commutant_dim(r: &GenRep) -> usize {
    let n = r.dim;
    // Unknown T (row-major); equations T·M − M·T = 0.
    let mut rows: Vec<Vec<GaussRat>> = Vec::new();
    for m in &r.mats {
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![GaussRat::zero(); n * n];
                for k in 0..n {
                    row[i * n + k] += m[(k, j)].clone();
                    row[k * n + j] -= &m[(i, k)];
                }
                rows.push(row);
            }
        }
    }
    let a = Mat::from_rows(rows).expect("rectangular");
    n * n - a.rank()
}

pub fn is_simple(r: &GenRep) -> bool {
    commutant_dim(r) == 1
}

/// Traces of the 256 basis elements `f_α ⊗ h` of `D`.
pub fn character_vector(r: &GenRep) -> Vec<GaussRat> {
    let mut out = Vec::with_capacity(DIM_D);
    for alpha in 0..16 {
        for h in 0..DIM_H {
            out.push(r.basis_action(alpha, h).trace());
        }
    }
    out
}

pub fn are_isomorphic(r1: &GenRep, r2: &GenRep) -> bool {
    r1.dim == r2.dim && character_vector(r1) == character_vector(r2)
}

/// An explicit intertwiner `T` with `T·ρ₁(g) = ρ₂(g)·T`, when one is invertible.
pub fn intertwiner(r1: &GenRep, r2: &GenRep) -> Option<Mat> {
    if r1.dim != r2.dim {
        return None;
    }
    let n = r1.dim;
    let mut rows: Vec<Vec<GaussRat>> = Vec::new();
    for (m1, m2) in r1.mats.iter().zip(&r2.mats) {
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![GaussRat::zero(); n * n];
                for k in 0..n {
                    row[i * n + k] += m1[(k, j)].clone();
                    row[k * n + j] -= &m2[(i, k)];
                }
                rows.push(row);
            }
        }
    }
    let a = Mat::from_rows(rows).expect("rectangular");
    first_invertible(&a.kernel_basis(), n)
}

/// The first kernel vector (as an `n×n` matrix, row-major) that is invertible,
/// else the first invertible sum of a prefix of them.
pub fn first_invertible(kernel: &[Vec<GaussRat>], n: usize) -> Option<Mat> {
    let to_mat = |v: &[GaussRat]| Mat::from_rows(v.chunks(n).map(|r| r.to_vec()).collect()).expect("square");
    for v in kernel {
        let m = to_mat(v);
        if m.is_invertible() {
            return Some(m);
        }
    }
    // Generic combinations with small integer weights.
    for weights in 1..=3i64 {
        let mut acc = vec![GaussRat::zero(); n * n];
        for (k, v) in kernel.iter().enumerate() {
            let w = GaussRat::from_int(1 + (k as i64 * weights) % 7);
            for (a, b) in acc.iter_mut().zip(v) {
                *a += &w * b;
            }
        }
        let m = to_mat(&acc);
        if m.is_invertible() {
            return Some(m);
        }
    }
    None
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusEntry {
    pub label: String,
    pub dim: usize,
    pub is_module: bool,
    pub simple: bool,
    /// Hash of the exact character vector (stable across runs).
    pub character_hash: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusReport {
    pub entries: Vec<CensusEntry>,
    pub count: usize,
    pub one_dim: usize,
    pub two_dim: usize,
    pub sum_of_squares: usize,
    pub pairwise_non_isomorphic: bool,
    pub duplicates: Vec<(String, String)>,
}

impl CensusReport {
    pub fn all_pass(&self) -> bool {
        self.count == 88
            && self.sum_of_squares == DIM_D
            && self.pairwise_non_isomorphic
            && self.entries.iter().all(|e| e.is_module && e.simple)
    }
}

fn fnv_hash(values: &[GaussRat]) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for v in values {
        for b in v.to_canonical().bytes().chain([b';']) {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    format!("{h:016x}")
}

pub fn census() -> CensusReport {
    let labels = SimpleLabel::catalog();
    let mut entries = Vec::new();
    let mut chars = Vec::new();
    for label in &labels {
        let r = simple_module(*label).expect("catalog labels are in range");
        let cv = character_vector(&r);
        entries.push(CensusEntry {
            label: label.to_string(),
            dim: r.dim,
            is_module: verify_rep(&r).is_empty(),
            simple: is_simple(&r),
            character_hash: fnv_hash(&cv),
        });
        chars.push(cv);
    }
    let mut duplicates = Vec::new();
    for i in 0..labels.len() {
        for j in 0..i {
            if labels[i].dim() == labels[j].dim() && chars[i] == chars[j] {
                duplicates.push((labels[j].to_string(), labels[i].to_string()));
            }
        }
    }
    CensusReport {
        count: labels.len(),
        one_dim: labels.iter().filter(|l| l.dim() == 1).count(),
        two_dim: labels.iter().filter(|l| l.dim() == 2).count(),
        sum_of_squares: labels.iter().map(|l| l.dim() * l.dim()).sum(),
        pairwise_non_isomorphic: duplicates.is_empty(),
        duplicates,
        entries,
    }
}

/// The isomorphisms between templates asserted for the 2-dimensional families,
/// instantiated over all index values where their hypotheses hold. Negating
/// `i` means `i+1 mod 2` for `V` and `4-i` for `W`, `U`.
pub fn iso_rule_instances() -> Vec<(SimpleLabel, SimpleLabel)> {
    let mut out = Vec::new();
    for bits in 0..64u8 {
        let b = |s: u8| (bits >> (5 - s)) & 1;
        let (i, j, k, l, m, n) = (b(0), b(1), b(2), b(3), b(4), b(5));
        let v = SimpleLabel::V { i, j, k, l, m, n };
        let (mn, jl) = ((m + n) % 2, (j + l) % 2);
        let image = match (mn, jl) {
            (0, 1) => Some(SimpleLabel::V { i, j, k: (k + 1) % 2, l, m: n, n: m }),
            (1, 0) => Some(SimpleLabel::V { i: (i + 1) % 2, j, k, l, m: n, n: m }),
            (1, 1) => Some(SimpleLabel::V { i: (i + 1) % 2, j, k: (k + 1) % 2, l, m: n, n: m }),
            _ => None,
        };
        if let Some(w) = image {
            out.push((v, w));
        }
    }
    for i in [1u8, 3] {
        let neg = 4 - i;
        for j in 0..4u8 {
            for k in 0..4u8 {
                for l in 0..2u8 {
                    let even = (j + k) % 2 == 0;
                    if j < 2 {
                        let w = SimpleLabel::W { i, j, k, l };
                        let img = if even {
                            SimpleLabel::W { i: neg, j, k, l: (l + 1) % 2 }
                        } else {
                            SimpleLabel::W { i: neg, j, k: (k + 2) % 4, l: (l + 1) % 2 }
                        };
                        out.push((w, img));
                    }
                    if k < 2 {
                        let u = SimpleLabel::U { i, j, k, l };
                        let img = if even {
                            SimpleLabel::U { i: neg, j, k, l: (l + 1) % 2 }
                        } else {
                            SimpleLabel::U { i: neg, j: (j + 2) % 4, k, l: (l + 1) % 2 }
                        };
                        out.push((u, img));
                    }
                }
            }
        }
    }
    out
}

/// Coordinates, in the dual-word basis, of the dual-basis functional `e^i`.
pub fn dual_basis_in_words(i: usize) -> &'static SVec {
    &double().delta_in_words[i]
}

/// The product `p·q` of two dual words as words, for tests.
pub fn word_product(p: &LinComb, q: &LinComb) -> LinComb {
    concat(p, q)
}
