//! Yetter–Drinfeld modules over `H`: conversion from `D`-modules, the explicit
//! catalog of simple objects, compatibility and braid-equation checks,
//! braidings, direct sums, twisting by automorphisms and isomorphism search.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use hb1_core::linalg::Mat;
use hb1_core::presentation::{GeneratorSymbol, LinComb, Presentation, Sort};
use hb1_core::scalar::GaussRat;
use hb1_core::sparse::SVec;
use serde::Serialize;
use thiserror::Error;

use crate::double::{double, eval_words, first_invertible, simple_module, GenRep, SimpleLabel};
use crate::kashina::{automorphism_matrix, h_exponents, kashina, NamedCheck, DIM_H, H_RELATIONS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YdError {
    #[error("unknown tag: {0}")]
    UnknownTag(String),
    #[error("automorphism index out of range: {0}")]
    BadAutomorphism(usize),
}

/// A left Yetter–Drinfeld module over `H`.
///
/// `coaction` is `(16·dim)×dim`: entry `(h·dim + s, r)` is the coefficient of
/// `h ⊗ v_s` in `δ(v_r)`, with `h` the monomial index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YDModule {
    pub dim: usize,
    /// Matrices of `x`, `y`, `t`.
    pub action: [Mat; 3],
    pub coaction: Mat,
    pub label: Option<String>,
}

/// Tags of catalog objects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum YdTag {
    Simple(SimpleLabel),
    /// `V_1..V_8`: the one-dimensional objects with nontrivial braiding `-1`.
    V(u8),
    /// `M_1..M_20`: the two-dimensional objects with 4-dimensional Nichols algebra.
    M(u8),
}

const V_TAGS: [(u8, u8, u8, u8); 8] =
    [(1, 1, 0, 0), (1, 1, 1, 0), (0, 1, 0, 1), (0, 1, 1, 1), (1, 3, 0, 0), (1, 3, 1, 0), (0, 3, 0, 1), (0, 3, 1, 1)];

const M_TAGS: [SimpleLabel; 20] = {
    use SimpleLabel::{U, V as Vl, W};
    [
        Vl { i: 0, j: 1, k: 0, l: 0, m: 1, n: 1 },
        Vl { i: 1, j: 1, k: 0, l: 0, m: 1, n: 1 },
        Vl { i: 0, j: 0, k: 1, l: 0, m: 0, n: 1 },
        Vl { i: 0, j: 1, k: 1, l: 0, m: 0, n: 1 },
        Vl { i: 0, j: 0, k: 1, l: 0, m: 1, n: 0 },
        Vl { i: 0, j: 1, k: 0, l: 0, m: 1, n: 0 },
        Vl { i: 1, j: 0, k: 0, l: 1, m: 0, n: 0 },
        Vl { i: 1, j: 0, k: 0, l: 1, m: 1, n: 1 },
        Vl { i: 0, j: 1, k: 1, l: 1, m: 0, n: 1 },
        Vl { i: 0, j: 0, k: 1, l: 1, m: 0, n: 1 },
        Vl { i: 0, j: 1, k: 0, l: 1, m: 1, n: 0 },
        Vl { i: 0, j: 0, k: 1, l: 1, m: 1, n: 0 },
        W { i: 1, j: 1, k: 0, l: 1 },
        W { i: 1, j: 1, k: 2, l: 0 },
        W { i: 1, j: 0, k: 2, l: 0 },
        W { i: 1, j: 0, k: 2, l: 1 },
        U { i: 1, j: 2, k: 0, l: 0 },
        U { i: 1, j: 2, k: 0, l: 1 },
        U { i: 1, j: 0, k: 1, l: 0 },
        U { i: 1, j: 0, k: 1, l: 1 },
    ]
};

impl YdTag {
    pub fn label(&self) -> Option<SimpleLabel> {
        match *self {
            YdTag::Simple(l) => Some(l),
            YdTag::V(n) if (1..=8).contains(&n) => {
                let (i, j, k, l) = V_TAGS[n as usize - 1];
                Some(SimpleLabel::Char { i, j, k, l })
            }
            YdTag::M(n) if (1..=20).contains(&n) => Some(M_TAGS[n as usize - 1]),
            _ => None,
        }
    }

    /// `V1..V8` then `M1..M20`.
    pub fn named() -> Vec<YdTag> {
        (1..=8).map(YdTag::V).chain((1..=20).map(YdTag::M)).collect()
    }

    /// The named tag of a label, if it has one.
    pub fn from_label(l: SimpleLabel) -> YdTag {
        Self::named().into_iter().find(|t| t.label() == Some(l)).unwrap_or(YdTag::Simple(l))
    }
}

impl fmt::Display for YdTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            YdTag::Simple(l) => write!(f, "{l}"),
            YdTag::V(n) => write!(f, "V{n}"),
            YdTag::M(n) => write!(f, "M{n}"),
        }
    }
}

impl FromStr for YdTag {
    type Err = YdError;

    fn from_str(s: &str) -> Result<Self, YdError> {
        let bad = || YdError::UnknownTag(s.to_string());
        let s2 = s.trim().replace('_', "");
        if let Some(open) = s2.find('(') {
            let head = &s2[..open];
            let args: Vec<u8> = s2[open + 1..]
                .trim_end_matches(')')
                .split(',')
                .map(|a| a.trim().parse::<u8>())
                .collect::<Result<_, _>>()
                .map_err(|_| bad())?;
            let label = match (head, args.as_slice()) {
                ("chi", &[i, j, k, l]) => SimpleLabel::Char { i, j, k, l },
                ("V", &[i, j, k, l, m, n]) => SimpleLabel::V { i, j, k, l, m, n },
                ("W", &[i, j, k, l]) => SimpleLabel::W { i, j, k, l },
                ("U", &[i, j, k, l]) => SimpleLabel::U { i, j, k, l },
                _ => return Err(bad()),
            };
            return if label.in_catalog_range() { Ok(YdTag::Simple(label)) } else { Err(bad()) };
        }
        let (head, num) = s2.split_at(1);
        let n: u8 = num.parse().map_err(|_| bad())?;
        let tag = match head {
            "V" => YdTag::V(n),
            "M" => YdTag::M(n),
            _ => return Err(bad()),
        };
        tag.label().map(|_| tag).ok_or_else(bad)
    }
}

fn xyt_presentation() -> Presentation {
    Presentation::new(["x", "y", "t"].iter().map(|n| GeneratorSymbol::new(n, Sort::GroupLike, 0)).collect(), vec![])
        .expect("distinct names")
}

fn parse_xyt(expr: &str) -> LinComb {
    xyt_presentation().parse_relation(expr, &HashMap::new()).unwrap_or_else(|e| panic!("{e}"))
}

/// Matrix of the `H` monomial with index `h` acting through `x, y, t`.
pub fn monomial_action(action: &[Mat; 3], h: usize) -> Mat {
    let (e, f, g) = h_exponents(h);
    let n = action[0].rows();
    let mut m = Mat::identity(n);
    for (k, p) in [e, f, g].into_iter().enumerate() {
        for _ in 0..p {
            m = &m * &action[k];
        }
    }
    m
}

fn element_action(action: &[Mat; 3], v: &SVec) -> Mat {
    let n = action[0].rows();
    let mut m = Mat::zeros(n, n);
    for (h, c) in v {
        m = &m + &monomial_action(action, *h).scale(c);
    }
    m
}

impl YDModule {
    pub fn zero() -> YDModule {
        YDModule {
            dim: 0,
            action: [Mat::zeros(0, 0), Mat::zeros(0, 0), Mat::zeros(0, 0)],
            coaction: Mat::zeros(0, 0),
            label: None,
        }
    }

    pub fn act(&self, h: &SVec) -> Mat {
        element_action(&self.action, h)
    }

    pub fn act_monomial(&self, h: usize) -> Mat {
        monomial_action(&self.action, h)
    }

    /// The `dim×dim` block of `δ` at the monomial `h`.
    pub fn coaction_block(&self, h: usize) -> Mat {
        let d = self.dim;
        let mut m = Mat::zeros(d, d);
        for s in 0..d {
            for r in 0..d {
                m[(s, r)] = self.coaction[(h * d + s, r)].clone();
            }
        }
        m
    }

    fn from_blocks(dim: usize, action: [Mat; 3], blocks: &[Mat], label: Option<String>) -> YDModule {
        let mut coaction = Mat::zeros(DIM_H * dim, dim);
        for (h, b) in blocks.iter().enumerate() {
            for s in 0..dim {
                for r in 0..dim {
                    coaction[(h * dim + s, r)] = b[(s, r)].clone();
                }
            }
        }
        YDModule { dim, action, coaction, label }
    }

    /// `δ(v_r)` as `(h, s, coefficient)` triples.
    pub fn coaction_terms(&self, r: usize) -> Vec<(usize, usize, GaussRat)> {
        let d = self.dim;
        let mut out = Vec::new();
        for h in 0..DIM_H {
            for s in 0..d {
                let c = &self.coaction[(h * d + s, r)];
                if !c.is_zero() {
                    out.push((h, s, c.clone()));
                }
            }
        }
        out
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }
}

/// The YD structure of a `D`-module: the action of `x, y, t`, and
/// `δ(v) = Σ_h h ⊗ e^h·v` with `e^h` the dual basis.
pub fn from_double_rep(r: &GenRep) -> YDModule {
    let dd = double();
    let action = [r.get("x").clone(), r.get("y").clone(), r.get("t").clone()];
    let dual_words: Vec<Mat> = (0..16).map(|alpha| r.basis_action(alpha, 0)).collect();
    let blocks: Vec<Mat> = (0..DIM_H)
        .map(|h| {
            let mut m = Mat::zeros(r.dim, r.dim);
            for (alpha, c) in &dd.delta_in_words[h] {
                m = &m + &dual_words[*alpha].scale(c);
            }
            m
        })
        .collect();
    YDModule::from_blocks(r.dim, action, &blocks, None)
}

/// Coaction of a 2-dimensional catalog object: `[[δv1 at v1, δv1 at v2], [δv2 at v1, δv2 at v2]]`.
type Coaction2 = [[&'static str; 2]; 2];

const P: &str = "1/2 (1 + x^2)";
const Q: &str = "1/2 (1 - x^2)";

fn v_coaction(l: u8, m: u8, n: u8) -> [[String; 2]; 2] {
    let s = |a: &str, b: &str| format!("{a} {b}");
    let (p, q) = (P, Q);
    let pair = |c11: String, c12: String, c21: String, c22: String| [[c11, c12], [c21, c22]];
    match (l, m, n) {
        (0, 0, 0) => pair(p.into(), q.into(), q.into(), p.into()),
        (0, 1, 1) => pair(s(p, "y"), s(q, "y"), s(q, "y"), s(p, "y")),
        (0, 0, 1) => pair(s(p, "t"), s(q, "y t"), s(q, "t"), s(p, "y t")),
        (0, 1, 0) => pair(s(p, "y t"), s(q, "t"), s(q, "y t"), s(p, "t")),
        (1, 0, 0) => pair(s("x", p), s("xi x", q), s("-xi x", q), s("x", p)),
        (1, 1, 1) => pair(s("x y", p), s("xi x y", q), s("-xi x y", q), s("x y", p)),
        (1, 0, 1) => pair(s("x t", p), s("xi x y t", q), s("-xi x t", q), s("x y t", p)),
        _ => pair(s("x y t", p), s("xi x t", q), s("-xi x y t", q), s("x t", p)),
    }
}

fn w_second(k: u8, j: u8, l: u8) -> &'static str {
    match (k, j, l) {
        (0, 0, 0) | (2, 1, 0) => "y",
        (2, 0, 0) | (0, 1, 0) => "x^2 y",
        (0, 0, 1) | (2, 1, 1) => "1",
        (2, 0, 1) | (0, 1, 1) => "x^2",
        (1, 0, 0) | (3, 1, 0) => "x^3 y",
        (3, 0, 0) | (1, 1, 0) => "x y",
        (1, 0, 1) | (3, 1, 1) => "x^3",
        _ => "x",
    }
}

fn u_coaction(j: u8, l: u8, k: u8) -> Coaction2 {
    const T: [((u8, u8, u8), Coaction2); 16] = [
        ((0, 0, 0), [["P t", "Q y t"], ["Q t", "P y t"]]),
        ((2, 0, 0), [["P t", "-Q y t"], ["-Q t", "P y t"]]),
        ((0, 1, 0), [["P y t", "Q t"], ["Q y t", "P t"]]),
        ((2, 1, 0), [["P y t", "-Q t"], ["-Q y t", "P t"]]),
        ((0, 0, 1), [["P x t", "xi Q x y t"], ["-xi Q x t", "P x y t"]]),
        ((2, 0, 1), [["P x t", "-xi Q x y t"], ["xi Q x t", "P x y t"]]),
        ((0, 1, 1), [["P x y t", "xi Q x t"], ["-xi Q x y t", "P x t"]]),
        ((2, 1, 1), [["P x y t", "-xi Q x t"], ["xi Q x y t", "P x t"]]),
        ((1, 0, 0), [["P t", "-xi Q y t"], ["xi Q t", "P y t"]]),
        ((3, 0, 0), [["P t", "xi Q y t"], ["-xi Q t", "P y t"]]),
        ((1, 1, 0), [["P y t", "-xi Q t"], ["xi Q y t", "P t"]]),
        ((3, 1, 0), [["P y t", "xi Q t"], ["-xi Q y t", "P t"]]),
        ((1, 0, 1), [["P x t", "Q x y t"], ["Q x t", "P x y t"]]),
        ((3, 0, 1), [["P x t", "-Q x y t"], ["-Q x t", "P x y t"]]),
        ((1, 1, 1), [["P x y t", "Q x t"], ["Q x y t", "P x t"]]),
        ((3, 1, 1), [["P x y t", "-Q x t"], ["-Q x y t", "P x t"]]),
    ];
    T.iter().find(|(key, _)| *key == (j, l, k)).expect("all index values listed").1
}

fn expand_pq(s: &str) -> String {
    s.replace('P', P).replace('Q', Q)
}

fn coaction_from_strings(entries: &[[String; 2]; 2]) -> Vec<Mat> {
    let kh = kashina();
    let mut blocks = vec![Mat::zeros(2, 2); DIM_H];
    for (r, row) in entries.iter().enumerate() {
        for (s, expr) in row.iter().enumerate() {
            for (h, c) in kh.elem(expr) {
                blocks[h][(s, r)] += c;
            }
        }
    }
    blocks
}

/// The catalog object of a tag, built from the explicit action and coaction tables.
pub fn catalog_yd(tag: YdTag) -> Result<YDModule, YdError> {
    let label = tag.label().filter(|l| l.in_catalog_range()).ok_or_else(|| YdError::UnknownTag(tag.to_string()))?;
    let rep = simple_module(label).map_err(|_| YdError::UnknownTag(tag.to_string()))?;
    let action = [rep.get("x").clone(), rep.get("y").clone(), rep.get("t").clone()];
    let kh = kashina();
    let blocks = match label {
        SimpleLabel::Char { j, l, .. } => {
            let g = kh.elem(&format!("x^{j} y^{l}"));
            (0..DIM_H).map(|h| Mat::scalar(1, &g.get(&h).cloned().unwrap_or_else(GaussRat::zero))).collect()
        }
        SimpleLabel::V { l, m, n, .. } => coaction_from_strings(&v_coaction(l, m, n)),
        SimpleLabel::W { j, k, l, .. } => {
            let first = format!("x^{k} y^{l}");
            let zero = "0".to_string();
            coaction_from_strings(&[[first, zero.clone()], [zero, w_second(k, j, l).to_string()]])
        }
        SimpleLabel::U { j, k, l, .. } => {
            let t = u_coaction(j, l, k);
            let e = |s: &str| expand_pq(s);
            coaction_from_strings(&[[e(t[0][0]), e(t[0][1])], [e(t[1][0]), e(t[1][1])]])
        }
    };
    Ok(YDModule::from_blocks(label.dim(), action, &blocks, Some(tag.to_string())))
}

/// Checks the action relations, coassociativity, counitality and the YD condition.
pub fn verify_yd(v: &YDModule) -> Vec<NamedCheck> {
    let h = &kashina().hopf;
    let d = v.dim;
    let mut out = Vec::new();
    let gens = v.action.to_vec();
    let rel_ok = H_RELATIONS.iter().all(|r| {
        eval_words(
            &parse_xyt(r),
            &Mat::identity(d),
            &gens,
            &|p, q| p * q,
            &|acc, c, m| *acc = &*acc + &m.scale(c),
            Mat::zeros(d, d),
        )
        .is_zero()
    });
    out.push(NamedCheck::new("action satisfies the relations of H", rel_ok));

    let blocks: Vec<Mat> = (0..DIM_H).map(|k| v.coaction_block(k)).collect();
    let mut counit = Mat::zeros(d, d);
    for (k, b) in blocks.iter().enumerate() {
        counit = &counit + &b.scale(&h.counit[k]);
    }
    out.push(NamedCheck::new("counital", counit.is_identity() || d == 0));

    // (Δ⊗id)δ = (id⊗δ)δ, compared block by block over H⊗H.
    let mut lhs = vec![Mat::zeros(d, d); DIM_H * DIM_H];
    for (k, b) in blocks.iter().enumerate() {
        for ((p, q), c) in &h.comult[k] {
            lhs[p * DIM_H + q] = &lhs[p * DIM_H + q] + &b.scale(c);
        }
    }
    let coassoc = (0..DIM_H).all(|p| (0..DIM_H).all(|q| lhs[p * DIM_H + q] == &blocks[q] * &blocks[p]));
    out.push(NamedCheck::new("coassociative", coassoc));

    // δ(h·v) = h₁ v₋₁ S(h₃) ⊗ h₂·v₀ for every monomial h.
    let s = h.antipode.as_ref().expect("H carries its antipode");
    let mut yd_ok = true;
    for k in 0..DIM_H {
        let hk = v.act_monomial(k);
        let mut rhs = vec![Mat::zeros(d, d); DIM_H];
        for ((k1, k23), c) in &h.comult[k] {
            for ((k2, k3), c2) in &h.comult[*k23] {
                let a2 = v.act_monomial(*k2).scale(&(c * c2));
                for (m, b) in blocks.iter().enumerate() {
                    if b.is_zero() {
                        continue;
                    }
                    let prod = h.mul(h.mul_basis(*k1, m), &s[*k3]);
                    let t = &a2 * b;
                    for (e, ce) in &prod {
                        rhs[*e] = &rhs[*e] + &t.scale(ce);
                    }
                }
            }
        }
        if (0..DIM_H).any(|e| &blocks[e] * &hk != rhs[e]) {
            yd_ok = false;
            break;
        }
    }
    out.push(NamedCheck::new("Yetter-Drinfeld condition", yd_ok));
    out
}

pub fn is_yd(v: &YDModule) -> bool {
    verify_yd(v).iter().all(|c| c.pass)
}

/// `c_{V,W}(v⊗w) = v₋₁·w ⊗ v₀`, as a `(d_W·d_V)×(d_V·d_W)` matrix; `V⊗W`
/// is indexed by `r·d_W + q`.
pub fn braiding(v: &YDModule, w: &YDModule) -> Mat {
    let (dv, dw) = (v.dim, w.dim);
    let mut c = Mat::zeros(dw * dv, dv * dw);
    for h in 0..DIM_H {
        let b = v.coaction_block(h);
        if b.is_zero() {
            continue;
        }
        let a = w.act_monomial(h);
        for r in 0..dv {
            for s in 0..dv {
                let cv = &b[(s, r)];
                if cv.is_zero() {
                    continue;
                }
                for q in 0..dw {
                    for p in 0..dw {
                        c[(p * dv + s, r * dw + q)] += &(cv * &a[(p, q)]);
                    }
                }
            }
        }
    }
    c
}

/// `(c⊗id)(id⊗c)(c⊗id) = (id⊗c)(c⊗id)(id⊗c)` on `V⊗V⊗V`.
pub fn verify_braid_equation(v: &YDModule) -> bool {
    let c = braiding(v, v);
    let id = Mat::identity(v.dim);
    let c1 = c.kron(&id);
    let c2 = id.kron(&c);
    &(&c1 * &c2) * &c1 == &(&c2 * &c1) * &c2
}

pub fn direct_sum(parts: &[YDModule]) -> YDModule {
    if parts.is_empty() {
        return YDModule::zero();
    }
    let dim = parts.iter().map(|p| p.dim).sum();
    let action = [0, 1, 2].map(|k| Mat::direct_sum(&parts.iter().map(|p| p.action[k].clone()).collect::<Vec<_>>()));
    let blocks: Vec<Mat> = (0..DIM_H)
        .map(|h| Mat::direct_sum(&parts.iter().map(|p| p.coaction_block(h)).collect::<Vec<_>>()))
        .collect();
    let label = parts.iter().map(|p| p.label.clone()).collect::<Option<Vec<_>>>().map(|ls| ls.join("+"));
    YDModule::from_blocks(dim, action, &blocks, label)
}

/// `h·v = ψ(h)·v` and `δ = (ψ⁻¹⊗id)δ` for the automorphism with table index `k`.
pub fn twist(v: &YDModule, k: usize) -> Result<YDModule, YdError> {
    let psi = automorphism_matrix(k).ok_or(YdError::BadAutomorphism(k))?;
    let psi_inv = psi.inverse().expect("automorphism");
    let col = |m: &Mat, j: usize| -> SVec { hb1_core::sparse::from_dense(&m.col(j)) };
    let action = [1usize, 4, 8].map(|g| element_action(&v.action, &col(&psi, g)));
    let old: Vec<Mat> = (0..DIM_H).map(|h| v.coaction_block(h)).collect();
    let mut blocks = vec![Mat::zeros(v.dim, v.dim); DIM_H];
    for (h, b) in old.iter().enumerate() {
        for (e, c) in col(&psi_inv, h) {
            blocks[e] = &blocks[e] + &b.scale(&c);
        }
    }
    let label = v.label.as_ref().map(|l| format!("{l}^tau{k}"));
    Ok(YDModule::from_blocks(v.dim, action, &blocks, label))
}

/// An invertible `T` with `T·ρ_V(g) = ρ_W(g)·T` and `(id⊗T)δ_V = δ_W·T`.
pub fn yd_iso(v: &YDModule, w: &YDModule) -> Option<Mat> {
    if v.dim != w.dim {
        return None;
    }
    let n = v.dim;
    if n == 0 {
        return Some(Mat::zeros(0, 0));
    }
    let mut rows: Vec<Vec<GaussRat>> = Vec::new();
    let mut push = |m1: &Mat, m2: &Mat| {
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![GaussRat::zero(); n * n];
                for k in 0..n {
                    row[i * n + k] += &m1[(k, j)];
                    row[k * n + j] -= &m2[(i, k)];
                }
                rows.push(row);
            }
        }
    };
    for g in 0..3 {
        push(&v.action[g], &w.action[g]);
    }
    for h in 0..DIM_H {
        push(&v.coaction_block(h), &w.coaction_block(h));
    }
    let a = Mat::from_rows(rows).expect("rectangular");
    first_invertible(&a.kernel_basis(), n)
}

/// Whether `T` intertwines both structures.
pub fn is_yd_morphism(v: &YDModule, w: &YDModule, t: &Mat) -> bool {
    (0..3).all(|g| t * &v.action[g] == &w.action[g] * t)
        && (0..DIM_H).all(|h| t * &v.coaction_block(h) == &w.coaction_block(h) * t)
}

#[derive(Debug, Clone, Serialize)]
pub struct YdCatalogEntry {
    pub tag: String,
    pub label: String,
    pub dim: usize,
    pub yd: bool,
    pub braid_equation: bool,
    pub matches_double: bool,
}

/// Every catalog object checked against its `D`-module origin.
pub fn verify_catalog() -> Vec<YdCatalogEntry> {
    SimpleLabel::catalog()
        .into_iter()
        .map(|label| {
            let tag = YdTag::from_label(label);
            let m = catalog_yd(tag).expect("catalog label");
            let from_d = from_double_rep(&simple_module(label).expect("catalog label"));
            YdCatalogEntry {
                tag: tag.to_string(),
                label: label.to_string(),
                dim: m.dim,
                yd: is_yd(&m),
                braid_equation: verify_braid_equation(&m),
                matches_double: from_d.action == m.action && from_d.coaction == m.coaction,
            }
        })
        .collect()
}
