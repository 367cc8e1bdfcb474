//! The 16-dimensional Hopf algebra `H = H_{b:1}`, its dual generators and its
//! automorphism table.
//!
//! Basis element `x^e y^f t^g` has index `e + 4f + 8g`.

use std::collections::HashMap;
use std::sync::OnceLock;

use hb1_core::hopf::FDHopf;
use hb1_core::linalg::Mat;
use hb1_core::presentation::{
    CoalgebraData, GeneratorSymbol, LinComb, PresentedAlgebra, Presentation, SegmentDir, Sort, Word,
};
use hb1_core::scalar::GaussRat;
use hb1_core::sparse::{add_term, axpy, basis_vec, from_dense, to_dense, SVec, STensor};
use serde::Serialize;

pub const DIM_H: usize = 16;

pub fn h_index(e: usize, f: usize, g: usize) -> usize {
    (e % 4) + 4 * (f % 2) + 8 * (g % 2)
}

/// Exponents `(e, f, g)` of basis element `k`.
pub fn h_exponents(k: usize) -> (usize, usize, usize) {
    (k % 4, (k / 4) % 2, k / 8)
}

pub fn h_label(k: usize) -> String {
    let (e, f, g) = h_exponents(k);
    let mut s = String::new();
    match e {
        0 => {}
        1 => s.push('x'),
        _ => s.push_str(&format!("x^{e}")),
    }
    if f == 1 {
        s.push('y');
    }
    if g == 1 {
        s.push('t');
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

/// Generators `x, y` at level 0 and `t` at level 1. Extra letters for
/// Yetter–Drinfeld generators are appended by callers at level 2.
pub fn h_generators() -> Vec<GeneratorSymbol> {
    vec![
        GeneratorSymbol::new("x", Sort::GroupLike, 0),
        GeneratorSymbol::new("y", Sort::GroupLike, 0),
        GeneratorSymbol::new("t", Sort::GroupLike, 1),
    ]
}

pub fn h_levels() -> Vec<SegmentDir> {
    vec![SegmentDir::LeftFirst, SegmentDir::RightFirst, SegmentDir::LeftFirst]
}

pub const H_RELATIONS: [&str; 6] = ["x^4 = 1", "y^2 = 1", "t^2 = 1", "y x = x y", "t x = x^3 t", "t y = y t"];

/// Adds the defining relations of `H` to a presentation containing `x, y, t`.
pub fn add_h_relations(p: &mut Presentation) {
    let none = HashMap::new();
    for r in H_RELATIONS {
        p.add_relation_str(r, &none).expect("H relations are well formed");
    }
}

pub fn h_presentation() -> Presentation {
    let mut p = Presentation::new(h_generators(), h_levels()).expect("distinct names");
    add_h_relations(&mut p);
    p
}

/// `Δ` and `ε` on the letters `x, y, t` (indices 0, 1, 2 of any presentation
/// that starts with them).
pub fn h_letter_comult() -> Vec<Vec<(GaussRat, Word, Word)>> {
    let h = GaussRat::half();
    vec![
        vec![(GaussRat::one(), vec![0], vec![0])],
        vec![(GaussRat::one(), vec![1], vec![1])],
        vec![
            (h.clone(), vec![2], vec![2]),
            (h.clone(), vec![1, 2], vec![2]),
            (h.clone(), vec![2], vec![0, 0, 2]),
            (-h, vec![1, 2], vec![0, 0, 2]),
        ],
    ]
}

/// `H` together with its presentation, for parsing elements.
pub struct KashinaH {
    pub alg: PresentedAlgebra,
    pub hopf: FDHopf,
    /// Position in the `x^e y^f t^g` basis of each normal word of `alg`.
    to_h: Vec<usize>,
}

static KASHINA: OnceLock<KashinaH> = OnceLock::new();

/// The shared instance of `H`.
pub fn kashina() -> &'static KashinaH {
    KASHINA.get_or_init(KashinaH::build)
}

impl KashinaH {
    fn build() -> Self {
        let alg = PresentedAlgebra::new(h_presentation(), 64).expect("H is finite");
        let to_h: Vec<usize> = alg
            .basis
            .iter()
            .map(|w| {
                let count = |g: u8| w.iter().filter(|&&l| l == g).count();
                h_index(count(0), count(1), count(2))
            })
            .collect();
        let coalg = CoalgebraData { comult: h_letter_comult(), counit: vec![GaussRat::one(); 3] };
        let raw = coalg.to_fdhopf(&alg, None).expect("structure maps have the right shape");
        let mut cols = vec![SVec::new(); DIM_H];
        for (k, &h) in to_h.iter().enumerate() {
            cols[h] = basis_vec(k);
        }
        let mut hopf = raw.rebase(&cols, (0..DIM_H).map(h_label).collect()).expect("permutation");
        hopf.generators = ["x", "y", "t"].iter().map(|n| (n.to_string(), basis_vec(Self::letter_index(n)))).collect();
        hopf.words = Some(
            (0..DIM_H)
                .map(|k| {
                    let (e, f, g) = h_exponents(k);
                    [vec![0; e], vec![1; f], vec![2; g]].concat()
                })
                .collect(),
        );
        let mut out = KashinaH { alg, hopf, to_h };
        let s = out.antipode_from_definition();
        out.hopf.antipode = Some(s);
        out
    }

    fn letter_index(name: &str) -> usize {
        match name {
            "x" => h_index(1, 0, 0),
            "y" => h_index(0, 1, 0),
            _ => h_index(0, 0, 1),
        }
    }

    /// Element of `H` given by an expression in `x, y, t` such as `1/2 (1+y) t`.
    pub fn elem(&self, expr: &str) -> SVec {
        let lc = self.alg.pres.parse_expr(expr, &HashMap::new()).unwrap_or_else(|e| panic!("{e}"));
        self.from_lincomb(&lc)
    }

    /// Element represented by any combination of words in `x, y, t`.
    pub fn from_lincomb(&self, lc: &LinComb) -> SVec {
        self.from_alg(&self.alg.eval(lc))
    }

    fn from_alg(&self, v: &SVec) -> SVec {
        let mut out = SVec::new();
        for (k, c) in v {
            add_term(&mut out, self.to_h[*k], c.clone());
        }
        out
    }

    /// Word in the letters `x, y, t` (indices 0, 1, 2) as an element of `H`.
    pub fn word(&self, w: &[u8]) -> SVec {
        self.from_alg(&self.alg.mul_word(&self.alg.unit(), w))
    }

    /// `S(x^e y^f t^g) = S(t)^g S(y)^f S(x)^e` with `S` on generators as in the definition of `H`.
    fn antipode_from_definition(&self) -> Vec<SVec> {
        let sx = self.elem("x^3");
        let sy = self.elem("y");
        let st = self.elem("1/2 ((1 + y) t + (1 - y) x^2 t)");
        (0..DIM_H)
            .map(|k| {
                let (e, f, g) = h_exponents(k);
                let mut acc = self.hopf.unit.clone();
                for _ in 0..g {
                    acc = self.hopf.mul(&acc, &st);
                }
                for _ in 0..f {
                    acc = self.hopf.mul(&acc, &sy);
                }
                for _ in 0..e {
                    acc = self.hopf.mul(&acc, &sx);
                }
                acc
            })
            .collect()
    }

    /// The `H ⊗ H` element `Σ c (l ⊗ r)` for expressions `l`, `r`.
    pub fn tensor(&self, terms: &[(GaussRat, &str, &str)]) -> STensor {
        let mut out = STensor::new();
        for (c, l, r) in terms {
            let (l, r) = (self.elem(l), self.elem(r));
            for (i, a) in &l {
                for (j, b) in &r {
                    add_term(&mut out, (*i, *j), c * &(a * b));
                }
            }
        }
        out
    }
}

/// `H` with the antipode of its definition.
pub fn build_h() -> FDHopf {
    kashina().hopf.clone()
}

/// Functionals on `H` (dual-basis coordinates) named in the structure of `H*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGenerators {
    pub a: SVec,
    pub b: SVec,
    pub c: SVec,
    pub d: SVec,
}

/// `a(x^e y^f t^g) = (-1)^e`, `b = (-1)^f`, `c = (-1)^(f+g)`, `d = i^e`.
pub fn build_dual_generators() -> DualGenerators {
    let f = |g: &dyn Fn(usize, usize, usize) -> GaussRat| -> SVec {
        from_dense(&(0..DIM_H).map(|k| {
            let (e, f, t) = h_exponents(k);
            g(e, f, t)
        }).collect::<Vec<_>>())
    };
    DualGenerators {
        a: f(&|e, _, _| GaussRat::sign(e as i64)),
        b: f(&|_, y, _| GaussRat::sign(y as i64)),
        c: f(&|_, y, t| GaussRat::sign((y + t) as i64)),
        d: f(&|e, _, _| GaussRat::xi_power(e as i64)),
    }
}

/// Named pass/fail results.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub pass: bool,
}

impl NamedCheck {
    pub fn new(name: impl Into<String>, pass: bool) -> Self {
        NamedCheck { name: name.into(), pass }
    }
}

/// Checks the eight algebra relations and four coproduct formulas of the
/// dual generators inside `H*`.
pub fn verify_dual_generators(dual: &FDHopf, g: &DualGenerators) -> Vec<NamedCheck> {
    let one = dual.unit.clone();
    let m = |p: &SVec, q: &SVec| dual.mul(p, q);
    let (a, b, c, d) = (&g.a, &g.b, &g.c, &g.d);
    let tensor = |l: &SVec, r: &SVec| -> STensor {
        let mut t = STensor::new();
        for (i, x) in l {
            for (j, y) in r {
                add_term(&mut t, (*i, *j), x * y);
            }
        }
        t
    };
    let bcd = m(&m(b, c), d);
    let half = GaussRat::half();
    let mut d_plus = SVec::new();
    axpy(&mut d_plus, &half, d);
    axpy(&mut d_plus, &half, &bcd);
    let mut d_minus = SVec::new();
    axpy(&mut d_minus, &half, d);
    axpy(&mut d_minus, &-half.clone(), &bcd);
    let mut delta_d = tensor(&d_plus, d);
    axpy(&mut delta_d, &GaussRat::one(), &tensor(&d_minus, &m(a, d)));
    vec![
        NamedCheck::new("a^2 = 1", m(a, a) == one),
        NamedCheck::new("b^2 = 1", m(b, b) == one),
        NamedCheck::new("c^2 = 1", m(c, c) == one),
        NamedCheck::new("ab = ba", m(a, b) == m(b, a)),
        NamedCheck::new("ac = ca", m(a, c) == m(c, a)),
        NamedCheck::new("bc = cb", m(b, c) == m(c, b)),
        NamedCheck::new("d^2 = a", m(d, d) == *a),
        NamedCheck::new("da = ad", m(d, a) == m(a, d)),
        NamedCheck::new("db = cd", m(d, b) == m(c, d)),
        NamedCheck::new("dc = bd", m(d, c) == m(b, d)),
        NamedCheck::new("Δ(a) = a⊗a", dual.comult_of(a) == tensor(a, a)),
        NamedCheck::new("Δ(b) = b⊗b", dual.comult_of(b) == tensor(b, b)),
        NamedCheck::new("Δ(c) = c⊗c", dual.comult_of(c) == tensor(c, c)),
        NamedCheck::new("Δ(d) = ½(d+bcd)⊗d + ½(d−bcd)⊗ad", dual.comult_of(d) == delta_d),
    ]
}

/// Images of `(x, y, t)` under table entry `k` in `1..=32`, as words.
pub fn table1_images(k: usize) -> Option<[Word; 3]> {
    if !(1..=32).contains(&k) {
        return None;
    }
    let col = (k - 1) / 8;
    let row = (k - 1) % 8;
    let x_img = match col {
        0 => vec![0],
        1 => vec![0, 0, 0],
        2 => vec![0, 1],
        _ => vec![0, 0, 0, 1],
    };
    let mut t_img = vec![0u8; row % 4];
    if row >= 4 {
        t_img.push(1);
    }
    t_img.push(2);
    Some([x_img, vec![1], t_img])
}

/// The linear map `H → H` sending each basis monomial `x^e y^f t^g` to
/// `τ(x)^e τ(y)^f τ(t)^g`, given generator images.
pub fn extend_on_monomials(images: &[SVec; 3]) -> Vec<SVec> {
    let h = &kashina().hopf;
    (0..DIM_H)
        .map(|k| {
            let (e, f, g) = h_exponents(k);
            let mut acc = h.unit.clone();
            for (img, n) in images.iter().zip([e, f, g]) {
                for _ in 0..n {
                    acc = h.mul(&acc, img);
                }
            }
            acc
        })
        .collect()
}

/// Basis images of table entry `k`.
pub fn automorphism(k: usize) -> Option<Vec<SVec>> {
    let kh = kashina();
    let [x, y, t] = table1_images(k)?;
    Some(extend_on_monomials(&[kh.word(&x), kh.word(&y), kh.word(&t)]))
}

pub fn automorphism_matrix(k: usize) -> Option<Mat> {
    automorphism(k).map(|cols| images_to_mat(&cols))
}

pub fn images_to_mat(cols: &[SVec]) -> Mat {
    Mat::from_cols(cols.len(), &cols.iter().map(|c| to_dense(c, cols.len())).collect::<Vec<_>>())
}

pub fn mat_to_images(m: &Mat) -> Vec<SVec> {
    (0..m.cols()).map(|j| from_dense(&m.col(j))).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct AutomorphismReport {
    /// `None` when entry `k` is a Hopf automorphism, else the violated identity.
    pub entries: Vec<Option<String>>,
    pub pairwise_distinct: bool,
    pub closed_under_composition: bool,
}

impl AutomorphismReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(Option::is_none) && self.pairwise_distinct && self.closed_under_composition
    }
}

pub fn verify_automorphisms() -> AutomorphismReport {
    let h = &kashina().hopf;
    let mats: Vec<Mat> = (1..=32).map(|k| automorphism_matrix(k).expect("in range")).collect();
    let entries = (1..=32)
        .map(|k| {
            let m = &mats[k - 1];
            if !m.is_invertible() {
                return Some(format!("τ_{k} is not bijective"));
            }
            h.is_hopf_map(h, &mat_to_images(m)).err().map(|e| format!("τ_{k}: {e}"))
        })
        .collect();
    let mut pairwise_distinct = true;
    for i in 0..32 {
        for j in 0..i {
            if mats[i] == mats[j] {
                pairwise_distinct = false;
            }
        }
    }
    let closed_under_composition =
        mats.iter().all(|p| mats.iter().all(|q| mats.contains(&(p * q))));
    AutomorphismReport { entries, pairwise_distinct, closed_under_composition }
}

/// Summary of the checks on `H` itself.
pub fn verify_h_structure(h: &FDHopf) -> Vec<NamedCheck> {
    let mut out = Vec::new();
    let report = h.verify_hopf_axioms();
    for c in &report.checks {
        out.push(NamedCheck::new(format!("axiom {}", c.name), c.pass));
    }
    out.push(NamedCheck::new("dim 16", h.dim == 16));
    let gl = h.grouplikes();
    out.push(NamedCheck::new("8 grouplikes", gl.len() == 8));
    let expected: Vec<SVec> = (0..4).flat_map(|e| (0..2).map(move |f| basis_vec(h_index(e, f, 0)))).collect();
    out.push(NamedCheck::new("grouplikes are x^i y^j", gl.iter().all(|g| expected.contains(g))));
    let one = h.unit.clone();
    for g in expected.iter().filter(|g| **g != one) {
        let sp = h.skew_primitive_space(&one, g);
        let mut diff = one.clone();
        axpy(&mut diff, &GaussRat::from_int(-1), g);
        let spanned = sp.dim() == 1 && {
            let mut ech = hb1_core::sparse::SparseEchelon::new();
            ech.insert(sp.basis[0].clone());
            ech.contains(&diff)
        };
        let (k, _) = g.iter().next().expect("nonzero");
        out.push(NamedCheck::new(format!("P(1,{}) = k(1-{})", h_label(*k), h_label(*k)), spanned));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_entries() {
        let kh = kashina();
        let [x, y, t] = table1_images(9).unwrap();
        assert_eq!(kh.word(&x), kh.elem("x^3"));
        assert_eq!(kh.word(&y), kh.elem("y"));
        assert_eq!(kh.word(&t), kh.elem("t"));
        let [x17, _, _] = table1_images(17).unwrap();
        assert_eq!(kh.word(&x17), kh.elem("x y"));
        let [_, _, t8] = table1_images(8).unwrap();
        assert_eq!(kh.word(&t8), kh.elem("x^3 y t"));
        assert!(table1_images(0).is_none());
    }

    #[test]
    fn labels_round_trip() {
        assert_eq!(h_label(0), "1");
        assert_eq!(h_label(h_index(3, 1, 1)), "x^3yt");
        for k in 0..DIM_H {
            let (e, f, g) = h_exponents(k);
            assert_eq!(h_index(e, f, g), k);
        }
    }
}
