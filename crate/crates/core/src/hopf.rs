//! Finite-dimensional Hopf algebras given by structure constants over a fixed
//! ordered basis.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{Echelon, Mat};
use crate::scalar::GaussRat;
use crate::sparse::{add_term, axpy, basis_vec, from_dense, to_dense, SVec, STensor, SparseEchelon};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("no antipode: {0}")]
    NoAntipode(String),
    #[error("malformed structure: {0}")]
    Malformed(String),
    #[error("{0} is not grouplike")]
    NotGrouplike(usize),
}

/// A finite-dimensional Hopf algebra (or bialgebra, when `antipode` is absent).
///
/// `mult[i*dim+j]` is `e_i·e_j`; `comult[k]` is `Δ(e_k)`; `antipode[k]` is `S(e_k)`.
#[derive(Clone, PartialEq, Eq)]
pub struct FDHopf {
    pub dim: usize,
    pub labels: Vec<String>,
    pub mult: Vec<SVec>,
    pub unit: SVec,
    pub comult: Vec<STensor>,
    pub counit: Vec<GaussRat>,
    pub antipode: Option<Vec<SVec>>,
    /// Optional algebra generators. When every basis element is a product of
    /// them, associativity and multiplicativity are checked against them only.
    pub generators: Vec<(String, SVec)>,
    /// Optional factorization of each basis element as a product of generators
    /// (indices into `generators`), used by the antipode solver.
    pub words: Option<Vec<Vec<usize>>>,
}

impl fmt::Debug for FDHopf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FDHopf(dim={}, antipode={})", self.dim, self.antipode.is_some())
    }
}

/// One axiom in a verification report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub name: String,
    pub pass: bool,
    /// First violating index tuple, described in words.
    pub violation: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfReport {
    pub checks: Vec<AxiomCheck>,
    /// Whether associativity and multiplicativity were reduced to generators.
    pub generator_reduced: bool,
}

impl HopfReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> Vec<&AxiomCheck> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

fn check(name: &str, violation: Option<String>) -> AxiomCheck {
    AxiomCheck { name: name.to_string(), pass: violation.is_none(), violation }
}

/// Above this dimension, and when generators are known, the quartic
/// associativity sweep is replaced by the generator-reduced one.
const FULL_CHECK_DIM: usize = 64;

/// Dimension up to which the antipode is found from the dense `dim²` system.
const DENSE_ANTIPODE_DIM: usize = 16;

impl FDHopf {
    /// Assembles a bialgebra from structure constants. Lengths are validated.
    pub fn new(
        labels: Vec<String>,
        mult: Vec<SVec>,
        unit: SVec,
        comult: Vec<STensor>,
        counit: Vec<GaussRat>,
    ) -> Result<Self, HopfError> {
        let dim = labels.len();
        if mult.len() != dim * dim || comult.len() != dim || counit.len() != dim {
            return Err(HopfError::Malformed(format!(
                "dim {dim}: mult {}, comult {}, counit {}",
                mult.len(),
                comult.len(),
                counit.len()
            )));
        }
        Ok(FDHopf { dim, labels, mult, unit, comult, counit, antipode: None, generators: vec![], words: None })
    }

    pub fn with_antipode(mut self, s: Vec<SVec>) -> Self {
        self.antipode = Some(s);
        self
    }

    pub fn with_generators(mut self, gens: Vec<(String, SVec)>) -> Self {
        self.generators = gens;
        self
    }

    pub fn basis(&self, k: usize) -> SVec {
        basis_vec(k)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn generator(&self, name: &str) -> Option<&SVec> {
        self.generators.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SVec {
        &self.mult[i * self.dim + j]
    }

    pub fn mul(&self, a: &SVec, b: &SVec) -> SVec {
        let mut out = SVec::new();
        for (i, ca) in a {
            for (j, cb) in b {
                axpy(&mut out, &(ca * cb), self.mul_basis(*i, *j));
            }
        }
        out
    }

    pub fn mul_all(&self, factors: &[&SVec]) -> SVec {
        let mut acc = self.unit.clone();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn pow(&self, a: &SVec, e: u32) -> SVec {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn comult_of(&self, a: &SVec) -> STensor {
        let mut out = STensor::new();
        for (k, c) in a {
            axpy(&mut out, c, &self.comult[*k]);
        }
        out
    }

    pub fn counit_of(&self, a: &SVec) -> GaussRat {
        a.iter().map(|(k, c)| c * &self.counit[*k]).sum()
    }

    pub fn antipode_of(&self, a: &SVec) -> Option<SVec> {
        let s = self.antipode.as_ref()?;
        let mut out = SVec::new();
        for (k, c) in a {
            axpy(&mut out, c, &s[*k]);
        }
        Some(out)
    }

    /// Product in `A⊗A`.
    pub fn mul_tensor(&self, a: &STensor, b: &STensor) -> STensor {
        let mut out = STensor::new();
        for ((i1, i2), ca) in a {
            for ((j1, j2), cb) in b {
                let c = ca * cb;
                let l = self.mul_basis(*i1, *j1);
                let r = self.mul_basis(*i2, *j2);
                for (p, cp) in l {
                    for (q, cq) in r {
                        add_term(&mut out, (*p, *q), &c * &(cp * cq));
                    }
                }
            }
        }
        out
    }

    /// `Δ` applied to an element of `A⊗A` in the given leg (0 or 1), as a map into `A⊗A⊗A`.
    fn comult_leg(&self, t: &STensor, leg: usize) -> BTreeMap<(usize, usize, usize), GaussRat> {
        let mut out = BTreeMap::new();
        for ((i, j), c) in t {
            let src = if leg == 0 { *i } else { *j };
            for ((p, q), d) in &self.comult[src] {
                let key = if leg == 0 { (*p, *q, *j) } else { (*i, *p, *q) };
                add_term(&mut out, key, c * d);
            }
        }
        out
    }

    /// Convolution `m∘(f⊗g)∘Δ` applied to an element, where `f`,`g` act on basis indices.
    fn convolve(&self, a: &SVec, f: &dyn Fn(usize) -> SVec, g: &dyn Fn(usize) -> SVec) -> SVec {
        let mut out = SVec::new();
        for ((i, j), c) in self.comult_of(a) {
            let p = self.mul(&f(i), &g(j));
            axpy(&mut out, &c, &p);
        }
        out
    }

    /// Whether left-normed products of the generators span the algebra.
    pub fn generators_span(&self) -> bool {
        if self.generators.is_empty() {
            return false;
        }
        let mut ech = SparseEchelon::new();
        let mut frontier = vec![self.unit.clone()];
        ech.insert(self.unit.clone());
        while let Some(v) = frontier.pop() {
            for (_, g) in &self.generators {
                let w = self.mul(&v, g);
                if ech.insert(w.clone()) {
                    frontier.push(w);
                }
            }
            if ech.rank() == self.dim {
                return true;
            }
        }
        ech.rank() == self.dim
    }

    /// Checks every axiom exactly and reports the first violation of each.
    pub fn verify_hopf_axioms(&self) -> HopfReport {
        let n = self.dim;
        let reduced = n > FULL_CHECK_DIM && self.generators_span();
        let right: Vec<(String, SVec)> = if reduced {
            self.generators.clone()
        } else {
            (0..n).map(|k| (self.labels[k].clone(), basis_vec(k))).collect()
        };
        let mut checks = Vec::new();

        let mut viol = None;
        'unit: for k in 0..n {
            let e = basis_vec(k);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                viol = Some(format!("unit law fails at e_{k} ({})", self.labels[k]));
                break 'unit;
            }
        }
        checks.push(check("unit", viol));

        let mut viol = None;
        'assoc: for i in 0..n {
            for j in 0..n {
                let ij = self.mul_basis(i, j);
                for (name, g) in &right {
                    let lhs = self.mul(ij, g);
                    let rhs = self.mul(&basis_vec(i), &self.mul(&basis_vec(j), g));
                    if lhs != rhs {
                        viol = Some(format!("(e_{i} e_{j}) {name} != e_{i} (e_{j} {name})"));
                        break 'assoc;
                    }
                }
            }
        }
        checks.push(check("associativity", viol));

        let mut viol = None;
        for k in 0..n {
            let d = &self.comult[k];
            let mut left = SVec::new();
            let mut rightv = SVec::new();
            for ((i, j), c) in d {
                add_term(&mut left, *j, c * &self.counit[*i]);
                add_term(&mut rightv, *i, c * &self.counit[*j]);
            }
            if left != basis_vec(k) || rightv != basis_vec(k) {
                viol = Some(format!("counit law fails at e_{k} ({})", self.labels[k]));
                break;
            }
        }
        checks.push(check("counit", viol));

        let mut viol = None;
        for k in 0..n {
            if self.comult_leg(&self.comult[k], 0) != self.comult_leg(&self.comult[k], 1) {
                viol = Some(format!("coassociativity fails at e_{k} ({})", self.labels[k]));
                break;
            }
        }
        checks.push(check("coassociativity", viol));

        let mut viol = None;
        if self.counit_of(&self.unit) != GaussRat::one() {
            viol = Some("ε(1) != 1".to_string());
        }
        'eps: for i in 0..n {
            if viol.is_some() {
                break;
            }
            for (name, g) in &right {
                let lhs = self.counit_of(&self.mul(&basis_vec(i), g));
                if lhs != &self.counit[i] * &self.counit_of(g) {
                    viol = Some(format!("ε(e_{i} {name}) != ε(e_{i}) ε({name})"));
                    break 'eps;
                }
            }
        }
        checks.push(check("counit_multiplicative", viol));

        let mut viol = None;
        let one_one: STensor = {
            let mut t = STensor::new();
            for (i, a) in &self.unit {
                for (j, b) in &self.unit {
                    add_term(&mut t, (*i, *j), a * b);
                }
            }
            t
        };
        if self.comult_of(&self.unit) != one_one {
            viol = Some("Δ(1) != 1⊗1".to_string());
        }
        'delta: for i in 0..n {
            if viol.is_some() {
                break;
            }
            for (name, g) in &right {
                let lhs = self.comult_of(&self.mul(&basis_vec(i), g));
                let rhs = self.mul_tensor(&self.comult[i], &self.comult_of(g));
                if lhs != rhs {
                    viol = Some(format!("Δ(e_{i} {name}) != Δ(e_{i}) Δ({name})"));
                    break 'delta;
                }
            }
        }
        checks.push(check("comult_multiplicative", viol));

        if let Some(s) = &self.antipode {
            let mut viol = None;
            if s.len() != n {
                viol = Some(format!("antipode has {} columns", s.len()));
            } else {
                for k in 0..n {
                    let e = basis_vec(k);
                    let expect = crate::sparse::scaled(&self.unit, &self.counit[k]);
                    let l = self.convolve(&e, &|i| s[i].clone(), &basis_vec);
                    if l != expect {
                        viol = Some(format!("m(S⊗id)Δ(e_{k}) != ε(e_{k})1 at {}", self.labels[k]));
                        break;
                    }
                    let r = self.convolve(&e, &basis_vec, &|j| s[j].clone());
                    if r != expect {
                        viol = Some(format!("m(id⊗S)Δ(e_{k}) != ε(e_{k})1 at {}", self.labels[k]));
                        break;
                    }
                }
            }
            checks.push(check("antipode", viol));
        }
        HopfReport { checks, generator_reduced: reduced }
    }

    /// The linear dual, over the dual basis.
    pub fn dual(&self) -> FDHopf {
        let n = self.dim;
        let mut mult = vec![SVec::new(); n * n];
        for (k, d) in self.comult.iter().enumerate() {
            for ((i, j), c) in d {
                add_term(&mut mult[i * n + j], k, c.clone());
            }
        }
        let mut comult = vec![STensor::new(); n];
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.mul_basis(i, j) {
                    add_term(&mut comult[*k], (i, j), c.clone());
                }
            }
        }
        let unit = from_dense(&self.counit);
        let counit = to_dense(&self.unit, n);
        let antipode = self.antipode.as_ref().map(|s| transpose_cols(s, n));
        let labels = self.labels.iter().map(|l| format!("({l})*")).collect();
        FDHopf { dim: n, labels, mult, unit, comult, counit, antipode, generators: vec![], words: None }
    }

    /// Opposite multiplication.
    pub fn op(&self) -> FDHopf {
        let n = self.dim;
        let mut mult = vec![SVec::new(); n * n];
        for i in 0..n {
            for j in 0..n {
                mult[i * n + j] = self.mul_basis(j, i).clone();
            }
        }
        FDHopf {
            dim: n,
            labels: self.labels.clone(),
            mult,
            unit: self.unit.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.as_ref().and_then(|s| invert_cols(s, n)),
            generators: self.generators.clone(),
            words: None,
        }
    }

    /// Opposite comultiplication.
    pub fn cop(&self) -> FDHopf {
        let comult = self
            .comult
            .iter()
            .map(|d| d.iter().map(|((i, j), c)| ((*j, *i), c.clone())).collect())
            .collect();
        FDHopf {
            dim: self.dim,
            labels: self.labels.clone(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            comult,
            counit: self.counit.clone(),
            antipode: self.antipode.as_ref().and_then(|s| invert_cols(s, self.dim)),
            generators: self.generators.clone(),
            words: self.words.clone(),
        }
    }

    pub fn antipode_matrix(&self) -> Option<Mat> {
        self.antipode.as_ref().map(|s| cols_to_mat(s, self.dim))
    }

    /// All grouplike elements (`Δ(g)=g⊗g`, `ε(g)=1`), found as the characters
    /// of the dual algebra.
    pub fn grouplikes(&self) -> Vec<SVec> {
        self.dual()
            .characters()
            .into_iter()
            .map(|c| from_dense(&c))
            .filter(|g| self.is_grouplike(g))
            .collect()
    }

    pub fn is_grouplike(&self, g: &SVec) -> bool {
        if self.counit_of(g) != GaussRat::one() {
            return false;
        }
        let mut gg = STensor::new();
        for (i, a) in g {
            for (j, b) in g {
                add_term(&mut gg, (*i, *j), a * b);
            }
        }
        self.comult_of(g) == gg
    }

    /// Algebra maps `A → k`, as value vectors on the basis.
    ///
    /// Characters kill the commutator ideal `I`. On `I^⊥` the transposed
    /// right-multiplication operators commute, and the characters are their
    /// common eigenvectors. Eigenvalues are searched among 0, the fourth roots
    /// of unity and the diagonal entries of each restricted operator; that
    /// covers every algebra built in this workspace, but a character taking
    /// other values would be missed.
    pub fn characters(&self) -> Vec<Vec<GaussRat>> {
        let n = self.dim;
        let mut ideal = SparseEchelon::new();
        let mut frontier = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let c = crate::sparse::sub(self.mul_basis(i, j), self.mul_basis(j, i));
                if ideal.insert(c.clone()) {
                    frontier.push(c);
                }
            }
        }
        while let Some(v) = frontier.pop() {
            for k in 0..n {
                for w in [self.mul(&v, &basis_vec(k)), self.mul(&basis_vec(k), &v)] {
                    if ideal.insert(w.clone()) {
                        frontier.push(w);
                    }
                }
            }
        }
        let ideal_rows: Vec<Vec<GaussRat>> = ideal.basis().iter().map(|v| to_dense(v, n)).collect();
        let annihilator = if ideal_rows.is_empty() {
            (0..n).map(|k| crate::linalg::unit_vec(n, k)).collect()
        } else {
            Mat::from_rows(ideal_rows).expect("rectangular").kernel_basis()
        };
        let mut spaces = vec![annihilator];
        for b in 0..n {
            let mut rt = Mat::zeros(n, n);
            for a in 0..n {
                for (k, c) in self.mul_basis(a, b) {
                    rt[(a, *k)] = c.clone();
                }
            }
            spaces = spaces.iter().flat_map(|s| split_by_eigenvalues(&rt, s)).collect();
        }
        let mut out = Vec::new();
        for space in spaces {
            if space.len() != 1 {
                continue;
            }
            let v = &space[0];
            let at_unit: GaussRat = self.unit.iter().map(|(k, c)| c * &v[*k]).sum();
            let Ok(inv) = at_unit.inv() else { continue };
            let phi: Vec<GaussRat> = v.iter().map(|x| x * &inv).collect();
            let multiplicative = (0..n).all(|i| {
                (0..n).all(|j| {
                    let lhs: GaussRat = self.mul_basis(i, j).iter().map(|(k, c)| c * &phi[*k]).sum();
                    lhs == &phi[i] * &phi[j]
                })
            });
            if multiplicative {
                out.push(phi);
            }
        }
        out
    }

    /// The space of `(g,h)`-skew-primitives: all `v` with `Δ(v) = v⊗g + h⊗v`.
    pub fn skew_primitive_space(&self, g: &SVec, h: &SVec) -> SkewPrimitiveSpace {
        let n = self.dim;
        // Columns: v = e_k. Rows: coordinates of Δ(e_k) - e_k⊗g - h⊗e_k in A⊗A.
        let mut entries: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut cols: Vec<STensor> = Vec::with_capacity(n);
        for k in 0..n {
            let mut t = self.comult[k].clone();
            for (j, c) in g {
                add_term(&mut t, (k, *j), -c.clone());
            }
            for (i, c) in h {
                add_term(&mut t, (*i, k), -c.clone());
            }
            for key in t.keys() {
                let len = entries.len();
                entries.entry(*key).or_insert(len);
            }
            cols.push(t);
        }
        let mut m = Mat::zeros(entries.len(), n);
        for (k, t) in cols.iter().enumerate() {
            for (key, c) in t {
                m[(entries[key], k)] = c.clone();
            }
        }
        let basis = m.kernel_basis().into_iter().map(|v| from_dense(&v)).collect();
        SkewPrimitiveSpace { g: g.clone(), h: h.clone(), basis }
    }

    /// Finds the antipode as the convolution inverse of the identity and
    /// verifies it before returning.
    pub fn solve_antipode(&self) -> Result<Vec<SVec>, HopfError> {
        let s = if self.dim <= DENSE_ANTIPODE_DIM {
            self.solve_antipode_dense()?
        } else {
            self.solve_antipode_tiered()?
        };
        let mut probe = self.clone();
        probe.antipode = Some(s.clone());
        let report = probe.verify_hopf_axioms();
        match report.get("antipode") {
            Some(c) if c.pass => Ok(s),
            Some(c) => Err(HopfError::NoAntipode(c.violation.clone().unwrap_or_default())),
            None => Err(HopfError::NoAntipode("not checked".into())),
        }
    }

    /// Solves `m∘(S⊗id)∘Δ = u∘ε` as one linear system in the `dim²` entries of `S`.
    fn solve_antipode_dense(&self) -> Result<Vec<SVec>, HopfError> {
        let n = self.dim;
        // Unknown S[p][i] = coefficient of e_p in S(e_i), index p*n+i... stored as i*n+p.
        let mut rows: Vec<Vec<GaussRat>> = Vec::new();
        let mut rhs = Vec::new();
        for k in 0..n {
            // Σ_{ij} d^{ij}_k S(e_i) e_j = ε(e_k) 1, coordinate m.
            let mut eq: Vec<Vec<GaussRat>> = vec![vec![GaussRat::zero(); n * n]; n];
            for ((i, j), d) in &self.comult[k] {
                for p in 0..n {
                    for (m, c) in self.mul_basis(p, *j) {
                        eq[*m][i * n + p] += d * c;
                    }
                }
            }
            for (m, row) in eq.into_iter().enumerate() {
                rows.push(row);
                rhs.push(&self.counit[k] * self.unit.get(&m).unwrap_or(&GaussRat::zero()));
            }
        }
        let a = Mat::from_rows(rows).map_err(|e| HopfError::Malformed(e.to_string()))?;
        let x = a.solve(&rhs).ok_or_else(|| HopfError::NoAntipode("convolution system inconsistent".into()))?;
        Ok((0..n).map(|i| from_dense(&x[i * n..(i + 1) * n])).collect())
    }

    /// Antipode for algebras generated by a sub-bialgebra `B` plus generators
    /// `v` with `Δ(v) = v⊗1 + Σ b⊗w` (`b ∈ B`). `S` is solved densely on `B`,
    /// then `S(v) = ε(v)1 − Σ S(b)w`, then extended anti-multiplicatively.
    fn solve_antipode_tiered(&self) -> Result<Vec<SVec>, HopfError> {
        let words = self
            .words
            .as_ref()
            .ok_or_else(|| HopfError::NoAntipode("no generator words for a large algebra".into()))?;
        let ng = self.generators.len();
        let one = self.unit.clone();
        let gen_is_skew: Vec<bool> = self
            .generators
            .iter()
            .map(|(_, g)| {
                let d = self.comult_of(g);
                g.iter().all(|(k, c)| {
                    one.iter().all(|(u, cu)| d.get(&(*k, *u)).is_some_and(|x| x == &(c * cu)))
                })
            })
            .collect();
        let tier0: Vec<usize> = (0..self.dim)
            .filter(|&k| words[k].iter().all(|&g| !gen_is_skew[g]))
            .collect();
        if tier0.len() > DENSE_ANTIPODE_DIM || tier0.is_empty() {
            return Err(HopfError::NoAntipode(format!("group part has dimension {}", tier0.len())));
        }
        let sub = self.subalgebra(&tier0)?;
        let s0 = sub.solve_antipode_dense()?;
        let mut s_basis: Vec<Option<SVec>> = vec![None; self.dim];
        for (local, &k) in tier0.iter().enumerate() {
            let mut v = SVec::new();
            for (p, c) in &s0[local] {
                add_term(&mut v, tier0[*p], c.clone());
            }
            s_basis[k] = Some(v);
        }
        let s_of = |v: &SVec, s_basis: &Vec<Option<SVec>>| -> Option<SVec> {
            let mut out = SVec::new();
            for (k, c) in v {
                axpy(&mut out, c, s_basis[*k].as_ref()?);
            }
            Some(out)
        };
        let mut s_gen: Vec<Option<SVec>> = vec![None; ng];
        for g in 0..ng {
            let gv = &self.generators[g].1;
            if !gen_is_skew[g] {
                s_gen[g] = s_of(gv, &s_basis);
                continue;
            }
            let mut rest = self.comult_of(gv);
            for (k, c) in gv {
                for (u, cu) in &one {
                    add_term(&mut rest, (*k, *u), -(c * cu));
                }
            }
            let mut val = crate::sparse::scaled(&one, &self.counit_of(gv));
            for ((b, w), c) in &rest {
                let sb = s_basis[*b]
                    .as_ref()
                    .ok_or_else(|| HopfError::NoAntipode(format!("generator {g} is not triangular")))?;
                let prod = self.mul(sb, &basis_vec(*w));
                axpy(&mut val, &-c.clone(), &prod);
            }
            s_gen[g] = Some(val);
        }
        let mut out = Vec::with_capacity(self.dim);
        for k in 0..self.dim {
            let mut acc = one.clone();
            for &g in words[k].iter().rev() {
                let sg = s_gen[g].as_ref().ok_or_else(|| HopfError::NoAntipode("missing generator".into()))?;
                acc = self.mul(&acc, sg);
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// The sub-bialgebra on a set of basis indices closed under the structure maps.
    pub fn subalgebra(&self, idx: &[usize]) -> Result<FDHopf, HopfError> {
        let pos: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(l, &k)| (k, l)).collect();
        let m = idx.len();
        let relabel = |v: &SVec| -> Result<SVec, HopfError> {
            v.iter()
                .map(|(k, c)| {
                    pos.get(k)
                        .map(|l| (*l, c.clone()))
                        .ok_or_else(|| HopfError::Malformed(format!("e_{k} leaves the subalgebra")))
                })
                .collect()
        };
        let mut mult = Vec::with_capacity(m * m);
        for &i in idx {
            for &j in idx {
                mult.push(relabel(self.mul_basis(i, j))?);
            }
        }
        let mut comult = Vec::with_capacity(m);
        for &k in idx {
            let mut t = STensor::new();
            for ((i, j), c) in &self.comult[k] {
                match (pos.get(i), pos.get(j)) {
                    (Some(a), Some(b)) => {
                        t.insert((*a, *b), c.clone());
                    }
                    _ => return Err(HopfError::Malformed(format!("Δ(e_{k}) leaves the subalgebra"))),
                }
            }
            comult.push(t);
        }
        let labels = idx.iter().map(|&k| self.labels[k].clone()).collect();
        let counit = idx.iter().map(|&k| self.counit[k].clone()).collect();
        FDHopf::new(labels, mult, relabel(&self.unit)?, comult, counit)
    }

    /// Transports the structure along an invertible change of basis:
    /// new basis vector `k` is `cols[k]` in old coordinates.
    pub fn rebase(&self, cols: &[SVec], labels: Vec<String>) -> Result<FDHopf, HopfError> {
        let n = self.dim;
        let mut ech = Echelon::new(n);
        for c in cols {
            if !ech.insert(to_dense(c, n)) {
                return Err(HopfError::Malformed("change of basis is singular".into()));
            }
        }
        let coords = |v: &SVec| -> SVec { from_dense(&ech.coordinates(&to_dense(v, n)).expect("full rank")) };
        let mut mult = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                mult.push(coords(&self.mul(&cols[i], &cols[j])));
            }
        }
        // Coordinates of old basis vectors in the new basis, for tensor legs.
        let old_in_new: Vec<SVec> = (0..n).map(|k| coords(&basis_vec(k))).collect();
        let mut comult = Vec::with_capacity(n);
        for c in cols {
            let d = self.comult_of(c);
            let mut t = STensor::new();
            for ((i, j), x) in d {
                for (p, a) in &old_in_new[i] {
                    for (q, b) in &old_in_new[j] {
                        add_term(&mut t, (*p, *q), &x * &(a * b));
                    }
                }
            }
            comult.push(t);
        }
        let counit = cols.iter().map(|c| self.counit_of(c)).collect();
        let mut out = FDHopf::new(labels, mult, coords(&self.unit), comult, counit)?;
        if let Some(s) = &self.antipode {
            let _ = s;
            out.antipode = Some(cols.iter().map(|c| coords(&self.antipode_of(c).expect("antipode"))).collect());
        }
        out.generators = self.generators.iter().map(|(name, g)| (name.clone(), coords(g))).collect();
        Ok(out)
    }

    /// Whether a linear map (images of basis vectors) is an algebra and coalgebra map `self → other`.
    pub fn is_hopf_map(&self, other: &FDHopf, images: &[SVec]) -> Result<(), String> {
        let n = self.dim;
        let apply = |v: &SVec| -> SVec {
            let mut out = SVec::new();
            for (k, c) in v {
                axpy(&mut out, c, &images[*k]);
            }
            out
        };
        if apply(&self.unit) != other.unit {
            return Err("unit not preserved".into());
        }
        for i in 0..n {
            for j in 0..n {
                if apply(self.mul_basis(i, j)) != other.mul(&images[i], &images[j]) {
                    return Err(format!("multiplication fails at ({}, {})", self.labels[i], self.labels[j]));
                }
            }
        }
        for k in 0..n {
            let lhs = other.comult_of(&images[k]);
            let mut rhs = STensor::new();
            for ((i, j), c) in &self.comult[k] {
                for (p, a) in &images[*i] {
                    for (q, b) in &images[*j] {
                        add_term(&mut rhs, (*p, *q), c * &(a * b));
                    }
                }
            }
            if lhs != rhs {
                return Err(format!("comultiplication fails at {}", self.labels[k]));
            }
            if other.counit_of(&images[k]) != self.counit[k] {
                return Err(format!("counit fails at {}", self.labels[k]));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> FDHopfJson {
        let mut mult = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in self.mul_basis(i, j) {
                    mult.push((i, j, *k, c.clone()));
                }
            }
        }
        let mut comult = Vec::new();
        for (k, d) in self.comult.iter().enumerate() {
            for ((i, j), c) in d {
                comult.push((k, *i, *j, c.clone()));
            }
        }
        let antipode = self.antipode.as_ref().map(|s| {
            let mut out = Vec::new();
            for (j, col) in s.iter().enumerate() {
                for (i, c) in col {
                    out.push((*i, j, c.clone()));
                }
            }
            out
        });
        FDHopfJson {
            dim: self.dim,
            labels: self.labels.clone(),
            mult,
            unit: self.unit.iter().map(|(k, c)| (*k, c.clone())).collect(),
            comult,
            counit: self.counit.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect(),
            antipode,
        }
    }

    pub fn from_json(j: &FDHopfJson) -> Result<FDHopf, HopfError> {
        let n = j.dim;
        if j.labels.len() != n {
            return Err(HopfError::Malformed("label count".into()));
        }
        let bad = |what: &str| HopfError::Malformed(format!("{what} index out of range"));
        let mut mult = vec![SVec::new(); n * n];
        for (i, jj, k, c) in &j.mult {
            if *i >= n || *jj >= n || *k >= n {
                return Err(bad("mult"));
            }
            add_term(&mut mult[i * n + jj], *k, c.clone());
        }
        let mut comult = vec![STensor::new(); n];
        for (k, i, jj, c) in &j.comult {
            if *i >= n || *jj >= n || *k >= n {
                return Err(bad("comult"));
            }
            add_term(&mut comult[*k], (*i, *jj), c.clone());
        }
        let mut counit = vec![GaussRat::zero(); n];
        for (k, c) in &j.counit {
            *counit.get_mut(*k).ok_or_else(|| bad("counit"))? = c.clone();
        }
        let unit = j.unit.iter().map(|(k, c)| (*k, c.clone())).collect();
        let mut h = FDHopf::new(j.labels.clone(), mult, unit, comult, counit)?;
        if let Some(s) = &j.antipode {
            let mut cols = vec![SVec::new(); n];
            for (i, jj, c) in s {
                if *i >= n || *jj >= n {
                    return Err(bad("antipode"));
                }
                add_term(&mut cols[*jj], *i, c.clone());
            }
            h.antipode = Some(cols);
        }
        Ok(h)
    }
}

/// Serialized form of [`FDHopf`]: only nonzero structure constants are listed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FDHopfJson {
    pub dim: usize,
    pub labels: Vec<String>,
    /// `(i, j, k, c)`: `e_i·e_j` has coefficient `c` on `e_k`.
    pub mult: Vec<(usize, usize, usize, GaussRat)>,
    pub unit: Vec<(usize, GaussRat)>,
    /// `(k, i, j, c)`: `Δ(e_k)` has coefficient `c` on `e_i⊗e_j`.
    pub comult: Vec<(usize, usize, usize, GaussRat)>,
    pub counit: Vec<(usize, GaussRat)>,
    /// `(i, j, c)`: `S(e_j)` has coefficient `c` on `e_i`.
    pub antipode: Option<Vec<(usize, usize, GaussRat)>>,
}

/// A basis of the `(g,h)`-skew-primitive elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewPrimitiveSpace {
    pub g: SVec,
    pub h: SVec,
    pub basis: Vec<SVec>,
}

impl SkewPrimitiveSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn cols_to_mat(cols: &[SVec], n: usize) -> Mat {
    let mut m = Mat::zeros(n, n);
    for (j, col) in cols.iter().enumerate() {
        for (i, c) in col {
            m[(*i, j)] = c.clone();
        }
    }
    m
}

fn mat_to_cols(m: &Mat) -> Vec<SVec> {
    (0..m.cols()).map(|j| from_dense(&m.col(j))).collect()
}

fn transpose_cols(cols: &[SVec], n: usize) -> Vec<SVec> {
    let mut out = vec![SVec::new(); n];
    for (j, col) in cols.iter().enumerate() {
        for (i, c) in col {
            out[*i].insert(j, c.clone());
        }
    }
    out
}

pub fn invert_cols(cols: &[SVec], n: usize) -> Option<Vec<SVec>> {
    cols_to_mat(cols, n).inverse().map(|m| mat_to_cols(&m))
}

/// Splits an `op`-invariant subspace into the eigenspaces of `op` restricted
/// to it, for eigenvalues among [`candidate_eigenvalues`].
fn split_by_eigenvalues(op: &Mat, space: &[Vec<GaussRat>]) -> Vec<Vec<Vec<GaussRat>>> {
    let d = space.len();
    let n = op.rows();
    if d == 0 {
        return vec![];
    }
    let mut ech = Echelon::new(n);
    for v in space {
        ech.insert(v.clone());
    }
    let mut r = Mat::zeros(d, d);
    for (j, v) in space.iter().enumerate() {
        let c = ech.coordinates(&op.apply(v)).expect("invariant subspace");
        for i in 0..d {
            r[(i, j)] = c[i].clone();
        }
    }
    let mut out = Vec::new();
    for lam in candidate_eigenvalues(&r) {
        let ker = (&r - &Mat::scalar(d, &lam)).kernel_basis();
        if ker.is_empty() {
            continue;
        }
        let vecs = ker
            .iter()
            .map(|k| {
                let mut v = vec![GaussRat::zero(); n];
                for (c, b) in k.iter().zip(space) {
                    if !c.is_zero() {
                        for (a, x) in v.iter_mut().zip(b) {
                            *a += c * x;
                        }
                    }
                }
                v
            })
            .collect();
        out.push(vecs);
    }
    out
}

fn candidate_eigenvalues(r: &Mat) -> Vec<GaussRat> {
    let mut cands: Vec<GaussRat> = (0..4).map(GaussRat::xi_power).collect();
    cands.push(GaussRat::zero());
    for k in 0..r.rows() {
        if !cands.contains(&r[(k, k)]) {
            cands.push(r[(k, k)].clone());
        }
    }
    cands
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Group algebra of the cyclic group of order `n`, basis `g^0..g^{n-1}`.
    pub(crate) fn cyclic(n: usize) -> FDHopf {
        let labels = (0..n).map(|k| format!("g^{k}")).collect();
        let mut mult = vec![SVec::new(); n * n];
        for i in 0..n {
            for j in 0..n {
                mult[i * n + j] = basis_vec((i + j) % n);
            }
        }
        let comult = (0..n).map(|k| STensor::from([((k, k), GaussRat::one())])).collect();
        let counit = vec![GaussRat::one(); n];
        FDHopf::new(labels, mult, basis_vec(0), comult, counit).unwrap()
    }

    #[test]
    fn group_algebra_axioms() {
        let z2 = cyclic(2).with_antipode(vec![basis_vec(0), basis_vec(1)]);
        assert!(z2.verify_hopf_axioms().all_pass());
        let z4 = cyclic(4);
        let s = z4.solve_antipode().unwrap();
        assert_eq!(s[1], basis_vec(3));
        assert_eq!(z4.grouplikes().len(), 4);
    }

    #[test]
    fn dual_of_group_algebra() {
        let z4 = cyclic(4);
        let d = z4.dual();
        assert!(d.verify_hopf_axioms().all_pass());
        // Dual of a commutative group algebra of Z4 over Q(i) has 4 grouplikes (characters).
        assert_eq!(d.grouplikes().len(), 4);
        let dd = d.dual();
        assert_eq!(dd.mult, z4.mult);
        assert_eq!(dd.comult, z4.comult);
    }

    #[test]
    fn json_round_trip() {
        let z4 = cyclic(4);
        let s = z4.solve_antipode().unwrap();
        let z4 = z4.with_antipode(s);
        let j = z4.to_json();
        let text = serde_json::to_string(&j).unwrap();
        let back: FDHopfJson = serde_json::from_str(&text).unwrap();
        let h = FDHopf::from_json(&back).unwrap();
        assert_eq!(h.mult, z4.mult);
        assert_eq!(h.antipode, z4.antipode);
    }
}
