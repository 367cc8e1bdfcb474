//! Finitely presented algebras over `Q(i)`: rewrite rules on words, normal
//! forms, overlap (Diamond lemma) checks, basis enumeration and structure
//! constants.
//!
//! Words are compared by a layered order. Every generator has a level. At
//! the top level `L` of a word, the number of level-`L` letters is compared
//! first. Then come the segments of lower-level letters between them, in the
//! level's direction. Last come the level-`L` letters themselves, by
//! precedence. Level 0 alone is degree-lexicographic. The order is
//! compatible with multiplication and well-founded.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hopf::FDHopf;
use crate::scalar::GaussRat;
use crate::sparse::{add_term, axpy, basis_vec, SVec, STensor};

pub type Word = Vec<u8>;

/// A formal linear combination of words.
pub type LinComb = BTreeMap<Word, GaussRat>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("duplicate generator {0:?}")]
    DuplicateGenerator(String),
    #[error("rule {0} is not order-decreasing")]
    NotDecreasing(String),
    #[error("basis exceeds cap {0}")]
    ExceedsCap(usize),
    #[error("parse error in {expr:?}: {msg}")]
    Parse { expr: String, msg: String },
    #[error("{0}")]
    Other(String),
}

/// Kind of a generator: a letter of the base Hopf algebra or of a Yetter–Drinfeld module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sort {
    GroupLike,
    Yd,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorSymbol {
    pub name: String,
    pub sort: Sort,
    pub level: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<Vec<usize>>,
}

impl GeneratorSymbol {
    pub fn new(name: &str, sort: Sort, level: u8) -> Self {
        GeneratorSymbol { name: name.to_string(), sort, level, index: None }
    }

    pub fn with_index(mut self, index: Vec<usize>) -> Self {
        self.index = Some(index);
        self
    }
}

/// Direction in which the lower-level segments of a level are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SegmentDir {
    LeftFirst,
    RightFirst,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: LinComb,
}

/// An unresolved overlap: the two one-step reductions of `word` have
/// different normal forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ambiguity {
    pub word: Word,
    pub rules: (usize, usize),
    pub difference: LinComb,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<GeneratorSymbol>,
    /// Segment direction for each level above 0, indexed by level.
    pub levels: Vec<SegmentDir>,
    pub rules: Vec<RewriteRule>,
    lookup: HashMap<Word, Vec<usize>>,
    lhs_lens: Vec<usize>,
}

/// How `normal_form` picks the next redex.
#[derive(Debug, Clone, Copy)]
pub enum Strategy {
    /// Largest word first, leftmost redex.
    Leftmost,
    /// Pseudo-random word and redex, driven by the given seed.
    Random(u64),
}

impl Presentation {
    pub fn new(generators: Vec<GeneratorSymbol>, levels: Vec<SegmentDir>) -> Result<Self, PresentationError> {
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(PresentationError::DuplicateGenerator(g.name.clone()));
            }
        }
        let max_level = generators.iter().map(|g| g.level as usize).max().unwrap_or(0);
        let mut levels = levels;
        while levels.len() <= max_level {
            levels.push(SegmentDir::LeftFirst);
        }
        Ok(Presentation { generators, levels, rules: vec![], lookup: HashMap::new(), lhs_lens: vec![] })
    }

    pub fn gen_index(&self, name: &str) -> Option<u8> {
        self.generators.iter().position(|g| g.name == name).map(|p| p as u8)
    }

    pub fn letter(&self, name: &str) -> Word {
        vec![self.gen_index(name).unwrap_or_else(|| panic!("unknown generator {name}"))]
    }

    /// Adds a rule, checking that it is order-decreasing.
    pub fn add_rule(&mut self, lhs: Word, rhs: LinComb) -> Result<(), PresentationError> {
        let k = self.order_key(&lhs);
        for w in rhs.keys() {
            if self.order_key(w) >= k {
                return Err(PresentationError::NotDecreasing(format!(
                    "{} -> ... {}",
                    self.word_string(&lhs),
                    self.word_string(w)
                )));
            }
        }
        let idx = self.rules.len();
        self.lookup.entry(lhs.clone()).or_default().push(idx);
        if !self.lhs_lens.contains(&lhs.len()) {
            self.lhs_lens.push(lhs.len());
            self.lhs_lens.sort_unstable();
        }
        self.rules.push(RewriteRule { lhs, rhs });
        Ok(())
    }

    /// Orients a relation `r = 0` by its leading word and adds it as a rule.
    /// A relation that is identically zero is skipped.
    pub fn add_relation(&mut self, rel: &LinComb) -> Result<(), PresentationError> {
        let Some((lead, c)) = rel.iter().max_by(|a, b| self.order_key(a.0).cmp(&self.order_key(b.0))) else {
            return Ok(());
        };
        let inv = c.inv().map_err(|e| PresentationError::Other(e.to_string()))?;
        let lead = lead.clone();
        let mut rhs = LinComb::new();
        for (w, x) in rel {
            if *w != lead {
                add_term(&mut rhs, w.clone(), -(x * &inv));
            }
        }
        self.add_rule(lead, rhs)
    }

    /// Parses `lhs = rhs` (or a bare expression meaning `= 0`) and adds it.
    pub fn add_relation_str(&mut self, rel: &str, params: &HashMap<String, GaussRat>) -> Result<(), PresentationError> {
        let lc = self.parse_relation(rel, params)?;
        self.add_relation(&lc)
    }

    pub fn parse_relation(&self, rel: &str, params: &HashMap<String, GaussRat>) -> Result<LinComb, PresentationError> {
        match rel.split_once('=') {
            Some((l, r)) => {
                let l = self.parse_expr(l, params)?;
                let r = self.parse_expr(r, params)?;
                Ok(crate::sparse::sub(&l, &r))
            }
            None => self.parse_expr(rel, params),
        }
    }

    pub fn parse_expr(&self, expr: &str, params: &HashMap<String, GaussRat>) -> Result<LinComb, PresentationError> {
        Parser::new(expr, self, params).parse()
    }

    /// Sort key realising the word order as lexicographic order on keys.
    pub fn order_key(&self, w: &[u8]) -> Vec<u32> {
        let top = self.generators.iter().map(|g| g.level).max().unwrap_or(0);
        let mut key = Vec::with_capacity(2 * w.len() + 2);
        self.push_key(w, top, &mut key);
        key
    }

    fn push_key(&self, w: &[u8], level: u8, key: &mut Vec<u32>) {
        let at_level: Vec<u8> = w.iter().copied().filter(|&g| self.generators[g as usize].level == level).collect();
        key.push(at_level.len() as u32);
        if level > 0 {
            let mut segs: Vec<&[u8]> = w.split(|&g| self.generators[g as usize].level == level).collect();
            if self.levels[level as usize] == SegmentDir::RightFirst {
                segs.reverse();
            }
            for s in segs {
                self.push_key(s, level - 1, key);
            }
        }
        key.extend(at_level.iter().map(|&g| g as u32));
    }

    pub fn cmp_words(&self, a: &[u8], b: &[u8]) -> std::cmp::Ordering {
        self.order_key(a).cmp(&self.order_key(b))
    }

    /// First redex `(position, rule)` in `w`, scanning left to right.
    fn find_redex(&self, w: &[u8]) -> Option<(usize, usize)> {
        for p in 0..w.len() {
            for &l in &self.lhs_lens {
                if p + l > w.len() {
                    break;
                }
                if let Some(rs) = self.lookup.get(&w[p..p + l]) {
                    return Some((p, rs[0]));
                }
            }
        }
        None
    }

    fn all_redexes(&self, w: &[u8]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for p in 0..w.len() {
            for &l in &self.lhs_lens {
                if p + l > w.len() {
                    break;
                }
                if let Some(rs) = self.lookup.get(&w[p..p + l]) {
                    out.extend(rs.iter().map(|&r| (p, r)));
                }
            }
        }
        out
    }

    pub fn is_normal(&self, w: &[u8]) -> bool {
        self.find_redex(w).is_none()
    }

    fn apply_at(&self, w: &[u8], p: usize, r: usize, c: &GaussRat, out: &mut dyn FnMut(Word, GaussRat)) {
        let rule = &self.rules[r];
        let (pre, post) = (&w[..p], &w[p + rule.lhs.len()..]);
        for (rw, rc) in &rule.rhs {
            let mut nw = Vec::with_capacity(pre.len() + rw.len() + post.len());
            nw.extend_from_slice(pre);
            nw.extend_from_slice(rw);
            nw.extend_from_slice(post);
            out(nw, c * rc);
        }
    }

    /// Reduces a linear combination to normal words.
    pub fn normal_form(&self, lc: &LinComb) -> LinComb {
        self.normal_form_with(lc, Strategy::Leftmost)
    }

    pub fn normal_form_with(&self, lc: &LinComb, strategy: Strategy) -> LinComb {
        let mut result = LinComb::new();
        match strategy {
            Strategy::Leftmost => {
                // Processing the largest word first means every word is expanded once.
                let mut pending: BTreeMap<Vec<u32>, (Word, GaussRat)> = BTreeMap::new();
                let push = |pending: &mut BTreeMap<Vec<u32>, (Word, GaussRat)>, w: Word, c: GaussRat| {
                    if c.is_zero() {
                        return;
                    }
                    let k = self.order_key(&w);
                    match pending.entry(k) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            e.insert((w, c));
                        }
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            e.get_mut().1 += c;
                            if e.get().1.is_zero() {
                                e.remove();
                            }
                        }
                    }
                };
                for (w, c) in lc {
                    push(&mut pending, w.clone(), c.clone());
                }
                while let Some((_, (w, c))) = pending.pop_last() {
                    match self.find_redex(&w) {
                        None => add_term(&mut result, w, c),
                        Some((p, r)) => self.apply_at(&w, p, r, &c, &mut |nw, nc| push(&mut pending, nw, nc)),
                    }
                }
            }
            Strategy::Random(seed) => {
                let mut state = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1;
                let mut next = move || {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    state
                };
                let mut pending: Vec<(Word, GaussRat)> = lc.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
                while !pending.is_empty() {
                    let i = (next() % pending.len() as u64) as usize;
                    let (w, c) = pending.swap_remove(i);
                    let redexes = self.all_redexes(&w);
                    if redexes.is_empty() {
                        add_term(&mut result, w, c);
                        continue;
                    }
                    let (p, r) = redexes[(next() % redexes.len() as u64) as usize];
                    self.apply_at(&w, p, r, &c, &mut |nw, nc| pending.push((nw, nc)));
                }
            }
        }
        result
    }

    pub fn normal_form_word(&self, w: &[u8]) -> LinComb {
        self.normal_form(&LinComb::from([(w.to_vec(), GaussRat::one())]))
    }

    /// All overlap ambiguities that do not resolve; empty means the normal
    /// words form a basis.
    pub fn check_confluence(&self) -> Vec<Ambiguity> {
        let mut out = Vec::new();
        let one = GaussRat::one();
        for (a, ra) in self.rules.iter().enumerate() {
            for (b, rb) in self.rules.iter().enumerate() {
                let (la, lb) = (ra.lhs.len(), rb.lhs.len());
                // Inclusion: lhs_b inside lhs_a.
                if lb <= la {
                    for p in 0..=(la - lb) {
                        if a == b && p == 0 {
                            continue;
                        }
                        if ra.lhs[p..p + lb] == rb.lhs[..] && (a < b || la != lb || p != 0) {
                            let w = ra.lhs.clone();
                            if let Some(amb) = self.resolve(&w, (0, a), (p, b), &one) {
                                out.push(amb);
                            }
                        }
                    }
                }
                // Proper overlap: suffix of lhs_a equals prefix of lhs_b.
                for k in 1..la.min(lb) {
                    if ra.lhs[la - k..] == rb.lhs[..k] {
                        let mut w = ra.lhs.clone();
                        w.extend_from_slice(&rb.lhs[k..]);
                        if let Some(amb) = self.resolve(&w, (0, a), (la - k, b), &one) {
                            out.push(amb);
                        }
                    }
                }
            }
        }
        out
    }

    fn resolve(&self, w: &[u8], (pa, a): (usize, usize), (pb, b): (usize, usize), c: &GaussRat) -> Option<Ambiguity> {
        let mut left = LinComb::new();
        self.apply_at(w, pa, a, c, &mut |nw, nc| add_term(&mut left, nw, nc));
        let mut right = LinComb::new();
        self.apply_at(w, pb, b, c, &mut |nw, nc| add_term(&mut right, nw, nc));
        let diff = self.normal_form(&crate::sparse::sub(&left, &right));
        (!diff.is_empty()).then(|| Ambiguity { word: w.to_vec(), rules: (a, b), difference: diff })
    }

    /// All normal words, shortest first and then in word order; errors once
    /// more than `cap` are found.
    pub fn enumerate_basis(&self, cap: usize) -> Result<Vec<Word>, PresentationError> {
        let mut all = vec![Word::new()];
        let mut layer = vec![Word::new()];
        while !layer.is_empty() {
            let mut next = Vec::new();
            for w in &layer {
                for g in 0..self.generators.len() as u8 {
                    let mut nw = w.clone();
                    nw.push(g);
                    if self.suffix_normal(&nw) {
                        next.push(nw);
                    }
                }
            }
            all.extend(next.iter().cloned());
            if all.len() > cap {
                return Err(PresentationError::ExceedsCap(cap));
            }
            layer = next;
        }
        all.sort_by_cached_key(|w| self.order_key(w));
        Ok(all)
    }

    /// For `w` whose proper prefix is normal: whether no rule lhs is a suffix.
    fn suffix_normal(&self, w: &[u8]) -> bool {
        self.lhs_lens.iter().all(|&l| l > w.len() || !self.lookup.contains_key(&w[w.len() - l..]))
    }

    pub fn word_string(&self, w: &[u8]) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            let name = &self.generators[w[i] as usize].name;
            parts.push(if j - i == 1 { name.clone() } else { format!("{name}^{}", j - i) });
            i = j;
        }
        parts.join(" ")
    }

    pub fn lincomb_string(&self, lc: &LinComb) -> String {
        if lc.is_empty() {
            return "0".to_string();
        }
        let mut terms: Vec<(&Word, &GaussRat)> = lc.iter().collect();
        terms.sort_by(|a, b| self.cmp_words(b.0, a.0));
        terms.iter().map(|(w, c)| format!("({c}) {}", self.word_string(w))).collect::<Vec<_>>().join(" + ")
    }

    pub fn to_json(&self) -> PresentationJson {
        let names = |w: &Word| w.iter().map(|&g| self.generators[g as usize].name.clone()).collect();
        PresentationJson {
            generators: self.generators.clone(),
            order: OrderJson { kind: "layered".into(), levels: self.levels.clone() },
            rules: self
                .rules
                .iter()
                .map(|r| RuleJson {
                    lhs: names(&r.lhs),
                    rhs: r.rhs.iter().map(|(w, c)| TermJson { coeff: c.clone(), word: names(w) }).collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &PresentationJson) -> Result<Self, PresentationError> {
        let mut p = Presentation::new(j.generators.clone(), j.order.levels.clone())?;
        let word = |p: &Presentation, names: &[String]| -> Result<Word, PresentationError> {
            names.iter().map(|n| p.gen_index(n).ok_or_else(|| PresentationError::UnknownSymbol(n.clone()))).collect()
        };
        for r in &j.rules {
            let lhs = word(&p, &r.lhs)?;
            let mut rhs = LinComb::new();
            for t in &r.rhs {
                add_term(&mut rhs, word(&p, &t.word)?, t.coeff.clone());
            }
            p.add_rule(lhs, rhs)?;
        }
        Ok(p)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rules {
            writeln!(f, "{} -> {}", self.word_string(&r.lhs), self.lincomb_string(&r.rhs))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub generators: Vec<GeneratorSymbol>,
    pub order: OrderJson,
    pub rules: Vec<RuleJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderJson {
    pub kind: String,
    pub levels: Vec<SegmentDir>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleJson {
    pub lhs: Vec<String>,
    pub rhs: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: GaussRat,
    pub word: Vec<String>,
}

/// Recursive-descent parser for noncommutative polynomial expressions such
/// as `1/2 (1 + y) t - xi x^3 p1`.
struct Parser<'a> {
    src: &'a str,
    toks: Vec<Tok>,
    pos: usize,
    pres: &'a Presentation,
    params: &'a HashMap<String, GaussRat>,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Sym(char),
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, pres: &'a Presentation, params: &'a HashMap<String, GaussRat>) -> Self {
        Parser { src, toks: vec![], pos: 0, pres, params }
    }

    fn err(&self, msg: &str) -> PresentationError {
        PresentationError::Parse { expr: self.src.to_string(), msg: msg.to_string() }
    }

    fn lex(&mut self) -> Result<(), PresentationError> {
        let cs: Vec<char> = self.src.chars().collect();
        let mut i = 0;
        while i < cs.len() {
            let c = cs[i];
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let mut j = i;
                while j < cs.len() && cs[j].is_ascii_digit() {
                    j += 1;
                }
                let s: String = cs[i..j].iter().collect();
                self.toks.push(Tok::Num(s.parse().map_err(|_| self.err("bad number"))?));
                i = j;
            } else if c.is_alphabetic() || c == '_' {
                let mut j = i;
                while j < cs.len() && (cs[j].is_alphanumeric() || cs[j] == '_') {
                    j += 1;
                }
                self.toks.push(Tok::Ident(cs[i..j].iter().collect()));
                i = j;
            } else if "+-*/^()".contains(c) {
                self.toks.push(Tok::Sym(c));
                i += 1;
            } else {
                return Err(self.err(&format!("unexpected character {c:?}")));
            }
        }
        Ok(())
    }

    fn parse(mut self) -> Result<LinComb, PresentationError> {
        self.lex()?;
        let e = self.expr()?;
        if self.pos != self.toks.len() {
            return Err(self.err("trailing input"));
        }
        Ok(e)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expr(&mut self) -> Result<LinComb, PresentationError> {
        let mut acc = LinComb::new();
        let mut sign = GaussRat::one();
        if let Some(Tok::Sym(c @ ('+' | '-'))) = self.peek() {
            if *c == '-' {
                sign = GaussRat::from_int(-1);
            }
            self.pos += 1;
        }
        loop {
            let t = self.term()?;
            axpy(&mut acc, &sign, &t);
            match self.peek() {
                Some(Tok::Sym('+')) => sign = GaussRat::one(),
                Some(Tok::Sym('-')) => sign = GaussRat::from_int(-1),
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<LinComb, PresentationError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Sym('*')) => {
                    self.pos += 1;
                }
                Some(Tok::Sym('/')) => {
                    self.pos += 1;
                    let d = self.factor()?;
                    let s = scalar_of(&d).ok_or_else(|| self.err("division by a non-scalar"))?;
                    let inv = s.inv().map_err(|_| self.err("division by zero"))?;
                    acc = crate::sparse::scaled(&acc, &inv);
                    continue;
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Sym('(')) => {}
                _ => return Ok(acc),
            }
            let f = self.factor()?;
            acc = concat(&acc, &f);
        }
    }

    fn factor(&mut self) -> Result<LinComb, PresentationError> {
        let base = self.atom()?;
        if let Some(Tok::Sym('^')) = self.peek() {
            self.pos += 1;
            let Some(Tok::Num(e)) = self.peek().cloned() else {
                return Err(self.err("expected exponent"));
            };
            self.pos += 1;
            let mut acc = LinComb::from([(Word::new(), GaussRat::one())]);
            for _ in 0..e {
                acc = concat(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<LinComb, PresentationError> {
        let scalar = |c: GaussRat| LinComb::from([(Word::new(), c)]);
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(scalar(GaussRat::from_int(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(g) = self.pres.gen_index(&name) {
                    return Ok(LinComb::from([(vec![g], GaussRat::one())]));
                }
                if let Some(v) = self.params.get(&name) {
                    return Ok(scalar(v.clone()));
                }
                match name.as_str() {
                    "xi" | "i" => Ok(scalar(GaussRat::i())),
                    _ => Err(PresentationError::UnknownSymbol(name)),
                }
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::Sym(')')) {
                    return Err(self.err("expected )"));
                }
                self.pos += 1;
                Ok(e)
            }
            _ => Err(self.err("expected a term")),
        }
    }
}

fn scalar_of(lc: &LinComb) -> Option<GaussRat> {
    match lc.len() {
        0 => Some(GaussRat::zero()),
        1 => lc.get(&Word::new()).cloned(),
        _ => None,
    }
}

/// Product in the free algebra.
pub fn concat(a: &LinComb, b: &LinComb) -> LinComb {
    let mut out = LinComb::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            add_term(&mut out, w, ca * cb);
        }
    }
    out
}

/// A confluent presentation together with its normal-word basis and the
/// right-multiplication tables by generators.
#[derive(Debug, Clone)]
pub struct PresentedAlgebra {
    pub pres: Presentation,
    pub basis: Vec<Word>,
    pub index: HashMap<Word, usize>,
    /// `right[k][g]` is `basis[k]·g` in basis coordinates.
    right: Vec<Vec<SVec>>,
}

impl PresentedAlgebra {
    /// Enumerates the basis (up to `cap` words) and tabulates right
    /// multiplication by each generator.
    pub fn new(pres: Presentation, cap: usize) -> Result<Self, PresentationError> {
        let basis = pres.enumerate_basis(cap)?;
        let index: HashMap<Word, usize> = basis.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        let mut alg = PresentedAlgebra { pres, basis, index, right: vec![] };
        let ng = alg.pres.generators.len() as u8;
        let mut right = Vec::with_capacity(alg.basis.len());
        for w in &alg.basis {
            let mut row = Vec::with_capacity(ng as usize);
            for g in 0..ng {
                let mut nw = w.clone();
                nw.push(g);
                row.push(alg.coords(&alg.pres.normal_form_word(&nw))?);
            }
            right.push(row);
        }
        alg.right = right;
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a combination of normal words.
    pub fn coords(&self, lc: &LinComb) -> Result<SVec, PresentationError> {
        let mut out = SVec::new();
        for (w, c) in lc {
            let k = self.index.get(w).ok_or_else(|| {
                PresentationError::Other(format!("{} is not a basis word", self.pres.word_string(w)))
            })?;
            add_term(&mut out, *k, c.clone());
        }
        Ok(out)
    }

    pub fn to_lincomb(&self, v: &SVec) -> LinComb {
        v.iter().map(|(k, c)| (self.basis[*k].clone(), c.clone())).collect()
    }

    /// `v·g` for a generator `g`.
    pub fn mul_gen(&self, v: &SVec, g: u8) -> SVec {
        let mut out = SVec::new();
        for (k, c) in v {
            axpy(&mut out, c, &self.right[*k][g as usize]);
        }
        out
    }

    /// `v·w` for an arbitrary (not necessarily normal) word `w`.
    pub fn mul_word(&self, v: &SVec, w: &[u8]) -> SVec {
        w.iter().fold(v.clone(), |acc, &g| self.mul_gen(&acc, g))
    }

    /// The element represented by an arbitrary combination of words.
    pub fn eval(&self, lc: &LinComb) -> SVec {
        let one = self.unit();
        let mut out = SVec::new();
        for (w, c) in lc {
            axpy(&mut out, c, &self.mul_word(&one, w));
        }
        out
    }

    pub fn unit(&self) -> SVec {
        basis_vec(self.index[&Word::new()])
    }

    pub fn mul(&self, a: &SVec, b: &SVec) -> SVec {
        let mut out = SVec::new();
        for (j, cb) in b {
            let prod = self.mul_word(a, &self.basis[*j]);
            axpy(&mut out, cb, &prod);
        }
        out
    }

    /// Multiplication tensor over the normal-word basis.
    pub fn structure_constants(&self) -> Vec<SVec> {
        let n = self.dim();
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            let e = basis_vec(i);
            for j in 0..n {
                out.push(self.mul_word(&e, &self.basis[j]));
            }
        }
        out
    }

    /// `(a⊗b)·(g⊗h)` in `A⊗A` for generators or words `g`, `h`.
    pub fn mul_tensor_words(&self, t: &STensor, g: &[u8], h: &[u8]) -> STensor {
        let mut out = STensor::new();
        let mut left_cache: HashMap<usize, SVec> = HashMap::new();
        let mut right_cache: HashMap<usize, SVec> = HashMap::new();
        for ((i, j), c) in t {
            let l = left_cache.entry(*i).or_insert_with(|| self.mul_word(&basis_vec(*i), g)).clone();
            let r = right_cache.entry(*j).or_insert_with(|| self.mul_word(&basis_vec(*j), h)).clone();
            for (p, a) in &l {
                for (q, b) in &r {
                    add_term(&mut out, (*p, *q), c * &(a * b));
                }
            }
        }
        out
    }
}

/// Comultiplication and counit prescribed on generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalgebraData {
    /// `Δ(g)` as a list of `(coefficient, left word, right word)`.
    pub comult: Vec<Vec<(GaussRat, Word, Word)>>,
    pub counit: Vec<GaussRat>,
}

impl CoalgebraData {
    /// `Δ` of an arbitrary word, computed multiplicatively in `A⊗A`.
    pub fn comult_word(&self, alg: &PresentedAlgebra, w: &[u8]) -> STensor {
        let u = alg.index[&Word::new()];
        let mut acc = STensor::from([((u, u), GaussRat::one())]);
        for &g in w {
            let mut next = STensor::new();
            for (c, l, r) in &self.comult[g as usize] {
                let part = alg.mul_tensor_words(&acc, l, r);
                axpy(&mut next, c, &part);
            }
            acc = next;
        }
        acc
    }

    pub fn counit_word(&self, w: &[u8]) -> GaussRat {
        w.iter().fold(GaussRat::one(), |acc, &g| &acc * &self.counit[g as usize])
    }

    pub fn comult_lincomb(&self, alg: &PresentedAlgebra, lc: &LinComb) -> STensor {
        let mut out = STensor::new();
        for (w, c) in lc {
            axpy(&mut out, c, &self.comult_word(alg, w));
        }
        out
    }

    /// Rules whose image under `Δ` (resp. `ε`) is nonzero, i.e. relations the
    /// prescribed coalgebra maps do not respect.
    pub fn relation_defects(&self, alg: &PresentedAlgebra) -> (Vec<usize>, Vec<usize>) {
        let mut bad_delta = Vec::new();
        let mut bad_eps = Vec::new();
        for (k, r) in alg.pres.rules.iter().enumerate() {
            let mut rel = r.rhs.clone();
            for c in rel.values_mut() {
                *c = -c.clone();
            }
            add_term(&mut rel, r.lhs.clone(), GaussRat::one());
            if !self.comult_lincomb(alg, &rel).is_empty() {
                bad_delta.push(k);
            }
            let e: GaussRat = rel.iter().map(|(w, c)| c * &self.counit_word(w)).sum();
            if !e.is_zero() {
                bad_eps.push(k);
            }
        }
        (bad_delta, bad_eps)
    }

    /// Assembles the bialgebra on the normal-word basis.
    pub fn to_fdhopf(&self, alg: &PresentedAlgebra, labels: Option<Vec<String>>) -> Result<FDHopf, PresentationError> {
        let labels = labels.unwrap_or_else(|| alg.basis.iter().map(|w| alg.pres.word_string(w)).collect());
        let mult = alg.structure_constants();
        let comult: Vec<STensor> = alg.basis.iter().map(|w| self.comult_word(alg, w)).collect();
        let counit = alg.basis.iter().map(|w| self.counit_word(w)).collect();
        let mut h = FDHopf::new(labels, mult, alg.unit(), comult, counit)
            .map_err(|e| PresentationError::Other(e.to_string()))?;
        h.generators = (0..alg.pres.generators.len() as u8)
            .map(|g| (alg.pres.generators[g as usize].name.clone(), alg.mul_gen(&alg.unit(), g)))
            .collect();
        h.words = Some(alg.basis.iter().map(|w| w.iter().map(|&g| g as usize).collect()).collect());
        Ok(h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free_one_letter() -> Presentation {
        Presentation::new(vec![GeneratorSymbol::new("z", Sort::GroupLike, 0)], vec![]).unwrap()
    }

    #[test]
    fn free_algebra_exceeds_cap() {
        assert_eq!(free_one_letter().enumerate_basis(10), Err(PresentationError::ExceedsCap(10)));
    }

    #[test]
    fn empty_generators_give_field() {
        let p = Presentation::new(vec![], vec![]).unwrap();
        assert_eq!(p.enumerate_basis(10).unwrap(), vec![Word::new()]);
    }

    #[test]
    fn parser_handles_products_and_powers() {
        let mut p = free_one_letter();
        let params = HashMap::from([("lam".to_string(), GaussRat::from_int(3))]);
        let e = p.parse_expr("lam (1 - z^2)/2 + xi z", &params).unwrap();
        assert_eq!(e[&vec![]], GaussRat::frac(3, 2));
        assert_eq!(e[&vec![0, 0]], GaussRat::frac(-3, 2));
        assert_eq!(e[&vec![0]], GaussRat::i());
        p.add_relation_str("z^3 = 1", &params).unwrap();
        assert_eq!(p.enumerate_basis(10).unwrap().len(), 3);
        assert!(p.check_confluence().is_empty());
    }
}
