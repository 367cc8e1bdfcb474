//! Sparse vectors keyed by basis index, and sparse tensors of rank two.

use std::collections::BTreeMap;

use crate::linalg::Vector;
use crate::scalar::GaussRat;

/// A sparse vector: basis index to nonzero coefficient.
pub type SVec = BTreeMap<usize, GaussRat>;

/// A sparse element of `A⊗B`: pair of basis indices to nonzero coefficient.
pub type STensor = BTreeMap<(usize, usize), GaussRat>;

pub fn basis_vec(k: usize) -> SVec {
    SVec::from([(k, GaussRat::one())])
}

/// `acc += c·v`, dropping entries that cancel.
pub fn axpy<K: Ord + Clone>(acc: &mut BTreeMap<K, GaussRat>, c: &GaussRat, v: &BTreeMap<K, GaussRat>) {
    if c.is_zero() {
        return;
    }
    for (k, x) in v {
        add_term(acc, k.clone(), c * x);
    }
}

/// `acc[k] += c`, removing the entry if it becomes zero.
pub fn add_term<K: Ord>(acc: &mut BTreeMap<K, GaussRat>, k: K, c: GaussRat) {
    if c.is_zero() {
        return;
    }
    match acc.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

pub fn scaled<K: Ord + Clone>(v: &BTreeMap<K, GaussRat>, c: &GaussRat) -> BTreeMap<K, GaussRat> {
    let mut out = BTreeMap::new();
    axpy(&mut out, c, v);
    out
}

pub fn sub<K: Ord + Clone>(a: &BTreeMap<K, GaussRat>, b: &BTreeMap<K, GaussRat>) -> BTreeMap<K, GaussRat> {
    let mut out = a.clone();
    axpy(&mut out, &GaussRat::from_int(-1), b);
    out
}

pub fn to_dense(v: &SVec, n: usize) -> Vector {
    let mut d = vec![GaussRat::zero(); n];
    for (k, c) in v {
        d[*k] = c.clone();
    }
    d
}

pub fn from_dense(v: &[GaussRat]) -> SVec {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect()
}

/// Row-echelon basis of sparse vectors (no coordinate tracking).
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon {
    rows: BTreeMap<usize, SVec>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: SVec) -> SVec {
        loop {
            let hit = v.iter().find(|(k, _)| self.rows.contains_key(k)).map(|(k, c)| (*k, c.clone()));
            let Some((k, c)) = hit else { return v };
            axpy(&mut v, &-c, &self.rows[&k]);
        }
    }

    /// Inserts `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: SVec) -> bool {
        let v = self.reduce(v);
        let Some((&p, c)) = v.iter().next() else { return false };
        let inv = c.inv().expect("nonzero");
        let v = scaled(&v, &inv);
        self.rows.insert(p, v);
        true
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    pub fn basis(&self) -> Vec<SVec> {
        self.rows.values().cloned().collect()
    }
}
