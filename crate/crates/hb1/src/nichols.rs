//! Nichols algebra data of Yetter–Drinfeld modules over `H`.

use hb1_core::linalg::{Mat, Vector};
use hb1_core::nichols::{self as core_nichols, BraidedSpace, HilbertPrefix, NicholsError, DEFAULT_CAP};
use hb1_core::scalar::GaussRat;
use serde::Serialize;

use crate::double::SimpleLabel;
use crate::yd::{braiding, catalog_yd, YDModule, YdTag};

pub fn braided_space(v: &YDModule) -> BraidedSpace {
    BraidedSpace::new_unchecked(v.dim, braiding(v, v)).expect("square braiding")
}

pub fn hilbert_prefix(v: &YDModule, maxdeg: usize) -> Result<HilbertPrefix, NicholsError> {
    core_nichols::hilbert_prefix(&braided_space(v), maxdeg, DEFAULT_CAP)
}

pub fn quadratic_relations(v: &YDModule) -> Vec<Vector> {
    core_nichols::quadratic_relations(&braided_space(v))
}

/// Candidates: standard basis vectors, eigenvectors of the `x`-action, and
/// in dimension 2 the `Q(i)`-rational solutions of `c(v⊗v) = v⊗v`.
pub fn witness_candidates(v: &YDModule) -> Vec<Vector> {
    let d = v.dim;
    let mut out: Vec<Vector> = (0..d).map(|k| hb1_core::linalg::unit_vec(d, k)).collect();
    for e in 0..4 {
        let shifted = &v.action[0] - &Mat::scalar(d, &GaussRat::xi_power(e));
        out.extend(shifted.kernel_basis());
    }
    out.extend(core_nichols::eigenvalue_one_rational_2d(&braided_space(v)));
    out
}

/// A nonzero `v` with `c(v⊗v) = v⊗v`, searched among [`witness_candidates`].
/// `None` is not a proof that no such vector exists.
pub fn eigenvalue_one_witness(v: &YDModule) -> Option<Vector> {
    let b = braided_space(v);
    witness_candidates(v).into_iter().find(|w| core_nichols::is_eigenvalue_one(&b, w))
}

/// Whether `c_{W,V} c_{V,W} = id` on `V⊗W`.
pub fn pair_factorization(v: &YDModule, w: &YDModule) -> bool {
    (&braiding(w, v) * &braiding(v, w)).is_identity()
}

pub fn diagonal_data(v: &YDModule) -> Option<Vec<Vec<GaussRat>>> {
    core_nichols::diagonal_data(&braided_space(v))
}

fn tag(s: &str) -> YDModule {
    catalog_yd(s.parse().expect("catalog tag")).expect("catalog tag")
}

/// Quadratic relations claimed for `M_n`, as vectors in `V⊗V` (basis `v_iv_j` at `2i+j`).
pub fn claimed_relations(n: u8) -> Vec<Vector> {
    let v = |c: [i64; 4]| c.iter().map(|&k| GaussRat::from_int(k)).collect::<Vector>();
    match n {
        4 | 6 | 9 | 11 => vec![v([1, 0, 0, 0]), v([0, 0, 0, 1]), v([0, 1, -1, 0])],
        17 | 18 => vec![v([0, 1, 0, 0]), v([0, 0, 1, 0]), v([1, 0, 0, 1])],
        19 | 20 => vec![v([0, 1, 0, 0]), v([0, 0, 1, 0]), v([1, 0, 0, -1])],
        _ => vec![v([1, 0, 0, 0]), v([0, 0, 0, 1]), v([0, 1, 1, 0])],
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NicholsRow {
    pub tag: String,
    pub hilbert: Vec<usize>,
    pub relations_match: Option<bool>,
}

/// Hilbert prefixes of `V1..V8` (degree 3) and `M1..M20` (degree 4), with relation checks for the latter.
pub fn nichols_table() -> Vec<NicholsRow> {
    YdTag::named()
        .into_iter()
        .map(|t| {
            let m = catalog_yd(t).expect("named tag");
            let (maxdeg, rel) = match t {
                YdTag::M(n) => (4, Some(core_nichols::relations_match(&braided_space(&m), &claimed_relations(n)))),
                _ => (3, None),
            };
            NicholsRow {
                tag: t.to_string(),
                hilbert: hilbert_prefix(&m, maxdeg).expect("small").dims,
                relations_match: rel,
            }
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct ExclusionRow {
    pub label: String,
    pub witness: Option<Vec<String>>,
    /// Whether any nonzero `v` over the algebraic closure has `c(v⊗v) = v⊗v`.
    pub witness_exists: bool,
    /// Nichols components in degrees `0..=6`.
    pub hilbert: Vec<usize>,
}

/// Every 2-dimensional simple object outside `M1..M20`, with its witness.
pub fn exclusion_witnesses() -> Vec<ExclusionRow> {
    let named: Vec<SimpleLabel> = (1..=20).filter_map(|n| YdTag::M(n).label()).collect();
    SimpleLabel::catalog()
        .into_iter()
        .filter(|l| l.dim() == 2 && !named.contains(l))
        .map(|l| {
            let m = catalog_yd(YdTag::Simple(l)).expect("catalog label");
            let b = braided_space(&m);
            ExclusionRow {
                label: l.to_string(),
                witness: eigenvalue_one_witness(&m).map(|w| w.iter().map(|c| c.to_string()).collect()),
                witness_exists: core_nichols::eigenvalue_one_exists_2d(&b).expect("dimension 2"),
                hilbert: core_nichols::hilbert_prefix(&b, 6, DEFAULT_CAP).expect("within cap").dims,
            }
        })
        .collect()
}

/// The summands of the families of the classification, by number.
pub fn family(n: usize) -> Option<Vec<&'static str>> {
    let f: &[&str] = match n {
        1 => &["V1", "V2", "V3", "V4", "V5", "V6", "V7", "V8"],
        2 => &["V3", "V4", "V7", "V8", "M1"],
        4 => &["V1", "V3", "V5", "V7", "M3"],
        5 => &["V1", "V4", "V5", "V8", "M4"],
        8 => &["V1", "V2", "V5", "V6", "M7"],
        14 => &["M1", "M1"],
        15 => &["M1", "M2"],
        16 => &["M1", "M7"],
        17 => &["M3", "M3"],
        18 => &["M3", "M5"],
        19 => &["M3", "M9"],
        20 => &["M4", "M4"],
        21 => &["M4", "M6"],
        22 => &["M7", "M7"],
        23 => &["M7", "M8"],
        24 => &["M13", "M13"],
        25 => &["M13", "M14"],
        26 => &["M15", "M15"],
        27 => &["M15", "M16"],
        28 => &["M17", "M17"],
        29 => &["M17", "M18"],
        30 => &["M2", "M2"],
        31 => &["M2", "M8"],
        32 => &["M4", "M10"],
        33 => &["M5", "M5"],
        34 => &["M5", "M11"],
        35 => &["M6", "M6"],
        36 => &["M6", "M12"],
        37 => &["M8", "M8"],
        38 => &["M9", "M9"],
        39 => &["M9", "M11"],
        40 => &["M10", "M10"],
        41 => &["M10", "M12"],
        42 => &["M11", "M11"],
        43 => &["M12", "M12"],
        44 => &["M14", "M14"],
        45 => &["M16", "M16"],
        46 => &["M18", "M18"],
        47 => &["M19", "M19"],
        48 => &["M19", "M20"],
        49 => &["M20", "M20"],
        _ => return None,
    };
    Some(f.to_vec())
}

/// Family numbers with a summand list.
pub fn family_numbers() -> Vec<usize> {
    [1, 2, 4, 5, 8].into_iter().chain(14..=49).collect()
}

pub fn family_module(n: usize) -> Option<YDModule> {
    family(n).map(|parts| {
        let ms: Vec<YDModule> = parts.iter().map(|p| tag(p)).collect();
        crate::yd::direct_sum(&ms).with_label(format!("Omega{n}"))
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct PairRow {
    pub left: String,
    pub right: String,
    pub expected: bool,
    pub actual: bool,
}

/// Pairs that must factorize (every pair of summands inside each family,
/// including each summand with itself) and pairs that must not.
pub fn factorization_pairs() -> Vec<(String, String, bool)> {
    let mut out = Vec::new();
    for n in family_numbers() {
        let parts = family(n).expect("listed");
        for i in 0..parts.len() {
            for j in i..parts.len() {
                out.push((parts[i].to_string(), parts[j].to_string(), true));
            }
        }
    }
    for v in 1..=8 {
        for m in 13..=20 {
            out.push((format!("V{v}"), format!("M{m}"), false));
        }
    }
    out.sort();
    out.dedup();
    out
}

pub fn factorization_table() -> Vec<PairRow> {
    factorization_pairs()
        .into_iter()
        .map(|(l, r, expected)| PairRow { actual: pair_factorization(&tag(&l), &tag(&r)), left: l, right: r, expected })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct GrowthEvidence {
    pub module: String,
    pub degree: usize,
    pub component_dim: usize,
    pub status: String,
}

/// Degree-`deg` component of `B(V1 ⊕ M)`; nonzero is evidence of infinite dimension, not a proof.
pub fn growth_evidence(m: &str, deg: usize) -> GrowthEvidence {
    let v = crate::yd::direct_sum(&[tag("V1"), tag(m)]);
    let dim = core_nichols::nichols_component_dim(deg, &braided_space(&v), DEFAULT_CAP).expect("within cap");
    GrowthEvidence {
        module: format!("V1+{m}"),
        degree: deg,
        component_dim: dim,
        status: if dim > 0 {
            format!("NOT CERTIFIED FINITE - evidence: nonzero component at degree {deg}")
        } else {
            "vanishes".to_string()
        },
    }
}
