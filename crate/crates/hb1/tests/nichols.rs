use hb1::double::SimpleLabel;
use hb1::nichols::*;
use hb1::yd::{catalog_yd, direct_sum, YDModule, YdTag};
use hb1_core::linalg::same_span;
use hb1_core::nichols::{
    braided_lift, braided_lift_word, eigenvalue_one_exists_2d, line_survives, quantum_symmetrizer, DEFAULT_CAP,
};
use hb1_core::scalar::GaussRat;

fn tag(s: &str) -> YDModule {
    catalog_yd(s.parse().unwrap()).unwrap()
}

#[test]
fn hilbert_prefixes_and_relations() {
    for row in nichols_table() {
        if row.tag.starts_with('M') {
            assert_eq!(row.hilbert, vec![1, 2, 1, 0, 0], "{}", row.tag);
            assert_eq!(row.relations_match, Some(true), "{}", row.tag);
        } else {
            assert_eq!(row.hilbert, vec![1, 1, 0, 0], "{}", row.tag);
        }
    }
}

#[test]
fn relation_sign_split_is_exact() {
    // The commutator list must not match an anticommutator module and vice versa.
    assert!(!same_span(&quadratic_relations(&tag("M1")), &claimed_relations(4)));
    assert!(!same_span(&quadratic_relations(&tag("M4")), &claimed_relations(1)));
    assert!(!same_span(&quadratic_relations(&tag("M17")), &claimed_relations(19)));
    assert!(!same_span(&quadratic_relations(&tag("M19")), &claimed_relations(17)));
}

#[test]
fn symmetrizer_small_cases() {
    let v1 = braided_space(&tag("V1"));
    assert!(quantum_symmetrizer(2, &v1, DEFAULT_CAP).unwrap().is_zero());
    let triv = braided_space(&tag("chi(0,0,0,0)"));
    assert_eq!(quantum_symmetrizer(2, &triv, DEFAULT_CAP).unwrap().rank(), 1);
    assert!(quantum_symmetrizer(1, &braided_space(&tag("M13")), DEFAULT_CAP).unwrap().is_identity());
    assert!(quantum_symmetrizer(13, &braided_space(&tag("M13")), DEFAULT_CAP).is_err());
}

#[test]
fn lift_is_reduced_word_independent() {
    for t in ["M13", "M17", "M1"] {
        let b = braided_space(&tag(t));
        assert_eq!(braided_lift_word(&[0, 1, 0], 3, &b), braided_lift_word(&[1, 0, 1], 3, &b), "{t}");
        // Longest element of S4 via two reduced words.
        let w1 = [0, 1, 0, 2, 1, 0];
        let w2 = [2, 1, 2, 0, 1, 2];
        assert_eq!(braided_lift_word(&w1, 4, &b), braided_lift_word(&w2, 4, &b), "{t}");
        assert!(braided_lift(&[0, 1, 2], &b).is_identity());
        assert_eq!(braided_lift(&[3, 2, 1, 0], &b), braided_lift_word(&w1, 4, &b));
    }
}

#[test]
fn exclusion_witnesses_where_they_exist() {
    let rows = exclusion_witnesses();
    assert_eq!(rows.len(), 36);
    for r in &rows {
        // Whenever a solution exists over the closure, the search finds one in Q(i).
        assert_eq!(r.witness.is_some(), r.witness_exists, "{}", r.label);
        // Growth through degree 6 for every excluded module.
        assert!(r.hilbert.iter().all(|&d| d > 0), "{}", r.label);
    }
    let v = catalog_yd(YdTag::Simple(SimpleLabel::V { i: 0, j: 0, k: 0, l: 0, m: 0, n: 1 })).unwrap();
    assert_eq!(eigenvalue_one_witness(&v), Some(vec![GaussRat::one(), GaussRat::zero()]));
    assert!(eigenvalue_one_witness(&tag("chi(0,0,0,0)")).is_some());
    assert!(eigenvalue_one_witness(&tag("M1")).is_none());
}

#[test]
fn odd_w_and_u_have_no_square_eigenvector() {
    for l in SimpleLabel::catalog() {
        let odd = match l {
            SimpleLabel::W { k, .. } => k % 2 == 1,
            SimpleLabel::U { j, .. } => j % 2 == 1,
            _ => false,
        };
        if odd {
            let b = braided_space(&catalog_yd(YdTag::Simple(l)).unwrap());
            assert_eq!(eigenvalue_one_exists_2d(&b), Some(false), "{l}");
        }
    }
}

#[test]
fn witness_lines_survive() {
    for r in exclusion_witnesses() {
        if let Some(w) = r.witness {
            let w: Vec<GaussRat> = w.iter().map(|s| s.parse().unwrap()).collect();
            let label: YdTag = r.label.parse().unwrap();
            let b = braided_space(&catalog_yd(label).unwrap());
            assert!(line_survives(&b, &w, 4).iter().all(|&x| x), "{}", r.label);
        }
    }
}

#[test]
fn factorization_expectations() {
    let bad: Vec<_> = factorization_table().into_iter().filter(|r| r.actual != r.expected).collect();
    assert!(bad.is_empty(), "{bad:?}");
    assert!(pair_factorization(&tag("V1"), &tag("V2")));
    assert!(!pair_factorization(&tag("V1"), &tag("M17")));
    assert!(pair_factorization(&tag("M7"), &tag("chi(0,0,0,0)")));
}

#[test]
fn families_are_braided() {
    for n in family_numbers() {
        let m = family_module(n).unwrap();
        assert!(hb1::yd::is_yd(&m), "family {n}");
        if m.dim <= 4 {
            assert!(hb1::yd::verify_braid_equation(&m), "family {n}");
        }
    }
}

#[test]
fn growth_evidence_for_mixed_sums() {
    for m in ["M13", "M17"] {
        let g = growth_evidence(m, 4);
        assert!(g.component_dim > 0);
        assert!(g.status.starts_with("NOT CERTIFIED FINITE"));
    }
}

#[test]
fn diagonal_braidings() {
    let s = direct_sum(&[tag("V1"), tag("M13")]);
    let q = diagonal_data(&s).expect("diagonal");
    assert_eq!(q[0][0], GaussRat::from_int(-1));
    // V1 = chi(1,1,0,0): j = 1, l = 0, so both edge labels are (-1)^(l+1) xi^j = -i.
    let minus_i = -GaussRat::i();
    assert_eq!(&q[0][1] * &q[1][0], minus_i);
    assert_eq!(&q[0][2] * &q[2][0], minus_i);
    assert_eq!(q[1][1], GaussRat::from_int(-1));
    assert_eq!(q[2][2], GaussRat::from_int(-1));
    assert!(diagonal_data(&tag("M17")).is_none());
    assert_eq!(diagonal_data(&tag("V3")).unwrap().len(), 1);
}
