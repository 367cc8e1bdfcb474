use std::collections::HashMap;

use hb1_core::presentation::{
    CoalgebraData, GeneratorSymbol, PresentedAlgebra, Presentation, PresentationError, SegmentDir, Sort, Strategy,
};
use hb1_core::scalar::GaussRat;
use proptest::prelude::*;

/// A group-like `g` of order 4, a letter `v` with `g v = −v g` and
/// `v^2 = 1 − g^2`, and a letter `w` one level up with `w^2 = 0`, commuting
/// with `g` and anticommuting with `v`. Dimension 16.
fn sample() -> Presentation {
    let gens = vec![
        GeneratorSymbol::new("g", Sort::GroupLike, 0),
        GeneratorSymbol::new("v", Sort::Yd, 1),
        GeneratorSymbol::new("w", Sort::Yd, 2),
    ];
    let mut p = Presentation::new(gens, vec![SegmentDir::LeftFirst, SegmentDir::RightFirst, SegmentDir::LeftFirst]).unwrap();
    let none = HashMap::new();
    for r in RELATIONS {
        p.add_relation_str(r, &none).unwrap();
    }
    p
}

const RELATIONS: [&str; 6] = ["g^4 = 1", "g v = - v g", "v^2 = 1 - g^2", "g w = w g", "v w = - w v", "w^2"];

#[test]
fn sample_is_confluent_with_expected_basis() {
    let p = sample();
    assert!(p.check_confluence().is_empty());
    assert_eq!(p.enumerate_basis(1000).unwrap().len(), 16);
}

#[test]
fn words_with_more_top_letters_are_larger() {
    // Regression: a word without top-level letters must sit below one with them,
    // whatever the lengths involved.
    let p = sample();
    let (g, w) = (p.letter("g")[0], p.letter("w")[0]);
    assert_eq!(p.cmp_words(&[g, g, g, g, g], &[w]), std::cmp::Ordering::Less);
    assert_eq!(p.cmp_words(&[p.letter("v")[0]; 3], &[w]), std::cmp::Ordering::Less);
    let mut q = sample();
    let rel = q.parse_relation("w w = g^3 + g^2 v", &HashMap::new()).unwrap();
    q.rules.clear();
    q.add_relation(&rel).unwrap();
    assert_eq!(q.rules[0].lhs, vec![w, w]);
}

#[test]
fn increasing_rules_are_rejected() {
    let mut p = sample();
    let (g, w) = (p.letter("g")[0], p.letter("w")[0]);
    let rhs = [(vec![w], GaussRat::one())].into_iter().collect();
    assert!(matches!(p.add_rule(vec![g], rhs), Err(PresentationError::NotDecreasing(..))));
}

#[test]
fn corrupted_sign_breaks_confluence() {
    // `v^2 = 1 + g` leaves the overlap `v^3` unresolved: `v (1 + g)` and `(1 + g) v` differ by `2 v g`.
    let p = sample();
    let mut q = Presentation::new(p.generators.clone(), p.levels.clone()).unwrap();
    for r in RELATIONS {
        let r = if r.starts_with("v^2") { "v^2 = 1 + g" } else { r };
        q.add_relation_str(r, &HashMap::new()).unwrap();
    }
    assert!(!q.check_confluence().is_empty());
}

#[test]
fn presented_algebra_multiplies_and_evaluates() {
    let a = PresentedAlgebra::new(sample(), 1000).unwrap();
    assert_eq!(a.dim(), 16);
    let none = HashMap::new();
    let v = a.eval(&a.pres.parse_expr("v", &none).unwrap());
    let vv = a.mul(&v, &v);
    assert_eq!(vv, a.eval(&a.pres.parse_expr("1 - g^2", &none).unwrap()));
    let unit = a.unit();
    assert_eq!(a.mul(&unit, &v), v);
}

#[test]
fn coalgebra_data_checks_relations() {
    // Δ(g) = g⊗g, Δ(v) = v⊗1 + g⊗v, Δ(w) = w⊗1 + 1⊗w: `v^2 = 1 − g^2` is compatible
    // with Δ, while `Δ(w^2) = 2 w⊗w ≠ 0`.
    let a = PresentedAlgebra::new(sample(), 1000).unwrap();
    let one = GaussRat::one();
    let (g, v, w) = (0u8, 1u8, 2u8);
    let comult = vec![
        vec![(one.clone(), vec![g], vec![g])],
        vec![(one.clone(), vec![v], vec![]), (one.clone(), vec![g], vec![v])],
        vec![(one.clone(), vec![w], vec![]), (one.clone(), vec![], vec![w])],
    ];
    let data = CoalgebraData { comult, counit: vec![one, GaussRat::zero(), GaussRat::zero()] };
    let (bad_delta, _) = data.relation_defects(&a);
    let names: Vec<String> = bad_delta.iter().map(|&k| a.pres.word_string(&a.pres.rules[k].lhs)).collect();
    assert!(names.contains(&"w^2".to_string()), "{names:?}");
    assert!(!names.contains(&"v^2".to_string()), "{names:?}");
}

#[test]
fn empty_presentation_is_the_field() {
    let p = Presentation::new(vec![], vec![]).unwrap();
    assert_eq!(p.enumerate_basis(4).unwrap().len(), 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn normal_form_is_strategy_independent_and_idempotent(word in prop::collection::vec(0u8..3, 0..9), seed in any::<u64>()) {
        let p = sample();
        let lc = [(word, GaussRat::one())].into_iter().collect();
        let a = p.normal_form_with(&lc, Strategy::Leftmost);
        let b = p.normal_form_with(&lc, Strategy::Random(seed));
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(p.normal_form(&a), a.clone());
        prop_assert!(a.keys().all(|w| p.is_normal(w)));
    }
}
