use std::collections::HashMap;

use hb1::kashina::{h_generators, h_letter_comult, h_levels, h_presentation, kashina, H_RELATIONS};
use hb1::lifting::{lifting, Family, LiftingSpec};
use hb1_core::presentation::{CoalgebraData, LinComb, PresentedAlgebra, Presentation, Strategy};
use hb1_core::scalar::GaussRat;
use proptest::prelude::*;

#[test]
fn h_is_confluent_with_sixteen_normal_words() {
    let p = h_presentation();
    assert!(p.check_confluence().is_empty());
    let basis = p.enumerate_basis(100).unwrap();
    assert_eq!(basis.len(), 16);
    let names: Vec<String> = basis.iter().map(|w| p.word_string(w)).collect();
    assert!(names.contains(&"x^3 y t".to_string()), "{names:?}");
}

#[test]
fn products_in_h() {
    let k = kashina();
    assert_eq!(k.hopf.mul(&k.elem("x t"), &k.elem("x")), k.elem("t"));
    assert_eq!(k.hopf.mul(&k.elem("t"), &k.elem("x")), k.elem("x^3 t"));
    assert_eq!(k.hopf.mul(&k.elem("y t"), &k.elem("y t")), k.elem("1"));
}

#[test]
fn corrupted_sign_is_caught() {
    // `t x = - x^3 t` still gives a confluent 16-dimensional algebra, but the
    // comultiplication of `H` no longer respects it.
    let mut p = Presentation::new(h_generators(), h_levels()).unwrap();
    for r in H_RELATIONS {
        let r = if r == "t x = x^3 t" { "t x = - x^3 t" } else { r };
        p.add_relation_str(r, &HashMap::new()).unwrap();
    }
    assert!(p.check_confluence().is_empty());
    let alg = PresentedAlgebra::new(p, 64).unwrap();
    assert_eq!(alg.dim(), 16);
    let coalg = CoalgebraData { comult: h_letter_comult(), counit: vec![GaussRat::one(); 3] };
    let (bad_delta, _) = coalg.relation_defects(&alg);
    let names: Vec<String> = bad_delta.iter().map(|&k| alg.pres.word_string(&alg.pres.rules[k].lhs)).collect();
    assert_eq!(names, vec!["t x".to_string()]);

    let honest = PresentedAlgebra::new(h_presentation(), 64).unwrap();
    assert!(coalg.relation_defects(&honest).0.is_empty());
}

fn word_lc(w: Vec<u8>) -> LinComb {
    [(w, GaussRat::one())].into_iter().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn h_normal_form_is_strategy_independent(w in prop::collection::vec(0u8..3, 0..12), seed in any::<u64>()) {
        let p = h_presentation();
        let lc = word_lc(w);
        let a = p.normal_form_with(&lc, Strategy::Leftmost);
        prop_assert_eq!(&a, &p.normal_form_with(&lc, Strategy::Random(seed)));
        prop_assert_eq!(p.normal_form(&a), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn lifting_normal_form_is_strategy_independent(w in prop::collection::vec(0u8..7, 0..8), seed in any::<u64>()) {
        static SPEC: std::sync::OnceLock<hb1::lifting::Lifting> = std::sync::OnceLock::new();
        let l = SPEC.get_or_init(|| lifting(&LiftingSpec::scalars(Family::U(14), &[("lambda", 1), ("mu", 2), ("alpha", 3)])).unwrap());
        let p = &l.hopf.alg.pres;
        let lc = word_lc(w);
        let a = p.normal_form_with(&lc, Strategy::Leftmost);
        prop_assert_eq!(&a, &p.normal_form_with(&lc, Strategy::Random(seed)));
        prop_assert_eq!(p.normal_form(&a), a);
    }
}
