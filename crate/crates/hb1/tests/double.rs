use hb1::double::*;

#[test]
fn double_is_hopf_of_dim_256() {
    let d = &double().hopf;
    assert_eq!(d.dim, DIM_D);
    let rep = d.verify_hopf_axioms();
    assert!(rep.all_pass(), "{:?}", rep.failures());
}

#[test]
fn presentation_relations_hold() {
    let d = &double().hopf;
    let checks = verify_double_presentation(d);
    let bad: Vec<_> = checks.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect();
    assert!(bad.is_empty(), "{bad:?}");
    assert_eq!(checks.len(), 30);
}

#[test]
fn corrupted_relation_fails() {
    let d = &double().hopf;
    let gens: Vec<_> = d.generators.iter().map(|(_, g)| g.clone()).collect();
    assert!(relation_holds_in(d, &gens, "t d = a d y t"));
    assert!(!relation_holds_in(d, &gens, "t d = - a d y t"));
}

#[test]
fn census_of_simple_modules() {
    let r = census();
    assert_eq!(r.count, 88);
    assert_eq!(r.one_dim, 32);
    assert_eq!(r.two_dim, 56);
    assert_eq!(r.sum_of_squares, 256);
    for e in &r.entries {
        assert!(e.is_module && e.simple, "{}", e.label);
    }
    assert!(r.pairwise_non_isomorphic, "{:?}", r.duplicates);
}

#[test]
fn template_isomorphisms_hold() {
    for (p, q) in iso_rule_instances() {
        let (mp, mq) = (template_module(p), template_module(q));
        assert!(verify_rep(&mp).is_empty() && verify_rep(&mq).is_empty(), "{p} {q}");
        assert!(are_isomorphic(&mp, &mq), "{p} vs {q}");
        let t = intertwiner(&mp, &mq).expect("intertwiner");
        for (a, b) in mp.mats.iter().zip(&mq.mats) {
            assert_eq!(&t * a, b * &t);
        }
    }
}

#[test]
fn reducible_v_template_is_not_simple() {
    let v = SimpleLabel::V { i: 0, j: 0, k: 0, l: 0, m: 0, n: 0 };
    assert!(simple_module(v).is_err());
    let r = template_module(v);
    assert!(verify_rep(&r).is_empty());
    assert!(!is_simple(&r));
}

#[test]
fn out_of_range_labels_rejected() {
    assert!(simple_module(SimpleLabel::W { i: 3, j: 0, k: 0, l: 0 }).is_err());
    assert!(simple_module(SimpleLabel::Char { i: 0, j: 4, k: 0, l: 0 }).is_err());
    assert!(simple_module(SimpleLabel::U { i: 1, j: 0, k: 2, l: 0 }).is_err());
}
