use hb1::kashina::*;

#[test]
fn h_passes_all_checks() {
    let h = build_h();
    for c in verify_h_structure(&h) {
        assert!(c.pass, "{}", c.name);
    }
}

#[test]
fn dual_generators_satisfy_relations() {
    let dual = build_h().dual();
    for c in verify_dual_generators(&dual, &build_dual_generators()) {
        assert!(c.pass, "{}", c.name);
    }
}

#[test]
fn table1_automorphisms() {
    let r = verify_automorphisms();
    for (k, e) in r.entries.iter().enumerate() {
        assert!(e.is_none(), "entry {}: {:?}", k + 1, e);
    }
    assert!(r.pairwise_distinct);
    assert!(r.closed_under_composition);
    assert!(automorphism_matrix(1).unwrap().is_identity());
}
