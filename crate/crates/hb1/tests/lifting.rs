use hb1::lifting::*;
use hb1::yd::{catalog_yd, YDModule};
use hb1_core::linalg::{unit_vec, Mat};
use hb1_core::scalar::GaussRat;
use proptest::prelude::*;

fn q(n: i64) -> GaussRat {
    GaussRat::from_int(n)
}

fn mat(rows: &[&[i64]]) -> Param {
    Param::Matrix(rows.iter().map(|r| r.iter().map(|&c| q(c)).collect()).collect())
}

fn assert_verified(spec: &LiftingSpec, dim: usize) {
    let r = verify_lifting(spec).unwrap_or_else(|e| panic!("{spec}: {e}"));
    assert_eq!(r.dim, dim, "{spec}");
    for s in &r.stages {
        assert!(s.pass, "{spec}: stage {} failed: {}", s.stage, s.detail);
    }
}

#[test]
fn bosonization_of_m1_is_a_64_dimensional_hopf_algebra() {
    let h = bosonize_fdhopf(&catalog_yd("M1".parse().unwrap()).unwrap()).unwrap();
    assert_eq!(h.dim, 64);
    assert!(h.antipode.is_some());
    let rep = h.verify_hopf_axioms();
    assert!(rep.all_pass(), "{:?}", rep.failures());
}

#[test]
fn bosonization_of_omega25_is_a_256_dimensional_bialgebra() {
    let l = lifting(&LiftingSpec::new(Family::Omega25, &[])).unwrap();
    assert_eq!(l.hopf.dim(), 256);
    let h = l.hopf.to_fdhopf().unwrap();
    let rep = h.verify_hopf_axioms();
    assert!(rep.all_pass(), "{:?}", rep.failures());
    assert_verified(&LiftingSpec::new(Family::Omega25, &[]), 256);
}

#[test]
fn omega25_satisfies_the_stated_cross_relations() {
    let l = lifting(&LiftingSpec::new(Family::Omega25, &[])).unwrap();
    for rel in [
        "x q1 = - xi q1 x",
        "x q2 = xi q2 x",
        "t q1 = q2 x^2 t",
        "p1^2",
        "p1 p2 + p2 p1",
        "q1 q2 + q2 q1",
        "p1 q1 + q1 p1",
        "p1 q2 + q2 p1",
        "p2 q1 + q1 p2",
        "p2 q2 + q2 p2",
    ] {
        assert!(relation_holds(&l.hopf, rel).unwrap(), "{rel}");
    }
}

#[test]
fn bosonization_of_the_zero_module_is_h() {
    let b = bosonize(&YDModule::zero()).unwrap();
    assert_eq!(b.hopf.dim(), 16);
    assert_eq!(b.hilbert, vec![1, 0]);
    let h = bosonize_fdhopf(&YDModule::zero()).unwrap();
    assert!(h.verify_hopf_axioms().all_pass());
}

#[test]
fn bosonization_hilbert_series_and_derived_rules() {
    let v1 = bosonize(&catalog_yd("V1".parse().unwrap()).unwrap()).unwrap();
    assert_eq!((v1.hopf.dim(), v1.hilbert.clone()), (32, vec![1, 1, 0]));
    // The quadratic relations of M17 do not close up: the cube of a letter is a consequence.
    let m17 = bosonize(&catalog_yd("M17".parse().unwrap()).unwrap()).unwrap();
    assert_eq!(m17.hopf.dim(), 64);
    assert_eq!(m17.hopf.derived.len(), 1);
    assert!(relation_holds(&m17.hopf, "v1^3").unwrap());
}

#[test]
fn trivially_braided_line_is_not_certified_finite() {
    // Trivial action and coaction `v ↦ 1⊗v`, so the braiding is the flip.
    let coaction = Mat::from_cols(16, &[unit_vec(16, 0)]);
    let v = YDModule { dim: 1, action: [Mat::identity(1), Mat::identity(1), Mat::identity(1)], coaction, label: None };
    assert!(matches!(bosonize(&v), Err(LiftingError::NotCertifiedFinite(_))));
}

#[test]
fn required_instances_verify() {
    assert_verified(&LiftingSpec::new(Family::U(1), &[1, 0, 0, 0, 0, 0, 0, 0]).with("alpha", mat(&[&[1]])), 32);
    assert_verified(
        &LiftingSpec::new(Family::U(1), &[1, 1, 0, 0, 0, 0, 0, 0]).with("alpha", mat(&[&[3]])).with("beta", mat(&[&[-5]])),
        64,
    );
    assert_verified(&LiftingSpec::new(Family::U(2), &[0, 0, 0, 0]).with("nu", Param::int(1)), 64);
    for f in [4, 5, 8] {
        assert_verified(&LiftingSpec::new(Family::U(f), &[0, 0, 0, 0]), 64);
    }
    for f in [14, 17, 18, 20, 22, 23, 26, 28] {
        assert_verified(&LiftingSpec::scalars(Family::U(f), &[("lambda", 1), ("mu", 1), ("alpha", 1)]), 256);
    }
    assert_verified(&LiftingSpec::scalars(Family::U(24), &[("lambda", 1)]), 256);
}

#[test]
fn remaining_two_summand_families_verify() {
    for f in [15, 16, 19, 21, 27, 29] {
        assert_verified(&LiftingSpec::scalars(Family::U(f), &[("lambda", 2), ("mu", -3)]), 256);
    }
}

#[test]
fn families_with_one_dimensional_letters_verify_with_deformations() {
    let one = |n: usize| Param::Vector(vec![q(1); n]);
    assert_verified(
        &LiftingSpec::new(Family::U(2), &[2, 0, 0, 1])
            .with("nu", Param::int(1))
            .with("gamma", mat(&[&[1, 2], &[2, -1]]))
            .with("mu", mat(&[&[3]]))
            .with("lambda_k", one(2))
            .with("theta_r", one(1)),
        512,
    );
    assert_verified(
        &LiftingSpec::new(Family::U(5), &[1, 1, 1, 1])
            .with("nu", Param::int(2))
            .with("lambda_i", one(1))
            .with("kappa_l", one(1))
            .with("iota_m", one(1))
            .with("theta_r", one(1)),
        1024,
    );
    assert_verified(&LiftingSpec::new(Family::U(4), &[1, 0, 1, 0]).with("nu", Param::int(1)).with("zeta", mat(&[&[1]])), 256);
    assert_verified(&LiftingSpec::new(Family::U(8), &[0, 1, 0, 1]).with("nu", Param::int(1)).with("beta", mat(&[&[1]])), 256);
    assert_verified(
        &LiftingSpec::new(Family::U(1), &[0, 0, 2, 0, 0, 1, 0, 0]).with("gamma", mat(&[&[1, 1], &[1, 0]])),
        128,
    );
}

#[test]
fn deformed_relations_are_rules_of_the_presentation() {
    let l = lifting(&LiftingSpec::scalars(Family::U(14), &[("lambda", 0), ("mu", 0), ("alpha", 1)])).unwrap();
    assert!(relation_holds(&l.hopf, "p1 q1 + q1 p1 = 1 - x^2").unwrap());
    assert!(relation_holds(&l.hopf, "p2 q2 + q2 p2 = x^2 - 1").unwrap());
    assert!(!relation_holds(&l.hopf, "p1 q1 + q1 p1").unwrap());
    let l = lifting(
        &LiftingSpec::new(Family::U(2), &[1, 0, 0, 0]).with("lambda_k", Param::Vector(vec![q(1)])),
    )
    .unwrap();
    assert!(relation_holds(&l.hopf, "p1 C1 + C1 p1 = x + x^3 - 2").unwrap());
    assert!(relation_holds(&l.hopf, "p2 C1 + C1 p2 = x - x^3").unwrap());
}

#[test]
fn every_family_degenerates_to_its_bosonization() {
    let specs: Vec<LiftingSpec> = FAMILIES
        .iter()
        .map(|&f| match f.multiplicity_len() {
            8 => LiftingSpec::new(f, &[1, 1, 1, 1, 1, 1, 1, 1]),
            4 => LiftingSpec::new(f, &[1, 1, 1, 1]),
            _ => LiftingSpec::new(f, &[]),
        })
        .collect();
    for spec in specs {
        let r = degeneration_check(&spec).unwrap_or_else(|e| panic!("{spec}: {e}"));
        assert_eq!(r.lifting_dim, spec.expected_dim(), "{spec}");
        for c in &r.checks {
            assert!(c.pass, "{spec}: {} {}", c.stage, c.detail);
        }
    }
}

#[test]
fn scaling_witnesses_give_isomorphisms() {
    let w = IsoWitness::scaling(&[("p1", 2), ("p2", 2), ("q1", 3), ("q2", 3)]);
    let a = lifting(&LiftingSpec::scalars(Family::U(15), &[("lambda", 4), ("mu", 9)])).unwrap();
    let b = lifting(&LiftingSpec::scalars(Family::U(15), &[("lambda", 1), ("mu", 1)])).unwrap();
    assert!(iso_from_witness(&a, &b, &w).unwrap().holds());
    let a = lifting(&LiftingSpec::scalars(Family::U(18), &[("lambda", 4), ("mu", 9), ("alpha", 6)])).unwrap();
    let b = lifting(&LiftingSpec::scalars(Family::U(18), &[("lambda", 1), ("mu", 1), ("alpha", 1)])).unwrap();
    assert!(iso_from_witness(&a, &b, &w).unwrap().holds());
    // Scaling the wrong way round does not preserve the relations.
    assert!(!iso_from_witness(&b, &a, &w).unwrap().holds());
}

#[test]
fn identity_witness_separates_different_parameters() {
    let a = lifting(&LiftingSpec::scalars(Family::U(14), &[("lambda", 1), ("mu", 1), ("alpha", 1)])).unwrap();
    let b = lifting(&LiftingSpec::scalars(Family::U(14), &[("lambda", 1), ("mu", 1), ("alpha", 0)])).unwrap();
    let v = iso_from_witness(&a, &b, &IsoWitness::identity(&a)).unwrap();
    assert!(!v.holds());
    assert!(!v.relations_preserved);
    assert!(v.first_failure.is_some());
}

#[test]
fn identity_witness_holds_for_verified_specs() {
    let specs = [
        LiftingSpec::new(Family::U(1), &[1, 1, 0, 0, 0, 0, 0, 0]).with("alpha", mat(&[&[1]])),
        LiftingSpec::new(Family::U(2), &[0, 0, 0, 0]).with("nu", Param::int(1)),
        LiftingSpec::new(Family::U(8), &[0, 0, 0, 0]),
        LiftingSpec::scalars(Family::U(24), &[("lambda", 1)]),
        LiftingSpec::scalars(Family::U(28), &[("lambda", 1), ("mu", 2), ("alpha", 1)]),
        LiftingSpec::new(Family::Omega25, &[]),
    ];
    for s in specs {
        let l = lifting(&s).unwrap();
        assert!(iso_from_witness(&l, &l, &IsoWitness::identity(&l)).unwrap().holds(), "{s}");
    }
}

#[test]
fn witness_with_automorphism_of_h() {
    // τ_k composed with the identity on letters is not a map of these algebras for every k,
    // but the verdict must always be computed without error.
    let l = lifting(&LiftingSpec::scalars(Family::U(14), &[("lambda", 1), ("mu", 1), ("alpha", 1)])).unwrap();
    let mut w = IsoWitness::identity(&l);
    for k in 1..=32 {
        w.tau = k;
        iso_from_witness(&l, &l, &w).unwrap();
    }
    w.tau = 33;
    assert!(matches!(iso_from_witness(&l, &l, &w), Err(LiftingError::WitnessShape(_))));
}

#[test]
fn witness_shape_errors() {
    let a = lifting(&LiftingSpec::scalars(Family::U(14), &[("lambda", 1)])).unwrap();
    let b = lifting(&LiftingSpec::new(Family::U(4), &[0, 0, 0, 0])).unwrap();
    let mut w = IsoWitness::identity(&a);
    w.images.remove("q2");
    assert!(matches!(iso_from_witness(&a, &a, &w), Err(LiftingError::WitnessShape(_))));
    assert!(matches!(iso_from_witness(&a, &b, &IsoWitness::identity(&a)), Err(LiftingError::WitnessShape(_))));
    let mut w = IsoWitness::identity(&a);
    w.images.insert("r1".into(), "p1".into());
    assert!(matches!(iso_from_witness(&a, &a, &w), Err(LiftingError::WitnessShape(_))));
}

#[test]
fn spec_errors() {
    assert!(matches!("3".parse::<Family>(), Err(LiftingError::UnknownFamily(_))));
    assert!(matches!("U30".parse::<Family>(), Err(LiftingError::UnknownFamily(_))));
    assert_eq!("Omega25".parse::<Family>().unwrap(), Family::Omega25);
    assert_eq!("U_14".parse::<Family>().unwrap(), Family::U(14));
    let shape = |s: LiftingSpec| matches!(build_lifting(&s), Err(LiftingError::ShapeMismatch(_)));
    assert!(shape(LiftingSpec::new(Family::U(2), &[0, 0, 0])));
    assert!(shape(LiftingSpec::new(Family::U(1), &[0; 8])));
    assert!(shape(LiftingSpec::new(Family::U(2), &[2, 0, 0, 0]).with("gamma", mat(&[&[1]]))));
    assert!(shape(LiftingSpec::new(Family::U(2), &[2, 0, 0, 0]).with("lambda_k", Param::Vector(vec![q(1)]))));
    assert!(shape(LiftingSpec::scalars(Family::U(14), &[("nu", 1)])));
    assert!(shape(LiftingSpec::new(Family::U(14), &[]).with("alpha", Param::Vector(vec![q(1)]))));
}

#[test]
fn asymmetric_matrices_are_symmetrized_with_a_warning() {
    let s = LiftingSpec::new(Family::U(1), &[2, 0, 0, 0, 0, 0, 0, 0]).with("alpha", mat(&[&[0, 2], &[0, 0]]));
    let l = lifting(&s).unwrap();
    assert_eq!(l.warnings.len(), 1);
    assert!(relation_holds(&l.hopf, "A1 A2 + A2 A1 = 1 - x^2").unwrap());
}

#[test]
fn spec_json_round_trip() {
    let v = serde_json::json!({"family": 14, "params": {"lambda": 1, "mu": "1/2", "alpha": "i"}});
    let s = LiftingSpec::from_json(&v).unwrap();
    assert_eq!(s.family, Family::U(14));
    assert_eq!(s.params["mu"], Param::Scalar("1/2".parse().unwrap()));
    let v = serde_json::json!({"family": "U2", "multiplicities": [1, 0, 0, 0], "params": {"gamma": [[1]], "lambda_k": [2]}});
    let s = LiftingSpec::from_json(&v).unwrap();
    assert_eq!(s.params["gamma"], mat(&[&[1]]));
    assert_eq!(s.params["lambda_k"], Param::Vector(vec![q(2)]));
    assert!(LiftingSpec::from_json(&serde_json::json!({"family": 3})).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    /// Rescaling the letters of `U14(a²λ, b²μ, abα)` by `a` and `b` lands in `U14(λ, μ, α)`.
    #[test]
    fn u14_scaling_is_an_isomorphism(a in 1i64..4, b in 1i64..4, lam in -2i64..3, mu in -2i64..3, al in -2i64..3) {
        let src = lifting(&LiftingSpec::scalars(Family::U(14), &[("lambda", a * a * lam), ("mu", b * b * mu), ("alpha", a * b * al)])).unwrap();
        let dst = lifting(&LiftingSpec::scalars(Family::U(14), &[("lambda", lam), ("mu", mu), ("alpha", al)])).unwrap();
        let w = IsoWitness::scaling(&[("p1", a), ("p2", a), ("q1", b), ("q2", b)]);
        prop_assert!(iso_from_witness(&src, &dst, &w).unwrap().holds());
    }

    /// Every member of a two-summand family is a Hopf ideal quotient of dimension 256.
    #[test]
    fn random_parameters_keep_the_dimension(f in prop::sample::select(vec![14u8, 17, 20, 22, 26, 28]), lam in -2i64..3, mu in -2i64..3, al in -2i64..3) {
        let s = LiftingSpec::scalars(Family::U(f), &[("lambda", lam), ("mu", mu), ("alpha", al)]);
        let r = verify_lifting(&s).unwrap();
        prop_assert!(r.all_pass(), "{:?}", r.stages);
    }
}
