use hb1_core::hopf::FDHopf;
use hb1_core::scalar::GaussRat;
use hb1_core::sparse::{basis_vec, SVec, STensor};

/// Sweedler's 4-dimensional Hopf algebra: basis `1, g, v, gv`, `g^2 = 1`,
/// `v^2 = 0`, `v g = −g v`, `Δ(v) = v⊗1 + g⊗v`.
fn sweedler() -> FDHopf {
    let one = GaussRat::one();
    let m1 = -one.clone();
    // Basis element k = g^a v^b with k = a + 2b.
    let mut mult = vec![SVec::new(); 16];
    for i in 0..4 {
        for j in 0..4 {
            let (a1, b1, a2, b2) = (i % 2, i / 2, j % 2, j / 2);
            if b1 + b2 > 1 {
                continue;
            }
            // g^a1 v^b1 g^a2 v^b2 = (−1)^{b1 a2} g^{a1+a2} v^{b1+b2}
            let c = if b1 * a2 == 1 { m1.clone() } else { one.clone() };
            mult[i * 4 + j] = SVec::from([(((a1 + a2) % 2) + 2 * (b1 + b2), c)]);
        }
    }
    let comult: Vec<STensor> = vec![
        STensor::from([((0, 0), one.clone())]),
        STensor::from([((1, 1), one.clone())]),
        STensor::from([((2, 0), one.clone()), ((1, 2), one.clone())]),
        // Δ(g v) = g v ⊗ g + 1 ⊗ g v
        STensor::from([((3, 1), one.clone()), ((0, 3), one.clone())]),
    ];
    let counit = vec![one.clone(), one, GaussRat::zero(), GaussRat::zero()];
    let labels = ["1", "g", "v", "gv"].iter().map(|s| s.to_string()).collect();
    FDHopf::new(labels, mult, basis_vec(0), comult, counit).unwrap()
}

#[test]
fn sweedler_is_hopf_with_solved_antipode() {
    let h = sweedler();
    let s = h.solve_antipode().unwrap();
    let h = h.with_antipode(s);
    let rep = h.verify_hopf_axioms();
    assert!(rep.all_pass(), "{:?}", rep.failures());
    // S(v) = −g v.
    assert_eq!(h.antipode_of(&basis_vec(2)).unwrap(), SVec::from([(3, -GaussRat::one())]));
}

#[test]
fn antipode_inverts_grouplikes() {
    let h = sweedler();
    let h = h.clone().with_antipode(h.solve_antipode().unwrap());
    for g in h.grouplikes() {
        let sg = h.antipode_of(&g).unwrap();
        assert_eq!(h.mul(&sg, &g), h.unit.clone());
    }
    assert_eq!(h.grouplikes().len(), 2);
}

#[test]
fn dual_and_opposites_are_involutive() {
    let h = sweedler();
    let h = h.clone().with_antipode(h.solve_antipode().unwrap());
    let d = h.dual();
    assert!(d.verify_hopf_axioms().all_pass());
    let dd = d.dual();
    assert_eq!(dd.mult, h.mult);
    assert_eq!(dd.comult, h.comult);
    assert_eq!(h.op().op().mult, h.mult);
    assert_eq!(h.cop().cop().comult, h.comult);
    assert!(h.op().cop().verify_hopf_axioms().all_pass());
}

#[test]
fn skew_primitives() {
    let h = sweedler();
    let one = basis_vec(0);
    let g = basis_vec(1);
    // P_{1,g} is spanned by 1 − g and v.
    assert_eq!(h.skew_primitive_space(&one, &g).dim(), 2);
}

#[test]
fn corrupted_structure_is_reported() {
    let mut h = sweedler();
    h.comult[2] = STensor::from([((2, 0), GaussRat::one()), ((0, 2), GaussRat::one())]);
    let rep = h.verify_hopf_axioms();
    assert!(!rep.all_pass());
}
