use hb1::double::{simple_module, SimpleLabel};
use hb1::yd::*;
use hb1_core::scalar::GaussRat;

#[test]
fn catalog_matches_double_and_is_yd() {
    let entries = verify_catalog();
    assert_eq!(entries.len(), 88);
    let bad: Vec<_> = entries.iter().filter(|e| !(e.yd && e.braid_equation && e.matches_double)).collect();
    assert!(bad.is_empty(), "{bad:#?}");
}

fn tag(s: &str) -> YDModule {
    catalog_yd(s.parse().unwrap()).unwrap()
}

#[test]
fn character_braiding_scalars() {
    for i in 0..2u8 {
        for j in 0..4u8 {
            for k in 0..2u8 {
                for l in 0..2u8 {
                    let v = catalog_yd(YdTag::Simple(SimpleLabel::Char { i, j, k, l })).unwrap();
                    let c = braiding(&v, &v);
                    assert_eq!(c[(0, 0)], GaussRat::sign(((i + l) * j) as i64), "chi({i},{j},{k},{l})");
                }
            }
        }
    }
    assert_eq!(braiding(&tag("V1"), &tag("V1"))[(0, 0)], GaussRat::from_int(-1));
    assert_eq!(braiding(&tag("chi(0,0,0,0)"), &tag("chi(0,0,0,0)"))[(0, 0)], GaussRat::one());
}

#[test]
fn spec_coaction_examples() {
    let kh = hb1::kashina::kashina();
    let m1 = tag("M1");
    // δ(v1) = 1/2 (1+x^2) y ⊗ v1 + 1/2 (1-x^2) y ⊗ v2.
    for (s, expr) in [(0, "1/2 (1 + x^2) y"), (1, "1/2 (1 - x^2) y")] {
        let want = kh.elem(expr);
        for h in 0..16 {
            assert_eq!(m1.coaction[(h * 2 + s, 0)], want.get(&h).cloned().unwrap_or_default());
        }
    }
    let m17 = tag("M17");
    for (s, expr) in [(0, "1/2 (1 + x^2) t"), (1, "-1/2 (1 - x^2) y t")] {
        let want = kh.elem(expr);
        for h in 0..16 {
            assert_eq!(m17.coaction[(h * 2 + s, 0)], want.get(&h).cloned().unwrap_or_default());
        }
    }
    let m13 = tag("M13");
    let x2 = kh.elem("x^2");
    for h in 0..16 {
        assert_eq!(m13.coaction[(h * 2 + 1, 1)], x2.get(&h).cloned().unwrap_or_default());
        assert!(m13.coaction[(h * 2, 1)].is_zero());
    }
    let w = from_double_rep(&simple_module(SimpleLabel::W { i: 1, j: 0, k: 0, l: 0 }).unwrap());
    assert!(w.coaction[(0, 0)].is_one());
    assert!(w.coaction[(4 * 2 + 1, 1)].is_one());
}

#[test]
fn tags_parse_and_reject() {
    assert!("M21".parse::<YdTag>().is_err());
    assert!("V9".parse::<YdTag>().is_err());
    assert!("W(3,0,0,0)".parse::<YdTag>().is_err());
    assert_eq!("M_17".parse::<YdTag>().unwrap(), YdTag::M(17));
    assert!(catalog_yd(YdTag::M(0)).is_err());
}

#[test]
fn corrupted_coaction_fails_yd() {
    let mut m = tag("M13");
    m.coaction[(2, 0)] = GaussRat::one();
    assert!(!is_yd(&m));
    let mut v = tag("M1");
    v.action[0][(0, 0)] = GaussRat::from_int(-1);
    assert!(!is_yd(&v));
}

#[test]
fn braid_equation_on_sums() {
    assert!(verify_braid_equation(&tag("M13")));
    let s = direct_sum(&[tag("M17"), tag("V1")]);
    assert!(is_yd(&s));
    assert!(verify_braid_equation(&s));
    assert!(braiding(&s, &s).is_invertible());
}

#[test]
fn direct_sum_shapes() {
    assert_eq!(direct_sum(&[tag("M1"), tag("M1")]).dim, 4);
    let o2 = direct_sum(&[tag("V3"), tag("V4"), tag("V7"), tag("V8"), tag("M1")]);
    assert_eq!(o2.dim, 6);
    assert!(is_yd(&o2));
    assert_eq!(direct_sum(&[]).dim, 0);
}

#[test]
fn twists_give_catalog_objects() {
    for (src, k, dst) in [("V1", 17, "V3"), ("M2", 17, "M1"), ("M3", 5, "M5"), ("M13", 9, "M14"), ("M17", 5, "M18")] {
        let tw = twist(&tag(src), k).unwrap();
        assert!(is_yd(&tw), "{src}");
        let target = tag(dst);
        let t = yd_iso(&tw, &target).unwrap_or_else(|| panic!("{src}^{k} vs {dst}"));
        assert!(is_yd_morphism(&tw, &target, &t));
    }
    let v = tag("M7");
    assert_eq!(twist(&v, 1).unwrap().coaction, v.coaction);
    assert!(twist(&v, 33).is_err());
}

#[test]
fn twist_preserves_braiding_matrices() {
    let pairs = [("M1", "M2"), ("V1", "M17"), ("M13", "M13")];
    for k in [2, 5, 9, 17, 32] {
        for (a, b) in pairs {
            let (va, vb) = (tag(a), tag(b));
            let (ta, tb) = (twist(&va, k).unwrap(), twist(&vb, k).unwrap());
            assert_eq!(braiding(&ta, &tb), braiding(&va, &vb), "{a},{b} under {k}");
        }
    }
}

#[test]
fn iso_search() {
    let v1 = tag("V1");
    assert!(yd_iso(&v1, &tag("V2")).is_none());
    assert!(yd_iso(&v1, &v1).unwrap().is_identity());
    assert!(yd_iso(&tag("M1"), &tag("M2")).is_none());
}
