use hb1_core::scalar::GaussRat;
use proptest::prelude::*;

fn gauss() -> impl Strategy<Value = GaussRat> {
    (-20i64..20, 1i64..12, -20i64..20, 1i64..12).prop_map(|(a, b, c, d)| GaussRat::from_parts(a, b, c, d).unwrap())
}

proptest! {
    #[test]
    fn addition_is_associative_and_commutative(a in gauss(), b in gauss(), c in gauss()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a - &a, GaussRat::zero());
    }

    #[test]
    fn multiplication_distributes(a in gauss(), b in gauss(), c in gauss()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn nonzero_elements_are_invertible(a in gauss()) {
        if a.is_zero() {
            prop_assert!(a.inv().is_err());
        } else {
            prop_assert_eq!(&a * &a.inv().unwrap(), GaussRat::one());
        }
    }

    #[test]
    fn canonical_strings_round_trip(a in gauss()) {
        prop_assert_eq!(a.to_canonical().parse::<GaussRat>().unwrap(), a.clone());
        prop_assert_eq!(a.to_string().parse::<GaussRat>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<GaussRat>(&json).unwrap(), a);
    }

    #[test]
    fn squares_have_exact_roots(a in gauss()) {
        let r = (&a * &a).sqrt_exact().unwrap();
        prop_assert_eq!(&r * &r, &a * &a);
    }
}

#[test]
fn xi_powers_multiply() {
    for n in 0..8 {
        for m in 0..8 {
            assert_eq!(&GaussRat::xi_power(n) * &GaussRat::xi_power(m), GaussRat::xi_power(n + m));
        }
        assert_eq!(GaussRat::xi_power(n), GaussRat::i().pow(n as u32));
    }
    assert_eq!(GaussRat::xi_power(0), GaussRat::one());
    assert_eq!(GaussRat::xi_power(2), GaussRat::from_int(-1));
}

#[test]
fn parsing_examples() {
    assert_eq!("-1/2".parse::<GaussRat>().unwrap(), GaussRat::frac(-1, 2));
    assert_eq!("i".parse::<GaussRat>().unwrap(), GaussRat::i());
    assert_eq!("1/2+1/2*i".parse::<GaussRat>().unwrap(), &GaussRat::half() + &(&GaussRat::half() * &GaussRat::i()));
    assert!("1/0".parse::<GaussRat>().is_err());
    assert!("abc".parse::<GaussRat>().is_err());
}

#[test]
fn square_roots() {
    assert_eq!(GaussRat::from_int(-4).sqrt_exact(), Some(GaussRat::from_parts(0, 1, 2, 1).unwrap()));
    assert_eq!(GaussRat::from_int(2).sqrt_exact(), None);
    let r = GaussRat::i().sqrt_exact();
    assert_eq!(r, None);
    let two_i = GaussRat::from_parts(0, 1, 2, 1).unwrap();
    let r = two_i.sqrt_exact().unwrap();
    assert_eq!(&r * &r, two_i);
}
