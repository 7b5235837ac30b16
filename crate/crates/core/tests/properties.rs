use mpgen_core::classify::{coefficient_report, is_generic_lq, is_generic_lq_via_coeff};
use mpgen_core::notation::{parse_datum, parse_rep};
use mpgen_core::rep::normalize_datum;
use mpgen_core::theta::{lift_table, theta_lift, LiftLevel, Tower};
use mpgen_core::universe::{bases, check_lifts, parameters};
use mpgen_core::{Error, HalfInt, LanglandsDatum, QuadChar, Segment, TemperedRep};
use proptest::prelude::*;

fn seg() -> impl Strategy<Value = Segment> {
    (0..3usize, 1..=4i64, 1..=8i64).prop_map(|(r, len, c2)| {
        let c2 = if (c2 + len - 1) % 2 == 0 { c2 } else { c2 + 1 };
        let b = HalfInt::from_twice(c2 - (len - 1));
        let a = HalfInt::from_twice(c2 + (len - 1));
        Segment::new(bases()[r].clone(), b, a).unwrap()
    })
}

fn datum() -> impl Strategy<Value = LanglandsDatum> {
    let params = parameters(5);
    (prop::collection::vec(seg(), 0..=3), 0..params.len(), any::<bool>()).prop_map(move |(f, p, tw)| {
        let sigma = TemperedRep::metaplectic(params[p].clone()).unwrap();
        let d = normalize_datum(f, sigma).unwrap();
        if tw {
            d.with_twist(QuadChar::named("a").unwrap())
        } else {
            d
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1500))]

    #[test]
    fn routes_agree(d in datum()) {
        match is_generic_lq(&d) {
            Ok(v) => prop_assert_eq!(v.generic, is_generic_lq_via_coeff(&d).unwrap(), "{}", d),
            Err(e) => prop_assert!(false, "{}: {}", d, e),
        }
    }

    #[test]
    fn normalize_is_idempotent(d in datum()) {
        let again = normalize_datum(d.factors().to_vec(), d.tempered().clone()).unwrap().with_twist(d.psi_twist().clone());
        prop_assert_eq!(&again, &d);
        prop_assert!(d.is_standard());
    }

    #[test]
    fn twist_is_absorbed_by_factors(d in datum()) {
        prop_assert_eq!(is_generic_lq(&d).unwrap(), is_generic_lq(&d.untwisted()).unwrap());
        prop_assert_eq!(coefficient_report(&d).unwrap(), coefficient_report(&d.untwisted()).unwrap());
    }

    #[test]
    fn transfer_round_trips(d in datum()) {
        let t = d.transfer();
        prop_assert_eq!(t.factors(), d.factors());
        prop_assert_eq!(t.transfer(), d);
    }

    #[test]
    fn text_round_trip(d in datum()) {
        let text = d.to_string();
        prop_assert_eq!(parse_datum(&text).unwrap(), d);
        prop_assert_eq!(parse_rep(&text).unwrap().to_string(), text);
    }

    #[test]
    fn lifts_of_generic_data(d in datum()) {
        if is_generic_lq(&d).unwrap().generic {
            prop_assert_eq!(check_lifts(&d, 3).unwrap(), Vec::<String>::new());
            let chi = QuadChar::named("b").unwrap();
            for x in lift_table(&d, &chi, 2).unwrap() {
                prop_assert!(x.rank_accounting_holds(), "{}", x);
                prop_assert!(x.is_standard(), "{}", x);
            }
        } else {
            let r = theta_lift(&d, &Tower::split(), LiftLevel::new(0).unwrap());
            prop_assert!(matches!(r, Err(Error::NotGeneric(_))));
        }
    }
}

#[test]
fn half_steinberg_family_both_twists() {
    for m in 0..=3 {
        let text = format!("L(D(1;1/2,{}/2); T{{}})", 2 * m + 1);
        let d = parse_datum(&text).unwrap();
        assert!(is_generic_lq(&d).unwrap().generic, "{text}");
        let tw = d.clone().with_twist(QuadChar::named("a").unwrap());
        assert!(!is_generic_lq(&tw).unwrap().generic, "{text} twisted");
        assert!(!is_generic_lq_via_coeff(&tw).unwrap());
    }
}
