use n2sl2::algebra::{spectral_flow, Algebra, Centrals, Gen, Mode, ModePoly};
use n2sl2::characters::character;
use n2sl2::module::{Bigrade, Module, ModuleSpec};
use n2sl2::scalar::{format_rational, parse_rational, rat, Poly};
use n2sl2::string::key_identity;
use n2sl2::RatFun;
use proptest::prelude::*;

fn ratfun() -> impl Strategy<Value = RatFun> {
    (prop::collection::vec(-6i64..=6, 1..4), prop::collection::vec(-6i64..=6, 1..3)).prop_filter_map(
        "nonzero denominator",
        |(n, d)| {
            let num = Poly::from_coeffs(n.into_iter().map(|c| rat(c, 1)).collect());
            let den = Poly::from_coeffs(d.into_iter().map(|c| rat(c, 1)).collect());
            RatFun::new(num, den).ok()
        },
    )
}

fn n2_mode() -> impl Strategy<Value = Mode> {
    (prop::sample::select(vec![Gen::L, Gen::H, Gen::G, Gen::Q]), -3i64..=3).prop_map(|(g, n)| Mode::new(g, n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_laws(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), RatFun::one());
        }
    }

    #[test]
    fn specialization_is_a_homomorphism(a in ratfun(), b in ratfun(), t0 in -5i64..=5) {
        let t0 = rat(t0, 1);
        if let (Ok(x), Ok(y)) = (a.specialize(&t0), b.specialize(&t0)) {
            prop_assert_eq!((&a * &b).specialize(&t0).unwrap(), &x * &y);
            prop_assert_eq!((&a + &b).specialize(&t0).unwrap(), x + y);
        }
    }

    #[test]
    fn json_round_trip(a in ratfun()) {
        prop_assert_eq!(RatFun::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn rational_text_round_trip(n in -1000i64..1000, d in 1i64..1000) {
        let q = rat(n, d);
        prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }

    #[test]
    fn flows_compose(m in n2_mode(), a in -2i64..=2, b in -2i64..=2) {
        let cen = Centrals::generic();
        let p = ModePoly::mode(m);
        let once = spectral_flow(Algebra::N2, a, &spectral_flow(Algebra::N2, b, &p, &cen).unwrap(), &cen).unwrap();
        prop_assert_eq!(once, spectral_flow(Algebra::N2, a + b, &p, &cen).unwrap());
    }

    #[test]
    fn key_identity_criterion_is_exact(r in 1i64..6, s in 0i64..5, th1 in -3i64..=3, th2 in -3i64..=3, tn in 1i64..9, td in 1i64..5) {
        for t in [RatFun::t(), RatFun::from_ratio(tn, td)] {
            let k = key_identity(r, s, th1, th2, &t);
            prop_assert_eq!(k.criterion, k.labels_equal);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn characters_count_bases(theta in -2i64..=2, charge in -2i64..=2, level in 0i64..=3) {
        let x = RatFun::from_ratio(3, 7);
        for spec in [
            ModuleSpec::Topological { h: x.clone(), t: RatFun::t(), theta },
            ModuleSpec::Sl2Verma { j: x.clone(), k: RatFun::t(), theta },
            ModuleSpec::Relaxed { j: x.clone(), lambda: RatFun::from_int(2), k: RatFun::t(), theta },
        ] {
            let ch = character(&spec, (-2, 2), 3);
            let v = Module::new(spec).unwrap();
            prop_assert_eq!(ch.get(&[charge, level]), v.dim(Bigrade::new(charge, level)) as u64);
        }
    }
}
