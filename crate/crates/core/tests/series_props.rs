use cox_core::arith::{is_reduced, rat, Rational, TruncatedSeries};
use num_traits::One;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=20).prop_map(|(n, d)| rat(n, d))
}

/// Series of the given order with constant term 1.
fn unit_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(rational(), order).prop_map(move |tail| {
        let mut coeffs = vec![Rational::one()];
        coeffs.extend(tail);
        TruncatedSeries::new(coeffs, order)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn inverse_is_inverse(f in unit_series(7)) {
        let g = f.inv().unwrap();
        prop_assert_eq!(f.mul(&g), TruncatedSeries::one(7));
    }

    #[test]
    fn exp_log_round_trip(f in unit_series(7)) {
        prop_assert_eq!(f.log().unwrap().exp().unwrap(), f);
    }

    #[test]
    fn pow_is_additive(f in unit_series(6), a in rational(), b in rational()) {
        let lhs = f.pow(&(&a + &b)).unwrap();
        let rhs = f.pow(&a).unwrap().mul(&f.pow(&b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coefficients_stay_reduced(f in unit_series(6), g in unit_series(6)) {
        for c in f.mul(&g).coeffs().iter().chain(f.div(&g).unwrap().coeffs()) {
            prop_assert!(is_reduced(c));
        }
    }
}
