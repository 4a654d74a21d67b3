use num_bigint::BigInt;
use proptest::prelude::*;
use qgollnitz_core::keyid::{check_key, lhs_g, rhs_p, KeyParams};
use qgollnitz_core::partcomb::{
    is_type1, staircase_forward, staircase_inverse, Color, ColoredPart, ColoredPartition,
};
use qgollnitz_core::qcomb::{qbinom, qbinom_q1};
use qgollnitz_core::{BivarLaurent, LaurentPoly, TruncSeries};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..10, -20i64..20), 0..6).prop_map(LaurentPoly::from_terms)
}

fn nonneg_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((0i64..12, -20i64..20), 0..6).prop_map(LaurentPoly::from_terms)
}

fn bivar() -> impl Strategy<Value = BivarLaurent> {
    prop::collection::vec((-3i64..4, poly()), 0..4).prop_map(BivarLaurent::from_terms)
}

fn color() -> impl Strategy<Value = Color> {
    prop::sample::select(Color::ALL.to_vec())
}

proptest! {
    #[test]
    fn poly_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn shift_is_multiplication_by_monomial(a in poly(), n in -10i64..10) {
        prop_assert_eq!(a.shift(n), &a * &LaurentPoly::q_pow(n));
    }

    #[test]
    fn evaluation_at_one_is_a_homomorphism(a in poly(), b in poly()) {
        prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
    }

    #[test]
    fn display_parse_round_trip(a in poly()) {
        prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
    }

    #[test]
    fn series_embedding_is_a_homomorphism(a in nonneg_poly(), b in nonneg_poly(), order in 1usize..20) {
        let sa = TruncSeries::from_poly(&a, order).unwrap();
        let sb = TruncSeries::from_poly(&b, order).unwrap();
        prop_assert_eq!(&sa * &sb, TruncSeries::from_poly(&(&a * &b).truncate_below(order as i64), order).unwrap());
        prop_assert_eq!(&sa + &sb, TruncSeries::from_poly(&(&a + &b).truncate_below(order as i64), order).unwrap());
    }

    #[test]
    fn reciprocal_inverts(tail in nonneg_poly(), sign in prop::bool::ANY, order in 1usize..25) {
        let unit = if sign { 1 } else { -1 };
        let p = LaurentPoly::constant(unit) + tail.shift(1);
        let s = TruncSeries::from_poly(&p.truncate_below(order as i64), order).unwrap();
        prop_assert_eq!(&s * &s.recip().unwrap(), TruncSeries::one(order));
    }

    #[test]
    fn substitute_one_is_a_homomorphism(x in bivar(), y in bivar()) {
        prop_assert_eq!((&x * &y).substitute_one(), &x.substitute_one() * &y.substitute_one());
        prop_assert_eq!((&x + &y).substitute_one(), &x.substitute_one() + &y.substitute_one());
    }

    #[test]
    fn qbinom_symmetry_and_count(n in 0i64..16, k in 0i64..16) {
        prop_assume!(k <= n);
        prop_assert_eq!(qbinom(n, k), qbinom(n, n - k));
        prop_assert_eq!(qbinom(n, k).eval_at_one(), qbinom_q1(n, k));
        prop_assert!(qbinom(n, k).is_nonnegative());
    }

    #[test]
    fn qbinom_q1_matches_evaluation_for_negative_tops(n in -10i64..0, k in 0i64..8) {
        prop_assert_eq!(qbinom(n, k).eval_at_one(), qbinom_q1(n, k));
    }

    #[test]
    fn key_identity_random_points(i in -2i64..6, j in -2i64..6, k in -2i64..6, l in -3i64..14, m in -3i64..14) {
        prop_assert!(check_key(&KeyParams::new(i, j, k, l, m)));
    }

    #[test]
    fn diagonal_is_cyclically_symmetric(i in 0i64..5, j in 0i64..5, k in 0i64..5, l in 0i64..12) {
        let p = KeyParams::new(i, j, k, l, l);
        let rotated = KeyParams::new(j, k, i, l, l);
        prop_assert_eq!(lhs_g(&p), rhs_p(&rotated));
    }

    #[test]
    fn staircase_round_trip_on_random_type1(parts in prop::collection::btree_map(1u32..40, color(), 0..10)) {
        let p = ColoredPartition::new(parts.into_iter().map(|(v, c)| ColoredPart::new(v, c)).collect());
        if is_type1(&p) {
            let img = staircase_forward(&p).unwrap();
            prop_assert_eq!(staircase_inverse(&img).unwrap(), p);
        } else {
            prop_assert!(staircase_forward(&p).is_err());
        }
    }
}

#[test]
fn bigint_coefficients_do_not_overflow() {
    let p = LaurentPoly::from_coeffs(0, &[i64::MAX, i64::MAX]);
    let sq = &p * &p;
    let m = BigInt::from(i64::MAX);
    assert_eq!(sq.coeff(1), &m * &m * 2);
}
