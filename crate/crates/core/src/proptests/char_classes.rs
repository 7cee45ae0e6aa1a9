use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use crate::char_classes::*;
use crate::poly::Generator;

#[test]
fn sphere_classes() {
    for n in 0..=40 {
        assert_eq!(sphere_kappa(n), sphere_kappa_closed(n), "n = {n}");
        assert_eq!(hp_infinity_kappa(n), proj_at_hp_infinity(n), "n = {n}");
        assert!(lambda_kappa_difference(n).scale(&BigInt::from(2)).is_zero(), "n = {n}");
    }
    for n in [0, 1, 2, 4] {
        assert!(lambda_kappa_difference(n).is_zero(), "n = {n}");
    }
}

#[test]
fn riemann_roch_grid() {
    riemann_roch_overlaps_consistent(10, -10..=10).unwrap();
    for g in 0..=10 {
        for m in -10..=10 {
            assert!(serre_duality_check(g, m), "g = {g}, m = {m}");
        }
    }
}

proptest! {
    // with e1 = 0, Newton's identities make lambda_n the n-th power sum of the roots
    #[test]
    fn lambda_is_a_power_sum(x1 in -20i64..20, x2 in -20i64..20) {
        let x3 = -x1 - x2;
        let e2 = x1 * x2 + x1 * x3 + x2 * x3;
        let e3 = x1 * x2 * x3;
        let values = BTreeMap::from([(Generator::C2, BigInt::from(e2)), (Generator::C3, BigInt::from(e3))]);
        for n in 1..=12u32 {
            let power_sum: BigInt = [x1, x2, x3].iter().map(|&x| BigInt::from(x).pow(n)).sum();
            prop_assert_eq!(sphere_lambda_integral(n).evaluate(&values), power_sum, "n = {}", n);
        }
        prop_assert_eq!(sphere_lambda_integral(0).evaluate(&values), BigInt::from(2));
    }

    #[test]
    fn torus_lambda_coefficient(n in 0u32..=20) {
        let coeff = torus_lambda(n).coefficient(&[(Generator::U, n)]);
        let expected = BigInt::from(-1).pow(n) * (BigInt::from(1) - (BigInt::from(1) << n));
        prop_assert_eq!(coeff, expected);
        prop_assert!(torus_kappa(n).is_zero());
    }

    #[test]
    fn index_identity(g in 0u64..200, m in -200i64..200) {
        let r = riemann_roch_index(g, m);
        prop_assert_eq!(r.index, (2 * m - 1) * (g as i64 - 1));
    }
}
