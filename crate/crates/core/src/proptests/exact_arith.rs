use std::vec;
use std::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use crate::exact_arith::*;

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// Classical Bernoulli numbers from `sum_{j<=n} C(n+1, j) B_j = 0`.
fn classical_bernoulli(n: u64) -> Vec<BigRational> {
    let mut b = vec![BigRational::one()];
    for m in 1..=n {
        let acc = (0..m).fold(BigRational::zero(), |acc, j| {
            acc + BigRational::from_integer(binomial(m + 1, j)) * &b[j as usize]
        });
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

#[test]
fn bernoulli_agrees_with_the_classical_recurrence() {
    let classical = classical_bernoulli(60);
    for (k, bk) in (1..=30).zip(bernoulli_table(30)) {
        assert_eq!(bk, classical[2 * k].abs(), "k = {k}");
        assert_eq!(bernoulli_paper(k as u64).unwrap(), bk);
    }
}

#[test]
fn von_staudt_denominators() {
    for k in 1..=30u64 {
        let check = von_staudt_check(k).unwrap();
        assert!(check.agrees(), "k = {k}");
        assert!(check.exact.is_even(), "k = {k}");
        let ratio = bernoulli_ratio(k).unwrap();
        let bound = (BigInt::one() << (2 * k - 1)) * ratio.denom();
        assert!(ratio.numer().gcd(&bound).is_one(), "k = {k}");
    }
}

#[test]
fn divisors_differ_by_powers_of_two() {
    for n in 1..=30 {
        let d = divisor_spin(n).unwrap();
        assert_eq!(d.oriented_divisor, divisor_oriented(n).unwrap());
        assert!((&d.spin_divisor % &d.oriented_divisor).is_zero());
        let e = d.quotient_two_power().expect("2-power quotient");
        assert_eq!(&d.oriented_divisor << e, d.spin_divisor);
    }
}

#[test]
fn todd_series_is_even_past_degree_one() {
    let td = todd_coefficients(60);
    assert_eq!(td.coefficient(1), Some(&rational(1, 2)));
    for d in (3..=60).step_by(2) {
        assert!(td.coefficient(d).unwrap().is_zero(), "degree {d}");
    }
}

#[test]
fn mumford_identity() {
    for k in 1..=20 {
        assert!(mumford_identity_holds(k).unwrap(), "k = {k}");
    }
}

fn modz() -> impl Strategy<Value = ModZValue> {
    (-500i64..500, 1i64..60).prop_map(|(n, d)| ModZValue::from_ratio(n, d))
}

proptest! {
    #[test]
    fn modz_is_a_group(a in modz(), b in modz(), c in modz()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c));
        prop_assert_eq!(a.clone() + (-a.clone()), ModZValue::zero());
        prop_assert_eq!(a.clone() - b.clone() + b, a);
    }

    #[test]
    fn modz_canonical_range(n in -10_000i64..10_000, d in 1i64..500) {
        let v = ModZValue::from_ratio(n, d);
        prop_assert!(!v.residue().is_negative() && v.residue() < &BigRational::one());
        prop_assert_eq!(v.clone(), ModZValue::from_ratio(n + 7 * d, d));
        if let Some(alias) = v.alias() {
            prop_assert!(alias.is_negative());
            prop_assert_eq!(ModZValue::new(alias), v);
        }
    }

    #[test]
    fn modz_order_is_the_denominator(n in -1000i64..1000, d in 1i64..200) {
        let v = ModZValue::from_ratio(n, d);
        let order = v.order(200).unwrap();
        prop_assert!(v.scale(&BigInt::from(order)).is_zero());
        for m in 1..order {
            prop_assert!(!v.scale(&BigInt::from(m)).is_zero());
        }
    }
}
