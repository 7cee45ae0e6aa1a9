use std::vec::Vec;
use std::{format, vec};

use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

use crate::cyclotomic::CyclotomicInteger;
use crate::error::Error;
use crate::exact_arith::{integer, ModZValue};
use crate::icosa_group::{doubled_regular_character, enumerate_group, regular_restriction_profile};
use crate::seifert::*;

fn trace_of(m: u64, exponents: &[u64], mu: &[u64]) -> CyclotomicInteger {
    exponents.iter().zip(mu).fold(CyclotomicInteger::zero(m), |acc, (&e, &k)| {
        &acc + &CyclotomicInteger::zeta_power(m, e as i64).scale(k as i64)
    })
}

// multiplicities constant on each gcd class give a rational trace
fn galois_stable(max_m: u64) -> impl Strategy<Value = (u64, Vec<u64>)> {
    (1..=max_m).prop_flat_map(|m| {
        let divisors: Vec<u64> = (1..=m).filter(|d| m % d == 0).collect();
        (Just(m), proptest::collection::vec(0u64..3, divisors.len())).prop_map(move |(m, weights)| {
            let mu = (0..m)
                .map(|i| {
                    let d = i.gcd(&m);
                    weights[divisors.iter().position(|&x| x == d).unwrap()]
                })
                .collect();
            (m, mu)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solver_recovers_multiplicities((m, mu) in galois_stable(8)) {
        let exponents: Vec<u64> = (0..m).collect();
        let dim: u64 = mu.iter().sum();
        let trace = trace_of(m, &exponents, &mu).as_integer().expect("rational trace");
        let solutions = match multiplicity_solve(m, dim, trace, true, &exponents) {
            Ok(s) => vec![s],
            Err(Error::MultipleSolutions(list)) => list,
            Err(e) => return Err(TestCaseError::fail(format!("{e}"))),
        };
        prop_assert!(solutions.contains(&mu));
        for s in &solutions {
            prop_assert_eq!(s.iter().sum::<u64>(), dim);
            prop_assert_eq!(trace_of(m, &exponents, s).as_integer(), Some(trace));
            for i in 0..m as usize {
                prop_assert_eq!(s[i], s[(m as usize - i) % m as usize]);
            }
        }
    }

    #[test]
    fn integral_shifts_leave_e_invariant(
        s in proptest::collection::vec(proptest::collection::vec(-6i64..6, 4), 3),
        fiber in 0usize..3,
        slot in 0usize..4,
        times in -3i64..3,
    ) {
        let d = SeifertData::poincare();
        let build = |s: &Vec<Vec<i64>>, central| RepSpec {
            dimension: 4,
            central,
            profiles: s.iter().enumerate().map(|(j, v)| EigenvalueProfile {
                fiber: j + 1,
                s_values: v.iter().map(|&x| integer(x)).collect(),
            }).collect(),
        };
        let mut shifted = s.clone();
        shifted[fiber][slot] += times * d.pairs()[fiber].0;
        let trivial = CentralBehavior::Trivial;
        let scalar = CentralBehavior::Scalar { exponent: 1 };
        prop_assert_eq!(e_simple(&d, &build(&shifted, trivial)).unwrap(), e_simple(&d, &build(&s, trivial)).unwrap());
        prop_assert_eq!(e_general(&d, &build(&shifted, scalar)).unwrap(), e_general(&d, &build(&s, scalar)).unwrap());
    }
}

#[test]
fn general_formula_unwraps_to_simple_one() {
    for k in [2, 3] {
        let ex = icosahedral_example(k).unwrap();
        let as_scalar = RepSpec { central: CentralBehavior::Scalar { exponent: 0 }, ..ex.spec.clone() };
        let general = e_general(&ex.data, &as_scalar).unwrap();
        let simple = e_simple(&ex.data, &ex.spec).unwrap();
        assert_eq!(general, simple.scale(&BigInt::from(2 * ex.spec.dimension)), "example {k}");
    }
}

#[test]
fn solved_examples_satisfy_their_trace_equations() {
    for k in 1..=3 {
        let ex = icosahedral_example(k).unwrap();
        for j in 0..3 {
            let m = ex.element_orders[j];
            let mu = &ex.multiplicities[j];
            let trace = trace_of(m, &ex.allowed_exponents[j], mu);
            assert_eq!(trace.as_integer(), Some(lefschetz_trace(ex.fixed_points[j])), "example {k}, fiber {j}");
            assert_eq!(mu.iter().sum::<u64>(), ex.spec.dimension);
        }
    }
}

#[test]
fn poincare_sphere_is_rigid() {
    let d = SeifertData::poincare();
    assert!(is_integral_homology_sphere(&d));
    for j in 0..3 {
        for delta in [-1, 1] {
            let mut pairs = d.pairs().to_vec();
            pairs[j].1 += delta;
            match SeifertData::new(pairs) {
                Ok(p) => assert!(!is_integral_homology_sphere(&p), "fiber {j}, delta {delta}"),
                Err(Error::NonCoprimePair { .. }) => {}
                Err(e) => panic!("{e}"),
            }
        }
    }
}

#[test]
fn stabilization_steps() {
    let step = ModZValue::from_ratio(-1, 3);
    for n in 1..=10 {
        assert_eq!(stabilized_e(n).unwrap() - stabilized_e(n - 1).unwrap(), step);
    }
}

#[test]
fn regular_character_is_concentrated_at_the_center() {
    let group = enumerate_group();
    for m in [2, 3, 5] {
        let p = regular_restriction_profile(m).unwrap();
        for k in 0..m {
            let x = p.generator.pow(k);
            let expected = if k == 0 { 120 } else { 0 };
            assert_eq!(doubled_regular_character(&group, &x), expected, "m = {m}, k = {k}");
        }
        assert_eq!(p.regular_copies(), Some(120 / m as u64));
    }
}
