//! Acceptance suite. Prints one `criterion N: PASS|FAIL` line per criterion
//! and exits non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::panic;
use std::process::ExitCode;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use surfinv_core::char_classes::*;
use surfinv_core::exact_arith::*;
use surfinv_core::f2_forms::*;
use surfinv_core::icosa_group::*;
use surfinv_core::poly::{Generator, IntPolynomial};
use surfinv_core::seifert::*;

/// Collects failed sub-checks so a criterion reports all of them at once.
#[derive(Default)]
struct Checks {
    failures: Vec<String>,
}

impl Checks {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, label: &str, found: T, expected: T) {
        self.check(found == expected, || format!("{label}: expected {expected:?}, found {found:?}"));
    }

    fn finish(self) -> Result<(), String> {
        if self.failures.is_empty() {
            Ok(())
        } else {
            Err(self.failures.join("; "))
        }
    }
}

fn criterion_1() -> Result<(), String> {
    let mut c = Checks::default();
    for g in 1..=4 {
        for q in enumerate_forms(g).unwrap() {
            c.eq(&format!("g={g} q={}", q.to_bitstring()), arf_gauss(&q).unwrap(), arf_basis(&q));
        }
    }
    c.finish()
}

fn criterion_2() -> Result<(), String> {
    let mut c = Checks::default();
    for g in 1..=6usize {
        let counts = count_by_arf(g).unwrap();
        let plus = (1u64 << (g - 1)) * ((1 << g) + 1);
        let minus = (1u64 << (g - 1)) * ((1 << g) - 1);
        c.eq(&format!("g={g}"), (counts.n_plus, counts.n_minus), (plus, minus));
        c.eq(&format!("g={g} closed form"), FormCounts::closed_form(g), counts);
    }
    c.finish()
}

fn criterion_3() -> Result<(), String> {
    let mut c = Checks::default();
    for g in 1..=4usize {
        for q in enumerate_forms(g).unwrap() {
            let arf = arf_basis(&q).multiplicative() as i64;
            let expected = (1i64 << (g - 1)) * ((1 << g) + arf);
            c.eq(&format!("g={g} q={}", q.to_bitstring()), count_zeros(&q).unwrap() as i64, expected);
        }
    }
    // the Arf-zero form has the larger zero set: 3 of 4 vectors at g = 1
    c.eq("zeros of q0", count_zeros(&F2QuadraticForm::q0()).unwrap(), 3);
    c.eq("zeros of q1", count_zeros(&F2QuadraticForm::q1()).unwrap(), 1);
    println!("  note: zero count is 2^(g-1)(2^g + arf); the Arf-zero forms have the larger count");
    c.finish()
}

fn random_symplectic_map(rng: &mut ChaCha8Rng, g: usize) -> SymplecticMap {
    let steps = rng.gen_range(1..=12);
    (0..steps).fold(SymplecticMap::identity(g), |acc, _| {
        let v = rng.gen_range(1..1u64 << (2 * g));
        acc.compose(&SymplecticMap::transvection(g, v))
    })
}

fn criterion_4() -> Result<(), String> {
    let mut c = Checks::default();
    for g1 in 1..=2 {
        for g2 in 1..=2 {
            for q1 in enumerate_forms(g1).unwrap() {
                for q2 in enumerate_forms(g2).unwrap() {
                    let sum = direct_sum(&q1, &q2).unwrap();
                    c.eq(
                        &format!("{} + {}", q1.to_bitstring(), q2.to_bitstring()),
                        arf_basis(&sum),
                        arf_basis(&q1) + arf_basis(&q2),
                    );
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x05ee_da7f);
    for trial in 0..100 {
        let g = 1 + trial % 3;
        let q = F2QuadraticForm::new(g, rng.gen_range(0..1u64 << (2 * g))).unwrap();
        let t = random_symplectic_map(&mut rng, g);
        c.check(t.is_symplectic(), || format!("trial {trial}: map is not symplectic"));
        c.eq(&format!("trial {trial} pullback"), arf_basis(&t.pullback(&q)), arf_basis(&q));
        c.eq(&format!("trial {trial} new basis"), arf_in_basis(&q, &t.image_basis()).unwrap(), arf_basis(&q));
    }
    c.finish()
}

fn criterion_5() -> Result<(), String> {
    let mut c = Checks::default();
    for k in 1..=30 {
        let check = von_staudt_check(k).unwrap();
        c.check(check.exact.clone() % 2 == BigInt::zero(), || format!("k={k}: den {} is odd", check.exact));
        c.check(check.agrees(), || {
            format!("k={k}: product formula {} but exact {}", check.product_formula, check.exact)
        });
    }
    c.eq("den(B_2/4)", bernoulli_ratio_den(2).unwrap(), BigInt::from(120));
    c.eq("den(B_6/12)", bernoulli_ratio_den(6).unwrap(), BigInt::from(32760));
    c.finish()
}

fn criterion_6() -> Result<(), String> {
    let mut c = Checks::default();
    c.eq("D_1", divisor_oriented(1).unwrap(), BigInt::from(12));
    c.eq("D_3", divisor_oriented(3).unwrap(), BigInt::from(120));
    for n in 1..=10u32 {
        let d = divisor_spin(2 * n as u64).unwrap();
        c.eq(&format!("spin D_{}", 2 * n), d.spin_divisor, BigInt::one() << (2 * n + 1));
    }
    c.eq("spin D_1", divisor_spin(1).unwrap().spin_divisor, BigInt::from(48));
    for n in 1..=30 {
        let d = divisor_spin(n).unwrap();
        c.check(d.quotient_two_power().is_some(), || format!("n={n}: spin/oriented is not a power of two"));
    }
    c.finish()
}

fn criterion_7() -> Result<(), String> {
    let mut c = Checks::default();
    for n in 0..=40 {
        c.eq(&format!("sphere kappa_{n}"), sphere_kappa(n), sphere_kappa_closed(n));
    }
    for n in 0..=20 {
        c.eq(&format!("HP kappa_{n}"), hp_infinity_kappa(n), proj_at_hp_infinity(n));
    }
    for m in 0..=10u32 {
        let sign = if m % 2 == 0 { 1 } else { -1 };
        let expected = IntPolynomial::term(BigInt::from(sign) << (2 * m + 1), &[(Generator::U, m)]);
        c.eq(&format!("HP kappa_{}", 2 * m), hp_infinity_kappa(2 * m), expected);
    }
    for n in [0, 1, 2, 4] {
        c.check(lambda_kappa_difference(n).is_zero(), || format!("lambda_{n} != kappa_{n}"));
    }
    for n in 0..=40 {
        c.check(lambda_kappa_difference(n).scale(&BigInt::from(2)).is_zero(), || {
            format!("2(lambda_{n} - kappa_{n}) = {}", lambda_kappa_difference(n).scale(&BigInt::from(2)))
        });
    }
    for n in 0..=20u32 {
        c.check(torus_kappa(n).is_zero(), || format!("torus kappa_{n} nonzero"));
        let base = BigInt::one() - (BigInt::one() << n);
        let coeff = if n % 2 == 0 { base } else { -base };
        c.eq(&format!("torus lambda_{n}"), torus_lambda(n), IntPolynomial::term(coeff, &[(Generator::U, n)]));
    }
    c.finish()
}

fn criterion_8() -> Result<(), String> {
    let mut c = Checks::default();
    for g in 0..=10 {
        for m in -10..=10 {
            let r = riemann_roch_index(g, m);
            c.eq(&format!("index (g={g}, m={m})"), r.index, (2 * m - 1) * (g as i64 - 1));
        }
    }
    c.eq("(3,1)", riemann_roch_dim(3, 1).dimension, 3);
    c.eq("(0,-2)", riemann_roch_dim(0, -2).dimension, 3);
    c.eq("(4,2)", riemann_roch_dim(4, 2).dimension, 9);
    c.finish()
}

fn criterion_9() -> Result<(), String> {
    let mut c = Checks::default();
    match icosahedral_example(2) {
        Ok(ex) => c.eq("example 2 e", ex.value, ModZValue::from_ratio(1, 2)),
        Err(e) => c.check(false, || format!("example 2: {e}")),
    }
    match icosahedral_example(3) {
        Ok(ex) => {
            c.eq("example 3 e", ex.value.clone(), ModZValue::from_ratio(-1, 12));
            c.eq("example 3 order", order_in_pi3(&ex.value).ok(), Some(12));
        }
        Err(e) => c.check(false, || format!("example 3: {e}")),
    }
    match icosahedral_example(1) {
        Ok(ex) => {
            c.eq("example 1 2Re(28e)", ex.value, ModZValue::from_ratio(1, 3));
            c.eq("example 1 order set", ex.order, OrderReport::ConstraintSet(vec![6, 12, 24]));
        }
        Err(e) => c.check(false, || format!("example 1: {e}")),
    }
    c.eq("solver (m=6, dim 28, trace 2)", multiplicity_solve(6, 28, 2, true, &[1, 3, 5]), Ok(vec![10, 8, 10]));
    c.finish()
}

fn criterion_10() -> Result<(), String> {
    let mut c = Checks::default();
    for (m, copies) in [(2, 60), (3, 40), (5, 24)] {
        let p = regular_restriction_profile(m).unwrap();
        c.eq(&format!("regular copies at order {m}"), p.regular_copies(), Some(copies));
    }
    c.eq("increment", regular_increment().unwrap(), ModZValue::from_ratio(-1, 3));
    for n in 0..=10i64 {
        let expected = ModZValue::new(rational(-1, 12) - rational(n, 3));
        c.eq(&format!("stabilized_e({n})"), stabilized_e(n as u64).unwrap(), expected);
    }
    c.finish()
}

fn criterion_11() -> Result<(), String> {
    let mut c = Checks::default();
    let group = enumerate_group();
    c.eq("order", group.len(), 120);
    c.check(verify_perfect(), || "not perfect".into());
    c.eq("center", center(&group).len(), 2);
    let census = element_order_census();
    c.eq("involutions", census.get(&2).copied(), Some(1));
    let expected: BTreeMap<u32, usize> = [(1, 1), (2, 1), (3, 20), (4, 30), (5, 24), (6, 20), (10, 24)].into();
    c.eq("census", census, expected);
    match find_presentation_witness() {
        Some(w) => {
            c.check(w.satisfies_relations(), || "witness fails the relations".into());
            c.check(w.generates_group(), || "witness does not generate".into());
        }
        None => c.check(false, || "no presentation witness".into()),
    }
    c.finish()
}

fn criterion_12() -> Result<(), String> {
    let mut c = Checks::default();
    let d = SeifertData::new(vec![(2, -1), (3, 1), (5, 1)]).unwrap();
    c.eq("a * sum b/a", d.homology_value(), integer(1));
    c.check(is_integral_homology_sphere(&d), || "criterion rejects the Poincaré sphere".into());
    c.finish()
}

type Criterion = fn() -> Result<(), String>;

fn main() -> ExitCode {
    let criteria: [(u32, Criterion); 12] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
        (12, criterion_12),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (n, run) in criteria {
        let outcome = panic::catch_unwind(run).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(()) => println!("criterion {n}: PASS"),
            Err(detail) => {
                failed += 1;
                println!("criterion {n}: FAIL ({detail})");
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
