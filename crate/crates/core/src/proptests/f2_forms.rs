use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::f2_forms::*;

fn form(max_genus: usize) -> impl Strategy<Value = F2QuadraticForm> {
    (1..=max_genus).prop_flat_map(|g| (Just(g), 0..1u64 << (2 * g))).prop_map(|(g, v)| F2QuadraticForm::new(g, v).unwrap())
}

fn eval(q: &F2QuadraticForm, x: u64) -> bool {
    q.eval(&F2Vector::new(q.genus(), x).unwrap()).unwrap()
}

proptest! {
    #[test]
    fn gauss_sum_matches_basis_formula(q in form(6)) {
        prop_assert_eq!(arf_gauss(&q).unwrap(), arf_basis(&q));
    }

    #[test]
    fn zero_count_matches_closed_form(q in form(6)) {
        prop_assert_eq!(count_zeros(&q).unwrap(), zero_count_closed_form(q.genus(), arf_basis(&q)));
    }

    #[test]
    fn arf_is_basis_independent(q in form(4), seed in any::<u64>()) {
        let g = q.genus();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = (0..rng.gen_range(1..20)).fold(SymplecticMap::identity(g), |acc, _| {
            acc.compose(&SymplecticMap::transvection(g, rng.gen_range(1..1u64 << (2 * g))))
        });
        prop_assert!(t.is_symplectic());
        prop_assert_eq!(arf_in_basis(&q, &t.image_basis()).unwrap(), arf_basis(&q));
        prop_assert_eq!(arf_basis(&t.pullback(&q)), arf_basis(&q));
        prop_assert!(forms_isomorphic(&q, &t.pullback(&q)));
    }

    #[test]
    fn arf_is_additive(q1 in form(3), q2 in form(3)) {
        let sum = direct_sum(&q1, &q2).unwrap();
        prop_assert_eq!(arf_basis(&sum), arf_basis(&q1) + arf_basis(&q2));
        prop_assert_eq!(arf_gauss(&sum).unwrap(), arf_basis(&q1) + arf_basis(&q2));
    }

    #[test]
    fn difference_of_forms_is_linear(g in 1usize..=3, v1 in any::<u64>(), v2 in any::<u64>(), x in any::<u64>(), y in any::<u64>()) {
        let mask = (1u64 << (2 * g)) - 1;
        let q1 = F2QuadraticForm::new(g, v1 & mask).unwrap();
        let q2 = F2QuadraticForm::new(g, v2 & mask).unwrap();
        let d = |z: u64| eval(&q1, z) ^ eval(&q2, z);
        let (x, y) = (x & mask, y & mask);
        prop_assert_eq!(d(x ^ y), d(x) ^ d(y));
    }

    #[test]
    fn form_is_a_refinement(q in form(5), x in any::<u64>(), y in any::<u64>()) {
        let g = q.genus();
        let mask = (1u64 << (2 * g)) - 1;
        let (x, y) = (x & mask, y & mask);
        let dot = F2Vector::new(g, x).unwrap().dot(&F2Vector::new(g, y).unwrap()).unwrap();
        prop_assert_eq!(eval(&q, x ^ y), eval(&q, x) ^ eval(&q, y) ^ dot);
    }

    #[test]
    fn bitstring_round_trip(q in form(8)) {
        prop_assert_eq!(F2QuadraticForm::from_bitstring(q.genus(), &q.to_bitstring()).unwrap(), q);
    }
}

#[test]
fn form_counts_sum_to_all_forms() {
    for g in 1..=6 {
        let c = count_by_arf(g).unwrap();
        assert_eq!(c.n_plus + c.n_minus, 1 << (2 * g));
        assert_eq!(c, FormCounts::closed_form(g));
    }
}

#[test]
fn forms_of_equal_arf_are_isomorphic_at_genus_two() {
    let forms = enumerate_forms(2).unwrap();
    for q1 in &forms {
        for q2 in &forms {
            let witness = isomorphism_witness(q1, q2).unwrap();
            assert_eq!(witness.is_some(), arf_basis(q1) == arf_basis(q2));
            if let Some(t) = witness {
                assert_eq!(t.pullback(q2), *q1);
            }
        }
    }
}
