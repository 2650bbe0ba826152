use macfrob_core::linalg::{random_subspace_with, sample_rng};
use macfrob_core::search::{
    build_eight_quadrics, check_condition1, check_condition2, lower_bound_l, naive_upper, replay_m_witness,
    sample_m, QuadricPairParams, StableCatalog,
};
use macfrob_core::{Caps, PrimeField, TermOrder};
use proptest::prelude::*;

const GRID: &[(usize, u32, usize)] = &[
    (2, 4, 2),
    (2, 5, 4),
    (3, 2, 3),
    (3, 3, 4),
    (3, 3, 7),
    (3, 4, 7),
    (3, 4, 10),
    (4, 2, 4),
    (4, 2, 8),
];

#[test]
fn l_is_below_random_subspaces() {
    let f = PrimeField::default();
    let caps = Caps::default();
    for &(n, d, u) in GRID {
        let catalog = StableCatalog::build(n, d, u, 3, &caps).unwrap();
        for j in 1..=3 {
            let l = catalog.l_result(j).value as usize;
            for s in 0..20 {
                let v = random_subspace_with(&f, n, d, u, TermOrder::Lex, &mut sample_rng(s, 0)).unwrap();
                let dim = v.power_dimension(j, &caps).unwrap();
                assert!(l <= dim, "({n},{d},{u},{j}): L = {l} > {dim}");
            }
        }
    }
}

#[test]
fn l_is_monotone_in_j() {
    let caps = Caps::default();
    for &(n, d, u) in GRID {
        let catalog = StableCatalog::build(n, d, u, 5, &caps).unwrap();
        assert_eq!(catalog.l_result(1).value, u as u64);
        for j in 1..5 {
            assert!(catalog.l_result(j + 1).value >= catalog.l_result(j).value);
            assert!(!catalog.l_result(j).minimizers.is_empty());
        }
    }
    // the binary cubes x^3, x^2y, xy^2, y^3 square to the 7 binary sextics
    assert_eq!(lower_bound_l(3, 3, 4, 2, &caps).unwrap().value, 7);
}

#[test]
fn sampled_m_within_naive_and_replayable() {
    let f = PrimeField::default();
    let caps = Caps::default();
    for &(n, d, u) in GRID {
        for j in 2..=3 {
            let r = sample_m(&f, n, d, u, j, 6, 42, &caps).unwrap();
            assert!(r.observed_max as u128 <= naive_upper(n, d, u, j));
            assert_eq!(replay_m_witness(&r, &caps).unwrap(), r.observed_max);
        }
    }
}

#[test]
fn m_matches_naive_bound_for_seven_quartics() {
    // no obstruction is known here; a shortfall would be worth a look
    let r = sample_m(&PrimeField::default(), 3, 4, 7, 2, 50, 0, &Caps::default()).unwrap();
    assert_eq!(r.naive_bound, 28);
    assert_eq!(r.observed_max, 28);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn conditions_force_34(a in proptest::array::uniform4(0u64..32003), b in proptest::array::uniform4(0u64..32003)) {
        let f = PrimeField::default();
        let p = QuadricPairParams::new(a, b);
        let w = build_eight_quadrics(&f, &p);
        let dim = w.power_dimension(2, &Caps::default()).unwrap();
        prop_assert!(dim <= 34);
        if check_condition1(&f, &p) && check_condition2(&f, &p) {
            prop_assert_eq!(w.u(), 8);
            prop_assert_eq!(dim, 34);
        }
    }

    #[test]
    fn small_coefficient_quadrics_never_exceed_34(a in proptest::array::uniform4(0u64..3), b in proptest::array::uniform4(0u64..3)) {
        let f = PrimeField::new(3).unwrap();
        let p = QuadricPairParams::new(a, b);
        let w = build_eight_quadrics(&f, &p);
        let dim = w.power_dimension(2, &Caps::default()).unwrap();
        prop_assert!(dim <= 34);
        if check_condition1(&f, &p) && check_condition2(&f, &p) {
            prop_assert_eq!(dim, 34);
        }
    }
}
