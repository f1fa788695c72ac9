use hakensum::shift_calculus::lcm_or_infinite;
use hakensum::{
    compute_thresholds, essential_certificate, lift_beta, shift, BetaArc, Certificate, EulerData, Side, SideSystem,
};
use hakensum_oracles::{gen, paths};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const EULER: EulerData = EulerData { h: -4, k: -4, k_prime: -2, k_dblprime: -2 };

fn sides(prime: &[Vec<i8>], dbl: &[Vec<i8>]) -> (SideSystem, SideSystem) {
    (
        SideSystem::from_words(Side::Prime, prime.to_vec(), 2).unwrap(),
        SideSystem::from_words(Side::DoublePrime, dbl.to_vec(), 2).unwrap(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn shift_is_independent_of_the_start(seed in any::<u64>(), n in 1u64..80) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let beta = BetaArc::new(Side::Prime, 1, gen::crossing_word(&mut rng, 12)).unwrap();
        let b = beta.crossing_count();
        let sigma = shift(&beta);
        for i in b + 1..n.saturating_sub(b) {
            let walk = lift_beta(&beta, i, n);
            prop_assert!(!walk.escaped, "i = {}", i);
            prop_assert_eq!(walk.terminal() - i as i64, sigma);
            prop_assert_eq!(walk.levels.len() as u64, b + 1);
        }
    }

    #[test]
    fn certificates_pass_the_path_walk(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (wp, wd) = gen::beta_system(&mut rng, 8);
        let (p, d) = sides(&wp, &wd);
        let h = rng.gen_range(0..=6);
        let profile = compute_thresholds(h, &p, &d);
        let n = 2 * profile.big_n + rng.gen_range(2..40);
        let i = rng.gen_range(profile.big_n + 1..n - profile.big_n);
        let cert = essential_certificate(i, n, &profile, &p, &d, &EULER).unwrap();
        if p.all_shifts_zero() || d.all_shifts_zero() {
            let is_zero_side = matches!(cert, Certificate::ZeroSide { .. });
            prop_assert!(is_zero_side);
        }
        prop_assert_eq!(paths::check(&cert, &wp, &wd, &EULER), Ok(()));
        cert.validate(&p, &d, &EULER).unwrap();
    }

    #[test]
    fn thresholds_match_definition(seed in any::<u64>(), h in 0u64..10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (wp, wd) = gen::beta_system(&mut rng, 10);
        let (p, d) = sides(&wp, &wd);
        let prof = compute_thresholds(h, &p, &d);
        let b = wp.iter().chain(&wd).map(|w| w.len() as u64).max().unwrap();
        let sum = |w: &Vec<i8>| w.iter().map(|&c| c as i64).sum::<i64>().unsigned_abs();
        let mut s = u64::MAX;
        for x in &wp {
            for y in &wd {
                let (x, y) = (sum(x), sum(y));
                if x != 0 && y != 0 {
                    let mut l = x.max(y);
                    while l % x != 0 || l % y != 0 {
                        l += x.max(y);
                    }
                    s = s.min(l);
                }
            }
        }
        let s = if s == u64::MAX { 0 } else { s };
        prop_assert_eq!((prof.b, prof.s, prof.big_n), (b, s, h.max(b).max(s)));
    }

    #[test]
    fn thresholds_are_monotone(seed in any::<u64>(), h in 0u64..10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (mut wp, wd) = gen::beta_system(&mut rng, 10);
        let (p, d) = sides(&wp, &wd);
        let before = compute_thresholds(h, &p, &d);
        wp.push(gen::crossing_word(&mut rng, 10));
        let (p2, _) = sides(&wp, &wd);
        let after = compute_thresholds(h, &p2, &d);
        prop_assert!(after.b >= before.b);
        // A new pair can only add finite lcm values.
        if before.s != 0 {
            prop_assert!(after.s != 0 && after.s <= before.s);
        }
        let bigger = compute_thresholds(h + 1, &p, &d);
        prop_assert!(bigger.big_n >= before.big_n);
    }
}

#[test]
fn lcm_infinity_convention() {
    assert_eq!(lcm_or_infinite(2, 3), Some(6));
    assert_eq!(lcm_or_infinite(3, 0), None);
}

#[test]
fn dual_curve_through_ten() {
    let (p, d) = sides(&[vec![1, 1]], &[vec![1, 1, 1]]);
    let profile = compute_thresholds(0, &p, &d);
    let cert = essential_certificate(10, 30, &profile, &p, &d, &EULER).unwrap();
    let Certificate::DualCurve { t, prime_starts, dblprime_starts, .. } = &cert else {
        panic!("expected a dual curve");
    };
    assert_eq!(*t, 6);
    assert_eq!(prime_starts, &[10, 12, 14]);
    assert_eq!(dblprime_starts, &[10, 13]);
    assert_eq!(paths::check(&cert, &[vec![1, 1]], &[vec![1, 1, 1]], &EULER), Ok(()));
}

#[test]
fn zero_side_for_every_n() {
    let (p, d) = sides(&[vec![1, -1], vec![]], &[vec![1, 1, 1, 1, 1]]);
    let profile = compute_thresholds(0, &p, &d);
    for n in 12..60 {
        let cert = essential_certificate(6, n, &profile, &p, &d, &EULER).unwrap();
        assert!(matches!(cert, Certificate::ZeroSide { side: Side::Prime, lhs: -1, .. }));
    }
}
