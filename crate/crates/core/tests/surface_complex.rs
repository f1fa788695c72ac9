use hakensum::scenario_file::shipped;
use hakensum::surface_complex::{absorb, component_counts, resolve};
use hakensum::{euler_of_sum, genus_from_euler, ScenarioFile};
use hakensum_oracles::{gen, gluing};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn keys(r: &hakensum::ResolvedSurface) -> Vec<gluing::ComponentKey> {
    r.components.iter().map(|c| (c.euler, c.closed, c.orientable, c.genus)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn euler_is_additive(seed in any::<u64>(), n in 0u64..9) {
        let pc = gen::patch_complex(&mut ChaCha8Rng::seed_from_u64(seed), true);
        let r = resolve(&pc, n).unwrap();
        prop_assert_eq!(r.total_euler(), euler_of_sum(pc.euler_f(), pc.euler_g(), n));
    }

    #[test]
    fn matches_gluing_oracle(seed in any::<u64>(), n in 0u64..6, loose in any::<bool>()) {
        let pc = gen::patch_complex(&mut ChaCha8Rng::seed_from_u64(seed), loose);
        let r = resolve(&pc, n).unwrap();
        prop_assert_eq!(keys(&r), gluing::resolve_components(&pc, n));
    }

    #[test]
    fn absorbing_copies_changes_nothing(seed in any::<u64>(), m in 0u64..4, extra in 0u64..4) {
        let pc = gen::patch_complex(&mut ChaCha8Rng::seed_from_u64(seed), true);
        let folded = absorb(&pc, m).unwrap();
        folded.validate().unwrap();
        prop_assert_eq!(
            gluing::resolve_components(&pc, m + extra),
            gluing::resolve_components(&folded, extra)
        );
    }

    // Component counts settle into a linear term plus a term whose period
    // divides 12 (cycle lengths of a self-map on at most three G patches).
    #[test]
    fn component_count_is_eventually_quasi_linear(seed in any::<u64>()) {
        let pc = gen::patch_complex(&mut ChaCha8Rng::seed_from_u64(seed), false);
        let c = component_counts(&pc, 0..=88).unwrap();
        for n in 16..=64u64 {
            prop_assert_eq!(c[&(n + 24)] as i64 - 2 * c[&(n + 12)] as i64 + c[&n] as i64, 0, "n = {}", n);
        }
    }
}

#[test]
fn zero_copies_give_f() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let pc = gen::patch_complex(&mut rng, true);
        assert_eq!(resolve(&pc, 0).unwrap().total_euler(), pc.euler_f());
    }
}

#[test]
fn pretzel_complex_six_copies() {
    let file = ScenarioFile::from_json(shipped::CASSON_GORDON_M5).unwrap();
    let r = resolve(file.patch_complex().unwrap(), 6).unwrap();
    assert!(r.is_connected());
    assert_eq!(r.components[0].euler, -18);
    assert_eq!(r.components[0].genus, Some(10));
    assert_eq!(euler_of_sum(-6, -2, 6), -18);
}

#[test]
fn doubled_handlebody_four_copies() {
    let file = ScenarioFile::from_json(shipped::DOUBLED_HANDLEBODY).unwrap();
    let r = resolve(file.patch_complex().unwrap(), 4).unwrap();
    assert!(r.is_connected());
    assert_eq!(euler_of_sum(-4, -4, 4), -20);
    assert_eq!(r.components[0].genus, Some(11));
    assert_eq!(genus_from_euler(-20), Ok(11));
}

#[test]
fn mismatched_choices_disconnect_the_doubled_handlebody() {
    let file = ScenarioFile::from_json(shipped::DOUBLED_HANDLEBODY).unwrap();
    let mut pc = file.patch_complex().unwrap().clone();
    pc.seams[1].epsilon = pc.seams[1].epsilon.flip();
    for n in 1..6 {
        assert_eq!(resolve(&pc, n).unwrap().components.len() as u64, n + 1);
    }
}
