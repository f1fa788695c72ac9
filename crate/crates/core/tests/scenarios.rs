use hakensum::scenarios::{handlebody_certificate_ordered, Method};
use hakensum::{casson_gordon_scenario, doubled_handlebody_graph, doubled_handlebody_scenario, handlebody_certificate};
use hakensum_oracles::graphs;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn pretzel_genus_law() {
    for n in 0..=20 {
        let r = casson_gordon_scenario(5, n).unwrap();
        assert_eq!(r.method, Method::Resolved);
        let resolved = r.resolved.as_ref().unwrap();
        assert!(resolved.is_connected());
        assert_eq!(resolved.components[0].genus, Some(2 * n + 4));
        assert!(r.consistent);
    }
    for m in [7, 9, 11] {
        for n in 0..5 {
            let r = casson_gordon_scenario(m, n).unwrap();
            assert_eq!(r.genus_euler, (m - 1) + 2 * n);
            assert_eq!(r.method, Method::EulerOnly);
        }
    }
}

#[test]
fn doubled_handlebody_genus_law() {
    for n in (0..=20).step_by(2) {
        let r = doubled_handlebody_scenario(n).unwrap();
        assert!(r.connected);
        assert!(r.resolved.components[0].closed);
        assert_eq!(r.genus, Some(2 * n + 3));
        assert!(r.consistent);
        if n >= 2 {
            assert_eq!(r.certificate.unwrap().genus, 2 * n + 3);
        }
    }
}

#[test]
fn certificate_order_does_not_matter() {
    for n in 1..8 {
        let g = doubled_handlebody_graph(n);
        let base = handlebody_certificate(&g).unwrap();
        for seed in 0..20u64 {
            let mut k = seed;
            let alt = handlebody_certificate_ordered(&g, |len| {
                k = k.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (k >> 33) as usize % len
            })
            .unwrap();
            assert_eq!(alt.genus, base.genus);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn provable_graphs_match_rank(seed in any::<u64>(), order in any::<u64>()) {
        let g = graphs::random_provable(&mut ChaCha8Rng::seed_from_u64(seed));
        let proof = handlebody_certificate(&g).unwrap();
        prop_assert_eq!(proof.genus as i64, graphs::rank_genus(&g));
        prop_assert_eq!(proof.genus as i64, 1 - proof.euler_sum);
        let mut k = order;
        let alt = handlebody_certificate_ordered(&g, |len| {
            k = k.rotate_left(7) ^ 0x9e37_79b9_7f4a_7c15;
            k as usize % len
        });
        prop_assert_eq!(alt.map(|p| p.genus), Ok(proof.genus));
    }
}
