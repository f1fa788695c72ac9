//! Seeded self-checks: random inputs run through the core operations with
//! their invariants asserted. Same seed, same report.

use std::fmt::Write as _;

use hakensum::reductions::Move;
use hakensum::surface_complex::{Patch, PatchComplex, PatchRef, SeamCurve};
use hakensum::{
    absorb, compute_thresholds, essential_certificate, euler_of_sum, lift_beta, reduce_parities, resolve, shift,
    trace, tuna_can_run, CanState, DiskPattern, EulerData, IntersectionInventory, Side, SideSystem, Sign,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::Report;

fn sign(rng: &mut ChaCha8Rng) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

fn complex(rng: &mut ChaCha8Rng) -> PatchComplex {
    let nf = rng.gen_range(1..=4);
    let ng = rng.gen_range(1..=3);
    let f_patches: Vec<Patch> = (0..nf).map(|j| Patch::new(format!("f{j}"), -2 * rng.gen_range(0..3))).collect();
    let g_patches: Vec<Patch> = (0..ng).map(|j| Patch::new(format!("g{j}"), -2 * rng.gen_range(0..3))).collect();
    let seams = (0..rng.gen_range(1..=4))
        .map(|k| {
            let q = [
                PatchRef::f(format!("f{}", rng.gen_range(0..nf))),
                PatchRef::g(format!("g{}", rng.gen_range(0..ng))),
                PatchRef::f(format!("f{}", rng.gen_range(0..nf))),
                PatchRef::g(format!("g{}", rng.gen_range(0..ng))),
            ];
            SeamCurve::new(format!("s{k}"), q, sign(rng), if rng.gen_bool(0.5) { 1 } else { -1 })
        })
        .collect();
    PatchComplex {
        f_surface: None,
        g_surface: None,
        f_patches,
        g_patches,
        seams,
    }
}

fn word(rng: &mut ChaCha8Rng, max_len: usize) -> Vec<i8> {
    (0..rng.gen_range(0..=max_len))
        .map(|_| if rng.gen_bool(0.5) { 1 } else { -1 })
        .collect()
}

pub fn run(seed: u64, count: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut fail = |what: &str, round: u64, detail: String| failures.push(format!("{what} (round {round}): {detail}"));
    let euler = EulerData {
        h: -4,
        k: -4,
        k_prime: -2,
        k_dblprime: -2,
    };

    for round in 0..count {
        let pc = complex(&mut rng);
        let n = rng.gen_range(0..8);
        let r = resolve(&pc, n).expect("generated complexes are valid");
        if r.total_euler() != euler_of_sum(pc.euler_f(), pc.euler_g(), n) {
            fail("euler additivity", round, format!("n = {n}"));
        }
        let m = rng.gen_range(0..=n);
        let folded = absorb(&pc, m).expect("valid");
        if resolve(&folded, n - m).expect("valid").components != r.components {
            fail("absorb", round, format!("m = {m}, n = {n}"));
        }

        let h = 2 * rng.gen_range(0..=6);
        let mut w: Vec<Sign> = (0..h).map(|j| if j < h / 2 { Sign::Plus } else { Sign::Minus }).collect();
        w.shuffle(&mut rng);
        let n = rng.gen_range(0..60);
        let t = trace(&DiskPattern::new(w, n, (h / 2) as u64, 0).expect("balanced"));
        if t.arc_count != h as u64 / 2 || (n > h as u64 && t.gamma_count < n - h as u64) {
            fail("trace", round, format!("h = {h}, n = {n}"));
        }

        let prime = SideSystem::from_words(Side::Prime, (0..rng.gen_range(1..=3)).map(|_| word(&mut rng, 8)).collect(), 2)
            .expect("unit steps");
        let dbl = SideSystem::from_words(Side::DoublePrime, (0..rng.gen_range(1..=3)).map(|_| word(&mut rng, 8)).collect(), 2)
            .expect("unit steps");
        let prof = compute_thresholds(rng.gen_range(0..6), &prime, &dbl);
        let n = 2 * prof.big_n + rng.gen_range(2..30);
        for beta in prime.betas.iter().chain(&dbl.betas) {
            let b = beta.crossing_count();
            for i in b + 1..n - b {
                let walk = lift_beta(beta, i, n);
                if walk.escaped || walk.terminal() - i as i64 != shift(beta) {
                    fail("lift", round, format!("{beta:?} from {i}"));
                }
            }
        }
        let i = rng.gen_range(prof.big_n + 1..n - prof.big_n);
        match essential_certificate(i, n, &prof, &prime, &dbl, &euler) {
            Ok(cert) => {
                if let Err(e) = cert.validate(&prime, &dbl, &euler) {
                    fail("certificate", round, e.to_string());
                }
            }
            Err(e) => fail("certificate", round, e.to_string()),
        }

        let len = rng.gen_range(1..12);
        let signs: Vec<Sign> = (0..len).map(|_| sign(&mut rng)).collect();
        let plus = signs.iter().filter(|&&s| s == Sign::Plus).count() as u64;
        let minus = len as u64 - plus;
        if plus > minus {
            let inv = IntersectionInventory::from_parities(&signs, minus + 1);
            match reduce_parities(&inv) {
                Ok(r) if r.m == plus - minus && r.m_prime == minus && r.inventory.curves.len() as u64 == r.m => {}
                other => fail("parities", round, format!("{other:?}")),
            }
        }

        let sizes: Vec<usize> = (0..rng.gen_range(1..4)).map(|_| rng.gen_range(1..4)).collect();
        let cans = CanState::from_sizes(&sizes, rng.gen_range(0..4)).expect("nonempty cans");
        let mut pick = |_: &CanState, moves: &[Move]| rng.gen_range(0..moves.len());
        let run = tuna_can_run(&cans, &mut pick);
        if !run.within_bound() || !run.measure_decreasing() || !run.terminal.is_terminal() {
            fail("cans", round, format!("{sizes:?}"));
        }
    }

    let mut report = Report {
        command: "check".into(),
        ..Report::default()
    };
    let _ = writeln!(report.text, "seed {seed}: {count} rounds, {} failures", failures.len());
    report.body = json!({ "seed": seed, "rounds": count, "failures": failures.len() });
    report.mismatches = failures;
    report
}
