//! Seeded generators for random test inputs.

use hakensum::reductions::{IntersectionInventory, InventoryCurve};
use hakensum::surface_complex::{Patch, PatchComplex, PatchRef, SeamCurve};
use hakensum::Sign;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn sign<R: Rng>(rng: &mut R) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// A uniformly shuffled word with `h / 2` of each parity.
pub fn balanced_word<R: Rng>(rng: &mut R, h: usize) -> Vec<Sign> {
    let mut w: Vec<Sign> = (0..h).map(|j| if j < h / 2 { Sign::Plus } else { Sign::Minus }).collect();
    w.shuffle(rng);
    w
}

/// A word with strictly more `+` than `-`.
pub fn positive_majority_word<R: Rng>(rng: &mut R, max_len: usize) -> Vec<Sign> {
    loop {
        let len = rng.gen_range(1..=max_len);
        let w: Vec<Sign> = (0..len).map(|_| sign(rng)).collect();
        let plus = w.iter().filter(|&&s| s == Sign::Plus).count();
        if plus * 2 > len {
            return w;
        }
    }
}

pub fn crossing_word<R: Rng>(rng: &mut R, max_len: usize) -> Vec<i8> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect()
}

/// Crossing words for both sides, `1..=3` betas each.
pub fn beta_system<R: Rng>(rng: &mut R, max_len: usize) -> (Vec<Vec<i8>>, Vec<Vec<i8>>) {
    let side = |rng: &mut R| (0..rng.gen_range(1..=3)).map(|_| crossing_word(rng, max_len)).collect();
    (side(rng), side(rng))
}

/// A valid patch complex with random sheets at each seam. Patches carry
/// even eulers and no free boundary unless `loose` is set.
pub fn patch_complex<R: Rng>(rng: &mut R, loose: bool) -> PatchComplex {
    let patch = |rng: &mut R, prefix: &str, j: usize| {
        let mut p = Patch::new(format!("{prefix}{j}"), if loose { rng.gen_range(-5..=1) } else { -2 * rng.gen_range(0..=2) });
        if loose {
            p.free_boundary = u32::from(rng.gen_bool(0.2));
            p.orientable = match rng.gen_range(0..10) {
                0 => None,
                1 => Some(false),
                _ => Some(true),
            };
        }
        p
    };
    let nf = rng.gen_range(1..=4);
    let ng = rng.gen_range(1..=3);
    let f_patches: Vec<Patch> = (0..nf).map(|j| patch(rng, "f", j)).collect();
    let g_patches: Vec<Patch> = (0..ng).map(|j| patch(rng, "g", j)).collect();
    let seams = (0..rng.gen_range(1..=4))
        .map(|k| {
            let pick_f = |rng: &mut R| PatchRef::f(f_patches[rng.gen_range(0..nf)].id.clone());
            let fa = pick_f(rng);
            let fb = pick_f(rng);
            let ga = PatchRef::g(g_patches[rng.gen_range(0..ng)].id.clone());
            let gb = PatchRef::g(g_patches[rng.gen_range(0..ng)].id.clone());
            let shift = if rng.gen_bool(0.5) { 1 } else { -1 };
            SeamCurve::new(format!("s{k}"), [fa, ga, fb, gb], sign(rng), shift)
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

/// Curves of `H ∩ K` with a random number of inessential ones and enough
/// copies to absorb them.
pub fn inventory<R: Rng>(rng: &mut R) -> IntersectionInventory {
    let count = rng.gen_range(0..=8);
    let curves: Vec<InventoryCurve> = (0..count)
        .map(|j| InventoryCurve::new(format!("c{j}"), rng.gen_bool(0.6), None))
        .collect();
    let m = curves.iter().filter(|c| !c.essential).count() as u64;
    IntersectionInventory::new(curves, m + rng.gen_range(1..=6))
}
