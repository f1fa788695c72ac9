//! Resolves `F + nG` by drawing the cross-section at every seam: `F` is a
//! horizontal line, the `n` copies of `G` are vertical lines at `x = 1..n`,
//! and each crossing is smoothed according to ε.

use std::collections::HashMap;

use hakensum::surface_complex::{PatchComplex, SurfaceLabel};
use hakensum::Sign;

/// `(euler, closed, orientable, genus)` per component, sorted.
pub type ComponentKey = (i64, bool, Option<bool>, Option<u64>);

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn join(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

pub fn resolve_components(pc: &PatchComplex, n: u64) -> Vec<ComponentKey> {
    let n = n as usize;
    let nf = pc.f_patches.len();
    let ng = pc.g_patches.len();
    let f_ix: HashMap<&str, usize> = pc.f_patches.iter().enumerate().map(|(i, p)| (p.id.as_str(), i)).collect();
    let g_ix: HashMap<&str, usize> = pc.g_patches.iter().enumerate().map(|(i, p)| (p.id.as_str(), i)).collect();

    // Nodes: F patches, then copy-major G patches, then the strips of F
    // between consecutive copies at each seam.
    let g_node = |copy: usize, g: usize| nf + (copy - 1) * ng + g;
    let strips_base = nf + n * ng;
    let strips_per_seam = n.saturating_sub(1);
    let total = strips_base + pc.seams.len() * strips_per_seam;
    let mut dsu = Dsu((0..total).collect());

    for (k, seam) in pc.seams.iter().enumerate() {
        let q = &seam.quadrants;
        let look = |i: usize| -> usize {
            let r = &q[i];
            match r.surface {
                SurfaceLabel::F => f_ix[r.patch.as_str()],
                SurfaceLabel::G => g_ix[r.patch.as_str()],
            }
        };
        let (left, up, right, down) = (look(0), look(1), look(2), look(3));
        if n == 0 {
            dsu.join(left, right);
            continue;
        }
        let strip = |x: usize| strips_base + k * strips_per_seam + (x - 1);
        for x in 1..=n {
            let copy = if seam.level_shift > 0 { x } else { n + 1 - x };
            let west = if x == 1 { left } else { strip(x - 1) };
            let east = if x == n { right } else { strip(x) };
            let north = g_node(copy, up);
            let south = g_node(copy, down);
            match seam.epsilon {
                Sign::Plus => {
                    dsu.join(west, north);
                    dsu.join(east, south);
                }
                Sign::Minus => {
                    dsu.join(north, east);
                    dsu.join(south, west);
                }
            }
        }
    }

    let mut acc: HashMap<usize, (i64, u32, Option<bool>)> = HashMap::new();
    let patch_data = |node: usize| {
        if node < nf {
            let p = &pc.f_patches[node];
            (p.euler, p.free_boundary, p.orientable)
        } else if node < strips_base {
            let p = &pc.g_patches[(node - nf) % ng];
            (p.euler, p.free_boundary, p.orientable)
        } else {
            (0, 0, Some(true))
        }
    };
    for node in 0..total {
        let root = dsu.find(node);
        let (e, fb, o) = patch_data(node);
        let slot = acc.entry(root).or_insert((0, 0, Some(true)));
        slot.0 += e;
        slot.1 += fb;
        slot.2 = match (slot.2, o) {
            (Some(false), _) | (_, Some(false)) => Some(false),
            (Some(true), Some(true)) => Some(true),
            _ => None,
        };
    }
    let mut out: Vec<ComponentKey> = acc
        .into_values()
        .map(|(euler, free, orientable)| {
            let closed = free == 0;
            let genus = (closed && orientable == Some(true) && euler <= 2 && euler % 2 == 0)
                .then(|| ((2 - euler) / 2) as u64);
            (euler, closed, orientable, genus)
        })
        .collect();
    out.sort();
    out
}
