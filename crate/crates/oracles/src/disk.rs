//! Instantiates all `n` circles `K_ℓ ∩ D`, splices them at every stack of
//! `H ∩ ∂D`, and enumerates the resulting components.
//!
//! Circle `ℓ` is cut by the `h` stacks into segments `(ℓ, s)`, segment `s`
//! running from stack `s - 1` to stack `s`. At a positive stack the strand
//! on level `ℓ` leaves one level higher; the top strand runs out through
//! `∂D` and a fresh strand enters level 1 from the innermost disk. Negative
//! stacks mirror this. Strands entering the innermost disk are paired up by
//! non-crossing internal arcs.

use hakensum::Sign;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskCensus {
    /// Components with both ends on `∂D`.
    pub arc_count: usize,
    /// Levels whose segment 0 lies on a closed curve made of horizontal
    /// segments only.
    pub gamma_levels: Vec<u64>,
    /// Closed curves that use an internal arc.
    pub extra_closed: usize,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

fn join(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    parent[ra] = rb;
}

/// Pairs stacks of opposite parity without crossings by repeatedly matching
/// cyclically adjacent opposite pairs.
pub fn internal_matching(word: &[Sign]) -> Vec<(usize, usize)> {
    let mut alive: Vec<usize> = (0..word.len()).collect();
    let mut pairs = Vec::new();
    while alive.len() >= 2 {
        let len = alive.len();
        let j = (0..len)
            .find(|&j| word[alive[j]] != word[alive[(j + 1) % len]])
            .expect("a balanced word always has an adjacent opposite pair");
        let (a, b) = (alive[j], alive[(j + 1) % len]);
        pairs.push((a.min(b), a.max(b)));
        alive.retain(|&x| x != a && x != b);
    }
    pairs
}

pub fn census(word: &[Sign], n: u64) -> DiskCensus {
    let h = word.len();
    let n = n as usize;
    if h == 0 {
        return DiskCensus {
            arc_count: 0,
            gamma_levels: (1..=n as u64).collect(),
            extra_closed: 0,
        };
    }
    let seg = |level: usize, s: usize| (level - 1) * h + (s % h);
    let ext = |s: usize| n * h + s;
    let int = |s: usize| n * h + h + s;
    let total = n * h + 2 * h;
    let mut parent: Vec<usize> = (0..total).collect();

    for (s, &p) in word.iter().enumerate() {
        match p {
            Sign::Plus => {
                for level in 1..n {
                    join(&mut parent, seg(level, s), seg(level + 1, s + 1));
                }
                if n > 0 {
                    join(&mut parent, seg(n, s), ext(s));
                    join(&mut parent, seg(1, s + 1), int(s));
                }
            }
            Sign::Minus => {
                for level in 2..=n {
                    join(&mut parent, seg(level, s), seg(level - 1, s + 1));
                }
                if n > 0 {
                    join(&mut parent, seg(1, s), int(s));
                    join(&mut parent, seg(n, s + 1), ext(s));
                }
            }
        }
    }
    for (a, b) in internal_matching(word) {
        join(&mut parent, int(a), int(b));
    }

    let mut roots_ext = std::collections::BTreeSet::new();
    let mut roots_int = std::collections::BTreeSet::new();
    if n > 0 {
        for s in 0..h {
            roots_ext.insert(find(&mut parent, ext(s)));
            roots_int.insert(find(&mut parent, int(s)));
        }
    }
    let gamma_levels = (1..=n)
        .filter(|&level| {
            let r = find(&mut parent, seg(level, 0));
            !roots_ext.contains(&r) && !roots_int.contains(&r)
        })
        .map(|l| l as u64)
        .collect();
    DiskCensus {
        arc_count: roots_ext.len(),
        gamma_levels,
        extra_closed: roots_int.difference(&roots_ext).count(),
    }
}

/// Every balanced word of length `h`, in lexicographic order with `+ < -`.
pub fn balanced_words(h: usize) -> Vec<Vec<Sign>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << h) {
        if mask.count_ones() as usize * 2 != h {
            continue;
        }
        out.push(
            (0..h)
                .map(|j| if mask >> (h - 1 - j) & 1 == 1 { Sign::Minus } else { Sign::Plus })
                .collect(),
        );
    }
    out
}
