//! Lifts of the triangulation arcs `β'_j ⊂ K'`, `β''_k ⊂ K''` to the
//! near-cover `(H + nK) ∩ N(K)`, their shifts, the thresholds `b`, `s`, `N`,
//! and certificates that the traced curve `γ_i` is essential.
//!
//! A lift starting at `x_i` moves one level up or down each time it crosses
//! an α-arc; the crossing word of a β-arc records those steps. The shift is
//! the net displacement, independent of the starting level as long as the
//! walk stays inside `[1, n]`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShiftError {
    #[error("crossing word of beta {index} on {side} contains {value}; steps must be +1 or -1")]
    BadCrossing { side: Side, index: usize, value: i8 },
    #[error("side system for {0} has no beta arcs")]
    EmptySide(Side),
    #[error("beta {index} is labelled {found} inside the {expected} side system")]
    WrongSide { expected: Side, found: Side, index: usize },
    #[error("level {i} is outside the essential range ({big_n}, {upper}) for n = {n}")]
    OutOfRange { i: u64, n: u64, big_n: u64, upper: i64 },
    #[error("internal inconsistency: no pair of nonzero shifts realizes s = {s}")]
    NoShiftPair { s: u64 },
    #[error("euler data: euler(K) = {0} must be negative")]
    EulerKNotNegative(i64),
    #[error("euler data: euler(K') + euler(K'') = {sum} differs from euler(K) = {k}")]
    EulerSplit { sum: i64, k: i64 },
    #[error("euler inequality fails: {lhs} > {rhs} is false")]
    EulerInequality { lhs: i64, rhs: i64 },
    #[error("every placement of the dual curve through level {i} leaves [1, {n}]")]
    LiftsEscape { i: u64, n: u64 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("lift list has length {found}, expected {expected}")]
    Length { expected: u64, found: usize },
    #[error("lift starting at level {start} does not begin where the previous one ended")]
    Chain { start: u64 },
    #[error("lift starting at level {start} leaves [1, {n}]")]
    Escape { start: u64, n: u64 },
    #[error("lift starting at level {start} has shift {found}, expected {expected}")]
    Shift { start: u64, expected: i64, found: i64 },
    #[error("the two halves end at levels {prime} and {dblprime}; the loop does not close")]
    NotClosed { prime: i64, dblprime: i64 },
    #[error("the loop passes level {level} {count} times")]
    Repeated { level: i64, count: usize },
    #[error("the loop passes level {i} {count} times, expected once")]
    Passage { i: u64, count: usize },
    #[error("beta index {0} does not exist")]
    MissingBeta(usize),
    #[error("euler inequality {lhs} > {rhs} does not hold")]
    Euler { lhs: i64, rhs: i64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "prime")]
    Prime,
    #[serde(rename = "dblprime")]
    DoublePrime,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Prime => write!(f, "K'"),
            Side::DoublePrime => write!(f, "K''"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaArc {
    pub side: Side,
    /// 1-based position within its side system.
    pub index: usize,
    crossings: Vec<i8>,
}

impl BetaArc {
    pub fn new(side: Side, index: usize, crossings: Vec<i8>) -> Result<Self, ShiftError> {
        if let Some(&value) = crossings.iter().find(|c| c.abs() != 1) {
            return Err(ShiftError::BadCrossing { side, index, value });
        }
        Ok(Self { side, index, crossings })
    }

    pub fn crossings(&self) -> &[i8] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> u64 {
        self.crossings.len() as u64
    }

    /// The same arc with the opposite orientation: the word is read
    /// backwards and every step changes sign.
    pub fn reversed(&self) -> Self {
        Self {
            side: self.side,
            index: self.index,
            crossings: self.crossings.iter().rev().map(|c| -c).collect(),
        }
    }
}

/// `σ(β)`, the signed sum of the crossing word.
pub fn shift(beta: &BetaArc) -> i64 {
    beta.crossings.iter().map(|&c| c as i64).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftWalk {
    /// Levels visited, starting level first.
    pub levels: Vec<i64>,
    /// Some level fell outside `[1, n]`.
    pub escaped: bool,
}

impl LiftWalk {
    pub fn start(&self) -> i64 {
        self.levels[0]
    }

    pub fn terminal(&self) -> i64 {
        *self.levels.last().expect("a walk has at least its start")
    }
}

/// Walks the lift of `beta` that starts at `x_i` among `n` copies.
pub fn lift_beta(beta: &BetaArc, i: u64, n: u64) -> LiftWalk {
    let mut level = i as i64;
    let mut levels = Vec::with_capacity(beta.crossings.len() + 1);
    levels.push(level);
    let mut escaped = level < 1 || level > n as i64;
    for &c in &beta.crossings {
        level += c as i64;
        escaped |= level < 1 || level > n as i64;
        levels.push(level);
    }
    LiftWalk { levels, escaped }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideSystem {
    pub side: Side,
    pub betas: Vec<BetaArc>,
    pub alpha_count: u64,
}

impl SideSystem {
    pub fn new(side: Side, betas: Vec<BetaArc>, alpha_count: u64) -> Result<Self, ShiftError> {
        if betas.is_empty() {
            return Err(ShiftError::EmptySide(side));
        }
        if let Some(b) = betas.iter().find(|b| b.side != side) {
            return Err(ShiftError::WrongSide {
                expected: side,
                found: b.side,
                index: b.index,
            });
        }
        Ok(Self {
            side,
            betas,
            alpha_count,
        })
    }

    /// Builds the side from raw crossing words, numbering the arcs from 1.
    pub fn from_words(side: Side, words: Vec<Vec<i8>>, alpha_count: u64) -> Result<Self, ShiftError> {
        let betas = words
            .into_iter()
            .enumerate()
            .map(|(j, w)| BetaArc::new(side, j + 1, w))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(side, betas, alpha_count)
    }

    pub fn shifts(&self) -> Vec<i64> {
        self.betas.iter().map(shift).collect()
    }

    pub fn all_shifts_zero(&self) -> bool {
        self.betas.iter().all(|b| shift(b) == 0)
    }

    fn beta(&self, index: usize) -> Option<&BetaArc> {
        index.checked_sub(1).and_then(|j| self.betas.get(j))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftProfile {
    pub h: u64,
    pub shifts_prime: Vec<i64>,
    pub shifts_dblprime: Vec<i64>,
    /// Largest crossing count over all betas on both sides.
    pub b: u64,
    /// Least `lcm(|σ'_j|, |σ''_k|)`, with `lcm(x, 0) = ∞` and `min{∞} = 0`.
    pub s: u64,
    /// `max{h, b, s}`; `γ_i` is essential for `N < i < n - N`.
    #[serde(rename = "N")]
    pub big_n: u64,
}

impl ShiftProfile {
    /// Whether `N < i < n - N`.
    pub fn in_range(&self, i: u64, n: u64) -> bool {
        i > self.big_n && (i as i128) < n as i128 - self.big_n as i128
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `lcm` with the convention that anything with zero is infinite (`None`).
pub fn lcm_or_infinite(a: u64, b: u64) -> Option<u64> {
    if a == 0 || b == 0 {
        None
    } else {
        Some(a / gcd(a, b) * b)
    }
}

pub fn compute_thresholds(h: u64, prime: &SideSystem, dblprime: &SideSystem) -> ShiftProfile {
    let shifts_prime = prime.shifts();
    let shifts_dblprime = dblprime.shifts();
    let b = prime
        .betas
        .iter()
        .chain(&dblprime.betas)
        .map(BetaArc::crossing_count)
        .max()
        .unwrap_or(0);
    let s = shifts_prime
        .iter()
        .flat_map(|&x| shifts_dblprime.iter().map(move |&y| lcm_or_infinite(x.unsigned_abs(), y.unsigned_abs())))
        .flatten()
        .min()
        .unwrap_or(0);
    ShiftProfile {
        h,
        shifts_prime,
        shifts_dblprime,
        b,
        s,
        big_n: h.max(b).max(s),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerData {
    pub h: i64,
    pub k: i64,
    pub k_prime: i64,
    pub k_dblprime: i64,
}

impl EulerData {
    pub fn validate(&self) -> Result<(), ShiftError> {
        if self.k >= 0 {
            return Err(ShiftError::EulerKNotNegative(self.k));
        }
        let sum = self.k_prime + self.k_dblprime;
        if sum != self.k {
            return Err(ShiftError::EulerSplit { sum, k: self.k });
        }
        Ok(())
    }

    fn side(&self, side: Side) -> i64 {
        match side {
            Side::Prime => self.k_prime,
            Side::DoublePrime => self.k_dblprime,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Certificate {
    /// Every shift on `side` vanishes, so cutting along `γ_i` splits off a
    /// copy of that side; if `γ_i` bounded a disk the Euler characteristic
    /// would be `χ(side) + 1`, which is strictly larger than `χ(H + nK)`.
    ZeroSide {
        side: Side,
        i: u64,
        n: u64,
        euler_side: i64,
        /// `χ(side) + 1`.
        lhs: i64,
        /// `χ(H) + n·χ(K)`.
        rhs: i64,
    },
    /// A closed curve `δ = δ' ∪ δ''` in the near-cover meeting `γ_i` once.
    /// `δ'` chains `t/r` lifts of `β'_j` from `base` up to `base + t`, `δ''`
    /// chains `t/s` lifts of `β''_k` over the same span.
    DualCurve {
        i: u64,
        n: u64,
        prime_index: usize,
        dblprime_index: usize,
        prime_reversed: bool,
        dblprime_reversed: bool,
        r: u64,
        s: u64,
        t: u64,
        base: u64,
        prime_starts: Vec<u64>,
        dblprime_starts: Vec<u64>,
    },
}

pub fn essential_certificate(
    i: u64,
    n: u64,
    profile: &ShiftProfile,
    prime: &SideSystem,
    dblprime: &SideSystem,
    euler: &EulerData,
) -> Result<Certificate, ShiftError> {
    if !profile.in_range(i, n) {
        return Err(ShiftError::OutOfRange {
            i,
            n,
            big_n: profile.big_n,
            upper: n as i64 - profile.big_n as i64,
        });
    }

    let zero_side = if prime.all_shifts_zero() {
        Some(Side::Prime)
    } else if dblprime.all_shifts_zero() {
        Some(Side::DoublePrime)
    } else {
        None
    };
    if let Some(side) = zero_side {
        euler.validate()?;
        let euler_side = euler.side(side);
        let lhs = euler_side + 1;
        let rhs = euler.h + n as i64 * euler.k;
        if lhs <= rhs {
            return Err(ShiftError::EulerInequality { lhs, rhs });
        }
        return Ok(Certificate::ZeroSide {
            side,
            i,
            n,
            euler_side,
            lhs,
            rhs,
        });
    }

    // Lexicographically least (j, k) realizing s.
    let (j, k, r, s) = prime
        .betas
        .iter()
        .flat_map(|bp| dblprime.betas.iter().map(move |bd| (bp, bd)))
        .find_map(|(bp, bd)| {
            let (r, s) = (shift(bp).unsigned_abs(), shift(bd).unsigned_abs());
            (lcm_or_infinite(r, s) == Some(profile.s)).then_some((bp.index, bd.index, r, s))
        })
        .ok_or(ShiftError::NoShiftPair { s: profile.s })?;
    let t = profile.s;
    let beta_p = oriented(prime.beta(j).expect("index from the side system"));
    let beta_d = oriented(dblprime.beta(k).expect("index from the side system"));

    // The loop passes every x_{base + r·l} and x_{base + s·l}; any base that
    // puts i on that list works. Start with base = i.
    let mut bases: Vec<u64> = (0..=t / r)
        .map(|l| i as i64 - (r * l) as i64)
        .chain((1..=t / s).map(|l| i as i64 - (s * l) as i64))
        .filter(|&b| b >= 1 && b as u64 + t <= n)
        .map(|b| b as u64)
        .collect();
    bases.sort_by_key(|&b| (i - b, b));
    bases.dedup();

    for base in bases {
        let prime_starts: Vec<u64> = (0..t / r).map(|l| base + r * l).collect();
        let dblprime_starts: Vec<u64> = (0..t / s).map(|l| base + s * l).collect();
        let stays = |beta: &BetaArc, starts: &[u64]| starts.iter().all(|&st| !lift_beta(beta, st, n).escaped);
        if stays(&beta_p.0, &prime_starts) && stays(&beta_d.0, &dblprime_starts) {
            return Ok(Certificate::DualCurve {
                i,
                n,
                prime_index: j,
                dblprime_index: k,
                prime_reversed: beta_p.1,
                dblprime_reversed: beta_d.1,
                r,
                s,
                t,
                base,
                prime_starts,
                dblprime_starts,
            });
        }
    }
    Err(ShiftError::LiftsEscape { i, n })
}

fn oriented(beta: &BetaArc) -> (BetaArc, bool) {
    if shift(beta) < 0 {
        (beta.reversed(), true)
    } else {
        (beta.clone(), false)
    }
}

impl Certificate {
    /// Re-walks every lift and checks that the certificate is what it claims.
    pub fn validate(&self, prime: &SideSystem, dblprime: &SideSystem, euler: &EulerData) -> Result<(), CertificateError> {
        match self {
            Certificate::ZeroSide { side, n, .. } => {
                let lhs = euler.side(*side) + 1;
                let rhs = euler.h + *n as i64 * euler.k;
                if lhs > rhs {
                    Ok(())
                } else {
                    Err(CertificateError::Euler { lhs, rhs })
                }
            }
            Certificate::DualCurve {
                i,
                n,
                prime_index,
                dblprime_index,
                prime_reversed,
                dblprime_reversed,
                r,
                s,
                t,
                base,
                prime_starts,
                dblprime_starts,
            } => {
                let pick = |sys: &SideSystem, idx: usize, rev: bool| {
                    sys.beta(idx)
                        .map(|b| if rev { b.reversed() } else { b.clone() })
                        .ok_or(CertificateError::MissingBeta(idx))
                };
                let bp = pick(prime, *prime_index, *prime_reversed)?;
                let bd = pick(dblprime, *dblprime_index, *dblprime_reversed)?;
                let end_p = walk_chain(&bp, *base, *r, *t, prime_starts, *n)?;
                let end_d = walk_chain(&bd, *base, *s, *t, dblprime_starts, *n)?;
                if end_p != end_d {
                    return Err(CertificateError::NotClosed {
                        prime: end_p,
                        dblprime: end_d,
                    });
                }
                // Base points met going up δ' and back down δ''; the shared
                // ends are met once each.
                let mut visits: Vec<i64> = prime_starts.iter().map(|&v| v as i64).collect();
                visits.push(end_p);
                visits.extend(dblprime_starts.iter().skip(1).map(|&v| v as i64));
                let mut sorted = visits.clone();
                sorted.sort_unstable();
                if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                    let count = visits.iter().filter(|&&v| v == w[0]).count();
                    return Err(CertificateError::Repeated { level: w[0], count });
                }
                let count = visits.iter().filter(|&&v| v == *i as i64).count();
                if count != 1 {
                    return Err(CertificateError::Passage { i: *i, count });
                }
                Ok(())
            }
        }
    }
}

fn walk_chain(beta: &BetaArc, base: u64, step: u64, t: u64, starts: &[u64], n: u64) -> Result<i64, CertificateError> {
    let expected = t / step;
    if starts.len() as u64 != expected {
        return Err(CertificateError::Length {
            expected,
            found: starts.len(),
        });
    }
    let mut at = base as i64;
    for &start in starts {
        if start as i64 != at {
            return Err(CertificateError::Chain { start });
        }
        let walk = lift_beta(beta, start, n);
        if walk.escaped {
            return Err(CertificateError::Escape { start, n });
        }
        let found = walk.terminal() - walk.start();
        if found != step as i64 {
            return Err(CertificateError::Shift {
                start,
                expected: step as i64,
                found,
            });
        }
        at = walk.terminal();
    }
    Ok(at)
}

/// Looks for the configuration a boundary-parallel annulus `A_i` would force:
/// every shift at level `i` in `{0, 1}` with at least one `1`, and every
/// shift at level `i + 1` in `{0, -1}`. Returns the 1-based index of the
/// first arc whose shift changes between the two levels.
pub fn annulus_shift_contradiction(at_i: &[i64], at_next: &[i64]) -> Option<usize> {
    if at_i.len() != at_next.len() {
        return None;
    }
    if !at_i.iter().all(|s| matches!(s, 0 | 1)) || !at_next.iter().all(|s| matches!(s, 0 | -1)) {
        return None;
    }
    at_i.iter().position(|&s| s == 1).map(|j| j + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn side(side: Side, words: &[&[i8]]) -> SideSystem {
        SideSystem::from_words(side, words.iter().map(|w| w.to_vec()).collect(), 2).unwrap()
    }

    #[test]
    fn shift_examples() {
        let b = BetaArc::new(Side::Prime, 1, vec![1, 1, -1]).unwrap();
        assert_eq!(shift(&b), 1);
        assert_eq!(shift(&BetaArc::new(Side::Prime, 1, vec![]).unwrap()), 0);
        assert!(BetaArc::new(Side::Prime, 1, vec![2]).is_err());
        assert_eq!(shift(&b.reversed()), -1);
        assert_eq!(b.reversed().crossings(), &[1, -1, -1]);
    }

    #[test]
    fn lift_examples() {
        let b = BetaArc::new(Side::Prime, 1, vec![1, 1, -1]).unwrap();
        let w = lift_beta(&b, 5, 20);
        assert_eq!(w.levels, vec![5, 6, 7, 6]);
        assert_eq!(w.terminal(), 6);
        assert!(!w.escaped);
        let still = lift_beta(&BetaArc::new(Side::Prime, 1, vec![]).unwrap(), 4, 9);
        assert_eq!(still.levels, vec![4]);
        assert!(lift_beta(&b, 19, 20).escaped);
        assert!(lift_beta(&b.reversed(), 1, 20).escaped);
    }

    #[test]
    fn thresholds() {
        let p = compute_thresholds(0, &side(Side::Prime, &[&[1, 1]]), &side(Side::DoublePrime, &[&[1, 1, 1]]));
        assert_eq!(p.s, 6);
        assert_eq!(p.b, 3);
        assert_eq!(p.big_n, 6);
        let p = compute_thresholds(
            0,
            &side(Side::Prime, &[&[1, -1], &[]]),
            &side(Side::DoublePrime, &[&[1, 1, 1, 1, 1]]),
        );
        assert_eq!(p.s, 0);
        let p = compute_thresholds(
            4,
            &side(Side::Prime, &[&[1, 1, 1, 1, 1, -1, -1]]),
            &side(Side::DoublePrime, &[&[1, 1, 1]]),
        );
        assert_eq!((p.h, p.b, p.s, p.big_n), (4, 7, 3, 7));
    }

    #[test]
    fn lcm_conventions() {
        assert_eq!(lcm_or_infinite(2, 3), Some(6));
        assert_eq!(lcm_or_infinite(4, 6), Some(12));
        assert_eq!(lcm_or_infinite(0, 5), None);
        assert_eq!(lcm_or_infinite(0, 0), None);
    }

    #[test]
    fn dual_curve_example() {
        let prime = side(Side::Prime, &[&[1, 1]]);
        let dbl = side(Side::DoublePrime, &[&[1, 1, 1]]);
        let profile = compute_thresholds(0, &prime, &dbl);
        let euler = EulerData { h: -4, k: -4, k_prime: -2, k_dblprime: -2 };
        let cert = essential_certificate(10, 30, &profile, &prime, &dbl, &euler).unwrap();
        match &cert {
            Certificate::DualCurve { t, base, prime_starts, dblprime_starts, .. } => {
                assert_eq!(*t, 6);
                assert_eq!(*base, 10);
                assert_eq!(prime_starts, &vec![10, 12, 14]);
                assert_eq!(dblprime_starts, &vec![10, 13]);
            }
            other => panic!("unexpected {other:?}"),
        }
        cert.validate(&prime, &dbl, &euler).unwrap();
    }

    #[test]
    fn negative_shifts_are_reversed() {
        let prime = side(Side::Prime, &[&[-1, -1]]);
        let dbl = side(Side::DoublePrime, &[&[1, -1, -1, -1]]);
        let profile = compute_thresholds(0, &prime, &dbl);
        let euler = EulerData { h: -4, k: -4, k_prime: -2, k_dblprime: -2 };
        let cert = essential_certificate(9, 30, &profile, &prime, &dbl, &euler).unwrap();
        let Certificate::DualCurve { prime_reversed, dblprime_reversed, r, s, .. } = &cert else {
            panic!("expected a dual curve");
        };
        assert!(*prime_reversed && *dblprime_reversed);
        assert_eq!((*r, *s), (2, 2));
        cert.validate(&prime, &dbl, &euler).unwrap();
    }

    #[test]
    fn zero_side_example() {
        let prime = side(Side::Prime, &[&[1, -1], &[]]);
        let dbl = side(Side::DoublePrime, &[&[1, 1, 1]]);
        let profile = compute_thresholds(2, &prime, &dbl);
        let euler = EulerData { h: -4, k: -4, k_prime: -2, k_dblprime: -2 };
        for n in 9..40 {
            let cert = essential_certificate(4, n, &profile, &prime, &dbl, &euler).unwrap();
            assert_eq!(
                cert,
                Certificate::ZeroSide { side: Side::Prime, i: 4, n, euler_side: -2, lhs: -1, rhs: -4 - 4 * n as i64 }
            );
            cert.validate(&prime, &dbl, &euler).unwrap();
        }
    }

    #[test]
    fn range_and_euler_errors() {
        let prime = side(Side::Prime, &[&[1, 1]]);
        let dbl = side(Side::DoublePrime, &[&[1, 1, 1]]);
        let profile = compute_thresholds(0, &prime, &dbl);
        let euler = EulerData { h: -4, k: -4, k_prime: -2, k_dblprime: -2 };
        assert!(matches!(
            essential_certificate(6, 30, &profile, &prime, &dbl, &euler),
            Err(ShiftError::OutOfRange { .. })
        ));
        assert!(matches!(
            essential_certificate(24, 30, &profile, &prime, &dbl, &euler),
            Err(ShiftError::OutOfRange { .. })
        ));
        let zero = side(Side::Prime, &[&[]]);
        let p0 = compute_thresholds(0, &zero, &dbl);
        let bad = EulerData { k: 2, k_prime: 1, k_dblprime: 1, h: 0 };
        assert_eq!(
            essential_certificate(5, 20, &p0, &zero, &dbl, &bad),
            Err(ShiftError::EulerKNotNegative(2))
        );
        let split = EulerData { h: -4, k: -4, k_prime: -1, k_dblprime: -2 };
        assert!(matches!(
            essential_certificate(5, 20, &p0, &zero, &dbl, &split),
            Err(ShiftError::EulerSplit { .. })
        ));
        let mut wrong = profile.clone();
        wrong.s = 5;
        assert_eq!(
            essential_certificate(10, 40, &wrong, &prime, &dbl, &euler),
            Err(ShiftError::NoShiftPair { s: 5 })
        );
    }

    #[test]
    fn validate_rejects_tampering() {
        let prime = side(Side::Prime, &[&[1, 1]]);
        let dbl = side(Side::DoublePrime, &[&[1, 1, 1]]);
        let euler = EulerData { h: -4, k: -4, k_prime: -2, k_dblprime: -2 };
        let profile = compute_thresholds(0, &prime, &dbl);
        let cert = essential_certificate(10, 30, &profile, &prime, &dbl, &euler).unwrap();
        let Certificate::DualCurve { mut prime_starts, .. } = cert.clone() else { unreachable!() };
        prime_starts[1] = 13;
        let mut bad = cert.clone();
        if let Certificate::DualCurve { prime_starts: ps, .. } = &mut bad {
            *ps = prime_starts;
        }
        assert!(bad.validate(&prime, &dbl, &euler).is_err());
        let mut bad = cert;
        if let Certificate::DualCurve { i, .. } = &mut bad {
            *i = 11;
        }
        assert!(matches!(bad.validate(&prime, &dbl, &euler), Err(CertificateError::Passage { .. })));
    }

    #[test]
    fn annulus_contradiction_examples() {
        assert_eq!(annulus_shift_contradiction(&[0, 1, 0], &[0, -1, 0]), Some(2));
        assert_eq!(annulus_shift_contradiction(&[0, 0], &[0, 0]), None);
        assert_eq!(annulus_shift_contradiction(&[1], &[1]), None);
        assert_eq!(annulus_shift_contradiction(&[1, 2], &[0, 0]), None);
        assert_eq!(annulus_shift_contradiction(&[1], &[0, 0]), None);
    }
}
