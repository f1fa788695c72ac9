//! Cross-section of `H + nK` on a compressing disk `D` for `K`.
//!
//! The copies `K_1, ..., K_n` meet `D` in concentric circles, `K_1`
//! innermost. Each endpoint of an arc of `H ∩ D` on `∂D` produces a stack
//! of `n` crossings with a parity. Reading the parities clockwise from a
//! base point `x ∈ ∂D \ H` gives a balanced cyclic word; a horizontal arc at
//! level `i` moves to `i + 1` through a positive stack and to `i - 1`
//! through a negative one. The curve through `x_i` avoids every vertical
//! arc exactly when the whole walk stays inside `[1, n]`, so the surviving
//! levels are an interval cut out by the extremes of the prefix sums.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::sign::{format_word, parse_word, Parity};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiskError {
    #[error("stack word has odd length {0}; |H ∩ ∂D| is always even")]
    OddLength(usize),
    #[error("stack word has {plus} positive and {minus} negative stacks; positive and negative stacks must be equal in number")]
    Unbalanced { plus: usize, minus: usize },
    #[error("inner_closed = {inner_closed} exceeds v = {v}")]
    InnerClosed { inner_closed: u64, v: u64 },
    #[error("v = {v} is smaller than the {arcs} arcs plus {inner_closed} closed curves of H ∩ D")]
    ComponentCount { v: u64, arcs: u64, inner_closed: u64 },
    #[error("bad character `{0}` in stack word (expected '+' or '-')")]
    BadChar(char),
    #[error("arc {arc} has both endpoints of parity {parity}; the two ends of an arc of H ∩ K' give stacks of opposite parity")]
    InconsistentLabeling { arc: usize, parity: Parity },
    #[error("two arc endpoints share boundary position {0}")]
    DuplicatePosition(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDiskPattern", into = "RawDiskPattern")]
pub struct DiskPattern {
    word: Vec<Parity>,
    n: u64,
    v: u64,
    inner_closed: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDiskPattern {
    word: String,
    n: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    v: Option<u64>,
    #[serde(default)]
    inner_closed: u64,
}

impl TryFrom<RawDiskPattern> for DiskPattern {
    type Error = DiskError;

    fn try_from(raw: RawDiskPattern) -> Result<Self, Self::Error> {
        let word = parse_word(&raw.word).map_err(DiskError::BadChar)?;
        let v = raw.v.unwrap_or(word.len() as u64 / 2 + raw.inner_closed);
        DiskPattern::new(word, raw.n, v, raw.inner_closed)
    }
}

impl From<DiskPattern> for RawDiskPattern {
    fn from(p: DiskPattern) -> Self {
        Self {
            word: format_word(&p.word),
            n: p.n,
            v: Some(p.v),
            inner_closed: p.inner_closed,
        }
    }
}

impl DiskPattern {
    /// `v` counts the components of `H ∩ D`: the `h/2` arcs plus the closed
    /// curves, so `v >= h/2 + inner_closed`.
    pub fn new(word: Vec<Parity>, n: u64, v: u64, inner_closed: u64) -> Result<Self, DiskError> {
        check_balanced(&word)?;
        if inner_closed > v {
            return Err(DiskError::InnerClosed { inner_closed, v });
        }
        let arcs = word.len() as u64 / 2;
        if v < arcs + inner_closed {
            return Err(DiskError::ComponentCount { v, arcs, inner_closed });
        }
        Ok(Self {
            word,
            n,
            v,
            inner_closed,
        })
    }

    /// Pattern with no closed curves in `H ∩ D`.
    pub fn from_word(word: &str, n: u64) -> Result<Self, DiskError> {
        let word = parse_word(word).map_err(DiskError::BadChar)?;
        let v = word.len() as u64 / 2;
        Self::new(word, n, v, 0)
    }

    pub fn word(&self) -> &[Parity] {
        &self.word
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `h = |H ∩ ∂D|`.
    pub fn h(&self) -> u64 {
        self.word.len() as u64
    }

    pub fn v(&self) -> u64 {
        self.v
    }

    pub fn inner_closed(&self) -> u64 {
        self.inner_closed
    }

    pub fn with_n(&self, n: u64) -> Self {
        Self { n, ..self.clone() }
    }

    /// Moves the base point past the first `k` stacks.
    pub fn rotated(&self, k: usize) -> Self {
        let mut word = self.word.clone();
        if !word.is_empty() {
            let len = word.len();
            word.rotate_left(k % len);
        }
        Self { word, ..self.clone() }
    }
}

fn check_balanced(word: &[Parity]) -> Result<(), DiskError> {
    if !word.len().is_multiple_of(2) {
        return Err(DiskError::OddLength(word.len()));
    }
    let plus = word.iter().filter(|p| **p == Parity::Plus).count();
    let minus = word.len() - plus;
    if plus != minus {
        return Err(DiskError::Unbalanced { plus, minus });
    }
    Ok(())
}

/// A contiguous run of levels `first..=last`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelInterval {
    pub first: u64,
    pub last: u64,
}

impl LevelInterval {
    pub fn len(&self) -> u64 {
        self.last - self.first + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, level: u64) -> bool {
        self.first <= level && level <= self.last
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> {
        self.first..=self.last
    }
}

impl fmt::Display for LevelInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..={}", self.first, self.last)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceReport {
    pub h: u64,
    pub n: u64,
    pub arc_count: u64,
    /// Levels `i` for which `γ_i` is defined; `None` when there are none.
    pub gamma_levels: Option<LevelInterval>,
    pub gamma_count: u64,
    /// `(max, min)` over the prefix sums, the empty prefix included.
    pub excursion: (i64, i64),
    pub annuli: Vec<(u64, u64)>,
    pub extra_closed_bound: u64,
}

impl TraceReport {
    pub fn has_gamma(&self, level: u64) -> bool {
        self.gamma_levels.is_some_and(|g| g.contains(level))
    }
}

/// Prefix-sum extremes `(max, min)` of a parity word, starting from 0.
pub fn excursion(word: &[Parity]) -> (i64, i64) {
    let mut level = 0i64;
    let (mut hi, mut lo) = (0i64, 0i64);
    for p in word {
        level += p.step();
        hi = hi.max(level);
        lo = lo.min(level);
    }
    (hi, lo)
}

pub fn trace(dp: &DiskPattern) -> TraceReport {
    let h = dp.h();
    let n = dp.n as i64;
    let (hi, lo) = excursion(&dp.word);
    // x_i survives iff 1 <= i + p <= n for every prefix sum p.
    let first = 1 - lo;
    let last = n - hi;
    let gamma_levels = (last >= first).then_some(LevelInterval {
        first: first as u64,
        last: last as u64,
    });
    let arc_count = h / 2;
    let mut report = TraceReport {
        h,
        n: dp.n,
        arc_count,
        gamma_count: gamma_levels.map_or(0, |g| g.len()),
        gamma_levels,
        excursion: (hi, lo),
        annuli: Vec::new(),
        // Every other closed curve is a closed curve of H ∩ D or runs
        // through one of the h/2 internal vertical arcs.
        extra_closed_bound: (arc_count + dp.inner_closed).min(dp.v),
    };
    report.annuli = annuli(&report);
    report
}

/// Consecutive pairs `(i, i + 1)` of traced levels; `γ_i ∪ γ_{i+1}` bounds
/// an annulus of `D \ (H + nK)`.
pub fn annuli(report: &TraceReport) -> Vec<(u64, u64)> {
    match report.gamma_levels {
        Some(g) => (g.first..g.last).map(|i| (i, i + 1)).collect(),
        None => Vec::new(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcEndpoint {
    /// Clockwise position on `∂D` measured from the base point.
    pub position: u64,
    pub parity: Parity,
}

/// An arc of `H ∩ K'` with both endpoints on `∂D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryArc {
    pub ends: [ArcEndpoint; 2],
}

/// Reads the stack word off the endpoints of the arcs, clockwise.
pub fn stack_word_from_arcs(arcs: &[BoundaryArc]) -> Result<Vec<Parity>, DiskError> {
    let mut ends = Vec::with_capacity(arcs.len() * 2);
    for (i, arc) in arcs.iter().enumerate() {
        if arc.ends[0].parity == arc.ends[1].parity {
            return Err(DiskError::InconsistentLabeling {
                arc: i,
                parity: arc.ends[0].parity,
            });
        }
        ends.extend_from_slice(&arc.ends);
    }
    ends.sort_by_key(|e| e.position);
    if let Some(w) = ends.windows(2).find(|w| w[0].position == w[1].position) {
        return Err(DiskError::DuplicatePosition(w[0].position));
    }
    Ok(ends.into_iter().map(|e| e.parity).collect())
}
