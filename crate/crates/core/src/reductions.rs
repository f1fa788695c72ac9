//! Inventory rewrites for `H ∩ K` and the packing/slicing procedure on a
//! stack of cans inside a solid torus.

use std::collections::BTreeMap;
use std::collections::HashSet;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::sign::Sign;
use crate::surface_complex::{absorb, euler_of_sum, resolve, ComplexError, PatchComplex, ResolvedSurface};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("insufficient copies: n = {n} but {m} copies must be absorbed")]
    InsufficientCopies { n: u64, m: u64 },
    #[error("inventory mixes curves with and without parity")]
    MixedParity,
    #[error("duplicate curve id `{0}`")]
    DuplicateCurve(String),
    #[error("parity reduction needs parities on every curve")]
    NotTorusMode,
    #[error("curve `{0}` is inessential; remove trivial curves first")]
    Inessential(String),
    #[error("equal numbers of positive and negative curves ({0} each): H + nT would be disconnected")]
    Disconnected(u64),
    #[error("more negative curves ({minus}) than positive ({plus}); reorient T first")]
    NegativeMajority { plus: u64, minus: u64 },
    #[error("the period m must be positive")]
    ZeroPeriod,
    #[error("attached complex: {0}")]
    Complex(ComplexError),
    #[error("attached complex changed under the rewrite: {before:?} became {after:?}")]
    InvariantChanged {
        before: Box<ResolvedSurface>,
        after: Box<ResolvedSurface>,
    },
    #[error("invalid can state: {0}")]
    BadState(String),
    #[error("move {mv:?} is not applicable: {reason}")]
    Guard { mv: Move, reason: String },
}

impl From<ComplexError> for ReductionError {
    fn from(e: ComplexError) -> Self {
        ReductionError::Complex(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InventoryCurve {
    pub id: String,
    /// Essential on `K`.
    pub essential: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parity: Option<Sign>,
}

impl InventoryCurve {
    pub fn new(id: impl Into<String>, essential: bool, parity: Option<Sign>) -> Self {
        Self {
            id: id.into(),
            essential,
            parity,
        }
    }
}

/// The curves of `H ∩ K` together with the copy count `n`. When a patch
/// complex for `H` against `K` is attached, rewrites carry it along and check
/// that `H + nK` is unchanged.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntersectionInventory {
    pub curves: Vec<InventoryCurve>,
    pub n: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complex: Option<PatchComplex>,
}

impl IntersectionInventory {
    pub fn new(curves: Vec<InventoryCurve>, n: u64) -> Self {
        Self {
            curves,
            n,
            complex: None,
        }
    }

    /// Builds a torus-mode inventory of essential curves from a word such as `"++-+"`.
    pub fn from_parities(word: &[Sign], n: u64) -> Self {
        let curves = word
            .iter()
            .enumerate()
            .map(|(j, &p)| InventoryCurve::new(format!("c{}", j + 1), true, Some(p)))
            .collect();
        Self::new(curves, n)
    }

    pub fn with_complex(mut self, pc: PatchComplex) -> Self {
        self.complex = Some(pc);
        self
    }

    pub fn validate(&self) -> Result<(), ReductionError> {
        let with = self.curves.iter().filter(|c| c.parity.is_some()).count();
        if with != 0 && with != self.curves.len() {
            return Err(ReductionError::MixedParity);
        }
        let mut seen = HashSet::new();
        for c in &self.curves {
            if !seen.insert(c.id.as_str()) {
                return Err(ReductionError::DuplicateCurve(c.id.clone()));
            }
        }
        Ok(())
    }

    pub fn is_torus_mode(&self) -> bool {
        !self.curves.is_empty() && self.curves.iter().all(|c| c.parity.is_some())
    }

    pub fn inessential_count(&self) -> u64 {
        self.curves.iter().filter(|c| !c.essential).count() as u64
    }

    pub fn parities(&self) -> Vec<Sign> {
        self.curves.iter().filter_map(|c| c.parity).collect()
    }

    /// Absorbs `m` copies into the attached complex, if any, and checks that
    /// the resolved surface is unchanged.
    fn absorb_checked(&self, m: u64) -> Result<Option<PatchComplex>, ReductionError> {
        let Some(pc) = &self.complex else {
            return Ok(None);
        };
        let before = resolve(pc, self.n)?;
        let next = absorb(pc, m)?;
        let after = resolve(&next, self.n - m)?;
        if before.components != after.components {
            return Err(ReductionError::InvariantChanged {
                before: Box::new(before),
                after: Box::new(after),
            });
        }
        Ok(Some(next))
    }
}

/// Drops the `m` curves that are inessential on `K` and passes to
/// `H' + (n - m)K`. With `m = 0` the inventory is returned unchanged.
pub fn remove_trivial(inv: &IntersectionInventory) -> Result<(IntersectionInventory, u64), ReductionError> {
    inv.validate()?;
    let m = inv.inessential_count();
    if m == 0 {
        return Ok((inv.clone(), 0));
    }
    if inv.n <= m {
        return Err(ReductionError::InsufficientCopies { n: inv.n, m });
    }
    let complex = inv.absorb_checked(m)?;
    let out = IntersectionInventory {
        curves: inv.curves.iter().filter(|c| c.essential).cloned().collect(),
        n: inv.n - m,
        complex,
    };
    Ok((out, m))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityReduction {
    pub inventory: IntersectionInventory,
    /// `#positive - #negative`, the number of surviving curves.
    pub m: u64,
    /// Copies absorbed, `(|H ∩ T| - m) / 2`.
    pub m_prime: u64,
}

/// Cancels adjacent curves of opposite parity around `T` until only positive
/// curves remain, absorbing one copy per cancelled pair.
pub fn reduce_parities(inv: &IntersectionInventory) -> Result<ParityReduction, ReductionError> {
    inv.validate()?;
    if !inv.is_torus_mode() {
        return Err(ReductionError::NotTorusMode);
    }
    if let Some(c) = inv.curves.iter().find(|c| !c.essential) {
        return Err(ReductionError::Inessential(c.id.clone()));
    }
    let plus = inv.parities().iter().filter(|&&p| p == Sign::Plus).count() as u64;
    let minus = inv.curves.len() as u64 - plus;
    if plus == minus {
        return Err(ReductionError::Disconnected(plus));
    }
    if minus > plus {
        return Err(ReductionError::NegativeMajority { plus, minus });
    }
    let m = plus - minus;
    let m_prime = minus;
    if m_prime == 0 {
        return Ok(ParityReduction {
            inventory: inv.clone(),
            m,
            m_prime,
        });
    }
    if inv.n <= m_prime {
        return Err(ReductionError::InsufficientCopies { n: inv.n, m: m_prime });
    }

    // A single pass with a stack leaves no adjacent opposite pair, so what
    // remains has one sign; the cyclic closure cancels nothing further.
    let mut stack: Vec<&InventoryCurve> = Vec::with_capacity(inv.curves.len());
    for c in &inv.curves {
        match stack.last() {
            Some(top) if top.parity != c.parity => {
                stack.pop();
            }
            _ => stack.push(c),
        }
    }
    debug_assert!(stack.iter().all(|c| c.parity == Some(Sign::Plus)));
    let complex = inv.absorb_checked(m_prime)?;
    Ok(ParityReduction {
        inventory: IntersectionInventory {
            curves: stack.into_iter().cloned().collect(),
            n: inv.n - m_prime,
            complex,
        },
        m,
        m_prime,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicityReport {
    pub m: u64,
    /// Residue classes mod `m`, ordered by smallest member.
    pub classes: Vec<Vec<u64>>,
    pub euler_h: i64,
    /// `χ(H + nT)` for every `n` in the range.
    pub eulers: BTreeMap<u64, i64>,
}

impl PeriodicityReport {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn euler_constant(&self) -> bool {
        self.eulers.values().all(|&e| e == self.euler_h)
    }
}

/// `H + nT` and `H + (n + m)T` are isotopic once all `m` curves of `H ∩ T`
/// are positive, so the range falls into at most `m` isotopy classes.
pub fn torus_periodicity(m: u64, range: RangeInclusive<u64>, euler_h: i64) -> Result<PeriodicityReport, ReductionError> {
    if m == 0 {
        return Err(ReductionError::ZeroPeriod);
    }
    let mut by_residue: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    let mut eulers = BTreeMap::new();
    for n in range {
        by_residue.entry(n % m).or_default().push(n);
        eulers.insert(n, euler_of_sum(euler_h, 0, n));
    }
    let mut classes: Vec<Vec<u64>> = by_residue.into_values().collect();
    classes.sort_by_key(|c| c[0]);
    Ok(PeriodicityReport {
        m,
        classes,
        euler_h,
        eulers,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiskSide {
    Top,
    Bottom,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "move")]
pub enum Move {
    /// Push one outside component of `H \ Y` into the can through a disk face.
    Pack { can: usize, side: DiskSide },
    /// Cut a can between its curves `at - 1` and `at` (0-based).
    Slice { can: usize, at: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CanState {
    cans: Vec<Vec<String>>,
    outside_components: u64,
    #[serde(default)]
    history: Vec<Move>,
}

impl CanState {
    pub fn new(cans: Vec<Vec<String>>, outside_components: u64) -> Result<Self, ReductionError> {
        let state = Self {
            cans,
            outside_components,
            history: Vec::new(),
        };
        state.validate()?;
        Ok(state)
    }

    /// Cans of the given sizes with curves named `g1, g2, ...` in order.
    pub fn from_sizes(sizes: &[usize], outside_components: u64) -> Result<Self, ReductionError> {
        let mut next = 0;
        let cans = sizes
            .iter()
            .map(|&k| {
                (0..k)
                    .map(|_| {
                        next += 1;
                        format!("g{next}")
                    })
                    .collect()
            })
            .collect();
        Self::new(cans, outside_components)
    }

    pub fn validate(&self) -> Result<(), ReductionError> {
        if self.cans.is_empty() {
            return Err(ReductionError::BadState("no cans".into()));
        }
        let mut seen = HashSet::new();
        for (j, can) in self.cans.iter().enumerate() {
            if can.is_empty() {
                return Err(ReductionError::BadState(format!("can {j} holds no curve")));
            }
            for id in can {
                if !seen.insert(id.as_str()) {
                    return Err(ReductionError::BadState(format!("curve `{id}` appears twice")));
                }
            }
        }
        Ok(())
    }

    pub fn cans(&self) -> &[Vec<String>] {
        &self.cans
    }

    pub fn outside_components(&self) -> u64 {
        self.outside_components
    }

    pub fn history(&self) -> &[Move] {
        &self.history
    }

    pub fn curve_count(&self) -> u64 {
        self.cans.iter().map(Vec::len).sum::<usize>() as u64
    }

    /// `(outside components, curves - cans)`, compared lexicographically.
    pub fn measure(&self) -> (u64, u64) {
        (self.outside_components, self.curve_count() - self.cans.len() as u64)
    }

    pub fn applicable_moves(&self) -> Vec<Move> {
        let mut moves = Vec::new();
        if self.outside_components > 0 {
            for can in 0..self.cans.len() {
                moves.push(Move::Pack { can, side: DiskSide::Top });
                moves.push(Move::Pack { can, side: DiskSide::Bottom });
            }
        }
        for (can, curves) in self.cans.iter().enumerate() {
            moves.extend((1..curves.len()).map(|at| Move::Slice { can, at }));
        }
        moves
    }

    pub fn is_terminal(&self) -> bool {
        self.outside_components == 0 && self.cans.iter().all(|c| c.len() == 1)
    }
}

pub fn tuna_can_step(state: &CanState, mv: &Move) -> Result<CanState, ReductionError> {
    let guard = |reason: String| ReductionError::Guard {
        mv: mv.clone(),
        reason,
    };
    let mut next = state.clone();
    match *mv {
        Move::Pack { can, .. } => {
            if can >= state.cans.len() {
                return Err(guard(format!("there is no can {can}")));
            }
            if state.outside_components == 0 {
                return Err(guard("no outside components remain".into()));
            }
            next.outside_components -= 1;
        }
        Move::Slice { can, at } => {
            let Some(curves) = state.cans.get(can) else {
                return Err(guard(format!("there is no can {can}")));
            };
            if curves.len() < 2 {
                return Err(guard("a can with one curve cannot be sliced".into()));
            }
            if at == 0 || at >= curves.len() {
                return Err(guard(format!("slice position must lie in 1..{}", curves.len())));
            }
            let upper = next.cans[can].split_off(at);
            next.cans.insert(can + 1, upper);
        }
    }
    next.history.push(mv.clone());
    Ok(next)
}

/// Chooses one of the applicable moves by index; out-of-range indices wrap.
pub trait Strategy {
    fn choose(&mut self, state: &CanState, moves: &[Move]) -> usize;
}

impl<F: FnMut(&CanState, &[Move]) -> usize> Strategy for F {
    fn choose(&mut self, state: &CanState, moves: &[Move]) -> usize {
        self(state, moves)
    }
}

/// Always takes the first applicable move: packs before slices.
pub struct FirstMove;

impl Strategy for FirstMove {
    fn choose(&mut self, _: &CanState, _: &[Move]) -> usize {
        0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunTrace {
    pub initial: CanState,
    pub terminal: CanState,
    pub moves: Vec<Move>,
    pub measures: Vec<(u64, u64)>,
    pub slices: u64,
    pub packs: u64,
    /// Slices allowed: curves minus initial cans.
    pub slice_bound: u64,
    /// Packs allowed: initial outside components.
    pub pack_bound: u64,
}

impl RunTrace {
    pub fn within_bound(&self) -> bool {
        self.slices <= self.slice_bound && self.packs <= self.pack_bound
    }

    pub fn measure_decreasing(&self) -> bool {
        self.measures.windows(2).all(|w| w[1] < w[0])
    }
}

/// Applies moves chosen by `strategy` until none is applicable.
pub fn tuna_can_run(state: &CanState, strategy: &mut dyn Strategy) -> RunTrace {
    let mut current = state.clone();
    let mut measures = vec![current.measure()];
    let (mut slices, mut packs) = (0, 0);
    loop {
        let moves = current.applicable_moves();
        if moves.is_empty() {
            break;
        }
        let mv = &moves[strategy.choose(&current, &moves) % moves.len()];
        current = tuna_can_step(&current, mv).expect("applicable moves pass their guards");
        match mv {
            Move::Pack { .. } => packs += 1,
            Move::Slice { .. } => slices += 1,
        }
        measures.push(current.measure());
    }
    RunTrace {
        initial: state.clone(),
        moves: current.history[state.history.len()..].to_vec(),
        terminal: current,
        measures,
        slices,
        packs,
        slice_bound: state.curve_count() - state.cans.len() as u64,
        pack_bound: state.outside_components,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sign::parse_word;

    fn curves(essential: &[bool]) -> Vec<InventoryCurve> {
        essential
            .iter()
            .enumerate()
            .map(|(j, &e)| InventoryCurve::new(format!("c{j}"), e, None))
            .collect()
    }

    #[test]
    fn remove_trivial_examples() {
        let inv = IntersectionInventory::new(curves(&[true, false, true, false, true]), 10);
        let (out, m) = remove_trivial(&inv).unwrap();
        assert_eq!(m, 2);
        assert_eq!(out.n, 8);
        assert_eq!(out.curves.len(), 3);
        assert!(out.curves.iter().all(|c| c.essential));
        let (same, m) = remove_trivial(&out).unwrap();
        assert_eq!((same, m), (out, 0));
        let short = IntersectionInventory::new(curves(&[false, false]), 2);
        assert_eq!(
            remove_trivial(&short),
            Err(ReductionError::InsufficientCopies { n: 2, m: 2 })
        );
    }

    #[test]
    fn reduce_parities_examples() {
        let inv = IntersectionInventory::from_parities(&parse_word("++-+").unwrap(), 9);
        let r = reduce_parities(&inv).unwrap();
        assert_eq!((r.m, r.m_prime), (2, 1));
        assert_eq!(r.inventory.parities(), parse_word("++").unwrap());
        assert_eq!(r.inventory.n, 8);
        let again = reduce_parities(&r.inventory).unwrap();
        assert_eq!(again.m_prime, 0);
        assert_eq!(again.inventory, r.inventory);
    }

    #[test]
    fn reduce_parities_errors() {
        let eq = IntersectionInventory::from_parities(&parse_word("+-").unwrap(), 5);
        assert_eq!(reduce_parities(&eq), Err(ReductionError::Disconnected(1)));
        let neg = IntersectionInventory::from_parities(&parse_word("-+-").unwrap(), 5);
        assert!(matches!(reduce_parities(&neg), Err(ReductionError::NegativeMajority { .. })));
        let few = IntersectionInventory::from_parities(&parse_word("+-+-+").unwrap(), 2);
        assert!(matches!(reduce_parities(&few), Err(ReductionError::InsufficientCopies { .. })));
        let plain = IntersectionInventory::new(curves(&[true]), 3);
        assert_eq!(reduce_parities(&plain), Err(ReductionError::NotTorusMode));
        let mut mixed = IntersectionInventory::from_parities(&parse_word("++").unwrap(), 3);
        mixed.curves[0].parity = None;
        assert_eq!(reduce_parities(&mixed), Err(ReductionError::MixedParity));
    }

    #[test]
    fn periodicity_examples() {
        let r = torus_periodicity(3, 1..=10, -4).unwrap();
        assert_eq!(r.classes, vec![vec![1, 4, 7, 10], vec![2, 5, 8], vec![3, 6, 9]]);
        assert!(r.euler_constant());
        assert_eq!(torus_periodicity(1, 1..=10, -4).unwrap().class_count(), 1);
        assert_eq!(torus_periodicity(0, 1..=10, -4), Err(ReductionError::ZeroPeriod));
    }

    #[test]
    fn tuna_can_moves() {
        let s = CanState::from_sizes(&[2], 0).unwrap();
        let t = tuna_can_step(&s, &Move::Slice { can: 0, at: 1 }).unwrap();
        assert_eq!(t.cans(), &[vec!["g1".to_string()], vec!["g2".to_string()]]);
        assert!(t.measure() < s.measure());
        assert!(matches!(
            tuna_can_step(&s, &Move::Pack { can: 0, side: DiskSide::Top }),
            Err(ReductionError::Guard { .. })
        ));
        assert!(tuna_can_step(&t, &Move::Slice { can: 0, at: 1 }).is_err());
        assert!(CanState::new(vec![vec![]], 0).is_err());
        assert!(CanState::new(vec![vec!["a".into()], vec!["a".into()]], 0).is_err());
    }

    #[test]
    fn tuna_can_runs() {
        let s = CanState::from_sizes(&[5], 3).unwrap();
        let run = tuna_can_run(&s, &mut FirstMove);
        assert_eq!((run.slices, run.packs), (4, 3));
        assert!(run.within_bound() && run.measure_decreasing());
        assert!(run.terminal.is_terminal());
        let idle = tuna_can_run(&CanState::from_sizes(&[1], 0).unwrap(), &mut FirstMove);
        assert!(idle.moves.is_empty());
        let mut last = |_: &CanState, moves: &[Move]| moves.len() - 1;
        let run = tuna_can_run(&CanState::from_sizes(&[3, 2], 2).unwrap(), &mut last);
        assert_eq!((run.slices, run.packs), (3, 2));
    }
}
