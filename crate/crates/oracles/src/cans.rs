//! Exhaustive search over every run of the packing/slicing procedure.

use std::collections::HashMap;

use hakensum::reductions::{tuna_can_step, CanState};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TreeSummary {
    /// Most slices / packs on any maximal run.
    pub max_slices: u64,
    pub max_packs: u64,
    /// Fewest moves on any maximal run.
    pub min_moves: u64,
    pub max_moves: u64,
    /// Maximal runs explored (saturating).
    pub runs: u64,
    /// Steps on which the measure failed to drop.
    pub measure_violations: u64,
    /// Dead ends that still had curves to separate or components outside.
    pub bad_terminals: u64,
}

/// Explores every move sequence from `state`. Subtrees are memoized on the
/// can sizes and outside count, which determine the moves available.
pub fn explore(state: &CanState) -> TreeSummary {
    let mut memo = HashMap::new();
    walk(state, &mut memo)
}

fn key(state: &CanState) -> (Vec<usize>, u64) {
    (state.cans().iter().map(Vec::len).collect(), state.outside_components())
}

fn walk(state: &CanState, memo: &mut HashMap<(Vec<usize>, u64), TreeSummary>) -> TreeSummary {
    let k = key(state);
    if let Some(s) = memo.get(&k) {
        return *s;
    }
    let moves = state.applicable_moves();
    let summary = if moves.is_empty() {
        let separated = state.outside_components() == 0 && state.cans().iter().all(|c| c.len() == 1);
        TreeSummary {
            runs: 1,
            bad_terminals: u64::from(!separated),
            ..TreeSummary::default()
        }
    } else {
        let mut acc = TreeSummary {
            min_moves: u64::MAX,
            ..TreeSummary::default()
        };
        let before = measure(state);
        for mv in &moves {
            let next = tuna_can_step(state, mv).expect("applicable move");
            let child = walk(&next, memo);
            let (slice, pack) = match mv {
                hakensum::Move::Slice { .. } => (1, 0),
                hakensum::Move::Pack { .. } => (0, 1),
            };
            acc.max_slices = acc.max_slices.max(child.max_slices + slice);
            acc.max_packs = acc.max_packs.max(child.max_packs + pack);
            acc.min_moves = acc.min_moves.min(child.min_moves + 1);
            acc.max_moves = acc.max_moves.max(child.max_moves + 1);
            acc.runs = acc.runs.saturating_add(child.runs);
            acc.measure_violations += child.measure_violations + u64::from(measure(&next) >= before);
            acc.bad_terminals += child.bad_terminals;
        }
        acc
    };
    memo.insert(k, summary);
    summary
}

/// `(outside, curves - cans)` recomputed from the raw state.
fn measure(state: &CanState) -> (u64, u64) {
    let curves: usize = state.cans().iter().map(Vec::len).sum();
    (state.outside_components(), (curves - state.cans().len()) as u64)
}

/// All ordered splittings of `c` curves into cans.
pub fn compositions(c: usize) -> Vec<Vec<usize>> {
    if c == 0 {
        return vec![];
    }
    (0u32..1 << (c - 1))
        .map(|mask| {
            let mut parts = vec![1];
            for j in 0..c - 1 {
                if mask >> j & 1 == 1 {
                    parts.push(1);
                } else {
                    *parts.last_mut().unwrap() += 1;
                }
            }
            parts
        })
        .collect()
}
