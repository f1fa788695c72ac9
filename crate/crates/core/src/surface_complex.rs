//! Patch complexes for a transverse pair of closed surfaces `F`, `G` and the
//! resolution of the iterated Haken sum `F + nG`.
//!
//! A patch is a component of `F \ Γ` or `G \ Γ` where `Γ = F ∩ G`. Every
//! seam (curve of `Γ`) carries its four half-sheets in cyclic order
//! `[F_a, G_a, F_b, G_b]`, a resolution choice ε and a stacking direction.
//! With `n` parallel copies of `G`, the seam becomes a stack of `n` seams on
//! `F`; the strips of `F` between consecutive copies are annuli and glue the
//! `G`-sheet of one level to a `G`-sheet of the next.
//!
//! Resolution never touches geometry: components and Euler characteristics
//! follow from the adjacency alone, and Euler characteristic is additive
//! because every cut and every resolution annulus has `χ = 0`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::sign::Sign;
use crate::union_find::DisjointSet;
use crate::Provenance;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("malformed complex: seam `{seam}` references missing {surface} patch `{patch}`")]
    MissingPatch {
        seam: String,
        surface: SurfaceLabel,
        patch: String,
    },
    #[error("malformed complex: seam `{seam}` quadrants must alternate F, G, F, G starting with F")]
    QuadrantOrder { seam: String },
    #[error("malformed complex: seam `{seam}` has level shift {shift}; seams of F + nG always stack with shift +1 or -1")]
    LevelShift { seam: String, shift: i8 },
    #[error("malformed complex: seam `{0}` is an arc; only closed seams are supported")]
    ArcSeam(String),
    #[error("malformed complex: duplicate {surface} patch id `{id}`")]
    DuplicatePatch { surface: SurfaceLabel, id: String },
    #[error("malformed complex: duplicate seam id `{0}`")]
    DuplicateSeam(String),
    #[error("malformed complex: {surface} patch eulers sum to {sum} but the surface declares {declared}")]
    EulerMismatch {
        surface: SurfaceLabel,
        sum: i64,
        declared: i64,
    },
    #[error("invalid surface descriptor: {0}")]
    Descriptor(DomainError),
}

impl From<DomainError> for ComplexError {
    fn from(e: DomainError) -> Self {
        ComplexError::Descriptor(e)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DomainError {
    #[error("genus is only defined for closed orientable surfaces")]
    NotClosedOrientable,
    #[error("closed orientable surface with euler {0}: must be even and at most 2")]
    BadEuler(i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SurfaceLabel {
    F,
    G,
}

impl fmt::Display for SurfaceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceLabel::F => write!(f, "F"),
            SurfaceLabel::G => write!(f, "G"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceDescriptor {
    pub euler: i64,
    #[serde(default = "yes")]
    pub orientable: bool,
    #[serde(default)]
    pub boundary_components: u32,
    /// Declared, never computed.
    #[serde(default)]
    pub separating: bool,
}

fn yes() -> bool {
    true
}

impl SurfaceDescriptor {
    pub fn closed_orientable(euler: i64) -> Self {
        Self {
            euler,
            orientable: true,
            boundary_components: 0,
            separating: false,
        }
    }

    pub fn is_closed(&self) -> bool {
        self.boundary_components == 0
    }

    pub fn validate(&self) -> Result<(), DomainError> {
        if self.is_closed() && self.orientable && (self.euler % 2 != 0 || self.euler > 2) {
            return Err(DomainError::BadEuler(self.euler));
        }
        Ok(())
    }
}

/// Genus `(2 - χ) / 2` of a closed orientable surface.
pub fn genus_of(d: &SurfaceDescriptor) -> Result<u64, DomainError> {
    if !d.is_closed() || !d.orientable {
        return Err(DomainError::NotClosedOrientable);
    }
    d.validate()?;
    Ok(((2 - d.euler) / 2) as u64)
}

/// Genus from an Euler characteristic, for closed orientable surfaces.
pub fn genus_from_euler(euler: i64) -> Result<u64, DomainError> {
    genus_of(&SurfaceDescriptor::closed_orientable(euler))
}

/// `χ(F + nG) = χ(F) + n·χ(G)`.
pub fn euler_of_sum(euler_f: i64, euler_g: i64, n: u64) -> i64 {
    euler_f + n as i64 * euler_g
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Patch {
    pub id: String,
    pub euler: i64,
    /// Orientable unless stated; `null` marks it unknown.
    #[serde(default = "known_orientable", skip_serializing_if = "is_known_orientable")]
    pub orientable: Option<bool>,
    /// Boundary circles of the patch that are not seams.
    #[serde(default, skip_serializing_if = "is_zero")]
    pub free_boundary: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn known_orientable() -> Option<bool> {
    Some(true)
}

fn is_known_orientable(v: &Option<bool>) -> bool {
    *v == Some(true)
}

fn is_zero(v: &u32) -> bool {
    *v == 0
}

impl Patch {
    pub fn new(id: impl Into<String>, euler: i64) -> Self {
        Self {
            id: id.into(),
            euler,
            orientable: Some(true),
            free_boundary: 0,
            provenance: None,
            note: None,
        }
    }
}

/// A half-sheet at a seam: a side of a patch of `F` or `G`. Written `F:id`
/// or `G:id` in scenario files.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct PatchRef {
    pub surface: SurfaceLabel,
    pub patch: String,
}

impl PatchRef {
    pub fn f(patch: impl Into<String>) -> Self {
        Self {
            surface: SurfaceLabel::F,
            patch: patch.into(),
        }
    }

    pub fn g(patch: impl Into<String>) -> Self {
        Self {
            surface: SurfaceLabel::G,
            patch: patch.into(),
        }
    }
}

impl fmt::Display for PatchRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.surface, self.patch)
    }
}

impl FromStr for PatchRef {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (surface, patch) = s
            .split_once(':')
            .ok_or_else(|| format!("patch reference `{s}` must look like `F:id` or `G:id`"))?;
        let surface = match surface {
            "F" => SurfaceLabel::F,
            "G" => SurfaceLabel::G,
            other => return Err(format!("unknown surface `{other}` in `{s}`")),
        };
        if patch.is_empty() {
            return Err(format!("empty patch id in `{s}`"));
        }
        Ok(Self {
            surface,
            patch: patch.to_string(),
        })
    }
}

impl TryFrom<String> for PatchRef {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<PatchRef> for String {
    fn from(r: PatchRef) -> String {
        r.to_string()
    }
}

/// One curve of `F ∩ G`.
///
/// `quadrants` lists the four half-sheets around the seam in cyclic order,
/// starting from the `F`-sheet met first along the transverse orientation:
/// `[F_a, G_a, F_b, G_b]`. ε = `+` joins `(F_a, G_a)` and `(F_b, G_b)`;
/// ε = `-` joins `(G_a, F_b)` and `(G_b, F_a)`.
///
/// `level_shift` is `+1` when the parallel copies `G_1..G_n` are met in
/// increasing order walking along `F` from `F_a` to `F_b`, and `-1` when
/// they are met in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeamCurve {
    pub id: String,
    pub quadrants: [PatchRef; 4],
    pub epsilon: Sign,
    pub level_shift: i8,
    #[serde(default = "yes", skip_serializing_if = "is_true")]
    pub closed: bool,
}

fn is_true(b: &bool) -> bool {
    *b
}

impl SeamCurve {
    pub fn new(id: impl Into<String>, quadrants: [PatchRef; 4], epsilon: Sign, level_shift: i8) -> Self {
        Self {
            id: id.into(),
            quadrants,
            epsilon,
            level_shift,
            closed: true,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatchComplex {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_surface: Option<SurfaceDescriptor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g_surface: Option<SurfaceDescriptor>,
    pub f_patches: Vec<Patch>,
    pub g_patches: Vec<Patch>,
    pub seams: Vec<SeamCurve>,
}

/// A seam with its sheets resolved to patch indices and rearranged by the
/// stacking: `low_*` is the end next to copy 1, `high_*` the end next to
/// copy `n`. `low_g`/`high_g` are the `G`-sheets that ε joins towards the
/// low and high ends.
#[derive(Clone, Copy, Debug)]
struct StackedSeam {
    low_f: usize,
    high_f: usize,
    low_g: usize,
    high_g: usize,
}

impl PatchComplex {
    pub fn euler_f(&self) -> i64 {
        self.f_patches.iter().map(|p| p.euler).sum()
    }

    pub fn euler_g(&self) -> i64 {
        self.g_patches.iter().map(|p| p.euler).sum()
    }

    pub fn validate(&self) -> Result<(), ComplexError> {
        self.index().map(|_| ())
    }

    /// Seam ids incident to a patch, once per boundary circle.
    pub fn incidences(&self, surface: SurfaceLabel, patch: &str) -> Vec<&str> {
        let mut out = Vec::new();
        for seam in &self.seams {
            for q in &seam.quadrants {
                if q.surface == surface && q.patch == patch {
                    out.push(seam.id.as_str());
                }
            }
        }
        out
    }

    fn index(&self) -> Result<Vec<StackedSeam>, ComplexError> {
        let f_idx = patch_index(&self.f_patches, SurfaceLabel::F)?;
        let g_idx = patch_index(&self.g_patches, SurfaceLabel::G)?;
        for (surface, declared, sum) in [
            (SurfaceLabel::F, &self.f_surface, self.euler_f()),
            (SurfaceLabel::G, &self.g_surface, self.euler_g()),
        ] {
            if let Some(d) = declared {
                d.validate()?;
                if d.euler != sum {
                    return Err(ComplexError::EulerMismatch {
                        surface,
                        sum,
                        declared: d.euler,
                    });
                }
            }
        }

        let mut seen = HashMap::new();
        let mut stacked = Vec::with_capacity(self.seams.len());
        for seam in &self.seams {
            if seen.insert(seam.id.as_str(), ()).is_some() {
                return Err(ComplexError::DuplicateSeam(seam.id.clone()));
            }
            if !seam.closed {
                return Err(ComplexError::ArcSeam(seam.id.clone()));
            }
            let expected = [SurfaceLabel::F, SurfaceLabel::G, SurfaceLabel::F, SurfaceLabel::G];
            if seam.quadrants.iter().zip(expected).any(|(q, s)| q.surface != s) {
                return Err(ComplexError::QuadrantOrder {
                    seam: seam.id.clone(),
                });
            }
            let mut ids = [0usize; 4];
            for (slot, q) in ids.iter_mut().zip(&seam.quadrants) {
                let table = match q.surface {
                    SurfaceLabel::F => &f_idx,
                    SurfaceLabel::G => &g_idx,
                };
                *slot = *table.get(q.patch.as_str()).ok_or_else(|| ComplexError::MissingPatch {
                    seam: seam.id.clone(),
                    surface: q.surface,
                    patch: q.patch.clone(),
                })?;
            }
            let [fa, ga, fb, gb] = ids;
            let s = match (seam.level_shift, seam.epsilon) {
                (1, Sign::Plus) => StackedSeam { low_f: fa, high_f: fb, low_g: ga, high_g: gb },
                (1, Sign::Minus) => StackedSeam { low_f: fa, high_f: fb, low_g: gb, high_g: ga },
                (-1, Sign::Plus) => StackedSeam { low_f: fb, high_f: fa, low_g: gb, high_g: ga },
                (-1, Sign::Minus) => StackedSeam { low_f: fb, high_f: fa, low_g: ga, high_g: gb },
                (shift, _) => {
                    return Err(ComplexError::LevelShift {
                        seam: seam.id.clone(),
                        shift,
                    })
                }
            };
            stacked.push(s);
        }
        Ok(stacked)
    }
}

fn patch_index(patches: &[Patch], surface: SurfaceLabel) -> Result<HashMap<&str, usize>, ComplexError> {
    let mut map = HashMap::with_capacity(patches.len());
    for (i, p) in patches.iter().enumerate() {
        if map.insert(p.id.as_str(), i).is_some() {
            return Err(ComplexError::DuplicatePatch {
                surface,
                id: p.id.clone(),
            });
        }
    }
    Ok(map)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Component {
    pub euler: i64,
    pub closed: bool,
    /// `None` when some member patch carries no orientation flag.
    pub orientable: Option<bool>,
    pub genus: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolvedSurface {
    pub copies: u64,
    /// Sorted, so equal multisets compare equal.
    pub components: Vec<Component>,
}

impl ResolvedSurface {
    pub fn total_euler(&self) -> i64 {
        self.components.iter().map(|c| c.euler).sum()
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }
}

struct NodeData {
    euler: i64,
    free_boundary: u32,
    orientable: Option<bool>,
}

impl From<&Patch> for NodeData {
    fn from(p: &Patch) -> Self {
        Self {
            euler: p.euler,
            free_boundary: p.free_boundary,
            orientable: p.orientable,
        }
    }
}

struct Gluing {
    set: DisjointSet,
    nodes: Vec<NodeData>,
}

impl Gluing {
    fn components(mut self) -> (Vec<usize>, Vec<Component>, Vec<u32>) {
        let (labels, count) = self.set.labels();
        let mut acc: Vec<(i64, u32, Option<bool>)> = vec![(0, 0, Some(true)); count];
        for (node, &label) in self.nodes.iter().zip(&labels) {
            let slot = &mut acc[label];
            slot.0 += node.euler;
            slot.1 += node.free_boundary;
            slot.2 = match (slot.2, node.orientable) {
                (Some(false), _) | (_, Some(false)) => Some(false),
                (Some(true), Some(true)) => Some(true),
                _ => None,
            };
        }
        let free = acc.iter().map(|a| a.1).collect();
        let comps = acc
            .into_iter()
            .map(|(euler, free, orientable)| {
                let closed = free == 0;
                let genus = if closed && orientable == Some(true) {
                    genus_from_euler(euler).ok()
                } else {
                    None
                };
                Component {
                    euler,
                    closed,
                    orientable,
                    genus,
                }
            })
            .collect();
        (labels, comps, free)
    }
}

/// Resolves `F + nG`. With `n = 0` the result is `F` itself.
pub fn resolve(pc: &PatchComplex, n: u64) -> Result<ResolvedSurface, ComplexError> {
    let seams = pc.index()?;
    let nf = pc.f_patches.len();
    let ng = pc.g_patches.len();
    let levels = n as usize;
    let node = |g: usize, level: usize| nf + (level - 1) * ng + g;

    let mut nodes: Vec<NodeData> = pc.f_patches.iter().map(NodeData::from).collect();
    for _ in 0..levels {
        nodes.extend(pc.g_patches.iter().map(NodeData::from));
    }
    let mut set = DisjointSet::new(nodes.len());
    for s in &seams {
        if levels == 0 {
            set.union(s.low_f, s.high_f);
            continue;
        }
        set.union(s.low_f, node(s.low_g, 1));
        set.union(s.high_f, node(s.high_g, levels));
        for level in 1..levels {
            set.union(node(s.high_g, level), node(s.low_g, level + 1));
        }
    }
    let (_, mut components, _) = Gluing { set, nodes }.components();
    components.sort();
    Ok(ResolvedSurface { copies: n, components })
}

/// Folds the first `m` copies of `G` into `F`: returns the complex of
/// `F' = F + mG` against `G`, so that `resolve(absorb(pc, m), n - m)` and
/// `resolve(pc, n)` describe the same surface for every `n >= m`.
pub fn absorb(pc: &PatchComplex, m: u64) -> Result<PatchComplex, ComplexError> {
    let seams = pc.index()?;
    if m == 0 {
        return Ok(pc.clone());
    }
    let nf = pc.f_patches.len();
    let ng = pc.g_patches.len();
    let levels = m as usize;
    let node = |g: usize, level: usize| nf + (level - 1) * ng + g;

    let mut nodes: Vec<NodeData> = pc.f_patches.iter().map(NodeData::from).collect();
    for _ in 0..levels {
        nodes.extend(pc.g_patches.iter().map(NodeData::from));
    }
    let mut set = DisjointSet::new(nodes.len());
    for s in &seams {
        set.union(s.low_f, node(s.low_g, 1));
        for level in 1..levels {
            set.union(node(s.high_g, level), node(s.low_g, level + 1));
        }
    }
    let (labels, comps, free) = Gluing { set, nodes }.components();
    let name = |label: usize| format!("F+{m}G#{label}");
    let f_patches = comps
        .iter()
        .enumerate()
        .map(|(label, c)| Patch {
            id: name(label),
            euler: c.euler,
            orientable: c.orientable,
            free_boundary: free[label],
            provenance: None,
            note: None,
        })
        .collect();

    let mut out_seams = Vec::with_capacity(pc.seams.len());
    for (seam, s) in pc.seams.iter().zip(&seams) {
        let low = PatchRef::f(name(labels[node(s.high_g, levels)]));
        let high = PatchRef::f(name(labels[s.high_f]));
        let [_, ga, _, gb] = &seam.quadrants;
        let quadrants = if seam.level_shift == 1 {
            [low, ga.clone(), high, gb.clone()]
        } else {
            [high, ga.clone(), low, gb.clone()]
        };
        out_seams.push(SeamCurve::new(seam.id.clone(), quadrants, seam.epsilon, seam.level_shift));
    }

    Ok(PatchComplex {
        f_surface: pc.f_surface.as_ref().map(|d| SurfaceDescriptor {
            euler: euler_of_sum(d.euler, pc.euler_g(), m),
            ..d.clone()
        }),
        g_surface: pc.g_surface.clone(),
        f_patches,
        g_patches: pc.g_patches.clone(),
        seams: out_seams,
    })
}

/// Component counts of `resolve(pc, n)` for each `n` in the range, in order.
pub fn component_counts(
    pc: &PatchComplex,
    range: std::ops::RangeInclusive<u64>,
) -> Result<BTreeMap<u64, usize>, ComplexError> {
    range
        .map(|n| resolve(pc, n).map(|r| (n, r.components.len())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_seam_complex() -> PatchComplex {
        PatchComplex {
            f_surface: Some(SurfaceDescriptor::closed_orientable(-6)),
            g_surface: Some(SurfaceDescriptor::closed_orientable(-2)),
            f_patches: vec![Patch::new("PB", -2), Patch::new("PO", -4)],
            g_patches: vec![Patch::new("Q", -2)],
            seams: vec![
                SeamCurve::new("a", [PatchRef::f("PB"), PatchRef::g("Q"), PatchRef::f("PO"), PatchRef::g("Q")], Sign::Plus, 1),
                SeamCurve::new("b", [PatchRef::f("PB"), PatchRef::g("Q"), PatchRef::f("PO"), PatchRef::g("Q")], Sign::Plus, 1),
            ],
        }
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus_from_euler(2), Ok(0));
        assert_eq!(genus_from_euler(-6), Ok(4));
        assert_eq!(genus_from_euler(-18), Ok(10));
        let bounded = SurfaceDescriptor {
            euler: -1,
            orientable: true,
            boundary_components: 1,
            separating: false,
        };
        assert_eq!(genus_of(&bounded), Err(DomainError::NotClosedOrientable));
        let klein = SurfaceDescriptor {
            orientable: false,
            ..SurfaceDescriptor::closed_orientable(0)
        };
        assert_eq!(genus_of(&klein), Err(DomainError::NotClosedOrientable));
        assert_eq!(genus_from_euler(-3), Err(DomainError::BadEuler(-3)));
    }

    #[test]
    fn euler_of_sum_examples() {
        assert_eq!(euler_of_sum(-6, -2, 6), -18);
        assert_eq!(euler_of_sum(-7, 123, 0), -7);
        assert_eq!(euler_of_sum(-4, -4, 4), -20);
        assert_eq!(genus_from_euler(-20), Ok(11));
    }

    #[test]
    fn zero_copies_gives_f() {
        let r = resolve(&two_seam_complex(), 0).unwrap();
        assert_eq!(r.components.len(), 1);
        assert_eq!(r.total_euler(), -6);
        assert_eq!(r.components[0].genus, Some(4));
    }

    #[test]
    fn six_copies_genus_ten() {
        let r = resolve(&two_seam_complex(), 6).unwrap();
        assert!(r.is_connected());
        assert_eq!(r.components[0].euler, -18);
        assert_eq!(r.components[0].genus, Some(10));
    }

    #[test]
    fn missing_patch_is_malformed() {
        let mut pc = two_seam_complex();
        pc.seams[1].quadrants[1] = PatchRef::g("nope");
        assert!(matches!(resolve(&pc, 2), Err(ComplexError::MissingPatch { .. })));
    }

    #[test]
    fn arc_seams_and_flat_shifts_rejected() {
        let mut pc = two_seam_complex();
        pc.seams[0].closed = false;
        assert!(matches!(resolve(&pc, 1), Err(ComplexError::ArcSeam(_))));
        let mut pc = two_seam_complex();
        pc.seams[0].level_shift = 0;
        assert!(matches!(resolve(&pc, 1), Err(ComplexError::LevelShift { .. })));
    }

    #[test]
    fn quadrants_must_alternate() {
        let mut pc = two_seam_complex();
        pc.seams[0].quadrants.swap(0, 1);
        assert!(matches!(pc.validate(), Err(ComplexError::QuadrantOrder { .. })));
    }

    #[test]
    fn declared_euler_checked() {
        let mut pc = two_seam_complex();
        pc.f_surface = Some(SurfaceDescriptor::closed_orientable(-4));
        assert!(matches!(pc.validate(), Err(ComplexError::EulerMismatch { .. })));
    }

    #[test]
    fn absorb_matches_resolve() {
        let pc = two_seam_complex();
        for m in 0..4 {
            let folded = absorb(&pc, m).unwrap();
            for n in m..m + 5 {
                assert_eq!(resolve(&pc, n).unwrap().components, resolve(&folded, n - m).unwrap().components);
            }
        }
    }

    #[test]
    fn patch_ref_parsing() {
        assert_eq!("G:Q".parse::<PatchRef>().unwrap(), PatchRef::g("Q"));
        assert!("X:Q".parse::<PatchRef>().is_err());
        assert!("Q".parse::<PatchRef>().is_err());
    }

    #[test]
    fn unknown_orientation_propagates() {
        let mut pc = two_seam_complex();
        pc.g_patches[0].orientable = None;
        let r = resolve(&pc, 2).unwrap();
        assert_eq!(r.components[0].orientable, None);
        assert_eq!(r.components[0].genus, None);
    }
}
