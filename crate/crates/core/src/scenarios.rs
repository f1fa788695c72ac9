//! The two example families and the handlebody gluing certificate.
//!
//! * Pretzel knot exteriors: `H_n = H_0 + 2nG` with `H_0` the double of a
//!   checkerboard surface with `m` boxes and `G` a four-holed sphere closed
//!   up by two annuli.
//! * Doubled handlebodies: `H + nK` inside the double of a genus three
//!   handlebody, where `K` is the double of a genus two surface cut along an
//!   annulus.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scenario_file::{shipped, ScenarioError, ScenarioFile};
use crate::surface_complex::{euler_of_sum, genus_from_euler, resolve, ResolvedSurface};
use crate::union_find::DisjointSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Components computed by resolving the shipped patch complex.
    Resolved,
    /// No seam data for this parameter; Euler bookkeeping only.
    EulerOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CassonGordonReport {
    pub m: u64,
    pub n: u64,
    /// Copies of `G`, that is `2n`.
    pub copies: u64,
    pub euler_f0: i64,
    pub euler_h0: i64,
    pub euler_g: i64,
    pub euler_sum: i64,
    /// `(m - 1) + 2n`.
    pub genus_formula: u64,
    pub genus_euler: u64,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resolved: Option<ResolvedSurface>,
    pub consistent: bool,
}

pub fn casson_gordon_scenario(m: u64, n: u64) -> Result<CassonGordonReport, ScenarioError> {
    if m.is_multiple_of(2) || m < 5 {
        return Err(ScenarioError::Parameter(format!(
            "the box count m = {m} must be odd and at least 5"
        )));
    }
    let euler_f0 = 2 - m as i64;
    let euler_h0 = 2 * euler_f0;
    let euler_g = -2;
    let copies = 2 * n;
    let euler_sum = euler_of_sum(euler_h0, euler_g, copies);
    let genus_formula = (m - 1) + 2 * n;
    let genus_euler = genus_from_euler(euler_sum).map_err(|e| ScenarioError::Parameter(e.to_string()))?;

    let (method, resolved) = if m == 5 {
        let file = ScenarioFile::from_json(shipped::CASSON_GORDON_M5)?;
        (Method::Resolved, Some(resolve(file.patch_complex()?, copies)?))
    } else {
        (Method::EulerOnly, None)
    };
    let consistent = genus_euler == genus_formula
        && resolved.as_ref().is_none_or(|r| {
            r.is_connected() && r.components[0].genus == Some(genus_formula) && r.total_euler() == euler_sum
        });
    Ok(CassonGordonReport {
        m,
        n,
        copies,
        euler_f0,
        euler_h0,
        euler_g,
        euler_sum,
        genus_formula,
        genus_euler,
        method,
        resolved,
        consistent,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubledHandlebodyReport {
    pub n: u64,
    pub euler_h: i64,
    pub euler_k: i64,
    pub euler_k_prime: i64,
    pub resolved: ResolvedSurface,
    pub connected: bool,
    pub genus: Option<u64>,
    /// `2n + 3`.
    pub genus_formula: u64,
    /// Handlebody proof for one side of `H + nK`; needs `n >= 2`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<HandlebodyProof>,
    pub consistent: bool,
}

pub fn doubled_handlebody_scenario(n: u64) -> Result<DoubledHandlebodyReport, ScenarioError> {
    if n % 2 == 1 {
        return Err(ScenarioError::Parameter(format!(
            "n = {n} is odd; the construction is stated for even n only, odd n needs a relabelled Haken sum"
        )));
    }
    let file = ScenarioFile::from_json(shipped::DOUBLED_HANDLEBODY)?;
    let pc = file.patch_complex()?;
    let resolved = resolve(pc, n)?;
    let connected = resolved.is_connected();
    let genus = if connected { resolved.components[0].genus } else { None };
    let genus_formula = 2 * n + 3;
    let certificate = if n >= 2 {
        Some(handlebody_certificate(&doubled_handlebody_graph(n)).map_err(|e| ScenarioError::Parameter(e.to_string()))?)
    } else {
        None
    };
    let consistent = connected
        && genus == Some(genus_formula)
        && certificate.as_ref().is_none_or(|c| c.genus == genus_formula);
    Ok(DoubledHandlebodyReport {
        n,
        euler_h: pc.euler_f(),
        euler_k: pc.euler_g(),
        euler_k_prime: pc.g_patches.iter().find(|p| p.id == "K'").map_or(0, |p| p.euler),
        resolved,
        connected,
        genus,
        genus_formula,
        certificate,
        consistent,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum PieceKind {
    Handlebody { genus: u64 },
    /// `S × I` for a compact surface `S` with nonempty boundary.
    Product { base_euler: i64 },
    SolidTorus,
}

impl PieceKind {
    pub fn euler(&self) -> i64 {
        match *self {
            PieceKind::Handlebody { genus } => 1 - genus as i64,
            PieceKind::Product { base_euler } => base_euler,
            PieceKind::SolidTorus => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluedPiece {
    pub id: String,
    #[serde(flatten)]
    pub kind: PieceKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Face {
    Top,
    Bottom,
}

impl Face {
    pub fn opposite(self) -> Self {
        match self {
            Face::Top => Face::Bottom,
            Face::Bottom => Face::Top,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AnnulusAttribute {
    /// Primitive in the named piece: some disk there meets the core once.
    PrimitiveIn(String),
    Incompressible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnnulusGluing {
    pub annulus: String,
    pub between: [String; 2],
    pub attribute: AnnulusAttribute,
    /// Face of `S × ∂I` the annulus lies on, when one end is a product piece.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub face: Option<Face>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GluingGraph {
    pub pieces: Vec<GluedPiece>,
    pub gluings: Vec<AnnulusGluing>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("malformed gluing graph: {0}")]
    Malformed(String),
    #[error("malformed gluing graph: pieces do not form a connected graph")]
    Disconnected,
    #[error("no rule applies; stuck with {clusters} pieces and annuli {pending:?} unused")]
    Stuck { clusters: usize, pending: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "rule")]
pub enum ProofStep {
    /// A product or solid torus is a handlebody.
    Handlebody { piece: String, genus: u64 },
    /// Two handlebodies glued along an annulus primitive in one of them.
    Merge {
        annulus: String,
        primitive_in: String,
        genus: u64,
    },
    /// An annulus on the opposite face of a product becomes primitive in the
    /// merged piece.
    Transfer { annulus: String, through: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HandlebodyProof {
    pub steps: Vec<ProofStep>,
    pub genus: u64,
    pub euler_sum: i64,
}

impl GluingGraph {
    pub fn validate(&self) -> Result<(), GraphError> {
        let mut ids = BTreeSet::new();
        for p in &self.pieces {
            if !ids.insert(p.id.as_str()) {
                return Err(GraphError::Malformed(format!("duplicate piece `{}`", p.id)));
            }
            if let PieceKind::Product { base_euler } = p.kind {
                if base_euler > 1 {
                    return Err(GraphError::Malformed(format!(
                        "product `{}` has base euler {base_euler}; a bounded surface has euler at most 1",
                        p.id
                    )));
                }
            }
        }
        if ids.is_empty() {
            return Err(GraphError::Malformed("no pieces".into()));
        }
        let mut annuli = BTreeSet::new();
        for g in &self.gluings {
            if !annuli.insert(g.annulus.as_str()) {
                return Err(GraphError::Malformed(format!("duplicate annulus `{}`", g.annulus)));
            }
            for end in &g.between {
                if !ids.contains(end.as_str()) {
                    return Err(GraphError::Malformed(format!("annulus `{}` meets unknown piece `{end}`", g.annulus)));
                }
            }
            if g.between[0] == g.between[1] {
                return Err(GraphError::Malformed(format!("annulus `{}` joins a piece to itself", g.annulus)));
            }
            if let AnnulusAttribute::PrimitiveIn(p) = &g.attribute {
                if !g.between.contains(p) {
                    return Err(GraphError::Malformed(format!(
                        "annulus `{}` is primitive in `{p}`, which it does not meet",
                        g.annulus
                    )));
                }
                let host = self.pieces.iter().find(|q| &q.id == p).expect("checked above");
                if 1 - host.kind.euler() < 1 {
                    return Err(GraphError::Malformed(format!(
                        "annulus `{}` cannot be primitive in the ball `{p}`",
                        g.annulus
                    )));
                }
            }
        }
        let index: BTreeMap<&str, usize> = self.pieces.iter().enumerate().map(|(j, p)| (p.id.as_str(), j)).collect();
        let mut set = DisjointSet::new(self.pieces.len());
        for g in &self.gluings {
            set.union(index[g.between[0].as_str()], index[g.between[1].as_str()]);
        }
        if set.labels().1 != 1 {
            return Err(GraphError::Disconnected);
        }
        Ok(())
    }

    pub fn euler_sum(&self) -> i64 {
        self.pieces.iter().map(|p| p.kind.euler()).sum()
    }
}

/// `V_n = V' ∪_A V^P ∪_B V''`: a genus two handlebody, the product over a
/// surface of euler `2 - 2n`, and a genus four handlebody in which `B` is
/// primitive.
pub fn doubled_handlebody_graph(n: u64) -> GluingGraph {
    GluingGraph {
        pieces: vec![
            GluedPiece { id: "V'".into(), kind: PieceKind::Handlebody { genus: 2 } },
            GluedPiece { id: "VP".into(), kind: PieceKind::Product { base_euler: 2 - 2 * n as i64 } },
            GluedPiece { id: "V''".into(), kind: PieceKind::Handlebody { genus: 4 } },
        ],
        gluings: vec![
            AnnulusGluing {
                annulus: "A".into(),
                between: ["V'".into(), "VP".into()],
                attribute: AnnulusAttribute::Incompressible,
                face: Some(Face::Top),
            },
            AnnulusGluing {
                annulus: "B".into(),
                between: ["VP".into(), "V''".into()],
                attribute: AnnulusAttribute::PrimitiveIn("V''".into()),
                face: Some(Face::Bottom),
            },
        ],
    }
}

pub fn handlebody_certificate(g: &GluingGraph) -> Result<HandlebodyProof, GraphError> {
    handlebody_certificate_ordered(g, |_| 0)
}

/// Runs the inference rules to a fixpoint, letting `pick` choose among the
/// applicable steps (by index, wrapped). Every order reaches the same verdict.
pub fn handlebody_certificate_ordered(
    g: &GluingGraph,
    mut pick: impl FnMut(usize) -> usize,
) -> Result<HandlebodyProof, GraphError> {
    g.validate()?;
    let index: BTreeMap<&str, usize> = g.pieces.iter().enumerate().map(|(j, p)| (p.id.as_str(), j)).collect();
    let mut genus: Vec<Option<u64>> = g
        .pieces
        .iter()
        .map(|p| match p.kind {
            PieceKind::Handlebody { genus } => Some(genus),
            _ => None,
        })
        .collect();
    let mut attrs: Vec<AnnulusAttribute> = g.gluings.iter().map(|e| e.attribute.clone()).collect();
    let mut used = vec![false; g.gluings.len()];
    let mut set = DisjointSet::new(g.pieces.len());
    let mut steps = Vec::new();

    enum Step {
        Promote(usize),
        Merge(usize),
    }

    loop {
        let mut options = Vec::new();
        for (j, p) in g.pieces.iter().enumerate() {
            if genus[j].is_none() && !matches!(p.kind, PieceKind::Handlebody { .. }) {
                options.push(Step::Promote(j));
            }
        }
        for (e, gl) in g.gluings.iter().enumerate() {
            let AnnulusAttribute::PrimitiveIn(_) = &attrs[e] else { continue };
            let (a, b) = (index[gl.between[0].as_str()], index[gl.between[1].as_str()]);
            let (ra, rb) = (set.find(a), set.find(b));
            if !used[e] && ra != rb && genus[ra].is_some() && genus[rb].is_some() {
                options.push(Step::Merge(e));
            }
        }
        if options.is_empty() {
            break;
        }
        match options.swap_remove(pick(options.len()) % options.len()) {
            Step::Promote(j) => {
                let gj = match g.pieces[j].kind {
                    PieceKind::Product { base_euler } => (1 - base_euler) as u64,
                    PieceKind::SolidTorus => 1,
                    PieceKind::Handlebody { genus } => genus,
                };
                // A lone piece is its own cluster root until merged.
                let root = set.find(j);
                genus[root] = Some(gj);
                steps.push(ProofStep::Handlebody { piece: g.pieces[j].id.clone(), genus: gj });
            }
            Step::Merge(e) => {
                let gl = &g.gluings[e];
                let AnnulusAttribute::PrimitiveIn(host) = attrs[e].clone() else { unreachable!() };
                let (a, b) = (index[gl.between[0].as_str()], index[gl.between[1].as_str()]);
                let (ra, rb) = (set.find(a), set.find(b));
                let merged = genus[ra].unwrap() + genus[rb].unwrap() - 1;
                set.union(ra, rb);
                let root = set.find(a);
                genus[root] = Some(merged);
                used[e] = true;
                steps.push(ProofStep::Merge {
                    annulus: gl.annulus.clone(),
                    primitive_in: host.clone(),
                    genus: merged,
                });
                // The product structure carries a disk meeting this annulus
                // once across to the opposite face.
                for end in &gl.between {
                    let p = index[end.as_str()];
                    if !matches!(g.pieces[p].kind, PieceKind::Product { .. }) || *end == host {
                        continue;
                    }
                    let Some(face) = gl.face else { continue };
                    for (f, other) in g.gluings.iter().enumerate() {
                        if used[f] || attrs[f] != AnnulusAttribute::Incompressible || other.face != Some(face.opposite()) {
                            continue;
                        }
                        if other.between.contains(end) {
                            attrs[f] = AnnulusAttribute::PrimitiveIn(end.clone());
                            steps.push(ProofStep::Transfer {
                                annulus: other.annulus.clone(),
                                through: end.clone(),
                            });
                        }
                    }
                }
            }
        }
    }

    let root = set.find(0);
    let one_cluster = (0..g.pieces.len()).all(|j| set.find(j) == root);
    match genus[root] {
        Some(total) if one_cluster && used.iter().all(|&u| u) => Ok(HandlebodyProof {
            steps,
            genus: total,
            euler_sum: g.euler_sum(),
        }),
        _ => {
            let clusters = (0..g.pieces.len()).filter(|&j| set.find(j) == j).count();
            Err(GraphError::Stuck {
                clusters,
                pending: g
                    .gluings
                    .iter()
                    .zip(&used)
                    .filter(|(_, &u)| !u)
                    .map(|(e, _)| e.annulus.clone())
                    .collect(),
            })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistInput {
    /// The splitting of the double is reducible.
    pub reducible: bool,
    pub twist_count: u64,
    /// The twisting curve is disk-busting on both sides.
    pub disk_busting: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TwistVerdict {
    StronglyIrreducible,
    Inconclusive,
}

/// Hypothesis check for the twisting criterion; decides nothing on its own.
pub fn casson_twist_rule(input: TwistInput) -> TwistVerdict {
    if input.reducible && input.twist_count >= 5 && input.disk_busting {
        TwistVerdict::StronglyIrreducible
    } else {
        TwistVerdict::Inconclusive
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn casson_gordon_examples() {
        let r = casson_gordon_scenario(5, 3).unwrap();
        assert_eq!(r.genus_formula, 10);
        assert_eq!(r.method, Method::Resolved);
        assert!(r.consistent);
        assert_eq!(casson_gordon_scenario(5, 0).unwrap().genus_formula, 4);
        let r = casson_gordon_scenario(7, 2).unwrap();
        assert_eq!((r.genus_formula, r.genus_euler, r.method), (10, 10, Method::EulerOnly));
        assert!(casson_gordon_scenario(6, 1).is_err());
        assert!(casson_gordon_scenario(3, 1).is_err());
    }

    #[test]
    fn doubled_handlebody_examples() {
        let r = doubled_handlebody_scenario(2).unwrap();
        assert!(r.connected && r.consistent);
        assert_eq!(r.genus, Some(7));
        assert_eq!((r.euler_h, r.euler_k, r.euler_k_prime), (-4, -4, -2));
        assert_eq!(r.certificate.unwrap().genus, 7);
        assert_eq!(doubled_handlebody_scenario(0).unwrap().genus, Some(3));
        assert_eq!(doubled_handlebody_scenario(4).unwrap().genus, Some(11));
        assert!(doubled_handlebody_scenario(3).is_err());
    }

    #[test]
    fn three_piece_graph() {
        let proof = handlebody_certificate(&doubled_handlebody_graph(2)).unwrap();
        assert_eq!(proof.genus, 7);
        assert_eq!(proof.genus as i64, 1 - proof.euler_sum);
        assert!(proof.steps.iter().any(|s| matches!(s, ProofStep::Transfer { annulus, .. } if annulus == "A")));
        for seed in 0..6 {
            let mut k = seed;
            let alt = handlebody_certificate_ordered(&doubled_handlebody_graph(2), |len| {
                k += 1;
                k % len
            })
            .unwrap();
            assert_eq!(alt.genus, 7);
        }
    }

    #[test]
    fn graph_edge_cases() {
        let single = GluingGraph {
            pieces: vec![GluedPiece { id: "V".into(), kind: PieceKind::Handlebody { genus: 3 } }],
            gluings: vec![],
        };
        assert_eq!(handlebody_certificate(&single).unwrap().genus, 3);
        let mut apart = single.clone();
        apart.pieces.push(GluedPiece { id: "W".into(), kind: PieceKind::SolidTorus });
        assert_eq!(handlebody_certificate(&apart), Err(GraphError::Disconnected));
        let mut stuck = doubled_handlebody_graph(2);
        stuck.gluings[1].attribute = AnnulusAttribute::Incompressible;
        assert!(matches!(handlebody_certificate(&stuck), Err(GraphError::Stuck { .. })));
    }

    #[test]
    fn twist_rule() {
        let t = |reducible, twist_count, disk_busting| casson_twist_rule(TwistInput { reducible, twist_count, disk_busting });
        assert_eq!(t(true, 5, true), TwistVerdict::StronglyIrreducible);
        assert_eq!(t(true, 4, true), TwistVerdict::Inconclusive);
        assert_eq!(t(false, 7, true), TwistVerdict::Inconclusive);
        assert_eq!(t(true, 9, false), TwistVerdict::Inconclusive);
    }
}
