//! Euler-rank oracle for glued handlebodies and a generator of graphs the
//! inference rules can prove.

use hakensum::scenarios::{AnnulusAttribute, AnnulusGluing, Face, GluedPiece, GluingGraph, PieceKind};
use rand::Rng;

/// `1 - Σ χ(piece)`: the genus a handlebody glued from these pieces along
/// annuli must have.
pub fn rank_genus(g: &GluingGraph) -> i64 {
    1 - g
        .pieces
        .iter()
        .map(|p| match p.kind {
            PieceKind::Handlebody { genus } => 1 - genus as i64,
            PieceKind::Product { base_euler } => base_euler,
            PieceKind::SolidTorus => 0,
        })
        .sum::<i64>()
}

fn random_kind<R: Rng>(rng: &mut R) -> PieceKind {
    match rng.gen_range(0..3) {
        0 => PieceKind::Handlebody { genus: rng.gen_range(1..5) },
        1 => PieceKind::Product { base_euler: rng.gen_range(-3..=0) },
        _ => PieceKind::SolidTorus,
    }
}

/// A random tree of 1 to 5 pieces. Every edge is primitive in one end,
/// except that a product with two or more edges may have its top-face
/// edges incompressible as long as one bottom-face edge is primitive in the
/// piece across it.
pub fn random_provable<R: Rng>(rng: &mut R) -> GluingGraph {
    let count = rng.gen_range(1..=5);
    let pieces: Vec<GluedPiece> = (0..count)
        .map(|j| GluedPiece {
            id: format!("P{j}"),
            kind: random_kind(rng),
        })
        .collect();
    let mut gluings = Vec::new();
    for child in 1..count {
        let parent = rng.gen_range(0..child);
        let host = if rng.gen_bool(0.5) { parent } else { child };
        gluings.push(AnnulusGluing {
            annulus: format!("A{child}"),
            between: [pieces[parent].id.clone(), pieces[child].id.clone()],
            attribute: AnnulusAttribute::PrimitiveIn(pieces[host].id.clone()),
            face: None,
        });
    }
    for p in &pieces {
        if !matches!(p.kind, PieceKind::Product { .. }) || !rng.gen_bool(0.6) {
            continue;
        }
        let incident: Vec<usize> = (0..gluings.len())
            .filter(|&e| gluings[e].between.contains(&p.id) && gluings[e].face.is_none())
            .collect();
        if incident.len() < 2 {
            continue;
        }
        let anchor = incident[rng.gen_range(0..incident.len())];
        let other = gluings[anchor].between.iter().find(|id| **id != p.id).unwrap().clone();
        gluings[anchor].attribute = AnnulusAttribute::PrimitiveIn(other);
        gluings[anchor].face = Some(Face::Bottom);
        for &e in &incident {
            if e != anchor {
                gluings[e].attribute = AnnulusAttribute::Incompressible;
                gluings[e].face = Some(Face::Top);
            }
        }
    }
    GluingGraph { pieces, gluings }
}
