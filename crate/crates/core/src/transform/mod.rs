//! Graph constructions: chamfer, the star and semi-star transformations, and
//! extractors that read packings back out of their provenance records.
//!
//! Both star-based transformations require a *balanced* P0 packing: every
//! center lies on three hexagons, and every hexagon holds either no center or
//! two antipodal ones. Outputs are densely renumbered and every construction
//! checks its postconditions before returning.

mod chamfer;
mod chords;
mod extract;
mod provenance;
mod semi_star;
mod star;

use thiserror::Error;

pub use chamfer::{chamfer, Chamfered};
pub use chords::{solve_chord_assignment, ChordAssignment, ChordConstraint, ChordHexagon};
pub use extract::{extract_cycle_factor_from_provenance, extract_subdivided_star_packing, Spider, SpiderPacking};
pub use provenance::{
    Provenance, ProvenanceParseError, SemiStarProvenance, PROVENANCE_HEADER, StarImage, StarTransformProvenance, VertexRole,
};
pub use semi_star::semi_star_transform;
pub use star::star_transform;

use crate::graph::EmbeddedCubicGraph;
use crate::packing::{classify_packing, PackingClassification, StarPacking};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum TransformError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("packing is not of type P0: center {center} lies on a face of size {face_size}")]
    NotP0 { center: usize, face_size: usize },
    #[error("packing is not balanced: {0}")]
    NotBalanced(String),
    #[error("packing has an odd number of stars ({0})")]
    OddStarCount(usize),
    #[error("no consistent chord assignment; conflicting hexagons (by first vertex): {cycle:?}")]
    ChordInfeasible { cycle: Vec<usize> },
    #[error("postcondition failed: {0}")]
    PostconditionFailed(String),
    #[error("face cover is not a partition: {0}")]
    NotDirect(String),
    #[error("provenance does not belong to this graph")]
    ProvenanceMismatch,
}

/// Checks that `packing` is a balanced P0 packing of `g` and returns its
/// classification.
pub(crate) fn require_balanced_p0(
    g: &EmbeddedCubicGraph,
    packing: &StarPacking,
) -> Result<PackingClassification, TransformError> {
    let report = crate::verify_fullerene(g);
    if let Some(r) = report.failures().next() {
        return Err(TransformError::InvalidInput(format!(
            "not a fullerene: {} fails",
            r.axiom.name()
        )));
    }
    let class = classify_packing(g, packing).map_err(|e| TransformError::InvalidInput(e.to_string()))?;
    if !class.is_p0 {
        let (center, sizes) = class
            .center_face_profile
            .iter()
            .find(|(_, s)| s.iter().any(|&x| x != 6))
            .expect("a non-P0 packing has a center off the hexagons");
        let face_size = *sizes.iter().find(|&&x| x != 6).unwrap();
        return Err(TransformError::NotP0 {
            center: *center,
            face_size,
        });
    }
    if !class.is_balanced {
        let ones = class.hexagon_center_histogram.get(&1).copied().unwrap_or(0);
        return Err(TransformError::NotBalanced(format!(
            "{ones} hexagon(s) hold exactly one center, histogram {:?}",
            class.hexagon_center_histogram
        )));
    }
    Ok(class)
}
