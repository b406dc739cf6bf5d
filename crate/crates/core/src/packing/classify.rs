use std::collections::BTreeMap;

use super::{SearchError, StarPacking};
use crate::certify::verify_star_packing;
use crate::faces::trace_faces;
use crate::graph::EmbeddedCubicGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingClassification {
    /// Every center lies on three hexagons.
    pub is_p0: bool,
    /// Every hexagon holds 0 or 2 centers, and paired centers are antipodal.
    pub is_balanced: bool,
    /// For each star (in packing order): center and its three face sizes by corner.
    pub center_face_profile: Vec<(usize, [usize; 3])>,
    /// Number of hexagons holding exactly `k` centers, for `k` in 0, 1, 2
    /// (and any larger count that occurs).
    pub hexagon_center_histogram: BTreeMap<usize, usize>,
}

/// Classifies a perfect star packing of a fullerene.
pub fn classify_packing(
    g: &EmbeddedCubicGraph,
    packing: &StarPacking,
) -> Result<PackingClassification, SearchError> {
    verify_star_packing(g, packing)
        .map_err(|e| SearchError::InvalidInput(format!("packing not valid: {e}")))?;
    let faces = trace_faces(g);
    let center_face_profile: Vec<(usize, [usize; 3])> = packing
        .stars
        .iter()
        .map(|s| (s.center, faces.faces_at(s.center).map(|f| faces.faces[f].size())))
        .collect();
    let is_p0 = center_face_profile
        .iter()
        .all(|(_, sizes)| sizes.iter().all(|&s| s == 6));

    let mut is_center = vec![false; g.vertex_count()];
    for s in &packing.stars {
        is_center[s.center] = true;
    }
    let mut histogram = BTreeMap::from([(0, 0), (1, 0), (2, 0)]);
    let mut is_balanced = true;
    for face in faces.iter().filter(|f| f.size() == 6) {
        let centers: Vec<usize> = face.boundary.iter().copied().filter(|&v| is_center[v]).collect();
        *histogram.entry(centers.len()).or_insert(0) += 1;
        match centers.as_slice() {
            [] => {}
            [a, b] if face.cyclic_distance(*a, *b) == Some(3) => {}
            _ => is_balanced = false,
        }
    }
    Ok(PackingClassification {
        is_p0,
        is_balanced,
        center_face_profile,
        hexagon_center_histogram: histogram,
    })
}
