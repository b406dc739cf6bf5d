//! Built-in graphs.
//!
//! Only the dodecahedron is hard-coded; C80(Ih) and everything larger is
//! built with [`crate::transform::chamfer`] and the star transformations.

use crate::graph::EmbeddedCubicGraph;
use crate::transform::chamfer;

/// Counterclockwise rotation table of the dodecahedron (0-based).
///
/// Schlegel layout: outer pentagon `0..5`, a ring of ten `5..15` where
/// `5 + 2i` hangs off outer vertex `i`, and the inner pentagon `15..20` where
/// `15 + i` hangs off ring vertex `6 + 2i`.
pub const DODECAHEDRON_ROTATIONS: [[usize; 3]; 20] = [
    [1, 5, 4],
    [0, 2, 7],
    [1, 3, 9],
    [2, 4, 11],
    [0, 13, 3],
    [0, 6, 14],
    [5, 7, 15],
    [1, 8, 6],
    [7, 9, 16],
    [2, 10, 8],
    [9, 11, 17],
    [3, 12, 10],
    [11, 13, 18],
    [4, 14, 12],
    [5, 19, 13],
    [6, 16, 19],
    [8, 17, 15],
    [10, 18, 16],
    [12, 19, 17],
    [14, 15, 18],
];

/// C20, the smallest fullerene.
pub fn fixture_dodecahedron() -> EmbeddedCubicGraph {
    EmbeddedCubicGraph::from_triples(&DODECAHEDRON_ROTATIONS).expect("fixture table is valid")
}

/// C80(Ih), built as the chamfer of the dodecahedron.
pub fn fixture_c80() -> EmbeddedCubicGraph {
    chamfer(&fixture_dodecahedron())
        .expect("the dodecahedron is a fullerene")
        .graph
}

pub fn fixture_tetrahedron() -> EmbeddedCubicGraph {
    EmbeddedCubicGraph::from_triples(&[[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]])
        .expect("fixture table is valid")
}

/// The 3-cube: bottom square `0..4`, top square `4..8`, `i` below `i + 4`.
pub fn fixture_cube() -> EmbeddedCubicGraph {
    EmbeddedCubicGraph::from_triples(&[
        [1, 3, 4],
        [0, 5, 2],
        [1, 6, 3],
        [0, 2, 7],
        [0, 7, 5],
        [1, 4, 6],
        [2, 5, 7],
        [3, 6, 4],
    ])
    .expect("fixture table is valid")
}

/// Resolves a `fixture:<name>` literal.
pub fn fixture_by_name(name: &str) -> Option<EmbeddedCubicGraph> {
    match name {
        "c20" | "dodecahedron" => Some(fixture_dodecahedron()),
        "c80" => Some(fixture_c80()),
        "tetrahedron" => Some(fixture_tetrahedron()),
        "cube" => Some(fixture_cube()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::faces::face_census;
    use crate::fullerene::{verify_fullerene, vertex_connectivity_at_least};
    use std::collections::BTreeMap;

    #[test]
    fn dodecahedron_fixture() {
        let g = fixture_dodecahedron();
        assert_eq!((g.vertex_count(), g.edge_count()), (20, 30));
        assert_eq!(face_census(&g).unwrap().by_size, BTreeMap::from([(5, 12)]));
        assert!(vertex_connectivity_at_least(&g, 3));
        assert!(verify_fullerene(&g).passed());
    }

    #[test]
    fn cube_is_planar_with_square_faces() {
        let census = face_census(&fixture_cube()).unwrap();
        assert_eq!(census.by_size, BTreeMap::from([(4, 6)]));
    }

    #[test]
    fn names_resolve() {
        assert_eq!(fixture_by_name("c20").unwrap().vertex_count(), 20);
        assert_eq!(fixture_by_name("c80").unwrap().vertex_count(), 80);
        assert!(fixture_by_name("c60").is_none());
    }
}
