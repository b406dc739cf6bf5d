use super::TransformError;
use crate::faces::trace_faces;
use crate::graph::EmbeddedCubicGraph;
use crate::packing::{Star, StarPacking};
use crate::verify_fullerene;

/// Output of [`chamfer`]. Original vertices keep their numbers `0..n`; the
/// corner vertex of original vertex `u` at corner `i` is `n + 3u + i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamfered {
    pub graph: EmbeddedCubicGraph,
    pub original_count: usize,
}

impl Chamfered {
    pub fn corner_vertex(&self, u: usize, corner: usize) -> usize {
        self.original_count + 3 * u + corner
    }

    /// Stars centered at the original vertices. Each original vertex lies on
    /// three edge hexagons and owns its three corner vertices, so this is
    /// always a balanced P0 packing.
    pub fn original_vertex_packing(&self) -> StarPacking {
        StarPacking::new(
            (0..self.original_count)
                .map(|u| Star {
                    center: u,
                    leaves: self.graph.rotation(u),
                })
                .collect(),
        )
    }
}

/// The chamfer (quadrupling) of a fullerene.
///
/// Every face shrinks to a copy of itself made of corner vertices, original
/// vertices connect to their three corners, and each original edge `uv` is
/// replaced by the hexagon `u, b(f,u), b(f,v), v, b(g,v), b(g,u)`.
pub fn chamfer(g: &EmbeddedCubicGraph) -> Result<Chamfered, TransformError> {
    let report = verify_fullerene(g);
    if let Some(r) = report.failures().next() {
        return Err(TransformError::InvalidInput(format!(
            "not a fullerene: {} fails",
            r.axiom.name()
        )));
    }
    let n = g.vertex_count();
    let faces = trace_faces(g);
    let corner = |u: usize, i: usize| n + 3 * u + i;
    let corner_on = |w: usize, face: usize| {
        let j = (0..3)
            .find(|&j| faces.corner_face(w, j) == face)
            .expect("neighbor on the face has a corner there");
        corner(w, j)
    };

    let mut rotations = vec![Vec::new(); 4 * n];
    for u in 0..n {
        rotations[u] = (0..3).map(|i| corner(u, i)).collect();
        let rot = g.rotation(u);
        for i in 0..3 {
            let face = faces.corner_face(u, i);
            let before = corner_on(rot[i], face);
            let after = corner_on(rot[(i + 1) % 3], face);
            rotations[corner(u, i)] = vec![u, before, after];
        }
    }
    let graph = EmbeddedCubicGraph::new(rotations)
        .map_err(|e| TransformError::PostconditionFailed(e.to_string()))?;

    let out = verify_fullerene(&graph);
    if !out.passed() || graph.vertex_count() != 4 * n {
        return Err(TransformError::PostconditionFailed(format!(
            "chamfer output is not a fullerene on {} vertices",
            4 * n
        )));
    }
    let expected_hexagons = report.census.hexagons() + g.edge_count();
    if out.census.hexagons() != expected_hexagons {
        return Err(TransformError::PostconditionFailed(format!(
            "expected {expected_hexagons} hexagons, found {}",
            out.census.hexagons()
        )));
    }
    Ok(Chamfered {
        graph,
        original_count: n,
    })
}
