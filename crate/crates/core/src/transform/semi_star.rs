use std::collections::HashMap;

use super::chords::solve_chord_assignment;
use super::provenance::{SemiStarProvenance, VertexRole};
use super::{require_balanced_p0, TransformError};
use crate::faces::trace_faces;
use crate::graph::EmbeddedCubicGraph;
use crate::packing::StarPacking;
use crate::verify_fullerene;

/// Subdivides every star edge and adds one chord per 2-center hexagon.
///
/// Input vertices keep their numbers; the subdivision vertex of the edge from
/// the `k`-th center (in packing order) to its leaf `rot[center][i]` is
/// `n + 3k + i`.
pub fn semi_star_transform(
    g: &EmbeddedCubicGraph,
    packing: &StarPacking,
) -> Result<(EmbeddedCubicGraph, SemiStarProvenance), TransformError> {
    let class = require_balanced_p0(g, packing)?;
    if !packing.len().is_multiple_of(2) {
        return Err(TransformError::OddStarCount(packing.len()));
    }
    let assignment = solve_chord_assignment(g, packing)?;
    let n = g.vertex_count();
    let faces = trace_faces(g);

    let mut sub: HashMap<(usize, usize), usize> = HashMap::new();
    let mut subdivisions = Vec::new();
    let mut roles: Vec<VertexRole> = (0..n).map(|input| VertexRole::Kept { input }).collect();
    for (k, st) in packing.stars.iter().enumerate() {
        for (i, &leaf) in g.rotation(st.center).iter().enumerate() {
            let s = n + 3 * k + i;
            sub.insert((st.center, leaf), s);
            subdivisions.push((st.center, leaf, s));
            roles.push(VertexRole::Subdivision {
                center: st.center,
                leaf,
            });
        }
    }
    let subdivided = |x: usize, y: usize| sub.get(&(x, y)).or_else(|| sub.get(&(y, x))).copied();

    let mut rotations: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            g.rotation(v)
                .iter()
                .map(|&w| subdivided(v, w).unwrap_or(w))
                .collect()
        })
        .collect();
    rotations.resize(roles.len(), Vec::new());

    let mut chords = Vec::with_capacity(assignment.hexagons.len());
    for hexagon in &assignment.hexagons {
        let ends = hexagon.chord();
        let ids = ends.map(|e| sub[&e]);
        for (side, &(center, leaf)) in ends.iter().enumerate() {
            let partner = ids[1 - side];
            let dart = g.dart(center, leaf).unwrap();
            let on_right = hexagon.boundary == faces.faces[faces.face_of_dart(dart)].boundary;
            rotations[ids[side]] = if on_right {
                vec![center, partner, leaf]
            } else {
                vec![center, leaf, partner]
            };
        }
        chords.push((ids[0].min(ids[1]), ids[0].max(ids[1])));
    }
    chords.sort_unstable();

    let f = EmbeddedCubicGraph::new(rotations)
        .map_err(|e| TransformError::PostconditionFailed(e.to_string()))?;

    let fail = |msg: String| Err(TransformError::PostconditionFailed(msg));
    if 4 * f.vertex_count() != 7 * n {
        return fail(format!("{} output vertices for {n} input vertices", f.vertex_count()));
    }
    let report = verify_fullerene(&f);
    if let Some(r) = report.failures().next() {
        return fail(format!("output fails {}", r.axiom.name()));
    }
    let two = class.hexagon_center_histogram.get(&2).copied().unwrap_or(0);
    let zero = class.hexagon_center_histogram.get(&0).copied().unwrap_or(0);
    if report.census.hexagons() != 2 * two + zero {
        return fail(format!(
            "expected {} hexagons, found {}",
            2 * two + zero,
            report.census.hexagons()
        ));
    }

    let provenance = SemiStarProvenance {
        input_vertices: n,
        input_fingerprint: g.fingerprint(),
        output_vertices: f.vertex_count(),
        output_fingerprint: f.fingerprint(),
        packing: packing.clone(),
        subdivisions,
        chords,
        hexagons: assignment.hexagons,
        roles,
    };
    Ok((f, provenance))
}
