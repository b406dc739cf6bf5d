use std::collections::HashMap;

use super::provenance::{StarImage, StarTransformProvenance, VertexRole};
use super::{require_balanced_p0, TransformError};
use crate::faces::{trace_faces, FaceSet};
use crate::graph::EmbeddedCubicGraph;
use crate::packing::StarPacking;
use crate::verify_fullerene;

/// Replaces every star by a hexagon of six new vertices.
///
/// Around the new hexagon of center `u` (positions 0..6, counterclockwise),
/// even position `2i` takes `u`'s place next to leaf `rot[u][i]`, and odd
/// position `2i + 1` points into the face at corner `i` of `u`. Inside a
/// 2-center hexagon the two inward vertices are joined, which splits that
/// face in two.
///
/// Output numbering: the non-center vertices of `g` in increasing order,
/// then six vertices per star in center order.
pub fn star_transform(
    g: &EmbeddedCubicGraph,
    packing: &StarPacking,
) -> Result<(EmbeddedCubicGraph, StarTransformProvenance), TransformError> {
    require_balanced_p0(g, packing)?;
    let n = g.vertex_count();
    let faces = trace_faces(g);
    let s = packing.len();

    let mut star_of = vec![usize::MAX; n];
    for (k, st) in packing.stars.iter().enumerate() {
        star_of[st.center] = k;
    }
    let mut kept = vec![usize::MAX; n];
    let mut roles = Vec::with_capacity(n - s + 6 * s);
    for v in (0..n).filter(|&v| star_of[v] == usize::MAX) {
        kept[v] = roles.len();
        roles.push(VertexRole::Kept { input: v });
    }
    let base = roles.len();
    let ring = |k: usize, j: usize| base + 6 * k + j % 6;
    for st in &packing.stars {
        for position in 0..6 {
            roles.push(VertexRole::StarNew {
                center: st.center,
                position,
            });
        }
    }

    let mut rotations = vec![Vec::new(); roles.len()];
    for v in (0..n).filter(|&v| kept[v] != usize::MAX) {
        rotations[kept[v]] = g
            .rotation(v)
            .iter()
            .map(|&w| match star_of[w] {
                usize::MAX => kept[w],
                k => ring(k, 2 * g.slot(w, v).unwrap()),
            })
            .collect();
    }

    let mut images = Vec::with_capacity(s);
    let mut cross_edges = Vec::new();
    for (k, st) in packing.stars.iter().enumerate() {
        let u = st.center;
        let mut partners = [0; 3];
        let mut corner_faces: [Vec<usize>; 3] = Default::default();
        for i in 0..3 {
            let even = ring(k, 2 * i);
            rotations[even] = vec![kept[st.leaves[i]], ring(k, 2 * i + 1), ring(k, 2 * i + 5)];

            let face = faces.corner_face(u, i);
            let (other, j) = partner_corner(&faces, &star_of, u, face)?;
            let odd = ring(k, 2 * i + 1);
            partners[i] = ring(star_of[other], 2 * j + 1);
            rotations[odd] = vec![partners[i], ring(k, 2 * i + 2), ring(k, 2 * i)];
            corner_faces[i] = faces.faces[face].boundary.clone();
            if odd < partners[i] {
                cross_edges.push((odd, partners[i]));
            }
        }
        images.push(StarImage {
            center: u,
            leaves: st.leaves,
            ring: std::array::from_fn(|j| ring(k, j)),
            partners,
            corner_faces,
        });
    }
    cross_edges.sort_unstable();

    let f = EmbeddedCubicGraph::new(rotations)
        .map_err(|e| TransformError::PostconditionFailed(e.to_string()))?;
    let (pentagons, zero_center_hexagons) = check_postconditions(g, &faces, &star_of, &kept, packing, &f)?;

    let provenance = StarTransformProvenance {
        input_vertices: n,
        input_fingerprint: g.fingerprint(),
        output_vertices: f.vertex_count(),
        output_fingerprint: f.fingerprint(),
        packing: packing.clone(),
        stars: images,
        pentagons,
        zero_center_hexagons,
        cross_edges,
        roles,
    };
    Ok((f, provenance))
}

/// The other center on `face` and the index of its corner there.
fn partner_corner(
    faces: &FaceSet,
    star_of: &[usize],
    u: usize,
    face: usize,
) -> Result<(usize, usize), TransformError> {
    let other = faces.faces[face]
        .boundary
        .iter()
        .copied()
        .find(|&w| w != u && star_of[w] != usize::MAX)
        .ok_or_else(|| TransformError::NotBalanced(format!("center {} is alone on a hexagon", u + 1)))?;
    let j = (0..3)
        .find(|&j| faces.corner_face(other, j) == face)
        .expect("a center on a face has a corner there");
    Ok((other, j))
}

type FaceLists = (Vec<Vec<usize>>, Vec<Vec<usize>>);

fn check_postconditions(
    g: &EmbeddedCubicGraph,
    faces: &FaceSet,
    star_of: &[usize],
    kept: &[usize],
    packing: &StarPacking,
    f: &EmbeddedCubicGraph,
) -> Result<FaceLists, TransformError> {
    let fail = |msg: String| Err(TransformError::PostconditionFailed(msg));
    let n = g.vertex_count();
    if 4 * f.vertex_count() != 9 * n {
        return fail(format!("{} output vertices for {n} input vertices", f.vertex_count()));
    }
    let report = verify_fullerene(f);
    if let Some(r) = report.failures().next() {
        return fail(format!("output fails {}", r.axiom.name()));
    }
    let out_faces = trace_faces(f);
    let by_key: HashMap<Vec<usize>, usize> = out_faces
        .iter()
        .enumerate()
        .map(|(i, face)| (face.vertex_key(), i))
        .collect();
    let image_face = |boundary: &[usize]| -> Option<Vec<usize>> {
        let mut key: Vec<usize> = boundary.iter().map(|&v| kept[v]).collect();
        key.sort_unstable();
        by_key.get(&key).map(|&i| out_faces.faces[i].boundary.clone())
    };

    let mut pentagons = Vec::new();
    let mut zero = Vec::new();
    let mut two = 0;
    for face in faces.iter() {
        let centers = face.boundary.iter().filter(|&&v| star_of[v] != usize::MAX).count();
        match (face.size(), centers) {
            (5, _) => match image_face(&face.boundary) {
                Some(b) => pentagons.push(b),
                None => return fail(format!("pentagon {:?} did not survive", one_based(&face.boundary))),
            },
            (6, 0) => match image_face(&face.boundary) {
                Some(b) => zero.push(b),
                None => return fail(format!("hexagon {:?} did not survive", one_based(&face.boundary))),
            },
            _ => two += 1,
        }
    }
    for k in 0..packing.len() {
        let base = f.vertex_count() - 6 * packing.len() + 6 * k;
        if !by_key.contains_key(&(base..base + 6).collect::<Vec<_>>()) {
            return fail(format!("star {} has no hexagon", packing.stars[k].center + 1));
        }
    }
    let expected = 2 * two + zero.len() + packing.len();
    if report.census.hexagons() != expected || report.census.pentagons() != pentagons.len() {
        return fail(format!(
            "expected {expected} hexagons, found {}",
            report.census.hexagons()
        ));
    }
    Ok((pentagons, zero))
}

pub(crate) fn one_based(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::faces::face_census;
    use crate::fixtures::fixture_dodecahedron;
    use crate::packing::{classify_packing, find_star_packings, SearchBudget};
    use crate::transform::chamfer;
    use std::collections::BTreeMap;

    #[test]
    fn c80_becomes_180() {
        let ch = chamfer(&fixture_dodecahedron()).unwrap();
        let (f, prov) = star_transform(&ch.graph, &ch.original_vertex_packing()).unwrap();
        assert_eq!(f.vertex_count(), 180);
        assert_eq!(f.edge_count(), 270);
        assert_eq!(face_census(&f).unwrap().by_size, BTreeMap::from([(5, 12), (6, 80)]));
        assert_eq!(prov.cross_edges.len(), 30);
        assert_eq!(prov.pentagons.len(), 12);
        assert!(prov.zero_center_hexagons.is_empty());
    }

    #[test]
    fn center_on_a_pentagon_is_rejected() {
        let ch = chamfer(&fixture_dodecahedron()).unwrap();
        let found = find_star_packings(&ch.graph, 1 << 20, SearchBudget::unlimited()).unwrap();
        let off_hexagon = found
            .packings
            .iter()
            .find(|p| !classify_packing(&ch.graph, p).unwrap().is_p0)
            .expect("C80 has a packing with a center on a pentagon");
        assert!(matches!(
            star_transform(&ch.graph, off_hexagon),
            Err(TransformError::NotP0 { face_size: 5, .. })
        ));
    }

    #[test]
    fn broken_packing_is_invalid_input() {
        let ch = chamfer(&fixture_dodecahedron()).unwrap();
        let mut packing = ch.original_vertex_packing();
        packing.stars.pop();
        assert!(matches!(
            star_transform(&ch.graph, &packing),
            Err(TransformError::InvalidInput(_))
        ));
    }
}
