//! Face tracing on the rotation system.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{Dart, EmbeddedCubicGraph};

/// A face boundary as a cyclic vertex sequence, in tracing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    pub boundary: Vec<usize>,
}

impl Face {
    pub fn size(&self) -> usize {
        self.boundary.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.boundary.contains(&v)
    }

    /// Sorted vertex set, for comparing faces irrespective of start and direction.
    pub fn vertex_key(&self) -> Vec<usize> {
        let mut key = self.boundary.clone();
        key.sort_unstable();
        key
    }

    /// Distance between two boundary positions along the shorter arc.
    pub fn cyclic_distance(&self, a: usize, b: usize) -> Option<usize> {
        let i = self.boundary.iter().position(|&x| x == a)?;
        let j = self.boundary.iter().position(|&x| x == b)?;
        let d = i.abs_diff(j);
        Some(d.min(self.size() - d))
    }
}

/// Faces of an embedded graph together with the dart-to-face map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Face>,
    dart_face: Vec<usize>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter()
    }

    /// Index of the face that contains dart `d`.
    pub fn face_of_dart(&self, d: Dart) -> usize {
        self.dart_face[d]
    }

    /// The face at corner `i` of `v`: the one traced through
    /// `rotation(v)[i] -> v -> rotation(v)[i + 1]`.
    pub fn corner_face(&self, v: usize, i: usize) -> usize {
        self.dart_face[3 * v + (i + 1) % 3]
    }

    /// The three faces around `v`, by corner.
    pub fn faces_at(&self, v: usize) -> [usize; 3] {
        [0, 1, 2].map(|i| self.corner_face(v, i))
    }
}

/// Traces every face as an orbit of the face successor on darts.
///
/// Faces are numbered by their smallest dart, so the output is a pure function
/// of the rotation table.
pub fn trace_faces(g: &EmbeddedCubicGraph) -> FaceSet {
    const UNSEEN: usize = usize::MAX;
    let mut dart_face = vec![UNSEEN; g.dart_count()];
    let mut faces = Vec::new();
    for start in 0..g.dart_count() {
        if dart_face[start] != UNSEEN {
            continue;
        }
        let id = faces.len();
        let mut boundary = Vec::new();
        let mut d = start;
        loop {
            dart_face[d] = id;
            boundary.push(g.dart_tail(d));
            d = g.face_successor(d);
            if d == start {
                break;
            }
        }
        faces.push(Face { boundary });
    }
    FaceSet { faces, dart_face }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("embedding is not spherical: V - E + F = {characteristic}")]
pub struct GenusNonZero {
    pub characteristic: i64,
    pub census: FaceCensus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceCensus {
    pub by_size: BTreeMap<usize, usize>,
    pub vertex_count: usize,
    pub edge_count: usize,
}

impl FaceCensus {
    pub fn faces(&self) -> usize {
        self.by_size.values().sum()
    }

    pub fn pentagons(&self) -> usize {
        self.count(5)
    }

    pub fn hexagons(&self) -> usize {
        self.count(6)
    }

    pub fn count(&self, size: usize) -> usize {
        self.by_size.get(&size).copied().unwrap_or(0)
    }

    /// V - E + F.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edge_count as i64 + self.faces() as i64
    }
}

/// Counts faces by size. Fails when the traced faces do not satisfy Euler's
/// formula for the sphere; the error still carries the census.
pub fn face_census(g: &EmbeddedCubicGraph) -> Result<FaceCensus, GenusNonZero> {
    census_of(g, &trace_faces(g))
}

pub(crate) fn census_of(g: &EmbeddedCubicGraph, faces: &FaceSet) -> Result<FaceCensus, GenusNonZero> {
    let mut by_size = BTreeMap::new();
    for f in faces.iter() {
        *by_size.entry(f.size()).or_insert(0) += 1;
    }
    let census = FaceCensus {
        by_size,
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
    };
    match census.euler_characteristic() {
        2 => Ok(census),
        characteristic => Err(GenusNonZero {
            characteristic,
            census,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fixture_dodecahedron, fixture_tetrahedron};

    #[test]
    fn tetrahedron_has_four_triangles() {
        let g = fixture_tetrahedron();
        let faces = trace_faces(&g);
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|f| f.size() == 3));
    }

    #[test]
    fn dodecahedron_has_twelve_pentagons() {
        let census = face_census(&fixture_dodecahedron()).unwrap();
        assert_eq!(census.by_size, BTreeMap::from([(5, 12)]));
        assert_eq!(census.euler_characteristic(), 2);
    }

    #[test]
    fn every_dart_in_exactly_one_face() {
        let g = fixture_dodecahedron();
        let faces = trace_faces(&g);
        let total: usize = faces.iter().map(Face::size).sum();
        assert_eq!(total, 2 * g.edge_count());
        for d in 0..g.dart_count() {
            let f = &faces.faces[faces.face_of_dart(d)];
            assert!(f.contains(g.dart_tail(d)));
        }
    }

    #[test]
    fn boundaries_walk_along_edges() {
        let g = fixture_dodecahedron();
        for f in trace_faces(&g).iter() {
            for i in 0..f.size() {
                assert!(g.has_edge(f.boundary[i], f.boundary[(i + 1) % f.size()]));
            }
        }
    }

    #[test]
    fn twisted_rotation_breaks_euler() {
        // flipping one rotation of the cube graph puts it on the torus
        let mut rot: Vec<Vec<usize>> = vec![
            vec![1, 3, 4],
            vec![0, 5, 2],
            vec![1, 6, 3],
            vec![0, 2, 7],
            vec![0, 7, 5],
            vec![1, 4, 6],
            vec![2, 5, 7],
            vec![3, 6, 4],
        ];
        let g = EmbeddedCubicGraph::new(rot.clone()).unwrap();
        assert_eq!(face_census(&g).unwrap().by_size, BTreeMap::from([(4, 6)]));
        rot[0] = vec![1, 4, 3];
        let twisted = EmbeddedCubicGraph::new(rot).unwrap();
        let err = face_census(&twisted).unwrap_err();
        assert_ne!(err.characteristic, 2);
    }

    #[test]
    fn corner_face_contains_the_corner() {
        let g = fixture_dodecahedron();
        let faces = trace_faces(&g);
        for v in 0..g.vertex_count() {
            let rot = g.rotation(v);
            for i in 0..3 {
                let f = &faces.faces[faces.corner_face(v, i)];
                assert!(f.contains(v) && f.contains(rot[i]) && f.contains(rot[(i + 1) % 3]));
            }
        }
    }
}
