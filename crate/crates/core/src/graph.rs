//! Cubic graphs carrying a rotation system.
//!
//! Vertices are dense `usize` indices `0..vertex_count`. External formats
//! (planar_code, packing files, reports) shift them to 1-based identifiers.
//!
//! Every rotation is stored counterclockwise and normalized so that it starts
//! at the lowest-numbered neighbor. Two graphs with the same cyclic rotations
//! therefore compare equal with the derived `PartialEq`.

use std::collections::VecDeque;

use sha2::{Digest, Sha256};
use thiserror::Error;

/// Errors raised while validating a rotation table.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex} does not have 3 distinct neighbors (rotation {rotation:?})")]
    NonCubic { vertex: usize, rotation: Vec<usize> },
    #[error("vertex {vertex} lists neighbor {neighbor} outside 0..{vertex_count}")]
    BadIdentifier {
        vertex: usize,
        neighbor: usize,
        vertex_count: usize,
    },
    #[error("vertex {from} lists {to} but {to} does not list {from}")]
    AsymmetricAdjacency { from: usize, to: usize },
    #[error("graph is disconnected: vertex {unreached} is unreachable from vertex 0")]
    Disconnected { unreached: usize },
}

/// A directed edge, identified by its tail vertex and the slot of its head in
/// the tail's rotation. Dart `3 * v + i` leaves `v` towards `rotation(v)[i]`.
pub type Dart = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EmbeddedCubicGraph {
    rotations: Vec<[usize; 3]>,
}

impl EmbeddedCubicGraph {
    /// Validates a rotation table and builds the graph.
    ///
    /// `rotations[v]` lists the neighbors of `v` in counterclockwise order.
    pub fn new(rotations: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let n = rotations.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut triples = Vec::with_capacity(n);
        for (v, rot) in rotations.iter().enumerate() {
            for &w in rot {
                if w >= n {
                    return Err(GraphError::BadIdentifier {
                        vertex: v,
                        neighbor: w,
                        vertex_count: n,
                    });
                }
            }
            let distinct = rot.len() == 3
                && rot[0] != rot[1]
                && rot[1] != rot[2]
                && rot[0] != rot[2]
                && !rot.contains(&v);
            if !distinct {
                return Err(GraphError::NonCubic {
                    vertex: v,
                    rotation: rot.clone(),
                });
            }
            triples.push(normalize([rot[0], rot[1], rot[2]]));
        }
        for (v, rot) in triples.iter().enumerate() {
            for &w in rot {
                if !triples[w].contains(&v) {
                    return Err(GraphError::AsymmetricAdjacency { from: v, to: w });
                }
            }
        }
        let graph = EmbeddedCubicGraph { rotations: triples };
        if let Some(unreached) = graph.first_unreachable() {
            return Err(GraphError::Disconnected { unreached });
        }
        Ok(graph)
    }

    pub fn from_triples(rotations: &[[usize; 3]]) -> Result<Self, GraphError> {
        Self::new(rotations.iter().map(|r| r.to_vec()).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        3 * self.rotations.len() / 2
    }

    /// Counterclockwise neighbors of `v`, starting at the lowest-numbered one.
    pub fn rotation(&self, v: usize) -> [usize; 3] {
        self.rotations[v]
    }

    pub fn rotations(&self) -> &[[usize; 3]] {
        &self.rotations
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rotations[v].iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.rotations.len() && self.rotations[u].contains(&v)
    }

    /// Position of `w` in the rotation of `v`.
    pub fn slot(&self, v: usize, w: usize) -> Option<usize> {
        self.rotations[v].iter().position(|&x| x == w)
    }

    /// Undirected edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<_> = self
            .rotations
            .iter()
            .enumerate()
            .flat_map(|(u, rot)| rot.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        edges.sort_unstable();
        edges
    }

    pub fn dart_count(&self) -> usize {
        3 * self.rotations.len()
    }

    pub fn dart(&self, tail: usize, head: usize) -> Option<Dart> {
        self.slot(tail, head).map(|i| 3 * tail + i)
    }

    pub fn dart_tail(&self, d: Dart) -> usize {
        d / 3
    }

    pub fn dart_head(&self, d: Dart) -> usize {
        self.rotations[d / 3][d % 3]
    }

    pub fn reverse(&self, d: Dart) -> Dart {
        let (u, v) = (self.dart_tail(d), self.dart_head(d));
        3 * v + self.slot(v, u).expect("adjacency is symmetric")
    }

    /// Face successor: `u -> v` continues with `v -> w`, where `w` follows `u`
    /// in the rotation at `v`.
    pub fn face_successor(&self, d: Dart) -> Dart {
        let (u, v) = (self.dart_tail(d), self.dart_head(d));
        let i = self.slot(v, u).expect("adjacency is symmetric");
        3 * v + (i + 1) % 3
    }

    /// Connectivity of the graph with the `removed` vertices deleted.
    pub fn is_connected_without(&self, removed: &[usize]) -> bool {
        let n = self.vertex_count();
        let mut gone = vec![false; n];
        for &r in removed {
            gone[r] = true;
        }
        let Some(start) = (0..n).find(|&v| !gone[v]) else {
            return true;
        };
        let reached = self.bfs_count(start, &gone);
        reached == n - gone.iter().filter(|&&g| g).count()
    }

    fn bfs_count(&self, start: usize, blocked: &[bool]) -> usize {
        let mut seen = blocked.to_vec();
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut count = 0;
        while let Some(v) = queue.pop_front() {
            count += 1;
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        count
    }

    fn first_unreachable(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }

    /// SHA-256 over the vertex count and normalized rotations, as lowercase hex.
    pub fn fingerprint(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update((self.vertex_count() as u64).to_le_bytes());
        for rot in &self.rotations {
            for &w in rot {
                hasher.update((w as u32).to_le_bytes());
            }
        }
        hasher
            .finalize()
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }
}

fn normalize(rot: [usize; 3]) -> [usize; 3] {
    let k = (0..3).min_by_key(|&i| rot[i]).unwrap();
    [rot[k], rot[(k + 1) % 3], rot[(k + 2) % 3]]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tetrahedron() -> Vec<Vec<usize>> {
        vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]]
    }

    #[test]
    fn tetrahedron_counts() {
        let g = EmbeddedCubicGraph::new(tetrahedron()).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.edges().len(), 6);
    }

    #[test]
    fn malformed_rotations_are_rejected() {
        // 0 and 1 both list each other, but 2 lists 0 while 0 never lists 2
        let mut rot = tetrahedron();
        rot[0] = vec![1, 3, 3];
        assert!(matches!(
            EmbeddedCubicGraph::new(rot),
            Err(GraphError::NonCubic { vertex: 0, .. })
        ));

        // six vertices: two triangles, with 0 pointing at 4 unilaterally
        let rot = vec![
            vec![1, 2, 4],
            vec![0, 2, 3],
            vec![0, 1, 5],
            vec![4, 5, 1],
            vec![3, 5, 1],
            vec![3, 4, 2],
        ];
        assert!(matches!(
            EmbeddedCubicGraph::new(rot),
            Err(GraphError::AsymmetricAdjacency { .. })
        ));
    }

    #[test]
    fn bad_identifier_and_disconnected() {
        let mut rot = tetrahedron();
        rot[2] = vec![0, 1, 9];
        assert!(matches!(
            EmbeddedCubicGraph::new(rot),
            Err(GraphError::BadIdentifier { neighbor: 9, .. })
        ));

        let mut two = tetrahedron();
        two.extend(tetrahedron().into_iter().map(|r| r.into_iter().map(|w| w + 4).collect()));
        assert_eq!(
            EmbeddedCubicGraph::new(two),
            Err(GraphError::Disconnected { unreached: 4 })
        );
    }

    #[test]
    fn rotations_are_normalized_cyclically() {
        let mut rot = tetrahedron();
        rot[3] = vec![2, 1, 0];
        let g = EmbeddedCubicGraph::new(rot).unwrap();
        assert_eq!(g.rotation(3), [0, 2, 1]);
    }

    #[test]
    fn darts_reverse_and_successor() {
        let g = EmbeddedCubicGraph::new(tetrahedron()).unwrap();
        for d in 0..g.dart_count() {
            assert_eq!(g.reverse(g.reverse(d)), d);
            let s = g.face_successor(d);
            assert_eq!(g.dart_tail(s), g.dart_head(d));
        }
    }
}
