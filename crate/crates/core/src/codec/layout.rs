//! Barycentric (Tutte) drawings.
//!
//! The outer face is pinned to a regular polygon of unit circumradius and
//! every other vertex is placed at the average of its neighbors. The interior
//! system is the graph Laplacian restricted to free vertices; it is symmetric
//! positive definite for connected inputs and is solved by conjugate gradients
//! from an all-zero start (the outer polygon's centroid).

use thiserror::Error;

use crate::faces::{face_census, trace_faces, Face};
use crate::graph::EmbeddedCubicGraph;

/// Largest allowed `|position - mean(neighbor positions)|` for a free vertex.
pub const LAYOUT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, Error, PartialEq)]
pub enum LayoutError {
    #[error("embedding is not planar (V - E + F = {0})")]
    NotPlanar(i64),
    #[error("outer face is not a face of the graph")]
    UnknownFace,
    #[error("interior system is singular")]
    SingularSystem,
    #[error("solver stopped after {iterations} iterations with residual {residual:e}")]
    DidNotConverge { iterations: usize, residual: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Layout {
    pub positions: Vec<(f64, f64)>,
    pub outer_face: Face,
}

impl Layout {
    /// Largest distance between a free vertex and its neighbors' barycenter.
    pub fn max_barycentric_defect(&self, g: &EmbeddedCubicGraph) -> f64 {
        (0..g.vertex_count())
            .filter(|v| !self.outer_face.contains(*v))
            .map(|v| {
                let (x, y) = self.positions[v];
                let (mut sx, mut sy) = (0.0, 0.0);
                for w in g.neighbors(v) {
                    sx += self.positions[w].0;
                    sy += self.positions[w].1;
                }
                (x - sx / 3.0).hypot(y - sy / 3.0)
            })
            .fold(0.0, f64::max)
    }
}

/// Tutte layout with `outer_face` on the boundary.
pub fn layout_tutte(g: &EmbeddedCubicGraph, outer_face: &Face) -> Result<Layout, LayoutError> {
    face_census(g).map_err(|e| LayoutError::NotPlanar(e.characteristic))?;
    if !trace_faces(g).iter().any(|f| is_same_cycle(f, outer_face)) {
        return Err(LayoutError::UnknownFace);
    }
    let n = g.vertex_count();
    let mut positions = vec![(0.0, 0.0); n];
    let k = outer_face.size();
    let mut pinned = vec![false; n];
    for (i, &v) in outer_face.boundary.iter().enumerate() {
        let angle = std::f64::consts::TAU * i as f64 / k as f64;
        positions[v] = (angle.cos(), angle.sin());
        pinned[v] = true;
    }

    let free: Vec<usize> = (0..n).filter(|&v| !pinned[v]).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in free.iter().enumerate() {
        index[v] = i;
    }

    // L_ff x = b, with L_ff = 3 I - A_ff and b the pinned neighbor sums
    let apply = |x: &[f64], out: &mut [f64]| {
        for (i, &v) in free.iter().enumerate() {
            let mut acc = 3.0 * x[i];
            for w in g.neighbors(v) {
                if !pinned[w] {
                    acc -= x[index[w]];
                }
            }
            out[i] = acc;
        }
    };
    let max_iterations = 10 * free.len().max(10);
    for axis in 0..2 {
        let b: Vec<f64> = free
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .filter(|&w| pinned[w])
                    .map(|w| if axis == 0 { positions[w].0 } else { positions[w].1 })
                    .sum()
            })
            .collect();
        let x = conjugate_gradient(&apply, &b, max_iterations)?;
        for (i, &v) in free.iter().enumerate() {
            if axis == 0 {
                positions[v].0 = x[i];
            } else {
                positions[v].1 = x[i];
            }
        }
    }
    let layout = Layout {
        positions,
        outer_face: outer_face.clone(),
    };
    let defect = layout.max_barycentric_defect(g);
    if defect > LAYOUT_TOLERANCE || !defect.is_finite() {
        return Err(LayoutError::DidNotConverge {
            iterations: max_iterations,
            residual: defect,
        });
    }
    Ok(layout)
}

/// The largest face, ties broken by face order. A reasonable default outer face.
pub fn default_outer_face(g: &EmbeddedCubicGraph) -> Face {
    let faces = trace_faces(g);
    let mut best = &faces.faces[0];
    for f in faces.iter() {
        if f.size() > best.size() {
            best = f;
        }
    }
    best.clone()
}

fn is_same_cycle(a: &Face, b: &Face) -> bool {
    if a.size() != b.size() || a.size() == 0 {
        return false;
    }
    let k = a.size();
    let Some(start) = a.boundary.iter().position(|&v| v == b.boundary[0]) else {
        return false;
    };
    let forward = (0..k).all(|i| a.boundary[(start + i) % k] == b.boundary[i]);
    let backward = (0..k).all(|i| a.boundary[(start + k - i) % k] == b.boundary[i]);
    forward || backward
}

fn conjugate_gradient(
    apply: &dyn Fn(&[f64], &mut [f64]),
    b: &[f64],
    max_iterations: usize,
) -> Result<Vec<f64>, LayoutError> {
    let m = b.len();
    let mut x = vec![0.0; m];
    if m == 0 {
        return Ok(x);
    }
    let mut r = b.to_vec();
    let mut p = r.clone();
    let mut ap = vec![0.0; m];
    let mut rr: f64 = r.iter().map(|v| v * v).sum();
    // the equation residual is r / 3 per vertex; stop well below the tolerance
    let target = (LAYOUT_TOLERANCE * 1e-2).powi(2);
    for iteration in 0..max_iterations {
        if rr <= target {
            return Ok(x);
        }
        apply(&p, &mut ap);
        let pap: f64 = p.iter().zip(&ap).map(|(a, b)| a * b).sum();
        if pap <= 0.0 || !pap.is_finite() {
            return Err(LayoutError::SingularSystem);
        }
        let alpha = rr / pap;
        for i in 0..m {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        let rr_next: f64 = r.iter().map(|v| v * v).sum();
        if iteration + 1 == max_iterations && rr_next > target {
            return Err(LayoutError::DidNotConverge {
                iterations: max_iterations,
                residual: rr_next.sqrt(),
            });
        }
        let beta = rr_next / rr;
        for i in 0..m {
            p[i] = r[i] + beta * p[i];
        }
        rr = rr_next;
    }
    Ok(x)
}

/// Whether segments `ab` and `cd` cross at a point interior to both.
pub fn segments_cross(a: (f64, f64), b: (f64, f64), c: (f64, f64), d: (f64, f64)) -> bool {
    fn orient(p: (f64, f64), q: (f64, f64), r: (f64, f64)) -> f64 {
        (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0)
    }
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fixture_c80, fixture_dodecahedron};

    fn inside_convex(poly: &[(f64, f64)], p: (f64, f64)) -> bool {
        (0..poly.len()).all(|i| {
            let a = poly[i];
            let b = poly[(i + 1) % poly.len()];
            (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0) > 0.0
        })
    }

    #[test]
    fn dodecahedron_interior_inside_outer_polygon() {
        let g = fixture_dodecahedron();
        for outer in trace_faces(&g).iter() {
            let layout = layout_tutte(&g, outer).unwrap();
            let poly: Vec<_> = outer.boundary.iter().map(|&v| layout.positions[v]).collect();
            for v in 0..g.vertex_count() {
                if !outer.contains(v) {
                    assert!(inside_convex(&poly, layout.positions[v]));
                }
            }
            assert!(layout.max_barycentric_defect(&g) <= LAYOUT_TOLERANCE);
        }
    }

    #[test]
    fn chamfered_dodecahedron_draws_without_crossings() {
        let g = fixture_c80();
        let layout = layout_tutte(&g, &default_outer_face(&g)).unwrap();
        let edges = g.edges();
        let p = &layout.positions;
        for (i, &(a, b)) in edges.iter().enumerate() {
            for &(c, d) in &edges[i + 1..] {
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                assert!(!segments_cross(p[a], p[b], p[c], p[d]), "{a}-{b} crosses {c}-{d}");
            }
        }
    }

    #[test]
    fn foreign_outer_face_is_rejected() {
        let g = fixture_dodecahedron();
        let bogus = Face {
            boundary: vec![0, 1, 2, 3, 5],
        };
        assert_eq!(layout_tutte(&g, &bogus), Err(LayoutError::UnknownFace));
    }

    #[test]
    fn crossing_predicate() {
        assert!(segments_cross((0.0, 0.0), (1.0, 1.0), (0.0, 1.0), (1.0, 0.0)));
        assert!(!segments_cross((0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)));
    }
}
