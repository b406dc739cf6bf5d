//! The 8-bit planar_code format.
//!
//! A stream is an optional `>>planar_code<<` header followed by graph
//! records. Each record is one byte `n`, then for every vertex `1..=n` its
//! neighbors (1-based, one byte each) in rotation order, closed by a zero byte.
//!
//! Rotations are written in the graph's stored counterclockwise order,
//! starting at the lowest-numbered neighbor. Generators that emit clockwise
//! rotations produce the mirror embedding, which has the same faces.

use thiserror::Error;

use crate::graph::{EmbeddedCubicGraph, GraphError};

pub const HEADER: &[u8] = b">>planar_code<<";

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum DecodeError {
    #[error("stream truncated at byte offset {offset}")]
    TruncatedStream { offset: usize },
    #[error("identifier {identifier} at byte offset {offset} exceeds vertex count {vertex_count}")]
    IdentifierOutOfRange {
        offset: usize,
        identifier: u8,
        vertex_count: usize,
    },
    #[error("zero vertex count at byte offset {offset} (16-bit planar_code is not supported)")]
    WideFormat { offset: usize },
    #[error("graph {graph_index} is invalid: {source}")]
    ValidationFailed {
        graph_index: usize,
        #[source]
        source: GraphError,
    },
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum EncodeError {
    #[error("graph has {vertex_count} vertices; 8-bit planar_code holds at most 255")]
    TooLarge { vertex_count: usize },
}

/// Decodes every graph in the stream, in order.
pub fn decode_planar_code(bytes: &[u8]) -> Result<Vec<EmbeddedCubicGraph>, DecodeError> {
    let mut pos = if bytes.starts_with(HEADER) { HEADER.len() } else { 0 };
    let mut graphs = Vec::new();
    while pos < bytes.len() {
        let n = bytes[pos] as usize;
        if n == 0 {
            return Err(DecodeError::WideFormat { offset: pos });
        }
        pos += 1;
        let mut rotations = Vec::with_capacity(n);
        for _ in 0..n {
            let mut rot = Vec::with_capacity(3);
            loop {
                let Some(&b) = bytes.get(pos) else {
                    return Err(DecodeError::TruncatedStream { offset: pos });
                };
                pos += 1;
                if b == 0 {
                    break;
                }
                if b as usize > n {
                    return Err(DecodeError::IdentifierOutOfRange {
                        offset: pos - 1,
                        identifier: b,
                        vertex_count: n,
                    });
                }
                rot.push(b as usize - 1);
            }
            rotations.push(rot);
        }
        let graph = EmbeddedCubicGraph::new(rotations).map_err(|source| {
            DecodeError::ValidationFailed {
                graph_index: graphs.len(),
                source,
            }
        })?;
        graphs.push(graph);
    }
    Ok(graphs)
}

/// Appends one graph record (no header).
pub fn encode_record(g: &EmbeddedCubicGraph, out: &mut Vec<u8>) -> Result<(), EncodeError> {
    let n = g.vertex_count();
    if n > 255 {
        return Err(EncodeError::TooLarge { vertex_count: n });
    }
    out.push(n as u8);
    for rot in g.rotations() {
        out.extend(rot.iter().map(|&w| (w + 1) as u8));
        out.push(0);
    }
    Ok(())
}

/// Header plus one record.
pub fn encode_planar_code(g: &EmbeddedCubicGraph) -> Result<Vec<u8>, EncodeError> {
    encode_many(std::slice::from_ref(g))
}

pub fn encode_many(graphs: &[EmbeddedCubicGraph]) -> Result<Vec<u8>, EncodeError> {
    let mut out = HEADER.to_vec();
    for g in graphs {
        encode_record(g, &mut out)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::faces::trace_faces;
    use crate::fixtures::fixture_dodecahedron;

    const TETRA: &[u8] = &[4, 2, 3, 4, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0];

    #[test]
    fn hand_encoded_tetrahedron() {
        let graphs = decode_planar_code(TETRA).unwrap();
        assert_eq!(graphs.len(), 1);
        assert_eq!(graphs[0].vertex_count(), 4);
        let faces = trace_faces(&graphs[0]);
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|f| f.size() == 3));

        let mut with_header = HEADER.to_vec();
        with_header.extend_from_slice(TETRA);
        with_header.extend_from_slice(TETRA);
        assert_eq!(decode_planar_code(&with_header).unwrap().len(), 2);
    }

    #[test]
    fn empty_stream_has_no_graphs() {
        assert!(decode_planar_code(&[]).unwrap().is_empty());
        assert!(decode_planar_code(HEADER).unwrap().is_empty());
    }

    #[test]
    fn decode_errors_carry_positions() {
        assert_eq!(
            decode_planar_code(&TETRA[..9]),
            Err(DecodeError::TruncatedStream { offset: 9 })
        );
        let mut bad = TETRA.to_vec();
        bad[2] = 7;
        assert_eq!(
            decode_planar_code(&bad),
            Err(DecodeError::IdentifierOutOfRange {
                offset: 2,
                identifier: 7,
                vertex_count: 4
            })
        );
        // second record: vertex 4 lists 1 twice
        let mut repeated = TETRA.to_vec();
        repeated.extend_from_slice(TETRA);
        repeated[TETRA.len() + 15] = 1;
        assert!(matches!(
            decode_planar_code(&repeated),
            Err(DecodeError::ValidationFailed {
                graph_index: 1,
                source: GraphError::NonCubic { vertex: 3, .. }
            })
        ));
        assert_eq!(
            decode_planar_code(&[0, 1, 2]),
            Err(DecodeError::WideFormat { offset: 0 })
        );
    }

    #[test]
    fn dodecahedron_round_trip() {
        let g = fixture_dodecahedron();
        let bytes = encode_planar_code(&g).unwrap();
        assert_eq!(bytes[HEADER.len()], 20);
        let back = decode_planar_code(&bytes).unwrap();
        assert_eq!(back, vec![g]);
    }

    #[test]
    fn oversized_graph_is_rejected() {
        // 150-gonal prism
        let k = 150;
        let rot: Vec<Vec<usize>> = (0..2 * k)
            .map(|v| {
                let (ring, i) = (v / k, v % k);
                let next = ring * k + (i + 1) % k;
                let prev = ring * k + (i + k - 1) % k;
                let across = (1 - ring) * k + i;
                vec![next, across, prev]
            })
            .collect();
        let g = EmbeddedCubicGraph::new(rot).unwrap();
        assert_eq!(
            encode_planar_code(&g),
            Err(EncodeError::TooLarge { vertex_count: 300 })
        );
    }
}
