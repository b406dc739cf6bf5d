//! Fullerene graphs with perfect star packings.
//!
//! The crate covers three layers:
//!
//! * [`EmbeddedCubicGraph`] with face tracing and the fullerene axioms,
//! * exact searches for star packings, matchings, {C5, C6}-factors and
//!   Hamiltonian cycles, each paired with an independent certificate check,
//! * the chamfer, star and semi-star constructions with provenance records
//!   from which packings of the output can be read back.
//!
//! Vertices are 0-based in memory and 1-based in every file format.

pub mod certify;
pub mod codec;
pub mod faces;
pub mod fixtures;
pub mod fullerene;
pub mod graph;
pub mod packing;
pub mod transform;

pub use certify::CertificateError;
pub use faces::{face_census, trace_faces, Face, FaceCensus, FaceSet, GenusNonZero};
pub use fullerene::{
    find_small_cut, verify_fullerene, vertex_connectivity_at_least, Axiom, AxiomResult, VerificationReport, Witness,
};
pub use graph::{Dart, EmbeddedCubicGraph, GraphError};
pub use packing::{SearchBudget, SearchError, Star, StarPacking};
pub use transform::TransformError;
