//! Vertex connectivity and the fullerene axiom checks.

use std::fmt;

use crate::faces::{census_of, trace_faces, Face, FaceCensus};
use crate::graph::EmbeddedCubicGraph;

/// Whether removing any `k - 1` vertices leaves the graph connected.
///
/// Exhaustive over removal sets, so `k` is limited to `1..=3`.
pub fn vertex_connectivity_at_least(g: &EmbeddedCubicGraph, k: usize) -> bool {
    assert!((1..=3).contains(&k), "k must lie in 1..=3, got {k}");
    find_small_cut(g, k).is_none()
}

/// A vertex set of size below `k` whose removal disconnects the graph.
pub fn find_small_cut(g: &EmbeddedCubicGraph, k: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if !g.is_connected_without(&[]) {
        return Some(Vec::new());
    }
    if k >= 2 {
        if let Some(v) = (0..n).find(|&v| !g.is_connected_without(&[v])) {
            return Some(vec![v]);
        }
    }
    if k >= 3 {
        for u in 0..n {
            for v in u + 1..n {
                if !g.is_connected_without(&[u, v]) {
                    return Some(vec![u, v]);
                }
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Vertex(usize),
    Cut(Vec<usize>),
    Face(Face),
    Euler { characteristic: i64 },
    PentagonCount(usize),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn one_based(vs: &[usize]) -> String {
            vs.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
        }
        match self {
            Witness::Vertex(v) => write!(f, "vertex {}", v + 1),
            Witness::Cut(vs) => write!(f, "cut {}", one_based(vs)),
            Witness::Face(face) => write!(f, "face {}", one_based(&face.boundary)),
            Witness::Euler { characteristic } => write!(f, "euler {characteristic}"),
            Witness::PentagonCount(p) => write!(f, "pentagons {p}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    Cubic,
    Connected,
    GenusZero,
    ThreeConnected,
    FacesOnly5And6,
    Exactly12Pentagons,
}

impl Axiom {
    pub const ALL: [Axiom; 6] = [
        Axiom::Cubic,
        Axiom::Connected,
        Axiom::GenusZero,
        Axiom::ThreeConnected,
        Axiom::FacesOnly5And6,
        Axiom::Exactly12Pentagons,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Cubic => "cubic",
            Axiom::Connected => "connected",
            Axiom::GenusZero => "genus_zero",
            Axiom::ThreeConnected => "three_connected",
            Axiom::FacesOnly5And6 => "faces_only_5_6",
            Axiom::Exactly12Pentagons => "exactly_12_pentagons",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub passed: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub results: Vec<AxiomResult>,
    pub census: FaceCensus,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn result(&self, axiom: Axiom) -> &AxiomResult {
        self.results
            .iter()
            .find(|r| r.axiom == axiom)
            .expect("every axiom is reported")
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.results.iter().filter(|r| !r.passed)
    }
}

/// Runs every fullerene axiom. Failures become report entries with witnesses.
pub fn verify_fullerene(g: &EmbeddedCubicGraph) -> VerificationReport {
    let faces = trace_faces(g);
    let (census, euler) = match census_of(g, &faces) {
        Ok(c) => (c, None),
        Err(e) => (e.census, Some(e.characteristic)),
    };

    // a validated graph is cubic and connected by construction, but the report
    // checks anyway so that it stands on its own
    let non_cubic = (0..g.vertex_count()).find(|&v| {
        let r = g.rotation(v);
        r[0] == r[1] || r[1] == r[2] || r[0] == r[2]
    });
    let cut = find_small_cut(g, 3);
    let disconnected = cut.as_ref().is_some_and(|c| c.is_empty());
    let bad_face = faces.iter().find(|f| f.size() != 5 && f.size() != 6);

    let results = vec![
        AxiomResult {
            axiom: Axiom::Cubic,
            passed: non_cubic.is_none(),
            witness: non_cubic.map(Witness::Vertex),
        },
        AxiomResult {
            axiom: Axiom::Connected,
            passed: !disconnected,
            witness: disconnected.then(|| Witness::Cut(Vec::new())),
        },
        AxiomResult {
            axiom: Axiom::GenusZero,
            passed: euler.is_none(),
            witness: euler.map(|characteristic| Witness::Euler { characteristic }),
        },
        AxiomResult {
            axiom: Axiom::ThreeConnected,
            passed: cut.is_none(),
            witness: cut.map(Witness::Cut),
        },
        AxiomResult {
            axiom: Axiom::FacesOnly5And6,
            passed: bad_face.is_none(),
            witness: bad_face.cloned().map(Witness::Face),
        },
        AxiomResult {
            axiom: Axiom::Exactly12Pentagons,
            passed: census.pentagons() == 12,
            witness: (census.pentagons() != 12).then(|| Witness::PentagonCount(census.pentagons())),
        },
    ];
    VerificationReport { results, census }
}
