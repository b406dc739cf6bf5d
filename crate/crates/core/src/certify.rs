//! Certificate checkers for spanning subgraphs.
//!
//! These only consult adjacency and vertex counts. They share no code with
//! the searches or constructions that produce the certificates.

use thiserror::Error;

use crate::graph::EmbeddedCubicGraph;
use crate::packing::{CycleFactor, PathPacking, PseudoMatching, StarPacking};
use crate::transform::SpiderPacking;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CertificateError {
    #[error("vertex {0} is out of range")]
    OutOfRange(usize),
    #[error("{0} and {1} are not adjacent")]
    NotAnEdge(usize, usize),
    #[error("vertex {0} is used twice")]
    Overlap(usize),
    #[error("vertex {0} is not covered")]
    Uncovered(usize),
    #[error("malformed component: {0}")]
    Malformed(String),
}

struct Cover {
    seen: Vec<bool>,
}

impl Cover {
    fn new(n: usize) -> Self {
        Cover { seen: vec![false; n] }
    }

    fn take(&mut self, v: usize) -> Result<(), CertificateError> {
        match self.seen.get_mut(v) {
            None => Err(CertificateError::OutOfRange(v)),
            Some(true) => Err(CertificateError::Overlap(v)),
            Some(s) => {
                *s = true;
                Ok(())
            }
        }
    }

    fn finish(self) -> Result<(), CertificateError> {
        match self.seen.iter().position(|&s| !s) {
            Some(v) => Err(CertificateError::Uncovered(v)),
            None => Ok(()),
        }
    }
}

fn edge(g: &EmbeddedCubicGraph, u: usize, v: usize) -> Result<(), CertificateError> {
    if u >= g.vertex_count() {
        return Err(CertificateError::OutOfRange(u));
    }
    if v >= g.vertex_count() {
        return Err(CertificateError::OutOfRange(v));
    }
    if g.has_edge(u, v) {
        Ok(())
    } else {
        Err(CertificateError::NotAnEdge(u, v))
    }
}

pub fn verify_star_packing(g: &EmbeddedCubicGraph, p: &StarPacking) -> Result<(), CertificateError> {
    let mut cover = Cover::new(g.vertex_count());
    for s in &p.stars {
        cover.take(s.center)?;
        for &leaf in &s.leaves {
            edge(g, s.center, leaf)?;
            cover.take(leaf)?;
        }
    }
    cover.finish()
}

pub fn verify_perfect_matching(
    g: &EmbeddedCubicGraph,
    pairs: &[(usize, usize)],
) -> Result<(), CertificateError> {
    let mut cover = Cover::new(g.vertex_count());
    for &(u, v) in pairs {
        edge(g, u, v)?;
        cover.take(u)?;
        cover.take(v)?;
    }
    cover.finish()
}

pub fn verify_pseudo_matching(
    g: &EmbeddedCubicGraph,
    m: &PseudoMatching,
) -> Result<(), CertificateError> {
    let mut cover = Cover::new(g.vertex_count());
    for &(u, v) in &m.pairs {
        edge(g, u, v)?;
        cover.take(u)?;
        cover.take(v)?;
    }
    for s in &m.stars {
        cover.take(s.center)?;
        for &leaf in &s.leaves {
            edge(g, s.center, leaf)?;
            cover.take(leaf)?;
        }
    }
    cover.finish()
}

fn check_cycle(g: &EmbeddedCubicGraph, cycle: &[usize]) -> Result<(), CertificateError> {
    if cycle.len() < 3 {
        return Err(CertificateError::Malformed(format!("cycle of length {}", cycle.len())));
    }
    for i in 0..cycle.len() {
        edge(g, cycle[i], cycle[(i + 1) % cycle.len()])?;
    }
    Ok(())
}

pub fn verify_cycle_factor(g: &EmbeddedCubicGraph, f: &CycleFactor) -> Result<(), CertificateError> {
    let mut cover = Cover::new(g.vertex_count());
    for cycle in &f.cycles {
        if cycle.len() != 5 && cycle.len() != 6 {
            return Err(CertificateError::Malformed(format!("cycle of length {}", cycle.len())));
        }
        check_cycle(g, cycle)?;
        for &v in cycle {
            cover.take(v)?;
        }
    }
    cover.finish()
}

pub fn verify_hamiltonian_cycle(g: &EmbeddedCubicGraph, cycle: &[usize]) -> Result<(), CertificateError> {
    check_cycle(g, cycle)?;
    let mut cover = Cover::new(g.vertex_count());
    for &v in cycle {
        cover.take(v)?;
    }
    cover.finish()
}

pub fn verify_path_packing(g: &EmbeddedCubicGraph, p: &PathPacking) -> Result<(), CertificateError> {
    let mut cover = Cover::new(g.vertex_count());
    for path in &p.paths {
        if path.len() != p.k {
            return Err(CertificateError::Malformed(format!(
                "path with {} vertices, expected {}",
                path.len(),
                p.k
            )));
        }
        for w in path.windows(2) {
            edge(g, w[0], w[1])?;
        }
        for &v in path {
            cover.take(v)?;
        }
    }
    cover.finish()
}

pub fn verify_spider_packing(g: &EmbeddedCubicGraph, p: &SpiderPacking) -> Result<(), CertificateError> {
    let mut cover = Cover::new(g.vertex_count());
    for spider in &p.spiders {
        cover.take(spider.center)?;
        for &(mid, foot) in &spider.legs {
            edge(g, spider.center, mid)?;
            edge(g, mid, foot)?;
            cover.take(mid)?;
            cover.take(foot)?;
        }
    }
    cover.finish()
}
