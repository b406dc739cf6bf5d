//! Exact searches for the spanning subgraphs used with fullerenes: perfect
//! star packings, perfect and pseudo matchings, {C5, C6}-factors,
//! Hamiltonian cycles and path packings.
//!
//! Every search branches in a fixed order (lowest-numbered uncovered vertex,
//! neighbors in rotation order), so results are reproducible. A search that
//! runs out of budget says so; it never reports that budget exhaustion as a
//! proof of nonexistence.

mod classify;
mod cycle_factor;
mod hamilton;
mod matching;
mod paths;
mod pseudo;
mod stars;

use std::time::{Duration, Instant};

use thiserror::Error;

pub use classify::{classify_packing, PackingClassification};
pub use cycle_factor::{find_cycle_factor_5_6, splits_into_5_and_6, CycleFactor};
pub use hamilton::find_hamiltonian_cycle;
pub use matching::{find_perfect_matching, maximum_matching};
pub use paths::{hamiltonian_path, split_cycle_into_paths, PathPacking};
pub use pseudo::{find_pseudo_matching, PseudoMatching};
pub use stars::{find_star_packings, find_star_packings_with, StarSearch, StarSearchResult, StarSearchStatus};

/// A `K1,3`: a center and its three leaves.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Star {
    pub center: usize,
    pub leaves: [usize; 3],
}

impl Star {
    pub fn vertices(&self) -> [usize; 4] {
        [self.center, self.leaves[0], self.leaves[1], self.leaves[2]]
    }
}

/// Stars covering every vertex exactly once, kept sorted by center.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StarPacking {
    pub stars: Vec<Star>,
}

impl StarPacking {
    pub fn new(mut stars: Vec<Star>) -> Self {
        stars.sort();
        StarPacking { stars }
    }

    pub fn centers(&self) -> Vec<usize> {
        self.stars.iter().map(|s| s.center).collect()
    }

    pub fn len(&self) -> usize {
        self.stars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stars.is_empty()
    }

    /// Undirected star edges `(center, leaf)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.stars
            .iter()
            .flat_map(|s| s.leaves.iter().map(move |&l| (s.center, l)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl SearchBudget {
    pub fn new(node_limit: u64, time_limit: Duration) -> Self {
        assert!(node_limit > 0 && !time_limit.is_zero(), "budget must be positive");
        SearchBudget {
            node_limit,
            time_limit,
        }
    }

    /// Effectively unbounded: 2^63 nodes, one year.
    pub fn unlimited() -> Self {
        SearchBudget::new(1 << 63, Duration::from_secs(365 * 24 * 3600))
    }

    pub fn nodes(node_limit: u64) -> Self {
        SearchBudget::new(node_limit, Self::unlimited().time_limit)
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::unlimited()
    }
}

/// Counts search nodes against a budget.
#[derive(Debug)]
pub(crate) struct Meter {
    nodes: u64,
    budget: SearchBudget,
    started: Instant,
}

impl Meter {
    pub(crate) fn new(budget: SearchBudget) -> Self {
        Meter {
            nodes: 0,
            budget,
            started: Instant::now(),
        }
    }

    /// Registers one node; `false` once the budget is spent.
    pub(crate) fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget.node_limit {
            return false;
        }
        !self.nodes.is_multiple_of(1024) || self.started.elapsed() <= self.budget.time_limit
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes
    }
}

/// Why a search produced no witness, or could not run.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("arithmetically infeasible: {0}")]
    ArithmeticInfeasible(String),
    #[error("search space exhausted after {nodes} nodes: no such structure exists")]
    Exhausted { nodes: u64 },
    #[error("budget exceeded after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl SearchError {
    /// Proven-absent outcomes, as opposed to giving up or bad input.
    pub fn is_proof_of_absence(&self) -> bool {
        matches!(
            self,
            SearchError::ArithmeticInfeasible(_) | SearchError::Exhausted { .. }
        )
    }
}

pub(crate) fn require_fullerene(g: &crate::EmbeddedCubicGraph) -> Result<(), SearchError> {
    let report = crate::verify_fullerene(g);
    let outcome = match report.failures().next() {
        None => Ok(()),
        Some(r) => Err(SearchError::InvalidInput(format!(
            "not a fullerene: {} fails",
            r.axiom.name()
        ))),
    };
    outcome
}
