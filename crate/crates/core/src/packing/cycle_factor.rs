use std::collections::VecDeque;

use super::{Meter, SearchBudget, SearchError};
use crate::certify::verify_cycle_factor;
use crate::graph::EmbeddedCubicGraph;

/// Vertex-disjoint 5- and 6-cycles covering every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleFactor {
    pub cycles: Vec<Vec<usize>>,
}

impl CycleFactor {
    pub fn count_of_length(&self, len: usize) -> usize {
        self.cycles.iter().filter(|c| c.len() == len).count()
    }
}

/// Whether `n = 5a + 6b` has a solution in non-negative integers.
pub fn splits_into_5_and_6(n: usize) -> bool {
    (0..=n / 5).any(|a| (n - 5 * a).is_multiple_of(6))
}

/// A {C5, C6}-factor. A supplied hint is verified and returned as is;
/// otherwise an exact search runs over cycles through the lowest uncovered
/// vertex.
pub fn find_cycle_factor_5_6(
    g: &EmbeddedCubicGraph,
    hint: Option<&CycleFactor>,
    budget: SearchBudget,
) -> Result<CycleFactor, SearchError> {
    if let Some(hint) = hint {
        return match verify_cycle_factor(g, hint) {
            Ok(()) => Ok(hint.clone()),
            Err(e) => Err(SearchError::InvalidInput(format!("hint rejected: {e}"))),
        };
    }
    let n = g.vertex_count();
    if !splits_into_5_and_6(n) {
        return Err(SearchError::ArithmeticInfeasible(format!(
            "5a + 6b = {n} has no non-negative solution"
        )));
    }
    let mut search = Search {
        g,
        covered: vec![false; n],
        cycles: Vec::new(),
        meter: Meter::new(budget),
    };
    match search.run() {
        Some(true) => Ok(CycleFactor {
            cycles: search.cycles,
        }),
        Some(false) => Err(SearchError::Exhausted {
            nodes: search.meter.nodes(),
        }),
        None => Err(SearchError::BudgetExceeded {
            nodes: search.meter.nodes(),
        }),
    }
}

struct Search<'a> {
    g: &'a EmbeddedCubicGraph,
    covered: Vec<bool>,
    cycles: Vec<Vec<usize>>,
    meter: Meter,
}

impl Search<'_> {
    /// `Some(found)`, or `None` when the budget ran out.
    fn run(&mut self) -> Option<bool> {
        if !self.meter.tick() {
            return None;
        }
        let Some(v) = self.covered.iter().position(|&c| !c) else {
            return Some(true);
        };
        for cycle in self.cycles_through(v) {
            for &x in &cycle {
                self.covered[x] = true;
            }
            if self.feasible() {
                self.cycles.push(cycle.clone());
                match self.run() {
                    Some(false) => {
                        self.cycles.pop();
                    }
                    other => return other,
                }
            }
            for &x in &cycle {
                self.covered[x] = false;
            }
        }
        Some(false)
    }

    /// Cycles of length 5 or 6 through `v` on uncovered vertices, each listed
    /// once (second vertex lower than the last).
    fn cycles_through(&self, v: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = vec![v];
        let mut on_path = vec![false; self.g.vertex_count()];
        on_path[v] = true;
        self.extend(&mut path, &mut on_path, &mut out);
        out
    }

    fn extend(&self, path: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        for w in self.g.neighbors(last) {
            if w == path[0] && (path.len() == 5 || path.len() == 6) && path[1] < last {
                out.push(path.clone());
            }
            if path.len() < 6 && !on_path[w] && !self.covered[w] {
                on_path[w] = true;
                path.push(w);
                self.extend(path, on_path, out);
                path.pop();
                on_path[w] = false;
            }
        }
    }

    /// Every uncovered vertex keeps two uncovered neighbors, and every
    /// uncovered component has a size of the form 5a + 6b.
    fn feasible(&self) -> bool {
        let n = self.g.vertex_count();
        for v in 0..n {
            if !self.covered[v] && self.g.neighbors(v).filter(|&w| !self.covered[w]).count() < 2 {
                return false;
            }
        }
        let mut seen = self.covered.clone();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut size = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                size += 1;
                for w in self.g.neighbors(x) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            if !splits_into_5_and_6(size) {
                return false;
            }
        }
        true
    }
}
