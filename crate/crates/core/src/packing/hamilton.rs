//! Hamiltonian cycles by backtracking over edge decisions.
//!
//! Each edge is undecided, in the cycle, or out of it. Propagation enforces
//! that every vertex has exactly two cycle edges, refuses to close a cycle
//! shorter than the graph, and prunes when the non-excluded edges no longer
//! connect the graph.

use std::collections::VecDeque;

use super::{Meter, SearchBudget, SearchError};
use crate::graph::EmbeddedCubicGraph;

/// A Hamiltonian cycle as a vertex sequence starting at vertex 0.
pub fn find_hamiltonian_cycle(
    g: &EmbeddedCubicGraph,
    budget: SearchBudget,
) -> Result<Vec<usize>, SearchError> {
    let mut s = State::new(g, budget);
    match s.solve() {
        Some(true) => Ok(s.cycle()),
        Some(false) => Err(SearchError::Exhausted {
            nodes: s.meter.nodes(),
        }),
        None => Err(SearchError::BudgetExceeded {
            nodes: s.meter.nodes(),
        }),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mark {
    Open,
    In,
    Out,
}

enum Undo {
    Edge(usize),
    End(usize, usize, usize),
}

struct State<'a> {
    g: &'a EmbeddedCubicGraph,
    ends: Vec<(usize, usize)>,
    incident: Vec<[usize; 3]>,
    mark: Vec<Mark>,
    deg_in: Vec<u8>,
    deg_out: Vec<u8>,
    /// For a fragment endpoint: the other endpoint and the fragment's vertex count.
    end: Vec<usize>,
    size: Vec<usize>,
    in_count: usize,
    trail: Vec<Undo>,
    queue: VecDeque<usize>,
    meter: Meter,
}

impl<'a> State<'a> {
    fn new(g: &'a EmbeddedCubicGraph, budget: SearchBudget) -> Self {
        let n = g.vertex_count();
        let ends = g.edges();
        let mut incident = vec![[usize::MAX; 3]; n];
        for (e, &(u, v)) in ends.iter().enumerate() {
            incident[u][g.slot(u, v).unwrap()] = e;
            incident[v][g.slot(v, u).unwrap()] = e;
        }
        State {
            g,
            mark: vec![Mark::Open; ends.len()],
            ends,
            incident,
            deg_in: vec![0; n],
            deg_out: vec![0; n],
            end: (0..n).collect(),
            size: vec![1; n],
            in_count: 0,
            trail: Vec::new(),
            queue: VecDeque::new(),
            meter: Meter::new(budget),
        }
    }

    fn other(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.ends[e];
        if a == v {
            b
        } else {
            a
        }
    }

    fn set_end(&mut self, v: usize, end: usize, size: usize) {
        self.trail.push(Undo::End(v, self.end[v], self.size[v]));
        self.end[v] = end;
        self.size[v] = size;
    }

    fn include(&mut self, e: usize) -> bool {
        match self.mark[e] {
            Mark::In => return true,
            Mark::Out => return false,
            Mark::Open => {}
        }
        let n = self.g.vertex_count();
        let (u, v) = self.ends[e];
        self.mark[e] = Mark::In;
        self.trail.push(Undo::Edge(e));
        self.deg_in[u] += 1;
        self.deg_in[v] += 1;
        self.in_count += 1;
        if self.deg_in[u] > 2 || self.deg_in[v] > 2 {
            return false;
        }
        let (a, b) = (self.end[u], self.end[v]);
        if a == v {
            // closes a cycle: only acceptable as the final edge
            return self.in_count == n;
        }
        let merged = self.size[u] + self.size[v];
        self.set_end(a, b, merged);
        self.set_end(b, a, merged);
        self.queue.push_back(u);
        self.queue.push_back(v);
        if merged < n {
            if let Some(closing) = self.edge_between(a, b) {
                if self.mark[closing] == Mark::Open && !self.exclude(closing) {
                    return false;
                }
            }
        }
        true
    }

    fn exclude(&mut self, e: usize) -> bool {
        match self.mark[e] {
            Mark::Out => return true,
            Mark::In => return false,
            Mark::Open => {}
        }
        let (u, v) = self.ends[e];
        self.mark[e] = Mark::Out;
        self.trail.push(Undo::Edge(e));
        self.deg_out[u] += 1;
        self.deg_out[v] += 1;
        self.queue.push_back(u);
        self.queue.push_back(v);
        self.deg_out[u] <= 1 && self.deg_out[v] <= 1
    }

    fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        self.g.slot(a, b).map(|i| self.incident[a][i])
    }

    fn propagate(&mut self) -> bool {
        while let Some(v) = self.queue.pop_front() {
            let open: Vec<usize> = self.incident[v]
                .iter()
                .copied()
                .filter(|&e| self.mark[e] == Mark::Open)
                .collect();
            if open.is_empty() {
                continue;
            }
            let ok = if self.deg_in[v] == 2 {
                open.iter().all(|&e| self.exclude(e))
            } else if self.deg_out[v] == 1 {
                open.iter().all(|&e| self.include(e))
            } else {
                true
            };
            if !ok {
                self.queue.clear();
                return false;
            }
        }
        true
    }

    fn undo_to(&mut self, len: usize) {
        while self.trail.len() > len {
            match self.trail.pop().unwrap() {
                Undo::Edge(e) => {
                    let (u, v) = self.ends[e];
                    match self.mark[e] {
                        Mark::In => {
                            self.deg_in[u] -= 1;
                            self.deg_in[v] -= 1;
                            self.in_count -= 1;
                        }
                        Mark::Out => {
                            self.deg_out[u] -= 1;
                            self.deg_out[v] -= 1;
                        }
                        Mark::Open => unreachable!(),
                    }
                    self.mark[e] = Mark::Open;
                }
                Undo::End(v, end, size) => {
                    self.end[v] = end;
                    self.size[v] = size;
                }
            }
        }
    }

    fn spans(&self) -> bool {
        let n = self.g.vertex_count();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &e in &self.incident[v] {
                if self.mark[e] == Mark::Out {
                    continue;
                }
                let w = self.other(e, v);
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    fn branch_edge(&self) -> Option<usize> {
        let n = self.g.vertex_count();
        let pick = |v: usize| {
            self.incident[v]
                .iter()
                .copied()
                .find(|&e| self.mark[e] == Mark::Open)
        };
        (0..n)
            .filter(|&v| self.deg_in[v] == 1)
            .find_map(pick)
            .or_else(|| (0..n).find_map(pick))
    }

    fn solve(&mut self) -> Option<bool> {
        if !self.meter.tick() {
            return None;
        }
        if self.in_count == self.g.vertex_count() {
            return Some(true);
        }
        if !self.spans() {
            return Some(false);
        }
        let Some(e) = self.branch_edge() else {
            return Some(false);
        };
        for take in [true, false] {
            let mark = self.trail.len();
            let ok = if take { self.include(e) } else { self.exclude(e) };
            if ok && self.propagate() {
                match self.solve() {
                    Some(false) => {}
                    other => return other,
                }
            }
            self.queue.clear();
            self.undo_to(mark);
        }
        Some(false)
    }

    fn cycle(&self) -> Vec<usize> {
        let n = self.g.vertex_count();
        let mut cycle = Vec::with_capacity(n);
        let (mut prev, mut cur) = (usize::MAX, 0);
        for _ in 0..n {
            cycle.push(cur);
            let next = self.incident[cur]
                .iter()
                .filter(|&&e| self.mark[e] == Mark::In)
                .map(|&e| self.other(e, cur))
                .find(|&w| w != prev)
                .expect("cycle edges form a 2-regular spanning subgraph");
            prev = cur;
            cur = next;
        }
        cycle
    }
}
