//! Maximum cardinality matching (Edmonds' blossom algorithm, O(V^3)).

use std::collections::VecDeque;

use super::SearchError;
use crate::graph::EmbeddedCubicGraph;

const NONE: usize = usize::MAX;

/// Maximum matching of the graph given by adjacency lists. Returns the mate
/// of every vertex.
pub fn maximum_matching(adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    let mut blossom = Blossom::new(adj);
    blossom.greedy();
    for root in 0..adj.len() {
        if blossom.mate[root] == NONE {
            if let Some(end) = blossom.find_path(root) {
                blossom.augment(end);
            }
        }
    }
    blossom
        .mate
        .iter()
        .map(|&m| (m != NONE).then_some(m))
        .collect()
}

/// A perfect matching as sorted edges `(u, v)` with `u < v`.
///
/// Every bridgeless cubic graph has one; an `Exhausted` error means the
/// maximum matching is not perfect.
pub fn find_perfect_matching(g: &EmbeddedCubicGraph) -> Result<Vec<(usize, usize)>, SearchError> {
    let adj: Vec<Vec<usize>> = (0..g.vertex_count())
        .map(|v| g.rotation(v).to_vec())
        .collect();
    perfect_from_mates(&maximum_matching(&adj))
}

pub(crate) fn perfect_from_mates(mates: &[Option<usize>]) -> Result<Vec<(usize, usize)>, SearchError> {
    let mut pairs = Vec::with_capacity(mates.len() / 2);
    for (v, m) in mates.iter().enumerate() {
        match m {
            None => return Err(SearchError::Exhausted { nodes: 0 }),
            Some(w) if v < *w => pairs.push((v, *w)),
            Some(_) => {}
        }
    }
    Ok(pairs)
}

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn greedy(&mut self) {
        for v in 0..self.adj.len() {
            if self.mate[v] != NONE {
                continue;
            }
            if let Some(&w) = self.adj[v].iter().find(|&&w| self.mate[w] == NONE && w != v) {
                self.mate[v] = w;
                self.mate[w] = v;
            }
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::verify_perfect_matching;
    use crate::fixtures::{fixture_c80, fixture_dodecahedron};
    use proptest::prelude::*;

    fn brute_force_size(n: usize, edges: &[(usize, usize)]) -> usize {
        fn go(i: usize, used: &mut Vec<bool>, edges: &[(usize, usize)]) -> usize {
            if i == edges.len() {
                return 0;
            }
            let skip = go(i + 1, used, edges);
            let (u, v) = edges[i];
            if used[u] || used[v] {
                return skip;
            }
            used[u] = true;
            used[v] = true;
            let take = 1 + go(i + 1, used, edges);
            used[u] = false;
            used[v] = false;
            skip.max(take)
        }
        go(0, &mut vec![false; n], edges)
    }

    #[test]
    fn fixtures_have_perfect_matchings() {
        for g in [fixture_dodecahedron(), fixture_c80()] {
            let m = find_perfect_matching(&g).unwrap();
            assert_eq!(m.len(), g.vertex_count() / 2);
            verify_perfect_matching(&g, &m).unwrap();
            assert_eq!(m, find_perfect_matching(&g).unwrap());
        }
    }

    #[test]
    fn odd_cycle_blossom() {
        // a 5-cycle with a pendant: maximum matching 3 needs a blossom step
        let adj = vec![vec![1, 4, 5], vec![0, 2], vec![1, 3], vec![2, 4], vec![3, 0], vec![0]];
        let mates = maximum_matching(&adj);
        assert!(mates.iter().all(Option::is_some));
    }

    proptest! {
        #[test]
        fn matches_brute_force(n in 2usize..11, raw in proptest::collection::vec((0usize..11, 0usize..11), 0..18)) {
            let mut edges: Vec<(usize, usize)> = raw
                .into_iter()
                .filter(|&(a, b)| a < n && b < n && a != b)
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect();
            edges.sort_unstable();
            edges.dedup();
            let mut adj = vec![Vec::new(); n];
            for &(a, b) in &edges {
                adj[a].push(b);
                adj[b].push(a);
            }
            let mates = maximum_matching(&adj);
            for (v, m) in mates.iter().enumerate() {
                if let Some(w) = *m {
                    prop_assert_eq!(mates[w], Some(v));
                    prop_assert!(adj[v].contains(&w));
                }
            }
            let size = mates.iter().filter(|m| m.is_some()).count() / 2;
            prop_assert_eq!(size, brute_force_size(n, &edges));
        }
    }
}
