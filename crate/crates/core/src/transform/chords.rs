use std::collections::{HashMap, VecDeque};

use super::{require_balanced_p0, TransformError};
use crate::faces::trace_faces;
use crate::graph::EmbeddedCubicGraph;
use crate::packing::StarPacking;

/// A 2-center hexagon and the chord chosen inside it.
///
/// `star_edges` lists the four star edges on the boundary in boundary order,
/// as `(center, leaf)`. After subdivision the antipodal candidates are
/// `star_edges[0]`–`star_edges[2]` (`choice == false`) and
/// `star_edges[1]`–`star_edges[3]` (`choice == true`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordHexagon {
    pub boundary: Vec<usize>,
    pub star_edges: [(usize, usize); 4],
    pub choice: bool,
}

impl ChordHexagon {
    /// The two star edges whose subdivision vertices the chord joins.
    pub fn chord(&self) -> [(usize, usize); 2] {
        let o = self.choice as usize;
        [self.star_edges[o], self.star_edges[o + 2]]
    }

    pub fn selects(&self, slot: usize) -> bool {
        slot % 2 == self.choice as usize
    }
}

/// One star edge: it lies on two 2-center hexagons, at the given slots, and
/// exactly one of them must select it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordConstraint {
    pub star_edge: (usize, usize),
    pub hexagons: [usize; 2],
    pub slots: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordAssignment {
    pub hexagons: Vec<ChordHexagon>,
    pub constraints: Vec<ChordConstraint>,
}

impl ChordAssignment {
    /// Indices of constraints not satisfied by the current choices.
    pub fn violations(&self) -> Vec<usize> {
        self.constraints
            .iter()
            .enumerate()
            .filter(|(_, c)| {
                let a = self.hexagons[c.hexagons[0]].selects(c.slots[0]);
                let b = self.hexagons[c.hexagons[1]].selects(c.slots[1]);
                a == b
            })
            .map(|(i, _)| i)
            .collect()
    }

    pub fn flipped(&self, hexagon: usize) -> ChordAssignment {
        let mut out = self.clone();
        out.hexagons[hexagon].choice = !out.hexagons[hexagon].choice;
        out
    }

    pub fn chord_count(&self) -> usize {
        self.hexagons.len()
    }
}

/// Chooses one antipodal chord per 2-center hexagon so that every star edge
/// is used by exactly one chord.
pub fn solve_chord_assignment(
    g: &EmbeddedCubicGraph,
    packing: &StarPacking,
) -> Result<ChordAssignment, TransformError> {
    require_balanced_p0(g, packing)?;
    let faces = trace_faces(g);
    let mut is_center = vec![false; g.vertex_count()];
    for s in &packing.stars {
        is_center[s.center] = true;
    }

    let mut hexagons = Vec::new();
    let mut seen: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
    for face in faces.iter() {
        let b = &face.boundary;
        if !b.iter().any(|&v| is_center[v]) {
            continue;
        }
        let mut edges = Vec::with_capacity(4);
        for k in 0..b.len() {
            let (x, y) = (b[k], b[(k + 1) % b.len()]);
            let edge = match (is_center[x], is_center[y]) {
                (true, false) => (x, y),
                (false, true) => (y, x),
                _ => continue,
            };
            seen.entry(edge).or_default().push((hexagons.len(), edges.len()));
            edges.push(edge);
        }
        let star_edges: [(usize, usize); 4] = edges.try_into().map_err(|e: Vec<_>| {
            TransformError::NotBalanced(format!("face with {} star edges", e.len()))
        })?;
        hexagons.push(ChordHexagon {
            boundary: b.clone(),
            star_edges,
            choice: false,
        });
    }

    let mut constraints: Vec<ChordConstraint> = seen
        .into_iter()
        .map(|(star_edge, at)| {
            assert_eq!(at.len(), 2, "a star edge borders two center hexagons");
            ChordConstraint {
                star_edge,
                hexagons: [at[0].0, at[1].0],
                slots: [at[0].1, at[1].1],
            }
        })
        .collect();
    constraints.sort_by_key(|c| c.star_edge);

    // x_a xor x_b = 1 xor (slot_a mod 2) xor (slot_b mod 2)
    let relations: Vec<(usize, usize, bool)> = constraints
        .iter()
        .map(|c| (c.hexagons[0], c.hexagons[1], (1 ^ (c.slots[0] % 2) ^ (c.slots[1] % 2)) == 1))
        .collect();
    match solve_parity(hexagons.len(), &relations) {
        Ok(values) => {
            for (h, v) in hexagons.iter_mut().zip(values) {
                h.choice = v;
            }
            Ok(ChordAssignment {
                hexagons,
                constraints,
            })
        }
        Err(cycle) => Err(TransformError::ChordInfeasible {
            cycle: cycle
                .into_iter()
                .map(|h| *hexagons[h].boundary.iter().min().unwrap())
                .collect(),
        }),
    }
}

/// Solves `x[a] xor x[b] = d` over booleans. On a contradiction, returns the
/// variables along the offending cycle.
pub(crate) fn solve_parity(vars: usize, relations: &[(usize, usize, bool)]) -> Result<Vec<bool>, Vec<usize>> {
    let mut parent: Vec<usize> = (0..vars).collect();
    let mut parity = vec![false; vars];
    let mut tree: Vec<Vec<usize>> = vec![Vec::new(); vars];

    fn find(parent: &mut [usize], parity: &mut [bool], x: usize) -> (usize, bool) {
        if parent[x] == x {
            return (x, false);
        }
        let (root, p) = find(parent, parity, parent[x]);
        parity[x] ^= p;
        parent[x] = root;
        (root, parity[x])
    }

    for &(a, b, d) in relations {
        let (ra, pa) = find(&mut parent, &mut parity, a);
        let (rb, pb) = find(&mut parent, &mut parity, b);
        if ra == rb {
            if pa ^ pb != d {
                let mut cycle = tree_path(&tree, a, b);
                cycle.dedup();
                return Err(cycle);
            }
            continue;
        }
        parent[ra] = rb;
        parity[ra] = pa ^ pb ^ d;
        tree[a].push(b);
        tree[b].push(a);
    }
    Ok((0..vars).map(|x| find(&mut parent, &mut parity, x).1).collect())
}

fn tree_path(tree: &[Vec<usize>], from: usize, to: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; tree.len()];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &y in &tree[x] {
            if prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![to];
    while *path.last().unwrap() != from {
        path.push(prev[*path.last().unwrap()]);
    }
    path.reverse();
    path
}
