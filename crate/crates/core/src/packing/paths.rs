use super::SearchError;

/// Vertex-disjoint paths of exactly `k` vertices covering every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathPacking {
    pub k: usize,
    pub paths: Vec<Vec<usize>>,
}

/// Cuts a cycle into consecutive blocks of `k` vertices, starting at its
/// lowest-numbered vertex and keeping its direction.
pub fn split_cycle_into_paths(cycle: &[usize], k: usize) -> Result<PathPacking, SearchError> {
    if k == 0 || cycle.is_empty() || !cycle.len().is_multiple_of(k) {
        return Err(SearchError::ArithmeticInfeasible(format!(
            "{k} does not divide the cycle length {}",
            cycle.len()
        )));
    }
    let start = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap();
    let rotated: Vec<usize> = cycle[start..].iter().chain(&cycle[..start]).copied().collect();
    Ok(PathPacking {
        k,
        paths: rotated.chunks(k).map(<[usize]>::to_vec).collect(),
    })
}

/// The Hamiltonian path left after deleting one cycle edge: the edge whose
/// endpoints, compared as (larger, smaller), are highest.
pub fn hamiltonian_path(cycle: &[usize]) -> Vec<usize> {
    let len = cycle.len();
    if len < 2 {
        return cycle.to_vec();
    }
    let key = |i: usize| {
        let (a, b) = (cycle[i], cycle[(i + 1) % len]);
        (a.max(b), a.min(b))
    };
    let cut = (0..len).max_by_key(|&i| key(i)).unwrap();
    // the path runs from the far end of the removed edge around to its near end
    (1..=len).map(|j| cycle[(cut + j) % len]).collect()
}
