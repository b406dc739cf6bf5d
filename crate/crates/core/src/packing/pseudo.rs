use super::matching::{maximum_matching, perfect_from_mates};
use super::{Meter, SearchBudget, SearchError, Star};
use crate::graph::EmbeddedCubicGraph;

/// A spanning subgraph whose components are `K2` (pairs) or `K1,3` (stars).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoMatching {
    pub pairs: Vec<(usize, usize)>,
    pub stars: Vec<Star>,
}

/// A perfect pseudo matching with exactly `star_count` stars.
///
/// Star centers are chosen in increasing vertex order; each complete choice
/// is finished with a maximum matching on the uncovered vertices.
pub fn find_pseudo_matching(
    g: &EmbeddedCubicGraph,
    star_count: usize,
    budget: SearchBudget,
) -> Result<PseudoMatching, SearchError> {
    let n = g.vertex_count();
    let rest = n
        .checked_sub(4 * star_count)
        .ok_or_else(|| SearchError::ArithmeticInfeasible(format!("{star_count} stars need more than {n} vertices")))?;
    if rest % 2 != 0 {
        return Err(SearchError::ArithmeticInfeasible(format!(
            "{rest} vertices left for pairs is odd"
        )));
    }
    let mut search = Search {
        g,
        used: vec![false; n],
        centers: Vec::with_capacity(star_count),
        star_count,
        meter: Meter::new(budget),
    };
    match search.run(0) {
        Outcome::Found(m) => Ok(m),
        Outcome::Exhausted => Err(SearchError::Exhausted {
            nodes: search.meter.nodes(),
        }),
        Outcome::Budget => Err(SearchError::BudgetExceeded {
            nodes: search.meter.nodes(),
        }),
    }
}

enum Outcome {
    Found(PseudoMatching),
    Exhausted,
    Budget,
}

struct Search<'a> {
    g: &'a EmbeddedCubicGraph,
    used: Vec<bool>,
    centers: Vec<usize>,
    star_count: usize,
    meter: Meter,
}

impl Search<'_> {
    fn run(&mut self, first: usize) -> Outcome {
        if !self.meter.tick() {
            return Outcome::Budget;
        }
        if self.centers.len() == self.star_count {
            return match self.complete() {
                Some(m) => Outcome::Found(m),
                None => Outcome::Exhausted,
            };
        }
        for c in first..self.g.vertex_count() {
            if self.used[c] || self.g.neighbors(c).any(|w| self.used[w]) {
                continue;
            }
            self.mark(c, true);
            self.centers.push(c);
            let outcome = self.run(c + 1);
            self.centers.pop();
            self.mark(c, false);
            if !matches!(outcome, Outcome::Exhausted) {
                return outcome;
            }
        }
        Outcome::Exhausted
    }

    fn mark(&mut self, c: usize, value: bool) {
        self.used[c] = value;
        for w in self.g.rotation(c) {
            self.used[w] = value;
        }
    }

    fn complete(&self) -> Option<PseudoMatching> {
        let free: Vec<usize> = (0..self.g.vertex_count()).filter(|&v| !self.used[v]).collect();
        let mut index = vec![usize::MAX; self.g.vertex_count()];
        for (i, &v) in free.iter().enumerate() {
            index[v] = i;
        }
        let adj: Vec<Vec<usize>> = free
            .iter()
            .map(|&v| {
                self.g
                    .neighbors(v)
                    .filter(|&w| !self.used[w])
                    .map(|w| index[w])
                    .collect()
            })
            .collect();
        let pairs = perfect_from_mates(&maximum_matching(&adj)).ok()?;
        Some(PseudoMatching {
            pairs: pairs.into_iter().map(|(a, b)| (free[a], free[b])).collect(),
            stars: self
                .centers
                .iter()
                .map(|&c| Star {
                    center: c,
                    leaves: self.g.rotation(c),
                })
                .collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::verify_pseudo_matching;
    use crate::fixtures::{fixture_c80, fixture_dodecahedron};

    #[test]
    fn zero_stars_is_a_perfect_matching() {
        let g = fixture_dodecahedron();
        let m = find_pseudo_matching(&g, 0, SearchBudget::unlimited()).unwrap();
        assert!(m.stars.is_empty());
        assert_eq!(m.pairs.len(), 10);
        verify_pseudo_matching(&g, &m).unwrap();
    }

    #[test]
    fn five_stars_on_c20_do_not_exist() {
        let r = find_pseudo_matching(&fixture_dodecahedron(), 5, SearchBudget::unlimited());
        assert!(matches!(r, Err(SearchError::Exhausted { .. })));
    }

    #[test]
    fn arithmetic_rejects() {
        let g = fixture_dodecahedron();
        assert!(matches!(
            find_pseudo_matching(&g, 6, SearchBudget::unlimited()),
            Err(SearchError::ArithmeticInfeasible(_))
        ));
    }

    #[test]
    fn two_stars_on_c80() {
        let g = fixture_c80();
        let m = find_pseudo_matching(&g, 2, SearchBudget::unlimited()).unwrap();
        assert_eq!((m.stars.len(), m.pairs.len()), (2, 36));
        verify_pseudo_matching(&g, &m).unwrap();
    }
}
