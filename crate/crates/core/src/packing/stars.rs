use super::{require_fullerene, Meter, SearchBudget, SearchError, Star, StarPacking};
use crate::faces::trace_faces;
use crate::graph::EmbeddedCubicGraph;

/// Options for [`find_star_packings_with`].
#[derive(Clone, Debug)]
pub struct StarSearch {
    pub limit: usize,
    pub budget: SearchBudget,
    /// Only allow centers whose three faces are hexagons (type P0).
    pub p0_only: bool,
    /// Skip the fullerene precondition so the search runs on any cubic graph.
    pub allow_non_fullerene: bool,
}

impl StarSearch {
    pub fn new(limit: usize, budget: SearchBudget) -> Self {
        StarSearch {
            limit,
            budget,
            p0_only: false,
            allow_non_fullerene: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarSearchStatus {
    /// The whole search space was explored; the packings are all there are.
    Exhausted,
    /// Stopped after collecting `limit` packings.
    LimitReached,
    /// Not searched: the vertex count is not a multiple of 8 (of 4 when
    /// the fullerene precondition is waived).
    ModuloReject,
    /// Stopped early; absence of (further) packings is not proven.
    BudgetExceeded,
}

impl StarSearchStatus {
    pub fn name(self) -> &'static str {
        match self {
            StarSearchStatus::Exhausted => "exhausted",
            StarSearchStatus::LimitReached => "limit-reached",
            StarSearchStatus::ModuloReject => "modulo-reject",
            StarSearchStatus::BudgetExceeded => "budget-exceeded",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarSearchResult {
    pub packings: Vec<StarPacking>,
    pub status: StarSearchStatus,
    pub nodes: u64,
}

/// Up to `limit` perfect star packings of a fullerene.
pub fn find_star_packings(
    g: &EmbeddedCubicGraph,
    limit: usize,
    budget: SearchBudget,
) -> Result<StarSearchResult, SearchError> {
    find_star_packings_with(g, &StarSearch::new(limit, budget))
}

pub fn find_star_packings_with(
    g: &EmbeddedCubicGraph,
    options: &StarSearch,
) -> Result<StarSearchResult, SearchError> {
    let n = g.vertex_count();
    // stars have 4 vertices; for fullerenes the count is even a multiple of 8
    let modulus = if options.allow_non_fullerene { 4 } else { 8 };
    if !n.is_multiple_of(modulus) {
        return Ok(StarSearchResult {
            packings: Vec::new(),
            status: StarSearchStatus::ModuloReject,
            nodes: 0,
        });
    }
    if !options.allow_non_fullerene {
        require_fullerene(g)?;
    }
    let allowed = if options.p0_only {
        let faces = trace_faces(g);
        (0..n)
            .map(|v| faces.faces_at(v).iter().all(|&f| faces.faces[f].size() == 6))
            .collect()
    } else {
        vec![true; n]
    };
    let mut search = Search {
        g,
        allowed,
        covered: vec![false; n],
        stack: Vec::new(),
        found: Vec::new(),
        limit: options.limit,
        meter: Meter::new(options.budget),
    };
    let status = if options.limit == 0 {
        StarSearchStatus::LimitReached
    } else {
        match search.run() {
            Flow::Continue => StarSearchStatus::Exhausted,
            Flow::Limit => StarSearchStatus::LimitReached,
            Flow::Budget => StarSearchStatus::BudgetExceeded,
        }
    };
    Ok(StarSearchResult {
        packings: search.found,
        status,
        nodes: search.meter.nodes(),
    })
}

enum Flow {
    Continue,
    Limit,
    Budget,
}

struct Search<'a> {
    g: &'a EmbeddedCubicGraph,
    allowed: Vec<bool>,
    covered: Vec<bool>,
    stack: Vec<usize>,
    found: Vec<StarPacking>,
    limit: usize,
    meter: Meter,
}

impl Search<'_> {
    fn can_center(&self, c: usize) -> bool {
        self.allowed[c] && !self.covered[c] && self.g.neighbors(c).all(|w| !self.covered[w])
    }

    fn coverable(&self, v: usize) -> bool {
        self.can_center(v) || self.g.neighbors(v).any(|c| self.can_center(c))
    }

    fn set(&mut self, c: usize, value: bool) {
        self.covered[c] = value;
        for w in self.g.rotation(c) {
            self.covered[w] = value;
        }
    }

    /// Every uncovered vertex within distance 2 of the star at `c` can still
    /// be covered by some star.
    fn still_feasible(&self, c: usize) -> bool {
        self.g.neighbors(c).all(|leaf| {
            self.g.neighbors(leaf).all(|x| {
                (self.covered[x] || self.coverable(x))
                    && self.g.neighbors(x).all(|y| self.covered[y] || self.coverable(y))
            })
        })
    }

    fn run(&mut self) -> Flow {
        if !self.meter.tick() {
            return Flow::Budget;
        }
        let Some(v) = self.covered.iter().position(|&c| !c) else {
            let stars = self
                .stack
                .iter()
                .map(|&c| Star {
                    center: c,
                    leaves: self.g.rotation(c),
                })
                .collect();
            self.found.push(StarPacking::new(stars));
            return if self.found.len() >= self.limit {
                Flow::Limit
            } else {
                Flow::Continue
            };
        };
        let rot = self.g.rotation(v);
        for c in [v, rot[0], rot[1], rot[2]] {
            if !self.can_center(c) {
                continue;
            }
            self.set(c, true);
            self.stack.push(c);
            if self.still_feasible(c) {
                match self.run() {
                    Flow::Continue => {}
                    stop => {
                        self.stack.pop();
                        self.set(c, false);
                        return stop;
                    }
                }
            }
            self.stack.pop();
            self.set(c, false);
        }
        Flow::Continue
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::verify_star_packing;
    use crate::fixtures::{fixture_c80, fixture_cube, fixture_dodecahedron};

    #[test]
    fn c20_is_rejected_by_modulus() {
        let r = find_star_packings(&fixture_dodecahedron(), 1, SearchBudget::unlimited()).unwrap();
        assert_eq!(r.status, StarSearchStatus::ModuloReject);
        assert!(r.packings.is_empty());
        assert_eq!(r.nodes, 0);
    }

    #[test]
    fn c80_has_a_packing() {
        let g = fixture_c80();
        let r = find_star_packings(&g, 1, SearchBudget::unlimited()).unwrap();
        assert_eq!(r.status, StarSearchStatus::LimitReached);
        assert_eq!(r.packings[0].len(), 20);
        verify_star_packing(&g, &r.packings[0]).unwrap();
    }

    #[test]
    fn non_fullerene_needs_opt_in() {
        let cube = fixture_cube();
        assert!(matches!(
            find_star_packings(&cube, 1, SearchBudget::unlimited()),
            Err(SearchError::InvalidInput(_))
        ));
        let mut opts = StarSearch::new(10, SearchBudget::unlimited());
        opts.allow_non_fullerene = true;
        let r = find_star_packings_with(&cube, &opts).unwrap();
        // antipodal pairs of the cube: 0/6, 1/7, 2/4, 3/5
        assert_eq!(r.status, StarSearchStatus::Exhausted);
        assert_eq!(r.packings.len(), 4);
        for p in &r.packings {
            verify_star_packing(&cube, p).unwrap();
        }
    }

    #[test]
    fn tiny_budget_is_not_a_proof() {
        let r = find_star_packings(&fixture_c80(), 1, SearchBudget::nodes(3)).unwrap();
        assert_eq!(r.status, StarSearchStatus::BudgetExceeded);
        assert!(r.packings.is_empty());
    }
}
