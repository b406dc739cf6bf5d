use super::provenance::{SemiStarProvenance, StarTransformProvenance};
use super::TransformError;
use crate::certify::{verify_cycle_factor, verify_spider_packing};
use crate::graph::EmbeddedCubicGraph;
use crate::packing::CycleFactor;

/// A subdivided star `S(K1,3)`: a center and three legs `center - mid - foot`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spider {
    pub center: usize,
    pub legs: [(usize, usize); 3],
}

impl Spider {
    pub fn vertices(&self) -> [usize; 7] {
        let [(a, b), (c, d), (e, f)] = self.legs;
        [self.center, a, b, c, d, e, f]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpiderPacking {
    pub spiders: Vec<Spider>,
}

/// The face cover read off a star transformation: the surviving pentagons,
/// the new star hexagons and the surviving center-free hexagons.
pub fn extract_cycle_factor_from_provenance(
    f: &EmbeddedCubicGraph,
    prov: &StarTransformProvenance,
) -> Result<CycleFactor, TransformError> {
    if f.fingerprint() != prov.output_fingerprint {
        return Err(TransformError::ProvenanceMismatch);
    }
    let cycles: Vec<Vec<usize>> = prov
        .pentagons
        .iter()
        .cloned()
        .chain(prov.stars.iter().map(|s| s.ring.to_vec()))
        .chain(prov.zero_center_hexagons.iter().cloned())
        .collect();

    let mut hits = vec![0usize; f.vertex_count()];
    for &v in cycles.iter().flatten() {
        hits[v] += 1;
    }
    let overlap = hits.iter().filter(|&&h| h > 1).count();
    let missed = hits.iter().filter(|&&h| h == 0).count();
    if overlap > 0 || missed > 0 {
        return Err(TransformError::NotDirect(format!(
            "{overlap} vertices covered twice, {missed} uncovered"
        )));
    }
    let factor = CycleFactor { cycles };
    verify_cycle_factor(f, &factor).map_err(|e| TransformError::NotDirect(e.to_string()))?;
    Ok(factor)
}

/// One spider per input star: the center, its subdivision vertices and its
/// leaves.
pub fn extract_subdivided_star_packing(
    f: &EmbeddedCubicGraph,
    prov: &SemiStarProvenance,
) -> Result<SpiderPacking, TransformError> {
    if f.fingerprint() != prov.output_fingerprint {
        return Err(TransformError::ProvenanceMismatch);
    }
    let spiders: Vec<Spider> = prov
        .packing
        .stars
        .iter()
        .map(|st| {
            let legs = st.leaves.map(|leaf| {
                let mid = prov
                    .subdivisions
                    .iter()
                    .find(|&&(c, l, _)| c == st.center && l == leaf)
                    .map(|&(_, _, s)| s)
                    .ok_or(TransformError::ProvenanceMismatch)?;
                Ok((mid, leaf))
            });
            let [a, b, c] = legs;
            Ok(Spider {
                center: st.center,
                legs: [a?, b?, c?],
            })
        })
        .collect::<Result<_, TransformError>>()?;
    let packing = SpiderPacking { spiders };
    verify_spider_packing(f, &packing)
        .map_err(|e| TransformError::PostconditionFailed(format!("spider packing rejected: {e}")))?;
    Ok(packing)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture_dodecahedron;
    use crate::transform::{chamfer, semi_star_transform, star_transform};

    #[test]
    fn c80_star_image_factor() {
        let ch = chamfer(&fixture_dodecahedron()).unwrap();
        let (f, prov) = star_transform(&ch.graph, &ch.original_vertex_packing()).unwrap();
        let factor = extract_cycle_factor_from_provenance(&f, &prov).unwrap();
        assert_eq!(factor.cycles.len(), 32);
        assert_eq!(factor.count_of_length(5), 12);
        assert_eq!(factor.count_of_length(6), 20);
    }

    #[test]
    fn c80_semi_star_spiders() {
        let ch = chamfer(&fixture_dodecahedron()).unwrap();
        let (f, prov) = semi_star_transform(&ch.graph, &ch.original_vertex_packing()).unwrap();
        let p = extract_subdivided_star_packing(&f, &prov).unwrap();
        assert_eq!(p.spiders.len(), 20);
    }

    #[test]
    fn provenance_of_another_graph() {
        let ch = chamfer(&fixture_dodecahedron()).unwrap();
        let (_, prov) = star_transform(&ch.graph, &ch.original_vertex_packing()).unwrap();
        assert_eq!(
            extract_cycle_factor_from_provenance(&ch.graph, &prov),
            Err(TransformError::ProvenanceMismatch)
        );
    }
}
