use std::path::Path;

use anyhow::Result;
use starpack_core::codec::{write_cycle_factor, write_star_packing};
use starpack_core::fixtures::fixture_dodecahedron;
use starpack_core::packing::{
    find_hamiltonian_cycle, find_pseudo_matching, find_star_packings_with, split_cycle_into_paths, StarSearch,
};
use starpack_core::transform::{
    chamfer, extract_cycle_factor_from_provenance, extract_subdivided_star_packing, semi_star_transform,
    star_transform, Provenance,
};
use starpack_core::{face_census, EmbeddedCubicGraph, SearchBudget};

use crate::commands::{census_into, classify_into, matching_into, search_failure, verify_into};
use crate::input::{write_file, write_graph};
use crate::report::{Outcome, Report};

struct Files<'a> {
    dir: Option<&'a Path>,
    written: Vec<String>,
}

impl Files<'_> {
    fn put(&mut self, name: &str, bytes: impl AsRef<[u8]>) -> Result<()> {
        if let Some(dir) = self.dir {
            write_file(&dir.join(name), bytes)?;
            self.written.push(name.to_string());
        }
        Ok(())
    }

    fn graph(&mut self, name: &str, g: &EmbeddedCubicGraph) -> Result<()> {
        if let Some(dir) = self.dir {
            write_graph(&dir.join(name), g)?;
            self.written.push(name.to_string());
        }
        Ok(())
    }
}

fn graph_into(prefix: &str, g: &EmbeddedCubicGraph, r: &mut Report) -> Result<Outcome> {
    r.set(format!("{prefix}.vertices"), g.vertex_count());
    r.set(format!("{prefix}.fingerprint"), g.fingerprint());
    census_into(prefix, g, r)?;
    Ok(verify_into(prefix, g, r))
}

/// C20, its chamfer C80, a P0 packing, both transformations and every search
/// run on their outputs.
pub(crate) fn c80(out_dir: Option<&Path>, budget: SearchBudget, r: &mut Report) -> Result<Outcome> {
    r.set("pipeline", "c80");
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir)?;
    }
    let mut files = Files {
        dir: out_dir,
        written: Vec::new(),
    };
    let mut outcome = Outcome::Ok;

    let c20 = fixture_dodecahedron();
    outcome = outcome.worst(graph_into("c20", &c20, r)?);
    files.graph("c20.pc", &c20)?;

    let ch = r.time("chamfer", || chamfer(&c20))?;
    let c80 = ch.graph;
    outcome = outcome.worst(graph_into("c80", &c80, r)?);
    files.graph("c80.pc", &c80)?;

    let mut options = StarSearch::new(1, budget);
    options.p0_only = true;
    let packing = match r.time("pack", || find_star_packings_with(&c80, &options)) {
        Ok(res) => {
            r.set("pack.search", res.status.name());
            r.set("pack.nodes", res.nodes);
            match res.packings.into_iter().next() {
                Some(p) => p,
                None => {
                    r.set("pack.reason", res.status.name());
                    return Ok(match res.status {
                        starpack_core::packing::StarSearchStatus::BudgetExceeded => Outcome::BudgetExceeded,
                        _ => Outcome::ProvenNegative,
                    });
                }
            }
        }
        Err(e) => return Ok(search_failure("pack", &e, r)),
    };
    classify_into("pack", &c80, &packing, r)?;
    files.put("c80.packing", write_star_packing(c80.vertex_count(), &packing))?;

    let (f180, star_prov) = r.time("star", || star_transform(&c80, &packing))?;
    outcome = outcome.worst(graph_into("star", &f180, r)?);
    files.graph("star.pc", &f180)?;
    let factor = r.time("extract_factor", || extract_cycle_factor_from_provenance(&f180, &star_prov))?;
    r.set("star.factor.c5", factor.count_of_length(5));
    r.set("star.factor.c6", factor.count_of_length(6));
    files.put("star.cycles", write_cycle_factor(f180.vertex_count(), &factor))?;
    files.put("star.provenance", Provenance::Star(star_prov).to_text())?;

    let (f140, semi_prov) = r.time("semistar", || semi_star_transform(&c80, &packing))?;
    outcome = outcome.worst(graph_into("semistar", &f140, r)?);
    files.graph("semistar.pc", &f140)?;
    r.set("semistar.chords", semi_prov.chords.len());
    let spiders = r.time("extract_spiders", || extract_subdivided_star_packing(&f140, &semi_prov))?;
    r.set("semistar.spiders", spiders.spiders.len());
    let hexagons = face_census(&f140).map(|c| c.hexagons()).unwrap_or(0);
    r.set("semistar.hexagon_ratio", format!("{hexagons}/{}", face_census(&c80).map(|c| c.hexagons()).unwrap_or(0)));
    files.put("semistar.provenance", Provenance::SemiStar(semi_prov).to_text())?;

    for (prefix, g) in [("c20", &c20), ("c80", &c80), ("star", &f180), ("semistar", &f140)] {
        outcome = outcome.worst(matching_into(prefix, g, r));
    }

    match r.time("pseudo", || find_pseudo_matching(&f180, 2, budget)) {
        Ok(m) => {
            r.set("star.pseudo.stars", m.stars.len());
            r.set("star.pseudo.pairs", m.pairs.len());
        }
        Err(e) => outcome = outcome.worst(search_failure("star.pseudo", &e, r)),
    }

    for (prefix, g) in [("c20", &c20), ("c80", &c80), ("star", &f180)] {
        let cycle = match r.time(&format!("{prefix}.hamilton"), || find_hamiltonian_cycle(g, budget)) {
            Ok(c) => c,
            Err(e) => {
                outcome = outcome.worst(search_failure(&format!("{prefix}.hamilton"), &e, r));
                continue;
            }
        };
        r.set(format!("{prefix}.hamilton.length"), cycle.len());
        if prefix == "star" {
            for k in [9, 3] {
                match split_cycle_into_paths(&cycle, k) {
                    Ok(p) => r.set(format!("star.p{k}.paths"), p.paths.len()),
                    Err(e) => outcome = outcome.worst(search_failure(&format!("star.p{k}"), &e, r)),
                }
            }
        }
    }

    r.set("chain", format!("{} -> {} -> {} (star), {} (semistar)", c20.vertex_count(), c80.vertex_count(), f180.vertex_count(), f140.vertex_count()));
    if out_dir.is_some() {
        r.set("files", files.written.join(" "));
    }
    Ok(outcome)
}
