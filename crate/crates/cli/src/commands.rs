use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use starpack_core::codec::{
    default_outer_face, encode_planar_code, export_dot, export_svg, layout_tutte, parse_cycle_factor,
    write_cycle_factor, write_star_packing, Annotations, DecodeError, CLASS_CENTER, CLASS_STAR_EDGE,
};
use starpack_core::packing::{
    classify_packing, find_cycle_factor_5_6, find_hamiltonian_cycle, find_perfect_matching, find_pseudo_matching,
    find_star_packings_with, hamiltonian_path, split_cycle_into_paths, CycleFactor, StarSearch, StarSearchStatus,
};
use starpack_core::transform::{
    chamfer, extract_cycle_factor_from_provenance, semi_star_transform, star_transform, Provenance,
    PROVENANCE_HEADER,
};
use starpack_core::{face_census, verify_fullerene, EmbeddedCubicGraph, SearchBudget, SearchError, StarPacking};

use crate::input::{default_budget, load_graph, load_packing, read_text, write_file, write_graph};
use crate::report::{vertices, Outcome, Report};
use crate::{pipeline, Command, ExportFormat, Input, TransformKind};

pub(crate) fn dispatch(command: Command, r: &mut Report, stdout: &mut Option<Vec<u8>>) -> Result<Outcome> {
    match command {
        Command::Verify { input } => verify(&input, r),
        Command::Faces { input } => faces(&input, r),
        Command::PackStars {
            input,
            limit,
            budget,
            p0,
            out,
        } => pack_stars(&input, limit, budget.unwrap_or_else(default_budget), p0, out.as_deref(), r),
        Command::Classify { input, packing } => classify(&input, &packing, r),
        Command::Transform {
            kind,
            input,
            packing,
            budget,
            out,
            provenance,
        } => transform(
            kind,
            &input,
            packing.as_deref(),
            budget.unwrap_or_else(default_budget),
            out.as_deref(),
            provenance.as_deref(),
            r,
        ),
        Command::Factor56 {
            input,
            hint,
            budget,
            out,
        } => factor56(&input, hint.as_deref(), budget.unwrap_or_else(default_budget), out.as_deref(), r),
        Command::Pseudo { input, stars, budget } => pseudo(&input, stars, budget.unwrap_or_else(default_budget), r),
        Command::Hamilton { input, split, budget } => hamilton(&input, split, budget.unwrap_or_else(default_budget), r),
        Command::Export {
            format,
            input,
            packing,
            out,
        } => export(format, &input, packing.as_deref(), out.as_deref(), r, stdout),
        Command::Pipeline { name: _, out_dir, budget } => {
            pipeline::c80(out_dir.as_deref(), budget.unwrap_or_else(default_budget), r)
        }
    }
}

/// Loads the input graph and records where it came from.
fn load(input: &Input, r: &mut Report) -> Result<EmbeddedCubicGraph> {
    r.set("input", &input.input);
    if input.graph != 1 {
        r.set("graph", input.graph);
    }
    let g = r.time("load", || load_graph(&input.input, input.graph)).inspect_err(|e| {
        if let Some(d) = e.chain().find_map(|c| c.downcast_ref::<DecodeError>()) {
            let (reason, offset) = match d {
                DecodeError::TruncatedStream { offset } => ("TruncatedStream", Some(*offset)),
                DecodeError::IdentifierOutOfRange { offset, .. } => ("IdentifierOutOfRange", Some(*offset)),
                DecodeError::WideFormat { offset } => ("WideFormat", Some(*offset)),
                DecodeError::ValidationFailed { .. } => ("ValidationFailed", None),
            };
            r.set("reason", reason);
            if let Some(o) = offset {
                r.set("offset", o);
            }
        }
    })?;
    r.set("vertices", g.vertex_count());
    r.set("fingerprint", g.fingerprint());
    Ok(g)
}

/// Records a failed search and picks the exit outcome.
pub(crate) fn search_failure(prefix: &str, e: &SearchError, r: &mut Report) -> Outcome {
    let (reason, outcome) = match e {
        SearchError::ArithmeticInfeasible(_) => ("ArithmeticInfeasible", Outcome::ProvenNegative),
        SearchError::Exhausted { .. } => ("Exhausted", Outcome::ProvenNegative),
        SearchError::BudgetExceeded { .. } => ("BudgetExceeded", Outcome::BudgetExceeded),
        SearchError::InvalidInput(_) => ("InvalidInput", Outcome::InputError),
    };
    r.set(key(prefix, "reason"), reason);
    r.set(key(prefix, "detail"), e);
    outcome
}

pub(crate) fn key(prefix: &str, name: &str) -> String {
    if prefix.is_empty() {
        name.to_string()
    } else {
        format!("{prefix}.{name}")
    }
}

/// Runs the fullerene axioms; a failing axiom is a proven negative.
pub(crate) fn verify_into(prefix: &str, g: &EmbeddedCubicGraph, r: &mut Report) -> Outcome {
    let v = r.time(&key(prefix, "verify"), || verify_fullerene(g));
    for res in &v.results {
        r.set(key(prefix, res.axiom.name()), if res.passed { "pass" } else { "fail" });
        if let Some(w) = &res.witness {
            r.set(key(prefix, &format!("{}.witness", res.axiom.name())), w);
        }
    }
    r.set(key(prefix, "fullerene"), v.passed());
    if v.passed() {
        Outcome::Ok
    } else {
        Outcome::ProvenNegative
    }
}

fn verify(input: &Input, r: &mut Report) -> Result<Outcome> {
    let g = load(input, r)?;
    Ok(verify_into("", &g, r))
}

pub(crate) fn census_into(prefix: &str, g: &EmbeddedCubicGraph, r: &mut Report) -> Result<()> {
    let c = face_census(g).map_err(|e| anyhow!("{e}"))?;
    r.set(key(prefix, "edges"), c.edge_count);
    r.set(key(prefix, "faces"), c.faces());
    for (size, count) in &c.by_size {
        r.set(key(prefix, &format!("faces.{size}")), count);
    }
    Ok(())
}

fn faces(input: &Input, r: &mut Report) -> Result<Outcome> {
    let g = load(input, r)?;
    match face_census(&g) {
        Ok(_) => {
            census_into("", &g, r)?;
            r.set("euler", 2);
            Ok(Outcome::Ok)
        }
        Err(e) => {
            r.set("euler", e.characteristic);
            r.set("reason", "GenusNonZero");
            Ok(Outcome::ProvenNegative)
        }
    }
}

fn pack_stars(
    input: &Input,
    limit: usize,
    budget: SearchBudget,
    p0: bool,
    out: Option<&Path>,
    r: &mut Report,
) -> Result<Outcome> {
    let g = load(input, r)?;
    let mut options = StarSearch::new(limit, budget);
    options.p0_only = p0;
    r.set("p0_only", p0);
    r.set("limit", limit);
    let res = match r.time("search", || find_star_packings_with(&g, &options)) {
        Ok(res) => res,
        Err(e) => return Ok(search_failure("", &e, r)),
    };
    r.set("nodes", res.nodes);
    r.set("packings", res.packings.len());
    for (i, p) in res.packings.iter().enumerate() {
        r.set(format!("packing.{}.centers", i + 1), vertices(p.centers()));
    }
    if let (Some(path), Some(first)) = (out, res.packings.first()) {
        write_file(path, write_star_packing(g.vertex_count(), first))?;
        r.set("wrote", path.display());
    }
    let outcome = match res.status {
        StarSearchStatus::ModuloReject => {
            r.set("reason", "ModuloReject");
            Outcome::ProvenNegative
        }
        StarSearchStatus::BudgetExceeded if res.packings.is_empty() => {
            r.set("reason", "BudgetExceeded");
            Outcome::BudgetExceeded
        }
        StarSearchStatus::Exhausted if res.packings.is_empty() => {
            r.set("reason", "Exhausted");
            Outcome::ProvenNegative
        }
        StarSearchStatus::Exhausted => {
            r.set("complete", true);
            Outcome::Ok
        }
        _ => {
            r.set("complete", false);
            Outcome::Ok
        }
    };
    r.set("search", res.status.name());
    Ok(outcome)
}

pub(crate) fn classify_into(prefix: &str, g: &EmbeddedCubicGraph, p: &StarPacking, r: &mut Report) -> Result<()> {
    let c = classify_packing(g, p).map_err(|e| anyhow!("{e}"))?;
    r.set(key(prefix, "stars"), p.len());
    r.set(key(prefix, "centers"), vertices(p.centers()));
    r.set(key(prefix, "p0"), c.is_p0);
    r.set(key(prefix, "balanced"), c.is_balanced);
    for (k, count) in &c.hexagon_center_histogram {
        r.set(key(prefix, &format!("hexagons_with_{k}_centers")), count);
    }
    Ok(())
}

fn classify(input: &Input, packing: &Path, r: &mut Report) -> Result<Outcome> {
    let g = load(input, r)?;
    let p = load_packing(packing, &g)?;
    classify_into("", &g, &p, r)?;
    Ok(Outcome::Ok)
}

/// The packing to transform with: from a file, or the first P0 packing found.
fn packing_for(
    g: &EmbeddedCubicGraph,
    path: Option<&Path>,
    budget: SearchBudget,
    r: &mut Report,
) -> Result<std::result::Result<StarPacking, Outcome>> {
    if let Some(path) = path {
        return Ok(Ok(load_packing(path, g)?));
    }
    let mut options = StarSearch::new(1, budget);
    options.p0_only = true;
    let res = match r.time("pack", || find_star_packings_with(g, &options)) {
        Ok(res) => res,
        Err(e) => return Ok(Err(search_failure("pack", &e, r))),
    };
    r.set("pack.nodes", res.nodes);
    match (res.packings.into_iter().next(), res.status) {
        (Some(p), _) => Ok(Ok(p)),
        (None, StarSearchStatus::BudgetExceeded) => {
            r.set("pack.reason", "BudgetExceeded");
            Ok(Err(Outcome::BudgetExceeded))
        }
        (None, StarSearchStatus::ModuloReject) => {
            r.set("pack.reason", "ModuloReject");
            Ok(Err(Outcome::ProvenNegative))
        }
        (None, _) => {
            r.set("pack.reason", "Exhausted");
            Ok(Err(Outcome::ProvenNegative))
        }
    }
}

fn transform(
    kind: TransformKind,
    input: &Input,
    packing: Option<&Path>,
    budget: SearchBudget,
    out: Option<&Path>,
    provenance: Option<&Path>,
    r: &mut Report,
) -> Result<Outcome> {
    let g = load(input, r)?;
    let (output, prov) = match kind {
        TransformKind::Chamfer => {
            r.set("kind", "chamfer");
            let ch = r.time("chamfer", || chamfer(&g))?;
            (ch.graph, None)
        }
        TransformKind::Star | TransformKind::Semistar => {
            let p = match packing_for(&g, packing, budget, r)? {
                Ok(p) => p,
                Err(outcome) => return Ok(outcome),
            };
            r.set("stars", p.len());
            if kind == TransformKind::Star {
                r.set("kind", "star");
                let (f, prov) = r.time("star", || star_transform(&g, &p))?;
                (f, Some(Provenance::Star(prov)))
            } else {
                r.set("kind", "semistar");
                let (f, prov) = r.time("semistar", || semi_star_transform(&g, &p))?;
                r.set("chords", prov.chords.len());
                (f, Some(Provenance::SemiStar(prov)))
            }
        }
    };
    r.set("output.vertices", output.vertex_count());
    r.set("output.fingerprint", output.fingerprint());
    census_into("output", &output, r)?;
    let verdict = verify_into("output", &output, r);
    if let Some(path) = out {
        write_graph(path, &output)?;
        r.set("wrote", path.display());
    }
    match (provenance, prov) {
        (Some(path), Some(prov)) => {
            write_file(path, prov.to_text())?;
            r.set("wrote", path.display());
        }
        (Some(_), None) => bail!("chamfer has no provenance record"),
        _ => {}
    }
    Ok(verdict)
}

/// A hint file is either a cycle factor or a star-transformation provenance.
fn read_hint(path: &Path, g: &EmbeddedCubicGraph) -> Result<CycleFactor> {
    let text = read_text(path)?;
    if text.trim_start().starts_with(PROVENANCE_HEADER) {
        let prov = Provenance::parse(&text).with_context(|| format!("cannot parse {}", path.display()))?;
        let Provenance::Star(prov) = prov else {
            bail!("{} is a semi-star provenance; a star provenance is needed", path.display());
        };
        return Ok(extract_cycle_factor_from_provenance(g, &prov)?);
    }
    let (n, factor) = parse_cycle_factor(&text).with_context(|| format!("cannot parse {}", path.display()))?;
    if n != g.vertex_count() {
        bail!("{} describes {n} vertices but the graph has {}", path.display(), g.vertex_count());
    }
    Ok(factor)
}

fn factor56(
    input: &Input,
    hint: Option<&Path>,
    budget: SearchBudget,
    out: Option<&Path>,
    r: &mut Report,
) -> Result<Outcome> {
    let g = load(input, r)?;
    let hint = hint.map(|p| read_hint(p, &g)).transpose()?;
    r.set("hint", hint.is_some());
    let factor = match r.time("search", || find_cycle_factor_5_6(&g, hint.as_ref(), budget)) {
        Ok(f) => f,
        Err(e) => return Ok(search_failure("", &e, r)),
    };
    r.set("c5", factor.count_of_length(5));
    r.set("c6", factor.count_of_length(6));
    if let Some(path) = out {
        write_file(path, write_cycle_factor(g.vertex_count(), &factor))?;
        r.set("wrote", path.display());
    }
    Ok(Outcome::Ok)
}

fn pseudo(input: &Input, stars: usize, budget: SearchBudget, r: &mut Report) -> Result<Outcome> {
    let g = load(input, r)?;
    r.set("stars", stars);
    match r.time("search", || find_pseudo_matching(&g, stars, budget)) {
        Ok(m) => {
            r.set("pairs", m.pairs.len());
            r.set("centers", vertices(m.stars.iter().map(|s| s.center)));
            Ok(Outcome::Ok)
        }
        Err(e) => Ok(search_failure("", &e, r)),
    }
}

fn hamilton(input: &Input, split: Option<usize>, budget: SearchBudget, r: &mut Report) -> Result<Outcome> {
    let g = load(input, r)?;
    let cycle = match r.time("search", || find_hamiltonian_cycle(&g, budget)) {
        Ok(c) => c,
        Err(e) => return Ok(search_failure("", &e, r)),
    };
    r.set("cycle", vertices(cycle.iter().copied()));
    r.set("path", vertices(hamiltonian_path(&cycle)));
    if let Some(k) = split {
        match split_cycle_into_paths(&cycle, k) {
            Ok(p) => {
                r.set("split.k", k);
                r.set("split.paths", p.paths.len());
            }
            Err(e) => return Ok(search_failure("split", &e, r)),
        }
    }
    Ok(Outcome::Ok)
}

pub(crate) fn matching_into(prefix: &str, g: &EmbeddedCubicGraph, r: &mut Report) -> Outcome {
    match r.time(&key(prefix, "matching"), || find_perfect_matching(g)) {
        Ok(m) => {
            r.set(key(prefix, "matching.edges"), m.len());
            Outcome::Ok
        }
        Err(e) => search_failure(&key(prefix, "matching"), &e, r),
    }
}

fn export(
    format: ExportFormat,
    input: &Input,
    packing: Option<&Path>,
    out: Option<&Path>,
    r: &mut Report,
    stdout: &mut Option<Vec<u8>>,
) -> Result<Outcome> {
    let g = load(input, r)?;
    let mut notes = Annotations::new();
    if let Some(path) = packing {
        let p = load_packing(path, &g)?;
        for s in &p.stars {
            notes.mark_vertex(s.center, CLASS_CENTER);
        }
        for (u, v) in p.edges() {
            notes.mark_edge(u, v, CLASS_STAR_EDGE);
        }
    }
    let bytes = match format {
        ExportFormat::Dot => export_dot(&g, &notes).into_bytes(),
        ExportFormat::Svg => {
            let layout = r.time("layout", || layout_tutte(&g, &default_outer_face(&g)))?;
            export_svg(&g, &layout, &notes)?.into_bytes()
        }
        ExportFormat::Planarcode => encode_planar_code(&g)?,
    };
    r.set("bytes", bytes.len());
    match out {
        Some(path) => {
            write_file(path, &bytes)?;
            r.set("wrote", path.display());
        }
        None => *stdout = Some(bytes),
    }
    Ok(Outcome::Ok)
}
