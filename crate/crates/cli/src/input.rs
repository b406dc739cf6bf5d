use std::path::Path;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use starpack_core::codec::{decode_planar_code, encode_planar_code, parse_star_packing};
use starpack_core::fixtures::fixture_by_name;
use starpack_core::packing::StarPacking;
use starpack_core::{EmbeddedCubicGraph, SearchBudget};

pub const FIXTURE_PREFIX: &str = "fixture:";

/// A planar_code file, or `fixture:<name>`; `index` is 1-based.
pub fn load_graph(spec: &str, index: usize) -> Result<EmbeddedCubicGraph> {
    if let Some(name) = spec.strip_prefix(FIXTURE_PREFIX) {
        return fixture_by_name(name).ok_or_else(|| anyhow!("unknown fixture `{name}` (try c20, c80, cube, tetrahedron)"));
    }
    let bytes = std::fs::read(spec).with_context(|| format!("cannot read {spec}"))?;
    let mut graphs = decode_planar_code(&bytes).with_context(|| format!("cannot decode {spec}"))?;
    let count = graphs.len();
    if index == 0 || index > count {
        bail!("{spec} holds {count} graph(s); graph {index} requested");
    }
    Ok(graphs.swap_remove(index - 1))
}

pub fn load_packing(path: &Path, g: &EmbeddedCubicGraph) -> Result<StarPacking> {
    let text = read_text(path)?;
    let (n, packing) = parse_star_packing(&text).with_context(|| format!("cannot parse {}", path.display()))?;
    if n != g.vertex_count() {
        bail!(
            "{} describes {n} vertices but the graph has {}",
            path.display(),
            g.vertex_count()
        );
    }
    Ok(packing)
}

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

pub fn write_file(path: &Path, bytes: impl AsRef<[u8]>) -> Result<()> {
    std::fs::write(path, bytes).with_context(|| format!("cannot write {}", path.display()))
}

pub fn write_graph(path: &Path, g: &EmbeddedCubicGraph) -> Result<()> {
    let bytes = encode_planar_code(g).with_context(|| format!("cannot encode {}", path.display()))?;
    write_file(path, bytes)
}

/// `<seconds>,<nodes>`.
pub fn parse_budget(s: &str) -> std::result::Result<SearchBudget, String> {
    let (secs, nodes) = s
        .split_once(',')
        .ok_or_else(|| format!("expected <seconds>,<nodes>, got `{s}`"))?;
    let secs: f64 = secs.trim().parse().map_err(|_| format!("bad seconds `{secs}`"))?;
    let nodes: u64 = nodes.trim().parse().map_err(|_| format!("bad node count `{nodes}`"))?;
    if !(secs > 0.0 && secs.is_finite()) || nodes == 0 {
        return Err("budget must be positive".into());
    }
    Ok(SearchBudget::new(nodes, Duration::from_secs_f64(secs)))
}

pub fn default_budget() -> SearchBudget {
    SearchBudget::new(1 << 40, Duration::from_secs(600))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budgets() {
        let b = parse_budget("2.5,1000").unwrap();
        assert_eq!(b.node_limit, 1000);
        assert_eq!(b.time_limit, Duration::from_millis(2500));
        assert!(parse_budget("10").is_err());
        assert!(parse_budget("0,10").is_err());
        assert!(parse_budget("1,0").is_err());
    }

    #[test]
    fn fixtures_and_indices() {
        assert_eq!(load_graph("fixture:c20", 1).unwrap().vertex_count(), 20);
        assert!(load_graph("fixture:c21", 1).is_err());
    }
}
