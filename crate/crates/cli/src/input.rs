//! Reading graphs, polar edge sets and colorings from files or stdin.

use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::Value;

use trifree::dimacs::{parse_dimacs, write_dimacs};
use trifree::reductions::parse_polar_instance;
use trifree::{Coloring, Edge, Graph};

/// Reads `path`, or standard input when it is `None` or `-`.
pub fn read_text(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .context("reading standard input")?;
            Ok(text)
        }
    }
}

fn has_header(text: &str) -> bool {
    text.lines().any(|l| l.split_whitespace().next() == Some("p"))
}

/// The graph and its polar edges.
///
/// A polar file with its own `p` header is a complete instance and then
/// `graph` must be absent. Otherwise it holds only `s u v` lines referring
/// to the graph read from `graph` (or stdin).
pub fn read_graph_and_polar(graph: Option<&Path>, polar: Option<&Path>) -> Result<(Graph, Vec<Edge>)> {
    let Some(polar) = polar else {
        return Ok((parse_dimacs(&read_text(graph)?)?, Vec::new()));
    };
    let polar_text = read_text(Some(polar))?;
    let combined = if has_header(&polar_text) {
        if graph.is_some() {
            bail!(
                "{} is a complete polar instance; do not also pass a graph",
                polar.display()
            );
        }
        polar_text
    } else {
        write_dimacs(&parse_dimacs(&read_text(graph)?)?) + &polar_text
    };
    let inst = parse_polar_instance(&combined).with_context(|| format!("parsing {}", polar.display()))?;
    Ok((inst.graph().clone(), inst.polar().to_vec()))
}

/// Accepts `{"k":..,"colors":[..]}`, `{"chi3":..,"coloring":[..]}` and
/// `{"feasible":true,"q":..,"coloring":[..]}`.
pub fn read_coloring(path: &Path) -> Result<Coloring> {
    let text = read_text(Some(path))?;
    let value: Value = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    if value.get("colors").is_some() {
        return Ok(serde_json::from_value(value)?);
    }
    if value.get("feasible") == Some(&Value::Bool(false)) {
        bail!("{} records an infeasible answer, not a coloring", path.display());
    }
    let colors: Vec<u32> = match value.get("coloring") {
        Some(c) => serde_json::from_value(c.clone())?,
        None => bail!("{} has neither `colors` nor `coloring`", path.display()),
    };
    let k = ["chi3", "q"]
        .iter()
        .find_map(|key| value.get(key).and_then(Value::as_u64))
        .map(|k| k as u32)
        .unwrap_or_else(|| colors.iter().copied().max().unwrap_or(0));
    Ok(Coloring::new(k, colors)?)
}
