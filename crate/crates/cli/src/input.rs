use std::io::{self, BufRead};

use anyhow::{Context, Result};
use hspeed_core::{Graph, VertexSet};

/// graph6, or the edge-list form `n; u-v ...`.
pub fn graph(text: &str) -> Result<Graph> {
    text.trim().parse::<Graph>().with_context(|| format!("cannot read graph {:?}", text.trim()))
}

/// Graphs from a literal, `@path` (one per line) or stdin when absent or `-`.
pub fn graphs(arg: Option<&str>) -> Result<Vec<Graph>> {
    let lines: Vec<String> = match arg {
        Some(a) if a.starts_with('@') => {
            let path = &a[1..];
            std::fs::read_to_string(path)
                .with_context(|| format!("cannot read {path}"))?
                .lines()
                .map(str::to_owned)
                .collect()
        }
        Some(a) if a != "-" => vec![a.to_owned()],
        _ => io::stdin().lock().lines().collect::<io::Result<_>>()?,
    };
    lines.iter().filter(|l| !l.trim().is_empty()).map(|l| graph(l)).collect()
}

pub fn vertex_list(text: &str) -> Result<VertexSet> {
    let mut set = VertexSet::EMPTY;
    for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = tok.parse().with_context(|| format!("bad vertex {tok:?}"))?;
        anyhow::ensure!(v < 64, "vertex {v} out of range");
        set.insert(v);
    }
    Ok(set)
}
