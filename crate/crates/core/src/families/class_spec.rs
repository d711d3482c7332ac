use std::fmt;
use std::str::FromStr;

use super::{is_chain, is_split, is_threshold, FamilyId};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, contains_induced, parse_graph6, to_graph6, Bipartition, Graph, VertexSet};

pub const PARTITION_MAX_VERTICES: usize = 16;

/// Named hereditary classes with dedicated recognisers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    All,
    Bipartite,
    CoBipartite,
    Split,
    Chain,
    Threshold,
    /// Vertex set splits into at most `i` independent sets and `j` cliques.
    Partition { i: usize, j: usize },
    Family(FamilyId),
}

impl Builtin {
    pub fn contains(self, g: &Graph) -> Result<bool> {
        Ok(match self {
            Builtin::All => true,
            Builtin::Bipartite => Bipartition::from_graph(g).is_some(),
            Builtin::CoBipartite => Bipartition::from_graph(&g.complement()).is_some(),
            Builtin::Split => is_split(g),
            Builtin::Chain => is_chain(g),
            Builtin::Threshold => is_threshold(g),
            Builtin::Partition { i, j } => in_partition_class(g, i, j)?,
            Builtin::Family(f) => f.contains(g),
        })
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::All => f.write_str("all"),
            Builtin::Bipartite => f.write_str("bipartite"),
            Builtin::CoBipartite => f.write_str("co-bipartite"),
            Builtin::Split => f.write_str("split"),
            Builtin::Chain => f.write_str("chain"),
            Builtin::Threshold => f.write_str("threshold"),
            Builtin::Partition { i, j } => write!(f, "e-{i}-{j}"),
            Builtin::Family(id) => write!(f, "family-{id}"),
        }
    }
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let name = s.trim().to_ascii_lowercase();
        Ok(match name.as_str() {
            "all" => Builtin::All,
            "bipartite" => Builtin::Bipartite,
            "co-bipartite" | "cobipartite" => Builtin::CoBipartite,
            "split" => Builtin::Split,
            "chain" => Builtin::Chain,
            "threshold" => Builtin::Threshold,
            _ => {
                if let Some(rest) = name.strip_prefix("e-") {
                    let (i, j) = rest.split_once('-').ok_or_else(|| Error::UnknownBuiltin(s.into()))?;
                    let parse = |t: &str| t.parse::<usize>().map_err(|_| Error::UnknownBuiltin(s.into()));
                    Builtin::Partition { i: parse(i)?, j: parse(j)? }
                } else if let Some(rest) = name.strip_prefix("family-") {
                    Builtin::Family(rest.parse()?)
                } else {
                    return Err(Error::UnknownBuiltin(s.into()));
                }
            }
        })
    }
}

/// A hereditary class: `Free(F)` for a finite forbidden set, or a builtin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassSpec {
    Forbidden(Vec<Graph>),
    Builtin(Builtin),
}

impl ClassSpec {
    pub fn forbidden(graphs: Vec<Graph>) -> Result<Self> {
        if graphs.is_empty() {
            return Err(Error::EmptyForbiddenSet);
        }
        if graphs.iter().any(|h| h.n() == 0) {
            return Err(Error::ClassSpec("forbidden graphs need at least one vertex".into()));
        }
        Ok(ClassSpec::Forbidden(graphs))
    }

    pub fn is_member(&self, g: &Graph) -> Result<bool> {
        match self {
            ClassSpec::Forbidden(f) => Ok(!f.iter().any(|h| contains_induced(g, h))),
            ClassSpec::Builtin(b) => b.contains(g),
        }
    }

    pub fn forbidden_graphs(&self) -> Option<&[Graph]> {
        match self {
            ClassSpec::Forbidden(f) => Some(f),
            ClassSpec::Builtin(_) => None,
        }
    }

    /// Text form that is equal for two forbidden sets differing only by
    /// relabelling or order; used as the cache key.
    pub fn canonical_key(&self) -> String {
        match self {
            ClassSpec::Forbidden(f) => {
                let mut codes: Vec<String> = f
                    .iter()
                    .map(|h| to_graph6(&canonical_form(h).unwrap_or_else(|_| h.clone())))
                    .collect();
                codes.sort();
                codes.dedup();
                format!("forbidden:{}", codes.join(","))
            }
            ClassSpec::Builtin(b) => format!("builtin:{b}"),
        }
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSpec::Forbidden(gs) => {
                let codes: Vec<String> = gs.iter().map(to_graph6).collect();
                write!(f, "forbidden:{}", codes.join(","))
            }
            ClassSpec::Builtin(Builtin::Family(id)) => write!(f, "family:{id}"),
            ClassSpec::Builtin(b) => write!(f, "builtin:{b}"),
        }
    }
}

/// Accepts `forbidden:<g6>,<g6>,...`, `builtin:<name>` and `family:<token>`.
impl FromStr for ClassSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, body) = s
            .split_once(':')
            .ok_or_else(|| Error::ClassSpec(format!("expected <kind>:<value>, got {s:?}")))?;
        match kind.trim() {
            "forbidden" => {
                let graphs = body
                    .split(',')
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(|t| if t.contains(';') { t.parse() } else { parse_graph6(t) })
                    .collect::<Result<Vec<_>>>()?;
                ClassSpec::forbidden(graphs)
            }
            "builtin" => Ok(ClassSpec::Builtin(body.parse()?)),
            "family" => Ok(ClassSpec::Builtin(Builtin::Family(body.parse()?))),
            other => Err(Error::ClassSpec(format!("unknown class kind {other:?}"))),
        }
    }
}

/// Whether `g` splits into at most `i` independent sets and `j` cliques.
pub fn in_partition_class(g: &Graph, i: usize, j: usize) -> Result<bool> {
    if g.n() > PARTITION_MAX_VERTICES {
        return Err(Error::SizeCap { what: "E(i,j) membership", n: g.n(), max: PARTITION_MAX_VERTICES });
    }
    let mut indep = Vec::with_capacity(i);
    let mut cliques = Vec::with_capacity(j);
    Ok(assign(g, 0, i, j, &mut indep, &mut cliques))
}

// Bins of one type are interchangeable, so a new bin is only opened after
// trying every open bin of that type.
fn assign(g: &Graph, v: usize, i: usize, j: usize, indep: &mut Vec<VertexSet>, cliques: &mut Vec<VertexSet>) -> bool {
    if v == g.n() {
        return true;
    }
    let nb = g.neighbours(v);
    for k in 0..indep.len() {
        if (indep[k] & nb).is_empty() {
            indep[k].insert(v);
            if assign(g, v + 1, i, j, indep, cliques) {
                return true;
            }
            indep[k].remove(v);
        }
    }
    if indep.len() < i {
        indep.push(VertexSet::singleton(v));
        if assign(g, v + 1, i, j, indep, cliques) {
            return true;
        }
        indep.pop();
    }
    for k in 0..cliques.len() {
        if cliques[k].is_subset(nb) {
            cliques[k].insert(v);
            if assign(g, v + 1, i, j, indep, cliques) {
                return true;
            }
            cliques[k].remove(v);
        }
    }
    if cliques.len() < j {
        cliques.push(VertexSet::singleton(v));
        if assign(g, v + 1, i, j, indep, cliques) {
            return true;
        }
        cliques.pop();
    }
    false
}
