//! Constructive Ramsey-type procedures: each takes a graph and target sizes
//! and returns a certified induced copy of a named pattern, or reports the
//! stage at which the search ran dry.

mod complex;
mod matching;
mod nd;
mod ramsey;
mod skew;
mod vc;

use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::families::{generate, Family, FamilyId};
use crate::graph::{find_induced, Embedding, Graph, VertexSet};

pub use complex::extract_complex;
pub use matching::{extract_from_bipartite_matching, extract_from_matching};
pub use nd::{extract_nd_bipartite, extract_nd_general, NINE};
pub use ramsey::{bipartite_ramsey_witness, find_cross_biclique, monochromatic_pair_subset, monochromatic_subset};
pub use skew::{find_skew_matching, skew_rounds, SkewMatching, SkewRound};
pub use vc::{extract_vc, reverse_shatter, EXTRACT_VC_MAX_N};

/// The shape of an extracted pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Family(FamilyId),
    /// `K_p`.
    Clique,
    /// Bipartite complement of `B_s`: `2s` isolated vertices.
    CoBiclique,
}

impl Kind {
    pub const fn family(f: Family) -> Kind {
        Kind::Family(FamilyId::new(f))
    }

    pub const fn co(f: Family) -> Kind {
        Kind::Family(FamilyId::co(f))
    }

    pub fn pattern(self, size: usize) -> Result<Graph> {
        match self {
            Kind::Family(f) => generate(f, size),
            Kind::Clique => Graph::complete(size),
            Kind::CoBiclique => Graph::empty(2 * size),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Family(id) => write!(f, "{id}"),
            Kind::Clique => f.write_str("k"),
            Kind::CoBiclique => f.write_str("bc-b"),
        }
    }
}

impl Serialize for Kind {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// An induced copy of `kind.pattern(size)`; `embedding.map()[i]` is the host
/// vertex playing pattern vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: Kind,
    pub size: usize,
    #[serde(rename = "vertices")]
    pub embedding: Embedding,
}

impl Witness {
    pub fn verify(&self, host: &Graph) -> bool {
        self.kind.pattern(self.size).is_ok_and(|p| self.embedding.verify(&p, host))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub stage: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extraction {
    Found(Witness),
    Failure(Failure),
}

impl Extraction {
    pub fn fail(stage: &'static str, detail: impl Into<String>) -> Extraction {
        Extraction::Failure(Failure { stage, detail: detail.into() })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Extraction::Found(w) => Some(w),
            Extraction::Failure(_) => None,
        }
    }

    pub fn is_found(&self) -> bool {
        self.witness().is_some()
    }

    pub fn kind(&self) -> Option<Kind> {
        self.witness().map(|w| w.kind)
    }

    /// True for failures and for witnesses that check out.
    pub fn verify(&self, host: &Graph) -> bool {
        self.witness().is_none_or(|w| w.verify(host))
    }
}

impl Serialize for Extraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Extraction::Found(w) => w.serialize(serializer),
            Extraction::Failure(f) => {
                let mut map = serializer.serialize_map(Some(2))?;
                map.serialize_entry("failure", &f.detail)?;
                map.serialize_entry("stage", f.stage)?;
                map.end()
            }
        }
    }
}

/// Locates `kind.pattern(size)` inside `g[set]` and reports it in host labels.
pub(crate) fn certify(g: &Graph, kind: Kind, size: usize, set: VertexSet) -> Option<Witness> {
    let pattern = kind.pattern(size).ok()?;
    if pattern.n() > set.len() {
        return None;
    }
    let order = set.to_vec();
    let sub = g.induced_by_order(&order);
    let local = find_induced(&sub, &pattern)?;
    let embedding = Embedding::new(local.map().iter().map(|&i| order[i]).collect());
    debug_assert!(embedding.verify(&pattern, g));
    Some(Witness { kind, size, embedding })
}

/// First kind in `kinds` whose pattern is induced in `g[set]`.
pub(crate) fn certify_any(g: &Graph, kinds: &[Kind], size: usize, set: VertexSet) -> Option<Witness> {
    kinds.iter().find_map(|&k| certify(g, k, size, set))
}
