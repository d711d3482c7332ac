//! Named graph families, their hereditary classes and universal graphs.

mod class_spec;
mod enumerate;
mod recognize;
mod universality;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph, VertexSet, MAX_VERTICES};

pub use class_spec::{in_partition_class, Builtin, ClassSpec, PARTITION_MAX_VERTICES};
pub use enumerate::{count_members_labelled, members_up_to_iso};
pub use recognize::{is_chain, is_split, is_threshold, split_partitions};
pub use universality::{
    check_universality, class_contains_family, UniversalityReport, UNIVERSALITY_MAX_N,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    S,
    Q,
    B,
    M,
    Z,
    Mbc,
    Mstar,
    Zstar,
    W,
    D,
    R,
    E1,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::S,
        Family::Q,
        Family::B,
        Family::M,
        Family::Z,
        Family::Mbc,
        Family::Mstar,
        Family::Zstar,
        Family::W,
        Family::D,
        Family::R,
        Family::E1,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Family::S => "s",
            Family::Q => "q",
            Family::B => "b",
            Family::M => "m",
            Family::Z => "z",
            Family::Mbc => "mbc",
            Family::Mstar => "mstar",
            Family::Zstar => "zstar",
            Family::W => "w",
            Family::D => "d",
            Family::R => "r",
            Family::E1 => "e1",
        }
    }

    /// Vertex count of `generate(self, n)`.
    pub fn order(self, n: usize) -> Option<usize> {
        match self {
            Family::S | Family::B | Family::M | Family::Z | Family::Mbc | Family::Mstar | Family::Zstar => {
                n.checked_mul(2)
            }
            Family::Q => n.checked_mul(2)?.checked_add(1),
            Family::W | Family::D => 1usize.checked_shl(n as u32)?.checked_add(n),
            Family::R | Family::E1 => Some(n),
        }
    }
}

/// A family, possibly complemented.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyId {
    pub family: Family,
    pub complemented: bool,
}

impl FamilyId {
    pub const fn new(family: Family) -> Self {
        FamilyId { family, complemented: false }
    }

    pub const fn co(family: Family) -> Self {
        FamilyId { family, complemented: true }
    }

    pub fn complement(self) -> Self {
        FamilyId { family: self.family, complemented: !self.complemented }
    }

    /// Whether `g` lies in the hereditary class this family spans.
    pub fn contains(self, g: &Graph) -> bool {
        if self.complemented {
            recognize::in_class(self.family, &g.complement())
        } else {
            recognize::in_class(self.family, g)
        }
    }
}

impl From<Family> for FamilyId {
    fn from(family: Family) -> Self {
        FamilyId::new(family)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.complemented {
            f.write_str("co-")?;
        }
        f.write_str(self.family.token())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let (complemented, name) = match lower.strip_prefix("co-") {
            Some(rest) => (true, rest),
            None => (false, lower.as_str()),
        };
        Family::ALL
            .into_iter()
            .find(|f| f.token() == name)
            .map(|family| FamilyId { family, complemented })
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

impl Serialize for FamilyId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Builds the `n`-th member of a family.
///
/// Vertex layout: for the two-part families the x side is `0..n` and the y
/// side `n..2n`; `Q_n` has centre 0; `W_n` and `D_n` put `A` first and
/// B-vertex `k` at index `n + k`.
pub fn generate(id: FamilyId, n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Precondition("family members are indexed from n = 1".into()));
    }
    let order = id.family.order(n).unwrap_or(usize::MAX);
    if order > MAX_VERTICES {
        return Err(Error::SizeCap { what: "generate", n: order, max: MAX_VERTICES });
    }
    let x = VertexSet::full(n);
    let mut edges = Vec::new();
    let g = match id.family {
        Family::S => Graph::empty(2 * n)?.with_clique_on(x),
        Family::Q => {
            edges.extend((1..=n).map(|i| (0, i)));
            Graph::from_edges(2 * n + 1, &edges)?
        }
        Family::B => {
            edges.extend((0..n).flat_map(|i| (n..2 * n).map(move |j| (i, j))));
            Graph::from_edges(2 * n, &edges)?
        }
        Family::M | Family::Mstar => {
            edges.extend((0..n).map(|i| (i, n + i)));
            Graph::from_edges(2 * n, &edges)?
        }
        Family::Mbc => {
            edges.extend((0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, n + j))));
            Graph::from_edges(2 * n, &edges)?
        }
        Family::Z | Family::Zstar => {
            for i in 1..=n {
                for j in (n + 1 - i)..=n {
                    edges.push((i - 1, n + j - 1));
                }
            }
            Graph::from_edges(2 * n, &edges)?
        }
        Family::W | Family::D => {
            for k in 0..(1usize << n) {
                edges.extend((0..n).filter(|i| k >> i & 1 == 1).map(|i| (i, n + k)));
            }
            Graph::from_edges(n + (1 << n), &edges)?
        }
        Family::R => {
            edges.extend((1..n).map(|i| (0, i)));
            Graph::from_edges(n, &edges)?
        }
        Family::E1 => {
            if n >= 2 {
                edges.push((0, 1));
            }
            Graph::from_edges(n, &edges)?
        }
    };
    let g = match id.family {
        Family::Mstar | Family::Zstar | Family::D => g.with_clique_on(x),
        _ => g,
    };
    Ok(if id.complemented { g.complement() } else { g })
}

/// The two-part families as bipartitions with the x side (or `A`) as part A.
pub fn generate_bipartition(family: Family, n: usize) -> Result<Bipartition> {
    let g = generate(FamilyId::new(family), n)?;
    match family {
        Family::B | Family::M | Family::Z | Family::Mbc | Family::W => {
            let a = VertexSet::full(n);
            let b = g.vertices() - a;
            Bipartition::new(g, a, b)
        }
        _ => Err(Error::Precondition(format!("{} is not a bipartite family", family.token()))),
    }
}
