use rayon::prelude::*;
use serde::Serialize;

use super::{generate, members_up_to_iso, ClassSpec, FamilyId};
use crate::error::{Error, Result};
use crate::graph::{contains_induced, to_graph6};

pub const UNIVERSALITY_MAX_N: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniversalityReport {
    pub family: FamilyId,
    pub n: usize,
    pub members_checked: usize,
    pub host_vertices: usize,
    /// graph6 of every member that does not embed.
    pub failures: Vec<String>,
    pub passed: bool,
}

/// Checks that every `n`-vertex member of the family's class is an induced
/// subgraph of `generate(f, n)`.
pub fn check_universality(f: FamilyId, n: usize) -> Result<UniversalityReport> {
    if n > UNIVERSALITY_MAX_N {
        return Err(Error::SizeCap { what: "universality check", n, max: UNIVERSALITY_MAX_N });
    }
    let host = generate(f, n)?;
    let members = members_up_to_iso(|g| f.contains(g), n)?;
    let failures: Vec<String> = members
        .par_iter()
        .filter(|g| !contains_induced(&host, g))
        .map(to_graph6)
        .collect();
    log::debug!("universality {f} n={n}: {} members, {} failures", members.len(), failures.len());
    Ok(UniversalityReport {
        family: f,
        n,
        members_checked: members.len(),
        host_vertices: host.n(),
        passed: failures.is_empty(),
        failures,
    })
}

/// Whether the family's class lies inside `Free(F)`: no forbidden graph is a
/// member of the family's class.
pub fn class_contains_family(spec: &ClassSpec, f: FamilyId) -> Result<bool> {
    let forbidden = spec
        .forbidden_graphs()
        .ok_or_else(|| Error::Precondition("class_contains_family needs a forbidden-set class".into()))?;
    Ok(!forbidden.iter().any(|h| f.contains(h)))
}
