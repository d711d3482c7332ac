//! VC-dimension of the closed and open neighbourhood set systems.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const VC_MAX_VERTICES: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Open,
    Closed,
}

/// A shattered set with one realising vertex per subset.
///
/// `witnesses[mask]` realises the subset of `shattered` selected by the bits
/// of `mask` (bit `i` is `shattered[i]`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShatterWitness {
    pub shattered: Vec<usize>,
    pub mode: Mode,
    pub witnesses: Vec<usize>,
}

impl ShatterWitness {
    pub fn size(&self) -> usize {
        self.shattered.len()
    }

    pub fn verify(&self, g: &Graph) -> bool {
        if g.n() == 0 {
            return self.shattered.is_empty() && self.witnesses.is_empty();
        }
        let a: VertexSet = self.shattered.iter().collect();
        if a.len() != self.shattered.len() || self.shattered.iter().any(|&v| v >= g.n()) {
            return false;
        }
        self.witnesses.len() == 1 << a.len()
            && self.witnesses.iter().enumerate().all(|(mask, &w)| {
                w < g.n()
                    && !(self.mode == Mode::Open && a.contains(w))
                    && trace(g, self.mode, w, a).compress(&self.shattered) == mask
            })
    }
}

pub fn trace(g: &Graph, mode: Mode, v: usize, a: VertexSet) -> VertexSet {
    match mode {
        Mode::Open => g.neighbours(v) & a,
        Mode::Closed => g.closed_neighbours(v) & a,
    }
}

/// Lowest vertex realising every subset of `a`, or `None` if `a` is not shattered.
pub fn shatter_witness(g: &Graph, mode: Mode, a: &[usize]) -> Option<ShatterWitness> {
    if g.n() == 0 {
        return a.is_empty().then(|| ShatterWitness { shattered: vec![], mode, witnesses: vec![] });
    }
    let set: VertexSet = a.iter().collect();
    if set.len() != a.len() || a.len() > 6 {
        return None;
    }
    let mut witnesses = vec![usize::MAX; 1 << a.len()];
    for v in realisers(g, mode, set) {
        let slot = &mut witnesses[trace(g, mode, v, set).compress(a)];
        if *slot == usize::MAX {
            *slot = v;
        }
    }
    witnesses
        .iter()
        .all(|&w| w != usize::MAX)
        .then(|| ShatterWitness { shattered: a.to_vec(), mode, witnesses })
}

pub fn vc_closed(g: &Graph) -> Result<(usize, ShatterWitness)> {
    vc(g, Mode::Closed)
}

pub fn vc_open(g: &Graph) -> Result<(usize, ShatterWitness)> {
    vc(g, Mode::Open)
}

/// Largest shattered set; among those of maximum size, the lexicographically
/// least as a sorted sequence.
pub fn vc(g: &Graph, mode: Mode) -> Result<(usize, ShatterWitness)> {
    if g.n() > VC_MAX_VERTICES {
        return Err(Error::SizeCap { what: "vc", n: g.n(), max: VC_MAX_VERTICES });
    }
    let mut best = Vec::new();
    let mut current = Vec::new();
    extend(g, mode, &mut current, 0, &mut best);
    let witness = shatter_witness(g, mode, &best).expect("search returns a shattered set");
    Ok((best.len(), witness))
}

fn realisers(g: &Graph, mode: Mode, a: VertexSet) -> VertexSet {
    match mode {
        Mode::Open => g.vertices() - a,
        Mode::Closed => g.vertices(),
    }
}

fn is_shattered(g: &Graph, mode: Mode, a: &[usize]) -> bool {
    let set: VertexSet = a.iter().collect();
    let need = 1usize << a.len();
    let pool = realisers(g, mode, set);
    if pool.len() < need {
        return false;
    }
    let mut seen = 0u64;
    for v in pool {
        seen |= 1 << trace(g, mode, v, set).compress(a);
    }
    seen.count_ones() as usize == need
}

// Sets are visited in lexicographic order and shattering is inherited by
// subsets, so the first set of each size reached is the least of that size.
fn extend(g: &Graph, mode: Mode, current: &mut Vec<usize>, from: usize, best: &mut Vec<usize>) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    for v in from..g.n() {
        if current.len() + (g.n() - v) <= best.len() {
            return;
        }
        if 2usize << current.len() > g.n() {
            return;
        }
        current.push(v);
        if is_shattered(g, mode, current) {
            extend(g, mode, current, v + 1, best);
        }
        current.pop();
    }
}

/// Turns a closed-shattered set into an open-shattered subset by the
/// two-phase deletion: drop one vertex whose singleton is closed, then, while
/// some subset `B` with `|B| >= 2` is closed, keep only its realiser `v(B)`.
///
/// A subset of the current set is closed when none of its realisers lies
/// outside the set; its realiser `v(B)` is then the least one, which is in `B`.
pub fn prune_closed_witnesses(g: &Graph, a: &[usize]) -> Result<ShatterWitness> {
    if shatter_witness(g, Mode::Closed, a).is_none() {
        return Err(Error::Precondition(format!("{a:?} is not shattered by closed neighbourhoods")));
    }
    let mut current: Vec<usize> = a.to_vec();
    current.sort_unstable();

    if let Some(x) = current.iter().copied().find(|&x| {
        let b = VertexSet::singleton(x);
        closed_realiser(g, &current, b).is_some()
    }) {
        current.retain(|&v| v != x);
    }

    while let Some((b, keep)) = least_closed_subset(g, &current) {
        current.retain(|&v| !b.contains(v) || v == keep);
    }

    Ok(shatter_witness(g, Mode::Open, &current).expect("no closed subsets remain"))
}

/// `Some(v(B))` if every realiser of `B` lies inside the current set.
fn closed_realiser(g: &Graph, current: &[usize], b: VertexSet) -> Option<usize> {
    let set: VertexSet = current.iter().collect();
    let mut inside = None;
    for v in g.vertices() {
        if trace(g, Mode::Closed, v, set) == b {
            if !set.contains(v) {
                return None;
            }
            inside.get_or_insert(v);
        }
    }
    inside
}

fn least_closed_subset(g: &Graph, current: &[usize]) -> Option<(VertexSet, usize)> {
    let mut subsets: Vec<VertexSet> = (0..1usize << current.len())
        .map(|mask| {
            current.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect()
        })
        .filter(|b: &VertexSet| b.len() >= 2)
        .collect();
    subsets.sort_by_key(|b| b.to_vec());
    subsets.into_iter().find_map(|b| closed_realiser(g, current, b).map(|v| (b, v)))
}
