use super::{certify, Extraction, Kind};
use crate::error::{Error, Result};
use crate::families::Family;
use crate::graph::{Graph, VertexSet};
use crate::parameters::{maximum_clique_in, maximum_independent_set_in, vc_open, Mode, ShatterWitness};

pub const EXTRACT_VC_MAX_N: usize = 4;

/// Given `a` realising every subset of `b` by open neighbourhoods and
/// `|b| = 2^n`, returns `n` vertices of `a` shattered by `b`.
///
/// The `k`-th vertex of `b` (ascending) stands for the binary sequence `k`;
/// `a_i` is the vertex of `a` whose trace on `b` is the set of sequences with
/// bit `i` set, and `b_k` realises the subset `{a_i : bit i of k}`.
pub fn reverse_shatter(g: &Graph, a: VertexSet, b: VertexSet) -> Result<ShatterWitness> {
    if !(a & b).is_empty() {
        return Err(Error::Precondition("the two sets overlap".into()));
    }
    let size = b.len();
    if !size.is_power_of_two() {
        return Err(Error::Precondition(format!("|B| = {size} is not a power of two")));
    }
    if size >= usize::BITS as usize || 1usize << size > a.len() {
        return Err(Error::Precondition(format!("{} vertices cannot realise all subsets of {size}", a.len())));
    }
    let n = size.trailing_zeros() as usize;
    let bs = b.to_vec();
    let traces: Vec<usize> = a.iter().map(|v| (g.neighbours(v) & b).compress(&bs)).collect();
    let full = 1usize << size;
    let mut seen = vec![false; full];
    for &t in &traces {
        seen[t] = true;
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::Precondition("the first set does not shatter the second".into()));
    }
    let av = a.to_vec();
    let coords: Vec<usize> = (0..n)
        .map(|i| {
            let want = (0..size).filter(|k| k >> i & 1 == 1).fold(0usize, |m, k| m | 1 << k);
            av[traces.iter().position(|&t| t == want).expect("every trace is realised")]
        })
        .collect();
    let witness = ShatterWitness { shattered: coords, mode: Mode::Open, witnesses: bs };
    debug_assert!(witness.verify(g));
    Ok(witness)
}

/// `(shattered side, realiser side)` homogeneity for each pattern.
const KINDS: [(Kind, bool, bool); 4] = [
    (Kind::family(Family::W), false, false),
    (Kind::co(Family::W), true, true),
    (Kind::family(Family::D), true, false),
    (Kind::co(Family::D), false, true),
];

/// An induced `W_n`, co-`W_n`, `D_n` or co-`D_n`.
///
/// First the route through a maximum open-shattered set: a homogeneous
/// `2^m`-subset of it, reverse shattering onto the realisers and a
/// homogeneous `n`-subset there. Then a direct search over homogeneous
/// `n`-sets with homogeneous realiser choices.
pub fn extract_vc(g: &Graph, n: usize) -> Result<Extraction> {
    if n == 0 || n > EXTRACT_VC_MAX_N {
        return Err(Error::SizeCap { what: "extract_vc", n, max: EXTRACT_VC_MAX_N });
    }
    if let Some(found) = via_reverse_shatter(g, n)? {
        return Ok(Extraction::Found(found));
    }
    for &(kind, clique_side, clique_realisers) in &KINDS {
        if let Some(found) = direct(g, n, kind, clique_side, clique_realisers) {
            return Ok(Extraction::Found(found));
        }
    }
    Ok(Extraction::fail("vc", format!("no homogeneous {n}-set is shattered by a homogeneous set")))
}

fn homogeneous(g: &Graph, within: VertexSet) -> VertexSet {
    let i = maximum_independent_set_in(g, within);
    let c = maximum_clique_in(g, within);
    if i.len() >= c.len() { i } else { c }
}

fn via_reverse_shatter(g: &Graph, n: usize) -> Result<Option<super::Witness>> {
    let (_, w) = vc_open(g)?;
    let shattered: VertexSet = w.shattered.iter().collect();
    let realisers: VertexSet = w.witnesses.iter().collect();
    let hom = homogeneous(g, shattered);
    if hom.len() < 2 {
        return Ok(None);
    }
    let m = usize::BITS as usize - 1 - hom.len().leading_zeros() as usize;
    if m < n {
        return Ok(None);
    }
    let a1: VertexSet = hom.iter().take(1 << m).collect();
    let star = reverse_shatter(g, realisers, a1)?;
    let b2: VertexSet = homogeneous(g, star.shattered.iter().collect()).iter().take(n).collect();
    if b2.len() < n {
        return Ok(None);
    }
    // a1 shatters b2; one realiser per subset, all inside the homogeneous a1
    let bs = b2.to_vec();
    let mut chosen = vec![None; 1 << n];
    for v in a1 {
        let slot = &mut chosen[(g.neighbours(v) & b2).compress(&bs)];
        slot.get_or_insert(v);
    }
    let set: VertexSet = chosen.iter().flatten().copied().collect::<VertexSet>() | b2;
    Ok(KINDS.iter().find_map(|&(kind, _, _)| certify(g, kind, n, set)))
}

fn direct(g: &Graph, n: usize, kind: Kind, clique_side: bool, clique_realisers: bool) -> Option<super::Witness> {
    let side_graph = if clique_side { g.complement() } else { g.clone() };
    let real_graph = if clique_realisers { g.complement() } else { g.clone() };
    let mut found = None;
    independent_subsets(&side_graph, n, &mut |t| {
        let ts = t.to_vec();
        let mut by_trace = vec![VertexSet::EMPTY; 1 << n];
        for v in g.vertices() - t {
            by_trace[(g.neighbours(v) & t).compress(&ts)].insert(v);
        }
        if by_trace.iter().any(|c| c.is_empty()) {
            return false;
        }
        let mut picked = VertexSet::EMPTY;
        if pick_independent(&real_graph, &by_trace, 0, &mut picked) {
            found = certify(g, kind, n, t | picked);
        }
        found.is_some()
    });
    found
}

/// Calls `visit` on independent `k`-sets in lexicographic order until it
/// returns true.
fn independent_subsets(g: &Graph, k: usize, visit: &mut dyn FnMut(VertexSet) -> bool) -> bool {
    fn go(g: &Graph, cur: VertexSet, cand: VertexSet, k: usize, visit: &mut dyn FnMut(VertexSet) -> bool) -> bool {
        if cur.len() == k {
            return visit(cur);
        }
        let mut rest = cand;
        for v in cand {
            rest.remove(v);
            if cur.len() + 1 + rest.len() < k {
                return false;
            }
            if go(g, cur.with(v), rest - g.neighbours(v), k, visit) {
                return true;
            }
        }
        false
    }
    go(g, VertexSet::EMPTY, g.vertices(), k, visit)
}

/// One vertex from each class, pairwise non-adjacent in `g`.
fn pick_independent(g: &Graph, classes: &[VertexSet], i: usize, picked: &mut VertexSet) -> bool {
    if i == classes.len() {
        return true;
    }
    let mut blocked = VertexSet::EMPTY;
    for v in picked.iter() {
        blocked = blocked | g.neighbours(v);
    }
    for v in classes[i] - blocked - *picked {
        picked.insert(v);
        if pick_independent(g, classes, i + 1, picked) {
            return true;
        }
        picked.remove(v);
    }
    false
}
