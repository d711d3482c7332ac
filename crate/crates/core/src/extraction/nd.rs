use super::skew::distinguishable_side;
use super::{certify, certify_any, monochromatic_subset, skew_rounds, Extraction, Kind, SkewRound};
use crate::families::Family;
use crate::graph::{Bipartition, Graph, VertexSet};
use crate::parameters::{maximum_clique_in, maximum_independent_set_in, similarity_partition};

/// The nine patterns of unbounded neighbourhood diversity, in the order they
/// are tried.
pub const NINE: [Kind; 9] = [
    Kind::family(Family::M),
    Kind::family(Family::Mbc),
    Kind::family(Family::Z),
    Kind::co(Family::M),
    Kind::co(Family::Mbc),
    Kind::co(Family::Z),
    Kind::family(Family::Mstar),
    Kind::co(Family::Mstar),
    Kind::family(Family::Zstar),
];

/// A run of skew rounds split into the pair sequences the colourings act on.
struct Candidate {
    pairs: Vec<(usize, usize)>,
    /// Colour of `(i, j)`, `i < j`, that this candidate needs.
    x_adj_y: bool,
    /// Pairs needed for a size-`p` pattern.
    extra: usize,
    bipartite_kind: Kind,
}

impl Candidate {
    /// Vertices of the chosen pairs, less the first `x` and last `y` when the
    /// candidate needs an extra pair.
    fn vertex_set(&self, chosen: &[(usize, usize)]) -> VertexSet {
        if self.extra == 1 {
            // drop the first x and the last y
            let k = chosen.len();
            chosen[1..].iter().map(|p| p.0).chain(chosen[..k - 1].iter().map(|p| p.1)).collect()
        } else {
            chosen.iter().flat_map(|&(x, y)| [x, y]).collect()
        }
    }
}

/// Small pairs are a skew matching: `x_i y_j` absent gives `M`, present
/// gives `Z`. Big pairs are a complemented one: `x_i y_j` absent gives a
/// chain graph on all but one `x` and one `y`, present gives `M^bc`.
fn candidates(rounds: &[SkewRound]) -> Vec<Candidate> {
    let small: Vec<(usize, usize)> = rounds.iter().filter(|r| !r.big).map(|r| (r.x, r.y)).collect();
    let big: Vec<(usize, usize)> = rounds.iter().filter(|r| r.big).map(|r| (r.x, r.y)).collect();
    vec![
        Candidate { pairs: small.clone(), x_adj_y: false, extra: 0, bipartite_kind: Kind::family(Family::M) },
        Candidate { pairs: small, x_adj_y: true, extra: 0, bipartite_kind: Kind::family(Family::Z) },
        Candidate { pairs: big.clone(), x_adj_y: false, extra: 1, bipartite_kind: Kind::family(Family::Z) },
        Candidate { pairs: big, x_adj_y: true, extra: 0, bipartite_kind: Kind::family(Family::Mbc) },
    ]
}

/// Indices of the largest monochromatic set of pairs for this candidate.
fn largest_monochromatic(g: &Graph, cand: &Candidate, at_least: usize) -> Option<Vec<usize>> {
    let colour = |i: usize, j: usize| u8::from(g.has_edge(cand.pairs[i].0, cand.pairs[j].1) == cand.x_adj_y);
    (at_least..=cand.pairs.len())
        .rev()
        .find_map(|k| monochromatic_subset(cand.pairs.len(), colour, 1, k))
}

/// Induced `M_p`, `Z_p` or `M^bc_p` in a bipartite graph via skew rounds.
pub fn extract_nd_bipartite(bp: &Bipartition, p: usize) -> Extraction {
    if p == 0 {
        return Extraction::fail("input", "size must be positive");
    }
    let g = bp.graph();
    let (d, others) = distinguishable_side(bp);
    let rounds = skew_rounds(g, d, others, usize::MAX);
    for cand in candidates(&rounds) {
        let need = p + cand.extra;
        let colour = |i: usize, j: usize| u8::from(g.has_edge(cand.pairs[i].0, cand.pairs[j].1) == cand.x_adj_y);
        if let Some(idx) = monochromatic_subset(cand.pairs.len(), colour, 1, need) {
            let chosen: Vec<(usize, usize)> = idx.iter().map(|&i| cand.pairs[i]).collect();
            if let Some(w) = certify(g, cand.bipartite_kind, p, cand.vertex_set(&chosen)) {
                return Extraction::Found(w);
            }
        }
    }
    Extraction::fail(
        "ramsey",
        format!("{} skew rounds from {} distinguishable vertices give no size-{p} pattern", rounds.len(), d.len()),
    )
}

/// One of the nine patterns via similarity-class representatives, a
/// homogeneous set `A` of them, skew rounds across `G[A, V - A]` and a
/// homogeneous set among the chosen partners.
pub fn extract_nd_general(g: &Graph, p: usize) -> Extraction {
    if p == 0 {
        return Extraction::fail("input", "size must be positive");
    }
    let reps = similarity_partition(g).representatives();
    let clique = maximum_clique_in(g, reps);
    let indep = maximum_independent_set_in(g, reps);
    let a = if indep.len() >= clique.len() { indep } else { clique };
    if a.len() < 2 {
        return Extraction::fail("similarity", format!("homogeneous representative set has {} vertices", a.len()));
    }
    let b = g.vertices() - a;
    let cross = match Bipartition::cross(g, a, b) {
        Ok(c) => c,
        Err(e) => return Extraction::fail("similarity", e.to_string()),
    };
    let rounds = skew_rounds(cross.graph(), a, b, usize::MAX);
    for cand in candidates(&rounds) {
        let need = p + cand.extra;
        let Some(idx) = largest_monochromatic(cross.graph(), &cand, need) else { continue };
        let ys: VertexSet = idx.iter().map(|&i| cand.pairs[i].1).collect();
        for homogeneous in [maximum_independent_set_in(g, ys), maximum_clique_in(g, ys)] {
            if homogeneous.len() < need {
                continue;
            }
            let chosen: Vec<(usize, usize)> = idx
                .iter()
                .map(|&i| cand.pairs[i])
                .filter(|&(_, y)| homogeneous.contains(y))
                .collect();
            if let Some(w) = certify_any(g, &NINE, p, cand.vertex_set(&chosen)) {
                return Extraction::Found(w);
            }
        }
    }
    Extraction::fail(
        "ramsey",
        format!("{} skew rounds from {} representatives give none of the nine at size {p}", rounds.len(), a.len()),
    )
}
