use super::{certify, Extraction, Kind};
use crate::families::Family;
use crate::graph::{Bipartition, Graph, VertexSet, MAX_VERTICES};
use crate::parameters::find_clique_of_size;

/// Lexicographically least `target`-subset of `0..k` all of whose pairs have
/// colour `c`.
pub fn monochromatic_subset<F>(k: usize, colour: F, c: u8, target: usize) -> Option<Vec<usize>>
where
    F: Fn(usize, usize) -> u8,
{
    if k > MAX_VERTICES || target > k {
        return None;
    }
    let mut edges = Vec::new();
    for j in 1..k {
        for i in 0..j {
            if colour(i, j) == c {
                edges.push((i, j));
            }
        }
    }
    let same = Graph::from_edges(k, &edges).ok()?;
    find_clique_of_size(&same, same.vertices(), target).map(VertexSet::to_vec)
}

/// A monochromatic `target`-subset of `0..k` under a colouring of pairs
/// `(i, j)`, `i < j`, with colours `1..=r`: the lexicographically least over
/// all colours, ties going to the smaller colour.
pub fn monochromatic_pair_subset<F>(k: usize, r: u8, colour: F, target: usize) -> Option<(Vec<usize>, u8)>
where
    F: Fn(usize, usize) -> u8,
{
    (1..=r)
        .filter_map(|c| monochromatic_subset(k, &colour, c, target).map(|s| (s, c)))
        .min()
}

/// Lexicographically least `s`-subsets `X` of `a` and `Y` of `b` with every
/// `X`-`Y` pair adjacent.
pub fn find_cross_biclique(g: &Graph, a: VertexSet, b: VertexSet, s: usize) -> Option<(VertexSet, VertexSet)> {
    fn go(g: &Graph, cand: VertexSet, x: VertexSet, common: VertexSet, s: usize) -> Option<(VertexSet, VertexSet)> {
        if common.len() < s {
            return None;
        }
        if x.len() == s {
            return Some((x, common.iter().take(s).collect()));
        }
        let mut rest = cand;
        for v in cand {
            rest.remove(v);
            if x.len() + 1 + rest.len() < s {
                break;
            }
            if let Some(found) = go(g, rest, x.with(v), common & g.neighbours(v), s) {
                return Some(found);
            }
        }
        None
    }
    go(g, a, VertexSet::EMPTY, b, s)
}

/// An induced `B_s` across the parts, or an induced copy of its bipartite
/// complement (`2s` vertices, no edges).
pub fn bipartite_ramsey_witness(bp: &Bipartition, s: usize) -> Extraction {
    if s == 0 {
        return Extraction::fail("input", "size must be positive");
    }
    let g = bp.graph();
    if let Some((x, y)) = find_cross_biclique(g, bp.part_a(), bp.part_b(), s) {
        if let Some(w) = certify(g, Kind::family(Family::B), s, x | y) {
            return Extraction::Found(w);
        }
    }
    let co = bp.bipartite_complement();
    if let Some((x, y)) = find_cross_biclique(co.graph(), co.part_a(), co.part_b(), s) {
        if let Some(w) = certify(g, Kind::CoBiclique, s, x | y) {
            return Extraction::Found(w);
        }
    }
    Extraction::fail("bipartite-ramsey", format!("no biclique or co-biclique with parts of size {s}"))
}
