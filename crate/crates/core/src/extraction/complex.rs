use super::{certify, find_cross_biclique, Extraction, Kind};
use crate::families::Family;
use crate::graph::Graph;
use crate::parameters::{maximum_clique, maximum_independent_set};

/// `S_n` or its complement, read off the cross graph between a maximum
/// clique and a maximum independent set.
pub fn extract_complex(g: &Graph, n: usize) -> Extraction {
    if n == 0 {
        return Extraction::fail("input", "size must be positive");
    }
    let mut c = maximum_clique(g);
    let mut i = maximum_independent_set(g);
    // a clique and an independent set share at most one vertex
    if let Some(v) = (c & i).first() {
        if c.len() > i.len() {
            c.remove(v);
        } else {
            i.remove(v);
        }
    }
    if c.len() < n || i.len() < n {
        return Extraction::fail(
            "complex",
            format!("disjoint clique and independent set have sizes {} and {}, need {n}", c.len(), i.len()),
        );
    }
    if let Some((x, y)) = find_cross_biclique(&g.complement(), c, i, n) {
        if let Some(w) = certify(g, Kind::family(Family::S), n, x | y) {
            return Extraction::Found(w);
        }
    }
    if let Some((x, y)) = find_cross_biclique(g, c, i, n) {
        if let Some(w) = certify(g, Kind::co(Family::S), n, x | y) {
            return Extraction::Found(w);
        }
    }
    Extraction::fail("bipartite-ramsey", format!("cross graph has no homogeneous {n}+{n} block"))
}
