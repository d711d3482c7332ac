use crate::graph::{Graph, VertexSet};

/// Lexicographically least maximum clique of `g[within]`.
pub fn maximum_clique_in(g: &Graph, within: VertexSet) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    grow(g, VertexSet::EMPTY, within, &mut best);
    best
}

pub fn maximum_clique(g: &Graph) -> VertexSet {
    maximum_clique_in(g, g.vertices())
}

/// Lexicographically least maximum independent set of `g[within]`.
pub fn maximum_independent_set_in(g: &Graph, within: VertexSet) -> VertexSet {
    maximum_clique_in(&g.complement(), within)
}

pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    maximum_independent_set_in(g, g.vertices())
}

pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).len()
}

pub fn independence_number(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}

/// `min(alpha, omega)`.
pub fn complex_number(g: &Graph) -> usize {
    independence_number(g).min(clique_number(g))
}

/// Lexicographically least clique of exactly `size` vertices inside `within`.
pub fn find_clique_of_size(g: &Graph, within: VertexSet, size: usize) -> Option<VertexSet> {
    fn go(g: &Graph, cur: VertexSet, cand: VertexSet, size: usize) -> Option<VertexSet> {
        if cur.len() == size {
            return Some(cur);
        }
        if cur.len() + cand.len() < size {
            return None;
        }
        let mut rest = cand;
        for v in cand {
            rest.remove(v);
            if let Some(found) = go(g, cur.with(v), rest & g.neighbours(v), size) {
                return Some(found);
            }
            if cur.len() + rest.len() < size {
                break;
            }
        }
        None
    }
    go(g, VertexSet::EMPTY, within, size)
}

// Depth-first in increasing vertex order; only strictly larger cliques
// replace `best`, so the first maximum found is the lexicographically least.
fn grow(g: &Graph, current: VertexSet, candidates: VertexSet, best: &mut VertexSet) {
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current;
        }
        return;
    }
    let mut rest = candidates;
    for v in candidates {
        if current.len() + rest.len() <= best.len() {
            return;
        }
        rest.remove(v);
        grow(g, current.with(v), rest & g.neighbours(v), best);
    }
    if current.len() > best.len() {
        *best = current;
    }
}
