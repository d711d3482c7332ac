use std::collections::HashMap;

use crate::graph::{Graph, VertexSet};

/// A maximum matching of `g`, as edges `(u, v)` with `u < v`, sorted.
pub fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    let mut solver = Solver { g, memo: HashMap::new() };
    let mut rest = g.vertices();
    let mut edges = Vec::new();
    loop {
        let live = solver.live(rest);
        match solver.solve(live).1 {
            Some((u, v)) => {
                edges.push((u.min(v), u.max(v)));
                rest = live.without(u).without(v);
            }
            None => break,
        }
    }
    edges.sort_unstable();
    edges
}

pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

pub fn co_matching_number(g: &Graph) -> usize {
    matching_number(&g.complement())
}

/// `min(mu, co-mu)`.
pub fn c_matching_number(g: &Graph) -> usize {
    matching_number(g).min(co_matching_number(g))
}

struct Solver<'a> {
    g: &'a Graph,
    memo: HashMap<u64, (usize, Option<(usize, usize)>)>,
}

impl Solver<'_> {
    fn live(&self, rest: VertexSet) -> VertexSet {
        rest.iter().filter(|&v| !(self.g.neighbours(v) & rest).is_empty()).collect()
    }

    // Some maximum matching covers any non-isolated vertex v, so it suffices
    // to branch over the partners of a single such v (the one of least degree).
    fn solve(&mut self, rest: VertexSet) -> (usize, Option<(usize, usize)>) {
        let rest = self.live(rest);
        if rest.is_empty() {
            return (0, None);
        }
        if let Some(&hit) = self.memo.get(&rest.bits()) {
            return hit;
        }
        let bound = rest.len() / 2;
        let v = rest
            .iter()
            .min_by_key(|&v| ((self.g.neighbours(v) & rest).len(), v))
            .expect("non-empty");
        let mut best = (0, None);
        for u in self.g.neighbours(v) & rest {
            let size = 1 + self.solve(rest.without(v).without(u)).0;
            if size > best.0 {
                best = (size, Some((v, u)));
                if size == bound {
                    break;
                }
            }
        }
        self.memo.insert(rest.bits(), best);
        best
    }
}
