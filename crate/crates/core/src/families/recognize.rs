use super::Family;
use crate::graph::{Bipartition, Graph, VertexSet};
use crate::parameters::clique_number;

pub(super) fn in_class(family: Family, g: &Graph) -> bool {
    match family {
        Family::S => {
            let live = non_isolated(g);
            g.is_clique(live)
        }
        Family::Q => {
            let live = non_isolated(g);
            live.is_empty() || is_spanning_star(&g.induced(live).expect("subset of V"))
        }
        Family::B => {
            let comps = g.complement().components();
            comps.len() <= 2 && comps.iter().all(|&c| g.is_independent(c))
        }
        Family::M => g.vertices().iter().all(|v| g.degree(v) <= 1),
        Family::Z => is_chain(g),
        Family::Mbc => in_matching_bicomplement_class(g),
        Family::Mstar => split_partitions(g).into_iter().any(|(k, i)| {
            k.iter().all(|v| (g.neighbours(v) & i).len() <= 1) && i.iter().all(|v| g.degree(v) <= 1)
        }),
        Family::Zstar => is_threshold(g),
        Family::W => Bipartition::from_graph(g).is_some(),
        Family::D => is_split(g),
        Family::R => g.edge_count() == 0 || is_spanning_star(g),
        Family::E1 => g.edge_count() <= 1,
    }
}

fn non_isolated(g: &Graph) -> VertexSet {
    g.vertices().iter().filter(|&v| g.degree(v) > 0).collect()
}

/// `K_{1,n-1}` for `n >= 2`, or `K_1`.
fn is_spanning_star(g: &Graph) -> bool {
    let n = g.n();
    n >= 1 && g.edge_count() == n - 1 && g.vertices().iter().any(|v| g.degree(v) == n - 1)
}

/// Bipartite with no induced `2K_2`: the neighbourhoods in each part form a chain.
pub fn is_chain(g: &Graph) -> bool {
    if Bipartition::from_graph(g).is_none() {
        return false;
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    edges.iter().enumerate().all(|(k, &(a, b))| {
        edges[k + 1..].iter().all(|&(c, d)| {
            let quad = VertexSet::from_iter([a, b, c, d]);
            quad.len() < 4 || g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d)
        })
    })
}

/// Repeatedly strips isolated or dominating vertices.
pub fn is_threshold(g: &Graph) -> bool {
    let mut rest = g.vertices();
    'outer: while !rest.is_empty() {
        for v in rest {
            let d = (g.neighbours(v) & rest).len();
            if d == 0 || d + 1 == rest.len() {
                rest.remove(v);
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Degree-sequence test: with degrees `d_1 >= ... >= d_n` and `m` the largest
/// `i` with `d_i >= i - 1`, the graph is split iff
/// `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`.
pub fn is_split(g: &Graph) -> bool {
    let mut d: Vec<usize> = g.vertices().iter().map(|v| g.degree(v)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let m = (1..=d.len()).filter(|&i| d[i - 1] + 1 >= i).max().unwrap_or(0);
    let head: usize = d[..m].iter().sum();
    let tail: usize = d[m..].iter().sum();
    head == m * m.saturating_sub(1) + tail
}

/// Every partition `(K, I)` of the vertices into a clique and an independent set.
///
/// Each has `|K|` equal to the clique number, or one less and then `K` is a
/// maximum clique with one vertex moved across.
pub fn split_partitions(g: &Graph) -> Vec<(VertexSet, VertexSet)> {
    if !is_split(g) {
        return Vec::new();
    }
    let all = g.vertices();
    let mut out = Vec::new();
    for k in maximum_cliques(g) {
        if !g.is_independent(all - k) {
            continue;
        }
        out.push((k, all - k));
        for x in k {
            let (k2, i2) = (k.without(x), (all - k).with(x));
            if g.is_independent(i2) {
                out.push((k2, i2));
            }
        }
    }
    out.sort_by_key(|(k, _)| k.bits());
    out.dedup();
    out
}

fn maximum_cliques(g: &Graph) -> Vec<VertexSet> {
    fn go(g: &Graph, cur: VertexSet, cand: VertexSet, target: usize, out: &mut Vec<VertexSet>) {
        if cur.len() == target {
            out.push(cur);
            return;
        }
        let mut rest = cand;
        for v in cand {
            if cur.len() + rest.len() < target {
                return;
            }
            rest.remove(v);
            go(g, cur.with(v), rest & g.neighbours(v), target, out);
        }
    }
    let mut out = Vec::new();
    go(g, VertexSet::EMPTY, g.vertices(), clique_number(g), &mut out);
    out
}

/// Induced subgraphs of the bipartite complement of a perfect matching:
/// bipartite with some bipartition whose cross non-edges form a matching.
fn in_matching_bicomplement_class(g: &Graph) -> bool {
    if g.edge_count() == 0 {
        return true;
    }
    let Some(base) = Bipartition::from_graph(g) else { return false };
    let comps = g.components();
    // A vertex misses every opposite-side vertex of the other components, so
    // members have very few components.
    if comps.len() > 6 {
        return false;
    }
    (0..1u32 << (comps.len() - 1)).any(|flips| {
        let mut p = VertexSet::EMPTY;
        for (c, &comp) in comps.iter().enumerate() {
            let own = comp & base.part_a();
            p = p | if flips >> c & 1 == 1 { comp - own } else { own };
        }
        let q = g.vertices() - p;
        p.iter().all(|v| (q - g.neighbours(v)).len() <= 1)
            && q.iter().all(|v| (p - g.neighbours(v)).len() <= 1)
    })
}
