use hspeed_core::{Bipartition, Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Parts `0..a` and `a..a+b`.
pub fn random_bipartite(rng: &mut ChaCha8Rng, a: usize, b: usize, p: f64) -> Bipartition {
    let mut edges = Vec::new();
    for x in 0..a {
        for y in a..a + b {
            if rng.gen_bool(p) {
                edges.push((x, y));
            }
        }
    }
    let g = Graph::from_edges(a + b, &edges).unwrap();
    let part_a = VertexSet::full(a);
    Bipartition::new(g, part_a, VertexSet::full(a + b) - part_a).unwrap()
}

/// Tries every assignment of vertices to `i` independent bins and `j`
/// clique bins.
pub fn in_partition_brute(h: &Graph, i: usize, j: usize) -> bool {
    let bins = i + j;
    let n = h.n();
    if bins == 0 {
        return n == 0;
    }
    let total = bins.pow(n as u32);
    (0..total).any(|mut code| {
        let mut assign = vec![0; n];
        for a in assign.iter_mut() {
            *a = code % bins;
            code /= bins;
        }
        (0..n).all(|v| {
            (0..v).all(|u| assign[u] != assign[v] || (h.has_edge(u, v) == (assign[v] >= i)))
        })
    })
}

/// Index by the brute-force partition oracle.
pub fn index_brute(forbidden: &[Graph]) -> usize {
    let vmax = forbidden.iter().map(Graph::n).max().unwrap();
    let mut best = 0;
    for total in 0..=vmax + 1 {
        for i in 0..=total {
            if forbidden.iter().all(|h| !in_partition_brute(h, i, total - i)) {
                best = total;
            }
        }
    }
    best
}

/// Induced `M_2` (two cross edges, no other cross edges) or induced `B_2`
/// (all four cross edges) on two vertices of each part.
pub fn has_m2_or_b2(bp: &Bipartition) -> bool {
    let g = bp.graph();
    let xs = bp.part_a().to_vec();
    let ys = bp.part_b().to_vec();
    for (k, &x1) in xs.iter().enumerate() {
        for &x2 in &xs[k + 1..] {
            for (l, &y1) in ys.iter().enumerate() {
                for &y2 in &ys[l + 1..] {
                    let e = [g.has_edge(x1, y1), g.has_edge(x1, y2), g.has_edge(x2, y1), g.has_edge(x2, y2)];
                    let m2 = (e[0] && e[3] && !e[1] && !e[2]) || (e[1] && e[2] && !e[0] && !e[3]);
                    if m2 || e.iter().all(|&b| b) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Maximum matching of a bipartite graph by augmenting paths.
pub fn bipartite_matching_size(bp: &Bipartition) -> usize {
    fn augment(g: &Graph, x: usize, ys: VertexSet, seen: &mut VertexSet, mate: &mut [Option<usize>]) -> bool {
        for y in g.neighbours(x) & ys {
            if seen.contains(y) {
                continue;
            }
            seen.insert(y);
            if mate[y].is_none() || augment(g, mate[y].unwrap(), ys, seen, mate) {
                mate[y] = Some(x);
                return true;
            }
        }
        false
    }
    let g = bp.graph();
    let mut mate = vec![None; g.n()];
    bp.part_a()
        .iter()
        .filter(|&x| {
            let mut seen = VertexSet::EMPTY;
            augment(g, x, bp.part_b(), &mut seen, &mut mate)
        })
        .count()
}
