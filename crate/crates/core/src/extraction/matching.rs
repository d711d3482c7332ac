use super::{certify, monochromatic_subset, Extraction, Kind, Witness};
use crate::families::Family;
use crate::graph::{Bipartition, Embedding, Graph, VertexSet};
use crate::parameters::{find_clique_of_size, maximum_independent_set_in, maximum_matching};

/// Induced `M_s` or `B_t` from a maximum matching of a bipartite graph.
///
/// Matched pairs `x_i y_i` (ordered by `x_i`) are coloured pairwise by which
/// of `x_i y_j`, `y_i x_j` are edges: 1 neither, 2 both, 3 only `x_i y_j`,
/// 4 only `y_i x_j`. Colour 1 gives `M`, colour 2 gives `B`. Colours 3 and 4
/// give an induced chain graph on `2t - 1` pairs, in which the first `t`
/// pairs and the last `t` pairs overlap in the middle one and span a `B_t`.
pub fn extract_from_bipartite_matching(bp: &Bipartition, s: usize, t: usize) -> Extraction {
    if s == 0 || t == 0 {
        return Extraction::fail("input", "sizes must be positive");
    }
    let g = bp.graph();
    let pairs: Vec<(usize, usize)> = {
        let mut p: Vec<(usize, usize)> = maximum_matching(g)
            .into_iter()
            .map(|(u, v)| if bp.part_a().contains(u) { (u, v) } else { (v, u) })
            .collect();
        p.sort_unstable();
        p
    };
    let colour = |i: usize, j: usize| {
        let (xi, yi) = pairs[i];
        let (xj, yj) = pairs[j];
        match (g.has_edge(xi, yj), g.has_edge(yi, xj)) {
            (false, false) => 1,
            (true, true) => 2,
            (true, false) => 3,
            (false, true) => 4,
        }
    };
    let q = pairs.len();
    let xs = |idx: &[usize]| idx.iter().map(|&i| pairs[i].0).collect::<VertexSet>();
    let ys = |idx: &[usize]| idx.iter().map(|&i| pairs[i].1).collect::<VertexSet>();

    if let Some(idx) = monochromatic_subset(q, colour, 1, s) {
        if let Some(w) = certify(g, Kind::family(Family::M), s, xs(&idx) | ys(&idx)) {
            return Extraction::Found(w);
        }
    }
    if let Some(idx) = monochromatic_subset(q, colour, 2, t) {
        if let Some(w) = certify(g, Kind::family(Family::B), t, xs(&idx) | ys(&idx)) {
            return Extraction::Found(w);
        }
    }
    for c in [3u8, 4] {
        if let Some(idx) = monochromatic_subset(q, colour, c, 2 * t - 1) {
            let (head, tail) = (&idx[..t], &idx[t - 1..]);
            let set = if c == 3 { xs(head) | ys(tail) } else { xs(tail) | ys(head) };
            if let Some(w) = certify(g, Kind::family(Family::B), t, set) {
                return Extraction::Found(w);
            }
        }
    }
    Extraction::fail(
        "ramsey",
        format!("matching of size {q} has no colour class reaching M_{s} or B_{t}"),
    )
}

/// Induced `M_s`, induced `B_t` or a clique `K_p` from a maximum matching of
/// any graph. The lower end of each matching edge is white, the upper black.
pub fn extract_from_matching(g: &Graph, s: usize, t: usize, p: usize) -> Extraction {
    if s == 0 || t == 0 || p == 0 {
        return Extraction::fail("input", "sizes must be positive");
    }
    let matching = maximum_matching(g);
    let partner = |v: usize| matching.iter().find_map(|&(a, b)| (a == v).then_some(b).or((b == v).then_some(a)));
    let white: VertexSet = matching.iter().map(|&(a, _)| a).collect();
    let black: VertexSet = matching.iter().map(|&(_, b)| b).collect();

    let a = maximum_independent_set_in(g, white);
    let a_black: VertexSet = a.iter().filter_map(partner).collect();
    let a1 = maximum_independent_set_in(g, a_black);
    let a2: VertexSet = a1.iter().filter_map(partner).collect();
    if !a1.is_empty() {
        if let Some(found) = via_bipartite(g, a2, a1, s, t) {
            return found;
        }
    }
    for within in [white, black, white | black] {
        if let Some(k) = find_clique_of_size(g, within, p) {
            if let Some(w) = certify(g, Kind::Clique, p, k) {
                return Extraction::Found(w);
            }
        }
    }
    Extraction::fail(
        "matching",
        format!("matching of size {} yields none of M_{s}, B_{t}, K_{p}", matching.len()),
    )
}

fn via_bipartite(g: &Graph, white: VertexSet, black: VertexSet, s: usize, t: usize) -> Option<Extraction> {
    let order: Vec<usize> = white.iter().chain(black.iter()).collect();
    let local = g.induced_by_order(&order);
    let k = white.len();
    let a = VertexSet::full(k);
    let bp = Bipartition::new(local, a, VertexSet::full(order.len()) - a).ok()?;
    match extract_from_bipartite_matching(&bp, s, t) {
        Extraction::Found(w) => {
            let map = w.embedding.map().iter().map(|&i| order[i]).collect();
            Some(Extraction::Found(Witness { embedding: Embedding::new(map), ..w }))
        }
        Extraction::Failure(_) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, generate_bipartition, FamilyId};

    #[test]
    fn bipartite_examples() {
        let m5 = generate_bipartition(Family::M, 5).unwrap();
        assert_eq!(extract_from_bipartite_matching(&m5, 3, 2).kind(), Some(Kind::family(Family::M)));
        let b5 = generate_bipartition(Family::B, 5).unwrap();
        assert_eq!(extract_from_bipartite_matching(&b5, 2, 3).kind(), Some(Kind::family(Family::B)));
        let z6 = generate_bipartition(Family::Z, 6).unwrap();
        let r = extract_from_bipartite_matching(&z6, 2, 3);
        assert_eq!(r.kind(), Some(Kind::family(Family::B)));
        assert!(r.verify(z6.graph()));
    }

    #[test]
    fn general_examples() {
        let k7 = Graph::complete(7).unwrap();
        let r = extract_from_matching(&k7, 2, 2, 4);
        assert_eq!(r.kind(), Some(Kind::Clique));
        assert!(r.verify(&k7));
        let m6 = generate(FamilyId::new(Family::M), 6).unwrap();
        assert_eq!(extract_from_matching(&m6, 4, 2, 3).kind(), Some(Kind::family(Family::M)));
        let b6 = generate(FamilyId::new(Family::B), 6).unwrap();
        let r = extract_from_matching(&b6, 2, 3, 3);
        assert_eq!(r.kind(), Some(Kind::family(Family::B)));
        assert!(r.verify(&b6));
        assert!(!extract_from_matching(&Graph::empty(4).unwrap(), 1, 1, 2).is_found());
    }
}
