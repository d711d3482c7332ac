use serde::Serialize;

use super::{Graph, VertexSet};

/// An injective map from pattern vertices to host vertices; `map[p]` is the
/// host image of pattern vertex `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    pub fn new(map: Vec<usize>) -> Self {
        Embedding { map }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self) -> VertexSet {
        self.map.iter().collect()
    }

    /// Checks injectivity, range and the induced-containment condition.
    pub fn verify(&self, pattern: &Graph, host: &Graph) -> bool {
        if self.map.len() != pattern.n() || self.map.iter().any(|&h| h >= host.n()) {
            return false;
        }
        if self.image().len() != self.map.len() {
            return false;
        }
        (0..pattern.n()).all(|u| {
            ((u + 1)..pattern.n())
                .all(|v| pattern.has_edge(u, v) == host.has_edge(self.map[u], self.map[v]))
        })
    }
}

/// Finds an induced copy of `pattern` in `host`.
///
/// Pattern vertices are placed in order of decreasing degree (ties by index)
/// and host candidates are tried in increasing order, so the result is the
/// lexicographically least embedding with respect to that placement order.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let k = pattern.n();
    if k > host.n() {
        return None;
    }
    if k == 0 {
        return Some(Embedding::new(Vec::new()));
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&p| (std::cmp::Reverse(pattern.degree(p)), p));

    // host vertices able to host each pattern vertex, by degree and co-degree
    let allowed: Vec<VertexSet> = order
        .iter()
        .map(|&p| {
            let (d, cd) = (pattern.degree(p), pattern.co_degree(p));
            (0..host.n())
                .filter(|&h| host.degree(h) >= d && host.co_degree(h) >= cd)
                .collect()
        })
        .collect();

    let mut images = vec![0usize; k];
    if place(host, pattern, &order, &allowed, 0, VertexSet::EMPTY, &mut images) {
        let mut map = vec![0usize; k];
        for (pos, &p) in order.iter().enumerate() {
            map[p] = images[pos];
        }
        Some(Embedding::new(map))
    } else {
        None
    }
}

pub fn contains_induced(host: &Graph, pattern: &Graph) -> bool {
    find_induced(host, pattern).is_some()
}

fn place(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    allowed: &[VertexSet],
    depth: usize,
    used: VertexSet,
    images: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let mut candidates = allowed[depth] - used;
    for prev in 0..depth {
        let h = images[prev];
        candidates = if pattern.has_edge(p, order[prev]) {
            candidates & host.neighbours(h)
        } else {
            candidates & host.non_neighbours(h)
        };
    }
    for h in candidates {
        images[depth] = h;
        if place(host, pattern, order, allowed, depth + 1, used.with(h), images) {
            return true;
        }
    }
    false
}
