//! Labelled simple graphs on at most 64 vertices with one `u64` adjacency row
//! per vertex, plus the operations every other module is built on.

mod bipartition;
mod canon;
mod embed;
mod graph6;
mod vertex_set;

use std::fmt;
use std::str::FromStr;

pub use bipartition::Bipartition;
pub use canon::{canonical_code, canonical_form, CANONICAL_MAX_VERTICES};
pub use embed::{contains_induced, find_induced, Embedding};
pub use graph6::{parse_graph6, to_graph6};
pub use vertex_set::VertexSet;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// An immutable labelled simple graph on vertices `0..n`.
///
/// Row `i` holds the neighbourhood of `i`. Rows are symmetric, loop-free and
/// carry no bits at positions `>= n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { n, rows: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n).bits();
        for (i, row) in g.rows.iter_mut().enumerate() {
            *row = all & !(1u64 << i);
        }
        Ok(g)
    }

    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u == v {
                return Err(Error::Loop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            g.rows[u] |= 1 << v;
            g.rows[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Validates raw adjacency rows.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let mask = VertexSet::full(n).bits();
        for (i, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::InvalidAdjacency(format!("row {i} has bits beyond n")));
            }
            if (row >> i) & 1 == 1 {
                return Err(Error::Loop(i));
            }
            for j in VertexSet::from_bits(row) {
                if (rows[j] >> i) & 1 == 0 {
                    return Err(Error::InvalidAdjacency(format!("{i}~{j} is not symmetric")));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    /// Decodes a bitmask over the vertex pairs in column-major order
    /// `(0,1), (0,2), (1,2), (0,3), ...` (the graph6 order). This is the
    /// labelled-enumeration entry point.
    pub fn from_pair_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n <= 11, "pair mask only covers n <= 11");
        let mut rows = vec![0u64; n];
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if (mask >> bit) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                bit += 1;
            }
        }
        Graph { n, rows }
    }

    /// Inverse of [`Graph::from_pair_mask`].
    pub fn pair_mask(&self) -> u64 {
        debug_assert!(self.n <= 11);
        let mut mask = 0u64;
        let mut bit = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        mask
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.rows[u] >> v) & 1 == 1
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.rows[v])
    }

    #[inline]
    pub fn closed_neighbours(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.rows[v] | (1 << v))
    }

    /// Vertices other than `v` that are not adjacent to `v`.
    #[inline]
    pub fn non_neighbours(&self, v: usize) -> VertexSet {
        self.vertices() - self.closed_neighbours(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn co_degree(&self, v: usize) -> usize {
        self.n - 1 - self.degree(v)
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet::from_bits(self.rows[u] & !((2u64 << u) - 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn complement(&self) -> Graph {
        let all = VertexSet::full(self.n).bits();
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, &r)| !r & all & !(1u64 << i))
            .collect();
        Graph { n: self.n, rows }
    }

    /// Subgraph induced by `vs`, relabelled `0..|vs|` in increasing original order.
    pub fn induced(&self, vs: VertexSet) -> Result<Graph> {
        if let Some(v) = (vs - self.vertices()).first() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.induced_by_order(&vs.to_vec()))
    }

    /// Subgraph induced by `order`, with `order[i]` becoming vertex `i`.
    /// Panics on repeated or out-of-range vertices.
    pub fn induced_by_order(&self, order: &[usize]) -> Graph {
        let k = order.len();
        let mut rows = vec![0u64; k];
        for i in 0..k {
            for j in (i + 1)..k {
                assert_ne!(order[i], order[j], "repeated vertex in induced order");
                if self.has_edge(order[i], order[j]) {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
            }
        }
        Graph { n: k, rows }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for (u, v) in self.edges() {
            let (a, b) = (perm[u], perm[v]);
            rows[a] |= 1 << b;
            rows[b] |= 1 << a;
        }
        Graph { n: self.n, rows }
    }

    /// Adds every edge inside `set`.
    pub fn with_clique_on(&self, set: VertexSet) -> Graph {
        let mut rows = self.rows.clone();
        for v in set {
            rows[v] |= (set - VertexSet::singleton(v)).bits();
        }
        Graph { n: self.n, rows }
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| (set - VertexSet::singleton(v)).is_subset(self.neighbours(v)))
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| (self.neighbours(v) & set).is_empty())
    }

    /// Connected components, each listed by its smallest vertex first.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::singleton(s);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next = next | self.neighbours(v);
                }
                frontier = next - comp;
                comp = comp | next;
            }
            seen = seen | comp;
            out.push(comp);
        }
        out
    }

    /// Parses the edge-list text format `n; u-v u-v ...`.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let (head, tail) = text
            .split_once(';')
            .ok_or_else(|| Error::EdgeList("missing `;`".into()))?;
        let n: usize = head
            .trim()
            .parse()
            .map_err(|_| Error::EdgeList(format!("bad vertex count `{}`", head.trim())))?;
        let mut edges = Vec::new();
        for tok in tail.split_whitespace() {
            let (u, v) = tok
                .split_once('-')
                .ok_or_else(|| Error::EdgeList(format!("bad edge `{tok}`")))?;
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::EdgeList(format!("bad edge `{tok}`")))
            };
            edges.push((parse(u)?, parse(v)?));
        }
        Graph::from_edges(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{};", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!(" {u}-{v}"));
        }
        s
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    Ok(())
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.to_edge_list())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}

/// Accepts graph6 or the edge-list format (anything containing `;`).
impl FromStr for Graph {
    type Err = Error;
    fn from_str(s: &str) -> Result<Graph> {
        if s.contains(';') {
            Graph::parse_edge_list(s)
        } else {
            parse_graph6(s.trim())
        }
    }
}
