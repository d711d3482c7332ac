use serde::Serialize;

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// A bipartite graph together with a fixed split of its vertices into two
/// independent parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    #[serde(skip)]
    graph: Graph,
    part_a: VertexSet,
    part_b: VertexSet,
}

impl Bipartition {
    pub fn new(graph: Graph, part_a: VertexSet, part_b: VertexSet) -> Result<Self> {
        if !(part_a & part_b).is_empty() {
            return Err(Error::InvalidBipartition("parts overlap".into()));
        }
        if part_a | part_b != graph.vertices() {
            return Err(Error::InvalidBipartition("parts do not cover the vertex set".into()));
        }
        for (name, part) in [("A", part_a), ("B", part_b)] {
            if !graph.is_independent(part) {
                return Err(Error::InvalidBipartition(format!("part {name} is not independent")));
            }
        }
        Ok(Bipartition { graph, part_a, part_b })
    }

    /// Two-colours `g`, putting the smallest vertex of every component in part A.
    pub fn from_graph(g: &Graph) -> Option<Self> {
        let mut a = VertexSet::EMPTY;
        let mut b = VertexSet::EMPTY;
        for comp in g.components() {
            let start = comp.first()?;
            let mut side = [VertexSet::singleton(start), VertexSet::EMPTY];
            let mut frontier = side[0];
            let mut k = 0;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next = next | g.neighbours(v);
                }
                k ^= 1;
                next = next - side[k];
                if !(next & side[k ^ 1]).is_empty() {
                    return None;
                }
                side[k] = side[k] | next;
                frontier = next;
            }
            a = a | side[0];
            b = b | side[1];
        }
        Bipartition::new(g.clone(), a, b).ok()
    }

    /// Keeps only the edges of `g` between `a` and `b`: the graph `G[A,B]`.
    pub fn cross(g: &Graph, a: VertexSet, b: VertexSet) -> Result<Self> {
        let mut rows = vec![0u64; g.n()];
        for v in a {
            rows[v] = (g.neighbours(v) & b).bits();
        }
        for v in b {
            rows[v] = (g.neighbours(v) & a).bits();
        }
        let graph = Graph::from_rows(rows)?;
        Bipartition::new(graph, a, b)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn part_a(&self) -> VertexSet {
        self.part_a
    }

    pub fn part_b(&self) -> VertexSet {
        self.part_b
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Same parts with the cross edges inverted.
    pub fn bipartite_complement(&self) -> Bipartition {
        let mut rows = vec![0u64; self.graph.n()];
        for v in self.part_a {
            rows[v] = (self.part_b - self.graph.neighbours(v)).bits();
        }
        for v in self.part_b {
            rows[v] = (self.part_a - self.graph.neighbours(v)).bits();
        }
        Bipartition {
            graph: Graph::from_rows(rows).expect("bipartite complement keeps symmetry"),
            part_a: self.part_a,
            part_b: self.part_b,
        }
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition { graph: self.graph.clone(), part_a: self.part_b, part_b: self.part_a }
    }
}
