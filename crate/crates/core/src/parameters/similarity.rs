use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// Partition of the vertices into similarity classes, ordered by least vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimilarityPartition {
    pub classes: Vec<VertexSet>,
}

impl SimilarityPartition {
    pub fn nd(&self) -> usize {
        self.classes.len()
    }

    pub fn largest(&self) -> usize {
        self.classes.iter().map(|c| c.len()).max().unwrap_or(0)
    }

    pub fn smallest(&self) -> usize {
        self.classes.iter().map(|c| c.len()).min().unwrap_or(0)
    }

    pub fn difference(&self) -> usize {
        self.largest() - self.smallest()
    }

    /// One vertex (the least) from each class.
    pub fn representatives(&self) -> VertexSet {
        self.classes.iter().filter_map(|c| c.first()).collect()
    }
}

/// `x ~ y` iff `N(x) \ {y} = N(y) \ {x}`.
pub fn similar(g: &Graph, x: usize, y: usize) -> bool {
    g.neighbours(x).without(y) == g.neighbours(y).without(x)
}

pub fn similarity_partition(g: &Graph) -> SimilarityPartition {
    let mut unassigned = g.vertices();
    let mut classes = Vec::new();
    while let Some(x) = unassigned.first() {
        let class: VertexSet = unassigned.iter().filter(|&y| y == x || similar(g, x, y)).collect();
        unassigned = unassigned - class;
        classes.push(class);
    }
    SimilarityPartition { classes }
}

pub fn nd(g: &Graph) -> usize {
    similarity_partition(g).nd()
}

pub fn similarity_difference(g: &Graph) -> usize {
    similarity_partition(g).difference()
}
