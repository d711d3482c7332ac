//! Graph parameters: cliques and independent sets, degrees, matchings,
//! similarity classes and VC-dimension.

mod clique;
mod matching;
mod similarity;
mod vc;

use serde::Serialize;

pub use clique::{
    clique_number, complex_number, find_clique_of_size, independence_number, maximum_clique,
    maximum_clique_in, maximum_independent_set, maximum_independent_set_in,
};
pub use matching::{c_matching_number, co_matching_number, matching_number, maximum_matching};
pub use similarity::{
    nd, similar, similarity_difference, similarity_partition, SimilarityPartition,
};
pub use vc::{
    prune_closed_witnesses, shatter_witness, trace, vc, vc_closed, vc_open, Mode, ShatterWitness,
    VC_MAX_VERTICES,
};

use crate::error::Result;
use crate::graph::Graph;

pub fn max_degree(g: &Graph) -> usize {
    g.vertices().iter().map(|v| g.degree(v)).max().unwrap_or(0)
}

pub fn max_codegree(g: &Graph) -> usize {
    g.vertices().iter().map(|v| g.co_degree(v)).max().unwrap_or(0)
}

/// Largest `min(d(v), n-1-d(v))` over all vertices.
pub fn complex_degree(g: &Graph) -> usize {
    g.vertices().iter().map(|v| g.degree(v).min(g.co_degree(v))).max().unwrap_or(0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParameterReport {
    pub alpha: usize,
    pub omega: usize,
    pub complex_number: usize,
    pub max_degree: usize,
    pub max_codegree: usize,
    pub complex_degree: usize,
    pub matching: usize,
    pub co_matching: usize,
    pub c_matching: usize,
    pub nd: usize,
    pub largest_class: usize,
    pub smallest_class: usize,
    pub similarity_difference: usize,
    pub vc_closed: usize,
    pub vc_open: usize,
}

impl ParameterReport {
    pub fn compute(g: &Graph) -> Result<Self> {
        let alpha = independence_number(g);
        let omega = clique_number(g);
        let matching = matching_number(g);
        let co_matching = co_matching_number(g);
        let partition = similarity_partition(g);
        Ok(ParameterReport {
            alpha,
            omega,
            complex_number: alpha.min(omega),
            max_degree: max_degree(g),
            max_codegree: max_codegree(g),
            complex_degree: complex_degree(g),
            matching,
            co_matching,
            c_matching: matching.min(co_matching),
            nd: partition.nd(),
            largest_class: partition.largest(),
            smallest_class: partition.smallest(),
            similarity_difference: partition.difference(),
            vc_closed: vc_closed(g)?.0,
            vc_open: vc_open(g)?.0,
        })
    }
}
