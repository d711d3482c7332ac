//! Graph parameters, universal graphs, constructive Ramsey-type extraction
//! and speed layers for hereditary graph classes.

pub mod error;
pub mod extraction;
pub mod families;
pub mod graph;
pub mod parameters;
pub mod speeds;

pub use error::{Error, Result};
pub use graph::{Bipartition, Embedding, Graph, VertexSet};
