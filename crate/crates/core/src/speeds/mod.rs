//! Labelled speeds, entropy and index, and the layer classifier.

mod cache;
mod checks;
mod count;
mod formula;
mod layer;

pub use cache::{CountCache, CACHE_ENV};
pub use checks::{nd_count_bound_check, polynomial_count_check, BoundCheck, ND_CHECK_MAX_K, POLY_CHECK_MAX_C};
pub use count::{
    count_labelled, count_labelled_cached, entropy_estimate, entropy_from_count, speed_report, with_thread_limit,
    FormulaDelta, SpeedReport, COUNT_MAX_N, THREADS_ENV,
};
pub use formula::{formula_count, FormulaCount};
pub use layer::{
    classify_layer, entropy_of_index, index_of, layer_from_exclusions, Exclusion, IndexReport, Layer, LayerVerdict,
    CHAIN, EVIDENCE_MAX_VERTICES,
};
