use rayon::prelude::*;
use serde::Serialize;

use super::count::{with_thread_limit, COUNT_MAX_N};
use super::formula::binomial;
use crate::error::{Error, Result};
use crate::families::count_members_labelled;
use crate::graph::Graph;
use crate::parameters::{nd, similarity_partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub enumerated: u128,
    pub bound: u128,
}

impl BoundCheck {
    pub fn holds(&self) -> bool {
        self.enumerated <= self.bound
    }
}

pub const ND_CHECK_MAX_K: usize = 3;

/// Labelled `n`-vertex graphs with at most `k` similarity classes against
/// `k^n 2^(C(k,2) + k)`.
pub fn nd_count_bound_check(k: usize, n: usize) -> Result<BoundCheck> {
    if k > ND_CHECK_MAX_K {
        return Err(Error::SizeCap { what: "nd_count_bound_check k", n: k, max: ND_CHECK_MAX_K });
    }
    if n > COUNT_MAX_N {
        return Err(Error::SizeCap { what: "nd_count_bound_check", n, max: COUNT_MAX_N });
    }
    // nd never grows when passing to an induced subgraph
    let enumerated = with_thread_limit(|| count_members_labelled(|g: &Graph| nd(g) <= k, n));
    let exp = binomial(k as u128, 2).expect("small") as u32 + k as u32;
    let bound = (k as u128).pow(n as u32) << exp;
    Ok(BoundCheck { enumerated, bound })
}

pub const POLY_CHECK_MAX_C: usize = 2;

/// Labelled `n`-vertex graphs having a similarity class of at least `n - c`
/// vertices, next to `C(n, c) 2^(C(c+1, 2) + 1)`.
pub fn polynomial_count_check(c: usize, n: usize) -> Result<BoundCheck> {
    if c > POLY_CHECK_MAX_C {
        return Err(Error::SizeCap { what: "polynomial_count_check c", n: c, max: POLY_CHECK_MAX_C });
    }
    if n > COUNT_MAX_N {
        return Err(Error::SizeCap { what: "polynomial_count_check", n, max: COUNT_MAX_N });
    }
    let threshold = n.saturating_sub(c);
    let pairs = n * n.saturating_sub(1) / 2;
    let enumerated = with_thread_limit(|| {
        (0..1u64 << pairs)
            .into_par_iter()
            .filter(|&mask| similarity_partition(&Graph::from_pair_mask(n, mask)).largest() >= threshold)
            .count() as u128
    });
    let exp = binomial(c as u128 + 1, 2).expect("small") as u32 + 1;
    let bound = binomial(n as u128, c as u128).expect("small") << exp;
    Ok(BoundCheck { enumerated, bound })
}
