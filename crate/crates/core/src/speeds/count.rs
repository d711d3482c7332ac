use std::collections::BTreeMap;

use serde::Serialize;

use super::cache::CountCache;
use super::formula::{binomial, formula_count, FormulaCount};
use crate::error::{Error, Result};
use crate::families::{count_members_labelled, Builtin, ClassSpec};
use crate::graph::{contains_induced, Graph};

/// Largest `n` counted by enumeration.
pub const COUNT_MAX_N: usize = 7;

pub const THREADS_ENV: &str = "HSPEED_THREADS";

/// Runs `f` on a rayon pool of `HSPEED_THREADS` workers when that variable
/// is set, otherwise on the global pool.
pub fn with_thread_limit<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let limit = std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()).filter(|&k| k > 0);
    match limit.map(|k| rayon::ThreadPoolBuilder::new().num_threads(k).build()) {
        Some(Ok(pool)) => pool.install(f),
        Some(Err(e)) => {
            log::warn!("cannot build a pool of the requested size: {e}");
            f()
        }
        None => f(),
    }
}

fn enumerate(spec: &ClassSpec, n: usize) -> u128 {
    match spec {
        ClassSpec::Forbidden(f) => count_members_labelled(|g: &Graph| !f.iter().any(|h| contains_induced(g, h)), n),
        ClassSpec::Builtin(b) => count_members_labelled(|g: &Graph| b.contains(g).unwrap_or(false), n),
    }
}

/// Exact number of labelled `n`-vertex graphs in the class. Enumerates up to
/// [`COUNT_MAX_N`] vertices; beyond that only families with an exact closed
/// form are counted.
pub fn count_labelled(spec: &ClassSpec, n: usize) -> Result<u128> {
    if n <= COUNT_MAX_N {
        return Ok(with_thread_limit(|| enumerate(spec, n)));
    }
    if let ClassSpec::Builtin(Builtin::Family(f)) = spec {
        if let Ok(fc) = formula_count(*f, n) {
            if fc.is_exact_at(n) {
                return Ok(fc.value);
            }
        }
    }
    Err(Error::SizeCap { what: "count_labelled", n, max: COUNT_MAX_N })
}

/// [`count_labelled`] through an optional cache keyed by the canonical class
/// description.
pub fn count_labelled_cached(spec: &ClassSpec, n: usize, cache: Option<&CountCache>) -> Result<u128> {
    let key = spec.canonical_key();
    if let Some(hit) = cache.and_then(|c| c.get(&key, n)) {
        log::debug!("cache hit for {key} at n = {n}");
        return Ok(hit);
    }
    let count = count_labelled(spec, n)?;
    if let Some(c) = cache {
        c.put(&key, n, count)?;
    }
    Ok(count)
}

/// `log2(count) / C(n, 2)`.
pub fn entropy_from_count(count: u128, n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::Precondition("entropy needs n >= 2".into()));
    }
    if count == 0 {
        return Err(Error::ZeroCount);
    }
    let pairs = binomial(n as u128, 2).expect("small binomial") as f64;
    Ok(log2_u128(count) / pairs)
}

fn log2_u128(x: u128) -> f64 {
    let bits = 128 - x.leading_zeros();
    if bits <= 53 {
        return (x as f64).log2();
    }
    let shift = bits - 53;
    ((x >> shift) as f64).log2() + f64::from(shift)
}

pub fn entropy_estimate(spec: &ClassSpec, n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::Precondition("entropy needs n >= 2".into()));
    }
    entropy_from_count(count_labelled(spec, n)?, n)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FormulaDelta {
    pub formula: FormulaCount,
    pub enumerated: u128,
}

impl FormulaDelta {
    /// Exact formulas must match; bounds must not exceed the count.
    pub fn holds(&self, n: usize) -> bool {
        if self.formula.lower_bound {
            self.enumerated >= self.formula.value
        } else {
            !self.formula.is_exact_at(n) || self.enumerated == self.formula.value
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpeedReport {
    pub class: String,
    pub counts: BTreeMap<usize, u128>,
    pub entropy_estimates: BTreeMap<usize, f64>,
    pub formula_deltas: BTreeMap<usize, FormulaDelta>,
}

/// Counts for `n = 1..=n_max`, with entropy estimates from `n = 2` and the
/// closed form alongside when the class is a family that has one.
pub fn speed_report(spec: &ClassSpec, n_max: usize, cache: Option<&CountCache>) -> Result<SpeedReport> {
    let mut report = SpeedReport {
        class: spec.to_string(),
        counts: BTreeMap::new(),
        entropy_estimates: BTreeMap::new(),
        formula_deltas: BTreeMap::new(),
    };
    for n in 1..=n_max {
        let count = count_labelled_cached(spec, n, cache)?;
        report.counts.insert(n, count);
        if n >= 2 && count > 0 {
            report.entropy_estimates.insert(n, entropy_from_count(count, n)?);
        }
        if let ClassSpec::Builtin(Builtin::Family(f)) = spec {
            if let Ok(formula) = formula_count(*f, n) {
                report.formula_deltas.insert(n, FormulaDelta { formula, enumerated: count });
            }
        }
    }
    Ok(report)
}
