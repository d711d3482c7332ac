use hspeed_core::extraction::{
    bipartite_ramsey_witness, extract_complex, extract_from_bipartite_matching, extract_from_matching,
    extract_nd_bipartite, extract_nd_general, extract_vc, find_skew_matching, Extraction,
};
use hspeed_core::graph::to_graph6;
use hspeed_core::{Bipartition, Graph, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use super::common::{bipartite_matching_size, has_m2_or_b2, random_bipartite, random_graph, rng};
use crate::Outcome;

const PER_PROCEDURE: usize = 1000;

/// `None` when the procedure reported failure, otherwise whether its
/// witness re-verifies.
type Check = fn(&mut rand_chacha::ChaCha8Rng) -> Option<bool>;

fn found(e: Extraction, host: &Graph) -> Option<bool> {
    e.is_found().then(|| e.verify(host))
}

fn any_graph(r: &mut rand_chacha::ChaCha8Rng) -> Graph {
    let n = r.gen_range(6..=12);
    let p = r.gen_range(0.1..0.9);
    random_graph(r, n, p)
}

fn any_bipartite(r: &mut rand_chacha::ChaCha8Rng) -> Bipartition {
    let a = r.gen_range(3..=7);
    let b = r.gen_range(3..=7);
    let p = r.gen_range(0.1..0.9);
    random_bipartite(r, a, b, p)
}

const PROCEDURES: [(&str, Check); 8] = [
    ("bipartite_ramsey_witness", |r| {
        let bp = any_bipartite(r);
        found(bipartite_ramsey_witness(&bp, 2), bp.graph())
    }),
    ("extract_complex", |r| {
        let g = any_graph(r);
        found(extract_complex(&g, 2), &g)
    }),
    ("extract_from_bipartite_matching", |r| {
        let bp = any_bipartite(r);
        found(extract_from_bipartite_matching(&bp, 2, 2), bp.graph())
    }),
    ("extract_from_matching", |r| {
        let g = any_graph(r);
        found(extract_from_matching(&g, 2, 2, 3), &g)
    }),
    ("find_skew_matching", |r| {
        let bp = any_bipartite(r);
        find_skew_matching(&bp, 2).ok().map(|sm| sm.verify(bp.graph()))
    }),
    ("extract_nd_bipartite", |r| {
        let bp = any_bipartite(r);
        found(extract_nd_bipartite(&bp, 2), bp.graph())
    }),
    ("extract_nd_general", |r| {
        let g = any_graph(r);
        found(extract_nd_general(&g, 2), &g)
    }),
    ("extract_vc", |r| {
        let g = any_graph(r);
        found(extract_vc(&g, 2).unwrap(), &g)
    }),
];

pub fn soundness() -> Outcome {
    let results: Vec<(&str, usize, usize)> = PROCEDURES
        .par_iter()
        .enumerate()
        .map(|(k, &(name, check))| {
            let mut r = rng(500 + k as u64);
            let (mut hits, mut bad) = (0, 0);
            for _ in 0..PER_PROCEDURE {
                match check(&mut r) {
                    Some(true) => hits += 1,
                    Some(false) => bad += 1,
                    None => {}
                }
            }
            (name, hits, bad)
        })
        .collect();
    let bad: usize = results.iter().map(|r| r.2).sum();
    let detail = results.iter().map(|(n, h, b)| format!("{n} {h}/{PER_PROCEDURE} found, {b} unsound")).collect::<Vec<_>>();
    Outcome::new(bad == 0, detail.join(", "))
}

/// Parts `0..d` holding the given neighbourhood masks over `d..d+t`.
fn from_masks(masks: &[u64], t: usize) -> Bipartition {
    let d = masks.len();
    let mut edges = Vec::new();
    for (x, &m) in masks.iter().enumerate() {
        edges.extend((0..t).filter(|&i| m >> i & 1 == 1).map(|i| (x, d + i)));
    }
    let g = Graph::from_edges(d + t, &edges).unwrap();
    Bipartition::new(g, VertexSet::full(d), VertexSet::full(d + t) - VertexSet::full(d)).unwrap()
}

fn skew_ok(bp: &Bipartition) -> bool {
    find_skew_matching(bp, 2).is_ok_and(|sm| sm.verify(bp.graph()) && sm.pairs.len() == 2)
}

pub fn skew_completeness() -> Outcome {
    const RANDOM: usize = 1000;
    // the other part has t <= 4 vertices; the first part is any family of at
    // least 8 distinct subsets of it
    let mut exhaustive = 0;
    let mut failures = 0;
    for t in 3..=4usize {
        let subsets = 1u64 << t;
        let families: Vec<u64> = (0..1u64 << subsets).filter(|f| f.count_ones() >= 8).collect();
        exhaustive += families.len();
        failures += families
            .par_iter()
            .filter(|&&fam| {
                let masks: Vec<u64> = (0..subsets).filter(|s| fam >> s & 1 == 1).collect();
                !skew_ok(&from_masks(&masks, t))
            })
            .count();
    }
    let mut r = rng(6);
    let mut random_failures = 0;
    for _ in 0..RANDOM {
        let t = r.gen_range(5..=8usize);
        let mut pool: Vec<u64> = (0..1u64 << t).collect();
        pool.shuffle(&mut r);
        let d = r.gen_range(8..=16);
        let mut masks: Vec<u64> = pool[..d].to_vec();
        // similar copies do not add distinguishable vertices
        for _ in 0..r.gen_range(0..=3) {
            let copy = masks[r.gen_range(0..d)];
            masks.push(copy);
        }
        if !skew_ok(&from_masks(&masks, t)) {
            random_failures += 1;
        }
    }
    Outcome::new(
        failures == 0 && random_failures == 0,
        format!("{failures} of {exhaustive} exhaustive and {random_failures} of {RANDOM} random instances fail"),
    )
}

fn matching_size(rows: &[u32], used: u32) -> usize {
    match rows.split_first() {
        None => 0,
        Some((&row, rest)) => {
            let mut best = matching_size(rest, used);
            let mut free = row & !used;
            while free != 0 && best <= rest.len() {
                let y = free.trailing_zeros();
                free &= free - 1;
                best = best.max(1 + matching_size(rest, used | 1 << y));
            }
            best
        }
    }
}

/// No induced `M_2`: rows pairwise nested. No induced `B_2`: rows pairwise
/// share at most one column.
fn avoids_both(rows: &[u32]) -> bool {
    rows.iter().enumerate().all(|(i, &p)| {
        rows[i + 1..].iter().all(|&q| (p & q == p || p & q == q) && (p & q).count_ones() <= 1)
    })
}

fn bipartition_of(rows: &[u32], b: usize) -> Bipartition {
    let masks: Vec<u64> = rows.iter().map(|&r| u64::from(r)).collect();
    from_masks(&masks, b)
}

pub fn matching_threshold() -> Outcome {
    const PARTS: usize = 5;
    const SAMPLE: usize = 20_000;
    // largest matching among graphs with neither pattern, parts a <= b <= 5
    let mut worst = 0;
    for a in 1..=PARTS {
        for b in a..=PARTS {
            let cells = a * b;
            let w = (0..1u64 << cells)
                .into_par_iter()
                .map(|mask| {
                    let rows: Vec<u32> = (0..a).map(|i| ((mask >> (i * b)) & ((1 << b) - 1)) as u32).collect();
                    if avoids_both(&rows) { matching_size(&rows, 0) } else { 0 }
                })
                .max()
                .unwrap_or(0);
            worst = worst.max(w);
        }
    }
    let q_hat = worst + 1;

    // every graph with parts <= 4, and a sample with parts of 5
    let mut checked = 0;
    let mut failures: Vec<String> = Vec::new();
    let mut consider = |bp: Bipartition| {
        if bipartite_matching_size(&bp) < q_hat {
            return;
        }
        debug_assert!(has_m2_or_b2(&bp));
        checked += 1;
        let e = extract_from_bipartite_matching(&bp, 2, 2);
        if !(e.is_found() && e.verify(bp.graph())) {
            failures.push(to_graph6(bp.graph()));
        }
    };
    for a in 1..=4 {
        for b in a..=4 {
            for mask in 0..1u64 << (a * b) {
                let rows: Vec<u32> = (0..a).map(|i| ((mask >> (i * b)) & ((1 << b) - 1)) as u32).collect();
                consider(bipartition_of(&rows, b));
            }
        }
    }
    let mut r = rng(7);
    for _ in 0..SAMPLE {
        let rows: Vec<u32> = (0..PARTS).map(|_| r.gen_range(0..1u32 << PARTS)).collect();
        consider(bipartition_of(&rows, PARTS));
    }
    let first = failures.first().cloned().unwrap_or_default();
    Outcome::new(
        failures.is_empty(),
        format!(
            "oracle threshold q = {q_hat}; {} of {checked} graphs with matching >= {q_hat} fail{}",
            failures.len(),
            if first.is_empty() { String::new() } else { format!(", first {first}") }
        ),
    )
}
