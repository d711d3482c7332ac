use hspeed_core::families::{check_universality, Family, FamilyId};
use hspeed_core::parameters::{vc_closed, vc_open};
use hspeed_core::Graph;
use rayon::prelude::*;

use super::common::{random_graph, rng};
use crate::Outcome;

pub fn universality() -> Outcome {
    let mut suites: Vec<(Family, usize)> = vec![(Family::Z, 4), (Family::Z, 5), (Family::W, 3), (Family::W, 4), (Family::Zstar, 4)];
    for f in [Family::S, Family::Q, Family::B, Family::M] {
        suites.extend((1..=6).map(|n| (f, n)));
    }
    let mut failures = Vec::new();
    let mut members = 0;
    for &(f, n) in &suites {
        let report = check_universality(FamilyId::new(f), n).unwrap();
        members += report.members_checked;
        if !report.passed {
            failures.push(format!("{f:?}_{n}: {:?}", report.failures));
        }
    }
    if failures.is_empty() {
        Outcome::new(true, format!("{} suites, {members} isomorphism classes embedded", suites.len()))
    } else {
        Outcome::new(false, failures.join("; "))
    }
}

fn sandwiched(g: &Graph) -> bool {
    let (open, _) = vc_open(g).unwrap();
    let (closed, _) = vc_closed(g).unwrap();
    open <= closed && closed <= open * (open + 1) + 1
}

pub fn vc_sandwich() -> Outcome {
    const RANDOM: usize = 500;
    let bad_exhaustive = (0..1u64 << 15)
        .into_par_iter()
        .filter(|&mask| !sandwiched(&Graph::from_pair_mask(6, mask)))
        .count();
    let mut r = rng(4);
    let randoms: Vec<Graph> = (0..RANDOM).map(|i| random_graph(&mut r, 12, [0.2, 0.5, 0.8][i % 3])).collect();
    let bad_random = randoms.par_iter().filter(|g| !sandwiched(g)).count();
    Outcome::new(
        bad_exhaustive == 0 && bad_random == 0,
        format!("{bad_exhaustive} of 32768 six-vertex and {bad_random} of {RANDOM} random 12-vertex graphs violate"),
    )
}
