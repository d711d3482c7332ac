use hspeed_core::families::{Builtin, ClassSpec, Family, FamilyId};
use hspeed_core::speeds::{
    classify_layer, count_labelled, entropy_from_count, formula_count, index_of, layer_from_exclusions,
    nd_count_bound_check, Layer,
};

use super::common::index_brute;
use crate::Outcome;

/// Polynomial verdicts: `P_n <= POLY_C * n^POLY_D`.
const POLY_C: u128 = 2;
const POLY_D: u32 = 4;
/// Exponential verdicts: `P_n <= EXP_C * 2^(EXP_RATE * n)`.
const EXP_C: u128 = 4;
const EXP_RATE: usize = 2;
/// Positive-entropy verdicts: `log2(P_7) / 21 >= ENTROPY_MIN`.
const ENTROPY_MIN: f64 = 0.3;
const N_MAX: usize = 7;

fn family(f: Family) -> ClassSpec {
    ClassSpec::Builtin(Builtin::Family(FamilyId::new(f)))
}

fn choose(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

pub fn formulas() -> Outcome {
    let closed: [(Family, usize, fn(u128) -> u128); 5] = [
        (Family::S, 1, |n| (1 << n) - n),
        (Family::B, 1, |n| 1 << (n - 1)),
        (Family::Q, 1, |n| n * (1 << (n - 1)) - n * (n + 1) / 2 + 1),
        (Family::E1, 1, |n| choose(n, 2) + 1),
        (Family::R, 3, |n| n + 1),
    ];
    let mut mismatches = Vec::new();
    let mut checked = 0;
    for (f, from, expr) in closed {
        for n in from..=6 {
            let enumerated = count_labelled(&family(f), n).unwrap();
            let formula = formula_count(FamilyId::new(f), n).unwrap().value;
            checked += 1;
            if enumerated != expr(n as u128) || formula != enumerated {
                mismatches.push(format!("{f:?} n={n}: enumerated {enumerated}, closed form {}", expr(n as u128)));
            }
        }
    }
    let r2 = count_labelled(&family(Family::R), 2).unwrap();
    let detail = format!("{checked} values exact; R at n=2 enumerates to {r2} (formula gives 3, applies from n=3)");
    if mismatches.is_empty() { Outcome::new(true, detail) } else { Outcome::new(false, mismatches.join("; ")) }
}

pub fn factorial_bound() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for n in [4usize, 6] {
        let count = count_labelled(&family(Family::M), n).unwrap();
        let bound = factorial(n as u128 / 2);
        ok &= count >= bound;
        parts.push(format!("M_{n}: {count} >= {bound}"));
    }
    Outcome::new(ok, parts.join(", "))
}

pub fn index() -> Outcome {
    // K3, split obstructions, then K_{r+1} for r = 1, 2, 3
    let cases: [(&str, usize); 5] = [
        ("forbidden:Bw", 2),
        ("forbidden:4; 0-1 2-3,4; 0-1 1-2 2-3 0-3,5; 0-1 1-2 2-3 3-4 0-4", 2),
        ("forbidden:A_", 1),
        ("forbidden:Bw", 2),
        ("forbidden:C~", 3),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (text, expected) in cases {
        let spec: ClassSpec = text.parse().unwrap();
        let report = index_of(&spec).unwrap();
        let oracle = index_brute(spec.forbidden_graphs().unwrap());
        let entropy_ok = (report.entropy - (1.0 - 1.0 / expected as f64)).abs() < 1e-12;
        ok &= report.k == expected && oracle == expected && entropy_ok;
        parts.push(format!("{text}: k={} oracle={oracle} entropy={:.4}", report.k, report.entropy));
    }
    Outcome::new(ok, parts.join("; "))
}

/// Finitely forbidden classes with the verdict each must receive.
const CATALOGUE: [(&str, &str, Layer); 10] = [
    ("edgeless", "forbidden:A_", Layer::Constant),
    ("P3, co-P3", "forbidden:3; 0-1 1-2,3; 0-1", Layer::Constant),
    ("P3, 2K2, K3", "forbidden:3; 0-1 1-2,4; 0-1 2-3,Bw", Layer::Polynomial),
    ("P3, 2K2", "forbidden:3; 0-1 1-2,4; 0-1 2-3", Layer::Exponential),
    ("P3, K3", "forbidden:3; 0-1 1-2,Bw", Layer::SuperexponentialEntropyZero),
    ("K3, 2K2, C5", "forbidden:Bw,4; 0-1 2-3,5; 0-1 1-2 2-3 3-4 0-4", Layer::SuperexponentialEntropyZero),
    ("2K2, C4, P4", "forbidden:4; 0-1 2-3,4; 0-1 1-2 2-3 0-3,4; 0-1 1-2 2-3", Layer::SuperexponentialEntropyZero),
    ("K3", "forbidden:Bw", Layer::PositiveEntropy),
    ("2K2, C4, C5", "forbidden:4; 0-1 2-3,4; 0-1 1-2 2-3 0-3,5; 0-1 1-2 2-3 3-4 0-4", Layer::PositiveEntropy),
    ("K4", "forbidden:C~", Layer::PositiveEntropy),
];

fn growth_consistent(layer: Layer, counts: &[u128]) -> bool {
    let at = |n: usize| counts[n - 1];
    match layer {
        Layer::Constant => at(5) == at(6) && at(6) == at(7),
        Layer::Polynomial => (1..=N_MAX).all(|n| at(n) <= POLY_C * (n as u128).pow(POLY_D)),
        Layer::Exponential => (1..=N_MAX).all(|n| at(n) <= EXP_C << (EXP_RATE * n)),
        Layer::SuperexponentialEntropyZero => (1..=N_MAX).all(|n| at(n) >= factorial(n as u128 / 2)),
        Layer::PositiveEntropy => entropy_from_count(at(N_MAX), N_MAX).unwrap() >= ENTROPY_MIN,
    }
}

pub fn layers() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, text, expected) in CATALOGUE {
        let spec: ClassSpec = text.parse().unwrap();
        let verdict = classify_layer(&spec).unwrap();
        let counts: Vec<u128> = (1..=N_MAX).map(|n| count_labelled(&spec, n).unwrap()).collect();
        let consistent = growth_consistent(verdict.layer, &counts);
        let reproducible = layer_from_exclusions(&verdict.exclusions) == verdict.layer;
        let good = verdict.layer == expected && consistent && reproducible;
        ok &= good;
        if !good {
            parts.push(format!("{name}: {} (expected {expected}), counts {counts:?}", verdict.layer));
        }
    }
    let spread = CATALOGUE.iter().map(|c| c.2).collect::<std::collections::BTreeSet<_>>().len();
    ok &= spread == 5;
    if parts.is_empty() {
        parts.push(format!("{} classes over {spread} layers", CATALOGUE.len()));
    }
    Outcome::new(ok, parts.join("; "))
}

pub fn nd_bound() -> Outcome {
    let mut ok = true;
    let mut worst = String::new();
    for k in 1..=2 {
        for n in 1..=N_MAX {
            let r = nd_count_bound_check(k, n).unwrap();
            ok &= r.holds();
            if n == N_MAX {
                worst.push_str(&format!("k={k}, n={n}: {} <= {}; ", r.enumerated, r.bound));
            }
        }
    }
    Outcome::new(ok, worst.trim_end_matches("; ").to_string())
}
