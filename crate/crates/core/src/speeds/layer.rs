use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{generate, in_partition_class, Builtin, ClassSpec, Family, FamilyId};
use crate::graph::{to_graph6, Bipartition, Graph};

/// The largest `i + j` such that the class contains every graph made of at
/// most `i` independent sets and `j` cliques.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct IndexReport {
    pub k: usize,
    pub i: usize,
    pub j: usize,
    /// `1 - 1/k`, or 0 when `k <= 1`.
    pub entropy: f64,
}

pub fn entropy_of_index(k: usize) -> f64 {
    if k <= 1 { 0.0 } else { 1.0 - 1.0 / k as f64 }
}

/// Index of a finitely forbidden class. `E(i, j)` lies in `Free(F)` exactly
/// when no `H` in `F` splits into `i` independent sets and `j` cliques.
pub fn index_of(spec: &ClassSpec) -> Result<IndexReport> {
    let forbidden = spec
        .forbidden_graphs()
        .ok_or_else(|| Error::Precondition("the index is computed for forbidden-set classes".into()))?;
    if forbidden.is_empty() {
        return Err(Error::EmptyForbiddenSet);
    }
    let vmax = forbidden.iter().map(Graph::n).max().expect("non-empty");
    let mut best = (0, 0);
    for total in 1..=vmax + 1 {
        for i in (0..=total).rev() {
            let j = total - i;
            let mut excluded = true;
            for h in forbidden {
                if in_partition_class(h, i, j)? {
                    excluded = false;
                    break;
                }
            }
            if excluded {
                best = (i, j);
                break;
            }
        }
    }
    let k = best.0 + best.1;
    Ok(IndexReport { k, i: best.0, j: best.1, entropy: entropy_of_index(k) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Layer {
    Constant,
    Polynomial,
    Exponential,
    #[serde(rename = "superexponential-entropy-0")]
    SuperexponentialEntropyZero,
    PositiveEntropy,
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Layer::Constant => "constant",
            Layer::Polynomial => "polynomial",
            Layer::Exponential => "exponential",
            Layer::SuperexponentialEntropyZero => "superexponential-entropy-0",
            Layer::PositiveEntropy => "positive-entropy",
        })
    }
}

/// A minimal class tested at one step of the chain. For the last step `W`,
/// co-`W` and `D` stand for the bipartite, co-bipartite and split classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Exclusion {
    pub class: FamilyId,
    /// graph6 of the forbidden graph lying in `class`, or of the family
    /// member found outside the class for evidence-only verdicts.
    pub witness: Option<String>,
}

impl Exclusion {
    pub fn excluded(&self) -> bool {
        self.witness.is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LayerVerdict {
    pub layer: Layer,
    pub index: Option<IndexReport>,
    /// One entry per minimal class examined, step by step.
    pub exclusions: Vec<Exclusion>,
    pub evidence_only: bool,
}

const CONSTANT: [FamilyId; 4] =
    [FamilyId::new(Family::R), FamilyId::co(Family::R), FamilyId::new(Family::E1), FamilyId::co(Family::E1)];

const POLYNOMIAL: [FamilyId; 8] = [
    FamilyId::new(Family::B),
    FamilyId::new(Family::S),
    FamilyId::new(Family::Q),
    FamilyId::new(Family::M),
    FamilyId::co(Family::B),
    FamilyId::co(Family::S),
    FamilyId::co(Family::Q),
    FamilyId::co(Family::M),
];

const EXPONENTIAL: [FamilyId; 9] = [
    FamilyId::new(Family::M),
    FamilyId::new(Family::Mbc),
    FamilyId::new(Family::Z),
    FamilyId::co(Family::M),
    FamilyId::co(Family::Mbc),
    FamilyId::co(Family::Z),
    FamilyId::new(Family::Mstar),
    FamilyId::co(Family::Mstar),
    FamilyId::new(Family::Zstar),
];

const ENTROPY_ZERO: [FamilyId; 3] = [FamilyId::new(Family::W), FamilyId::co(Family::W), FamilyId::new(Family::D)];

/// The chain of minimal classes, each step paired with the layer reached
/// when all of its classes are excluded.
pub const CHAIN: [(&[FamilyId], Layer); 4] = [
    (&CONSTANT, Layer::Constant),
    (&POLYNOMIAL, Layer::Polynomial),
    (&EXPONENTIAL, Layer::Exponential),
    (&ENTROPY_ZERO, Layer::SuperexponentialEntropyZero),
];

/// Order of the family member used as evidence for builtin classes.
pub const EVIDENCE_MAX_VERTICES: usize = 12;

fn in_minimal_class(class: FamilyId, h: &Graph) -> bool {
    match (class.family, class.complemented) {
        (Family::W, false) => Bipartition::from_graph(h).is_some(),
        (Family::W, true) => Bipartition::from_graph(&h.complement()).is_some(),
        (Family::D, _) => Builtin::Split.contains(h).unwrap_or(false),
        _ => class.contains(h),
    }
}

/// The largest member of the family with at most
/// [`EVIDENCE_MAX_VERTICES`] vertices.
fn evidence_member(class: FamilyId) -> Result<Graph> {
    let n = (1..=EVIDENCE_MAX_VERTICES)
        .take_while(|&k| class.family.order(k).is_some_and(|o| o <= EVIDENCE_MAX_VERTICES))
        .last()
        .unwrap_or(1);
    generate(class, n)
}

/// Layer of the class by the minimal-class chain. Forbidden-set classes get
/// an exact verdict; builtin classes are judged by whether one large member
/// of each minimal family belongs to them, which is marked evidence-only.
pub fn classify_layer(spec: &ClassSpec) -> Result<LayerVerdict> {
    let mut exclusions = Vec::new();
    for (classes, layer) in CHAIN {
        let mut all = true;
        for &class in classes {
            let witness = match spec {
                ClassSpec::Forbidden(f) => f.iter().find(|h| in_minimal_class(class, h)).map(to_graph6),
                ClassSpec::Builtin(_) => {
                    let member = evidence_member(class)?;
                    (!spec.is_member(&member)?).then(|| to_graph6(&member))
                }
            };
            all &= witness.is_some();
            exclusions.push(Exclusion { class, witness });
        }
        if all {
            return Ok(LayerVerdict { layer, index: None, exclusions, evidence_only: spec.forbidden_graphs().is_none() });
        }
    }
    let index = match spec {
        ClassSpec::Forbidden(_) => Some(index_of(spec)?),
        ClassSpec::Builtin(_) => None,
    };
    Ok(LayerVerdict { layer: Layer::PositiveEntropy, index, exclusions, evidence_only: spec.forbidden_graphs().is_none() })
}

/// Recomputes the layer from the recorded exclusions alone.
pub fn layer_from_exclusions(exclusions: &[Exclusion]) -> Layer {
    let mut rest = exclusions;
    for (classes, layer) in CHAIN {
        let (step, tail) = rest.split_at(classes.len().min(rest.len()));
        if step.len() == classes.len() && step.iter().all(Exclusion::excluded) {
            return layer;
        }
        rest = tail;
    }
    Layer::PositiveEntropy
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> ClassSpec {
        s.parse().unwrap()
    }

    #[test]
    fn index_examples() {
        let k3 = index_of(&spec("forbidden:Bw")).unwrap();
        assert_eq!((k3.k, k3.i, k3.j), (2, 2, 0));
        assert!((k3.entropy - 0.5).abs() < 1e-12);
        let split = index_of(&spec("forbidden:4; 0-1 2-3,4; 0-1 1-2 2-3 0-3,5; 0-1 1-2 2-3 3-4 0-4")).unwrap();
        assert_eq!((split.k, split.i, split.j), (2, 1, 1));
        let k2 = index_of(&spec("forbidden:A_")).unwrap();
        assert_eq!(k2.k, 1);
        assert_eq!(k2.entropy, 0.0);
        assert!(index_of(&spec("builtin:split")).is_err());
    }

    #[test]
    fn layer_examples() {
        let edgeless = classify_layer(&spec("forbidden:A_")).unwrap();
        assert_eq!(edgeless.layer, Layer::Constant);
        assert_eq!(layer_from_exclusions(&edgeless.exclusions), Layer::Constant);

        let k3 = classify_layer(&spec("forbidden:Bw")).unwrap();
        assert_eq!(k3.layer, Layer::PositiveEntropy);
        assert_eq!(k3.index.unwrap().k, 2);
        assert_eq!(layer_from_exclusions(&k3.exclusions), Layer::PositiveEntropy);
        assert!(!k3.evidence_only);

        // P3 and its complement: disjoint cliques that are also complete multipartite
        let v = classify_layer(&spec("forbidden:3; 0-1 1-2,3; 0-1")).unwrap();
        assert!(v.layer <= Layer::Polynomial);
    }

    #[test]
    fn builtin_evidence() {
        let v = classify_layer(&spec("builtin:split")).unwrap();
        assert!(v.evidence_only);
        assert_eq!(v.layer, Layer::PositiveEntropy);
        let v = classify_layer(&spec("family:s")).unwrap();
        assert_eq!(v.layer, Layer::Exponential);
    }
}
