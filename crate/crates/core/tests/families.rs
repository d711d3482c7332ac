use hspeed_core::families::{
    check_universality, class_contains_family, generate, members_up_to_iso, Builtin, ClassSpec, Family, FamilyId,
};
use hspeed_core::graph::{contains_induced, to_graph6};
use hspeed_core::{Graph, VertexSet};

/// Families whose generator on `n` vertices-per-index holds every `n`-vertex
/// member of the class.
const UNIVERSAL: [Family; 10] = [
    Family::S,
    Family::Q,
    Family::B,
    Family::M,
    Family::Z,
    Family::Mbc,
    Family::Mstar,
    Family::Zstar,
    Family::W,
    Family::D,
];

fn ids() -> impl Iterator<Item = FamilyId> {
    Family::ALL.into_iter().flat_map(|f| [FamilyId::new(f), FamilyId::co(f)])
}

#[test]
fn generators_are_universal_at_small_orders() {
    for f in UNIVERSAL {
        for n in 1..=4 {
            for id in [FamilyId::new(f), FamilyId::co(f)] {
                let report = check_universality(id, n).unwrap();
                assert!(report.passed, "{id} at {n}: {:?}", report.failures);
            }
        }
    }
}

#[test]
fn generated_graphs_grow_by_induced_inclusion() {
    for id in ids() {
        for n in 1..=4 {
            let small = generate(id, n).unwrap();
            let big = generate(id, n + 1).unwrap();
            if big.n() > 20 {
                continue;
            }
            assert!(contains_induced(&big, &small), "{id}: {n} -> {}", n + 1);
        }
    }
}

#[test]
fn classes_are_hereditary_on_generated_members() {
    for id in ids() {
        let g = generate(id, 3).unwrap();
        assert!(id.contains(&g), "{id} rejects its own generator");
        if g.n() > 12 {
            continue;
        }
        for bits in 0..1u64 << g.n() {
            let h = g.induced(VertexSet::from_bits(bits)).unwrap();
            assert!(id.contains(&h), "{id}: induced {} rejected", to_graph6(&h));
        }
    }
}

/// Two routes to "Free(F) contains the family's class": membership of each
/// forbidden graph in the class, and embedding it into a generator large
/// enough to be universal for its order.
#[test]
fn containment_routes_agree() {
    let forbidden: Vec<Graph> = (1..=4).flat_map(|n| members_up_to_iso(|_| true, n).unwrap()).collect();
    for f in UNIVERSAL {
        for id in [FamilyId::new(f), FamilyId::co(f)] {
            for h in &forbidden {
                let spec = ClassSpec::forbidden(vec![h.clone()]).unwrap();
                let by_membership = class_contains_family(&spec, id).unwrap();
                let host = generate(id, h.n()).unwrap();
                let by_embedding = !contains_induced(&host, h);
                assert_eq!(by_membership, by_embedding, "{id} vs {}", to_graph6(h));
            }
        }
    }
}

#[test]
fn builtin_families_match_recognisers() {
    let spec: ClassSpec = "family:co-z".parse().unwrap();
    assert_eq!(spec, ClassSpec::Builtin(Builtin::Family(FamilyId::co(Family::Z))));
    let z3 = generate(FamilyId::co(Family::Z), 3).unwrap();
    assert!(spec.is_member(&z3).unwrap());
    // the complement of co-Z_3 has a triangle, so it is not a chain graph's complement
    assert!(!spec.is_member(&z3.complement()).unwrap());
}
