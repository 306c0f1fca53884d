use ckform::catalog::Catalog;
use ckform::forms::Reductive;
use ckform::linalg::{ratio, Rat};
use ckform::report::RunReport;
use ckform::roots::{RootSystem, RootType};
use ckform::verdict::{EmbeddingDescriptor, EmbeddingKind, Engine, Outcome, TripleSpec};
use proptest::prelude::*;
use serde_json::json;

fn label() -> impl Strategy<Value = (RootType, usize)> {
    prop_oneof![
        (1usize..=4).prop_map(|r| (RootType::A, r)),
        (2usize..=4).prop_map(|r| (RootType::B, r)),
        (3usize..=4).prop_map(|r| (RootType::C, r)),
        Just((RootType::D, 4)),
        Just((RootType::F, 4)),
        Just((RootType::G, 2)),
        (1usize..=4).prop_map(|r| (RootType::BC, r)),
    ]
}

fn coords(rank: usize) -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec((-12i64..=12, 1i64..=12).prop_map(|(n, d)| ratio(n, d)), rank)
}

fn system_and_pair() -> impl Strategy<Value = (RootSystem, Vec<Rat>, Vec<Rat>, i64)> {
    label().prop_flat_map(|(k, r)| {
        let rs = RootSystem::build(k, r).unwrap();
        (Just(rs), coords(r), coords(r), prop_oneof![1i64..=7, -7i64..=-1])
    })
}

const PAIRS: &[(&str, &str)] = &[
    ("sl(3,R)", "sl(2,R)"),
    ("sl(4,R)", "sp(2,R)"),
    ("so(4,4)", "so(3,4)"),
    ("so(3,4)", "g2(2)"),
    ("su(2,4)", "sp(1,2)"),
    ("su(3,4)", "su(2,3)"),
    ("so(2,6)", "so(1,6)"),
    ("e6(6)", "f4(4)"),
    ("sp(2,5)", "sp(1,4)"),
];

const LS: &[&str] = &["su(1,4)", "so(1,4)", "sl(2,R)", "so(3)", "so(1,8)*so(2)", "sp(1,2)"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cover_is_false_and_scale_invariant((rs, x, h, c) in system_and_pair()) {
        prop_assume!(x.iter().any(|v| *v != Rat::from_integer(0.into())));
        prop_assume!(h.iter().any(|v| *v != Rat::from_integer(0.into())));
        let xv = rs.from_coweight_coords(&x).unwrap();
        let hv = rs.from_coweight_coords(&h).unwrap();
        let scaled: Vec<Rat> = x.iter().map(|v| v * Rat::from_integer(c.into())).collect();
        let sv = rs.from_coweight_coords(&scaled).unwrap();
        let base = rs.cover_check(&xv, &hv).unwrap();
        prop_assert!(!base);
        prop_assert_eq!(base, rs.cover_check(&sv, &hv).unwrap());
        prop_assert_eq!(rs.vanishing_set(&xv).len(), rs.vanishing_set(&sv).len());
    }

    #[test]
    fn restricted_systems_are_negation_symmetric(i in 0usize..1000) {
        let cat = Catalog::builtin();
        let with_sigma: Vec<_> = cat.entries().iter().filter(|d| d.sigma.is_some()).collect();
        let d = with_sigma[i % with_sigma.len()];
        let sys = d.restricted_system().unwrap();
        for (r, m) in sys.multiplicities() {
            prop_assert_eq!(sys.mult(&r.neg()), Some(*m), "{}", d.name);
        }
    }

    #[test]
    fn adding_l_never_rescues_a_negative(pair in 0usize..PAIRS.len(), l in 0usize..LS.len(), w in 0usize..2) {
        let engine = Engine::new(Catalog::builtin());
        let (g, h) = PAIRS[pair];
        let emb = if w == 1 && g.starts_with("su(3") {
            EmbeddingDescriptor::witness(vec![ratio(0, 1), ratio(0, 1), ratio(1, 1)], Some("su(2,3)"))
        } else {
            EmbeddingDescriptor::new(EmbeddingKind::Unspecified)
        };
        let without = engine.classify(&TripleSpec::parse(g, h, emb.clone(), None).unwrap()).unwrap();
        let with = engine.classify(&TripleSpec::parse(g, h, emb, Some(LS[l])).unwrap()).unwrap();
        if without.outcome == Outcome::NoStandard {
            prop_assert_eq!(with.outcome, Outcome::NoStandard);
        }
        for v in [&without, &with] {
            match v.outcome {
                Outcome::NoStandard => prop_assert!(matches!(v.deciding_rule(), Some("R2" | "R3" | "R4"))),
                Outcome::AdmitsStandard => prop_assert!(matches!(v.deciding_rule(), Some("R0" | "R1"))),
                Outcome::Unknown => prop_assert_eq!(v.deciding_rule(), None),
            }
            if v.outcome != Outcome::Unknown {
                prop_assert!(v.trace.iter().filter(|s| s.fired).all(|s| !s.citations.is_empty()));
            }
        }
    }

    #[test]
    fn report_round_trips(rows in prop::collection::vec((any::<u32>(), "[ -~]{0,24}", any::<bool>()), 0..8)) {
        let mut r = RunReport::new("verdict", json!({ "file": "x.triples" }));
        for (n, s, b) in &rows {
            r.push(&json!({ "line": n, "detail": s, "fired": b }));
        }
        let back = RunReport::from_lines(&r.to_lines()).unwrap();
        prop_assert_eq!(back, r);
    }
}

#[test]
fn table_one_closure() {
    let cat = Catalog::builtin();
    let engine = Engine::new(cat);
    for inst in cat.table_instances(3) {
        let spec = TripleSpec::parse(&inst.g, &inst.h, EmbeddingDescriptor::table_row(inst.row, Some(inst.n)), Some(&inst.l));
        let g_key = ckform::forms::FormKey::parse(&inst.g);
        if g_key.is_err() {
            // so(2,2) at n = 1 is not simple; it is rejected at parse time.
            assert!(matches!(inst.row, 3 | 4) && inst.n == 1, "row {} n={}", inst.row, inst.n);
            continue;
        }
        let v = engine.classify(&spec.unwrap()).unwrap();
        assert_eq!(v.outcome, Outcome::AdmitsStandard, "row {} n={}", inst.row, inst.n);
        let h = Reductive::parse(&inst.h).unwrap();
        let l = Reductive::parse(&inst.l).unwrap();
        assert!(engine.dimension_condition(&g_key.unwrap(), &h, &l).unwrap().holds);
    }
}
