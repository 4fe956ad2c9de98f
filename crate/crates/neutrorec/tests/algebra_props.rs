//! Property tests for triple operations and the law audit.

use neutrorec::algebra::{combine_sets, nrs_combine, ComplementForm, LabeledNSet, NrsRecord, OpKind, Triple};
use neutrorec::audit::{check_law, LawId};
use proptest::prelude::*;

const TOL: f64 = 1e-12;

fn unit() -> impl Strategy<Value = f64> {
    prop_oneof![3 => 0.0..=1.0f64, 1 => prop::sample::select(vec![0.0, 0.5, 1.0])]
}

fn triple() -> impl Strategy<Value = Triple> {
    (unit(), unit(), unit()).prop_map(|(t, i, f)| Triple::new(t, i, f).unwrap())
}

fn in_unit(t: Triple) -> bool {
    t.components().iter().all(|v| (0.0..=1.0).contains(v))
}

fn symmetric_kinds(lambda: f64) -> Vec<OpKind> {
    vec![
        OpKind::Union,
        OpKind::Intersection,
        OpKind::ProbSum,
        OpKind::BoldSum,
        OpKind::BoldIntersection,
        OpKind::SymDiff,
        OpKind::convex(lambda).unwrap(),
        OpKind::CartProdAlgebraic,
        OpKind::CartProdMinmax,
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn commutative(a in triple(), b in triple(), lambda in 0.0..=1.0f64) {
        for k in symmetric_kinds(lambda) {
            prop_assert_eq!(k.apply(a, b).unwrap(), k.apply(b, a).unwrap(), "{}", k.name());
        }
    }

    #[test]
    fn associative(a in triple(), b in triple(), c in triple()) {
        for k in [OpKind::Union, OpKind::Intersection, OpKind::ProbSum, OpKind::BoldSum] {
            let l = k.apply(k.apply(a, b).unwrap(), c).unwrap();
            let r = k.apply(a, k.apply(b, c).unwrap()).unwrap();
            prop_assert!(l.approx_eq(r, TOL), "{}: {l} vs {r}", k.name());
        }
    }

    #[test]
    fn absorption_and_distributivity(a in triple(), b in triple(), c in triple()) {
        prop_assert_eq!(a.union(a.intersection(b)), a);
        prop_assert_eq!(a.intersection(a.union(b)), a);
        prop_assert_eq!(a.intersection(b.union(c)), a.intersection(b).union(a.intersection(c)));
        prop_assert_eq!(a.union(b.intersection(c)), a.union(b).intersection(a.union(c)));
    }

    #[test]
    fn identities(a in triple()) {
        prop_assert_eq!(a.union(Triple::BOTTOM), a);
        prop_assert_eq!(a.intersection(Triple::TOP), a);
        prop_assert!(a.leq(Triple::TOP) && Triple::BOTTOM.leq(a));
    }

    #[test]
    fn closure(a in triple(), b in triple(), lambda in 0.0..=1.0f64) {
        for k in symmetric_kinds(lambda).into_iter().chain([OpKind::BoundedDiff]) {
            prop_assert!(in_unit(k.apply(a, b).unwrap()), "{}", k.name());
        }
        for form in ComplementForm::ALL {
            prop_assert!(in_unit(a.complement_with(form)));
        }
    }

    #[test]
    fn involution(a in triple()) {
        for form in ComplementForm::ALL {
            let twice = match form {
                // The rotation needs three applications.
                ComplementForm::Cyclic => a.complement_with(form).complement_with(form).complement_with(form),
                _ => a.complement_with(form).complement_with(form),
            };
            prop_assert!(twice.approx_eq(a, TOL), "{}", form.name());
        }
    }

    #[test]
    fn de_morgan(a in triple(), b in triple()) {
        let l = a.union(b).complement();
        let r = a.complement().intersection(b.complement());
        prop_assert!(l.approx_eq(r, TOL));
        let l = a.intersection(b).complement();
        let r = a.complement().union(b.complement());
        prop_assert!(l.approx_eq(r, TOL));
    }

    #[test]
    fn leq_is_a_partial_order(a in triple(), b in triple()) {
        prop_assert!(a.leq(a));
        if a.leq(b) && b.leq(a) {
            prop_assert_eq!(a, b);
        }
        prop_assert!(a.intersection(b).leq(a) && a.leq(a.union(b)));
    }

    #[test]
    fn bounded_diff_of_a_record_with_itself_is_zero(ts in prop::collection::vec(triple(), 1..5)) {
        let set = LabeledNSet::new(ts.iter().enumerate().map(|(k, t)| (format!("l{k}"), *t)).collect()).unwrap();
        let r = NrsRecord::new(set.clone(), set.clone(), vec![set]).unwrap();
        let z = nrs_combine(OpKind::BoundedDiff, &r, &r).unwrap();
        prop_assert!(z.x.triples().chain(z.y.triples()).chain(z.d[0].triples()).all(|t| t == Triple::ZERO));
    }

    #[test]
    fn join_family_fills_missing_labels_with_bottom(a in triple(), b in triple()) {
        let l = LabeledNSet::new(vec![("p".into(), a)]).unwrap();
        let r = LabeledNSet::new(vec![("q".into(), b)]).unwrap();
        let u = combine_sets(OpKind::Union, &l, &r, "x").unwrap();
        prop_assert_eq!(u.get("p"), Some(a));
        prop_assert_eq!(u.get("q"), Some(b));
        prop_assert!(combine_sets(OpKind::Intersection, &l, &r, "x").is_err());
    }

    #[test]
    fn audit_is_deterministic(seed in any::<u64>(), k in 0..LawId::ALL.len()) {
        let law = LawId::ALL[k];
        prop_assert_eq!(check_law(law, 50, seed), check_law(law, 50, seed));
    }
}
