//! Property tests for component similarity, pair measures and prediction.

use neutrorec::algebra::{LabeledNSet, NrsRecord, Triple};
use neutrorec::prediction::{
    cumulative_sum_gap, predict_labels, predict_triple, recommend_1, recommend_2, score, NeighborWeight, Recommendation,
    WeightMode,
};
use neutrorec::similarity::{
    component_similarity, pair_measure, similarity_matrix, Measure, MeasureKind, SimilarityComponents,
};
use proptest::prelude::*;

fn triple() -> impl Strategy<Value = Triple> {
    (0.0..=1.0f64, 0.0..=1.0f64, 0.0..=1.0f64).prop_map(|(t, i, f)| Triple::new(t, i, f).unwrap())
}

fn set_of(ts: &[Triple], prefix: &str) -> LabeledNSet {
    LabeledNSet::new(ts.iter().enumerate().map(|(k, t)| (format!("{prefix}{k}"), *t)).collect()).unwrap()
}

fn aligned_sets(n: usize) -> impl Strategy<Value = (LabeledNSet, LabeledNSet)> {
    (prop::collection::vec(triple(), n), prop::collection::vec(triple(), n)).prop_map(|(a, b)| (set_of(&a, "l"), set_of(&b, "l")))
}

fn components() -> impl Strategy<Value = SimilarityComponents> {
    (0.0..=1.0f64, 0.0..=1.0f64, 0.0..=1.0f64).prop_map(|(x, y, d)| SimilarityComponents::complete(x, y, d).unwrap())
}

fn record(nx: usize, ny: usize, nd: usize) -> impl Strategy<Value = NrsRecord> {
    (
        prop::collection::vec(triple(), nx),
        prop::collection::vec(triple(), ny),
        prop::collection::vec(triple(), nd),
    )
        .prop_map(|(x, y, d)| NrsRecord::new(set_of(&x, "x"), set_of(&y, "y"), vec![set_of(&d, "L")]).unwrap())
}

fn neighbors() -> impl Strategy<Value = Vec<(NeighborWeight, Triple)>> {
    prop::collection::vec((0.01..5.0f64, triple()), 1..12).prop_map(|v| {
        v.into_iter()
            .enumerate()
            .map(|(index, (weight, t))| (NeighborWeight { index, weight }, t))
            .collect()
    })
}

/// Sorts each component independently so `a ≤ b ≤ c` in the containment order.
fn ordered_chain(xs: [Triple; 3]) -> [Triple; 3] {
    let mut t = xs.map(|x| x.t());
    let mut i = xs.map(|x| x.i());
    let mut f = xs.map(|x| x.f());
    t.sort_by(f64::total_cmp);
    i.sort_by(|a, b| b.total_cmp(a));
    f.sort_by(|a, b| b.total_cmp(a));
    [0, 1, 2].map(|k| Triple::new(t[k], i[k], f[k]).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn component_similarity_range_symmetry_identity((a, b) in (1usize..6).prop_flat_map(aligned_sets)) {
        let s = component_similarity(&a, &b).unwrap();
        prop_assert!((0.0..=1.0).contains(&s));
        prop_assert_eq!(s, component_similarity(&b, &a).unwrap());
        prop_assert_eq!(component_similarity(&a, &a).unwrap(), 0.0);
        if a != b {
            prop_assert!(s > 0.0);
        }
    }

    #[test]
    fn component_similarity_is_monotone_along_chains(chains in prop::collection::vec(prop::array::uniform3(triple()), 1..5)) {
        let chains: Vec<[Triple; 3]> = chains.into_iter().map(ordered_chain).collect();
        let at = |k: usize| set_of(&chains.iter().map(|c| c[k]).collect::<Vec<_>>(), "l");
        let (a, b, c) = (at(0), at(1), at(2));
        let ac = component_similarity(&a, &c).unwrap();
        prop_assert!(ac >= component_similarity(&a, &b).unwrap());
        prop_assert!(ac >= component_similarity(&b, &c).unwrap());
    }

    #[test]
    fn pair_measures_ignore_record_order(r1 in record(2, 2, 3), r2 in record(2, 2, 3)) {
        let c12 = SimilarityComponents::between(&r1, &r2).unwrap();
        let c21 = SimilarityComponents::between(&r2, &r1).unwrap();
        prop_assert_eq!(c12, c21);
        for m in Measure::ALL {
            let k = MeasureKind::plain(m);
            prop_assert_eq!(pair_measure(k, c12).unwrap(), pair_measure(k, c21).unwrap());
        }
    }

    #[test]
    fn matrices_are_symmetric_and_in_range(rows in prop::collection::vec(components(), 1..8)) {
        for (m, lo, hi) in [
            (Measure::Eq60, 0.0, 1.0),
            (Measure::Eq65, 0.0, 2.0),
            (Measure::Eq67, 0.0, 1.0),
            (Measure::Eq71, -2.0, 2.0),
        ] {
            let mat = similarity_matrix(MeasureKind::plain(m), &rows).unwrap();
            for i in 0..rows.len() {
                for j in 0..rows.len() {
                    let v = mat.values[i][j];
                    prop_assert_eq!(v, mat.values[j][i]);
                    prop_assert!((lo..=hi).contains(&v), "{} [{i}][{j}] = {v}", m.name());
                }
            }
        }
    }

    #[test]
    fn predicted_components_are_convex_combinations(n in neighbors()) {
        let p = predict_triple(&n).unwrap();
        let span = |g: fn(&Triple) -> f64| {
            let vs: Vec<f64> = n.iter().map(|(_, t)| g(t)).collect();
            (vs.iter().copied().fold(f64::INFINITY, f64::min), vs.iter().copied().fold(f64::NEG_INFINITY, f64::max))
        };
        let eps = 1e-12;
        let inside = |v: f64, (lo, hi): (f64, f64)| v >= lo - eps && v <= hi + eps;
        prop_assert!(inside(p.t, span(Triple::t)));
        prop_assert!(inside(p.i - p.t, span(Triple::i)));
        prop_assert!(inside(p.f - p.i, span(Triple::f)));
    }

    #[test]
    fn cumulative_sum_identity(n in neighbors()) {
        let p = predict_triple(&n).unwrap();
        prop_assert!(cumulative_sum_gap(&p, &n).unwrap() <= 1e-12);
    }

    #[test]
    fn selectors_ignore_uniform_rescaling(ts in prop::collection::vec(triple(), 1..8), scale in 0.001..1000.0f64) {
        let set = set_of(&ts, "L");
        for (variant, pick) in [(Recommendation::One, recommend_1(&set)), (Recommendation::Two, recommend_2(&set))] {
            let scaled: Vec<f64> = set.triples().map(|h| scale * score(variant, h)).collect();
            let mut best = 0;
            for (k, s) in scaled.iter().enumerate() {
                if *s > scaled[best] {
                    best = k;
                }
            }
            prop_assert_eq!(best, pick);
        }
    }

    #[test]
    fn prediction_ignores_corpus_order(
        query in record(2, 2, 3),
        corpus in prop::collection::vec(record(2, 2, 3), 2..7),
        rotate in 0usize..7,
    ) {
        let kind = MeasureKind::plain(Measure::Eq65);
        let mut shuffled = corpus.clone();
        shuffled.reverse();
        let len = shuffled.len();
        shuffled.rotate_left(rotate % len);
        let a = predict_labels(&query, &corpus, kind, WeightMode::Inverted).unwrap();
        let b = predict_labels(&query, &shuffled, kind, WeightMode::Inverted).unwrap();
        for (p, q) in a.iter().zip(&b) {
            prop_assert_eq!(&p.label, &q.label);
            prop_assert!((p.triple.t - q.triple.t).abs() <= 1e-12);
            prop_assert!((p.triple.i - q.triple.i).abs() <= 1e-12);
            prop_assert!((p.triple.f - q.triple.f).abs() <= 1e-12);
        }
    }
}

#[test]
fn identical_corpus_degenerates_as_stated_and_is_cumulative_inverted() {
    let t = Triple::new(0.3, 0.2, 0.4).unwrap();
    let rec = NrsRecord::new(set_of(&[t], "x"), set_of(&[t], "y"), vec![set_of(&[t, t], "L")]).unwrap();
    let corpus = vec![rec.clone(), rec.clone(), rec.clone()];
    let kind = MeasureKind::plain(Measure::Eq65);
    assert!(matches!(
        predict_labels(&rec, &corpus, kind, WeightMode::AsStated),
        Err(neutrorec::Error::DegenerateNeighborhood)
    ));
    for p in predict_labels(&rec, &corpus, kind, WeightMode::Inverted).unwrap() {
        assert!((p.triple.t - 0.3).abs() < 1e-12);
        assert!((p.triple.i - 0.5).abs() < 1e-12);
        assert!((p.triple.f - 0.9).abs() < 1e-12);
    }
}
