//! Similarity-weighted prediction of rating triples and the label selectors.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{LabeledNSet, NrsRecord, Triple};
use crate::error::{Error, Result};
use crate::similarity::{component_similarity, measure_value, MeasureKind, SimilarityComponents};

/// A predicted `(T', I', F')`. `I'` and `F'` accumulate the earlier
/// components, so they may exceed 1 (up to 2 and 3).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PredictedTriple {
    pub t: f64,
    pub i: f64,
    pub f: f64,
}

impl PredictedTriple {
    /// Clamps into a valid triple; the flag reports whether anything moved.
    pub fn clamp(&self) -> (Triple, bool) {
        let inside = |v: f64| (0.0..=1.0).contains(&v);
        let moved = !(inside(self.t) && inside(self.i) && inside(self.f));
        let t = Triple::clamped(self.t, self.i, self.f).unwrap_or(Triple::BOTTOM);
        (t, moved)
    }

    pub fn sum(&self) -> f64 {
        self.t + self.i + self.f
    }
}

/// One neighbor's weight in a prediction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NeighborWeight {
    pub index: usize,
    pub weight: f64,
}

/// Weighted means `(T̄, Ī, F̄)` of the neighbor triples.
pub fn neighbor_means(neighbors: &[(NeighborWeight, Triple)]) -> Result<(f64, f64, f64)> {
    if let Some((w, _)) = neighbors.iter().find(|(w, _)| !(w.weight >= 0.0) || !w.weight.is_finite()) {
        return Err(Error::domain(format!(
            "neighbor {} has invalid weight {}",
            w.index, w.weight
        )));
    }
    let total: f64 = neighbors.iter().map(|(w, _)| w.weight).sum();
    if total <= 0.0 {
        return Err(Error::DegenerateNeighborhood);
    }
    let mean = |g: fn(&Triple) -> f64| {
        let m = neighbors.iter().map(|(w, t)| w.weight * g(t)).sum::<f64>() / total;
        // Rounding can push the mean an ulp past the values it averages.
        let lo = neighbors.iter().map(|(_, t)| g(t)).fold(f64::INFINITY, f64::min);
        let hi = neighbors.iter().map(|(_, t)| g(t)).fold(f64::NEG_INFINITY, f64::max);
        m.clamp(lo, hi)
    };
    Ok((mean(Triple::t), mean(Triple::i), mean(Triple::f)))
}

/// `T' = T̄`, `I' = T' + Ī`, `F' = I' + F̄`.
pub fn predict_triple(neighbors: &[(NeighborWeight, Triple)]) -> Result<PredictedTriple> {
    let (t, i, f) = neighbor_means(neighbors)?;
    let ti = t + i;
    Ok(PredictedTriple { t, i: ti, f: ti + f })
}

/// `|(T' + I' + F') − (3T̄ + 2Ī + F̄)|`.
pub fn cumulative_sum_gap(p: &PredictedTriple, neighbors: &[(NeighborWeight, Triple)]) -> Result<f64> {
    let (t, i, f) = neighbor_means(neighbors)?;
    Ok((p.sum() - (3.0 * t + 2.0 * i + f)).abs())
}

/// Label selector variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Recommendation {
    /// Score `T(4 − T − I − F)`.
    One,
    /// Score `T(3 − 2T − I − F)`.
    Two,
}

pub fn score(variant: Recommendation, h: Triple) -> f64 {
    let (t, i, f) = (h.t(), h.i(), h.f());
    match variant {
        Recommendation::One => t * (4.0 - t - i - f),
        Recommendation::Two => t * (3.0 - 2.0 * t - i - f),
    }
}

/// First index of the maximum; `NaN` never wins.
fn argmax(scores: impl IntoIterator<Item = f64>) -> usize {
    let mut best = (0, f64::NEG_INFINITY);
    for (k, s) in scores.into_iter().enumerate() {
        if s > best.1 {
            best = (k, s);
        }
    }
    best.0
}

pub fn recommend(variant: Recommendation, levels: &LabeledNSet) -> usize {
    argmax(levels.triples().map(|h| score(variant, h)))
}

pub fn recommend_1(levels: &LabeledNSet) -> usize {
    recommend(Recommendation::One, levels)
}

pub fn recommend_2(levels: &LabeledNSet) -> usize {
    recommend(Recommendation::Two, levels)
}

/// Multi-disease selector: argmax over labels of `Σⱼ wⱼ · score(dⱼ[label])`.
pub fn mc_recommend(per_disease: &[LabeledNSet], weights: &[f64], variant: Recommendation) -> Result<usize> {
    if per_disease.is_empty() || per_disease.len() != weights.len() {
        return Err(Error::LengthMismatch {
            left: per_disease.len(),
            right: weights.len(),
        });
    }
    let sum: f64 = weights.iter().sum();
    if weights.iter().any(|w| !(*w >= 0.0)) || (sum - 1.0).abs() > 1e-12 {
        return Err(Error::Weights { sum });
    }
    let s = per_disease[0].len();
    if per_disease.iter().any(|d| d.len() != s) {
        return Err(Error::alignment("d", "diseases have different label counts"));
    }
    Ok(argmax((0..s).map(|k| {
        per_disease
            .iter()
            .zip(weights)
            .map(|(d, w)| w * score(variant, d.triple_at(k)))
            .sum::<f64>()
    })))
}

/// Searches random level sets for one where the two selectors disagree.
pub fn disagreement_witness(trials: usize, labels: usize, seed: u64) -> Option<(usize, LabeledNSet)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 1..=trials {
        let entries = (0..labels)
            .map(|k| {
                let t = Triple::new(rng.random(), rng.random(), rng.random()).expect("unit interval");
                (format!("L{}", k + 1), t)
            })
            .collect();
        let set = LabeledNSet::new(entries).expect("distinct labels");
        if recommend_1(&set) != recommend_2(&set) {
            return Some((trial, set));
        }
    }
    None
}

/// How similarity values become neighbor weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightMode {
    /// The pair measure is the weight.
    #[default]
    AsStated,
    /// `exp(−measure)`: small distances weigh more.
    Inverted,
}

impl WeightMode {
    pub fn name(self) -> &'static str {
        match self {
            WeightMode::AsStated => "as-stated",
            WeightMode::Inverted => "inverted",
        }
    }

    pub fn apply(self, w: f64) -> f64 {
        match self {
            WeightMode::AsStated => w,
            WeightMode::Inverted => (-w).exp(),
        }
    }
}

impl std::str::FromStr for WeightMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "as-stated" | "as_stated" => Ok(WeightMode::AsStated),
            "inverted" => Ok(WeightMode::Inverted),
            _ => Err(Error::domain(format!("unknown weight mode `{s}`"))),
        }
    }
}

/// Neighbor weights of `query` against every corpus record. The rating
/// component is unknown for a query, so the feature component stands in for it.
pub fn neighbor_weights(query: &NrsRecord, corpus: &[NrsRecord], kind: MeasureKind, mode: WeightMode) -> Result<Vec<NeighborWeight>> {
    if corpus.is_empty() {
        return Err(Error::EmptyTraining);
    }
    corpus
        .iter()
        .enumerate()
        .map(|(index, r)| {
            let sx = component_similarity(&query.x, &r.x).map_err(|_| Error::alignment("x", "feature labels differ"))?;
            let sy = component_similarity(&query.y, &r.y).map_err(|_| Error::alignment("y", "symptom labels differ"))?;
            let c = SimilarityComponents { sx, sy, sd: Some(sx) };
            let weight = mode.apply(measure_value(kind, c)?);
            Ok(NeighborWeight { index, weight })
        })
        .collect()
}

/// One predicted label of one disease.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LabeledPrediction {
    pub disease: usize,
    pub label: String,
    pub triple: PredictedTriple,
}

/// Predicts every label of every disease for `query` from `corpus`.
/// The query's own ratings, if any, are ignored.
pub fn predict_labels(query: &NrsRecord, corpus: &[NrsRecord], kind: MeasureKind, mode: WeightMode) -> Result<Vec<LabeledPrediction>> {
    let weights = neighbor_weights(query, corpus, kind, mode)?;
    predict_with_weights(&weights, corpus)
}

/// As [`predict_labels`] with precomputed weights.
pub fn predict_with_weights(weights: &[NeighborWeight], corpus: &[NrsRecord]) -> Result<Vec<LabeledPrediction>> {
    let schema = corpus.first().ok_or(Error::EmptyTraining)?;
    if let Some(bad) = corpus.iter().position(|r| r.d.len() != schema.d.len() || r.d.iter().zip(&schema.d).any(|(p, q)| !p.same_schema(q))) {
        return Err(Error::alignment("d", format!("corpus record {bad} has a different rating schema")));
    }
    let mut out = Vec::new();
    for (l, dset) in schema.d.iter().enumerate() {
        for (k, label) in dset.labels().enumerate() {
            let neighbors: Vec<(NeighborWeight, Triple)> = weights.iter().map(|w| (*w, corpus[w.index].d[l].triple_at(k))).collect();
            out.push(LabeledPrediction {
                disease: l,
                label: label.to_string(),
                triple: predict_triple(&neighbors)?,
            });
        }
    }
    Ok(out)
}
