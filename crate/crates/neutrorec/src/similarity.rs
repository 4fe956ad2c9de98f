//! Component similarities between records, pair measures that combine
//! them, and the pairwise matrices built from pair measures.
//!
//! Component "similarities" are really distances: 0 for identical sets.

use serde::{Deserialize, Serialize};

use crate::algebra::LabeledNSet;
use crate::error::{Error, Result};

/// `(1 / 2r) · Σ max(|ΔT|, |ΔI|, |ΔF|)` over the `r` shared labels.
pub fn component_similarity(a: &LabeledNSet, b: &LabeledNSet) -> Result<f64> {
    if !a.same_schema(b) {
        return Err(Error::alignment("labels", "component similarity needs identical ordered labels"));
    }
    let r = a.len() as f64;
    let sum: f64 = a.triples().zip(b.triples()).map(|(p, q)| p.max_abs_diff(q)).sum();
    Ok(sum / (2.0 * r))
}

/// `(S_X, S_Y, S_D)` for one record pair; `sd` is absent for queries.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimilarityComponents {
    pub sx: f64,
    pub sy: f64,
    pub sd: Option<f64>,
}

impl SimilarityComponents {
    pub fn new(sx: f64, sy: f64, sd: Option<f64>) -> Result<Self> {
        for (n, v) in [("sx", Some(sx)), ("sy", Some(sy)), ("sd", sd)] {
            if let Some(v) = v {
                if !(0.0..=1.0).contains(&v) {
                    return Err(Error::domain(format!("{n} = {v} is outside [0, 1]")));
                }
            }
        }
        Ok(SimilarityComponents { sx, sy, sd })
    }

    pub fn complete(sx: f64, sy: f64, sd: f64) -> Result<Self> {
        Self::new(sx, sy, Some(sd))
    }

    /// Components of a rated pair of records (every disease set is compared;
    /// with several diseases the rating component is their mean).
    pub fn between(a: &crate::algebra::NrsRecord, b: &crate::algebra::NrsRecord) -> Result<Self> {
        let sx = component_similarity(&a.x, &b.x).map_err(|_| Error::alignment("x", "feature labels differ"))?;
        let sy = component_similarity(&a.y, &b.y).map_err(|_| Error::alignment("y", "symptom labels differ"))?;
        let sd = if a.is_query() || b.is_query() {
            None
        } else {
            if a.d.len() != b.d.len() {
                return Err(Error::alignment("d", "disease counts differ"));
            }
            let mut total = 0.0;
            for (l, (p, q)) in a.d.iter().zip(&b.d).enumerate() {
                total += component_similarity(p, q).map_err(|_| Error::alignment(format!("d[{l}]"), "rating labels differ"))?;
            }
            Some(total / a.d.len() as f64)
        };
        Ok(SimilarityComponents { sx, sy, sd })
    }
}

/// Which pair measure to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Measure {
    /// `max(min(sx,sy), min(sy,sd))`; matrix cells aggregate by max.
    Eq60,
    /// `min(psum(sx,sy), psum(sy,sd))`; cells aggregate by sum.
    #[default]
    Eq65,
    /// `min(min(1,sx+sy), min(1,sy+sd))`; cells aggregate by product.
    Eq67,
    /// `max(max(0,sx−sy), max(0,sy−sd))`; cells aggregate by sum.
    Eq69,
    /// `(sx−sy) + (sy−sd)`, signed; cells aggregate by sum.
    Eq71,
    /// `|sx−sy| + |sy−sd|`; the absolute-difference reading of `Eq71`.
    Eq71Absolute,
}

impl Measure {
    pub const ALL: [Measure; 6] = [
        Measure::Eq60,
        Measure::Eq65,
        Measure::Eq67,
        Measure::Eq69,
        Measure::Eq71,
        Measure::Eq71Absolute,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Eq60 => "eq60",
            Measure::Eq65 => "eq65",
            Measure::Eq67 => "eq67",
            Measure::Eq69 => "eq69",
            Measure::Eq71 => "eq71",
            Measure::Eq71Absolute => "eq71-absolute",
        }
    }

    fn aggregate(self, u: f64, v: f64) -> f64 {
        match self {
            Measure::Eq60 => u.max(v),
            Measure::Eq67 => u * v,
            Measure::Eq65 | Measure::Eq69 | Measure::Eq71 | Measure::Eq71Absolute => u + v,
        }
    }
}

impl std::str::FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Measure::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::domain(format!("unknown measure `{s}`")))
    }
}

/// Branch weights `(w₁, w₂)` with `w₁ + w₂ = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 2]", into = "[f64; 2]")]
pub struct Weights {
    w1: f64,
    w2: f64,
}

impl Weights {
    pub fn new(w1: f64, w2: f64) -> Result<Self> {
        if !(w1 >= 0.0 && w2 >= 0.0) || ((w1 + w2) - 1.0).abs() > 1e-12 {
            return Err(Error::Weights { sum: w1 + w2 });
        }
        Ok(Weights { w1, w2 })
    }

    pub fn w1(&self) -> f64 {
        self.w1
    }

    pub fn w2(&self) -> f64 {
        self.w2
    }
}

impl TryFrom<[f64; 2]> for Weights {
    type Error = Error;

    fn try_from(w: [f64; 2]) -> Result<Self> {
        Weights::new(w[0], w[1])
    }
}

impl From<Weights> for [f64; 2] {
    fn from(w: Weights) -> Self {
        [w.w1, w.w2]
    }
}

/// A measure with optional branch weights.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct MeasureKind {
    pub measure: Measure,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Weights>,
}

impl MeasureKind {
    pub fn plain(measure: Measure) -> Self {
        MeasureKind { measure, weights: None }
    }

    pub fn weighted(measure: Measure, weights: Weights) -> Self {
        MeasureKind {
            measure,
            weights: Some(weights),
        }
    }

    /// Short description for report headers.
    pub fn describe(&self) -> String {
        match self.weights {
            Some(w) => format!("{} w1={} w2={}", self.measure.name(), w.w1, w.w2),
            None => self.measure.name().to_string(),
        }
    }
}

fn psum(x: f64, y: f64) -> f64 {
    x + y - x * y
}

fn branches(measure: Measure, sx: f64, sy: f64, sd: f64) -> (f64, f64) {
    match measure {
        Measure::Eq60 => (sx.min(sy), sy.min(sd)),
        Measure::Eq65 => (psum(sx, sy), psum(sy, sd)),
        Measure::Eq67 => ((sx + sy).min(1.0), (sy + sd).min(1.0)),
        Measure::Eq69 => ((sx - sy).max(0.0), (sy - sd).max(0.0)),
        Measure::Eq71 => (sx - sy, sy - sd),
        Measure::Eq71Absolute => ((sx - sy).abs(), (sy - sd).abs()),
    }
}

fn outer(measure: Measure, b1: f64, b2: f64) -> f64 {
    match measure {
        Measure::Eq60 | Measure::Eq69 => b1.max(b2),
        Measure::Eq65 | Measure::Eq67 => b1.min(b2),
        Measure::Eq71 | Measure::Eq71Absolute => b1 + b2,
    }
}

/// Unweighted pair measure. Weights on `kind`, if any, are ignored.
pub fn pair_measure(kind: MeasureKind, c: SimilarityComponents) -> Result<f64> {
    let sd = c.sd.ok_or(Error::IncompleteComponents)?;
    let (b1, b2) = branches(kind.measure, c.sx, c.sy, sd);
    Ok(outer(kind.measure, b1, b2))
}

/// Pair measure with branch 1 scaled by `w₁` and branch 2 by `w₂`.
pub fn weighted_pair_measure(kind: MeasureKind, c: SimilarityComponents) -> Result<f64> {
    let w = kind
        .weights
        .ok_or_else(|| Error::domain("weighted pair measure needs weights"))?;
    let sd = c.sd.ok_or(Error::IncompleteComponents)?;
    let (b1, b2) = branches(kind.measure, c.sx, c.sy, sd);
    Ok(outer(kind.measure, w.w1 * b1, w.w2 * b2))
}

/// Weighted when `kind` carries weights, plain otherwise.
pub fn measure_value(kind: MeasureKind, c: SimilarityComponents) -> Result<f64> {
    if kind.weights.is_some() {
        weighted_pair_measure(kind, c)
    } else {
        pair_measure(kind, c)
    }
}

/// Symmetric matrix over rows of components.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimilarityMatrix {
    pub kind: MeasureKind,
    pub normalized: bool,
    pub values: Vec<Vec<f64>>,
}

impl SimilarityMatrix {
    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// Delimited table; the first line names the measure and weights.
    pub fn to_delimited(&self, delim: char) -> String {
        let mut out = format!("# measure={} normalize={}\n", self.kind.describe(), self.normalized);
        let header: Vec<String> = std::iter::once(String::new())
            .chain((1..=self.n()).map(|k| k.to_string()))
            .collect();
        out.push_str(&header.join(&delim.to_string()));
        out.push('\n');
        for (i, row) in self.values.iter().enumerate() {
            let cells: Vec<String> = std::iter::once((i + 1).to_string())
                .chain(row.iter().map(|v| format!("{v:.6}")))
                .collect();
            out.push_str(&cells.join(&delim.to_string()));
            out.push('\n');
        }
        out
    }
}

/// `cell(i, j) = agg(vᵢ, vⱼ)` with `vₖ` the pair measure of row `k` and `agg`
/// max (eq60), product (eq67) or sum (the others).
pub fn similarity_matrix(kind: MeasureKind, rows: &[SimilarityComponents]) -> Result<SimilarityMatrix> {
    similarity_matrix_with(kind, rows, false)
}

/// As [`similarity_matrix`]; `normalize` halves the summed measures so they
/// stay within the range of a single pair value.
pub fn similarity_matrix_with(kind: MeasureKind, rows: &[SimilarityComponents], normalize: bool) -> Result<SimilarityMatrix> {
    if rows.is_empty() {
        return Err(Error::domain("similarity matrix needs at least one row"));
    }
    let v = rows
        .iter()
        .map(|c| measure_value(kind, *c))
        .collect::<Result<Vec<_>>>()?;
    let halve = normalize && matches!(kind.measure, Measure::Eq65 | Measure::Eq69 | Measure::Eq71 | Measure::Eq71Absolute);
    let values = v
        .iter()
        .map(|&vi| {
            v.iter()
                .map(|&vj| {
                    let cell = kind.measure.aggregate(vi, vj);
                    if halve {
                        cell / 2.0
                    } else {
                        cell
                    }
                })
                .collect()
        })
        .collect();
    Ok(SimilarityMatrix {
        kind,
        normalized: halve,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comps(sx: f64, sy: f64, sd: f64) -> SimilarityComponents {
        SimilarityComponents::complete(sx, sy, sd).unwrap()
    }

    #[test]
    fn pair_measure_examples() {
        let row1 = comps(0.4316, 0.20833, 0.2666);
        assert!((pair_measure(MeasureKind::plain(Measure::Eq60), row1).unwrap() - 0.20833).abs() < 1e-12);
        assert!((pair_measure(MeasureKind::plain(Measure::Eq65), row1).unwrap() - 0.41939).abs() < 5e-5);
        let row4 = comps(0.15833, 0.2, 0.31666);
        assert!((pair_measure(MeasureKind::plain(Measure::Eq71), row4).unwrap() + 0.15833).abs() < 1e-12);
        assert!(pair_measure(MeasureKind::plain(Measure::Eq71Absolute), row4).unwrap() > 0.0);
        let query = SimilarityComponents::new(0.1, 0.2, None).unwrap();
        assert!(matches!(
            pair_measure(MeasureKind::plain(Measure::Eq65), query),
            Err(Error::IncompleteComponents)
        ));
    }

    #[test]
    fn weighted_examples() {
        let row1 = comps(0.4316, 0.20833, 0.2666);
        let half = Weights::new(0.5, 0.5).unwrap();
        let v = weighted_pair_measure(MeasureKind::weighted(Measure::Eq65, half), row1).unwrap();
        let plain = pair_measure(MeasureKind::plain(Measure::Eq65), row1).unwrap();
        assert!((v - 0.5 * plain).abs() < 1e-15);
        let v = weighted_pair_measure(MeasureKind::weighted(Measure::Eq71, half), row1).unwrap();
        assert!((v - 0.0825).abs() < 1e-12);
        let one = Weights::new(1.0, 0.0).unwrap();
        let v = weighted_pair_measure(MeasureKind::weighted(Measure::Eq69, one), row1).unwrap();
        assert!((v - (0.4316 - 0.20833)).abs() < 1e-15);
        assert!(Weights::new(0.6, 0.6).is_err());
        assert!(Weights::new(1.2, -0.2).is_err());
        assert!(weighted_pair_measure(MeasureKind::plain(Measure::Eq65), row1).is_err());
    }

    #[test]
    fn matrix_aggregations() {
        let rows = [comps(0.4, 0.2, 0.3), comps(0.1, 0.3, 0.2)];
        for m in Measure::ALL {
            let mat = similarity_matrix(MeasureKind::plain(m), &rows).unwrap();
            let v: Vec<f64> = rows.iter().map(|r| pair_measure(MeasureKind::plain(m), *r).unwrap()).collect();
            assert_eq!(mat.values[0][1], mat.values[1][0]);
            let expect = match m {
                Measure::Eq60 => v[0].max(v[1]),
                Measure::Eq67 => v[0] * v[1],
                _ => v[0] + v[1],
            };
            assert_eq!(mat.values[0][1], expect, "{}", m.name());
        }
        assert!(similarity_matrix(MeasureKind::default(), &[]).is_err());
        let norm = similarity_matrix_with(MeasureKind::plain(Measure::Eq65), &rows, true).unwrap();
        let raw = similarity_matrix(MeasureKind::plain(Measure::Eq65), &rows).unwrap();
        assert_eq!(norm.values[0][0] * 2.0, raw.values[0][0]);
        assert!(!similarity_matrix_with(MeasureKind::plain(Measure::Eq60), &rows, true).unwrap().normalized);
    }

    #[test]
    fn matrix_emission_header() {
        let rows = [comps(0.4, 0.2, 0.3)];
        let w = Weights::new(0.25, 0.75).unwrap();
        let text = similarity_matrix(MeasureKind::weighted(Measure::Eq67, w), &rows).unwrap().to_delimited(',');
        assert!(text.starts_with("# measure=eq67 w1=0.25 w2=0.75 normalize=false\n,1\n1,"));
    }

    #[test]
    fn measure_names_round_trip() {
        for m in Measure::ALL {
            assert_eq!(m.name().parse::<Measure>().unwrap(), m);
        }
        assert_eq!(Measure::default(), Measure::Eq65);
    }
}
