//! The regression pipeline: neutrosophicate, match neighbors, predict the
//! target's label triples, deneutrosophicate, score.

use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{LabeledNSet, NrsRecord};
use crate::error::{Error, Result};
use crate::ingestion::{load_membership_config, DataRow, Dataset, MembershipConfig};
use crate::membership::{collapse, percentile_labels, unit_output_labels, AttributeMembership, Collapse, DeneutroParams, LabelMembership};
use crate::prediction::{neighbor_weights, predict_with_weights, recommend_1, PredictedTriple, WeightMode};
use crate::similarity::{Measure, MeasureKind, Weights};

/// The six synthesization settings of the stability sweep.
pub const DEFAULT_DENEUTRO_GRID: [(f64, f64, f64); 6] = [
    (0.2, 0.3, 0.5),
    (0.3, 0.2, 0.5),
    (0.5, 0.3, 0.2),
    (0.5, 0.2, 0.3),
    (0.3, 0.5, 0.2),
    (0.2, 0.5, 0.3),
];

/// Where attribute labels come from.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "source")]
pub enum MembershipSource {
    /// `low`/`mid`/`high` at the training data's quartiles, per fold.
    #[default]
    Percentile,
    /// A membership config file.
    File { path: PathBuf },
}

/// Train/evaluate split.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "protocol")]
pub enum Split {
    /// Every record is predicted from all others.
    #[default]
    Loo,
    /// A seeded random `fraction` of records is held out.
    Holdout { fraction: f64 },
}

impl Split {
    pub fn name(&self) -> String {
        match self {
            Split::Loo => "loo".into(),
            Split::Holdout { fraction } => format!("holdout:{fraction}"),
        }
    }
}

fn default_mode() -> WeightMode {
    WeightMode::Inverted
}

fn default_clamp() -> bool {
    true
}

fn default_seed() -> u64 {
    42
}

/// Everything that determines a pipeline run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PipelineConfig {
    #[serde(default)]
    pub measure: Measure,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Weights>,
    #[serde(default = "default_mode")]
    pub weight_mode: WeightMode,
    #[serde(default)]
    pub deneutro: DeneutroParams,
    #[serde(default)]
    pub membership: MembershipSource,
    #[serde(default)]
    pub split: Split,
    /// Clip predicted components into `[0, 1]` before synthesization.
    #[serde(default = "default_clamp")]
    pub clamp: bool,
    #[serde(default)]
    pub collapse: Collapse,
    #[serde(default = "default_seed")]
    pub seed: u64,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            measure: Measure::default(),
            weights: None,
            weight_mode: default_mode(),
            deneutro: DeneutroParams::default(),
            membership: MembershipSource::default(),
            split: Split::default(),
            clamp: default_clamp(),
            collapse: Collapse::default(),
            seed: default_seed(),
        }
    }
}

impl PipelineConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let c: PipelineConfig = toml::from_str(text)?;
        c.validate()?;
        Ok(c)
    }

    /// Reads a config; a relative membership path resolves against the
    /// config file's directory.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut c = Self::parse(&text)?;
        if let MembershipSource::File { path: p } = &mut c.membership {
            if p.is_relative() {
                *p = path.parent().unwrap_or(Path::new(".")).join(&*p);
            }
        }
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if let Split::Holdout { fraction } = self.split {
            if !(fraction > 0.0 && fraction < 1.0) {
                return Err(Error::config(format!("holdout fraction {fraction} must lie in (0, 1)")));
            }
        }
        if let Collapse::ClippedCurve { grid_points } = self.collapse {
            if grid_points < 2 {
                return Err(Error::config("clipped-curve collapse needs at least 2 grid points"));
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> MeasureKind {
        MeasureKind {
            measure: self.measure,
            weights: self.weights,
        }
    }

    /// One-line summary for report headers.
    pub fn describe(&self) -> String {
        let membership = match &self.membership {
            MembershipSource::Percentile => "percentile".to_string(),
            MembershipSource::File { path } => format!("file:{}", path.display()),
        };
        format!(
            "measure={} weight_mode={} split={} membership={} collapse={} clamp={} seed={}",
            self.kind().describe(),
            self.weight_mode.name(),
            self.split.name(),
            membership,
            self.collapse.name(),
            self.clamp,
            self.seed
        )
    }
}

/// Outcome of one pipeline run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub dataset: String,
    pub records: usize,
    pub attributes: usize,
    pub classes: usize,
    /// Rows dropped while loading.
    pub dropped_rows: usize,
    pub evaluated: usize,
    pub scored: usize,
    /// Evaluation records with a degenerate neighborhood or output curve.
    pub skipped: usize,
    /// Scored records whose prediction needed clamping.
    pub clamped: usize,
    pub mse: f64,
    /// Prediction wall-clock time, excluding the dataset load.
    pub seconds: f64,
    pub config: PipelineConfig,
}

/// Mean squared error.
pub fn mse(predicted: &[f64], actual: &[f64]) -> Result<f64> {
    if predicted.len() != actual.len() {
        return Err(Error::LengthMismatch {
            left: predicted.len(),
            right: actual.len(),
        });
    }
    if predicted.is_empty() {
        return Err(Error::domain("mse of an empty sequence"));
    }
    let sum: f64 = predicted.iter().zip(actual).map(|(p, a)| (p - a).powi(2)).sum();
    Ok(sum / predicted.len() as f64)
}

/// Per-label prediction for one evaluation record.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RecordPrediction {
    /// Row index within the dataset.
    pub row: usize,
    pub actual: f64,
    pub predicted: f64,
    pub labels: Vec<(String, PredictedTriple)>,
    /// Output label picked by the first selector on the clamped triples.
    pub recommended: String,
    pub clamped: bool,
}

/// Result of predicting one record; degenerate cases are not errors.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Scored(RecordPrediction),
    Skipped { row: usize, reason: String },
}

struct Membership {
    attributes: Vec<AttributeMembership>,
    output: Vec<LabelMembership>,
}

fn output_labels(dataset: &Dataset, file: Option<&MembershipConfig>) -> Vec<LabelMembership> {
    file.and_then(|c| c.output(&dataset.schema.target.column))
        .map(|o| o.labels.clone())
        .unwrap_or_else(unit_output_labels)
}

fn fold_membership(dataset: &Dataset, train: &[usize], file: Option<&MembershipConfig>) -> Result<Membership> {
    let output = output_labels(dataset, file);
    if let Some(c) = file {
        return Ok(Membership {
            attributes: c.attributes.clone(),
            output,
        });
    }
    let mut attributes = Vec::new();
    for (k, name) in dataset.schema.attribute_names().enumerate() {
        let nf = dataset.schema.features.len();
        let values: Vec<f64> = train
            .iter()
            .map(|&r| {
                let row = &dataset.rows[r];
                if k < nf {
                    row.features[k]
                } else {
                    row.symptoms[k - nf]
                }
            })
            .collect();
        attributes.push(AttributeMembership {
            name: name.to_string(),
            labels: percentile_labels(&values)?,
        });
    }
    Ok(Membership { attributes, output })
}

fn slot(dataset: &Dataset, row: &DataRow, m: &Membership, features: bool) -> Result<LabeledNSet> {
    let names = if features { &dataset.schema.features } else { &dataset.schema.symptoms };
    let values = if features { &row.features } else { &row.symptoms };
    let parts = names
        .iter()
        .zip(values)
        .map(|(c, &v)| {
            let a = m
                .attributes
                .iter()
                .find(|a| a.name == c.name)
                .ok_or_else(|| Error::config(format!("no membership configured for attribute `{}`", c.name)))?;
            Ok(a.evaluate(v)?.prefixed(&c.name))
        })
        .collect::<Result<Vec<_>>>()?;
    LabeledNSet::concat(&parts)
}

fn to_record(dataset: &Dataset, row: &DataRow, m: &Membership) -> Result<NrsRecord> {
    let x = slot(dataset, row, m, true)?;
    let y = slot(dataset, row, m, false)?;
    let target = dataset.normalized_target(row);
    let d = LabeledNSet::new(
        m.output
            .iter()
            .map(|l| (l.name.clone(), crate::membership::neutrosophicate(target, &l.params)))
            .collect(),
    )?;
    NrsRecord::new(x, y, vec![d])
}

/// `α·T + β·F/4 + γ·I/2` on possibly unclamped components.
fn synthesize_raw(p: &PredictedTriple, d: DeneutroParams) -> f64 {
    d.alpha() * p.t + d.beta() * p.f / 4.0 + d.gamma() * p.i / 2.0
}

struct Plan {
    /// `(evaluation row, training rows)` pairs.
    folds: Vec<(usize, Vec<usize>)>,
    /// Training rows shared by every fold (holdout) or `None` (leave-one-out).
    shared: Option<Vec<usize>>,
}

fn plan(dataset: &Dataset, split: Split, seed: u64) -> Result<Plan> {
    let n = dataset.len();
    match split {
        Split::Loo => {
            if n < 2 {
                return Err(Error::EmptyTraining);
            }
            let folds = (0..n).map(|k| (k, (0..n).filter(|&j| j != k).collect())).collect();
            Ok(Plan { folds, shared: None })
        }
        Split::Holdout { fraction } => {
            let mut idx: Vec<usize> = (0..n).collect();
            idx.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            let test = ((fraction * n as f64).ceil() as usize).min(n);
            let (eval, train) = idx.split_at(test);
            if train.is_empty() {
                return Err(Error::EmptyTraining);
            }
            if eval.is_empty() {
                return Err(Error::domain("holdout leaves no evaluation records"));
            }
            let mut train = train.to_vec();
            train.sort_unstable();
            let mut eval = eval.to_vec();
            eval.sort_unstable();
            Ok(Plan {
                folds: eval.iter().map(|&e| (e, Vec::new())).collect(),
                shared: Some(train),
            })
        }
    }
}

struct Prepared<'a> {
    dataset: &'a Dataset,
    config: &'a PipelineConfig,
    file: Option<MembershipConfig>,
    plan: Plan,
    /// Records and membership for a shared training set.
    shared: Option<(Membership, Vec<NrsRecord>)>,
}

fn prepare<'a>(dataset: &'a Dataset, config: &'a PipelineConfig) -> Result<Prepared<'a>> {
    config.validate()?;
    let file = match &config.membership {
        MembershipSource::Percentile => None,
        MembershipSource::File { path } => {
            let c = load_membership_config(path)?;
            c.check_coverage(&dataset.schema)?;
            Some(c)
        }
    };
    let plan = plan(dataset, config.split, config.seed)?;
    let shared = match &plan.shared {
        Some(train) => {
            let m = fold_membership(dataset, train, file.as_ref())?;
            let records = train
                .iter()
                .map(|&r| to_record(dataset, &dataset.rows[r], &m))
                .collect::<Result<Vec<_>>>()?;
            Some((m, records))
        }
        None => None,
    };
    Ok(Prepared {
        dataset,
        config,
        file,
        plan,
        shared,
    })
}

impl Prepared<'_> {
    fn predict_fold(&self, fold: usize) -> Result<Outcome> {
        let (row, train) = &self.plan.folds[fold];
        let owned;
        let (m, corpus) = match &self.shared {
            Some((m, records)) => (m, records),
            None => {
                let m = fold_membership(self.dataset, train, self.file.as_ref())?;
                let records = train
                    .iter()
                    .map(|&r| to_record(self.dataset, &self.dataset.rows[r], &m))
                    .collect::<Result<Vec<_>>>()?;
                owned = (m, records);
                (&owned.0, &owned.1)
            }
        };
        let target_row = &self.dataset.rows[*row];
        let full = to_record(self.dataset, target_row, m)?;
        let query = NrsRecord::query(full.x, full.y);
        let skip = |e: Error| Outcome::Skipped {
            row: *row,
            reason: e.to_string(),
        };
        let weights = neighbor_weights(&query, corpus, self.config.kind(), self.config.weight_mode)?;
        let labels = match predict_with_weights(&weights, corpus) {
            Ok(l) => l,
            Err(e @ Error::DegenerateNeighborhood) => return Ok(skip(e)),
            Err(e) => return Err(e),
        };
        let mut clamped = false;
        let mut scalars = Vec::with_capacity(labels.len());
        let mut clipped = Vec::with_capacity(labels.len());
        for l in &labels {
            let (t, moved) = l.triple.clamp();
            clamped |= moved;
            clipped.push((l.label.clone(), t));
            scalars.push(if self.config.clamp {
                crate::membership::synthesize(t, self.config.deneutro)
            } else {
                synthesize_raw(&l.triple, self.config.deneutro)
            });
        }
        let predicted = match collapse(self.config.collapse, &m.output, &scalars) {
            Ok(p) => p,
            Err(e @ Error::DegenerateCurve) => return Ok(skip(e)),
            Err(e) => return Err(e),
        };
        let levels = LabeledNSet::new(clipped)?;
        Ok(Outcome::Scored(RecordPrediction {
            row: *row,
            actual: self.dataset.normalized_target(target_row),
            predicted,
            recommended: levels.entries()[recommend_1(&levels)].0.clone(),
            labels: labels.into_iter().map(|l| (l.label, l.triple)).collect(),
            clamped,
        }))
    }
}

/// Predicts every evaluation record of the split. With `parallel` the folds
/// run on the rayon pool; results keep fold order either way.
pub fn predict_records(dataset: &Dataset, config: &PipelineConfig, parallel: bool) -> Result<Vec<Outcome>> {
    let p = prepare(dataset, config)?;
    let folds = 0..p.plan.folds.len();
    if parallel {
        folds.into_par_iter().map(|k| p.predict_fold(k)).collect()
    } else {
        folds.map(|k| p.predict_fold(k)).collect()
    }
}

/// Runs the pipeline sequentially and scores it. Only prediction is timed.
pub fn run_pipeline(dataset: &Dataset, config: &PipelineConfig) -> Result<EvalReport> {
    let start = Instant::now();
    let outcomes = predict_records(dataset, config, false)?;
    let seconds = start.elapsed().as_secs_f64();
    let scored: Vec<&RecordPrediction> = outcomes
        .iter()
        .filter_map(|o| match o {
            Outcome::Scored(r) => Some(r),
            Outcome::Skipped { .. } => None,
        })
        .collect();
    for o in &outcomes {
        if let Outcome::Skipped { row, reason } = o {
            log::info!("{}: skipped row {row}: {reason}", dataset.schema.name);
        }
    }
    let predicted: Vec<f64> = scored.iter().map(|r| r.predicted).collect();
    let actual: Vec<f64> = scored.iter().map(|r| r.actual).collect();
    let mse = if scored.is_empty() { f64::NAN } else { mse(&predicted, &actual)? };
    Ok(EvalReport {
        dataset: dataset.schema.name.clone(),
        records: dataset.len(),
        attributes: dataset.schema.attribute_count(),
        classes: dataset.class_count(),
        dropped_rows: dataset.dropped,
        evaluated: outcomes.len(),
        scored: scored.len(),
        skipped: outcomes.len() - scored.len(),
        clamped: scored.iter().filter(|r| r.clamped).count(),
        mse,
        seconds,
        config: config.clone(),
    })
}

/// One run per synthesization setting; splits and seed are shared.
pub fn deneutro_grid(dataset: &Dataset, base: &PipelineConfig, grid: &[DeneutroParams]) -> Result<Vec<EvalReport>> {
    grid.iter()
        .map(|d| {
            let config = PipelineConfig {
                deneutro: *d,
                ..base.clone()
            };
            run_pipeline(dataset, &config)
        })
        .collect()
}

/// The six default settings as validated parameters.
pub fn default_grid() -> Vec<DeneutroParams> {
    DEFAULT_DENEUTRO_GRID
        .iter()
        .map(|&(a, b, g)| DeneutroParams::new(a, b, g).expect("grid rows sum to 1"))
        .collect()
}

/// `max − min` of the reports' MSE.
pub fn spread(reports: &[EvalReport]) -> f64 {
    let (lo, hi) = reports
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| (lo.min(r.mse), hi.max(r.mse)));
    if reports.is_empty() {
        0.0
    } else {
        hi - lo
    }
}
