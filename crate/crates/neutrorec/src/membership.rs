//! Neutrosophication (crisp value → triple) and deneutrosophication
//! (triples → crisp value).
//!
//! Truth is a trapezoid: 0 below `a₁`, rising to 1 at `a₂`, flat to `a₃`,
//! falling to 0 at `a₄`. Indeterminacy and falsity are valleys, i.e. one
//! minus a trapezoid over their own breakpoints: 1 far from the label, 0 on
//! its core.

use serde::{Deserialize, Serialize};

use crate::algebra::{LabeledNSet, Triple};
use crate::error::{Error, Result};

/// Default quadrature resolution for centroids.
pub const DEFAULT_GRID_POINTS: usize = 1001;

/// Breakpoints for one label: `a` (truth), `b` (indeterminacy), `c` (falsity).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct TrapezoidParams {
    a: [f64; 4],
    b: [f64; 4],
    c: [f64; 4],
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    truth: [f64; 4],
    indeterminacy: [f64; 4],
    falsity: [f64; 4],
}

impl TryFrom<RawParams> for TrapezoidParams {
    type Error = Error;

    fn try_from(r: RawParams) -> Result<Self> {
        TrapezoidParams::new(r.truth, r.indeterminacy, r.falsity)
    }
}

impl From<TrapezoidParams> for RawParams {
    fn from(p: TrapezoidParams) -> Self {
        RawParams {
            truth: p.a,
            indeterminacy: p.b,
            falsity: p.c,
        }
    }
}

fn check_breakpoints(name: &str, v: &[f64; 4]) -> Result<()> {
    if v.iter().any(|x| !x.is_finite()) {
        return Err(Error::config(format!("{name} breakpoints {v:?} must be finite")));
    }
    if v.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::config(format!("{name} breakpoints {v:?} are not ascending")));
    }
    Ok(())
}

impl TrapezoidParams {
    pub fn new(a: [f64; 4], b: [f64; 4], c: [f64; 4]) -> Result<Self> {
        check_breakpoints("truth", &a)?;
        check_breakpoints("indeterminacy", &b)?;
        check_breakpoints("falsity", &c)?;
        Ok(TrapezoidParams { a, b, c })
    }

    pub fn a(&self) -> [f64; 4] {
        self.a
    }

    pub fn b(&self) -> [f64; 4] {
        self.b
    }

    pub fn c(&self) -> [f64; 4] {
        self.c
    }

    /// Midpoint of the truth plateau.
    pub fn plateau_mid(&self) -> f64 {
        0.5 * (self.a[1] + self.a[2])
    }
}

/// Trapezoid membership with breakpoints `p`. Coincident breakpoints give
/// vertical edges that belong to the plateau.
pub fn trapezoid(x: f64, p: [f64; 4]) -> f64 {
    let [p1, p2, p3, p4] = p;
    if x < p1 {
        0.0
    } else if x < p2 {
        (x - p1) / (p2 - p1)
    } else if x <= p3 {
        1.0
    } else if x < p4 {
        (p4 - x) / (p4 - p3)
    } else {
        0.0
    }
}

/// Maps a crisp value to a triple.
pub fn neutrosophicate(x: f64, p: &TrapezoidParams) -> Triple {
    let t = trapezoid(x, p.a);
    let i = 1.0 - trapezoid(x, p.b);
    let f = 1.0 - trapezoid(x, p.c);
    Triple::clamped(t, i, f).unwrap_or(Triple::BOTTOM)
}

/// One linguistic label and its curves.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabelMembership {
    pub name: String,
    #[serde(flatten)]
    pub params: TrapezoidParams,
    /// Crisp position of the label; defaults to the truth-plateau midpoint.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anchor: Option<f64>,
}

impl LabelMembership {
    pub fn new(name: impl Into<String>, params: TrapezoidParams) -> Self {
        LabelMembership {
            name: name.into(),
            params,
            anchor: None,
        }
    }

    pub fn anchor(&self) -> f64 {
        self.anchor.unwrap_or_else(|| self.params.plateau_mid())
    }
}

/// The labels configured for one attribute.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AttributeMembership {
    pub name: String,
    #[serde(rename = "label")]
    pub labels: Vec<LabelMembership>,
}

impl AttributeMembership {
    /// Triple for every label of this attribute at `x`.
    pub fn evaluate(&self, x: f64) -> Result<LabeledNSet> {
        LabeledNSet::new(
            self.labels
                .iter()
                .map(|l| (l.name.clone(), neutrosophicate(x, &l.params)))
                .collect(),
        )
        .map_err(|e| Error::config(format!("attribute `{}`: {e}", self.name)))
    }
}

/// Neutrosophicates named attribute values, one labeled set per attribute.
pub fn neutrosophicate_record(attrs: &[(&str, f64)], config: &[AttributeMembership]) -> Result<Vec<LabeledNSet>> {
    attrs
        .iter()
        .map(|(name, x)| {
            config
                .iter()
                .find(|a| a.name == *name)
                .ok_or_else(|| Error::config(format!("no membership configured for attribute `{name}`")))?
                .evaluate(*x)
        })
        .collect()
}

/// Synthesization weights; `alpha + beta + gamma = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawDeneutro", into = "RawDeneutro")]
pub struct DeneutroParams {
    alpha: f64,
    beta: f64,
    gamma: f64,
}

#[derive(Serialize, Deserialize)]
struct RawDeneutro {
    alpha: f64,
    beta: f64,
    gamma: f64,
}

impl TryFrom<RawDeneutro> for DeneutroParams {
    type Error = Error;

    fn try_from(r: RawDeneutro) -> Result<Self> {
        DeneutroParams::new(r.alpha, r.beta, r.gamma)
    }
}

impl From<DeneutroParams> for RawDeneutro {
    fn from(d: DeneutroParams) -> Self {
        RawDeneutro {
            alpha: d.alpha,
            beta: d.beta,
            gamma: d.gamma,
        }
    }
}

impl DeneutroParams {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        for (n, v) in [("alpha", alpha), ("beta", beta), ("gamma", gamma)] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::domain(format!("{n} = {v} is outside [0, 1]")));
            }
        }
        let sum = alpha + beta + gamma;
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::Weights { sum });
        }
        Ok(DeneutroParams { alpha, beta, gamma })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

impl Default for DeneutroParams {
    fn default() -> Self {
        DeneutroParams {
            alpha: 0.2,
            beta: 0.3,
            gamma: 0.5,
        }
    }
}

/// `α·T + β·F/4 + γ·I/2`.
pub fn synthesize(h: Triple, d: DeneutroParams) -> f64 {
    d.alpha * h.t() + d.beta * h.f() / 4.0 + d.gamma * h.i() / 2.0
}

/// Centroid `∫y·T(y) / ∫T(y)` over `[lo, hi]` by the composite trapezoid rule
/// on `grid_points` equally spaced nodes.
pub fn deneutrosophicate(curve: impl Fn(f64) -> f64, lo: f64, hi: f64, grid_points: usize) -> Result<f64> {
    if grid_points < 2 {
        return Err(Error::domain("deneutrosophication needs at least 2 grid points"));
    }
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::domain(format!("invalid centroid interval [{lo}, {hi}]")));
    }
    let n = grid_points - 1;
    let h = (hi - lo) / n as f64;
    let (mut mass, mut moment) = (0.0, 0.0);
    for k in 0..=n {
        let y = if k == n { hi } else { lo + k as f64 * h };
        let w = if k == 0 || k == n { 0.5 } else { 1.0 };
        let v = curve(y);
        mass += w * v;
        moment += w * v * y;
    }
    if mass <= 0.0 || !mass.is_finite() {
        return Err(Error::DegenerateCurve);
    }
    Ok(moment / mass)
}

/// How per-label synthesized scalars become one crisp output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Collapse {
    /// `Σ sₗ·anchorₗ / Σ sₗ`.
    #[default]
    AnchorCentroid,
    /// Centroid of `max_l min(sₗ, Tₗ(y))` over the output labels' support.
    ClippedCurve { grid_points: usize },
}

impl Collapse {
    pub fn name(&self) -> &'static str {
        match self {
            Collapse::AnchorCentroid => "anchor-centroid",
            Collapse::ClippedCurve { .. } => "clipped-curve",
        }
    }
}

/// Collapses the synthesized scalar of each output label to a crisp value.
pub fn collapse(strategy: Collapse, labels: &[LabelMembership], scalars: &[f64]) -> Result<f64> {
    if labels.len() != scalars.len() {
        return Err(Error::LengthMismatch {
            left: labels.len(),
            right: scalars.len(),
        });
    }
    match strategy {
        Collapse::AnchorCentroid => {
            let mass: f64 = scalars.iter().sum();
            if mass <= 0.0 || !mass.is_finite() {
                return Err(Error::DegenerateCurve);
            }
            let moment: f64 = labels.iter().zip(scalars).map(|(l, s)| l.anchor() * s).sum();
            Ok(moment / mass)
        }
        Collapse::ClippedCurve { grid_points } => {
            let lo = labels.iter().map(|l| l.params.a[0]).fold(f64::INFINITY, f64::min);
            let hi = labels.iter().map(|l| l.params.a[3]).fold(f64::NEG_INFINITY, f64::max);
            let curve = |y: f64| {
                labels
                    .iter()
                    .zip(scalars)
                    .map(|(l, s)| s.min(trapezoid(y, l.params.a)))
                    .fold(0.0, f64::max)
            };
            deneutrosophicate(curve, lo, hi, grid_points)
        }
    }
}

/// Linear-interpolation percentile (`q` in `[0, 100]`) of sorted data.
pub fn percentile(sorted: &[f64], q: f64) -> f64 {
    let pos = q / 100.0 * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    sorted[lo] + (pos - lo as f64) * (sorted[hi] - sorted[lo])
}

/// Three labels (`low`, `mid`, `high`) with breakpoints at the 0/25/50/75/100th
/// percentiles of `values`. Falsity mirrors truth; indeterminacy saturates
/// more slowly.
pub fn percentile_labels(values: &[f64]) -> Result<Vec<LabelMembership>> {
    let mut v: Vec<f64> = values.iter().copied().filter(|x| x.is_finite()).collect();
    if v.is_empty() {
        return Err(Error::domain("percentile labels need at least one finite value"));
    }
    v.sort_by(f64::total_cmp);
    let q = [0.0, 25.0, 50.0, 75.0, 100.0].map(|p| percentile(&v, p));
    Ok(quantile_labels(q))
}

/// The `low`/`mid`/`high` family for given quintile cut points.
pub fn quantile_labels(q: [f64; 5]) -> Vec<LabelMembership> {
    let [q0, q1, q2, q3, q4] = q;
    let make = |name: &str, a: [f64; 4], b: [f64; 4]| {
        LabelMembership::new(name, TrapezoidParams::new(a, b, a).expect("quantiles are ascending"))
    };
    vec![
        make("low", [q0, q0, q1, q2], [q0, q0, q1, q3]),
        make("mid", [q1, q2, q2, q3], [q0, q2, q2, q4]),
        make("high", [q2, q3, q4, q4], [q1, q3, q4, q4]),
    ]
}

/// Output labels for a target normalized to `[0, 1]`.
pub fn unit_output_labels() -> Vec<LabelMembership> {
    quantile_labels([0.0, 0.25, 0.5, 0.75, 1.0])
}
