use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One (truth, indeterminacy, falsity) membership value, each in `[0, 1]`.
///
/// Fields are private so every `Triple` in circulation is valid; the sum
/// bound `t + i + f <= 3` follows from the component bounds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct Triple {
    t: f64,
    i: f64,
    f: f64,
}

/// How complements are formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComplementForm {
    /// `(f, 1 - i, t)`: involutive, De Morgan, maps top to bottom.
    #[default]
    Standard,
    /// `(f, i, t)`: swaps truth and falsity, leaves indeterminacy alone.
    SwapKeepI,
    /// `(f, t, i)`: cyclic rotation. Not involutive; kept for audits.
    Cyclic,
}

impl ComplementForm {
    pub const ALL: [ComplementForm; 3] = [Self::Standard, Self::SwapKeepI, Self::Cyclic];

    pub fn name(self) -> &'static str {
        match self {
            Self::Standard => "standard",
            Self::SwapKeepI => "swap-keep-i",
            Self::Cyclic => "cyclic",
        }
    }
}

impl std::str::FromStr for ComplementForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::domain(format!("unknown complement form `{s}`")))
    }
}

fn check(component: &'static str, value: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(Error::OutOfRange { component, value })
    }
}

impl Triple {
    /// Top of the lattice: full truth, no doubt, no falsity.
    pub const TOP: Triple = Triple { t: 1.0, i: 0.0, f: 0.0 };
    /// Bottom of the lattice.
    pub const BOTTOM: Triple = Triple { t: 0.0, i: 1.0, f: 1.0 };
    /// Componentwise zero; the BCK zero and the neutral element of the sums.
    pub const ZERO: Triple = Triple { t: 0.0, i: 0.0, f: 0.0 };
    /// Componentwise one.
    pub const ONE: Triple = Triple { t: 1.0, i: 1.0, f: 1.0 };

    pub fn new(t: f64, i: f64, f: f64) -> Result<Self> {
        Ok(Triple {
            t: check("t", t)?,
            i: check("i", i)?,
            f: check("f", f)?,
        })
    }

    /// Clamps each component into `[0, 1]`. NaN is rejected.
    pub fn clamped(t: f64, i: f64, f: f64) -> Result<Self> {
        let c = |name, v: f64| {
            if v.is_nan() {
                Err(Error::OutOfRange { component: name, value: v })
            } else {
                Ok(v.clamp(0.0, 1.0))
            }
        };
        Ok(Triple {
            t: c("t", t)?,
            i: c("i", i)?,
            f: c("f", f)?,
        })
    }

    // Callers guarantee the bounds.
    #[inline]
    const fn raw(t: f64, i: f64, f: f64) -> Self {
        Triple { t, i, f }
    }

    #[inline]
    pub fn t(&self) -> f64 {
        self.t
    }

    #[inline]
    pub fn i(&self) -> f64 {
        self.i
    }

    #[inline]
    pub fn f(&self) -> f64 {
        self.f
    }

    pub fn components(&self) -> [f64; 3] {
        [self.t, self.i, self.f]
    }

    #[inline]
    fn zip(self, o: Triple, op: impl Fn(f64, f64) -> f64) -> Triple {
        Triple::raw(op(self.t, o.t), op(self.i, o.i), op(self.f, o.f))
    }

    /// Complement in the default ([`ComplementForm::Standard`]) form.
    pub fn complement(self) -> Triple {
        self.complement_with(ComplementForm::Standard)
    }

    pub fn complement_with(self, form: ComplementForm) -> Triple {
        match form {
            ComplementForm::Standard => Triple::raw(self.f, 1.0 - self.i, self.t),
            ComplementForm::SwapKeepI => Triple::raw(self.f, self.i, self.t),
            ComplementForm::Cyclic => Triple::raw(self.f, self.t, self.i),
        }
    }

    /// `(max t, min i, min f)`.
    pub fn union(self, o: Triple) -> Triple {
        Triple::raw(self.t.max(o.t), self.i.min(o.i), self.f.min(o.f))
    }

    /// `(min t, max i, max f)`.
    pub fn intersection(self, o: Triple) -> Triple {
        Triple::raw(self.t.min(o.t), self.i.max(o.i), self.f.max(o.f))
    }

    /// Containment order: more truth, less indeterminacy, less falsity.
    pub fn leq(self, o: Triple) -> bool {
        self.t <= o.t && self.i >= o.i && self.f >= o.f
    }

    /// Componentwise `x + y - xy`.
    pub fn prob_sum(self, o: Triple) -> Triple {
        // 1 - (1-x)(1-y) keeps the result inside [0, 1] under rounding.
        self.zip(o, |x, y| 1.0 - (1.0 - x) * (1.0 - y))
    }

    /// Componentwise `min(1, x + y)`.
    pub fn bold_sum(self, o: Triple) -> Triple {
        self.zip(o, |x, y| (x + y).min(1.0))
    }

    /// Componentwise `max(0, x + y - 1)`.
    pub fn bold_intersection(self, o: Triple) -> Triple {
        self.zip(o, |x, y| (x + y - 1.0).max(0.0))
    }

    /// Componentwise truncated subtraction `max(0, x - y)`.
    pub fn bounded_diff(self, o: Triple) -> Triple {
        self.zip(o, |x, y| (x - y).max(0.0))
    }

    /// Componentwise `|x - y|`.
    pub fn sym_diff(self, o: Triple) -> Triple {
        self.zip(o, |x, y| (x - y).abs())
    }

    /// Componentwise `λ·min + (1-λ)·max`.
    pub fn convex_combo(self, o: Triple, lambda: f64) -> Result<Triple> {
        check_lambda(lambda)?;
        Ok(self.convex_unchecked(o, lambda))
    }

    fn convex_unchecked(self, o: Triple, lambda: f64) -> Triple {
        self.zip(o, |x, y| {
            let (lo, hi) = (x.min(y), x.max(y));
            (lambda * lo + (1.0 - lambda) * hi).clamp(lo, hi)
        })
    }

    /// Componentwise products.
    pub fn cart_prod_algebraic(self, o: Triple) -> Triple {
        self.zip(o, |x, y| x * y)
    }

    /// `(min t, max i, min f)`.
    pub fn cart_prod_minmax(self, o: Triple) -> Triple {
        Triple::raw(self.t.min(o.t), self.i.max(o.i), self.f.min(o.f))
    }

    /// Largest absolute componentwise difference.
    pub fn max_abs_diff(self, o: Triple) -> f64 {
        (self.t - o.t)
            .abs()
            .max((self.i - o.i).abs())
            .max((self.f - o.f).abs())
    }

    pub fn approx_eq(self, o: Triple, tol: f64) -> bool {
        self.max_abs_diff(o) <= tol
    }
}

impl TryFrom<[f64; 3]> for Triple {
    type Error = Error;

    fn try_from(v: [f64; 3]) -> Result<Self> {
        Triple::new(v[0], v[1], v[2])
    }
}

impl From<Triple> for [f64; 3] {
    fn from(t: Triple) -> Self {
        t.components()
    }
}

impl std::fmt::Display for Triple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.t, self.i, self.f)
    }
}

fn check_lambda(lambda: f64) -> Result<()> {
    if (0.0..=1.0).contains(&lambda) {
        Ok(())
    } else {
        Err(Error::domain(format!("convex weight λ = {lambda} is outside [0, 1]")))
    }
}

/// How an operation treats the crisp label universes when lifted to sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Label union; absent labels are filled with [`Triple::BOTTOM`].
    Join,
    /// Label intersection.
    Meet,
    /// Left operand's labels.
    Minus,
    /// Cartesian pairing of labels.
    Product,
}

/// Binary operations on triples.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum OpKind {
    Union,
    Intersection,
    ProbSum,
    BoldSum,
    BoldIntersection,
    BoundedDiff,
    SymDiff,
    ConvexCombo { lambda: f64 },
    CartProdAlgebraic,
    CartProdMinmax,
}

impl OpKind {
    /// Validated constructor for the convex combination.
    pub fn convex(lambda: f64) -> Result<Self> {
        check_lambda(lambda)?;
        Ok(OpKind::ConvexCombo { lambda })
    }

    pub fn family(self) -> Family {
        match self {
            OpKind::Union | OpKind::ProbSum | OpKind::BoldSum | OpKind::SymDiff => Family::Join,
            OpKind::ConvexCombo { .. } => Family::Join,
            OpKind::Intersection | OpKind::BoldIntersection => Family::Meet,
            OpKind::BoundedDiff => Family::Minus,
            OpKind::CartProdAlgebraic | OpKind::CartProdMinmax => Family::Product,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OpKind::Union => "union",
            OpKind::Intersection => "intersection",
            OpKind::ProbSum => "prob_sum",
            OpKind::BoldSum => "bold_sum",
            OpKind::BoldIntersection => "bold_intersection",
            OpKind::BoundedDiff => "bounded_diff",
            OpKind::SymDiff => "sym_diff",
            OpKind::ConvexCombo { .. } => "convex_combo",
            OpKind::CartProdAlgebraic => "cart_prod_algebraic",
            OpKind::CartProdMinmax => "cart_prod_minmax",
        }
    }

    /// Applies the operation. A convex weight outside `[0, 1]` (only
    /// reachable by building the variant directly) is a domain error.
    pub fn apply(self, a: Triple, b: Triple) -> Result<Triple> {
        Ok(match self {
            OpKind::Union => a.union(b),
            OpKind::Intersection => a.intersection(b),
            OpKind::ProbSum => a.prob_sum(b),
            OpKind::BoldSum => a.bold_sum(b),
            OpKind::BoldIntersection => a.bold_intersection(b),
            OpKind::BoundedDiff => a.bounded_diff(b),
            OpKind::SymDiff => a.sym_diff(b),
            OpKind::ConvexCombo { lambda } => a.convex_combo(b, lambda)?,
            OpKind::CartProdAlgebraic => a.cart_prod_algebraic(b),
            OpKind::CartProdMinmax => a.cart_prod_minmax(b),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tr(t: f64, i: f64, f: f64) -> Triple {
        Triple::new(t, i, f).unwrap()
    }

    fn close(a: Triple, b: Triple) {
        assert!(a.approx_eq(b, 1e-12), "{a} != {b}");
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(Triple::new(1.1, 0.0, 0.0).is_err());
        assert!(Triple::new(0.0, -0.1, 0.0).is_err());
        assert!(Triple::new(0.0, 0.0, f64::NAN).is_err());
        assert!(Triple::clamped(f64::NAN, 0.0, 0.0).is_err());
        assert_eq!(Triple::clamped(1.5, -2.0, 0.3).unwrap(), tr(1.0, 0.0, 0.3));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(tr(0.3, 0.5, 0.8).complement(), tr(0.8, 0.5, 0.3));
        assert_eq!(tr(0.5, 0.5, 0.5).complement(), tr(0.5, 0.5, 0.5));
        close(tr(0.2, 0.7, 0.1).complement().complement(), tr(0.2, 0.7, 0.1));
        assert_eq!(Triple::TOP.complement(), Triple::BOTTOM);
        assert_eq!(tr(0.2, 0.7, 0.1).complement_with(ComplementForm::SwapKeepI), tr(0.1, 0.7, 0.2));
        assert_eq!(tr(0.2, 0.7, 0.1).complement_with(ComplementForm::Cyclic), tr(0.1, 0.2, 0.7));
    }

    #[test]
    fn union_intersection_examples() {
        let (a, b) = (tr(0.3, 0.5, 0.8), tr(0.4, 0.3, 0.7));
        assert_eq!(a.union(b), tr(0.4, 0.3, 0.7));
        assert_eq!(a.intersection(b), tr(0.3, 0.5, 0.8));
        assert_eq!(Triple::BOTTOM.union(b), b);
        assert_eq!(Triple::TOP.intersection(b), b);
    }

    #[test]
    fn order_examples() {
        assert!(tr(0.2, 0.8, 0.9).leq(tr(0.5, 0.3, 0.1)));
        assert!(tr(0.4, 0.4, 0.4).leq(tr(0.4, 0.4, 0.4)));
        assert!(!tr(0.5, 0.1, 0.1).leq(tr(0.6, 0.5, 0.0)));
    }

    #[test]
    fn algebraic_examples() {
        let (a, b) = (tr(0.3, 0.5, 0.8), tr(0.4, 0.3, 0.7));
        close(a.prob_sum(b), tr(0.58, 0.65, 0.94));
        close(a.bold_sum(b), tr(0.7, 0.8, 1.0));
        close(a.bold_intersection(b), tr(0.0, 0.0, 0.5));
        close(a.bounded_diff(b), tr(0.0, 0.2, 0.1));
        close(a.sym_diff(b), tr(0.1, 0.2, 0.1));
        close(Triple::ZERO.prob_sum(b), b);
        close(Triple::ONE.prob_sum(b), Triple::ONE);
        close(tr(0.6, 0.6, 0.6).bold_sum(tr(0.6, 0.6, 0.6)), Triple::ONE);
        close(Triple::ONE.bold_intersection(b), b);
        close(tr(0.4, 0.4, 0.4).bold_intersection(tr(0.5, 0.5, 0.5)), Triple::ZERO);
        close(b.bounded_diff(b), Triple::ZERO);
        close(b.sym_diff(Triple::ZERO), b);
    }

    #[test]
    fn convex_examples() {
        let (a, b) = (tr(0.3, 0.9, 0.1), tr(0.4, 0.2, 0.6));
        assert_eq!(a.convex_combo(b, 1.0).unwrap(), tr(0.3, 0.2, 0.1));
        assert_eq!(a.convex_combo(b, 0.0).unwrap(), tr(0.4, 0.9, 0.6));
        assert!((a.convex_combo(b, 0.5).unwrap().t() - 0.35).abs() < 1e-15);
        assert!(a.convex_combo(b, 1.5).is_err());
        assert!(OpKind::convex(-0.1).is_err());
        assert!(OpKind::ConvexCombo { lambda: 2.0 }.apply(a, b).is_err());
    }

    #[test]
    fn product_examples() {
        let b = tr(0.5, 0.5, 0.5);
        assert_eq!(Triple::ONE.cart_prod_algebraic(b), b);
        assert_eq!(Triple::ZERO.cart_prod_algebraic(b), Triple::ZERO);
        close(tr(0.5, 0.4, 0.2).cart_prod_algebraic(b), tr(0.25, 0.2, 0.1));
        assert_eq!(b.cart_prod_minmax(b), b);
        assert_eq!(Triple::TOP.cart_prod_minmax(tr(0.3, 0.6, 0.0)), tr(0.3, 0.6, 0.0));
        assert_eq!(tr(0.3, 0.2, 0.9).cart_prod_minmax(tr(0.6, 0.7, 0.1)), tr(0.3, 0.7, 0.1));
    }

    #[test]
    fn serde_roundtrip_validates() {
        let t: Triple = serde_json::from_str("[0.1, 0.2, 0.3]").unwrap();
        assert_eq!(t, tr(0.1, 0.2, 0.3));
        assert_eq!(serde_json::to_string(&t).unwrap(), "[0.1,0.2,0.3]");
        assert!(serde_json::from_str::<Triple>("[0.1, 2.0, 0.3]").is_err());
    }

    #[test]
    fn complement_form_parses() {
        for form in ComplementForm::ALL {
            assert_eq!(form.name().parse::<ComplementForm>().unwrap(), form);
        }
        assert!("nope".parse::<ComplementForm>().is_err());
    }
}
