//! Empirical checks of algebraic laws over randomly sampled triples.
//!
//! Every law is a closed-form predicate over one to three triples that
//! returns a violation magnitude (0 when the law holds). [`check_law`] draws
//! uniform triples from a seeded ChaCha stream dedicated to that law, so a
//! report depends only on `(law, samples, seed, complement form)` and never
//! on thread scheduling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::algebra::{ComplementForm, OpKind, Triple};
use crate::error::Result;

/// Absolute tolerance for every law.
pub const LAW_TOLERANCE: f64 = 1e-12;

macro_rules! laws {
    ($($variant:ident => $name:literal, $arity:literal;)+) => {
        /// Identifier of one audited law.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum LawId { $($variant),+ }

        impl LawId {
            /// All laws in report order.
            pub const ALL: &'static [LawId] = &[$(LawId::$variant),+];

            pub fn name(self) -> &'static str {
                match self { $(LawId::$variant => $name),+ }
            }

            /// Number of sampled triples the predicate consumes.
            pub fn arity(self) -> usize {
                match self { $(LawId::$variant => $arity),+ }
            }
        }
    };
}

laws! {
    LatticeIdempotence => "lattice_idempotence", 1;
    LatticeAbsorption => "lattice_absorption", 2;
    LatticeBounds => "lattice_bounds", 1;
    Commutativity => "commutativity", 2;
    Associativity => "associativity", 3;
    Distributivity => "distributivity", 3;
    DeMorgan1 => "de_morgan_1", 2;
    DeMorgan2 => "de_morgan_2", 2;
    ComplementInvolution => "complement_involution", 1;
    KleeneCondition => "kleene_condition", 2;
    BooleanComplement => "boolean_complement", 1;
    StoneIdentity => "stone_identity", 1;
    MvDoubleNegation => "mv_double_negation", 1;
    MvAbsorbingElement => "mv_absorbing_element", 1;
    MvLukasiewiczAxiomMeet => "mv_lukasiewicz_axiom_meet", 2;
    MvLukasiewiczAxiomJoin => "mv_lukasiewicz_axiom_join", 2;
    Bck1 => "bck_1", 3;
    Bck2 => "bck_2", 2;
    Bck3 => "bck_3", 1;
    Bck4 => "bck_4", 2;
    Bck5 => "bck_5", 1;
    BckBounded => "bck_bounded", 1;
    Bck1AsPrinted => "bck_1_as_printed", 3;
    Bck3AsPrinted => "bck_3_as_printed", 2;
    RelativePseudocomplementAdjunction => "relative_pseudocomplement_adjunction", 3;
}

impl LawId {
    fn index(self) -> u64 {
        LawId::ALL.iter().position(|&l| l == self).expect("listed") as u64
    }
}

impl std::fmt::Display for LawId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for LawId {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        LawId::ALL
            .iter()
            .copied()
            .find(|l| l.name() == s)
            .ok_or_else(|| crate::Error::domain(format!("unknown law `{s}`")))
    }
}

impl Serialize for LawId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Outcome of auditing one law.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LawReport {
    pub law: LawId,
    pub samples: u64,
    pub failures: u64,
    /// The first failing sample; present iff `failures > 0`.
    pub first_counterexample: Option<Vec<Triple>>,
    pub max_violation: f64,
}

impl LawReport {
    pub fn holds(&self) -> bool {
        self.failures == 0
    }

    pub fn claim_status(&self) -> &'static str {
        if self.holds() {
            "holds"
        } else {
            "fails-with-counterexample"
        }
    }
}

/// Largest `c` (in the containment order) with `a ∩ c ≤ b`.
pub fn relative_pseudocomplement(a: Triple, b: Triple) -> Triple {
    let t = if a.t() <= b.t() { 1.0 } else { b.t() };
    let i = if a.i() >= b.i() { 0.0 } else { b.i() };
    let f = if a.f() >= b.f() { 0.0 } else { b.f() };
    Triple::new(t, i, f).expect("components come from valid triples")
}

/// How far `a ≤ b` is from holding; 0 when it holds.
fn leq_gap(a: Triple, b: Triple) -> f64 {
    (a.t() - b.t()).max(b.i() - a.i()).max(b.f() - a.f()).max(0.0)
}

fn eq_gap(a: Triple, b: Triple) -> f64 {
    a.max_abs_diff(b)
}

fn zero_gap(a: Triple) -> f64 {
    a.components().into_iter().fold(0.0, f64::max)
}

fn flag(ok: bool) -> f64 {
    if ok {
        0.0
    } else {
        1.0
    }
}

/// Evaluates `law` on explicit triples (at least `law.arity()` of them).
/// `lambda` is the convex weight used by the commutativity check.
pub fn violation(law: LawId, xs: &[Triple], lambda: f64, form: ComplementForm) -> f64 {
    let c = |t: Triple| t.complement_with(form);
    let (a, b, z) = (xs[0], xs.get(1).copied().unwrap_or(xs[0]), xs.get(2).copied().unwrap_or(xs[0]));
    let (top, bottom) = (Triple::TOP, Triple::BOTTOM);
    match law {
        LawId::LatticeIdempotence => eq_gap(a.union(a), a).max(eq_gap(a.intersection(a), a)),
        LawId::LatticeAbsorption => eq_gap(a.union(a.intersection(b)), a).max(eq_gap(a.intersection(a.union(b)), a)),
        LawId::LatticeBounds => eq_gap(a.union(bottom), a).max(eq_gap(a.intersection(top), a)),
        LawId::Commutativity => {
            let ops = [
                OpKind::Union,
                OpKind::Intersection,
                OpKind::ProbSum,
                OpKind::BoldSum,
                OpKind::BoldIntersection,
                OpKind::SymDiff,
                OpKind::ConvexCombo { lambda },
                OpKind::CartProdAlgebraic,
                OpKind::CartProdMinmax,
            ];
            ops.iter()
                .map(|op| eq_gap(op.apply(a, b).expect("λ in range"), op.apply(b, a).expect("λ in range")))
                .fold(0.0, f64::max)
        }
        LawId::Associativity => {
            let ops = [OpKind::Union, OpKind::Intersection, OpKind::ProbSum, OpKind::BoldSum];
            ops.iter()
                .map(|op| {
                    let ap = |x, y| op.apply(x, y).expect("total");
                    eq_gap(ap(ap(a, b), z), ap(a, ap(b, z)))
                })
                .fold(0.0, f64::max)
        }
        LawId::Distributivity => {
            let l1 = a.intersection(b.union(z));
            let r1 = a.intersection(b).union(a.intersection(z));
            let l2 = a.union(b.intersection(z));
            let r2 = a.union(b).intersection(a.union(z));
            eq_gap(l1, r1).max(eq_gap(l2, r2))
        }
        LawId::DeMorgan1 => eq_gap(c(a.union(b)), c(a).intersection(c(b))),
        LawId::DeMorgan2 => eq_gap(c(a.intersection(b)), c(a).union(c(b))),
        LawId::ComplementInvolution => eq_gap(c(c(a)), a),
        LawId::KleeneCondition => leq_gap(a.intersection(c(a)), b.union(c(b))),
        LawId::BooleanComplement => eq_gap(a.intersection(c(a)), bottom),
        LawId::StoneIdentity => eq_gap(c(a).union(a), top),
        LawId::MvDoubleNegation => eq_gap(c(c(a)), a),
        LawId::MvAbsorbingElement => {
            // x ⊕ ¬0 = ¬0 with (⊕, 0) = (∩, top) and (∪, bottom).
            eq_gap(a.intersection(c(top)), c(top)).max(eq_gap(a.union(c(bottom)), c(bottom)))
        }
        LawId::MvLukasiewiczAxiomMeet => {
            eq_gap(c(c(a).intersection(b)).intersection(b), c(c(b).intersection(a)).intersection(a))
        }
        LawId::MvLukasiewiczAxiomJoin => eq_gap(c(c(a).union(b)).union(b), c(c(b).union(a)).union(a)),
        LawId::Bck1 => zero_gap(a.bounded_diff(b).bounded_diff(a.bounded_diff(z)).bounded_diff(z.bounded_diff(b))),
        LawId::Bck2 => zero_gap(a.bounded_diff(a.bounded_diff(b)).bounded_diff(b)),
        LawId::Bck3 => zero_gap(a.bounded_diff(a)),
        LawId::Bck4 => {
            // Antecedent rarely fires on independent samples, so also probe
            // the pair (a, a') where a' is a rebuilt copy of a.
            let copy = Triple::new(a.t(), a.i(), a.f()).expect("valid");
            [(a, b), (a, copy)]
                .into_iter()
                .map(|(x, y)| {
                    let both_zero = zero_gap(x.bounded_diff(y)) == 0.0 && zero_gap(y.bounded_diff(x)) == 0.0;
                    if both_zero {
                        eq_gap(x, y)
                    } else {
                        0.0
                    }
                })
                .fold(0.0, f64::max)
        }
        LawId::Bck5 => zero_gap(Triple::ZERO.bounded_diff(a)),
        LawId::BckBounded => zero_gap(a.bounded_diff(Triple::ONE)),
        LawId::Bck1AsPrinted => {
            zero_gap(a.bounded_diff(b).bounded_diff(a.bounded_diff(z)).bounded_diff(b.bounded_diff(z)))
        }
        LawId::Bck3AsPrinted => zero_gap(a.bounded_diff(b)),
        LawId::RelativePseudocomplementAdjunction => {
            let r = relative_pseudocomplement(a, b);
            let iff = |c: Triple| flag(c.leq(r) == a.intersection(c).leq(b));
            // r itself and anything below it must satisfy the right side.
            iff(z).max(iff(r)).max(iff(r.intersection(z))).max(iff(r.union(z)))
        }
    }
}

fn sample(rng: &mut ChaCha8Rng) -> Triple {
    Triple::new(rng.random(), rng.random(), rng.random()).expect("unit interval")
}

/// Audits one law in the default complement form.
pub fn check_law(law: LawId, samples: u64, seed: u64) -> LawReport {
    check_law_with(law, samples, seed, ComplementForm::Standard)
}

pub fn check_law_with(law: LawId, samples: u64, seed: u64, form: ComplementForm) -> LawReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(law.index());
    let mut report = LawReport {
        law,
        samples,
        failures: 0,
        first_counterexample: None,
        max_violation: 0.0,
    };
    let mut xs = [Triple::ZERO; 3];
    for _ in 0..samples {
        for x in xs.iter_mut().take(law.arity()) {
            *x = sample(&mut rng);
        }
        let lambda: f64 = rng.random();
        let v = violation(law, &xs[..law.arity()], lambda, form);
        report.max_violation = report.max_violation.max(v);
        if v > LAW_TOLERANCE {
            report.failures += 1;
            if report.first_counterexample.is_none() {
                report.first_counterexample = Some(xs[..law.arity()].to_vec());
            }
        }
    }
    report
}

/// Audits every law, in [`LawId::ALL`] order.
pub fn audit_all(samples: u64, seed: u64) -> Vec<LawReport> {
    audit_all_with(samples, seed, ComplementForm::Standard)
}

pub fn audit_all_with(samples: u64, seed: u64, form: ComplementForm) -> Vec<LawReport> {
    LawId::ALL
        .par_iter()
        .map(|&law| check_law_with(law, samples, seed, form))
        .collect()
}

fn format_counterexample(cx: &Option<Vec<Triple>>) -> String {
    cx.as_ref()
        .map(|ts| ts.iter().map(Triple::to_string).collect::<Vec<_>>().join(";"))
        .unwrap_or_default()
}

/// Delimited report: one row per law.
pub fn to_csv(reports: &[LawReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["law", "samples", "failures", "max_violation", "claim_status", "counterexample"])?;
    for r in reports {
        w.write_record([
            r.law.name().to_string(),
            r.samples.to_string(),
            r.failures.to_string(),
            format!("{:e}", r.max_violation),
            r.claim_status().to_string(),
            format_counterexample(&r.first_counterexample),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| crate::Error::io("<audit csv>", e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv writer emits utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tr(t: f64, i: f64, f: f64) -> Triple {
        Triple::new(t, i, f).unwrap()
    }

    #[test]
    fn at_least_eighteen_laws_in_stable_order() {
        assert!(LawId::ALL.len() >= 18);
        let names: Vec<_> = LawId::ALL.iter().map(|l| l.name()).collect();
        let mut dedup = names.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), names.len());
        for l in LawId::ALL {
            assert_eq!(l.name().parse::<LawId>().unwrap(), *l);
        }
    }

    #[test]
    fn rpc_examples() {
        let a = tr(0.2, 0.6, 0.7);
        let b = tr(0.5, 0.3, 0.1);
        assert!(a.leq(b));
        assert_eq!(relative_pseudocomplement(a, b), Triple::TOP);
        assert_eq!(relative_pseudocomplement(b, b), Triple::TOP);
        assert_eq!(relative_pseudocomplement(tr(0.8, 0.1, 0.1), tr(0.3, 0.6, 0.6)), tr(0.3, 0.6, 0.6));
    }

    #[test]
    fn rpc_is_largest_on_a_grid() {
        // Brute force over a 0.1 grid: the residuum is the maximum of all c
        // with a ∩ c ≤ b.
        let grid: Vec<f64> = (0..=10).map(|k| k as f64 / 10.0).collect();
        let cases = [(tr(0.8, 0.1, 0.1), tr(0.3, 0.6, 0.6)), (tr(0.4, 0.5, 0.2), tr(0.6, 0.2, 0.9))];
        for (a, b) in cases {
            let r = relative_pseudocomplement(a, b);
            for &t in &grid {
                for &i in &grid {
                    for &f in &grid {
                        let c = tr(t, i, f);
                        assert_eq!(a.intersection(c).leq(b), c.leq(r), "c = {c}");
                    }
                }
            }
        }
    }

    #[test]
    fn boolean_complement_fails_at_fixed_point() {
        let half = tr(0.5, 0.5, 0.5);
        assert!(violation(LawId::BooleanComplement, &[half], 0.5, ComplementForm::Standard) > 0.0);
        assert_eq!(half.intersection(half.complement()), half);
    }

    #[test]
    fn known_counterexamples() {
        let f = ComplementForm::Standard;
        let kleene = [tr(0.9, 0.5, 0.9), tr(0.1, 0.5, 0.1)];
        assert!(violation(LawId::KleeneCondition, &kleene, 0.5, f) > 0.0);
        let printed = [tr(1.0, 0.0, 0.0), tr(0.0, 0.0, 0.0), tr(1.0, 0.0, 0.0)];
        assert!(violation(LawId::Bck1AsPrinted, &printed, 0.5, f) > 0.0);
        assert_eq!(violation(LawId::Bck1, &printed, 0.5, f), 0.0);
        let dm = [tr(0.0, 0.2, 0.0), tr(0.0, 0.8, 0.0)];
        assert_eq!(violation(LawId::DeMorgan1, &dm, 0.5, f), 0.0);
        assert!(violation(LawId::DeMorgan1, &dm, 0.5, ComplementForm::SwapKeepI) > 0.5);
        assert!(violation(LawId::ComplementInvolution, &[tr(0.1, 0.2, 0.3)], 0.5, ComplementForm::Cyclic) > 0.0);
    }

    #[test]
    fn check_law_is_deterministic() {
        let a = check_law(LawId::StoneIdentity, 500, 9);
        let b = check_law(LawId::StoneIdentity, 500, 9);
        assert_eq!(a, b);
        assert_ne!(a, check_law(LawId::StoneIdentity, 500, 10));
    }

    #[test]
    fn report_invariant_counterexample_iff_failures() {
        for r in audit_all(300, 1) {
            assert_eq!(r.failures == 0, r.first_counterexample.is_none(), "{}", r.law);
            assert_eq!(r.samples, 300);
        }
    }

    #[test]
    fn csv_has_one_row_per_law() {
        let reports = audit_all(50, 3);
        let csv = to_csv(&reports).unwrap();
        assert_eq!(csv.lines().count(), LawId::ALL.len() + 1);
        assert!(csv.starts_with("law,samples,failures,max_violation,claim_status,counterexample"));
    }
}
