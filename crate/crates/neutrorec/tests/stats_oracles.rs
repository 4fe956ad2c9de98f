//! ANOVA, Kruskal–Wallis and the special functions against independent oracles.

use neutrorec::evaluation::report::read_matrix_columns;
use neutrorec::evaluation::special::{chi2_sf, f_sf, ln_gamma, reg_gamma_p, reg_gamma_q, reg_inc_beta};
use neutrorec::evaluation::{anova_one_way, kruskal_wallis, mid_ranks};
use proptest::prelude::*;
use statrs::distribution::{ChiSquared, ContinuousCDF, FisherSnedecor};

fn table14() -> Vec<Vec<f64>> {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/table14_mse.csv")).unwrap();
    read_matrix_columns(&text).unwrap()
}

/// Textbook computational formulas: SS_total = ΣX² − (ΣX)²/N,
/// SS_columns = Σ Tⱼ²/nⱼ − (ΣX)²/N.
fn textbook_anova(groups: &[Vec<f64>]) -> (f64, f64, f64) {
    let n: f64 = groups.iter().map(|g| g.len() as f64).sum();
    let grand: f64 = groups.iter().flatten().sum();
    let sq: f64 = groups.iter().flatten().map(|x| x * x).sum();
    let cf = grand * grand / n;
    let ss_total = sq - cf;
    let ss_columns = groups.iter().map(|g| g.iter().sum::<f64>().powi(2) / g.len() as f64).sum::<f64>() - cf;
    let k = groups.len() as f64;
    let f = (ss_columns / (k - 1.0)) / ((ss_total - ss_columns) / (n - k));
    (ss_columns, ss_total, f)
}

/// Brute-force mid-ranks by counting and the classic tie-corrected `H`.
fn textbook_kruskal(groups: &[Vec<f64>]) -> f64 {
    let pooled: Vec<f64> = groups.iter().flatten().copied().collect();
    let n = pooled.len() as f64;
    let rank = |x: f64| {
        let less = pooled.iter().filter(|&&y| y < x).count() as f64;
        let equal = pooled.iter().filter(|&&y| y == x).count() as f64;
        less + (equal + 1.0) / 2.0
    };
    let h = 12.0 / (n * (n + 1.0))
        * groups
            .iter()
            .map(|g| g.iter().map(|&x| rank(x)).sum::<f64>().powi(2) / g.len() as f64)
            .sum::<f64>()
        - 3.0 * (n + 1.0);
    let mut ties = 0.0;
    let mut seen: Vec<f64> = Vec::new();
    for &x in &pooled {
        if !seen.contains(&x) {
            seen.push(x);
            let t = pooled.iter().filter(|&&y| y == x).count() as f64;
            ties += t * t * t - t;
        }
    }
    h / (1.0 - ties / (n * n * n - n))
}

fn groups() -> impl Strategy<Value = Vec<Vec<f64>>> {
    // Values on a coarse grid so ties occur.
    let value = prop_oneof![(-50i32..50).prop_map(|v| v as f64 / 4.0), -20.0..20.0f64];
    prop::collection::vec(prop::collection::vec(value, 2..7), 2..6)
        .prop_filter("not all tied", |g| {
            let first = g[0][0];
            g.iter().flatten().any(|&x| x != first)
        })
}

#[test]
fn ln_gamma_matches_statrs() {
    for k in 1..400 {
        let x = k as f64 * 0.37;
        let (a, b) = (ln_gamma(x), statrs::function::gamma::ln_gamma(x));
        assert!((a - b).abs() <= 1e-10 * (1.0 + b.abs()), "x={x}: {a} vs {b}");
    }
}

#[test]
fn incomplete_beta_matches_statrs() {
    for a in [0.5, 1.0, 2.5, 3.5, 16.0, 40.0] {
        for b in [0.5, 1.0, 3.5, 7.0, 19.5] {
            for k in 0..=20 {
                let x = k as f64 / 20.0;
                let want = statrs::function::beta::beta_reg(a, b, x);
                let got = reg_inc_beta(a, b, x);
                assert!((got - want).abs() <= 1e-10, "I({a},{b},{x}) = {got} vs {want}");
            }
        }
    }
}

#[test]
fn incomplete_gamma_matches_statrs() {
    for a in [0.5, 1.0, 3.5, 7.0, 20.0] {
        for k in 1..=60 {
            let x = k as f64 * 0.5;
            let p = statrs::function::gamma::gamma_lr(a, x);
            assert!((reg_gamma_p(a, x) - p).abs() <= 1e-10, "P({a},{x})");
            assert!((reg_gamma_q(a, x) - (1.0 - p)).abs() <= 1e-10, "Q({a},{x})");
        }
    }
}

#[test]
fn tail_probabilities_match_statrs() {
    for (d1, d2) in [(1.0, 4.0), (7.0, 32.0), (3.0, 10.0), (12.0, 5.0)] {
        let dist = FisherSnedecor::new(d1, d2).unwrap();
        for k in 1..60 {
            let f = k as f64 * 0.1;
            assert!((f_sf(f, d1, d2) - dist.sf(f)).abs() <= 1e-10, "F({d1},{d2}) at {f}");
        }
    }
    for k in [1.0, 2.0, 7.0, 15.0] {
        let dist = ChiSquared::new(k).unwrap();
        for s in 1..80 {
            let x = s as f64 * 0.25;
            assert!((chi2_sf(x, k) - dist.sf(x)).abs() <= 1e-10, "chi2({k}) at {x}");
        }
    }
}

#[test]
fn table14_anova_against_textbook_formulas() {
    let g = table14();
    assert_eq!((g.len(), g[0].len()), (8, 5));
    let t = anova_one_way(&g).unwrap();
    let (ss_c, ss_t, f) = textbook_anova(&g);
    assert!((t.ss_columns - ss_c).abs() < 1e-12);
    assert!((t.ss_total - ss_t).abs() < 1e-12);
    assert!((t.f_stat - f).abs() < 1e-9);
    assert_eq!((t.df_columns, t.df_error, t.df_total), (7, 32, 39));
    let want_p = FisherSnedecor::new(7.0, 32.0).unwrap().sf(f);
    assert!((t.p_value - want_p).abs() < 1e-10);
}

#[test]
fn table14_kruskal_against_brute_force() {
    let g = table14();
    let t = kruskal_wallis(&g).unwrap();
    assert!((t.h_stat - textbook_kruskal(&g)).abs() < 1e-9);
    assert!((t.p_value - ChiSquared::new(7.0).unwrap().sf(t.h_stat)).abs() < 1e-10);
}

#[test]
fn kruskal_two_pairs() {
    let t = kruskal_wallis(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
    assert!((t.h_stat - 2.4).abs() < 1e-12);
    assert!((textbook_kruskal(&[vec![1.0, 2.0], vec![3.0, 4.0]]) - 2.4).abs() < 1e-12);
}

#[test]
fn kruskal_all_tied_is_zero() {
    let t = kruskal_wallis(&[vec![0.5, 0.5], vec![0.5, 0.5, 0.5]]).unwrap();
    assert_eq!((t.h_stat, t.p_value), (0.0, 1.0));
}

#[test]
fn mid_ranks_share_ties() {
    assert_eq!(mid_ranks(&[3.0, 1.0, 3.0, 2.0]), vec![3.5, 1.0, 3.5, 2.0]);
}

#[test]
fn too_few_groups_is_an_error() {
    assert!(anova_one_way(&[vec![1.0, 2.0]]).is_err());
    assert!(kruskal_wallis(&[vec![1.0], vec![]]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn anova_matches_textbook_and_is_additive(g in groups()) {
        let t = anova_one_way(&g).unwrap();
        let scale = 1.0 + g.iter().flatten().map(|x| x * x).sum::<f64>();
        prop_assert!((t.ss_columns + t.ss_error - t.ss_total).abs() <= 1e-10 * scale);
        prop_assert_eq!(t.df_columns + t.df_error, t.df_total);
        let (ss_c, ss_t, _) = textbook_anova(&g);
        prop_assert!((t.ss_columns - ss_c).abs() <= 1e-9 * scale);
        prop_assert!((t.ss_total - ss_t).abs() <= 1e-9 * scale);
        prop_assert!((0.0..=1.0).contains(&t.p_value));
    }

    #[test]
    fn anova_f_ignores_shift_and_scale(g in groups(), shift in -100.0..100.0f64, scale in prop_oneof![-10.0..-0.1f64, 0.1..10.0f64]) {
        let t = anova_one_way(&g).unwrap();
        prop_assume!(t.f_stat.is_finite() && t.ss_error > 1e-9);
        let moved: Vec<Vec<f64>> = g.iter().map(|v| v.iter().map(|x| scale * x + shift).collect()).collect();
        let u = anova_one_way(&moved).unwrap();
        prop_assert!((t.f_stat - u.f_stat).abs() <= 1e-6 * (1.0 + t.f_stat), "{} vs {}", t.f_stat, u.f_stat);
    }

    #[test]
    fn kruskal_matches_brute_force(g in groups()) {
        let t = kruskal_wallis(&g).unwrap();
        prop_assert!((t.h_stat - textbook_kruskal(&g)).abs() <= 1e-9 * (1.0 + t.h_stat));
        prop_assert!((0.0..=1.0).contains(&t.p_value));
    }

    #[test]
    fn kruskal_ignores_monotone_transforms(g in groups()) {
        let t = kruskal_wallis(&g).unwrap();
        let moved: Vec<Vec<f64>> = g.iter().map(|v| v.iter().map(|x| (x / 7.0).exp() * 3.0 - 1.0).collect()).collect();
        let u = kruskal_wallis(&moved).unwrap();
        prop_assert!((t.h_stat - u.h_stat).abs() <= 1e-12 * (1.0 + t.h_stat));
    }

    #[test]
    fn tails_decrease_with_the_statistic(a in 0.0..20.0f64, b in 0.0..20.0f64, d1 in 1u32..10, d2 in 1u32..40) {
        let (lo, hi) = (a.min(b), a.max(b));
        let (d1, d2) = (d1 as f64, d2 as f64);
        prop_assert!(f_sf(hi, d1, d2) <= f_sf(lo, d1, d2) + 1e-15);
        prop_assert!(chi2_sf(hi, d1) <= chi2_sf(lo, d1) + 1e-15);
        prop_assert!((0.0..=1.0).contains(&f_sf(lo, d1, d2)) && (0.0..=1.0).contains(&chi2_sf(lo, d1)));
    }
}
