//! One-way ANOVA and the Kruskal–Wallis rank test.

use serde::Serialize;

use super::special::{chi2_sf, f_sf};
use crate::error::{Error, Result};

/// Between/within decomposition of one-way ANOVA.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnovaTable {
    pub ss_columns: f64,
    pub ss_error: f64,
    pub ss_total: f64,
    pub df_columns: usize,
    pub df_error: usize,
    pub df_total: usize,
    pub ms_columns: f64,
    pub ms_error: f64,
    pub f_stat: f64,
    pub p_value: f64,
}

/// Kruskal–Wallis table on ranks (tie-corrected).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KruskalTable {
    pub ss_columns: f64,
    pub ss_error: f64,
    pub ss_total: f64,
    pub df_columns: usize,
    pub df_error: usize,
    pub df_total: usize,
    pub ms_columns: f64,
    pub ms_error: f64,
    pub h_stat: f64,
    pub p_value: f64,
}

fn check_groups(groups: &[Vec<f64>]) -> Result<usize> {
    if groups.len() < 2 {
        return Err(Error::domain("need at least two groups"));
    }
    if let Some(k) = groups.iter().position(Vec::is_empty) {
        return Err(Error::domain(format!("group {k} is empty")));
    }
    if groups.iter().flatten().any(|x| !x.is_finite()) {
        return Err(Error::domain("observations must be finite"));
    }
    let n: usize = groups.iter().map(Vec::len).sum();
    if n <= groups.len() {
        return Err(Error::domain("need more observations than groups"));
    }
    Ok(n)
}

struct Decomposition {
    ss_columns: f64,
    ss_error: f64,
    ss_total: f64,
}

fn decompose(groups: &[Vec<f64>], n: usize) -> Decomposition {
    let grand = groups.iter().flatten().sum::<f64>() / n as f64;
    let mut ss_columns = 0.0;
    let mut ss_error = 0.0;
    for g in groups {
        let mean = g.iter().sum::<f64>() / g.len() as f64;
        ss_columns += g.len() as f64 * (mean - grand).powi(2);
        ss_error += g.iter().map(|x| (x - mean).powi(2)).sum::<f64>();
    }
    let ss_total = groups.iter().flatten().map(|x| (x - grand).powi(2)).sum();
    Decomposition {
        ss_columns,
        ss_error,
        ss_total,
    }
}

/// One-way ANOVA; the p-value is the upper tail of `F(k−1, N−k)`.
///
/// All-constant data gives `F = 0, p = 1`; constant groups with distinct
/// means give `F = ∞, p = 0`.
pub fn anova_one_way(groups: &[Vec<f64>]) -> Result<AnovaTable> {
    let n = check_groups(groups)?;
    let k = groups.len();
    let Decomposition {
        mut ss_columns,
        mut ss_error,
        mut ss_total,
    } = decompose(groups, n);
    // Sums of squares below this are rounding noise.
    let scale: f64 = groups.iter().flatten().map(|x| x * x).sum::<f64>().max(f64::MIN_POSITIVE);
    let noise = 1e-24 * scale;
    let (df_columns, df_error) = (k - 1, n - k);
    if ss_total <= noise {
        ss_columns = 0.0;
        ss_error = 0.0;
        ss_total = 0.0;
    }
    let ms_columns = ss_columns / df_columns as f64;
    let ms_error = ss_error / df_error as f64;
    let (f_stat, p_value) = if ss_total == 0.0 {
        (0.0, 1.0)
    } else if ss_error <= noise {
        (f64::INFINITY, 0.0)
    } else {
        let f = ms_columns / ms_error;
        (f, f_sf(f, df_columns as f64, df_error as f64))
    };
    Ok(AnovaTable {
        ss_columns,
        ss_error,
        ss_total,
        df_columns,
        df_error,
        df_total: n - 1,
        ms_columns,
        ms_error,
        f_stat,
        p_value,
    })
}

/// Mid-ranks (1-based) of `values`; ties share the mean of their positions.
pub fn mid_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        // Positions start+1 ..= end share their mean.
        let rank = (start + 1 + end) as f64 / 2.0;
        for &idx in &order[start..end] {
            ranks[idx] = rank;
        }
        start = end;
    }
    ranks
}

/// Kruskal–Wallis test: one-way ANOVA on mid-ranks with
/// `H = SS_columns / (SS_total / (N − 1))`, which equals the tie-corrected
/// statistic. All-tied data gives `H = 0`.
pub fn kruskal_wallis(groups: &[Vec<f64>]) -> Result<KruskalTable> {
    let n = check_groups(groups)?;
    let pooled: Vec<f64> = groups.iter().flatten().copied().collect();
    let ranks = mid_ranks(&pooled);
    let mut ranked = Vec::with_capacity(groups.len());
    let mut offset = 0;
    for g in groups {
        ranked.push(ranks[offset..offset + g.len()].to_vec());
        offset += g.len();
    }
    let Decomposition {
        ss_columns,
        ss_error,
        ss_total,
    } = decompose(&ranked, n);
    let (df_columns, df_error) = (groups.len() - 1, n - groups.len());
    let h_stat = if ss_total > 0.0 {
        ss_columns / (ss_total / (n - 1) as f64)
    } else {
        0.0
    };
    Ok(KruskalTable {
        ss_columns,
        ss_error,
        ss_total,
        df_columns,
        df_error,
        df_total: n - 1,
        ms_columns: ss_columns / df_columns as f64,
        ms_error: ss_error / df_error as f64,
        h_stat,
        p_value: chi2_sf(h_stat, df_columns as f64),
    })
}
