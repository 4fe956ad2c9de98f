//! Delimited and JSON renderings of evaluation and statistics results.
//!
//! Delimited reports start with `#` comment lines naming the configuration,
//! followed by a header row; column order is fixed.

use serde::Serialize;

use super::pipeline::{spread, EvalReport};
use super::stats::{AnovaTable, KruskalTable};
use crate::error::{Error, Result};

/// Output format of a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::domain(format!("unknown format `{s}`"))),
        }
    }
}

pub const EVAL_COLUMNS: [&str; 11] = [
    "dataset",
    "records",
    "attributes",
    "classes",
    "dropped_rows",
    "evaluated",
    "scored",
    "skipped",
    "clamped",
    "mse",
    "seconds",
];

pub const GRID_COLUMNS: [&str; 8] = ["dataset", "alpha", "beta", "gamma", "scored", "skipped", "mse", "seconds"];

pub const STATS_COLUMNS: [&str; 6] = ["source", "ss", "df", "ms", "statistic", "p"];

fn seconds(r: &EvalReport, timing: bool) -> f64 {
    if timing {
        r.seconds
    } else {
        0.0
    }
}

fn finish(w: csv::Writer<Vec<u8>>, mut out: String) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Error::io("<report>", e.into_error()))?;
    out.push_str(&String::from_utf8(bytes).expect("csv output is utf-8"));
    Ok(out)
}

fn header(reports: &[EvalReport]) -> String {
    match reports.first() {
        Some(r) => format!("# {}\n", r.config.describe()),
        None => String::new(),
    }
}

/// One row per report (dataset × config → MSE, seconds).
pub fn eval_csv(reports: &[EvalReport], timing: bool) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(EVAL_COLUMNS)?;
    for r in reports {
        w.write_record([
            r.dataset.clone(),
            r.records.to_string(),
            r.attributes.to_string(),
            r.classes.to_string(),
            r.dropped_rows.to_string(),
            r.evaluated.to_string(),
            r.scored.to_string(),
            r.skipped.to_string(),
            r.clamped.to_string(),
            format!("{:.6}", r.mse),
            format!("{:.6}", seconds(r, timing)),
        ])?;
    }
    finish(w, header(reports))
}

/// One row per synthesization setting, with the MSE spread in the header.
pub fn grid_csv(reports: &[EvalReport], timing: bool) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(GRID_COLUMNS)?;
    for r in reports {
        let d = r.config.deneutro;
        w.write_record([
            r.dataset.clone(),
            d.alpha().to_string(),
            d.beta().to_string(),
            d.gamma().to_string(),
            r.scored.to_string(),
            r.skipped.to_string(),
            format!("{:.6}", r.mse),
            format!("{:.6}", seconds(r, timing)),
        ])?;
    }
    let head = format!("{}# mse_spread={:.6}\n", header(reports), spread(reports));
    finish(w, head)
}

#[derive(Serialize)]
struct EvalDocument {
    header: String,
    mse_spread: f64,
    reports: Vec<EvalReport>,
}

/// JSON document holding every report; `seconds` is zeroed without timing.
pub fn eval_json(reports: &[EvalReport], timing: bool) -> Result<String> {
    let reports: Vec<EvalReport> = reports
        .iter()
        .map(|r| EvalReport {
            seconds: seconds(r, timing),
            ..r.clone()
        })
        .collect();
    let doc = EvalDocument {
        header: reports.first().map(|r| r.config.describe()).unwrap_or_default(),
        mse_spread: spread(&reports),
        reports,
    };
    Ok(serde_json::to_string_pretty(&doc)? + "\n")
}

fn stats_rows(
    w: &mut csv::Writer<Vec<u8>>,
    ss: [f64; 3],
    df: [usize; 3],
    ms: [f64; 2],
    statistic: f64,
    p: f64,
) -> Result<()> {
    w.write_record(STATS_COLUMNS)?;
    w.write_record([
        "Columns".to_string(),
        format!("{:.6}", ss[0]),
        df[0].to_string(),
        format!("{:.6}", ms[0]),
        format!("{statistic:.6}"),
        format!("{p:.6}"),
    ])?;
    w.write_record([
        "Error".to_string(),
        format!("{:.6}", ss[1]),
        df[1].to_string(),
        format!("{:.6}", ms[1]),
        String::new(),
        String::new(),
    ])?;
    w.write_record([
        "Total".to_string(),
        format!("{:.6}", ss[2]),
        df[2].to_string(),
        String::new(),
        String::new(),
        String::new(),
    ])?;
    Ok(())
}

/// ANOVA table: rows Columns / Error / Total; statistic is F.
pub fn anova_csv(t: &AnovaTable, groups: usize) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    stats_rows(
        &mut w,
        [t.ss_columns, t.ss_error, t.ss_total],
        [t.df_columns, t.df_error, t.df_total],
        [t.ms_columns, t.ms_error],
        t.f_stat,
        t.p_value,
    )?;
    finish(w, format!("# test=anova groups={groups} observations={}\n", t.df_total + 1))
}

/// Kruskal–Wallis table on ranks; statistic is the chi-square `H`.
pub fn kruskal_csv(t: &KruskalTable, groups: usize) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    stats_rows(
        &mut w,
        [t.ss_columns, t.ss_error, t.ss_total],
        [t.df_columns, t.df_error, t.df_total],
        [t.ms_columns, t.ms_error],
        t.h_stat,
        t.p_value,
    )?;
    finish(w, format!("# test=kruskal groups={groups} observations={}\n", t.df_total + 1))
}

/// Reads a numeric matrix (comma, tab or whitespace separated; `#` comments,
/// a non-numeric header row and row labels in the first cell are skipped)
/// and returns its columns, one group per column.
pub fn read_matrix_columns(text: &str) -> Result<Vec<Vec<f64>>> {
    let mut columns: Vec<Vec<f64>> = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let cells: Vec<&str> = line
            .split(|c: char| c == ',' || c == '\t' || c.is_whitespace())
            .filter(|c| !c.is_empty())
            .collect();
        let parse = |cs: &[&str]| cs.iter().map(|c| c.parse::<f64>()).collect::<std::result::Result<Vec<f64>, _>>();
        // A non-numeric first cell is a row label.
        let parsed = parse(&cells).or_else(|e| if cells.len() > 1 { parse(&cells[1..]) } else { Err(e) });
        let Ok(values) = parsed else {
            if columns.is_empty() {
                continue; // header row
            }
            return Err(Error::domain(format!("line {}: non-numeric cell", k + 1)));
        };
        if columns.is_empty() {
            columns = vec![Vec::new(); values.len()];
        }
        if values.len() != columns.len() {
            return Err(Error::LengthMismatch {
                left: columns.len(),
                right: values.len(),
            });
        }
        for (c, v) in columns.iter_mut().zip(values) {
            c.push(v);
        }
    }
    if columns.is_empty() {
        return Err(Error::domain("matrix file holds no numeric rows"));
    }
    Ok(columns)
}
