//! Benchmark dataset schemas and delimited-text loading.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A numeric input column and, optionally, its admissible range.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColumnSpec {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub range: Option<[f64; 2]>,
}

/// The outcome column. With `levels` the raw value is matched against the
/// listed class names and normalized as `index / (levels − 1)`; otherwise it
/// is numeric and normalized over `range` (or the observed range).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TargetSpec {
    pub column: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub range: Option<[f64; 2]>,
}

/// Columns and expectations for one dataset.
///
/// `features` feed the record's X slot, `symptoms` its Y slot and the target
/// becomes the single rated disease.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatasetSchema {
    pub name: String,
    /// Data file; relative paths resolve against the schema file's directory.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub file: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    pub expected_records: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<usize>,
    pub features: Vec<ColumnSpec>,
    pub symptoms: Vec<ColumnSpec>,
    pub target: TargetSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

fn check_range(what: &str, r: Option<[f64; 2]>) -> Result<()> {
    match r {
        Some([lo, hi]) if !(lo.is_finite() && hi.is_finite() && lo < hi) => {
            Err(Error::schema(format!("{what}: range [{lo}, {hi}] is empty or not finite")))
        }
        _ => Ok(()),
    }
}

impl DatasetSchema {
    pub fn parse(text: &str) -> Result<Self> {
        let s: DatasetSchema = toml::from_str(text)?;
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if self.expected_records == 0 {
            return Err(Error::schema(format!("{}: expected_records must be positive", self.name)));
        }
        if self.features.is_empty() || self.symptoms.is_empty() {
            return Err(Error::schema(format!("{}: needs at least one feature and one symptom column", self.name)));
        }
        let names: Vec<&str> = self.attribute_names().collect();
        for (k, n) in names.iter().enumerate() {
            if names[..k].contains(n) {
                return Err(Error::schema(format!("{}: column `{n}` listed twice", self.name)));
            }
            if *n == self.target.column {
                return Err(Error::schema(format!("{}: target `{n}` is also an attribute", self.name)));
            }
        }
        for c in self.features.iter().chain(&self.symptoms) {
            check_range(&c.name, c.range)?;
        }
        check_range(&self.target.column, self.target.range)?;
        if let Some(levels) = &self.target.levels {
            if levels.len() < 2 {
                return Err(Error::schema(format!("{}: target needs at least two levels", self.name)));
            }
        }
        Ok(())
    }

    /// Feature columns followed by symptom columns.
    pub fn attribute_names(&self) -> impl Iterator<Item = &str> + '_ {
        self.features.iter().chain(&self.symptoms).map(|c| c.name.as_str())
    }

    pub fn attribute_count(&self) -> usize {
        self.features.len() + self.symptoms.len()
    }
}

/// Reads a schema; a relative `file` is resolved against the schema's directory.
pub fn load_schema(path: impl AsRef<Path>) -> Result<DatasetSchema> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut schema = DatasetSchema::parse(&text)?;
    if let Some(f) = &schema.file {
        if f.is_relative() {
            let base = path.parent().unwrap_or(Path::new("."));
            schema.file = Some(base.join(f));
        }
    }
    Ok(schema)
}

/// One validated row.
#[derive(Debug, Clone, PartialEq)]
pub struct DataRow {
    /// 1-based line number in the source file.
    pub line: usize,
    pub features: Vec<f64>,
    pub symptoms: Vec<f64>,
    /// Level index for categorical targets, the raw number otherwise.
    pub target: f64,
}

impl DataRow {
    /// `(name, value)` pairs for every attribute, features first.
    pub fn attributes<'a>(&'a self, schema: &'a DatasetSchema) -> impl Iterator<Item = (&'a str, f64)> + 'a {
        schema
            .attribute_names()
            .zip(self.features.iter().chain(&self.symptoms).copied())
    }
}

/// A loaded dataset.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub schema: DatasetSchema,
    pub rows: Vec<DataRow>,
    /// Rows dropped during validation.
    pub dropped: usize,
    target_bounds: (f64, f64),
}

impl Dataset {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Values of one attribute column, in row order.
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let k = self.schema.attribute_names().position(|n| n == name)?;
        let nf = self.schema.features.len();
        Some(
            self.rows
                .iter()
                .map(|r| if k < nf { r.features[k] } else { r.symptoms[k - nf] })
                .collect(),
        )
    }

    /// Number of target classes: the declared levels, else the declared
    /// count, else the distinct observed values.
    pub fn class_count(&self) -> usize {
        if let Some(l) = &self.schema.target.levels {
            return l.len();
        }
        if let Some(c) = self.schema.classes {
            return c;
        }
        let mut v: Vec<f64> = self.rows.iter().map(|r| r.target).collect();
        v.sort_by(f64::total_cmp);
        v.dedup();
        v.len()
    }

    /// Target of `row` mapped into `[0, 1]`.
    pub fn normalized_target(&self, row: &DataRow) -> f64 {
        let (lo, hi) = self.target_bounds;
        if hi > lo {
            ((row.target - lo) / (hi - lo)).clamp(0.0, 1.0)
        } else {
            0.0
        }
    }

    /// Re-serializes the validated rows as CSV with the schema's columns.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header: Vec<&str> = self.schema.attribute_names().collect();
        header.push(&self.schema.target.column);
        w.write_record(&header)?;
        for r in &self.rows {
            let mut rec: Vec<String> = r.features.iter().chain(&r.symptoms).map(|v| v.to_string()).collect();
            rec.push(match &self.schema.target.levels {
                Some(levels) => levels[r.target as usize].clone(),
                None => r.target.to_string(),
            });
            w.write_record(&rec)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::io("<dataset csv>", e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

fn sniff_delimiter(text: &str) -> u8 {
    let header = text.lines().next().unwrap_or("");
    if header.contains('\t') {
        b'\t'
    } else {
        b','
    }
}

fn parse_number(field: &str, range: Option<[f64; 2]>) -> Option<f64> {
    let v: f64 = field.trim().parse().ok()?;
    if !v.is_finite() {
        return None;
    }
    match range {
        Some([lo, hi]) if v < lo || v > hi => None,
        _ => Some(v),
    }
}

fn parse_level(field: &str, levels: &[String]) -> Option<f64> {
    let field = field.trim();
    if let Some(k) = levels.iter().position(|l| l == field) {
        return Some(k as f64);
    }
    // "1.0" should match level "1".
    let v: f64 = field.parse().ok()?;
    levels
        .iter()
        .position(|l| l.parse::<f64>().ok() == Some(v))
        .map(|k| k as f64)
}

/// Parses delimited text (comma or tab, sniffed from the header). Rows with
/// missing, unparseable or out-of-range required fields are dropped and
/// counted; a record count differing from the schema only logs a warning.
pub fn parse_dataset(text: &str, schema: &DatasetSchema) -> Result<Dataset> {
    schema.validate()?;
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(sniff_delimiter(text))
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers = reader.headers()?.clone();
    let index = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::schema(format!("{}: header has no column `{name}`", schema.name)))
    };
    let fx = schema.features.iter().map(|c| index(&c.name)).collect::<Result<Vec<_>>>()?;
    let sx = schema.symptoms.iter().map(|c| index(&c.name)).collect::<Result<Vec<_>>>()?;
    let tx = index(&schema.target.column)?;

    let mut rows = Vec::new();
    let mut dropped = 0;
    for (k, rec) in reader.records().enumerate() {
        let line = k + 2;
        let Ok(rec) = rec else {
            dropped += 1;
            continue;
        };
        let numbers = |idx: &[usize], specs: &[ColumnSpec]| -> Option<Vec<f64>> {
            idx.iter()
                .zip(specs)
                .map(|(&i, c)| parse_number(rec.get(i)?, c.range))
                .collect()
        };
        let features = numbers(&fx, &schema.features);
        let symptoms = numbers(&sx, &schema.symptoms);
        let target = rec.get(tx).and_then(|f| match &schema.target.levels {
            Some(levels) => parse_level(f, levels),
            None => parse_number(f, schema.target.range),
        });
        match (features, symptoms, target) {
            (Some(features), Some(symptoms), Some(target)) => rows.push(DataRow {
                line,
                features,
                symptoms,
                target,
            }),
            _ => {
                log::debug!("{}: dropping line {line}", schema.name);
                dropped += 1;
            }
        }
    }
    if rows.len() != schema.expected_records {
        log::warn!(
            "{}: loaded {} records, schema expects {} ({} dropped)",
            schema.name,
            rows.len(),
            schema.expected_records,
            dropped
        );
    }
    let target_bounds = match (&schema.target.levels, schema.target.range) {
        (Some(levels), _) => (0.0, (levels.len() - 1) as f64),
        (None, Some([lo, hi])) => (lo, hi),
        (None, None) => rows.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
            (lo.min(r.target), hi.max(r.target))
        }),
    };
    Ok(Dataset {
        schema: schema.clone(),
        rows,
        dropped,
        target_bounds,
    })
}

/// Loads `path` under `schema`.
pub fn load_dataset(path: impl AsRef<Path>, schema: &DatasetSchema) -> Result<Dataset> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_dataset(&text, schema)
}
