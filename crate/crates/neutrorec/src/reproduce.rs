//! End-to-end reproduction of the four-patient example: component
//! similarities from the built-in records, the five pair-measure matrices,
//! and a diff of both against the printed golden values.

use serde::Serialize;

use crate::error::Result;
use crate::ingestion::builtin_example3;
use crate::ingestion::example3::{PAIRS, TABLE10, TABLE11, TABLE12, TABLE7, TABLE8, TABLE9};
use crate::similarity::{similarity_matrix, Measure, MeasureKind, SimilarityComponents, SimilarityMatrix};

/// Default comparison tolerance; the printed values are truncated.
pub const DEFAULT_TOLERANCE: f64 = 5e-3;

/// Which component rows feed the matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComponentSource {
    /// The printed `(S_X, S_Y, S_D)` rows.
    #[default]
    Table7,
    /// Rows recomputed from the built-in records.
    Table5,
}

impl std::str::FromStr for ComponentSource {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table7" => Ok(ComponentSource::Table7),
            "table5" => Ok(ComponentSource::Table5),
            _ => Err(crate::Error::Domain(format!("unknown component source `{s}`"))),
        }
    }
}

/// The matrices in table order with their measures.
pub const MATRIX_MEASURES: [(&str, Measure); 5] = [
    ("table8", Measure::Eq60),
    ("table9", Measure::Eq65),
    ("table10", Measure::Eq67),
    ("table11", Measure::Eq69),
    ("table12", Measure::Eq71),
];

fn golden_matrix(name: &str) -> &'static [[f64; 6]; 6] {
    match name {
        "table8" => &TABLE8,
        "table9" => &TABLE9,
        "table10" => &TABLE10,
        "table11" => &TABLE11,
        _ => &TABLE12,
    }
}

/// One cell that missed its golden value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Mismatch {
    pub cell: String,
    pub computed: f64,
    pub golden: f64,
}

/// Comparison of one table against its golden values.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableCheck {
    pub table: String,
    pub cells: usize,
    pub max_deviation: f64,
    pub mismatches: Vec<Mismatch>,
}

impl TableCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn compare(table: &str, cells: impl IntoIterator<Item = (String, f64, f64)>, tolerance: f64) -> Self {
        let mut check = TableCheck {
            table: table.to_string(),
            cells: 0,
            max_deviation: 0.0,
            mismatches: Vec::new(),
        };
        for (cell, computed, golden) in cells {
            let dev = (computed - golden).abs();
            check.cells += 1;
            check.max_deviation = check.max_deviation.max(dev);
            if !(dev <= tolerance) {
                check.mismatches.push(Mismatch { cell, computed, golden });
            }
        }
        check
    }
}

/// Everything one reproduction run produced.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Reproduction {
    pub source: ComponentSource,
    pub tolerance: f64,
    /// Components recomputed from the built-in records, in pair order.
    pub components: Vec<SimilarityComponents>,
    pub matrices: Vec<(String, SimilarityMatrix)>,
    pub checks: Vec<TableCheck>,
}

/// Component rows recomputed from the built-in records.
pub fn example3_components() -> Result<Vec<SimilarityComponents>> {
    let records = builtin_example3();
    PAIRS
        .iter()
        .map(|&(i, j)| SimilarityComponents::between(&records[i], &records[j]))
        .collect()
}

/// The printed component rows.
pub fn printed_components() -> Vec<SimilarityComponents> {
    TABLE7
        .iter()
        .map(|r| SimilarityComponents::complete(r[0], r[1], r[2]).expect("printed rows are in range"))
        .collect()
}

/// Recomputes every table and diffs it against the golden values.
pub fn reproduce_example3(source: ComponentSource, tolerance: f64) -> Result<Reproduction> {
    let components = example3_components()?;
    let names = ["sx", "sy", "sd"];
    let t7 = TableCheck::compare(
        "table7",
        components.iter().zip(PAIRS).zip(TABLE7).flat_map(|((c, (i, j)), g)| {
            let got = [c.sx, c.sy, c.sd.unwrap_or(f64::NAN)];
            (0..3).map(move |k| (format!("{}({},{})", names[k], i + 1, j + 1), got[k], g[k]))
        }),
        tolerance,
    );
    let rows = match source {
        ComponentSource::Table7 => printed_components(),
        ComponentSource::Table5 => components.clone(),
    };
    let mut matrices = Vec::new();
    let mut checks = vec![t7];
    for (name, measure) in MATRIX_MEASURES {
        let m = similarity_matrix(MeasureKind::plain(measure), &rows)?;
        let golden = golden_matrix(name);
        checks.push(TableCheck::compare(
            name,
            (0..6).flat_map(|i| {
                let m = &m;
                (0..6).map(move |j| (format!("[{}][{}]", i + 1, j + 1), m.values[i][j], golden[i][j]))
            }),
            tolerance,
        ));
        matrices.push((name.to_string(), m));
    }
    Ok(Reproduction {
        source,
        tolerance,
        components,
        matrices,
        checks,
    })
}

impl Reproduction {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(TableCheck::passed)
    }

    /// Tables followed by one `PASS`/`FAIL` line per table and each mismatch.
    pub fn render(&self) -> String {
        let mut out = format!(
            "# example3 source={} tolerance={}\n# table7 (computed from the built-in records)\npair,sx,sy,sd\n",
            match self.source {
                ComponentSource::Table7 => "table7",
                ComponentSource::Table5 => "table5",
            },
            self.tolerance
        );
        for (c, (i, j)) in self.components.iter().zip(PAIRS) {
            out.push_str(&format!(
                "({},{}),{:.6},{:.6},{:.6}\n",
                i + 1,
                j + 1,
                c.sx,
                c.sy,
                c.sd.unwrap_or(f64::NAN)
            ));
        }
        for (name, m) in &self.matrices {
            out.push_str(&format!("# {name}\n"));
            out.push_str(&m.to_delimited(','));
        }
        out.push_str("# diff\n");
        for c in &self.checks {
            out.push_str(&format!(
                "{} {} cells={} max_deviation={:.6}\n",
                if c.passed() { "PASS" } else { "FAIL" },
                c.table,
                c.cells,
                c.max_deviation
            ));
            for m in &c.mismatches {
                out.push_str(&format!(
                    "  {} {}: computed {:.6}, golden {}\n",
                    c.table, m.cell, m.computed, m.golden
                ));
            }
        }
        out
    }
}
