//! Command-line interface.
//!
//! Exit codes: 0 success, 1 usage, 2 validation (bad input or config),
//! 3 runtime or data failure (I/O, golden mismatch).

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::ComplementForm;
use crate::audit::{self, LawId};
use crate::error::{Error, Result};
use crate::evaluation::pipeline::{default_grid, deneutro_grid, predict_records, run_pipeline, MembershipSource, Outcome, PipelineConfig, Split};
use crate::evaluation::report::{self, anova_csv, eval_csv, eval_json, grid_csv, kruskal_csv, read_matrix_columns};
use crate::evaluation::stats::{anova_one_way, kruskal_wallis};
use crate::ingestion::{load_dataset, load_schema, Dataset};
use crate::membership::DeneutroParams;
use crate::prediction::WeightMode;
use crate::reproduce::{printed_components, reproduce_example3, ComponentSource, DEFAULT_TOLERANCE};
use crate::similarity::{similarity_matrix_with, Measure, MeasureKind, SimilarityComponents, Weights};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_RUNTIME: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "neutrorec", version, about = "Neutrosophic recommender systems for medical diagnosis", arg_required_else_help = true)]
pub struct Cli {
    /// Cap on worker threads (predict, algebra-audit).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Log verbosity: -v info, -vv debug.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Recompute the four-patient example tables and diff against golden values.
    #[command(name = "reproduce-example3")]
    ReproduceExample3 {
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
        /// Component rows for the matrices: printed (table7) or recomputed (table5).
        #[arg(long, default_value = "table7")]
        source: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check algebraic laws on seeded random triples.
    #[command(name = "algebra-audit")]
    AlgebraAudit {
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// standard | swap-keep-i | cyclic
        #[arg(long, default_value = "standard")]
        complement: String,
        /// Restrict to these laws (repeatable).
        #[arg(long = "law")]
        laws: Vec<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Pair-measure matrix over component rows.
    Similarity {
        #[command(flatten)]
        measure: MeasureArgs,
        /// CSV with columns sx,sy,sd; defaults to the printed example rows.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Halve summed cells.
        #[arg(long)]
        normalize: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Per-record predictions under leave-one-out (or holdout).
    Predict {
        #[command(flatten)]
        data: DataArgs,
        /// Membership config file; percentile labels when absent.
        #[arg(long)]
        membership: Option<PathBuf>,
        #[command(flatten)]
        measure: MeasureArgs,
        #[arg(long, value_enum, default_value_t = ModeArg::Inverted)]
        mode: ModeArg,
        /// Hold out this fraction instead of leave-one-out.
        #[arg(long)]
        holdout: Option<f64>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Benchmark report: dataset × config → MSE, seconds.
    Evaluate {
        #[command(flatten)]
        data: DataArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Synthesization-parameter sweep.
    Grid {
        #[command(flatten)]
        data: DataArgs,
        #[command(flatten)]
        run: RunArgs,
        /// One `alpha,beta,gamma` setting (repeatable); the six defaults when absent.
        #[arg(long = "setting")]
        settings: Vec<String>,
    },
    /// One-way ANOVA or Kruskal–Wallis over the columns of a matrix file.
    Stats {
        #[arg(value_enum)]
        test: StatsTest,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StatsTest {
    Anova,
    Kruskal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    AsStated,
    Inverted,
}

impl From<ModeArg> for WeightMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::AsStated => WeightMode::AsStated,
            ModeArg::Inverted => WeightMode::Inverted,
        }
    }
}

#[derive(Debug, Args)]
pub struct MeasureArgs {
    /// eq60 | eq65 | eq67 | eq69 | eq71 | eq71-absolute
    #[arg(long, default_value = "eq65")]
    pub measure: String,
    #[arg(long, requires = "w2")]
    pub w1: Option<f64>,
    #[arg(long, requires = "w1")]
    pub w2: Option<f64>,
}

impl MeasureArgs {
    fn kind(&self) -> Result<MeasureKind> {
        let measure: Measure = self.measure.parse()?;
        Ok(match (self.w1, self.w2) {
            (Some(w1), Some(w2)) => MeasureKind::weighted(measure, Weights::new(w1, w2)?),
            _ => MeasureKind::plain(measure),
        })
    }
}

#[derive(Debug, Args)]
pub struct DataArgs {
    /// Dataset schema (TOML).
    #[arg(long)]
    pub dataset: PathBuf,
    /// Data file; overrides the schema's `file`.
    #[arg(long)]
    pub data: Option<PathBuf>,
}

impl DataArgs {
    fn load(&self) -> Result<Dataset> {
        let schema = load_schema(&self.dataset)?;
        let path = self
            .data
            .clone()
            .or_else(|| schema.file.clone())
            .ok_or_else(|| Error::Schema(format!("{}: no data file given and the schema names none", schema.name)))?;
        let d = load_dataset(&path, &schema)?;
        log::info!("{}: {} records loaded, {} dropped", schema.name, d.len(), d.dropped);
        Ok(d)
    }
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Pipeline config (TOML); defaults apply when absent.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Override the config's seed.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value = "csv")]
    pub format: String,
    /// Report zero seconds, making reports byte-comparable across runs.
    #[arg(long)]
    pub no_timing: bool,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

impl RunArgs {
    fn config(&self) -> Result<PipelineConfig> {
        let mut c = match &self.config {
            Some(p) => PipelineConfig::load(p)?,
            None => PipelineConfig::default(),
        };
        if let Some(s) = self.seed {
            c.seed = s;
        }
        Ok(c)
    }
}

fn emit(output: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<()> {
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::io(p, e)),
        None => out.write_all(text.as_bytes()).map_err(|e| Error::io("<stdout>", e)),
    }
}

fn exit_code(e: &Error) -> i32 {
    if e.is_validation() {
        EXIT_VALIDATION
    } else {
        EXIT_RUNTIME
    }
}

fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
        None => Ok(f()),
    }
}

fn read_components(path: &Path) -> Result<Vec<SimilarityComponents>> {
    let mut r = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_path(path)
        .map_err(|e| match e.into_kind() {
            csv::ErrorKind::Io(io) => Error::io(path, io),
            other => Error::Domain(format!("{}: {other:?}", path.display())),
        })?;
    let mut rows = Vec::new();
    for rec in r.deserialize::<(f64, f64, f64)>() {
        let (sx, sy, sd) = rec.map_err(|e| Error::Domain(format!("{}: {e}", path.display())))?;
        rows.push(SimilarityComponents::complete(sx, sy, sd)?);
    }
    Ok(rows)
}

fn parse_setting(s: &str) -> Result<DeneutroParams> {
    let v: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Domain(format!("setting `{s}` is not alpha,beta,gamma")))?;
    match v[..] {
        [a, b, g] => DeneutroParams::new(a, b, g),
        _ => Err(Error::Domain(format!("setting `{s}` is not alpha,beta,gamma"))),
    }
}

fn predict_csv(dataset: &Dataset, config: &PipelineConfig, outcomes: &[Outcome]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let labels: Vec<String> = outcomes
        .iter()
        .find_map(|o| match o {
            Outcome::Scored(r) => Some(r.labels.iter().map(|(l, _)| l.clone()).collect()),
            Outcome::Skipped { .. } => None,
        })
        .unwrap_or_default();
    let mut header: Vec<String> = ["row", "line", "status", "actual", "predicted", "recommended", "clamped"]
        .map(String::from)
        .to_vec();
    for l in &labels {
        header.extend(["t", "i", "f"].map(|c| format!("{l}_{c}")));
    }
    w.write_record(&header)?;
    for o in outcomes {
        match o {
            Outcome::Scored(r) => {
                let mut rec = vec![
                    r.row.to_string(),
                    dataset.rows[r.row].line.to_string(),
                    "scored".into(),
                    format!("{:.6}", r.actual),
                    format!("{:.6}", r.predicted),
                    r.recommended.clone(),
                    r.clamped.to_string(),
                ];
                for (_, p) in &r.labels {
                    rec.extend([p.t, p.i, p.f].map(|v| format!("{v:.6}")));
                }
                w.write_record(&rec)?;
            }
            Outcome::Skipped { row, .. } => {
                let mut rec = vec![row.to_string(), dataset.rows[*row].line.to_string(), "skipped".into()];
                rec.resize(header.len(), String::new());
                w.write_record(&rec)?;
            }
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::io("<predict csv>", e.into_error()))?;
    Ok(format!("# dataset={} {}\n", dataset.schema.name, config.describe()) + &String::from_utf8(bytes).expect("utf-8"))
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::ReproduceExample3 { tolerance, source, output } => {
            let source: ComponentSource = source.parse()?;
            if !(tolerance >= 0.0) {
                return Err(Error::Domain(format!("tolerance {tolerance} must be nonnegative")));
            }
            let r = reproduce_example3(source, tolerance)?;
            emit(output.as_deref(), &r.render(), out)?;
            Ok(if r.all_passed() { EXIT_OK } else { EXIT_RUNTIME })
        }
        Command::AlgebraAudit {
            samples,
            seed,
            complement,
            laws,
            output,
        } => {
            let form: ComplementForm = complement.parse()?;
            let laws: Vec<LawId> = if laws.is_empty() {
                LawId::ALL.to_vec()
            } else {
                laws.iter().map(|l| l.parse()).collect::<Result<_>>()?
            };
            let reports = with_threads(cli.threads, || {
                use rayon::prelude::*;
                laws.par_iter()
                    .map(|&l| audit::check_law_with(l, samples, seed, form))
                    .collect::<Vec<_>>()
            })?;
            let text = format!(
                "# algebra-audit samples={samples} seed={seed} complement={} tolerance={:e}\n{}",
                form.name(),
                audit::LAW_TOLERANCE,
                audit::to_csv(&reports)?
            );
            emit(output.as_deref(), &text, out)?;
            Ok(EXIT_OK)
        }
        Command::Similarity {
            measure,
            input,
            normalize,
            output,
        } => {
            let kind = measure.kind()?;
            let rows = match &input {
                Some(p) => read_components(p)?,
                None => printed_components(),
            };
            let m = similarity_matrix_with(kind, &rows, normalize)?;
            emit(output.as_deref(), &m.to_delimited(','), out)?;
            Ok(EXIT_OK)
        }
        Command::Predict {
            data,
            membership,
            measure,
            mode,
            holdout,
            seed,
            output,
        } => {
            let kind = measure.kind()?;
            let config = PipelineConfig {
                measure: kind.measure,
                weights: kind.weights,
                weight_mode: mode.into(),
                membership: match membership {
                    Some(path) => MembershipSource::File { path },
                    None => MembershipSource::Percentile,
                },
                split: match holdout {
                    Some(fraction) => Split::Holdout { fraction },
                    None => Split::Loo,
                },
                seed,
                ..PipelineConfig::default()
            };
            let dataset = data.load()?;
            let outcomes = with_threads(cli.threads, || predict_records(&dataset, &config, true))??;
            emit(output.as_deref(), &predict_csv(&dataset, &config, &outcomes)?, out)?;
            Ok(EXIT_OK)
        }
        Command::Evaluate { data, run } => {
            let format: report::Format = run.format.parse()?;
            let config = run.config()?;
            if cli.threads.is_some_and(|n| n != 1) {
                log::info!("evaluate times its run and always uses one thread");
            }
            let dataset = data.load()?;
            let reports = [run_pipeline(&dataset, &config)?];
            let text = match format {
                report::Format::Csv => eval_csv(&reports, !run.no_timing)?,
                report::Format::Json => eval_json(&reports, !run.no_timing)?,
            };
            emit(run.output.as_deref(), &text, out)?;
            Ok(EXIT_OK)
        }
        Command::Grid { data, run, settings } => {
            let format: report::Format = run.format.parse()?;
            let config = run.config()?;
            let grid = if settings.is_empty() {
                default_grid()
            } else {
                settings.iter().map(|s| parse_setting(s)).collect::<Result<_>>()?
            };
            let dataset = data.load()?;
            let reports = deneutro_grid(&dataset, &config, &grid)?;
            let text = match format {
                report::Format::Csv => grid_csv(&reports, !run.no_timing)?,
                report::Format::Json => eval_json(&reports, !run.no_timing)?,
            };
            emit(run.output.as_deref(), &text, out)?;
            Ok(EXIT_OK)
        }
        Command::Stats { test, input, output } => {
            let text = std::fs::read_to_string(&input).map_err(|e| Error::io(&input, e))?;
            let groups = read_matrix_columns(&text)?;
            let report = match test {
                StatsTest::Anova => anova_csv(&anova_one_way(&groups)?, groups.len())?,
                StatsTest::Kruskal => kruskal_csv(&kruskal_wallis(&groups)?, groups.len())?,
            };
            emit(output.as_deref(), &report, out)?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (program name first) and runs the command; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    let level = match cli.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    let _ = env_logger::Builder::new().filter_level(level).is_test(false).try_init();
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
