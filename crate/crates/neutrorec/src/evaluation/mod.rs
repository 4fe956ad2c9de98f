//! The benchmark pipeline, its reports and the significance tests.

pub mod pipeline;
pub mod report;
pub mod special;
pub mod stats;

pub use pipeline::{
    default_grid, deneutro_grid, mse, predict_records, run_pipeline, spread, EvalReport, MembershipSource, Outcome, PipelineConfig,
    RecordPrediction, Split, DEFAULT_DENEUTRO_GRID,
};
pub use stats::{anova_one_way, kruskal_wallis, mid_ranks, AnovaTable, KruskalTable};
