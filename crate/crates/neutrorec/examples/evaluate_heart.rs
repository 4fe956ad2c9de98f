//! Leave-one-out evaluation on the heart schema and the synthesization
//! sweep. Uses `$NEUTROREC_HEART_CSV` when set, the shipped surrogate otherwise.

use neutrorec::evaluation::report::{eval_csv, grid_csv};
use neutrorec::evaluation::{default_grid, deneutro_grid, run_pipeline, PipelineConfig};
use neutrorec::ingestion::{load_dataset, load_schema};

fn main() -> neutrorec::Result<()> {
    let schema = load_schema(concat!(env!("CARGO_MANIFEST_DIR"), "/data/schemas/heart.toml"))?;
    let path = std::env::var_os("NEUTROREC_HEART_CSV")
        .map(Into::into)
        .or_else(|| schema.file.clone())
        .expect("schema names a file");
    let data = load_dataset(&path, &schema)?;
    println!("{}: {} records ({} dropped) from {}\n", schema.name, data.len(), data.dropped, path.display());

    let config = PipelineConfig::default();
    print!("{}", eval_csv(&[run_pipeline(&data, &config)?], true)?);
    println!();
    print!("{}", grid_csv(&deneutro_grid(&data, &config, &default_grid())?, true)?);
    Ok(())
}
