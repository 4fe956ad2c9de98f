//! Writes the seeded heart-like surrogate CSV.
//!
//! cargo run --example make_heart_surrogate -- [path] [rows] [seed]

use neutrorec::ingestion::surrogate::heart_like;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let path = args.next().unwrap_or_else(|| "data/heart_surrogate.csv".into());
    let rows: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(271);
    let seed: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(2019);
    std::fs::write(&path, heart_like(rows, seed))?;
    println!("wrote {rows} rows to {path} (seed {seed})");
    Ok(())
}
