//! Component similarities of the four-patient example and the five
//! pair-measure matrices.

use neutrorec::ingestion::example3::{EXAMPLE3_PATIENTS, PAIRS};
use neutrorec::reproduce::{reproduce_example3, ComponentSource, DEFAULT_TOLERANCE};

fn main() -> neutrorec::Result<()> {
    let r = reproduce_example3(ComponentSource::Table7, DEFAULT_TOLERANCE)?;
    println!("pair            S_X      S_Y      S_D");
    for (c, (i, j)) in r.components.iter().zip(PAIRS) {
        println!(
            "{:<6}-{:<6} {:>8.5} {:>8.5} {:>8.5}",
            EXAMPLE3_PATIENTS[i],
            EXAMPLE3_PATIENTS[j],
            c.sx,
            c.sy,
            c.sd.unwrap_or(f64::NAN)
        );
    }
    for (name, m) in &r.matrices {
        println!("\n{name}");
        print!("{}", m.to_delimited('\t'));
    }
    println!();
    for c in &r.checks {
        println!("{} {} (max deviation {:.5})", if c.passed() { "PASS" } else { "FAIL" }, c.table, c.max_deviation);
    }
    Ok(())
}
