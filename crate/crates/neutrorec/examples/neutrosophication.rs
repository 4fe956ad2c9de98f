//! Crisp values → label triples with the shipped example membership, and
//! back to a crisp value by centroid.

use neutrorec::ingestion::load_membership_config;
use neutrorec::membership::{collapse, deneutrosophicate, synthesize, unit_output_labels, Collapse, DeneutroParams, DEFAULT_GRID_POINTS};

fn main() -> neutrorec::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/example3_membership.toml");
    let config = load_membership_config(path)?;
    for (attr, xs) in [("age", [30.0, 40.0, 50.0, 55.0]), ("temperature", [4.0, 15.0, 22.0, 28.0])] {
        let a = config.attribute(attr).expect("configured");
        for x in xs {
            let set = a.evaluate(x)?;
            let cells: Vec<String> = set.entries().iter().map(|(l, t)| format!("{l} {t}")).collect();
            println!("{attr:>11} = {x:>4}: {}", cells.join("  "));
        }
    }

    // Centroid of T(y) = y on [0, 1] is 2/3.
    let c = deneutrosophicate(|y| y, 0.0, 1.0, DEFAULT_GRID_POINTS)?;
    println!("\ncentroid of y on [0,1] = {c:.9}");

    // Collapse three synthesized output levels to one crisp value.
    let labels = unit_output_labels();
    let d = DeneutroParams::default();
    let levels = [(0.2, 0.3, 0.9), (0.6, 0.5, 0.7), (0.9, 0.8, 1.0)]
        .map(|(t, i, f)| synthesize(neutrorec::algebra::Triple::new(t, i, f).unwrap(), d));
    for strategy in [Collapse::AnchorCentroid, Collapse::ClippedCurve { grid_points: DEFAULT_GRID_POINTS }] {
        println!("{:>15}: {:.6}", strategy.name(), collapse(strategy, &labels, &levels)?);
    }
    Ok(())
}
