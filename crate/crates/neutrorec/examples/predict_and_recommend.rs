//! Predicts a new patient's fever levels from the four example records and
//! picks a level with both selectors.

use neutrorec::algebra::{LabeledNSet, NrsRecord};
use neutrorec::ingestion::builtin_example3;
use neutrorec::prediction::{disagreement_witness, predict_labels, recommend_1, recommend_2, WeightMode};
use neutrorec::similarity::{Measure, MeasureKind};

fn main() -> neutrorec::Result<()> {
    let corpus = builtin_example3();

    // Alex's own levels: both selectors pick L3.
    let alex = &corpus[0].d[0];
    println!("Alex: recommendation 1 → L{}, recommendation 2 → L{}", recommend_1(alex) + 1, recommend_2(alex) + 1);

    // A new patient described only by features and symptoms.
    let x = LabeledNSet::from_pairs([("old", (0.2, 0.5, 0.9)), ("middle", (0.6, 0.3, 0.3)), ("young", (0.5, 0.5, 0.5))])?;
    let y = LabeledNSet::from_pairs([("cold", (0.6, 0.4, 0.2)), ("medium", (0.5, 0.4, 0.5)), ("hot", (0.3, 0.6, 0.3))])?;
    let query = NrsRecord::query(x, y);
    for mode in [WeightMode::AsStated, WeightMode::Inverted] {
        let p = predict_labels(&query, &corpus, MeasureKind::plain(Measure::Eq65), mode)?;
        println!("\nweights {}:", mode.name());
        for l in &p {
            let (t, moved) = l.triple.clamp();
            println!("  {}: T'={:.4} I'={:.4} F'={:.4} → {t}{}", l.label, l.triple.t, l.triple.i, l.triple.f, if moved { " (clamped)" } else { "" });
        }
    }

    if let Some((trial, set)) = disagreement_witness(10_000, 3, 1) {
        println!(
            "\nselectors disagree after {trial} random trials: {:?} → L{} vs L{}",
            set.entries().iter().map(|(_, t)| t.to_string()).collect::<Vec<_>>(),
            recommend_1(&set) + 1,
            recommend_2(&set) + 1
        );
    }
    Ok(())
}
