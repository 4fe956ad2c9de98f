//! Seeded synthetic stand-in for the heart-disease dataset.
//!
//! Rows follow class-conditional Gaussians whose means and spreads are close
//! to the published per-class summaries of the Statlog heart data, rounded to
//! integers and clipped to the schema ranges. Useful when the real file is
//! not available; it is not a substitute for it in any reported number.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

/// Column order of the generated CSV.
pub const HEART_COLUMNS: [&str; 5] = ["age", "resting_bp", "cholesterol", "max_hr", "class"];

const RANGES: [(f64, f64); 4] = [(29.0, 77.0), (94.0, 200.0), (126.0, 564.0), (71.0, 202.0)];
// (mean, sd) per attribute: class 1 = absent, class 2 = present.
const ABSENT: [(f64, f64); 4] = [(52.7, 9.5), (128.9, 16.5), (244.2, 54.0), (158.3, 19.3)];
const PRESENT: [(f64, f64); 4] = [(56.6, 8.1), (134.4, 18.7), (256.5, 47.0), (138.9, 23.1)];
const PRESENT_RATE: f64 = 120.0 / 270.0;

/// `n` rows of heart-like CSV (with header) from `seed`.
pub fn heart_like(n: usize, seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = HEART_COLUMNS.join(",");
    out.push('\n');
    for _ in 0..n {
        let present = rng.random::<f64>() < PRESENT_RATE;
        let params = if present { &PRESENT } else { &ABSENT };
        for ((mean, sd), (lo, hi)) in params.iter().zip(RANGES) {
            let v = Normal::new(*mean, *sd).expect("positive sd").sample(&mut rng);
            out.push_str(&format!("{},", v.round().clamp(lo, hi)));
        }
        out.push_str(if present { "2\n" } else { "1\n" });
    }
    out
}
