//! Neutrosophic recommender systems for medical diagnosis.
//!
//! Patients are records of triple-valued memberships `(T, I, F)`: linguistic
//! labels of their features (`x`), of their symptoms (`y`), and one rating
//! set per disease (`d`). The crate covers:
//!
//! - [`algebra`]: the triple and its set operations, lifted to labeled sets
//!   and records;
//! - [`audit`]: seeded property checks of the algebraic laws claimed for them;
//! - [`membership`]: trapezoidal neutrosophication and centroid
//!   deneutrosophication;
//! - [`similarity`]: component similarities, pair measures and matrices;
//! - [`prediction`]: similarity-weighted rating prediction and label selectors;
//! - [`evaluation`]: the benchmark pipeline, MSE reports, ANOVA and
//!   Kruskal–Wallis;
//! - [`ingestion`]: dataset schemas, membership configs and the built-in
//!   four-patient example;
//! - [`reproduce`]: the example's tables against golden values;
//! - [`cli`]: the `neutrorec` command.
//!
//! ```
//! use neutrorec::algebra::Triple;
//!
//! let a = Triple::new(0.3, 0.5, 0.8)?;
//! let b = Triple::new(0.4, 0.3, 0.7)?;
//! assert_eq!(a.union(b), b);
//! assert_eq!(a.complement(), Triple::new(0.8, 0.5, 0.3)?);
//! # Ok::<(), neutrorec::Error>(())
//! ```

pub mod algebra;
pub mod audit;
pub mod cli;
pub mod error;
pub mod evaluation;
pub mod ingestion;
pub mod membership;
pub mod prediction;
pub mod reproduce;
pub mod similarity;

pub use error::{Error, Result};
