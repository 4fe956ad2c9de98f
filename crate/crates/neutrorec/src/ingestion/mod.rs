//! Datasets, membership configuration and the built-in example corpus.

pub mod config;
pub mod dataset;
pub mod example3;
pub mod surrogate;

pub use config::{load_membership_config, MembershipConfig};
pub use dataset::{load_dataset, load_schema, parse_dataset, ColumnSpec, DataRow, Dataset, DatasetSchema, TargetSpec};
pub use example3::{builtin_example3, example4, Example4};
