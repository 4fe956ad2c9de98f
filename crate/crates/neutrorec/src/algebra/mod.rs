//! Triple-valued membership values and the set operations over them.
//!
//! Scalar operations live on [`Triple`]; [`combine_sets`] and
//! [`nrs_combine`] lift them to labeled sets and whole records.

mod record;
mod triple;

pub use record::{combine_sets, crisp_complement, nrs_combine, nrs_complement, Complemented, LabeledNSet, NrsRecord};
pub use triple::{ComplementForm, Family, OpKind, Triple};
