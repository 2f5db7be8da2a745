//! Exact combinatorial search: maximum independent sets and minimum hitting sets.

mod hitting;
mod independent;

pub use hitting::HittingSet;
pub use independent::{lex_first_maximum_independent_set, maximum_independent_set};
