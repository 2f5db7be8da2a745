//! Fractional (r-1)-covers built from a maximum (r-1)-matching.
//!
//! [`classify`] computes the structure of a maximum (r-1)-matching `M`
//! (type-i edges, indispensable sets, the `M_i` classes, `M^+`/`M^-` and bad
//! type-2 edges) and checks the structural facts that hold for every maximum
//! matching. The constructors in [`covers`] and [`clique`] place weights per
//! matching edge according to its class and return a verified certificate.

pub mod clique;
pub mod covers;
pub mod structure;

pub use clique::{
    classify_clique42, cover_42_clique, two_pairs, CliqueMatchingStructure, DisjointPairs,
};
pub use covers::{alpha, bound_factor, cover_general, cover_r3, cover_r4, weak_cover, CoverMode};
pub use structure::{classify, Friend, MatchingStructure};
