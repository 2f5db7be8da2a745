//! Exact m-matchings and m-covers of r-uniform hypergraphs.
//!
//! The crate computes the integral and fractional matching and covering
//! numbers of the m-shadow of a hypergraph exactly, builds the explicit
//! fractional (r-1)-covers for maximum (r-1)-matchings together with their
//! size certificates, and provides Turán numbers, covering designs and
//! K_{r+1}^r-covers built from random vertex partitions.

pub mod combin;
pub mod error;
pub mod hypergraph;
pub mod lp;
pub mod params;
pub mod random;
pub mod rational;
pub mod rng;
pub mod solve;
pub mod turan;
pub mod tuza;

pub use error::{Error, Result};
pub use hypergraph::{Graph, Hypergraph, MSet};
pub use rational::Rational;
