//! Turán numbers, covering designs and K_{r+1}^r-covers from vertex partitions.

mod exact;
mod kcover;

pub use exact::{
    complement_identity, covering_design_number, is_clique_free_mask, turan_family, turan_number,
    MAX_TURAN_SETS,
};
pub use kcover::*;
