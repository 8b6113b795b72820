//! Closed-form bound catalogues for every ratio family.

pub mod bessel;
pub mod confluent;
pub mod gauss;
pub mod pcf;
