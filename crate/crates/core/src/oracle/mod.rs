//! Rigorous enclosure oracles for every ratio in scope.
//!
//! Each oracle is built from the family's own three-term recurrence, seeded
//! at a shifted index with a proven lower/upper bound pair and propagated
//! with outward-rounded interval arithmetic toward the target index. The
//! recursion runs in the minimal-solution direction, so the interval
//! contracts; depth is raised automatically until the requested relative
//! width is met. Independent series evaluators provide cross-checks.

pub mod bessel;
pub mod flow;
pub mod gauss;
pub mod kummer;
pub mod pcf;
pub(crate) mod series;

use crate::enclosure::Enclosure;
use crate::error::Result;
use crate::types::{RatioKind, RatioSpec};

/// Controls for the recurrence-based oracles.
#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    /// Starting number of recurrence steps from the tail seed.
    pub depth: usize,
    /// Stop once the enclosure's relative width is below this.
    pub target_rel_width: f64,
    /// Hard cap on the recursion depth; exceeded means `NotConverged`.
    pub max_depth: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            depth: 60,
            target_rel_width: 1e-12,
            max_depth: 20_000,
        }
    }
}

impl OracleConfig {
    /// Configuration pinned to one exact depth, no automatic deepening.
    pub fn fixed(depth: usize) -> Self {
        OracleConfig {
            depth,
            target_rel_width: 1e-12,
            max_depth: depth,
        }
    }

    pub fn with_target(mut self, target: f64) -> Self {
        self.target_rel_width = target;
        self
    }
}

/// Dispatch an enclosure request for any supported ratio.
pub fn enclose(spec: &RatioSpec, cfg: &OracleConfig) -> Result<Enclosure> {
    match spec.kind {
        RatioKind::PcfPhi => pcf::ratio_enclosure(spec.params[0], spec.x, cfg),
        RatioKind::BesselIRatio => bessel::i_ratio_enclosure(spec.params[0], spec.x, cfg),
        RatioKind::BesselKRatio => bessel::k_ratio_enclosure(spec.params[0], spec.x, cfg),
        RatioKind::KummerAb1b1 => {
            kummer::ratio_enclosure(spec.params[0], spec.params[1], spec.x, cfg)
        }
        RatioKind::KummerA1b => kummer::a1b_enclosure(spec.params[0], spec.params[1], spec.x, cfg),
        RatioKind::KummerA1b2 => {
            kummer::a1b2_enclosure(spec.params[0], spec.params[1], spec.x, cfg)
        }
        RatioKind::GaussShift1 => {
            gauss::ratio_enclosure(spec.params[0], spec.params[1], spec.params[2], spec.x, cfg)
        }
    }
}
