//! Shared domain types: function families, ratio specifications, bound
//! descriptors, sampling grids, and verification reports.

use crate::error::{Error, Result};
use crate::fx;
use alloc::string::String;
use alloc::vec::Vec;

/// Hypergeometric-type function family whose contiguous ratio is targeted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    PcfU,
    BesselI,
    BesselK,
    Kummer,
    Gauss,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::PcfU => "pcf",
            Family::BesselI => "bessel_i",
            Family::BesselK => "bessel_k",
            Family::Kummer => "kummer",
            Family::Gauss => "gauss",
        }
    }
}

/// Which contiguous ratio of the family is meant.
///
/// * `PcfPhi`      - `U(n-1,x)/U(n,x)`
/// * `BesselIRatio`- `I_{nu-1}(x)/I_nu(x)`
/// * `BesselKRatio`- `K_{nu+1}(x)/K_nu(x)` (the single canonical K ratio)
/// * `KummerAb1b1` - `m(a+1,b+1,x)/m(a,b,x)`
/// * `KummerA1b`   - `m(a+1,b,x)/m(a,b,x)`
/// * `KummerA1b2`  - `m(a+1,b+2,x)/m(a,b,x)`
/// * `GaussShift1` - `y(a+1,b+1,c+1,x)/y(a,b,c,x)`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RatioKind {
    PcfPhi,
    BesselIRatio,
    BesselKRatio,
    KummerAb1b1,
    KummerA1b,
    KummerA1b2,
    GaussShift1,
}

/// A fully specified ratio evaluation point: family, ratio, parameters, x.
///
/// Parameter layout: PCF `[n]`; Bessel `[nu]`; Kummer `[a, b]`;
/// Gauss `[a, b, c]`.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioSpec {
    pub family: Family,
    pub kind: RatioKind,
    pub params: Vec<f64>,
    pub x: f64,
}

impl RatioSpec {
    pub fn pcf(n: f64, x: f64) -> Result<Self> {
        if !n.is_finite() || !x.is_finite() {
            return Err(Error::Domain("pcf parameters must be finite"));
        }
        Ok(RatioSpec {
            family: Family::PcfU,
            kind: RatioKind::PcfPhi,
            params: alloc::vec![n],
            x,
        })
    }

    pub fn bessel_i(nu: f64, x: f64) -> Result<Self> {
        if !(nu >= 0.0) || !(x > 0.0) {
            return Err(Error::Domain("bessel I ratio needs nu >= 0, x > 0"));
        }
        Ok(RatioSpec {
            family: Family::BesselI,
            kind: RatioKind::BesselIRatio,
            params: alloc::vec![nu],
            x,
        })
    }

    pub fn bessel_k(nu: f64, x: f64) -> Result<Self> {
        if !(nu >= 0.5) || !(x > 0.0) {
            return Err(Error::Domain("bessel K ratio needs nu >= 1/2, x > 0"));
        }
        Ok(RatioSpec {
            family: Family::BesselK,
            kind: RatioKind::BesselKRatio,
            params: alloc::vec![nu],
            x,
        })
    }

    pub fn kummer(a: f64, b: f64, x: f64) -> Result<Self> {
        if !(a > 0.0 && b > 0.0 && x > 0.0) {
            return Err(Error::Domain("kummer ratio needs a, b, x > 0"));
        }
        Ok(RatioSpec {
            family: Family::Kummer,
            kind: RatioKind::KummerAb1b1,
            params: alloc::vec![a, b],
            x,
        })
    }

    pub fn gauss(a: f64, b: f64, c: f64, x: f64) -> Result<Self> {
        if !(a > 0.0 && b > 0.0 && c > 0.0) {
            return Err(Error::Domain("gauss ratio needs a, b, c > 0"));
        }
        if !(x > 0.0 && x < 1.0) {
            return Err(Error::Domain("gauss ratio needs x in (0, 1)"));
        }
        Ok(RatioSpec {
            family: Family::Gauss,
            kind: RatioKind::GaussShift1,
            params: alloc::vec![a, b, c],
            x,
        })
    }
}

/// Which side of the target quantity a bound claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

impl Side {
    pub fn name(&self) -> &'static str {
        match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        }
    }
}

/// Accuracy tag `(m, n)`: how many leading terms of the ratio's expansions
/// the bound reproduces at the two ends of its domain. Orientation is
/// per-family (PCF counts at -inf/+inf, the others at 0/+inf).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Accuracy {
    Known(i8, i8),
    Unknown,
}

/// Sampling scheme for one axis of a grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sampling {
    Linear,
    Log,
    /// Half linear coverage, half logarithmic clustering toward zero.
    Mixed,
}

/// A verification grid: parameter tuples plus an x axis.
#[derive(Debug, Clone)]
pub struct Grid {
    pub params: Vec<Vec<f64>>,
    pub xs: Vec<f64>,
}

impl Grid {
    pub fn new(params: Vec<Vec<f64>>, xs: Vec<f64>) -> Result<Self> {
        if params.is_empty() {
            return Err(Error::InvalidGrid("no parameter tuples"));
        }
        if xs.is_empty() {
            return Err(Error::InvalidGrid("no x samples"));
        }
        Ok(Grid { params, xs })
    }

    pub fn len(&self) -> usize {
        self.params.len() * self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty() || self.xs.is_empty()
    }
}

/// Deterministic axis samplers. All values are pure functions of the inputs.
pub fn sample_axis(lo: f64, hi: f64, count: usize, scheme: Sampling) -> Vec<f64> {
    assert!(
        count >= 2 && hi > lo,
        "bad axis spec [{lo}, {hi}] x {count}"
    );
    match scheme {
        Sampling::Linear => linspace(lo, hi, count),
        Sampling::Log => {
            assert!(lo > 0.0, "log axis needs positive endpoints");
            let (a, b) = (fx::ln(lo), fx::ln(hi));
            linspace(a, b, count).into_iter().map(fx::exp).collect()
        }
        Sampling::Mixed => {
            let mut v = linspace(lo, hi, count / 2);
            let scale = fx::abs(lo).max(fx::abs(hi));
            let tiny = scale * 1e-4;
            // Cluster the remaining points logarithmically toward zero on
            // whichever sides of the axis exist.
            let rest = count - count / 2;
            if lo >= 0.0 {
                let base = if lo > 0.0 { lo } else { tiny };
                v.extend(sample_axis(base, hi, rest, Sampling::Log));
            } else if hi <= 0.0 {
                let base = if hi < 0.0 { -hi } else { tiny };
                v.extend(
                    sample_axis(base, -lo, rest, Sampling::Log)
                        .into_iter()
                        .map(|t| -t),
                );
            } else {
                let pos = sample_axis(tiny, hi, rest / 2, Sampling::Log);
                let neg: Vec<f64> = sample_axis(tiny, -lo, rest - rest / 2, Sampling::Log)
                    .into_iter()
                    .map(|t| -t)
                    .collect();
                v.extend(pos);
                v.extend(neg);
            }
            v.sort_by(|a, b| a.partial_cmp(b).unwrap());
            v.dedup();
            v
        }
    }
}

fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let step = (hi - lo) / (count as f64 - 1.0);
    (0..count).map(|i| lo + step * i as f64).collect()
}

/// One sampled comparison between a bound and the oracle.
#[derive(Debug, Clone)]
pub struct PointRecord {
    pub params: Vec<f64>,
    pub x: f64,
    pub oracle_lo: f64,
    pub oracle_hi: f64,
    pub bound: f64,
    /// Signed clearance against the near enclosure edge; positive means the
    /// claimed inequality holds with room to spare.
    pub margin: f64,
    pub violation: bool,
}

/// Outcome of running one bound over one grid.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub bound_id: String,
    pub num_params: usize,
    pub num_x: usize,
    pub num_points: usize,
    pub num_violations: usize,
    pub num_skipped: usize,
    pub min_margin: f64,
    pub worst_params: Vec<f64>,
    pub worst_x: f64,
    pub records: Option<Vec<PointRecord>>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.num_violations == 0 && self.num_points > 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_spec_domain_checks() {
        assert!(RatioSpec::bessel_i(-0.1, 1.0).is_err());
        assert!(RatioSpec::bessel_k(0.4, 1.0).is_err());
        assert!(RatioSpec::kummer(1.0, 2.0, 0.0).is_err());
        assert!(RatioSpec::gauss(1.0, 1.0, 2.0, 1.0).is_err());
        assert!(RatioSpec::gauss(1.0, 1.0, 2.0, 0.5).is_ok());
    }

    #[test]
    fn axis_samplers_are_ordered_and_in_range() {
        for scheme in [Sampling::Linear, Sampling::Log, Sampling::Mixed] {
            let v = sample_axis(0.5, 40.0, 37, scheme);
            assert!(v.windows(2).all(|w| w[0] < w[1]));
            assert!(v.iter().all(|&x| (0.5..=40.0 + 1e-12).contains(&x)));
        }
        let v = sample_axis(-40.0, 40.0, 100, Sampling::Mixed);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        assert!(v.first().unwrap() >= &-40.0 && v.last().unwrap() <= &40.0);
    }
}
