//! Bounds for Kummer ratios in the `m` normalization, in the three
//! contiguous directions `m(a+1,b+1)/m(a,b)`, `m(a+1,b)/m(a,b)` and
//! `m(a+1,b+2)/m(a,b)`, plus the Bessel-specialization consistency check.
//!
//! The characteristic root `lambda` and its backward lift `lambda~`
//! sandwich the primary ratio (sides set by the sign of `b - a`); the shift
//! `lambda(a-1,b-1,x)` adds a third expansion term at `+inf`. The other two
//! contiguous ratios inherit bounds through subtraction-free recurrence
//! identities, except the `b+2` direction where one cancellation costs a
//! term of accuracy at the origin.

use crate::enclosure::Enclosure;
use crate::error::{Error, Result};
use crate::fx;
use crate::oracle::{bessel as bessel_oracle, kummer as kummer_oracle, OracleConfig};

fn domain_ok(a: f64, b: f64, x: f64) -> Result<()> {
    if !(a > 0.0 && b > 0.0 && x > 0.0) {
        return Err(Error::Domain("confluent bounds need a, b, x > 0"));
    }
    Ok(())
}

/// Positive characteristic root
/// `lambda(a,b,x) = (x - b + sqrt((x-b)^2 + 4ax))/(2x)`.
///
/// Upper bound of `h(a,b,x)` for `b > a`, lower for `b < a`, equal to
/// `a/b` when `a = b`. Evaluated through the subtraction-free branch.
pub fn lambda(a: f64, b: f64, x: f64) -> Result<f64> {
    domain_ok(a, b, x)?;
    let d = x - b;
    let s = fx::sqrt(d * d + 4.0 * a * x);
    if d >= 0.0 {
        Ok((d + s) / (2.0 * x))
    } else {
        // rationalized: lambda = 2a / (s + (b - x))
        Ok(2.0 * a / (s - d))
    }
}

/// Lifted root
/// `lambda~(a,b,x) = 2a/(b - x - 1 + sqrt((x-b-1)^2 + 4(a+1)x))`.
///
/// Lower bound of `h(a,b,x)` for `b > a`, upper for `b < a`.
pub fn lambda_tilde(a: f64, b: f64, x: f64) -> Result<f64> {
    domain_ok(a, b, x)?;
    let d = x - b - 1.0;
    let s = fx::sqrt(d * d + 4.0 * (a + 1.0) * x);
    let den = if x <= b - 1.0 {
        (b - 1.0 - x) + s
    } else {
        // rationalized against the cancellation in (b-1-x) + s:
        // ((b-1-x) + s)(s - (b-1-x)) = 4(ax + b)
        4.0 * (a * x + b) / (s + x - b + 1.0)
    };
    Ok(2.0 * a / den)
}

/// Shifted-root bound `lambda(a-1, b-1, x)`, accuracy (0,3); `a, b > 1`.
///
/// Lower bound of `h(a,b,x)` for `a < b`, upper for `a > b`.
pub fn b03_confluent(a: f64, b: f64, x: f64) -> Result<f64> {
    if !(a > 1.0 && b > 1.0) {
        return Err(Error::Domain("b03_confluent needs a, b > 1"));
    }
    lambda(a - 1.0, b - 1.0, x)
}

/// Bounds for `m(a+1,b,x)/m(a,b,x) = a + x h(a,b,x)`, transported from the
/// primary pair; the map is increasing so sides are preserved.
pub fn ratio_a1b_bounds(a: f64, b: f64, x: f64) -> Result<(f64, f64)> {
    domain_ok(a, b, x)?;
    if a == b {
        let v = a + x;
        return Ok((v, v));
    }
    let lam = lambda(a, b, x)?;
    let lamt = lambda_tilde(a, b, x)?;
    let (h_lo, h_hi) = if b > a { (lamt, lam) } else { (lam, lamt) };
    Ok((a + x * h_lo, a + x * h_hi))
}

/// Upper bound of `H(a,b,x) = m(a+1,b+2,x)/m(a,b,x)` for all `a, b, x > 0`
/// (no side flip across `a = b`):
/// `eta = 2 lambda(a,b,x) / (x + b + sqrt((x-b)^2 + 4ax))`, written without
/// the cancellation-prone `1 - 2b/(...)` form.
pub fn eta(a: f64, b: f64, x: f64) -> Result<f64> {
    domain_ok(a, b, x)?;
    let d = x - b;
    let s = fx::sqrt(d * d + 4.0 * a * x);
    Ok(2.0 * lambda(a, b, x)? / (x + b + s))
}

/// Lower bound of `H(a,b,x)` for all `a, b, x > 0`:
/// `eta~ = a p / (x (a p + b(1-p)))` with
/// `p = 2x/(x + b + 1 + sqrt((x+b+1)^2 + 4(a-b)x))`. The radicand equals
/// `(x-b-1)^2 + 4(a+1)x`, which is positive on the whole domain; it is
/// evaluated in that subtraction-free form.
pub fn eta_tilde(a: f64, b: f64, x: f64) -> Result<f64> {
    domain_ok(a, b, x)?;
    let d = x - b - 1.0;
    let rad = d * d + 4.0 * (a + 1.0) * x;
    if rad < 0.0 {
        return Err(Error::RadicandNegative);
    }
    let p = 2.0 * x / (x + b + 1.0 + fx::sqrt(rad));
    Ok(a * p / (x * (a * p + b * (1.0 - p))))
}

/// The sandwich for `2b M(a,b,x)/M(a+1,b+1,x)` (equivalently `2a/h` in the
/// `m` normalization): returns the pair ordered for the `b > a` case,
/// `(b-x+sqrt((b-x)^2+4ax), b-x-1+sqrt((x-b-1)^2+4(a+1)x))`; the caller
/// swaps sides for `b < a`.
pub fn m_normalized_pair(a: f64, b: f64, x: f64) -> Result<(f64, f64)> {
    domain_ok(a, b, x)?;
    let d = b - x;
    let lo = d + fx::sqrt(d * d + 4.0 * a * x);
    let d1 = x - b - 1.0;
    let hi = b - x - 1.0 + fx::sqrt(d1 * d1 + 4.0 * (a + 1.0) * x);
    Ok((lo, hi))
}

/// Agreement report for the Kummer-to-Bessel specialization
/// `I_nu(z)/I_{nu-1}(z) = 2z m(a+1,b+2,2z)/m(a,b,2z)` at
/// `a = nu - 1/2`, `b = 2nu - 1`.
#[derive(Debug, Clone)]
pub struct BesselConsistency {
    pub nu: f64,
    pub z: f64,
    /// `2z * H(a,b,2z)` enclosure from the Kummer oracle.
    pub via_kummer: Enclosure,
    /// Reciprocal of the Bessel-I ratio enclosure.
    pub via_bessel: Enclosure,
    /// Midpoint distance.
    pub gap: f64,
    /// Gap within the combined enclosure widths.
    pub agrees: bool,
}

pub fn bessel_consistency_check(nu: f64, z: f64, cfg: &OracleConfig) -> Result<BesselConsistency> {
    if !(nu > 0.5) || !(z > 0.0) {
        return Err(Error::Domain("consistency check needs nu > 1/2, z > 0"));
    }
    let (a, b) = (nu - 0.5, 2.0 * nu - 1.0);
    let h_big = kummer_oracle::a1b2_enclosure(a, b, 2.0 * z, cfg)?;
    let via_kummer = h_big.scale(2.0 * z);
    let phi = bessel_oracle::i_ratio_enclosure(nu, z, cfg)?;
    let via_bessel = phi.recip()?;
    let gap = fx::abs(via_kummer.mid() - via_bessel.mid());
    let agrees = gap <= 0.5 * (via_kummer.width() + via_bessel.width()) + 1e-15;
    Ok(BesselConsistency {
        nu,
        z,
        via_kummer,
        via_bessel,
        gap,
        agrees,
    })
}
