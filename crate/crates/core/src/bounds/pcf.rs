//! Closed-form bounds for the parabolic cylinder ratio
//! `Phi_n(x) = U(n-1,x)/U(n,x)`, valid on all of the real line.
//!
//! Naming follows the accuracy classification `B^(m,n)`: `m` leading terms
//! of the ratio's expansion reproduced at `-inf`, `n` at `+inf`. The base
//! lower bound `b21` is the positive characteristic root of the ratio's
//! Riccati equation; every other member is reached from it by backward or
//! forward recurrence lifts, by matching three expansion terms at `+inf`
//! (`b03`), or from the double-ratio cubic nullcline (`trig33`, `alg33`).

use crate::enclosure::Enclosure;
use crate::error::{Error, Result};
use crate::fx;
use crate::oracle::{self, OracleConfig};
use alloc::vec::Vec;

/// Lower bound `(x + sqrt(x^2 + 4n - 2))/2`, accuracy (2,1); `n > 1/2`.
pub fn b21(n: f64, x: f64) -> Result<f64> {
    if !(n > 0.5) {
        return Err(Error::Domain("b21 needs n > 1/2"));
    }
    Ok(0.5 * (x + fx::sqrt(x * x + 4.0 * n - 2.0)))
}

/// Upper bound `(x + sqrt(x^2 + 4n + 2))/2`, accuracy (1,2); `n > -1/2`.
pub fn b12(n: f64, x: f64) -> Result<f64> {
    if !(n > -0.5) {
        return Err(Error::Domain("b12 needs n > -1/2"));
    }
    Ok(0.5 * (x + fx::sqrt(x * x + 4.0 * n + 2.0)))
}

/// Upper bound `(n-1/2)/(n-3/2) (x + sqrt(x^2 + 4n - 6))/2`, accuracy
/// (3,0); `n > 3/2`.
pub fn b30(n: f64, x: f64) -> Result<f64> {
    if !(n > 1.5) {
        return Err(Error::Domain("b30 needs n > 3/2"));
    }
    Ok(0.5 * (n - 0.5) / (n - 1.5) * (x + fx::sqrt(x * x + 4.0 * n - 6.0)))
}

/// Lower bound `((n+5/2)x + (n+1/2) sqrt(x^2+4n+6)) / (2(n+3/2))`,
/// accuracy (0,3); `n > -1/2`, all real `x`. Negative for `x < -(n+1/2)`.
pub fn b03(n: f64, x: f64) -> Result<f64> {
    if !(n > -0.5) {
        return Err(Error::Domain("b03 needs n > -1/2"));
    }
    Ok(((n + 2.5) * x + (n + 0.5) * fx::sqrt(x * x + 4.0 * n + 6.0)) / (2.0 * (n + 1.5)))
}

/// Lower bound `2(n-1/2)(n-5/2) / ((n-3/2) sqrt(x^2+4n-10) - (n-7/2)x)`,
/// accuracy (4,0); `n > 5/2`.
pub fn b40(n: f64, x: f64) -> Result<f64> {
    if !(n > 2.5) {
        return Err(Error::Domain("b40 needs n > 5/2"));
    }
    let den = (n - 1.5) * fx::sqrt(x * x + 4.0 * n - 10.0) - (n - 3.5) * x;
    if !(den > 0.0) {
        // (n-3/2)sqrt(x^2+s) > (n-7/2)x on the stated domain.
        return Err(Error::DenominatorNonpositive);
    }
    Ok(2.0 * (n - 0.5) * (n - 2.5) / den)
}

/// arccos with the dust rule: arguments within 1e-14 of [-1,1] are clamped,
/// anything farther out is a genuine domain violation.
pub(crate) fn acos_guarded(arg: f64) -> Result<f64> {
    if arg.abs() <= 1.0 {
        return Ok(fx::acos(arg));
    }
    if arg.abs() <= 1.0 + 1e-14 {
        return Ok(fx::acos(arg.clamp(-1.0, 1.0)));
    }
    Err(Error::ArccosRange { arg })
}

/// Trigonometric lower bound of accuracy (3,3) from the double-ratio cubic:
/// `x/2 + f cos(arccos(x/f^3)/3)` with `f = sqrt((x^2+4n)/3)`; `n > 1/2`.
pub fn trig33(n: f64, x: f64) -> Result<f64> {
    if !(n > 0.5) {
        return Err(Error::Domain("trig33 needs n > 1/2"));
    }
    let f = fx::sqrt((x * x + 4.0 * n) / 3.0);
    let phi = acos_guarded(x / (f * f * f))? / 3.0;
    Ok(0.5 * x + f * fx::cos(phi))
}

/// Algebraic lower bound of accuracy (3,3):
/// `x/2 + sqrt(x^2/4 + g)` with
/// `g = (n+1/2)(x + sqrt(x^2+4n-2))/(x + sqrt(x^2+4n+2))`; `n > 1/2`.
pub fn alg33(n: f64, x: f64) -> Result<f64> {
    if !(n > 0.5) {
        return Err(Error::Domain("alg33 needs n > 1/2"));
    }
    let g =
        (n + 0.5) * (x + fx::sqrt(x * x + 4.0 * n - 2.0)) / (x + fx::sqrt(x * x + 4.0 * n + 2.0));
    Ok(0.5 * x + fx::sqrt(0.25 * x * x + g))
}

/// Backward recurrence lift `x + (n+1/2)/bound(n+1, x)`.
///
/// The map is decreasing in the shifted value, so a lower bound at `n+1`
/// becomes an upper bound at `n` and vice versa.
pub fn lift_backward(bound: impl Fn(f64, f64) -> Result<f64>, n: f64, x: f64) -> Result<f64> {
    let shifted = bound(n + 1.0, x)?;
    if !(shifted > 0.0) {
        return Err(Error::SignViolation);
    }
    Ok(x + (n + 0.5) / shifted)
}

/// Forward recurrence lift `(n-1/2)/(-x + bound(n-1, x))`.
///
/// Also side-flipping; requires `bound(n-1,x) > x` so the denominator stays
/// positive, which holds for every catalogued bound on its domain.
pub fn lift_forward(bound: impl Fn(f64, f64) -> Result<f64>, n: f64, x: f64) -> Result<f64> {
    let shifted = bound(n - 1.0, x)?;
    let den = shifted - x;
    if !(den > 0.0) {
        return Err(Error::SignViolation);
    }
    Ok((n - 0.5) / den)
}

/// Upper bound of accuracy (2,4): backward lift of `trig33`; `n > -1/2`.
pub fn b24(n: f64, x: f64) -> Result<f64> {
    lift_backward(trig33, n, x)
}

/// Upper bound of accuracy (4,2): forward lift of `trig33`; `n > 3/2`.
pub fn b42(n: f64, x: f64) -> Result<f64> {
    lift_forward(trig33, n, x)
}

/// Numerical table of iterated double ratios
/// `R^[1]_n = Phi_n`, `R^[k+1]_n = R^[k]_n / R^[k]_{n+1}`, with enclosure
/// uncertainties, plus the observed monotonicity/ordering/sub-unity flags.
/// Observations only; nothing here is a proof.
#[derive(Debug, Clone)]
pub struct DoubleRatioTower {
    pub n: f64,
    pub k_max: usize,
    pub xs: Vec<f64>,
    /// `values[k-1][i]` encloses `R^[k]_n(xs[i])`.
    pub values: Vec<Vec<Enclosure>>,
    /// Per level, count of x-pairs whose midpoints decrease beyond the
    /// combined enclosure uncertainty.
    pub increasing_violations: Vec<usize>,
    /// Per level (meaningful for k >= 2), count of points not entirely
    /// below 1.
    pub below_one_violations: Vec<usize>,
    /// Ordering `R^[k+1] > R^[k]` violations beyond uncertainty, for
    /// k = 2 .. k_max-1 (index 0 corresponds to k = 2 vs k = 3).
    pub ordering_violations: Vec<usize>,
}

pub fn double_ratio_tower(
    n: f64,
    k_max: usize,
    xs: &[f64],
    cfg: &OracleConfig,
) -> Result<DoubleRatioTower> {
    if !(n > 0.5) || k_max < 1 {
        return Err(Error::Domain("tower needs n > 1/2, k_max >= 1"));
    }
    // Level-1 ratios at n, n+1, ..., n+k_max-1 for every x.
    let mut base: Vec<Vec<Enclosure>> = Vec::with_capacity(k_max);
    for j in 0..k_max {
        let encs = oracle::pcf::enclose_batch(n + j as f64, xs, cfg);
        let mut row = Vec::with_capacity(xs.len());
        for e in encs {
            row.push(e?);
        }
        base.push(row);
    }
    // Tower by pointwise division; level k keeps k_max - k + 1 columns.
    let mut levels: Vec<Vec<Vec<Enclosure>>> = alloc::vec![base];
    for k in 1..k_max {
        let prev = &levels[k - 1];
        let mut level = Vec::with_capacity(k_max - k);
        for j in 0..(k_max - k) {
            let mut row = Vec::with_capacity(xs.len());
            for (lhs, rhs) in prev[j].iter().zip(prev[j + 1].iter()) {
                row.push(lhs.div(rhs)?);
            }
            level.push(row);
        }
        levels.push(level);
    }
    let values: Vec<Vec<Enclosure>> = levels.iter().map(|lvl| lvl[0].clone()).collect();

    let mut increasing_violations = Vec::with_capacity(k_max);
    let mut below_one_violations = Vec::with_capacity(k_max);
    for row in &values {
        let mut inc = 0;
        for w in row.windows(2) {
            let unc = 0.5 * (w[0].width() + w[1].width());
            if w[1].mid() <= w[0].mid() - unc {
                inc += 1;
            }
        }
        increasing_violations.push(inc);
        below_one_violations.push(row.iter().filter(|e| e.lo() >= 1.0).count());
    }
    let mut ordering_violations = Vec::new();
    for k in 2..k_max {
        let mut ord = 0;
        for (lower_level, upper_level) in values[k - 1].iter().zip(values[k].iter()) {
            let unc = 0.5 * (lower_level.width() + upper_level.width());
            if upper_level.mid() <= lower_level.mid() - unc {
                ord += 1;
            }
        }
        ordering_violations.push(ord);
    }
    Ok(DoubleRatioTower {
        n,
        k_max,
        xs: xs.to_vec(),
        values,
        increasing_violations,
        below_one_violations,
        ordering_violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_spot_values() {
        let sqrt2 = core::f64::consts::SQRT_2;
        assert!((b21(1.0, 0.0).unwrap() - sqrt2 / 2.0).abs() < 1e-15);
        assert!((b21(1.0, 3.0).unwrap() - (3.0 + 11f64.sqrt()) / 2.0).abs() < 1e-15);
        assert!((b12(0.0, 0.0).unwrap() - sqrt2 / 2.0).abs() < 1e-15);
        assert!((b12(1.0, 0.0).unwrap() - 6f64.sqrt() / 2.0).abs() < 1e-15);
        assert!((b30(2.0, 0.0).unwrap() - 1.5 * sqrt2).abs() < 1e-15);
        assert!((b03(1.0, 0.0).unwrap() - 1.5 * 10f64.sqrt() / 5.0).abs() < 1e-15);
        assert!((b40(3.0, 0.0).unwrap() - 2.5 / (1.5 * sqrt2)).abs() < 1e-15);
    }

    #[test]
    fn domain_edges() {
        assert!(b21(0.5, 1.0).is_err());
        assert!(b30(1.4, 0.0).is_err());
        assert!(b40(2.0, 0.0).is_err());
        assert!(trig33(0.5, 0.0).is_err());
    }

    #[test]
    fn trig33_at_n1_x0_is_one() {
        assert!((trig33(1.0, 0.0).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn trig_dominates_alg() {
        for &x in &[-8.0, -1.0, 0.0, 2.0, 17.0] {
            for &n in &[0.51, 1.0, 4.0] {
                let t = trig33(n, x).unwrap();
                let a = alg33(n, x).unwrap();
                assert!(t >= a - 1e-13, "trig {t} >= alg {a} at n={n} x={x}");
            }
        }
    }

    #[test]
    fn b03_negative_left_of_threshold() {
        let n = 1.0;
        assert!(b03(n, -(n + 0.5) - 0.3).unwrap() < 0.0);
        assert!(b03(n, -(n + 0.5) + 0.3).unwrap() > 0.0);
    }

    #[test]
    fn forward_lift_of_b30_matches_b40() {
        for &n in &[2.6, 3.0, 7.5] {
            for &x in &[-5.0, 0.0, 4.0] {
                let lifted = lift_forward(b30, n, x).unwrap();
                let direct = b40(n, x).unwrap();
                assert!(
                    (lifted - direct).abs() <= 1e-12 * direct.abs(),
                    "n={n} x={x}"
                );
            }
        }
    }

    #[test]
    fn lifted_bounds_have_expected_validity() {
        assert!(b24(-0.4, 1.0).is_ok());
        assert!(b24(-0.6, 1.0).is_err());
        assert!(b42(1.6, 1.0).is_ok());
        assert!(b42(1.5, 1.0).is_err());
    }
}
