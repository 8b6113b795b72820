//! Executable qualitative analysis for first-order ratio ODEs.
//!
//! Two generic certifiers drive every bound-side derivation in the crate:
//!
//! * [`check_nullcline_conditions`] - for a Riccati equation
//!   `h' = a(x) + b(x) h + c(x) h^2` with `a c < 0`, reads off the sign of
//!   `c`, the monotonicity of the positive characteristic root, and the
//!   supplied endpoint behavior, and mechanically re-derives which side of
//!   the root the bounded solution lies on.
//! * [`check_residual_sign`] - for a candidate bound `lambda` of a solution
//!   of `phi' = P(x, phi)`, samples the residual
//!   `Delta = lambda' - P(x, lambda)`; one-signed residual plus the sign of
//!   `lambda - phi` at the relevant endpoint certifies the side.
//!
//! Both are certifiers of dense numerical evidence with margins and
//! explicit `Inconclusive` verdicts, not provers. The registry in
//! [`registry`] packages every instance used by the catalogued bounds,
//! together with deliberately corrupted candidates that must fail.

pub mod registry;

use crate::bounds::pcf::acos_guarded;
use crate::enclosure::Enclosure;
use crate::error::{Error, Result};
use crate::fx;
use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

/// Which endpoint of the interval carries the known behavior.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndpointSide {
    Left,
    Right,
}

/// Which side of the solution a bound (or the characteristic root) lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImpliedSide {
    LowerBound,
    UpperBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

/// Riccati problem `h' = a(x) + b(x) h + c(x) h^2` on an interval, with the
/// endpoint facts the qualitative theorem consumes. The endpoint facts are
/// supplied per instance from the ratio's series/asymptotic behavior, never
/// inferred.
pub struct RiccatiProblem {
    pub coeff_a: Box<dyn Fn(f64) -> f64>,
    pub coeff_b: Box<dyn Fn(f64) -> f64>,
    pub coeff_c: Box<dyn Fn(f64) -> f64>,
    pub endpoint: EndpointSide,
    /// `h > 0` approaching the endpoint.
    pub h_positive_at_endpoint: bool,
    /// `h' lambda' > 0` approaching the endpoint.
    pub slopes_agree_at_endpoint: bool,
}

/// Candidate bound for a solution of `phi' = P(x, phi)`.
pub struct ResidualProblem {
    pub rhs: Box<dyn Fn(f64, f64) -> f64>,
    pub lambda: Box<dyn Fn(f64) -> Result<f64>>,
    pub lambda_prime: Box<dyn Fn(f64) -> Result<f64>>,
    pub endpoint: EndpointSide,
    /// Sign of `lambda - phi` approaching the endpoint (+1 or -1).
    pub delta_endpoint_sign: i8,
}

/// The unique positive root of `a + b y + c y^2 = 0` under `a c < 0`,
/// computed with the cancellation-free quadratic branch.
pub fn characteristic_root(a: f64, b: f64, c: f64) -> Result<f64> {
    if !(a * c < 0.0) {
        return Err(Error::SignConditionFailed);
    }
    let disc = fx::sqrt(b * b - 4.0 * a * c);
    let q = -0.5 * (b + if b >= 0.0 { disc } else { -disc });
    let (r1, r2) = (q / c, a / q);
    if r1 > 0.0 {
        Ok(r1)
    } else {
        Ok(r2)
    }
}

#[derive(Debug, Clone)]
pub struct NullclineReport {
    pub verdict: Verdict,
    pub implied_side: Option<ImpliedSide>,
    /// Sign of `c` on the grid (+1/-1), 0 if mixed.
    pub c_sign: i8,
    /// Sampled monotonicity of the root (+1 increasing, -1 decreasing,
    /// 0 mixed).
    pub root_trend: i8,
    pub num_points: usize,
    /// Oracle confirmation when a hook is supplied.
    pub oracle_min_margin: Option<f64>,
    pub oracle_violations: usize,
    pub detail: String,
}

/// Run the nullcline-side derivation over a grid, optionally confirming the
/// implied inequality against a (batched) enclosure oracle for the ratio.
pub fn check_nullcline_conditions(
    problem: &RiccatiProblem,
    xs: &[f64],
    oracle: Option<&dyn Fn(&[f64]) -> Result<Vec<Enclosure>>>,
) -> Result<NullclineReport> {
    if xs.len() < 2 {
        return Err(Error::InvalidGrid(
            "nullcline check needs at least 2 points",
        ));
    }
    let mut roots = Vec::with_capacity(xs.len());
    let mut c_pos = 0usize;
    let mut c_neg = 0usize;
    for &x in xs {
        let (a, b, c) = (
            (problem.coeff_a)(x),
            (problem.coeff_b)(x),
            (problem.coeff_c)(x),
        );
        if !(a * c < 0.0) {
            return Err(Error::SignConditionFailed);
        }
        if c > 0.0 {
            c_pos += 1;
        } else {
            c_neg += 1;
        }
        roots.push(characteristic_root(a, b, c)?);
    }
    let c_sign: i8 = if c_neg == 0 {
        1
    } else if c_pos == 0 {
        -1
    } else {
        0
    };
    let mut up = 0usize;
    let mut down = 0usize;
    for w in roots.windows(2) {
        let scale = w[0].abs().max(w[1].abs()).max(1e-300);
        if w[1] > w[0] + 1e-13 * scale {
            up += 1;
        } else if w[1] < w[0] - 1e-13 * scale {
            down += 1;
        }
    }
    let root_trend: i8 = if down == 0 && up > 0 {
        1
    } else if up == 0 && down > 0 {
        -1
    } else {
        0
    };

    if c_sign == 0
        || root_trend == 0
        || !problem.h_positive_at_endpoint
        || !problem.slopes_agree_at_endpoint
    {
        return Ok(NullclineReport {
            verdict: Verdict::Inconclusive,
            implied_side: None,
            c_sign,
            root_trend,
            num_points: xs.len(),
            oracle_min_margin: None,
            oracle_violations: 0,
            detail: String::from("sign or monotonicity conditions not uniform on grid"),
        });
    }
    // The endpoint must match the case: c < 0 reads behavior at the left
    // end, c > 0 at the right end.
    let endpoint_matches = (c_sign < 0 && problem.endpoint == EndpointSide::Left)
        || (c_sign > 0 && problem.endpoint == EndpointSide::Right);
    if !endpoint_matches {
        return Ok(NullclineReport {
            verdict: Verdict::Inconclusive,
            implied_side: None,
            c_sign,
            root_trend,
            num_points: xs.len(),
            oracle_min_margin: None,
            oracle_violations: 0,
            detail: String::from("endpoint side does not match the sign case"),
        });
    }
    let implied = match (c_sign, root_trend) {
        (-1, 1) | (1, -1) => ImpliedSide::UpperBound,
        (-1, -1) | (1, 1) => ImpliedSide::LowerBound,
        _ => unreachable!(),
    };

    let mut min_margin = f64::INFINITY;
    let mut violations = 0usize;
    if let Some(orc) = oracle {
        let encs = orc(xs)?;
        for (enc, &root) in encs.iter().zip(roots.iter()) {
            let scale = enc.mid().abs().max(1e-300);
            let margin = match implied {
                ImpliedSide::LowerBound => enc.lo() - root,
                ImpliedSide::UpperBound => root - enc.hi(),
            };
            if margin < min_margin {
                min_margin = margin;
            }
            // A violation means the root crosses beyond the far edge of the
            // enclosure by more than formula-rounding slack.
            let beyond = match implied {
                ImpliedSide::LowerBound => root > enc.hi() + 1e-11 * scale,
                ImpliedSide::UpperBound => root < enc.lo() - 1e-11 * scale,
            };
            if beyond {
                violations += 1;
            }
        }
    }
    let verdict = if violations > 0 {
        Verdict::Fail
    } else {
        Verdict::Pass
    };
    Ok(NullclineReport {
        verdict,
        implied_side: Some(implied),
        c_sign,
        root_trend,
        num_points: xs.len(),
        oracle_min_margin: oracle.map(|_| min_margin),
        oracle_violations: violations,
        detail: String::new(),
    })
}

#[derive(Debug, Clone)]
pub struct ResidualReport {
    pub verdict: Verdict,
    /// Side certified for the candidate when the verdict is `Pass`.
    pub implied_side: Option<ImpliedSide>,
    pub num_points: usize,
    /// Smallest sign-adjusted residual over the grid.
    pub min_adjusted_residual: f64,
    pub worst_x: f64,
    pub detail: String,
}

/// Sample `Delta = lambda' - P(x, lambda)` over the grid and check it keeps
/// the sign required by the endpoint data, with a 10-ulp-scale margin and a
/// 4x refinement pass around the smallest margin.
pub fn check_residual_sign(problem: &ResidualProblem, xs: &[f64]) -> Result<ResidualReport> {
    if xs.len() < 2 {
        return Err(Error::InvalidGrid("residual check needs at least 2 points"));
    }
    if problem.delta_endpoint_sign != 1 && problem.delta_endpoint_sign != -1 {
        return Err(Error::InvalidGrid("endpoint sign must be +1 or -1"));
    }
    // Case (1): delta(a+) Delta > 0 propagates the endpoint sign from the
    // left; case (2): delta(b-) Delta < 0 propagates it from the right.
    let sigma = problem.delta_endpoint_sign as f64;
    let required = match problem.endpoint {
        EndpointSide::Left => sigma,
        EndpointSide::Right => -sigma,
    };

    let eval = |x: f64| -> Result<(f64, f64)> {
        let lam = (problem.lambda)(x)?;
        let lp = (problem.lambda_prime)(x)?;
        let p = (problem.rhs)(x, lam);
        let delta = lp - p;
        let scale = lp.abs().max(p.abs()).max(lam.abs()).max(1.0);
        Ok((required * delta, 10.0 * f64::EPSILON * scale))
    };

    let mut min_adj = f64::INFINITY;
    let mut worst_x = xs[0];
    let mut worst_i = 0usize;
    let mut any_negative = false;
    let mut any_marginal = false;
    for (i, &x) in xs.iter().enumerate() {
        let (adj, margin) = eval(x)?;
        if adj < min_adj {
            min_adj = adj;
            worst_x = x;
            worst_i = i;
        }
        if adj < -margin {
            any_negative = true;
        } else if adj <= margin {
            any_marginal = true;
        }
    }
    // Refine 4x around the smallest margin.
    if !any_negative {
        let lo = xs[worst_i.saturating_sub(1)];
        let hi = xs[(worst_i + 1).min(xs.len() - 1)];
        if hi > lo {
            let count = 16;
            for j in 0..=count {
                let x = lo + (hi - lo) * j as f64 / count as f64;
                let (adj, margin) = eval(x)?;
                if adj < min_adj {
                    min_adj = adj;
                    worst_x = x;
                }
                if adj < -margin {
                    any_negative = true;
                } else if adj <= margin {
                    any_marginal = true;
                }
            }
        }
    }

    let (verdict, side) = if any_negative {
        (Verdict::Fail, None)
    } else if any_marginal {
        (Verdict::Inconclusive, None)
    } else {
        let side = if problem.delta_endpoint_sign > 0 {
            ImpliedSide::UpperBound
        } else {
            ImpliedSide::LowerBound
        };
        (Verdict::Pass, Some(side))
    };
    Ok(ResidualReport {
        verdict,
        implied_side: side,
        num_points: xs.len(),
        min_adjusted_residual: min_adj,
        worst_x,
        detail: String::new(),
    })
}

/// Families whose double-ratio equation has a cubic nullcline with three
/// real roots expressible trigonometrically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CubicFamily {
    Pcf,
    Bessel,
}

/// Largest real root of the family's cubic nullcline.
///
/// * `Pcf`: `z^3 - (x^2/4 + n) z - x/4`, root
///   `f cos(arccos(x/f^3)/3)`, `f = sqrt((x^2+4n)/3)`.
/// * `Bessel`: `psi^3 + psi^2 - (nu^2+x^2) psi - nu^2`, root
///   `(2g/3) cos(arccos(h/g^3)/3) - 1/3`, `g = sqrt(3(nu^2+x^2)+1)`,
///   `h = 9 nu^2 - 9x^2/2 - 1`.
pub fn cubic_nullcline_root(param: f64, x: f64, family: CubicFamily) -> Result<f64> {
    match family {
        CubicFamily::Pcf => {
            if !(param > 0.5) {
                return Err(Error::Domain("pcf cubic root needs n > 1/2"));
            }
            let f = fx::sqrt((x * x + 4.0 * param) / 3.0);
            let arg = x / (f * f * f);
            let phi = acos_guarded(arg).map_err(|_| Error::Discriminant)? / 3.0;
            Ok(f * fx::cos(phi))
        }
        CubicFamily::Bessel => {
            if !(param >= 0.0) || !(x > 0.0) {
                return Err(Error::Domain("bessel cubic root needs nu >= 0, x > 0"));
            }
            let g = fx::sqrt(3.0 * (param * param + x * x) + 1.0);
            let h = 9.0 * param * param - 4.5 * x * x - 1.0;
            let phi = acos_guarded(h / (g * g * g)).map_err(|_| Error::Discriminant)? / 3.0;
            Ok(2.0 * g / 3.0 * fx::cos(phi) - 1.0 / 3.0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn characteristic_root_picks_positive() {
        // y^2 - 0 y - 1/2 = 0 in the form a + b y + c y^2 with a = -1/2,
        // b = 0, c = 1: root sqrt(1/2).
        let r = characteristic_root(-0.5, 0.0, 1.0).unwrap();
        assert!((r - 0.5f64.sqrt()).abs() < 1e-15);
        // Kummer at a = b: root 1.
        let r = characteristic_root(2.0 / 3.0, 1.0 - 2.0 / 3.0, -1.0).unwrap();
        assert!((r - 1.0).abs() < 1e-14);
        assert!(characteristic_root(1.0, 1.0, 1.0).is_err());
        // Gauss coefficients at x -> 0+: root tends to ab/c.
        let (a, b, c, x) = (1.3, 0.7, 2.0, 1e-9);
        let x1x = x * (1.0 - x);
        let r = characteristic_root(a * b / x1x, -(c - (a + b + 1.0) * x) / x1x, -1.0).unwrap();
        assert!((r - a * b / c).abs() < 1e-7, "{r}");
    }

    #[test]
    fn cubic_roots_satisfy_their_cubics() {
        for &(n, x) in &[(1.0, 0.0), (0.6, -3.0), (4.0, 7.5)] {
            let z = cubic_nullcline_root(n, x, CubicFamily::Pcf).unwrap();
            let res = z * z * z - (x * x / 4.0 + n) * z - x / 4.0;
            let scale = (z * z * z).abs().max(1.0);
            assert!(
                res.abs() <= 1e-12 * scale,
                "pcf n={n} x={x}: residual {res}"
            );
        }
        for &(nu, x) in &[(0.0, 1.0), (1.0, 0.5), (6.5, 30.0)] {
            let p = cubic_nullcline_root(nu, x, CubicFamily::Bessel).unwrap();
            let res = p * p * p + p * p - (nu * nu + x * x) * p - nu * nu;
            let scale = (p * p * p).abs().max(1.0);
            assert!(
                res.abs() <= 1e-12 * scale,
                "bessel nu={nu} x={x}: residual {res}"
            );
        }
    }

    #[test]
    fn pcf_cubic_root_matches_trig_bound() {
        use crate::bounds::pcf::trig33;
        for &(n, x) in &[(1.0, 0.0), (2.0, 4.0), (0.7, -9.0)] {
            let root = cubic_nullcline_root(n, x, CubicFamily::Pcf).unwrap();
            let bound = trig33(n, x).unwrap();
            assert!((bound - (0.5 * x + root)).abs() < 1e-13 * bound.abs().max(1.0));
        }
    }
}
