//! Named checker instances: one per catalogued bound whose side is derived
//! through the nullcline or residual-sign argument, plus deliberately
//! corrupted candidates that the residual checker must reject.
//!
//! Endpoint data (which end carries the known behavior and the sign of
//! `lambda - phi` there) is stored per instance from the ratio's own
//! series/asymptotic expansions, never inferred at run time.

use crate::bounds::{bessel, confluent, pcf};
use crate::enclosure::Enclosure;
use crate::error::Result;
use crate::fx;
use crate::oracle::{self, OracleConfig};
use crate::riccati::{
    check_nullcline_conditions, check_residual_sign, EndpointSide, ImpliedSide, ResidualProblem,
    RiccatiProblem, Verdict,
};
use crate::types::{sample_axis, Sampling};
use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceKind {
    Nullcline,
    Residual,
}

#[derive(Debug, Clone)]
pub struct InstanceOutcome {
    pub verdict: Verdict,
    pub implied_side: Option<ImpliedSide>,
    pub min_margin: f64,
    pub num_points: usize,
    pub detail: String,
}

pub struct RegisteredInstance {
    pub id: &'static str,
    pub kind: InstanceKind,
    /// Genuine bounds must pass; corrupted candidates must fail.
    pub expect_pass: bool,
    pub description: &'static str,
    runner: Box<dyn Fn(&OracleConfig) -> Result<InstanceOutcome>>,
}

impl RegisteredInstance {
    pub fn run(&self, cfg: &OracleConfig) -> Result<InstanceOutcome> {
        (self.runner)(cfg)
    }
}

fn merge(outcomes: Vec<InstanceOutcome>) -> InstanceOutcome {
    let mut verdict = Verdict::Pass;
    let mut min_margin = f64::INFINITY;
    let mut num_points = 0;
    let mut side = None;
    let mut detail = String::new();
    for o in outcomes {
        num_points += o.num_points;
        if o.min_margin < min_margin {
            min_margin = o.min_margin;
        }
        side = side.or(o.implied_side);
        match (verdict, o.verdict) {
            (_, Verdict::Fail) => verdict = Verdict::Fail,
            (Verdict::Pass, Verdict::Inconclusive) => verdict = Verdict::Inconclusive,
            _ => {}
        }
        if !o.detail.is_empty() {
            detail = o.detail;
        }
    }
    InstanceOutcome {
        verdict,
        implied_side: side,
        min_margin,
        num_points,
        detail,
    }
}

// --- closed-form derivatives used by the residual instances ---

fn b03_prime(n: f64, x: f64) -> f64 {
    ((n + 2.5) + (n + 0.5) * x / fx::sqrt(x * x + 4.0 * n + 6.0)) / (2.0 * (n + 1.5))
}

fn b21_prime(n: f64, x: f64) -> f64 {
    0.5 * (1.0 + x / fx::sqrt(x * x + 4.0 * n - 2.0))
}

fn b12_prime(n: f64, x: f64) -> f64 {
    0.5 * (1.0 + x / fx::sqrt(x * x + 4.0 * n + 2.0))
}

/// q = 1/lambda(a-1,b-1,x) in the form used by the reciprocal problem.
fn recip_b03(a: f64, b: f64, x: f64) -> f64 {
    let d = x - b + 1.0;
    (b - 1.0 - x + fx::sqrt(d * d + 4.0 * (a - 1.0) * x)) / (2.0 * (a - 1.0))
}

fn recip_b03_prime(a: f64, b: f64, x: f64) -> f64 {
    let d = x - b + 1.0;
    let s = fx::sqrt(d * d + 4.0 * (a - 1.0) * x);
    (-1.0 + (d + 2.0 * (a - 1.0)) / s) / (2.0 * (a - 1.0))
}

fn lambda_prime(a: f64, b: f64, x: f64) -> f64 {
    let d = x - b;
    let s = fx::sqrt(d * d + 4.0 * a * x);
    (1.0 + (d + 2.0 * a) / s) / (2.0 * x) - (d + s) / (2.0 * x * x)
}

fn lambda_tilde_prime(a: f64, b: f64, x: f64) -> f64 {
    let d = x - b - 1.0;
    let s = fx::sqrt(d * d + 4.0 * (a + 1.0) * x);
    let den = b - 1.0 - x + s;
    let den_prime = -1.0 + (d + 2.0 * (a + 1.0)) / s;
    -2.0 * a * den_prime / (den * den)
}

fn lower_i02_prime(nu: f64, x: f64) -> f64 {
    let al = nu - 0.5;
    let s = fx::sqrt(al * al + x * x);
    1.0 / s - (al + s) / (x * x)
}

fn i23_prime(nu: f64, x: f64) -> f64 {
    let m = nu + 1.0;
    let s = fx::sqrt(m * m + x * x - x);
    let sp = (2.0 * x - 1.0) / (2.0 * s);
    -2.0 * nu / (x * x) + ((m + s) - x * sp) / ((m + s) * (m + s))
}

fn iter2_prime(nu: f64, x: f64) -> f64 {
    let lam = nu + 0.5;
    let r = fx::sqrt(lam * lam + x * x);
    let delta = (nu - 0.5) + lam / (2.0 * r);
    let dp = -lam * x / (2.0 * r * r * r);
    let s = fx::sqrt(delta * delta + x * x);
    (dp + (delta * dp + x) / s) / x - (delta + s) / (x * x)
}

fn gauss_lower_h_prime(a: f64, b: f64, c: f64, x: f64) -> f64 {
    let d = a + b + 1.0;
    let t = d * x - c;
    let q = 4.0 * a * b * x * (1.0 - x);
    let s = fx::sqrt(t * t + q);
    -d + (t * d + 2.0 * a * b * (1.0 - 2.0 * x)) / s
}

fn gauss_upper_h_prime(a: f64, b: f64, c: f64, x: f64) -> f64 {
    let d = a + b + 1.0;
    let t = (d + 2.0) * x - (c + 1.0);
    let q = 4.0 * (a + 1.0) * (b + 1.0) * x * (1.0 - x);
    let s = fx::sqrt(t * t + q);
    -(d - 2.0) + (t * (d + 2.0) + 2.0 * (a + 1.0) * (b + 1.0) * (1.0 - 2.0 * x)) / s
}

// --- problem builders ---

fn pcf_rhs(n: f64) -> impl Fn(f64, f64) -> f64 {
    move |x, y| y * y - x * y - (n - 0.5)
}

fn bessel_i_rhs(nu: f64) -> impl Fn(f64, f64) -> f64 {
    move |x, y| 1.0 + (2.0 * nu - 1.0) / x * y - y * y
}

fn kummer_rhs(a: f64, b: f64) -> impl Fn(f64, f64) -> f64 {
    move |x, y| a / x + (1.0 - b / x) * y - y * y
}

fn kummer_recip_rhs(a: f64, b: f64) -> impl Fn(f64, f64) -> f64 {
    move |x, y| 1.0 - (1.0 - b / x) * y - (a / x) * y * y
}

fn gauss_rhs(a: f64, b: f64, c: f64) -> impl Fn(f64, f64) -> f64 {
    move |x, y| {
        let x1x = x * (1.0 - x);
        (a * b - (c - (a + b + 1.0) * x) * y - x1x * y * y) / x1x
    }
}

fn pcf_grid() -> Vec<f64> {
    sample_axis(-50.0, 50.0, 2000, Sampling::Linear)
}

fn positive_grid(hi: f64) -> Vec<f64> {
    sample_axis(1e-3, hi, 2000, Sampling::Log)
}

fn gauss_grid() -> Vec<f64> {
    sample_axis(1e-3, 0.999, 2000, Sampling::Linear)
}

fn residual_instance(
    id: &'static str,
    expect_pass: bool,
    description: &'static str,
    build: impl Fn() -> (Vec<(ResidualProblem, Vec<f64>)>,) + 'static,
) -> RegisteredInstance {
    RegisteredInstance {
        id,
        kind: InstanceKind::Residual,
        expect_pass,
        description,
        runner: Box::new(move |_cfg| {
            let (cases,) = build();
            let mut outs = Vec::new();
            for (problem, xs) in cases {
                let rep = check_residual_sign(&problem, &xs)?;
                outs.push(InstanceOutcome {
                    verdict: rep.verdict,
                    implied_side: rep.implied_side,
                    min_margin: rep.min_adjusted_residual,
                    num_points: rep.num_points,
                    detail: format!("worst x {:.6}", rep.worst_x),
                });
            }
            Ok(merge(outs))
        }),
    }
}

/// All registered instances: the five genuine derivations used by the bound
/// catalogue, then the twelve corrupted candidates (three per family).
pub fn registry() -> Vec<RegisteredInstance> {
    let mut v: Vec<RegisteredInstance> = Vec::new();

    // Genuine: PCF characteristic root is a lower bound (nullcline, c > 0,
    // ratio positive and increasing toward +inf).
    v.push(RegisteredInstance {
        id: "pcf.root.nullcline",
        kind: InstanceKind::Nullcline,
        expect_pass: true,
        description: "PCF ratio lies above its Riccati root for n > 1/2",
        runner: Box::new(|cfg| {
            let mut outs = Vec::new();
            for &n in &[1.0, 2.5, 7.0] {
                let problem = RiccatiProblem {
                    coeff_a: Box::new(move |_| -(n - 0.5)),
                    coeff_b: Box::new(|x| -x),
                    coeff_c: Box::new(|_| 1.0),
                    endpoint: EndpointSide::Right,
                    h_positive_at_endpoint: true,
                    slopes_agree_at_endpoint: true,
                };
                let xs = pcf_grid();
                let cfg = *cfg;
                let hook = move |pts: &[f64]| -> Result<Vec<Enclosure>> {
                    oracle::pcf::enclose_batch(n, pts, &cfg)
                        .into_iter()
                        .collect()
                };
                let rep = check_nullcline_conditions(&problem, &xs, Some(&hook))?;
                let pass_side = rep.implied_side == Some(ImpliedSide::LowerBound);
                outs.push(InstanceOutcome {
                    verdict: if pass_side {
                        rep.verdict
                    } else {
                        Verdict::Fail
                    },
                    implied_side: rep.implied_side,
                    min_margin: rep.oracle_min_margin.unwrap_or(f64::INFINITY),
                    num_points: rep.num_points,
                    detail: rep.detail,
                });
            }
            Ok(merge(outs))
        }),
    });

    // Genuine: the (0,3) PCF bound via the residual sign; the gap at +inf
    // approaches zero from below, so delta(b-) < 0 and Delta must stay
    // positive.
    v.push(residual_instance(
        "pcf.b03.residual",
        true,
        "three-term-matched PCF bound certified as a lower bound",
        || {
            let cases = [-0.4, 0.0, 1.0, 5.0]
                .iter()
                .map(|&n| {
                    let problem = ResidualProblem {
                        rhs: Box::new(pcf_rhs(n)),
                        lambda: Box::new(move |x| pcf::b03(n, x)),
                        lambda_prime: Box::new(move |x| Ok(b03_prime(n, x))),
                        endpoint: EndpointSide::Right,
                        delta_endpoint_sign: -1,
                    };
                    (problem, pcf_grid())
                })
                .collect();
            (cases,)
        },
    ));

    // Genuine: Kummer characteristic root, side set by sign(b - a)
    // (nullcline, c < 0, behavior at 0+ from the ratio's series).
    v.push(RegisteredInstance {
        id: "kummer.root.nullcline",
        kind: InstanceKind::Nullcline,
        expect_pass: true,
        description: "Kummer ratio vs its Riccati root; side flips with sign(b-a)",
        runner: Box::new(|cfg| {
            let mut outs = Vec::new();
            for &(a, b) in &[(1.0, 3.0), (3.0, 1.0), (0.5, 2.0), (2.0, 0.5)] {
                let problem = RiccatiProblem {
                    coeff_a: Box::new(move |x| a / x),
                    coeff_b: Box::new(move |x| 1.0 - b / x),
                    coeff_c: Box::new(|_| -1.0),
                    endpoint: EndpointSide::Left,
                    h_positive_at_endpoint: true,
                    slopes_agree_at_endpoint: true,
                };
                let xs = positive_grid(30.0);
                let cfg = *cfg;
                let hook = move |pts: &[f64]| -> Result<Vec<Enclosure>> {
                    pts.iter()
                        .map(|&x| oracle::kummer::ratio_enclosure(a, b, x, &cfg))
                        .collect()
                };
                let rep = check_nullcline_conditions(&problem, &xs, Some(&hook))?;
                let want = if b > a {
                    ImpliedSide::UpperBound
                } else {
                    ImpliedSide::LowerBound
                };
                let pass_side = rep.implied_side == Some(want);
                outs.push(InstanceOutcome {
                    verdict: if pass_side {
                        rep.verdict
                    } else {
                        Verdict::Fail
                    },
                    implied_side: rep.implied_side,
                    min_margin: rep.oracle_min_margin.unwrap_or(f64::INFINITY),
                    num_points: rep.num_points,
                    detail: rep.detail,
                });
            }
            Ok(merge(outs))
        }),
    });

    // Genuine: the shifted-root Kummer bound via the residual sign on the
    // reciprocal ratio; delta(0+) has the sign of b - a.
    v.push(residual_instance(
        "kummer.b03.residual",
        true,
        "shifted-root Kummer bound certified through the reciprocal problem",
        || {
            let cases = [(2.0, 3.0), (3.0, 2.0)]
                .iter()
                .map(|&(a, b)| {
                    let sign = if b > a { 1 } else { -1 };
                    let problem = ResidualProblem {
                        rhs: Box::new(kummer_recip_rhs(a, b)),
                        lambda: Box::new(move |x| Ok(recip_b03(a, b, x))),
                        lambda_prime: Box::new(move |x| Ok(recip_b03_prime(a, b, x))),
                        endpoint: EndpointSide::Left,
                        delta_endpoint_sign: sign,
                    };
                    (problem, positive_grid(30.0))
                })
                .collect();
            (cases,)
        },
    ));

    // Genuine: Gauss characteristic root is an upper bound on (0,1) under
    // the root validity condition.
    v.push(RegisteredInstance {
        id: "gauss.root.nullcline",
        kind: InstanceKind::Nullcline,
        expect_pass: true,
        description: "Gauss ratio lies below its Riccati root on (0,1)",
        runner: Box::new(|cfg| {
            let mut outs = Vec::new();
            for &(a, b, c) in &[(1.0, 1.0, 2.0), (0.5, 2.0, 1.5), (2.0, 5.0, 3.0)] {
                let problem = RiccatiProblem {
                    coeff_a: Box::new(move |x| a * b / (x * (1.0 - x))),
                    coeff_b: Box::new(move |x| -(c - (a + b + 1.0) * x) / (x * (1.0 - x))),
                    coeff_c: Box::new(|_| -1.0),
                    endpoint: EndpointSide::Left,
                    h_positive_at_endpoint: true,
                    slopes_agree_at_endpoint: true,
                };
                let xs = gauss_grid();
                let cfg = *cfg;
                let hook = move |pts: &[f64]| -> Result<Vec<Enclosure>> {
                    pts.iter()
                        .map(|&x| oracle::gauss::ratio_enclosure(a, b, c, x, &cfg))
                        .collect()
                };
                let rep = check_nullcline_conditions(&problem, &xs, Some(&hook))?;
                let pass_side = rep.implied_side == Some(ImpliedSide::UpperBound);
                outs.push(InstanceOutcome {
                    verdict: if pass_side {
                        rep.verdict
                    } else {
                        Verdict::Fail
                    },
                    implied_side: rep.implied_side,
                    min_margin: rep.oracle_min_margin.unwrap_or(f64::INFINITY),
                    num_points: rep.num_points,
                    detail: rep.detail,
                });
            }
            Ok(merge(outs))
        }),
    });

    // --- corrupted candidates; each must FAIL its residual check ---

    v.push(residual_instance(
        "mut.pcf.b03_gamma",
        false,
        "PCF (0,3) bound with the radicand constant inflated 10%",
        || {
            let n = 1.0;
            let bad = move |x: f64| {
                Ok(
                    ((n + 2.5) * x + (n + 0.5) * fx::sqrt(x * x + 1.1 * (4.0 * n + 6.0)))
                        / (2.0 * (n + 1.5)),
                )
            };
            let bad_prime = move |x: f64| {
                Ok(
                    ((n + 2.5) + (n + 0.5) * x / fx::sqrt(x * x + 1.1 * (4.0 * n + 6.0)))
                        / (2.0 * (n + 1.5)),
                )
            };
            let problem = ResidualProblem {
                rhs: Box::new(pcf_rhs(n)),
                lambda: Box::new(bad),
                lambda_prime: Box::new(bad_prime),
                endpoint: EndpointSide::Right,
                delta_endpoint_sign: -1,
            };
            (alloc::vec![(problem, pcf_grid())],)
        },
    ));
    v.push(residual_instance(
        "mut.pcf.b21_scaled",
        false,
        "PCF root bound scaled by 1.02",
        || {
            let n = 1.0;
            let problem = ResidualProblem {
                rhs: Box::new(pcf_rhs(n)),
                lambda: Box::new(move |x| pcf::b21(n, x).map(|v| 1.02 * v)),
                lambda_prime: Box::new(move |x| Ok(1.02 * b21_prime(n, x))),
                endpoint: EndpointSide::Right,
                delta_endpoint_sign: -1,
            };
            (alloc::vec![(problem, pcf_grid())],)
        },
    ));
    v.push(residual_instance(
        "mut.pcf.b12_scaled",
        false,
        "PCF upper bound scaled by 0.98",
        || {
            let n = 1.0;
            let problem = ResidualProblem {
                rhs: Box::new(pcf_rhs(n)),
                lambda: Box::new(move |x| pcf::b12(n, x).map(|v| 0.98 * v)),
                lambda_prime: Box::new(move |x| Ok(0.98 * b12_prime(n, x))),
                endpoint: EndpointSide::Right,
                delta_endpoint_sign: 1,
            };
            (alloc::vec![(problem, pcf_grid())],)
        },
    ));

    v.push(residual_instance(
        "mut.bessel.i02_scaled",
        false,
        "Bessel (0,2) lower bound scaled by 1.02",
        || {
            let nu = 1.0;
            let problem = ResidualProblem {
                rhs: Box::new(bessel_i_rhs(nu)),
                lambda: Box::new(move |x| bessel::lower_i_02(nu, x).map(|v| 1.02 * v)),
                lambda_prime: Box::new(move |x| Ok(1.02 * lower_i02_prime(nu, x))),
                endpoint: EndpointSide::Left,
                delta_endpoint_sign: -1,
            };
            (alloc::vec![(problem, positive_grid(50.0))],)
        },
    ));
    v.push(residual_instance(
        "mut.bessel.b23_scaled",
        false,
        "Bessel (2,3) upper bound scaled by 0.98",
        || {
            let nu = 1.0;
            let problem = ResidualProblem {
                rhs: Box::new(bessel_i_rhs(nu)),
                lambda: Box::new(move |x| bessel::i_bound_23(nu, x).map(|v| 0.98 * v)),
                lambda_prime: Box::new(move |x| Ok(0.98 * i23_prime(nu, x))),
                endpoint: EndpointSide::Left,
                delta_endpoint_sign: 1,
            };
            (alloc::vec![(problem, positive_grid(50.0))],)
        },
    ));
    v.push(residual_instance(
        "mut.bessel.iter2_scaled",
        false,
        "iterated-Riccati upper bound scaled by 0.98",
        || {
            let nu = 1.0;
            let problem = ResidualProblem {
                rhs: Box::new(bessel_i_rhs(nu)),
                lambda: Box::new(move |x| {
                    bessel::iterated_riccati_bound(bessel::IterAlpha::Two, nu, x).map(|v| 0.98 * v)
                }),
                lambda_prime: Box::new(move |x| Ok(0.98 * iter2_prime(nu, x))),
                endpoint: EndpointSide::Left,
                delta_endpoint_sign: 1,
            };
            (alloc::vec![(problem, positive_grid(50.0))],)
        },
    ));

    v.push(residual_instance(
        "mut.kummer.lambda_scaled",
        false,
        "Kummer root upper bound scaled by 0.98",
        || {
            let (a, b) = (1.0, 3.0);
            let problem = ResidualProblem {
                rhs: Box::new(kummer_rhs(a, b)),
                lambda: Box::new(move |x| confluent::lambda(a, b, x).map(|v| 0.98 * v)),
                lambda_prime: Box::new(move |x| Ok(0.98 * lambda_prime(a, b, x))),
                endpoint: EndpointSide::Left,
                delta_endpoint_sign: 1,
            };
            (alloc::vec![(problem, positive_grid(30.0))],)
        },
    ));
    v.push(residual_instance(
        "mut.kummer.lambda_tilde_scaled",
        false,
        "Kummer lifted-root lower bound scaled by 1.02",
        || {
            let (a, b) = (1.0, 3.0);
            let problem = ResidualProblem {
                rhs: Box::new(kummer_rhs(a, b)),
                lambda: Box::new(move |x| confluent::lambda_tilde(a, b, x).map(|v| 1.02 * v)),
                lambda_prime: Box::new(move |x| Ok(1.02 * lambda_tilde_prime(a, b, x))),
                endpoint: EndpointSide::Left,
                delta_endpoint_sign: -1,
            };
            (alloc::vec![(problem, positive_grid(30.0))],)
        },
    ));
    v.push(residual_instance(
        "mut.kummer.b03_scaled",
        false,
        "Kummer shifted-root lower bound scaled by 1.02",
        || {
            let (a, b) = (2.0, 3.0);
            let problem = ResidualProblem {
                rhs: Box::new(kummer_rhs(a, b)),
                lambda: Box::new(move |x| confluent::b03_confluent(a, b, x).map(|v| 1.02 * v)),
                lambda_prime: Box::new(move |x| Ok(1.02 * lambda_prime(a - 1.0, b - 1.0, x))),
                endpoint: EndpointSide::Left,
                delta_endpoint_sign: -1,
            };
            (alloc::vec![(problem, positive_grid(30.0))],)
        },
    ));

    v.push(residual_instance(
        "mut.gauss.lambda_scaled",
        false,
        "Gauss root upper bound scaled by 0.98",
        || {
            let (a, b, c) = (1.0, 1.0, 2.0);
            let p = crate::bounds::gauss::GaussRatioParams::new(a, b, c).unwrap();
            let problem = ResidualProblem {
                rhs: Box::new(gauss_rhs(a, b, c)),
                lambda: Box::new(move |x| {
                    crate::bounds::gauss::lambda_gauss(&p, x).map(|v| 0.98 * v)
                }),
                lambda_prime: Box::new(move |x| {
                    let l = crate::bounds::gauss::lower_h(&p, x)?;
                    Ok(0.98 * (-2.0 * a * b * gauss_lower_h_prime(a, b, c, x) / (l * l)))
                }),
                endpoint: EndpointSide::Left,
                delta_endpoint_sign: 1,
            };
            (alloc::vec![(problem, gauss_grid())],)
        },
    ));
    v.push(residual_instance(
        "mut.gauss.lower_scaled",
        false,
        "Gauss lifted lower bound scaled by 1.02",
        || {
            let (a, b, c) = (1.0, 1.0, 2.0);
            let p = crate::bounds::gauss::GaussRatioParams::new(a, b, c).unwrap();
            let problem = ResidualProblem {
                rhs: Box::new(gauss_rhs(a, b, c)),
                lambda: Box::new(move |x| {
                    crate::bounds::gauss::lower_ratio(&p, x).map(|v| 1.02 * v)
                }),
                lambda_prime: Box::new(move |x| {
                    let u = crate::bounds::gauss::upper_h(&p, x)?;
                    Ok(1.02 * (-2.0 * a * b * gauss_upper_h_prime(a, b, c, x) / (u * u)))
                }),
                endpoint: EndpointSide::Left,
                delta_endpoint_sign: -1,
            };
            (alloc::vec![(problem, gauss_grid())],)
        },
    ));
    v.push(residual_instance(
        "mut.gauss.lambda_scaled2",
        false,
        "Gauss root upper bound scaled by 0.98, second parameter set",
        || {
            let (a, b, c) = (2.0, 5.0, 3.0);
            let p = crate::bounds::gauss::GaussRatioParams::new(a, b, c).unwrap();
            let problem = ResidualProblem {
                rhs: Box::new(gauss_rhs(a, b, c)),
                lambda: Box::new(move |x| {
                    crate::bounds::gauss::lambda_gauss(&p, x).map(|v| 0.98 * v)
                }),
                lambda_prime: Box::new(move |x| {
                    let l = crate::bounds::gauss::lower_h(&p, x)?;
                    Ok(0.98 * (-2.0 * a * b * gauss_lower_h_prime(a, b, c, x) / (l * l)))
                }),
                endpoint: EndpointSide::Left,
                delta_endpoint_sign: 1,
            };
            (alloc::vec![(problem, gauss_grid())],)
        },
    ));

    v
}
