//! Empirical certification of accuracy tags and leading gap coefficients.
//!
//! A bound's accuracy tag `(m, n)` counts how many leading terms of the
//! ratio's expansion it reproduces at the two ends of its domain. The tag
//! translates into an integer exponent of the gap `bound - ratio` at each
//! end; this module fits that exponent on log-log windows against the
//! enclosure oracle and reports match/mismatch, plus fixed-exponent
//! coefficient estimates for the stated leading gap constants.
//!
//! Exponent dictionaries by family convention (tags are (at -inf, at +inf)
//! for the parabolic cylinder family, (at 0, at +inf) elsewhere):
//!
//! * parabolic cylinder, both ends: `1 - 2k` for `k` correct terms;
//! * Bessel ratios at 0: `2k - 1` (odd expansions); Kummer at 0: `k`;
//!   both at +inf: `-k`;
//! * the `b+2`-direction transports carry an extra `1/x` scale at infinity,
//!   so `k` terms give `-(k+1)`.

use crate::bounds::{bessel, confluent, pcf};
use crate::enclosure::Enclosure;
use crate::error::{Error, Result};
use crate::fx;
use crate::oracle::{self, OracleConfig};
use crate::types::{sample_axis, Family, Sampling};
use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FitSide {
    AtZero,
    AtPlusInf,
    AtMinusInf,
}

impl FitSide {
    pub fn name(&self) -> &'static str {
        match self {
            FitSide::AtZero => "zero",
            FitSide::AtPlusInf => "plus_inf",
            FitSide::AtMinusInf => "minus_inf",
        }
    }
}

/// Result of one log-log order fit of `gap = bound - oracle midpoint`.
#[derive(Debug, Clone)]
pub struct OrderFit {
    pub side: FitSide,
    pub exponent: f64,
    /// Signed leading coefficient `gap ~ coefficient * |x|^exponent`.
    pub coefficient: f64,
    /// RMS residual of the regression in log space.
    pub residual: f64,
    /// Standard error of the fitted exponent.
    pub std_err: f64,
    pub window: (f64, f64),
    pub n_samples: usize,
}

fn window_samples(side: FitSide, window: (f64, f64), n: usize) -> Result<Vec<f64>> {
    if n < 8 {
        return Err(Error::InvalidGrid("order fit needs >= 8 samples"));
    }
    if !(window.0 > 0.0 && window.1 / window.0 >= 3.0) {
        return Err(Error::InvalidGrid(
            "order fit window spans too little range",
        ));
    }
    let ts = sample_axis(window.0, window.1, n, Sampling::Log);
    Ok(match side {
        FitSide::AtMinusInf => ts.iter().map(|&t| -t).collect(),
        _ => ts,
    })
}

/// Fit `ln|gap|` against `ln|x|` over a log-spaced window.
///
/// Preconditions enforced: the oracle must be converged (relative width at
/// most 1e-12) at every sample, the gap must clear the enclosure width by a
/// factor 100 (`ShrinkWindow` otherwise), must sit above the floating-point
/// noise floor (`Overprecision`), and must keep one sign.
pub fn estimate_order(
    bound: &dyn Fn(f64) -> Result<f64>,
    oracle: &dyn Fn(&[f64]) -> Result<Vec<Enclosure>>,
    side: FitSide,
    window: (f64, f64),
    n_samples: usize,
) -> Result<OrderFit> {
    let xs = window_samples(side, window, n_samples)?;
    let encs = oracle(&xs)?;
    let mut pts = Vec::with_capacity(xs.len());
    let mut sign = 0i8;
    for (&x, enc) in xs.iter().zip(encs.iter()) {
        if enc.rel_width() > 1e-12 {
            return Err(Error::NotConverged {
                best: *enc,
                rel_width: enc.rel_width(),
            });
        }
        let gap = bound(x)? - enc.mid();
        if gap.abs() <= 100.0 * enc.width() {
            return Err(Error::ShrinkWindow);
        }
        if gap.abs() <= 32.0 * f64::EPSILON * enc.mid().abs() {
            return Err(Error::Overprecision);
        }
        let s = if gap > 0.0 { 1 } else { -1 };
        if sign == 0 {
            sign = s;
        } else if sign != s {
            return Err(Error::ShrinkWindow);
        }
        pts.push((fx::ln(fx::abs(x)), fx::ln(fx::abs(gap))));
    }
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let (mx, my) = (sx / n, sy / n);
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: f64 = pts
        .iter()
        .map(|p| {
            let r = p.1 - (intercept + slope * p.0);
            r * r
        })
        .sum();
    let residual = fx::sqrt(ss_res / n);
    let std_err = fx::sqrt(ss_res / (n - 2.0) / sxx);
    Ok(OrderFit {
        side,
        exponent: slope,
        coefficient: sign as f64 * fx::exp(intercept),
        residual,
        std_err,
        window,
        n_samples: pts.len(),
    })
}

/// Geometric-mean estimate of the gap coefficient at a pinned exponent.
pub fn estimate_coefficient(
    bound: &dyn Fn(f64) -> Result<f64>,
    oracle: &dyn Fn(&[f64]) -> Result<Vec<Enclosure>>,
    side: FitSide,
    window: (f64, f64),
    exponent: f64,
    n_samples: usize,
) -> Result<f64> {
    let xs = window_samples(side, window, n_samples)?;
    let encs = oracle(&xs)?;
    let mut acc = 0.0;
    let mut sign = 0i8;
    for (&x, enc) in xs.iter().zip(encs.iter()) {
        let gap = bound(x)? - enc.mid();
        if gap.abs() <= 100.0 * enc.width() {
            return Err(Error::ShrinkWindow);
        }
        let s = if gap > 0.0 { 1 } else { -1 };
        if sign == 0 {
            sign = s;
        } else if sign != s {
            return Err(Error::ShrinkWindow);
        }
        acc += fx::ln(fx::abs(gap)) - exponent * fx::ln(fx::abs(x));
    }
    Ok(sign as f64 * fx::exp(acc / xs.len() as f64))
}

/// Coefficient estimate with the next-order contamination removed: fits
/// `gap * |x|^-exponent = alpha + beta |x|^curvature` by least squares over
/// the window and returns `alpha`. The expansions here step in powers of
/// `x^-2`, so `curvature = -2` strips the leading bias.
pub fn estimate_coefficient_extrapolated(
    bound: &dyn Fn(f64) -> Result<f64>,
    oracle: &dyn Fn(&[f64]) -> Result<Vec<Enclosure>>,
    side: FitSide,
    window: (f64, f64),
    exponent: f64,
    curvature: f64,
    n_samples: usize,
) -> Result<f64> {
    let xs = window_samples(side, window, n_samples)?;
    let encs = oracle(&xs)?;
    let mut pts = Vec::with_capacity(xs.len());
    for (&x, enc) in xs.iter().zip(encs.iter()) {
        let gap = bound(x)? - enc.mid();
        if gap.abs() <= 100.0 * enc.width() {
            return Err(Error::ShrinkWindow);
        }
        let t = fx::abs(x);
        let z = gap / crate::fx::exp(exponent * fx::ln(t));
        pts.push((crate::fx::exp(curvature * fx::ln(t)), z));
    }
    let n = pts.len() as f64;
    let (su, sz): (f64, f64) = pts.iter().fold((0.0, 0.0), |(a, b), p| (a + p.0, b + p.1));
    let (mu, mz) = (su / n, sz / n);
    let suu: f64 = pts.iter().map(|p| (p.0 - mu) * (p.0 - mu)).sum();
    let suz: f64 = pts.iter().map(|p| (p.0 - mu) * (p.1 - mz)).sum();
    let beta = suz / suu;
    Ok(mz - beta * mu)
}

/// One side-check of a catalogued tag.
#[derive(Debug, Clone)]
pub struct TagCheck {
    pub bound_id: String,
    pub family: Family,
    pub side: FitSide,
    pub expected_exponent: f64,
    pub fit: Option<OrderFit>,
    pub matched: bool,
    pub error: Option<Error>,
}

struct TagEntry {
    id: &'static str,
    family: Family,
    bound: Box<dyn Fn(f64) -> Result<f64>>,
    oracle: Box<dyn Fn(&[f64]) -> Result<Vec<Enclosure>>>,
    near_side: FitSide,
    near_window: (f64, f64),
    near_exponent: f64,
    far_window: (f64, f64),
    far_exponent: f64,
}

fn pcf_oracle(n: f64, cfg: OracleConfig) -> Box<dyn Fn(&[f64]) -> Result<Vec<Enclosure>>> {
    Box::new(move |xs| {
        oracle::pcf::enclose_batch(n, xs, &cfg)
            .into_iter()
            .collect()
    })
}

fn bessel_i_oracle(nu: f64, cfg: OracleConfig) -> Box<dyn Fn(&[f64]) -> Result<Vec<Enclosure>>> {
    Box::new(move |xs| {
        xs.iter()
            .map(|&x| oracle::bessel::i_ratio_enclosure(nu, x, &cfg))
            .collect()
    })
}

fn bessel_k_oracle(nu: f64, cfg: OracleConfig) -> Box<dyn Fn(&[f64]) -> Result<Vec<Enclosure>>> {
    Box::new(move |xs| {
        xs.iter()
            .map(|&x| oracle::bessel::k_ratio_enclosure(nu, x, &cfg))
            .collect()
    })
}

fn kummer_oracle(
    a: f64,
    b: f64,
    cfg: OracleConfig,
) -> Box<dyn Fn(&[f64]) -> Result<Vec<Enclosure>>> {
    Box::new(move |xs| {
        xs.iter()
            .map(|&x| oracle::kummer::ratio_enclosure(a, b, x, &cfg))
            .collect()
    })
}

fn kummer_h_oracle(
    a: f64,
    b: f64,
    cfg: OracleConfig,
) -> Box<dyn Fn(&[f64]) -> Result<Vec<Enclosure>>> {
    Box::new(move |xs| {
        xs.iter()
            .map(|&x| oracle::kummer::a1b2_enclosure(a, b, x, &cfg))
            .collect()
    })
}

fn entries(cfg: &OracleConfig) -> Vec<TagEntry> {
    let cfg = *cfg;
    let mut v: Vec<TagEntry> = Vec::new();

    // Parabolic cylinder: tag (m,n) -> exponents 1-2m at -inf, 1-2n at +inf.
    let pcf_entry =
        |id: &'static str, n: f64, tag: (i8, i8), f: Box<dyn Fn(f64) -> Result<f64>>| TagEntry {
            id,
            family: Family::PcfU,
            bound: f,
            oracle: pcf_oracle(n, cfg),
            near_side: FitSide::AtMinusInf,
            near_window: (30.0, 100.0),
            near_exponent: (1 - 2 * tag.0) as f64,
            far_window: (30.0, 100.0),
            far_exponent: (1 - 2 * tag.1) as f64,
        };
    v.push(pcf_entry(
        "pcf.b21",
        1.0,
        (2, 1),
        Box::new(|x| pcf::b21(1.0, x)),
    ));
    v.push(pcf_entry(
        "pcf.b12",
        1.0,
        (1, 2),
        Box::new(|x| pcf::b12(1.0, x)),
    ));
    v.push(pcf_entry(
        "pcf.b30",
        2.5,
        (3, 0),
        Box::new(|x| pcf::b30(2.5, x)),
    ));
    v.push(pcf_entry(
        "pcf.b03",
        1.0,
        (0, 3),
        Box::new(|x| pcf::b03(1.0, x)),
    ));
    v.push(pcf_entry(
        "pcf.b40",
        3.5,
        (4, 0),
        Box::new(|x| pcf::b40(3.5, x)),
    ));
    v.push(pcf_entry(
        "pcf.trig33",
        1.0,
        (3, 3),
        Box::new(|x| pcf::trig33(1.0, x)),
    ));
    v.push(pcf_entry(
        "pcf.alg33",
        1.0,
        (3, 3),
        Box::new(|x| pcf::alg33(1.0, x)),
    ));

    // Bessel catalogue rows: tag (n at 0, m at inf) -> exponents 2n-1, -m.
    // K rows run at half-integer orders where the K oracle is exact.
    for (row, nu) in [
        (bessel::CatalogRow::I21, 2.5),
        (bessel::CatalogRow::I03, 2.5),
        (bessel::CatalogRow::I12, 2.5),
        (bessel::CatalogRow::I30, 2.5),
        (bessel::CatalogRow::K21, 2.5),
        (bessel::CatalogRow::K03, 2.5),
        (bessel::CatalogRow::K12, 2.5),
        (bessel::CatalogRow::K30, 4.5),
    ] {
        let (n0, mi) = row.accuracy();
        let near_window = if n0 == 3 { (0.1, 1.0) } else { (0.01, 0.1) };
        v.push(TagEntry {
            id: row.id(),
            family: if row.is_i_ratio() {
                Family::BesselI
            } else {
                Family::BesselK
            },
            bound: Box::new(move |x| bessel::catalog_bound(row, nu, x)),
            oracle: if row.is_i_ratio() {
                bessel_i_oracle(nu, cfg)
            } else {
                bessel_k_oracle(nu, cfg)
            },
            near_side: FitSide::AtZero,
            near_window,
            near_exponent: (2 * n0 - 1) as f64,
            far_window: (30.0, 100.0),
            far_exponent: -(mi as f64),
        });
    }

    // Extra Bessel bounds.
    let nu = 2.5;
    v.push(TagEntry {
        id: "bessel.i.b23",
        family: Family::BesselI,
        bound: Box::new(move |x| bessel::i_bound_23(nu, x)),
        oracle: bessel_i_oracle(nu, cfg),
        near_side: FitSide::AtZero,
        near_window: (0.01, 0.1),
        // the lift introduces an x^2 term absent from the ratio's odd
        // expansion, so two matched terms leave an order-2 gap
        near_exponent: 2.0,
        far_window: (30.0, 100.0),
        far_exponent: -3.0,
    });
    v.push(TagEntry {
        id: "bessel.i.iter0",
        family: Family::BesselI,
        bound: Box::new(move |x| bessel::iterated_riccati_bound(bessel::IterAlpha::Zero, nu, x)),
        oracle: bessel_i_oracle(nu, cfg),
        near_side: FitSide::AtZero,
        near_window: (0.01, 0.1),
        near_exponent: 1.0,
        far_window: (30.0, 100.0),
        far_exponent: -3.0,
    });
    v.push(TagEntry {
        id: "bessel.i.iter2",
        family: Family::BesselI,
        bound: Box::new(move |x| bessel::iterated_riccati_bound(bessel::IterAlpha::Two, nu, x)),
        oracle: bessel_i_oracle(nu, cfg),
        near_side: FitSide::AtZero,
        near_window: (0.01, 0.1),
        near_exponent: 1.0,
        far_window: (30.0, 100.0),
        far_exponent: -2.0,
    });
    v.push(TagEntry {
        id: "bessel.i.trig32",
        family: Family::BesselI,
        bound: Box::new(move |x| bessel::trig_upper_i(nu, x)),
        oracle: bessel_i_oracle(nu, cfg),
        near_side: FitSide::AtZero,
        near_window: (0.01, 0.1),
        // the cubic root's expansion carries its own x^3 term, so three
        // matched leading terms still leave an order-3 gap
        near_exponent: 3.0,
        far_window: (30.0, 100.0),
        far_exponent: -2.0,
    });

    // Kummer direction (a+1,b+1): tag (n at 0, m at inf) -> exponents n, -m.
    let (a, b) = (2.0, 3.0);
    v.push(TagEntry {
        id: "kummer.lambda",
        family: Family::Kummer,
        bound: Box::new(move |x| confluent::lambda(a, b, x)),
        oracle: kummer_oracle(a, b, cfg),
        near_side: FitSide::AtZero,
        near_window: (1e-4, 1e-2),
        near_exponent: 1.0,
        far_window: (50.0, 200.0),
        far_exponent: -2.0,
    });
    v.push(TagEntry {
        id: "kummer.lambda_tilde",
        family: Family::Kummer,
        bound: Box::new(move |x| confluent::lambda_tilde(a, b, x)),
        oracle: kummer_oracle(a, b, cfg),
        near_side: FitSide::AtZero,
        near_window: (1e-4, 1e-2),
        near_exponent: 2.0,
        far_window: (50.0, 200.0),
        far_exponent: -1.0,
    });
    v.push(TagEntry {
        id: "kummer.b03",
        family: Family::Kummer,
        bound: Box::new(move |x| confluent::b03_confluent(a, b, x)),
        oracle: kummer_oracle(a, b, cfg),
        near_side: FitSide::AtZero,
        near_window: (1e-4, 1e-2),
        near_exponent: 0.0,
        far_window: (50.0, 200.0),
        far_exponent: -3.0,
    });
    // Kummer direction (a+1,b+2): the transported ratio scales like 1/x at
    // infinity, so k correct terms give exponent -(k+1) there.
    v.push(TagEntry {
        id: "kummer.eta",
        family: Family::Kummer,
        bound: Box::new(move |x| confluent::eta(a, b, x)),
        oracle: kummer_h_oracle(a, b, cfg),
        near_side: FitSide::AtZero,
        near_window: (1e-4, 1e-2),
        near_exponent: 0.0,
        far_window: (50.0, 200.0),
        far_exponent: -3.0,
    });
    v.push(TagEntry {
        id: "kummer.eta_tilde",
        family: Family::Kummer,
        bound: Box::new(move |x| confluent::eta_tilde(a, b, x)),
        oracle: kummer_h_oracle(a, b, cfg),
        near_side: FitSide::AtZero,
        near_window: (1e-4, 1e-2),
        near_exponent: 1.0,
        far_window: (50.0, 200.0),
        far_exponent: -2.0,
    });

    v
}

/// Certify every catalogued accuracy tag by order fits on both sides.
/// A mismatch on any catalogued bound is a build failure for the suite.
pub fn certify_accuracy_table(cfg: &OracleConfig) -> Vec<TagCheck> {
    let mut out = Vec::new();
    for e in entries(cfg) {
        for (side, window, expected) in [
            (e.near_side, e.near_window, e.near_exponent),
            (FitSide::AtPlusInf, e.far_window, e.far_exponent),
        ] {
            let fit = estimate_order(e.bound.as_ref(), e.oracle.as_ref(), side, window, 12);
            let check = match fit {
                Ok(fit) => {
                    let matched = fx::abs(fit.exponent - expected) <= 0.3;
                    TagCheck {
                        bound_id: String::from(e.id),
                        family: e.family,
                        side,
                        expected_exponent: expected,
                        fit: Some(fit),
                        matched,
                        error: None,
                    }
                }
                Err(err) => TagCheck {
                    bound_id: String::from(e.id),
                    family: e.family,
                    side,
                    expected_exponent: expected,
                    fit: None,
                    matched: false,
                    error: Some(err),
                },
            };
            out.push(check);
        }
    }
    out
}
