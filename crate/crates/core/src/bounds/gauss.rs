//! Bounds for the Gauss ratio `h(a,b,c,x) = y(a+1,b+1,c+1,x)/y(a,b,c,x)` on
//! `x in (0,1)`, stated both for `h` itself and for
//! `H(x) = 2c F(a,b;c;x)/F(a+1,b+1;c+1;x) = 2ab/h`, plus the confluent-limit
//! consistency experiment.

use crate::bounds::confluent;
use crate::error::{Error, Result};
use crate::fx;
use alloc::vec::Vec;

#[derive(Debug, Clone, Copy)]
pub struct GaussRatioParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl GaussRatioParams {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a > 0.0 && b > 0.0 && c > 0.0) {
            return Err(Error::Domain("gauss params must be positive"));
        }
        Ok(GaussRatioParams { a, b, c })
    }

    /// Validity of the characteristic-root (and lower-H) bound.
    pub fn root_bound_valid(&self) -> bool {
        self.c > self.a * self.b / (self.a + self.b + 1.0)
    }

    /// Extended validity of the upper-H bound.
    pub fn lifted_bound_valid(&self) -> bool {
        self.c > (self.a * self.b - 2.0) / (self.a + self.b + 3.0)
    }
}

fn check_x(x: f64) -> Result<()> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::Domain("gauss bounds need x in (0, 1)"));
    }
    Ok(())
}

/// Lower bound of `H`: `c - dx + sqrt((dx-c)^2 + ab F)` with `d = a+b+1`,
/// `F = 4x(1-x)`; requires `c > ab/(a+b+1)`. Subtraction-free in both
/// branches of `dx - c`.
pub fn lower_h(p: &GaussRatioParams, x: f64) -> Result<f64> {
    check_x(x)?;
    if !p.root_bound_valid() {
        return Err(Error::Domain("lower_h needs c > ab/(a+b+1)"));
    }
    let d = p.a + p.b + 1.0;
    let t = d * x - p.c;
    let q = p.a * p.b * 4.0 * x * (1.0 - x);
    let s = fx::sqrt(t * t + q);
    if t <= 0.0 {
        Ok(-t + s)
    } else {
        Ok(q / (t + s))
    }
}

/// Upper bound of `H`:
/// `c - 1 - (d-2)x + sqrt(((d+2)x - (c+1))^2 + (a+1)(b+1) F)`;
/// valid under the extended condition `c > (ab-2)/(a+b+3)`.
pub fn upper_h(p: &GaussRatioParams, x: f64) -> Result<f64> {
    check_x(x)?;
    if !p.lifted_bound_valid() {
        return Err(Error::Domain("upper_h needs c > (ab-2)/(a+b+3)"));
    }
    let d = p.a + p.b + 1.0;
    let t = (d + 2.0) * x - (p.c + 1.0);
    let q = (p.a + 1.0) * (p.b + 1.0) * 4.0 * x * (1.0 - x);
    let s = fx::sqrt(t * t + q);
    if t <= 0.0 {
        Ok(p.c - 1.0 - (d - 2.0) * x + s)
    } else {
        // c-1-(d-2)x = -t + 2x; avoid the cancellation in -t + s.
        Ok(q / (t + s) + 2.0 * x)
    }
}

/// Positive characteristic root of the ratio's Riccati equation,
/// `lambda(x) = ((a+b+1)x - c + sqrt(((a+b+1)x-c)^2 + 4abx(1-x)))/(2x(1-x))`,
/// an upper bound of `h` on `(0,1)` when `c > ab/(a+b+1)`. Computed as
/// `2ab / lower_h`, which has no removable singularity at either endpoint.
pub fn lambda_gauss(p: &GaussRatioParams, x: f64) -> Result<f64> {
    Ok(2.0 * p.a * p.b / lower_h(p, x)?)
}

/// Lower bound of `h`: `2ab / upper_h`.
pub fn lower_ratio(p: &GaussRatioParams, x: f64) -> Result<f64> {
    Ok(2.0 * p.a * p.b / upper_h(p, x)?)
}

/// One row of the confluent-limit experiment at scale `big_b`.
#[derive(Debug, Clone, Copy)]
pub struct LimitRow {
    pub big_b: f64,
    pub gap_lower: f64,
    pub gap_upper: f64,
}

/// Report for the confluent-limit check: the Gauss `H` bounds at
/// `(a, B, b_ren, x/B)` against the Kummer pair at `(a, b_ren, x)`,
/// with the decay slope of the gap in `log B`.
#[derive(Debug, Clone)]
pub struct ConfluentLimitReport {
    pub rows: Vec<LimitRow>,
    pub slope_lower: f64,
    pub slope_upper: f64,
}

pub fn confluent_limit_check(
    a: f64,
    b_ren: f64,
    x: f64,
    big_bs: &[f64],
) -> Result<ConfluentLimitReport> {
    if !(a > 0.0 && b_ren > 0.0 && x > 0.0) {
        return Err(Error::Domain(
            "confluent limit check needs positive arguments",
        ));
    }
    if !(b_ren > a) {
        // only the b > a side of the sandwich survives the limit
        return Err(Error::Domain("confluent limit check needs b_ren > a"));
    }
    let (ku_lo, ku_hi) = confluent::m_normalized_pair(a, b_ren, x)?;
    let mut rows = Vec::with_capacity(big_bs.len());
    for &big_b in big_bs {
        let p = GaussRatioParams::new(a, big_b, b_ren)?;
        let xb = x / big_b;
        if !(xb < 1.0) {
            return Err(Error::Domain("x/B must stay below 1"));
        }
        let lo = lower_h(&p, xb)?;
        let hi = upper_h(&p, xb)?;
        rows.push(LimitRow {
            big_b,
            gap_lower: fx::abs(lo - ku_lo),
            gap_upper: fx::abs(hi - ku_hi),
        });
    }
    fn slope(rows: &[LimitRow], sel: fn(&LimitRow) -> f64) -> f64 {
        let pts: Vec<(f64, f64)> = rows
            .iter()
            .filter(|r| sel(r) > 0.0)
            .map(|r| (fx::ln(r.big_b), fx::ln(sel(r))))
            .collect();
        if pts.len() < 2 {
            return 0.0;
        }
        let n = pts.len() as f64;
        let (sx, sy): (f64, f64) = pts
            .iter()
            .fold((0.0, 0.0), |(sx, sy), p| (sx + p.0, sy + p.1));
        let (sxx, sxy): (f64, f64) = pts.iter().fold((0.0, 0.0), |(sxx, sxy), p| {
            (sxx + p.0 * p.0, sxy + p.0 * p.1)
        });
        (n * sxy - sx * sy) / (n * sxx - sx * sx)
    }
    let slope_lower = slope(&rows, |r| r.gap_lower);
    let slope_upper = slope(&rows, |r| r.gap_upper);
    Ok(ConfluentLimitReport {
        rows,
        slope_lower,
        slope_upper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_spot_value() {
        let p = GaussRatioParams::new(1.0, 1.0, 2.0).unwrap();
        let v = lambda_gauss(&p, 0.5).unwrap();
        assert!((v - (-0.5 + 1.25f64.sqrt()) * 2.0).abs() < 1e-14, "{v}");
    }

    #[test]
    fn lower_h_endpoint_is_2c() {
        let p = GaussRatioParams::new(1.3, 0.7, 2.0).unwrap();
        let v = lower_h(&p, 1e-14).unwrap();
        assert!((v - 2.0 * p.c).abs() < 1e-10);
    }

    #[test]
    fn lambda_small_x_tends_to_ab_over_c() {
        let p = GaussRatioParams::new(1.3, 0.7, 2.0).unwrap();
        let v = lambda_gauss(&p, 1e-12).unwrap();
        assert!((v - p.a * p.b / p.c).abs() < 1e-9);
    }

    #[test]
    fn validity_flags() {
        let p = GaussRatioParams::new(5.0, 5.0, 0.5).unwrap();
        assert!(!p.root_bound_valid());
        assert!(!p.lifted_bound_valid());
        let p = GaussRatioParams::new(5.0, 5.0, 2.1).unwrap();
        assert!(!p.root_bound_valid());
        assert!(p.lifted_bound_valid());
        assert!(lower_h(&p, 0.5).is_err());
        assert!(upper_h(&p, 0.5).is_ok());
    }

    #[test]
    fn h_pair_brackets_on_sample() {
        // H(1,1,2,1/2) = 4 F(1,1;2;1/2)/F(2,2;3;1/2) via closed forms.
        let x = 0.5f64;
        let f1 = -(1.0f64 - x).ln() / x;
        let f2 = 2.0 * (x / (1.0 - x) + (1.0 - x).ln()) / (x * x);
        let h_true = 4.0 * f1 / f2;
        let p = GaussRatioParams::new(1.0, 1.0, 2.0).unwrap();
        let lo = lower_h(&p, x).unwrap();
        let hi = upper_h(&p, x).unwrap();
        assert!(lo < h_true && h_true < hi, "{lo} < {h_true} < {hi}");
    }

    #[test]
    fn confluent_limit_gap_shrinks() {
        let rep = confluent_limit_check(1.0, 2.0, 1.0, &[1e2, 1e3, 1e4]).unwrap();
        assert!(rep.rows[2].gap_lower < 1e-3);
        assert!(rep.rows[2].gap_upper < 1e-3);
        assert!(
            rep.slope_lower < -0.7 && rep.slope_lower > -1.3,
            "{}",
            rep.slope_lower
        );
    }
}
