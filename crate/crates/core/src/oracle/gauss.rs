//! Enclosures for the Gauss ratio `h(a,b,c,x) = y(a+1,b+1,c+1,x)/y(a,b,c,x)`
//! in the normalization `y(a,b,c,x) = Gamma(a)Gamma(b)/Gamma(c) 2F1(a,b;c;x)`.
//!
//! Backward recursion of
//! `h(a,b,c,x) = ab / (c - (a+b+1)x + x(1-x) h(a+1,b+1,c+1,x))`
//! contracts geometrically with ratio `x/(1-x)`, so it is used for
//! `x < 0.4`. Beyond that the ratio per step approaches and then exceeds 1
//! and the recursion stops converging, so the oracle switches to a
//! certified series quotient; the two paths cross-check on the overlap.

use crate::enclosure::Enclosure;
use crate::error::{Error, Result};
use crate::oracle::series::sum_positive_series;
use crate::oracle::OracleConfig;

/// Above this `x` the ratio is enclosed by the series quotient.
const X_SERIES_SWITCH: f64 = 0.4;

/// Interval form of the lower bound on `H(x) = 2c F(a,b;c;x)/F(a+1,b+1;c+1;x)`:
/// `c - dx + sqrt((dx-c)^2 + ab F)`, `d = a+b+1`, `F = 4x(1-x)`.
pub(crate) fn h_lower_enc(
    a: &Enclosure,
    b: &Enclosure,
    c: &Enclosure,
    x: f64,
) -> Result<Enclosure> {
    let xe = Enclosure::point(x);
    let d = a.add(b).shift(1.0);
    let f = xe.mul(&Enclosure::point(1.0 - x)).scale(4.0);
    let t = d.mul(&xe).sub(c);
    let rad = t.sq().add(&a.mul(b).mul(&f));
    Ok(c.sub(&d.mul(&xe)).add(&rad.sqrt()?))
}

/// Interval form of the upper bound on `H`:
/// `c - 1 - (d-2)x + sqrt(((d+2)x - (c+1))^2 + (a+1)(b+1)F)`.
pub(crate) fn h_upper_enc(
    a: &Enclosure,
    b: &Enclosure,
    c: &Enclosure,
    x: f64,
) -> Result<Enclosure> {
    let xe = Enclosure::point(x);
    let d = a.add(b).shift(1.0);
    let f = xe.mul(&Enclosure::point(1.0 - x)).scale(4.0);
    let t = d.shift(2.0).mul(&xe).sub(&c.shift(1.0));
    let rad = t.sq().add(&a.shift(1.0).mul(&b.shift(1.0)).mul(&f));
    Ok(c.shift(-1.0).sub(&d.shift(-2.0).mul(&xe)).add(&rad.sqrt()?))
}

fn domain_ok(a: f64, b: f64, c: f64, x: f64) -> Result<()> {
    if !(a > 0.0 && b > 0.0 && c > 0.0) {
        return Err(Error::Domain("gauss oracle needs a, b, c > 0"));
    }
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::Domain("gauss oracle needs x in (0, 1)"));
    }
    Ok(())
}

fn recurrence_attempt(a: f64, b: f64, c: f64, x: f64, depth: usize) -> Result<Enclosure> {
    let shift = depth as f64;
    let (at, bt, ct) = (a + shift, b + shift, c + shift);
    // Seed validity: c > ab/(a+b+1) at the tail; true for large shifts.
    if !(ct > at * bt / (at + bt + 1.0)) {
        return Err(Error::TailSeedInvalid);
    }
    let ae = Enclosure::point(a).shift(shift);
    let be = Enclosure::point(b).shift(shift);
    let ce = Enclosure::point(c).shift(shift);
    let h_lo_bound = h_lower_enc(&ae, &be, &ce, x)?;
    let h_hi_bound = h_upper_enc(&ae, &be, &ce, x)?;
    // h = 2ab/H, so the H pair maps to an h pair with sides swapped.
    let two_ab = ae.mul(&be).scale(2.0);
    let mut h = two_ab.div(&h_hi_bound)?.hull(&two_ab.div(&h_lo_bound)?);

    let xe = Enclosure::point(x);
    let x1x = xe.mul(&Enclosure::point(1.0 - x));
    for k in (0..depth).rev() {
        let ak = Enclosure::point(a).shift(k as f64);
        let bk = Enclosure::point(b).shift(k as f64);
        let ck = Enclosure::point(c).shift(k as f64);
        let d = ak.add(&bk).shift(1.0);
        let den = ck.sub(&d.mul(&xe)).add(&x1x.mul(&h));
        h = ak.mul(&bk).div(&den)?;
    }
    Ok(h)
}

fn recurrence_adaptive(a: f64, b: f64, c: f64, x: f64, cfg: &OracleConfig) -> Result<Enclosure> {
    let mut depth = cfg.depth.max(1);
    let mut best: Option<Enclosure> = None;
    loop {
        match recurrence_attempt(a, b, c, x, depth) {
            Ok(h) => {
                if best.is_none_or(|p| h.width() < p.width()) {
                    best = Some(h);
                }
                if h.rel_width() <= cfg.target_rel_width {
                    return Ok(h);
                }
            }
            Err(Error::DivisionContainsZero)
            | Err(Error::NegativeSqrt)
            | Err(Error::TailSeedInvalid) => {}
            Err(e) => return Err(e),
        }
        if depth >= cfg.max_depth {
            return Err(match best {
                Some(best) => Error::NotConverged {
                    best,
                    rel_width: best.rel_width(),
                },
                None => Error::TailSeedInvalid,
            });
        }
        depth = (depth * 2).min(cfg.max_depth);
    }
}

/// Certified `2F1(a,b;c;x)` as an enclosure from the ascending series.
fn series_enclosure(a: f64, b: f64, c: f64, x: f64) -> Result<Enclosure> {
    let (s, e) = sum_positive_series(
        &[a, b],
        &[c, 1.0],
        x,
        |k| {
            let kf = k as f64;
            let f1 = ((a + kf) / (1.0 + kf)).max(1.0);
            let f2 = ((b + kf) / (c + kf)).max(1.0);
            x * f1 * f2
        },
        0.25 * f64::EPSILON,
        500_000,
    )?;
    Ok(Enclosure::new(s - e, s + e))
}

fn series_ratio(a: f64, b: f64, c: f64, x: f64) -> Result<Enclosure> {
    // h = (ab/c) F(a+1,b+1;c+1;x) / F(a,b;c;x).
    let f1 = series_enclosure(a, b, c, x)?;
    let f2 = series_enclosure(a + 1.0, b + 1.0, c + 1.0, x)?;
    let abc = Enclosure::point(a)
        .mul(&Enclosure::point(b))
        .div(&Enclosure::point(c))?;
    abc.mul(&f2).div(&f1)
}

/// Enclosure of the Gauss ratio `h(a,b,c,x)`.
pub fn ratio_enclosure(a: f64, b: f64, c: f64, x: f64, cfg: &OracleConfig) -> Result<Enclosure> {
    domain_ok(a, b, c, x)?;
    if x > X_SERIES_SWITCH {
        series_ratio(a, b, c, x)
    } else {
        match recurrence_adaptive(a, b, c, x, cfg) {
            Err(Error::NotConverged { .. }) => series_ratio(a, b, c, x),
            other => other,
        }
    }
}

/// Recurrence-path enclosure regardless of `x`; used by consistency tests.
/// Converges only for `x` below roughly 1/2.
pub fn ratio_enclosure_recurrence(
    a: f64,
    b: f64,
    c: f64,
    x: f64,
    cfg: &OracleConfig,
) -> Result<Enclosure> {
    domain_ok(a, b, c, x)?;
    recurrence_adaptive(a, b, c, x, cfg)
}

/// Hypergeometric series `2F1(a,b;c;x) = sum (a)_k (b)_k / ((c)_k k!) x^k`
/// with a rigorous geometric tail bound; `0 <= x < 1`, positive parameters.
pub fn gauss_series(a: f64, b: f64, c: f64, x: f64, tol: f64) -> Result<(f64, f64)> {
    if !(0.0..1.0).contains(&x) || !(tol > 0.0) || !(a > 0.0 && b > 0.0 && c > 0.0) {
        return Err(Error::Domain(
            "gauss series needs a, b, c > 0, 0 <= x < 1, tol > 0",
        ));
    }
    if x == 0.0 {
        return Ok((1.0, 0.0));
    }
    sum_positive_series(
        &[a, b],
        &[c, 1.0],
        x,
        |k| {
            let kf = k as f64;
            let f1 = ((a + kf) / (1.0 + kf)).max(1.0);
            let f2 = ((b + kf) / (c + kf)).max(1.0);
            x * f1 * f2
        },
        tol,
        500_000,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_log_identity() {
        // 2F1(1,1;2;x) = -ln(1-x)/x
        let x = 0.5f64;
        let (v, err) = gauss_series(1.0, 1.0, 2.0, x, 1e-14).unwrap();
        let expect = -(1.0 - x).ln() / x;
        assert!((v - expect).abs() <= err + 1e-13, "got {v} want {expect}");
    }

    #[test]
    fn series_at_zero() {
        let (v, _) = gauss_series(0.3, 4.0, 1.7, 0.0, 1e-14).unwrap();
        assert_eq!(v, 1.0);
    }

    #[test]
    fn series_self_consistent_near_one() {
        let (v1, e1) = gauss_series(0.5, 0.5, 1.5, 0.9, 1e-12).unwrap();
        let (v2, e2) = gauss_series(0.5, 0.5, 1.5, 0.9, 1e-14).unwrap();
        assert!((v1 - v2).abs() <= e1 + e2);
    }

    #[test]
    fn ratio_matches_closed_forms() {
        // h(1,1,2,x) = (ab/c) F(2,2;3;x)/F(1,1;2;x) with both factors known.
        let x = 0.5f64;
        let f1 = -(1.0f64 - x).ln() / x; // 2F1(1,1;2;x)
        let fp = (x / (1.0 - x) + (1.0 - x).ln()) / (x * x); // d/dx of the above
        let f2 = 2.0 * fp; // 2F1(2,2;3;x)
        let expect = 0.5 * f2 / f1;
        let h = ratio_enclosure(1.0, 1.0, 2.0, x, &OracleConfig::default()).unwrap();
        assert!(h.contains(expect), "expected {expect} in {h}");
        assert!(h.rel_width() <= 1e-12, "rel width {}", h.rel_width());
    }

    #[test]
    fn small_x_limit_is_ab_over_c() {
        let (a, b, c) = (1.3, 0.8, 2.1);
        let h = ratio_enclosure(a, b, c, 1e-8, &OracleConfig::default()).unwrap();
        let lim = a * b / c;
        assert!((h.mid() / lim - 1.0).abs() < 1e-6);
    }

    #[test]
    fn recurrence_nesting_in_depth() {
        let shallow = recurrence_attempt(0.5, 2.0, 1.0, 0.25, 40).unwrap();
        let deep = recurrence_attempt(0.5, 2.0, 1.0, 0.25, 80).unwrap();
        assert!(deep.subset_of(&shallow));
    }

    #[test]
    fn series_and_recurrence_paths_agree() {
        for &(a, b, c) in &[(1.0, 1.0, 2.0), (0.5, 2.0, 1.5), (2.0, 5.0, 3.0)] {
            for &x in &[0.1, 0.3, 0.39] {
                let cfg = OracleConfig::default();
                let rec = recurrence_adaptive(a, b, c, x, &cfg).unwrap();
                let ser = series_ratio(a, b, c, x).unwrap();
                assert!(
                    rec.lo() <= ser.hi() && ser.lo() <= rec.hi(),
                    "({a},{b},{c},{x}): {rec} vs {ser}"
                );
            }
        }
    }

    #[test]
    fn series_path_tight_near_one() {
        let h = ratio_enclosure(5.0, 5.0, 5.0, 0.99, &OracleConfig::default()).unwrap();
        assert!(h.rel_width() <= 1e-12, "rel width {}", h.rel_width());
    }
}
