//! Enclosures for the modified Bessel ratios `I_{nu-1}(x)/I_nu(x)` and
//! `K_{nu+1}(x)/K_nu(x)`.
//!
//! The I ratio recurses backward from a tail seed (minimal-solution
//! direction): `Phi_nu = 2 nu / x + 1 / Phi_{nu+1}`. The K ratio recurses
//! upward from a base order in `[1/2, 3/2)` (dominant-solution direction):
//! `Phi^K_nu = 2 nu / x + 1 / Phi^K_{nu-1}`, with the half-integer base
//! being exact. The K enclosure width is limited by the sharpness of the
//! base seed pair; it is reported honestly rather than iterated away.

use crate::enclosure::Enclosure;
use crate::error::{Error, Result};
use crate::oracle::OracleConfig;

/// `(alpha + sqrt(beta^2 + x^2)) / x` evaluated in interval arithmetic.
fn b_form(alpha: &Enclosure, beta: &Enclosure, x: f64) -> Result<Enclosure> {
    let rad = beta.sq().add(&Enclosure::point(x).sq());
    alpha.add(&rad.sqrt()?).div(&Enclosure::point(x))
}

fn i_attempt(nu: f64, x: f64, depth: usize) -> Result<Enclosure> {
    let shift = depth as f64;
    let nt = Enclosure::point(nu).shift(shift);
    // Seed pair at the tail: the two half-parameter family members,
    // lower (alpha = nu-1, beta = nu+1) and upper (alpha = nu-1/2, beta = nu+1/2).
    let lo = b_form(&nt.shift(-1.0), &nt.shift(1.0), x)?;
    let hi = b_form(&nt.shift(-0.5), &nt.shift(0.5), x)?;
    let mut phi = lo.hull(&hi);
    let xe = Enclosure::point(x);
    for k in (0..depth).rev() {
        let nk = Enclosure::point(nu).shift(k as f64);
        phi = nk.scale(2.0).div(&xe)?.add(&phi.recip()?);
    }
    Ok(phi)
}

/// Enclosure of `I_{nu-1}(x)/I_nu(x)` for `nu >= 0`, `x > 0`.
pub fn i_ratio_enclosure(nu: f64, x: f64, cfg: &OracleConfig) -> Result<Enclosure> {
    if !(nu >= 0.0) || !(x > 0.0) || !nu.is_finite() || !x.is_finite() {
        return Err(Error::Domain("bessel I oracle needs nu >= 0, x > 0"));
    }
    let mut depth = cfg.depth.max(1);
    let mut best: Option<Enclosure> = None;
    loop {
        match i_attempt(nu, x, depth) {
            Ok(phi) => {
                if best.is_none_or(|p| phi.width() < p.width()) {
                    best = Some(phi);
                }
                if phi.rel_width() <= cfg.target_rel_width {
                    return Ok(phi);
                }
            }
            Err(Error::DivisionContainsZero) | Err(Error::NegativeSqrt) => {}
            Err(e) => return Err(e),
        }
        if depth >= cfg.max_depth {
            return Err(match best {
                Some(best) => Error::NotConverged {
                    best,
                    rel_width: best.rel_width(),
                },
                None => Error::DivisionContainsZero,
            });
        }
        depth = (depth * 2).min(cfg.max_depth);
    }
}

/// Enclosure of `K_{nu+1}(x)/K_nu(x)` for `nu >= 1/2`, `x > 0`.
///
/// The order is reduced by unit steps to a base in `[1/2, 3/2)`; the base is
/// seeded with the catalogued bound pair (intersected with the other valid
/// catalogued bounds at that order) and propagated upward. At half-integer
/// orders the base collapses to the exact `1 + 1/x`.
pub fn k_ratio_enclosure(nu: f64, x: f64, cfg: &OracleConfig) -> Result<Enclosure> {
    let _ = cfg; // fixed-step method: no depth iteration possible
    if !(nu >= 0.5) || !(x > 0.0) || !nu.is_finite() || !x.is_finite() {
        return Err(Error::Domain("bessel K oracle needs nu >= 1/2, x > 0"));
    }
    let steps = (crate::fx::floor(nu - 0.5) as usize).min(1_000_000);
    let base = nu - steps as f64;
    let xe = Enclosure::point(x);

    let mut phi = if base == 0.5 {
        // K_{3/2}/K_{1/2} = 1 + 1/x exactly.
        Enclosure::point(1.0).add(&Enclosure::point(1.0).div(&xe)?)
    } else {
        let be = Enclosure::point(base);
        // Lower seed (alpha = nu+1/2, beta = nu-1/2), upper seed
        // (alpha = nu+1, beta = nu-1); both valid on the base interval.
        let lo = b_form(&be.shift(0.5), &be.shift(-0.5), x)?;
        let hi = b_form(&be.shift(1.0), &be.shift(-1.0), x)?;
        let mut seed = Enclosure::new(lo.lo(), hi.hi());
        // Tighten with the other catalogued bounds valid at the base order.
        let gap_lo = {
            let rad = be.sq().add(&xe.sq()).sub(&xe);
            be.add(&rad.sqrt()?).div(&xe)?
        };
        let up03 = b_form(&be.shift(0.5), &be.sq().shift(-0.25).sqrt()?, x)?;
        if gap_lo.lo() > seed.lo() {
            seed = Enclosure::new(gap_lo.lo().min(seed.hi()), seed.hi());
        }
        if up03.hi() < seed.hi() {
            seed = Enclosure::new(seed.lo(), up03.hi().max(seed.lo()));
        }
        seed
    };

    for j in 1..=steps {
        let nj = Enclosure::point(base).shift(j as f64);
        phi = nj.scale(2.0).div(&xe)?.add(&phi.recip()?);
    }
    Ok(phi)
}

/// Enclosure of the downshifted K ratio `K_{nu-1}(x)/K_nu(x)`, obtained from
/// the recurrence identity `K_{nu-1}/K_nu = Phi^K_nu - 2 nu / x`.
pub fn k_ratio_down_enclosure(nu: f64, x: f64, cfg: &OracleConfig) -> Result<Enclosure> {
    let phi = k_ratio_enclosure(nu, x, cfg)?;
    Ok(phi.sub(&Enclosure::point(nu).scale(2.0).div(&Enclosure::point(x))?))
}

/// Enclosure of the product `I_nu(x) K_nu(x)` through the Wronskian-type
/// identity `1/(x I_nu K_nu) = I_{nu-1}/I_nu + K_{nu-1}/K_nu`.
pub fn product_enclosure(nu: f64, x: f64, cfg: &OracleConfig) -> Result<Enclosure> {
    let i = i_ratio_enclosure(nu, x, cfg)?;
    let k = k_ratio_down_enclosure(nu, x, cfg)?;
    Enclosure::point(1.0).div(&i.add(&k).scale(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coth(x: f64) -> f64 {
        let e = (2.0 * x).exp();
        (e + 1.0) / (e - 1.0)
    }

    #[test]
    fn half_order_i_ratio_is_coth() {
        // I_{-1/2}/I_{1/2} = coth(x).
        let phi = i_ratio_enclosure(0.5, 2.0, &OracleConfig::default()).unwrap();
        assert!(phi.contains(coth(2.0)), "coth(2) in {phi}");
        assert!(phi.rel_width() <= 1e-12);
    }

    #[test]
    fn k_half_order_exact() {
        let phi = k_ratio_enclosure(0.5, 2.0, &OracleConfig::default()).unwrap();
        assert!(phi.contains(1.5));
        assert!(phi.width() < 1e-14);
    }

    #[test]
    fn k_three_halves_closed_form() {
        // K_{5/2}/K_{3/2}(x) = (1 + 3/x + 3/x^2) / (1 + 1/x); at x = 2: 13/6.
        let phi = k_ratio_enclosure(1.5, 2.0, &OracleConfig::default()).unwrap();
        let expect = (1.0 + 1.5 + 0.75) / 1.5;
        assert!(phi.contains(expect), "{expect} in {phi}");
        assert!(phi.rel_width() < 1e-13);
    }

    #[test]
    fn k_generic_order_contained_by_seed_bounds() {
        let phi = k_ratio_enclosure(1.0, 0.5, &OracleConfig::default()).unwrap();
        // The bound pair at nu = 1 itself must contain the enclosure.
        let lo = (1.5 + (0.25f64 + 0.25).sqrt()) / 0.5;
        let hi = (2.0 + 0.5) / 0.5;
        assert!(
            phi.lo() >= lo - 1e-12 && phi.hi() <= hi + 1e-12,
            "{phi} in [{lo}, {hi}]"
        );
    }

    #[test]
    fn product_half_order_closed_form() {
        // I_{1/2} K_{1/2} = (1 - e^{-2x}) / (2x).
        let x = 1.0f64;
        let p = product_enclosure(0.5, x, &OracleConfig::default()).unwrap();
        let expect = (1.0 - (-2.0 * x).exp()) / (2.0 * x);
        assert!(p.contains(expect), "{expect} in {p}");
    }

    #[test]
    fn i_nesting_with_depth() {
        let shallow = i_attempt(1.0, 10.0, 40).unwrap();
        let deep = i_attempt(1.0, 10.0, 80).unwrap();
        assert!(deep.subset_of(&shallow));
    }
}
