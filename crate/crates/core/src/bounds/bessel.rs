//! Bounds for the modified Bessel ratios `I_{nu-1}(x)/I_nu(x)` and
//! `K_{nu+1}(x)/K_nu(x)`, plus product bounds for `I_nu(x) K_nu(x)`.
//!
//! Four uniparametric families of the algebraic form
//! `B(alpha, beta, gamma, x) = (alpha + sqrt(beta^2 + gamma^2 x^2))/x`
//! cover the best such bounds; their endpoint members are the eight
//! catalogued accuracy-classified rows. On top of those: the gap pair for
//! `x Phi`, a backward-recurrence lift of its lower member, the
//! iterated-Riccati pair, the double-ratio trigonometric bounds, and the
//! product corollary.

use crate::bounds::pcf::acos_guarded;
use crate::error::{Error, Result};
use crate::fx;

fn b_form(alpha: f64, beta: f64, gamma2_x2: f64, x: f64) -> f64 {
    (alpha + fx::sqrt(beta * beta + gamma2_x2)) / x
}

fn check_x(x: f64) -> Result<()> {
    if !(x > 0.0) {
        return Err(Error::Domain("bessel bounds need x > 0"));
    }
    Ok(())
}

/// Lower bound family for `I_{nu-1}/I_nu`:
/// `alpha = nu - 1/2 - lam`, `beta = sqrt(2 lam) + sqrt(nu^2 - (lam-1/2)^2)`;
/// `lam in [0, 1/2]`, `nu >= 1/2 - lam`.
pub fn lower_i_family(lam: f64, nu: f64, x: f64) -> Result<f64> {
    check_x(x)?;
    if !(0.0..=0.5).contains(&lam) || !(nu >= 0.5 - lam) {
        return Err(Error::Domain(
            "lower I family needs lam in [0,1/2], nu >= 1/2 - lam",
        ));
    }
    let rad = nu * nu - (lam - 0.5) * (lam - 0.5);
    let beta = fx::sqrt(2.0 * lam) + fx::sqrt(rad.max(0.0));
    Ok(b_form(nu - 0.5 - lam, beta, x * x, x))
}

/// Upper bound family for `K_{nu+1}/K_nu`:
/// `alpha = nu + 1/2 + lam`, `beta = -sqrt(2 lam) + sqrt(nu^2 - (lam-1/2)^2)`;
/// `lam in [0, 1/2]`, `nu >= 1/2 - lam`.
pub fn upper_k_family(lam: f64, nu: f64, x: f64) -> Result<f64> {
    check_x(x)?;
    if !(0.0..=0.5).contains(&lam) || !(nu >= 0.5 - lam) {
        return Err(Error::Domain(
            "upper K family needs lam in [0,1/2], nu >= 1/2 - lam",
        ));
    }
    let rad = nu * nu - (lam - 0.5) * (lam - 0.5);
    let beta = -fx::sqrt(2.0 * lam) + fx::sqrt(rad.max(0.0));
    Ok(b_form(nu + 0.5 + lam, beta, x * x, x))
}

/// Upper bound family for `I_{nu-1}/I_nu`:
/// `B(nu-lam, nu+lam, sqrt(c), x)` with
/// `c = (nu+lam)/(nu-lam+2 sqrt(2 lam)-1)`; `lam in [1/2, 2]`, `nu >= 0`.
pub fn upper_i_family(lam: f64, nu: f64, x: f64) -> Result<f64> {
    check_x(x)?;
    if !(0.5..=2.0).contains(&lam) || !(nu >= 0.0) {
        return Err(Error::Domain(
            "upper I family needs lam in [1/2,2], nu >= 0",
        ));
    }
    let den = nu - lam + 2.0 * fx::sqrt(2.0 * lam) - 1.0;
    if !(den > 0.0) {
        // positive on the stated domain: 2 sqrt(2 lam) - lam - 1 >= 1/2
        return Err(Error::DenominatorNonpositive);
    }
    let c = (nu + lam) / den;
    Ok(b_form(nu - lam, nu + lam, c * x * x, x))
}

/// Lower bound family for `K_{nu+1}/K_nu`:
/// `B(nu+lam, nu-lam, sqrt(c), x)` with
/// `c = (nu-lam)/(nu+lam-2 sqrt(2 lam)+1)`; `lam in [1/2, 2]`, `nu >= lam`.
/// At `lam = 1/2` the quotient degenerates to `c = 1` for every `nu`.
pub fn lower_k_family(lam: f64, nu: f64, x: f64) -> Result<f64> {
    check_x(x)?;
    if !(0.5..=2.0).contains(&lam) || !(nu >= lam) {
        return Err(Error::Domain(
            "lower K family needs lam in [1/2,2], nu >= lam",
        ));
    }
    let c = if lam == 0.5 {
        1.0
    } else {
        (nu - lam) / (nu + lam - 2.0 * fx::sqrt(2.0 * lam) + 1.0)
    };
    Ok(b_form(nu + lam, nu - lam, c * x * x, x))
}

/// The eight accuracy-classified catalogue rows, named by
/// (ratio, accuracy-at-0, accuracy-at-inf).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogRow {
    I21,
    I03,
    I12,
    I30,
    K21,
    K03,
    K12,
    K30,
}

impl CatalogRow {
    pub const ALL: [CatalogRow; 8] = [
        CatalogRow::I21,
        CatalogRow::I03,
        CatalogRow::I12,
        CatalogRow::I30,
        CatalogRow::K21,
        CatalogRow::K03,
        CatalogRow::K12,
        CatalogRow::K30,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            CatalogRow::I21 => "bessel.i.acc21",
            CatalogRow::I03 => "bessel.i.acc03",
            CatalogRow::I12 => "bessel.i.acc12",
            CatalogRow::I30 => "bessel.i.acc30",
            CatalogRow::K21 => "bessel.k.acc21",
            CatalogRow::K03 => "bessel.k.acc03",
            CatalogRow::K12 => "bessel.k.acc12",
            CatalogRow::K30 => "bessel.k.acc30",
        }
    }

    pub fn is_i_ratio(&self) -> bool {
        matches!(
            self,
            CatalogRow::I21 | CatalogRow::I03 | CatalogRow::I12 | CatalogRow::I30
        )
    }

    pub fn is_lower(&self) -> bool {
        matches!(
            self,
            CatalogRow::I21 | CatalogRow::I03 | CatalogRow::K12 | CatalogRow::K30
        )
    }

    /// Accuracy tag (terms at 0, terms at +inf).
    pub fn accuracy(&self) -> (i8, i8) {
        match self {
            CatalogRow::I21 | CatalogRow::K21 => (2, 1),
            CatalogRow::I03 | CatalogRow::K03 => (0, 3),
            CatalogRow::I12 | CatalogRow::K12 => (1, 2),
            CatalogRow::I30 | CatalogRow::K30 => (3, 0),
        }
    }

    /// The family member this row coincides with (family, lambda).
    pub fn family_lambda(&self) -> f64 {
        match self {
            CatalogRow::I21 | CatalogRow::K21 | CatalogRow::I12 | CatalogRow::K12 => 0.5,
            CatalogRow::I03 | CatalogRow::K03 => 0.0,
            CatalogRow::I30 | CatalogRow::K30 => 2.0,
        }
    }

    pub fn nu_valid(&self, nu: f64) -> bool {
        match self {
            CatalogRow::I21 | CatalogRow::I12 | CatalogRow::I30 => nu >= 0.0,
            CatalogRow::I03 => nu >= 0.5,
            CatalogRow::K21 => true,
            CatalogRow::K03 | CatalogRow::K12 => nu > 0.5,
            CatalogRow::K30 => nu >= 2.0,
        }
    }
}

/// Catalogue row evaluated through its parametric family member.
pub fn catalog_bound(row: CatalogRow, nu: f64, x: f64) -> Result<f64> {
    check_x(x)?;
    if !row.nu_valid(nu) {
        return Err(Error::Domain("nu outside this catalogue row's range"));
    }
    let lam = row.family_lambda();
    match row {
        CatalogRow::I21 | CatalogRow::I03 => lower_i_family(lam, nu, x),
        CatalogRow::I12 | CatalogRow::I30 => upper_i_family(lam, nu, x),
        // The K21 row is stated for all real nu while the family theorem
        // asks nu >= 1/2 - lam; the row formula is the same expression.
        CatalogRow::K21 => Ok(b_form(nu + 1.0, nu - 1.0, x * x, x)),
        CatalogRow::K03 => upper_k_family(lam, nu, x),
        CatalogRow::K12 | CatalogRow::K30 => lower_k_family(lam, nu, x),
    }
}

/// Lower bound of accuracy (0,2) for `I_{nu-1}/I_nu`, the positive root of
/// the ratio's own Riccati nullcline:
/// `((nu-1/2) + sqrt((nu-1/2)^2 + x^2))/x`; `nu >= 1/2`.
///
/// Also the exact image of the contiguous-transport upper bound `eta` under
/// the Kummer-to-Bessel specialization, which the cross-family identity
/// check exploits.
pub fn lower_i_02(nu: f64, x: f64) -> Result<f64> {
    check_x(x)?;
    if !(nu >= 0.5) {
        return Err(Error::Domain("lower_i_02 needs nu >= 1/2"));
    }
    let a = nu - 0.5;
    Ok(b_form(a, a, x * x, x))
}

/// Upper bound of accuracy (1,1) for `I_{nu-1}/I_nu`:
/// `(nu + sqrt(x^2 + nu^2 + x))/x`, the specialization of the lifted
/// contiguous-transport lower bound; `nu >= 1/2`.
pub fn upper_i_11(nu: f64, x: f64) -> Result<f64> {
    check_x(x)?;
    if !(nu >= 0.5) {
        return Err(Error::Domain("upper_i_11 needs nu >= 1/2"));
    }
    Ok((nu + fx::sqrt(x * x + nu * nu + x)) / x)
}

/// Bounds on `x Phi` for both flavors (`x I_{nu-1}/I_nu` and
/// `x K_{nu+1}/K_nu`): `nu + sqrt(nu^2 + x(x-1)) < x Phi <= nu +
/// sqrt(nu^2 + x(x+1))`; `nu >= 1/2`, with the upper bound attained by the
/// K flavor exactly at `nu = 1/2`.
pub fn gap_bounds(nu: f64, x: f64) -> Result<(f64, f64)> {
    check_x(x)?;
    if !(nu >= 0.5) {
        return Err(Error::Domain("gap bounds need nu >= 1/2"));
    }
    let inner = nu * nu + x * (x - 1.0);
    if inner < 0.0 {
        // nu^2 + x(x-1) >= nu^2 - 1/4 >= 0 on the stated domain.
        return Err(Error::RadicandNegative);
    }
    Ok((nu + fx::sqrt(inner), nu + fx::sqrt(nu * nu + x * (x + 1.0))))
}

/// Upper bound of accuracy (2,3) for `I_{nu-1}/I_nu`, the backward lift of
/// the gap lower bound: `2 nu/x + x/(nu+1+sqrt((nu+1)^2+x(x-1)))`; `nu > 0`.
pub fn i_bound_23(nu: f64, x: f64) -> Result<f64> {
    check_x(x)?;
    if !(nu > 0.0) {
        return Err(Error::Domain("i_bound_23 needs nu > 0"));
    }
    let m = nu + 1.0;
    Ok(2.0 * nu / x + x / (m + fx::sqrt(m * m + x * (x - 1.0))))
}

/// Which member of the iterated-Riccati pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IterAlpha {
    /// Lower bound, accuracy (1,3); `nu >= 1/2`.
    Zero,
    /// Upper bound, accuracy (1,2); `nu >= 0`.
    Two,
}

/// Iterated-Riccati bound `B_alpha = (delta + sqrt(delta^2 + x^2))/x` with
/// `delta = (nu-1/2) + lam/(2 sqrt(lam^2+x^2))`, `lam = nu + (alpha-1)/2`.
pub fn iterated_riccati_bound(alpha: IterAlpha, nu: f64, x: f64) -> Result<f64> {
    check_x(x)?;
    let lam = match alpha {
        IterAlpha::Zero => {
            if !(nu >= 0.5) {
                return Err(Error::Domain("B_0 needs nu >= 1/2"));
            }
            nu - 0.5
        }
        IterAlpha::Two => {
            if !(nu >= 0.0) {
                return Err(Error::Domain("B_2 needs nu >= 0"));
            }
            nu + 0.5
        }
    };
    let delta = (nu - 0.5) + lam / (2.0 * fx::sqrt(lam * lam + x * x));
    Ok((delta + fx::sqrt(delta * delta + x * x)) / x)
}

fn trig_parts(nu: f64, x: f64) -> Result<(f64, f64)> {
    let g = fx::sqrt(3.0 * (nu * nu + x * x) + 1.0);
    let h = 9.0 * nu * nu - 4.5 * x * x - 1.0;
    let phi = acos_guarded(h / (g * g * g))? / 3.0;
    Ok((g, phi))
}

/// Trigonometric upper bound of accuracy (3,2) for `I_{nu-1}/I_nu`:
/// `(2g/(3x)) cos(arccos(h/g^3)/3) + (nu-1/3)/x`; `nu >= 0`.
pub fn trig_upper_i(nu: f64, x: f64) -> Result<f64> {
    check_x(x)?;
    if !(nu >= 0.0) {
        return Err(Error::Domain("trig_upper_i needs nu >= 0"));
    }
    let (g, phi) = trig_parts(nu, x)?;
    Ok(2.0 * g / (3.0 * x) * fx::cos(phi) + (nu - 1.0 / 3.0) / x)
}

/// Trigonometric upper bound of the downshifted K ratio `K_{nu-1}/K_nu`:
/// `(2g/(3x)) cos(arccos(h/g^3)/3 - pi/3) - (nu-1/3)/x`; `nu >= 0`.
/// Accuracy (2,2) for `nu > 1`.
pub fn trig_upper_k_down(nu: f64, x: f64) -> Result<f64> {
    check_x(x)?;
    if !(nu >= 0.0) {
        return Err(Error::Domain("trig_upper_k_down needs nu >= 0"));
    }
    let (g, phi) = trig_parts(nu, x)?;
    Ok(2.0 * g / (3.0 * x) * fx::cos(phi - core::f64::consts::FRAC_PI_3) - (nu - 1.0 / 3.0) / x)
}

/// Two lower bounds for the product `I_nu(x) K_nu(x)`: the trigonometric
/// one and its weaker algebraic consequence `1/(2 sqrt(x^2+nu^2+1/3))`.
pub fn product_bounds(nu: f64, x: f64) -> Result<(f64, f64)> {
    check_x(x)?;
    if !(nu >= 0.0) {
        return Err(Error::Domain("product bounds need nu >= 0"));
    }
    let (g, phi) = trig_parts(nu, x)?;
    let trig = fx::sqrt(3.0) / (2.0 * g * fx::sin(phi + core::f64::consts::FRAC_PI_3));
    let alg = 0.5 / fx::sqrt(x * x + nu * nu + 1.0 / 3.0);
    Ok((trig, alg))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_members_match_catalog_rows() {
        for row in CatalogRow::ALL {
            let nu = if row.nu_valid(2.5) { 2.5 } else { continue };
            for &x in &[0.3, 1.0, 7.0, 40.0] {
                let via_row = catalog_bound(row, nu, x).unwrap();
                let lam = row.family_lambda();
                let via_family = match row {
                    CatalogRow::I21 | CatalogRow::I03 => lower_i_family(lam, nu, x),
                    CatalogRow::I12 | CatalogRow::I30 => upper_i_family(lam, nu, x),
                    CatalogRow::K21 | CatalogRow::K03 => upper_k_family(lam, nu, x),
                    CatalogRow::K12 | CatalogRow::K30 => lower_k_family(lam, nu, x),
                }
                .unwrap();
                assert!(
                    (via_row - via_family).abs() <= 1e-13 * via_row.abs(),
                    "{} at nu={nu} x={x}: {via_row} vs {via_family}",
                    row.id()
                );
            }
        }
    }

    #[test]
    fn spot_values() {
        assert!((lower_i_family(0.5, 1.0, 1.0).unwrap() - 5f64.sqrt()).abs() < 1e-14);
        let v = lower_i_family(0.0, 1.0, 2.0).unwrap();
        assert!((v - (0.5 + 4.75f64.sqrt()) / 2.0).abs() < 1e-14);
        assert!((upper_k_family(0.5, 1.0, 1.0).unwrap() - 3.0).abs() < 1e-14);
        let v = upper_k_family(0.0, 1.0, 1.0).unwrap();
        assert!((v - (1.5 + 1.75f64.sqrt())).abs() < 1e-14);
        assert!((lower_k_family(0.5, 1.0, 1.0).unwrap() - (1.5 + 1.25f64.sqrt())).abs() < 1e-14);
        let v = lower_k_family(2.0, 3.0, 2.0).unwrap();
        assert!((v - (5.0 + 3f64.sqrt()) / 2.0).abs() < 1e-14, "{v}");
        assert!((i_bound_23(1.0, 1.0).unwrap() - 2.25).abs() < 1e-14);
        let (lo, hi) = gap_bounds(1.0, 1.0).unwrap();
        assert!((lo - 2.0).abs() < 1e-14 && (hi - (1.0 + 3f64.sqrt())).abs() < 1e-14);
    }

    #[test]
    fn upper_i_collapses_at_half() {
        // lam = 1/2 gives c = 1, so the bound is (nu-1/2+sqrt((nu+1/2)^2+x^2))/x.
        for &nu in &[0.0, 1.0, 4.5] {
            for &x in &[0.5, 3.0] {
                let v = upper_i_family(0.5, nu, x).unwrap();
                let direct = (nu - 0.5 + ((nu + 0.5) * (nu + 0.5) + x * x).sqrt()) / x;
                assert!((v - direct).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn upper_i_at_two_matches_stated_c() {
        // c(2, nu) = (nu+2)/(nu+1).
        let v = upper_i_family(2.0, 1.0, 3.0).unwrap();
        let c = 3.0 / 2.0;
        let direct = (1.0 - 2.0 + (9.0 + c * 9.0f64).sqrt()) / 3.0;
        assert!((v - direct).abs() < 1e-14);
    }

    #[test]
    fn iterated_riccati_collapses_at_half() {
        // alpha = 0, nu = 1/2: lam = 0, delta = 0, bound = 1.
        for &x in &[0.1, 1.0, 30.0] {
            assert!((iterated_riccati_bound(IterAlpha::Zero, 0.5, x).unwrap() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn iterated_riccati_spot_value() {
        let v = iterated_riccati_bound(IterAlpha::Two, 1.0, 1.0).unwrap();
        let delta = 0.5 + 1.5 / (2.0 * 3.25f64.sqrt());
        let expect = delta + (delta * delta + 1.0).sqrt();
        assert!((v - expect).abs() < 1e-14);
        assert!(v > 2.240_068, "upper bound above the true ratio at (1,1)");
    }

    #[test]
    fn gap_upper_attained_at_half_for_k() {
        // x Phi^K at nu = 1/2 is exactly x + 1.
        for &x in &[0.2, 1.0, 9.0] {
            let (_, hi) = gap_bounds(0.5, x).unwrap();
            assert!((hi - (x + 1.0)).abs() <= 1e-13 * (x + 1.0));
        }
    }

    #[test]
    fn product_chain_order() {
        for &nu in &[0.0, 0.5, 2.0, 10.0] {
            for &x in &[0.1, 1.0, 20.0] {
                let (trig, alg) = product_bounds(nu, x).unwrap();
                assert!(trig >= alg - 1e-15, "nu={nu} x={x}: {trig} vs {alg}");
            }
        }
    }

    #[test]
    fn domain_rejections() {
        assert!(lower_i_family(0.6, 1.0, 1.0).is_err());
        assert!(lower_i_family(0.3, 0.1, 1.0).is_err());
        assert!(lower_k_family(1.0, 0.7, 1.0).is_err());
        assert!(i_bound_23(0.0, 1.0).is_err());
        assert!(catalog_bound(CatalogRow::K30, 1.5, 1.0).is_err());
        assert!(gap_bounds(0.4, 1.0).is_err());
    }
}
