//! Grid verification of every catalogued inequality against the enclosure
//! oracles.
//!
//! Each catalogued bound carries its claimed side, a validity predicate on
//! the family parameters, and a default verification grid. A point counts
//! as a violation only when the claimed inequality fails beyond the far
//! edge of the oracle enclosure plus a relative slack of 1e-11 (absorbing
//! formula rounding); the reported margin is measured against the near
//! edge, so genuinely sharp bounds show small but nonnegative margins.

use crate::bounds::{bessel, confluent, gauss as gauss_bounds, pcf};
use crate::enclosure::Enclosure;
use crate::error::{Error, Result};
use crate::oracle::{self, OracleConfig};
use crate::types::{
    sample_axis, Accuracy, Family, Grid, PointRecord, Sampling, Side, VerificationReport,
};
use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

/// Relative slack absorbing scalar formula rounding in violation decisions.
pub const MARGIN_SLACK: f64 = 1e-11;

/// The quantity a catalogued bound constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Quantity {
    /// `U(n-1,x)/U(n,x)`, params `[n]`.
    PcfRatio,
    /// `I_{nu-1}(x)/I_nu(x)`, params `[nu]`.
    BesselIRatio,
    /// `K_{nu+1}(x)/K_nu(x)`, params `[nu]`.
    BesselKRatio,
    /// `K_{nu-1}(x)/K_nu(x)`, params `[nu]`.
    BesselKRatioDown,
    /// `x I_{nu-1}(x)/I_nu(x)`, params `[nu]`.
    BesselXPhiI,
    /// `x K_{nu+1}(x)/K_nu(x)`, params `[nu]`.
    BesselXPhiK,
    /// `I_nu(x) K_nu(x)`, params `[nu]`.
    BesselProduct,
    /// `m(a+1,b+1,x)/m(a,b,x)`, params `[a, b]`.
    KummerRatio,
    /// `m(a+1,b,x)/m(a,b,x)`, params `[a, b]`.
    KummerA1b,
    /// `m(a+1,b+2,x)/m(a,b,x)`, params `[a, b]`.
    KummerBigH,
    /// `y(a+1,b+1,c+1,x)/y(a,b,c,x)`, params `[a, b, c]`.
    GaussRatio,
    /// `2c F(a,b;c;x)/F(a+1,b+1;c+1;x) = 2ab/h`, params `[a, b, c]`.
    GaussBigH,
}

/// Memoizing front-end over the oracles, keyed by exact argument bits.
pub struct OracleCache {
    cfg: OracleConfig,
    map: BTreeMap<(Quantity, [u64; 3], u64), Enclosure>,
}

fn key_params(params: &[f64]) -> [u64; 3] {
    let mut k = [0u64; 3];
    for (i, &p) in params.iter().take(3).enumerate() {
        k[i] = p.to_bits();
    }
    k
}

impl OracleCache {
    pub fn new(cfg: OracleConfig) -> Self {
        OracleCache {
            cfg,
            map: BTreeMap::new(),
        }
    }

    pub fn config(&self) -> &OracleConfig {
        &self.cfg
    }

    /// Batched enclosure lookup for one quantity at fixed parameters.
    pub fn get(&mut self, q: Quantity, params: &[f64], xs: &[f64]) -> Result<Vec<Enclosure>> {
        let pk = key_params(params);
        let missing: Vec<f64> = xs
            .iter()
            .copied()
            .filter(|x| !self.map.contains_key(&(q, pk, x.to_bits())))
            .collect();
        if !missing.is_empty() {
            let fresh = self.compute(q, params, &missing)?;
            for (x, enc) in missing.iter().zip(fresh) {
                self.map.insert((q, pk, x.to_bits()), enc);
            }
        }
        Ok(xs.iter().map(|x| self.map[&(q, pk, x.to_bits())]).collect())
    }

    fn compute(&self, q: Quantity, p: &[f64], xs: &[f64]) -> Result<Vec<Enclosure>> {
        let cfg = &self.cfg;
        match q {
            Quantity::PcfRatio => oracle::pcf::enclose_batch(p[0], xs, cfg)
                .into_iter()
                .collect(),
            Quantity::BesselIRatio => xs
                .iter()
                .map(|&x| oracle::bessel::i_ratio_enclosure(p[0], x, cfg))
                .collect(),
            Quantity::BesselKRatio => xs
                .iter()
                .map(|&x| oracle::bessel::k_ratio_enclosure(p[0], x, cfg))
                .collect(),
            Quantity::BesselKRatioDown => xs
                .iter()
                .map(|&x| oracle::bessel::k_ratio_down_enclosure(p[0], x, cfg))
                .collect(),
            Quantity::BesselXPhiI => xs
                .iter()
                .map(|&x| {
                    oracle::bessel::i_ratio_enclosure(p[0], x, cfg)
                        .map(|e| e.mul(&Enclosure::point(x)))
                })
                .collect(),
            Quantity::BesselXPhiK => xs
                .iter()
                .map(|&x| {
                    oracle::bessel::k_ratio_enclosure(p[0], x, cfg)
                        .map(|e| e.mul(&Enclosure::point(x)))
                })
                .collect(),
            Quantity::BesselProduct => xs
                .iter()
                .map(|&x| oracle::bessel::product_enclosure(p[0], x, cfg))
                .collect(),
            Quantity::KummerRatio => xs
                .iter()
                .map(|&x| oracle::kummer::ratio_enclosure(p[0], p[1], x, cfg))
                .collect(),
            Quantity::KummerA1b => xs
                .iter()
                .map(|&x| oracle::kummer::a1b_enclosure(p[0], p[1], x, cfg))
                .collect(),
            Quantity::KummerBigH => xs
                .iter()
                .map(|&x| oracle::kummer::a1b2_enclosure(p[0], p[1], x, cfg))
                .collect(),
            Quantity::GaussRatio => xs
                .iter()
                .map(|&x| oracle::gauss::ratio_enclosure(p[0], p[1], p[2], x, cfg))
                .collect(),
            Quantity::GaussBigH => xs
                .iter()
                .map(|&x| {
                    let h = oracle::gauss::ratio_enclosure(p[0], p[1], p[2], x, cfg)?;
                    Enclosure::point(2.0 * p[0] * p[1]).div(&h)
                })
                .collect(),
        }
    }
}

/// One catalogued bound: identity, claimed side, validity, evaluator, grid.
pub struct CatalogBound {
    pub id: String,
    pub family: Family,
    pub quantity: Quantity,
    pub accuracy: Accuracy,
    pub provenance: &'static str,
    /// Claimed side as a function of the parameters; `None` skips the
    /// tuple (degenerate or out of the claim's range).
    pub side: Box<dyn Fn(&[f64]) -> Option<Side>>,
    pub validity: Box<dyn Fn(&[f64]) -> bool>,
    pub eval: Box<dyn Fn(&[f64], f64) -> Result<f64>>,
    pub grid: Grid,
}

// --- default grids ---

pub fn pcf_default_grid() -> Grid {
    Grid::new(
        [0.51, 0.6, 1.0, 2.0, 5.0, 10.0, 25.0]
            .iter()
            .map(|&n| alloc::vec![n])
            .collect(),
        sample_axis(-40.0, 40.0, 400, Sampling::Mixed),
    )
    .unwrap()
}

pub fn bessel_nu_grid() -> Vec<f64> {
    alloc::vec![0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.5, 5.0, 10.0, 25.0]
}

pub fn bessel_default_xs() -> Vec<f64> {
    sample_axis(0.02, 50.0, 300, Sampling::Log)
}

fn bessel_grid(nu_filter: impl Fn(f64) -> bool) -> Grid {
    let params: Vec<Vec<f64>> = bessel_nu_grid()
        .into_iter()
        .filter(|&nu| nu_filter(nu))
        .map(|nu| alloc::vec![nu])
        .collect();
    Grid::new(params, bessel_default_xs()).unwrap()
}

pub fn kummer_default_grid() -> Grid {
    let vals = [0.3, 1.0, 2.0, 5.0];
    let mut params = Vec::new();
    for &a in &vals {
        for &b in &vals {
            params.push(alloc::vec![a, b]);
        }
    }
    Grid::new(params, sample_axis(0.05, 30.0, 200, Sampling::Log)).unwrap()
}

fn kummer_b03_grid() -> Grid {
    let vals = [1.1, 2.0, 3.0, 5.0];
    let mut params = Vec::new();
    for &a in &vals {
        for &b in &vals {
            params.push(alloc::vec![a, b]);
        }
    }
    Grid::new(params, sample_axis(0.05, 30.0, 200, Sampling::Log)).unwrap()
}

pub fn gauss_default_grid() -> Grid {
    let vals = [0.5, 1.0, 2.0, 5.0];
    let mut params = Vec::new();
    for &a in &vals {
        for &b in &vals {
            for &c in &vals {
                params.push(alloc::vec![a, b, c]);
            }
        }
    }
    Grid::new(params, sample_axis(0.01, 0.99, 99, Sampling::Linear)).unwrap()
}

// --- catalogue ---

fn fixed_side(side: Side) -> Box<dyn Fn(&[f64]) -> Option<Side>> {
    Box::new(move |_| Some(side))
}

/// Side keyed to sign(b - a): `for_b_gt_a` when `b > a`, flipped when
/// `b < a`, skipped at `a = b`.
fn kummer_side(for_b_gt_a: Side) -> Box<dyn Fn(&[f64]) -> Option<Side>> {
    Box::new(move |p| {
        if p[1] > p[0] {
            Some(for_b_gt_a)
        } else if p[1] < p[0] {
            Some(match for_b_gt_a {
                Side::Lower => Side::Upper,
                Side::Upper => Side::Lower,
            })
        } else {
            None
        }
    })
}

/// The complete bound catalogue across all families.
pub fn catalog() -> Vec<CatalogBound> {
    let mut v: Vec<CatalogBound> = Vec::new();

    // --- parabolic cylinder ---
    let pcf_entry = |id: &str,
                     side: Side,
                     acc: Accuracy,
                     prov: &'static str,
                     valid: fn(&[f64]) -> bool,
                     eval: fn(&[f64], f64) -> Result<f64>| CatalogBound {
        id: String::from(id),
        family: Family::PcfU,
        quantity: Quantity::PcfRatio,
        accuracy: acc,
        provenance: prov,
        side: fixed_side(side),
        validity: Box::new(valid),
        eval: Box::new(eval),
        grid: pcf_default_grid(),
    };
    v.push(pcf_entry(
        "pcf.b21",
        Side::Lower,
        Accuracy::Known(2, 1),
        "Riccati nullcline root",
        |p| p[0] > 0.5,
        |p, x| pcf::b21(p[0], x),
    ));
    v.push(pcf_entry(
        "pcf.b12",
        Side::Upper,
        Accuracy::Known(1, 2),
        "backward recurrence lift of the nullcline root",
        |p| p[0] > -0.5,
        |p, x| pcf::b12(p[0], x),
    ));
    v.push(pcf_entry(
        "pcf.b30",
        Side::Upper,
        Accuracy::Known(3, 0),
        "forward recurrence lift of the nullcline root",
        |p| p[0] > 1.5,
        |p, x| pcf::b30(p[0], x),
    ));
    v.push(pcf_entry(
        "pcf.b03",
        Side::Lower,
        Accuracy::Known(0, 3),
        "three expansion terms matched at +inf, residual-sign certified",
        |p| p[0] > -0.5,
        |p, x| pcf::b03(p[0], x),
    ));
    v.push(pcf_entry(
        "pcf.b40",
        Side::Lower,
        Accuracy::Known(4, 0),
        "double forward recurrence lift",
        |p| p[0] > 2.5,
        |p, x| pcf::b40(p[0], x),
    ));
    v.push(pcf_entry(
        "pcf.trig33",
        Side::Lower,
        Accuracy::Known(3, 3),
        "double-ratio cubic nullcline, trigonometric root",
        |p| p[0] > 0.5,
        |p, x| pcf::trig33(p[0], x),
    ));
    v.push(pcf_entry(
        "pcf.alg33",
        Side::Lower,
        Accuracy::Known(3, 3),
        "algebraic companion of the cubic-root bound",
        |p| p[0] > 0.5,
        |p, x| pcf::alg33(p[0], x),
    ));
    v.push(pcf_entry(
        "pcf.b24",
        Side::Upper,
        Accuracy::Known(2, 4),
        "backward lift of the trigonometric bound",
        |p| p[0] > -0.5,
        |p, x| pcf::b24(p[0], x),
    ));
    v.push(pcf_entry(
        "pcf.b42",
        Side::Upper,
        Accuracy::Known(4, 2),
        "forward lift of the trigonometric bound",
        |p| p[0] > 1.5,
        |p, x| pcf::b42(p[0], x),
    ));

    // --- Bessel parametric families, 11 members each ---
    for i in 0..11 {
        let lam = 0.05 * i as f64;
        v.push(CatalogBound {
            id: format!("bessel.i.lower_family@{lam:.2}"),
            family: Family::BesselI,
            quantity: Quantity::BesselIRatio,
            accuracy: Accuracy::Unknown,
            provenance: "uniparametric lower family for the I ratio",
            side: fixed_side(Side::Lower),
            validity: Box::new(move |p| p[0] >= 0.5 - lam),
            eval: Box::new(move |p, x| bessel::lower_i_family(lam, p[0], x)),
            grid: bessel_grid(move |nu| nu >= 0.5 - lam),
        });
        v.push(CatalogBound {
            id: format!("bessel.k.upper_family@{lam:.2}"),
            family: Family::BesselK,
            quantity: Quantity::BesselKRatio,
            accuracy: Accuracy::Unknown,
            provenance: "uniparametric upper family for the K ratio",
            side: fixed_side(Side::Upper),
            validity: Box::new(move |p| p[0] >= 0.5 - lam && p[0] >= 0.5),
            eval: Box::new(move |p, x| bessel::upper_k_family(lam, p[0], x)),
            grid: bessel_grid(move |nu| nu >= 0.5),
        });
    }
    for i in 0..11 {
        let lam = 0.5 + 0.15 * i as f64;
        v.push(CatalogBound {
            id: format!("bessel.i.upper_family@{lam:.2}"),
            family: Family::BesselI,
            quantity: Quantity::BesselIRatio,
            accuracy: Accuracy::Unknown,
            provenance: "uniparametric upper family for the I ratio",
            side: fixed_side(Side::Upper),
            validity: Box::new(|p| p[0] >= 0.0),
            eval: Box::new(move |p, x| bessel::upper_i_family(lam, p[0], x)),
            grid: bessel_grid(|nu| nu >= 0.0),
        });
        v.push(CatalogBound {
            id: format!("bessel.k.lower_family@{lam:.2}"),
            family: Family::BesselK,
            quantity: Quantity::BesselKRatio,
            accuracy: Accuracy::Unknown,
            provenance: "uniparametric lower family for the K ratio",
            side: fixed_side(Side::Lower),
            validity: Box::new(move |p| p[0] >= lam),
            eval: Box::new(move |p, x| bessel::lower_k_family(lam, p[0], x)),
            grid: bessel_grid(move |nu| nu >= lam && nu >= 0.5),
        });
    }

    // --- Bessel catalogue rows ---
    for row in bessel::CatalogRow::ALL {
        let (n0, mi) = row.accuracy();
        let is_i = row.is_i_ratio();
        v.push(CatalogBound {
            id: String::from(row.id()),
            family: if is_i {
                Family::BesselI
            } else {
                Family::BesselK
            },
            quantity: if is_i {
                Quantity::BesselIRatio
            } else {
                Quantity::BesselKRatio
            },
            accuracy: Accuracy::Known(n0, mi),
            provenance: "best family member at this accuracy split",
            side: fixed_side(if row.is_lower() {
                Side::Lower
            } else {
                Side::Upper
            }),
            validity: Box::new(move |p| row.nu_valid(p[0]) && (is_i || p[0] >= 0.5)),
            eval: Box::new(move |p, x| bessel::catalog_bound(row, p[0], x)),
            grid: bessel_grid(move |nu| row.nu_valid(nu) && (is_i || nu >= 0.5)),
        });
    }

    // --- gap pair on x Phi, both flavors ---
    for (flavor, q) in [("i", Quantity::BesselXPhiI), ("k", Quantity::BesselXPhiK)] {
        v.push(CatalogBound {
            id: format!("bessel.gap.lower.{flavor}"),
            family: if q == Quantity::BesselXPhiI {
                Family::BesselI
            } else {
                Family::BesselK
            },
            quantity: q,
            accuracy: Accuracy::Unknown,
            provenance: "residual-sign certified gap bound on x Phi",
            side: fixed_side(Side::Lower),
            validity: Box::new(|p| p[0] >= 0.5),
            eval: Box::new(|p, x| bessel::gap_bounds(p[0], x).map(|b| b.0)),
            grid: bessel_grid(|nu| nu >= 0.5),
        });
        v.push(CatalogBound {
            id: format!("bessel.gap.upper.{flavor}"),
            family: if q == Quantity::BesselXPhiI {
                Family::BesselI
            } else {
                Family::BesselK
            },
            quantity: q,
            accuracy: Accuracy::Known(1, 3),
            provenance: "residual-sign certified gap bound on x Phi",
            side: fixed_side(Side::Upper),
            validity: Box::new(|p| p[0] >= 0.5),
            eval: Box::new(|p, x| bessel::gap_bounds(p[0], x).map(|b| b.1)),
            grid: bessel_grid(|nu| nu >= 0.5),
        });
    }

    // --- remaining Bessel bounds ---
    v.push(CatalogBound {
        id: String::from("bessel.i.b23"),
        family: Family::BesselI,
        quantity: Quantity::BesselIRatio,
        accuracy: Accuracy::Known(2, 3),
        provenance: "backward lift of the gap lower bound",
        side: fixed_side(Side::Upper),
        validity: Box::new(|p| p[0] > 0.0),
        eval: Box::new(|p, x| bessel::i_bound_23(p[0], x)),
        grid: bessel_grid(|nu| nu > 0.0),
    });
    v.push(CatalogBound {
        id: String::from("bessel.i.iter0"),
        family: Family::BesselI,
        quantity: Quantity::BesselIRatio,
        accuracy: Accuracy::Known(1, 3),
        provenance: "iterated Riccati nullcline, lower member",
        side: fixed_side(Side::Lower),
        validity: Box::new(|p| p[0] >= 0.5),
        eval: Box::new(|p, x| bessel::iterated_riccati_bound(bessel::IterAlpha::Zero, p[0], x)),
        grid: bessel_grid(|nu| nu >= 0.5),
    });
    v.push(CatalogBound {
        id: String::from("bessel.i.iter2"),
        family: Family::BesselI,
        quantity: Quantity::BesselIRatio,
        accuracy: Accuracy::Known(1, 2),
        provenance: "iterated Riccati nullcline, upper member",
        side: fixed_side(Side::Upper),
        validity: Box::new(|p| p[0] >= 0.0),
        eval: Box::new(|p, x| bessel::iterated_riccati_bound(bessel::IterAlpha::Two, p[0], x)),
        grid: bessel_grid(|nu| nu >= 0.0),
    });
    v.push(CatalogBound {
        id: String::from("bessel.i.trig32"),
        family: Family::BesselI,
        quantity: Quantity::BesselIRatio,
        accuracy: Accuracy::Known(3, 2),
        provenance: "double-ratio cubic nullcline, largest root",
        side: fixed_side(Side::Upper),
        validity: Box::new(|p| p[0] >= 0.0),
        eval: Box::new(|p, x| bessel::trig_upper_i(p[0], x)),
        grid: bessel_grid(|nu| nu >= 0.0),
    });
    v.push(CatalogBound {
        id: String::from("bessel.k.trig22"),
        family: Family::BesselK,
        quantity: Quantity::BesselKRatioDown,
        accuracy: Accuracy::Known(2, 2),
        provenance: "double-ratio cubic nullcline, downshifted K ratio",
        side: fixed_side(Side::Upper),
        validity: Box::new(|p| p[0] >= 0.5),
        eval: Box::new(|p, x| bessel::trig_upper_k_down(p[0], x)),
        grid: bessel_grid(|nu| nu >= 0.5),
    });
    v.push(CatalogBound {
        id: String::from("bessel.i.acc02"),
        family: Family::BesselI,
        quantity: Quantity::BesselIRatio,
        accuracy: Accuracy::Known(0, 2),
        provenance: "Riccati nullcline of the I ratio itself",
        side: fixed_side(Side::Lower),
        validity: Box::new(|p| p[0] >= 0.5),
        eval: Box::new(|p, x| bessel::lower_i_02(p[0], x)),
        grid: bessel_grid(|nu| nu >= 0.5),
    });
    v.push(CatalogBound {
        id: String::from("bessel.i.acc11"),
        family: Family::BesselI,
        quantity: Quantity::BesselIRatio,
        accuracy: Accuracy::Known(1, 1),
        provenance: "specialized contiguous-transport bound",
        side: fixed_side(Side::Upper),
        validity: Box::new(|p| p[0] >= 0.5),
        eval: Box::new(|p, x| bessel::upper_i_11(p[0], x)),
        grid: bessel_grid(|nu| nu >= 0.5),
    });
    v.push(CatalogBound {
        id: String::from("bessel.prod.trig"),
        family: Family::BesselI,
        quantity: Quantity::BesselProduct,
        accuracy: Accuracy::Unknown,
        provenance: "product bound from the cubic-root pair",
        side: fixed_side(Side::Lower),
        validity: Box::new(|p| p[0] >= 0.5),
        eval: Box::new(|p, x| bessel::product_bounds(p[0], x).map(|b| b.0)),
        grid: bessel_grid(|nu| nu >= 0.5),
    });
    v.push(CatalogBound {
        id: String::from("bessel.prod.alg"),
        family: Family::BesselI,
        quantity: Quantity::BesselProduct,
        accuracy: Accuracy::Unknown,
        provenance: "algebraic consequence of the product bound",
        side: fixed_side(Side::Lower),
        validity: Box::new(|p| p[0] >= 0.5),
        eval: Box::new(|p, x| bessel::product_bounds(p[0], x).map(|b| b.1)),
        grid: bessel_grid(|nu| nu >= 0.5),
    });

    // --- Kummer ---
    v.push(CatalogBound {
        id: String::from("kummer.lambda"),
        family: Family::Kummer,
        quantity: Quantity::KummerRatio,
        accuracy: Accuracy::Known(1, 2),
        provenance: "Riccati nullcline root",
        side: kummer_side(Side::Upper),
        validity: Box::new(|p| p[0] > 0.0 && p[1] > 0.0),
        eval: Box::new(|p, x| confluent::lambda(p[0], p[1], x)),
        grid: kummer_default_grid(),
    });
    v.push(CatalogBound {
        id: String::from("kummer.lambda_tilde"),
        family: Family::Kummer,
        quantity: Quantity::KummerRatio,
        accuracy: Accuracy::Known(2, 1),
        provenance: "backward recurrence lift of the nullcline root",
        side: kummer_side(Side::Lower),
        validity: Box::new(|p| p[0] > 0.0 && p[1] > 0.0),
        eval: Box::new(|p, x| confluent::lambda_tilde(p[0], p[1], x)),
        grid: kummer_default_grid(),
    });
    v.push(CatalogBound {
        id: String::from("kummer.b03"),
        family: Family::Kummer,
        quantity: Quantity::KummerRatio,
        accuracy: Accuracy::Known(0, 3),
        provenance: "shifted nullcline root, residual-sign certified",
        side: kummer_side(Side::Lower),
        validity: Box::new(|p| p[0] > 1.0 && p[1] > 1.0),
        eval: Box::new(|p, x| confluent::b03_confluent(p[0], p[1], x)),
        grid: kummer_b03_grid(),
    });
    v.push(CatalogBound {
        id: String::from("kummer.a1b.lower"),
        family: Family::Kummer,
        quantity: Quantity::KummerA1b,
        accuracy: Accuracy::Unknown,
        provenance: "subtraction-free contiguous transport of the root pair",
        side: fixed_side(Side::Lower),
        validity: Box::new(|p| p[0] > 0.0 && p[1] > 0.0),
        eval: Box::new(|p, x| confluent::ratio_a1b_bounds(p[0], p[1], x).map(|b| b.0)),
        grid: kummer_default_grid(),
    });
    v.push(CatalogBound {
        id: String::from("kummer.a1b.upper"),
        family: Family::Kummer,
        quantity: Quantity::KummerA1b,
        accuracy: Accuracy::Unknown,
        provenance: "subtraction-free contiguous transport of the root pair",
        side: fixed_side(Side::Upper),
        validity: Box::new(|p| p[0] > 0.0 && p[1] > 0.0),
        eval: Box::new(|p, x| confluent::ratio_a1b_bounds(p[0], p[1], x).map(|b| b.1)),
        grid: kummer_default_grid(),
    });
    v.push(CatalogBound {
        id: String::from("kummer.eta"),
        family: Family::Kummer,
        quantity: Quantity::KummerBigH,
        accuracy: Accuracy::Known(0, 2),
        provenance: "contiguous transport of the root bound, cancellation-guarded",
        side: fixed_side(Side::Upper),
        validity: Box::new(|p| p[0] > 0.0 && p[1] > 0.0),
        eval: Box::new(|p, x| confluent::eta(p[0], p[1], x)),
        grid: kummer_default_grid(),
    });
    v.push(CatalogBound {
        id: String::from("kummer.eta_tilde"),
        family: Family::Kummer,
        quantity: Quantity::KummerBigH,
        accuracy: Accuracy::Known(1, 1),
        provenance: "contiguous transport of the lifted root bound",
        side: fixed_side(Side::Lower),
        validity: Box::new(|p| p[0] > 0.0 && p[1] > 0.0),
        eval: Box::new(|p, x| confluent::eta_tilde(p[0], p[1], x)),
        grid: kummer_default_grid(),
    });

    // --- Gauss ---
    v.push(CatalogBound {
        id: String::from("gauss.lambda"),
        family: Family::Gauss,
        quantity: Quantity::GaussRatio,
        accuracy: Accuracy::Unknown,
        provenance: "Riccati nullcline root on (0,1)",
        side: fixed_side(Side::Upper),
        validity: Box::new(|p| {
            gauss_bounds::GaussRatioParams::new(p[0], p[1], p[2])
                .map(|g| g.root_bound_valid())
                .unwrap_or(false)
        }),
        eval: Box::new(|p, x| {
            let g = gauss_bounds::GaussRatioParams::new(p[0], p[1], p[2])?;
            gauss_bounds::lambda_gauss(&g, x)
        }),
        grid: gauss_default_grid(),
    });
    v.push(CatalogBound {
        id: String::from("gauss.h_lower"),
        family: Family::Gauss,
        quantity: Quantity::GaussBigH,
        accuracy: Accuracy::Unknown,
        provenance: "nullcline root bound in the 2c-normalized form",
        side: fixed_side(Side::Lower),
        validity: Box::new(|p| {
            gauss_bounds::GaussRatioParams::new(p[0], p[1], p[2])
                .map(|g| g.root_bound_valid())
                .unwrap_or(false)
        }),
        eval: Box::new(|p, x| {
            let g = gauss_bounds::GaussRatioParams::new(p[0], p[1], p[2])?;
            gauss_bounds::lower_h(&g, x)
        }),
        grid: gauss_default_grid(),
    });
    v.push(CatalogBound {
        id: String::from("gauss.h_upper"),
        family: Family::Gauss,
        quantity: Quantity::GaussBigH,
        accuracy: Accuracy::Unknown,
        provenance: "backward recurrence lift in the 2c-normalized form",
        side: fixed_side(Side::Upper),
        validity: Box::new(|p| {
            gauss_bounds::GaussRatioParams::new(p[0], p[1], p[2])
                .map(|g| g.lifted_bound_valid())
                .unwrap_or(false)
        }),
        eval: Box::new(|p, x| {
            let g = gauss_bounds::GaussRatioParams::new(p[0], p[1], p[2])?;
            gauss_bounds::upper_h(&g, x)
        }),
        grid: gauss_default_grid(),
    });

    v
}

/// Verify one catalogued bound over its grid.
pub fn verify_bound(
    cb: &CatalogBound,
    cache: &mut OracleCache,
    keep_records: bool,
) -> Result<VerificationReport> {
    let mut num_points = 0usize;
    let mut num_skipped = 0usize;
    let mut num_violations = 0usize;
    let mut min_margin = f64::INFINITY;
    let mut worst_params: Vec<f64> = Vec::new();
    let mut worst_x = f64::NAN;
    let mut records = if keep_records { Some(Vec::new()) } else { None };

    for params in &cb.grid.params {
        if !(cb.validity)(params) {
            num_skipped += cb.grid.xs.len();
            continue;
        }
        let side = match (cb.side)(params) {
            Some(s) => s,
            None => {
                num_skipped += cb.grid.xs.len();
                continue;
            }
        };
        let encs = cache.get(cb.quantity, params, &cb.grid.xs)?;
        for (&x, enc) in cb.grid.xs.iter().zip(encs.iter()) {
            let bound = match (cb.eval)(params, x) {
                Ok(b) => b,
                Err(Error::Domain(_)) => {
                    num_skipped += 1;
                    continue;
                }
                Err(e) => return Err(e),
            };
            num_points += 1;
            let scale = enc.mid().abs().max(1e-300);
            let (margin, violation) = match side {
                Side::Lower => (enc.lo() - bound, bound > enc.hi() + MARGIN_SLACK * scale),
                Side::Upper => (bound - enc.hi(), bound < enc.lo() - MARGIN_SLACK * scale),
            };
            if margin < min_margin {
                min_margin = margin;
                worst_params = params.clone();
                worst_x = x;
            }
            if violation {
                num_violations += 1;
            }
            if let Some(rec) = records.as_mut() {
                rec.push(PointRecord {
                    params: params.clone(),
                    x,
                    oracle_lo: enc.lo(),
                    oracle_hi: enc.hi(),
                    bound,
                    margin,
                    violation,
                });
            }
        }
    }
    Ok(VerificationReport {
        bound_id: cb.id.clone(),
        num_params: cb.grid.params.len(),
        num_x: cb.grid.xs.len(),
        num_points,
        num_violations,
        num_skipped,
        min_margin,
        worst_params,
        worst_x,
        records,
    })
}

/// Verify a filtered portion of the catalogue. `family` filters by family
/// label ("pcf", "bessel", "confluent"/"kummer", "gauss"); `bound_id`
/// selects a single identifier.
pub fn verify_catalog(
    family: Option<&str>,
    bound_id: Option<&str>,
    cache: &mut OracleCache,
    keep_records: bool,
) -> Result<Vec<VerificationReport>> {
    let selected: Vec<CatalogBound> = catalog()
        .into_iter()
        .filter(|cb| family.is_none_or(|f| family_matches(cb.family, f)))
        .filter(|cb| bound_id.is_none_or(|id| cb.id == id))
        .collect();
    if selected.is_empty() {
        return Err(Error::InvalidGrid("no catalogued bound matches the filter"));
    }
    let mut out = Vec::with_capacity(selected.len());
    for cb in &selected {
        out.push(verify_bound(cb, cache, keep_records)?);
    }
    Ok(out)
}

pub fn family_matches(family: Family, label: &str) -> bool {
    match label {
        "pcf" => family == Family::PcfU,
        "bessel" => family == Family::BesselI || family == Family::BesselK,
        "kummer" | "confluent" => family == Family::Kummer,
        "gauss" => family == Family::Gauss,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_ids_unique() {
        let cat = catalog();
        for (i, a) in cat.iter().enumerate() {
            for b in &cat[i + 1..] {
                assert_ne!(a.id, b.id);
            }
        }
        // 9 pcf + 44 family members + 8 rows + 4 gap pairs + 9 further
        // bessel entries + 7 kummer + 3 gauss
        assert_eq!(cat.len(), 84);
    }

    #[test]
    fn single_bound_verifies_clean() {
        let mut cache = OracleCache::new(OracleConfig::default());
        let cat = catalog();
        let cb = cat.iter().find(|c| c.id == "kummer.lambda").unwrap();
        let rep = verify_bound(cb, &mut cache, false).unwrap();
        assert_eq!(rep.num_violations, 0, "{rep:?}");
        assert!(rep.num_points > 1000);
    }

    #[test]
    fn unknown_filter_is_rejected() {
        let mut cache = OracleCache::new(OracleConfig::default());
        assert!(verify_catalog(None, Some("nosuch"), &mut cache, false).is_err());
    }
}
