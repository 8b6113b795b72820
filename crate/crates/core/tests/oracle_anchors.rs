//! Oracle anchors against independent references: gamma closed forms,
//! reference series, and half-integer identities. These pin the enclosure
//! oracles to ground truth computed by code that shares nothing with them.

mod common;

use common::*;
use ratio_bounds::oracle::{bessel, gauss, kummer, pcf, OracleConfig};

fn cfg() -> OracleConfig {
    OracleConfig::default()
}

#[test]
fn pcf_matches_gamma_closed_form_at_zero() {
    for &n in &[0.51, 0.8, 1.0, 2.0, 5.5, 17.0] {
        let enc = pcf::ratio_enclosure(n, 0.0, &cfg()).unwrap();
        let reference = pcf_ratio_at_zero(n);
        assert!(
            enc.lo() - 1e-12 * reference <= reference && reference <= enc.hi() + 1e-12 * reference,
            "n={n}: {reference} not in {enc}"
        );
        assert_rel_close(enc.mid(), reference, 1e-12, "pcf ratio at 0");
    }
}

#[test]
fn pcf_depth_runs_agree_and_stay_in_root_bracket() {
    let shallow = pcf::ratio_enclosure(2.0, 10.0, &OracleConfig::fixed(40)).unwrap();
    let deep = pcf::ratio_enclosure(2.0, 10.0, &OracleConfig::fixed(80)).unwrap();
    assert!(deep.subset_of(&shallow));
    // root bracket at n = 2, x = 10
    let lo = 0.5 * (10.0 + 106.0f64.sqrt());
    let hi = 0.5 * (10.0 + 110.0f64.sqrt());
    assert!(shallow.lo() >= lo - 1e-12 && shallow.hi() <= hi + 1e-12);
    assert!(deep.rel_width() <= 1e-12);
}

#[test]
fn bessel_i_matches_reference_series() {
    for &(nu, x) in &[(1.0, 1.0), (0.0, 2.0), (2.5, 7.0), (10.0, 3.0), (0.25, 0.1)] {
        let enc = bessel::i_ratio_enclosure(nu, x, &cfg()).unwrap();
        let reference = bessel_i(nu - 1.0, x) / bessel_i(nu, x);
        assert_rel_close(enc.mid(), reference, 1e-12, "bessel I ratio");
    }
    // I_0(1)/I_1(1), also the classical spot value 2.2400...
    let enc = bessel::i_ratio_enclosure(1.0, 1.0, &cfg()).unwrap();
    assert!(enc.contains(bessel_i(0.0, 1.0) / bessel_i(1.0, 1.0)));
    assert!(
        enc.lo() > 5.0f64.sqrt(),
        "enclosure must clear the root bound at (1,1)"
    );
}

#[test]
fn bessel_half_integer_identities() {
    // I_{-1/2}/I_{1/2} = coth(x).
    for &x in &[0.4, 2.0, 11.0] {
        let enc = bessel::i_ratio_enclosure(0.5, x, &cfg()).unwrap();
        assert_rel_close(enc.mid(), coth(x), 1e-13, "coth identity");
    }
    // K_{3/2}/K_{1/2} = 1 + 1/x.
    for &x in &[0.3, 2.0, 25.0] {
        let enc = bessel::k_ratio_enclosure(0.5, x, &cfg()).unwrap();
        assert_rel_close(enc.mid(), 1.0 + 1.0 / x, 1e-13, "half-integer K ratio");
    }
    // K_{5/2}/K_{3/2} from the closed polynomial forms.
    for &x in &[0.5, 2.0, 9.0] {
        let enc = bessel::k_ratio_enclosure(1.5, x, &cfg()).unwrap();
        let reference = (1.0 + 3.0 / x + 3.0 / (x * x)) / (1.0 + 1.0 / x);
        assert_rel_close(enc.mid(), reference, 1e-13, "K 5/2 over 3/2");
    }
}

#[test]
fn bessel_k_within_its_bound_pair() {
    // Generic order: enclosure sits inside the seed bound pair.
    let (nu, x) = (1.0, 0.5);
    let enc = bessel::k_ratio_enclosure(nu, x, &cfg()).unwrap();
    let lower = (nu + 0.5 + ((nu - 0.5f64) * (nu - 0.5) + x * x).sqrt()) / x;
    let upper = (nu + 1.0 + ((nu - 1.0f64) * (nu - 1.0) + x * x).sqrt()) / x;
    assert!(
        enc.lo() >= lower - 1e-12 && enc.hi() <= upper + 1e-12,
        "{enc} in [{lower},{upper}]"
    );
}

#[test]
fn kummer_matches_reference_series() {
    for &(a, b, x) in &[
        (1.0, 2.0, 1.0),
        (0.3, 5.0, 12.0),
        (5.0, 0.3, 2.0),
        (2.0, 3.0, 25.0),
    ] {
        let enc = kummer::ratio_enclosure(a, b, x, &cfg()).unwrap();
        let reference = (a / b) * kummer_m(a + 1.0, b + 1.0, x) / kummer_m(a, b, x);
        assert_rel_close(enc.mid(), reference, 1e-12, "kummer ratio");
    }
    // M(1,1,x) = e^x means h(1,1,x) = 1.
    let enc = kummer::ratio_enclosure(1.0, 1.0, 5.0, &cfg()).unwrap();
    assert!(enc.contains(1.0) && enc.width() < 1e-14);
}

#[test]
fn kummer_series_cross_oracle_agreement() {
    // |series quotient - enclosure midpoint| <= series err + half-width.
    for &(a, b) in &[(0.5, 2.0), (2.0, 0.5), (1.0, 1.5)] {
        for &x in &[0.5, 2.0, 8.0, 20.0] {
            let enc = kummer::ratio_enclosure(a, b, x, &cfg()).unwrap();
            let (m1, e1) = kummer::kummer_series(a, b, x, 1e-14).unwrap();
            let (m2, e2) = kummer::kummer_series(a + 1.0, b + 1.0, x, 1e-14).unwrap();
            let q = (a / b) * m2 / m1;
            let q_err = (a / b) * (e2 / m1 + e1 * m2 / (m1 * m1)) + 1e-15 * q.abs();
            assert!(
                (q - enc.mid()).abs() <= q_err + 0.5 * enc.width() + 1e-14 * q.abs(),
                "({a},{b},{x}): series {q} vs {enc}"
            );
        }
    }
}

#[test]
fn gauss_matches_reference_series() {
    for &(a, b, c) in &[(1.0, 1.0, 2.0), (0.5, 2.0, 1.5), (2.0, 5.0, 3.0)] {
        for &x in &[0.05, 0.3, 0.6, 0.9] {
            let enc = gauss::ratio_enclosure(a, b, c, x, &cfg()).unwrap();
            let reference =
                (a * b / c) * gauss_2f1(a + 1.0, b + 1.0, c + 1.0, x) / gauss_2f1(a, b, c, x);
            assert_rel_close(enc.mid(), reference, 1e-11, "gauss ratio");
        }
    }
}

#[test]
fn gauss_log_closed_form() {
    // 2F1(1,1;2;x) = -ln(1-x)/x.
    for &x in &[0.25, 0.5, 0.9] {
        let (v, err) = gauss::gauss_series(1.0, 1.0, 2.0, x, 1e-14).unwrap();
        let reference = -(1.0f64 - x).ln() / x;
        assert!((v - reference).abs() <= err + 1e-13 * reference.abs());
    }
}

#[test]
fn pcf_flow_matches_reference_at_negative_x() {
    // Cross-check the leftward flow against the gamma anchor at 0 and the
    // asymptotic form far left.
    let enc = pcf::ratio_enclosure(1.5, 0.0, &cfg()).unwrap();
    assert_rel_close(enc.mid(), pcf_ratio_at_zero(1.5), 1e-12, "flow at 0");

    let n = 2.0;
    let enc = pcf::ratio_enclosure(n, -35.0, &cfg()).unwrap();
    // -(n-1/2)/x [1 - (n-3/2)/x^2 + 2(n-3/2)(n-2) x^-4]
    let x: f64 = -35.0;
    let series = -(n - 0.5) / x
        * (1.0 - (n - 1.5) / (x * x) + 2.0 * (n - 1.5) * (n - 2.0) / (x * x * x * x));
    assert_rel_close(enc.mid(), series, 1e-6, "asymptotic form at -35");
}

#[test]
fn recurrence_lifts_flip_bound_sides() {
    use ratio_bounds::bounds::pcf as b;
    let config = cfg();
    // Backward lift of the lower root bound gives an upper bound; it is in
    // fact where the (1,2) member comes from, so the two coincide: the
    // shifted root solves B^2 - xB - (n+1/2) = 0, hence x + (n+1/2)/B = B.
    for &(n, x) in &[(1.0, 2.0), (0.6, -4.0), (5.0, 0.0)] {
        let lifted = b::lift_backward(b::b21, n, x).unwrap();
        let enc = pcf::ratio_enclosure(n, x, &config).unwrap();
        assert!(
            lifted >= enc.hi() - 1e-12 * enc.hi().abs(),
            "lifted lower must bound above"
        );
        let direct = b::b12(n, x).unwrap();
        assert!((lifted - direct).abs() <= 1e-12 * direct.abs().max(1.0));
    }
    // Forward lift of the algebraic cubic bound is also an upper bound.
    let lifted = b::lift_forward(b::alg33, 2.0, -1.0).unwrap();
    let enc = pcf::ratio_enclosure(2.0, -1.0, &config).unwrap();
    assert!(lifted >= enc.hi() - 1e-12 * enc.hi());
    // Backward lift of the trigonometric bound, same side.
    let lifted = b::lift_backward(b::trig33, 1.0, 2.0).unwrap();
    let enc = pcf::ratio_enclosure(1.0, 2.0, &config).unwrap();
    assert!(lifted >= enc.hi() - 1e-12 * enc.hi());
}

#[test]
fn gauss_h_normalization_identity() {
    // 2c F(a,b;c;x)/F(a+1,b+1;c+1;x) equals 2ab divided by the ratio the
    // oracle encloses.
    let (a, b, c, x) = (1.3, 0.7, 2.0, 0.45);
    let via_f = 2.0 * c * gauss_2f1(a, b, c, x) / gauss_2f1(a + 1.0, b + 1.0, c + 1.0, x);
    let h = gauss::ratio_enclosure(a, b, c, x, &cfg()).unwrap();
    assert_rel_close(
        2.0 * a * b / h.mid(),
        via_f,
        1e-12,
        "H normalization identity",
    );
}

#[test]
fn pcf_batch_is_consistent_with_anchors() {
    let xs: Vec<f64> = (0..=60).map(|i| -30.0 + i as f64).collect();
    let encs = pcf::enclose_batch(1.0, &xs, &cfg());
    for (i, &x) in xs.iter().enumerate() {
        let enc = encs[i].as_ref().unwrap();
        assert!(enc.rel_width() <= 1e-12, "x={x}: width {}", enc.rel_width());
        if x == 0.0 {
            assert_rel_close(enc.mid(), pcf_ratio_at_zero(1.0), 1e-12, "batch at 0");
        }
    }
}
