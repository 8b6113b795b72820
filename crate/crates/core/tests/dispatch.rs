//! The `RatioSpec` front door: construction predicates and dispatch to the
//! per-family oracles.

use ratio_bounds::oracle::{self, OracleConfig};
use ratio_bounds::RatioSpec;

#[test]
fn enclose_dispatches_every_kind() {
    let cfg = OracleConfig::default();
    let cases = [
        RatioSpec::pcf(1.0, -3.0).unwrap(),
        RatioSpec::bessel_i(1.0, 2.0).unwrap(),
        RatioSpec::bessel_k(1.0, 2.0).unwrap(),
        RatioSpec::kummer(1.0, 2.0, 3.0).unwrap(),
        RatioSpec::gauss(1.0, 2.0, 3.0, 0.5).unwrap(),
    ];
    for spec in &cases {
        let enc = oracle::enclose(spec, &cfg).unwrap();
        assert!(enc.lo() > 0.0, "{spec:?}: {enc}");
    }
}

#[test]
fn enclose_respects_family_domains() {
    let cfg = OracleConfig::default();
    // Valid construction but out of the oracle's index domain.
    let spec = RatioSpec::pcf(0.4, 1.0).unwrap();
    assert!(oracle::enclose(&spec, &cfg).is_err());
}
