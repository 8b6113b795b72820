//! Scalar float shims so the crate builds both with `std` (intrinsics) and
//! without (`libm`). Everything numeric in this crate goes through here.

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("ratio-bounds requires either the `std` or the `libm` feature");

macro_rules! shim {
    ($name:ident, $libm:ident) => {
        #[inline(always)]
        pub fn $name(x: f64) -> f64 {
            #[cfg(feature = "std")]
            {
                x.$name()
            }
            #[cfg(not(feature = "std"))]
            {
                libm::$libm(x)
            }
        }
    };
}

shim!(sqrt, sqrt);
shim!(exp, exp);
shim!(ln, log);
shim!(sin, sin);
shim!(cos, cos);
shim!(acos, acos);
shim!(abs, fabs);
shim!(floor, floor);

/// Fused multiply-add `a * b + c` with a single rounding.
#[inline(always)]
pub fn fma(a: f64, b: f64, c: f64) -> f64 {
    #[cfg(feature = "std")]
    {
        a.mul_add(b, c)
    }
    #[cfg(not(feature = "std"))]
    {
        libm::fma(a, b, c)
    }
}

/// Integer power by repeated squaring; `f64::powi` is std-only.
#[cfg_attr(not(test), allow(dead_code))]
pub fn powi(x: f64, n: i32) -> f64 {
    let mut base = if n < 0 { 1.0 / x } else { x };
    let mut e = n.unsigned_abs();
    let mut acc = 1.0;
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}

/// Next representable float toward +inf. Total order on finite doubles.
#[inline]
pub fn next_up(x: f64) -> f64 {
    if x.is_nan() || x == f64::INFINITY {
        return x;
    }
    if x == 0.0 {
        return f64::from_bits(1);
    }
    let bits = x.to_bits();
    if x > 0.0 {
        f64::from_bits(bits + 1)
    } else {
        f64::from_bits(bits - 1)
    }
}

/// Next representable float toward -inf.
#[inline]
pub fn next_down(x: f64) -> f64 {
    -next_up(-x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn next_up_down_bracket() {
        for &v in &[
            0.0,
            1.0,
            -1.0,
            1e-300,
            -1e-300,
            12345.678,
            f64::MIN_POSITIVE,
        ] {
            assert!(next_up(v) > v, "next_up({v})");
            assert!(next_down(v) < v, "next_down({v})");
        }
        assert_eq!(next_up(f64::INFINITY), f64::INFINITY);
    }

    #[test]
    fn powi_matches_naive() {
        assert_eq!(powi(2.0, 10), 1024.0);
        assert_eq!(powi(3.0, 0), 1.0);
        assert!((powi(2.0, -3) - 0.125).abs() < 1e-16);
        assert!((powi(-1.5, 3) + 3.375).abs() < 1e-15);
    }
}
