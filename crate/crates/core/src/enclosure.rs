//! Directed interval arithmetic with outward rounding.
//!
//! An [`Enclosure`] `[lo, hi]` certifies `lo <= true value <= hi`. Every
//! operation inflates the result by one ulp on each side instead of switching
//! rounding modes, so containment survives ordinary round-to-nearest
//! arithmetic. The price is a slightly pessimistic width, which the oracles
//! absorb with extra recursion depth.

use crate::error::{Error, Result};
use crate::fx;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Enclosure {
    lo: f64,
    hi: f64,
}

impl Enclosure {
    /// Enclosure from ordered endpoints. Panics if `lo > hi` or not finite.
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "enclosure endpoints out of order: [{lo}, {hi}]");
        assert!(
            lo.is_finite() && hi.is_finite(),
            "non-finite enclosure endpoint"
        );
        Enclosure { lo, hi }
    }

    /// Degenerate enclosure of a single point.
    pub fn point(v: f64) -> Self {
        Enclosure::new(v, v)
    }

    /// Enclosure from two values in either order.
    pub fn from_pair(a: f64, b: f64) -> Self {
        if a <= b {
            Enclosure::new(a, b)
        } else {
            Enclosure::new(b, a)
        }
    }

    /// Point enclosure padded by one ulp each side; use for values already
    /// carrying a rounding error.
    pub fn point_ulp(v: f64) -> Self {
        Enclosure::new(fx::next_down(v), fx::next_up(v))
    }

    #[inline]
    pub fn lo(&self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn mid(&self) -> f64 {
        0.5 * self.lo + 0.5 * self.hi
    }

    #[inline]
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    /// Relative width scaled by the larger endpoint magnitude. Only
    /// meaningful when the enclosure excludes zero, which holds for every
    /// ratio handled here.
    pub fn rel_width(&self) -> f64 {
        let scale = fx::abs(self.lo).max(fx::abs(self.hi));
        if scale == 0.0 {
            0.0
        } else {
            self.width() / scale
        }
    }

    #[inline]
    pub fn contains(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    #[inline]
    pub fn contains_zero(&self) -> bool {
        self.contains(0.0)
    }

    /// `self` is a subset of `other` (both closed).
    #[inline]
    pub fn subset_of(&self, other: &Enclosure) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    fn outward(lo: f64, hi: f64) -> Enclosure {
        Enclosure::new(fx::next_down(lo), fx::next_up(hi))
    }

    pub fn add(&self, rhs: &Enclosure) -> Enclosure {
        Enclosure::outward(self.lo + rhs.lo, self.hi + rhs.hi)
    }

    pub fn sub(&self, rhs: &Enclosure) -> Enclosure {
        Enclosure::outward(self.lo - rhs.hi, self.hi - rhs.lo)
    }

    pub fn neg(&self) -> Enclosure {
        Enclosure::new(-self.hi, -self.lo)
    }

    pub fn mul(&self, rhs: &Enclosure) -> Enclosure {
        let c = [
            self.lo * rhs.lo,
            self.lo * rhs.hi,
            self.hi * rhs.lo,
            self.hi * rhs.hi,
        ];
        let mut lo = c[0];
        let mut hi = c[0];
        for &v in &c[1..] {
            lo = lo.min(v);
            hi = hi.max(v);
        }
        Enclosure::outward(lo, hi)
    }

    pub fn div(&self, rhs: &Enclosure) -> Result<Enclosure> {
        if rhs.contains_zero() {
            return Err(Error::DivisionContainsZero);
        }
        let c = [
            self.lo / rhs.lo,
            self.lo / rhs.hi,
            self.hi / rhs.lo,
            self.hi / rhs.hi,
        ];
        let mut lo = c[0];
        let mut hi = c[0];
        for &v in &c[1..] {
            lo = lo.min(v);
            hi = hi.max(v);
        }
        Ok(Enclosure::outward(lo, hi))
    }

    pub fn recip(&self) -> Result<Enclosure> {
        Enclosure::point(1.0).div(self)
    }

    /// Interval square; tighter than `mul(self, self)` when the interval
    /// straddles zero, and never dips negative.
    pub fn sq(&self) -> Enclosure {
        let (a, b) = (self.lo, self.hi);
        let (lo, hi) = if a >= 0.0 {
            (a * a, b * b)
        } else if b <= 0.0 {
            (b * b, a * a)
        } else {
            (0.0, (a * a).max(b * b))
        };
        Enclosure::new(
            if lo == 0.0 { 0.0 } else { fx::next_down(lo) },
            fx::next_up(hi),
        )
    }

    pub fn sqrt(&self) -> Result<Enclosure> {
        if self.lo < 0.0 {
            return Err(Error::NegativeSqrt);
        }
        Ok(Enclosure::new(
            fx::next_down(fx::sqrt(self.lo)).max(0.0),
            fx::next_up(fx::sqrt(self.hi)),
        ))
    }

    /// Scale by an exact scalar (still outward-rounded).
    pub fn scale(&self, k: f64) -> Enclosure {
        self.mul(&Enclosure::point(k))
    }

    /// Shift by an exact scalar.
    pub fn shift(&self, k: f64) -> Enclosure {
        self.add(&Enclosure::point(k))
    }

    pub fn intersect(&self, other: &Enclosure) -> Result<Enclosure> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        if lo > hi {
            return Err(Error::EmptyIntersection);
        }
        Ok(Enclosure::new(lo, hi))
    }

    pub fn hull(&self, other: &Enclosure) -> Enclosure {
        Enclosure::new(self.lo.min(other.lo), self.hi.max(other.hi))
    }
}

impl core::fmt::Display for Enclosure {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "[{:.17e}, {:.17e}]", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enc(lo: f64, hi: f64) -> Enclosure {
        Enclosure::new(lo, hi)
    }

    #[test]
    fn add_encloses_exact_result() {
        let r = enc(1.0, 2.0).add(&enc(3.0, 4.0));
        assert!(r.lo() <= 4.0 && r.hi() >= 6.0);
        assert!(r.width() < 6.0 - 4.0 + 1e-12);
    }

    #[test]
    fn sqrt_of_perfect_square_brackets_root() {
        let r = enc(4.0, 4.0).sqrt().unwrap();
        assert!(r.contains(2.0));
        assert!(r.width() < 1e-14);
    }

    #[test]
    fn division_by_zero_straddle_rejected() {
        let r = enc(1.0, 1.0).div(&enc(-1e-30, 1e-30));
        assert_eq!(r, Err(Error::DivisionContainsZero));
    }

    #[test]
    fn negative_sqrt_rejected() {
        assert_eq!(enc(-1e-30, 1.0).sqrt(), Err(Error::NegativeSqrt));
    }

    #[test]
    fn mul_covers_sign_cases() {
        let r = enc(-2.0, 3.0).mul(&enc(-5.0, 7.0));
        // extremes: -2*7 = -14 ... -5*3 = -15 lo, hi = -2*-5 = 10 vs 21
        assert!(r.contains(-15.0) && r.contains(21.0));
        assert!(r.lo() <= -15.0 && r.hi() >= 21.0);
    }

    #[test]
    fn containment_monotone_under_widening() {
        let a = enc(1.0, 2.0);
        let a2 = enc(0.5, 2.5);
        let b = enc(0.25, 0.5);
        let b2 = enc(0.2, 0.6);
        assert!(a.mul(&b).subset_of(&a2.mul(&b2)));
        assert!(a.div(&b).unwrap().subset_of(&a2.div(&b2).unwrap()));
        assert!(a.add(&b).subset_of(&a2.add(&b2)));
        assert!(a.sub(&b).subset_of(&a2.sub(&b2)));
    }

    #[test]
    fn intersect_and_hull() {
        let a = enc(1.0, 3.0);
        let b = enc(2.0, 4.0);
        assert_eq!(a.intersect(&b).unwrap(), enc(2.0, 3.0));
        assert_eq!(a.hull(&b), enc(1.0, 4.0));
        assert!(enc(0.0, 1.0).intersect(&enc(2.0, 3.0)).is_err());
    }
}
