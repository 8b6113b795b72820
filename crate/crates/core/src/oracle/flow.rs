//! Validated leftward integration of the scalar Riccati equation
//! `h'(x) = h^2 - x h - c`.
//!
//! The ratio `U(n-1,x)/U(n,x)` solves this equation with `c = n - 1/2` and
//! satisfies `2h(x) - x >= sqrt(x^2 + 4n - 2) > 0`, so the distance between
//! any two solutions decays like `exp(-int (2h - x))` when moving toward
//! smaller `x`. Integrating leftward from an anchor where the backward
//! recurrence is sharp therefore transports a tight enclosure to any smaller
//! `x`, including the whole negative axis where the recurrence itself
//! amplifies widths instead of contracting them.
//!
//! State is a certified ball `|h*(x) - p| <= r` around a numerically tracked
//! center trajectory. Each step encloses the center's Taylor-step image in
//! interval arithmetic (with an interval Lagrange remainder over a
//! Picard-verified box), and transports the radius with the Gronwall factor
//! `exp(-dx * min(2u - s))` taken over that box, which is where both the
//! center trajectory and the true solution live for the whole step.

use crate::enclosure::Enclosure;
use crate::error::{Error, Result};
use crate::fx;
use alloc::vec::Vec;

const ORDER: usize = 12;
const MIN_STEP: f64 = 1e-9;
const MAX_STEP: f64 = 0.5;

/// The flow `h' = h^2 - x h - c`.
#[derive(Debug, Clone, Copy)]
pub struct RiccatiFlow {
    pub c: f64,
}

#[derive(Debug, Clone, Copy)]
struct Ball {
    p: f64,
    r: f64,
}

impl Ball {
    fn enclosure(&self) -> Enclosure {
        Enclosure::new(fx::next_down(self.p - self.r), fx::next_up(self.p + self.r))
    }
}

impl RiccatiFlow {
    fn rhs(&self, x: &Enclosure, h: &Enclosure) -> Enclosure {
        h.sq().sub(&x.mul(h)).shift(-self.c)
    }

    /// Taylor coefficients `a_0..a_ORDER` of the solution through
    /// `(x0, a0)`, from the coefficient recurrence of the equation.
    fn coeffs(&self, x0: &Enclosure, a0: &Enclosure) -> [Enclosure; ORDER + 1] {
        let mut a = [Enclosure::point(0.0); ORDER + 1];
        a[0] = *a0;
        for i in 0..ORDER {
            let mut conv = a[0].mul(&a[i]);
            for j in 1..=i {
                conv = conv.add(&a[j].mul(&a[i - j]));
            }
            let mut b = conv.sub(&x0.mul(&a[i]));
            if i >= 1 {
                b = b.sub(&a[i - 1]);
            }
            if i == 0 {
                b = b.shift(-self.c);
            }
            a[i + 1] = b
                .div(&Enclosure::point((i + 1) as f64))
                .expect("nonzero integer divisor");
        }
        a
    }

    /// One validated step from `x` to `x_new < x`.
    fn step(&self, x: f64, ball: &Ball, x_new: f64) -> Result<Ball> {
        let dx = x - x_new;
        let span = Enclosure::new(x_new, x);
        let start = ball.enclosure();
        let fail = || Error::NotConverged {
            best: ball.enclosure(),
            rel_width: f64::INFINITY,
        };

        // Picard-verified a-priori box containing every solution that starts
        // in the ball, over the whole step.
        let reach_of =
            |b: &Enclosure| start.add(&Enclosure::from_pair(-dx, 0.0).mul(&self.rhs(&span, b)));
        let inflate = |b: &Enclosure| {
            let pad = 0.05 * b.width() + 1e-14 * (1.0 + b.mid().abs());
            Enclosure::new(b.lo() - pad, b.hi() + pad)
        };
        let mut boxed = inflate(&reach_of(&start).hull(&start));
        let mut verified = false;
        for _ in 0..40 {
            let reach = reach_of(&boxed).hull(&start);
            if reach.subset_of(&boxed) {
                verified = true;
                break;
            }
            boxed = inflate(&reach);
            if boxed.width() > 1e2 * (1.0 + ball.p.abs()) {
                return Err(fail());
            }
        }
        if !verified {
            return Err(fail());
        }

        // Enclose the center trajectory's value at x_new: point Taylor
        // coefficients plus an interval Lagrange remainder over the box.
        let series = self.coeffs(&Enclosure::point(x), &Enclosure::point(ball.p));
        let remainder = self.coeffs(&span, &boxed)[ORDER];
        let dx_pow = {
            let mut p = 1.0f64;
            for _ in 0..ORDER {
                p *= dx;
            }
            p
        };
        let rem_mag = remainder.lo().abs().max(remainder.hi().abs()) * dx_pow;
        if rem_mag > 1e-15 * ball.p.abs().max(0.05) {
            return Err(fail());
        }
        let t = Enclosure::point(x_new).sub(&Enclosure::point(x));
        let mut center = remainder;
        for i in (0..ORDER).rev() {
            center = center.mul(&t).add(&series[i]);
        }

        // Gronwall transport of the radius: the gap between the true solution
        // and the center trajectory satisfies delta' = (u1 + u2 - s) delta
        // with u1, u2 in the box, so leftward it contracts by at least
        // exp(-dx * min(2 boxed - span)).
        let growth = boxed.scale(2.0).sub(&span);
        let factor = fx::exp(-dx * growth.lo()) * (1.0 + 4.0 * f64::EPSILON);
        let r_new = ball.r * factor + 0.5 * center.width() + f64::EPSILON * center.mid().abs();
        Ok(Ball {
            p: center.mid(),
            r: r_new,
        })
    }

    /// Integrate leftward from `(x0, seed)` recording enclosures at each of
    /// `stops` (strictly decreasing, all `< x0`).
    pub fn integrate_leftward(
        &self,
        x0: f64,
        seed: Enclosure,
        stops: &[f64],
    ) -> Result<Vec<Enclosure>> {
        debug_assert!(stops.windows(2).all(|w| w[0] > w[1]));
        debug_assert!(stops.iter().all(|&s| s < x0));
        let mut ball = Ball {
            p: seed.mid(),
            r: 0.5 * seed.width() + f64::EPSILON * seed.mid().abs(),
        };
        let mut x = x0;
        let mut ctrl = 0.05f64;
        let mut out = Vec::with_capacity(stops.len());

        for &stop in stops {
            while x > stop {
                let x_new = if x - ctrl <= stop { stop } else { x - ctrl };
                match self.step(x, &ball, x_new) {
                    Ok(next) => {
                        ball = next;
                        x = x_new;
                        ctrl = (ctrl * 1.3).min(MAX_STEP);
                    }
                    Err(_) => {
                        ctrl *= 0.5;
                        if ctrl < MIN_STEP {
                            return Err(Error::NotConverged {
                                best: ball.enclosure(),
                                rel_width: f64::INFINITY,
                            });
                        }
                    }
                }
            }
            out.push(ball.enclosure());
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rk4_ref(c: f64, x0: f64, h0: f64, x1: f64, steps: usize) -> f64 {
        let f = |x: f64, h: f64| h * h - x * h - c;
        let mut h = h0;
        let mut x = x0;
        let dt = (x1 - x0) / steps as f64;
        for _ in 0..steps {
            let k1 = f(x, h);
            let k2 = f(x + 0.5 * dt, h + 0.5 * dt * k1);
            let k3 = f(x + 0.5 * dt, h + 0.5 * dt * k2);
            let k4 = f(x + dt, h + dt * k3);
            h += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            x += dt;
        }
        h
    }

    #[test]
    fn enclosure_tracks_reference_integration() {
        let flow = RiccatiFlow { c: 0.5 }; // n = 1
        let x0 = 4.0;
        let h0 = 0.5 * (x0 + (x0 * x0 + 4.0f64).sqrt());
        let seed = Enclosure::new(h0 - 1e-9, h0 + 1e-9);
        let stops = [2.0, 0.0, -3.0];
        let enc = flow.integrate_leftward(x0, seed, &stops).unwrap();
        for (i, &s) in stops.iter().enumerate() {
            let reference = rk4_ref(0.5, x0, h0, s, 400_000);
            assert!(
                enc[i].lo() - 1e-7 <= reference && reference <= enc[i].hi() + 1e-7,
                "stop {s}: ref {reference} vs {}",
                enc[i]
            );
        }
    }

    #[test]
    fn widths_stay_small_over_long_runs() {
        let flow = RiccatiFlow { c: 0.5 };
        let x0 = 5.0;
        let h0 = 0.5 * (x0 + (x0 * x0 + 4.0f64).sqrt());
        let seed = Enclosure::new(h0 * (1.0 - 1e-13), h0 * (1.0 + 1e-13));
        let enc = flow.integrate_leftward(x0, seed, &[-40.0]).unwrap();
        assert!(
            enc[0].rel_width() < 1e-11,
            "rel width {}",
            enc[0].rel_width()
        );
    }
}
