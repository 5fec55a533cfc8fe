//! Rigorous constants and elementary functions on [`RInterval`].
//!
//! Each kernel evaluates a convergent series in interval arithmetic at the
//! target precision plus guard bits, adds an explicit enclosure of the
//! truncated tail, and rounds outward to the target. Point evaluations must
//! come out within 4 ulp; otherwise the guard is widened and the evaluation
//! retried once before giving up with `PrecisionExhausted`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::dyadic::{Dyadic, Round};
use super::interval::RInterval;
use crate::error::{domain, Error, Result};

const GUARD_BITS: u32 = 40;

/// Width check: at most 4 ulp, with the ulp floored at the unit scale.
fn within_ulps(r: &RInterval, prec: u32) -> bool {
    let unit = Dyadic::pow2(-(prec as i64));
    let ulp = std::cmp::max(r.ulp(), unit);
    r.width() <= ulp.mul_pow2(2)
}

fn with_retry(prec: u32, what: &str, eval: impl Fn(u32) -> RInterval) -> Result<RInterval> {
    for guard in [GUARD_BITS, 4 * GUARD_BITS + prec / 8] {
        let r = eval(prec + guard).with_prec(prec);
        if within_ulps(&r, prec) {
            return Ok(r);
        }
    }
    Err(Error::PrecisionExhausted(format!("{what} at {prec} bits")))
}

fn tiny(w: u32) -> Dyadic {
    Dyadic::pow2(-(w as i64) - 4)
}

/// `Σ (±1)^i x^(2i+1) / (2i+1)` for `x = num/den` with `0 ≤ x ≤ 1/2`,
/// alternating when `alternating`, in fixed point.
///
/// With `P_i = 2^W x^(2i+1)` and `p_i` its truncated recurrence, the lag
/// `P_i − p_i` stays in `[0, i+1]`, so each truncated term is low by less
/// than 2 units; the tail after `p_n = 0` is at most `2(n+1)` units.
fn arc_series(num: &BigInt, den: &BigInt, w: u32, alternating: bool) -> RInterval {
    debug_assert!(!num.is_negative() && (num << 1u32) <= *den);
    let bits = w + 2 * (64 - (w as u64).leading_zeros()) + 8;
    let (n2, d2) = (num * num, den * den);
    let mut p = (num << bits as u64) / den;
    let mut sum = BigInt::zero();
    let mut i: u64 = 0;
    while !p.is_zero() {
        let t = &p / (2 * i + 1);
        if alternating && i % 2 == 1 {
            sum -= t;
        } else {
            sum += t;
        }
        p = p * &n2 / &d2;
        i += 1;
    }
    let err = BigInt::from(4 * i + 2);
    let e = -(bits as i64);
    RInterval::outward(Dyadic::new(&sum - &err, e), Dyadic::new(sum + err, e), w)
}

fn arc_series_inv(k: u64, w: u32, alternating: bool) -> RInterval {
    arc_series(&BigInt::one(), &BigInt::from(k), w, alternating)
}

fn pi_at(w: u32) -> RInterval {
    let a = arc_series_inv(18, w, true).mul_int(48);
    let b = arc_series_inv(57, w, true).mul_int(32);
    let c = arc_series_inv(239, w, true).mul_int(20);
    &(&a + &b) - &c
}

fn ln2_at(w: u32) -> RInterval {
    let a = arc_series_inv(26, w, false).mul_int(18);
    let b = arc_series_inv(4801, w, false).mul_int(2);
    let c = arc_series_inv(8749, w, false).mul_int(8);
    &(&a - &b) + &c
}

fn e_at(w: u32) -> RInterval {
    let mut term = RInterval::one(w);
    let mut sum = RInterval::one(w);
    let mut n = 1i64;
    loop {
        term = term.div_int(n);
        sum = &sum + &term;
        n += 1;
        if term.mag() < tiny(w) {
            break;
        }
    }
    sum.inflate(&term.mag().mul_pow2(1))
}

fn constant(prec: u32, at: fn(u32) -> RInterval) -> RInterval {
    let mut guard = GUARD_BITS;
    loop {
        let r = at(prec + guard).with_prec(prec);
        if within_ulps(&r, prec) {
            return r;
        }
        guard *= 2;
    }
}

/// Enclosure of π.
pub fn pi(prec: u32) -> RInterval {
    constant(prec, pi_at)
}

/// Enclosure of ln 2.
pub fn ln2(prec: u32) -> RInterval {
    constant(prec, ln2_at)
}

/// Enclosure of e.
pub fn e(prec: u32) -> RInterval {
    constant(prec, e_at)
}

/// log of a positive dyadic point at working precision `w`.
fn log_point(d: &Dyadic, w: u32) -> RInterval {
    debug_assert!(d.is_positive());
    let mut k = d.msb().expect("positive");
    let mut t = d.mul_pow2(-k);
    // t in [1, 2); fold into [2/3, 4/3) so |s| <= 1/5.
    if t.mul(&Dyadic::from_int(3)) > Dyadic::from_int(4) {
        t = t.mul_pow2(-1);
        k += 1;
    }
    // s = (t − 1)/(t + 1) exactly; t = m·2^e with e ≤ 0 after folding.
    let (m, e) = (t.mantissa().clone(), t.exponent());
    let scale = BigInt::one() << (-e).max(0) as u64;
    let m = if e > 0 { m << e as u64 } else { m };
    let (num, den) = (&m - &scale, &m + &scale);
    let atanh = arc_series(&num.abs(), &den, w, false).mul_pow2(1);
    let series = if num.is_negative() { -atanh } else { atanh };
    if k == 0 {
        series
    } else {
        &series + &ln2_at(w).mul_int(k)
    }
}

fn exp_point(x: &Dyadic, w: u32) -> RInterval {
    let Some(m) = x.msb() else {
        return RInterval::one(w);
    };
    let s = (m + 9).max(0) as u32;
    let wp = w + s + 8;
    let r = RInterval::point(x.mul_pow2(-(s as i64)), wp);
    let mut term = RInterval::one(wp);
    let mut sum = RInterval::one(wp);
    let mut n = 1i64;
    loop {
        term = (&term * &r).div_int(n);
        sum = &sum + &term;
        n += 1;
        if term.mag() < tiny(wp) {
            break;
        }
    }
    let mut y = sum.inflate(&term.mag().mul_pow2(1));
    for _ in 0..s {
        y = y.square();
    }
    y.with_prec(w)
}

/// Taylor series of sin (odd) or cos (even) at a point with |c| ≤ 8.
fn trig_point(c: &Dyadic, w: u32, odd: bool) -> RInterval {
    let x = RInterval::point(c.clone(), w);
    let x2 = x.square();
    let mut term = if odd { x } else { RInterval::one(w) };
    let mut sum = term.clone();
    let mut n: i64 = if odd { 1 } else { 0 };
    let mut i = 1;
    loop {
        term = (&term * &x2).div_int((n + 1) * (n + 2));
        n += 2;
        sum = if i % 2 == 1 { &sum - &term } else { &sum + &term };
        i += 1;
        // Past the peak ((n+1)(n+2) > 64 ≥ c²) the series alternates with
        // decreasing terms, so the next term bounds the tail.
        if n > 8 && term.mag() < tiny(w) {
            break;
        }
    }
    let next = (&term * &x2).div_int((n + 1) * (n + 2));
    sum.inflate(&next.mag())
}

fn clamp_unit(r: RInterval) -> RInterval {
    let one = Dyadic::one();
    let lo = std::cmp::max(r.lo().clone(), one.neg());
    let hi = std::cmp::min(r.hi().clone(), one);
    RInterval::outward(lo, hi, r.prec())
}

impl RInterval {
    /// Natural logarithm; the interval must be strictly positive.
    pub fn log(&self) -> Result<RInterval> {
        if !self.lo().is_positive() {
            return domain("log of an interval touching or below 0");
        }
        let prec = self.prec();
        let lo = with_retry(prec, "log", |w| log_point(self.lo(), w))?;
        let hi = if self.is_point() {
            lo.clone()
        } else {
            with_retry(prec, "log", |w| log_point(self.hi(), w))?
        };
        Ok(RInterval::outward(lo.lo().clone(), hi.hi().clone(), prec))
    }

    pub fn exp(&self) -> Result<RInterval> {
        let limit = Dyadic::pow2(40);
        if self.mag() > limit {
            return domain("exp argument too large");
        }
        let prec = self.prec();
        let lo = with_retry(prec, "exp", |w| exp_point(self.lo(), w))?;
        let hi = if self.is_point() {
            lo.clone()
        } else {
            with_retry(prec, "exp", |w| exp_point(self.hi(), w))?
        };
        Ok(RInterval::outward(lo.lo().clone(), hi.hi().clone(), prec))
    }

    pub fn sin(&self) -> Result<RInterval> {
        self.trig(true)
    }

    pub fn cos(&self) -> Result<RInterval> {
        self.trig(false)
    }

    /// Evaluates at the reduced midpoint and widens by the radius
    /// (sin and cos are 1-Lipschitz).
    fn trig(&self, odd: bool) -> Result<RInterval> {
        let prec = self.prec();
        if self.width() > Dyadic::from_int(4) {
            return Ok(RInterval::outward(Dyadic::one().neg(), Dyadic::one(), prec));
        }
        let m = self.mid();
        let mut slack = self.rad();
        let c = if m.abs() <= Dyadic::from_int(4) {
            m
        } else {
            let wr = prec + GUARD_BITS + m.msb().unwrap_or(0).max(0) as u32;
            let two_pi = pi_at(wr).mul_pow2(1);
            let q = RInterval::point(m.clone(), wr).div(&two_pi)?.mid();
            let k = q.add(&Dyadic::pow2(-1)).floor_int();
            let y = &RInterval::point(m, wr) - &two_pi.mul_int(k);
            slack = slack.add(&y.rad());
            y.mid()
        };
        let name = if odd { "sin" } else { "cos" };
        let v = with_retry(prec, name, |w| trig_point(&c, w, odd))?;
        let v = v.inflate(&slack.round(prec, Round::Up));
        Ok(clamp_unit(v))
    }
}

/// Direct enclosure of `sin(π·x)` for a rational `x`.
pub fn sin_pi(x: &BigRational, prec: u32) -> Result<RInterval> {
    pi_multiple(x, prec)?.sin().map(|r| r.with_prec(prec))
}

/// Direct enclosure of `cos(π·x)` for a rational `x`.
pub fn cos_pi(x: &BigRational, prec: u32) -> Result<RInterval> {
    pi_multiple(x, prec)?.cos().map(|r| r.with_prec(prec))
}

fn pi_multiple(x: &BigRational, prec: u32) -> Result<RInterval> {
    let int_bits = x.abs().ceil().to_integer().bits() as u32;
    let w = prec + int_bits + 8;
    Ok(pi(w).mul_rational(x))
}
