//! Rigorous real enclosures `[lo, hi]` with outward rounding.
//!
//! Every arithmetic operation rounds `lo` toward minus infinity and `hi`
//! toward plus infinity at the result precision, so the exact image of the
//! inputs is always contained in the output. For `+ - *` and division the
//! width grows by at most one ulp per endpoint beyond the exact image.

use std::cmp::{max, min};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::dyadic::{Dyadic, Round};
use crate::error::{domain, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct RInterval {
    lo: Dyadic,
    hi: Dyadic,
    prec: u32,
}

impl RInterval {
    /// Builds `[lo, hi]` rounded outward to `prec` bits.
    pub fn new(lo: Dyadic, hi: Dyadic, prec: u32) -> Result<Self> {
        if lo > hi {
            return domain(format!("inverted interval {lo:?} > {hi:?}"));
        }
        Ok(Self::outward(lo, hi, prec))
    }

    pub(crate) fn outward(lo: Dyadic, hi: Dyadic, prec: u32) -> Self {
        debug_assert!(lo <= hi);
        RInterval { lo: lo.round(prec, Round::Down), hi: hi.round(prec, Round::Up), prec }
    }

    pub fn point(x: Dyadic, prec: u32) -> Self {
        Self::outward(x.clone(), x, prec)
    }

    pub fn from_int(n: impl Into<BigInt>, prec: u32) -> Self {
        Self::point(Dyadic::from_int(n), prec)
    }

    pub fn zero(prec: u32) -> Self {
        Self::point(Dyadic::zero(), prec)
    }

    pub fn one(prec: u32) -> Self {
        Self::point(Dyadic::one(), prec)
    }

    pub fn from_rational(r: &BigRational, prec: u32) -> Self {
        RInterval {
            lo: Dyadic::from_rational(r, prec, Round::Down),
            hi: Dyadic::from_rational(r, prec, Round::Up),
            prec,
        }
    }

    /// Smallest enclosure of the rational interval `[a, b]`.
    pub fn from_rational_bounds(a: &BigRational, b: &BigRational, prec: u32) -> Result<Self> {
        if a > b {
            return domain("inverted rational bounds");
        }
        Ok(RInterval {
            lo: Dyadic::from_rational(a, prec, Round::Down),
            hi: Dyadic::from_rational(b, prec, Round::Up),
            prec,
        })
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    /// Re-rounds outward to a new precision (never narrows below the value set).
    pub fn with_prec(&self, prec: u32) -> Self {
        Self::outward(self.lo.clone(), self.hi.clone(), prec)
    }

    /// Exact width `hi - lo`.
    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    /// Exact midpoint.
    pub fn mid(&self) -> Dyadic {
        Dyadic::midpoint(&self.lo, &self.hi)
    }

    /// Exact radius `(hi - lo) / 2`.
    pub fn rad(&self) -> Dyadic {
        self.width().mul_pow2(-1)
    }

    /// Upper bound on `|x|` over the interval.
    pub fn mag(&self) -> Dyadic {
        max(self.lo.abs(), self.hi.abs())
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_rational(&self, r: &BigRational) -> bool {
        self.lo.to_rational() <= *r && *r <= self.hi.to_rational()
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// True iff every point of `self` lies in `other`.
    pub fn is_subset(&self, other: &RInterval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn overlaps(&self, other: &RInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn intersect(&self, other: &RInterval) -> Option<RInterval> {
        let lo = max(&self.lo, &other.lo).clone();
        let hi = min(&self.hi, &other.hi).clone();
        (lo <= hi).then(|| RInterval { lo, hi, prec: self.prec.max(other.prec) })
    }

    /// Convex hull of both intervals.
    pub fn hull(&self, other: &RInterval) -> RInterval {
        RInterval {
            lo: min(&self.lo, &other.lo).clone(),
            hi: max(&self.hi, &other.hi).clone(),
            prec: self.prec.max(other.prec),
        }
    }

    /// Widens by `r` on both sides.
    pub fn inflate(&self, r: &Dyadic) -> RInterval {
        Self::outward(self.lo.sub(r), self.hi.add(r), self.prec)
    }

    /// `[-r, r]`
    pub fn ball(r: &Dyadic, prec: u32) -> RInterval {
        let r = r.abs();
        Self::outward(r.neg(), r, prec)
    }

    /// One unit in the last place of the largest endpoint magnitude.
    pub fn ulp(&self) -> Dyadic {
        match self.mag().msb() {
            Some(m) => Dyadic::pow2(m - self.prec as i64 + 1),
            None => Dyadic::pow2(-(self.prec as i64)),
        }
    }

    fn result_prec(&self, other: &RInterval) -> u32 {
        self.prec.max(other.prec)
    }

    pub fn abs(&self) -> RInterval {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            -self
        } else {
            RInterval { lo: Dyadic::zero(), hi: self.mag(), prec: self.prec }
        }
    }

    pub fn square(&self) -> RInterval {
        let a = self.abs();
        RInterval {
            lo: a.lo.mul(&a.lo).round(self.prec, Round::Down),
            hi: a.hi.mul(&a.hi).round(self.prec, Round::Up),
            prec: self.prec,
        }
    }

    pub fn div(&self, other: &RInterval) -> Result<RInterval> {
        if other.contains_zero() {
            return domain("division by an interval containing 0");
        }
        let p = self.result_prec(other);
        if !self.lo.is_negative() && other.lo.is_positive() {
            return Ok(RInterval {
                lo: Dyadic::div_round(&self.lo, &other.hi, p, Round::Down),
                hi: Dyadic::div_round(&self.hi, &other.lo, p, Round::Up),
                prec: p,
            });
        }
        let pairs = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        let lo = pairs.iter().map(|(a, b)| Dyadic::div_round(a, b, p, Round::Down)).min().unwrap();
        let hi = pairs.iter().map(|(a, b)| Dyadic::div_round(a, b, p, Round::Up)).max().unwrap();
        Ok(RInterval { lo, hi, prec: p })
    }

    /// Division by a nonzero integer.
    pub fn div_int(&self, n: i64) -> RInterval {
        assert!(n != 0, "division by zero");
        let d = Dyadic::from_int(n);
        let (a, b) = if n > 0 { (&self.lo, &self.hi) } else { (&self.hi, &self.lo) };
        RInterval {
            lo: Dyadic::div_round(a, &d, self.prec, Round::Down),
            hi: Dyadic::div_round(b, &d, self.prec, Round::Up),
            prec: self.prec,
        }
    }

    pub fn mul_int(&self, n: impl Into<BigInt>) -> RInterval {
        self * &RInterval::point(Dyadic::from_int(n), self.prec.max(1))
    }

    pub fn mul_rational(&self, r: &BigRational) -> RInterval {
        (self * &RInterval::from_int(r.numer().clone(), self.prec))
            .div(&RInterval::from_int(r.denom().clone(), self.prec))
            .expect("rational denominators are positive")
    }

    /// Exact scaling by `2^k`.
    pub fn mul_pow2(&self, k: i64) -> RInterval {
        RInterval { lo: self.lo.mul_pow2(k), hi: self.hi.mul_pow2(k), prec: self.prec }
    }

    pub fn recip(&self) -> Result<RInterval> {
        RInterval::one(self.prec).div(self)
    }

    /// Lower endpoint strictly positive.
    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn to_f64(&self) -> f64 {
        self.mid().to_f64()
    }
}

impl Add for &RInterval {
    type Output = RInterval;

    fn add(self, other: &RInterval) -> RInterval {
        let p = self.result_prec(other);
        RInterval {
            lo: self.lo.add(&other.lo).round(p, Round::Down),
            hi: self.hi.add(&other.hi).round(p, Round::Up),
            prec: p,
        }
    }
}

impl Sub for &RInterval {
    type Output = RInterval;

    fn sub(self, other: &RInterval) -> RInterval {
        let p = self.result_prec(other);
        RInterval {
            lo: self.lo.sub(&other.hi).round(p, Round::Down),
            hi: self.hi.sub(&other.lo).round(p, Round::Up),
            prec: p,
        }
    }
}

impl Mul for &RInterval {
    type Output = RInterval;

    fn mul(self, other: &RInterval) -> RInterval {
        let p = self.result_prec(other);
        if !self.lo.is_negative() && !other.lo.is_negative() {
            return RInterval {
                lo: self.lo.mul(&other.lo).round(p, Round::Down),
                hi: self.hi.mul(&other.hi).round(p, Round::Up),
                prec: p,
            };
        }
        let prods = [
            self.lo.mul(&other.lo),
            self.lo.mul(&other.hi),
            self.hi.mul(&other.lo),
            self.hi.mul(&other.hi),
        ];
        let lo = prods.iter().min().unwrap().round(p, Round::Down);
        let hi = prods.iter().max().unwrap().round(p, Round::Up);
        RInterval { lo, hi, prec: p }
    }
}

impl Neg for &RInterval {
    type Output = RInterval;

    fn neg(self) -> RInterval {
        RInterval { lo: self.hi.neg(), hi: self.lo.neg(), prec: self.prec }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RInterval {
            type Output = RInterval;
            fn $m(self, other: RInterval) -> RInterval {
                (&self).$m(&other)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RInterval {
    type Output = RInterval;
    fn neg(self) -> RInterval {
        -&self
    }
}

impl fmt::Debug for RInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{:e}, {:e}] (width ~{:e}, {} bits)",
            self.lo.to_f64(),
            self.hi.to_f64(),
            self.width().to_f64(),
            self.prec
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn add_points() {
        let a = RInterval::from_int(2, 64);
        let b = RInterval::from_int(3, 64);
        let s = &a + &b;
        assert!(s.contains(&Dyadic::from_int(5)));
        assert!(s.is_point());
    }

    #[test]
    fn mul_mixed_signs() {
        let a = RInterval::new(Dyadic::from_int(-2), Dyadic::from_int(3), 64).unwrap();
        let b = RInterval::new(Dyadic::from_int(-5), Dyadic::from_int(1), 64).unwrap();
        let p = &a * &b;
        assert_eq!(p.lo(), &Dyadic::from_int(-15));
        assert_eq!(p.hi(), &Dyadic::from_int(10));
    }

    #[test]
    fn division_encloses_quotient() {
        let a = RInterval::from_rational(&q(1, 3), 80);
        let b = RInterval::from_rational(&q(-7, 5), 80);
        let c = a.div(&b).unwrap();
        assert!(c.contains_rational(&q(-5, 21)));
        assert!(c.width().to_f64() < 1e-22);
    }

    #[test]
    fn division_by_zero_interval_is_domain_error() {
        let a = RInterval::one(64);
        let b = RInterval::new(Dyadic::from_int(-1), Dyadic::from_int(1), 64).unwrap();
        assert!(a.div(&b).is_err());
        assert!(a.div(&RInterval::zero(64)).is_err());
    }

    #[test]
    fn square_straddling_zero() {
        let a = RInterval::new(Dyadic::from_int(-3), Dyadic::from_int(2), 64).unwrap();
        let s = a.square();
        assert_eq!(s.lo(), &Dyadic::zero());
        assert_eq!(s.hi(), &Dyadic::from_int(9));
    }

    proptest::proptest! {
        #[test]
        fn containment_monotone(
            an in -1000i64..1000, ad in 1i64..1000,
            bn in -1000i64..1000, bd in 1i64..1000,
            w in 1i64..50,
        ) {
            let (ra, rb) = (q(an, ad), q(bn, bd));
            let a = RInterval::from_rational(&ra, 96);
            let b = RInterval::from_rational(&rb, 96);
            let widen = Dyadic::pow2(-w);
            let a2 = a.inflate(&widen);
            let b2 = b.inflate(&widen);
            proptest::prop_assert!((&a + &b).is_subset(&(&a2 + &b2)));
            proptest::prop_assert!((&a - &b).is_subset(&(&a2 - &b2)));
            proptest::prop_assert!((&a * &b).is_subset(&(&a2 * &b2)));
            if !b2.contains_zero() {
                proptest::prop_assert!(a.div(&b).unwrap().is_subset(&a2.div(&b2).unwrap()));
            }
            let exact_sum = &ra + &rb;
            proptest::prop_assert!((&a + &b).contains_rational(&exact_sum));
            proptest::prop_assert!((&a * &b).contains_rational(&(&ra * &rb)));
        }
    }

    #[test]
    fn negative_rational_enclosure() {
        let r = q(-22, 7);
        let i = RInterval::from_rational(&r, 64);
        assert!(i.contains_rational(&r));
        assert!(i.lo().to_rational() < r);
        assert!(i.hi().to_rational().abs() < r.abs() + q(1, 1_000_000));
    }
}
