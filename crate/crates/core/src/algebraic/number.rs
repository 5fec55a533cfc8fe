//! Real algebraic numbers as (minimal polynomial, isolating interval).

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{IntPolynomial, SturmSequence};
use crate::error::{domain, Error, Result};
use crate::qcore::{Dyadic, RInterval, Round};

/// A real algebraic number: the unique root of `minpoly` in `[lo, hi]`.
///
/// `minpoly` is primitive with a positive leading coefficient and is taken
/// to be irreducible; distinct minimal polynomials therefore denote
/// distinct numbers.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraicNumber {
    minpoly: IntPolynomial,
    lo: BigRational,
    hi: BigRational,
}

fn half(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / BigRational::from_integer(BigInt::from(2))
}

impl AlgebraicNumber {
    /// Validates the isolator with a Sturm count.
    pub fn new(minpoly: IntPolynomial, lo: BigRational, hi: BigRational) -> Result<Self> {
        match minpoly.degree() {
            None | Some(0) => return domain("minimal polynomial must have positive degree"),
            _ => {}
        }
        if minpoly != minpoly.normalized() {
            return domain("minimal polynomial must be primitive with positive leading coefficient");
        }
        if lo > hi {
            return domain("isolator endpoints are inverted");
        }
        let roots = SturmSequence::new(&minpoly).count_roots(&lo, &hi);
        if roots != 1 {
            return domain(format!("isolator holds {roots} roots of {minpoly}, expected 1"));
        }
        Ok(AlgebraicNumber { minpoly, lo, hi })
    }

    /// Constructor for callers that have already certified the isolator.
    pub(crate) fn new_unchecked(minpoly: IntPolynomial, lo: BigRational, hi: BigRational) -> Self {
        AlgebraicNumber { minpoly, lo, hi }
    }

    /// A rational lifted to a degree-1 minimal polynomial `d·x − n`.
    pub fn from_rational(r: &BigRational) -> Self {
        let minpoly = IntPolynomial::new(vec![-r.numer().clone(), r.denom().clone()]);
        AlgebraicNumber { minpoly, lo: r.clone(), hi: r.clone() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(n.into()))
    }

    pub fn minpoly(&self) -> &IntPolynomial {
        &self.minpoly
    }

    pub fn isolator(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap_or(0)
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.minpoly.coeffs() {
            [c0, c1] => Some(BigRational::new(-c0.clone(), c1.clone())),
            _ => None,
        }
    }

    /// One exact bisection step; collapses to a point when the root is hit.
    fn bisect(&mut self) {
        if self.lo == self.hi {
            return;
        }
        let p = &self.minpoly;
        let sl = p.sign_at(&self.lo);
        if sl == Sign::NoSign {
            self.hi = self.lo.clone();
            return;
        }
        if p.sign_at(&self.hi) == Sign::NoSign {
            self.lo = self.hi.clone();
            return;
        }
        let m = half(&self.lo, &self.hi);
        match p.sign_at(&m) {
            Sign::NoSign => {
                self.lo = m.clone();
                self.hi = m;
            }
            s if s == sl => self.lo = m,
            _ => self.hi = m,
        }
    }

    /// Narrows the isolator by bisection until its width is at most `width`.
    pub fn refine_isolator(&self, width: &BigRational) -> AlgebraicNumber {
        let mut a = self.clone();
        while &a.hi - &a.lo > *width {
            a.bisect();
        }
        a
    }

    /// True iff the isolated root lies in the rational interval `[c, d]`,
    /// which must be a subset of the isolator.
    fn root_in(&self, c: &BigRational, d: &BigRational) -> bool {
        let sc = self.minpoly.sign_at(c);
        let sd = self.minpoly.sign_at(d);
        sc == Sign::NoSign || sd == Sign::NoSign || sc != sd
    }

    /// Exact equality of the denoted real numbers.
    pub fn alg_equal(&self, other: &AlgebraicNumber) -> bool {
        if self.minpoly != other.minpoly {
            return false;
        }
        let c = std::cmp::max(&self.lo, &other.lo);
        let d = std::cmp::min(&self.hi, &other.hi);
        c <= d && self.root_in(c, d)
    }

    /// Isolator shared by two equal numbers (their intersection).
    pub(crate) fn intersect_isolator(&self, other: &AlgebraicNumber) -> AlgebraicNumber {
        debug_assert!(self.alg_equal(other));
        AlgebraicNumber {
            minpoly: self.minpoly.clone(),
            lo: std::cmp::max(&self.lo, &other.lo).clone(),
            hi: std::cmp::min(&self.hi, &other.hi).clone(),
        }
    }

    /// Exact comparison of the denoted real numbers.
    pub fn cmp_value(&self, other: &AlgebraicNumber) -> Ordering {
        if self.alg_equal(other) {
            return Ordering::Equal;
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            a.bisect();
            b.bisect();
        }
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        if self.lo <= *r && *r <= self.hi && self.minpoly.sign_at(r) == Sign::NoSign {
            return Ordering::Equal;
        }
        let mut a = self.clone();
        loop {
            if a.hi < *r {
                return Ordering::Less;
            }
            if a.lo > *r {
                return Ordering::Greater;
            }
            a.bisect();
        }
    }

    pub fn is_positive(&self) -> bool {
        self.cmp_rational(&BigRational::zero()) == Ordering::Greater
    }

    pub fn is_one(&self) -> bool {
        self.cmp_rational(&BigRational::one()) == Ordering::Equal
    }

    /// `1 / self`; the value must be nonzero.
    pub fn reciprocal(&self) -> Result<AlgebraicNumber> {
        let zero = BigRational::zero();
        if self.cmp_rational(&zero) == Ordering::Equal {
            return domain("reciprocal of zero");
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(&r.recip()));
        }
        // Shrink until the isolator excludes zero.
        let mut a = self.clone();
        while a.lo <= zero && zero <= a.hi {
            a.bisect();
        }
        let minpoly = a.minpoly.reversed().normalized();
        Ok(AlgebraicNumber { minpoly, lo: a.hi.recip(), hi: a.lo.recip() })
    }

    /// Enclosure of width at most `2^(1 − prec)` around the isolated root.
    pub fn refine(&self, prec: u32) -> Result<RInterval> {
        let mag_bits = {
            let m = std::cmp::max(self.lo.abs(), self.hi.abs());
            let n = m.ceil().to_integer();
            n.bits() as u32
        };
        let work = prec + mag_bits + 4;
        if let Some(r) = self.as_rational() {
            return Ok(RInterval::from_rational(&r, work));
        }
        let target = BigRational::new(BigInt::one(), BigInt::one() << prec as u64);
        let coarse = self.refine_isolator(&BigRational::new(BigInt::one(), BigInt::one() << 48u32));
        if coarse.lo == coarse.hi {
            return Ok(RInterval::from_rational(&coarse.lo, work));
        }
        if let Some(enc) = coarse.newton_certify(prec, work) {
            return Ok(enc);
        }
        let fine = coarse.refine_isolator(&target);
        RInterval::from_rational_bounds(&fine.lo, &fine.hi, work)
            .map_err(|e| Error::PrecisionExhausted(e.to_string()))
    }

    /// Fixed-point Newton iteration with doubling precision, then an exact
    /// sign check on `[x − δ, x + δ] ∩ isolator` with `δ = 2^-(prec+1)`.
    fn newton_certify(&self, prec: u32, work: u32) -> Option<RInterval> {
        let p = &self.minpoly;
        let dp = p.derivative();
        let final_bits = work + 16;
        // Evaluation loses up to log2(Σ|cᵢ| · max(1, |x|)^deg) bits to cancellation.
        let coeff_bits = p.coeffs().iter().map(|c| c.bits()).max().unwrap_or(0) as u32;
        let mag = std::cmp::max(self.lo.abs(), self.hi.abs()).ceil().to_integer();
        let guard = coeff_bits + p.coeffs().len() as u32 + mag.bits() as u32 * self.degree() as u32 + 8;
        // The starting point must land inside the isolator, however narrow.
        let w = &self.hi - &self.lo;
        let width_bits = (w.denom().bits() as i64 - w.numer().bits() as i64).max(0) as u32;
        let mut bits = (width_bits + 8).max(64).min(final_bits);
        let mid = half(&self.lo, &self.hi);
        let mut m = (mid.numer() << bits as usize) / mid.denom();
        let mut polish = 2;
        loop {
            let next = (bits * 2).min(final_bits);
            m <<= (next - bits) as usize;
            bits = next;
            let me = &m << guard as usize;
            let fx = p.eval_fixed(&me, bits + guard);
            let dfx = dp.eval_fixed(&me, bits + guard);
            if dfx.is_zero() {
                return None;
            }
            m -= (fx << bits as usize) / dfx;
            let xr = BigRational::new(m.clone(), BigInt::one() << bits as usize);
            if xr < self.lo || xr > self.hi {
                return None;
            }
            if bits == final_bits {
                polish -= 1;
                if polish == 0 {
                    break;
                }
            }
        }
        let x = Dyadic::new(m, -(bits as i64));
        let delta = Dyadic::pow2(-(prec as i64) - 1);
        let a = std::cmp::max(x.sub(&delta).to_rational(), self.lo.clone());
        let b = std::cmp::min(x.add(&delta).to_rational(), self.hi.clone());
        if a > b || !self.root_in(&a, &b) {
            return None;
        }
        RInterval::from_rational_bounds(&a, &b, work).ok()
    }

    /// Cheap double approximation (for display and estimates).
    pub fn to_f64(&self) -> f64 {
        let a = self.refine_isolator(&BigRational::new(BigInt::one(), BigInt::one() << 60u32));
        Dyadic::from_rational(&half(&a.lo, &a.hi), 64, Round::Down).to_f64()
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root of {} in [{}, {}] (~{})", self.minpoly, self.lo, self.hi, self.to_f64())
    }
}
