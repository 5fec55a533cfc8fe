//! Reduced fractions and the open-unit-interval refinement.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{domain, Error, Result};

/// Builds the reduced representative of `num/den` with a positive denominator.
pub fn reduce(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<BigRational> {
    let den = den.into();
    if den.is_zero() {
        return domain("zero denominator");
    }
    // `Ratio::new` divides out the gcd and moves the sign to the numerator.
    Ok(BigRational::new(num.into(), den))
}

/// True iff `0 < x < 1`.
pub fn in_unit_interval(x: &BigRational) -> bool {
    x.is_positive() && *x < BigRational::one()
}

/// A reduced rational strictly between 0 and 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitRational(BigRational);

impl UnitRational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        Self::from_rational(reduce(num, den)?)
    }

    pub fn from_rational(r: BigRational) -> Result<Self> {
        if !in_unit_interval(&r) {
            return domain(format!("{r} is not in the open interval (0, 1)"));
        }
        Ok(UnitRational(r))
    }

    pub fn half() -> Self {
        UnitRational(BigRational::new(1.into(), 2.into()))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// The mirror point `1 - x`.
    pub fn complement(&self) -> Self {
        UnitRational(BigRational::one() - &self.0)
    }

    pub fn is_half(&self) -> bool {
        *self.denom() == BigInt::from(2)
    }

    /// Every reduced fraction in (0, 1) with denominator at most `max_den`,
    /// sorted ascending.
    pub fn enumerate(max_den: u64) -> Vec<UnitRational> {
        let mut out = Vec::new();
        for q in 2..=max_den {
            for p in 1..q {
                if num_integer::gcd(p, q) == 1 {
                    out.push(UnitRational(BigRational::new(p.into(), q.into())));
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for UnitRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

/// Parses `p/q`; the fraction is reduced before the range check.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("malformed fraction `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    reduce(num, den)
}

impl FromStr for UnitRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        UnitRational::from_rational(parse_rational(s)?)
    }
}

impl From<UnitRational> for BigRational {
    fn from(x: UnitRational) -> BigRational {
        x.0
    }
}

impl Serialize for UnitRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for UnitRational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
