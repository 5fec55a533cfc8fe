//! Deterministic decimal rendering of dyadic values.
//!
//! Midpoints are truncated toward zero, so a printed prefix never claims a
//! digit the value does not have. Interval bounds are rendered in scientific
//! form rounded outward.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::dyadic::{Dyadic, Round};
use super::interval::RInterval;

fn pow10(n: u32) -> BigInt {
    BigInt::from(10).pow(n)
}

fn scale10(r: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        r * BigRational::from_integer(pow10(e as u32))
    } else {
        r / BigRational::from_integer(pow10((-e) as u32))
    }
}

/// `|d|` truncated to `digits` fractional decimal digits, sign kept.
pub fn truncate_fixed(d: &Dyadic, digits: usize) -> String {
    let r = d.to_rational();
    let neg = r.is_negative();
    let scaled = scale10(&r.abs(), digits as i64).floor().to_integer();
    let s = scaled.to_string();
    let s = if s.len() <= digits { format!("{}{}", "0".repeat(digits + 1 - s.len()), s) } else { s };
    let (int, frac) = s.split_at(s.len() - digits);
    let sign = if neg && !scaled.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

/// Scientific notation with `sig` significant digits, rounded in `dir`.
pub fn scientific(d: &Dyadic, sig: usize, dir: Round) -> String {
    assert!(sig >= 1);
    if d.is_zero() {
        return "0".to_string();
    }
    let r = d.to_rational();
    let neg = r.is_negative();
    let mag = r.abs();
    // Estimate floor(log10 |r|) from the binary exponent, then correct.
    let mut e = (d.msb().unwrap() as f64 * std::f64::consts::LOG10_2).floor() as i64;
    loop {
        let lower = scale10(&BigRational::one(), e);
        if mag < lower {
            e -= 1;
            continue;
        }
        if mag >= scale10(&BigRational::one(), e + 1) {
            e += 1;
            continue;
        }
        break;
    }
    let scaled = scale10(&mag, sig as i64 - 1 - e);
    let away = matches!((neg, dir), (false, Round::Up) | (true, Round::Down));
    let mut n = if away { scaled.ceil().to_integer() } else { scaled.floor().to_integer() };
    if n == pow10(sig as u32) {
        n = pow10(sig as u32 - 1);
        e += 1;
    }
    let digits = n.to_string();
    let sign = if neg { "-" } else { "" };
    let (head, tail) = digits.split_at(1);
    if tail.is_empty() {
        format!("{sign}{head}e{e}")
    } else {
        format!("{sign}{head}.{tail}e{e}")
    }
}

/// Upper bound of a width, `sig` digits.
pub fn width_string(w: &Dyadic) -> String {
    scientific(w, 3, Round::Up)
}

/// Number of fractional digits that are identical at both ends of an
/// interval (the certified prefix length).
pub fn certified_digits(r: &RInterval, max_digits: usize) -> usize {
    let mut n = 0;
    for k in 1..=max_digits {
        if truncate_fixed(r.lo(), k) == truncate_fixed(r.hi(), k) {
            n = k;
        } else {
            break;
        }
    }
    n
}

/// Parses a decimal literal such as `-1.25` or `5.88e-39` into an exact rational.
pub fn parse_decimal(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (s, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().ok()?),
        None => (s, 0),
    };
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{int}{frac}").parse().ok()?;
    let v = scale10(&BigRational::new(digits, pow10(frac.len() as u32)), exp);
    Some(if neg { -v } else { v })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dy(n: i64, e: i64) -> Dyadic {
        Dyadic::new(n.into(), e)
    }

    #[test]
    fn truncation_never_rounds_up() {
        // 0.999 ≈ 1023/1024
        assert_eq!(truncate_fixed(&dy(1023, -10), 2), "0.99");
        assert_eq!(truncate_fixed(&dy(-1023, -10), 2), "-0.99");
        assert_eq!(truncate_fixed(&dy(3, -1), 0), "1");
        assert_eq!(truncate_fixed(&dy(1, -10), 3), "0.000");
        assert_eq!(truncate_fixed(&dy(5, 0), 3), "5.000");
    }

    #[test]
    fn scientific_directions() {
        let third = Dyadic::from_rational(&BigRational::new(1.into(), 3.into()), 100, Round::Down);
        assert_eq!(scientific(&third, 3, Round::Down), "3.33e-1");
        assert_eq!(scientific(&third, 3, Round::Up), "3.34e-1");
        assert_eq!(scientific(&third.neg(), 3, Round::Down), "-3.34e-1");
        assert_eq!(scientific(&third.neg(), 3, Round::Up), "-3.33e-1");
        assert_eq!(scientific(&dy(1, 10), 2, Round::Up), "1.1e3");
        assert_eq!(scientific(&dy(1, 0), 1, Round::Up), "1e0");
        assert_eq!(scientific(&dy(999, 0), 2, Round::Up), "1.0e3");
        assert_eq!(scientific(&Dyadic::pow2(-3456), 3, Round::Up), "4.37e-1041");
    }

    #[test]
    fn parse_decimal_literals() {
        assert_eq!(parse_decimal("1.25"), Some(BigRational::new(5.into(), 4.into())));
        assert_eq!(parse_decimal("-3"), Some(BigRational::from_integer((-3).into())));
        assert_eq!(parse_decimal("x"), None);
        assert_eq!(parse_decimal("2.5e-2"), Some(BigRational::new(1.into(), 40.into())));
        assert_eq!(parse_decimal("3E2"), Some(BigRational::from_integer(300.into())));
        assert_eq!(parse_decimal("1e"), None);
    }
}
