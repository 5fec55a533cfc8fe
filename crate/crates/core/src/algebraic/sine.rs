//! Minimal polynomials of `sin(πx)` for rational `x`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::cyclotomic::folded_factors;
use super::number::AlgebraicNumber;
use super::poly::{IntPolynomial, SturmSequence};
use crate::error::{domain, Error, Result};
use crate::qcore::elementary::sin_pi;
use crate::qcore::UnitRational;

const START_PREC: u32 = 64;
const MAX_PREC: u32 = 1 << 16;

/// `sin(πp/q)` as an algebraic number.
///
/// `sin(πp/q) = cos(2π(q − 2p)/4q)`, so `2·sin(πp/q)` is a root of the folded
/// relation `Π_{d | 4q} Ψ_d` where `Ψ_d` is the minimal polynomial of
/// `2cos(2π/d)`. The factor is picked by evaluating every candidate on a
/// rigorous enclosure of the target: exactly one can contain 0 once the
/// enclosure is narrow enough, and ties double the precision. The variable
/// is then rescaled by 1/2.
pub fn minpoly_sin(x: &UnitRational) -> Result<AlgebraicNumber> {
    let Some(q) = x.denom().to_u64().filter(|&q| q <= u64::MAX / 4) else {
        return domain(format!("denominator of {x} is too large for the cyclotomic route"));
    };
    let candidates = folded_factors(4 * q)?;
    let two = BigInt::from(2);
    let mut prec = START_PREC;
    while prec <= MAX_PREC {
        let s = sin_pi(x.value(), prec)?;
        let y = s.mul_pow2(1);
        let mut live = candidates.iter().filter(|(_, f)| f.eval_interval(&y).contains_zero());
        match (live.next(), live.next()) {
            (None, _) => {
                return Err(Error::PrecisionExhausted(format!(
                    "no folded cyclotomic factor vanishes on sin(π·{x})"
                )))
            }
            (Some((_, f)), None) => {
                let minpoly: IntPolynomial = f.scale_var(&two).normalized();
                let lo = s.lo().to_rational();
                let hi = s.hi().to_rational();
                if SturmSequence::new(&minpoly).count_roots(&lo, &hi) == 1 {
                    return Ok(AlgebraicNumber::new_unchecked(minpoly, lo, hi));
                }
            }
            _ => {}
        }
        prec *= 2;
    }
    Err(Error::PrecisionExhausted(format!("could not isolate sin(π·{x})")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::Dyadic;
    use num_rational::BigRational;

    fn ur(p: i64, q: i64) -> UnitRational {
        UnitRational::new(p, q).unwrap()
    }

    #[test]
    fn tabled_values() {
        let cases: [((i64, i64), &[i64]); 5] = [
            ((1, 2), &[-1, 1]),
            ((1, 6), &[-1, 2]),
            ((1, 4), &[-1, 0, 2]),
            ((1, 3), &[-3, 0, 4]),
            ((3, 4), &[-1, 0, 2]),
        ];
        for ((p, q), coeffs) in cases {
            let a = minpoly_sin(&ur(p, q)).unwrap();
            assert_eq!(a.minpoly(), &IntPolynomial::from_i64(coeffs), "sin(π·{p}/{q})");
            assert!(a.is_positive());
        }
    }

    #[test]
    fn rational_values_are_degree_one() {
        let one = minpoly_sin(&ur(1, 2)).unwrap();
        assert_eq!(one.as_rational(), Some(BigRational::from_integer(1.into())));
        let half = minpoly_sin(&ur(5, 6)).unwrap();
        assert!(half.alg_equal(&AlgebraicNumber::from_rational(&BigRational::new(1.into(), 2.into()))));
    }

    #[test]
    fn refine_examples() {
        let r = minpoly_sin(&ur(1, 2)).unwrap().refine(64).unwrap();
        assert!(r.contains(&Dyadic::one()));
        assert!(r.width() <= Dyadic::pow2(-63));
        let r = minpoly_sin(&ur(1, 6)).unwrap().refine(64).unwrap();
        assert!(r.contains(&Dyadic::pow2(-1)));
        // sin(π/5) against the direct interval sine.
        let fifth = ur(1, 5);
        let r = minpoly_sin(&fifth).unwrap().refine(256).unwrap();
        let direct = sin_pi(fifth.value(), 256).unwrap();
        assert!(r.overlaps(&direct));
        assert!(r.width() <= Dyadic::pow2(-255));
    }

    #[test]
    fn equality_examples() {
        let s14 = minpoly_sin(&ur(1, 4)).unwrap();
        let s34 = minpoly_sin(&ur(3, 4)).unwrap();
        let s13 = minpoly_sin(&ur(1, 3)).unwrap();
        assert!(s14.alg_equal(&s34));
        assert!(!s13.alg_equal(&s14));
        let s16 = minpoly_sin(&ur(1, 6)).unwrap();
        assert!(s16.alg_equal(&AlgebraicNumber::from_rational(&BigRational::new(1.into(), 2.into()))));
    }
}
