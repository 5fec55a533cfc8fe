//! Baker periods `Σ βᵢ log αᵢ` with rational `βᵢ` and positive real
//! algebraic `αᵢ`: exact normalization, nullity certification, and the
//! zero-or-transcendental classification.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebraic::{minpoly_sin, AlgebraicNumber, IntPolynomial};
use crate::error::{domain, Error, Result};
use crate::json::{IntervalJson, JsonInt};
use crate::qcore::{Dyadic, RInterval, UnitRational};

/// One `β log α` summand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub beta: BigRational,
    pub alpha: AlgebraicNumber,
}

impl Term {
    pub fn new(beta: BigRational, alpha: AlgebraicNumber) -> Self {
        Term { beta, alpha }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BakerPeriod {
    terms: Vec<Term>,
    // Set once normalization has cancelled equal logarithms against each other.
    cancelled: bool,
}

impl BakerPeriod {
    pub fn new(terms: Vec<Term>) -> Self {
        BakerPeriod { terms, cancelled: false }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True if normalization removed terms by merging equal `α`s whose
    /// coefficients summed to zero.
    pub fn had_cancellation(&self) -> bool {
        self.cancelled
    }

    /// Merges equal `α`s, drops zero coefficients and `log 1` terms, and
    /// sorts by the value of `α`. Idempotent and independent of term order.
    pub fn normalize(&self) -> Result<BakerPeriod> {
        let mut groups: Vec<(Term, usize)> = Vec::new();
        for t in &self.terms {
            if !t.alpha.is_positive() {
                return domain(format!("logarithm of non-positive algebraic number {:?}", t.alpha));
            }
            if t.beta.is_zero() || t.alpha.is_one() {
                continue;
            }
            match groups.iter_mut().find(|(g, _)| g.alpha.alg_equal(&t.alpha)) {
                Some((g, n)) => {
                    g.beta += &t.beta;
                    g.alpha = g.alpha.intersect_isolator(&t.alpha);
                    *n += 1;
                }
                None => groups.push((t.clone(), 1)),
            }
        }
        let mut cancelled = self.cancelled;
        let mut terms = Vec::with_capacity(groups.len());
        for (g, n) in groups {
            if g.beta.is_zero() {
                cancelled |= n > 1;
            } else {
                terms.push(g);
            }
        }
        terms.sort_by(|a, b| a.alpha.cmp_value(&b.alpha));
        Ok(BakerPeriod { terms, cancelled })
    }

    /// Enclosure of the real value at working precision `prec`.
    pub fn enclose(&self, prec: u32) -> Result<RInterval> {
        let mut acc = RInterval::zero(prec);
        for t in &self.terms {
            let log = t.alpha.refine(prec)?.with_prec(prec).log()?;
            acc = &acc + &log.mul_rational(&t.beta);
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> PeriodJson {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let (a, b) = t.alpha.isolator();
                TermJson {
                    beta_num: JsonInt::from(t.beta.numer()),
                    beta_den: JsonInt::from(t.beta.denom()),
                    minpoly: t.alpha.minpoly().coeffs().iter().map(JsonInt::from).collect(),
                    isolator: [a.numer(), a.denom(), b.numer(), b.denom()].map(JsonInt::from),
                }
            })
            .collect();
        PeriodJson { terms }
    }

    /// Rebuilds a period; every isolator is re-validated.
    pub fn from_json(j: &PeriodJson) -> Result<BakerPeriod> {
        let ratio = |n: &JsonInt, d: &JsonInt| {
            if d.0.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(BigRational::new(n.0.clone(), d.0.clone()))
        };
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            let beta = ratio(&t.beta_num, &t.beta_den)?;
            let [an, ad, bn, bd] = &t.isolator;
            let poly = IntPolynomial::new(t.minpoly.iter().map(|c| c.0.clone()).collect());
            let alpha = AlgebraicNumber::new(poly, ratio(an, ad)?, ratio(bn, bd)?)?;
            terms.push(Term::new(beta, alpha));
        }
        Ok(BakerPeriod::new(terms))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub beta_num: JsonInt,
    pub beta_den: JsonInt,
    pub minpoly: Vec<JsonInt>,
    pub isolator: [JsonInt; 4],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodJson {
    pub terms: Vec<TermJson>,
}

/// `log α − log β`, normalized.
pub fn log_difference(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Result<BakerPeriod> {
    BakerPeriod::new(vec![
        Term::new(BigRational::one(), a.clone()),
        Term::new(-BigRational::one(), b.clone()),
    ])
    .normalize()
}

/// `f(x₂) − f(x₁) = log sin(πx₁) − log sin(πx₂)`, normalized.
pub fn f_difference(x1: &UnitRational, x2: &UnitRational) -> Result<BakerPeriod> {
    log_difference(&minpoly_sin(x1)?, &minpoly_sin(x2)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NullityKind {
    Null,
    NonNull,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NullityReason {
    /// Equal logarithms cancelled exactly during normalization.
    ExactSymmetry,
    /// Numeric enclosure (decisive for NonNull, inconclusive for Unknown).
    IntervalSeparation,
    /// Empty after dropping trivial terms, without any cancellation.
    Merged,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NullityVerdict {
    pub kind: NullityKind,
    pub witness: Option<RInterval>,
    pub reason: NullityReason,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NullityJson {
    pub kind: NullityKind,
    pub reason: NullityReason,
    pub witness: Option<IntervalJson>,
}

impl NullityVerdict {
    pub fn to_json(&self) -> NullityJson {
        NullityJson {
            kind: self.kind,
            reason: self.reason,
            witness: self.witness.as_ref().map(IntervalJson::from),
        }
    }
}

fn separated(r: &RInterval, prec: u32) -> bool {
    let margin = Dyadic::pow2(1 - prec as i64);
    *r.lo() >= margin || *r.hi() <= margin.neg()
}

/// Exact Null for empty normalized periods; otherwise NonNull when an
/// enclosure excludes 0 by at least `2^(1−prec)`, retried at 2× and 4× the
/// starting precision.
pub fn nullity(p: &BakerPeriod, prec: u32) -> Result<NullityVerdict> {
    let p = p.normalize()?;
    if p.is_empty() {
        let reason = if p.had_cancellation() {
            NullityReason::ExactSymmetry
        } else {
            NullityReason::Merged
        };
        return Ok(NullityVerdict { kind: NullityKind::Null, witness: None, reason });
    }
    for w in [prec, 2 * prec, 4 * prec] {
        let r = p.enclose(w)?;
        if separated(&r, w) {
            return Ok(NullityVerdict {
                kind: NullityKind::NonNull,
                witness: Some(r),
                reason: NullityReason::IntervalSeparation,
            });
        }
    }
    Ok(NullityVerdict {
        kind: NullityKind::Unknown,
        witness: None,
        reason: NullityReason::IntervalSeparation,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Classification {
    Zero,
    /// A non-null Baker period; transcendence is Baker's theorem, taken as
    /// an axiom.
    Transcendental,
    Unknown,
}

pub fn classify_verdict(v: &NullityVerdict) -> Classification {
    match v.kind {
        NullityKind::Null => Classification::Zero,
        NullityKind::NonNull => Classification::Transcendental,
        NullityKind::Unknown => Classification::Unknown,
    }
}

pub fn classify(p: &BakerPeriod, prec: u32) -> Result<Classification> {
    Ok(classify_verdict(&nullity(p, prec)?))
}

/// Outcome for the pair `{f(x), f(y)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairVerdict {
    /// `y = x` or `y = 1 − x`: the two values coincide.
    NotApplicable,
    /// `f(y) − f(x)` is a non-null Baker period, so `f(x)` and `f(y)` are not
    /// both algebraic.
    AtLeastOneTranscendental { witness: RInterval },
    Undetermined,
}

pub fn pair_classify(x: &UnitRational, y: &UnitRational, prec: u32) -> Result<PairVerdict> {
    if x == y || *y == x.complement() {
        return Ok(PairVerdict::NotApplicable);
    }
    let v = nullity(&f_difference(x, y)?, prec)?;
    match v.kind {
        NullityKind::NonNull => Ok(PairVerdict::AtLeastOneTranscendental {
            witness: v.witness.expect("NonNull carries a witness"),
        }),
        NullityKind::Unknown => Ok(PairVerdict::Undetermined),
        NullityKind::Null => Err(Error::Disagreement(format!(
            "f({y}) − f({x}) cancelled exactly although {y} ∉ {{{x}, 1 − {x}}}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::decimal::parse_decimal;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn ur(p: i64, q: i64) -> UnitRational {
        UnitRational::new(p, q).unwrap()
    }

    fn sqrt2() -> AlgebraicNumber {
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        AlgebraicNumber::new(IntPolynomial::from_i64(&[-2, 0, 1]), q(1, 1), q(2, 1)).unwrap()
    }

    fn one() -> BigRational {
        BigRational::one()
    }

    #[test]
    fn normalization_examples() {
        let p = BakerPeriod::new(vec![Term::new(one(), sqrt2()), Term::new(-one(), sqrt2())]);
        let n = p.normalize().unwrap();
        assert!(n.is_empty() && n.had_cancellation());

        let p = BakerPeriod::new(vec![Term::new(one(), AlgebraicNumber::from_int(1))]);
        let n = p.normalize().unwrap();
        assert!(n.is_empty() && !n.had_cancellation());

        let s14 = minpoly_sin(&ur(1, 4)).unwrap();
        let s34 = minpoly_sin(&ur(3, 4)).unwrap();
        let p = BakerPeriod::new(vec![Term::new(one(), s14.clone()), Term::new(one(), s34)]);
        let n = p.normalize().unwrap();
        assert_eq!(n.terms().len(), 1);
        assert_eq!(n.terms()[0].beta, BigRational::from_integer(2.into()));
        assert!(n.terms()[0].alpha.alg_equal(&s14));
        assert_eq!(n.normalize().unwrap(), n);
    }

    #[test]
    fn non_positive_alpha_is_rejected() {
        let p = BakerPeriod::new(vec![Term::new(one(), AlgebraicNumber::from_int(-3))]);
        assert!(matches!(p.normalize(), Err(Error::Domain(_))));
        let p = BakerPeriod::new(vec![Term::new(one(), AlgebraicNumber::from_int(0))]);
        assert!(p.normalize().is_err());
    }

    #[test]
    fn f_difference_examples() {
        let d = f_difference(&ur(1, 4), &ur(3, 4)).unwrap();
        assert!(d.is_empty());
        assert!(f_difference(&ur(2, 7), &ur(2, 7)).unwrap().is_empty());
        let d = f_difference(&ur(1, 3), &ur(1, 4)).unwrap();
        assert_eq!(d.terms().len(), 2);
        // Sorted by value: 1/√2 < √3/2.
        assert_eq!(d.terms()[0].beta, -one());
        assert_eq!(d.terms()[0].alpha.minpoly(), &IntPolynomial::from_i64(&[-1, 0, 2]));
        assert_eq!(d.terms()[1].alpha.minpoly(), &IntPolynomial::from_i64(&[-3, 0, 4]));
    }

    #[test]
    fn nullity_examples() {
        let v = nullity(&f_difference(&ur(1, 4), &ur(3, 4)).unwrap(), 64).unwrap();
        assert_eq!((v.kind, v.reason), (NullityKind::Null, NullityReason::ExactSymmetry));
        let v = nullity(&BakerPeriod::zero(), 64).unwrap();
        assert_eq!((v.kind, v.reason), (NullityKind::Null, NullityReason::Merged));

        let v = nullity(&f_difference(&ur(1, 3), &ur(1, 4)).unwrap(), 64).unwrap();
        assert_eq!(v.kind, NullityKind::NonNull);
        let w = v.witness.unwrap();
        // (1/2) log(3/2) = 0.20273255405408219...
        let want = parse_decimal("0.2027325540540821909890").unwrap();
        let eps = BigRational::new(1.into(), BigInt::from(10).pow(20));
        assert!(w.lo().to_rational() <= &want + &eps && &want - &eps <= w.hi().to_rational());
        assert!(w.is_positive());
    }

    #[test]
    fn classification_examples() {
        let c = |a, b, c, d| classify(&f_difference(&ur(a, b), &ur(c, d)).unwrap(), 64).unwrap();
        assert_eq!(c(1, 4, 3, 4), Classification::Zero);
        assert_eq!(c(1, 3, 1, 4), Classification::Transcendental);
        assert_eq!(c(2, 5, 3, 5), Classification::Zero);
    }

    #[test]
    fn pair_examples() {
        assert!(matches!(
            pair_classify(&ur(1, 2), &ur(1, 3), 64).unwrap(),
            PairVerdict::AtLeastOneTranscendental { .. }
        ));
        assert_eq!(pair_classify(&ur(1, 4), &ur(3, 4), 64).unwrap(), PairVerdict::NotApplicable);
        assert_eq!(pair_classify(&ur(2, 9), &ur(2, 9), 64).unwrap(), PairVerdict::NotApplicable);
        match pair_classify(&ur(1, 3), &ur(1, 5), 64).unwrap() {
            PairVerdict::AtLeastOneTranscendental { witness } => assert!(!witness.contains_zero()),
            v => panic!("unexpected {v:?}"),
        }
    }

    #[test]
    fn json_round_trip() {
        let d = f_difference(&ur(1, 3), &ur(1, 4)).unwrap();
        let s = serde_json::to_string(&d.to_json()).unwrap();
        assert!(s.starts_with(r#"{"terms":[{"beta_num":-1,"beta_den":1,"minpoly":[-1,0,2],"#));
        let back: PeriodJson = serde_json::from_str(&s).unwrap();
        assert_eq!(BakerPeriod::from_json(&back).unwrap().normalize().unwrap(), d);
    }

    #[test]
    fn json_rejects_bad_isolator() {
        let s = r#"{"terms":[{"beta_num":1,"beta_den":1,"minpoly":[-2,0,1],"isolator":[-2,1,2,1]}]}"#;
        let j: PeriodJson = serde_json::from_str(s).unwrap();
        assert!(BakerPeriod::from_json(&j).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn normalization_is_order_independent(
            picks in proptest::collection::vec((1i64..12, -3i64..=3), 1..6),
            seed in any::<u64>(),
        ) {
            let terms: Vec<Term> = picks
                .iter()
                .map(|&(p, b)| Term::new(BigRational::from_integer(b.into()), minpoly_sin(&ur(p, 12)).unwrap()))
                .collect();
            let mut shuffled = terms.clone();
            let k = (seed as usize) % shuffled.len();
            shuffled.rotate_left(k);
            shuffled.reverse();
            let a = BakerPeriod::new(terms).normalize().unwrap();
            let b = BakerPeriod::new(shuffled).normalize().unwrap();
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(a.normalize().unwrap(), a);
        }
    }
}
