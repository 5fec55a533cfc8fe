//! Case analysis over hypothetical exception sets (the rationals where `f`
//! might be algebraic) and the conditional π·e implication.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::algebraic::minpoly_sin;
use crate::error::{domain, Error, Result};
use crate::gammaeval::MIN_PREC;
use crate::json::{IntervalJson, JsonInt};
use crate::qcore::decimal::{certified_digits, truncate_fixed};
use crate::qcore::{e, pi, RInterval, UnitRational};

/// Trusted results a conclusion rests on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Axiom {
    Baker,
    HL,
    Theorem1,
    Theorem2,
}

/// A hypothetical set of arguments at which `f` is algebraic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HypotheticalExceptionSet {
    members: BTreeSet<UnitRational>,
}

impl HypotheticalExceptionSet {
    pub fn new(members: impl IntoIterator<Item = UnitRational>) -> Self {
        HypotheticalExceptionSet { members: members.into_iter().collect() }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn members(&self) -> impl Iterator<Item = &UnitRational> {
        self.members.iter()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: &UnitRational) -> bool {
        self.members.contains(x)
    }
}

/// Comma-separated fractions; the empty string is the empty set.
impl FromStr for HypotheticalExceptionSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Self::empty());
        }
        s.split(',').map(str::parse).collect::<Result<Vec<_>>>().map(Self::new)
    }
}

/// At most one member in `(0, 1/2]` and at most one in `[1/2, 1)`; 1/2
/// counts toward both.
pub fn halfinterval_bound_check(s: &HypotheticalExceptionSet) -> bool {
    let half = UnitRational::half();
    let left = s.members().filter(|x| **x <= half).count();
    let right = s.members().filter(|x| **x >= half).count();
    left <= 1 && right <= 1
}

/// Closed under `x ↦ 1 − x`.
pub fn symmetry_closure_check(s: &HypotheticalExceptionSet) -> bool {
    s.members().all(|x| s.contains(&x.complement()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Case {
    I,
    II,
    III,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LogPiStatus {
    Transcendental,
    Algebraic,
    Undetermined,
}

/// Why a set was rejected, in the order the checks are applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// More than two members.
    TooManyExceptions,
    /// `{1/2, x}`: the partner `1 − x` would be a third member.
    SymmetryForcesThird,
    /// Two members in one closed half-interval.
    HalfIntervalBound,
    /// Some member's mirror is missing.
    SymmetryClosure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionVerdict {
    pub consistent: bool,
    pub case: Option<Case>,
    pub log_pi_status: LogPiStatus,
    pub violation: Option<Violation>,
}

impl ExceptionVerdict {
    fn rejected(v: Violation) -> Self {
        ExceptionVerdict {
            consistent: false,
            case: None,
            log_pi_status: LogPiStatus::Undetermined,
            violation: Some(v),
        }
    }

    pub fn to_json(&self, s: &HypotheticalExceptionSet) -> ExceptionVerdictJson {
        ExceptionVerdictJson {
            set: s.members().map(ToString::to_string).collect(),
            consistent: self.consistent,
            case: self.case,
            log_pi_status: self.log_pi_status,
            violation: self.violation,
            uses: vec![Axiom::Baker, Axiom::Theorem1, Axiom::Theorem2],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionVerdictJson {
    pub set: Vec<String>,
    pub consistent: bool,
    pub case: Option<Case>,
    pub log_pi_status: LogPiStatus,
    pub violation: Option<Violation>,
    pub uses: Vec<Axiom>,
}

pub fn exception_set_analyze(s: &HypotheticalExceptionSet) -> ExceptionVerdict {
    if s.len() > 2 {
        return ExceptionVerdict::rejected(Violation::TooManyExceptions);
    }
    if s.len() == 2 && s.contains(&UnitRational::half()) {
        return ExceptionVerdict::rejected(Violation::SymmetryForcesThird);
    }
    if !halfinterval_bound_check(s) {
        return ExceptionVerdict::rejected(Violation::HalfIntervalBound);
    }
    if !symmetry_closure_check(s) {
        return ExceptionVerdict::rejected(Violation::SymmetryClosure);
    }
    let (case, log_pi_status) = match s.len() {
        0 => (Case::I, LogPiStatus::Transcendental),
        1 => (Case::II, LogPiStatus::Algebraic),
        _ => (Case::III, LogPiStatus::Transcendental),
    };
    ExceptionVerdict { consistent: true, case: Some(case), log_pi_status, violation: None }
}

/// log π is algebraic iff the exception set is exactly `{1/2}`.
pub fn criteria_statement(s: &HypotheticalExceptionSet) -> Result<bool> {
    if !exception_set_analyze(s).consistent {
        return domain("criteria apply only to consistent exception sets");
    }
    let mut it = s.members();
    Ok(matches!((it.next(), it.next()), (Some(x), None) if *x == UnitRational::half()))
}

/// Among all singletons with denominator at most `max_den`, only `{1/2}` is
/// closed under `x ↦ 1 − x`.
pub fn appendix_check(max_den: u64) -> Result<bool> {
    if max_den < 2 {
        return domain("max_den must be at least 2");
    }
    Ok(UnitRational::enumerate(max_den).into_iter().all(|x| {
        let closed = symmetry_closure_check(&HypotheticalExceptionSet::new([x.clone()]));
        closed == (x == UnitRational::half())
    }))
}

/// Evidence for: if `f(y)` is algebraic then π·e is transcendental.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicationReport {
    pub y: UnitRational,
    /// Minimal polynomial coefficients of `k(y) = 1 / sin(πy)`.
    pub k_minpoly: Vec<num_bigint::BigInt>,
    pub k_at_least_one: bool,
    pub k_is_one: bool,
    pub k_enclosure: RInterval,
    pub k_pi_e_enclosure: RInterval,
    pub k_pi_e_excludes_one: bool,
}

impl ImplicationReport {
    pub fn holds(&self) -> bool {
        self.k_at_least_one && self.k_pi_e_excludes_one
    }

    /// Digits of `k·π·e` shared by both endpoints.
    pub fn k_pi_e_prefix(&self) -> String {
        let r = &self.k_pi_e_enclosure;
        truncate_fixed(r.lo(), certified_digits(r, 60))
    }

    pub fn to_json(&self) -> ImplicationJson {
        ImplicationJson {
            y: self.y.to_string(),
            premise: format!("f({}) is algebraic", self.y),
            conclusion: "pi*e is transcendental".into(),
            k_minpoly: self.k_minpoly.iter().map(JsonInt::from).collect(),
            k_at_least_one: self.k_at_least_one,
            k_is_one: self.k_is_one,
            k_pi_e_excludes_one: self.k_pi_e_excludes_one,
            numeric_support: NumericSupport {
                k_enclosure: IntervalJson::from(&self.k_enclosure),
                k_pi_e_enclosure: IntervalJson::from(&self.k_pi_e_enclosure),
                k_pi_e_prefix: self.k_pi_e_prefix(),
            },
            holds: self.holds(),
            uses: vec![Axiom::HL],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NumericSupport {
    pub k_enclosure: IntervalJson,
    pub k_pi_e_enclosure: IntervalJson,
    pub k_pi_e_prefix: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImplicationJson {
    pub y: String,
    pub premise: String,
    pub conclusion: String,
    pub k_minpoly: Vec<JsonInt>,
    pub k_at_least_one: bool,
    pub k_is_one: bool,
    pub k_pi_e_excludes_one: bool,
    pub numeric_support: NumericSupport,
    pub holds: bool,
    pub uses: Vec<Axiom>,
}

/// With `k = 1/sin(πy)`: `f(y) + 1 = log(k·π·e)`. Checks `k ≥ 1` exactly
/// and `k·π·e ≠ 1` by enclosure, which is what the logarithmic
/// Hermite–Lindemann step needs.
pub fn pi_e_implication(y: &UnitRational, prec: u32) -> Result<ImplicationReport> {
    if prec < MIN_PREC {
        return domain(format!("precision {prec} is below the minimum of {MIN_PREC} bits"));
    }
    let k = minpoly_sin(y)?.reciprocal()?;
    let vs_one = k.cmp_rational(&BigRational::one());
    let w = prec + 16;
    let k_enclosure = k.refine(w)?.with_prec(w);
    let k_pi_e = (&(&k_enclosure * &pi(w)) * &e(w)).with_prec(prec);
    Ok(ImplicationReport {
        y: y.clone(),
        k_minpoly: k.minpoly().coeffs().to_vec(),
        k_at_least_one: vs_one != Ordering::Less,
        k_is_one: vs_one == Ordering::Equal,
        k_enclosure: k_enclosure.with_prec(prec),
        k_pi_e_excludes_one: !k_pi_e.contains_rational(&BigRational::one()),
        k_pi_e_enclosure: k_pi_e,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> HypotheticalExceptionSet {
        s.parse().unwrap()
    }

    #[test]
    fn parsing() {
        assert!(set("").is_empty());
        assert_eq!(set("1/3, 2/3").len(), 2);
        assert_eq!(set("2/4,1/2"), set("1/2"));
        assert!("1/3,x".parse::<HypotheticalExceptionSet>().is_err());
        assert!("3/2".parse::<HypotheticalExceptionSet>().is_err());
    }

    #[test]
    fn half_interval_examples() {
        assert!(halfinterval_bound_check(&set("")));
        assert!(!halfinterval_bound_check(&set("1/3,1/4")));
        assert!(halfinterval_bound_check(&set("1/3,2/3")));
        assert!(!halfinterval_bound_check(&set("1/2,1/3")));
        assert!(!halfinterval_bound_check(&set("1/2,2/3")));
    }

    #[test]
    fn symmetry_examples() {
        assert!(symmetry_closure_check(&set("1/2")));
        assert!(!symmetry_closure_check(&set("1/3")));
        assert!(symmetry_closure_check(&set("1/4,3/4")));
    }

    #[test]
    fn analysis_examples() {
        let v = exception_set_analyze(&set(""));
        assert_eq!((v.consistent, v.case, v.log_pi_status), (true, Some(Case::I), LogPiStatus::Transcendental));
        let v = exception_set_analyze(&set("1/2"));
        assert_eq!((v.case, v.log_pi_status), (Some(Case::II), LogPiStatus::Algebraic));
        let v = exception_set_analyze(&set("1/3,2/3"));
        assert_eq!((v.case, v.log_pi_status), (Some(Case::III), LogPiStatus::Transcendental));
        let v = exception_set_analyze(&set("1/2,1/3"));
        assert!(!v.consistent && v.case.is_none());
        assert_eq!(v.violation, Some(Violation::SymmetryForcesThird));
        assert_eq!(exception_set_analyze(&set("1/3,1/4")).violation, Some(Violation::HalfIntervalBound));
        assert_eq!(exception_set_analyze(&set("1/3")).violation, Some(Violation::SymmetryClosure));
        assert_eq!(
            exception_set_analyze(&set("1/3,2/3,1/2")).violation,
            Some(Violation::TooManyExceptions)
        );
    }

    #[test]
    fn criteria_examples() {
        assert!(criteria_statement(&set("1/2")).unwrap());
        assert!(!criteria_statement(&set("")).unwrap());
        assert!(!criteria_statement(&set("2/5,3/5")).unwrap());
        assert!(matches!(criteria_statement(&set("1/3")), Err(Error::Domain(_))));
    }

    #[test]
    fn appendix_examples() {
        for d in [2, 8, 100] {
            assert!(appendix_check(d).unwrap());
        }
        assert!(appendix_check(1).is_err());
    }

    #[test]
    fn verdict_json() {
        let s = set("1/3,2/3");
        let j = serde_json::to_string(&exception_set_analyze(&s).to_json(&s)).unwrap();
        assert_eq!(
            j,
            r#"{"set":["1/3","2/3"],"consistent":true,"case":"III","log_pi_status":"Transcendental","violation":null,"uses":["Baker","Theorem1","Theorem2"]}"#
        );
    }

    #[test]
    fn pi_e_examples() {
        let r = pi_e_implication(&UnitRational::half(), 128).unwrap();
        assert!(r.k_is_one && r.holds());
        assert!(r.k_pi_e_prefix().starts_with("8.5397342226"));

        let r = pi_e_implication(&"1/6".parse().unwrap(), 128).unwrap();
        assert!(r.k_at_least_one && !r.k_is_one);
        assert_eq!(r.k_minpoly, vec![(-2).into(), 1.into()]);
        assert!(r.k_pi_e_prefix().starts_with("17.0794684"));

        let r = pi_e_implication(&"1/4".parse().unwrap(), 64).unwrap();
        assert_eq!(r.k_minpoly, vec![(-2).into(), 0.into(), 1.into()]);
        assert!(r.k_pi_e_excludes_one && r.k_pi_e_prefix().starts_with("12.077"));
        let j = serde_json::to_value(r.to_json()).unwrap();
        assert_eq!(j["uses"], serde_json::json!(["HL"]));
    }
}
