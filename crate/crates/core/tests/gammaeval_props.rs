use baker_gamma::gammaeval::{f_eval, log_gamma, log_pi, EvalMode};
use baker_gamma::qcore::decimal::parse_decimal;
use baker_gamma::qcore::{pi, Dyadic, RInterval, UnitRational};
use num_bigint::BigInt;
use num_rational::BigRational;

fn ur(p: i64, q: i64) -> UnitRational {
    UnitRational::new(p, q).unwrap()
}

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// `|r − v| ≤ tol` for rational reference value `v`.
fn near(r: &RInterval, v: &BigRational, tol: &BigRational) -> bool {
    r.lo().to_rational() <= v + tol && v - tol <= r.hi().to_rational()
}

fn ten_pow(k: i32) -> BigRational {
    let p = BigRational::from_integer(BigInt::from(10).pow(k.unsigned_abs()));
    if k < 0 {
        p.recip()
    } else {
        p
    }
}

/// Spouge's approximation with parameter `a`:
/// `Γ(z+1) = (z+a)^(z+1/2) e^−(z+a) [c₀ + Σ_{k<a} c_k/(z+k) + ε]`,
/// `c₀ = √(2π)`, `c_k = (−1)^(k−1) (a−k)^(k−1/2) e^(a−k) / (k−1)!`, and
/// `|ε| / |bracket| ≤ a^(−1/2) (2π)^(−(a+1/2)) < 6^(−a)` for `z > 0`.
fn spouge_log_gamma_plus_one(z: &BigRational, a: i64, prec: u32) -> RInterval {
    let two_pi = pi(prec).mul_pow2(1);
    let mut sum = two_pi.log().unwrap().mul_pow2(-1).exp().unwrap();
    let mut fact = BigInt::from(1);
    for k in 1..a {
        if k > 1 {
            fact *= k - 1;
        }
        let base = RInterval::from_int(a - k, prec);
        let expo = &base.log().unwrap().mul_rational(&rat(2 * k - 1, 2)) + &base;
        let mut c = expo.exp().unwrap().mul_rational(&BigRational::new(1.into(), fact.clone()));
        if k % 2 == 0 {
            c = -c;
        }
        let zk = RInterval::from_rational(&(z + BigRational::from_integer(k.into())), prec);
        sum = &sum + &c.div(&zk).unwrap();
    }
    let za = RInterval::from_rational(&(z + BigRational::from_integer(a.into())), prec);
    let lead = &za.log().unwrap().mul_rational(&(z + rat(1, 2))) - &za;
    let eps = BigRational::new(2.into(), BigInt::from(6).pow(a as u32));
    let slack = Dyadic::from_rational(&eps, 64, baker_gamma::qcore::Round::Up);
    (&lead + &sum.log().unwrap()).inflate(&slack)
}

#[test]
fn log_gamma_third_against_spouge_and_reference() {
    let prec = 400;
    let ours = log_gamma(&ur(1, 3), prec).unwrap();
    // log Γ(1/3) = log Γ(4/3) + log 3
    let oracle = &spouge_log_gamma_plus_one(&rat(1, 3), 130, 900) + &RInterval::from_int(3, 900).log().unwrap();
    assert!(ours.overlaps(&oracle), "{ours:?} vs {oracle:?}");
    let mid_gap = ours.mid().sub(&oracle.mid()).abs();
    assert!(mid_gap.to_rational() < ten_pow(-100));

    let reference = parse_decimal(
        "0.985420646927767069187174036977961391735556496385885854234757010089404118913760447680376598323588260594273390703999365291",
    )
    .unwrap();
    assert!(near(&ours, &reference, &ten_pow(-115)));
}

#[test]
fn log_gamma_sevenths_reference() {
    let prec = 400;
    let s = &log_gamma(&ur(1, 7), prec).unwrap() + &log_gamma(&ur(6, 7), prec).unwrap();
    let reference = parse_decimal(
        "1.97970854883559074750734189847753326320296293313395985642150832802455741752227422241234945435933249423325773209521129501",
    )
    .unwrap();
    assert!(near(&s, &reference, &ten_pow(-115)));
}

#[test]
fn log_pi_width_contract_at_default_precision() {
    let l = log_pi(3456).unwrap();
    assert!(l.width() <= Dyadic::pow2(-3452));
    let reference = parse_decimal(
        "1.14472988584940017414342735135305871164729481291531157151362307147213776988482607978362327027548970770200981222869798916",
    )
    .unwrap();
    assert!(near(&l, &reference, &ten_pow(-118)));
}

#[test]
fn values_are_symmetric_about_one_half() {
    let prec = 192;
    for x in UnitRational::enumerate(16) {
        let a = f_eval(&x, prec, EvalMode::Fast).unwrap();
        let b = f_eval(&x.complement(), prec, EvalMode::Fast).unwrap();
        assert!(a.overlaps(&b), "x = {x}");
        let gap = a.mid().sub(&b.mid()).abs();
        assert!(gap < a.width().add(&b.width()) || gap.is_zero(), "x = {x}");
    }
}

#[test]
fn log_pi_is_the_lower_bound_attained_only_at_one_half() {
    let prec = 192;
    let lp = log_pi(prec).unwrap();
    let slack = Dyadic::pow2(8 - prec as i64);
    let floor = lp.lo().sub(&slack);
    for x in UnitRational::enumerate(20) {
        let f = f_eval(&x, prec, EvalMode::Fast).unwrap();
        assert!(*f.lo() >= floor, "x = {x}");
        let touches = f.mid().sub(&lp.mid()).abs() <= f.width().add(&lp.width()).add(&slack);
        assert_eq!(touches, x.is_half(), "x = {x}");
    }
}

#[test]
fn verify_mode_agrees_with_fast_mode() {
    let prec = 256;
    for (p, q) in [(1, 7), (2, 9), (5, 12), (11, 13), (1, 300)] {
        let x = ur(p, q);
        let fast = f_eval(&x, prec, EvalMode::Fast).unwrap();
        let verified = f_eval(&x, prec, EvalMode::Verify).unwrap();
        assert!(verified.overlaps(&fast), "x = {x}");
    }
}
