//! Rigorous evaluation of log Γ, log π, `f(x) = log Γ(x) + log Γ(1 − x)`,
//! `f′(x) = −π cot(πx)`, and residuals of the reflection identity
//! `log Γ(x) + log Γ(1 − x) = log π − log sin(πx)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebraic::minpoly_sin;
use crate::error::{domain, Error, Result};
use crate::json::{IntervalJson, JsonInt};
use crate::qcore::elementary::{cos_pi, sin_pi};
use crate::qcore::{pi, Dyadic, RInterval, UnitRational};

/// Smallest precision accepted by the evaluators.
pub const MIN_PREC: u32 = 64;

/// `sin(πx)` goes through the exact algebraic route up to this denominator;
/// beyond it the direct interval sine is used.
pub const ALGEBRAIC_SINE_MAX_DEN: u64 = 256;

const GUARD: u32 = 48;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EvalMode {
    /// Only `log π − log sin(πx)`.
    #[default]
    Fast,
    /// Both routes, intersected; disjoint routes are an error.
    Verify,
}

/// Argument/precision pair for an evaluation of `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalRequest {
    pub x: UnitRational,
    pub prec: u32,
}

impl EvalRequest {
    pub fn new(x: UnitRational, prec: u32) -> Result<Self> {
        check_prec(prec)?;
        Ok(EvalRequest { x, prec })
    }
}

fn check_prec(prec: u32) -> Result<()> {
    if prec < MIN_PREC {
        return domain(format!("precision {prec} is below the minimum of {MIN_PREC} bits"));
    }
    Ok(())
}

fn exhausted(what: &str, prec: u32) -> Error {
    Error::PrecisionExhausted(format!("{what} at {prec} bits"))
}

/// `B_2, B_4, …, B_2n` exactly, via the tangent-number recurrence.
fn bernoulli_even(n: usize) -> Vec<BigRational> {
    // t[k] holds the tangent number T_k (T_1 = 1, T_2 = 2, T_3 = 16, ...).
    let mut t = vec![BigInt::zero(); n + 1];
    if n == 0 {
        return Vec::new();
    }
    t[1] = BigInt::one();
    for k in 2..=n {
        t[k] = &t[k - 1] * BigInt::from(k - 1);
    }
    for k in 2..=n {
        for j in k..=n {
            t[j] = &t[j - 1] * BigInt::from(j - k) + &t[j] * BigInt::from(j - k + 2);
        }
    }
    (1..=n)
        .map(|k| {
            let four_k = BigInt::one() << (2 * k);
            let num = BigInt::from(2 * k) * &t[k];
            let den = &four_k * (&four_k - 1u32);
            let b = BigRational::new(num, den);
            if k % 2 == 1 {
                b
            } else {
                -b
            }
        })
        .collect()
}

/// log2 of |B_2k| / (2k(2k−1) z^(2k−1)), estimated in f64.
fn stirling_term_log2(k: usize, z: f64) -> f64 {
    let n = 2.0 * k as f64;
    // |B_2k| ≈ 2 (2k)! / (2π)^(2k); log((2k)!) by Stirling.
    let ln_fact = n * n.ln() - n + 0.5 * (2.0 * std::f64::consts::PI * n).ln();
    let ln_b = std::f64::consts::LN_2 + ln_fact - n * (2.0 * std::f64::consts::PI).ln();
    (ln_b - (n * (n - 1.0)).ln() - (n - 1.0) * z.ln()) / std::f64::consts::LN_2
}

/// Chooses the argument shift and the number of Stirling terms.
fn stirling_plan(w: u32) -> (u64, usize) {
    let shift = (w as u64 / 2).max(16);
    let z = shift as f64;
    let target = -(w as f64) - 8.0;
    let mut k = 1;
    while stirling_term_log2(k + 1, z) > target {
        k += 1;
    }
    (shift, k)
}

/// Rigorous log Γ(x) for rational `x > 0`, at working precision `w`.
fn log_gamma_at(x: &BigRational, w: u32) -> Result<RInterval> {
    let (shift, terms) = stirling_plan(w);
    let z = x + BigRational::from_integer(shift.into());
    let zi = RInterval::from_rational(&z, w);
    let bern = bernoulli_even(terms + 1);

    // (z − 1/2) log z − z + (1/2) log 2π
    let half = BigRational::new(1.into(), 2.into());
    let log_z = zi.log()?;
    let lead = &RInterval::from_rational(&(&z - &half), w) * &log_z;
    let log_2pi = pi(w).mul_pow2(1).log()?;
    let mut sum = &(&lead - &zi) + &log_2pi.mul_pow2(-1);

    // Σ B_2k / (2k(2k−1) z^(2k−1))
    let inv_z = zi.recip()?;
    let inv_z2 = inv_z.square();
    let mut pw = inv_z;
    for (i, b) in bern.iter().take(terms).enumerate() {
        let k = (i + 1) as i64;
        let coeff = b / BigRational::from_integer(BigInt::from(2 * k * (2 * k - 1)));
        sum = &sum + &pw.mul_rational(&coeff);
        pw = &pw * &inv_z2;
    }
    // For real z > 0 the remainder is bounded by the first omitted term.
    let kk = (terms + 1) as i64;
    let next = bern[terms].abs() / BigRational::from_integer(BigInt::from(2 * kk * (2 * kk - 1)));
    let tail = pw.mul_rational(&next).mag();
    let log_gamma_z = sum.inflate(&tail);

    // log Γ(x) = log Γ(x + m) − log Π_{j<m} (x + j)
    let (p, q) = (x.numer(), x.denom());
    let mut prod = BigInt::one();
    for j in 0..shift {
        prod *= p + q * BigInt::from(j);
    }
    let log_num = RInterval::point(Dyadic::from_int(prod), w).log()?;
    let log_den = RInterval::point(Dyadic::from_int(q.clone()), w).log()?.mul_int(shift);
    Ok(&log_gamma_z - &(&log_num - &log_den))
}

/// Enclosure of log Γ(x) of width at most `2^(8 − prec)`.
pub fn log_gamma(x: &UnitRational, prec: u32) -> Result<RInterval> {
    check_prec(prec)?;
    let limit = Dyadic::pow2(8 - prec as i64);
    for extra in [GUARD, 4 * GUARD] {
        let r = log_gamma_at(x.value(), prec + extra)?.with_prec(prec);
        if r.width() <= limit {
            return Ok(r);
        }
    }
    Err(exhausted("log_gamma", prec))
}

/// Enclosure of log π of width at most `2^(4 − prec)`.
pub fn log_pi(prec: u32) -> Result<RInterval> {
    check_prec(prec)?;
    let limit = Dyadic::pow2(4 - prec as i64);
    for extra in [16, GUARD] {
        let r = pi(prec + extra).log()?.with_prec(prec);
        if r.width() <= limit {
            return Ok(r);
        }
    }
    Err(exhausted("log_pi", prec))
}

/// `sin(πx)`: refined algebraic root for small denominators, direct sine
/// otherwise.
pub fn sin_pi_enclosure(x: &UnitRational, prec: u32) -> Result<RInterval> {
    match x.denom().to_u64() {
        Some(q) if q <= ALGEBRAIC_SINE_MAX_DEN => minpoly_sin(x)?.refine(prec),
        _ => sin_pi(x.value(), prec),
    }
}

/// `log π − log sin(πx)`.
fn f_by_sine(x: &UnitRational, w: u32) -> Result<RInterval> {
    let s = sin_pi_enclosure(x, w)?.with_prec(w);
    Ok(&log_pi(w)? - &s.log()?)
}

/// `log Γ(x) + log Γ(1 − x)`.
fn f_by_gamma(x: &UnitRational, w: u32) -> Result<RInterval> {
    Ok(&log_gamma(x, w)? + &log_gamma(&x.complement(), w)?)
}

/// Enclosure of `f(x)`; in verify mode, the intersection of both routes.
pub fn f_eval(x: &UnitRational, prec: u32, mode: EvalMode) -> Result<RInterval> {
    check_prec(prec)?;
    let w = prec + 16;
    let by_sine = f_by_sine(x, w)?;
    let out = match mode {
        EvalMode::Fast => by_sine,
        EvalMode::Verify => {
            let by_gamma = f_by_gamma(x, w)?;
            by_sine.intersect(&by_gamma).ok_or_else(|| {
                Error::Disagreement(format!(
                    "f({x}): sine route {by_sine:?} and gamma route {by_gamma:?} are disjoint"
                ))
            })?
        }
    };
    Ok(out.with_prec(prec))
}

/// Enclosure of `f′(x) = −π cot(πx)`.
pub fn f_prime(x: &UnitRational, prec: u32) -> Result<RInterval> {
    check_prec(prec)?;
    let w = prec + 16;
    let c = cos_pi(x.value(), w)?;
    let s = sin_pi(x.value(), w)?;
    Ok((-&(&pi(w) * &c.div(&s)?)).with_prec(prec))
}

/// Residual of the reflection identity at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualReport {
    pub x: UnitRational,
    pub prec: u32,
    pub residual: RInterval,
    pub pass: bool,
}

impl ResidualReport {
    pub fn to_json(&self) -> ResidualReportJson {
        let r = IntervalJson::from(&self.residual);
        ResidualReportJson {
            x_num: JsonInt::from(self.x.numer()),
            x_den: JsonInt::from(self.x.denom()),
            prec_bits: self.prec,
            residual_lo: r.lo,
            residual_hi: r.hi,
            pass: self.pass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidualReportJson {
    pub x_num: JsonInt,
    pub x_den: JsonInt,
    pub prec_bits: u32,
    pub residual_lo: String,
    pub residual_hi: String,
    pub pass: bool,
}

/// Encloses `log Γ(x) + log Γ(1 − x) − log π + log sin(πx)`; passes iff the
/// enclosure contains 0 and is no wider than `2^(16 − prec)`.
pub fn verify_reflection(x: &UnitRational, prec: u32) -> Result<ResidualReport> {
    check_prec(prec)?;
    // Gamma side and sine side are evaluated independently at full width.
    let residual = (&f_by_gamma(x, prec)? - &f_by_sine(x, prec)?).with_prec(prec);
    let pass = residual.contains_zero() && residual.width() <= Dyadic::pow2(16 - prec as i64);
    Ok(ResidualReport { x: x.clone(), prec, residual, pass })
}
