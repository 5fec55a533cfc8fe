use std::io::Write;
use std::path::Path;

use baker_gamma::algebraic::minpoly_sin;
use baker_gamma::gammaeval::{f_eval, f_prime, EvalMode};
use baker_gamma::json::{IntervalJson, JsonInt};
use baker_gamma::periods::{classify_verdict, f_difference, nullity, BakerPeriod, Classification, NullityJson, PeriodJson};
use baker_gamma::qcore::decimal::truncate_fixed;
use baker_gamma::qcore::UnitRational;
use baker_gamma::theorems::{exception_set_analyze, pi_e_implication, HypotheticalExceptionSet};
use serde::Serialize;

use crate::{emit, CliError, CliResult, EXIT_FAIL, EXIT_PASS};

/// Bits needed for `digits` decimal digits plus guard.
fn bits_for_digits(digits: usize) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 32
}

#[derive(Serialize)]
struct MinpolyReport {
    x: String,
    degree: usize,
    minpoly: Vec<JsonInt>,
    isolator: [JsonInt; 4],
    decimal: String,
}

pub fn minpoly(x: &UnitRational, digits: usize, out: &mut dyn Write) -> CliResult<i32> {
    let a = minpoly_sin(x)?;
    let r = a.refine(bits_for_digits(digits).max(64))?;
    let (lo, hi) = a.isolator();
    emit(
        out,
        &MinpolyReport {
            x: x.to_string(),
            degree: a.degree(),
            minpoly: a.minpoly().coeffs().iter().map(JsonInt::from).collect(),
            isolator: [lo.numer(), lo.denom(), hi.numer(), hi.denom()].map(JsonInt::from),
            decimal: truncate_fixed(&r.mid(), digits),
        },
    )?;
    Ok(EXIT_PASS)
}

#[derive(Serialize)]
struct EvalReport {
    x: String,
    prec_bits: u32,
    mode: &'static str,
    f_mid: String,
    f: IntervalJson,
    f_prime: IntervalJson,
}

pub fn eval(x: &UnitRational, prec: u32, digits: usize, verify: bool, out: &mut dyn Write) -> CliResult<i32> {
    let (mode, name) = if verify { (EvalMode::Verify, "verify") } else { (EvalMode::Fast, "fast") };
    let f = f_eval(x, prec, mode)?;
    let fp = f_prime(x, prec)?;
    emit(
        out,
        &EvalReport {
            x: x.to_string(),
            prec_bits: prec,
            mode: name,
            f_mid: truncate_fixed(&f.mid(), digits),
            f: IntervalJson::from(&f),
            f_prime: IntervalJson::from(&fp),
        },
    )?;
    Ok(EXIT_PASS)
}

pub fn exceptions(set: &str, out: &mut dyn Write) -> CliResult<i32> {
    let s: HypotheticalExceptionSet = set.parse()?;
    let v = exception_set_analyze(&s);
    emit(out, &v.to_json(&s))?;
    Ok(if v.consistent { EXIT_PASS } else { EXIT_FAIL })
}

#[derive(Serialize)]
struct PeriodReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    x1: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    x2: Option<String>,
    prec_bits: u32,
    period: PeriodJson,
    nullity: NullityJson,
    classification: Classification,
}

fn period_report(p: &BakerPeriod, xs: Option<(&UnitRational, &UnitRational)>, prec: u32, out: &mut dyn Write) -> CliResult<i32> {
    let normalized = p.normalize()?;
    let v = nullity(&normalized, prec)?;
    emit(
        out,
        &PeriodReport {
            x1: xs.map(|(a, _)| a.to_string()),
            x2: xs.map(|(_, b)| b.to_string()),
            prec_bits: prec,
            period: normalized.to_json(),
            nullity: v.to_json(),
            classification: classify_verdict(&v),
        },
    )?;
    Ok(EXIT_PASS)
}

pub fn period_diff(x1: &UnitRational, x2: &UnitRational, prec: u32, out: &mut dyn Write) -> CliResult<i32> {
    period_report(&f_difference(x1, x2)?, Some((x1, x2)), prec, out)
}

pub fn period_file(path: &Path, prec: u32, out: &mut dyn Write) -> CliResult<i32> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let j: PeriodJson =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    period_report(&BakerPeriod::from_json(&j)?, None, prec, out)
}

pub fn pie(y: &UnitRational, prec: u32, out: &mut dyn Write) -> CliResult<i32> {
    let r = pi_e_implication(y, prec)?;
    emit(out, &r.to_json())?;
    Ok(if r.holds() { EXIT_PASS } else { EXIT_FAIL })
}
