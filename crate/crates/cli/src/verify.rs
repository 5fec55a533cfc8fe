use std::io::Write;

use baker_gamma::algebraic::minpoly_sin;
use baker_gamma::gammaeval::{f_eval, log_pi, verify_reflection, EvalMode};
use baker_gamma::json::IntervalJson;
use baker_gamma::periods::{f_difference, nullity, NullityKind};
use baker_gamma::qcore::{ln2, RInterval, UnitRational};
use clap::ValueEnum;
use serde::Serialize;

use crate::{emit, CliResult, EXIT_FAIL, EXIT_PASS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    /// Reflection residuals over a fixed sample set.
    Reflection,
    /// f(1/4) = f(3/4), exactly and numerically.
    Counterexample,
    /// f(x) = f(1 − x) for denominators up to 12.
    Symmetry,
    /// Strict decrease over k/100, k = 1..50.
    Monotonic,
}

pub const REFLECTION_SAMPLES: [(u32, u32); 8] = [(1, 7), (1, 5), (1, 4), (1, 3), (5, 12), (1, 2), (2, 3), (7, 8)];

#[derive(Serialize)]
struct Item {
    label: String,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    enclosure: Option<IntervalJson>,
}

impl Item {
    fn new(label: String, pass: bool, enclosure: Option<&RInterval>) -> Self {
        Item { label, pass, enclosure: enclosure.map(IntervalJson::from) }
    }
}

#[derive(Serialize)]
struct Report<T: Serialize> {
    check: &'static str,
    prec_bits: u32,
    pass: bool,
    items: Vec<T>,
}

fn finish<T: Serialize>(check: &'static str, prec: u32, items: Vec<T>, pass: bool, out: &mut dyn Write) -> CliResult<i32> {
    emit(out, &Report { check, prec_bits: prec, pass, items })?;
    Ok(if pass { EXIT_PASS } else { EXIT_FAIL })
}

fn ur(p: u32, q: u32) -> UnitRational {
    UnitRational::new(p, q).expect("built-in sample lies in (0, 1)")
}

fn items_pass(items: &[Item]) -> bool {
    items.iter().all(|i| i.pass)
}

pub fn run(check: Check, prec: u32, out: &mut dyn Write) -> CliResult<i32> {
    match check {
        Check::Reflection => {
            let mut items = Vec::new();
            for (p, q) in REFLECTION_SAMPLES {
                items.push(verify_reflection(&ur(p, q), prec)?.to_json());
            }
            let pass = items.iter().all(|r| r.pass);
            finish("reflection", prec, items, pass, out)
        }
        Check::Counterexample => {
            let (a, b) = (ur(1, 4), ur(3, 4));
            let v = nullity(&f_difference(&a, &b)?, prec)?;
            let fa = f_eval(&a, prec, EvalMode::Verify)?;
            let fb = f_eval(&b, prec, EvalMode::Verify)?;
            let diff = &fa - &fb;
            let closed = &log_pi(prec)? + &ln2(prec).mul_pow2(-1);
            let gap = &fa - &closed;
            let items = vec![
                Item::new("period(1/4,3/4) is Null".into(), v.kind == NullityKind::Null, None),
                Item::new("f(1/4) - f(3/4) contains 0".into(), diff.contains_zero(), Some(&diff)),
                Item::new("f(1/4) - (log pi + log(2)/2) contains 0".into(), gap.contains_zero(), Some(&gap)),
            ];
            let pass = items_pass(&items);
            finish("counterexample", prec, items, pass, out)
        }
        Check::Symmetry => {
            let half = UnitRational::half();
            let mut items = Vec::new();
            for x in UnitRational::enumerate(12).into_iter().filter(|x| *x < half) {
                let y = x.complement();
                let same_sine = minpoly_sin(&x)?.alg_equal(&minpoly_sin(&y)?);
                let d = &f_eval(&x, prec, EvalMode::Fast)? - &f_eval(&y, prec, EvalMode::Fast)?;
                items.push(Item::new(format!("f({x}) - f({y}) contains 0"), same_sine && d.contains_zero(), Some(&d)));
            }
            let pass = items_pass(&items);
            finish("symmetry", prec, items, pass, out)
        }
        Check::Monotonic => {
            let xs: Vec<_> = (1..=50).map(|k| ur(k, 100)).collect();
            let fs = xs.iter().map(|x| f_eval(x, prec, EvalMode::Fast)).collect::<Result<Vec<_>, _>>()?;
            let items: Vec<_> = xs
                .windows(2)
                .zip(fs.windows(2))
                .map(|(x, f)| {
                    let d = &f[0] - &f[1];
                    Item::new(format!("f({}) > f({})", x[0], x[1]), f[0].lo() > f[1].hi(), Some(&d))
                })
                .collect();
            let pass = items_pass(&items);
            finish("monotonic", prec, items, pass, out)
        }
    }
}
