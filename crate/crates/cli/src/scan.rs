use std::fmt::Write as _;
use std::io::Write;

use baker_gamma::gammaeval::{f_eval, EvalMode};
use baker_gamma::qcore::decimal::{truncate_fixed, width_string};
use baker_gamma::qcore::UnitRational;
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::{CliError, CliResult, ScanArgs, EXIT_PASS};

pub const HEADER: &str = "x_num,x_den,f_mid,f_width";

/// `from + k (to − from) / steps` for `k = 0..=steps`, exact.
pub fn grid(from: &UnitRational, to: &UnitRational, steps: u32) -> CliResult<Vec<UnitRational>> {
    if from >= to {
        return Err(CliError::Usage(format!("--from {from} must be below --to {to}")));
    }
    if steps < 2 {
        return Err(CliError::Usage("--steps must be at least 2".into()));
    }
    let step = (to.value() - from.value()) / BigRational::from_integer(BigInt::from(steps));
    (0..=steps)
        .map(|k| {
            let x = from.value() + &step * BigRational::from_integer(BigInt::from(k));
            UnitRational::from_rational(x).map_err(CliError::from)
        })
        .collect()
}

pub fn render(args: &ScanArgs, prec: u32) -> CliResult<String> {
    let points = grid(&args.from, &args.to, args.steps)?;
    let mode = if args.verify { EvalMode::Verify } else { EvalMode::Fast };
    let rows: Vec<_> = points.par_iter().map(|x| f_eval(x, prec, mode)).collect();
    let mut csv = String::with_capacity(points.len() * (args.digits + 32));
    csv.push_str(HEADER);
    csv.push('\n');
    for (x, row) in points.iter().zip(rows) {
        let f = row?;
        let _ = writeln!(
            csv,
            "{},{},{},{}",
            x.numer(),
            x.denom(),
            truncate_fixed(&f.mid(), args.digits),
            width_string(&f.width())
        );
    }
    Ok(csv)
}

pub fn run(args: &ScanArgs, prec: u32, out: &mut dyn Write) -> CliResult<i32> {
    let io = |e: std::io::Error| match &args.out {
        Some(path) => CliError::Io(format!("{}: {e}", path.display())),
        None => CliError::Io(e.to_string()),
    };
    // Validate, then open the destination so an unwritable path fails before any work.
    grid(&args.from, &args.to, args.steps)?;
    let mut file = args.out.as_ref().map(std::fs::File::create).transpose().map_err(io)?;
    let csv = render(args, prec)?;
    match file.as_mut() {
        Some(f) => f.write_all(csv.as_bytes()).map_err(io)?,
        None => out.write_all(csv.as_bytes()).map_err(io)?,
    }
    Ok(EXIT_PASS)
}
