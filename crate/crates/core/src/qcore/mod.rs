//! Exact rationals and rigorous arbitrary-precision interval arithmetic.

pub mod decimal;
pub mod dyadic;
pub mod elementary;
pub mod interval;
pub mod rational;

pub use dyadic::{Dyadic, Round};
pub use elementary::{e, ln2, pi};
pub use interval::RInterval;
pub use rational::{in_unit_interval, parse_rational, reduce, UnitRational};

/// Default working precision in bits (about 1040 decimal digits).
pub const DEFAULT_PREC_BITS: u32 = 3456;
