//! Algebraicity witnesses: cyclotomic polynomials, integer polynomials with
//! Sturm root counting, and minimal polynomials of `sin(πx)`.

pub mod cyclotomic;
pub mod number;
pub mod poly;
pub mod sine;

pub use cyclotomic::{cyclotomic, euler_phi, fold_cos};
pub use number::AlgebraicNumber;
pub use poly::{IntPolynomial, SturmSequence};
pub use sine::minpoly_sin;
