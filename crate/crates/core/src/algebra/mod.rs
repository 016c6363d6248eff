//! Exact arithmetic: rationals, cyclotomic fields, Laurent polynomials and matrices.

pub mod arith;
pub mod cyclotomic;
pub mod det;
pub mod factor;
pub mod laurent;
pub mod matrix;
pub mod rational;
pub mod real;
pub mod repr;
pub mod square;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic, CyclotomicField};
pub use det::{det_laurent, field_det};
pub use laurent::{LaurentPoly, LaurentUnit};
pub use matrix::{IntegerMatrix, RationalMatrix, SmithForm};
pub use rational::Rational;
pub use square::{is_square, SquareCertificate, SquareConfig, SquareVerdict};
