//! Exact scalars: rationals, the deformation parameter `q`, q-integers and
//! Laurent polynomials in the spectral parameter `u`.

mod laurent;
mod qvalue;
mod rational;

pub use laurent::LaurentPoly;
pub use qvalue::QValue;
pub use rational::{int, parse_rational, rat, serialize_rational, Rational};
pub(crate) use rational::pow;
