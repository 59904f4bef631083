//! Exact arithmetic: rationals, sparse multivariate polynomials, canonical
//! rational functions and the scalar field of `q^{1/2}`, `t^{1/2}`.

pub mod error;
pub mod factor;
pub mod gcd;
pub mod json;
pub mod modp;
pub mod mono;
pub mod poly;
pub mod product;
pub mod qpoch;
pub mod ratfun;
pub mod rational;
pub mod sample;
pub mod scalar;

pub use error::CoeffError;
pub use mono::{Mono, VarSet, MAX_VARS};
pub use poly::Poly;
pub use product::Term;
pub use qpoch::{qpoch, qpoch_ab};
pub use ratfun::RatFun;
pub use rational::Rational;
pub use scalar::ExactScalar;

/// Rational function over a declared list of indeterminates.
pub type GenRat = RatFun;
