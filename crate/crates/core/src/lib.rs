//! Macdonald polynomials of type C_n with equal multiplicities: the minuscule Macdonald
//! operator, Pieri coefficients for one- and two-row polynomials, their inverses, the
//! q-series identities they imply, and the passage to type B_2.

pub mod btwo;
pub mod error;
pub mod identities;
pub mod macdonald;
pub mod pieri;
pub mod verdict;
pub mod weyl;

pub use error::{MacError, Result};
pub use verdict::Verdict;
