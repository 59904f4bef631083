//! Pieri coefficients: products of one-row polynomials, their inverse, the minuscule and
//! quasi-minuscule formulas, and the matrix inversions behind them.

mod bressoud;
mod coeffs;
mod minuscule;
mod verify;

pub use bressoud::{bressoud_entry, verify_pair_inversion, MatrixPair, PairKind};
pub use coeffs::{expand_tworow_inverse, expand_tworow_product, inverse_c, pieri_c, PieriExpansion, PieriKind};
pub use minuscule::{diagonal_coefficient, pieri_minuscule, pieri_quasiminuscule, shifted, step_coefficient, Sign};
pub use verify::*;
