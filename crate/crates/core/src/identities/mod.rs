//! The subset identity for the symmetrized operator kernel and the basic hypergeometric
//! identities obtained from it by specialization.

mod hypergeom;
mod series;
mod terms;
mod subset;

pub use hypergeom::{phi_series, HypergeomSpec};
pub use series::{
    block_sigma_sum, rosengren_terms, sum_as_ratfun, block_specialization_rhs, single_block_agrees, verify_65_summation,
    verify_rosengren_form, verify_thm10, verify_thm11, verify_thm8, verify_thm9, NamedSpace,
};
pub use terms::{Mon, Prod};
pub use subset::{
    check_subset_recursion, two_parameter_rhs_terms, rhs_at_zero, rhs_residue, sigma_sum_terms, subset_coefficient,
    subset_sum_without_x, thm6_lhs, thm6_rhs, verify_cor7, verify_thm6, SpuriousPole, SubsetCoefficient, SubsetSpace,
};

/// How an identity is checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Both sides reduced to one canonical rational function.
    Exact,
    /// Both sides evaluated at seeded random rational points; a pass is evidence, not proof.
    Probabilistic { seed: u64 },
}

impl Mode {
    pub fn tag(&self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Probabilistic { .. } => "probabilistic",
        }
    }
}

/// Size limits for exact mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guard {
    /// Largest `n + r` (or `n + |k|`) handled exactly.
    pub max_size: usize,
}

impl Default for Guard {
    fn default() -> Self {
        Guard { max_size: 6 }
    }
}
