//! Cochains on the Lie algebra `W_n` of formal vector fields.
//!
//! The generator `c^i_J` evaluates a field `ξ` to `∂_J ξ^i (0)`. [`WnComplex`] holds the
//! differential on generators up to the jet truncation order, [`evaluate_cochain`] and
//! [`ce_differential_oracle`] evaluate cochains on explicit polynomial fields, and the
//! [`formal`](self) submodule adds the formal-forms complex `C*(W_n; Ω*_n)` and `μ`.

mod complex;
mod field;
mod formal;
pub mod random;

pub use complex::{
    ce_differential_oracle, check_d_squared, evaluate_cochain, generator_differential, SquareCheck,
    WnComplex, WnComplexConfig,
};
pub use field::{FormalVectorField, Polynomial};
pub use formal::{
    check_formal_d_squared, check_mu_chain_map, formal_forms_differential, mu_inverse, mu_map,
    FormalFormsComplex, TargetComplex,
};
