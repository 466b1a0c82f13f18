pub mod char_forms;
pub mod conventions;
pub mod dg;
pub mod dsl;
pub mod error;
pub mod jet;
pub mod numeric;
pub mod relative;
pub mod scalar;
pub mod vey;
pub mod wn;

pub use error::{Error, Result};
pub use scalar::{Field, FirstOrder, Ring};

/// Exact rational coefficients used throughout the symbolic layer.
pub type Q = num_rational::BigRational;
/// Cochain over the rationals.
pub type QForm = dg::Form<Q>;
/// Matrix of rational cochains.
pub type QMatrixForm = dg::MatrixForm<Q>;
