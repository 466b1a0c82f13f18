//! Numerical evaluation of group cocycles on `Diff(ℝ)` and `Diff₊(S¹)`.

mod cocycles;
mod group;
mod job;
mod quadrature;
mod random;

pub use cocycles::{
    bott_cocycle, coboundary, gv_cocycle, BottCocycle, ConstantCochain, GroupCochain, GvCocycle,
};
pub use group::GroupElement;
pub use job::{CocycleKind, Job, JobResult, JOB_VALIDATION_GRID};
pub use quadrature::{integrate, QuadratureConfig, QuadratureResult};
pub use random::{random_circle_diffeo, random_line_diffeo};
