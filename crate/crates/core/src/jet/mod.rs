//! One-dimensional jets, the Gelfand–Kazhdan form on the space of frames `S(ℝ)`, and
//! the local form of the Godbillon–Vey cocycle.

mod forms;
mod gk;
mod jet1d;
mod laurent;

pub use forms::{exterior_d, function_differential, pair_one_form, Dx, JetForm};
pub use gk::{
    alpha, check_maurer_cartan, field_in_chart, gk_form_components, gv_local_form, lift_velocity,
    pair_with_lift, CandidateReport, GvLocalForm,
};
pub use jet1d::Jet1D;
pub use laurent::Laurent;
