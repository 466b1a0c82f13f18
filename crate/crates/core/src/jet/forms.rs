use std::fmt;

use crate::dg::{Form, Monomial};
use crate::jet::Laurent;
use crate::scalar::Ring;

/// The differential `dx_k` of the jet coordinate `x_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dx(pub u8);

impl fmt::Display for Dx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dx{}", self.0)
    }
}

/// Differential form in the jet coordinates with Laurent polynomial coefficients.
pub type JetForm<K> = Form<Laurent<K>, Dx>;

/// `df = Σ_k ∂f/∂x_k dx_k`.
pub fn function_differential<K: Ring>(f: &Laurent<K>) -> JetForm<K> {
    let mut out = JetForm::zero();
    for k in 0..f.variable_count() {
        let p = f.partial(k);
        if !num_traits::Zero::is_zero(&p) {
            out.add_term(Monomial::single(Dx(k as u8)), p);
        }
    }
    out
}

/// Exterior derivative `d(f dx_I) = df ∧ dx_I`.
pub fn exterior_d<K: Ring>(a: &JetForm<K>) -> JetForm<K> {
    let mut out = JetForm::zero();
    for (m, f) in a.terms() {
        out = out
            + function_differential(f)
                .wedge(&JetForm::monomial(m.clone(), Laurent::constant(K::one())));
    }
    out
}

/// Value of a one-form at a point on a tangent vector with components `v[k] = ẋ_k`.
pub fn pair_one_form<K: Ring>(a: &JetForm<K>, point: &[K], v: &[K]) -> crate::Result<K> {
    let mut acc = K::zero();
    for (m, f) in a.terms() {
        let [Dx(k)] = m.gens() else {
            return Err(crate::Error::ArityMismatch {
                expected: 1,
                got: m.degree(),
            });
        };
        let vk = v.get(*k as usize).cloned().unwrap_or_else(K::zero);
        acc = acc + f.evaluate(point)? * vk;
    }
    Ok(acc)
}
