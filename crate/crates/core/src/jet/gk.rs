use crate::char_forms::{proportionality, CharTable};
use crate::dg::{Family, Form, GenId};
use crate::error::{Error, Result};
use crate::jet::{exterior_d, function_differential, pair_one_form, Dx, Jet1D, JetForm, Laurent};
use crate::scalar::{FirstOrder, Ring};
use crate::wn::{generator_differential, WnComplexConfig};

/// Components `ω_r = α(c_r)`, `r = 0, …, R−1`, of the Gelfand–Kazhdan form
/// `ω(τ) = −j_0 (d/dt)(k_0^{-1} ∘ k_t)`, as one-forms on the jet space with coordinates
/// `x_0, …, x_R`. `c_r` is the generator `c^1_{1…1}` with `r` lower indices.
///
/// The velocity is carried by first-order infinitesimals: `x_k(t) = x_k + t ẋ_k`, and the
/// coefficient of `ẋ_k` is the `dx_k` component. Working at jet order `R` determines the
/// components of order below `R` exactly.
pub fn gk_form_components<K: Ring>(order: usize) -> Result<Vec<JetForm<K>>> {
    if order < 1 {
        return Err(Error::OutOfRange(
            "the Gelfand–Kazhdan form needs jet order at least 1".into(),
        ));
    }
    let centered = Jet1D::new(
        std::iter::once(Laurent::constant(K::zero()))
            .chain((1..=order).map(Laurent::var))
            .collect(),
    );
    let inverse = centered.invert()?.map(|c| FirstOrder::constant(c.clone()));
    let moving = Jet1D::new(
        std::iter::once(FirstOrder::variable(Laurent::constant(K::zero()), 0))
            .chain((1..=order).map(|k| FirstOrder::variable(Laurent::var(k), k)))
            .collect(),
    );
    let path = moving.compose(&inverse)?;
    Ok((0..order)
        .map(|r| {
            let coeff = &path.coeffs()[r];
            let mut form = JetForm::zero();
            for k in 0..=order {
                let c = coeff.diff_component(k);
                form = form + JetForm::monomial(crate::dg::Monomial::single(Dx(k as u8)), -c);
            }
            form
        })
        .collect())
}

/// The realization `α: C*(W_1) → Ω*(S(ℝ))`, `c_r ↦ ω_r`, extended multiplicatively.
pub fn alpha<K: Ring>(c: &Form<K>, omegas: &[JetForm<K>]) -> Result<JetForm<K>> {
    c.substitute(
        |k| Laurent::constant(k.clone()),
        |g: &GenId| {
            if g.family() != Family::C || g.upper() != 1 || g.max_index() > 1 {
                return Err(Error::UnknownGenerator(format!(
                    "{g} is not a generator of C*(W_1)"
                )));
            }
            omegas
                .get(g.order())
                .cloned()
                .ok_or_else(|| Error::Truncation {
                    generator: g.to_string(),
                    order: g.order(),
                    max: omegas.len().saturating_sub(1),
                })
        },
    )
}

/// Checks `dω_r = α(dc_r)` for every `r` whose right side is determined at jet order
/// `R`, i.e. `r ≤ R − 2`; this is the Maurer–Cartan equation `dω = −½[ω,ω]` read
/// componentwise. Returns the checked orders with the outcome.
pub fn check_maurer_cartan<K: Ring>(order: usize) -> Result<Vec<(usize, bool)>> {
    let omegas = gk_form_components::<K>(order)?;
    let mut out = Vec::new();
    for r in 0..order.saturating_sub(1) {
        let cfg = WnComplexConfig::new(1, r)?;
        let dc = generator_differential::<K>(cfg, 1, &vec![1; r])?;
        let lhs = exterior_d(&omegas[r]);
        let rhs = alpha(&dc, &omegas)?;
        out.push((r, lhs == rhs));
    }
    Ok(out)
}

/// Velocity `(ẋ_0, …, ẋ_R)` at the frame `k` of the lift of a vector field `X`: the jet
/// of `X ∘ k`. `x_field` is the jet of `X` at `k(0)`.
pub fn lift_velocity<K: Ring>(frame: &Jet1D<K>, x_field: &Jet1D<K>) -> Result<Vec<K>> {
    let mut centered = frame.coeffs().to_vec();
    centered[0] = K::zero();
    Ok(Jet1D::new(centered).compose(x_field)?.coeffs().to_vec())
}

/// Derivatives at `0` of `X` written in the chart `k`, namely `(X ∘ k)/k'`, up to order
/// `R − 1`.
pub fn field_in_chart<K: Ring>(frame: &Jet1D<K>, x_field: &Jet1D<K>) -> Result<Jet1D<K>> {
    let r = frame.order();
    let along = Jet1D::new(lift_velocity(frame, x_field)?).truncate(r - 1);
    along.mul(&frame.derivative().reciprocal()?)
}

/// `ω_r(X̃)` at `frame` for `r < R`, to be compared with `−(d/du)^r ((X∘k)/k')(0)`.
pub fn pair_with_lift<K: Ring>(
    omegas: &[JetForm<K>],
    frame: &Jet1D<K>,
    x_field: &Jet1D<K>,
) -> Result<Vec<K>> {
    let v = lift_velocity(frame, x_field)?;
    omegas
        .iter()
        .map(|w| pair_one_form(w, frame.coeffs(), &v))
        .collect()
}

/// One candidate coordinate `y²` in the comparison of `α(c_{1,1})` with `dy∧dy¹∧dy²`.
#[derive(Clone, Debug)]
pub struct CandidateReport<K: Ring> {
    pub label: String,
    pub triple: JetForm<K>,
    /// The rational `κ` with `α(c_{1,1}) = κ dy∧dy¹∧dy²`, if one exists.
    pub constant: Option<K>,
}

#[derive(Clone, Debug)]
pub struct GvLocalForm<K: Ring> {
    /// `α(Λ_1∧Ψ_1)`.
    pub form: JetForm<K>,
    pub closed: bool,
    pub candidates: Vec<CandidateReport<K>>,
}

impl<K: Ring> GvLocalForm<K> {
    /// The first candidate proportional to the computed form.
    pub fn matching(&self) -> Option<&CandidateReport<K>> {
        self.candidates.iter().find(|c| c.constant.is_some())
    }
}

/// `α(c_{1,1})` for `c_{1,1} = Λ_1∧Ψ_1`, compared with `dy∧dy¹∧dy²` where `y = x_0`,
/// `dy¹ = dx_1/x_1` and `y²` ranges over `x_2/x_1`, `x_2/x_1²` and `x_2/x_0²`.
pub fn gv_local_form<K: Ring>() -> Result<GvLocalForm<K>> {
    let omegas = gk_form_components::<K>(3)?;
    let table = CharTable::<K>::new(1, 2)?;
    let c11 = table.lambda_cap_p(1)?.wedge(&table.psi_p(1)?);
    let form = alpha(&c11, &omegas)?;
    let closed = exterior_d(&form).is_zero();
    let dy = function_differential(&Laurent::<K>::var(0));
    let dy1 = JetForm::monomial(crate::dg::Monomial::single(Dx(1)), Laurent::var_pow(1, -1));
    let x2 = Laurent::<K>::var(2);
    let candidates = [
        ("x2/x1", x2.clone() * Laurent::var_pow(1, -1)),
        ("x2/x1^2", x2.clone() * Laurent::var_pow(1, -2)),
        ("x2/x0^2", x2 * Laurent::var_pow(0, -2)),
    ]
    .into_iter()
    .map(|(label, y2)| {
        let triple = dy.wedge(&dy1).wedge(&function_differential(&y2));
        let constant = proportionality(&form, &triple)
            .ok()
            .flatten()
            .and_then(|k| k.as_constant())
            .filter(|k| !k.is_zero());
        CandidateReport {
            label: label.to_string(),
            triple,
            constant,
        }
    })
    .collect();
    Ok(GvLocalForm {
        form,
        closed,
        candidates,
    })
}
