//! Characteristic cochains of `W_n`: the matrices `γ`, `λ`, `α`, `Ψ`, the traces
//! `γ_p`, `λ_p`, `Ψ_p`, invariant-polynomial polarization and the transgression `Λ_p`.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::dg::{integrate_t, Family, Form, GenId, Generator, MatrixForm, TPoly};
use crate::error::{Error, Result};
use crate::scalar::Ring;
use crate::wn::WnComplex;

/// The characteristic matrices of `C*(W_n)` at one truncation order.
#[derive(Clone, Debug)]
pub struct CharTable<K: Ring> {
    complex: WnComplex<K>,
    pub gamma: MatrixForm<K>,
    pub lambda: MatrixForm<K>,
    pub alpha: MatrixForm<K>,
    pub psi: MatrixForm<K>,
    pub psi_transpose: MatrixForm<K>,
    /// `Ψ(t) = ½tΨ + ½(t−1)Ψᵗ + (t−t²)[λ,λ]`.
    pub psi_t: MatrixForm<TPoly<K>>,
}

fn c<K: Ring>(i: usize, lower: &[usize]) -> Form<K> {
    let lower: Vec<u8> = lower.iter().map(|&j| j as u8 + 1).collect();
    Form::generator(GenId::c(i as u8 + 1, &lower))
}

impl<K: Ring> CharTable<K> {
    /// Builds the table over `C*(W_n)` truncated at `order ≥ 2`.
    pub fn new(n: u8, order: usize) -> Result<Self> {
        if order < 2 {
            return Err(Error::OutOfRange(format!(
                "characteristic forms need jet order at least 2, got {order}"
            )));
        }
        let complex = WnComplex::new(n, order)?;
        let n = n as usize;
        let gamma = MatrixForm::from_fn(n, |i, j| c(i, &[j]));
        let half = K::from_ratio(1, 2);
        let lambda = MatrixForm::from_fn(n, |i, j| (c::<K>(i, &[j]) + c(j, &[i])).scale(&half));
        let alpha = MatrixForm::from_fn(n, |i, j| (c::<K>(i, &[j]) - c(j, &[i])).scale(&half));
        let psi = MatrixForm::from_fn(n, |i, j| {
            (0..n).map(|k| c::<K>(i, &[j, k]).wedge(&c(k, &[]))).sum()
        });
        let psi_transpose = psi.transpose();
        let ll = lambda.bracket(&lambda)?;
        let lift =
            |m: &MatrixForm<K>, p: TPoly<K>| m.map_coeffs(|k| TPoly::constant(k.clone())).scale(&p);
        let psi_t = lift(&psi, TPoly::from_ratios(&[(0, 1), (1, 2)]))
            .add(&lift(
                &psi_transpose,
                TPoly::from_ratios(&[(-1, 2), (1, 2)]),
            ))?
            .add(&lift(&ll, TPoly::from_ratios(&[(0, 1), (1, 1), (-1, 1)])))?;
        Ok(CharTable {
            complex,
            gamma,
            lambda,
            alpha,
            psi,
            psi_transpose,
            psi_t,
        })
    }

    pub fn n(&self) -> usize {
        self.gamma.n()
    }

    pub fn complex(&self) -> &WnComplex<K> {
        &self.complex
    }

    pub fn d(&self, a: &Form<K>) -> Result<Form<K>> {
        self.complex.d(a)
    }

    pub fn d_matrix(&self, m: &MatrixForm<K>) -> Result<MatrixForm<K>> {
        m.try_map(|e| e.apply_antiderivation(&self.complex))
    }

    fn check_p(&self, p: usize) -> Result<()> {
        if p == 0 || p > self.n() {
            return Err(Error::OutOfRange(format!("p = {p} with n = {}", self.n())));
        }
        Ok(())
    }

    /// `Ψ_p = tr Ψ^p`.
    pub fn psi_p(&self, p: usize) -> Result<Form<K>> {
        self.check_p(p)?;
        Ok(self.psi.power(p).trace())
    }

    /// `γ_p = tr γ^{2p−1}`.
    pub fn gamma_p(&self, p: usize) -> Result<Form<K>> {
        self.check_p(p)?;
        Ok(self.gamma.power(2 * p - 1).trace())
    }

    /// `λ_p = tr λ^{2p−1}`.
    pub fn lambda_p(&self, p: usize) -> Result<Form<K>> {
        self.check_p(p)?;
        Ok(self.lambda.power(2 * p - 1).trace())
    }

    /// `∫_0^1 Q_p(λ, Ψ(t)) dt` with `Q_p(X, X') = Q̄_p(X, X', …, X')`.
    pub fn transgression_integral(&self, p: usize) -> Result<Form<K>> {
        self.check_p(p)?;
        let lambda = self.lambda.map_coeffs(|k| TPoly::constant(k.clone()));
        let mut args = vec![lambda];
        args.extend(std::iter::repeat_n(self.psi_t.clone(), p - 1));
        Ok(integrate_t(&polarize(&args)?))
    }

    /// `Λ_p = (p·p!·2^{p−1}/((p+1)⋯(2p+1))) ∫_0^1 Q_p(λ, Ψ(t)) dt` for odd `p`.
    pub fn lambda_cap_p(&self, p: usize) -> Result<Form<K>> {
        if p.is_multiple_of(2) {
            return Err(Error::OutOfRange(format!("Λ_p needs odd p, got {p}")));
        }
        let (num, den) = lambda_cap_prefactor(p);
        Ok(self
            .transgression_integral(p)?
            .scale(&K::from_ratio(num, den)))
    }

    /// `κ_p` with `dΛ_p = κ_p Ψ_p`, or `None` if the two are not proportional.
    pub fn kappa_p(&self, p: usize) -> Result<Option<K>> {
        let d = self.d(&self.lambda_cap_p(p)?)?;
        proportionality(&d, &self.psi_p(p)?)
    }

    /// Exact residuals of the structure equations.
    pub fn verify_structure_identities(&self) -> Result<Vec<IdentityCheck>> {
        let half = K::from_ratio(1, 2);
        let sym = self.psi.add(&self.psi_transpose)?.scale(&half);
        let dgamma = self.d_matrix(&self.gamma)?;
        let dlambda = self.d_matrix(&self.lambda)?;
        let dpsi = self.d_matrix(&self.psi)?;
        let dpsi_t = self.d_matrix(&self.psi_transpose)?;
        let a_psi = self.alpha.bracket(&self.psi)?;
        let mut out = vec![
            IdentityCheck::new(
                "d gamma = Psi + gamma^gamma",
                &dgamma.sub(&self.psi.add(&self.gamma.matrix_wedge(&self.gamma)?)?)?,
            ),
            IdentityCheck::new(
                "d lambda = [alpha,lambda] + (Psi + Psi^t)/2",
                &dlambda.sub(&self.alpha.bracket(&self.lambda)?.add(&sym)?)?,
            ),
        ];
        for (name, omega) in [
            ("Psi", &self.psi),
            ("Psi^t", &self.psi_transpose),
            ("(Psi + Psi^t)/2", &sym),
        ] {
            out.push(IdentityCheck::new(
                &format!("d Psi = [lambda,Omega] + [alpha,Psi] with Omega = {name}"),
                &dpsi.sub(&self.lambda.bracket(omega)?.add(&a_psi)?)?,
            ));
        }
        out.push(IdentityCheck::new(
            "d Psi^t = -[lambda,Psi^t] + [alpha,Psi^t]",
            &dpsi_t
                .add(&self.lambda.bracket(&self.psi_transpose)?)?
                .sub(&self.alpha.bracket(&self.psi_transpose)?)?,
        ));
        Ok(out)
    }

    /// Residual of the graded invariance identity
    /// `Σ_i (−1)^{k_1+…+k_{i−1}+1} Q̄_p(ω_1,…,[ω,ω_i],…,ω_p)` for a degree-one `ω`.
    pub fn invariance_residual(
        &self,
        omega: &MatrixForm<K>,
        args: &[MatrixForm<K>],
    ) -> Result<Form<K>> {
        invariance_residual(omega, args)
    }

    /// Random instance of the invariance identity drawn from `{γ, λ, α, Ψ, Ψᵗ}`.
    pub fn random_invariance_residual<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        p: usize,
    ) -> Result<Form<K>> {
        let ones = [&self.gamma, &self.lambda, &self.alpha];
        let all = [
            &self.gamma,
            &self.lambda,
            &self.alpha,
            &self.psi,
            &self.psi_transpose,
        ];
        let omega = (*ones.choose(rng).expect("nonempty")).clone();
        let args: Vec<MatrixForm<K>> = (0..p)
            .map(|_| (*all.choose(rng).expect("nonempty")).clone())
            .collect();
        invariance_residual(&omega, &args)
    }
}

/// `(p·p!·2^{p−1}, (p+1)⋯(2p+1))`.
pub fn lambda_cap_prefactor(p: usize) -> (i64, i64) {
    let p = p as i64;
    let fact: i64 = (1..=p).product();
    let den: i64 = (p + 1..=2 * p + 1).product();
    (p * fact * (1 << (p - 1)), den)
}

/// `p!/((p+1)⋯(2p+1))`.
pub fn stated_gl_factor(p: usize) -> (i64, i64) {
    let p = p as i64;
    ((1..=p).product(), (p + 1..=2 * p + 1).product())
}

/// Restriction to `gl_n`: every generator other than the `c^i_j` is sent to zero.
pub fn restrict_to_gl<K: Ring>(a: &Form<K>) -> Form<K> {
    a.restrict(|g| g.family() == Family::C && g.order() == 1)
}

/// The scalar `κ` with `a = κ b`, if one exists.
pub fn proportionality<K: Ring, G: Generator>(a: &Form<K, G>, b: &Form<K, G>) -> Result<Option<K>> {
    let Some((m, kb)) = b.terms().next() else {
        return Ok(a.is_zero().then(K::zero));
    };
    let inv = kb
        .try_inverse()
        .ok_or_else(|| Error::OutOfRange("coefficient is not invertible".into()))?;
    let kappa = a.coefficient(m) * inv;
    Ok((a.clone() - b.scale(&kappa)).is_zero().then_some(kappa))
}

fn permutations(p: usize) -> Vec<Vec<usize>> {
    if p == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for perm in permutations(p - 1) {
        for pos in 0..=perm.len() {
            let mut next = perm.clone();
            next.insert(pos, p - 1);
            out.push(next);
        }
    }
    out
}

/// `Q̄_p(X_1,…,X_p) = (1/p!) Σ_σ ε(σ) tr(X_{σ(1)}∧…∧X_{σ(p)})`, where `ε(σ)` is the
/// Koszul sign of reordering the graded arguments.
pub fn polarize<K: Ring>(args: &[MatrixForm<K>]) -> Result<Form<K>> {
    let p = args.len();
    if p == 0 {
        return Err(Error::ArityMismatch {
            expected: 1,
            got: 0,
        });
    }
    let n = args[0].n();
    let degrees = args
        .iter()
        .map(|a| {
            if a.n() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: a.n(),
                });
            }
            a.degree().value()
        })
        .collect::<Result<Vec<_>>>()?;
    let perms = permutations(p);
    let mut acc = Form::zero();
    for sigma in &perms {
        let mut odd = false;
        for a in 0..p {
            for b in a + 1..p {
                if sigma[a] > sigma[b] && degrees[sigma[a]] % 2 == 1 && degrees[sigma[b]] % 2 == 1 {
                    odd = !odd;
                }
            }
        }
        let mut prod = args[sigma[0]].clone();
        for &k in &sigma[1..] {
            prod = prod.matrix_wedge(&args[k])?;
        }
        let tr = prod.trace();
        acc = if odd { acc - tr } else { acc + tr };
    }
    Ok(acc.scale(&K::from_ratio(1, perms.len() as i64)))
}

fn invariance_residual<K: Ring>(omega: &MatrixForm<K>, args: &[MatrixForm<K>]) -> Result<Form<K>> {
    let mut acc = Form::zero();
    let mut shift = 0usize;
    for i in 0..args.len() {
        let mut modified = args.to_vec();
        modified[i] = omega.bracket(&args[i])?;
        let term = polarize(&modified)?;
        acc = if (shift + 1) % 2 == 1 {
            acc - term
        } else {
            acc + term
        };
        shift += args[i].degree().value()?;
    }
    Ok(acc)
}

/// Named exact residual of an identity between matrix forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub residual_terms: usize,
}

impl IdentityCheck {
    fn new<K: Ring>(name: &str, residual: &MatrixForm<K>) -> Self {
        IdentityCheck {
            name: name.to_string(),
            residual_terms: residual.entries().iter().map(Form::len).sum(),
        }
    }

    pub fn holds(&self) -> bool {
        self.residual_terms == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QForm, Q};

    fn g(i: u8, j: &[u8]) -> QForm {
        Form::generator(GenId::c(i, j))
    }

    #[test]
    fn one_dimensional_examples() {
        let t = CharTable::<Q>::new(1, 2).unwrap();
        assert_eq!(t.psi_p(1).unwrap(), g(1, &[1, 1]).wedge(&g(1, &[])));
        assert!(t.psi.power(2).trace().is_zero());
        assert_eq!(t.gamma_p(1).unwrap(), g(1, &[1]));
        assert_eq!(t.lambda_p(1).unwrap(), g(1, &[1]));
        assert_eq!(t.lambda_cap_p(1).unwrap(), g(1, &[1]).scale_ratio(1, 6));
        assert_eq!(t.kappa_p(1).unwrap(), Some(Q::from_ratio(1, 6)));
    }

    #[test]
    fn two_dimensional_traces() {
        let t = CharTable::<Q>::new(2, 2).unwrap();
        assert!(t.lambda_p(2).unwrap().is_zero());
        assert_eq!(t.gamma_p(1).unwrap(), g(1, &[1]) + g(2, &[2]));
        for p in 1..=2 {
            assert!(t.d(&t.psi_p(p).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn interpolant_endpoints() {
        let t = CharTable::<Q>::new(2, 2).unwrap();
        let at = |v: Q| t.psi_t.map_coeffs(|c| c.evaluate(&v));
        assert_eq!(at(Q::from_int(0)), t.psi_transpose.scale_ratio(-1, 2));
        assert_eq!(at(Q::from_int(1)), t.psi.scale_ratio(1, 2));
        let max_deg = t
            .psi_t
            .entries()
            .iter()
            .flat_map(|e| e.terms().filter_map(|(_, c)| c.degree()))
            .max();
        assert_eq!(max_deg, Some(2));
    }

    #[test]
    fn polarization_basics() {
        let t = CharTable::<Q>::new(2, 2).unwrap();
        assert_eq!(
            polarize(std::slice::from_ref(&t.lambda)).unwrap(),
            t.lambda_p(1).unwrap()
        );
        let a = t.psi.clone();
        assert_eq!(
            polarize(&[a.clone(), a.clone()]).unwrap(),
            a.matrix_wedge(&a).unwrap().trace()
        );
        assert!(matches!(
            polarize::<Q>(&[]),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn structure_identities_in_dimension_two() {
        let t = CharTable::<Q>::new(2, 3).unwrap();
        let checks = t.verify_structure_identities().unwrap();
        let holds = |prefix: &str| {
            checks
                .iter()
                .find(|c| c.name.starts_with(prefix))
                .unwrap()
                .holds()
        };
        assert!(holds("d gamma"));
        assert!(holds("d lambda"));
        assert!(holds(
            "d Psi = [lambda,Omega] + [alpha,Psi] with Omega = Psi"
        ));
        assert!(holds("d Psi^t"));
    }

    #[test]
    fn prefactors() {
        assert_eq!(lambda_cap_prefactor(1), (1, 6));
        assert_eq!(lambda_cap_prefactor(3), (72, 840));
        assert_eq!(stated_gl_factor(3), (6, 840));
    }
}
