//! Relative cochains: interior products and Lie derivatives along the linear vector
//! fields of `gl_n` and `so(n)`, and the reflection test standing in for the
//! disconnected part of `O(n)`.

use rayon::prelude::*;

use crate::dg::{Family, Form, GenId, Monomial};
use crate::error::{Error, Result};
use crate::scalar::Ring;
use crate::wn::{FormalVectorField, WnComplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinearAlgebraKind {
    Gl,
    So,
}

/// A basis of linear vector fields: `E_ab = x^b ∂_a` for `gl_n`, and
/// `A_ab = x^b ∂_a − x^a ∂_b` (`a < b`) for `so(n)`.
#[derive(Clone, Debug)]
pub struct LinearFieldBasis<K: Ring> {
    pub kind: LinearAlgebraKind,
    pub elements: Vec<(String, FormalVectorField<K>)>,
}

impl<K: Ring> LinearFieldBasis<K> {
    pub fn gl(n: usize) -> Self {
        let mut elements = Vec::with_capacity(n * n);
        for a in 1..=n {
            for b in 1..=n {
                elements.push((format!("E{a}{b}"), FormalVectorField::linear(n, 1, a, b)));
            }
        }
        LinearFieldBasis {
            kind: LinearAlgebraKind::Gl,
            elements,
        }
    }

    pub fn so(n: usize) -> Self {
        let mut elements = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                let x = FormalVectorField::linear(n, 1, a, b)
                    .add(&FormalVectorField::linear(n, 1, b, a).scale(&-K::one()));
                elements.push((format!("A{a}{b}"), x));
            }
        }
        LinearFieldBasis {
            kind: LinearAlgebraKind::So,
            elements,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Interior product: `g_1∧…∧g_q ↦ Σ_k (−1)^{k−1} g_k(X) g_1∧…ĝ_k…∧g_q`.
pub fn contract<K: Ring>(c: &Form<K>, x: &FormalVectorField<K>) -> Result<Form<K>> {
    let mut out = Form::zero();
    for (m, k) in c.terms() {
        for (pos, g) in m.gens().iter().enumerate() {
            let v = x.pair(g)?;
            if v.is_zero() {
                continue;
            }
            let coeff = k.clone() * v;
            out.add_term(m.without(pos), if pos % 2 == 0 { coeff } else { -coeff });
        }
    }
    Ok(out)
}

/// `L_X = i_X∘d + d∘i_X`.
pub fn lie_derivative<K: Ring>(
    complex: &WnComplex<K>,
    c: &Form<K>,
    x: &FormalVectorField<K>,
) -> Result<Form<K>> {
    Ok(contract(&complex.d(c)?, x)? + complex.d(&contract(c, x)?)?)
}

/// Which basis elements fail horizontality (`i_X c ≠ 0`) or invariance (`L_X c ≠ 0`).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelativityReport {
    pub checked: usize,
    pub horizontality_failures: Vec<String>,
    pub invariance_failures: Vec<String>,
}

impl RelativityReport {
    pub fn passed(&self) -> bool {
        self.horizontality_failures.is_empty() && self.invariance_failures.is_empty()
    }
}

pub fn is_relative<K: Ring>(
    complex: &WnComplex<K>,
    c: &Form<K>,
    basis: &LinearFieldBasis<K>,
) -> Result<RelativityReport> {
    let results = basis
        .elements
        .par_iter()
        .map(|(name, x)| {
            let i = contract(c, x)?;
            let l = lie_derivative(complex, c, x)?;
            Ok((name.clone(), i.is_zero(), l.is_zero()))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = RelativityReport {
        checked: results.len(),
        ..Default::default()
    };
    for (name, horizontal, invariant) in results {
        if !horizontal {
            report.horizontality_failures.push(name.clone());
        }
        if !invariant {
            report.invariance_failures.push(name);
        }
    }
    Ok(report)
}

/// Action of the reflection `x^a ↦ ε_a x^a`: `c^i_J ↦ ε_i Π_{j∈J} ε_j c^i_J`.
pub fn reflect<K: Ring>(c: &Form<K>, signs: &[i8]) -> Result<Form<K>> {
    c.substitute(
        |k| k.clone(),
        |g: &GenId| {
            if g.family() != Family::C {
                return Err(Error::UnknownGenerator(g.to_string()));
            }
            let sign_of = |i: u8| -> Result<i64> {
                signs
                    .get(i as usize - 1)
                    .map(|&s| s as i64)
                    .ok_or_else(|| Error::OutOfRange(format!("{g} with {} signs", signs.len())))
            };
            let mut s = sign_of(g.upper())?;
            for &j in g.lower() {
                s *= sign_of(j)?;
            }
            Ok(Form::monomial(Monomial::single(g.clone()), K::from_int(s)))
        },
    )
}

/// Invariance under `x^1 ↦ −x^1`, the orientation-reversing element of `O(n)`.
pub fn is_sign_flip_invariant<K: Ring>(c: &Form<K>, n: usize) -> Result<bool> {
    let mut signs = vec![1i8; n];
    signs[0] = -1;
    Ok(&reflect(c, &signs)? == c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::char_forms::CharTable;
    use crate::{QForm, Q};

    fn g(i: u8, j: &[u8]) -> QForm {
        Form::generator(GenId::c(i, j))
    }

    #[test]
    fn contraction_examples() {
        let xd = FormalVectorField::<Q>::linear(1, 1, 1, 1);
        assert!(contract(&g(1, &[]), &xd).unwrap().is_zero());
        assert_eq!(contract(&g(1, &[1]), &xd).unwrap(), QForm::one());
        assert_eq!(
            contract(&g(1, &[]).wedge(&g(1, &[1])), &xd).unwrap(),
            -g(1, &[])
        );
        assert!(contract(&QForm::one(), &xd).unwrap().is_zero());
    }

    #[test]
    fn lie_derivative_examples() {
        let cx = WnComplex::<Q>::new(1, 2).unwrap();
        let xd = FormalVectorField::<Q>::linear(1, 1, 1, 1);
        assert_eq!(lie_derivative(&cx, &g(1, &[]), &xd).unwrap(), g(1, &[]));
        assert!(lie_derivative(&cx, &QForm::scalar(Q::from_int(5)), &xd)
            .unwrap()
            .is_zero());
        let report = is_relative(&cx, &g(1, &[]), &LinearFieldBasis::gl(1)).unwrap();
        assert_eq!(report.invariance_failures, vec!["E11".to_string()]);
        assert!(report.horizontality_failures.is_empty());
    }

    #[test]
    fn characteristic_forms_are_relative() {
        let t = CharTable::<Q>::new(2, 2).unwrap();
        let gl = LinearFieldBasis::gl(2);
        let so = LinearFieldBasis::so(2);
        assert_eq!(gl.len(), 4);
        assert_eq!(so.len(), 1);
        for p in 1..=2 {
            assert!(is_relative(t.complex(), &t.psi_p(p).unwrap(), &gl)
                .unwrap()
                .passed());
        }
        let l1 = t.lambda_cap_p(1).unwrap();
        assert!(is_relative(t.complex(), &l1, &so).unwrap().passed());
        assert!(!is_relative(t.complex(), &l1, &gl).unwrap().passed());
    }

    #[test]
    fn sign_flip_in_one_dimension() {
        let t = CharTable::<Q>::new(1, 2).unwrap();
        assert_eq!(reflect(&g(1, &[1, 1]), &[-1]).unwrap(), -g(1, &[1, 1]));
        assert!(is_sign_flip_invariant(&t.lambda_cap_p(1).unwrap(), 1).unwrap());
        assert!(is_sign_flip_invariant(&t.psi_p(1).unwrap(), 1).unwrap());
        assert!(!is_sign_flip_invariant(&g(1, &[]), 1).unwrap());
    }
}
