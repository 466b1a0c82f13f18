use std::borrow::Cow;
use std::collections::HashMap;

use rayon::prelude::*;

use crate::dg::{DerivationTable, Family, Form, GenId};
use crate::error::{Error, Result};
use crate::scalar::Ring;
use crate::wn::{SquareCheck, WnComplex, WnComplexConfig};

fn check_generator(cfg: WnComplexConfig, g: &GenId, family: Family) -> Result<()> {
    if g.family() != family {
        return Err(Error::UnknownGenerator(g.to_string()));
    }
    if g.upper() == 0 || g.upper() > cfg.n || g.lower().iter().any(|&j| j == 0 || j > cfg.n) {
        return Err(Error::OutOfRange(format!("{g} in dimension {}", cfg.n)));
    }
    if g.order() > cfg.order {
        return Err(Error::Truncation {
            generator: g.to_string(),
            order: g.order(),
            max: cfg.order,
        });
    }
    Ok(())
}

/// Total differential `D` of `C*(W_n; Ω*_n)` on one generator `f^i_J` or `dx^i`:
///
/// `D f^i_J = Σ_{k≥1} Σ_{s_1<…<s_k} Σ_l f^i_{l,J∖S} ∧ f^l_{J_S} − Σ_l f^i_{lJ} ∧ dx^l`,
/// `D dx^i = Σ_j f^i_j ∧ dx^j`.
pub fn formal_forms_differential<K: Ring>(cfg: WnComplexConfig, g: &GenId) -> Result<Form<K>> {
    let n = cfg.n;
    if g.family() == Family::Dx {
        if g.upper() == 0 || g.upper() > n {
            return Err(Error::OutOfRange(format!("{g} in dimension {n}")));
        }
        return Ok((1..=n)
            .map(|j| Form::product_of(&[GenId::f(g.upper(), &[j]), GenId::dx(j)]))
            .sum());
    }
    check_generator(cfg, g, Family::F)?;
    let i = g.upper();
    let lower = g.lower();
    let r = lower.len();
    let mut out = Form::zero();
    for mask in 1u32..1 << r {
        let mut rest = Vec::with_capacity(r + 1);
        let mut picked = Vec::with_capacity(r);
        for (pos, &j) in lower.iter().enumerate() {
            if mask & (1 << pos) != 0 {
                picked.push(j);
            } else {
                rest.push(j);
            }
        }
        for l in 1..=n {
            let mut first = rest.clone();
            first.push(l);
            out = out + Form::product_of(&[GenId::f(i, &first), GenId::f(l, &picked)]);
        }
    }
    for l in 1..=n {
        let mut first = lower.to_vec();
        first.push(l);
        out = out - Form::product_of(&[GenId::f(i, &first), GenId::dx(l)]);
    }
    Ok(out)
}

/// `C*(W_n; Ω*_n)` with its total differential, truncated at jet order `R`.
#[derive(Clone, Debug)]
pub struct FormalFormsComplex<K: Ring> {
    cfg: WnComplexConfig,
    table: HashMap<GenId, Form<K>>,
}

impl<K: Ring> FormalFormsComplex<K> {
    pub fn new(n: u8, order: usize) -> Result<Self> {
        let cfg = WnComplexConfig::new(n, order)?;
        let table = source_generators(n, order)
            .into_iter()
            .map(|g| Ok((g.clone(), formal_forms_differential(cfg, &g)?)))
            .collect::<Result<HashMap<_, _>>>()?;
        Ok(FormalFormsComplex { cfg, table })
    }

    pub fn config(&self) -> WnComplexConfig {
        self.cfg
    }

    pub fn d(&self, a: &Form<K>) -> Result<Form<K>> {
        a.apply_antiderivation(self)
    }
}

impl<K: Ring> DerivationTable<K, GenId> for FormalFormsComplex<K> {
    fn image(&self, g: &GenId) -> Result<Cow<'_, Form<K>>> {
        match self.table.get(g) {
            Some(dg) => Ok(Cow::Borrowed(dg)),
            None => {
                check_generator(self.cfg, g, Family::F)?;
                Err(Error::UnknownGenerator(g.to_string()))
            }
        }
    }
}

/// `C*(W_n) ⊗ Λ*((ℝⁿ)')`: the differential of `C*(W_n)` on `c`-generators and zero on
/// the exterior generators `dx^i`.
#[derive(Clone, Debug)]
pub struct TargetComplex<K: Ring> {
    inner: WnComplex<K>,
}

impl<K: Ring> TargetComplex<K> {
    pub fn new(n: u8, order: usize) -> Result<Self> {
        Ok(TargetComplex {
            inner: WnComplex::new(n, order)?,
        })
    }

    pub fn d(&self, a: &Form<K>) -> Result<Form<K>> {
        a.apply_antiderivation(self)
    }
}

impl<K: Ring> DerivationTable<K, GenId> for TargetComplex<K> {
    fn image(&self, g: &GenId) -> Result<Cow<'_, Form<K>>> {
        if g.family() == Family::Dx && g.upper() >= 1 && g.upper() <= self.inner.n() {
            return Ok(Cow::Owned(Form::zero()));
        }
        self.inner.image(g)
    }
}

fn source_generators(n: u8, order: usize) -> Vec<GenId> {
    (0..=order)
        .flat_map(|r| GenId::all_of_order(Family::F, n, r))
        .chain((1..=n).map(GenId::dx))
        .collect()
}

/// The graded-algebra morphism `μ`: `f^i ↦ dx^i + c^i`, `f^i_J ↦ c^i_J` for `|J| ≥ 1`,
/// `dx^i ↦ −c^i`.
pub fn mu_map<K: Ring>(a: &Form<K>) -> Result<Form<K>> {
    a.substitute(
        |k| k.clone(),
        |g| match g.family() {
            Family::F if g.order() == 0 => {
                Ok(Form::generator(GenId::dx(g.upper()))
                    + Form::generator(GenId::c(g.upper(), &[])))
            }
            Family::F => Ok(Form::generator(g.with_family(Family::C))),
            Family::Dx => Ok(-Form::generator(GenId::c(g.upper(), &[]))),
            Family::C => Err(Error::UnknownGenerator(g.to_string())),
        },
    )
}

/// Inverse of [`mu_map`]: `c^i ↦ −dx^i`, `dx^i ↦ f^i + dx^i`, `c^i_J ↦ f^i_J`.
pub fn mu_inverse<K: Ring>(a: &Form<K>) -> Result<Form<K>> {
    a.substitute(
        |k| k.clone(),
        |g| match g.family() {
            Family::C if g.order() == 0 => Ok(-Form::generator(GenId::dx(g.upper()))),
            Family::C => Ok(Form::generator(g.with_family(Family::F))),
            Family::Dx => {
                Ok(Form::generator(GenId::f(g.upper(), &[]))
                    + Form::generator(GenId::dx(g.upper())))
            }
            Family::F => Err(Error::UnknownGenerator(g.to_string())),
        },
    )
}

/// Checks `D∘D = 0` on every `f`- and `dx`-generator up to jet order `order`.
pub fn check_formal_d_squared<K: Ring>(n: u8, order: usize) -> Result<SquareCheck> {
    let complex = FormalFormsComplex::<K>::new(n, order + 1)?;
    let gens = source_generators(n, order);
    let failures = gens
        .par_iter()
        .map(|g| {
            let dd = complex.d(&complex.d(&Form::generator(g.clone()))?)?;
            Ok((!dd.is_zero()).then(|| format!("D(D {g}) = {dd}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SquareCheck {
        generators_checked: gens.len(),
        failures: failures.into_iter().flatten().collect(),
    })
}

/// Checks `μ∘D = d∘μ` and `μ⁻¹∘μ = id` on every source generator, and `μ∘μ⁻¹ = id` on
/// every target generator, up to jet order `order`.
pub fn check_mu_chain_map<K: Ring>(n: u8, order: usize) -> Result<SquareCheck> {
    let source = FormalFormsComplex::<K>::new(n, order)?;
    let target = TargetComplex::<K>::new(n, order)?;
    let gens = source_generators(n, order);
    let mut failures: Vec<String> = gens
        .par_iter()
        .map(|g| {
            let a = Form::generator(g.clone());
            let lhs = mu_map(&source.d(&a)?)?;
            let rhs = target.d(&mu_map(&a)?)?;
            let mut out = Vec::new();
            if lhs != rhs {
                out.push(format!("mu(D {g}) = {lhs} but d(mu {g}) = {rhs}"));
            }
            if mu_inverse(&mu_map(&a)?)? != a {
                out.push(format!("mu is not inverted on {g}"));
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let target_gens: Vec<GenId> = (0..=order)
        .flat_map(|r| GenId::all_of_order(Family::C, n, r))
        .chain((1..=n).map(GenId::dx))
        .collect();
    for g in &target_gens {
        let b = Form::<K>::generator(g.clone());
        if mu_map(&mu_inverse(&b)?)? != b {
            failures.push(format!("mu^-1 is not inverted on {g}"));
        }
    }
    Ok(SquareCheck {
        generators_checked: gens.len() + target_gens.len(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QForm, Q};

    fn g(x: GenId) -> QForm {
        Form::generator(x)
    }

    #[test]
    fn differential_examples() {
        let cfg = WnComplexConfig::new(1, 2).unwrap();
        assert_eq!(
            formal_forms_differential::<Q>(cfg, &GenId::dx(1)).unwrap(),
            g(GenId::f(1, &[1])).wedge(&g(GenId::dx(1)))
        );
        assert_eq!(
            formal_forms_differential::<Q>(cfg, &GenId::f(1, &[])).unwrap(),
            -g(GenId::f(1, &[1])).wedge(&g(GenId::dx(1)))
        );
        let cx = FormalFormsComplex::<Q>::new(1, 2).unwrap();
        assert!(cx.d(&cx.d(&g(GenId::dx(1))).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn mu_examples() {
        assert_eq!(
            mu_map(&g(GenId::f(1, &[]))).unwrap(),
            g(GenId::dx(1)) + g(GenId::c(1, &[]))
        );
        let a = g(GenId::dx(1)).wedge(&g(GenId::f(1, &[1])));
        assert_eq!(
            mu_map(&a).unwrap(),
            -g(GenId::c(1, &[])).wedge(&g(GenId::c(1, &[1])))
        );
    }

    #[test]
    fn mu_is_a_chain_isomorphism() {
        for n in 1..=2 {
            let report = check_mu_chain_map::<Q>(n, 2).unwrap();
            assert!(report.passed(), "{:?}", report.failures);
            let report = check_formal_d_squared::<Q>(n, 2).unwrap();
            assert!(report.passed(), "{:?}", report.failures);
        }
    }
}
