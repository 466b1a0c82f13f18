use std::borrow::Cow;
use std::collections::HashMap;

use rayon::prelude::*;

use crate::dg::{DerivationTable, Family, Form, GenId};
use crate::error::{Error, Result};
use crate::scalar::Ring;
use crate::wn::FormalVectorField;

/// Dimension and jet truncation order of a truncated complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WnComplexConfig {
    pub n: u8,
    pub order: usize,
}

impl WnComplexConfig {
    pub fn new(n: u8, order: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("dimension must be at least 1".into()));
        }
        Ok(WnComplexConfig { n, order })
    }
}

fn check_indices(n: u8, upper: u8, lower: &[u8]) -> Result<()> {
    if upper == 0 || upper > n || lower.iter().any(|&j| j == 0 || j > n) {
        return Err(Error::OutOfRange(format!(
            "indices {upper}|{lower:?} in dimension {n}"
        )));
    }
    Ok(())
}

/// Splits a multiset over every subset of its positions, yielding `(J∖S, J_S)`.
fn position_splits(lower: &[u8]) -> impl Iterator<Item = (Vec<u8>, Vec<u8>)> + '_ {
    let r = lower.len();
    (0u32..1 << r).map(move |mask| {
        let mut rest = Vec::with_capacity(r);
        let mut picked = Vec::with_capacity(r);
        for (pos, &j) in lower.iter().enumerate() {
            if mask & (1 << pos) != 0 {
                picked.push(j);
            } else {
                rest.push(j);
            }
        }
        (rest, picked)
    })
}

/// `d c^i_J = Σ_{S ⊆ positions of J} Σ_l c^i_{l, J∖S} ∧ c^l_{J_S}`.
pub fn generator_differential<K: Ring>(
    cfg: WnComplexConfig,
    i: u8,
    lower: &[u8],
) -> Result<Form<K>> {
    check_indices(cfg.n, i, lower)?;
    if lower.len() > cfg.order {
        return Err(Error::Truncation {
            generator: GenId::c(i, lower).to_string(),
            order: lower.len(),
            max: cfg.order,
        });
    }
    let mut out = Form::zero();
    for (rest, picked) in position_splits(lower) {
        for l in 1..=cfg.n {
            let mut first = rest.clone();
            first.push(l);
            out = out + Form::product_of(&[GenId::c(i, &first), GenId::c(l, &picked)]);
        }
    }
    Ok(out)
}

/// `C*(W_n)` truncated at jet order `R`: the differential is tabulated on every
/// generator `c^i_J` with `|J| ≤ R`.
#[derive(Clone, Debug)]
pub struct WnComplex<K: Ring> {
    cfg: WnComplexConfig,
    table: HashMap<GenId, Form<K>>,
}

impl<K: Ring> WnComplex<K> {
    pub fn new(n: u8, order: usize) -> Result<Self> {
        let cfg = WnComplexConfig::new(n, order)?;
        let gens: Vec<GenId> = (0..=order)
            .flat_map(|r| GenId::all_of_order(Family::C, n, r))
            .collect();
        let table = gens
            .into_par_iter()
            .map(|g| {
                let dg = generator_differential(cfg, g.upper(), g.lower())?;
                Ok((g, dg))
            })
            .collect::<Result<HashMap<_, _>>>()?;
        Ok(WnComplex { cfg, table })
    }

    pub fn config(&self) -> WnComplexConfig {
        self.cfg
    }

    pub fn n(&self) -> u8 {
        self.cfg.n
    }

    pub fn order(&self) -> usize {
        self.cfg.order
    }

    /// All generators `c^i_J` with `|J| ≤ R`, in canonical order.
    pub fn generators(&self) -> Vec<GenId> {
        let mut g: Vec<GenId> = self.table.keys().cloned().collect();
        g.sort();
        g
    }

    pub fn d(&self, a: &Form<K>) -> Result<Form<K>> {
        a.apply_antiderivation(self)
    }
}

impl<K: Ring> DerivationTable<K, GenId> for WnComplex<K> {
    fn image(&self, g: &GenId) -> Result<Cow<'_, Form<K>>> {
        if let Some(dg) = self.table.get(g) {
            return Ok(Cow::Borrowed(dg));
        }
        if g.family() == Family::C && g.max_index() <= self.cfg.n && g.order() > self.cfg.order {
            return Err(Error::Truncation {
                generator: g.to_string(),
                order: g.order(),
                max: self.cfg.order,
            });
        }
        Err(Error::UnknownGenerator(g.to_string()))
    }
}

fn determinant<K: Ring>(m: &[Vec<K>]) -> K {
    match m.len() {
        0 => K::one(),
        1 => m[0][0].clone(),
        2 => m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone(),
        q => {
            let mut acc = K::zero();
            for col in 0..q {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<K>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != col)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][col].clone() * determinant(&minor);
                acc = if col % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

/// Evaluates a homogeneous cochain on `q = deg c` formal vector fields. A monomial
/// `g_1∧…∧g_q` evaluates to `det(g_k(ξ_l))`.
pub fn evaluate_cochain<K: Ring>(c: &Form<K>, fields: &[FormalVectorField<K>]) -> Result<K> {
    if c.is_zero() {
        return Ok(K::zero());
    }
    let q = c.degree().value()?;
    if q != fields.len() {
        return Err(Error::ArityMismatch {
            expected: q,
            got: fields.len(),
        });
    }
    let mut values: HashMap<GenId, Vec<K>> = HashMap::new();
    for g in c.generators() {
        let row = fields
            .iter()
            .map(|xi| xi.pair(&g))
            .collect::<Result<Vec<K>>>()?;
        values.insert(g, row);
    }
    let mut acc = K::zero();
    for (m, k) in c.terms() {
        let matrix: Vec<Vec<K>> = m.gens().iter().map(|g| values[g].clone()).collect();
        acc = acc + k.clone() * determinant(&matrix);
    }
    Ok(acc)
}

/// Chevalley–Eilenberg differential with trivial coefficients, computed by evaluation:
/// `(dc)(ξ_1,…,ξ_{q+1}) = Σ_{i<j} (-1)^{i+j} c([ξ_i,ξ_j], ξ_1,…,ξ̂_i,…,ξ̂_j,…)`.
pub fn ce_differential_oracle<K: Ring>(c: &Form<K>, fields: &[FormalVectorField<K>]) -> Result<K> {
    let q = if c.is_zero() {
        fields.len().saturating_sub(1)
    } else {
        c.degree().value()?
    };
    if fields.len() != q + 1 {
        return Err(Error::ArityMismatch {
            expected: q + 1,
            got: fields.len(),
        });
    }
    let mut acc = K::zero();
    for i in 0..fields.len() {
        for j in i + 1..fields.len() {
            let mut args = Vec::with_capacity(q);
            args.push(fields[i].bracket(&fields[j])?);
            args.extend(
                fields
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i && k != j)
                    .map(|(_, f)| f.clone()),
            );
            let v = evaluate_cochain(c, &args)?;
            acc = if (i + j) % 2 == 0 { acc + v } else { acc - v };
        }
    }
    Ok(acc)
}

/// Outcome of applying a differential twice to every generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareCheck {
    pub generators_checked: usize,
    pub failures: Vec<String>,
}

impl SquareCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `d(d c^i_J) = 0` for every generator with `|J| ≤ order`. The table is
/// built one order higher so that the order-`(R+1)` generators produced by the first
/// application can be differentiated again.
pub fn check_d_squared<K: Ring>(n: u8, order: usize) -> Result<SquareCheck> {
    let complex = WnComplex::<K>::new(n, order + 1)?;
    let gens: Vec<GenId> = (0..=order)
        .flat_map(|r| GenId::all_of_order(Family::C, n, r))
        .collect();
    let failures = gens
        .par_iter()
        .map(|g| {
            let dd = complex.d(&complex.d(&Form::generator(g.clone()))?)?;
            Ok((!dd.is_zero()).then(|| format!("d(d {g}) = {dd}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SquareCheck {
        generators_checked: gens.len(),
        failures: failures.into_iter().flatten().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wn::Polynomial;
    use crate::{QForm, Q};

    fn c(i: u8, j: &[u8]) -> QForm {
        Form::generator(GenId::c(i, j))
    }

    fn field(coeffs: &[(u8, i64)]) -> FormalVectorField<Q> {
        let mut p = Polynomial::zero(1);
        for &(e, k) in coeffs {
            p.add_term(vec![e], Q::from_int(k));
        }
        FormalVectorField::new(3, vec![p])
    }

    #[test]
    fn generator_table_examples() {
        let cfg = WnComplexConfig::new(1, 2).unwrap();
        assert_eq!(
            generator_differential::<Q>(cfg, 1, &[]).unwrap(),
            c(1, &[1]).wedge(&c(1, &[]))
        );
        assert_eq!(
            generator_differential::<Q>(cfg, 1, &[1]).unwrap(),
            c(1, &[1, 1]).wedge(&c(1, &[]))
        );
        let cfg2 = WnComplexConfig::new(2, 1).unwrap();
        assert_eq!(
            generator_differential::<Q>(cfg2, 1, &[]).unwrap(),
            c(1, &[1]).wedge(&c(1, &[])) + c(1, &[2]).wedge(&c(2, &[]))
        );
    }

    #[test]
    fn truncation_is_an_error() {
        let cfg = WnComplexConfig::new(1, 1).unwrap();
        assert!(matches!(
            generator_differential::<Q>(cfg, 1, &[1, 1]),
            Err(Error::Truncation { .. })
        ));
        let cx = WnComplex::<Q>::new(1, 1).unwrap();
        assert!(matches!(
            cx.d(&c(1, &[1, 1])),
            Err(Error::Truncation { .. })
        ));
        assert!(matches!(
            cx.d(&Form::generator(GenId::f(1, &[]))),
            Err(Error::UnknownGenerator(_))
        ));
    }

    #[test]
    fn evaluation_examples() {
        let d = field(&[(0, 1)]);
        let xd = field(&[(1, 1)]);
        assert_eq!(
            evaluate_cochain(&c(1, &[1]), &[field(&[(1, 3)])]).unwrap(),
            Q::from_int(3)
        );
        let w = c(1, &[]).wedge(&c(1, &[1]));
        assert_eq!(
            evaluate_cochain(&w, &[xd.clone(), xd.clone()]).unwrap(),
            Q::from_int(0)
        );
        assert_eq!(
            evaluate_cochain(&w, &[d.clone(), xd.clone()]).unwrap(),
            Q::from_int(1)
        );
        assert!(matches!(
            evaluate_cochain(&w, std::slice::from_ref(&d)),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn oracle_matches_on_the_basic_example() {
        let cx = WnComplex::<Q>::new(1, 2).unwrap();
        let fields = [field(&[(0, 1)]), field(&[(1, 1)])];
        let oracle = ce_differential_oracle(&c(1, &[]), &fields).unwrap();
        let symbolic = evaluate_cochain(&cx.d(&c(1, &[])).unwrap(), &fields).unwrap();
        assert_eq!(oracle, Q::from_int(-1));
        assert_eq!(symbolic, oracle);
        assert_eq!(
            ce_differential_oracle(&QForm::one(), &[field(&[(0, 1)])]).unwrap(),
            Q::from_int(0)
        );
    }

    #[test]
    fn d_squared_small() {
        for n in 1..=2 {
            let report = check_d_squared::<Q>(n, 2).unwrap();
            assert!(report.passed(), "{:?}", report.failures);
        }
    }
}
