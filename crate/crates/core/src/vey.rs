//! Enumeration of the Vey basis of `H*(W_n)` and of its `O(n)`-relative analogue.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::char_forms::CharTable;
use crate::dg::Form;
use crate::error::{Error, Result};
use crate::scalar::Ring;

/// Largest dimension accepted by [`dimension_table`].
pub const MAX_TABLE_DIMENSION: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Products `Γ_{p_1}∧…∧Γ_{p_l}∧Ψ_{r_1}∧…∧Ψ_{r_m}` spanning `H*(W_n)`.
    General,
    /// Products `Λ_{p_1}∧…∧Λ_{p_l}∧Ψ_{r_1}∧…` with odd `p_i`, spanning `H*(W_n, O(n))`
    /// above degree `2n`.
    Relative,
}

/// Direction of the constraint between `p_1` and `r_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Inequality {
    /// `p_1 ≤ r_1`
    Le,
    /// `p_1 ≥ r_1`
    Ge,
}

impl Variant {
    /// Conventional reading: `≤` for the general basis, `≥` for the relative one.
    pub fn default_inequality(self) -> Inequality {
        match self {
            Variant::General => Inequality::Le,
            Variant::Relative => Inequality::Ge,
        }
    }
}

impl std::str::FromStr for Inequality {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "le" => Ok(Inequality::Le),
            "ge" => Ok(Inequality::Ge),
            other => Err(Error::OutOfRange(format!(
                "inequality `{other}`, expected le or ge"
            ))),
        }
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Inequality::Le => "le",
            Inequality::Ge => "ge",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct VeyTuple {
    pub ps: Vec<usize>,
    pub rs: Vec<usize>,
    pub relative: bool,
}

impl VeyTuple {
    pub fn new(ps: Vec<usize>, rs: Vec<usize>, relative: bool) -> Self {
        VeyTuple { ps, rs, relative }
    }

    /// `m = 2(Σp + Σr) − l`.
    pub fn degree(&self) -> usize {
        2 * (self.ps.iter().sum::<usize>() + self.rs.iter().sum::<usize>()) - self.ps.len()
    }

    /// Whether the tuple satisfies the basis constraints in dimension `n`.
    pub fn is_admissible(&self, n: usize, ineq: Inequality) -> bool {
        let Some(&p1) = self.ps.first() else {
            return false;
        };
        let Some(&r1) = self.rs.first() else {
            return false;
        };
        let increasing = self.ps.windows(2).all(|w| w[0] < w[1]);
        let nondecreasing = self.rs.windows(2).all(|w| w[0] <= w[1]);
        let in_range = self
            .ps
            .iter()
            .chain(&self.rs)
            .all(|&x| (1..=n).contains(&x));
        let odd = !self.relative || self.ps.iter().all(|p| p % 2 == 1);
        let sum_r: usize = self.rs.iter().sum();
        let order = match ineq {
            Inequality::Le => p1 <= r1,
            Inequality::Ge => p1 >= r1,
        };
        increasing && nondecreasing && in_range && odd && order && sum_r <= n && p1 + sum_r > n
    }
}

impl fmt::Display for VeyTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = if self.relative { "Lambda" } else { "Gamma" };
        let parts: Vec<String> = self
            .ps
            .iter()
            .map(|p| format!("{head}_{p}"))
            .chain(self.rs.iter().map(|r| format!("Psi_{r}")))
            .collect();
        f.write_str(&parts.join("^"))
    }
}

/// `m = 2(Σp + Σr) − l`.
pub fn degree_of(t: &VeyTuple) -> usize {
    t.degree()
}

fn increasing_subsets(pool: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 1u64..1 << pool.len() {
        out.push(
            pool.iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &p)| p)
                .collect(),
        );
    }
    out
}

fn partitions_up_to(n: usize) -> Vec<Vec<usize>> {
    fn rec(min: usize, budget: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        for r in min..=budget {
            prefix.push(r);
            rec(r, budget - r, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, &mut Vec::new(), &mut out);
    out
}

/// Every admissible tuple in dimension `n`, ordered by degree and then lexicographically.
pub fn enumerate_all(n: usize, variant: Variant, ineq: Inequality) -> Vec<VeyTuple> {
    let relative = variant == Variant::Relative;
    let pool: Vec<usize> = (1..=n).filter(|p| !relative || p % 2 == 1).collect();
    let rss = partitions_up_to(n);
    let mut out: Vec<VeyTuple> = increasing_subsets(&pool)
        .into_iter()
        .flat_map(|ps| {
            rss.iter()
                .map(move |rs| VeyTuple::new(ps.clone(), rs.clone(), relative))
        })
        .filter(|t| t.is_admissible(n, ineq))
        .collect();
    out.sort_by(|a, b| (a.degree(), &a.ps, &a.rs).cmp(&(b.degree(), &b.ps, &b.rs)));
    out
}

/// Admissible tuples of degree `m`.
pub fn enumerate(n: usize, m: usize, variant: Variant, ineq: Inequality) -> Vec<VeyTuple> {
    enumerate_all(n, variant, ineq)
        .into_iter()
        .filter(|t| t.degree() == m)
        .collect()
}

/// Degrees outside which the cohomology vanishes: `[2n+1, n(n+2)]` in general, and
/// `[2n+1, n(n+3)/2]` (even `n`) or `[2n+1, n(n+5)/2]` (odd `n`) for the relative variant.
pub fn vanishing_bounds(n: usize, variant: Variant) -> (usize, usize) {
    let upper = match variant {
        Variant::General => n * (n + 2),
        Variant::Relative if n.is_multiple_of(2) => n * (n + 3) / 2,
        Variant::Relative => n * (n + 5) / 2,
    };
    (2 * n + 1, upper)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionTable {
    pub n: usize,
    pub variant: Variant,
    pub inequality: Inequality,
    pub counts: BTreeMap<usize, usize>,
    pub bounds: (usize, usize),
    /// Degrees with nonzero count outside `bounds`.
    pub violations: Vec<usize>,
}

impl DimensionTable {
    pub fn within_bounds(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn dimension_table(n: usize, variant: Variant, ineq: Inequality) -> Result<DimensionTable> {
    if n == 0 {
        return Err(Error::OutOfRange("dimension must be at least 1".into()));
    }
    if n > MAX_TABLE_DIMENSION {
        return Err(Error::TooLarge(format!(
            "dimension tables are limited to n <= {MAX_TABLE_DIMENSION}"
        )));
    }
    let mut counts = BTreeMap::new();
    for t in enumerate_all(n, variant, ineq) {
        *counts.entry(t.degree()).or_insert(0) += 1;
    }
    let bounds = vanishing_bounds(n, variant);
    let violations = counts
        .keys()
        .copied()
        .filter(|&m| m < bounds.0 || m > bounds.1)
        .collect();
    Ok(DimensionTable {
        n,
        variant,
        inequality: ineq,
        counts,
        bounds,
        violations,
    })
}

/// The cochain `Λ_{p_1}∧…∧Λ_{p_l}∧Ψ_{r_1}∧…`, with `Λ_p` standing in for `Γ_p`. Only odd
/// `p` have an explicit transgression, so `None` is returned when some `p_i` is even.
pub fn cocycle<K: Ring>(table: &CharTable<K>, t: &VeyTuple) -> Result<Option<Form<K>>> {
    if t.ps.iter().any(|p| p % 2 == 0) {
        return Ok(None);
    }
    let mut acc = Form::one();
    for &p in &t.ps {
        acc = acc.wedge(&table.lambda_cap_p(p)?);
    }
    for &r in &t.rs {
        acc = acc.wedge(&table.psi_p(r)?);
    }
    Ok(Some(acc))
}
