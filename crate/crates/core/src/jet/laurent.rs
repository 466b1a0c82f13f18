use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Ring;

/// Laurent polynomial in the jet coordinates `x_0, x_1, …`. Exponent vectors are stored
/// with trailing zeros removed so that the variable count is open-ended.
#[derive(Clone, PartialEq, Debug)]
pub struct Laurent<K> {
    terms: BTreeMap<Vec<i32>, K>,
}

fn trim(mut e: Vec<i32>) -> Vec<i32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl<K: Ring> Laurent<K> {
    pub fn constant(k: K) -> Self {
        Self::monomial(Vec::new(), k)
    }

    /// The coordinate `x_k`.
    pub fn var(k: usize) -> Self {
        Self::var_pow(k, 1)
    }

    /// `x_k^e` for any integer `e`.
    pub fn var_pow(k: usize, e: i32) -> Self {
        let mut exps = vec![0; k + 1];
        exps[k] = e;
        Self::monomial(exps, K::one())
    }

    pub fn monomial(exponents: Vec<i32>, k: K) -> Self {
        let mut terms = BTreeMap::new();
        if !k.is_zero() {
            terms.insert(trim(exponents), k);
        }
        Laurent { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &K)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: Vec<i32>, k: K) {
        if k.is_zero() {
            return;
        }
        let e = trim(e);
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = v.clone() + k;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, k);
            }
        }
    }

    /// The constant coefficient when the polynomial is constant.
    pub fn as_constant(&self) -> Option<K> {
        match self.terms.len() {
            0 => Some(K::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    /// Index one past the highest variable that occurs.
    pub fn variable_count(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// `∂/∂x_k`.
    pub fn partial(&self, k: usize) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let p = e.get(k).copied().unwrap_or(0);
            if p == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[k] -= 1;
            out.add_term(e2, c.clone() * K::from_int(p as i64));
        }
        out
    }

    /// Whether every negative exponent sits on `x_var`.
    pub fn denominators_only_in(&self, var: usize) -> bool {
        self.terms
            .keys()
            .all(|e| e.iter().enumerate().all(|(k, &p)| p >= 0 || k == var))
    }

    /// Value at a point; `point[k]` is `x_k`.
    pub fn evaluate(&self, point: &[K]) -> Result<K> {
        let mut acc = K::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (k, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                let x = point
                    .get(k)
                    .ok_or_else(|| Error::OutOfRange(format!("x_{k} missing from point")))?;
                let base = if p < 0 {
                    x.try_inverse().ok_or(Error::SingularJet)?
                } else {
                    x.clone()
                };
                for _ in 0..p.unsigned_abs() {
                    v = v * base.clone();
                }
            }
            acc = acc + v;
        }
        Ok(acc)
    }
}

impl<K: Ring> Add for Laurent<K> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (e, k) in rhs.terms {
            self.add_term(e, k);
        }
        self
    }
}

impl<K: Ring> Sub for Laurent<K> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<K: Ring> Neg for Laurent<K> {
    type Output = Self;

    fn neg(self) -> Self {
        Laurent {
            terms: self.terms.into_iter().map(|(e, k)| (e, -k)).collect(),
        }
    }
}

impl<K: Ring> Mul for Laurent<K> {
    type Output = Self;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for (ea, ka) in &self.terms {
            for (eb, kb) in &rhs.terms {
                let len = ea.len().max(eb.len());
                let e = (0..len)
                    .map(|i| ea.get(i).copied().unwrap_or(0) + eb.get(i).copied().unwrap_or(0))
                    .collect();
                out.add_term(e, ka.clone() * kb.clone());
            }
        }
        out
    }
}

impl<K: Ring> Zero for Laurent<K> {
    fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<K: Ring> One for Laurent<K> {
    fn one() -> Self {
        Self::constant(K::one())
    }
}

impl<K: Ring> Ring for Laurent<K> {
    fn from_ratio(num: i64, den: i64) -> Self {
        Self::constant(K::from_ratio(num, den))
    }

    /// Only monomials with invertible coefficients are units.
    fn try_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, k) = self.terms.iter().next()?;
        Some(Self::monomial(
            e.iter().map(|p| -p).collect(),
            k.try_inverse()?,
        ))
    }
}

impl<K: Ring> fmt::Display for Laurent<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, k)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| p != 0)
                    .map(|(i, &p)| {
                        if p == 1 {
                            format!("x{i}")
                        } else {
                            format!("x{i}^{p}")
                        }
                    })
                    .collect();
                match (vars.is_empty(), k.is_one()) {
                    (true, _) => format!("{k}"),
                    (false, true) => vars.join("*"),
                    (false, false) => format!("{k}*{}", vars.join("*")),
                }
            })
            .collect();
        if parts.len() == 1 {
            write!(f, "{}", parts[0])
        } else {
            write!(f, "({})", parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    type L = Laurent<Q>;

    #[test]
    fn arithmetic_and_inverse() {
        let x1 = L::var(1);
        let inv = x1.try_inverse().unwrap();
        assert_eq!(x1.clone() * inv.clone(), L::one());
        assert_eq!(inv.partial(1), -L::var_pow(1, -2));
        assert!((L::var(0) + L::one()).try_inverse().is_none());
        assert!((L::var(2) * L::var_pow(1, -3)).denominators_only_in(1));
        assert!(!L::var_pow(0, -2).denominators_only_in(1));
    }

    #[test]
    fn evaluation() {
        let p = L::var(2) * L::var_pow(1, -2) + L::from_int(3);
        let v = p
            .evaluate(&[Q::from_int(0), Q::from_int(2), Q::from_int(8)])
            .unwrap();
        assert_eq!(v, Q::from_int(5));
        assert_eq!(
            p.evaluate(&[Q::from_int(0), Q::from_int(0), Q::from_int(1)]),
            Err(Error::SingularJet)
        );
    }
}
