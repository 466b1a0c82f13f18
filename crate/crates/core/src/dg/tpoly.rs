use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::form::{Form, Generator};
use crate::scalar::Ring;

/// Polynomial in a formal parameter `t`; `coeffs[k]` multiplies `t^k`.
#[derive(Clone, PartialEq, Debug)]
pub struct TPoly<K> {
    coeffs: Vec<K>,
}

impl<K: Ring> TPoly<K> {
    pub fn new(coeffs: Vec<K>) -> Self {
        TPoly { coeffs }.trimmed()
    }

    pub fn constant(k: K) -> Self {
        Self::new(vec![k])
    }

    pub fn t() -> Self {
        Self::new(vec![K::zero(), K::one()])
    }

    pub fn from_ratios(coeffs: &[(i64, i64)]) -> Self {
        Self::new(coeffs.iter().map(|&(a, b)| K::from_ratio(a, b)).collect())
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    /// Degree in `t`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> K {
        self.coeffs.get(k).cloned().unwrap_or_else(K::zero)
    }

    pub fn evaluate(&self, t: &K) -> K {
        self.coeffs
            .iter()
            .rev()
            .fold(K::zero(), |acc, c| acc * t.clone() + c.clone())
    }

    /// `∫_0^1 p(t) dt`, with `t^k ↦ 1/(k+1)`.
    pub fn integrate_unit(&self) -> K {
        self.coeffs
            .iter()
            .enumerate()
            .fold(K::zero(), |acc, (k, c)| {
                acc + c.clone() * K::from_ratio(1, k as i64 + 1)
            })
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }
}

impl<K: Ring> Add for TPoly<K> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<K: Ring> Sub for TPoly<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<K: Ring> Mul for TPoly<K> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

impl<K: Ring> Neg for TPoly<K> {
    type Output = Self;
    fn neg(self) -> Self {
        TPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<K: Ring> Zero for TPoly<K> {
    fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<K: Ring> One for TPoly<K> {
    fn one() -> Self {
        Self::constant(K::one())
    }
}

impl<K: Ring> fmt::Display for TPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.len() <= 1 {
            return write!(f, "{}", self.coeff(0));
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{k}"),
            })
            .collect();
        write!(f, "({})", parts.join(" + "))
    }
}

impl<K: Ring> Ring for TPoly<K> {
    fn from_ratio(num: i64, den: i64) -> Self {
        Self::constant(K::from_ratio(num, den))
    }

    fn try_inverse(&self) -> Option<Self> {
        match self.coeffs.len() {
            1 => self.coeffs[0].try_inverse().map(Self::constant),
            _ => None,
        }
    }
}

/// A form whose coefficients are polynomials in `t`.
pub type TPolyForm<K, G = super::GenId> = Form<TPoly<K>, G>;

/// Exact `∫_0^1 P(t) dt`.
pub fn integrate_t<K: Ring, G: Generator>(p: &TPolyForm<K, G>) -> Form<K, G> {
    p.map_coeffs(TPoly::integrate_unit)
}

/// Substitutes a value for `t`.
pub fn specialize_t<K: Ring, G: Generator>(p: &TPolyForm<K, G>, t: &K) -> Form<K, G> {
    p.map_coeffs(|c| c.evaluate(t))
}

/// The forms multiplying `t^0, t^1, …`.
pub fn t_coefficients<K: Ring, G: Generator>(p: &TPolyForm<K, G>) -> Vec<Form<K, G>> {
    let max = p
        .terms()
        .filter_map(|(_, c)| c.degree())
        .max()
        .map_or(0, |d| d + 1);
    (0..max).map(|k| p.map_coeffs(|c| c.coeff(k))).collect()
}

/// Lifts a form to constant-in-`t` coefficients.
pub fn lift_t<K: Ring, G: Generator>(f: &Form<K, G>) -> TPolyForm<K, G> {
    f.map_coeffs(|c| TPoly::constant(c.clone()))
}
