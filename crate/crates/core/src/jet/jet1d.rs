use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{factorial, Ring};

/// Truncated jet `(x_0, x_1, …, x_R)` of a one-variable map at `0`, where `x_k` is the
/// `k`-th derivative.
#[derive(Clone, PartialEq, Debug)]
pub struct Jet1D<K> {
    coeffs: Vec<K>,
}

impl<K: Ring> Jet1D<K> {
    pub fn new(coeffs: Vec<K>) -> Self {
        assert!(!coeffs.is_empty(), "a jet has at least the value x_0");
        Jet1D { coeffs }
    }

    pub fn identity(order: usize) -> Self {
        let mut c = vec![K::zero(); order + 1];
        if order >= 1 {
            c[1] = K::one();
        }
        Jet1D { coeffs: c }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| K::from_int(c)).collect())
    }

    /// Jet at `at` of the polynomial `Σ_k p_k x^k`.
    pub fn of_polynomial(p: &[K], at: &K, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut current: Vec<K> = p.to_vec();
        for _ in 0..=order {
            let value = current
                .iter()
                .rev()
                .fold(K::zero(), |acc, c| acc * at.clone() + c.clone());
            coeffs.push(value);
            current = current
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * K::from_int(k as i64))
                .collect();
        }
        Jet1D { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn get(&self, k: usize) -> K {
        self.coeffs.get(k).cloned().unwrap_or_else(K::zero)
    }

    fn taylor(&self) -> Vec<K> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.clone() * K::from_ratio(1, factorial(k)))
            .collect()
    }

    fn from_taylor(t: Vec<K>) -> Self {
        Jet1D {
            coeffs: t
                .into_iter()
                .enumerate()
                .map(|(k, c)| c * K::from_int(factorial(k)))
                .collect(),
        }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::DimensionMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    /// Jet of `other ∘ self`: the Taylor polynomial of `other` evaluated on that of
    /// `self` and truncated at order `R`. This is the jet of the composite when
    /// `x_0 = 0`, or when `x_0` is a nilpotent infinitesimal and the top-order term of the
    /// infinitesimal part is discarded.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let r = self.order();
        let a = self.taylor();
        let b = other.taylor();
        let mut acc = vec![K::zero(); r + 1];
        for bm in b.iter().rev() {
            acc = series_mul(&acc, &a, r);
            acc[0] = acc[0].clone() + bm.clone();
        }
        Ok(Self::from_taylor(acc))
    }

    /// The jet `b` with `b ∘ a = id`, for `a` fixing `0`.
    pub fn invert(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::OutOfRange(
                "only jets with x_0 = 0 can be inverted".into(),
            ));
        }
        let r = self.order();
        if r == 0 {
            return Ok(self.clone());
        }
        let inv1 = self.coeffs[1].try_inverse().ok_or(Error::SingularJet)?;
        let mut b = vec![K::zero(); r + 1];
        b[1] = inv1.clone();
        let mut inv_pow = inv1.clone();
        for k in 2..=r {
            inv_pow = inv_pow * inv1.clone();
            let c = self.compose(&Jet1D { coeffs: b.clone() })?;
            b[k] = -(c.coeffs[k].clone() * inv_pow.clone());
        }
        Ok(Jet1D { coeffs: b })
    }

    /// Pointwise product of the underlying functions.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::from_taylor(series_mul(
            &self.taylor(),
            &other.taylor(),
            self.order(),
        )))
    }

    /// Reciprocal `1/f`, truncated at the same order.
    pub fn reciprocal(&self) -> Result<Self> {
        let t = self.taylor();
        let inv0 = t[0].try_inverse().ok_or(Error::SingularJet)?;
        let mut out = vec![K::zero(); t.len()];
        out[0] = inv0.clone();
        for k in 1..t.len() {
            let mut s = K::zero();
            for j in 1..=k {
                s = s + t[j].clone() * out[k - j].clone();
            }
            out[k] = -(s * inv0.clone());
        }
        Ok(Self::from_taylor(out))
    }

    /// Jet of `f'`, one order lower.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Jet1D {
                coeffs: vec![K::zero()],
            };
        }
        Jet1D {
            coeffs: self.coeffs[1..].to_vec(),
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut c = self.coeffs.clone();
        c.resize(order + 1, K::zero());
        Jet1D { coeffs: c }
    }

    pub fn map<K2: Ring>(&self, f: impl Fn(&K) -> K2) -> Jet1D<K2> {
        Jet1D {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

fn series_mul<K: Ring>(a: &[K], b: &[K], r: usize) -> Vec<K> {
    let mut out = vec![K::zero(); r + 1];
    for (i, ai) in a.iter().enumerate().take(r + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(r + 1 - i) {
            out[i + j] = out[i + j].clone() + ai.clone() * bj.clone();
        }
    }
    out
}

impl<K: Ring> fmt::Display for Jet1D<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}
