//! Coefficient rings for the symbolic layer.
//!
//! Every symbolic container ([`Form`](crate::dg::Form), jets, matrix forms) is generic
//! over a [`Ring`]. The exact rationals are the default; the polynomial rings in this
//! crate ([`TPoly`](crate::dg::TPoly), [`Laurent`](crate::jet::Laurent),
//! [`FirstOrder`]) are themselves rings, so the same algebra runs over them.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};

/// Commutative ring containing the rationals.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    /// Multiplicative inverse when it exists in the ring.
    fn try_inverse(&self) -> Option<Self>;
}

/// A [`Ring`] in which every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> {}

impl Ring for BigRational {
    fn from_ratio(num: i64, den: i64) -> Self {
        Ratio::new(BigInt::from(num), BigInt::from(den))
    }

    fn try_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

impl Field for BigRational {}

/// Machine-word rationals. Cheap, but panics on overflow; prefer [`BigRational`]
/// except for small fixed-size computations.
impl Ring for Ratio<i64> {
    fn from_ratio(num: i64, den: i64) -> Self {
        Ratio::new(num, den)
    }

    fn try_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

impl Field for Ratio<i64> {}

/// First-order infinitesimal extension `value + Σ_k diff[k]·ε_k` with `ε_j ε_k = 0`.
///
/// Used to differentiate jet compositions along a symbolic velocity: `diff[k]` is the
/// coefficient of `dx_k`.
#[derive(Clone, PartialEq, Debug)]
pub struct FirstOrder<K> {
    pub value: K,
    pub diff: Vec<K>,
}

impl<K: Ring> FirstOrder<K> {
    pub fn constant(value: K) -> Self {
        FirstOrder {
            value,
            diff: Vec::new(),
        }
    }

    /// `value + ε_index`.
    pub fn variable(value: K, index: usize) -> Self {
        let mut diff = vec![K::zero(); index + 1];
        diff[index] = K::one();
        FirstOrder { value, diff }
    }

    pub fn diff_component(&self, k: usize) -> K {
        self.diff.get(k).cloned().unwrap_or_else(K::zero)
    }

    fn trimmed(mut self) -> Self {
        while self.diff.last().is_some_and(|c| c.is_zero()) {
            self.diff.pop();
        }
        self
    }

    fn zip_diff(a: &[K], b: &[K], f: impl Fn(&K, &K) -> K) -> Vec<K> {
        let len = a.len().max(b.len());
        let zero = K::zero();
        (0..len)
            .map(|k| f(a.get(k).unwrap_or(&zero), b.get(k).unwrap_or(&zero)))
            .collect()
    }
}

impl<K: Ring> Add for FirstOrder<K> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        FirstOrder {
            value: self.value + rhs.value,
            diff: Self::zip_diff(&self.diff, &rhs.diff, |a, b| a.clone() + b.clone()),
        }
        .trimmed()
    }
}

impl<K: Ring> Sub for FirstOrder<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        FirstOrder {
            value: self.value - rhs.value,
            diff: Self::zip_diff(&self.diff, &rhs.diff, |a, b| a.clone() - b.clone()),
        }
        .trimmed()
    }
}

impl<K: Ring> Mul for FirstOrder<K> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Self) -> Self {
        let diff = Self::zip_diff(&self.diff, &rhs.diff, |a, b| {
            self.value.clone() * b.clone() + a.clone() * rhs.value.clone()
        });
        FirstOrder {
            value: self.value * rhs.value,
            diff,
        }
        .trimmed()
    }
}

impl<K: Ring> Neg for FirstOrder<K> {
    type Output = Self;
    fn neg(self) -> Self {
        FirstOrder {
            value: -self.value,
            diff: self.diff.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<K: Ring> Zero for FirstOrder<K> {
    fn zero() -> Self {
        FirstOrder::constant(K::zero())
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero() && self.diff.iter().all(|c| c.is_zero())
    }
}

impl<K: Ring> One for FirstOrder<K> {
    fn one() -> Self {
        FirstOrder::constant(K::one())
    }
}

impl<K: Ring> Display for FirstOrder<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.value)?;
        for (k, c) in self.diff.iter().enumerate() {
            if !c.is_zero() {
                write!(f, " + ({c}) eps{k}")?;
            }
        }
        write!(f, ")")
    }
}

impl<K: Ring> Ring for FirstOrder<K> {
    fn from_ratio(num: i64, den: i64) -> Self {
        FirstOrder::constant(K::from_ratio(num, den))
    }

    fn try_inverse(&self) -> Option<Self> {
        let inv = self.value.try_inverse()?;
        let inv2 = inv.clone() * inv.clone();
        Some(FirstOrder {
            value: inv,
            diff: self
                .diff
                .iter()
                .map(|c| -(c.clone() * inv2.clone()))
                .collect(),
        })
    }
}

/// `n!` as an `i64`; panics beyond 20!.
pub fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}
