use std::collections::BTreeMap;
use std::fmt;

use crate::dg::GenId;
use crate::error::{Error, Result};
use crate::scalar::{factorial, Ring};

/// Polynomial in `x^1, …, x^n`; keys are exponent vectors of length `n`.
#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<K> {
    n: usize,
    terms: BTreeMap<Vec<u8>, K>,
}

impl<K: Ring> Polynomial<K> {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, k: K) -> Self {
        Self::monomial(n, vec![0; n], k)
    }

    /// The coordinate `x^j` (1-based).
    pub fn coordinate(n: usize, j: usize) -> Self {
        let mut e = vec![0; n];
        e[j - 1] = 1;
        Self::monomial(n, e, K::one())
    }

    pub fn monomial(n: usize, exponents: Vec<u8>, k: K) -> Self {
        assert_eq!(exponents.len(), n);
        let mut p = Self::zero(n);
        p.add_term(exponents, k);
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, exponents: Vec<u8>, k: K) {
        if k.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents).or_insert_with(K::zero);
        *entry = entry.clone() + k;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &K)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, k) in &other.terms {
            out.add_term(e.clone(), k.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, k) in &other.terms {
            out.add_term(e.clone(), -k.clone());
        }
        out
    }

    pub fn scale(&self, k: &K) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * k.clone());
        }
        out
    }

    /// Product truncated to total degree `max_degree`.
    pub fn mul_truncated(&self, other: &Self, max_degree: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (ea, ka) in &self.terms {
            let da: usize = ea.iter().map(|&x| x as usize).sum();
            for (eb, kb) in &other.terms {
                let db: usize = eb.iter().map(|&x| x as usize).sum();
                if da + db > max_degree {
                    continue;
                }
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ka.clone() * kb.clone());
            }
        }
        out
    }

    /// `∂/∂x^j` (1-based).
    pub fn partial(&self, j: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (e, k) in &self.terms {
            let p = e[j - 1];
            if p == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[j - 1] -= 1;
            out.add_term(e2, k.clone() * K::from_int(p as i64));
        }
        out
    }

    pub fn truncate(&self, max_degree: usize) -> Self {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().map(|&x| x as usize).sum::<usize>() <= max_degree)
                .map(|(e, k)| (e.clone(), k.clone()))
                .collect(),
        }
    }

    /// `∂^r p / ∂x^{j_1}…∂x^{j_r}` at the origin, for 1-based indices.
    pub fn derivative_at_origin(&self, indices: &[u8]) -> K {
        let mut e = vec![0u8; self.n];
        for &j in indices {
            e[j as usize - 1] += 1;
        }
        let Some(c) = self.terms.get(&e) else {
            return K::zero();
        };
        let weight: i64 = e.iter().map(|&x| factorial(x as usize)).product();
        c.clone() * K::from_int(weight)
    }
}

impl<K: Ring> fmt::Display for Polynomial<K> {
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
                    .filter(|(_, &p)| p > 0)
                    .map(|(j, &p)| {
                        if p == 1 {
                            format!("x{}", j + 1)
                        } else {
                            format!("x{}^{}", j + 1, p)
                        }
                    })
                    .collect();
                if vars.is_empty() {
                    format!("{k}")
                } else {
                    format!("{k}*{}", vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Polynomial vector field `Σ_i ξ^i ∂/∂x^i` whose components have degree at most
/// `max_degree`, standing for an element of `W_n`.
#[derive(Clone, PartialEq, Debug)]
pub struct FormalVectorField<K> {
    max_degree: usize,
    components: Vec<Polynomial<K>>,
}

impl<K: Ring> FormalVectorField<K> {
    pub fn new(max_degree: usize, components: Vec<Polynomial<K>>) -> Self {
        let n = components.len();
        assert!(n >= 1);
        assert!(components.iter().all(|p| p.n() == n));
        FormalVectorField {
            max_degree,
            components: components
                .into_iter()
                .map(|p| p.truncate(max_degree))
                .collect(),
        }
    }

    pub fn zero(n: usize, max_degree: usize) -> Self {
        Self::new(max_degree, vec![Polynomial::zero(n); n])
    }

    /// `∂/∂x^a` (1-based).
    pub fn partial(n: usize, max_degree: usize, a: usize) -> Self {
        let mut comps = vec![Polynomial::zero(n); n];
        comps[a - 1] = Polynomial::constant(n, K::one());
        Self::new(max_degree, comps)
    }

    /// `x^b ∂/∂x^a` (1-based).
    pub fn linear(n: usize, max_degree: usize, a: usize, b: usize) -> Self {
        let mut comps = vec![Polynomial::zero(n); n];
        comps[a - 1] = Polynomial::coordinate(n, b);
        Self::new(max_degree, comps)
    }

    pub fn n(&self) -> usize {
        self.components.len()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn component(&self, i: usize) -> &Polynomial<K> {
        &self.components[i - 1]
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.max_degree.max(other.max_degree),
            self.components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    pub fn scale(&self, k: &K) -> Self {
        Self::new(
            self.max_degree,
            self.components.iter().map(|p| p.scale(k)).collect(),
        )
    }

    /// `[ξ, η]^i = Σ_j (ξ^j ∂_j η^i − η^j ∂_j ξ^i)`, truncated to the larger of the two
    /// degree bounds.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let n = self.n();
        let d = self.max_degree.max(other.max_degree);
        let comps = (1..=n)
            .map(|i| {
                let mut acc = Polynomial::zero(n);
                for j in 1..=n {
                    acc = acc.add(
                        &self.components[j - 1]
                            .mul_truncated(&other.components[i - 1].partial(j), d),
                    );
                    acc = acc.sub(
                        &other.components[j - 1]
                            .mul_truncated(&self.components[i - 1].partial(j), d),
                    );
                }
                acc
            })
            .collect();
        Ok(Self::new(d, comps))
    }

    /// Value of the coordinate cochain `c^i_J` on this field: `∂_J ξ^i (0)`.
    pub fn pair(&self, g: &GenId) -> Result<K> {
        if g.family() != crate::dg::Family::C {
            return Err(Error::UnknownGenerator(format!(
                "{g} is not a coordinate cochain"
            )));
        }
        if g.max_index() as usize > self.n() {
            return Err(Error::OutOfRange(format!("{g} in dimension {}", self.n())));
        }
        Ok(self.components[g.upper() as usize - 1].derivative_at_origin(g.lower()))
    }
}

impl<K: Ring> fmt::Display for FormalVectorField<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(i, p)| format!("({p}) d{}", i + 1))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
