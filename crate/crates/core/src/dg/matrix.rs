use std::fmt;

use super::form::{Degree, Form, Generator};
use super::generator::GenId;
use crate::error::{Error, Result};
use crate::scalar::Ring;

/// Square matrix with form entries, row-major. Entry `(i, j)` is `A^i_j`.
#[derive(Clone, PartialEq)]
pub struct MatrixForm<K, G = GenId> {
    n: usize,
    entries: Vec<Form<K, G>>,
}

impl<K: Ring, G: Generator> MatrixForm<K, G> {
    pub fn zero(n: usize) -> Self {
        MatrixForm {
            n,
            entries: vec![Form::zero(); n * n],
        }
    }

    /// Scalar identity matrix.
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { Form::one() } else { Form::zero() })
    }

    /// Builds a matrix from `f(i, j)` with 0-based indices.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Form<K, G>) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        MatrixForm { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Form<K, G> {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[Form<K, G>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Form::is_zero)
    }

    /// Common degree of the entries.
    pub fn degree(&self) -> Degree {
        self.entries
            .iter()
            .fold(Degree::Zero, |d, e| d.combine(e.degree()))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn map(&self, f: impl Fn(&Form<K, G>) -> Form<K, G>) -> Self {
        MatrixForm {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<E>(
        &self,
        f: impl Fn(&Form<K, G>) -> std::result::Result<Form<K, G>, E>,
    ) -> std::result::Result<Self, E> {
        Ok(MatrixForm {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(f)
                .collect::<std::result::Result<_, E>>()?,
        })
    }

    pub fn map_coeffs<K2: Ring>(&self, f: impl Fn(&K) -> K2) -> MatrixForm<K2, G> {
        MatrixForm {
            n: self.n,
            entries: self.entries.iter().map(|e| e.map_coeffs(&f)).collect(),
        }
    }

    pub fn scale(&self, k: &K) -> Self {
        self.map(|e| e.scale(k))
    }

    pub fn scale_ratio(&self, num: i64, den: i64) -> Self {
        self.scale(&K::from_ratio(num, den))
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(MatrixForm {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(MatrixForm {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// `(A∧B)^i_j = Σ_k A^i_k ∧ B^k_j`.
    pub fn matrix_wedge(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.n;
        Ok(Self::from_fn(n, |i, j| {
            let mut acc = Form::zero();
            for k in 0..n {
                let a = self.get(i, k);
                let b = other.get(k, j);
                if !a.is_zero() && !b.is_zero() {
                    acc = acc + a.wedge(b);
                }
            }
            acc
        }))
    }

    /// `p`-fold wedge power; `p = 0` gives the identity.
    pub fn power(&self, p: usize) -> Self {
        (0..p).fold(Self::identity(self.n), |acc, _| {
            acc.matrix_wedge(self).expect("same dimension")
        })
    }

    /// Graded commutator `[A, B] = A∧B − (−1)^{|A||B|} B∧A`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let da = self.degree().value()?;
        let db = other.degree().value()?;
        let ab = self.matrix_wedge(other)?;
        let ba = other.matrix_wedge(self)?;
        if (da * db) % 2 == 0 {
            ab.sub(&ba)
        } else {
            ab.add(&ba)
        }
    }

    pub fn trace(&self) -> Form<K, G> {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }
}

impl<K: Ring, G: Generator> fmt::Debug for MatrixForm<K, G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixForm({}x{})", self.n, self.n)?;
        for i in 0..self.n {
            for j in 0..self.n {
                writeln!(f, "  [{},{}] {}", i + 1, j + 1, self.get(i, j))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn gamma(n: u8) -> MatrixForm<Q> {
        MatrixForm::from_fn(n as usize, |i, j| {
            Form::generator(GenId::c(i as u8 + 1, &[j as u8 + 1]))
        })
    }

    #[test]
    fn wedge_with_zero_matrix() {
        let z = MatrixForm::<Q>::zero(2);
        assert!(gamma(2).matrix_wedge(&z).unwrap().is_zero());
    }

    #[test]
    fn gamma_squared_entries() {
        let g1 = gamma(1);
        assert!(g1.matrix_wedge(&g1).unwrap().get(0, 0).is_zero());
        let g2 = gamma(2);
        let sq = g2.matrix_wedge(&g2).unwrap();
        let expected = Form::<Q>::product_of(&[GenId::c(1, &[2]), GenId::c(2, &[1])]);
        assert_eq!(sq.get(0, 0), &expected);
        assert!(sq.trace().is_zero());
    }

    #[test]
    fn trace_of_gamma() {
        assert_eq!(gamma(1).trace(), Form::generator(GenId::c(1, &[1])));
        assert!(MatrixForm::<Q>::zero(3).trace().is_zero());
    }

    #[test]
    fn bracket_signs() {
        let g = gamma(2);
        let expected = g.matrix_wedge(&g).unwrap().scale_ratio(2, 1);
        assert_eq!(g.bracket(&g).unwrap(), expected);
        let even = g.matrix_wedge(&g).unwrap();
        assert!(even.bracket(&even).unwrap().is_zero());
    }

    #[test]
    fn dimension_mismatch() {
        let err = gamma(2).matrix_wedge(&gamma(1)).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { left: 2, right: 1 });
    }
}
