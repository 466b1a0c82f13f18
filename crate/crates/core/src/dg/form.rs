//! Graded-commutative forms in anticommuting degree-one generators.

use std::borrow::Cow;
use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Neg, Sub};

use super::generator::GenId;
use crate::error::{Error, Result};
use crate::scalar::Ring;

/// Anything usable as a degree-one generator of a free graded-commutative algebra.
pub trait Generator: Ord + Clone + Debug + Display + Send + Sync {}

impl<T> Generator for T where T: Ord + Clone + Debug + Display + Send + Sync {}

/// A wedge product of distinct generators, kept strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial<G>(Vec<G>);

impl<G: Generator> Monomial<G> {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn single(g: G) -> Self {
        Monomial(vec![g])
    }

    /// Sorts `gens` into canonical order. Returns `(odd, monomial)` where `odd` is the
    /// parity of the sorting permutation, or `None` when a generator repeats.
    pub fn from_unsorted(mut gens: Vec<G>) -> Option<(bool, Self)> {
        let mut odd = false;
        for i in 1..gens.len() {
            let mut j = i;
            while j > 0 && gens[j - 1] > gens[j] {
                gens.swap(j - 1, j);
                odd = !odd;
                j -= 1;
            }
        }
        if gens.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((odd, Monomial(gens)))
    }

    pub fn gens(&self) -> &[G] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    /// `self ∧ other` as `(odd, product)`; `None` if they share a generator.
    pub fn wedge(&self, other: &Self) -> Option<(bool, Self)> {
        wedge_slices(&self.0, &other.0)
    }

    /// The monomial with the generator at `pos` removed.
    pub fn without(&self, pos: usize) -> Self {
        let mut gens = self.0.clone();
        gens.remove(pos);
        Monomial(gens)
    }
}

fn wedge_slices<G: Generator>(a: &[G], b: &[G]) -> Option<(bool, Monomial<G>)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut inversions = 0usize;
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j].clone());
                inversions += a.len() - i;
                j += 1;
            }
            std::cmp::Ordering::Equal => return None,
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Some((inversions % 2 == 1, Monomial(out)))
}

/// Degree of a form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    Zero,
    Homogeneous(usize),
    Mixed,
}

impl Degree {
    /// Degree for sign computations; the zero form may be given any degree.
    pub fn value(self) -> Result<usize> {
        match self {
            Degree::Zero => Ok(0),
            Degree::Homogeneous(d) => Ok(d),
            Degree::Mixed => Err(Error::MixedDegree),
        }
    }

    pub fn combine(self, other: Degree) -> Degree {
        match (self, other) {
            (Degree::Zero, d) | (d, Degree::Zero) => d,
            (Degree::Homogeneous(a), Degree::Homogeneous(b)) if a == b => Degree::Homogeneous(a),
            _ => Degree::Mixed,
        }
    }
}

/// Linear combination of monomials with coefficients in `K`.
///
/// Always normalized: monomials are canonical and no stored coefficient is zero.
#[derive(Clone, PartialEq)]
pub struct Form<K, G = GenId> {
    terms: BTreeMap<Monomial<G>, K>,
}

impl<K: Ring, G: Generator> Form<K, G> {
    pub fn zero() -> Self {
        Form {
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(k: K) -> Self {
        Self::monomial(Monomial::unit(), k)
    }

    pub fn one() -> Self {
        Self::scalar(K::one())
    }

    pub fn generator(g: G) -> Self {
        Self::monomial(Monomial::single(g), K::one())
    }

    pub fn monomial(m: Monomial<G>, k: K) -> Self {
        let mut f = Self::zero();
        f.add_term(m, k);
        f
    }

    /// Builds a form from unsorted generator lists, applying signs and dropping
    /// products with repeated generators.
    pub fn from_terms(terms: impl IntoIterator<Item = (Vec<G>, K)>) -> Self {
        let mut f = Self::zero();
        for (gens, k) in terms {
            if let Some((odd, m)) = Monomial::from_unsorted(gens) {
                f.add_term(m, if odd { -k } else { k });
            }
        }
        f
    }

    /// Wedge product of generators in the given order.
    pub fn product_of(gens: &[G]) -> Self {
        Self::from_terms([(gens.to_vec(), K::one())])
    }

    pub fn add_term(&mut self, m: Monomial<G>, k: K) {
        if k.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(k);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + k;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial<G>, &K)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial<G>) -> K {
        self.terms.get(m).cloned().unwrap_or_else(K::zero)
    }

    /// Coefficient of the empty monomial.
    pub fn constant_term(&self) -> K {
        self.coefficient(&Monomial::unit())
    }

    pub fn degree(&self) -> Degree {
        self.terms.keys().fold(Degree::Zero, |d, m| {
            d.combine(Degree::Homogeneous(m.degree()))
        })
    }

    /// Drops stored zeros. Forms are kept normalized, so this is the identity on values
    /// built through the public API.
    pub fn normalized(&self) -> Self {
        Form {
            terms: self
                .terms
                .iter()
                .filter(|(_, k)| !k.is_zero())
                .map(|(m, k)| (m.clone(), k.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &K) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone() * k.clone());
        }
        out
    }

    pub fn scale_ratio(&self, num: i64, den: i64) -> Self {
        self.scale(&K::from_ratio(num, den))
    }

    pub fn add_scaled(&mut self, other: &Self, k: &K) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone() * k.clone());
        }
    }

    pub fn wedge(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ka) in &self.terms {
            for (mb, kb) in &other.terms {
                if let Some((odd, m)) = ma.wedge(mb) {
                    let k = ka.clone() * kb.clone();
                    out.add_term(m, if odd { -k } else { k });
                }
            }
        }
        out
    }

    /// Wedge product of a sequence, `1` for the empty sequence.
    pub fn wedge_all<'a>(forms: impl IntoIterator<Item = &'a Self>) -> Self
    where
        Self: 'a,
    {
        forms.into_iter().fold(Self::one(), |acc, f| acc.wedge(f))
    }

    pub fn map_coeffs<K2: Ring>(&self, f: impl Fn(&K) -> K2) -> Form<K2, G> {
        let mut out = Form::zero();
        for (m, k) in &self.terms {
            out.add_term(m.clone(), f(k));
        }
        out
    }

    /// Drops every term containing a generator rejected by `keep`; this is the algebra
    /// quotient that sets those generators to zero.
    pub fn restrict(&self, keep: impl Fn(&G) -> bool) -> Self {
        Form {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.gens().iter().all(&keep))
                .map(|(m, k)| (m.clone(), k.clone()))
                .collect(),
        }
    }

    /// Generators occurring in the form, sorted.
    pub fn generators(&self) -> Vec<G> {
        let mut gens: Vec<G> = self
            .terms
            .keys()
            .flat_map(|m| m.gens().iter().cloned())
            .collect();
        gens.sort();
        gens.dedup();
        gens
    }

    /// Applies the algebra morphism sending each generator to `image(g)` and each
    /// coefficient through `coeff`.
    pub fn substitute<K2, G2, E>(
        &self,
        coeff: impl Fn(&K) -> K2,
        mut image: impl FnMut(&G) -> std::result::Result<Form<K2, G2>, E>,
    ) -> std::result::Result<Form<K2, G2>, E>
    where
        K2: Ring,
        G2: Generator,
    {
        let mut cache: BTreeMap<G, Form<K2, G2>> = BTreeMap::new();
        for g in self.generators() {
            let img = image(&g)?;
            cache.insert(g, img);
        }
        let mut out = Form::zero();
        for (m, k) in &self.terms {
            let mut acc = Form::scalar(coeff(k));
            for g in m.gens() {
                acc = acc.wedge(&cache[g]);
                if acc.is_zero() {
                    break;
                }
            }
            out = out + acc;
        }
        Ok(out)
    }

    /// Extends a generator table to the unique degree-one antiderivation:
    /// `d(g_1∧…∧g_q) = Σ_k (-1)^(k-1) g_1∧…∧dg_k∧…∧g_q`.
    pub fn apply_antiderivation<T>(&self, table: &T) -> Result<Self>
    where
        T: DerivationTable<K, G> + ?Sized,
    {
        let mut out = Self::zero();
        for (m, k) in &self.terms {
            let gens = m.gens();
            for pos in 0..gens.len() {
                let dg = table.image(&gens[pos])?;
                let left = &gens[..pos];
                let right = &gens[pos + 1..];
                for (m2, k2) in dg.terms() {
                    let Some((odd1, lm)) = wedge_slices(left, m2.gens()) else {
                        continue;
                    };
                    let Some((odd2, full)) = wedge_slices(lm.gens(), right) else {
                        continue;
                    };
                    let c = k.clone() * k2.clone();
                    let negative = (pos % 2 == 1) ^ odd1 ^ odd2;
                    out.add_term(full, if negative { -c } else { c });
                }
            }
        }
        Ok(out)
    }
}

/// Images of generators under an antiderivation.
pub trait DerivationTable<K: Ring, G: Generator> {
    fn image(&self, g: &G) -> Result<Cow<'_, Form<K, G>>>;
}

impl<K: Ring, G: Generator> DerivationTable<K, G> for BTreeMap<G, Form<K, G>> {
    fn image(&self, g: &G) -> Result<Cow<'_, Form<K, G>>> {
        self.get(g)
            .map(Cow::Borrowed)
            .ok_or_else(|| Error::UnknownGenerator(g.to_string()))
    }
}

impl<K: Ring, G: Generator + Hash> DerivationTable<K, G> for HashMap<G, Form<K, G>> {
    fn image(&self, g: &G) -> Result<Cow<'_, Form<K, G>>> {
        self.get(g)
            .map(Cow::Borrowed)
            .ok_or_else(|| Error::UnknownGenerator(g.to_string()))
    }
}

/// Wraps a closure as a [`DerivationTable`].
pub struct FnTable<F>(pub F);

impl<K, G, F> DerivationTable<K, G> for FnTable<F>
where
    K: Ring,
    G: Generator,
    F: Fn(&G) -> Result<Form<K, G>>,
{
    fn image(&self, g: &G) -> Result<Cow<'_, Form<K, G>>> {
        (self.0)(g).map(Cow::Owned)
    }
}

impl<K: Ring, G: Generator> Default for Form<K, G> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ring, G: Generator> Add for Form<K, G> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (m, k) in rhs.terms {
            self.add_term(m, k);
        }
        self
    }
}

impl<K: Ring, G: Generator> Add for &Form<K, G> {
    type Output = Form<K, G>;
    fn add(self, rhs: Self) -> Form<K, G> {
        self.clone() + rhs.clone()
    }
}

impl<K: Ring, G: Generator> Sub for Form<K, G> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for (m, k) in rhs.terms {
            self.add_term(m, -k);
        }
        self
    }
}

impl<K: Ring, G: Generator> Sub for &Form<K, G> {
    type Output = Form<K, G>;
    fn sub(self, rhs: Self) -> Form<K, G> {
        self.clone() - rhs.clone()
    }
}

impl<K: Ring, G: Generator> Neg for Form<K, G> {
    type Output = Self;
    fn neg(self) -> Self {
        Form {
            terms: self.terms.into_iter().map(|(m, k)| (m, -k)).collect(),
        }
    }
}

impl<K: Ring, G: Generator> Neg for &Form<K, G> {
    type Output = Form<K, G>;
    fn neg(self) -> Form<K, G> {
        -self.clone()
    }
}

impl<K: Ring, G: Generator> std::iter::Sum for Form<K, G> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

/// Coefficients are written with `Display`; compound coefficients (anything whose
/// rendering contains a space or an operator after the first character) are
/// parenthesized.
fn render_coeff<K: Ring>(k: &K) -> (bool, String) {
    let s = k.to_string();
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) if !rest.contains([' ', '+', '-']) => (true, rest.to_string()),
        _ => (false, s),
    };
    let compound = body.contains([' ', '+', '-']) && !body.starts_with('(');
    (negative, if compound { format!("({body})") } else { body })
}

impl<K: Ring, G: Generator> Display for Form<K, G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, k)) in self.terms.iter().enumerate() {
            let (negative, body) = render_coeff(k);
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let gens: Vec<String> = m.gens().iter().map(|g| g.to_string()).collect();
            let unit_coeff = body == "1";
            if m.is_unit() {
                write!(f, "{body}")?;
            } else if unit_coeff {
                write!(f, "{}", gens.join("^"))?;
            } else {
                write!(f, "{body} {}", gens.join("^"))?;
            }
        }
        Ok(())
    }
}

impl<K: Ring, G: Generator> Debug for Form<K, G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form({self})")
    }
}
