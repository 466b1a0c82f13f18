use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Generator families of the cochain algebras.
///
/// `C` are the coordinate cochains `c^i_J` of `C*(W_n)`, `F` and `Dx` the generators
/// `f^i_J`, `dx^i` of the formal-forms complex `C*(W_n; Ω*_n)`. In the target of the
/// `μ` map, `Dx` plays the role of the exterior-algebra factor with zero differential.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    C,
    F,
    Dx,
}

pub type IndexList = SmallVec<[u8; 8]>;

/// A degree-one generator `c^i_{j_1…j_r}`, `f^i_{j_1…j_r}` or `dx^i`.
///
/// Indices are 1-based. The lower multiset is kept sorted, so generators that differ only
/// by the order of lower indices are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenId {
    family: Family,
    upper: u8,
    lower: IndexList,
}

impl GenId {
    pub fn new(family: Family, upper: u8, lower: &[u8]) -> Self {
        assert!(upper >= 1, "indices are 1-based");
        assert!(
            family != Family::Dx || lower.is_empty(),
            "dx generators carry no lower indices"
        );
        let mut lower: IndexList = lower.iter().copied().collect();
        assert!(lower.iter().all(|&j| j >= 1), "indices are 1-based");
        lower.sort_unstable();
        GenId {
            family,
            upper,
            lower,
        }
    }

    pub fn c(upper: u8, lower: &[u8]) -> Self {
        GenId::new(Family::C, upper, lower)
    }

    pub fn f(upper: u8, lower: &[u8]) -> Self {
        GenId::new(Family::F, upper, lower)
    }

    pub fn dx(upper: u8) -> Self {
        GenId::new(Family::Dx, upper, &[])
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn upper(&self) -> u8 {
        self.upper
    }

    pub fn lower(&self) -> &[u8] {
        &self.lower
    }

    /// Jet order: the number of lower indices.
    pub fn order(&self) -> usize {
        self.lower.len()
    }

    /// Largest index appearing in the generator.
    pub fn max_index(&self) -> u8 {
        self.lower.iter().copied().fold(self.upper, u8::max)
    }

    pub fn with_family(&self, family: Family) -> Self {
        GenId::new(family, self.upper, &self.lower)
    }

    /// Every generator of `family` with upper index in `1..=n` and order exactly `r`.
    pub fn all_of_order(family: Family, n: u8, r: usize) -> Vec<GenId> {
        let mut out = Vec::new();
        for multiset in sorted_multisets(n, r) {
            for i in 1..=n {
                out.push(GenId::new(family, i, &multiset));
            }
        }
        out.sort();
        out
    }
}

/// All non-decreasing sequences of length `r` over `1..=n`.
pub fn sorted_multisets(n: u8, r: usize) -> Vec<Vec<u8>> {
    fn rec(n: u8, r: usize, start: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for j in start..=n {
            cur.push(j);
            rec(n, r, j, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, r, 1, &mut Vec::with_capacity(r), &mut out);
    out
}

impl Ord for GenId {
    /// Canonical order: family, then order, then upper index, then lower indices.
    fn cmp(&self, other: &Self) -> Ordering {
        self.family
            .cmp(&other.family)
            .then(self.lower.len().cmp(&other.lower.len()))
            .then(self.upper.cmp(&other.upper))
            .then_with(|| self.lower.cmp(&other.lower))
    }
}

impl PartialOrd for GenId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GenId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.max_index() > 9;
        let join = |idx: &[u8]| -> String {
            let parts: Vec<String> = idx.iter().map(|j| j.to_string()).collect();
            parts.join(if wide { "," } else { "" })
        };
        match self.family {
            Family::C => write!(f, "c[{}|{}]", self.upper, join(&self.lower)),
            Family::F => write!(f, "f[{}|{}]", self.upper, join(&self.lower)),
            Family::Dx => write!(f, "dx[{}]", self.upper),
        }
    }
}
