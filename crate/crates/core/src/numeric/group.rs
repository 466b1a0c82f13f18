use std::fmt;
use std::sync::Arc;

use crate::conventions;
use crate::dsl::{DiffeoExpr, Domain};

/// Element of `Diff(ℝ)` or `Diff₊(S¹)` stored as a chain of maps applied left to right.
#[derive(Clone, Debug)]
pub struct GroupElement {
    domain: Domain,
    chain: Vec<Arc<DiffeoExpr>>,
}

impl GroupElement {
    pub fn new(d: DiffeoExpr) -> Self {
        GroupElement {
            domain: d.domain,
            chain: vec![Arc::new(d)],
        }
    }

    pub fn identity(domain: Domain) -> Self {
        GroupElement {
            domain,
            chain: Vec::new(),
        }
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// The product `self · other` under the group law of [`conventions::group_product`].
    pub fn product(&self, other: &Self) -> Self {
        let [first, second] = conventions::group_product(self, other);
        GroupElement {
            domain: self.domain,
            chain: first.chain.iter().chain(&second.chain).cloned().collect(),
        }
    }

    /// `(f(x), f'(x), f''(x))` by the chain rule through every map of the chain.
    pub fn jet2(&self, x: f64) -> (f64, f64, f64) {
        let (mut v, mut d1, mut d2) = (x, 1.0, 0.0);
        for f in &self.chain {
            let (fv, f1, f2) = f.jet2(v);
            d2 = f2 * d1 * d1 + f1 * d2;
            d1 *= f1;
            v = fv;
        }
        (v, d1, d2)
    }

    pub fn value(&self, x: f64) -> f64 {
        self.chain.iter().fold(x, |v, f| f.value(v))
    }

    pub fn derivative(&self, x: f64) -> f64 {
        self.jet2(x).1
    }
}

impl From<DiffeoExpr> for GroupElement {
    fn from(d: DiffeoExpr) -> Self {
        GroupElement::new(d)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.chain.is_empty() {
            return write!(f, "id");
        }
        let parts: Vec<String> = self
            .chain
            .iter()
            .rev()
            .map(|d| format!("({})", d.source))
            .collect();
        write!(f, "{}", parts.join(" o "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse;

    #[test]
    fn product_applies_the_left_factor_first() {
        let g1 = GroupElement::new(parse("x + 1", Domain::Line).unwrap());
        let g2 = GroupElement::new(parse("2*x", Domain::Line).unwrap());
        assert_eq!(g1.product(&g2).value(0.0), 2.0);
        assert_eq!(g2.product(&g1).value(0.0), 1.0);
        assert_eq!(g1.product(&g2).to_string(), "(2*x) o (x + 1)");
    }

    #[test]
    fn chain_rule() {
        let a = GroupElement::new(parse("x + 0.3*sin(x)", Domain::Line).unwrap());
        let b = GroupElement::new(parse("x^3 + x", Domain::Line).unwrap());
        let ab = a.product(&b);
        let x = 0.7;
        let (_, d1, d2) = ab.jet2(x);
        let h = 1e-4;
        let fd1 = (ab.value(x + h) - ab.value(x - h)) / (2.0 * h);
        let fd2 = (ab.value(x + h) - 2.0 * ab.value(x) + ab.value(x - h)) / (h * h);
        assert!((d1 - fd1).abs() < 1e-6);
        assert!((d2 - fd2).abs() < 1e-4);
    }
}
