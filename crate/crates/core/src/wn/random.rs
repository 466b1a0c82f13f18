use rand::seq::SliceRandom;
use rand::Rng;

use crate::dg::{Family, Form, GenId};
use crate::scalar::Ring;
use crate::wn::{FormalVectorField, Polynomial};

/// Nonzero integer in `[-3, 3]`.
pub fn small_coefficient<R: Rng + ?Sized>(rng: &mut R) -> i64 {
    let k = rng.gen_range(1..=3);
    if rng.gen_bool(0.5) {
        k
    } else {
        -k
    }
}

/// Homogeneous cochain of the given degree built from `c`-generators of order at most
/// `max_order`, with up to `terms` monomials.
pub fn random_cochain<K: Ring, R: Rng + ?Sized>(
    rng: &mut R,
    n: u8,
    degree: usize,
    max_order: usize,
    terms: usize,
) -> Form<K> {
    let pool: Vec<GenId> = (0..=max_order)
        .flat_map(|r| GenId::all_of_order(Family::C, n, r))
        .collect();
    let degree = degree.min(pool.len());
    let mut out = Form::zero();
    for _ in 0..terms {
        let gens: Vec<GenId> = pool.choose_multiple(rng, degree).cloned().collect();
        let mono = Form::product_of(&gens);
        out = out + mono.scale(&K::from_int(small_coefficient(rng)));
    }
    out
}

/// Exponent vectors of total degree at most `max_degree` in `n` variables.
pub fn exponents_up_to(n: usize, max_degree: usize) -> Vec<Vec<u8>> {
    fn rec(n: usize, budget: usize, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for e in 0..=budget {
            prefix.push(e as u8);
            rec(n, budget - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_degree, &mut Vec::new(), &mut out);
    out
}

/// Polynomial vector field of degree at most `max_degree`; each coefficient is nonzero
/// with probability `density`.
pub fn random_field<K: Ring, R: Rng + ?Sized>(
    rng: &mut R,
    n: u8,
    max_degree: usize,
    density: f64,
) -> FormalVectorField<K> {
    let n = n as usize;
    let exps = exponents_up_to(n, max_degree);
    let comps = (0..n)
        .map(|_| {
            let mut p = Polynomial::zero(n);
            for e in &exps {
                if rng.gen_bool(density) {
                    p.add_term(e.clone(), K::from_int(small_coefficient(rng)));
                }
            }
            p
        })
        .collect();
    FormalVectorField::new(max_degree, comps)
}
