use std::f64::consts::TAU;

use rand::Rng;

use crate::dsl::{parse, Domain};

use super::group::GroupElement;

/// `x + c + a·sin(x + φ) + b·tanh(x)` with `|a| + |b| < 0.9`, so `f' ≥ 0.1`.
pub fn random_line_diffeo<R: Rng + ?Sized>(rng: &mut R) -> GroupElement {
    let a: f64 = rng.gen_range(-0.5..0.5);
    let b: f64 = rng.gen_range(-0.39..0.39);
    let c: f64 = rng.gen_range(-1.0..1.0);
    let phi: f64 = rng.gen_range(0.0..TAU);
    let src = format!("x + {c:.6} + {a:.6}*sin(x + {phi:.6}) + {b:.6}*tanh(x)");
    parse(&src, Domain::Line)
        .expect("generated source parses")
        .into()
}

/// Lift `x + a·sin(x + φ) + b·sin(2x + ψ)/2 + c` of a circle diffeomorphism with `|a| + |b| < 0.9`.
pub fn random_circle_diffeo<R: Rng + ?Sized>(rng: &mut R) -> GroupElement {
    let a: f64 = rng.gen_range(-0.5..0.5);
    let b: f64 = rng.gen_range(-0.39..0.39);
    let c: f64 = rng.gen_range(-1.0..1.0);
    let phi: f64 = rng.gen_range(0.0..TAU);
    let psi: f64 = rng.gen_range(0.0..TAU);
    let src = format!("x + {c:.6} + {a:.6}*sin(x + {phi:.6}) + {b:.6}*sin(2*x + {psi:.6})/2");
    parse(&src, Domain::Circle)
        .expect("generated source parses")
        .into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_diffeos_validate() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let g = random_line_diffeo(&mut rng);
            assert!(g.derivative(0.3) >= 0.1 - 1e-12);
            let c = random_circle_diffeo(&mut rng);
            assert!(
                (c.value(1.0 + 2.0 * std::f64::consts::PI)
                    - c.value(1.0)
                    - 2.0 * std::f64::consts::PI)
                    .abs()
                    < 1e-9
            );
        }
    }
}
