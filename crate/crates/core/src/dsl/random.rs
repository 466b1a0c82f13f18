use rand::Rng;

use crate::dsl::expr::{Expr, Func};

/// Random expression tree of bounded depth built from every grammar construct. Leaves
/// are `x`, `pi` and literals in `[0, 3)`; exponents lie in `[-3, 3]`.
pub fn random_expr<R: Rng + ?Sized>(rng: &mut R, depth: usize) -> Expr {
    if depth == 0 || rng.gen_bool(0.2) {
        return match rng.gen_range(0..4) {
            0 | 1 => Expr::Var,
            2 => Expr::Pi,
            _ => Expr::Num((rng.gen_range(0.0..3.0f64) * 100.0).round() / 100.0),
        };
    }
    let choice = rng.gen_range(0..9);
    let mut sub = || Box::new(random_expr(rng, depth - 1));
    match choice {
        0 => Expr::Add(sub(), sub()),
        1 => Expr::Sub(sub(), sub()),
        2 => Expr::Mul(sub(), sub()),
        3 => Expr::Div(sub(), sub()),
        4 => Expr::Neg(sub()),
        5 => {
            let base = sub();
            Expr::Pow(base, rng.gen_range(-3..=3))
        }
        _ => {
            let arg = sub();
            Expr::Call(Func::ALL[rng.gen_range(0..Func::ALL.len())], arg)
        }
    }
}
