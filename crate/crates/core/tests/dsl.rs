use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wncoh::dsl::random::random_expr;
use wncoh::dsl::{add, mul, parse, parse_expr, Domain, Expr};
use wncoh::Error;

fn expr(seed: u64) -> Expr {
    random_expr(&mut ChaCha8Rng::seed_from_u64(seed), 3)
}

fn close(a: f64, b: f64) -> bool {
    !(a.is_finite() && b.is_finite()) || (a - b).abs() <= 1e-9 * (1.0 + a.abs().max(b.abs()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn render_then_parse_round_trips(seed in any::<u64>()) {
        let e = expr(seed);
        prop_assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn derivative_is_linear(s1 in any::<u64>(), s2 in any::<u64>(), x in -2.0f64..2.0) {
        let (f, g) = (expr(s1), expr(s2));
        let lhs = add(f.clone(), g.clone()).derivative().eval(x);
        prop_assert!(close(lhs, f.derivative().eval(x) + g.derivative().eval(x)));
    }

    #[test]
    fn product_rule(s1 in any::<u64>(), s2 in any::<u64>(), x in -2.0f64..2.0) {
        let (f, g) = (expr(s1), expr(s2));
        let lhs = mul(f.clone(), g.clone()).derivative().eval(x);
        let rhs = f.derivative().eval(x) * g.eval(x) + f.eval(x) * g.derivative().eval(x);
        prop_assert!(close(lhs, rhs), "{lhs} vs {rhs}");
    }

    #[test]
    fn single_precision_agrees(seed in any::<u64>(), x in -2.0f64..2.0) {
        let e = expr(seed);
        let (d, s) = (e.eval(x), e.eval(x as f32) as f64);
        prop_assume!(d.is_finite() && d.abs() < 1e3);
        prop_assert!((d - s).abs() < 1e-2 * (1.0 + d.abs()) || !s.is_finite());
    }
}

#[test]
fn whitespace_and_precedence() {
    let a = parse_expr("-x^2 + 2*x/4").unwrap();
    let b = parse_expr("  -(x^2)+((2*x)/4) ").unwrap();
    assert_eq!(a, b);
    assert_eq!(a.eval(3.0), -7.5);
    assert_eq!(parse_expr("x^-2").unwrap().eval(2.0), 0.25);
}

#[test]
fn errors_carry_positions() {
    assert!(matches!(
        parse_expr("x + * 2"),
        Err(Error::Syntax { pos: 4, .. })
    ));
    assert!(matches!(
        parse_expr("2*y"),
        Err(Error::UnknownIdentifier { pos: 2, .. })
    ));
    assert!(matches!(parse_expr("sin(x"), Err(Error::Syntax { .. })));
}

#[test]
fn derivatives_of_documented_examples() {
    let d = parse("x + 0.3*sin(x)", Domain::Circle).unwrap();
    let x: f64 = 0.8;
    assert!((d.derivative(1).unwrap().eval(x) - (1.0 + 0.3 * x.cos())).abs() < 1e-15);
    assert!((d.derivative(2).unwrap().eval(x) + 0.3 * x.sin()).abs() < 1e-15);
    assert!((d.derivative(3).unwrap().eval(x) + 0.3 * x.cos()).abs() < 1e-15);
    assert!(d.derivative(4).is_err());
}

#[test]
fn validation_examples() {
    let circle = parse("x + 0.25*sin(x)", Domain::Circle)
        .unwrap()
        .validate(64)
        .unwrap();
    assert!(circle.is_valid());
    assert!((circle.min_derivative - 0.75).abs() < 1e-12);
    assert!(circle.equivariance_residual.unwrap() < 1e-9);
    assert!(
        !parse("x^3", Domain::Line)
            .unwrap()
            .validate(64)
            .unwrap()
            .monotone
    );
    assert!(
        !parse("x + sin(x)", Domain::Circle)
            .unwrap()
            .validate(64)
            .unwrap()
            .monotone
    );
    assert!(!parse("x + 0.1*sin(x/2)", Domain::Circle)
        .unwrap()
        .validate(64)
        .unwrap()
        .is_valid());
    assert!(parse("2*x + 1", Domain::Line)
        .unwrap()
        .validate(64)
        .unwrap()
        .is_valid());
}
