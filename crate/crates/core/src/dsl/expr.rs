use std::fmt;

use num_traits::Float;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Func {
    Sin,
    Cos,
    Exp,
    Log,
    Tanh,
    Atan,
}

impl Func {
    pub const ALL: [Func; 6] = [
        Func::Sin,
        Func::Cos,
        Func::Exp,
        Func::Log,
        Func::Tanh,
        Func::Atan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Exp => "exp",
            Func::Log => "log",
            Func::Tanh => "tanh",
            Func::Atan => "atan",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }

    fn apply<T: Float>(self, v: T) -> T {
        match self {
            Func::Sin => v.sin(),
            Func::Cos => v.cos(),
            Func::Exp => v.exp(),
            Func::Log => v.ln(),
            Func::Tanh => v.tanh(),
            Func::Atan => v.atan(),
        }
    }
}

/// Expression tree in the single variable `x`.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(f64),
    Pi,
    Var,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
    Call(Func, Box<Expr>),
}

use Expr::*;

impl Expr {
    pub fn eval<T: Float>(&self, x: T) -> T {
        let lit = |v: f64| T::from(v).expect("f64 literal fits the float type");
        match self {
            Num(v) => lit(*v),
            Pi => lit(std::f64::consts::PI),
            Var => x,
            Neg(a) => -a.eval(x),
            Add(a, b) => a.eval(x) + b.eval(x),
            Sub(a, b) => a.eval(x) - b.eval(x),
            Mul(a, b) => a.eval(x) * b.eval(x),
            Div(a, b) => a.eval(x) / b.eval(x),
            Pow(a, n) => a.eval(x).powi(*n),
            Call(f, a) => f.apply(a.eval(x)),
        }
    }

    /// Symbolic `d/dx`, simplified by constant folding and the `0`/`1` identities.
    pub fn derivative(&self) -> Expr {
        match self {
            Num(_) | Pi => Num(0.0),
            Var => Num(1.0),
            Neg(a) => neg(a.derivative()),
            Add(a, b) => add(a.derivative(), b.derivative()),
            Sub(a, b) => sub(a.derivative(), b.derivative()),
            Mul(a, b) => add(
                mul(a.derivative(), (**b).clone()),
                mul((**a).clone(), b.derivative()),
            ),
            Div(a, b) => div(
                sub(
                    mul(a.derivative(), (**b).clone()),
                    mul((**a).clone(), b.derivative()),
                ),
                pow((**b).clone(), 2),
            ),
            Pow(a, n) => mul(
                mul(Num(*n as f64), pow((**a).clone(), n - 1)),
                a.derivative(),
            ),
            Call(f, a) => {
                let inner = (**a).clone();
                let outer = match f {
                    Func::Sin => call(Func::Cos, inner),
                    Func::Cos => neg(call(Func::Sin, inner)),
                    Func::Exp => call(Func::Exp, inner),
                    Func::Log => div(Num(1.0), inner),
                    Func::Tanh => sub(Num(1.0), pow(call(Func::Tanh, inner), 2)),
                    Func::Atan => div(Num(1.0), add(Num(1.0), pow(inner, 2))),
                };
                mul(outer, a.derivative())
            }
        }
    }

    /// `k`-th derivative.
    pub fn nth_derivative(&self, k: usize) -> Expr {
        (0..k).fold(self.clone(), |e, _| e.derivative())
    }

    fn precedence(&self) -> u8 {
        match self {
            Add(..) | Sub(..) => 1,
            Mul(..) | Div(..) => 2,
            Neg(_) => 3,
            Pow(..) => 4,
            Num(v) if *v < 0.0 || v.is_sign_negative() => 3,
            _ => 5,
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            Num(_) | Pi | Var => 1,
            Neg(a) | Pow(a, _) | Call(_, a) => 1 + a.node_count(),
            Add(a, b) | Sub(a, b) | Mul(a, b) | Div(a, b) => 1 + a.node_count() + b.node_count(),
        }
    }
}

fn boxed(e: Expr) -> Box<Expr> {
    Box::new(e)
}

pub fn neg(a: Expr) -> Expr {
    match a {
        Num(v) => Num(-v),
        Neg(inner) => *inner,
        other => Neg(boxed(other)),
    }
}

pub fn add(a: Expr, b: Expr) -> Expr {
    match (a, b) {
        (Num(x), Num(y)) => Num(x + y),
        (Num(z), e) | (e, Num(z)) if z == 0.0 => e,
        (a, Neg(b)) => sub(a, *b),
        (a, b) => Add(boxed(a), boxed(b)),
    }
}

pub fn sub(a: Expr, b: Expr) -> Expr {
    match (a, b) {
        (Num(x), Num(y)) => Num(x - y),
        (e, Num(0.0)) => e,
        (Num(0.0), e) => neg(e),
        (a, b) => Sub(boxed(a), boxed(b)),
    }
}

pub fn mul(a: Expr, b: Expr) -> Expr {
    match (a, b) {
        (Num(x), Num(y)) => Num(x * y),
        (Num(z), _) | (_, Num(z)) if z == 0.0 => Num(0.0),
        (Num(o), e) | (e, Num(o)) if o == 1.0 => e,
        (Num(m), e) | (e, Num(m)) if m == -1.0 => neg(e),
        (Neg(a), b) => neg(mul(*a, b)),
        (a, Neg(b)) => neg(mul(a, *b)),
        (a, b) => Mul(boxed(a), boxed(b)),
    }
}

pub fn div(a: Expr, b: Expr) -> Expr {
    match (a, b) {
        (Num(0.0), _) => Num(0.0),
        (e, Num(1.0)) => e,
        (a, b) => Div(boxed(a), boxed(b)),
    }
}

pub fn pow(a: Expr, n: i32) -> Expr {
    match (a, n) {
        (_, 0) => Num(1.0),
        (e, 1) => e,
        (Num(v), n) => Num(v.powi(n)),
        (a, n) => Pow(boxed(a), n),
    }
}

pub fn call(f: Func, a: Expr) -> Expr {
    Call(f, boxed(a))
}

struct Wrapped<'a>(&'a Expr, bool);

impl fmt::Display for Wrapped<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Renders with the minimal parentheses that make parsing reproduce the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.precedence();
        fn left(e: &Expr, p: u8) -> Wrapped<'_> {
            Wrapped(e, e.precedence() < p)
        }
        fn right(e: &Expr, p: u8) -> Wrapped<'_> {
            Wrapped(e, e.precedence() <= p)
        }
        match self {
            Num(v) => write!(f, "{v}"),
            Pi => write!(f, "pi"),
            Var => write!(f, "x"),
            Neg(a) => write!(f, "-{}", Wrapped(a, a.precedence() < 3)),
            Add(a, b) => write!(f, "{} + {}", left(a, p), right(b, p)),
            Sub(a, b) => write!(f, "{} - {}", left(a, p), right(b, p)),
            Mul(a, b) => write!(f, "{}*{}", left(a, p), right(b, p)),
            Div(a, b) => write!(f, "{}/{}", left(a, p), right(b, p)),
            Pow(a, n) => {
                let base = Wrapped(a, a.precedence() < 5);
                if *n < 0 {
                    write!(f, "{base}^({n})")
                } else {
                    write!(f, "{base}^{n}")
                }
            }
            Call(func, a) => write!(f, "{}({})", func.name(), a),
        }
    }
}
