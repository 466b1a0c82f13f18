//! Closed-form diffeomorphisms of the line and the circle.
//!
//! ```text
//! expr     = term , { ( "+" | "-" ) , term } ;
//! term     = unary , { ( "*" | "/" ) , unary } ;
//! unary    = "-" , unary | power ;
//! power    = primary , [ "^" , exponent ] ;
//! exponent = integer | "(" , integer , ")" ;
//! integer  = [ "+" | "-" ] , digits ;
//! primary  = number | "x" | "pi" | func , "(" , expr , ")" | "(" , expr , ")" ;
//! func     = "sin" | "cos" | "exp" | "log" | "tanh" | "atan" ;
//! number   = digits , [ "." , [ digits ] ] , [ ( "e" | "E" ) , [ "+" | "-" ] , digits ]
//!          | "." , digits , [ ( "e" | "E" ) , [ "+" | "-" ] , digits ] ;
//! digits   = digit , { digit } ;
//! digit    = "0" | "1" | "2" | "3" | "4" | "5" | "6" | "7" | "8" | "9" ;
//! ```
//!
//! Whitespace is ignored between tokens. `^` binds tighter than unary minus, so `-x^2`
//! is `-(x^2)`.

mod expr;
mod parse;
pub mod random;

use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

pub use expr::{add, call, div, mul, neg, pow, sub, Expr, Func};
pub use parse::parse_expr;

use crate::error::{Error, Result};

/// Half-width of the interval sampled when validating line diffeomorphisms.
pub const LINE_HALF_WIDTH: f64 = 10.0;

/// Tolerance on `|f(x+2π) − f(x) − 2π|` for circle lifts.
pub const EQUIVARIANCE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    Line,
    /// Lifts `f: ℝ → ℝ` with `f(x + 2π) = f(x) + 2π`.
    Circle,
}

/// A parsed diffeomorphism together with its first three derivatives.
#[derive(Clone, Debug, PartialEq)]
pub struct DiffeoExpr {
    pub source: String,
    pub domain: Domain,
    pub expr: Expr,
    derivs: [Expr; 3],
}

impl DiffeoExpr {
    pub fn from_expr(expr: Expr, domain: Domain) -> Self {
        let d1 = expr.derivative();
        let d2 = d1.derivative();
        let d3 = d2.derivative();
        DiffeoExpr {
            source: expr.to_string(),
            domain,
            expr,
            derivs: [d1, d2, d3],
        }
    }

    pub fn identity(domain: Domain) -> Self {
        Self::from_expr(Expr::Var, domain)
    }

    /// Symbolic `k`-th derivative, `k ∈ {1, 2, 3}`.
    pub fn derivative(&self, k: usize) -> Result<&Expr> {
        match k {
            1..=3 => Ok(&self.derivs[k - 1]),
            _ => Err(Error::OutOfRange(format!(
                "derivative order {k}, expected 1..=3"
            ))),
        }
    }

    pub fn value(&self, x: f64) -> f64 {
        self.expr.eval(x)
    }

    /// `(f(x), f'(x), f''(x))`.
    pub fn jet2(&self, x: f64) -> (f64, f64, f64) {
        (
            self.expr.eval(x),
            self.derivs[0].eval(x),
            self.derivs[1].eval(x),
        )
    }

    /// Samples `f'` (and, on the circle, the equivariance defect) at `grid + 1`
    /// equally spaced points of `[−L, L]` or `[0, 2π]`.
    pub fn validate(&self, grid: usize) -> Result<ValidationReport> {
        if grid < 64 {
            return Err(Error::OutOfRange(format!(
                "validation grid {grid} is below 64"
            )));
        }
        let (a, b) = match self.domain {
            Domain::Line => (-LINE_HALF_WIDTH, LINE_HALF_WIDTH),
            Domain::Circle => (0.0, 2.0 * PI),
        };
        let mut min_derivative = f64::INFINITY;
        let mut residual: f64 = 0.0;
        let mut finite = true;
        for i in 0..=grid {
            let x = a + (b - a) * i as f64 / grid as f64;
            let d = self.derivs[0].eval(x);
            finite &= d.is_finite();
            min_derivative = min_derivative.min(d);
            if self.domain == Domain::Circle {
                let defect = (self.value(x + 2.0 * PI) - self.value(x) - 2.0 * PI).abs();
                finite &= defect.is_finite();
                residual = residual.max(defect);
            }
        }
        let monotone = finite && min_derivative > 0.0;
        Ok(ValidationReport {
            grid,
            interval: (a, b),
            monotone,
            min_derivative,
            equivariance_residual: (self.domain == Domain::Circle).then_some(residual),
        })
    }

    /// Validates and turns failures into an error.
    pub fn ensure_valid(&self, grid: usize) -> Result<()> {
        let report = self.validate(grid)?;
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidDiffeo(format!("`{}`: {report}", self.source)))
        }
    }
}

/// Parses a diffeomorphism; the source text is kept for reports.
pub fn parse(src: &str, domain: Domain) -> Result<DiffeoExpr> {
    let mut d = DiffeoExpr::from_expr(parse_expr(src)?, domain);
    d.source = src.trim().to_string();
    Ok(d)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValidationReport {
    pub grid: usize,
    pub interval: (f64, f64),
    pub monotone: bool,
    pub min_derivative: f64,
    pub equivariance_residual: Option<f64>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.monotone
            && self
                .equivariance_residual
                .is_none_or(|r| r < EQUIVARIANCE_TOL)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "min f' = {:.3e} on {} samples of [{:.4}, {:.4}]",
            self.min_derivative,
            self.grid + 1,
            self.interval.0,
            self.interval.1
        )?;
        if let Some(r) = self.equivariance_residual {
            write!(f, ", equivariance defect {r:.3e}")?;
        }
        Ok(())
    }
}
