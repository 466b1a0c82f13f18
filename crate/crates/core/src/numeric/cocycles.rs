use std::f64::consts::PI;

use crate::conventions::face_sign;
use crate::dsl::Domain;
use crate::error::{Error, Result};

use super::group::GroupElement;
use super::quadrature::{integrate, QuadratureConfig, QuadratureResult};

/// Continuous nonhomogeneous real cochain on a diffeomorphism group, trivial action.
pub trait GroupCochain {
    fn arity(&self) -> usize;

    fn evaluate_with_error(&self, args: &[GroupElement]) -> Result<QuadratureResult<f64>>;

    fn evaluate(&self, args: &[GroupElement]) -> Result<f64> {
        self.evaluate_with_error(args).map(|r| r.value)
    }

    fn check_arity(&self, got: usize) -> Result<()> {
        if got == self.arity() {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                expected: self.arity(),
                got,
            })
        }
    }
}

/// Constant cochain of any arity.
#[derive(Clone, Copy, Debug)]
pub struct ConstantCochain {
    pub arity: usize,
    pub value: f64,
}

impl GroupCochain for ConstantCochain {
    fn arity(&self) -> usize {
        self.arity
    }

    fn evaluate_with_error(&self, args: &[GroupElement]) -> Result<QuadratureResult<f64>> {
        self.check_arity(args.len())?;
        Ok(QuadratureResult {
            value: self.value,
            error_estimate: 0.0,
            subdivisions: 0,
        })
    }
}

/// `(δc)(g_1,…,g_{p+1})` for the trivial module `ℝ`.
pub fn coboundary<C: GroupCochain + ?Sized>(c: &C, args: &[GroupElement]) -> Result<f64> {
    let p = c.arity();
    if args.len() != p + 1 {
        return Err(Error::ArityMismatch {
            expected: p + 1,
            got: args.len(),
        });
    }
    let mut total = c.evaluate(&args[1..])?;
    for i in 1..=p {
        let mut face: Vec<GroupElement> = Vec::with_capacity(p);
        face.extend_from_slice(&args[..i - 1]);
        face.push(args[i - 1].product(&args[i]));
        face.extend_from_slice(&args[i + 1..]);
        total += face_sign(i) * c.evaluate(&face)?;
    }
    total += face_sign(p + 1) * c.evaluate(&args[..p])?;
    Ok(total)
}

fn require_domain(args: &[GroupElement], domain: Domain) -> Result<()> {
    match args.iter().find(|g| g.domain() != domain) {
        Some(g) => Err(Error::InvalidDiffeo(format!(
            "`{g}` is not a {domain:?} diffeomorphism"
        ))),
        None => Ok(()),
    }
}

/// Godbillon–Vey cocycle `c(f,g,h) = ∫_x^{f(x)} log|h'(g(t))| · g''(t)/g'(t) dt` at a basepoint.
#[derive(Clone, Copy, Debug)]
pub struct GvCocycle {
    pub basepoint: f64,
    pub quadrature: QuadratureConfig,
}

impl GvCocycle {
    pub fn new(basepoint: f64, quadrature: QuadratureConfig) -> Self {
        GvCocycle {
            basepoint,
            quadrature,
        }
    }
}

impl GroupCochain for GvCocycle {
    fn arity(&self) -> usize {
        3
    }

    fn evaluate_with_error(&self, args: &[GroupElement]) -> Result<QuadratureResult<f64>> {
        self.check_arity(args.len())?;
        require_domain(args, Domain::Line)?;
        let (f, g, h) = (&args[0], &args[1], &args[2]);
        let x = self.basepoint;
        let upper = f.value(x);
        let mut singular = None;
        let result = integrate(
            |t: f64| {
                let (gt, g1, g2) = g.jet2(t);
                let h1 = h.derivative(gt);
                if g1 <= 0.0 || h1 == 0.0 {
                    singular.get_or_insert(t);
                    return f64::NAN;
                }
                h1.abs().ln() * g2 / g1
            },
            x,
            upper,
            &self.quadrature,
        );
        match singular {
            Some(t) => Err(Error::InvalidDiffeo(format!(
                "derivative vanishes near t = {t}"
            ))),
            None => result,
        }
    }
}

/// Godbillon–Vey value for three diffeomorphisms of the line.
pub fn gv_cocycle(
    f: &GroupElement,
    g: &GroupElement,
    h: &GroupElement,
    x: f64,
    q: &QuadratureConfig,
) -> Result<QuadratureResult<f64>> {
    GvCocycle::new(x, *q).evaluate_with_error(&[f.clone(), g.clone(), h.clone()])
}

/// Bott cocycle on `Diff₊(S¹)`: `c(g_1, g_2) = ∫_0^{2π} log ḡ_1'(t) · (log ḡ_2')'(t) dt`
/// with `ḡ_1 = g_1` and `ḡ_2 = g_2 ∘ g_1`.
#[derive(Clone, Copy, Debug)]
pub struct BottCocycle {
    pub quadrature: QuadratureConfig,
}

impl BottCocycle {
    pub fn new(quadrature: QuadratureConfig) -> Self {
        BottCocycle { quadrature }
    }
}

impl GroupCochain for BottCocycle {
    fn arity(&self) -> usize {
        2
    }

    fn evaluate_with_error(&self, args: &[GroupElement]) -> Result<QuadratureResult<f64>> {
        self.check_arity(args.len())?;
        require_domain(args, Domain::Circle)?;
        let g1 = &args[0];
        let g2_bar = args[0].product(&args[1]);
        let mut singular = None;
        let result = integrate(
            |t: f64| {
                let a = g1.derivative(t);
                let (_, b1, b2) = g2_bar.jet2(t);
                if a <= 0.0 || b1 <= 0.0 {
                    singular.get_or_insert(t);
                    return f64::NAN;
                }
                a.ln() * b2 / b1
            },
            0.0,
            2.0 * PI,
            &self.quadrature,
        );
        match singular {
            Some(t) => Err(Error::InvalidDiffeo(format!(
                "derivative vanishes near t = {t}"
            ))),
            None => result,
        }
    }
}

/// Bott value for the `n = 1`, `s = (1)` cocycle.
pub fn bott_cocycle(
    g1: &GroupElement,
    g2: &GroupElement,
    q: &QuadratureConfig,
) -> Result<QuadratureResult<f64>> {
    BottCocycle::new(*q).evaluate_with_error(&[g1.clone(), g2.clone()])
}
