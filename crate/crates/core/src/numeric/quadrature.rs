use num_traits::Float;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Gauss weights for the odd Kronrod nodes `XGK[1], XGK[3], XGK[5], XGK[7]`.
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

impl QuadratureConfig {
    pub fn with_tolerance(tol: f64) -> Self {
        QuadratureConfig {
            abs_tol: tol,
            rel_tol: tol,
            ..Self::default()
        }
    }

    fn check(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0) {
            return Err(Error::OutOfRange(
                "quadrature tolerances must be positive".into(),
            ));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::OutOfRange(
                "max_subdivisions must be positive".into(),
            ));
        }
        Ok(())
    }
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_subdivisions: 4000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuadratureResult<T> {
    pub value: T,
    pub error_estimate: T,
    pub subdivisions: usize,
}

fn lit<T: Float>(v: f64) -> T {
    T::from(v).expect("constant fits the float type")
}

/// 15-point Kronrod estimate on `[a, b]` with `|K15 − G7|` as its error.
fn kronrod<T: Float>(f: &mut impl FnMut(T) -> T, a: T, b: T) -> (T, T) {
    let half = (b - a) / lit(2.0);
    let center = (a + b) / lit(2.0);
    let fc = f(center);
    let mut k = fc * lit(WGK[7]);
    let mut g = fc * lit(WG[3]);
    for j in 0..7 {
        let dx = half * lit(XGK[j]);
        let s = f(center - dx) + f(center + dx);
        k = k + s * lit(WGK[j]);
        if j % 2 == 1 {
            g = g + s * lit(WG[j / 2]);
        }
    }
    (k * half, ((k - g) * half).abs())
}

/// Globally adaptive Gauss–Kronrod (7/15) quadrature: the interval with the largest
/// error estimate is bisected until the total estimate meets
/// `max(abs_tol, rel_tol·|I|)`.
pub fn integrate<T: Float>(
    mut f: impl FnMut(T) -> T,
    a: T,
    b: T,
    cfg: &QuadratureConfig,
) -> Result<QuadratureResult<T>> {
    cfg.check()?;
    if a == b {
        return Ok(QuadratureResult {
            value: T::zero(),
            error_estimate: T::zero(),
            subdivisions: 0,
        });
    }
    let (lo, hi, sign) = if a < b {
        (a, b, T::one())
    } else {
        (b, a, -T::one())
    };
    let (v, e) = kronrod(&mut f, lo, hi);
    let mut pieces = vec![(lo, hi, v, e)];
    let mut subdivisions = 0;
    loop {
        let total: T = pieces.iter().fold(T::zero(), |s, p| s + p.2);
        let err: T = pieces.iter().fold(T::zero(), |s, p| s + p.3);
        if !total.is_finite() || !err.is_finite() {
            return Err(Error::Quadrature("integrand is not finite".into()));
        }
        let target = lit::<T>(cfg.abs_tol).max(lit::<T>(cfg.rel_tol) * total.abs());
        if err <= target {
            return Ok(QuadratureResult {
                value: sign * total,
                error_estimate: err,
                subdivisions,
            });
        }
        if subdivisions >= cfg.max_subdivisions {
            return Err(Error::Quadrature(format!(
                "error estimate {:e} above target {:e} after {subdivisions} subdivisions",
                err.to_f64().unwrap_or(f64::NAN),
                target.to_f64().unwrap_or(f64::NAN)
            )));
        }
        let worst = (0..pieces.len())
            .max_by(|&i, &j| {
                pieces[i]
                    .3
                    .partial_cmp(&pieces[j].3)
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .expect("at least one piece");
        let (l, h, _, _) = pieces.swap_remove(worst);
        let mid = (l + h) / lit(2.0);
        let (v1, e1) = kronrod(&mut f, l, mid);
        let (v2, e2) = kronrod(&mut f, mid, h);
        pieces.push((l, mid, v1, e1));
        pieces.push((mid, h, v2, e2));
        subdivisions += 1;
    }
}
