use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use wncoh::char_forms::{proportionality, restrict_to_gl, stated_gl_factor, CharTable};
use wncoh::dsl::{parse, Domain, EQUIVARIANCE_TOL};
use wncoh::jet::{check_maurer_cartan, gv_local_form};
use wncoh::numeric::{
    bott_cocycle, coboundary, gv_cocycle, random_circle_diffeo, random_line_diffeo, BottCocycle,
    GroupCochain, GroupElement, GvCocycle, Job, QuadratureConfig, JOB_VALIDATION_GRID,
};
use wncoh::relative::{is_relative, is_sign_flip_invariant, LinearFieldBasis};
use wncoh::vey::{self, dimension_table, enumerate_all, Inequality, Variant};
use wncoh::wn::random::{random_cochain, random_field};
use wncoh::wn::{ce_differential_oracle, check_d_squared, evaluate_cochain, WnComplex};
use wncoh::{Error, Result, Q};

use crate::report::{Check, Report};

/// Largest dimension and jet order run without `--force`.
pub const DESK_MAX_N: u8 = 3;
pub const DESK_MAX_ORDER: usize = 4;

pub fn desk_limits(n: u8, order: usize, force: bool) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    if n > DESK_MAX_N || order > DESK_MAX_ORDER {
        if !force {
            return Err(Error::TooLarge(format!(
                "n = {n}, R = {order} exceeds the desk-scale limits n <= {DESK_MAX_N}, R <= {DESK_MAX_ORDER}; pass --force to run anyway"
            )));
        }
        eprintln!("warning: n = {n}, R = {order} is beyond desk scale; the generator count grows combinatorially");
    }
    Ok(())
}

pub fn check_d2(n: u8, order: usize) -> Result<Report> {
    let mut report = Report::new("check d2", json!({ "n": n, "order": order }));
    let r = check_d_squared::<Q>(n, order)?;
    report.push(
        Check::exact(
            format!("d^2 = 0 on generators, n={n}, R={order}"),
            r.passed(),
        )
        .with_value(json!({ "generators": r.generators_checked, "failures": r.failures })),
    );
    Ok(report)
}

pub fn oracle(n: u8, order: usize, samples: usize, seed: u64) -> Result<Report> {
    let mut report = Report::new(
        "oracle",
        json!({ "n": n, "order": order, "samples": samples }),
    );
    let complex = WnComplex::<Q>::new(n, order)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mismatches = 0;
    for k in 0..samples {
        let degree = 1 + k % 3;
        let c = random_cochain::<Q, _>(&mut rng, n, degree, order, 4);
        let fields: Vec<_> = (0..=degree)
            .map(|_| random_field::<Q, _>(&mut rng, n, order + 1, 0.5))
            .collect();
        if evaluate_cochain(&complex.d(&c)?, &fields)? != ce_differential_oracle(&c, &fields)? {
            mismatches += 1;
        }
    }
    report.push(
        Check::exact(
            format!("symbolic d = evaluation oracle, n={n}"),
            mismatches == 0,
        )
        .with_value(json!({ "samples": samples, "mismatches": mismatches })),
    );
    Ok(report)
}

pub fn classes(n: u8) -> Result<Report> {
    let mut report = Report::new("classes", json!({ "n": n }));
    let table = CharTable::<Q>::new(n, 3)?;
    let gl = LinearFieldBasis::gl(n as usize);
    let nu = n as usize;
    for p in 1..=nu {
        let psi = table.psi_p(p)?;
        report.push(Check::exact(
            format!("d Psi_{p} = 0"),
            table.d(&psi)?.is_zero(),
        ));
        let rel = is_relative(table.complex(), &psi, &gl)?;
        report.push(Check::exact(
            format!("Psi_{p} gl_{n}-relative"),
            rel.passed(),
        ));
        if p % 2 == 0 {
            report.push(Check::exact(
                format!("lambda_{p} = 0"),
                table.lambda_p(p)?.is_zero(),
            ));
        }
    }
    for c in table.verify_structure_identities()? {
        let alternative = c.name.contains("with Omega = ") && !c.name.ends_with("Omega = Psi");
        let check = if alternative {
            Check::value(
                c.name.clone(),
                format!("{} residual terms", c.residual_terms),
            )
        } else {
            Check::exact(c.name.clone(), c.holds())
        };
        report.push(check);
    }
    for p in (1..=nu).step_by(2) {
        let cap = table.lambda_cap_p(p)?;
        match table.kappa_p(p)? {
            Some(k) => report.push(Check::value(format!("kappa_{p}"), k.to_string())),
            None => report.push(Check::exact(
                format!("d Lambda_{p} proportional to Psi_{p}"),
                false,
            )),
        }
        let factor = proportionality(&restrict_to_gl(&cap), &table.lambda_p(p)?)?;
        let (num, den) = stated_gl_factor(p);
        report.push(Check::value(
            format!("Lambda_{p} restricted to gl_{n} / lambda_{p}"),
            json!({
                "computed": factor.map(|f| f.to_string()),
                "stated": format!("{num}/{den}"),
            }),
        ));
        if n >= 2 {
            let rel = is_relative(table.complex(), &cap, &LinearFieldBasis::so(nu))?;
            report.push(Check::exact(
                format!("Lambda_{p} so({n})-relative"),
                rel.passed(),
            ));
        } else {
            report.push(Check::exact(
                format!("Lambda_{p} invariant under x^1 -> -x^1"),
                is_sign_flip_invariant(&cap, nu)?,
            ));
        }
    }
    Ok(report)
}

/// The stated gl-restriction factor, checked exactly.
pub fn gl_factor(n: u8) -> Result<Report> {
    let mut report = Report::new("gl factor", json!({ "n": n }));
    let table = CharTable::<Q>::new(n, 2)?;
    for p in (1..=n as usize).step_by(2) {
        let restricted = restrict_to_gl(&table.lambda_cap_p(p)?);
        let factor = proportionality(&restricted, &table.lambda_p(p)?)?;
        let (num, den) = stated_gl_factor(p);
        let stated = Q::new(num.into(), den.into());
        report.push(
            Check::exact(
                format!("Lambda_{p}|gl_{n} = {stated} lambda_{p}"),
                factor.as_ref() == Some(&stated),
            )
            .with_value(format!(
                "computed {}",
                factor.map_or("none".to_string(), |f| f.to_string())
            )),
        );
    }
    Ok(report)
}

pub fn relative_products(n: u8) -> Result<Report> {
    let mut report = Report::new("relative products", json!({ "n": n }));
    let table = CharTable::<Q>::new(n, 2)?;
    let so = LinearFieldBasis::so(n as usize);
    for ineq in [Inequality::Le, Inequality::Ge] {
        for t in enumerate_all(n as usize, Variant::Relative, ineq) {
            let Some(c) = vey::cocycle(&table, &t)? else {
                continue;
            };
            let ok = if n == 1 {
                is_sign_flip_invariant(&c, 1)?
            } else {
                is_relative(table.complex(), &c, &so)?.passed()
            };
            report.push(Check::exact(format!("{t} relative ({ineq})"), ok));
        }
    }
    Ok(report)
}

pub fn vey_tables(n: usize, ineqs: &[Inequality], variants: &[Variant]) -> Result<Report> {
    let mut report = Report::new("vey", json!({ "n": n }));
    for &v in variants {
        for &i in ineqs {
            let t = dimension_table(n, v, i)?;
            let name = format!("{v:?} ({i}) counts within [{}, {}]", t.bounds.0, t.bounds.1)
                .to_lowercase();
            report.push(
                Check::exact(name, t.within_bounds())
                    .with_value(serde_json::to_value(&t.counts).unwrap_or_default()),
            );
        }
    }
    Ok(report)
}

pub fn gv_local() -> Result<Report> {
    let mut report = Report::new("verify gv-local", json!({ "order": 3 }));
    for order in 2..=3 {
        for (r, ok) in check_maurer_cartan::<Q>(order)? {
            report.push(Check::exact(format!("Maurer-Cartan R={order} r={r}"), ok));
        }
    }
    let local = gv_local_form::<Q>()?;
    report.push(Check::exact("alpha(Lambda_1^Psi_1) closed", local.closed));
    report.push(Check::value(
        "alpha(Lambda_1^Psi_1)",
        local.form.to_string(),
    ));
    for c in &local.candidates {
        report.push(Check::value(
            format!("y = x0, y1 = log x1, y2 = {}", c.label),
            match &c.constant {
                Some(k) => format!("proportional, constant {k}"),
                None => "not proportional".to_string(),
            },
        ));
    }
    report.push(Check::exact(
        "some candidate triple matches",
        local.matching().is_some(),
    ));
    Ok(report)
}

fn element(src: &str, domain: Domain) -> Result<GroupElement> {
    let d = parse(src, domain)?;
    d.ensure_valid(JOB_VALIDATION_GRID)?;
    Ok(d.into())
}

pub fn gv(f: &str, g: &str, h: &str, x: f64, tol: f64) -> Result<Report> {
    let mut report = Report::new("gv", json!({ "f": f, "g": g, "h": h, "x": x, "tol": tol }));
    let r = gv_cocycle(
        &element(f, Domain::Line)?,
        &element(g, Domain::Line)?,
        &element(h, Domain::Line)?,
        x,
        &QuadratureConfig::with_tolerance(tol),
    )?;
    report.push(Check::value(
        "c(f, g, h)",
        serde_json::to_value(r).unwrap_or_default(),
    ));
    Ok(report)
}

pub fn bott(g1: &str, g2: &str, tol: f64) -> Result<Report> {
    let mut report = Report::new("bott", json!({ "g1": g1, "g2": g2, "tol": tol }));
    let r = bott_cocycle(
        &element(g1, Domain::Circle)?,
        &element(g2, Domain::Circle)?,
        &QuadratureConfig::with_tolerance(tol),
    )?;
    report.push(Check::value(
        "c(g1, g2)",
        serde_json::to_value(r).unwrap_or_default(),
    ));
    Ok(report)
}

pub fn job(src: &str) -> Result<Report> {
    let job = Job::from_json(src)?;
    let mut report = Report::new("job", serde_json::to_value(&job).unwrap_or_default());
    let r = job.run()?;
    report.push(Check::value(
        "result",
        serde_json::to_value(r).unwrap_or_default(),
    ));
    Ok(report)
}

pub fn cocycle_identities(samples: usize, seed: u64) -> Result<Report> {
    let tol = 1e-9;
    let mut report = Report::new("cocycles", json!({ "samples": samples, "tol": tol }));
    let cfg = QuadratureConfig::with_tolerance(tol);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut degenerate: f64 = 0.0;
    let (f, g, h) = (
        random_line_diffeo(&mut rng),
        random_line_diffeo(&mut rng),
        random_line_diffeo(&mut rng),
    );
    let id = GroupElement::identity(Domain::Line);
    let affine = element("1.5*x - 0.25", Domain::Line)?;
    let gv = GvCocycle::new(0.3, cfg);
    for args in [
        [f.clone(), affine, h.clone()],
        [id.clone(), g.clone(), h.clone()],
        [f, g, id],
    ] {
        degenerate = degenerate.max(gv.evaluate(&args)?.abs());
    }
    report.push(Check::residual("GV degeneracies", degenerate, 1e-12));

    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let gv = GvCocycle::new(rng.gen_range(-2.0..2.0), cfg);
        let args: Vec<_> = (0..4).map(|_| random_line_diffeo(&mut rng)).collect();
        worst = worst.max(coboundary(&gv, &args)?.abs());
    }
    report.push(Check::residual(
        format!("GV |dc| over {samples} quadruples"),
        worst,
        1e-6,
    ));

    let bott = BottCocycle::new(cfg);
    let g = random_circle_diffeo(&mut rng);
    let rot = element("x + 0.7", Domain::Circle)?;
    let rotation = bott
        .evaluate(&[rot.clone(), g.clone()])?
        .abs()
        .max(bott.evaluate(&[g, rot])?.abs());
    report.push(Check::residual("Bott rotations", rotation, 1e-12));

    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let args: Vec<_> = (0..3).map(|_| random_circle_diffeo(&mut rng)).collect();
        worst = worst.max(coboundary(&bott, &args)?.abs());
    }
    report.push(Check::residual(
        format!("Bott |dc| over {samples} triples"),
        worst,
        1e-6,
    ));

    let pair = [
        element("x + 0.25*sin(x)", Domain::Circle)?,
        element("x + 0.25*cos(x)", Domain::Circle)?,
    ];
    let coarse = BottCocycle::new(QuadratureConfig::with_tolerance(1e-10)).evaluate(&pair)?;
    let fine = BottCocycle::new(QuadratureConfig::with_tolerance(5e-11)).evaluate(&pair)?;
    report.push(Check::residual("Bott refinement", (coarse - fine).abs(), 1e-8).with_value(fine));

    let mut equivariance: f64 = 0.0;
    for _ in 0..samples {
        let g = random_circle_diffeo(&mut rng);
        let t = rng.gen_range(0.0..2.0 * PI);
        equivariance = equivariance.max((g.value(t + 2.0 * PI) - g.value(t) - 2.0 * PI).abs());
    }
    report.push(Check::residual(
        "circle lift equivariance",
        equivariance,
        EQUIVARIANCE_TOL,
    ));
    Ok(report)
}

pub fn suite() -> Result<Report> {
    let mut report = Report::new(
        "suite",
        json!({ "max_n": DESK_MAX_N, "max_order": DESK_MAX_ORDER }),
    );
    for n in 1..=DESK_MAX_N {
        report.extend(check_d2(n, DESK_MAX_ORDER)?);
    }
    for n in 1..=2 {
        report.extend(oracle(n, 3, 100, 2)?);
    }
    for n in 1..=DESK_MAX_N {
        report.extend(classes(n)?);
        report.extend(gl_factor(n)?);
    }
    for n in 1..=2 {
        report.extend(relative_products(n)?);
    }
    report.extend(vey_tables(
        1,
        &[Inequality::Le, Inequality::Ge],
        &[Variant::General, Variant::Relative],
    )?);
    report.extend(vey_tables(
        2,
        &[Inequality::Le, Inequality::Ge],
        &[Variant::General, Variant::Relative],
    )?);
    report.extend(gv_local()?);
    report.extend(cocycle_identities(20, 8)?);
    Ok(report)
}
