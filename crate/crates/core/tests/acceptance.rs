//! Acceptance suite: one line per criterion, nonzero exit status if any criterion fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wncoh::char_forms::{proportionality, restrict_to_gl, stated_gl_factor, CharTable};
use wncoh::dsl::random::random_expr;
use wncoh::dsl::{parse, parse_expr, Domain, EQUIVARIANCE_TOL};
use wncoh::jet::{check_maurer_cartan, gv_local_form};
use wncoh::numeric::{
    coboundary, random_circle_diffeo, random_line_diffeo, BottCocycle, GroupCochain, GroupElement,
    GvCocycle, QuadratureConfig,
};
use wncoh::relative::{is_relative, is_sign_flip_invariant, LinearFieldBasis};
use wncoh::vey::{dimension_table, enumerate_all, Inequality, Variant};
use wncoh::wn::random::{random_cochain, random_field};
use wncoh::wn::{ce_differential_oracle, check_d_squared, evaluate_cochain, WnComplex};
use wncoh::{Ring, Q};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn within(limit: Duration, elapsed: Duration) -> bool {
    elapsed < limit
}

fn q(n: i64, d: i64) -> Q {
    Q::from_ratio(n, d)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 1..=3u8 {
        for order in 1..=4 {
            let report = check_d_squared::<Q>(n, order).expect("d^2 check runs");
            checked += report.generators_checked;
            if !report.passed() {
                failures.push(format!("n={n} R={order}: {:?}", report.failures));
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        failures.is_empty() && within(Duration::from_secs(60), elapsed),
        format!("{checked} generator checks, failures {failures:?}, {elapsed:.2?} (limit 60s)"),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut mismatches = 0;
    let mut tuples = Vec::new();
    for n in 1..=2u8 {
        let order = 3;
        let complex = WnComplex::<Q>::new(n, order).expect("complex builds");
        let mut count = 0;
        for trial in 0..120 {
            let degree = 1 + trial % 3;
            let c = random_cochain::<Q, _>(&mut rng, n, degree, order, 4);
            if c.is_zero() {
                continue;
            }
            let fields: Vec<_> = (0..=degree)
                .map(|_| random_field::<Q, _>(&mut rng, n, order + 1, 0.5))
                .collect();
            let symbolic =
                evaluate_cochain(&complex.d(&c).expect("d"), &fields).expect("evaluation");
            let oracle = ce_differential_oracle(&c, &fields).expect("oracle");
            if symbolic != oracle {
                mismatches += 1;
            }
            count += 1;
        }
        tuples.push((n, count));
    }
    let elapsed = start.elapsed();
    let enough = tuples.iter().all(|&(_, c)| c >= 100);
    outcome(
        mismatches == 0 && enough && within(Duration::from_secs(60), elapsed),
        format!("tuples per n {tuples:?}, {mismatches} mismatches, {elapsed:.2?} (limit 60s)"),
    )
}

fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    let mut checks = 0;
    for n in 1..=3u8 {
        let table = CharTable::<Q>::new(n, 2).expect("table builds");
        let gl = LinearFieldBasis::gl(n as usize);
        for p in 1..=n as usize {
            let psi = table.psi_p(p).expect("Psi_p");
            if !table.d(&psi).expect("d").is_zero() {
                failures.push(format!("d Psi_{p} != 0 at n={n}"));
            }
            if !is_relative(table.complex(), &psi, &gl)
                .expect("relativity")
                .passed()
            {
                failures.push(format!("Psi_{p} not gl-relative at n={n}"));
            }
            if p % 2 == 0 && !table.lambda_p(p).expect("lambda_p").is_zero() {
                failures.push(format!("lambda_{p} != 0 at n={n}"));
            }
            checks += 1;
        }
    }
    outcome(
        failures.is_empty(),
        format!("{checks} (n, p) pairs, failures {failures:?}"),
    )
}

fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    let mut observed = Vec::new();
    let golden = [(1usize, q(1, 6)), (3, q(1, 140))];
    for n in 1..=3u8 {
        let table = CharTable::<Q>::new(n, 2).expect("table builds");
        for (p, kappa) in &golden {
            if *p > n as usize {
                continue;
            }
            let cap = table.lambda_cap_p(*p).expect("Lambda_p");
            let restricted = restrict_to_gl(&cap);
            let factor = proportionality(&restricted, &table.lambda_p(*p).expect("lambda_p"))
                .expect("comparison");
            let (num, den) = stated_gl_factor(*p);
            let stated = q(num, den);
            observed.push(format!(
                "n={n} p={p}: gl factor {} (stated {stated})",
                factor.as_ref().map_or("none".into(), ToString::to_string)
            ));
            if factor.as_ref() != Some(&stated) {
                failures.push(format!("gl factor n={n} p={p}"));
            }
            match table.kappa_p(*p).expect("kappa") {
                Some(k) if &k == kappa => {}
                other => failures.push(format!("kappa_{p} at n={n} is {other:?}, golden {kappa}")),
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{}; kappa_1 = 1/6, kappa_3 = 1/140 golden; failures {failures:?}",
            observed.join(", ")
        ),
    )
}

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    let table = CharTable::<Q>::new(2, 2).expect("table builds");
    let so = LinearFieldBasis::so(2);
    let mut forms = vec![(
        "Lambda_1".to_string(),
        table.lambda_cap_p(1).expect("Lambda_1"),
    )];
    for ineq in [Inequality::Le, Inequality::Ge] {
        for t in enumerate_all(2, Variant::Relative, ineq) {
            if let Some(c) = wncoh::vey::cocycle(&table, &t).expect("product") {
                forms.push((format!("{t} ({ineq})"), c));
            }
        }
    }
    for (name, c) in &forms {
        checked += 1;
        if !is_relative(table.complex(), c, &so)
            .expect("relativity")
            .passed()
        {
            failures.push(name.clone());
        }
    }
    let t1 = CharTable::<Q>::new(1, 2).expect("table builds");
    let lambda = t1.lambda_cap_p(1).expect("Lambda_1");
    let product = lambda.wedge(&t1.psi_p(1).expect("Psi_1"));
    for (name, c) in [
        ("Lambda_1 (n=1)", &lambda),
        ("Lambda_1^Psi_1 (n=1)", &product),
    ] {
        checked += 1;
        if !is_sign_flip_invariant(c, 1).expect("reflection") {
            failures.push(name.to_string());
        }
    }
    outcome(
        failures.is_empty(),
        format!("{checked} forms checked, failures {failures:?}"),
    )
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let expect = |n, v, i, want: &[(usize, usize)]| -> Option<String> {
        let t = dimension_table(n, v, i).expect("table");
        let got: Vec<_> = t.counts.into_iter().collect();
        (got != want).then(|| format!("n={n} {v:?} {i}: {got:?}"))
    };
    failures.extend(expect(1, Variant::Relative, Inequality::Ge, &[(3, 1)]));
    failures.extend(expect(1, Variant::Relative, Inequality::Le, &[(3, 1)]));
    failures.extend(expect(1, Variant::General, Inequality::Le, &[(3, 1)]));
    failures.extend(expect(1, Variant::General, Inequality::Ge, &[(3, 1)]));
    let mut n2 = Vec::new();
    for v in [Variant::General, Variant::Relative] {
        for i in [Inequality::Le, Inequality::Ge] {
            n2.push(format!(
                "{v:?}/{i} {:?}",
                dimension_table(2, v, i).expect("table").counts
            ));
        }
    }
    for n in 1..=6 {
        for v in [Variant::General, Variant::Relative] {
            for i in [Inequality::Le, Inequality::Ge] {
                let t = dimension_table(n, v, i).expect("table");
                if !t.within_bounds() {
                    failures.push(format!(
                        "n={n} {v:?} {i}: degrees {:?} outside {:?}",
                        t.violations, t.bounds
                    ));
                }
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!("n=2 tables: {}; failures {failures:?}", n2.join("; ")),
    )
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for order in 2..=3 {
        for (r, ok) in check_maurer_cartan::<Q>(order).expect("Maurer-Cartan") {
            if !ok {
                failures.push(format!("R={order} r={r}"));
            }
        }
    }
    let report = gv_local_form::<Q>().expect("local form");
    let matched = report.matching().map(|c| {
        format!(
            "y2 = {} with constant {}",
            c.label,
            c.constant.as_ref().expect("constant")
        )
    });
    if !report.closed {
        failures.push("alpha(c_11) not closed".into());
    }
    if matched.is_none() {
        failures.push("no candidate triple matches".into());
    }
    let elapsed = start.elapsed();
    outcome(
        failures.is_empty() && within(Duration::from_secs(30), elapsed),
        format!(
            "{}; failures {failures:?}, {elapsed:.2?} (limit 30s)",
            matched.unwrap_or_else(|| "no match".into())
        ),
    )
}

fn line(s: &str) -> GroupElement {
    parse(s, Domain::Line).expect("parses").into()
}

fn circle(s: &str) -> GroupElement {
    parse(s, Domain::Circle).expect("parses").into()
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let cfg = QuadratureConfig::with_tolerance(1e-9);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut degenerate: f64 = 0.0;
    for _ in 0..5 {
        let x = rng.gen_range(-2.0..2.0);
        let gv = GvCocycle::new(x, cfg);
        let (f, g, h) = (
            random_line_diffeo(&mut rng),
            random_line_diffeo(&mut rng),
            random_line_diffeo(&mut rng),
        );
        let affine = line("1.5*x - 0.25");
        let id = GroupElement::identity(Domain::Line);
        for args in [
            [f.clone(), affine, h.clone()],
            [id.clone(), g.clone(), h.clone()],
            [f, g, id],
        ] {
            degenerate = degenerate.max(gv.evaluate(&args).expect("gv").abs());
        }
    }
    let mut worst: f64 = 0.0;
    let quadruples = 24;
    for _ in 0..quadruples {
        let gv = GvCocycle::new(rng.gen_range(-2.0..2.0), cfg);
        let args: Vec<_> = (0..4).map(|_| random_line_diffeo(&mut rng)).collect();
        worst = worst.max(coboundary(&gv, &args).expect("coboundary").abs());
    }
    let elapsed = start.elapsed();
    outcome(
        degenerate < 1e-12 && worst < 1e-6 && within(Duration::from_secs(300), elapsed),
        format!(
            "degenerate max {degenerate:.2e} (tol 1e-12), max |dc| {worst:.2e} over {quadruples} quadruples (tol 1e-6), {elapsed:.2?}"
        ),
    )
}

fn criterion_9() -> Outcome {
    let cfg = QuadratureConfig::with_tolerance(1e-9);
    let bott = BottCocycle::new(cfg);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut rotation: f64 = 0.0;
    for _ in 0..5 {
        let g = random_circle_diffeo(&mut rng);
        let r = circle(&format!("x + {:.6}", rng.gen_range(-3.0..3.0)));
        rotation = rotation.max(bott.evaluate(&[r.clone(), g.clone()]).expect("bott").abs());
        rotation = rotation.max(bott.evaluate(&[g, r]).expect("bott").abs());
    }
    let mut worst: f64 = 0.0;
    let triples = 24;
    for _ in 0..triples {
        let args: Vec<_> = (0..3).map(|_| random_circle_diffeo(&mut rng)).collect();
        worst = worst.max(coboundary(&bott, &args).expect("coboundary").abs());
    }
    let pair = [circle("x + 0.25*sin(x)"), circle("x + 0.25*cos(x)")];
    let coarse = BottCocycle::new(QuadratureConfig::with_tolerance(1e-10))
        .evaluate(&pair)
        .expect("bott");
    let fine = BottCocycle::new(QuadratureConfig::with_tolerance(5e-11))
        .evaluate(&pair)
        .expect("bott");
    let refinement = (coarse - fine).abs();
    outcome(
        rotation < 1e-12 && worst < 1e-6 && refinement < 1e-8,
        format!(
            "rotations max {rotation:.2e} (tol 1e-12), max |dc| {worst:.2e} over {triples} triples (tol 1e-6), refinement {refinement:.2e} (tol 1e-8), c = {fine:.12}"
        ),
    )
}

/// Ridders' extrapolation of central differences, starting from step `h`.
fn central_difference(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    const STEPS: usize = 8;
    const SHRINK: f64 = 1.4;
    let d = |h: f64| (f(x + h) - f(x - h)) / (2.0 * h);
    let mut table = [[0.0f64; STEPS]; STEPS];
    let mut h = h;
    let mut best = d(h);
    let mut best_err = f64::INFINITY;
    table[0][0] = best;
    for i in 1..STEPS {
        h /= SHRINK;
        table[0][i] = d(h);
        let mut factor = SHRINK * SHRINK;
        for j in 1..=i {
            table[j][i] = (table[j - 1][i] * factor - table[j - 1][i - 1]) / (factor - 1.0);
            factor *= SHRINK * SHRINK;
            let err = (table[j][i] - table[j - 1][i])
                .abs()
                .max((table[j][i] - table[j - 1][i - 1]).abs());
            if err <= best_err {
                best_err = err;
                best = table[j][i];
            }
        }
        if (table[i][i] - table[i - 1][i - 1]).abs() >= 2.0 * best_err {
            break;
        }
    }
    best
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut pairs = 0;
    let mut worst: f64 = 0.0;
    let mut failures = Vec::new();
    while pairs < 100 {
        let source = random_expr(&mut rng, 3).to_string();
        let e = parse_expr(&source).expect("rendered expression parses");
        let x: f64 = rng.gen_range(-2.0..2.0);
        let samples = [-1e-2, -5e-3, 0.0, 5e-3, 1e-2].map(|dx| e.eval(x + dx));
        if samples.iter().any(|v| !v.is_finite() || v.abs() > 1e6) {
            continue;
        }
        let symbolic = e.derivative().eval(x);
        if !symbolic.is_finite() || symbolic.abs() > 1e6 {
            continue;
        }
        let numeric = central_difference(|t| e.eval(t), x, 1e-2);
        let err = (symbolic - numeric).abs() / (1.0 + symbolic.abs());
        worst = worst.max(err);
        if err >= 1e-6 {
            failures.push(format!("d/dx {source} at {x}"));
        }
        pairs += 1;
    }
    let mut equivariance: f64 = 0.0;
    for _ in 0..20 {
        let g = random_circle_diffeo(&mut rng);
        for _ in 0..10 {
            let t = rng.gen_range(0.0..2.0 * PI);
            equivariance = equivariance.max((g.value(t + 2.0 * PI) - g.value(t) - 2.0 * PI).abs());
        }
    }
    let lift = parse("x + 0.25*sin(x)", Domain::Circle).expect("parses");
    let report = lift.validate(256).expect("validation");
    let residual = report.equivariance_residual.unwrap_or(f64::INFINITY);
    equivariance = equivariance.max(residual);
    outcome(
        failures.is_empty() && equivariance < EQUIVARIANCE_TOL,
        format!(
            "{pairs} pairs, max relative error {worst:.2e} (tol 1e-6), equivariance {equivariance:.2e} (tol 1e-9), failures {failures:?}"
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("d^2 = 0 on C*(W_n), n <= 3, R <= 4", criterion_1),
        ("symbolic d agrees with the evaluation oracle", criterion_2),
        ("Psi_p closed and gl-relative, lambda_even = 0", criterion_3),
        ("Lambda_p gl restriction and kappa_p", criterion_4),
        ("so(2)-relativity and n = 1 sign flip", criterion_5),
        ("Vey dimension tables", criterion_6),
        ("Gelfand-Kazhdan form and local GV form", criterion_7),
        ("Godbillon-Vey 3-cocycle", criterion_8),
        ("Bott 2-cocycle", criterion_9),
        ("parser, derivative, circle lifts", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {status} [{:.2?}] {name}: {}",
            i + 1,
            start.elapsed(),
            o.detail
        );
        failed += usize::from(!o.passed);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
