use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wncoh::char_forms::{lambda_cap_prefactor, proportionality, restrict_to_gl, CharTable};
use wncoh::vey::{dimension_table, Inequality, Variant};
use wncoh::wn::random::random_cochain;
use wncoh::wn::{check_formal_d_squared, check_mu_chain_map, mu_inverse, mu_map};
use wncoh::{QForm, Ring, Q};

#[test]
fn formal_forms_and_mu() {
    for n in 1..=2 {
        for order in 1..=3 {
            assert!(check_formal_d_squared::<Q>(n, order).unwrap().passed());
            assert!(check_mu_chain_map::<Q>(n, order).unwrap().passed());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for degree in 1..=3 {
        let c: QForm = random_cochain(&mut rng, 2, degree, 2, 4);
        assert_eq!(mu_map(&mu_inverse(&c).unwrap()).unwrap(), c);
    }
}

#[test]
fn structure_identities_at_n3() {
    let t = CharTable::<Q>::new(3, 3).unwrap();
    let checks = t.verify_structure_identities().unwrap();
    let holding: Vec<_> = checks
        .iter()
        .filter(|c| c.holds())
        .map(|c| c.name.as_str())
        .collect();
    assert!(holding.contains(&"d gamma = Psi + gamma^gamma"));
    assert!(holding
        .iter()
        .any(|n| n.contains("Omega = Psi") && !n.contains("Psi^t")));
    let residuals: Vec<_> = checks
        .iter()
        .filter(|c| !c.holds())
        .map(|c| c.residual_terms)
        .collect();
    assert_eq!(residuals, [288, 288]);
}

#[test]
fn kappa_golden_values() {
    for n in 1..=3 {
        let t = CharTable::<Q>::new(n, 2).unwrap();
        assert_eq!(t.kappa_p(1).unwrap(), Some(Q::from_ratio(1, 6)));
    }
    let t = CharTable::<Q>::new(3, 2).unwrap();
    assert_eq!(t.kappa_p(3).unwrap(), Some(Q::from_ratio(1, 140)));
    assert_eq!(lambda_cap_prefactor(3), (72, 840));
}

#[test]
fn gl_restriction_factors_golden() {
    let t = CharTable::<Q>::new(3, 2).unwrap();
    let factor = |p| {
        proportionality(
            &restrict_to_gl(&t.lambda_cap_p(p).unwrap()),
            &t.lambda_p(p).unwrap(),
        )
        .unwrap()
    };
    assert_eq!(factor(1), Some(Q::from_ratio(1, 6)));
    assert_eq!(factor(3), Some(Q::from_ratio(2, 175)));
    let integral = proportionality(
        &restrict_to_gl(&t.transgression_integral(3).unwrap()),
        &t.lambda_p(3).unwrap(),
    );
    assert_eq!(integral.unwrap(), Some(Q::from_ratio(2, 15)));
}

#[test]
fn invariance_on_random_arguments() {
    let t = CharTable::<Q>::new(3, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for p in 1..=3 {
        for _ in 0..3 {
            assert!(t.random_invariance_residual(&mut rng, p).unwrap().is_zero());
        }
    }
}

#[test]
fn vey_tables_golden() {
    let json = |n, v, i| serde_json::to_string(&dimension_table(n, v, i).unwrap().counts).unwrap();
    assert_eq!(json(1, Variant::General, Inequality::Le), r#"{"3":1}"#);
    assert_eq!(json(1, Variant::Relative, Inequality::Ge), r#"{"3":1}"#);
    assert_eq!(
        json(2, Variant::General, Inequality::Le),
        r#"{"5":2,"7":1,"8":2}"#
    );
    assert_eq!(
        json(2, Variant::General, Inequality::Ge),
        r#"{"5":2,"7":2,"8":1}"#
    );
    assert_eq!(json(2, Variant::Relative, Inequality::Le), r#"{"5":2}"#);
    assert_eq!(json(2, Variant::Relative, Inequality::Ge), r#"{"5":1}"#);
}
