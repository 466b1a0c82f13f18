use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wncoh::dg::{Form, GenId, MatrixForm, Monomial};
use wncoh::relative::{contract, lie_derivative};
use wncoh::wn::random::{random_cochain, random_field};
use wncoh::wn::{evaluate_cochain, WnComplex};
use wncoh::{QForm, Q};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn sign(a: usize, b: usize) -> Q {
    if (a * b).is_multiple_of(2) {
        Q::from_integer(1.into())
    } else {
        Q::from_integer((-1).into())
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn repeated_generators_vanish(i in 1u8..=2, j in proptest::collection::vec(1u8..=2, 0..3)) {
        let g = GenId::c(i, &j);
        prop_assert!(Monomial::from_unsorted(vec![g.clone(), g.clone()]).is_none());
        let a = Form::<Q>::generator(g);
        prop_assert!(a.wedge(&a).is_zero());
    }

    #[test]
    fn graded_commutativity(seed in any::<u64>(), p in 0usize..4, q in 0usize..4) {
        let mut r = rng(seed);
        let a: QForm = random_cochain(&mut r, 2, p, 2, 3);
        let b: QForm = random_cochain(&mut r, 2, q, 2, 3);
        prop_assert_eq!(a.wedge(&b), b.wedge(&a).scale(&sign(p, q)));
    }

    #[test]
    fn wedge_is_associative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let [a, b, c]: [QForm; 3] = std::array::from_fn(|k| random_cochain(&mut r, 2, k + 1, 2, 3));
        prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
    }

    #[test]
    fn differential_is_a_graded_derivation(seed in any::<u64>(), p in 1usize..3, q in 1usize..3) {
        let cx = WnComplex::<Q>::new(2, 3).unwrap();
        let mut r = rng(seed);
        let a: QForm = random_cochain(&mut r, 2, p, 2, 3);
        let b: QForm = random_cochain(&mut r, 2, q, 2, 3);
        let lhs = cx.d(&a.wedge(&b)).unwrap();
        let rhs = cx.d(&a).unwrap().wedge(&b) + a.wedge(&cx.d(&b).unwrap()).scale(&sign(p, 1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_is_alternating(seed in any::<u64>(), degree in 2usize..4) {
        let mut r = rng(seed);
        let c: QForm = random_cochain(&mut r, 2, degree, 2, 3);
        let mut fields: Vec<_> = (0..degree).map(|_| random_field::<Q, _>(&mut r, 2, 2, 0.6)).collect();
        let v = evaluate_cochain(&c, &fields).unwrap();
        fields.swap(0, 1);
        prop_assert_eq!(evaluate_cochain(&c, &fields).unwrap(), -v);
    }

    #[test]
    fn trace_is_graded_symmetric(seed in any::<u64>(), p in 1usize..3, q in 1usize..3) {
        let mut r = rng(seed);
        let a = MatrixForm::from_fn(2, |_, _| random_cochain::<Q, _>(&mut r, 2, p, 1, 2));
        let b = MatrixForm::from_fn(2, |_, _| random_cochain::<Q, _>(&mut r, 2, q, 1, 2));
        let ab = a.matrix_wedge(&b).unwrap().trace();
        let ba = b.matrix_wedge(&a).unwrap().trace();
        prop_assert_eq!(ab, ba.scale(&sign(p, q)));
    }

    #[test]
    fn contractions_anticommute(seed in any::<u64>(), degree in 2usize..4) {
        let mut r = rng(seed);
        let c: QForm = random_cochain(&mut r, 2, degree, 2, 3);
        let x = random_field::<Q, _>(&mut r, 2, 2, 0.6);
        let y = random_field::<Q, _>(&mut r, 2, 2, 0.6);
        let xy = contract(&contract(&c, &y).unwrap(), &x).unwrap();
        let yx = contract(&contract(&c, &x).unwrap(), &y).unwrap();
        prop_assert_eq!(xy, -yx);
    }

    #[test]
    fn lie_derivative_commutes_with_d(seed in any::<u64>(), degree in 1usize..3) {
        let cx = WnComplex::<Q>::new(2, 3).unwrap();
        let mut r = rng(seed);
        let c: QForm = random_cochain(&mut r, 2, degree, 1, 3);
        let x = random_field::<Q, _>(&mut r, 2, 1, 0.6);
        let lhs = lie_derivative(&cx, &cx.d(&c).unwrap(), &x).unwrap();
        let rhs = cx.d(&lie_derivative(&cx, &c, &x).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
