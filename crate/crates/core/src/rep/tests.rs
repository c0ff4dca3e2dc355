use proptest::prelude::*;

use super::*;
use crate::arith::rat;
use crate::group::{parse_presentation, reidemeister_schreier_index2};

fn eisenstein() -> NumberField {
    NumberField::new("z", vec![rat(1), rat(-1), rat(1)]).unwrap()
}

fn figure_eight() -> Representation {
    let k = eisenstein();
    let g =
        parse_presentation("gens: a b; rel: AbaBabABaB; meridian: a; longitude: BabAAbaB; kind: sphere-knot").unwrap();
    let a = Matrix2::parse([["1", "1"], ["0", "1"]], &k).unwrap();
    let b = Matrix2::parse([["1", "0"], ["z", "1"]], &k).unwrap();
    Representation::new(g, vec![a, b]).unwrap()
}

#[test]
fn empty_word_and_generators() {
    let rho = figure_eight();
    assert!(rho.evaluate_word(&Word::identity()).is_identity());
    assert_eq!(rho.evaluate_word(&Word::generator(1)), rho.images[1]);
    let w = Word::from_letters([(0, 1), (0, -1), (1, 1)]);
    assert_eq!(rho.evaluate_word(&w), rho.images[1]);
}

#[test]
fn figure_eight_is_valid() {
    let rho = figure_eight();
    let report = validate_representation(&rho);
    assert!(report.is_valid(), "{report:?}");
    assert_eq!(meridian_trace_sign(&rho).unwrap(), TraceSign::Plus);
    let l = rho.evaluate_word(rho.group.longitude.as_ref().unwrap());
    assert_eq!(
        l,
        Matrix2::parse([["-1", "2 - 4*z"], ["0", "-1"]], &eisenstein()).unwrap()
    );
}

#[test]
fn lower_left_minus_z_does_not_satisfy_the_relator() {
    let mut rho = figure_eight();
    rho.images[1] = Matrix2::parse([["1", "0"], ["-z", "1"]], &eisenstein()).unwrap();
    assert!(!validate_representation(&rho).is_valid());
}

#[test]
fn trivial_trefoil_is_valid() {
    let g = parse_presentation("gens: a b; rel: a b a B A B").unwrap();
    let rho = Representation::trivial(g, &NumberField::rationals());
    assert!(validate_representation(&rho).is_valid());
}

#[test]
fn bad_determinant_names_generator() {
    let q = NumberField::rationals();
    let g = parse_presentation("gens: a b; rel: a b a B A B").unwrap();
    let rho = Representation::new(
        g.clone(),
        vec![Matrix2::identity(&q), Matrix2::from_ints(&q, [[2, 0], [0, 1]])],
    )
    .unwrap();
    let err = validate_representation(&rho).into_result(&g).unwrap_err();
    assert!(err.to_string().contains("generator(s) b"), "{err}");
}

#[test]
fn minus_identity_relator_is_a_lift_inconsistency() {
    let q = NumberField::rationals();
    let g = parse_presentation("gens: a; rel: a^2").unwrap();
    let rho = Representation::new(g.clone(), vec![Matrix2::from_ints(&q, [[0, -1], [1, 0]])]).unwrap();
    let report = validate_representation(&rho);
    assert_eq!(report.lift_inconsistent, vec![0]);
    assert!(report.failed_relators.is_empty());
    let err = report.into_result(&g).unwrap_err();
    assert!(err.to_string().contains("lift inconsistency"));
}

#[test]
fn trace_signs() {
    let q = NumberField::rationals();
    assert_eq!(trace_sign(&Matrix2::from_ints(&q, [[1, 1], [0, 1]])), TraceSign::Plus);
    assert_eq!(
        trace_sign(&Matrix2::from_ints(&q, [[-1, 1], [0, -1]])),
        TraceSign::Minus
    );
    assert_eq!(trace_sign(&Matrix2::identity(&q)), TraceSign::NonParabolic);
    let g = parse_presentation("gens: a; rel:").unwrap();
    let rho = Representation::trivial(g, &q);
    assert!(meridian_trace_sign(&rho).is_err());
}

#[test]
fn trace_relation_examples() {
    let q = NumberField::rationals();
    let a = Matrix2::from_ints(&q, [[1, 1], [0, 1]]);
    let b = Matrix2::from_ints(&q, [[1, 0], [1, 1]]);
    assert_eq!(a.mul(&b).trace(), q.from_int(3));
    assert_eq!(a.mul(&b.inverse().unwrap()).trace(), q.from_int(1));
    assert!(trace_relation_check(&a, &b).unwrap().is_zero());
    let i = Matrix2::identity(&q);
    assert!(trace_relation_check(&i, &i).unwrap().is_zero());
}

#[test]
fn restriction_to_kernel_of_cyclic_group() {
    let q = NumberField::rationals();
    let g = parse_presentation("gens: a; rel:").unwrap();
    let m = Matrix2::from_ints(&q, [[2, 1], [1, 1]]);
    let rho = Representation::new(g.clone(), vec![m.clone()]).unwrap();
    let k = reidemeister_schreier_index2(&g).unwrap();
    let r = restrict_representation(&rho, &k).unwrap();
    assert_eq!(r.images, vec![m.mul(&m)]);
    let triv = restrict_representation(&Representation::trivial(g, &q), &k).unwrap();
    assert!(triv.images.iter().all(Matrix2::is_identity));
}

#[test]
fn restricted_meridian_has_trace_minus_two() {
    // a^2 ℓ is the meridian upstairs when (a, ℓ) plays the role of (α, ℓ̄)
    let mut rho = figure_eight();
    rho.group.kind = GroupKind::Generic;
    let k = reidemeister_schreier_index2(&rho.group).unwrap();
    let r = restrict_representation(&rho, &k).unwrap();
    assert_eq!(meridian_trace_sign(&r).unwrap(), TraceSign::Minus);
    assert_eq!(
        r.evaluate_word(r.group.longitude.as_ref().unwrap()).trace(),
        r.field.from_int(-2)
    );
}

#[test]
fn sign_twist_keeps_relators() {
    let rho = figure_eight();
    let other = rho.twist_by_sign(&[1, 1]);
    assert!(validate_representation(&other).is_valid());
    assert_eq!(meridian_trace_sign(&other).unwrap(), TraceSign::Minus);
}

fn cubic() -> NumberField {
    NumberField::new("z", vec![rat(-1), rat(1), rat(0), rat(1)]).unwrap()
}

/// Products of elementary matrices [[1,x],[0,1]] and [[1,0],[x,1]].
fn arb_sl2() -> impl Strategy<Value = Matrix2> {
    prop::collection::vec((prop::bool::ANY, prop::collection::vec(-4i64..5, 3)), 1..5).prop_map(|steps| {
        let k = cubic();
        steps.into_iter().fold(Matrix2::identity(&k), |acc, (upper, c)| {
            let x = k.element(c.into_iter().map(rat).collect());
            let e = if upper {
                Matrix2::new(k.one(), x, k.zero(), k.one())
            } else {
                Matrix2::new(k.one(), k.zero(), x, k.one())
            };
            acc.mul(&e)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trace_identity_holds(a in arb_sl2(), b in arb_sl2()) {
        prop_assert!(a.det().is_one());
        prop_assert!(trace_relation_check(&a, &b).unwrap().is_zero());
        // tr(A^2 B) = tr(A) tr(AB) - tr(B)
        let lhs = a.mul(&a).mul(&b).trace();
        let rhs = &(&a.trace() * &a.mul(&b).trace()) - &b.trace();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_is_a_homomorphism(
        u in prop::collection::vec((0usize..2, prop::bool::ANY), 0..8),
        v in prop::collection::vec((0usize..2, prop::bool::ANY), 0..8),
    ) {
        let rho = figure_eight();
        let mk = |x: Vec<(usize, bool)>| Word::from_letters(x.into_iter().map(|(g, s)| (g, if s { 1 } else { -1 })));
        let (u, v) = (mk(u), mk(v));
        let uv = rho.evaluate_word(&u.mul(&v));
        prop_assert_eq!(&uv, &rho.evaluate_word(&u).mul(&rho.evaluate_word(&v)));
        prop_assert!(uv.det().is_one());
    }
}
