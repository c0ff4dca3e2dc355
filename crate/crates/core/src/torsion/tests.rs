use super::*;
use crate::arith::{rat, NumberField};
use crate::group::{abelianize, parse_presentation};
use crate::parse::parse_polynomial;

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

fn trefoil_trivial() -> Representation {
    let g = parse_presentation("gens: x y; rel: x y x Y X Y; kind: sphere-knot").unwrap();
    Representation::trivial(g, &NumberField::rationals())
}

fn pq(s: &str) -> Polynomial {
    parse_polynomial(s, &NumberField::rationals(), "t").unwrap()
}

#[test]
fn trefoil_fox_block() {
    let rho = trefoil_trivial();
    let m = wada_block_matrix(&rho.group, &[1, 1], &rho).unwrap();
    assert_eq!(m.shift, 0);
    let b = &m.blocks[0][0];
    assert_eq!(b[0][0], pq("t^2 - t + 1"));
    assert_eq!(b[1][1], pq("t^2 - t + 1"));
    assert!(b[0][1].is_zero() && b[1][0].is_zero());
}

#[test]
fn trefoil_trivial_torsion() {
    let rho = trefoil_trivial();
    let all = twisted_alexander_all_columns(&rho.group, &[1, 1], &rho).unwrap();
    assert_eq!(all.len(), 2);
    for t in &all {
        assert_eq!(t.numerator.unit_normalize().unwrap().poly, pq("(t^2 - t + 1)^2"));
        assert_eq!(t.denominator, pq("(t - 1)^2"));
        assert!(!t.exact_division);
        assert_eq!(t.reduced.1, pq("(t - 1)^2"));
        assert_eq!(t.to_string(), "(t^4 - 2*t^3 + 3*t^2 - 2*t + 1) / (t^2 - 2*t + 1)");
        assert!(t.polynomial().is_err());
    }
    assert!(all[0].same_value(&all[1]).unwrap());
}

#[test]
fn cyclic_group_with_parabolic_image() {
    let q = NumberField::rationals();
    let g = parse_presentation("gens: a; rel:").unwrap();
    let rho = Representation::new(g.clone(), vec![Matrix2::from_ints(&q, [[1, 1], [0, 1]])]).unwrap();
    let m = wada_block_matrix(&g, &[1], &rho).unwrap();
    assert!(m.blocks.is_empty());
    let t = twisted_alexander(&g, &[1], &rho, None).unwrap();
    assert_eq!(t.numerator, pq("1"));
    assert_eq!(t.denominator, pq("(t - 1)^2"));
    assert!(!t.exact_division);
}

#[test]
fn figure_eight_hyperbolic_torsion() {
    let rho = figure_eight();
    let ab = abelianize(&rho.group).unwrap();
    let all = twisted_alexander_all_columns(&rho.group, &ab.values, &rho).unwrap();
    assert_eq!(all.len(), 2);
    let k = eisenstein();
    let expected = parse_polynomial("t^2 - 4*t + 1", &k, "t").unwrap();
    for t in &all {
        assert!(t.exact_division);
        assert_eq!(t.polynomial().unwrap(), &expected);
    }
    let chosen = twisted_alexander(&rho.group, &ab.values, &rho, None).unwrap();
    assert_eq!(chosen.deleted_column, 0);
}

#[test]
fn other_lift_is_t_to_minus_t() {
    let rho = figure_eight();
    let ab = abelianize(&rho.group).unwrap();
    let t = twisted_alexander(&rho.group, &ab.values, &rho, None).unwrap();
    let direct = twisted_alexander(&rho.group, &ab.values, &rho.twist_by_sign(&ab.values), None).unwrap();
    let swapped = torsion_of_other_lift(&t).unwrap();
    assert_eq!(direct.polynomial().unwrap(), swapped.polynomial().unwrap());
    assert_eq!(swapped.polynomial().unwrap().to_string(), "t^2 + 4*t + 1");
}

#[test]
fn other_lift_examples() {
    let q = NumberField::rationals();
    let mk = |s: &str| TorsionValue::from_fraction(pq(s), Polynomial::one(&q), 0).unwrap();
    assert_eq!(
        torsion_of_other_lift(&mk("t^2 - t + 1")).unwrap().polynomial().unwrap(),
        &pq("t^2 + t + 1")
    );
    let even = mk("t^4 + 3*t^2 + 1");
    assert_eq!(
        torsion_of_other_lift(&even).unwrap().polynomial().unwrap(),
        even.polynomial().unwrap()
    );
}

#[test]
fn deficiency_is_checked() {
    let g = parse_presentation("gens: a b; rel:").unwrap();
    let rho = Representation::trivial(g.clone(), &NumberField::rationals());
    let err = wada_block_matrix(&g, &[1, 0], &rho).unwrap_err();
    assert!(err.to_string().contains("deficiency-one"), "{err}");
}

#[test]
fn inadmissible_column_is_rejected() {
    let rho = trefoil_trivial();
    // α = 0 on both generators makes every denominator 2 - 2 = 0
    let err = twisted_alexander(&rho.group, &[0, 0], &rho, None).unwrap_err();
    assert!(err.to_string().contains("no admissible column"));
    let err = twisted_alexander(&rho.group, &[0, 0], &rho, Some(1)).unwrap_err();
    assert!(err.to_string().contains("not admissible"));
}
