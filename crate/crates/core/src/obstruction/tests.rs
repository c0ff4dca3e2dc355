use proptest::prelude::*;

use super::*;
use crate::arith::{rat, NumberField};
use crate::factor::is_irreducible;
use crate::group::parse_presentation;
use crate::parse::{parse_field, parse_polynomial};
use crate::rep::Matrix2;

fn q() -> NumberField {
    NumberField::rationals()
}

fn gaussian() -> NumberField {
    NumberField::new("z", vec![rat(1), rat(0), rat(1)]).unwrap()
}

fn p(s: &str, k: &NumberField) -> Polynomial {
    parse_polynomial(s, k, "t").unwrap()
}

/// `f` or `f(-t)`, up to sign.
fn same_up_to_swap(a: &Polynomial, b: &Polynomial) -> bool {
    let n = |x: &Polynomial| x.unit_normalize().unwrap().poly;
    n(a) == n(b) || n(a) == n(&b.substitute_neg_t())
}

#[test]
fn linear_torsion_pairs() {
    let out = check_pairing(&p("1 - t^2", &q())).unwrap();
    assert_eq!(out.verdict, Verdict::Consistent);
    assert!(same_up_to_swap(out.factor_f.as_ref().unwrap(), &p("t + 1", &q())));
}

#[test]
fn field_dependence() {
    let over_q = check_pairing(&p("t^4 - 1", &q())).unwrap();
    assert_eq!(over_q.verdict, Verdict::Obstructed);
    assert!(matches!(
        &over_q.failures[0],
        PairingFailure::OddInvariantFactor { multiplicity: 1, .. }
    ));
    assert!(over_q.failures[0].to_string().contains("t^2 + 1"));
    let k = gaussian();
    let over_i = check_pairing(&p("t^4 - 1", &k)).unwrap();
    assert_eq!(over_i.verdict, Verdict::Consistent);
    let f = over_i.factor_f.unwrap();
    assert!(same_up_to_swap(&f, &p("t^2 + (1 + z)*t + z", &k)));
    assert_eq!(&f * &f.substitute_neg_t(), p("t^4 - 1", &k));
}

#[test]
fn odd_polynomials_are_rejected() {
    assert!(check_pairing(&p("t^3 + t", &q())).is_err());
    assert!(check_pairing(&Polynomial::zero(&q())).is_err());
}

#[test]
fn non_square_leading_coefficient() {
    // 2 (t^2 - 1)(t^2 - 4) pairs up but 2 is not a square over Q
    let out = check_pairing(&p("2*(t^2 - 1)*(t^2 - 4)", &q())).unwrap();
    assert_eq!(out.verdict, Verdict::Obstructed);
    assert!(matches!(out.failures[0], PairingFailure::NonSquareLeading { .. }));
}

#[test]
fn invariant_factor_with_even_multiplicity() {
    // t^2 + 3 is fixed by σ̂ and appears squared
    let out = check_pairing(&p("(t - 1)^2*(t + 1)^2*(t^2 + 3)^2", &q())).unwrap();
    assert_eq!(out.verdict, Verdict::Consistent);
    let f = out.factor_f.unwrap();
    assert_eq!(f.degree(), Some(4));
    assert!((&f * &f.substitute_neg_t()).equal_up_to_unit(&out.polynomial).unwrap());
}

#[test]
fn constant_torsion() {
    let r = free_two_periodicity_check(
        &p("1", &q()),
        Lift::Plus,
        LiftSelection::Both,
        &FactorOptions::default(),
    )
    .unwrap();
    assert_eq!(r.verdict, Verdict::Consistent);
    assert_eq!(r.factor_f, Some(p("1", &q())));
}

#[test]
fn lift_selection_runs_requested_lifts() {
    let t = p("t^2 - 1", &gaussian());
    let opts = FactorOptions::default();
    let both = free_two_periodicity_check(&t, Lift::Plus, LiftSelection::Both, &opts).unwrap();
    assert_eq!(both.lifts.len(), 2);
    assert_eq!(both.lifts[0].lift, Lift::Plus);
    let minus = free_two_periodicity_check(&t, Lift::Plus, LiftSelection::Minus, &opts).unwrap();
    assert_eq!(minus.lifts.len(), 1);
    assert_eq!(minus.lifts[0].outcome.polynomial, t.substitute_neg_t_squared());
    let plus = free_two_periodicity_check(&t, Lift::Plus, LiftSelection::Plus, &opts).unwrap();
    assert_eq!(plus.lifts[0].outcome.polynomial, t.substitute_t_squared());
}

#[test]
fn cross_check_examples() {
    let tb = p("t + 1", &q());
    let tk = p("1 + t", &q()).substitute_neg_t();
    // T_K(-t^2) = (t + 1)(1 - t) = 1 - t^2 means T_K(s) = 1 + s
    assert!(cross_check_quotient(&p("1 + t", &q()), &tb).unwrap());
    assert!(!cross_check_quotient(&tk.substitute_t_squared(), &tb).unwrap());
    assert!(cross_check_quotient(&p("t + 1", &gaussian()), &tb).is_err());
}

#[test]
fn torus_knot_cover_identity() {
    // T(3,5) = <x, y | x^3 y^-5> with ε = α mod 2, α(x) = 5, α(y) = 3
    let k = NumberField::new("z", vec![rat(-1), rat(-1), rat(1)]).unwrap();
    let g = parse_presentation("gens: x y; rel: x^3 y^-5; kind: generic").unwrap();
    let x = Matrix2::parse([["0", "-1"], ["1", "1"]], &k).unwrap();
    let y = Matrix2::parse([["z", "-1"], ["1", "0"]], &k).unwrap();
    let rho = Representation::new(g, vec![x, y]).unwrap();
    let c = cover_pipeline(&rho).unwrap();
    assert!(c.identity_holds);
    let expected = p("(t^5 + 1)*(t^15 + 1)", &k)
        .exact_div(&p("t^6 - z*t^3 + 1", &k))
        .unwrap();
    assert_eq!(c.quotient_torsion.polynomial().unwrap(), &expected);
    assert_eq!(c.kernel.group.relators.len(), 2);
}

#[test]
fn figure_eight_cover_identity() {
    let k = NumberField::new("z", vec![rat(1), rat(-1), rat(1)]).unwrap();
    let g = parse_presentation("gens: a b; rel: AbaBabABaB; meridian: a; longitude: BabAAbaB; kind: generic").unwrap();
    let a = Matrix2::parse([["1", "1"], ["0", "1"]], &k).unwrap();
    let b = Matrix2::parse([["1", "0"], ["z", "1"]], &k).unwrap();
    let rho = Representation::new(g, vec![a, b]).unwrap();
    let c = cover_pipeline(&rho).unwrap();
    assert!(c.identity_holds);
    assert_eq!(c.restricted_meridian, Some(TraceSign::Minus));
    assert_eq!(c.restricted_torsion.polynomial().unwrap(), &p("t^2 - 14*t + 1", &k));
    assert_eq!(c.cover_torsion.polynomial().unwrap(), &p("t^2 + 14*t + 1", &k));
}

fn arb_poly(max_deg: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-5i64..6, 1..=max_deg + 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn products_pair_and_f_is_sound(c in arb_poly(4), k in 0usize..3, neg in prop::bool::ANY) {
        let f = Polynomial::from_ints(&q(), &c);
        prop_assume!(!f.is_zero());
        let base = &f * &f.substitute_neg_t();
        let out = check_pairing(&base).unwrap();
        prop_assert_eq!(out.verdict, Verdict::Consistent);
        let g = out.factor_f.clone().unwrap();
        prop_assert!((&g * &g.substitute_neg_t()).equal_up_to_unit(&base).unwrap());
        // unit invariance
        let mut moved = base.shl(2 * k);
        if neg {
            moved = -moved;
        }
        let again = check_pairing(&moved).unwrap();
        prop_assert_eq!(again.verdict, Verdict::Consistent);
        prop_assert_eq!(
            again.factor_f.unwrap().unit_normalize().unwrap().poly,
            g.unit_normalize().unwrap().poly
        );
    }
}

const SMALL_FIELDS: [(&str, usize); 4] = [("z", 1), ("z^2 + 1", 2), ("z^2 - z - 1", 2), ("z^3 + z - 1", 3)];

fn arb_field_poly(max_deg: usize) -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (0..SMALL_FIELDS.len()).prop_flat_map(move |i| {
        let d = SMALL_FIELDS[i].1;
        (
            Just(i),
            prop::collection::vec(prop::collection::vec(-3i64..4, d), 2..=max_deg + 1),
        )
    })
}

fn build(i: usize, coords: &[Vec<i64>]) -> Polynomial {
    let k = parse_field("z", SMALL_FIELDS[i].0).unwrap();
    let coeffs = coords
        .iter()
        .map(|c| k.element(c.iter().map(|&x| rat(x)).collect()))
        .collect();
    Polynomial::new(&k, coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn completeness_over_small_fields((i, coords) in arb_field_poly(5)) {
        let f = build(i, &coords);
        prop_assume!(f.degree().unwrap_or(0) >= 1 && !f.coeff(0).is_zero());
        let base = &f * &f.substitute_neg_t();
        let out = check_pairing(&base).unwrap();
        prop_assert_eq!(out.verdict, Verdict::Consistent);
        let g = out.factor_f.unwrap();
        let unit = base.field().from_int(out.unit as i64);
        prop_assert_eq!(&g * &g.substitute_neg_t(), base.scale(&unit));
    }

    #[test]
    fn odd_invariant_factor_obstructs((i, coords) in arb_field_poly(3), a in 2i64..40, cube in prop::bool::ANY) {
        let h = build(i, &coords);
        prop_assume!(!h.is_zero() && !h.coeff(0).is_zero());
        let k = h.field().clone();
        let g = Polynomial::from_ints(&k, &[a, 0, 1]);
        prop_assume!(is_irreducible(&g).unwrap());
        let p = &g.pow(if cube { 3 } else { 1 }) * &(&h * &h.substitute_neg_t());
        let out = check_pairing(&p).unwrap();
        prop_assert_eq!(out.verdict, Verdict::Obstructed);
        let odd = out.failures.iter().any(|f| matches!(f, PairingFailure::OddInvariantFactor { .. }));
        prop_assert!(odd);
    }
}
