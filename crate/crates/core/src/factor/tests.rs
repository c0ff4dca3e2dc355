use super::*;
use crate::arith::{rat, ratio};
use crate::parse::parse_polynomial;

fn q() -> NumberField {
    NumberField::rationals()
}

fn pq(s: &str) -> Polynomial {
    parse_polynomial(s, &q(), "t").unwrap()
}

#[test]
fn cyclotomic_splitting() {
    let f = factor_over_q(&pq("t^12 - 1")).unwrap();
    let degs: Vec<usize> = f.factors.iter().map(|(g, _)| g.degree().unwrap()).collect();
    assert_eq!(degs, vec![1, 1, 2, 2, 2, 4]);
    assert_eq!(f.expand(), pq("t^12 - 1"));
}

#[test]
fn multiplicities_and_units() {
    let p = pq("-3*(t-1)^3*(t^2+1)^2*t^2*(2*t+5)");
    let f = factor_over_q(&p).unwrap();
    assert_eq!(f.unit, q().from_rational(rat(-6)));
    assert_eq!(f.expand(), p);
    let mults: Vec<usize> = f.factors.iter().map(|(_, m)| *m).collect();
    assert_eq!(f.factors.len(), 4);
    assert!(mults.contains(&3) && mults.contains(&2));
    assert!(f.factors.iter().any(|(g, _)| *g == pq("t + 5/2")));
}

#[test]
fn swinnerton_dyer_is_irreducible() {
    // minimal polynomial of sqrt2 + sqrt3 + sqrt5
    let p = pq("t^8 - 40*t^6 + 352*t^4 - 960*t^2 + 576");
    assert!(is_irreducible(&p).unwrap());
}

#[test]
fn constant_irreducibility_is_an_error() {
    assert!(is_irreducible(&pq("7")).is_err());
}

#[test]
fn factor_over_quadratic_field() {
    let k = NumberField::new("z", vec![rat(-2), rat(0), rat(1)]).unwrap();
    let p = parse_polynomial("t^4 - 4", &k, "t").unwrap();
    let f = factor_over_nf(&p).unwrap();
    assert_eq!(f.factors.len(), 3);
    assert_eq!(f.expand(), p);
    let x2p2 = parse_polynomial("t^2 + 2", &k, "t").unwrap();
    assert!(f.factors.iter().any(|(g, _)| *g == x2p2));
}

#[test]
fn trager_needs_shift() {
    // t^2 - 2 over Q(sqrt2): the unshifted norm (t^2-2)^2 is not squarefree
    let k = NumberField::new("z", vec![rat(-2), rat(0), rat(1)]).unwrap();
    let p = parse_polynomial("t^2 - 2", &k, "t").unwrap();
    let f = factor_over_nf(&p).unwrap();
    assert_eq!(f.factors.len(), 2);
    assert_eq!(f.expand(), p);
}

#[test]
fn repeated_factors_over_field() {
    let k = NumberField::new("z", vec![rat(1), rat(0), rat(1)]).unwrap();
    let p = parse_polynomial("(t - z)^2*(t + 1)*t", &k, "t").unwrap();
    let f = factor_over_nf(&p).unwrap();
    assert_eq!(f.expand(), p);
    let tz = parse_polynomial("t - z", &k, "t").unwrap();
    assert!(f.factors.contains(&(tz, 2)));
}

#[test]
fn cubic_field_irreducibility() {
    let k = NumberField::new("z", vec![rat(-1), rat(1), rat(0), rat(1)]).unwrap();
    let p = parse_polynomial("t^2 - z", &k, "t").unwrap();
    assert!(is_irreducible(&p).unwrap());
}

#[test]
fn square_roots() {
    let k = NumberField::new("z", vec![rat(-2), rat(0), rat(1)]).unwrap();
    let c = k.element(vec![rat(3), rat(2)]); // (1 + z)^2
    let r = sqrt_in_field(&c).unwrap().unwrap();
    assert_eq!(&r * &r, c);
    assert!(sqrt_in_field(&k.generator()).unwrap().is_none());
    assert_eq!(
        sqrt_in_field(&q().from_rational(ratio(9, 4))).unwrap(),
        Some(q().from_rational(ratio(3, 2)))
    );
    assert!(sqrt_in_field(&q().from_int(-1)).unwrap().is_none());
}

#[test]
fn seed_does_not_change_result() {
    let p = pq("t^10 - 1");
    let a = factor_over_q_with(&p, &FactorOptions::with_seed(1)).unwrap();
    let b = factor_over_q_with(&p, &FactorOptions::with_seed(99)).unwrap();
    assert_eq!(a, b);
}
