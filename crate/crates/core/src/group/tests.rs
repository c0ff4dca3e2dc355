use proptest::prelude::*;

use super::*;

fn gp(s: &str) -> GroupPresentation {
    parse_presentation(s).unwrap()
}

#[test]
fn trefoil_parses() {
    let g = gp("gens: a b; rel: a b a B A B");
    assert_eq!(g.generators, vec!["a", "b"]);
    assert_eq!(g.relators.len(), 1);
    assert_eq!(
        g.relators[0].letters(),
        &[(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)]
    );
    assert_eq!(g.kind, GroupKind::Generic);
}

#[test]
fn compact_letters_and_exponents() {
    let a = gp("gens: a b; rel: abaBAB");
    let b = gp("gens: a b; rel: a b a b^-1 a^-1 B");
    assert_eq!(a.relators, b.relators);
    let c = gp("gens: x y; rel: x^3 y^-5");
    assert_eq!(c.relators[0].len(), 8);
    assert_eq!(c.relators[0].exponent_sum(1), -5);
}

#[test]
fn free_group_without_relators() {
    let g = gp("gens: a; rel:");
    assert!(g.relators.is_empty());
    assert_eq!(g.deficiency(), 1);
}

#[test]
fn missing_relator_section_is_rejected() {
    assert!(matches!(parse_presentation("gens: a"), Err(Error::Parse { .. })));
}

#[test]
fn unknown_generator_is_named() {
    let err = parse_presentation("gens: a b; rel: a c").unwrap_err();
    match err {
        Error::Parse { column, message, .. } => {
            assert!(message.contains("`c`"), "{message}");
            assert_eq!(column, 19);
        }
        other => panic!("{other:?}"),
    }
    assert!(parse_presentation("gens: a b; rel: abc").is_err());
}

#[test]
fn malformed_exponent() {
    let err = parse_presentation("gens: a; rel: a^x").unwrap_err();
    assert!(err.to_string().contains("malformed exponent"));
}

#[test]
fn peripheral_sections_and_kind() {
    let g = gp("gens: a b; rel: abaBAB; meridian: a; longitude: b A A b a a^-4; kind: sphere-knot");
    assert_eq!(g.kind, GroupKind::SphereKnot);
    assert_eq!(g.meridian, Some(Word::generator(0)));
    assert_eq!(g.longitude.as_ref().unwrap().exponent_sum(0), -5);
}

#[test]
fn display_round_trips() {
    let g = gp("gens: a b; rel: a a a B B; meridian: a; longitude: b A; kind: generic");
    let again = gp(&g.to_string());
    assert_eq!(g, again);
    assert_eq!(g.word_string(&g.relators[0]), "a^3 b^-2");
}

#[test]
fn trefoil_abelianization() {
    let g = gp("gens: a b; rel: a b a B A B; kind: sphere-knot");
    let ab = abelianize(&g).unwrap();
    assert!(ab.is_infinite_cyclic());
    assert_eq!(ab.values, vec![1, 1]);
    assert_eq!(ab.epsilon, vec![1, 1]);
}

#[test]
fn torus_knot_abelianization() {
    let g = gp("gens: a b; rel: a^2 b^-3; kind: sphere-knot");
    let ab = abelianize(&g).unwrap();
    assert_eq!(ab.values, vec![3, 2]);
    for r in &g.relators {
        assert_eq!(r.weight(&ab.values), 0);
    }
}

#[test]
fn finite_homology_is_rejected_for_knots() {
    let g = gp("gens: a; rel: a^2; kind: sphere-knot");
    let err = abelianize(&g).unwrap_err();
    assert!(err.to_string().contains("Z/2"), "{err}");
    let generic = gp("gens: a; rel: a^2");
    assert_eq!(abelianize(&generic).unwrap().describe(), "Z/2");
}

#[test]
fn meridian_orients_alpha() {
    let g = gp("gens: a b; rel: a b a B A B; meridian: A");
    let ab = abelianize(&g).unwrap();
    assert_eq!(ab.values, vec![-1, -1]);
}

#[test]
fn kernel_of_infinite_cyclic() {
    let g = gp("gens: a; rel:");
    let k = reidemeister_schreier_index2(&g).unwrap();
    assert_eq!(k.group.generators, vec!["a_1"]);
    assert!(k.group.relators.is_empty());
    assert_eq!(k.inclusion, vec![Word::from_letters([(0, 2)])]);
    assert_eq!(k.alpha, vec![1]);
}

#[test]
fn kernel_of_z_squared() {
    let g = gp("gens: a b; rel: a b A B");
    let k = reidemeister_schreier_index2_with(&g, &[1, 0], &[1, 0]).unwrap();
    let incl: Vec<String> = k.inclusion.iter().map(|w| g.word_string(w)).collect();
    assert_eq!(k.group.generators, vec!["b_0", "a_1", "b_1"]);
    assert_eq!(incl, vec!["b", "a^2", "a b A"]);
    assert_eq!(k.group.relators.len(), 2);
    let h = homology(&k.group);
    assert_eq!(h.free_rank, 2);
    assert!(h.torsion.is_empty());
}

#[test]
fn trivial_epsilon_has_no_kernel() {
    let g = gp("gens: a b; rel: a b A B");
    assert!(reidemeister_schreier_index2_with(&g, &[0, 0], &[0, 2]).is_err());
}

#[test]
fn rewriting_odd_words_fails() {
    let g = gp("gens: a; rel:");
    let k = reidemeister_schreier_index2(&g).unwrap();
    assert!(k.rewrite(&Word::generator(0), 0).is_err());
}

#[test]
fn peripheral_map_columns() {
    assert_eq!(peripheral_cover_map(1, 0), (2, 1));
    assert_eq!(peripheral_cover_map(0, 1), (0, 1));
    assert_eq!(peripheral_cover_map(1, 1), (2, 2));
    let m = PERIPHERAL_CHANGE_OF_BASIS;
    assert_eq!(m[0][0] * m[1][1] - m[0][1] * m[1][0], 2);
}

fn arb_word(gens: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..gens, prop::bool::ANY), 0..max_len)
        .prop_map(|v| Word::from_letters(v.into_iter().map(|(g, s)| (g, if s { 1 } else { -1 }))))
}

proptest! {
    #[test]
    fn words_are_freely_reduced(w in arb_word(3, 20)) {
        for pair in w.letters().windows(2) {
            prop_assert!(!(pair[0].0 == pair[1].0 && pair[0].1 == -pair[1].1));
        }
        prop_assert!(w.mul(&w.inverse()).is_empty());
    }

    #[test]
    fn fox_product_rule(u in arb_word(3, 12), v in arb_word(3, 12), g in 0usize..3) {
        let lhs = fox_derivative(&u.mul(&v), g);
        let rhs = fox::fox_add(&fox_derivative(&u, g), &fox_left_mul(&u, &fox_derivative(&v, g)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kernel_relators_map_into_normal_closure(r in arb_word(2, 10)) {
        // ε-weight of any relator must be even for the rewrite to close up
        let g = GroupPresentation::new(vec!["a".into(), "b".into()], vec![]).unwrap();
        let k = reidemeister_schreier_index2_with(&g, &[1, 1], &[1, 1]).unwrap();
        let even = r.weight(&[1, 1]) % 2 == 0;
        for coset in 0..2 {
            let res = k.rewrite(&r, coset);
            prop_assert_eq!(res.is_ok(), even);
            if let Ok(w) = res {
                // pushing back through the inclusion recovers a conjugate of r
                let back = w.letters().iter().fold(Word::identity(), |acc, &(s, e)| {
                    acc.mul(&k.inclusion[s].pow(e as i64))
                });
                let t = if coset == 0 { Word::identity() } else { Word::generator(k.transversal) };
                prop_assert_eq!(back, t.mul(&r).mul(&t.inverse()));
            }
        }
    }
}
