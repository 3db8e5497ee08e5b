use std::collections::BTreeMap;

use heckecat::hecke::oracle::{dimension, tilting_character, tilting_character_digits, weyl_weights, Character};
use heckecat::hecke::tilting::tilting_from_pcan;
use heckecat::hecke::{HeckeAlgebra, HeckeElt, LaurentInt, PCanonical};
use heckecat::weyl::RootDatum;
use proptest::prelude::*;

fn v(e: i32) -> LaurentInt {
    LaurentInt::monomial(1, e)
}

#[test]
fn quadratic_relation() {
    let d = RootDatum::a1(5).unwrap();
    let h = HeckeAlgebra::new(&d);
    let s = d.gen(1);
    let hs = h.std(&s);
    let mut expected = HeckeElt::term(&s, v(-1).sub(&v(1)));
    expected.add_term(&d.identity(), &LaurentInt::one());
    assert_eq!(h.mul(&hs, &hs), expected);
    let bs = h.gen_kl(1);
    assert_eq!(h.mul(&bs, &bs), bs.scale(&v(1).add(&v(-1))));
}

#[test]
fn kl_element_of_length_two() {
    let d = RootDatum::a1(5).unwrap();
    let h = HeckeAlgebra::new(&d);
    let w = d.from_word(&[1, 0]);
    let mut expected = HeckeElt::std(&w);
    expected.add_term(&d.gen(1), &v(1));
    expected.add_term(&d.gen(0), &v(1));
    expected.add_term(&d.identity(), &v(2));
    assert_eq!(h.kl_basis(&w), expected);
    assert_eq!(h.mul(&h.gen_kl(1), &h.gen_kl(0)), expected);
}

#[test]
fn finite_a2_p_canonical_is_kl() {
    let d = RootDatum::a2(5).unwrap();
    let pc = PCanonical::new(&d, 1).unwrap();
    for w in d.affine_elements(3).into_iter().filter(|x| x.is_finite()) {
        assert_eq!(pc.p_canonical(&w).unwrap(), pc.hecke.kl_basis(&w));
    }
}

#[test]
fn tilting_examples() {
    let pc5 = PCanonical::new(&RootDatum::a1(5).unwrap(), 0).unwrap();
    let pc3 = PCanonical::new(&RootDatum::a1(3).unwrap(), 0).unwrap();
    assert_eq!(tilting_from_pcan(&pc5, 3).unwrap(), BTreeMap::from([(3, 1)]));
    assert_eq!(tilting_from_pcan(&pc5, 5).unwrap(), BTreeMap::from([(3, 1), (5, 1)]));
    assert_eq!(tilting_from_pcan(&pc3, 2).unwrap(), BTreeMap::from([(2, 1)]));
}

/// Formal character (weight ↦ multiplicity) of a sum of Weyl characters.
fn weights_of(c: &Character) -> Character {
    let mut out = Character::new();
    for (&m, &k) in c {
        for (w, n) in weyl_weights(m) {
            *out.entry(w).or_insert(0) += k * n;
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn tilting_engine_matches_both_oracles(pi in 0usize..3, n in 0i64..30) {
        let p = [3u32, 5, 7][pi];
        let pc = PCanonical::new(&RootDatum::a1(p).unwrap(), 0).unwrap();
        let engine = tilting_from_pcan(&pc, n).unwrap();
        prop_assert_eq!(&engine, &tilting_character(n, p as i64));
        prop_assert_eq!(&engine, &tilting_character_digits(n, p as i64));
        prop_assert_eq!(engine.get(&n), Some(&1));
        // weights are symmetric and the top weight is n
        let wts = weights_of(&engine);
        prop_assert!(wts.iter().all(|(w, k)| wts.get(&-w) == Some(k)));
        prop_assert_eq!(wts.keys().max(), Some(&n));
        prop_assert_eq!(dimension(&engine), wts.values().sum::<i64>());
    }

    #[test]
    fn kl_basis_is_bar_invariant(i in 0usize..100) {
        let d = RootDatum::a2(5).unwrap();
        let h = HeckeAlgebra::new(&d);
        let els = d.affine_elements(4);
        let w = &els[i % els.len()];
        let b = h.kl_basis(w);
        prop_assert_eq!(h.bar(&b), b.clone());
        prop_assert_eq!(b.coeff(w), LaurentInt::one());
        for (y, c) in b.terms() {
            prop_assert!(y == w || (c.min_deg().unwrap() >= 1 && d.bruhat_le(y, w)));
        }
    }
}
