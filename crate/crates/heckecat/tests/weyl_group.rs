use std::collections::BTreeSet;

use heckecat::weyl::{ExtWeylElt, RootDatum, Stabilizer};
use proptest::prelude::*;

/// Smallest k such that `x` is a product of k affine generators, by breadth-first search.
fn word_length_by_search(d: &RootDatum, x: &ExtWeylElt, max: usize) -> Option<usize> {
    let mut layer = BTreeSet::from([d.identity()]);
    let mut seen = layer.clone();
    for k in 0..=max {
        if layer.contains(x) {
            return Some(k);
        }
        layer = layer
            .iter()
            .flat_map(|y| (0..d.num_gens()).map(move |s| y.mul(&d.gen(s))))
            .filter(|y| seen.insert(y.clone()))
            .collect();
    }
    None
}

#[test]
fn translation_by_twice_the_root_has_length_four() {
    let d = RootDatum::a1(5).unwrap();
    // α = 2ϖ; translations are stored divided by p
    let t = ExtWeylElt::translation(vec![4]);
    assert_eq!(d.length(&t), 4);
    assert_eq!(word_length_by_search(&d, &t, 6), Some(4));
    assert_eq!(d.length(&d.from_word(&[1, 0])), 2);
}

#[test]
fn affine_orbit_of_zero() {
    let d = RootDatum::a1(5).unwrap();
    // closure under n ↦ −n − 2 and n ↦ 2p − 2 − n on a wide window
    let mut orbit = BTreeSet::from([0i64]);
    loop {
        let next: BTreeSet<i64> = orbit.iter().flat_map(|&n| [n, -n - 2, 8 - n]).filter(|n| n.abs() <= 60).collect();
        if next == orbit {
            break;
        }
        orbit = next;
    }
    let expected: BTreeSet<Vec<i64>> = orbit.into_iter().filter(|n| (0..=20).contains(n)).map(|n| vec![n]).collect();
    let got = d.linkage_class(&[0], 0, 20);
    assert_eq!(got, expected);
    assert_eq!(got.into_iter().map(|v| v[0]).collect::<Vec<_>>(), vec![0, 8, 10, 18, 20]);
}

#[test]
fn stabilizers() {
    let d = RootDatum::a1(5).unwrap();
    assert_eq!(d.dot_stabilizer(&[4]), Stabilizer::Walls(vec![0]));
    assert_eq!(d.dot_stabilizer(&[-1]), Stabilizer::Walls(vec![1]));
    assert_eq!(d.dot_stabilizer(&[1]), Stabilizer::Walls(vec![]));
    let a2 = RootDatum::a2(5).unwrap();
    assert_eq!(a2.dot_stabilizer(&[-1, -1]), Stabilizer::Walls(vec![1, 2]));
}

#[test]
fn affine_generators_conjugate_to_finite_ones() {
    for d in [RootDatum::a1(5).unwrap(), RootDatum::a2(5).unwrap()] {
        for s in 0..d.num_gens() {
            let (x, t) = d.conjugate_to_finite(s);
            assert!(t >= 1);
            assert_eq!(x.mul(&d.gen(t)).mul(&x.inverse()), d.gen(s));
        }
    }
}

fn data() -> Vec<RootDatum> {
    vec![RootDatum::a1(5).unwrap(), RootDatum::a2(5).unwrap(), RootDatum::a2_adjoint(3).unwrap()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dot_action_is_an_action(k in 0usize..3, i in 0usize..200, j in 0usize..200, a in -15i64..15, b in -15i64..15) {
        let d = &data()[k];
        let els = d.affine_elements(4);
        let (x, y) = (&els[i % els.len()], &els[j % els.len()]);
        let lambda: Vec<i64> = [a, b][..d.rank].to_vec();
        prop_assert_eq!(d.dot_act(&x.mul(y), &lambda), d.dot_act(x, &d.dot_act(y, &lambda)));
        prop_assert_eq!(d.dot_act(&x.inverse(), &d.dot_act(x, &lambda)), lambda);
    }

    #[test]
    fn lengths_and_reduced_words(k in 0usize..3, i in 0usize..200, j in 0usize..200) {
        let d = &data()[k];
        let els = d.affine_elements(4);
        let (x, y) = (&els[i % els.len()], &els[j % els.len()]);
        prop_assert_eq!(d.length(x), d.length(&x.inverse()));
        prop_assert!(d.length(&x.mul(y)) <= d.length(x) + d.length(y));
        let w = d.reduced_word(x).unwrap();
        prop_assert_eq!(w.len(), d.length(x));
        prop_assert_eq!(&d.from_word(&w), x);
    }

    #[test]
    fn bruhat_order_contains_subwords(i in 0usize..200, drop in 0usize..4) {
        let d = RootDatum::a2(5).unwrap();
        let els = d.affine_elements(4);
        let x = &els[i % els.len()];
        let mut w = d.reduced_word(x).unwrap();
        if !w.is_empty() {
            w.remove(drop % w.len());
        }
        prop_assert!(d.bruhat_le(&d.from_word(&w), x));
    }

    #[test]
    fn linkage_classes_agree(k in 0usize..3, a in -6i64..6, b in -6i64..6) {
        let d = &data()[k];
        let lambda: Vec<i64> = [a, b][..d.rank].to_vec();
        let hi = 2 * d.p as i64;
        prop_assert_eq!(d.linkage_class(&lambda, -hi, hi), d.linkage_class_ext(&lambda, -hi, hi));
    }
}
