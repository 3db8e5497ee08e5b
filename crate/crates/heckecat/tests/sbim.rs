use heckecat::hecke::{HeckeAlgebra, HeckeElt, LaurentInt};
use heckecat::realization::Realization;
use heckecat::sbim::character::ch;
use heckecat::sbim::decompose::{decompose, group};
use heckecat::sbim::lemmas::{conjugation_isom, verify_delta_product, verify_exact_sequences};
use heckecat::sbim::SBimObject;
use heckecat::weyl::RootDatum;
use proptest::prelude::*;

fn a1() -> (RootDatum, Realization) {
    let d = RootDatum::a1(5).unwrap();
    let r = Realization::new(&d).unwrap();
    (d, r)
}

#[test]
fn generator_characters() {
    let (d, r) = a1();
    let b = SBimObject::bs_gen(&r, 1);
    assert_eq!(b.graded_rank(), LaurentInt::v().add(&LaurentInt::monomial(1, -1)));
    let mut expected = HeckeElt::std(&d.gen(1));
    expected.add_term(&d.identity(), &LaurentInt::v());
    assert_eq!(ch(&b, &d).unwrap(), expected);
    assert_eq!(ch(&SBimObject::delta(&r, &d.identity()), &d).unwrap(), HeckeElt::std(&d.identity()));
}

#[test]
fn square_of_a_generator_splits() {
    let (d, r) = a1();
    let b = SBimObject::bs_gen(&r, 1);
    let parts = decompose(&b.tensor(&b), &d, 3).unwrap();
    let grouped = group(&parts);
    let mut shifts: Vec<i32> = grouped
        .iter()
        .map(|(_, sh, n)| {
            assert_eq!(*n, 1);
            *sh
        })
        .collect();
    shifts.sort();
    assert_eq!(shifts, vec![-1, 1]);
    assert!(grouped.iter().all(|(s, _, _)| s.top == d.gen(1)));
}

#[test]
fn three_letter_word_contains_its_indecomposable_once() {
    let (d, r) = a1();
    let w = d.from_word(&[1, 0, 1]);
    let parts = decompose(&SBimObject::bott_samelson(&r, &[1, 0, 1]), &d, 7).unwrap();
    assert_eq!(parts.iter().filter(|s| s.top == w).count(), 1);
}

#[test]
fn sequences_and_conjugation() {
    for d in [RootDatum::a1(5).unwrap(), RootDatum::a2(5).unwrap()] {
        let r = Realization::new(&d).unwrap();
        for s in 0..d.num_gens() {
            assert!(verify_exact_sequences(&r, s, 10).iter().all(|x| x.ok));
            let (x, t) = d.conjugate_to_finite(s);
            assert!(conjugation_isom(&r, s, t, &x).is_ok());
        }
        assert!(conjugation_isom(&r, 0, 0, &d.gen(1)).is_err());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn character_is_multiplicative(u in proptest::collection::vec(0usize..2, 0..3), w in proptest::collection::vec(0usize..2, 1..3)) {
        let (d, r) = a1();
        let h = HeckeAlgebra::new(&d);
        let bu = SBimObject::bott_samelson(&r, &u);
        let bw = SBimObject::bott_samelson(&r, &w);
        let lhs = ch(&bu.tensor(&bw), &d).unwrap();
        prop_assert_eq!(&lhs, &h.mul(&ch(&bu, &d).unwrap(), &ch(&bw, &d).unwrap()));
        prop_assert_eq!(lhs, h.bs_word(&[u, w].concat()));
    }

    #[test]
    fn standard_objects_multiply(i in 0usize..100, j in 0usize..100) {
        let d = RootDatum::a2(5).unwrap();
        let r = Realization::new(&d).unwrap();
        let els = d.affine_elements(3);
        prop_assert!(verify_delta_product(&r, &els[i % els.len()], &els[j % els.len()]));
    }
}
