use heckecat::field::Gf;
use heckecat::modrep::{
    casimir_scalar, dot_s, hc_center_check, scalar_of, splitting_fiber_rank, translation_fiber, verify_matrix_algebra,
    wall_crossing_fiber, BabyVerma, CentralPoint, UChiAlgebra,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn matrix_algebra_at_p3() {
    let f = Gf::prime(3).unwrap();
    let r = verify_matrix_algebra(&CentralPoint::kostant(&f, 0)).unwrap();
    assert_eq!((r.dim_algebra, r.dim_end, r.image_rank), (9, 9, 9));
    assert!(r.unit_to_identity && r.bijective);
}

#[test]
fn kostant_points_over_f25_are_azumaya() {
    let f = Gf::new(5, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..5 {
        let pt = CentralPoint::kostant(&f, f.random(&mut rng));
        assert!(verify_matrix_algebra(&pt).unwrap().bijective);
    }
}

#[test]
fn wall_crossing_both_orders() {
    let f = Gf::prime(5).unwrap();
    let e = wall_crossing_fiber(&f, 0, -1, false).unwrap();
    let s = wall_crossing_fiber(&f, 0, -1, true).unwrap();
    assert_eq!((e.total_dim, e.subquotient_dims.clone()), (50, vec![25, 25]));
    assert_eq!(s.subquotient_dims, vec![25, 25]);
    for r in [&e, &s] {
        assert_eq!(r.subquotient_labels.first(), Some(&r.expected_sub));
        assert_eq!(r.expected_sub, r.w_lambda.min(r.ws_lambda));
    }
    assert!(e.ok && s.ok);
    assert!(e.ws_lambda < e.w_lambda && s.ws_lambda > s.w_lambda);
}

#[test]
fn splitting_at_p3_and_degenerate_point() {
    let f = Gf::prime(3).unwrap();
    assert_eq!(splitting_fiber_rank(&f, 0, 1, f.from_i64(-1)).unwrap().rank, 9);
    let f25 = Gf::new(5, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut done = 0;
    while done < 10 {
        let xi = f25.random(&mut rng);
        if !CentralPoint::kostant(&f25, xi).in_open_locus() {
            continue;
        }
        assert_eq!(splitting_fiber_rank(&f25, 1, 2, xi).unwrap().rank, 25);
        done += 1;
    }
}

#[test]
fn translation_from_minus_rho_is_identity() {
    let f = Gf::new(5, 2).unwrap();
    let xi = f.primitive_element();
    let r = translation_fiber(&f, -1, xi).unwrap();
    assert_eq!(r.target_xi, r.xi);
    assert_eq!(r.surviving_subquotients, 1);
    assert!(r.ok);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn baby_vermas_over_extensions(pi in 0usize..3, k in 1u32..4, seed in any::<u64>()) {
        let p = [3u32, 5, 7][pi];
        let f = Gf::new(p, k).unwrap();
        let xi = f.random(&mut ChaCha8Rng::seed_from_u64(seed));
        let z = BabyVerma::kostant(&CentralPoint::kostant(&f, xi)).unwrap();
        prop_assert_eq!(z.dim(), p as usize);
        prop_assert!(z.verify().ok);
        prop_assert_eq!(scalar_of(&z.module.casimir()), Some(casimir_scalar(&f, xi)));
        prop_assert!(hc_center_check(&f, xi).unwrap().constant_on_orbit);
    }

    #[test]
    fn casimir_separates_orbits(a in any::<u64>(), b in any::<u64>()) {
        let f = Gf::new(5, 2).unwrap();
        let x = f.random(&mut ChaCha8Rng::seed_from_u64(a));
        let y = f.random(&mut ChaCha8Rng::seed_from_u64(b));
        let same_orbit = y == x || y == dot_s(&f, x);
        prop_assert_eq!(casimir_scalar(&f, x) == casimir_scalar(&f, y), same_orbit);
    }

    #[test]
    fn reduced_enveloping_algebra_is_associative(k in 1u32..3, seed in any::<u64>()) {
        let f = Gf::new(3, k).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alg = UChiAlgebra::new(&CentralPoint::kostant(&f, f.random(&mut rng)));
        let table = alg.structure_constants();
        prop_assert!(alg.associativity_holds(&table, Some((40, seed))));
        prop_assert!(alg.is_central(&alg.casimir()));
    }
}
