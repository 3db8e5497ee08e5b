//! Explicit structural maps: the two exact sequences through `R ⊗_{R^s} R`, the conjugation
//! isomorphism `B_s ≅ Δ_x ⊗ B_t ⊗ Δ_{x⁻¹}` and the product `Δ_x ⊗ Δ_y ≅ Δ_{xy}`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Gf;
use crate::poly::GradedPoly;
use crate::realization::Realization;
use crate::sbim::morphism::{slice_basis, Morphism};
use crate::sbim::object::SBimObject;
use crate::sbim::pmat::PMat;
use crate::weyl::ExtWeylElt;

#[derive(Clone, Debug, Serialize)]
pub struct ExactSequenceReport {
    pub generator: usize,
    pub sequence: String,
    pub max_degree: i32,
    pub maps_are_morphisms: bool,
    pub composite_zero: bool,
    pub euler_characteristic: bool,
    pub failing_degree: Option<i32>,
    pub ok: bool,
}

fn col(entries: Vec<GradedPoly>) -> PMat {
    let (nv, p) = (entries[0].nvars(), entries[0].p());
    PMat::from_rows(entries.into_iter().map(|e| vec![e]).collect(), 1, nv, p)
}

fn row(entries: Vec<GradedPoly>) -> PMat {
    let n = entries.len();
    let (nv, p) = (entries[0].nvars(), entries[0].p());
    PMat::from_rows(vec![entries], n, nv, p)
}

fn check_sequence(
    name: &str,
    s: usize,
    max_degree: i32,
    (a, i, b, pi, c): (&SBimObject, &Morphism, &SBimObject, &Morphism, &SBimObject),
) -> ExactSequenceReport {
    let f = Gf::prime(b.p).unwrap();
    let maps_are_morphisms = i.is_bimodule_map(a, b)
        && pi.is_bimodule_map(b, c)
        && i.respects_decomposition(a, b)
        && pi.respects_decomposition(b, c);
    let composite_zero = i.then(pi).matrix.is_zero();
    let euler_characteristic = b.graded_rank() == a.graded_rank().add(&c.graded_rank());
    let mut failing_degree = None;
    for d in 0..=max_degree {
        let (da, db, dc) = (slice_basis(a, d).len(), slice_basis(b, d).len(), slice_basis(c, d).len());
        let ri = if da == 0 { 0 } else { i.slice_matrix(a, b, d).rank(&f) };
        let rp = if db == 0 { 0 } else { pi.slice_matrix(b, c, d).rank(&f) };
        if ri != da || rp != dc || ri + rp != db {
            failing_degree = Some(d);
            break;
        }
    }
    let ok = maps_are_morphisms && composite_zero && euler_characteristic && failing_degree.is_none();
    ExactSequenceReport {
        generator: s,
        sequence: name.into(),
        max_degree,
        maps_are_morphisms,
        composite_zero,
        euler_characteristic,
        failing_degree,
        ok,
    }
}

/// Checks `Δ_s(−2) ↪ R⊗_{R^s}R ↠ Δ_e` and `Δ_e(−2) ↪ R⊗_{R^s}R ↠ Δ_s` degreewise.
pub fn verify_exact_sequences(real: &Realization, s: usize, max_degree: i32) -> Vec<ExactSequenceReport> {
    let d = &real.datum;
    let bs = SBimObject::bs_gen(real, s);
    let b = bs.shift(-1);
    let de = SBimObject::unit(real);
    let ds = SBimObject::delta(real, &d.gen(s));
    let ce = bs.loc.iter().find(|l| l.label == d.identity()).unwrap().vec.clone();
    let cs = bs.loc.iter().find(|l| l.label == d.gen(s)).unwrap().vec.clone();
    let delta = real.delta(s).clone();
    let mult = Morphism { matrix: col(vec![real.one(), delta.clone()]), degree: 0 };
    let twisted = Morphism { matrix: col(vec![real.one(), real.s_act(s, &delta)]), degree: 0 };
    let inc_s = Morphism { matrix: row(cs), degree: 0 };
    let inc_e = Morphism { matrix: row(ce), degree: 0 };
    let (ds2, de2) = (ds.shift(-2), de.shift(-2));
    vec![
        check_sequence("Δ_s(-2) → R⊗R → Δ_e", s, max_degree, (&ds2, &inc_s, &b, &mult, &de)),
        check_sequence("Δ_e(-2) → R⊗R → Δ_s", s, max_degree, (&de2, &inc_e, &b, &twisted, &ds)),
    ]
}

#[derive(Clone, Debug)]
pub struct ConjugationIsom {
    pub source: SBimObject,
    pub target: SBimObject,
    pub map: Morphism,
    pub inverse: Morphism,
}

/// The isomorphism `B_s → Δ_x ⊗ B_t ⊗ Δ_{x⁻¹}`, `f ⊗ g ↦ 1 ⊗ (x⁻¹f ⊗ x⁻¹g) ⊗ 1`, for `s = x t x⁻¹`.
pub fn conjugation_isom(real: &Realization, s: usize, t: usize, x: &ExtWeylElt) -> Result<ConjugationIsom> {
    let d = &real.datum;
    let xi = x.inverse();
    if x.mul(&d.gen(t)).mul(&xi) != d.gen(s) {
        return Err(Error::Precondition(format!("s{s} is not x·s{t}·x⁻¹")));
    }
    let source = SBimObject::bs_gen(real, s);
    let target = SBimObject::delta(real, x).tensor(&SBimObject::bs_gen(real, t)).tensor(&SBimObject::delta(real, &xi));
    let (a, b) = real.invariant_split(t, &real.act(&xi, real.delta(s)));
    let matrix = PMat::from_rows(
        vec![vec![real.one(), real.zero()], vec![real.act(x, &a), real.act(x, &b)]],
        2,
        real.nvars(),
        real.p,
    );
    let map = Morphism { matrix, degree: 0 };
    let inverse = Morphism { matrix: map.matrix.inverse_const_pivot()?, degree: 0 };
    let valid = map.is_bimodule_map(&source, &target)
        && map.respects_decomposition(&source, &target)
        && inverse.is_bimodule_map(&target, &source)
        && inverse.respects_decomposition(&target, &source)
        && map.then(&inverse) == Morphism::identity(&source);
    if !valid {
        return Err(Error::Decomposition("conjugation map is not an isomorphism of objects".into()));
    }
    Ok(ConjugationIsom { source, target, map, inverse })
}

/// Verifies that `m ⊗ m' ↦ m·x(m')` is an isomorphism `Δ_x ⊗ Δ_y → Δ_{xy}`.
pub fn verify_delta_product(real: &Realization, x: &ExtWeylElt, y: &ExtWeylElt) -> bool {
    let lhs = SBimObject::delta(real, x).tensor(&SBimObject::delta(real, y));
    let rhs = SBimObject::delta(real, &x.mul(y));
    let map = Morphism { matrix: PMat::identity(1, real.nvars(), real.p), degree: 0 };
    lhs.degrees == rhs.degrees && map.is_bimodule_map(&lhs, &rhs) && map.respects_decomposition(&lhs, &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::RootDatum;

    #[test]
    fn sequences_a1_and_a2() {
        for d in [RootDatum::a1(5).unwrap(), RootDatum::a2(5).unwrap()] {
            let real = Realization::new(&d).unwrap();
            for s in 0..d.num_gens() {
                for r in verify_exact_sequences(&real, s, 6) {
                    assert!(r.ok, "{r:?}");
                }
            }
        }
    }

    #[test]
    fn conjugation_of_affine_generator() {
        let d = RootDatum::a1(5).unwrap();
        let real = Realization::new(&d).unwrap();
        let (x, t) = d.conjugate_to_finite(0);
        conjugation_isom(&real, 0, t, &x).unwrap();
        assert!(conjugation_isom(&real, 1, 1, &d.identity()).is_ok());
        assert!(conjugation_isom(&real, 0, 1, &d.identity()).is_err());
    }

    #[test]
    fn delta_products() {
        let d = RootDatum::a2(5).unwrap();
        let real = Realization::new(&d).unwrap();
        let els = d.affine_elements(2);
        for x in &els {
            for y in &els {
                assert!(verify_delta_product(&real, x, y));
            }
        }
    }
}
