use serde::Serialize;

use super::module::Sl2Module;
use super::point::{Borel, CentralPoint};
use crate::error::{Error, Result};
use crate::linalg::Mat;

/// Baby Verma module induced from the Borel `borel` at a central point.
#[derive(Clone, Debug)]
pub struct BabyVerma {
    pub point: CentralPoint,
    pub borel: Borel,
    pub module: Sl2Module,
}

#[derive(Clone, Debug, Serialize)]
pub struct VermaReport {
    pub dim: usize,
    pub lie_relations: bool,
    pub p_center: bool,
    pub casimir: bool,
    pub ok: bool,
}

pub fn build_baby_verma(pt: &CentralPoint, borel: Borel) -> Result<BabyVerma> {
    let fld = &pt.field;
    let p = fld.p() as usize;
    let [es, hs, fs] = pt.eta_for(borel);
    if fs != 0 {
        return Err(Error::Precondition("η does not vanish on the nilradical of the Borel".into()));
    }
    let sigma = fld.add(pt.xi, 2);
    if fld.artin_schreier(sigma) != fld.pow(hs, p as u64) {
        return Err(Error::Precondition("(η, ξ, B) incompatible: ξ^p − ξ ≠ η(h)^p".into()));
    }
    // standard model: v_i = e^i v_0, f v_0 = 0, h v_0 = (ξ + 2) v_0
    let (mut e, mut h, mut f) = (Mat::zeros(p, p), Mat::zeros(p, p), Mat::zeros(p, p));
    for i in 0..p {
        let ii = fld.from_i64(i as i64);
        h.set(i, i, fld.add(sigma, fld.mul(2, ii)));
        if i + 1 < p {
            e.set(i + 1, i, 1);
        }
        if i > 0 {
            let t = fld.add(sigma, fld.sub(ii, 1));
            f.set(i - 1, i, fld.neg(fld.mul(ii, t)));
        }
    }
    e.set(0, p - 1, fld.pow(es, p as u64));
    // twist by Ad(g⁻¹): e ↦ e, h ↦ h + 2r e, f ↦ f − r h − r² e
    let r = borel.r;
    let h2 = h.add(fld, &e.scale(fld, fld.mul(2, r)));
    let f2 = f.sub(fld, &h.scale(fld, r)).sub(fld, &e.scale(fld, fld.mul(r, r)));
    let module = Sl2Module { field: fld.clone(), e, h: h2, f: f2 };
    Ok(BabyVerma { point: pt.clone(), borel, module })
}

impl BabyVerma {
    /// At a point of the Kostant section, with its adapted Borel.
    pub fn kostant(pt: &CentralPoint) -> Result<BabyVerma> {
        build_baby_verma(pt, pt.kostant_borel())
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// Eigenvalues of h (with multiplicity), in the order of the standard basis.
    pub fn h_eigenvalues(&self) -> Vec<u32> {
        (0..self.dim()).map(|i| self.module.h.get(i, i)).collect()
    }

    pub fn verify(&self) -> VermaReport {
        let fld = &self.point.field;
        let p = fld.p() as u64;
        let lie_relations = self.module.lie_relations_hold();
        let expected = self.point.eta.map(|x| fld.pow(x, p));
        let p_center = self.module.p_center_scalars() == Some(expected);
        let casimir = super::module::scalar_of(&self.module.casimir()) == Some(self.point.casimir());
        let dim = self.dim();
        VermaReport {
            dim,
            lie_relations,
            p_center,
            casimir,
            ok: lie_relations && p_center && casimir && dim == fld.p() as usize,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Gf;

    #[test]
    fn regular_nilpotent_at_zero() {
        let f = Gf::prime(3).unwrap();
        let pt = CentralPoint::kostant(&f, 0);
        assert_eq!(pt.eta, [1, 0, 0]);
        let z = BabyVerma::kostant(&pt).unwrap();
        assert_eq!(z.dim(), 3);
        assert!(z.verify().ok);
    }

    #[test]
    fn h_eigenvalues_cover_a_string() {
        let f = Gf::prime(5).unwrap();
        let z = BabyVerma::kostant(&CentralPoint::kostant(&f, 1)).unwrap();
        let mut got = z.h_eigenvalues();
        got.sort_unstable();
        let mut want: Vec<u32> = [1i64, -1, -3, -5, -7].iter().map(|&x| f.from_i64(x)).collect();
        want.sort_unstable();
        assert_eq!(got, want);
    }

    #[test]
    fn all_kostant_points_over_small_extensions() {
        // F_9 is the case where integer constants ≥ p are not field elements
        for (p, k) in [(5, 2), (3, 2), (3, 3)] {
            let f = Gf::new(p, k).unwrap();
            for xi in f.elements() {
                let z = BabyVerma::kostant(&CentralPoint::kostant(&f, xi)).unwrap();
                assert!(z.verify().ok, "ξ = {}", f.format(xi));
            }
        }
    }

    #[test]
    fn wrong_borel_is_rejected() {
        let f = Gf::new(5, 2).unwrap();
        let xi = f.primitive_element();
        let pt = CentralPoint::kostant(&f, xi);
        assert!(build_baby_verma(&pt, Borel::STANDARD).is_err());
        let mut bad = pt.clone();
        bad.xi = f.add(xi, f.primitive_element());
        assert!(build_baby_verma(&bad, pt.kostant_borel()).is_err());
    }
}
