//! The balanced realization of the affine Weyl group on t = X∨ ⊗ F_p and the ring R = Sym(t).
//!
//! Variable `x_j` of R is the j-th basis vector of X∨ (dual to the chosen basis of X).

use crate::error::{Error, Result};
use crate::poly::{inv_mod, GradedPoly};
use crate::weyl::{ExtWeylElt, RootDatum, WMat};

#[derive(Clone, Debug)]
pub struct Realization {
    pub datum: RootDatum,
    pub p: u32,
    /// α_s as a linear form, indexed like the affine generators (0 = s_0).
    roots: Vec<GradedPoly>,
    /// α_s^∨ in X-coordinates.
    coroots: Vec<Vec<i64>>,
    deltas: Vec<GradedPoly>,
}

impl Realization {
    pub fn new(datum: &RootDatum) -> Result<Realization> {
        let p = datum.p;
        let mut roots = Vec::new();
        let mut coroots = Vec::new();
        let neg = |v: &Vec<i64>| v.iter().map(|x| -x).collect::<Vec<i64>>();
        roots.push(GradedPoly::linear(p, &neg(datum.highest_coroot())));
        coroots.push(neg(datum.highest_root()));
        for i in 0..datum.rank {
            roots.push(GradedPoly::linear(p, &datum.simple_coroots[i]));
            coroots.push(datum.simple_roots[i].clone());
        }
        let mut deltas = Vec::new();
        for (s, cor) in coroots.iter().enumerate() {
            if roots[s].is_zero() {
                return Err(Error::RootDatum(format!("α_s vanishes mod p for generator {s}")));
            }
            let j = cor
                .iter()
                .position(|&c| c.rem_euclid(p as i64) != 0)
                .ok_or_else(|| Error::RootDatum(format!("α_s^∨ vanishes mod p for generator {s}")))?;
            let c = inv_mod(p, cor[j].rem_euclid(p as i64) as u32);
            deltas.push(GradedPoly::var(datum.rank, p, j).scale(c as i64));
        }
        Ok(Realization { datum: datum.clone(), p, roots, coroots, deltas })
    }

    pub fn nvars(&self) -> usize {
        self.datum.rank
    }

    pub fn root(&self, s: usize) -> &GradedPoly {
        &self.roots[s]
    }

    pub fn coroot(&self, s: usize) -> &[i64] {
        &self.coroots[s]
    }

    pub fn delta(&self, s: usize) -> &GradedPoly {
        &self.deltas[s]
    }

    pub fn var(&self, j: usize) -> GradedPoly {
        GradedPoly::var(self.nvars(), self.p, j)
    }

    pub fn one(&self) -> GradedPoly {
        GradedPoly::one(self.nvars(), self.p)
    }

    pub fn zero(&self) -> GradedPoly {
        GradedPoly::zero(self.nvars(), self.p)
    }

    /// Pairing of a linear form with an element of X.
    pub fn pair(&self, linear: &GradedPoly, mu: &[i64]) -> i64 {
        linear
            .terms()
            .iter()
            .map(|&(m, c)| {
                let j = (0..self.nvars()).find(|&j| m.exp(j) == 1).expect("linear form");
                c as i64 * mu[j]
            })
            .sum::<i64>()
            .rem_euclid(self.p as i64)
    }

    /// Images of the variables under the finite Weyl element `w`: x_j ↦ Σ_k (w⁻¹)_{jk} x_k.
    pub fn var_images(&self, w: &WMat) -> Vec<GradedPoly> {
        let wi = w.inverse();
        let r = self.nvars();
        (0..r).map(|j| GradedPoly::linear(self.p, &wi.0[j * r..(j + 1) * r])).collect()
    }

    pub fn w_act(&self, w: &WMat, f: &GradedPoly) -> GradedPoly {
        if w.is_identity() {
            return f.clone();
        }
        f.substitute(&self.var_images(w))
    }

    /// Action of W_ext through its finite part (translations act trivially).
    pub fn act(&self, x: &ExtWeylElt, f: &GradedPoly) -> GradedPoly {
        self.w_act(&x.w, f)
    }

    /// Action of the reflection s: x ↦ x − ⟨x, α_s^∨⟩ α_s.
    pub fn s_act(&self, s: usize, f: &GradedPoly) -> GradedPoly {
        let images: Vec<GradedPoly> =
            (0..self.nvars()).map(|j| self.var(j).sub(&self.roots[s].scale(self.coroots[s][j]))).collect();
        f.substitute(&images)
    }

    pub fn demazure(&self, s: usize, f: &GradedPoly) -> Result<GradedPoly> {
        f.sub(&self.s_act(s, f)).div_exact(&self.roots[s]).ok_or(Error::InexactDivision)
    }

    /// `f = a + b·δ_s` with `a, b` s-invariant.
    pub fn invariant_split(&self, s: usize, f: &GradedPoly) -> (GradedPoly, GradedPoly) {
        let b = self.demazure(s, f).expect("Demazure division is exact");
        let a = f.sub(&b.mul(&self.deltas[s]));
        (a, b)
    }

    pub fn is_invariant(&self, s: usize, f: &GradedPoly) -> bool {
        self.s_act(s, f) == *f
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn a1_basics() {
        let d = RootDatum::a1(5).unwrap();
        let r = Realization::new(&d).unwrap();
        let h = r.var(0);
        assert_eq!(r.root(1), &h);
        assert_eq!(r.root(0), &h.neg());
        assert_eq!(r.s_act(1, &h), h.neg());
        assert_eq!(r.demazure(1, &h).unwrap(), GradedPoly::constant(1, 5, 2));
        assert!(r.demazure(1, &r.one()).unwrap().is_zero());
        assert_eq!(r.pair(r.root(1), r.coroot(1)), 2);
        assert_eq!(r.pair(r.root(0), r.coroot(0)), 2);
        // δ = h/2 and δ_{s_0} = −h/2
        assert_eq!(r.delta(1).scale(2), h);
        assert_eq!(r.delta(0).scale(2), h.neg());
    }

    #[test]
    fn w_act_matches_s_act() {
        let d = RootDatum::a2(5).unwrap();
        let r = Realization::new(&d).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let f = GradedPoly::random_homogeneous(2, 5, 3, &mut rng);
            for s in 0..3 {
                let w = d.gen(s).w;
                assert_eq!(r.w_act(&w, &f), r.s_act(s, &f));
            }
        }
    }

    #[test]
    fn split_roundtrip() {
        let d = RootDatum::a2(7).unwrap();
        let r = Realization::new(&d).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let f = GradedPoly::random_homogeneous(2, 7, 4, &mut rng);
            for s in 0..3 {
                let (a, b) = r.invariant_split(s, &f);
                assert!(r.is_invariant(s, &a) && r.is_invariant(s, &b));
                assert_eq!(a.add(&b.mul(r.delta(s))), f);
            }
        }
    }
}
