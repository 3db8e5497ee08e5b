use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use crate::hecke::laurent::LaurentInt;
use crate::weyl::{ExtWeylElt, RootDatum};

/// Element of the Hecke algebra of W_ext in the standard basis.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct HeckeElt {
    terms: BTreeMap<ExtWeylElt, LaurentInt>,
}

impl HeckeElt {
    pub fn zero() -> HeckeElt {
        HeckeElt::default()
    }

    /// The standard basis element `H_x`.
    pub fn std(x: &ExtWeylElt) -> HeckeElt {
        HeckeElt::term(x, LaurentInt::one())
    }

    pub fn term(x: &ExtWeylElt, c: LaurentInt) -> HeckeElt {
        let mut h = HeckeElt::zero();
        h.add_term(x, &c);
        h
    }

    pub fn add_term(&mut self, x: &ExtWeylElt, c: &LaurentInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(x.clone()).or_default();
        *e = e.add(c);
        if e.is_zero() {
            self.terms.remove(x);
        }
    }

    pub fn coeff(&self, x: &ExtWeylElt) -> LaurentInt {
        self.terms.get(x).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> &BTreeMap<ExtWeylElt, LaurentInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        for (x, c) in &o.terms {
            out.add_term(x, c);
        }
        out
    }

    pub fn sub(&self, o: &HeckeElt) -> HeckeElt {
        self.add(&o.scale(&LaurentInt::monomial(-1, 0)))
    }

    pub fn scale(&self, c: &LaurentInt) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (x, a) in &self.terms {
            out.add_term(x, &a.mul(c));
        }
        out
    }

    /// Right multiplication by a length-zero element.
    pub fn mul_omega(&self, omega: &ExtWeylElt) -> HeckeElt {
        HeckeElt { terms: self.terms.iter().map(|(x, c)| (x.mul(omega), c.clone())).collect() }
    }

    pub fn omega_mul(&self, omega: &ExtWeylElt) -> HeckeElt {
        HeckeElt { terms: self.terms.iter().map(|(x, c)| (omega.mul(x), c.clone())).collect() }
    }

    /// Evaluation at v = 1 (the group algebra image).
    pub fn at_one(&self) -> BTreeMap<ExtWeylElt, i64> {
        self.terms.iter().map(|(x, c)| (x.clone(), c.eval_at_one())).filter(|(_, c)| *c != 0).collect()
    }
}

impl HeckeElt {
    /// `(c)·H_x + …` with elements written as words.
    pub fn display(&self, datum: &RootDatum) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms.iter().rev().map(|(x, c)| format!("({c})·H_{}", datum.display(x))).collect::<Vec<_>>().join(" + ")
    }
}

impl fmt::Debug for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(x, c)| ((&x.t, &x.w), c))).finish()
    }
}

fn q_minus() -> LaurentInt {
    LaurentInt::from_coeffs(-1, vec![1, 0, -1])
}

/// Hecke algebra of a root datum's extended affine Weyl group, with a KL-basis cache.
pub struct HeckeAlgebra {
    pub datum: RootDatum,
    kl_cache: Mutex<HashMap<ExtWeylElt, HeckeElt>>,
}

impl HeckeAlgebra {
    pub fn new(datum: &RootDatum) -> HeckeAlgebra {
        HeckeAlgebra { datum: datum.clone(), kl_cache: Mutex::new(HashMap::new()) }
    }

    pub fn one(&self) -> HeckeElt {
        HeckeElt::std(&self.datum.identity())
    }

    pub fn std(&self, x: &ExtWeylElt) -> HeckeElt {
        HeckeElt::std(x)
    }

    /// `b_s = H_s + v`.
    pub fn gen_kl(&self, s: usize) -> HeckeElt {
        let mut h = HeckeElt::std(&self.datum.gen(s));
        h.add_term(&self.datum.identity(), &LaurentInt::v());
        h
    }

    /// `a · H_s`.
    pub fn mul_gen(&self, a: &HeckeElt, s: usize) -> HeckeElt {
        let g = self.datum.gen(s);
        let mut out = HeckeElt::zero();
        for (z, c) in &a.terms {
            let zs = z.mul(&g);
            out.add_term(&zs, c);
            if self.datum.length(&zs) < self.datum.length(z) {
                out.add_term(z, &c.mul(&q_minus()));
            }
        }
        out
    }

    /// `H_s · a`.
    pub fn gen_mul(&self, s: usize, a: &HeckeElt) -> HeckeElt {
        let g = self.datum.gen(s);
        let mut out = HeckeElt::zero();
        for (z, c) in &a.terms {
            let sz = g.mul(z);
            out.add_term(&sz, c);
            if self.datum.length(&sz) < self.datum.length(z) {
                out.add_term(z, &c.mul(&q_minus()));
            }
        }
        out
    }

    /// `a · H_y`.
    pub fn mul_std(&self, a: &HeckeElt, y: &ExtWeylElt) -> HeckeElt {
        let (word, omega) = self.datum.word_and_omega(y);
        let mut out = a.clone();
        for s in word {
            out = self.mul_gen(&out, s);
        }
        out.mul_omega(&omega)
    }

    pub fn mul(&self, a: &HeckeElt, b: &HeckeElt) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (y, c) in &b.terms {
            out = out.add(&self.mul_std(a, y).scale(c));
        }
        out
    }

    /// Product `b_{s1} ⋯ b_{sk}` of a Bott–Samelson word.
    pub fn bs_word(&self, word: &[usize]) -> HeckeElt {
        word.iter().fold(self.one(), |acc, &s| self.mul(&acc, &self.gen_kl(s)))
    }

    /// Kazhdan–Lusztig involution.
    pub fn bar(&self, a: &HeckeElt) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (y, c) in &a.terms {
            let (word, omega) = self.datum.word_and_omega(y);
            let mut img = self.one();
            for s in word {
                let shifted = img.scale(&q_minus().neg());
                img = self.mul_gen(&img, s).add(&shifted);
            }
            out = out.add(&img.mul_omega(&omega).scale(&c.bar()));
        }
        out
    }

    /// Kazhdan–Lusztig basis element `b_w`.
    pub fn kl_basis(&self, w: &ExtWeylElt) -> HeckeElt {
        if let Some(b) = self.kl_cache.lock().unwrap().get(w) {
            return b.clone();
        }
        let b = self.compute_kl(w);
        self.kl_cache.lock().unwrap().insert(w.clone(), b.clone());
        b
    }

    fn compute_kl(&self, w: &ExtWeylElt) -> HeckeElt {
        let d = &self.datum;
        let lw = d.length(w);
        if lw == 0 {
            return HeckeElt::std(w);
        }
        let s = (0..d.num_gens()).find(|&s| d.is_right_descent(w, s)).unwrap();
        let ws = w.mul(&d.gen(s));
        let mut b = self.mul(&self.kl_basis(&ws), &self.gen_kl(s));
        loop {
            let bad = b
                .terms
                .iter()
                .filter(|(y, c)| *y != w && c.min_deg().is_some_and(|m| m <= 0))
                .max_by_key(|(y, _)| d.length(y))
                .map(|(y, c)| (y.clone(), c.clone()));
            let Some((y, c)) = bad else { break };
            assert!(c.min_deg() == Some(0), "KL recursion produced a negative power");
            b = b.sub(&self.kl_basis(&y).scale(&LaurentInt::monomial(c.coeff(0), 0)));
        }
        b
    }

    /// Expansion of `a` in the KL basis, assuming the coefficients are Laurent polynomials.
    pub fn to_kl(&self, a: &HeckeElt) -> HeckeElt {
        let d = &self.datum;
        let mut rest = a.clone();
        let mut out = HeckeElt::zero();
        while let Some((y, c)) =
            rest.terms.iter().max_by_key(|(y, _)| (d.length(y), (*y).clone())).map(|(y, c)| (y.clone(), c.clone()))
        {
            out.add_term(&y, &c);
            rest = rest.sub(&self.kl_basis(&y).scale(&c));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg() -> HeckeAlgebra {
        HeckeAlgebra::new(&RootDatum::a1(5).unwrap())
    }

    #[test]
    fn quadratic_relation() {
        let h = alg();
        let s = h.datum.gen(1);
        let hs = h.std(&s);
        let sq = h.mul(&hs, &hs);
        let expect = hs.scale(&q_minus()).add(&h.one());
        assert_eq!(sq, expect);
        let b = h.gen_kl(1);
        let q = LaurentInt::v().add(&LaurentInt::v().bar());
        assert_eq!(h.mul(&b, &b), b.scale(&q));
    }

    #[test]
    fn kl_affine_a1() {
        let h = alg();
        let d = &h.datum;
        let x = d.from_word(&[1, 0]);
        let b = h.kl_basis(&x);
        let v = LaurentInt::v();
        let mut expect = h.std(&x);
        expect.add_term(&d.gen(1), &v);
        expect.add_term(&d.gen(0), &v);
        expect.add_term(&d.identity(), &v.mul(&v));
        assert_eq!(b, expect);
    }

    #[test]
    fn bar_is_involution_and_fixes_kl() {
        let h = HeckeAlgebra::new(&RootDatum::a2(5).unwrap());
        for x in h.datum.affine_elements(3) {
            let b = h.kl_basis(&x);
            assert_eq!(h.bar(&b), b);
            let hx = h.std(&x);
            assert_eq!(h.bar(&h.bar(&hx)), hx);
        }
    }
}
