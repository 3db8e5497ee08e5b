use std::collections::BTreeMap;

use crate::hecke::algebra::HeckeElt;
use crate::hecke::laurent::LaurentInt;
use crate::weyl::{ExtWeylElt, RootDatum};

/// Element of the antispherical right module, in the basis `N_x` over minimal coset representatives.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AntisphericalElt {
    pub terms: BTreeMap<ExtWeylElt, LaurentInt>,
}

impl AntisphericalElt {
    pub fn coeff(&self, y: &ExtWeylElt) -> LaurentInt {
        self.terms.get(y).cloned().unwrap_or_default()
    }

    pub fn at_one(&self) -> BTreeMap<ExtWeylElt, i64> {
        self.terms.iter().map(|(x, c)| (x.clone(), c.eval_at_one())).filter(|(_, c)| *c != 0).collect()
    }
}

/// Splits `y = u·x` with `u` finite and `x` a minimal coset representative; returns `(ℓ(u), x)`.
pub fn coset_split(datum: &RootDatum, y: &ExtWeylElt) -> (usize, ExtWeylElt) {
    let mut cur = y.clone();
    let mut lu = 0;
    while let Some(s) = (1..datum.num_gens()).find(|&s| datum.is_left_descent(s, &cur)) {
        cur = datum.gen(s).mul(&cur);
        lu += 1;
    }
    (lu, cur)
}

/// Image under `H_{ux} ↦ (−v)^{ℓ(u)} N_x`.
pub fn project(datum: &RootDatum, h: &HeckeElt) -> AntisphericalElt {
    let mut out = AntisphericalElt::default();
    for (y, c) in h.terms() {
        let (lu, x) = coset_split(datum, y);
        let sign = if lu % 2 == 0 { 1 } else { -1 };
        let e = out.terms.entry(x.clone()).or_default();
        *e = e.add(&c.mul(&LaurentInt::monomial(sign, lu as i32)));
        if e.is_zero() {
            out.terms.remove(&x);
        }
    }
    out
}

/// Tilting multiplicities `y ↦ n_{y,w}(1)` read from a (p-)canonical basis element.
pub fn tilting_multiplicities(datum: &RootDatum, b: &HeckeElt) -> BTreeMap<ExtWeylElt, i64> {
    project(datum, b).at_one()
}

/// Highest weight `x • 0` attached to a minimal coset representative.
pub fn dot_zero(datum: &RootDatum, x: &ExtWeylElt) -> Vec<i64> {
    datum.dot_act(x, &vec![0; datum.rank])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::HeckeAlgebra;

    #[test]
    fn first_wall_crossing() {
        let d = RootDatum::a1(5).unwrap();
        let h = HeckeAlgebra::new(&d);
        let s0 = d.gen(0);
        let m = tilting_multiplicities(&d, &h.kl_basis(&s0));
        assert_eq!(m.len(), 2);
        assert_eq!(m[&s0], 1);
        assert_eq!(m[&d.identity()], 1);
        assert_eq!(dot_zero(&d, &s0), vec![8]);
    }

    #[test]
    fn finite_part_is_killed() {
        let d = RootDatum::a1(5).unwrap();
        let h = HeckeAlgebra::new(&d);
        assert!(project(&d, &h.gen_kl(1)).terms.is_empty());
    }
}
