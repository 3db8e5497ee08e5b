//! The p-canonical basis: characters of indecomposable objects, built inductively as the summand
//! of `B_{ws} ⊗ B_s` whose top label is `w`.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::hecke::algebra::{HeckeAlgebra, HeckeElt};
use crate::realization::Realization;
use crate::sbim::decompose::decompose_filtered;
use crate::sbim::SBimObject;
use crate::weyl::{ExtWeylElt, RootDatum};

pub struct PCanonical {
    pub real: Realization,
    pub hecke: HeckeAlgebra,
    pub seed: u64,
    cache: Mutex<HashMap<ExtWeylElt, (SBimObject, HeckeElt)>>,
}

impl PCanonical {
    pub fn new(datum: &RootDatum, seed: u64) -> Result<PCanonical> {
        Ok(PCanonical {
            real: Realization::new(datum)?,
            hecke: HeckeAlgebra::new(datum),
            seed,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn datum(&self) -> &RootDatum {
        &self.real.datum
    }

    /// The indecomposable `B_w` and its character `ᵖb_w`.
    pub fn object(&self, w: &ExtWeylElt) -> Result<(SBimObject, HeckeElt)> {
        if let Some(hit) = self.cache.lock().unwrap().get(w) {
            return Ok(hit.clone());
        }
        let d = self.datum();
        let result = if d.length(w) == 0 {
            (SBimObject::delta(&self.real, w), HeckeElt::std(w))
        } else {
            let s = (0..d.num_gens()).find(|&s| d.is_right_descent(w, s)).unwrap();
            let (prev, _) = self.object(&w.mul(&d.gen(s)))?;
            let m = prev.tensor(&SBimObject::bs_gen(&self.real, s));
            let parts = decompose_filtered(&m, d, self.seed, |part| part.loc.iter().any(|l| &l.label == w))?;
            let top: Vec<_> = parts.into_iter().filter(|s| &s.top == w).collect();
            match <[_; 1]>::try_from(top) {
                Ok([s]) if s.shift == 0 => (s.object, s.character),
                _ => return Err(Error::Decomposition(format!("no unique top summand for {}", d.display(w)))),
            }
        };
        self.cache.lock().unwrap().insert(w.clone(), result.clone());
        Ok(result)
    }

    pub fn p_canonical(&self, w: &ExtWeylElt) -> Result<HeckeElt> {
        Ok(self.object(w)?.1)
    }

    /// `ᵖb_w` expanded in the KL basis.
    pub fn in_kl_basis(&self, w: &ExtWeylElt) -> Result<HeckeElt> {
        Ok(self.hecke.to_kl(&self.p_canonical(w)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::LaurentInt;

    #[test]
    fn low_lengths_agree_with_kl() {
        let d = RootDatum::a1(5).unwrap();
        let pc = PCanonical::new(&d, 1).unwrap();
        for w in d.affine_elements(3) {
            assert_eq!(pc.p_canonical(&w).unwrap(), pc.hecke.kl_basis(&w));
        }
        let s = d.gen(1);
        let mut bs = HeckeElt::std(&s);
        bs.add_term(&d.identity(), &LaurentInt::v());
        assert_eq!(pc.p_canonical(&s).unwrap(), bs);
    }

    #[test]
    fn finite_a2_is_classical() {
        let d = RootDatum::a2(5).unwrap();
        let pc = PCanonical::new(&d, 3).unwrap();
        for w in d.weyl_group().to_vec() {
            let x = ExtWeylElt::finite(w);
            assert_eq!(pc.p_canonical(&x).unwrap(), pc.hecke.kl_basis(&x));
        }
    }
}
