use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hecke::LaurentInt;
use crate::poly::GradedPoly;
use crate::realization::Realization;
use crate::sbim::pmat::{MatEvaluator, PMat};
use crate::sbim::qlin;
use crate::weyl::ExtWeylElt;

/// A vector spanning part of the localized summand `M_Q^x`, as coordinates in the left basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocVec {
    pub label: ExtWeylElt,
    pub vec: Vec<GradedPoly>,
    pub degree: i32,
}

/// Graded R-bimodule, free as a left module, with right-action matrices and decomposition data.
///
/// `m_a · x_i = Σ_b action[i][a][b] m_b`; entry `(a, b)` has degree `2 + degrees[a] − degrees[b]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SBimObject {
    pub nvars: usize,
    pub p: u32,
    pub degrees: Vec<i32>,
    pub action: Vec<PMat>,
    pub loc: Vec<LocVec>,
}

impl SBimObject {
    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    /// The standard object Δ_x: R with right action twisted by x.
    pub fn delta(real: &Realization, x: &ExtWeylElt) -> SBimObject {
        let (r, p) = (real.nvars(), real.p);
        let action = (0..r).map(|i| PMat::from_rows(vec![vec![real.act(x, &real.var(i))]], 1, r, p)).collect();
        let loc = vec![LocVec { label: x.clone(), vec: vec![real.one()], degree: 0 }];
        SBimObject { nvars: r, p, degrees: vec![0], action, loc }
    }

    pub fn unit(real: &Realization) -> SBimObject {
        SBimObject::delta(real, &real.datum.identity())
    }

    /// `B_s = R ⊗_{R^s} R (1)` with basis `1⊗1, 1⊗δ_s`.
    pub fn bs_gen(real: &Realization, s: usize) -> SBimObject {
        let (r, p) = (real.nvars(), real.p);
        let delta = real.delta(s);
        let action = (0..r)
            .map(|i| {
                let x = real.var(i);
                let (a0, b0) = real.invariant_split(s, &x);
                let (a1, b1) = real.invariant_split(s, &delta.mul(&x));
                PMat::from_rows(vec![vec![a0, b0], vec![a1, b1]], 2, r, p)
            })
            .collect();
        let alpha = real.root(s);
        let (a, b) = real.invariant_split(s, alpha);
        let loc = vec![
            LocVec { label: real.datum.identity(), vec: vec![alpha.add(&a), b.clone()], degree: 1 },
            LocVec { label: real.datum.gen(s), vec: vec![alpha.sub(&a), b.neg()], degree: 1 },
        ];
        SBimObject { nvars: r, p, degrees: vec![-1, 1], action, loc }
    }

    /// Bott–Samelson object `B_{s1} ⊗ ⋯ ⊗ B_{sk}`.
    pub fn bott_samelson(real: &Realization, word: &[usize]) -> SBimObject {
        word.iter().fold(SBimObject::unit(real), |acc, &s| acc.tensor(&SBimObject::bs_gen(real, s)))
    }

    /// `M(n)`: degrees lowered by n.
    pub fn shift(&self, n: i32) -> SBimObject {
        let mut out = self.clone();
        out.degrees.iter_mut().for_each(|d| *d -= n);
        out.loc.iter_mut().for_each(|l| l.degree -= n);
        out
    }

    pub fn direct_sum(parts: &[&SBimObject]) -> SBimObject {
        let (nvars, p) = (parts[0].nvars, parts[0].p);
        let n: usize = parts.iter().map(|m| m.rank()).sum();
        let degrees = parts.iter().flat_map(|m| m.degrees.iter().copied()).collect();
        let action =
            (0..nvars).map(|i| PMat::block_diag(&parts.iter().map(|m| &m.action[i]).collect::<Vec<_>>())).collect();
        let mut loc = Vec::new();
        let mut off = 0;
        for m in parts {
            for l in &m.loc {
                let mut v = vec![GradedPoly::zero(nvars, p); n];
                v[off..off + m.rank()].clone_from_slice(&l.vec);
                loc.push(LocVec { label: l.label.clone(), vec: v, degree: l.degree });
            }
            off += m.rank();
        }
        SBimObject { nvars, p, degrees, action, loc }
    }

    /// Matrices of the right action of each polynomial in `polys`.
    pub fn right_action_of(&self, polys: &[GradedPoly]) -> Vec<PMat> {
        let mut ev = MatEvaluator::new(&self.action);
        polys.iter().map(|f| ev.eval(f)).collect()
    }

    /// `M ⊗_R N` with basis `m_a ⊗ n_b` at index `a·rank(N) + b`.
    pub fn tensor(&self, o: &SBimObject) -> SBimObject {
        let (nm, nn) = (self.rank(), o.rank());
        let (nvars, p) = (self.nvars, self.p);
        let n = nm * nn;
        let idx = |a: usize, b: usize| a * nn + b;
        let mut ev = MatEvaluator::new(&self.action);
        let mut cache: HashMap<GradedPoly, PMat> = HashMap::new();
        let mut eval = |f: &GradedPoly| -> PMat {
            if let Some(m) = cache.get(f) {
                return m.clone();
            }
            let m = ev.eval(f);
            cache.insert(f.clone(), m.clone());
            m
        };
        let mut degrees = vec![0; n];
        for a in 0..nm {
            for b in 0..nn {
                degrees[idx(a, b)] = self.degrees[a] + o.degrees[b];
            }
        }
        let mut action = Vec::with_capacity(nvars);
        for i in 0..nvars {
            let mut m = PMat::zeros(n, n, nvars, p);
            for b in 0..nn {
                for c in 0..nn {
                    let f = o.action[i].get(b, c);
                    if f.is_zero() {
                        continue;
                    }
                    let pm = eval(f);
                    for a in 0..nm {
                        for e in 0..nm {
                            let x = pm.get(a, e);
                            if !x.is_zero() {
                                m.set(idx(a, b), idx(e, c), x.clone());
                            }
                        }
                    }
                }
            }
            action.push(m);
        }
        let mut loc = Vec::with_capacity(self.loc.len() * o.loc.len());
        for u in &self.loc {
            for w in &o.loc {
                let mut v = vec![GradedPoly::zero(nvars, p); n];
                for b in 0..nn {
                    if w.vec[b].is_zero() {
                        continue;
                    }
                    let row = eval(&w.vec[b]).vec_mul(&u.vec);
                    for (e, x) in row.into_iter().enumerate() {
                        v[idx(e, b)] = x;
                    }
                }
                loc.push(LocVec { label: u.label.mul(&w.label), vec: v, degree: u.degree + w.degree });
            }
        }
        SBimObject { nvars, p, degrees, action, loc }
    }

    /// Graded left rank `Σ_a v^{−deg m_a}`.
    pub fn graded_rank(&self) -> LaurentInt {
        self.degrees.iter().fold(LaurentInt::zero(), |acc, &d| acc.add(&LaurentInt::monomial(1, -d)))
    }

    /// Labels with graded multiplicities `Σ v^{deg}` of the localized generators.
    pub fn std_character(&self) -> BTreeMap<ExtWeylElt, LaurentInt> {
        let mut out: BTreeMap<ExtWeylElt, LaurentInt> = BTreeMap::new();
        for l in &self.loc {
            let e = out.entry(l.label.clone()).or_default();
            *e = e.add(&LaurentInt::monomial(1, l.degree));
        }
        out
    }

    pub fn commutes(&self) -> bool {
        (0..self.nvars).all(|i| {
            (i + 1..self.nvars).all(|j| self.action[i].mul(&self.action[j]) == self.action[j].mul(&self.action[i]))
        })
    }

    /// Checks homogeneity of the action matrices.
    pub fn is_homogeneous(&self) -> bool {
        self.action.iter().all(|m| {
            (0..self.rank()).all(|a| {
                (0..self.rank()).all(|b| {
                    let f = m.get(a, b);
                    f.is_zero() || f.degree() == Some(2 + self.degrees[a] - self.degrees[b])
                })
            })
        })
    }

    /// Certifies the decomposition data against the right action over Q.
    ///
    /// Every localized vector must be a twisted eigenvector for the finite part of its label,
    /// and for each finite Weyl element the eigenspace dimension must match the label count.
    pub fn certify_labels(&self, real: &Realization) -> Result<()> {
        let n = self.rank();
        if self.loc.len() != n {
            return Err(Error::Decomposition(format!("{} localized vectors for rank {n}", self.loc.len())));
        }
        let mut by_w: BTreeMap<Vec<i64>, Vec<&LocVec>> = BTreeMap::new();
        for l in &self.loc {
            let images = real.var_images(&l.label.w);
            for i in 0..self.nvars {
                let lhs = self.action[i].vec_mul(&l.vec);
                let rhs: Vec<GradedPoly> = l.vec.iter().map(|x| x.mul(&images[i])).collect();
                if lhs != rhs {
                    return Err(Error::Decomposition("localized vector is not a twisted eigenvector".into()));
                }
            }
            by_w.entry(l.label.w.0.clone()).or_default().push(l);
        }
        for group in by_w.values() {
            let rows: Vec<Vec<GradedPoly>> = group.iter().map(|l| l.vec.clone()).collect();
            if qlin::rank(&rows, n, self.nvars, self.p) != rows.len() {
                return Err(Error::Decomposition("dependent localized vectors".into()));
            }
            let w = &group[0].label.w;
            let images = real.var_images(w);
            let mut wide: Vec<Vec<GradedPoly>> = vec![Vec::with_capacity(n * self.nvars); n];
            for i in 0..self.nvars {
                let shifted = self.action[i].sub(&PMat::scalar(n, &images[i]));
                for (a, row) in wide.iter_mut().enumerate() {
                    row.extend(shifted.row(a));
                }
            }
            let eig = n - qlin::rank(&wide, n * self.nvars, self.nvars, self.p);
            if eig != group.len() {
                return Err(Error::Decomposition(format!(
                    "eigenspace of dimension {eig} carries {} labels",
                    group.len()
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::RootDatum;

    #[test]
    fn bs_gen_shape() {
        let d = RootDatum::a1(5).unwrap();
        let real = Realization::new(&d).unwrap();
        let b = SBimObject::bs_gen(&real, 1);
        assert_eq!(b.graded_rank(), LaurentInt::v().add(&LaurentInt::v().bar()));
        assert!(b.is_homogeneous() && b.commutes());
        b.certify_labels(&real).unwrap();
        let bb = b.tensor(&b);
        assert_eq!(bb.rank(), 4);
        assert!(bb.is_homogeneous());
        bb.certify_labels(&real).unwrap();
    }

    #[test]
    fn a2_bott_samelson_is_an_object() {
        let d = RootDatum::a2(5).unwrap();
        let real = Realization::new(&d).unwrap();
        let m = SBimObject::bott_samelson(&real, &[1, 2, 0]);
        assert!(m.is_homogeneous() && m.commutes());
        m.certify_labels(&real).unwrap();
    }

    #[test]
    fn delta_of_translation_has_trivial_action() {
        let d = RootDatum::a1(5).unwrap();
        let real = Realization::new(&d).unwrap();
        let t = d.gen(0).mul(&d.gen(1));
        assert!(t.w.is_identity());
        let dt = SBimObject::delta(&real, &t);
        let de = SBimObject::unit(&real);
        assert_eq!(dt.action, de.action);
        assert_ne!(dt.loc[0].label, de.loc[0].label);
    }
}
