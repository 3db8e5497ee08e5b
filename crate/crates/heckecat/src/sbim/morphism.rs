use std::collections::{BTreeMap, HashMap};

use crate::field::Gf;
use crate::linalg::Mat;
use crate::poly::{monomials_of_tdeg, GradedPoly, Mono};
use crate::sbim::object::SBimObject;
use crate::sbim::pmat::PMat;
use crate::sbim::qlin;
use crate::weyl::ExtWeylElt;

/// Bimodule map `f(m_a) = Σ_b matrix[a][b] n_b` raising degrees by `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub matrix: PMat,
    pub degree: i32,
}

impl Morphism {
    pub fn identity(m: &SBimObject) -> Morphism {
        Morphism { matrix: PMat::identity(m.rank(), m.nvars, m.p), degree: 0 }
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &Morphism) -> Morphism {
        Morphism { matrix: self.matrix.mul(&g.matrix), degree: self.degree + g.degree }
    }

    pub fn is_homogeneous(&self, src: &SBimObject, tgt: &SBimObject) -> bool {
        (0..src.rank()).all(|a| {
            (0..tgt.rank()).all(|b| {
                let f = self.matrix.get(a, b);
                f.is_zero() || f.degree() == Some(src.degrees[a] + self.degree - tgt.degrees[b])
            })
        })
    }

    pub fn intertwines(&self, src: &SBimObject, tgt: &SBimObject) -> bool {
        (0..src.nvars).all(|i| src.action[i].mul(&self.matrix) == self.matrix.mul(&tgt.action[i]))
    }

    pub fn is_bimodule_map(&self, src: &SBimObject, tgt: &SBimObject) -> bool {
        self.is_homogeneous(src, tgt) && self.intertwines(src, tgt)
    }

    /// Whether each localized summand of `src` lands in the summand of `tgt` with the same label.
    pub fn respects_decomposition(&self, src: &SBimObject, tgt: &SBimObject) -> bool {
        let kernels = label_kernels(tgt);
        src.loc.iter().all(|u| {
            let img = self.matrix.vec_mul(&u.vec);
            kernel_for(&kernels, tgt, &u.label).iter().all(|k| {
                img.iter().zip(k).fold(GradedPoly::zero(src.nvars, src.p), |acc, (a, b)| acc.add(&a.mul(b))).is_zero()
            })
        })
    }

    /// F_p-matrix of the map on the degree-`deg` slices, rows indexed by source monomials.
    pub fn slice_matrix(&self, src: &SBimObject, tgt: &SBimObject, deg: i32) -> Mat {
        let sb = slice_basis(src, deg);
        let tb = slice_basis(tgt, deg + self.degree);
        let tindex: HashMap<(usize, Mono), usize> = tb.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        let mut m = Mat::zeros(sb.len(), tb.len());
        for (r, &(a, mu)) in sb.iter().enumerate() {
            for b in 0..tgt.rank() {
                for &(nu, c) in self.matrix.get(a, b).terms() {
                    let col = tindex[&(b, mu.mul(nu))];
                    m.set(r, col, (m.get(r, col) + c) % src.p);
                }
            }
        }
        m
    }
}

/// F_p-basis `(a, μ)` of the degree-`deg` slice of a free module, `μ·m_a` with `deg μ = deg − d_a`.
pub fn slice_basis(m: &SBimObject, deg: i32) -> Vec<(usize, Mono)> {
    let mut out = Vec::new();
    for (a, &d) in m.degrees.iter().enumerate() {
        let e = deg - d;
        if e >= 0 && e % 2 == 0 {
            for mu in monomials_of_tdeg(m.nvars, (e / 2) as u32) {
                out.push((a, mu));
            }
        }
    }
    out
}

type Kernels = BTreeMap<ExtWeylElt, Vec<Vec<GradedPoly>>>;

/// For each label of `m`, vectors cutting out the span of its localized generators.
fn label_kernels(m: &SBimObject) -> Kernels {
    let mut groups: BTreeMap<ExtWeylElt, Vec<Vec<GradedPoly>>> = BTreeMap::new();
    for l in &m.loc {
        groups.entry(l.label.clone()).or_default().push(l.vec.clone());
    }
    groups
        .into_iter()
        .map(|(x, rows)| {
            let k = qlin::right_kernel(&rows, m.rank(), &m.degrees, m.nvars, m.p);
            (x, k)
        })
        .collect()
}

fn kernel_for(kernels: &Kernels, m: &SBimObject, x: &ExtWeylElt) -> Vec<Vec<GradedPoly>> {
    match kernels.get(x) {
        Some(k) => k.clone(),
        None => (0..m.rank())
            .map(|b| {
                (0..m.rank())
                    .map(|c| if b == c { GradedPoly::one(m.nvars, m.p) } else { GradedPoly::zero(m.nvars, m.p) })
                    .collect()
            })
            .collect(),
    }
}

#[derive(Clone, Debug)]
pub struct HomSpace {
    pub basis: Vec<Morphism>,
    /// Whether the decomposition-compatibility conditions cut the space down.
    pub filter_active: bool,
}

#[derive(Default)]
struct System {
    rows: HashMap<(u8, usize, usize, usize, Mono), usize>,
    entries: Vec<Vec<(usize, u32)>>,
}

impl System {
    fn add(&mut self, key: (u8, usize, usize, usize, Mono), var: usize, c: u32) {
        let n = self.entries.len();
        let r = *self.rows.entry(key).or_insert(n);
        if r == n {
            self.entries.push(Vec::new());
        }
        self.entries[r].push((var, c));
    }

    fn dense(&self, nvars: usize, f: &Gf) -> Mat {
        let mut m = Mat::zeros(self.entries.len(), nvars);
        for (r, row) in self.entries.iter().enumerate() {
            for &(v, c) in row {
                let cur = m.get(r, v);
                m.set(r, v, f.add(cur, c));
            }
        }
        m
    }
}

/// Basis of degree-`deg` morphisms `src → tgt` compatible with the decompositions.
pub fn hom_space(src: &SBimObject, tgt: &SBimObject, deg: i32) -> HomSpace {
    let (nv, p) = (src.nvars, src.p);
    let f = Gf::prime(p).unwrap();
    let mut unknowns: Vec<(usize, usize, Mono)> = Vec::new();
    let mut by_entry: HashMap<(usize, usize), Vec<(usize, Mono)>> = HashMap::new();
    for a in 0..src.rank() {
        for b in 0..tgt.rank() {
            let e = src.degrees[a] + deg - tgt.degrees[b];
            if e >= 0 && e % 2 == 0 {
                for mu in monomials_of_tdeg(nv, (e / 2) as u32) {
                    by_entry.entry((a, b)).or_default().push((unknowns.len(), mu));
                    unknowns.push((a, b, mu));
                }
            }
        }
    }
    if unknowns.is_empty() {
        return HomSpace { basis: Vec::new(), filter_active: false };
    }
    let mut sys = System::default();
    for i in 0..nv {
        let (rm, rn) = (&src.action[i], &tgt.action[i]);
        for (v, &(b, c, mu)) in unknowns.iter().enumerate() {
            for a in 0..src.rank() {
                for &(m, coef) in rm.get(a, b).terms() {
                    sys.add((0, i, a, c, m.mul(mu)), v, coef);
                }
            }
            for c2 in 0..tgt.rank() {
                for &(m, coef) in rn.get(c, c2).terms() {
                    sys.add((0, i, b, c2, m.mul(mu)), v, p - coef);
                }
            }
        }
    }
    let intertwining = sys.dense(unknowns.len(), &f);
    let kernels = label_kernels(tgt);
    for (ui, u) in src.loc.iter().enumerate() {
        for (kj, k) in kernel_for(&kernels, tgt, &u.label).iter().enumerate() {
            for (&(a, b), vars) in &by_entry {
                let w = u.vec[a].mul(&k[b]);
                if w.is_zero() {
                    continue;
                }
                for &(v, mu) in vars {
                    for &(m, coef) in w.terms() {
                        sys.add((1, ui, kj, 0, m.mul(mu)), v, coef);
                    }
                }
            }
        }
    }
    let full = sys.dense(unknowns.len(), &f);
    let filter_active = full.rank(&f) > intertwining.rank(&f);
    let basis = full
        .nullspace(&f)
        .into_iter()
        .map(|sol| {
            let mut m = PMat::zeros(src.rank(), tgt.rank(), nv, p);
            for (v, &(a, b, mu)) in unknowns.iter().enumerate() {
                if sol[v] != 0 {
                    let cur = m.get(a, b).add(&GradedPoly::monomial(nv, p, mu, sol[v] as i64));
                    m.set(a, b, cur);
                }
            }
            Morphism { matrix: m, degree: deg }
        })
        .collect();
    HomSpace { basis, filter_active }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realization::Realization;
    use crate::weyl::RootDatum;

    #[test]
    fn small_hom_spaces() {
        let d = RootDatum::a1(5).unwrap();
        let real = Realization::new(&d).unwrap();
        let e = SBimObject::unit(&real);
        let ds = SBimObject::delta(&real, &d.gen(1));
        let b = SBimObject::bs_gen(&real, 1);
        assert_eq!(hom_space(&ds, &ds, 0).basis.len(), 1);
        assert_eq!(hom_space(&e, &b.shift(1), 0).basis.len(), 1);
        for k in -4..=4 {
            assert!(hom_space(&e, &ds, k).basis.is_empty());
        }
        for m in hom_space(&b, &b, 0).basis {
            assert!(m.is_bimodule_map(&b, &b) && m.respects_decomposition(&b, &b));
        }
    }
}
