//! Characters of objects in the standard basis, read off from the filtration by Bruhat-upward label sets.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::field::Gf;
use crate::hecke::{HeckeElt, LaurentInt};
use crate::linalg::Mat;
use crate::poly::Mono;
use crate::sbim::morphism::slice_basis;
use crate::sbim::object::{LocVec, SBimObject};
use crate::sbim::qlin;
use crate::weyl::{ExtWeylElt, RootDatum};

fn binom(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Generator degrees (degree ↦ count) of the graded free module `M ∩ V`, where `V ⊂ M ⊗ Q`
/// is spanned by `rows`.
pub fn lattice_generators(m: &SBimObject, rows: &[&LocVec]) -> Result<BTreeMap<i32, i64>> {
    let mut out = BTreeMap::new();
    if rows.is_empty() {
        return Ok(out);
    }
    let n = m.rank();
    let vecs: Vec<_> = rows.iter().map(|l| l.vec.clone()).collect();
    let target = qlin::rank(&vecs, n, m.nvars, m.p) as i64;
    let kernel = qlin::right_kernel(&vecs, n, &m.degrees, m.nvars, m.p);
    if kernel.is_empty() {
        for &d in &m.degrees {
            *out.entry(d).or_insert(0) += 1;
        }
        return Ok(out);
    }
    let f = Gf::prime(m.p).unwrap();
    let r = m.nvars;
    let dmin = *m.degrees.iter().min().unwrap();
    let dmax = *m.degrees.iter().max().unwrap();
    let mut dims: HashMap<i32, i64> = HashMap::new();
    let mut total = 0;
    let mut deg = dmin;
    while total < target {
        if deg > dmax + 4 * n as i32 + 40 {
            return Err(Error::Budget("lattice generator search did not terminate".into()));
        }
        let basis = slice_basis(m, deg);
        let mut rows_map: HashMap<(usize, Mono), usize> = HashMap::new();
        let mut entries: Vec<Vec<(usize, u32)>> = Vec::new();
        for (v, &(a, mu)) in basis.iter().enumerate() {
            for (j, k) in kernel.iter().enumerate() {
                for &(nu, c) in k[a].terms() {
                    let key = (j, mu.mul(nu));
                    let len = entries.len();
                    let row = *rows_map.entry(key).or_insert(len);
                    if row == len {
                        entries.push(Vec::new());
                    }
                    entries[row].push((v, c));
                }
            }
        }
        let mut mat = Mat::zeros(entries.len(), basis.len());
        for (row, es) in entries.iter().enumerate() {
            for &(v, c) in es {
                let cur = mat.get(row, v);
                mat.set(row, v, f.add(cur, c));
            }
        }
        let dim = basis.len() as i64 - if entries.is_empty() { 0 } else { mat.rank(&f) as i64 };
        dims.insert(deg, dim);
        let g: i64 = (0..=r)
            .map(|j| {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * binom(r, j) * dims.get(&(deg - 2 * j as i32)).copied().unwrap_or(0)
            })
            .sum();
        if g < 0 {
            return Err(Error::Decomposition(format!("negative generator count in degree {deg}")));
        }
        if g > 0 {
            out.insert(deg, g);
            total += g;
        }
        deg += 1;
    }
    if total != target {
        return Err(Error::Decomposition("lattice rank mismatch".into()));
    }
    Ok(out)
}

/// `ch(M) = Σ_x Σ_d c_{x,d} v^{ℓ(x)−d} H_x`, where `c_{x,d}` counts degree-`d` generators of
/// `Γ_{≥x} / Γ_{>x}` and `Γ_{≥x}` is the part of M localized on labels `y ≥ x`.
pub fn ch(m: &SBimObject, datum: &RootDatum) -> Result<HeckeElt> {
    let labels: BTreeSet<ExtWeylElt> = m.loc.iter().map(|l| l.label.clone()).collect();
    let mut out = HeckeElt::zero();
    let mut total = 0;
    for x in &labels {
        let up: Vec<&LocVec> = m.loc.iter().filter(|l| datum.bruhat_le(x, &l.label)).collect();
        let strict: Vec<&LocVec> = up.iter().copied().filter(|l| &l.label != x).collect();
        let g_up = lattice_generators(m, &up)?;
        let g_strict = lattice_generators(m, &strict)?;
        let lx = datum.length(x) as i32;
        let mut coeff = LaurentInt::zero();
        for d in g_up.keys().chain(g_strict.keys()).collect::<BTreeSet<_>>() {
            let c = g_up.get(d).unwrap_or(&0) - g_strict.get(d).unwrap_or(&0);
            if c < 0 {
                return Err(Error::Decomposition("standard filtration is not a flag".into()));
            }
            total += c;
            coeff = coeff.add(&LaurentInt::monomial(c, lx - d));
        }
        out.add_term(x, &coeff);
    }
    if total != m.rank() as i64 {
        return Err(Error::Decomposition("character does not account for the rank".into()));
    }
    Ok(out)
}
