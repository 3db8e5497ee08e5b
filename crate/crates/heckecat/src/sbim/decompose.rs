//! Krull–Schmidt decomposition through idempotents of the degree-zero endomorphism algebra.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Gf;
use crate::hecke::{HeckeElt, LaurentInt};
use crate::linalg::{Echelon, Mat};
use crate::poly::GradedPoly;
use crate::sbim::character::ch;
use crate::sbim::morphism::hom_space;
use crate::sbim::object::{LocVec, SBimObject};
use crate::sbim::pmat::PMat;
use crate::sbim::qlin;
use crate::sbim::upoly::{minpoly, UPoly};
use crate::weyl::{ExtWeylElt, RootDatum};

/// Random splitting attempts before an algebra is tested for locality.
pub const SPLIT_TRIES: usize = 30;
/// Newton-type lifting steps allowed per idempotent.
pub const LIFT_STEPS: usize = 64;

/// An indecomposable summand: `object ≅ B(shift)` with `ch(B) = character`.
#[derive(Clone, Debug)]
pub struct Summand {
    pub object: SBimObject,
    pub character: HeckeElt,
    pub shift: i32,
    pub top: ExtWeylElt,
}

/// Scalar part: entries between basis vectors of equal degree.
fn constant_part(m: &PMat, degrees: &[i32]) -> Mat {
    let mut out = Mat::zeros(m.rows, m.cols);
    for a in 0..m.rows {
        for b in 0..m.cols {
            if degrees[a] == degrees[b] {
                out.set(a, b, m.get(a, b).constant_term());
            }
        }
    }
    out
}

fn poly_at(f: &UPoly, a: &PMat) -> PMat {
    let n = a.rows;
    let mut acc = PMat::zeros(n, n, a.nvars, a.p);
    for &c in f.c.iter().rev() {
        acc = acc.mul(a).add(&PMat::scalar(n, &GradedPoly::constant(a.nvars, a.p, c as i64)));
    }
    acc
}

fn lift_idempotent(mut e: PMat) -> Result<PMat> {
    for _ in 0..LIFT_STEPS {
        let e2 = e.mul(&e);
        if e2 == e {
            return Ok(e);
        }
        let e3 = e2.mul(&e);
        e = e2.scale(3).sub(&e3.scale(2));
    }
    Err(Error::Decomposition("idempotent lifting did not converge".into()))
}

/// Whether the image of the endomorphism algebra in the scalar parts is local with residue field F_p.
fn is_local(gens: &[Mat], p: u32) -> bool {
    let f = Gf::prime(p).unwrap();
    let n = gens[0].rows;
    let mut nil: Vec<Mat> = Vec::new();
    for g in gens {
        let mp = minpoly(g, p);
        let Some(d) = mp.deg() else { continue };
        let lambda = (0..p).find(|&c| mp.eval(c) == 0);
        let Some(lambda) = lambda else { return false };
        let lin = UPoly::new(p, vec![(p - lambda) % p, 1]);
        if mp != (0..d).fold(UPoly::one(p), |acc, _| acc.mul(&lin)) {
            return false;
        }
        nil.push(g.sub(&f, &Mat::identity(n).scale(&f, lambda)));
    }
    let mut span = Echelon::new(n * n);
    let mut layer: Vec<Mat> = nil.iter().filter(|m| span.insert(&f, &m.data)).cloned().collect();
    for _ in 0..=n {
        if layer.is_empty() {
            return true;
        }
        let mut next_span = Echelon::new(n * n);
        let mut next = Vec::new();
        for a in &layer {
            for b in &nil {
                let c = a.mul(&f, b);
                if next_span.insert(&f, &c.data) {
                    next.push(c);
                }
            }
        }
        layer = next;
    }
    layer.is_empty()
}

/// Splits `m` as `e·M ⊕ (1−e)·M` for a nontrivial idempotent `e`, if one is found.
fn find_idempotent(m: &SBimObject, rng: &mut ChaCha8Rng) -> Result<Option<PMat>> {
    let p = m.p;
    let end = hom_space(m, m, 0).basis;
    let bars: Vec<Mat> = end.iter().map(|e| constant_part(&e.matrix, &m.degrees)).collect();
    if end.len() <= 1 {
        return Ok(None);
    }
    let f = Gf::prime(p).unwrap();
    for _ in 0..SPLIT_TRIES {
        let coeffs: Vec<u32> = end.iter().map(|_| rng.gen_range(0..p)).collect();
        let mut a = PMat::zeros(m.rank(), m.rank(), m.nvars, p);
        let mut abar = Mat::zeros(m.rank(), m.rank());
        for ((e, b), &c) in end.iter().zip(&bars).zip(&coeffs) {
            if c != 0 {
                a = a.add(&e.matrix.scale(c as i64));
                abar = abar.add(&f, &b.scale(&f, c));
            }
        }
        let mp = minpoly(&abar, p);
        if let Some((g1, g2)) = mp.coprime_split() {
            let (_, _, v) = g1.ext_gcd(&g2);
            let proj = v.mul(&g2);
            return lift_idempotent(poly_at(&proj, &a)).map(Some);
        }
    }
    if is_local(&bars, p) {
        Ok(None)
    } else {
        Err(Error::Decomposition(format!("no splitting found after {SPLIT_TRIES} tries")))
    }
}

/// The summand `e·M` in its own basis.
pub fn extract(m: &SBimObject, e: &PMat) -> Result<SBimObject> {
    let p = m.p;
    let f = Gf::prime(p).unwrap();
    let ebar = constant_part(e, &m.degrees);
    let mut rows_sel = Vec::new();
    let mut cols_sel = Vec::new();
    let mut degs: Vec<i32> = m.degrees.clone();
    degs.sort_unstable();
    degs.dedup();
    for d in degs {
        let idx: Vec<usize> = (0..m.rank()).filter(|&a| m.degrees[a] == d).collect();
        let block: Vec<Vec<u32>> = idx.iter().map(|&a| idx.iter().map(|&b| ebar.get(a, b)).collect()).collect();
        let mut ech = Echelon::new(idx.len());
        let chosen: Vec<usize> = (0..idx.len()).filter(|&i| ech.insert(&f, &block[i])).collect();
        if chosen.is_empty() {
            continue;
        }
        let sub: Vec<Vec<u32>> = chosen.iter().map(|&i| block[i].clone()).collect();
        let mut sm = Mat::from_rows(&sub, idx.len());
        let pivots = sm.rref(&f);
        rows_sel.extend(chosen.iter().map(|&i| idx[i]));
        cols_sel.extend(pivots.iter().map(|&j| idx[j]));
    }
    let all: Vec<usize> = (0..m.rank()).collect();
    let e_aj = e.submatrix(&rows_sel, &cols_sel);
    let g = e.submatrix(&all, &cols_sel).mul(&e_aj.inverse_const_pivot()?);
    let e_a = e.submatrix(&rows_sel, &all);
    let action: Vec<PMat> = m.action.iter().map(|x| e_a.mul(x).mul(&g)).collect();
    let degrees: Vec<i32> = rows_sel.iter().map(|&a| m.degrees[a]).collect();
    let n = degrees.len();
    let mut loc: Vec<LocVec> = Vec::new();
    let mut kept: Vec<Vec<GradedPoly>> = Vec::new();
    let mut labels: Vec<ExtWeylElt> = m.loc.iter().map(|l| l.label.clone()).collect();
    labels.sort();
    labels.dedup();
    for x in labels {
        kept.clear();
        for l in m.loc.iter().filter(|l| l.label == x) {
            let v = g.vec_mul(&l.vec);
            if v.iter().all(|c| c.is_zero()) {
                continue;
            }
            kept.push(v.clone());
            if qlin::rank(&kept, n, m.nvars, p) < kept.len() {
                kept.pop();
                continue;
            }
            loc.push(LocVec { label: x.clone(), vec: v, degree: l.degree });
        }
    }
    if loc.len() != n {
        return Err(Error::Decomposition(format!("summand of rank {n} has {} localized vectors", loc.len())));
    }
    Ok(SBimObject { nvars: m.nvars, p, degrees, action, loc })
}

/// Top label (maximal length, then maximal in the fixed order) and the shift read from its coefficient.
fn normalize(character: &HeckeElt, datum: &RootDatum) -> Result<(ExtWeylElt, i32)> {
    let (top, c) = character
        .terms()
        .iter()
        .max_by_key(|(x, _)| (datum.length(x), (*x).clone()))
        .ok_or_else(|| Error::Decomposition("empty character".into()))?;
    let terms: Vec<_> = c.terms().collect();
    if terms.len() != 1 || terms[0].1 != 1 {
        return Err(Error::Decomposition(format!("top coefficient {c} is not a power of v")));
    }
    Ok((top.clone(), terms[0].0))
}

fn into_summand(object: SBimObject, datum: &RootDatum) -> Result<Summand> {
    let c = ch(&object, datum)?;
    let (top, shift) = normalize(&c, datum)?;
    let character = c.scale(&LaurentInt::monomial(1, -shift));
    Ok(Summand { object, character, shift, top })
}

/// Splits `m` into indecomposables, recursing only into parts accepted by `keep`.
pub fn decompose_filtered<F>(m: &SBimObject, datum: &RootDatum, seed: u64, keep: F) -> Result<Vec<Summand>>
where
    F: Fn(&SBimObject) -> bool,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stack = vec![m.clone()];
    let mut done = Vec::new();
    while let Some(cur) = stack.pop() {
        match find_idempotent(&cur, &mut rng)? {
            None => done.push(into_summand(cur, datum)?),
            Some(e) => {
                let id = PMat::identity(cur.rank(), cur.nvars, cur.p);
                for part in [extract(&cur, &e)?, extract(&cur, &id.sub(&e))?] {
                    if keep(&part) {
                        stack.push(part);
                    }
                }
            }
        }
    }
    done.sort_by_key(|s| (datum.length(&s.top), s.top.clone(), s.shift));
    Ok(done)
}

/// Full decomposition, certified by additivity of characters.
pub fn decompose(m: &SBimObject, datum: &RootDatum, seed: u64) -> Result<Vec<Summand>> {
    let parts = decompose_filtered(m, datum, seed, |_| true)?;
    let total =
        parts.iter().fold(HeckeElt::zero(), |acc, s| acc.add(&s.character.scale(&LaurentInt::monomial(1, s.shift))));
    if total != ch(m, datum)? {
        return Err(Error::Decomposition("summand characters do not add up".into()));
    }
    Ok(parts)
}

/// Groups summands into `(representative, shift, multiplicity)` by character and shift.
pub fn group(parts: &[Summand]) -> Vec<(Summand, i32, usize)> {
    let mut out: Vec<(Summand, i32, usize)> = Vec::new();
    for s in parts {
        match out.iter_mut().find(|(r, sh, _)| r.character == s.character && *sh == s.shift) {
            Some(entry) => entry.2 += 1,
            None => out.push((s.clone(), s.shift, 1)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realization::Realization;

    #[test]
    fn bs_squared_splits_in_two_shifts() {
        let d = RootDatum::a1(5).unwrap();
        let real = Realization::new(&d).unwrap();
        let b = SBimObject::bs_gen(&real, 1);
        let parts = decompose(&b.tensor(&b), &d, 1).unwrap();
        assert_eq!(parts.len(), 2);
        let mut shifts: Vec<i32> = parts.iter().map(|s| s.shift).collect();
        shifts.sort();
        assert_eq!(shifts, vec![-1, 1]);
        for s in &parts {
            assert_eq!(s.top, d.gen(1));
            assert_eq!(s.object.rank(), 2);
        }
    }

    #[test]
    fn indecomposable_stays_whole() {
        let d = RootDatum::a1(5).unwrap();
        let real = Realization::new(&d).unwrap();
        let m = SBimObject::bott_samelson(&real, &[1, 0]);
        let parts = decompose(&m, &d, 7).unwrap();
        assert_eq!(parts.len(), 1);
    }
}
