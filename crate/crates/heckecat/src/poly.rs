//! Sparse polynomials over F_p in up to eight variables, graded with generators in degree 2.

use std::cmp::Ordering;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

pub const MAX_VARS: usize = 8;

/// Exponent vector packed into bytes; variable 0 occupies the most significant byte.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono(pub u64);

impl Mono {
    pub const ONE: Mono = Mono(0);

    pub fn var(i: usize) -> Mono {
        Mono(1u64 << (8 * (MAX_VARS - 1 - i)))
    }

    pub fn from_exps(exps: &[u32]) -> Mono {
        assert!(exps.len() <= MAX_VARS);
        let mut m = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            assert!(e < 256, "exponent overflow");
            m |= (e as u64) << (8 * (MAX_VARS - 1 - i));
        }
        Mono(m)
    }

    #[inline]
    pub fn exp(self, i: usize) -> u32 {
        ((self.0 >> (8 * (MAX_VARS - 1 - i))) & 0xff) as u32
    }

    pub fn exps(self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exp(i)).collect()
    }

    #[inline]
    pub fn tdeg(self) -> u32 {
        self.0.to_le_bytes().iter().map(|&b| b as u32).sum()
    }

    #[inline]
    pub fn mul(self, other: Mono) -> Mono {
        debug_assert!((0..MAX_VARS).all(|i| self.exp(i) + other.exp(i) < 256));
        Mono(self.0 + other.0)
    }

    pub fn divides(self, other: Mono) -> bool {
        (0..MAX_VARS).all(|i| self.exp(i) <= other.exp(i))
    }

    pub fn div(self, other: Mono) -> Mono {
        debug_assert!(other.divides(self));
        Mono(self.0 - other.0)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.tdeg(), self.0).cmp(&(other.tdeg(), other.0))
    }
}
impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree `d` in `nvars` variables, in decreasing order.
pub fn monomials_of_tdeg(nvars: usize, d: u32) -> Vec<Mono> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Mono>) {
        if i + 1 == exps.len() {
            exps[i] = left;
            out.push(Mono::from_exps(exps));
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e;
            rec(i + 1, left - e, exps, out);
        }
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Mono::ONE);
        }
        return out;
    }
    rec(0, d, &mut exps, &mut out);
    out
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "PolyRepr", from = "PolyRepr")]
pub struct GradedPoly {
    nvars: u8,
    p: u32,
    /// Sorted by decreasing monomial; coefficients nonzero residues mod p.
    terms: Vec<(Mono, u32)>,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    nvars: u8,
    p: u32,
    terms: Vec<(Vec<u32>, u32)>,
}

impl From<GradedPoly> for PolyRepr {
    fn from(f: GradedPoly) -> Self {
        let n = f.nvars as usize;
        PolyRepr { nvars: f.nvars, p: f.p, terms: f.terms.iter().map(|&(m, c)| (m.exps(n), c)).collect() }
    }
}

impl From<PolyRepr> for GradedPoly {
    fn from(r: PolyRepr) -> Self {
        GradedPoly::from_terms(r.nvars as usize, r.p, r.terms.into_iter().map(|(e, c)| (Mono::from_exps(&e), c as i64)))
    }
}

#[inline]
fn addp(p: u32, a: u32, b: u32) -> u32 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn mulp(p: u32, a: u32, b: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub fn inv_mod(p: u32, a: u32) -> u32 {
    assert!(a % p != 0, "inverse of zero mod {p}");
    let (mut t, mut nt, mut r, mut nr) = (0i64, 1i64, p as i64, (a % p) as i64);
    while nr != 0 {
        let q = r / nr;
        (t, nt) = (nt, t - q * nt);
        (r, nr) = (nr, r - q * nr);
    }
    t.rem_euclid(p as i64) as u32
}

impl GradedPoly {
    pub fn zero(nvars: usize, p: u32) -> GradedPoly {
        assert!(nvars <= MAX_VARS);
        GradedPoly { nvars: nvars as u8, p, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, p: u32, c: i64) -> GradedPoly {
        GradedPoly::monomial(nvars, p, Mono::ONE, c)
    }

    pub fn one(nvars: usize, p: u32) -> GradedPoly {
        GradedPoly::constant(nvars, p, 1)
    }

    pub fn var(nvars: usize, p: u32, i: usize) -> GradedPoly {
        assert!(i < nvars);
        GradedPoly::monomial(nvars, p, Mono::var(i), 1)
    }

    pub fn monomial(nvars: usize, p: u32, m: Mono, c: i64) -> GradedPoly {
        let c = c.rem_euclid(p as i64) as u32;
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        GradedPoly { nvars: nvars as u8, p, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, i64)>>(nvars: usize, p: u32, it: I) -> GradedPoly {
        let mut terms: Vec<(Mono, u32)> = it.into_iter().map(|(m, c)| (m, c.rem_euclid(p as i64) as u32)).collect();
        normalize(p, &mut terms);
        GradedPoly { nvars: nvars as u8, p, terms }
    }

    /// Linear form Σ c_i x_i.
    pub fn linear(p: u32, coeffs: &[i64]) -> GradedPoly {
        GradedPoly::from_terms(coeffs.len(), p, coeffs.iter().enumerate().map(|(i, &c)| (Mono::var(i), c)))
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }
    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn terms(&self) -> &[(Mono, u32)] {
        &self.terms
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| *m == Mono::ONE)
    }

    pub fn constant_term(&self) -> u32 {
        self.coeff(Mono::ONE)
    }

    pub fn coeff(&self, m: Mono) -> u32 {
        self.terms.binary_search_by(|(x, _)| m.cmp(x)).map(|i| self.terms[i].1).unwrap_or(0)
    }

    pub fn leading(&self) -> Option<(Mono, u32)> {
        self.terms.first().copied()
    }

    pub fn max_tdeg(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.tdeg()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.tdeg() == m0.tdeg()),
        }
    }

    /// Degree in the grading with generators in degree 2; `None` for zero or inhomogeneous input.
    pub fn degree(&self) -> Option<i32> {
        if self.is_zero() || !self.is_homogeneous() {
            None
        } else {
            Some(2 * self.terms[0].0.tdeg() as i32)
        }
    }

    /// Degree in a single variable.
    pub fn var_degree(&self, i: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.exp(i)).max()
    }

    pub fn add(&self, other: &GradedPoly) -> GradedPoly {
        debug_assert_eq!(self.p, other.p);
        let p = self.p;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let c = addp(p, a[i].1, b[j].1);
                    if c != 0 {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        GradedPoly { nvars: self.nvars.max(other.nvars), p, terms: out }
    }

    pub fn neg(&self) -> GradedPoly {
        let p = self.p;
        GradedPoly { nvars: self.nvars, p, terms: self.terms.iter().map(|&(m, c)| (m, p - c)).collect() }
    }

    pub fn sub(&self, other: &GradedPoly) -> GradedPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: i64) -> GradedPoly {
        let c = c.rem_euclid(self.p as i64) as u32;
        if c == 0 {
            return GradedPoly::zero(self.nvars(), self.p);
        }
        let p = self.p;
        GradedPoly { nvars: self.nvars, p, terms: self.terms.iter().map(|&(m, x)| (m, mulp(p, x, c))).collect() }
    }

    pub fn mul_mono(&self, m: Mono, c: u32) -> GradedPoly {
        if c % self.p == 0 {
            return GradedPoly::zero(self.nvars(), self.p);
        }
        let p = self.p;
        GradedPoly { nvars: self.nvars, p, terms: self.terms.iter().map(|&(t, x)| (t.mul(m), mulp(p, x, c))).collect() }
    }

    pub fn mul(&self, other: &GradedPoly) -> GradedPoly {
        let p = self.p;
        if self.is_zero() || other.is_zero() {
            return GradedPoly::zero(self.nvars().max(other.nvars()), p);
        }
        if other.terms.len() == 1 {
            let (m, c) = other.terms[0];
            let mut r = self.mul_mono(m, c);
            r.nvars = self.nvars.max(other.nvars);
            return r;
        }
        if self.terms.len() == 1 {
            return other.mul(self);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &(m1, c1) in &self.terms {
            for &(m2, c2) in &other.terms {
                terms.push((m1.mul(m2), mulp(p, c1, c2)));
            }
        }
        normalize(p, &mut terms);
        GradedPoly { nvars: self.nvars.max(other.nvars), p, terms }
    }

    pub fn pow(&self, e: u32) -> GradedPoly {
        let mut acc = GradedPoly::one(self.nvars(), self.p);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Ring map sending `x_i` to `images[i]`.
    pub fn substitute(&self, images: &[GradedPoly]) -> GradedPoly {
        assert!(images.len() >= self.nvars());
        let nv = images.iter().map(|g| g.nvars()).max().unwrap_or(self.nvars());
        let mut acc = GradedPoly::zero(nv, self.p);
        let mut powers: Vec<Vec<GradedPoly>> =
            images.iter().map(|g| vec![GradedPoly::one(nv, self.p), g.clone()]).collect();
        for &(m, c) in &self.terms {
            let mut t = GradedPoly::constant(nv, self.p, c as i64);
            for i in 0..self.nvars() {
                let e = m.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e]);
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &GradedPoly) -> Option<GradedPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let p = self.p;
        let (lm, lc) = d.terms[0];
        let lci = inv_mod(p, lc);
        if d.terms.len() == 1 {
            let mut terms = Vec::with_capacity(self.terms.len());
            for &(m, c) in &self.terms {
                if !lm.divides(m) {
                    return None;
                }
                terms.push((m.div(lm), mulp(p, c, lci)));
            }
            return Some(GradedPoly { nvars: self.nvars.max(d.nvars), p, terms });
        }
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading() {
            if !lm.divides(m) {
                return None;
            }
            let qm = m.div(lm);
            let qc = mulp(p, c, lci);
            quot.push((qm, qc));
            rem = rem.sub(&d.mul_mono(qm, qc));
        }
        normalize(p, &mut quot);
        Some(GradedPoly { nvars: self.nvars.max(d.nvars), p, terms: quot })
    }

    /// Homogeneous component of total degree `t`.
    pub fn component(&self, t: u32) -> GradedPoly {
        GradedPoly {
            nvars: self.nvars,
            p: self.p,
            terms: self.terms.iter().copied().filter(|(m, _)| m.tdeg() == t).collect(),
        }
    }

    pub fn random_homogeneous<R: Rng>(nvars: usize, p: u32, tdeg: u32, rng: &mut R) -> GradedPoly {
        GradedPoly::from_terms(
            nvars,
            p,
            monomials_of_tdeg(nvars, tdeg).into_iter().map(|m| (m, rng.gen_range(0..p) as i64)),
        )
    }

    /// Evaluates at a point of F_p^n.
    pub fn eval(&self, point: &[u32]) -> u32 {
        let p = self.p;
        let mut acc = 0;
        for &(m, c) in &self.terms {
            let mut t = c;
            for (i, &x) in point.iter().enumerate() {
                for _ in 0..m.exp(i) {
                    t = mulp(p, t, x);
                }
            }
            acc = addp(p, acc, t);
        }
        acc
    }

    /// Monic normalization by the leading coefficient.
    pub fn monic(&self) -> GradedPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(inv_mod(self.p, c) as i64),
        }
    }
}

fn normalize(p: u32, terms: &mut Vec<(Mono, u32)>) {
    terms.sort_by(|a, b| b.0.cmp(&a.0));
    let mut out: Vec<(Mono, u32)> = Vec::with_capacity(terms.len());
    for &(m, c) in terms.iter() {
        match out.last_mut() {
            Some(last) if last.0 == m => last.1 = addp(p, last.1, c),
            _ => out.push((m, c)),
        }
    }
    out.retain(|&(_, c)| c != 0);
    *terms = out;
}

const VAR_NAMES: [&str; 8] = ["x", "y", "z", "u", "v", "w", "s", "t"];

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names: Vec<String> =
            if self.nvars == 1 { vec!["h".into()] } else { VAR_NAMES.iter().map(|s| s.to_string()).collect() };
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|&(m, c)| {
                let vars: Vec<String> = (0..self.nvars())
                    .filter(|&i| m.exp(i) > 0)
                    .map(|i| if m.exp(i) == 1 { names[i].clone() } else { format!("{}^{}", names[i], m.exp(i)) })
                    .collect();
                if vars.is_empty() {
                    c.to_string()
                } else if c == 1 {
                    vars.join("*")
                } else {
                    format!("{}*{}", c, vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn mono_order_is_graded_lex() {
        let x = Mono::var(0);
        let y = Mono::var(1);
        assert!(x > y);
        assert!(y.mul(y) > x);
        assert!(x.mul(y) > y.mul(y));
        assert_eq!(monomials_of_tdeg(2, 2), vec![x.mul(x), x.mul(y), y.mul(y)]);
    }

    #[test]
    fn ring_operations() {
        let p = 5;
        let x = GradedPoly::var(2, p, 0);
        let y = GradedPoly::var(2, p, 1);
        let f = x.add(&y);
        let g = x.sub(&y);
        let prod = f.mul(&g);
        assert_eq!(prod, x.mul(&x).sub(&y.mul(&y)));
        assert_eq!(prod.degree(), Some(4));
        assert_eq!(prod.div_exact(&f), Some(g.clone()));
        assert_eq!(x.add(&GradedPoly::one(2, p)).div_exact(&y), None);
    }

    #[test]
    fn exact_division_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..30 {
            let a = GradedPoly::random_homogeneous(3, 7, 2, &mut rng);
            let b = GradedPoly::random_homogeneous(3, 7, 3, &mut rng);
            if b.is_zero() {
                continue;
            }
            assert_eq!(a.mul(&b).div_exact(&b), Some(a));
        }
    }

    #[test]
    fn serde_roundtrip() {
        let f = GradedPoly::from_terms(2, 3, [(Mono::from_exps(&[2, 1]), 2), (Mono::ONE, 1)]);
        let s = serde_json::to_string(&f).unwrap();
        let g: GradedPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(f, g);
    }
}
