//! The fraction field of R: reduced quotients of polynomials, and linear algebra over it.

use std::fmt;

use crate::poly::{GradedPoly, Mono};

/// Polynomial in one distinguished variable with polynomial coefficients.
fn split_by_var(f: &GradedPoly, var: usize) -> Vec<GradedPoly> {
    let deg = f.var_degree(var).unwrap_or(0) as usize;
    let mut coeffs = vec![Vec::new(); deg + 1];
    for &(m, c) in f.terms() {
        let e = m.exp(var);
        let rest = Mono(m.0 - Mono::var(var).0 * e as u64);
        coeffs[e as usize].push((rest, c as i64));
    }
    coeffs.into_iter().map(|t| GradedPoly::from_terms(f.nvars(), f.p(), t)).collect()
}

fn join_by_var(coeffs: &[GradedPoly], var: usize, nvars: usize, p: u32) -> GradedPoly {
    let mut acc = GradedPoly::zero(nvars, p);
    for (e, c) in coeffs.iter().enumerate() {
        let m = Mono(Mono::var(var).0 * e as u64);
        acc = acc.add(&c.mul(&GradedPoly::monomial(nvars, p, m, 1)));
    }
    acc
}

fn trim(v: &mut Vec<GradedPoly>) {
    while v.len() > 1 && v.last().unwrap().is_zero() {
        v.pop();
    }
}

/// Greatest common divisor, normalized to be monic in the leading monomial.
pub fn gcd(a: &GradedPoly, b: &GradedPoly) -> GradedPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return GradedPoly::one(a.nvars().max(b.nvars()), a.p());
    }
    let nvars = a.nvars().max(b.nvars());
    let var = (0..nvars).find(|&i| a.var_degree(i).unwrap_or(0) > 0 || b.var_degree(i).unwrap_or(0) > 0).unwrap();
    let p = a.p();
    let ca = content(a, var);
    let cb = content(b, var);
    let c = gcd(&ca, &cb);
    let mut f = split_by_var(&a.div_exact(&ca).unwrap(), var);
    let mut g = split_by_var(&b.div_exact(&cb).unwrap(), var);
    trim(&mut f);
    trim(&mut g);
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    while !(g.len() == 1 && g[0].is_zero()) {
        if g.len() == 1 {
            // g is free of `var`, and primitive, hence a unit
            f = vec![GradedPoly::one(nvars, p)];
            break;
        }
        let r = prem(&f, &g);
        f = g;
        g = primitive_part_vec(r);
    }
    let f = join_by_var(&f, var, nvars, p);
    let fp = f.div_exact(&content(&f, var)).unwrap();
    fp.mul(&c).monic()
}

/// Content with respect to `var`: gcd of the coefficients in the other variables.
fn content(f: &GradedPoly, var: usize) -> GradedPoly {
    let coeffs = split_by_var(f, var);
    let mut g = GradedPoly::zero(f.nvars(), f.p());
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        g = gcd(&g, c);
        if g.is_constant() {
            break;
        }
    }
    if g.is_zero() {
        GradedPoly::one(f.nvars(), f.p())
    } else {
        g
    }
}

fn primitive_part_vec(mut r: Vec<GradedPoly>) -> Vec<GradedPoly> {
    trim(&mut r);
    if r.len() == 1 && r[0].is_zero() {
        return r;
    }
    let mut g = GradedPoly::zero(r[0].nvars(), r[0].p());
    for c in r.iter().filter(|c| !c.is_zero()) {
        g = gcd(&g, c);
        if g.is_constant() {
            break;
        }
    }
    r.iter().map(|c| c.div_exact(&g).unwrap()).collect()
}

/// Pseudo-remainder of `f` by `g` as polynomials in the split variable.
fn prem(f: &[GradedPoly], g: &[GradedPoly]) -> Vec<GradedPoly> {
    let mut r = f.to_vec();
    let lg = g.last().unwrap().clone();
    let dg = g.len() - 1;
    while r.len() > dg && !(r.len() == 1 && r[0].is_zero()) {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - dg;
        for c in r.iter_mut() {
            *c = c.mul(&lg);
        }
        for (i, gc) in g.iter().enumerate() {
            r[i + shift] = r[i + shift].sub(&gc.mul(&lr));
        }
        r.pop();
        trim(&mut r);
        if r.is_empty() {
            r.push(GradedPoly::zero(f[0].nvars(), f[0].p()));
        }
    }
    r
}

#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: GradedPoly,
    den: GradedPoly,
}

impl RatFunc {
    /// Reduced quotient; the denominator is made monic.
    pub fn new(num: GradedPoly, den: GradedPoly) -> RatFunc {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc { num, den: GradedPoly::one(den.nvars(), den.p()) };
        }
        let g = gcd(&num, &den);
        let num = num.div_exact(&g).unwrap();
        let den = den.div_exact(&g).unwrap();
        let (_, lc) = den.leading().unwrap();
        let inv = crate::poly::inv_mod(den.p(), lc) as i64;
        RatFunc { num: num.scale(inv), den: den.scale(inv) }
    }

    pub fn from_poly(f: GradedPoly) -> RatFunc {
        let one = GradedPoly::one(f.nvars(), f.p());
        RatFunc { num: f, den: one }
    }

    pub fn zero(nvars: usize, p: u32) -> RatFunc {
        RatFunc::from_poly(GradedPoly::zero(nvars, p))
    }

    pub fn num(&self) -> &GradedPoly {
        &self.num
    }
    pub fn den(&self) -> &GradedPoly {
        &self.den
    }
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::new(self.num.add(&o.num), self.den.clone());
        }
        RatFunc::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> RatFunc {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &RatFunc) -> RatFunc {
        self.mul(&o.inv())
    }

    /// Re-reduces; a no-op on values produced by this module.
    pub fn reduce(&self) -> RatFunc {
        RatFunc::new(self.num.clone(), self.den.clone())
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Gaussian elimination over Q on a row-major matrix; returns (reduced rows, pivot columns).
pub fn rref_q(rows: &[Vec<RatFunc>]) -> (Vec<Vec<RatFunc>>, Vec<usize>) {
    let mut m: Vec<Vec<RatFunc>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        // prefer a pivot with constant numerator to limit growth
        let cand: Vec<usize> = (r..m.len()).filter(|&i| !m[i][c].is_zero()).collect();
        let Some(&pr) = cand.iter().min_by_key(|&&i| (m[i][c].num().len() + m[i][c].den().len(), i)) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].inv();
        for j in c..ncols {
            m[r][j] = m[r][j].mul(&inv);
        }
        for i in 0..m.len() {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let factor = m[i][c].clone();
            for j in c..ncols {
                if !m[r][j].is_zero() {
                    m[i][j] = m[i][j].sub(&factor.mul(&m[r][j]));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank_q(rows: &[Vec<RatFunc>]) -> usize {
    rref_q(rows).1.len()
}

/// Basis of the right kernel `{v : A v = 0}` over Q, with denominators cleared.
pub fn right_kernel_q(rows: &[Vec<RatFunc>], ncols: usize, nvars: usize, p: u32) -> Vec<Vec<GradedPoly>> {
    let (red, pivots) = if rows.is_empty() { (Vec::new(), Vec::new()) } else { rref_q(rows) };
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![RatFunc::zero(nvars, p); ncols];
            v[fc] = RatFunc::from_poly(GradedPoly::one(nvars, p));
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = red[r][fc].neg();
            }
            clear_denominators(&v)
        })
        .collect()
}

/// Multiplies a vector by the lcm of its denominators.
pub fn clear_denominators(v: &[RatFunc]) -> Vec<GradedPoly> {
    let first = &v[0];
    let mut l = GradedPoly::one(first.den().nvars(), first.den().p());
    for x in v {
        let g = gcd(&l, x.den());
        l = l.mul(&x.den().div_exact(&g).unwrap());
    }
    v.iter().map(|x| x.num().mul(&l.div_exact(x.den()).unwrap())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> GradedPoly {
        GradedPoly::var(2, 7, i)
    }

    #[test]
    fn gcd_of_products() {
        let a = x(0).add(&x(1));
        let b = x(0).sub(&x(1).scale(3));
        let c = x(0).mul(&x(1)).add(&GradedPoly::one(2, 7));
        let g = gcd(&a.mul(&b).mul(&c), &a.mul(&c).mul(&c));
        assert_eq!(g, a.mul(&c).monic());
        assert!(gcd(&a, &b).is_constant());
    }

    #[test]
    fn reduction_is_idempotent_and_canonical() {
        let a = x(0).add(&x(1));
        let b = x(0).sub(&x(1));
        let r = RatFunc::new(a.mul(&b).scale(3), b.scale(5));
        assert_eq!(r.reduce(), r);
        assert_eq!(r.den().leading().unwrap().1, 1);
        assert!(r.den().is_constant());
        let s = r.add(&r.neg());
        assert!(s.is_zero());
    }

    #[test]
    fn field_identities() {
        let a = RatFunc::new(x(0), x(1));
        let b = RatFunc::new(x(1).add(&x(0)), x(0).mul(&x(0)));
        let lhs = a.add(&b).mul(&a);
        let rhs = a.mul(&a).add(&b.mul(&a));
        assert_eq!(lhs, rhs);
        assert_eq!(a.div(&a), RatFunc::from_poly(GradedPoly::one(2, 7)));
    }

    #[test]
    fn kernel_over_fraction_field() {
        let q = |f: GradedPoly| RatFunc::from_poly(f);
        let rows = vec![vec![q(x(0)), q(x(1)), q(x(0).mul(&x(1)))]];
        let ker = right_kernel_q(&rows, 3, 2, 7);
        assert_eq!(ker.len(), 2);
        for v in ker {
            let s = x(0).mul(&v[0]).add(&x(1).mul(&v[1])).add(&x(0).mul(&x(1)).mul(&v[2]));
            assert!(s.is_zero());
        }
    }
}
