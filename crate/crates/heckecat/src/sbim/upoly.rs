//! Dense univariate polynomials over F_p, coefficients from low to high degree.

use crate::linalg::Mat;
use crate::poly::inv_mod;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    pub p: u32,
    pub c: Vec<u32>,
}

impl UPoly {
    pub fn new(p: u32, mut c: Vec<u32>) -> UPoly {
        while c.last() == Some(&0) {
            c.pop();
        }
        UPoly { p, c }
    }

    pub fn one(p: u32) -> UPoly {
        UPoly::new(p, vec![1])
    }

    pub fn x(p: u32) -> UPoly {
        UPoly::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        let c = (0..n).map(|i| (self.c.get(i).unwrap_or(&0) + o.c.get(i).unwrap_or(&0)) % self.p).collect();
        UPoly::new(self.p, c)
    }

    pub fn scale(&self, k: u32) -> UPoly {
        UPoly::new(self.p, self.c.iter().map(|&a| ((a as u64 * k as u64) % self.p as u64) as u32).collect())
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        self.add(&o.scale(self.p - 1))
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::new(self.p, vec![]);
        }
        let p = self.p as u64;
        let mut c = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in o.c.iter().enumerate() {
                c[i + j] = (c[i + j] + a as u64 * b as u64) % p;
            }
        }
        UPoly::new(self.p, c.into_iter().map(|x| x as u32).collect())
    }

    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.deg().expect("division by zero polynomial");
        let li = inv_mod(self.p, d.c[dd]);
        let mut r = self.clone();
        let mut q = vec![0u32; self.c.len().saturating_sub(dd).max(1)];
        while let Some(rd) = r.deg() {
            if rd < dd {
                break;
            }
            let k = ((r.c[rd] as u64 * li as u64) % self.p as u64) as u32;
            q[rd - dd] = k;
            let mut sh = vec![0u32; rd - dd];
            sh.extend(d.scale(k).c);
            r = r.sub(&UPoly::new(self.p, sh));
        }
        (UPoly::new(self.p, q), r)
    }

    pub fn monic(&self) -> UPoly {
        match self.deg() {
            None => self.clone(),
            Some(d) => self.scale(inv_mod(self.p, self.c[d])),
        }
    }

    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, u, v)` with `u·self + v·o = g = gcd`.
    pub fn ext_gcd(&self, o: &UPoly) -> (UPoly, UPoly, UPoly) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut u0, mut u1) = (UPoly::one(p), UPoly::new(p, vec![]));
        let (mut v0, mut v1) = (UPoly::new(p, vec![]), UPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            (r0, r1) = (r1, r);
            let nu = u0.sub(&q.mul(&u1));
            (u0, u1) = (u1, nu);
            let nv = v0.sub(&q.mul(&v1));
            (v0, v1) = (v1, nv);
        }
        let k = inv_mod(p, *r0.c.last().unwrap());
        (r0.scale(k), u0.scale(k), v0.scale(k))
    }

    pub fn eval(&self, x: u32) -> u32 {
        let p = self.p as u64;
        self.c.iter().rev().fold(0u64, |acc, &a| (acc * x as u64 + a as u64) % p) as u32
    }

    /// `x^(p^k) mod self`.
    pub fn frobenius_power(&self, k: u32) -> UPoly {
        let mut r = UPoly::x(self.p).divrem(self).1;
        for _ in 0..k {
            let mut acc = UPoly::one(self.p);
            let mut base = r.clone();
            let mut e = self.p;
            while e > 0 {
                if e & 1 == 1 {
                    acc = acc.mul(&base).divrem(self).1;
                }
                base = base.mul(&base).divrem(self).1;
                e >>= 1;
            }
            r = acc;
        }
        r
    }

    /// A factorization `self = f·g` into coprime factors of positive degree, if one is found.
    pub fn coprime_split(&self) -> Option<(UPoly, UPoly)> {
        let m = self.monic();
        let deg = m.deg()?;
        for a in 0..self.p {
            if m.eval(a) != 0 {
                continue;
            }
            let lin = UPoly::new(self.p, vec![self.p - a, 1]).monic();
            let mut f = UPoly::one(self.p);
            let mut rest = m.clone();
            loop {
                let (q, r) = rest.divrem(&lin);
                if !r.is_zero() {
                    break;
                }
                f = f.mul(&lin);
                rest = q;
            }
            if rest.deg().unwrap_or(0) > 0 {
                return Some((f, rest));
            }
        }
        for k in 1..=deg as u32 {
            let h = m.frobenius_power(k).sub(&UPoly::x(self.p));
            let g = m.gcd(&h);
            let gd = g.deg().unwrap_or(0);
            if gd > 0 && gd < deg {
                let mut f = g.clone();
                let mut rest = m.divrem(&g).0;
                loop {
                    let c = rest.gcd(&g);
                    if c.deg().unwrap_or(0) == 0 {
                        break;
                    }
                    f = f.mul(&c);
                    rest = rest.divrem(&c).0;
                }
                if rest.deg().unwrap_or(0) > 0 {
                    return Some((f, rest));
                }
            }
        }
        None
    }
}

/// Minimal polynomial of a square matrix over F_p (Krylov on all basis vectors).
pub fn minpoly(a: &Mat, p: u32) -> UPoly {
    let f = crate::field::Gf::prime(p).unwrap();
    let n = a.rows;
    let mut result = UPoly::one(p);
    for start in 0..n {
        let mut e = vec![0u32; n];
        e[start] = 1;
        let v = result.eval_mat_vec(a, &e, &f);
        if v.iter().all(|&x| x == 0) {
            continue;
        }
        let mut krylov = vec![v.clone()];
        let mut cur = v;
        let local = loop {
            cur = a.apply(&f, &cur);
            let m = Mat::from_rows(&krylov, n).transpose();
            if let Some(sol) = m.solve(&f, &cur) {
                let mut c: Vec<u32> = sol.iter().map(|&x| f.neg(x)).collect();
                c.push(1);
                break UPoly::new(p, c);
            }
            krylov.push(cur.clone());
        };
        result = result.mul(&local);
    }
    result.monic()
}

impl UPoly {
    fn eval_mat_vec(&self, a: &Mat, v: &[u32], f: &crate::field::Gf) -> Vec<u32> {
        let mut acc = vec![0u32; v.len()];
        for &c in self.c.iter().rev() {
            acc = a.apply(f, &acc);
            for (x, &y) in acc.iter_mut().zip(v) {
                *x = f.add(*x, f.mul(c, y));
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ext_gcd_identity() {
        let p = 7;
        let a = UPoly::new(p, vec![1, 0, 1]);
        let b = UPoly::new(p, vec![6, 1]);
        let (g, u, v) = a.ext_gcd(&b);
        assert_eq!(u.mul(&a).add(&v.mul(&b)), g);
        assert_eq!(g, UPoly::one(p));
    }

    #[test]
    fn splits_and_minpoly() {
        let p = 5;
        let m = UPoly::new(p, vec![0, 0, 1]).mul(&UPoly::new(p, vec![2, 0, 1]));
        let (f, g) = m.coprime_split().unwrap();
        assert_eq!(f.mul(&g).monic(), m.monic());
        assert_eq!(f.gcd(&g), UPoly::one(p));
        let a = Mat::from_rows(&[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 3]], 3);
        let mp = minpoly(&a, p);
        assert_eq!(mp.deg(), Some(3));
        let b = Mat::from_rows(&[vec![2, 0], vec![0, 2]], 2);
        assert_eq!(minpoly(&b, p), UPoly::new(p, vec![3, 1]));
    }
}
