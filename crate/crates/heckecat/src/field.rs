//! Finite fields GF(p^k) for small p^k, with elements encoded as base-p digit strings.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};

/// Elements are `u32` values in `0..q`; digit `i` (base p) is the coefficient of `x^i`
/// in the polynomial model over the prime field. For `k = 1` the encoding is the residue.
#[derive(Clone)]
pub struct Gf {
    p: u32,
    k: u32,
    q: u32,
    modulus: Arc<Vec<u32>>,
    exp: Arc<Vec<u32>>,
    log: Arc<Vec<u32>>,
}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.k)
    }
}

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k
    }
}
impl Eq for Gf {}

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

impl Gf {
    pub fn prime(p: u32) -> Result<Gf> {
        Gf::new(p, 1)
    }

    pub fn new(p: u32, k: u32) -> Result<Gf> {
        if !is_prime(p) {
            return Err(Error::Precondition(format!("{p} is not prime")));
        }
        if k == 0 || (p as u64).pow(k) > 1 << 16 {
            return Err(Error::Precondition(format!("unsupported field size {p}^{k}")));
        }
        let q = p.pow(k);
        // monic modulus: coefficients c_0..c_{k-1}, leading 1 implicit
        for code in 0..p.pow(k) {
            let coeffs: Vec<u32> = (0..k).map(|i| (code / p.pow(i)) % p).collect();
            if coeffs[0] == 0 && k > 1 {
                continue;
            }
            if let Some((exp, log)) = primitive_tables(p, k, &coeffs) {
                return Ok(Gf { p, k, q, modulus: Arc::new(coeffs), exp: Arc::new(exp), log: Arc::new(log) });
            }
        }
        Err(Error::Precondition(format!("no primitive polynomial for {p}^{k}")))
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn k(&self) -> u32 {
        self.k
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            let d = (a % self.p + b % self.p) % self.p;
            out += d * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.k == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            let d = (self.p - a % self.p) % self.p;
            out += d * place;
            place *= self.p;
            a /= self.p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.k == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        let n = self.q - 1;
        let s = self.log[a as usize] + self.log[b as usize];
        self.exp[(if s >= n { s - n } else { s }) as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in {:?}", self);
        let n = self.q - 1;
        let l = self.log[a as usize];
        self.exp[((n - l) % n) as usize]
    }

    pub fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.q - 1) as u64;
        let l = self.log[a as usize] as u64;
        self.exp[((l * (e % n)) % n) as usize]
    }

    pub fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    /// Inverse of the Frobenius x ↦ x^p.
    pub fn proot(&self, a: u32) -> u32 {
        self.pow(a, (self.q / self.p) as u64)
    }

    /// Artin–Schreier map x ↦ x^p − x.
    pub fn artin_schreier(&self, a: u32) -> u32 {
        self.sub(self.pow(a, self.p as u64), a)
    }

    pub fn in_prime_field(&self, a: u32) -> bool {
        a < self.p
    }

    /// The residue of a prime-field element as an integer in `0..p`.
    pub fn prime_value(&self, a: u32) -> Option<u32> {
        self.in_prime_field(a).then_some(a)
    }

    pub fn primitive_element(&self) -> u32 {
        self.exp[1 % (self.q as usize - 1).max(1)]
    }

    pub fn random<R: Rng>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.q)
    }

    pub fn random_nonzero<R: Rng>(&self, rng: &mut R) -> u32 {
        rng.gen_range(1..self.q)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    pub fn sum<I: IntoIterator<Item = u32>>(&self, it: I) -> u32 {
        it.into_iter().fold(0, |acc, x| self.add(acc, x))
    }

    pub fn format(&self, a: u32) -> String {
        if self.k == 1 {
            return a.to_string();
        }
        let digits: Vec<String> = (0..self.k).map(|i| ((a / self.p.pow(i)) % self.p).to_string()).collect();
        format!("[{}]", digits.join(","))
    }
}

fn primitive_tables(p: u32, k: u32, modulus: &[u32]) -> Option<(Vec<u32>, Vec<u32>)> {
    let q = p.pow(k);
    let n = q - 1;
    let mut exp = vec![0u32; n as usize];
    let mut log = vec![u32::MAX; q as usize];
    if k == 1 {
        // find a primitive root mod p
        'g: for g in 1..p {
            let mut x = 1u32;
            for e in 0..n {
                if e > 0 && x == 1 {
                    continue 'g;
                }
                exp[e as usize] = x;
                x = ((x as u64 * g as u64) % p as u64) as u32;
            }
            if x != 1 {
                continue;
            }
            for e in 0..n {
                log[exp[e as usize] as usize] = e;
            }
            return Some((exp, log));
        }
        return None;
    }
    let mut cur = vec![0u32; k as usize];
    cur[0] = 1;
    for e in 0..n {
        let code = encode(p, &cur);
        if log[code as usize] != u32::MAX {
            return None;
        }
        log[code as usize] = e;
        exp[e as usize] = code;
        // multiply by x modulo the monic modulus
        let top = cur[k as usize - 1];
        for i in (1..k as usize).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        for i in 0..k as usize {
            cur[i] = (cur[i] + (p - modulus[i]) * top) % p;
        }
    }
    if encode(p, &cur) != 1 {
        return None;
    }
    Some((exp, log))
}

fn encode(p: u32, digits: &[u32]) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = Gf::prime(7).unwrap();
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(3), 5);
        assert_eq!(f.neg(2), 5);
        assert_eq!(f.from_i64(-1), 6);
    }

    #[test]
    fn extension_field_axioms() {
        for (p, k) in [(3, 2), (5, 2), (3, 4), (7, 2)] {
            let f = Gf::new(p, k).unwrap();
            let q = f.q();
            for a in 1..q {
                assert_eq!(f.mul(a, f.inv(a)), 1);
                assert_eq!(f.pow(a, (q - 1) as u64), 1);
                assert_eq!(f.add(a, f.neg(a)), 0);
            }
            // distributivity on a sample
            for a in (0..q).step_by(3) {
                for b in (0..q).step_by(5) {
                    let c = (a + 2 * b) % q;
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn frobenius_fixes_prime_field_and_proot_inverts() {
        let f = Gf::new(5, 2).unwrap();
        for a in 0..f.q() {
            let fr = f.pow(a, 5);
            assert_eq!(f.proot(fr), a);
            assert_eq!(fr == a, f.in_prime_field(a));
        }
    }
}
