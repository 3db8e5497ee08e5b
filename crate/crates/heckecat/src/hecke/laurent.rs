use std::fmt;

use serde::{Serialize, Serializer};

/// Laurent polynomial in v with integer coefficients; `coeffs[i]` is the coefficient of `v^(lo+i)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentInt {
    lo: i32,
    coeffs: Vec<i64>,
}

impl LaurentInt {
    pub fn zero() -> LaurentInt {
        LaurentInt::default()
    }

    pub fn one() -> LaurentInt {
        LaurentInt::monomial(1, 0)
    }

    /// `c·v^e`.
    pub fn monomial(c: i64, e: i32) -> LaurentInt {
        LaurentInt { lo: e, coeffs: vec![c] }.canonical()
    }

    pub fn v() -> LaurentInt {
        LaurentInt::monomial(1, 1)
    }

    pub fn from_coeffs(lo: i32, coeffs: Vec<i64>) -> LaurentInt {
        LaurentInt { lo, coeffs }.canonical()
    }

    fn canonical(mut self) -> LaurentInt {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        self.coeffs.drain(..lead);
        self.lo += lead as i32;
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i32) -> i64 {
        let i = e - self.lo;
        if i < 0 || i as usize >= self.coeffs.len() {
            0
        } else {
            self.coeffs[i as usize]
        }
    }

    pub fn min_deg(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.lo)
    }

    pub fn max_deg(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.lo + self.coeffs.len() as i32 - 1)
    }

    /// Nonzero terms as `(exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(move |(i, &c)| (self.lo + i as i32, c))
    }

    pub fn add(&self, o: &LaurentInt) -> LaurentInt {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(o.lo);
        let hi = self.max_deg().unwrap().max(o.max_deg().unwrap());
        let coeffs = (lo..=hi).map(|e| self.coeff(e) + o.coeff(e)).collect();
        LaurentInt { lo, coeffs }.canonical()
    }

    pub fn neg(&self) -> LaurentInt {
        LaurentInt { lo: self.lo, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, o: &LaurentInt) -> LaurentInt {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: i64) -> LaurentInt {
        LaurentInt { lo: self.lo, coeffs: self.coeffs.iter().map(|x| x * c).collect() }.canonical()
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> LaurentInt {
        if self.is_zero() {
            return self.clone();
        }
        LaurentInt { lo: self.lo + k, coeffs: self.coeffs.clone() }
    }

    pub fn mul(&self, o: &LaurentInt) -> LaurentInt {
        if self.is_zero() || o.is_zero() {
            return LaurentInt::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentInt { lo: self.lo + o.lo, coeffs }.canonical()
    }

    pub fn pow(&self, n: u32) -> LaurentInt {
        (0..n).fold(LaurentInt::one(), |acc, _| acc.mul(self))
    }

    /// v ↦ v⁻¹.
    pub fn bar(&self) -> LaurentInt {
        if self.is_zero() {
            return self.clone();
        }
        let hi = self.max_deg().unwrap();
        LaurentInt { lo: -hi, coeffs: self.coeffs.iter().rev().copied().collect() }
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }
}

impl fmt::Display for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let a = c.abs();
            let body = match (e, a) {
                (0, a) => a.to_string(),
                (1, 1) => "v".into(),
                (1, a) => format!("{a}v"),
                (e, 1) => format!("v^{e}"),
                (e, a) => format!("{a}v^{e}"),
            };
            if first {
                write!(f, "{sign}{body}")?;
            } else {
                write!(f, " {sign} {body}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for LaurentInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let v = LaurentInt::v();
        let vi = v.bar();
        let q = v.add(&vi);
        assert_eq!(q.mul(&q).to_string(), "v^-2 + 2 + v^2");
        assert_eq!(q.sub(&q), LaurentInt::zero());
        assert_eq!(vi.sub(&v).to_string(), "v^-1 - v");
        assert_eq!(q.eval_at_one(), 2);
        assert_eq!(LaurentInt::monomial(3, -2).bar(), LaurentInt::monomial(3, 2));
    }
}
