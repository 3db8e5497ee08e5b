//! Matrices with entries in R.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{inv_mod, GradedPoly};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PMat {
    pub rows: usize,
    pub cols: usize,
    pub nvars: usize,
    pub p: u32,
    pub data: Vec<GradedPoly>,
}

impl PMat {
    pub fn zeros(rows: usize, cols: usize, nvars: usize, p: u32) -> PMat {
        PMat { rows, cols, nvars, p, data: vec![GradedPoly::zero(nvars, p); rows * cols] }
    }

    pub fn identity(n: usize, nvars: usize, p: u32) -> PMat {
        let mut m = PMat::zeros(n, n, nvars, p);
        for i in 0..n {
            m.set(i, i, GradedPoly::one(nvars, p));
        }
        m
    }

    pub fn scalar(n: usize, f: &GradedPoly) -> PMat {
        let mut m = PMat::zeros(n, n, f.nvars(), f.p());
        for i in 0..n {
            m.set(i, i, f.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GradedPoly>>, cols: usize, nvars: usize, p: u32) -> PMat {
        let r = rows.len();
        let data: Vec<GradedPoly> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), r * cols);
        PMat { rows: r, cols, nvars, p, data }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &GradedPoly {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: GradedPoly) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<GradedPoly> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, o: &PMat) -> PMat {
        assert_eq!(self.cols, o.rows);
        let mut out = PMat::zeros(self.rows, o.cols, self.nvars, self.p);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = out.data[idx].add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &PMat) -> PMat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect();
        PMat { data, ..self.clone_shape() }
    }

    pub fn sub(&self, o: &PMat) -> PMat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect();
        PMat { data, ..self.clone_shape() }
    }

    pub fn scale(&self, c: i64) -> PMat {
        PMat { data: self.data.iter().map(|a| a.scale(c)).collect(), ..self.clone_shape() }
    }

    pub fn scale_poly(&self, f: &GradedPoly) -> PMat {
        PMat { data: self.data.iter().map(|a| a.mul(f)).collect(), ..self.clone_shape() }
    }

    fn clone_shape(&self) -> PMat {
        PMat { rows: self.rows, cols: self.cols, nvars: self.nvars, p: self.p, data: Vec::new() }
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[GradedPoly]) -> Vec<GradedPoly> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![GradedPoly::zero(self.nvars, self.p); self.cols];
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let b = self.get(i, j);
                if !b.is_zero() {
                    *o = o.add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PMat {
        let data = rows.iter().flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone())).collect();
        PMat { rows: rows.len(), cols: cols.len(), nvars: self.nvars, p: self.p, data }
    }

    pub fn block_diag(blocks: &[&PMat]) -> PMat {
        let (nvars, p) = (blocks[0].nvars, blocks[0].p);
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = PMat::zeros(r, c, nvars, p);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Inverse by Gauss–Jordan with nonzero constant pivots.
    pub fn inverse_const_pivot(&self) -> Result<PMat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let p = self.p;
        let mut a = self.clone();
        let mut inv = PMat::identity(n, self.nvars, p);
        for c in 0..n {
            let pr = (c..n)
                .find(|&i| {
                    let x = a.get(i, c);
                    !x.is_zero() && x.is_constant()
                })
                .ok_or_else(|| Error::Precondition("matrix has no constant pivot".into()))?;
            for m in [&mut a, &mut inv] {
                for j in 0..n {
                    m.data.swap(pr * n + j, c * n + j);
                }
            }
            let k = inv_mod(p, a.get(c, c).constant_term()) as i64;
            for m in [&mut a, &mut inv] {
                for j in 0..n {
                    let v = m.get(c, j).scale(k);
                    m.set(c, j, v);
                }
            }
            for i in 0..n {
                if i == c || a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c).clone();
                for m in [&mut a, &mut inv] {
                    for j in 0..n {
                        let v = m.get(i, j).sub(&f.mul(m.get(c, j)));
                        m.set(i, j, v);
                    }
                }
            }
        }
        Ok(inv)
    }
}

/// Evaluates `f` at the commuting matrices `mats` (one per variable), caching powers.
pub struct MatEvaluator<'a> {
    mats: &'a [PMat],
    powers: Vec<Vec<PMat>>,
}

impl<'a> MatEvaluator<'a> {
    pub fn new(mats: &'a [PMat]) -> MatEvaluator<'a> {
        let n = mats[0].rows;
        let id = PMat::identity(n, mats[0].nvars, mats[0].p);
        MatEvaluator { mats, powers: mats.iter().map(|m| vec![id.clone(), m.clone()]).collect() }
    }

    fn power(&mut self, i: usize, e: usize) -> &PMat {
        while self.powers[i].len() <= e {
            let next = self.powers[i].last().unwrap().mul(&self.mats[i]);
            self.powers[i].push(next);
        }
        &self.powers[i][e]
    }

    pub fn eval(&mut self, f: &GradedPoly) -> PMat {
        let m0 = &self.mats[0];
        let (n, nv, p) = (m0.rows, m0.nvars, m0.p);
        let mut acc = PMat::zeros(n, n, nv, p);
        for &(m, c) in f.terms() {
            let mut t = PMat::scalar(n, &GradedPoly::constant(nv, p, c as i64));
            for i in 0..self.mats.len() {
                let e = m.exp(i) as usize;
                if e > 0 {
                    t = t.mul(self.power(i, e));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn const_pivot_inverse() {
        let x = GradedPoly::var(1, 5, 0);
        let one = GradedPoly::one(1, 5);
        let z = GradedPoly::zero(1, 5);
        let m = PMat::from_rows(vec![vec![one.clone(), z.clone()], vec![x.clone(), one.scale(2)]], 2, 1, 5);
        let inv = m.inverse_const_pivot().unwrap();
        assert_eq!(m.mul(&inv), PMat::identity(2, 1, 5));
    }

    #[test]
    fn evaluator_matches_products() {
        let x = GradedPoly::var(1, 7, 0);
        let one = GradedPoly::one(1, 7);
        let z = GradedPoly::zero(1, 7);
        let a = PMat::from_rows(vec![vec![x.clone(), one.clone()], vec![z.clone(), x.neg()]], 2, 1, 7);
        let mats = [a.clone()];
        let mut ev = MatEvaluator::new(&mats);
        let f = x.pow(3).add(&x.scale(2));
        let expect = a.mul(&a).mul(&a).add(&a.scale(2));
        assert_eq!(ev.eval(&f), expect);
    }
}
