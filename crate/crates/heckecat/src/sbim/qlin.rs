//! Linear algebra over the fraction field Q of R for homogeneous matrices.
//!
//! A matrix is homogeneous when entry `(i, j)` has degree `row_deg[i] − col_deg[j]` (or is zero).
//! In one variable such a matrix is a scalar matrix conjugated by powers of the variable.

use crate::field::Gf;
use crate::linalg::Mat;
use crate::poly::{GradedPoly, Mono};
use crate::ratfunc::{rank_q, right_kernel_q, RatFunc};

fn scalar_of(f: &GradedPoly) -> u32 {
    match f.terms() {
        [] => 0,
        [(_, c)] => *c,
        _ => panic!("univariate homogeneous entry with several terms"),
    }
}

/// Column indices grouped by parity of `col_deg`.
fn parity_classes(col_deg: &[i32]) -> Vec<Vec<usize>> {
    let even: Vec<usize> = (0..col_deg.len()).filter(|&j| col_deg[j].rem_euclid(2) == 0).collect();
    let odd: Vec<usize> = (0..col_deg.len()).filter(|&j| col_deg[j].rem_euclid(2) == 1).collect();
    [even, odd].into_iter().filter(|c| !c.is_empty()).collect()
}

pub fn rank(rows: &[Vec<GradedPoly>], ncols: usize, nvars: usize, p: u32) -> usize {
    if rows.is_empty() || ncols == 0 {
        return 0;
    }
    if nvars == 1 {
        let f = Gf::prime(p).unwrap();
        let data: Vec<Vec<u32>> = rows.iter().map(|r| r.iter().map(scalar_of).collect()).collect();
        return Mat::from_rows(&data, ncols).rank(&f);
    }
    let q: Vec<Vec<RatFunc>> = rows.iter().map(|r| r.iter().map(|x| RatFunc::from_poly(x.clone())).collect()).collect();
    rank_q(&q)
}

/// Basis of `{k : A k = 0}` over Q, as homogeneous polynomial vectors with
/// `deg k_j = e + col_deg[j]` for a per-vector constant `e`.
pub fn right_kernel(
    rows: &[Vec<GradedPoly>],
    ncols: usize,
    col_deg: &[i32],
    nvars: usize,
    p: u32,
) -> Vec<Vec<GradedPoly>> {
    if nvars == 1 {
        let f = Gf::prime(p).unwrap();
        let mut out = Vec::new();
        for class in parity_classes(col_deg) {
            let dmin = class.iter().map(|&j| col_deg[j]).min().unwrap();
            let data: Vec<Vec<u32>> = rows.iter().map(|r| class.iter().map(|&j| scalar_of(&r[j])).collect()).collect();
            let kernel = if data.is_empty() {
                (0..class.len()).map(|i| (0..class.len()).map(|j| (i == j) as u32).collect()).collect()
            } else {
                Mat::from_rows(&data, class.len()).nullspace(&f)
            };
            for kv in kernel {
                let mut v = vec![GradedPoly::zero(1, p); ncols];
                for (idx, &j) in class.iter().enumerate() {
                    let e = ((col_deg[j] - dmin) / 2) as u32;
                    v[j] = GradedPoly::monomial(1, p, Mono::from_exps(&[e]), kv[idx] as i64);
                }
                out.push(v);
            }
        }
        return out;
    }
    let q: Vec<Vec<RatFunc>> = rows.iter().map(|r| r.iter().map(|x| RatFunc::from_poly(x.clone())).collect()).collect();
    right_kernel_q(&q, ncols, nvars, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn univariate_kernel() {
        let p = 5;
        let h = GradedPoly::var(1, p, 0);
        let one = GradedPoly::one(1, p);
        // row (h, 1) with col degrees (0, 2): kernel spanned by (1, −h)
        let rows = vec![vec![h.clone(), one.clone()]];
        let k = right_kernel(&rows, 2, &[0, 2], 1, p);
        assert_eq!(k.len(), 1);
        let s = rows[0][0].mul(&k[0][0]).add(&rows[0][1].mul(&k[0][1]));
        assert!(s.is_zero());
        assert_eq!(rank(&rows, 2, 1, p), 1);
    }
}
