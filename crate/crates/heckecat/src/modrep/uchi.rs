use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::module::{pow, scalar_of, Sl2Module};
use super::point::{CentralPoint, PointReport};
use super::verma::build_baby_verma;
use crate::error::{Error, Result};
use crate::field::Gf;
use crate::linalg::{Echelon, Mat};

/// The reduced enveloping algebra U_η(sl2) on the PBW basis e^a h^b f^c, 0 ≤ a, b, c < p,
/// with e^p = η(e)^p, h^p = h + η(h)^p, f^p = η(f)^p.
#[derive(Clone, Debug)]
pub struct UChiAlgebra {
    pub point: CentralPoint,
    p: usize,
    eta_p: [u32; 3],
}

pub const E: usize = 0;
pub const H: usize = 1;
pub const F: usize = 2;

impl UChiAlgebra {
    pub fn new(point: &CentralPoint) -> UChiAlgebra {
        let fld = &point.field;
        let p = fld.p() as usize;
        let eta_p = point.eta.map(|x| fld.pow(x, p as u64));
        UChiAlgebra { point: point.clone(), p, eta_p }
    }

    fn fld(&self) -> &Gf {
        &self.point.field
    }

    pub fn dim(&self) -> usize {
        self.p * self.p * self.p
    }

    pub fn index(&self, a: usize, b: usize, c: usize) -> usize {
        (a * self.p + b) * self.p + c
    }

    pub fn monomial(&self, a: usize, b: usize, c: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        v[self.index(a, b, c)] = 1;
        v
    }

    pub fn unit(&self) -> Vec<u32> {
        self.monomial(0, 0, 0)
    }

    fn add_at(&self, out: &mut [u32], a: usize, b: usize, c: usize, x: u32) {
        let fld = self.fld();
        let i = self.index(a, b, c);
        out[i] = fld.add(out[i], x);
    }

    /// Adds x · e^a h^k f^c with k ≤ p.
    fn add_h(&self, out: &mut [u32], a: usize, k: usize, c: usize, x: u32) {
        if k == self.p {
            self.add_at(out, a, 1, c, x);
            self.add_at(out, a, 0, c, self.fld().mul(x, self.eta_p[H]));
        } else {
            self.add_at(out, a, k, c, x);
        }
    }

    /// Adds x · e^a h^b f^k with k ≤ p.
    fn add_f(&self, out: &mut [u32], a: usize, b: usize, k: usize, x: u32) {
        if k == self.p {
            self.add_at(out, a, b, 0, self.fld().mul(x, self.eta_p[F]));
        } else {
            self.add_at(out, a, b, k, x);
        }
    }

    /// Left multiplication by a generator.
    pub fn left_gen(&self, g: usize, v: &[u32]) -> Vec<u32> {
        let fld = self.fld();
        let p = self.p;
        let mut out = vec![0; self.dim()];
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    let x = v[self.index(a, b, c)];
                    if x == 0 {
                        continue;
                    }
                    match g {
                        E => {
                            if a + 1 < p {
                                self.add_at(&mut out, a + 1, b, c, x);
                            } else {
                                self.add_at(&mut out, 0, b, c, fld.mul(x, self.eta_p[E]));
                            }
                        }
                        H => {
                            // h e^a = e^a (h + 2a)
                            self.add_h(&mut out, a, b + 1, c, x);
                            self.add_at(&mut out, a, b, c, fld.mul(x, fld.from_i64(2 * a as i64)));
                        }
                        _ => {
                            // f e^a = e^a f − a e^{a−1}(h + a − 1), f h^b = (h + 2)^b f
                            let mut binom = 1u64;
                            for k in 0..=b {
                                let coeff =
                                    fld.mul(fld.from_i64((binom % p as u64) as i64), fld.pow(2, (b - k) as u64));
                                self.add_f(&mut out, a, k, c + 1, fld.mul(x, coeff));
                                binom = binom * (b - k) as u64 / (k + 1) as u64;
                            }
                            if a > 0 {
                                let nx = fld.neg(fld.mul(x, fld.from_i64(a as i64)));
                                self.add_h(&mut out, a - 1, b + 1, c, nx);
                                self.add_at(&mut out, a - 1, b, c, fld.mul(nx, fld.from_i64(a as i64 - 1)));
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// e^a h^b f^c · v.
    pub fn mul_monomial(&self, a: usize, b: usize, c: usize, v: &[u32]) -> Vec<u32> {
        let mut w = v.to_vec();
        for _ in 0..c {
            w = self.left_gen(F, &w);
        }
        for _ in 0..b {
            w = self.left_gen(H, &w);
        }
        for _ in 0..a {
            w = self.left_gen(E, &w);
        }
        w
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let fld = self.fld();
        let p = self.p;
        let mut out = vec![0; self.dim()];
        if x.iter().filter(|&&c| c != 0).count() <= p {
            for (i, &coeff) in x.iter().enumerate().filter(|(_, &c)| c != 0) {
                let (a, b, c) = (i / (p * p), (i / p) % p, i % p);
                for (o, t) in out.iter_mut().zip(self.mul_monomial(a, b, c, y)) {
                    *o = fld.add(*o, fld.mul(coeff, t));
                }
            }
            return out;
        }
        let mut fy = y.to_vec();
        for c in 0..p {
            let mut hfy = fy.clone();
            for b in 0..p {
                let mut ehfy = hfy.clone();
                for a in 0..p {
                    let coeff = x[self.index(a, b, c)];
                    if coeff != 0 {
                        for (o, &t) in out.iter_mut().zip(&ehfy) {
                            *o = fld.add(*o, fld.mul(coeff, t));
                        }
                    }
                    ehfy = self.left_gen(E, &ehfy);
                }
                hfy = self.left_gen(H, &hfy);
            }
            fy = self.left_gen(F, &fy);
        }
        out
    }

    pub fn generator(&self, g: usize) -> Vec<u32> {
        match g {
            E => self.monomial(1, 0, 0),
            H => self.monomial(0, 1, 0),
            _ => self.monomial(0, 0, 1),
        }
    }

    /// h² + 2h + 4fe.
    pub fn casimir(&self) -> Vec<u32> {
        let fld = self.fld();
        let (e, h, f) = (self.generator(E), self.generator(H), self.generator(F));
        let hh = self.mul(&h, &h);
        let fe = self.mul(&f, &e);
        (0..self.dim()).map(|i| fld.add(fld.add(hh[i], fld.mul(2, h[i])), fld.mul(fld.from_i64(4), fe[i]))).collect()
    }

    pub fn is_central(&self, z: &[u32]) -> bool {
        [E, H, F].iter().all(|&g| {
            let x = self.generator(g);
            self.mul(z, &x) == self.mul(&x, z)
        })
    }

    /// Dimension of U_η / (C − c) U_η.
    pub fn central_quotient_dim(&self, c: u32) -> usize {
        let fld = self.fld();
        let mut z = self.casimir();
        z[0] = fld.sub(z[0], c);
        let mut ech = Echelon::new(self.dim());
        for i in 0..self.dim() {
            let mut u = vec![0; self.dim()];
            u[i] = 1;
            ech.insert(fld, &self.mul(&z, &u));
        }
        self.dim() - ech.rank()
    }

    /// Products of basis elements: `table[i * dim + j] = b_i b_j`.
    pub fn structure_constants(&self) -> Vec<Vec<u32>> {
        let p = self.p;
        let mut table = Vec::with_capacity(self.dim() * self.dim());
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    for j in 0..self.dim() {
                        let mut u = vec![0; self.dim()];
                        u[j] = 1;
                        table.push(self.mul_monomial(a, b, c, &u));
                    }
                }
            }
        }
        table
    }

    /// Checks (b_i b_j) b_k = b_i (b_j b_k) on all triples, or on `samples` random ones.
    pub fn associativity_holds(&self, table: &[Vec<u32>], samples: Option<(usize, u64)>) -> bool {
        let n = self.dim();
        let fld = self.fld();
        let combine = |coeffs: &[u32], rows: &mut dyn FnMut(usize) -> usize| -> Vec<u32> {
            let mut out = vec![0; n];
            for (u, &x) in coeffs.iter().enumerate() {
                if x != 0 {
                    for (o, &t) in out.iter_mut().zip(&table[rows(u)]) {
                        *o = fld.add(*o, fld.mul(x, t));
                    }
                }
            }
            out
        };
        let check = |i: usize, j: usize, k: usize| {
            let left = combine(&table[i * n + j], &mut |u| u * n + k);
            let right = combine(&table[j * n + k], &mut |u| i * n + u);
            left == right
        };
        match samples {
            None => (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| check(i, j, k)))),
            Some((count, seed)) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..count).all(|_| check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
            }
        }
    }

    /// Image of x under a representation.
    pub fn represent(&self, module: &Sl2Module, x: &[u32]) -> Mat {
        let fld = self.fld();
        let n = module.dim();
        let p = self.p;
        let mut out = Mat::zeros(n, n);
        for a in 0..p {
            let ea = pow(fld, &module.e, a as u32);
            for b in 0..p {
                let eh = ea.mul(fld, &pow(fld, &module.h, b as u32));
                for c in 0..p {
                    let coeff = x[self.index(a, b, c)];
                    if coeff != 0 {
                        let m = eh.mul(fld, &pow(fld, &module.f, c as u32));
                        out = out.add(fld, &m.scale(fld, coeff));
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AzumayaReport {
    pub point: PointReport,
    pub dim_algebra: usize,
    pub dim_end: usize,
    pub image_rank: usize,
    pub unit_to_identity: bool,
    pub casimir_central: bool,
    pub casimir_scalar: bool,
    pub bijective: bool,
}

/// Compares U_η^ξ with End(Z) for a baby Verma Z at the point.
pub fn verify_matrix_algebra(pt: &CentralPoint) -> Result<AzumayaReport> {
    if !pt.is_regular() {
        return Err(Error::Precondition("η is not regular".into()));
    }
    let borel = pt
        .borels()
        .into_iter()
        .next()
        .ok_or_else(|| Error::Precondition("no compatible Borel in the unipotent chart".into()))?;
    let z = build_baby_verma(pt, borel)?;
    let alg = UChiAlgebra::new(pt);
    let p = pt.field.p() as usize;
    let dim_algebra = alg.central_quotient_dim(pt.casimir());
    let dim_end = p * p;
    let image_rank = z.module.algebra_rank();
    let unit_to_identity = alg.represent(&z.module, &alg.unit()) == Mat::identity(p);
    let casimir_central = alg.is_central(&alg.casimir());
    let casimir_scalar = scalar_of(&alg.represent(&z.module, &alg.casimir())) == Some(pt.casimir());
    Ok(AzumayaReport {
        point: pt.describe(),
        dim_algebra,
        dim_end,
        image_rank,
        unit_to_identity,
        casimir_central,
        casimir_scalar,
        bijective: dim_algebra == dim_end && image_rank == dim_end && casimir_scalar,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn associative_exhaustively_at_p3() {
        let f = Gf::prime(3).unwrap();
        for xi in [0, 1, 2] {
            let alg = UChiAlgebra::new(&CentralPoint::kostant(&f, xi));
            let table = alg.structure_constants();
            assert!(alg.associativity_holds(&table, None));
        }
        let f9 = Gf::new(3, 2).unwrap();
        let alg = UChiAlgebra::new(&CentralPoint::new(&f9, [2, 5, 7], 0));
        assert!(alg.associativity_holds(&alg.structure_constants(), None));
    }

    #[test]
    fn left_multiplication_satisfies_relations() {
        let f = Gf::new(5, 2).unwrap();
        let alg = UChiAlgebra::new(&CentralPoint::new(&f, [3, 7, 11], 0));
        let v: Vec<u32> = (0..alg.dim()).map(|i| (i as u32 * 7 + 3) % 25).collect();
        let g = |k: usize, w: &[u32]| alg.left_gen(k, w);
        let br = |x: usize, y: usize| {
            let a = g(x, &g(y, &v));
            let b = g(y, &g(x, &v));
            a.iter().zip(&b).map(|(&s, &t)| f.sub(s, t)).collect::<Vec<_>>()
        };
        assert_eq!(br(H, E), g(E, &v).iter().map(|&x| f.mul(2, x)).collect::<Vec<_>>());
        assert_eq!(br(H, F), g(F, &v).iter().map(|&x| f.neg(f.mul(2, x))).collect::<Vec<_>>());
        assert_eq!(br(E, F), g(H, &v));
        assert!(alg.is_central(&alg.casimir()));
    }

    #[test]
    fn matrix_algebra_at_p3() {
        let f = Gf::prime(3).unwrap();
        let rep = verify_matrix_algebra(&CentralPoint::kostant(&f, 0)).unwrap();
        assert_eq!((rep.dim_algebra, rep.dim_end, rep.image_rank), (9, 9, 9));
        assert!(rep.unit_to_identity && rep.bijective);
    }

    #[test]
    fn non_regular_is_rejected() {
        let f = Gf::prime(3).unwrap();
        assert!(verify_matrix_algebra(&CentralPoint::new(&f, [0, 0, 0], 0)).is_err());
    }
}
