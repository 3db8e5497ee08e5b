use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Gf;
use crate::linalg::{Echelon, Mat};

/// A finite-dimensional sl2-module given by the matrices of e, h, f.
#[derive(Clone, Debug)]
pub struct Sl2Module {
    pub field: Gf,
    pub e: Mat,
    pub h: Mat,
    pub f: Mat,
}

impl Sl2Module {
    pub fn dim(&self) -> usize {
        self.e.rows
    }

    pub fn gens(&self) -> [&Mat; 3] {
        [&self.e, &self.h, &self.f]
    }

    /// The restricted simple module L(n), basis u_0..u_n with u_0 of highest weight n.
    pub fn simple(field: &Gf, n: usize) -> Result<Sl2Module> {
        if n >= field.p() as usize {
            return Err(Error::Precondition(format!("L({n}) is not restricted for p = {}", field.p())));
        }
        let d = n + 1;
        let (mut e, mut h, mut f) = (Mat::zeros(d, d), Mat::zeros(d, d), Mat::zeros(d, d));
        for j in 0..d {
            h.set(j, j, field.from_i64(n as i64 - 2 * j as i64));
            if j + 1 < d {
                f.set(j + 1, j, field.from_i64(j as i64 + 1));
            }
            if j > 0 {
                e.set(j - 1, j, field.from_i64((n - j + 1) as i64));
            }
        }
        Ok(Sl2Module { field: field.clone(), e, h, f })
    }

    /// `self ⊗ other` with basis index `i * other.dim() + j`.
    pub fn tensor(&self, other: &Sl2Module) -> Sl2Module {
        let fld = &self.field;
        let (ia, ib) = (Mat::identity(self.dim()), Mat::identity(other.dim()));
        let t = |a: &Mat, b: &Mat| a.kron(fld, &ib).add(fld, &ia.kron(fld, b));
        Sl2Module { field: fld.clone(), e: t(&self.e, &other.e), h: t(&self.h, &other.h), f: t(&self.f, &other.f) }
    }

    /// h² + 2h + 4fe.
    pub fn casimir(&self) -> Mat {
        let fld = &self.field;
        let hh = self.h.mul(fld, &self.h);
        let fe = self.f.mul(fld, &self.e);
        hh.add(fld, &self.h.scale(fld, 2)).add(fld, &fe.scale(fld, fld.from_i64(4)))
    }

    pub fn lie_relations_hold(&self) -> bool {
        let fld = &self.field;
        let br = |a: &Mat, b: &Mat| a.mul(fld, b).sub(fld, &b.mul(fld, a));
        br(&self.h, &self.e) == self.e.scale(fld, 2)
            && br(&self.h, &self.f) == self.f.scale(fld, fld.neg(2))
            && br(&self.e, &self.f) == self.h
    }

    /// Scalars by which e^p, h^p − h and f^p act, if they are all scalar.
    pub fn p_center_scalars(&self) -> Option<[u32; 3]> {
        let fld = &self.field;
        let p = fld.p();
        let ep = pow(fld, &self.e, p);
        let hp = pow(fld, &self.h, p).sub(fld, &self.h);
        let fp = pow(fld, &self.f, p);
        Some([scalar_of(&ep)?, scalar_of(&hp)?, scalar_of(&fp)?])
    }

    /// Sub-module of vectors killed by a power of `C − c` (`generalized`),
    /// or the quotient `M / (C − c)M` otherwise.
    pub fn central_part(&self, c: u32, generalized: bool) -> Sl2Module {
        let fld = &self.field;
        let n = self.dim();
        let shifted = self.casimir().sub(fld, &Mat::identity(n).scale(fld, c));
        if generalized {
            let big = pow(fld, &shifted, n.max(1) as u32);
            let basis = big.nullspace(fld);
            self.restrict(&basis)
        } else {
            let image = column_basis(fld, &shifted);
            self.quotient(&image)
        }
    }

    /// Action on an invariant subspace spanned by `basis`.
    pub fn restrict(&self, basis: &[Vec<u32>]) -> Sl2Module {
        let (p, pinv) = adapted_basis(&self.field, basis, self.dim());
        let d = basis.len();
        let blk = |m: &Mat| block(&pinv.mul(&self.field, &m.mul(&self.field, &p)), 0, d);
        Sl2Module { field: self.field.clone(), e: blk(&self.e), h: blk(&self.h), f: blk(&self.f) }
    }

    /// Action on the quotient by an invariant subspace spanned by `basis`.
    pub fn quotient(&self, basis: &[Vec<u32>]) -> Sl2Module {
        let n = self.dim();
        let (p, pinv) = adapted_basis(&self.field, basis, n);
        let d = basis.len();
        let blk = |m: &Mat| block(&pinv.mul(&self.field, &m.mul(&self.field, &p)), d, n);
        Sl2Module { field: self.field.clone(), e: blk(&self.e), h: blk(&self.h), f: blk(&self.f) }
    }

    /// Smallest submodule containing `vectors`, as an echelon basis.
    pub fn generated(&self, vectors: &[Vec<u32>]) -> Vec<Vec<u32>> {
        let fld = &self.field;
        let mut ech = Echelon::new(self.dim());
        let mut queue: Vec<Vec<u32>> = Vec::new();
        for v in vectors {
            if ech.insert(fld, v) {
                queue.push(v.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for g in self.gens() {
                let w = g.apply(fld, &v);
                if ech.insert(fld, &w) {
                    queue.push(w);
                }
            }
        }
        ech.basis().to_vec()
    }

    pub fn is_invariant(&self, basis: &[Vec<u32>]) -> bool {
        let fld = &self.field;
        let mut ech = Echelon::new(self.dim());
        for v in basis {
            ech.insert(fld, v);
        }
        basis.iter().all(|v| self.gens().iter().all(|g| ech.contains(fld, &g.apply(fld, v))))
    }

    /// Basis of `Hom_g(self, other)` as matrices `other.dim() × self.dim()`.
    pub fn hom_basis(&self, other: &Sl2Module) -> Vec<Mat> {
        let fld = &self.field;
        let (n, m) = (self.dim(), other.dim());
        let mut rows = Vec::new();
        for (a, b) in self.gens().into_iter().zip(other.gens()) {
            // (X a − b X)_{ij} = Σ_k X_ik a_kj − Σ_k b_ik X_kj, X_ik at index i*n+k
            for i in 0..m {
                for j in 0..n {
                    let mut row = vec![0u32; m * n];
                    for k in 0..n {
                        let v = a.get(k, j);
                        if v != 0 {
                            row[i * n + k] = fld.add(row[i * n + k], v);
                        }
                    }
                    for k in 0..m {
                        let v = b.get(i, k);
                        if v != 0 {
                            row[k * n + j] = fld.sub(row[k * n + j], v);
                        }
                    }
                    rows.push(row);
                }
            }
        }
        Mat::from_rows(&rows, m * n).nullspace(fld).into_iter().map(|v| Mat { rows: m, cols: n, data: v }).collect()
    }

    /// Searches the Hom space for an invertible map; deterministic for a fixed seed.
    pub fn is_isomorphic(&self, other: &Sl2Module, seed: u64) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        let fld = &self.field;
        let basis = self.hom_basis(other);
        if basis.is_empty() {
            return false;
        }
        if basis.iter().any(|b| b.inverse(fld).is_some()) {
            return true;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..20).any(|_| {
            let mut x = Mat::zeros(other.dim(), self.dim());
            for b in &basis {
                x = x.add(fld, &b.scale(fld, fld.random(&mut rng)));
            }
            x.inverse(fld).is_some()
        })
    }

    /// Dimension of the image of the restricted PBW monomials e^a h^b f^c (a, b, c < p) in End.
    pub fn algebra_rank(&self) -> usize {
        let fld = &self.field;
        let p = fld.p();
        let n = self.dim();
        let powers = |m: &Mat| {
            let mut out = vec![Mat::identity(n)];
            for _ in 1..p {
                out.push(out.last().unwrap().mul(fld, m));
            }
            out
        };
        let (ep, hp, fp) = (powers(&self.e), powers(&self.h), powers(&self.f));
        let mut ech = Echelon::new(n * n);
        for ea in &ep {
            for hb in &hp {
                let eh = ea.mul(fld, hb);
                for fc in &fp {
                    ech.insert(fld, &eh.mul(fld, fc).data);
                    if ech.rank() == n * n {
                        return n * n;
                    }
                }
            }
        }
        ech.rank()
    }

    /// Simple over the algebraic closure: the action generates all of End.
    pub fn is_absolutely_simple(&self) -> bool {
        self.algebra_rank() == self.dim() * self.dim()
    }
}

pub fn scalar_of(m: &Mat) -> Option<u32> {
    let c = if m.rows == 0 { 0 } else { m.get(0, 0) };
    for i in 0..m.rows {
        for j in 0..m.cols {
            if m.get(i, j) != if i == j { c } else { 0 } {
                return None;
            }
        }
    }
    Some(c)
}

pub fn pow(fld: &Gf, m: &Mat, mut e: u32) -> Mat {
    let mut acc = Mat::identity(m.rows);
    let mut base = m.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(fld, &base);
        }
        base = base.mul(fld, &base);
        e >>= 1;
    }
    acc
}

fn column_basis(fld: &Gf, m: &Mat) -> Vec<Vec<u32>> {
    let mut ech = Echelon::new(m.rows);
    let t = m.transpose();
    for i in 0..t.rows {
        ech.insert(fld, t.row(i));
    }
    ech.basis().to_vec()
}

/// Change of basis whose first columns are `basis`, completed by unit vectors.
fn adapted_basis(fld: &Gf, basis: &[Vec<u32>], n: usize) -> (Mat, Mat) {
    let mut ech = Echelon::new(n);
    let mut cols: Vec<Vec<u32>> = Vec::with_capacity(n);
    for v in basis {
        assert!(ech.insert(fld, v), "dependent basis");
        cols.push(v.clone());
    }
    for i in 0..n {
        let mut u = vec![0u32; n];
        u[i] = 1;
        if ech.insert(fld, &u) {
            cols.push(u);
        }
    }
    let p = Mat::from_rows(&cols, n).transpose();
    let pinv = p.inverse(fld).expect("adapted basis is invertible");
    (p, pinv)
}

fn block(m: &Mat, from: usize, to: usize) -> Mat {
    let d = to - from;
    let mut out = Mat::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            out.set(i, j, m.get(from + i, from + j));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_modules_are_representations() {
        let fld = Gf::prime(5).unwrap();
        for n in 0..5 {
            let l = Sl2Module::simple(&fld, n).unwrap();
            assert!(l.lie_relations_hold());
            assert_eq!(l.p_center_scalars(), Some([0, 0, 0]));
            let c = (n * n + 2 * n) as i64;
            assert_eq!(scalar_of(&l.casimir()), Some(fld.from_i64(c)));
            assert!(l.is_absolutely_simple());
        }
        assert!(Sl2Module::simple(&fld, 5).is_err());
    }

    #[test]
    fn tensor_splits_by_casimir() {
        let fld = Gf::prime(7).unwrap();
        let l1 = Sl2Module::simple(&fld, 1).unwrap();
        let m = l1.tensor(&l1);
        assert!(m.lie_relations_hold());
        let top = m.central_part(fld.from_i64(8), true);
        let bottom = m.central_part(0, false);
        assert_eq!((top.dim(), bottom.dim()), (3, 1));
        assert!(top.is_isomorphic(&Sl2Module::simple(&fld, 2).unwrap(), 0));
        assert_eq!(l1.hom_basis(&l1).len(), 1);
    }
}
