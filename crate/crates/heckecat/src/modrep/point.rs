use serde::Serialize;

use crate::field::Gf;
use crate::linalg::Mat;

/// A pair (η, ξ): η ∈ g* recorded by its values on (e, h, f), ξ ∈ t* by its value on h.
#[derive(Clone, Debug)]
pub struct CentralPoint {
    pub field: Gf,
    pub eta: [u32; 3],
    pub xi: u32,
}

/// Conjugate g B_std g⁻¹ of the Borel spanned by h and f, with g = [[1, r], [0, 1]].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Borel {
    pub r: u32,
}

impl Borel {
    pub const STANDARD: Borel = Borel { r: 0 };
}

impl CentralPoint {
    pub fn new(field: &Gf, eta: [u32; 3], xi: u32) -> CentralPoint {
        CentralPoint { field: field.clone(), eta, xi }
    }

    /// The point over ξ on the section η = (1, 0, c).
    pub fn kostant(field: &Gf, xi: u32) -> CentralPoint {
        let r = kostant_r(field, xi);
        CentralPoint::new(field, [1, 0, field.mul(r, r)], xi)
    }

    /// The Borel adapted to a point of the section: r = −AS(ξ)^{1/p} / 2.
    pub fn kostant_borel(&self) -> Borel {
        Borel { r: kostant_r(&self.field, self.xi) }
    }

    /// η ∘ Ad(g): the functional seen by the standard Borel after conjugating by g.
    pub fn eta_for(&self, borel: Borel) -> [u32; 3] {
        let f = &self.field;
        let [a, b, c] = self.eta;
        let r = borel.r;
        let h = f.sub(b, f.mul(2, f.mul(r, a)));
        let fv = f.sub(f.add(c, f.mul(r, b)), f.mul(f.mul(r, r), a));
        [a, h, fv]
    }

    /// Borels g B_std g⁻¹ (g unipotent upper) compatible with (η, ξ).
    pub fn borels(&self) -> Vec<Borel> {
        let f = &self.field;
        let sigma_as = f.artin_schreier(f.add(self.xi, 2));
        f.elements()
            .map(|r| Borel { r })
            .filter(|&b| {
                let [_, h, fv] = self.eta_for(b);
                fv == 0 && f.pow(h, f.p() as u64) == sigma_as
            })
            .collect()
    }

    pub fn with_xi(&self, xi: u32) -> CentralPoint {
        CentralPoint { xi, ..self.clone() }
    }

    /// η_h² + 4 η_e η_f, an Ad-invariant of η.
    pub fn eta_invariant(&self) -> u32 {
        let f = &self.field;
        let [a, b, c] = self.eta;
        f.add(f.mul(b, b), f.mul(f.from_i64(4), f.mul(a, c)))
    }

    /// Same image in t*^{(1)}/W: AS(ξ)² = (η_h² + 4 η_e η_f)^p.
    pub fn is_compatible(&self) -> bool {
        let f = &self.field;
        let a = f.artin_schreier(self.xi);
        f.mul(a, a) == f.pow(self.eta_invariant(), f.p() as u64)
    }

    /// The matrix X with tr(XY) = η(Y).
    pub fn dual_element(&self) -> Mat {
        let f = &self.field;
        let [a, b, c] = self.eta;
        let half = f.div(b, 2);
        Mat::from_rows(&[vec![half, c], vec![a, f.neg(half)]], 2)
    }

    pub fn centralizer_dim(&self) -> usize {
        let f = &self.field;
        let x = self.dual_element();
        let basis = [
            Mat::from_rows(&[vec![0, 1], vec![0, 0]], 2),
            Mat::from_rows(&[vec![1, 0], vec![0, f.neg(1)]], 2),
            Mat::from_rows(&[vec![0, 0], vec![1, 0]], 2),
        ];
        let cols: Vec<Vec<u32>> = basis
            .iter()
            .map(|y| {
                let b = x.mul(f, y).sub(f, &y.mul(f, &x));
                vec![b.get(0, 1), b.get(0, 0), b.get(1, 0)]
            })
            .collect();
        3 - Mat::from_rows(&cols, 3).rank(f)
    }

    pub fn is_regular(&self) -> bool {
        self.centralizer_dim() == 1
    }

    /// Scalar of h² + 2h + 4fe on modules over this point.
    pub fn casimir(&self) -> u32 {
        casimir_scalar(&self.field, self.xi)
    }

    /// The dot orbit {ξ, −ξ − 2}.
    pub fn dot_orbit(&self) -> Vec<u32> {
        let mut o = vec![self.xi, dot_s(&self.field, self.xi)];
        o.sort_unstable();
        o.dedup();
        o
    }

    /// No w•ξ − ξ lies in F_p \ {0}.
    pub fn in_open_locus(&self) -> bool {
        let f = &self.field;
        let d = f.sub(dot_s(f, self.xi), self.xi);
        d == 0 || !f.in_prime_field(d)
    }

    pub fn describe(&self) -> PointReport {
        let f = &self.field;
        PointReport {
            field: format!("{f:?}"),
            eta: self.eta.iter().map(|&x| f.format(x)).collect(),
            xi: f.format(self.xi),
            orbit: self.dot_orbit().iter().map(|&x| f.format(x)).collect(),
            regular: self.is_regular(),
            compatible: self.is_compatible(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PointReport {
    pub field: String,
    pub eta: Vec<String>,
    pub xi: String,
    pub orbit: Vec<String>,
    pub regular: bool,
    pub compatible: bool,
}

pub fn dot_s(f: &Gf, xi: u32) -> u32 {
    f.sub(f.neg(xi), 2)
}

pub fn casimir_scalar(f: &Gf, xi: u32) -> u32 {
    f.add(f.mul(xi, xi), f.mul(2, xi))
}

fn kostant_r(f: &Gf, xi: u32) -> u32 {
    f.neg(f.div(f.proot(f.artin_schreier(xi)), 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kostant_points_are_compatible_and_regular() {
        let f = Gf::new(5, 2).unwrap();
        for xi in f.elements() {
            let pt = CentralPoint::kostant(&f, xi);
            assert!(pt.is_compatible());
            assert!(pt.is_regular());
            let other = CentralPoint::kostant(&f, dot_s(&f, xi));
            assert_eq!(pt.eta, other.eta);
            assert_eq!(pt.casimir(), other.casimir());
        }
        let zero = CentralPoint::new(&f, [0, 0, 0], 0);
        assert_eq!(zero.centralizer_dim(), 3);
    }

    #[test]
    fn open_locus_excludes_prime_field_shifts() {
        let f = Gf::new(5, 2).unwrap();
        let count = f.elements().filter(|&x| CentralPoint::kostant(&f, x).in_open_locus()).count();
        // ξ ∈ F_p is excluded except the fixed point −1
        assert_eq!(count, 25 - 5 + 1);
    }
}
