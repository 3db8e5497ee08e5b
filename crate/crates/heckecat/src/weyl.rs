//! Root data, finite, affine and extended Weyl groups, dot actions, linkage and alcoves.
//!
//! Weights are integer vectors in the coordinates of a fixed basis of X. An extended affine
//! Weyl group element `t_λ·w` is stored with its *unscaled* translation λ ∈ X; it acts on weights
//! by `μ ↦ w(μ) + pλ` and through the dot action by `μ ↦ w(μ+ρ) − ρ + pλ`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::field::is_prime;

pub type Weight = Vec<i64>;

/// Row-major integer matrix acting on column vectors in X-coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct WMat(pub Vec<i64>);

impl WMat {
    pub fn identity(r: usize) -> WMat {
        let mut v = vec![0; r * r];
        for i in 0..r {
            v[i * r + i] = 1;
        }
        WMat(v)
    }

    pub fn rank(&self) -> usize {
        (self.0.len() as f64).sqrt().round() as usize
    }

    pub fn mul(&self, o: &WMat) -> WMat {
        let r = self.rank();
        let mut out = vec![0; r * r];
        for i in 0..r {
            for k in 0..r {
                let a = self.0[i * r + k];
                if a != 0 {
                    for j in 0..r {
                        out[i * r + j] += a * o.0[k * r + j];
                    }
                }
            }
        }
        WMat(out)
    }

    pub fn apply(&self, v: &[i64]) -> Weight {
        let r = self.rank();
        (0..r).map(|i| (0..r).map(|j| self.0[i * r + j] * v[j]).sum()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == WMat::identity(self.rank())
    }

    /// Inverse of a finite-order integer matrix.
    pub fn inverse(&self) -> WMat {
        let mut prev = WMat::identity(self.rank());
        let mut cur = self.clone();
        while !cur.is_identity() {
            prev = cur.clone();
            cur = cur.mul(self);
        }
        prev
    }

    pub fn transpose(&self) -> WMat {
        let r = self.rank();
        let mut out = vec![0; r * r];
        for i in 0..r {
            for j in 0..r {
                out[j * r + i] = self.0[i * r + j];
            }
        }
        WMat(out)
    }
}

/// Element `t_λ·w` of the extended affine Weyl group (λ unscaled).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct ExtWeylElt {
    pub t: Weight,
    pub w: WMat,
}

impl ExtWeylElt {
    pub fn identity(r: usize) -> ExtWeylElt {
        ExtWeylElt { t: vec![0; r], w: WMat::identity(r) }
    }

    pub fn translation(t: Weight) -> ExtWeylElt {
        let r = t.len();
        ExtWeylElt { t, w: WMat::identity(r) }
    }

    pub fn finite(w: WMat) -> ExtWeylElt {
        let r = w.rank();
        ExtWeylElt { t: vec![0; r], w }
    }

    pub fn rank(&self) -> usize {
        self.t.len()
    }

    /// `(t_λ w)(t_μ v) = t_{λ + wμ} wv`.
    pub fn mul(&self, o: &ExtWeylElt) -> ExtWeylElt {
        let wm = self.w.apply(&o.t);
        ExtWeylElt { t: self.t.iter().zip(&wm).map(|(a, b)| a + b).collect(), w: self.w.mul(&o.w) }
    }

    pub fn inverse(&self) -> ExtWeylElt {
        let wi = self.w.inverse();
        let t = wi.apply(&self.t).into_iter().map(|x| -x).collect();
        ExtWeylElt { t, w: wi }
    }

    pub fn is_identity(&self) -> bool {
        self.t.iter().all(|&x| x == 0) && self.w.is_identity()
    }

    pub fn is_finite(&self) -> bool {
        self.t.iter().all(|&x| x == 0)
    }

    pub fn pow(&self, n: usize) -> ExtWeylElt {
        (0..n).fold(ExtWeylElt::identity(self.rank()), |acc, _| acc.mul(self))
    }
}

/// Result of [`RootDatum::dot_stabilizer`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Stabilizer {
    /// λ lies in the closure of the fundamental alcove; the stabilizer is generated by these
    /// affine simple reflections (0 = s_0, i = s_i).
    Walls(Vec<usize>),
    /// Otherwise: indices (into the finite Weyl group) of the image of the stabilizer in W.
    FiniteImage(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlcoveInfo {
    pub weight: Weight,
    pub in_fundamental: bool,
    pub in_closure: bool,
    pub in_lower_closure: bool,
    pub walls: Vec<usize>,
}

#[derive(Clone)]
pub struct RootDatum {
    pub name: String,
    pub rank: usize,
    pub simple_roots: Vec<Weight>,
    pub simple_coroots: Vec<Weight>,
    pub cartan: Vec<Vec<i64>>,
    pub p: u32,
    pub rho: Weight,
    /// Positive roots in X-coordinates, with their coroots in X∨-coordinates.
    pub pos_roots: Vec<Weight>,
    pub pos_coroots: Vec<Weight>,
    /// Index of the highest root β in `pos_roots`.
    pub highest: usize,
    pub coxeter_number: i64,
    weyl: Vec<WMat>,
    weyl_index: HashMap<WMat, usize>,
    weyl_len: Vec<usize>,
}

impl fmt::Debug for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootDatum({}, p={})", self.name, self.p)
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Smith normal form diagonal of an integer matrix (absolute values).
pub fn smith_diagonal(m: &[Vec<i64>]) -> Vec<i64> {
    let mut a: Vec<Vec<i64>> = m.to_vec();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // find nonzero entry of minimal absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            let q = a[i][t] / a[t][t];
            for j in t..cols {
                a[i][j] -= q * a[t][j];
            }
            if a[i][t] != 0 {
                clean = false;
            }
        }
        for j in t + 1..cols {
            let q = a[t][j] / a[t][t];
            for i in t..rows {
                a[i][j] -= q * a[i][t];
            }
            if a[t][j] != 0 {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // enforce divisibility of the remaining block
        let pivot = a[t][t];
        if let Some(i) = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % pivot != 0)) {
            for j in t..cols {
                a[t][j] += a[i][j];
            }
            continue;
        }
        diag.push(pivot.abs());
        t += 1;
    }
    diag
}

impl RootDatum {
    /// Builds a root datum from simple roots (X-coordinates) and simple coroots (X∨-coordinates).
    pub fn new(name: &str, simple_roots: Vec<Weight>, simple_coroots: Vec<Weight>, p: u32) -> Result<RootDatum> {
        let rank = simple_roots.len();
        if rank == 0 || rank > 8 || simple_coroots.len() != rank {
            return Err(Error::RootDatum("rank must be between 1 and 8".into()));
        }
        if !is_prime(p) || p == 2 {
            return Err(Error::RootDatum(format!("p = {p} must be an odd prime")));
        }
        let cartan: Vec<Vec<i64>> =
            (0..rank).map(|i| (0..rank).map(|j| dot(&simple_roots[i], &simple_coroots[j])).collect()).collect();
        for i in 0..rank {
            if cartan[i][i] != 2 {
                return Err(Error::RootDatum("diagonal Cartan entries must be 2".into()));
            }
            for j in 0..rank {
                if i != j && !(cartan[i][j] == 0 || cartan[i][j] == -1) {
                    return Err(Error::RootDatum("only simply-laced data are supported".into()));
                }
                if cartan[i][j] != cartan[j][i] {
                    return Err(Error::RootDatum("Cartan matrix must be symmetric".into()));
                }
            }
        }
        // positive roots in root coordinates by reflection closure
        let mut pos_rc: Vec<Vec<i64>> = (0..rank).map(|i| (0..rank).map(|j| (i == j) as i64).collect()).collect();
        let mut queue: VecDeque<usize> = (0..rank).collect();
        while let Some(k) = queue.pop_front() {
            for i in 0..rank {
                let c = pos_rc[k].clone();
                let pair: i64 = (0..rank).map(|j| c[j] * cartan[j][i]).sum();
                let mut n = c.clone();
                n[i] -= pair;
                if n.iter().all(|&x| x >= 0) && n.iter().any(|&x| x > 0) && !pos_rc.contains(&n) {
                    pos_rc.push(n);
                    queue.push_back(pos_rc.len() - 1);
                }
            }
        }
        if pos_rc.len() > 200 {
            return Err(Error::RootDatum("root system too large".into()));
        }
        let comb = |coeffs: &[i64], basis: &[Weight]| -> Weight {
            (0..rank).map(|k| (0..rank).map(|i| coeffs[i] * basis[i][k]).sum()).collect()
        };
        let pos_roots: Vec<Weight> = pos_rc.iter().map(|c| comb(c, &simple_roots)).collect();
        let pos_coroots: Vec<Weight> = pos_rc.iter().map(|c| comb(c, &simple_coroots)).collect();
        let highest = (0..pos_rc.len()).max_by_key(|&k| pos_rc[k].iter().sum::<i64>()).unwrap();
        if pos_rc.iter().any(|c| c.iter().zip(&pos_rc[highest]).any(|(a, b)| a > b)) {
            return Err(Error::RootDatum("root system is not irreducible".into()));
        }
        let two_rho: Weight = (0..rank).map(|k| pos_roots.iter().map(|r| r[k]).sum()).collect();
        if two_rho.iter().any(|x| x % 2 != 0) {
            return Err(Error::RootDatum("ρ does not lie in X".into()));
        }
        let rho = two_rho.iter().map(|x| x / 2).collect();
        let coxeter_number = 2 * pos_roots.len() as i64 / rank as i64;

        let mut d = RootDatum {
            name: name.to_string(),
            rank,
            simple_roots,
            simple_coroots,
            cartan,
            p,
            rho,
            pos_roots,
            pos_coroots,
            highest,
            coxeter_number,
            weyl: Vec::new(),
            weyl_index: HashMap::new(),
            weyl_len: Vec::new(),
        };
        d.check_torsion()?;
        d.enumerate_weyl();
        Ok(d)
    }

    /// SL2.
    pub fn a1(p: u32) -> Result<RootDatum> {
        RootDatum::new("A1", vec![vec![2]], vec![vec![1]], p)
    }

    /// SL3 (X = weight lattice).
    pub fn a2(p: u32) -> Result<RootDatum> {
        RootDatum::new("A2", vec![vec![2, -1], vec![-1, 2]], vec![vec![1, 0], vec![0, 1]], p)
    }

    /// PGL3 (X = root lattice).
    pub fn a2_adjoint(p: u32) -> Result<RootDatum> {
        RootDatum::new("A2-adj", vec![vec![1, 0], vec![0, 1]], vec![vec![2, -1], vec![-1, 2]], p)
    }

    /// Simply connected datum from a Cartan matrix, or adjoint when `adjoint` is set.
    pub fn from_cartan(name: &str, cartan: &[Vec<i64>], p: u32, adjoint: bool) -> Result<RootDatum> {
        let r = cartan.len();
        if cartan.iter().any(|row| row.len() != r) {
            return Err(Error::RootDatum("Cartan matrix must be square".into()));
        }
        let unit = |i: usize| -> Weight { (0..r).map(|j| (i == j) as i64).collect() };
        if adjoint {
            let coroots = (0..r).map(|j| (0..r).map(|i| cartan[i][j]).collect()).collect();
            RootDatum::new(name, (0..r).map(unit).collect(), coroots, p)
        } else {
            RootDatum::new(name, cartan.to_vec(), (0..r).map(unit).collect(), p)
        }
    }

    pub fn preset(name: &str, p: u32) -> Result<RootDatum> {
        match name {
            "A1" => RootDatum::a1(p),
            "A2" => RootDatum::a2(p),
            "A2-adj" | "A2adj" => RootDatum::a2_adjoint(p),
            other => Err(Error::RootDatum(format!("unknown preset {other:?} (A1, A2, A2-adj)"))),
        }
    }

    /// Loads a datum from `key = value` text with keys `type`, `rank`, `cartan`, `p`, `form`.
    pub fn from_config(text: &str) -> Result<RootDatum> {
        let mut kv: HashMap<String, (usize, String)> = HashMap::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(Error::Parse { pos: format!("line {}", ln + 1), msg: "expected key = value".into() });
            };
            kv.insert(k.trim().to_string(), (ln + 1, v.trim().to_string()));
        }
        let get = |k: &str| kv.get(k).cloned();
        let (pl, pv) = get("p").ok_or(Error::Parse { pos: "end".into(), msg: "missing key p".into() })?;
        let p: u32 =
            pv.parse().map_err(|_| Error::Parse { pos: format!("line {pl}"), msg: format!("bad prime {pv:?}") })?;
        if let Some((_, t)) = get("type") {
            return RootDatum::preset(&t, p);
        }
        let (cl, cv) = get("cartan").ok_or(Error::Parse { pos: "end".into(), msg: "missing key cartan".into() })?;
        let cartan: Vec<Vec<i64>> = cv
            .split(';')
            .map(|row| row.split_whitespace().map(|x| x.parse::<i64>()).collect::<std::result::Result<Vec<_>, _>>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Parse { pos: format!("line {cl}"), msg: format!("bad Cartan entry: {e}") })?;
        if let Some((rl, rv)) = get("rank") {
            let r: usize =
                rv.parse().map_err(|_| Error::Parse { pos: format!("line {rl}"), msg: format!("bad rank {rv:?}") })?;
            if r != cartan.len() {
                return Err(Error::Parse {
                    pos: format!("line {rl}"),
                    msg: "rank does not match Cartan matrix".into(),
                });
            }
        }
        let adjoint = matches!(get("form").map(|x| x.1).as_deref(), Some("adjoint"));
        RootDatum::from_cartan("custom", &cartan, p, adjoint)
    }

    /// ZR ∩ pX = pZR, i.e. p divides no elementary divisor of X/ZR.
    pub fn check_torsion(&self) -> Result<()> {
        let divisors = smith_diagonal(&self.simple_roots);
        if divisors.len() < self.rank {
            return Err(Error::RootDatum("simple roots are linearly dependent".into()));
        }
        if let Some(d) = divisors.iter().find(|&&d| d % self.p as i64 == 0) {
            return Err(Error::RootDatum(format!(
                "ZR ∩ pX ≠ pZR: X/ZR has elementary divisor {d} divisible by p = {}",
                self.p
            )));
        }
        Ok(())
    }

    pub fn require_p_gt_h(&self) -> Result<()> {
        if (self.p as i64) <= self.coxeter_number {
            return Err(Error::Precondition(format!("p = {} must exceed h = {}", self.p, self.coxeter_number)));
        }
        Ok(())
    }

    pub fn pairing(&self, lambda: &[i64], coroot: &[i64]) -> i64 {
        dot(lambda, coroot)
    }

    pub fn highest_root(&self) -> &Weight {
        &self.pos_roots[self.highest]
    }

    pub fn highest_coroot(&self) -> &Weight {
        &self.pos_coroots[self.highest]
    }

    /// Matrix of the reflection in the positive root with index `k`.
    pub fn reflection(&self, k: usize) -> WMat {
        let (a, c) = (&self.pos_roots[k], &self.pos_coroots[k]);
        let r = self.rank;
        let mut m = WMat::identity(r).0;
        for i in 0..r {
            for j in 0..r {
                m[i * r + j] -= a[i] * c[j];
            }
        }
        WMat(m)
    }

    pub fn simple_reflection(&self, i: usize) -> WMat {
        let k = self.pos_roots.iter().position(|r| *r == self.simple_roots[i]).unwrap();
        self.reflection(k)
    }

    fn enumerate_weyl(&mut self) {
        let r = self.rank;
        let gens: Vec<WMat> = (0..r).map(|i| self.simple_reflection(i)).collect();
        let id = WMat::identity(r);
        self.weyl = vec![id.clone()];
        self.weyl_len = vec![0];
        self.weyl_index.insert(id, 0);
        let mut k = 0;
        while k < self.weyl.len() {
            for g in &gens {
                let n = self.weyl[k].mul(g);
                if !self.weyl_index.contains_key(&n) {
                    self.weyl_index.insert(n.clone(), self.weyl.len());
                    self.weyl.push(n);
                    self.weyl_len.push(self.weyl_len[k] + 1);
                }
            }
            k += 1;
        }
    }

    pub fn weyl_group(&self) -> &[WMat] {
        &self.weyl
    }

    pub fn weyl_index(&self, w: &WMat) -> usize {
        self.weyl_index[w]
    }

    pub fn finite_length(&self, w: &WMat) -> usize {
        self.weyl_len[self.weyl_index[w]]
    }

    /// Number of affine simple reflections (s_0 plus the finite ones).
    pub fn num_gens(&self) -> usize {
        self.rank + 1
    }

    /// Affine simple reflection: 0 is s_0 = t_β s_β, and i ≥ 1 is the finite s_i.
    pub fn gen(&self, i: usize) -> ExtWeylElt {
        if i == 0 {
            ExtWeylElt { t: self.highest_root().clone(), w: self.reflection(self.highest) }
        } else {
            ExtWeylElt::finite(self.simple_reflection(i - 1))
        }
    }

    pub fn identity(&self) -> ExtWeylElt {
        ExtWeylElt::identity(self.rank)
    }

    /// Element from a word over the affine simple reflections.
    pub fn from_word(&self, word: &[usize]) -> ExtWeylElt {
        word.iter().fold(self.identity(), |acc, &s| acc.mul(&self.gen(s)))
    }

    /// Solves λ = Σ c_i α_i over Q; returns integer coordinates if λ ∈ ZR.
    pub fn root_coordinates(&self, lambda: &[i64]) -> Option<Vec<i64>> {
        // c · A = λ where A has the simple roots as rows; use pairing with coroots: Cc = <λ, α^∨>
        let r = self.rank;
        let b: Vec<i64> = (0..r).map(|j| dot(lambda, &self.simple_coroots[j])).collect();
        // solve Σ_i c_i cartan[i][j] = b_j by fraction-free Gaussian elimination over Q
        let mut m: Vec<Vec<i128>> = (0..r)
            .map(|j| {
                let mut row: Vec<i128> = (0..r).map(|i| self.cartan[i][j] as i128).collect();
                row.push(b[j] as i128);
                row
            })
            .collect();
        for c in 0..r {
            let pr = (c..r).find(|&i| m[i][c] != 0)?;
            m.swap(c, pr);
            for i in 0..r {
                if i != c && m[i][c] != 0 {
                    let (a, b) = (m[c][c], m[i][c]);
                    for j in 0..=r {
                        m[i][j] = m[i][j] * a - m[c][j] * b;
                    }
                }
            }
        }
        let mut coords = Vec::with_capacity(r);
        for i in 0..r {
            if m[i][r] % m[i][i] != 0 {
                return None;
            }
            coords.push((m[i][r] / m[i][i]) as i64);
        }
        // verify (X may be larger than the span of the roots only in non-semisimple cases)
        let back: Weight = (0..r).map(|k| (0..r).map(|i| coords[i] * self.simple_roots[i][k]).sum()).collect();
        (back == lambda).then_some(coords)
    }

    pub fn in_root_lattice(&self, lambda: &[i64]) -> bool {
        self.root_coordinates(lambda).is_some()
    }

    pub fn in_affine(&self, x: &ExtWeylElt) -> bool {
        self.in_root_lattice(&x.t)
    }

    /// Action on weights: `t_λ w · μ = w(μ) + pλ`.
    pub fn act(&self, x: &ExtWeylElt, mu: &[i64]) -> Weight {
        let wm = x.w.apply(mu);
        wm.iter().zip(&x.t).map(|(a, t)| a + self.p as i64 * t).collect()
    }

    /// Dot action `x • λ = w(λ+ρ) − ρ + pμ` for `x = t_μ w`.
    pub fn dot_act(&self, x: &ExtWeylElt, lambda: &[i64]) -> Weight {
        let shifted: Weight = lambda.iter().zip(&self.rho).map(|(a, b)| a + b).collect();
        self.act(x, &shifted).iter().zip(&self.rho).map(|(a, b)| a - b).collect()
    }

    pub fn finite_dot(&self, w: &WMat, lambda: &[i64]) -> Weight {
        self.dot_act(&ExtWeylElt::finite(w.clone()), lambda)
    }

    /// Length: number of alcove walls separating the fundamental alcove from its image.
    pub fn length(&self, x: &ExtWeylElt) -> usize {
        let h = self.coxeter_number;
        let wrho = x.w.apply(&self.rho);
        self.pos_coroots
            .iter()
            .map(|c| {
                let v = dot(&wrho, c) + h * dot(&x.t, c);
                v.div_euclid(h).unsigned_abs() as usize
            })
            .sum()
    }

    pub fn coxeter_length(&self, x: &ExtWeylElt) -> Result<usize> {
        if !self.in_affine(x) {
            return Err(Error::NotAffine);
        }
        Ok(self.length(x))
    }

    pub fn is_left_descent(&self, s: usize, x: &ExtWeylElt) -> bool {
        self.length(&self.gen(s).mul(x)) < self.length(x)
    }

    pub fn is_right_descent(&self, x: &ExtWeylElt, s: usize) -> bool {
        self.length(&x.mul(&self.gen(s))) < self.length(x)
    }

    /// Lexicographically least reduced expression `x = s_{i1}⋯s_{ik}·ω` with ω of length 0.
    pub fn word_and_omega(&self, x: &ExtWeylElt) -> (Vec<usize>, ExtWeylElt) {
        let mut word = Vec::new();
        let mut cur = x.clone();
        let mut len = self.length(&cur);
        while len > 0 {
            let s = (0..self.num_gens())
                .find(|&s| self.length(&self.gen(s).mul(&cur)) < len)
                .expect("positive length element has a left descent");
            word.push(s);
            cur = self.gen(s).mul(&cur);
            len -= 1;
        }
        (word, cur)
    }

    pub fn reduced_word(&self, x: &ExtWeylElt) -> Result<Vec<usize>> {
        if !self.in_affine(x) {
            return Err(Error::NotAffine);
        }
        Ok(self.word_and_omega(x).0)
    }

    /// Bruhat order on W_ext (elements in different Ω-cosets are incomparable).
    pub fn bruhat_le(&self, x: &ExtWeylElt, y: &ExtWeylElt) -> bool {
        let ly = self.length(y);
        let lx = self.length(x);
        if lx > ly {
            return false;
        }
        if ly == 0 {
            return x == y;
        }
        let s = (0..self.num_gens()).find(|&s| self.is_right_descent(y, s)).unwrap();
        let ys = y.mul(&self.gen(s));
        let xs = x.mul(&self.gen(s));
        if self.length(&xs) < lx {
            self.bruhat_le(&xs, &ys)
        } else {
            self.bruhat_le(x, &ys)
        }
    }

    /// Word of a finite Weyl group element over 1..=rank (lexicographically least).
    pub fn finite_word(&self, w: &WMat) -> Vec<usize> {
        self.word_and_omega(&ExtWeylElt::finite(w.clone())).0
    }

    pub fn to_json(&self, x: &ExtWeylElt) -> serde_json::Value {
        let word: String = self.finite_word(&x.w).iter().map(|s| s.to_string()).collect();
        json!({"t": x.t, "w": word})
    }

    pub fn from_json(&self, v: &serde_json::Value) -> Result<ExtWeylElt> {
        let bad = |m: &str| Error::Parse { pos: "json".into(), msg: m.into() };
        let t: Weight = v["t"]
            .as_array()
            .ok_or_else(|| bad("missing t"))?
            .iter()
            .map(|x| x.as_i64().ok_or_else(|| bad("t entries must be integers")))
            .collect::<Result<_>>()?;
        if t.len() != self.rank {
            return Err(bad("t has wrong length"));
        }
        let word = v["w"].as_str().ok_or_else(|| bad("missing w"))?;
        let mut w = WMat::identity(self.rank);
        for ch in word.chars() {
            let i = ch.to_digit(10).ok_or_else(|| bad("w must be a digit string"))? as usize;
            if i == 0 || i > self.rank {
                return Err(bad("w letter out of range"));
            }
            w = w.mul(&self.simple_reflection(i - 1));
        }
        Ok(ExtWeylElt { t, w })
    }

    /// Human-readable name: reduced word over s0, s1, … followed by a length-zero part.
    pub fn display(&self, x: &ExtWeylElt) -> String {
        let (word, omega) = self.word_and_omega(x);
        let mut s: String = if word.is_empty() {
            "e".into()
        } else {
            word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join("")
        };
        if !omega.is_identity() {
            let t: Vec<String> = omega.t.iter().map(|c| c.to_string()).collect();
            let w: String = self.finite_word(&omega.w).iter().map(|i| format!("s{i}")).collect();
            s.push_str(&format!("·ω({};{})", t.join(","), if w.is_empty() { "e".into() } else { w }));
        }
        s
    }

    pub fn alcove_info(&self, lambda: &[i64]) -> AlcoveInfo {
        let p = self.p as i64;
        let shifted: Weight = lambda.iter().zip(&self.rho).map(|(a, b)| a + b).collect();
        let vals: Vec<i64> = self.pos_coroots.iter().map(|c| dot(&shifted, c)).collect();
        let in_fundamental = vals.iter().all(|&v| 0 < v && v < p);
        let in_closure = vals.iter().all(|&v| 0 <= v && v <= p);
        let in_lower_closure = vals.iter().all(|&v| 0 <= v && v < p);
        let mut walls = Vec::new();
        if in_closure {
            if dot(&shifted, self.highest_coroot()) == p {
                walls.push(0);
            }
            for i in 0..self.rank {
                if dot(&shifted, &self.simple_coroots[i]) == 0 {
                    walls.push(i + 1);
                }
            }
        }
        AlcoveInfo { weight: lambda.to_vec(), in_fundamental, in_closure, in_lower_closure, walls }
    }

    pub fn dot_stabilizer(&self, lambda: &[i64]) -> Stabilizer {
        let info = self.alcove_info(lambda);
        if info.in_closure {
            return Stabilizer::Walls(info.walls);
        }
        let p = self.p as i64;
        let image = (0..self.weyl.len())
            .filter(|&k| {
                let d: Weight = self.finite_dot(&self.weyl[k], lambda).iter().zip(lambda).map(|(a, b)| a - b).collect();
                d.iter().all(|x| x % p == 0) && self.in_root_lattice(&d.iter().map(|x| x / p).collect::<Vec<_>>())
            })
            .collect();
        Stabilizer::FiniteImage(image)
    }

    /// All weights in the box `lo ≤ coords ≤ hi` (per coordinate).
    pub fn box_weights(&self, lo: i64, hi: i64) -> Vec<Weight> {
        let mut out = vec![vec![]];
        for _ in 0..self.rank {
            out = out
                .into_iter()
                .flat_map(|v: Weight| {
                    (lo..=hi).map(move |x| {
                        let mut n = v.clone();
                        n.push(x);
                        n
                    })
                })
                .collect();
        }
        out
    }

    /// W_aff • λ inside the box `[lo, hi]^rank`, via `W•λ + pZR`.
    pub fn linkage_class(&self, lambda: &[i64], lo: i64, hi: i64) -> BTreeSet<Weight> {
        let p = self.p as i64;
        let orbit: Vec<Weight> = self.weyl.iter().map(|w| self.finite_dot(w, lambda)).collect();
        self.box_weights(lo, hi)
            .into_iter()
            .filter(|mu| {
                orbit.iter().any(|o| {
                    let d: Weight = mu.iter().zip(o).map(|(a, b)| a - b).collect();
                    d.iter().all(|x| x % p == 0) && self.in_root_lattice(&d.iter().map(|x| x / p).collect::<Vec<_>>())
                })
            })
            .collect()
    }

    /// `(W_ext • λ) ∩ (λ + ZR)` inside the box, via `W•λ + pX`.
    pub fn linkage_class_ext(&self, lambda: &[i64], lo: i64, hi: i64) -> BTreeSet<Weight> {
        let p = self.p as i64;
        let orbit: Vec<Weight> = self.weyl.iter().map(|w| self.finite_dot(w, lambda)).collect();
        self.box_weights(lo, hi)
            .into_iter()
            .filter(|mu| {
                let diff: Weight = mu.iter().zip(lambda).map(|(a, b)| a - b).collect();
                self.in_root_lattice(&diff) && orbit.iter().any(|o| mu.iter().zip(o).all(|(a, b)| (a - b) % p == 0))
            })
            .collect()
    }

    /// Returns `(x, t)` with `s = x t x⁻¹` and `t` a finite simple reflection.
    pub fn conjugate_to_finite(&self, s: usize) -> (ExtWeylElt, usize) {
        if s != 0 {
            return (self.identity(), s);
        }
        let target = self.gen(0);
        let mut best: Option<((usize, usize, Weight, usize, usize), ExtWeylElt)> = None;
        for t in self.box_weights(-1, 1) {
            for (wi, w) in self.weyl.iter().enumerate() {
                let x = ExtWeylElt { t: t.clone(), w: w.clone() };
                for tgen in 1..=self.rank {
                    if x.mul(&self.gen(tgen)).mul(&x.inverse()) == target {
                        let key = (self.weyl_len[wi], self.length(&x), t.clone(), wi, tgen);
                        if best.as_ref().map_or(true, |(k, _)| key < *k) {
                            best = Some((key, x.clone()));
                        }
                    }
                }
            }
        }
        let (key, x) = best.expect("s_0 is conjugate to a finite reflection");
        (x, key.4)
    }

    /// Minimal-length representatives of W_f \ W_aff with length ≤ `max_len`, by length.
    pub fn min_coset_reps(&self, max_len: usize) -> Vec<ExtWeylElt> {
        let mut out = vec![self.identity()];
        let mut frontier = vec![self.identity()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for x in &frontier {
                for s in 0..self.num_gens() {
                    let y = x.mul(&self.gen(s));
                    if self.length(&y) == self.length(x) + 1 && self.is_min_coset_rep(&y) && !next.contains(&y) {
                        next.push(y);
                    }
                }
            }
            next.sort_by_key(|y| self.word_and_omega(y).0);
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    pub fn is_min_coset_rep(&self, x: &ExtWeylElt) -> bool {
        (1..self.num_gens()).all(|s| !self.is_left_descent(s, x))
    }

    /// All elements of W_aff of length ≤ `max_len`.
    pub fn affine_elements(&self, max_len: usize) -> Vec<ExtWeylElt> {
        let mut out = vec![self.identity()];
        let mut frontier = vec![self.identity()];
        for _ in 0..max_len {
            let mut next: Vec<ExtWeylElt> = Vec::new();
            for x in &frontier {
                for s in 0..self.num_gens() {
                    let y = x.mul(&self.gen(s));
                    if self.length(&y) == self.length(x) + 1 && !next.contains(&y) {
                        next.push(y);
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// Length-zero elements of W_ext (representatives of X/ZR).
    pub fn omega_elements(&self) -> Vec<ExtWeylElt> {
        let mut out = Vec::new();
        for t in self.box_weights(-1, 1) {
            for w in &self.weyl {
                let x = ExtWeylElt { t: t.clone(), w: w.clone() };
                if self.length(&x) == 0 && !out.contains(&x) {
                    out.push(x);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_dot_action_examples() {
        let d = RootDatum::a1(5).unwrap();
        assert_eq!(d.dot_act(&d.gen(1), &[0]), vec![-2]);
        assert_eq!(d.dot_act(&d.gen(0), &[0]), vec![8]);
        assert_eq!(d.dot_act(&d.identity(), &[3]), vec![3]);
    }

    #[test]
    fn a1_lengths() {
        let d = RootDatum::a1(5).unwrap();
        assert_eq!(d.length(&d.identity()), 0);
        assert_eq!(d.length(&d.gen(0)), 1);
        assert_eq!(d.length(&d.gen(1)), 1);
        assert_eq!(d.length(&d.from_word(&[1, 0])), 2);
        // translation by 2pα, with α = 2ϖ
        assert_eq!(d.length(&ExtWeylElt::translation(vec![4])), 4);
        let omega = ExtWeylElt { t: vec![1], w: d.simple_reflection(0) };
        assert_eq!(d.length(&omega), 0);
    }

    #[test]
    fn smith_form() {
        assert_eq!(smith_diagonal(&[vec![2, -1], vec![-1, 2]]), vec![1, 3]);
        assert_eq!(smith_diagonal(&[vec![2]]), vec![2]);
    }

    #[test]
    fn torsion_check() {
        assert!(RootDatum::a2(3).is_err());
        assert!(RootDatum::a2_adjoint(3).is_ok());
        assert!(RootDatum::a2(5).is_ok());
    }

    #[test]
    fn a2_structure() {
        let d = RootDatum::a2(5).unwrap();
        assert_eq!(d.pos_roots.len(), 3);
        assert_eq!(d.weyl_group().len(), 6);
        assert_eq!(d.coxeter_number, 3);
        assert_eq!(d.rho, vec![1, 1]);
        assert_eq!(d.length(&d.gen(0)), 1);
        assert_eq!(d.omega_elements().len(), 3);
    }

    #[test]
    fn reduced_words_multiply_back() {
        let d = RootDatum::a2(5).unwrap();
        for x in d.affine_elements(4) {
            let w = d.reduced_word(&x).unwrap();
            assert_eq!(w.len(), d.length(&x));
            assert_eq!(d.from_word(&w), x);
        }
    }

    #[test]
    fn a1_linkage_window() {
        let d = RootDatum::a1(5).unwrap();
        let c: Vec<i64> = d.linkage_class(&[0], 0, 20).into_iter().map(|v| v[0]).collect();
        assert_eq!(c, vec![0, 8, 10, 18, 20]);
    }

    #[test]
    fn stabilizers() {
        let d = RootDatum::a1(5).unwrap();
        assert_eq!(d.dot_stabilizer(&[-1]), Stabilizer::Walls(vec![1]));
        assert_eq!(d.dot_stabilizer(&[4]), Stabilizer::Walls(vec![0]));
        assert_eq!(d.dot_stabilizer(&[1]), Stabilizer::Walls(vec![]));
        let a2 = RootDatum::a2(5).unwrap();
        assert_eq!(a2.dot_stabilizer(&[-1, -1]), Stabilizer::Walls(vec![1, 2]));
    }

    #[test]
    fn conjugation_a1() {
        let d = RootDatum::a1(5).unwrap();
        let (x, t) = d.conjugate_to_finite(0);
        assert_eq!(t, 1);
        assert_eq!(x, ExtWeylElt::translation(vec![1]));
        assert_eq!(x.mul(&d.gen(1)).mul(&x.inverse()), d.gen(0));
    }

    #[test]
    fn json_roundtrip() {
        let d = RootDatum::a2(5).unwrap();
        let x = d.from_word(&[0, 1, 2]);
        let j = d.to_json(&x);
        assert_eq!(d.from_json(&j).unwrap(), x);
    }

    #[test]
    fn config_parsing() {
        let d = RootDatum::from_config("rank = 2\ncartan = 2 -1; -1 2\np = 7\n").unwrap();
        assert_eq!(d.weyl_group().len(), 6);
        assert!(matches!(RootDatum::from_config("p = x"), Err(Error::Parse { .. })));
        assert!(RootDatum::from_config("type = A1\np = 4").is_err());
    }
}
