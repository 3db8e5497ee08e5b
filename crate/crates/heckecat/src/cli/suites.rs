//! Self-checks run by `heckecat verify`.

use std::collections::{BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::config::RunConfig;
use super::output::Output;
use super::Suite;
use crate::error::Result;
use crate::field::Gf;
use crate::hecke::oracle::tilting_character;
use crate::hecke::tilting::tilting_from_pcan;
use crate::hecke::{HeckeAlgebra, LaurentInt, PCanonical};
use crate::modrep::{
    casimir_scalar, dot_s, hc_center_check, splitting_fiber_rank, translation_fiber, verify_matrix_algebra,
    wall_crossing_fiber, BabyVerma, CentralPoint,
};
use crate::poly::GradedPoly;
use crate::realization::Realization;
use crate::sbim::character::ch;
use crate::sbim::lemmas::{verify_delta_product, verify_exact_sequences};
use crate::sbim::SBimObject;
use crate::weyl::{ExtWeylElt, RootDatum, Weight};

/// Degree up to which exact sequences are checked.
pub const SEQUENCE_DEGREE: i32 = 10;

#[derive(Default)]
struct Checks {
    items: Vec<(&'static str, String, bool, String)>,
}

impl Checks {
    fn push(&mut self, suite: &'static str, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.items.push((suite, name.into(), pass, detail.into()));
    }

    fn into_output(self, cfg: &RunConfig) -> Output {
        let pass = self.items.iter().all(|c| c.2);
        let checks: Vec<Value> =
            self.items.iter().map(|(s, n, ok, d)| json!({"suite": s, "name": n, "pass": ok, "detail": d})).collect();
        let rows = self
            .items
            .into_iter()
            .map(|(s, n, ok, d)| vec![s.to_string(), n, if ok { "PASS" } else { "FAIL" }.into(), d])
            .collect();
        Output {
            json: json!({"p": cfg.p, "seed": cfg.seed, "pass": pass, "checks": checks}),
            header: ["suite", "check", "result", "detail"].map(String::from).to_vec(),
            rows,
            pass,
        }
    }
}

pub fn verify(cfg: &RunConfig, suite: Suite) -> Result<Output> {
    let mut checks = Checks::default();
    let all = suite == Suite::All;
    if all || suite == Suite::Weyl {
        weyl(cfg, &mut checks)?;
    }
    if all || suite == Suite::Realization {
        realization(cfg, &mut checks)?;
    }
    if all || suite == Suite::Sbim {
        sbim(cfg, &mut checks)?;
    }
    if all || suite == Suite::Hecke {
        hecke(cfg, &mut checks)?;
    }
    if all || suite == Suite::Modrep {
        modrep(cfg, &mut checks)?;
    }
    Ok(checks.into_output(cfg))
}

fn sample<'a, T>(items: &'a [T], n: usize, rng: &mut ChaCha8Rng) -> Vec<&'a T> {
    items.choose_multiple(rng, n.min(items.len())).collect()
}

/// Closure of `{λ}` under the dot action of the affine generators, clipped to `[lo, hi]^rank`.
pub fn dot_closure(d: &RootDatum, lambda: &[i64], lo: i64, hi: i64) -> BTreeSet<Weight> {
    let inside = |w: &Weight| w.iter().all(|&c| lo <= c && c <= hi);
    let mut seen = BTreeSet::from([lambda.to_vec()]);
    let mut queue = VecDeque::from([lambda.to_vec()]);
    while let Some(mu) = queue.pop_front() {
        for s in 0..d.num_gens() {
            let nu = d.dot_act(&d.gen(s), &mu);
            if inside(&nu) && seen.insert(nu.clone()) {
                queue.push_back(nu);
            }
        }
    }
    seen
}

fn weyl(cfg: &RunConfig, c: &mut Checks) -> Result<()> {
    let d = cfg.datum()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let els = d.affine_elements(cfg.max_len);
    let picks = sample(&els, cfg.samples, &mut rng);

    let mut assoc = true;
    let mut inverses = true;
    for x in &picks {
        inverses &= x.mul(&x.inverse()).is_identity() && d.length(x) == d.length(&x.inverse());
        for y in &picks {
            for z in picks.iter().take(3) {
                assoc &= x.mul(y).mul(z) == x.mul(&y.mul(z));
            }
        }
    }
    c.push("weyl", "associativity", assoc, format!("{} elements", picks.len()));
    c.push("weyl", "inverses and length symmetry", inverses, "");

    let p = d.p as i64;
    let mut hom = true;
    for x in &picks {
        for y in picks.iter().take(3) {
            let lambda: Weight = (0..d.rank).map(|_| rng.gen_range(-p..2 * p)).collect();
            hom &= d.dot_act(&x.mul(y), &lambda) == d.dot_act(x, &d.dot_act(y, &lambda));
        }
    }
    c.push("weyl", "dot action is a homomorphism", hom, "");

    let mut words = true;
    for x in &els {
        match d.reduced_word(x) {
            Ok(w) => words &= w.len() == d.length(x) && d.from_word(&w) == *x,
            Err(_) => words = false,
        }
    }
    c.push(
        "weyl",
        "reduced words realize lengths",
        words,
        format!("{} elements up to length {}", els.len(), cfg.max_len),
    );

    let (lo, hi) = (-p, 2 * p);
    let margin = hi - lo;
    let mut linkage = true;
    for lambda in d.box_weights(-1, p - 1).into_iter().take(cfg.samples) {
        let fast = d.linkage_class(&lambda, lo, hi);
        let ext = d.linkage_class_ext(&lambda, lo, hi);
        let walk: BTreeSet<Weight> = dot_closure(&d, &lambda, lo - margin, hi + margin)
            .into_iter()
            .filter(|w| w.iter().all(|&x| lo <= x && x <= hi))
            .collect();
        linkage &= fast == ext && fast == walk;
    }
    c.push("weyl", "linkage classes agree", linkage, format!("box [{lo}, {hi}]"));
    Ok(())
}

fn realization(cfg: &RunConfig, c: &mut Checks) -> Result<()> {
    let d = cfg.datum()?;
    let r = Realization::new(&d)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let polys: Vec<GradedPoly> = (0..cfg.samples)
        .map(|i| GradedPoly::random_homogeneous(r.nvars(), d.p, 1 + (i % 4) as u32, &mut rng))
        .collect();
    let (mut sq, mut dsq, mut split, mut leibniz) = (true, true, true, true);
    for f in &polys {
        for s in 0..d.num_gens() {
            sq &= r.s_act(s, &r.s_act(s, f)) == *f;
            dsq &= r.demazure(s, &r.demazure(s, f)?)?.is_zero();
            let (a, b) = r.invariant_split(s, f);
            split &= r.is_invariant(s, &a) && r.is_invariant(s, &b) && a.add(&b.mul(r.delta(s))) == *f;
            for g in polys.iter().take(2) {
                let lhs = r.demazure(s, &f.mul(g))?;
                let rhs = r.demazure(s, f)?.mul(g).add(&r.s_act(s, f).mul(&r.demazure(s, g)?));
                leibniz &= lhs == rhs;
            }
        }
    }
    c.push("realization", "s² = id", sq, format!("{} polynomials", polys.len()));
    c.push("realization", "∂_s² = 0", dsq, "");
    c.push("realization", "twisted Leibniz rule", leibniz, "");
    c.push("realization", "R = R^s ⊕ δ_s R^s", split, "");
    let mut braid = true;
    for s in 0..d.num_gens() {
        for t in s + 1..d.num_gens() {
            let st = d.gen(s).mul(&d.gen(t));
            let m = (1..=6).find(|&k| st.pow(k).is_identity());
            let Some(m) = m else { continue };
            let word = |a: usize, b: usize| (0..m).map(|i| if i % 2 == 0 { a } else { b }).collect::<Vec<_>>();
            for f in &polys {
                let apply = |w: &[usize]| -> Result<GradedPoly> {
                    w.iter().rev().try_fold(f.clone(), |g, &u| r.demazure(u, &g))
                };
                braid &= apply(&word(s, t))? == apply(&word(t, s))?;
            }
        }
    }
    c.push("realization", "braid relations for ∂", braid, "");
    Ok(())
}

/// Nonempty words of length at most `max` without repeated adjacent letters.
pub fn bs_words(gens: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max {
        layer = layer
            .iter()
            .flat_map(|w| (0..gens).filter(move |&s| w.last() != Some(&s)).map(move |s| [w.as_slice(), &[s]].concat()))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn sbim(cfg: &RunConfig, c: &mut Checks) -> Result<()> {
    let d = cfg.datum()?;
    let r = Realization::new(&d)?;
    let hecke = HeckeAlgebra::new(&d);
    for s in 0..d.num_gens() {
        let reports = verify_exact_sequences(&r, s, SEQUENCE_DEGREE);
        let ok = reports.iter().all(|x| x.ok);
        let failing: Vec<String> = reports.iter().filter_map(|x| x.failing_degree.map(|g| g.to_string())).collect();
        c.push(
            "sbim",
            format!("exact sequences for s{s}"),
            ok,
            if failing.is_empty() {
                format!("degrees ≤ {SEQUENCE_DEGREE}")
            } else {
                format!("fails in degrees {}", failing.join(" "))
            },
        );
    }

    let total = cfg.max_len.max(2);
    let words = bs_words(d.num_gens(), total - 1);
    let mut pairs: Vec<(&Vec<usize>, &Vec<usize>)> = words
        .iter()
        .flat_map(|u| words.iter().map(move |w| (u, w)))
        .filter(|(u, w)| u.len() + w.len() <= total)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    pairs.shuffle(&mut rng);
    pairs.truncate(cfg.samples);
    let mut mult = true;
    for (u, w) in &pairs {
        let bu = SBimObject::bott_samelson(&r, u);
        let bw = SBimObject::bott_samelson(&r, w);
        let lhs = ch(&bu.tensor(&bw), &d)?;
        mult &= lhs == hecke.mul(&ch(&bu, &d)?, &ch(&bw, &d)?) && lhs == hecke.bs_word(&[u.as_slice(), w].concat());
    }
    let count = pairs.len();
    c.push("sbim", "ch is multiplicative on Bott–Samelson objects", mult, format!("{count} pairs"));

    let mut quad = true;
    for s in 0..d.num_gens() {
        let b = SBimObject::bs_gen(&r, s);
        let lhs = ch(&b.tensor(&b), &d)?;
        let two = LaurentInt::v().add(&LaurentInt::monomial(1, -1));
        quad &= lhs == ch(&b, &d)?.scale(&two);
    }
    c.push("sbim", "ch(B_s B_s) = (v + v⁻¹) ch(B_s)", quad, "");

    let els = d.affine_elements(cfg.max_len.min(3));
    let mut delta = true;
    for _ in 0..cfg.samples {
        let x: &ExtWeylElt = els.choose(&mut rng).unwrap();
        let y: &ExtWeylElt = els.choose(&mut rng).unwrap();
        delta &= verify_delta_product(&r, x, y);
    }
    c.push("sbim", "Δ_x ⊗ Δ_y ≅ Δ_xy", delta, format!("{} pairs", cfg.samples));
    Ok(())
}

fn hecke(cfg: &RunConfig, c: &mut Checks) -> Result<()> {
    let d = cfg.datum()?;
    let pc = PCanonical::new(&d, cfg.seed)?;
    let budget = super::commands::PCAN_BUDGET[(d.rank - 1).min(1)];
    let els = d.affine_elements(cfg.max_len.min(budget));
    let (mut bar, mut tri, mut positive) = (true, true, true);
    for w in &els {
        let kl = pc.hecke.kl_basis(w);
        bar &= pc.hecke.bar(&kl) == kl;
        let b = pc.p_canonical(w)?;
        tri &= b.coeff(w) == LaurentInt::one() && b.terms().keys().all(|y| d.bruhat_le(y, w));
        positive &= pc.in_kl_basis(w)?.terms().values().all(|c| c.all_nonnegative());
    }
    c.push("hecke", "KL basis is bar invariant", bar, format!("{} elements", els.len()));
    c.push("hecke", "p-canonical basis is unitriangular", tri, "");
    c.push("hecke", "p-canonical basis is KL-positive", positive, "");

    let a1 = RootDatum::a1(cfg.p)?;
    let pc1 = PCanonical::new(&a1, cfg.seed)?;
    let mut tilt = true;
    for n in 0..=cfg.bound.min(4 * cfg.p as i64) {
        tilt &= tilting_from_pcan(&pc1, n)? == tilting_character(n, cfg.p as i64);
    }
    c.push(
        "hecke",
        "SL2 tilting characters match the oracle",
        tilt,
        format!("n ≤ {}", cfg.bound.min(4 * cfg.p as i64)),
    );
    Ok(())
}

fn modrep(cfg: &RunConfig, c: &mut Checks) -> Result<()> {
    let p = cfg.p;
    let fp = Gf::prime(p)?;
    let fq = Gf::new(p, cfg.field_ext)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let xis: Vec<u32> = (0..cfg.samples).map(|_| fq.random(&mut rng)).collect();

    let mut verma = true;
    for (f, xs) in [(&fp, fp.elements().collect::<Vec<_>>()), (&fq, xis.clone())] {
        for xi in xs {
            let z = BabyVerma::kostant(&CentralPoint::kostant(f, xi))?;
            verma &= z.dim() == p as usize && z.verify().ok;
        }
    }
    c.push("modrep", "baby Verma modules", verma, format!("all of F_{p} and {} samples", xis.len()));

    let mut azumaya = true;
    let mut tested = 0;
    for &xi in xis.iter().take(3) {
        let pt = CentralPoint::kostant(&fq, xi);
        if pt.is_regular() {
            azumaya &= verify_matrix_algebra(&pt)?.bijective;
            tested += 1;
        }
    }
    c.push("modrep", "U_χ is a matrix algebra at regular points", azumaya, format!("{tested} points"));

    let mut trans = true;
    let mut count = 0;
    for &xi in &xis {
        if !CentralPoint::kostant(&fq, xi).in_open_locus() {
            continue;
        }
        let lambda = rng.gen_range(-1..p as i64 - 1);
        trans &= translation_fiber(&fq, lambda, xi)?.ok;
        count += 1;
    }
    c.push("modrep", "translation fibers are baby Vermas", trans, format!("{count} points"));

    let mut wall = true;
    for lambda in 0..p as i64 - 1 {
        for mu in [-1, p as i64 - 1] {
            for w_is_s in [false, true] {
                wall &= wall_crossing_fiber(&fp, lambda, mu, w_is_s)?.ok;
            }
        }
    }
    c.push("modrep", "wall-crossing filtrations", wall, "all λ in the fundamental alcove, both walls");

    let mut split = true;
    let mut count = 0;
    for &xi in &xis {
        if !CentralPoint::kostant(&fq, xi).in_open_locus() {
            continue;
        }
        let lambda = rng.gen_range(-1..p as i64 - 1);
        let mu = rng.gen_range(-1..p as i64 - 1);
        let r = splitting_fiber_rank(&fq, lambda, mu, xi)?;
        split &= r.ok;
        count += 1;
    }
    let degenerate = splitting_fiber_rank(&fp, 0, 1.min(p as i64 - 2), fp.from_i64(-1))?;
    split &= degenerate.ok;
    c.push("modrep", "splitting fibers have rank p²", split, format!("{count} generic points and ξ = -1"));

    let mut center = true;
    for xi in fq.elements() {
        center &= hc_center_check(&fq, xi)?.constant_on_orbit;
    }
    c.push("modrep", "Casimir is constant on dot orbits", center, format!("all of F_{}", fq.q()));

    let orbits: BTreeSet<(u32, u32)> = fq
        .elements()
        .map(|x| {
            let y = dot_s(&fq, x);
            (x.min(y), x.max(y))
        })
        .collect();
    let scalars: BTreeSet<u32> = orbits.iter().map(|&(x, _)| casimir_scalar(&fq, x)).collect();
    c.push("modrep", "Casimir separates dot orbits", scalars.len() == orbits.len(), format!("{} orbits", orbits.len()));
    Ok(())
}
