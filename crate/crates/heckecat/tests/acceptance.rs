//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use heckecat::cli::suites::{bs_words, dot_closure};
use heckecat::field::Gf;
use heckecat::hecke::antispherical::{dot_zero, tilting_multiplicities};
use heckecat::hecke::oracle::{tilting_character, Character};
use heckecat::hecke::{HeckeAlgebra, LaurentInt, PCanonical};
use heckecat::modrep::{
    build_baby_verma, splitting_fiber_rank, verify_matrix_algebra, wall_crossing_fiber, Borel, CentralPoint,
};
use heckecat::realization::Realization;
use heckecat::sbim::character::ch;
use heckecat::sbim::lemmas::{conjugation_isom, verify_delta_product, verify_exact_sequences};
use heckecat::sbim::SBimObject;
use heckecat::weyl::{ExtWeylElt, RootDatum, Weight};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// All comparisons are exact: integer and finite-field equalities with zero tolerance.
const EXACT_TOLERANCE: i64 = 0;
const SEED: u64 = 20;
const SEQUENCE_DEGREE: i32 = 10;
const TILTING_MAX_LEN: usize = 6;
const DELTA_PAIRS: usize = 20;
const DELTA_MAX_LEN: usize = 4;
const CH_TOTAL_LEN: usize = 5;
/// Rank-32 characters in A2 cost seconds each, so A2 products stop one step earlier.
const CH_TOTAL_LEN_A2: usize = 4;
const SAMPLE_POINTS: usize = 10;

type Outcome = Result<String, String>;

fn a2_for(p: u32) -> RootDatum {
    if p == 3 { RootDatum::a2_adjoint(p) } else { RootDatum::a2(p) }.expect("A2 datum")
}

fn baby_verma_dimension() -> Outcome {
    let mut built = 0;
    for p in [3u32, 5, 7] {
        for k in [1, 2] {
            let f = Gf::new(p, k).unwrap();
            for xi in f.elements() {
                let pt = CentralPoint::kostant(&f, xi);
                for b in pt.borels() {
                    let z = build_baby_verma(&pt, b).map_err(|e| e.to_string())?;
                    if z.dim() != p as usize || !z.verify().ok {
                        return Err(format!("p={p} F_{} ξ={}: dim {}", f.q(), f.format(xi), z.dim()));
                    }
                    built += 1;
                }
            }
        }
    }
    Ok(format!("{built} modules, each of dimension p"))
}

/// A Kostant point moved by a random unipotent and a random torus element.
fn random_regular_point(f: &Gf, rng: &mut ChaCha8Rng) -> CentralPoint {
    let xi = f.random(rng);
    let base = CentralPoint::kostant(f, xi);
    let [a, b, c] = base.eta_for(Borel { r: f.random(rng) });
    let t2 = f.pow(f.random_nonzero(rng), 2);
    CentralPoint::new(f, [f.mul(t2, a), b, f.div(c, t2)], xi)
}

fn matrix_algebra() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut seen = 0;
    for p in [3u32, 5] {
        for i in 0..SAMPLE_POINTS {
            let f = Gf::new(p, 1 + (i % 4) as u32).unwrap();
            let pt = random_regular_point(&f, &mut rng);
            if !(pt.is_regular() && pt.is_compatible()) {
                return Err(format!("sample {:?} is not a regular compatible point", pt.eta));
            }
            let r = verify_matrix_algebra(&pt).map_err(|e| e.to_string())?;
            let pp = (p * p) as usize;
            if !(r.bijective && r.dim_algebra == pp && r.dim_end == pp && r.unit_to_identity) {
                return Err(format!("p={p} F_{}: {r:?}", f.q()));
            }
            seen += 1;
        }
    }
    Ok(format!("{seen} regular points over F_p … F_p⁴, both sides of dimension p²"))
}

fn splitting_rank() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let mut seen = 0;
    for p in [3u32, 5] {
        let fp = Gf::prime(p).unwrap();
        let f = Gf::new(p, 2).unwrap();
        let mut triples = vec![(0, 0, fp.from_i64(-1), &fp)];
        while triples.len() < SAMPLE_POINTS {
            let xi = f.random(&mut rng);
            if CentralPoint::kostant(&f, xi).in_open_locus() {
                let pick = |rng: &mut ChaCha8Rng| rng.gen_range(-1..p as i64 - 1);
                triples.push((pick(&mut rng), pick(&mut rng), xi, &f));
            }
        }
        for (lambda, mu, xi, field) in triples {
            let r = splitting_fiber_rank(field, lambda, mu, xi).map_err(|e| e.to_string())?;
            if (r.rank as i64 - (p * p) as i64).abs() > EXACT_TOLERANCE {
                return Err(format!("p={p} λ={lambda} μ={mu} ξ={}: rank {}", r.xi, r.rank));
            }
            seen += 1;
        }
    }
    Ok(format!("{seen} triples of rank p²"))
}

fn wall_crossing() -> Outcome {
    let mut seen = 0;
    for p in [3u32, 5] {
        let f = Gf::prime(p).unwrap();
        let pp = (p * p) as usize;
        for lambda in 0..p as i64 - 1 {
            for mu in [-1, p as i64 - 1] {
                for w_is_s in [false, true] {
                    let r = wall_crossing_fiber(&f, lambda, mu, w_is_s).map_err(|e| e.to_string())?;
                    let sub_first = r.subquotient_labels.first() == Some(&r.expected_sub);
                    if !(r.ok && r.total_dim == 2 * pp && r.subquotient_dims == [pp, pp] && sub_first) {
                        return Err(format!("{r:?}"));
                    }
                    seen += 1;
                }
            }
        }
    }
    Ok(format!("{seen} fibers of dimension 2p² with subquotients in Bruhat order"))
}

fn tilting_characters() -> Outcome {
    let mut seen = 0;
    for p in [3u32, 5] {
        let d = RootDatum::a1(p).unwrap();
        let pc = PCanonical::new(&d, SEED).map_err(|e| e.to_string())?;
        for w in d.min_coset_reps(TILTING_MAX_LEN) {
            let b = pc.p_canonical(&w).map_err(|e| e.to_string())?;
            let mut engine = Character::new();
            for (y, c) in tilting_multiplicities(&d, &b) {
                *engine.entry(dot_zero(&d, &y)[0]).or_insert(0) += c;
            }
            engine.retain(|_, c| *c != 0);
            let n = dot_zero(&d, &w)[0];
            let oracle = tilting_character(n, p as i64);
            if engine != oracle {
                return Err(format!("p={p} w={}: {engine:?} vs {oracle:?}", d.display(&w)));
            }
            seen += 1;
        }
    }
    Ok(format!("{seen} coset representatives of length ≤ {TILTING_MAX_LEN}"))
}

fn delta_and_conjugation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let mut pairs = 0;
    let mut conj = 0;
    for d in [RootDatum::a1(5).unwrap(), RootDatum::a2_adjoint(5).unwrap()] {
        let r = Realization::new(&d).map_err(|e| e.to_string())?;
        let omegas = d.omega_elements();
        let els: Vec<ExtWeylElt> =
            d.affine_elements(DELTA_MAX_LEN).iter().flat_map(|x| omegas.iter().map(move |o| x.mul(o))).collect();
        for _ in 0..DELTA_PAIRS {
            let x = els.choose(&mut rng).unwrap();
            let y = els.choose(&mut rng).unwrap();
            if !verify_delta_product(&r, x, y) {
                return Err(format!("{}: Δ_{} ⊗ Δ_{}", d.name, d.display(x), d.display(y)));
            }
            pairs += 1;
        }
        for s in 0..d.num_gens() {
            let (x, t) = d.conjugate_to_finite(s);
            conjugation_isom(&r, s, t, &x).map_err(|e| format!("{} s{s}: {e}", d.name))?;
            conj += 1;
        }
    }
    Ok(format!("{pairs} Δ pairs, {conj} conjugation isomorphisms"))
}

fn exact_sequences() -> Outcome {
    let mut seen = 0;
    for d in [RootDatum::a1(5).unwrap(), RootDatum::a2(5).unwrap()] {
        let r = Realization::new(&d).map_err(|e| e.to_string())?;
        for s in 0..d.num_gens() {
            for rep in verify_exact_sequences(&r, s, SEQUENCE_DEGREE) {
                if !rep.ok {
                    return Err(format!("{}: {rep:?}", d.name));
                }
                seen += 1;
            }
        }
    }
    Ok(format!("{seen} sequences exact in degrees ≤ {SEQUENCE_DEGREE}"))
}

/// `μ ∈ (W_ext • λ) ∩ (λ + ZR)`, by enumerating the finite Weyl group.
fn in_ext_class(d: &RootDatum, lambda: &[i64], mu: &[i64]) -> bool {
    let p = d.p as i64;
    let diff: Weight = mu.iter().zip(lambda).map(|(a, b)| a - b).collect();
    d.in_root_lattice(&diff)
        && d.weyl_group().iter().any(|w| {
            let o = d.finite_dot(w, lambda);
            mu.iter().zip(&o).all(|(a, b)| (a - b) % p == 0)
        })
}

fn linkage() -> Outcome {
    let mut seen = 0;
    for p in [3u32, 5] {
        for d in [RootDatum::a1(p).unwrap(), a2_for(p)] {
            let radius = 3 * p as i64;
            let margin = 2 * radius;
            let box_ = d.box_weights(-radius, radius);
            let mut done: BTreeSet<Weight> = BTreeSet::new();
            for lambda in &box_ {
                if done.contains(lambda) {
                    continue;
                }
                let orbit: BTreeSet<Weight> = dot_closure(&d, lambda, -radius - margin, radius + margin)
                    .into_iter()
                    .filter(|w| w.iter().all(|&x| x.abs() <= radius))
                    .collect();
                let ext: BTreeSet<Weight> = box_.iter().filter(|mu| in_ext_class(&d, lambda, mu)).cloned().collect();
                if orbit != ext || ext != d.linkage_class(lambda, -radius, radius) {
                    return Err(format!("{} p={p} λ={lambda:?}", d.name));
                }
                seen += orbit.len();
                done.extend(orbit);
            }
        }
    }
    Ok(format!("{seen} weights classified on boxes of radius 3p"))
}

fn character_homomorphism() -> Outcome {
    let mut seen = 0;
    for d in [RootDatum::a1(5).unwrap(), RootDatum::a2(5).unwrap()] {
        let r = Realization::new(&d).map_err(|e| e.to_string())?;
        let hecke = HeckeAlgebra::new(&d);
        let max = if d.rank == 1 { CH_TOTAL_LEN } else { CH_TOTAL_LEN_A2 };
        let mut objects: Vec<(String, usize, SBimObject, Option<ExtWeylElt>)> = Vec::new();
        for w in bs_words(d.num_gens(), max - 1) {
            let name: String = w.iter().map(|s| format!("B{s}")).collect();
            objects.push((name, w.len(), SBimObject::bott_samelson(&r, &w), None));
        }
        for x in d.affine_elements(max - 1).into_iter().filter(|x| d.length(x) > 0) {
            objects.push((format!("Δ[{}]", d.display(&x)), d.length(&x), SBimObject::delta(&r, &x), Some(x)));
        }
        let chars: Vec<_> =
            objects.iter().map(|o| ch(&o.2, &d)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        for (i, (ni, li, mi, xi)) in objects.iter().enumerate() {
            for (j, (nj, lj, mj, xj)) in objects.iter().enumerate() {
                if li + lj > max {
                    continue;
                }
                // Δ_x ⊗ Δ_y ≅ Δ_xy matches H_x H_y only when lengths add
                if let (Some(x), Some(y)) = (xi, xj) {
                    if d.length(&x.mul(y)) != li + lj {
                        continue;
                    }
                }
                let lhs = ch(&mi.tensor(mj), &d).map_err(|e| e.to_string())?;
                if lhs != hecke.mul(&chars[i], &chars[j]) {
                    return Err(format!("{}: ch({ni} ⊗ {nj})", d.name));
                }
                seen += 1;
            }
        }
        let two = LaurentInt::v().add(&LaurentInt::monomial(1, -1));
        for s in 0..d.num_gens() {
            let b = SBimObject::bs_gen(&r, s);
            let lhs = ch(&b.tensor(&b), &d).map_err(|e| e.to_string())?;
            if lhs != ch(&b, &d).map_err(|e| e.to_string())?.scale(&two) {
                return Err(format!("{}: ch(B{s} ⊗ B{s})", d.name));
            }
            seen += 1;
        }
    }
    Ok(format!("{seen} products, total length ≤ {CH_TOTAL_LEN} (A1) and ≤ {CH_TOTAL_LEN_A2} (A2)"))
}

fn finite_type_sanity() -> Outcome {
    let mut seen = 0;
    for p in [5u32, 7] {
        let d = RootDatum::a2(p).unwrap();
        let pc = PCanonical::new(&d, SEED).map_err(|e| e.to_string())?;
        let finite: Vec<ExtWeylElt> = d.affine_elements(3).into_iter().filter(|x| x.is_finite()).collect();
        if finite.len() != 6 {
            return Err(format!("found {} finite elements", finite.len()));
        }
        for w in &finite {
            let b = pc.p_canonical(w).map_err(|e| e.to_string())?;
            if b != pc.hecke.kl_basis(w) {
                return Err(format!("p={p} w={}", d.display(w)));
            }
            seen += 1;
        }
    }
    Ok(format!("{seen} elements equal to the KL basis"))
}

struct Criterion {
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { name: "baby Verma dimension", budget: secs(1), run: baby_verma_dimension },
        Criterion { name: "matrix-algebra identity", budget: secs(10), run: matrix_algebra },
        Criterion { name: "splitting fiber rank", budget: secs(30), run: splitting_rank },
        Criterion { name: "wall-crossing filtration", budget: secs(30), run: wall_crossing },
        Criterion { name: "tilting characters", budget: secs(600), run: tilting_characters },
        Criterion { name: "Δ group law and conjugation", budget: secs(60), run: delta_and_conjugation },
        Criterion { name: "exact sequences", budget: secs(60), run: exact_sequences },
        Criterion { name: "linkage", budget: secs(60), run: linkage },
        Criterion { name: "character homomorphism", budget: secs(120), run: character_homomorphism },
        Criterion { name: "finite-type sanity", budget: secs(120), run: finite_type_sanity },
    ];
    let mut failures = 0;
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (status, detail) = match (&outcome, elapsed <= c.budget) {
            (Ok(msg), true) => ("PASS", msg.clone()),
            (Ok(msg), false) => ("FAIL", format!("{msg}; over the {:?} budget", c.budget)),
            (Err(msg), _) => ("FAIL", msg.clone()),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!("{status} {:>2} {}: {detail} [{:.2?}]", i + 1, c.name, elapsed);
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
