//! The realization on polynomials: reflections, Demazure operators and the R^s-splitting.

use heckecat::poly::GradedPoly;
use heckecat::realization::Realization;
use heckecat::weyl::RootDatum;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> heckecat::Result<()> {
    let d = RootDatum::a2(5)?;
    let r = Realization::new(&d)?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for s in 0..d.num_gens() {
        println!("s{s}: α = {:?}, δ = {:?}", r.root(s), r.delta(s));
    }
    let f = GradedPoly::random_homogeneous(2, 5, 3, &mut rng);
    println!("f = {f:?}");
    for s in 0..d.num_gens() {
        let (a, b) = r.invariant_split(s, &f);
        println!("  s{s}·f = {:?}", r.s_act(s, &f));
        println!("  ∂{s} f = {:?}", r.demazure(s, &f)?);
        println!("  f = {a:?} + δ·({b:?})");
    }
    let braid = |a: usize, b: usize| r.s_act(a, &r.s_act(b, &r.s_act(a, &f)));
    println!("braid relation s1s2s1 = s2s1s2 on f: {}", braid(1, 2) == braid(2, 1));
    Ok(())
}
