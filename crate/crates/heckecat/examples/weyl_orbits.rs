//! Dot orbits, stabilizers and reduced words in the affine Weyl group.
//!
//! Usage: cargo run --example weyl_orbits -- [p]

use heckecat::weyl::{RootDatum, Stabilizer};

fn main() -> heckecat::Result<()> {
    let p: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let a1 = RootDatum::a1(p)?;
    let orbit: Vec<i64> = a1.linkage_class(&[0], 0, 4 * p as i64).into_iter().map(|w| w[0]).collect();
    println!("A1 linkage class of 0 in [0, {}]: {orbit:?}", 4 * p);
    for lambda in [-1, 0, p as i64 - 1] {
        match a1.dot_stabilizer(&[lambda]) {
            Stabilizer::Walls(w) => println!("  stabilizer of {lambda}: walls {w:?}"),
            Stabilizer::FiniteImage(ix) => println!("  stabilizer of {lambda}: finite image {ix:?}"),
        }
    }

    let a2 = RootDatum::a2(p)?;
    for word in [vec![0, 1, 2], vec![1, 2, 1, 2], vec![0, 1, 0, 2, 0]] {
        let x = a2.from_word(&word);
        println!(
            "A2 word {word:?}: {} of length {}, reduced word {:?}, 0 ↦ {:?}",
            a2.display(&x),
            a2.length(&x),
            a2.reduced_word(&x)?,
            a2.dot_act(&x, &[0, 0])
        );
    }
    for s in 0..a2.num_gens() {
        let (x, t) = a2.conjugate_to_finite(s);
        println!("  s{s} = x s{t} x⁻¹ with x = {}", a2.display(&x));
    }
    Ok(())
}
