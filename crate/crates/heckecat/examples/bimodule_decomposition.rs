//! Bott–Samelson bimodules, their characters and their indecomposable summands.
//!
//! Usage: cargo run --release --example bimodule_decomposition -- [word digits, e.g. 101]

use heckecat::realization::Realization;
use heckecat::sbim::character::ch;
use heckecat::sbim::decompose::{decompose, group};
use heckecat::sbim::SBimObject;
use heckecat::weyl::RootDatum;

fn main() -> heckecat::Result<()> {
    let word: Vec<usize> = std::env::args()
        .nth(1)
        .map(|w| w.chars().filter_map(|c| c.to_digit(10)).map(|c| c as usize).collect())
        .unwrap_or_else(|| vec![1, 0, 1]);
    let d = RootDatum::a1(5)?;
    let r = Realization::new(&d)?;
    let bs = SBimObject::bott_samelson(&r, &word);
    println!("BS{word:?}: rank {}, graded rank {}", bs.rank(), bs.graded_rank());
    println!("ch = {}", ch(&bs, &d)?.display(&d));
    for (summand, shift, mult) in group(&decompose(&bs, &d, 0)?) {
        println!("  {mult} × B_{}({shift}) with ch {}", d.display(&summand.top), summand.character.display(&d));
    }
    Ok(())
}
