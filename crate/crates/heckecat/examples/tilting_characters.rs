//! Tilting characters for SL2 from the p-canonical basis, compared with Donkin's formula.
//!
//! Usage: cargo run --release --example tilting_characters -- [p] [max_len]

use heckecat::hecke::antispherical::{dot_zero, tilting_multiplicities};
use heckecat::hecke::oracle::tilting_character;
use heckecat::hecke::PCanonical;
use heckecat::weyl::RootDatum;

fn main() -> heckecat::Result<()> {
    let args: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let p = args.first().copied().unwrap_or(5);
    let max_len = args.get(1).copied().unwrap_or(6) as usize;
    let datum = RootDatum::a1(p)?;
    let pc = PCanonical::new(&datum, 0)?;
    let mut all_match = true;
    for w in datum.min_coset_reps(max_len) {
        let n = dot_zero(&datum, &w)[0];
        let engine: Vec<(i64, i64)> = tilting_multiplicities(&datum, &pc.p_canonical(&w)?)
            .into_iter()
            .map(|(y, c)| (dot_zero(&datum, &y)[0], c))
            .rev()
            .collect();
        let oracle: Vec<(i64, i64)> = tilting_character(n, p as i64).into_iter().rev().collect();
        let ok = engine == oracle;
        all_match &= ok;
        println!(
            "{:<14} T({n:>3}) engine {:?} oracle {:?} {}",
            datum.display(&w),
            engine,
            oracle,
            if ok { "ok" } else { "MISMATCH" }
        );
    }
    println!("{}", if all_match { "all tilting characters match" } else { "mismatch found" });
    Ok(())
}
