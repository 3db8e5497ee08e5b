//! p-canonical basis next to the Kazhdan–Lusztig basis.
//!
//! Usage: cargo run --release --example p_canonical_table -- [A1|A2] [p] [max_len]

use heckecat::hecke::PCanonical;
use heckecat::weyl::RootDatum;

fn main() -> heckecat::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let name = args.first().map(String::as_str).unwrap_or("A1");
    let p = args.get(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let max_len = args.get(2).and_then(|a| a.parse().ok()).unwrap_or(4);
    let d = RootDatum::preset(name, p)?;
    let pc = PCanonical::new(&d, 0)?;
    for w in d.affine_elements(max_len) {
        let in_kl = pc.in_kl_basis(&w)?;
        let mark = if in_kl.terms().len() == 1 { "= b_w" } else { "differs from b_w" };
        println!("{:<16} p_b = {}  [{mark}]", d.display(&w), in_kl.display(&d));
    }
    Ok(())
}
