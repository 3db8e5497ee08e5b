//! Standard bimodules Δ_x: the group law, the exact sequences through B_s and conjugation.

use heckecat::realization::Realization;
use heckecat::sbim::lemmas::{conjugation_isom, verify_delta_product, verify_exact_sequences};
use heckecat::weyl::RootDatum;

fn main() -> heckecat::Result<()> {
    for d in [RootDatum::a1(5)?, RootDatum::a2(5)?] {
        let r = Realization::new(&d)?;
        println!("{} (p = {})", d.name, d.p);
        for s in 0..d.num_gens() {
            for rep in verify_exact_sequences(&r, s, 10) {
                println!("  s{s}: {} exact to degree 10: {}", rep.sequence, rep.ok);
            }
            let (x, t) = d.conjugate_to_finite(s);
            let iso = conjugation_isom(&r, s, t, &x)?;
            println!(
                "  B_s{s} ≅ Δ_x B_s{t} Δ_x⁻¹ for x = {} (ranks {} and {})",
                d.display(&x),
                iso.source.rank(),
                iso.target.rank()
            );
        }
        let els = d.affine_elements(2);
        let ok = els.iter().all(|x| els.iter().all(|y| verify_delta_product(&r, x, y)));
        println!("  Δ_x ⊗ Δ_y ≅ Δ_xy for all x, y of length ≤ 2: {ok}");
    }
    Ok(())
}
