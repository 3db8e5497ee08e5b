//! Closed-point fibers of translation, wall-crossing and splitting bimodules for sl2.

use heckecat::field::Gf;
use heckecat::modrep::{hc_center_check, splitting_fiber_rank, translation_fiber, wall_crossing_fiber};

fn main() -> heckecat::Result<()> {
    let p = 5;
    let fp = Gf::prime(p)?;
    let f25 = Gf::new(p, 2)?;
    let xi = f25.primitive_element();

    let t = translation_fiber(&f25, 0, xi)?;
    println!(
        "translation 0 at ξ = {}: fiber dim {}, simple {}, ≅ Z({}) {}",
        t.xi, t.bimodule_dim, t.simple, t.target_xi, t.isomorphic_to_verma
    );

    for w_is_s in [false, true] {
        let r = wall_crossing_fiber(&fp, 0, -1, w_is_s)?;
        println!(
            "wall-crossing w = {}: total {}, subquotients {:?} labelled {:?} (expected sub {})",
            r.w, r.total_dim, r.subquotient_dims, r.subquotient_labels, r.expected_sub
        );
    }

    let s = splitting_fiber_rank(&f25, 1, 2, xi)?;
    println!("splitting (1, 2) at ξ = {}: rank {} = {} · {} · {}", s.xi, s.rank, s.left_dim, s.middle_dim, s.right_dim);

    let c = hc_center_check(&f25, xi)?;
    println!("Casimir on the orbit {:?}: {:?}", c.orbit, c.scalars);
    Ok(())
}
