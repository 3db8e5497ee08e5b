//! Baby Verma modules for sl2 and the matrix-algebra property of the reduced enveloping algebra.
//!
//! Usage: cargo run --release --example baby_verma -- [p] [k]

use heckecat::field::Gf;
use heckecat::modrep::{verify_matrix_algebra, BabyVerma, CentralPoint};

fn main() -> heckecat::Result<()> {
    let args: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let p = args.first().copied().unwrap_or(3);
    let k = args.get(1).copied().unwrap_or(2);
    let f = Gf::new(p, k)?;
    for xi in f.elements().take(6) {
        let pt = CentralPoint::kostant(&f, xi);
        let z = BabyVerma::kostant(&pt)?;
        let report = z.verify();
        let h: Vec<String> = z.h_eigenvalues().iter().map(|&x| f.format(x)).collect();
        println!("ξ = {:<8} dim {} h-eigenvalues [{}] checks {}", f.format(xi), z.dim(), h.join(" "), report.ok);
        if pt.is_regular() {
            let a = verify_matrix_algebra(&pt)?;
            println!("  U_χ: dim {} → End(Z): dim {}, bijective {}", a.dim_algebra, a.dim_end, a.bijective);
        }
    }
    Ok(())
}
