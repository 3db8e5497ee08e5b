//! SL2 tilting characters from antispherical p-canonical multiplicities, in every block.

use crate::error::{Error, Result};
use crate::hecke::antispherical::tilting_multiplicities;
use crate::hecke::oracle::Character;
use crate::hecke::PCanonical;

/// The lower-closure weight λ₀ ∈ [−1, p−1] in the affine dot orbit of `n`.
pub fn block_representative(n: i64, p: i64) -> i64 {
    let r = (n + 1).rem_euclid(2 * p);
    (if r <= p { r } else { 2 * p - r }) - 1
}

/// `[T(n) : χ(m)]` for SL2. Regular blocks use the multiplicities of the principal block;
/// a singular block is the translation onto the wall, which doubles the top tilting module.
pub fn tilting_from_pcan(pc: &PCanonical, n: i64) -> Result<Character> {
    let d = pc.datum();
    if d.rank != 1 {
        return Err(Error::Precondition("tilting characters are implemented for SL2".into()));
    }
    if n < 0 {
        return Err(Error::Precondition(format!("weight {n} is not dominant")));
    }
    let p = d.p as i64;
    let lambda = block_representative(n, p);
    let singular = lambda == -1 || lambda == p - 1;
    let max_len = (2 * n / p + 3) as usize;
    let reps: Vec<_> = d.min_coset_reps(max_len).into_iter().filter(|x| d.dot_act(x, &[lambda])[0] == n).collect();
    let w = reps
        .iter()
        .max_by_key(|x| d.length(x))
        .ok_or_else(|| Error::Precondition(format!("no coset representative reaches {n}")))?;
    let mut out = Character::new();
    for (y, c) in tilting_multiplicities(d, &pc.p_canonical(w)?) {
        *out.entry(d.dot_act(&y, &[lambda])[0]).or_insert(0) += c;
    }
    if singular {
        for c in out.values_mut() {
            if *c % 2 != 0 {
                return Err(Error::Decomposition(format!("odd multiplicity on the wall for T({n})")));
            }
            *c /= 2;
        }
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}
