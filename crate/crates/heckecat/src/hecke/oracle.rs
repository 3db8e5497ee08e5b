//! Tilting characters for SL2, computed only from Weyl characters.
//!
//! Characters are maps from weights to multiplicities. `χ(n)` is the Weyl character with
//! weights `n, n−2, …, −n`, extended to negative `n` by `χ(−n−2) = −χ(n)`.

use std::collections::BTreeMap;

pub type Character = BTreeMap<i64, i64>;

fn add_into(acc: &mut Character, k: i64, c: i64) {
    if c == 0 {
        return;
    }
    let e = acc.entry(k).or_insert(0);
    *e += c;
    if *e == 0 {
        acc.remove(&k);
    }
}

/// Formal character of `χ(n)` for `n ≥ 0`.
pub fn weyl_weights(n: i64) -> Character {
    let mut out = Character::new();
    for k in 0..=n {
        add_into(&mut out, n - 2 * k, 1);
    }
    out
}

/// Expresses a formal character in the Weyl basis `m ↦ [χ(m)]`; `None` if not W-invariant.
pub fn to_weyl_basis(weights: &Character) -> Option<Character> {
    let mut rest = weights.clone();
    let mut out = Character::new();
    while let Some((&top, &c)) = rest.iter().next_back() {
        if top < 0 {
            return None;
        }
        add_into(&mut out, top, c);
        for (w, m) in weyl_weights(top) {
            add_into(&mut rest, w, -m * c);
        }
    }
    Some(out)
}

/// Formal character of a Weyl-basis combination.
pub fn from_weyl_basis(ch: &Character) -> Character {
    let mut out = Character::new();
    for (&m, &c) in ch {
        for (w, k) in weyl_weights(m) {
            add_into(&mut out, w, k * c);
        }
    }
    out
}

fn tensor_frobenius(a: &Character, b: &Character, p: i64) -> Character {
    let (fa, fb) = (from_weyl_basis(a), from_weyl_basis(b));
    let mut out = Character::new();
    for (&x, &c) in &fa {
        for (&y, &d) in &fb {
            add_into(&mut out, x + p * y, c * d);
        }
    }
    out
}

/// `ch T(n)` in the Weyl basis via the window formula and Donkin's tensor product theorem.
pub fn tilting_character(n: i64, p: i64) -> Character {
    assert!(n >= 0 && p >= 3);
    let mut out = Character::new();
    if n <= p - 1 {
        out.insert(n, 1);
    } else if n <= 2 * p - 2 {
        out.insert(n, 1);
        out.insert(2 * p - 2 - n, 1);
    } else {
        let q = n - (p - 1);
        let (m, r) = (q / p, q % p);
        let low = tilting_character(p - 1 + r, p);
        let high = tilting_character(m, p);
        out = to_weyl_basis(&tensor_frobenius(&low, &high, p)).expect("tilting characters are W-invariant");
    }
    out
}

/// `ch T(n)` from the base-p digits of `n+1`: the summands are `χ(m)` with
/// `m+1 = a_k p^k ± a_{k−1} p^{k−1} ± ⋯ ± a_0`.
pub fn tilting_character_digits(n: i64, p: i64) -> Character {
    assert!(n >= 0 && p >= 3);
    if n < p - 1 {
        return Character::from([(n, 1)]);
    }
    let mut digits = Vec::new();
    let mut v = n + 1;
    while v > 0 {
        digits.push(v % p);
        v /= p;
    }
    let k = digits.len() - 1;
    let mut values = vec![digits[k] * p.pow(k as u32)];
    for i in (0..k).rev() {
        let term = digits[i] * p.pow(i as u32);
        let mut next: Vec<i64> = values.iter().flat_map(|&x| [x + term, x - term]).collect();
        next.sort_unstable();
        next.dedup();
        values = next;
    }
    values.into_iter().map(|m1| (m1 - 1, 1)).collect()
}

pub fn dimension(ch: &Character) -> i64 {
    ch.iter().map(|(m, c)| (m + 1) * c).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_examples() {
        assert_eq!(tilting_character(3, 5), Character::from([(3, 1)]));
        assert_eq!(tilting_character(5, 5), Character::from([(3, 1), (5, 1)]));
        assert_eq!(tilting_character(4, 5), Character::from([(4, 1)]));
        assert_eq!(tilting_character(18, 3), Character::from([(16, 1), (18, 1)]));
    }

    #[test]
    fn recursion_matches_digits() {
        for p in [3, 5, 7] {
            for n in 0..300 {
                assert_eq!(tilting_character(n, p), tilting_character_digits(n, p), "p={p} n={n}");
            }
        }
    }

    #[test]
    fn weyl_basis_roundtrip() {
        let c = Character::from([(0, 2), (3, 1), (7, 4)]);
        assert_eq!(to_weyl_basis(&from_weyl_basis(&c)).unwrap(), c);
        assert!(to_weyl_basis(&Character::from([(1, 1)])).is_none());
    }
}
