//! Combinatorial dimension of a monomial ideal.
//!
//! A set `S` of variables is independent when no generator's support lies
//! inside `S`; equivalently its complement meets every support. The
//! dimension is the largest independent set, i.e. `nvars − τ` where `τ` is
//! the size of a minimum hitting set of the supports.

/// Size of a largest variable subset containing no support. `supports` are
/// bitmasks over `nvars ≤ 128` variables; an empty support (a constant)
/// makes every set dependent, which callers treat separately.
pub fn max_independent_set(nvars: usize, supports: &[u128]) -> usize {
    nvars - min_hitting_set(supports)
}

/// Minimum number of variables meeting every support.
pub fn min_hitting_set(supports: &[u128]) -> usize {
    let mut sets: Vec<u128> = supports.to_vec();
    sets.sort_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    // keep only inclusion-minimal supports
    let mut minimal: Vec<u128> = Vec::new();
    for s in sets {
        if !minimal.iter().any(|&m| m & s == m) {
            minimal.push(s);
        }
    }
    if minimal.iter().any(|&s| s == 0) {
        return usize::MAX / 2;
    }
    let mut best = greedy_cover(&minimal);
    search(&minimal, 0, 0, 0, &mut best);
    best
}

fn greedy_cover(sets: &[u128]) -> usize {
    let mut chosen = 0u128;
    let mut count = 0;
    loop {
        let open: Vec<u128> = sets.iter().copied().filter(|&s| s & chosen == 0).collect();
        if open.is_empty() {
            return count;
        }
        let mut best_bit = 0;
        let mut best_hits = 0;
        for bit in 0..128 {
            let hits = open.iter().filter(|&&s| s >> bit & 1 == 1).count();
            if hits > best_hits {
                best_hits = hits;
                best_bit = bit;
            }
        }
        chosen |= 1u128 << best_bit;
        count += 1;
    }
}

/// Lower bound: a family of pairwise disjoint open sets needs one variable each.
fn packing_bound(open: &[u128]) -> usize {
    let mut used = 0u128;
    let mut k = 0;
    for &s in open {
        if s & used == 0 {
            used |= s;
            k += 1;
        }
    }
    k
}

fn search(sets: &[u128], chosen: u128, forbidden: u128, size: usize, best: &mut usize) {
    let open: Vec<u128> = sets.iter().copied().filter(|&s| s & chosen == 0).collect();
    if open.is_empty() {
        *best = (*best).min(size);
        return;
    }
    if size + packing_bound(&open) >= *best {
        return;
    }
    // branch on the open set with the fewest allowed variables
    let Some(pivot) = open.iter().copied().min_by_key(|&s| (s & !forbidden).count_ones()) else {
        return;
    };
    let mut allowed = pivot & !forbidden;
    let mut forbid = forbidden;
    while allowed != 0 {
        let bit = allowed & allowed.wrapping_neg();
        allowed &= !bit;
        search(sets, chosen | bit, forbid, size + 1, best);
        forbid |= bit;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn brute_force(nvars: usize, supports: &[u128]) -> usize {
        (0u32..1 << nvars)
            .filter(|&s| supports.iter().all(|&m| m & !(s as u128) != 0))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn small_cases() {
        assert_eq!(max_independent_set(3, &[]), 3);
        assert_eq!(max_independent_set(2, &[0b01]), 1);
        // (x1*x2, x3): {x1, x2} minus one of them, plus nothing from x3
        assert_eq!(max_independent_set(3, &[0b011, 0b100]), 1);
    }

    #[test]
    fn matches_brute_force_on_random_monomial_ideals() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let nvars = rng.gen_range(1..=16);
            let k = rng.gen_range(0..8);
            let supports: Vec<u128> = (0..k)
                .map(|_| {
                    let mut s = 0u128;
                    while s == 0 {
                        for v in 0..nvars {
                            if rng.gen_bool(0.25) {
                                s |= 1 << v;
                            }
                        }
                    }
                    s
                })
                .collect();
            assert_eq!(max_independent_set(nvars, &supports), brute_force(nvars, &supports));
        }
    }
}
