//! Binomials, lexicographic ranking of subsets and sorted-set helpers.

use itertools::Itertools;

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = match acc.checked_mul(u128::from(n - i)) {
            Some(v) => v / u128::from(i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Zero-based rank of a strictly increasing subset of `1..=n` among all
/// subsets of the same size in lexicographic order.
pub fn lex_rank(subset: &[u32], n: u32) -> u64 {
    let k = subset.len() as u64;
    let mut rank: u128 = 0;
    let mut prev = 0u32;
    for (i, &a) in subset.iter().enumerate() {
        let remaining = k - i as u64 - 1;
        for j in prev + 1..a {
            rank += binomial(u64::from(n - j), remaining);
        }
        prev = a;
    }
    rank as u64
}

/// Inverse of [`lex_rank`].
pub fn lex_unrank(mut rank: u64, n: u32, k: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(k as usize);
    let mut next = 1u32;
    for i in 0..k {
        let remaining = u64::from(k - i - 1);
        loop {
            let block = binomial(u64::from(n - next), remaining) as u64;
            if rank < block {
                break;
            }
            rank -= block;
            next += 1;
        }
        out.push(next);
        next += 1;
    }
    out
}

/// All `k`-subsets of a sorted slice, in lexicographic order.
pub fn subsets(set: &[u32], k: usize) -> impl Iterator<Item = Vec<u32>> + '_ {
    set.iter().copied().combinations(k)
}

/// All `k`-subsets of `1..=n`, in lexicographic order.
pub fn subsets_of_range(n: u32, k: usize) -> impl Iterator<Item = Vec<u32>> {
    (1..=n).combinations(k)
}

pub fn intersection_size(a: &[u32], b: &[u32]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

pub fn intersection(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter()
        .copied()
        .filter(|v| b.binary_search(v).is_ok())
        .collect()
}

pub fn difference(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter()
        .copied()
        .filter(|v| b.binary_search(v).is_err())
        .collect()
}

pub fn union(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().chain(b).copied().sorted().dedup().collect()
}

/// True when sorted `small` is a subset of sorted `big`.
pub fn is_subset(small: &[u32], big: &[u32]) -> bool {
    small.iter().all(|v| big.binary_search(v).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_binomials() {
        assert_eq!(binomial(6, 2), 15);
        assert_eq!(binomial(6, 4), 15);
        assert_eq!(binomial(10, 3), 120);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn ranks_follow_enumeration_order() {
        for (expected, s) in subsets_of_range(7, 3).enumerate() {
            assert_eq!(lex_rank(&s, 7), expected as u64);
            assert_eq!(lex_unrank(expected as u64, 7, 3), s);
        }
    }

    proptest! {
        #[test]
        fn unrank_inverts_rank(n in 1u32..20, k_frac in 0.0f64..1.0, seed in any::<u64>()) {
            let k = ((f64::from(n) * k_frac) as u32).max(1).min(n);
            let total = binomial(u64::from(n), u64::from(k)) as u64;
            let rank = seed % total;
            let s = lex_unrank(rank, n, k);
            prop_assert_eq!(s.len(), k as usize);
            prop_assert_eq!(lex_rank(&s, n), rank);
        }
    }
}
