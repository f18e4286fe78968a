//! Classical parking functions, zero-based: a tuple of length k with
//! values in `[0, k-1]` is a parking function iff its sorted values satisfy
//! `b_i <= i - 1` (1-indexed). There are `(k+1)^(k-1)` of them.

use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::partition::PaddedPartition;
use crate::symfunc::SymFunc;

/// Zero-based parking function test on an arbitrary integer tuple.
pub fn is_parking_function(values: &[i64]) -> bool {
    if values.iter().any(|&v| v < 0) {
        return false;
    }
    let mut sorted: Vec<i64> = values.to_vec();
    sorted.sort_unstable();
    sorted.iter().enumerate().all(|(i, &b)| b <= i as i64)
}

/// All weakly increasing parking functions of length `k`, one per orbit of
/// the coordinate-permuting action, returned as padded partitions (sorted
/// decreasingly, zeros kept). There are Catalan(k) of them.
pub fn enumerate_nondecreasing_pf(k: u32) -> Vec<PaddedPartition> {
    let k = k as usize;
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::with_capacity(k);
    fn rec(k: usize, current: &mut Vec<u32>, out: &mut Vec<PaddedPartition>) {
        if current.len() == k {
            let mut parts = current.clone();
            parts.reverse();
            out.push(PaddedPartition::new(parts));
            return;
        }
        let lo = current.last().copied().unwrap_or(0);
        let hi = current.len() as u32; // b_{i+1} <= i
        for v in lo..=hi {
            current.push(v);
            rec(k, current, out);
            current.pop();
        }
    }
    rec(k, &mut current, &mut out);
    out
}

/// `(k+1)^(k-1)`, the number of parking functions of length `k >= 1`.
pub fn count_parking_functions(k: u32) -> BigUint {
    BigUint::from(k as u64 + 1).pow(k.saturating_sub(1))
}

/// Frobenius characteristic of the permutation action on parking functions
/// of length `k`: one `h_(multiplicities)` per nondecreasing representative.
pub fn frobenius_pf(k: u32) -> SymFunc {
    SymFunc::h_sum(
        k,
        enumerate_nondecreasing_pf(k)
            .into_iter()
            .map(|rep| rep.multiplicity_partition()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{CycleType, Partition};
    use alloc::vec;
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;

    #[test]
    fn membership_examples() {
        assert!(is_parking_function(&[0, 1, 2]));
        assert!(is_parking_function(&[1, 1, 0]));
        assert!(!is_parking_function(&[2, 2, 0]));
        assert!(!is_parking_function(&[-1, 0, 0]));
        assert!(is_parking_function(&[]));
    }

    /// Brute-force count over all of [0, k-1]^k.
    fn count_by_filter(k: u32) -> u64 {
        if k == 0 {
            return 1;
        }
        let mut count = 0u64;
        let mut tuple = vec![0i64; k as usize];
        loop {
            if is_parking_function(&tuple) {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == tuple.len() {
                    return count;
                }
                tuple[i] += 1;
                if tuple[i] < k as i64 {
                    break;
                }
                tuple[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn total_count_matches_formula() {
        for k in 1..=7u32 {
            assert_eq!(
                BigUint::from(count_by_filter(k)),
                count_parking_functions(k),
                "k = {k}"
            );
        }
    }

    #[test]
    fn nondecreasing_reps_examples() {
        let reps = enumerate_nondecreasing_pf(3);
        let expected: Vec<PaddedPartition> = [
            vec![0, 0, 0],
            vec![1, 0, 0],
            vec![2, 0, 0],
            vec![1, 1, 0],
            vec![2, 1, 0],
        ]
        .into_iter()
        .map(PaddedPartition::new)
        .collect();
        assert_eq!(reps.len(), 5);
        for rep in &expected {
            assert!(reps.contains(rep), "{rep}");
        }
        assert_eq!(enumerate_nondecreasing_pf(1), vec![PaddedPartition::new(vec![0])]);
        assert_eq!(
            enumerate_nondecreasing_pf(2),
            vec![
                PaddedPartition::new(vec![0, 0]),
                PaddedPartition::new(vec![1, 0])
            ]
        );
    }

    #[test]
    fn rep_count_is_catalan_and_orbits_tile() {
        let catalan = [1u64, 1, 2, 5, 14, 42, 132, 429];
        for k in 1..=7u32 {
            let reps = enumerate_nondecreasing_pf(k);
            assert_eq!(reps.len() as u64, catalan[k as usize], "k = {k}");
            let total: BigUint = reps.iter().map(|r| r.orbit_size()).sum();
            assert_eq!(total, count_parking_functions(k), "k = {k}");
        }
    }

    #[test]
    fn frobenius_pf_examples() {
        assert_eq!(
            frobenius_pf(3),
            SymFunc::parse("h[3] + 3 h[2,1] + h[1,1,1]").unwrap()
        );
        assert_eq!(frobenius_pf(1), SymFunc::parse("h[1]").unwrap());
        assert_eq!(frobenius_pf(2), SymFunc::parse("h[2] + h[1,1]").unwrap());
    }

    #[test]
    fn character_matches_direct_fixed_point_count() {
        // direct count: parking functions fixed by the block permutation of
        // cycle type mu are constant on cycles
        for k in 1..=6u32 {
            let frob = frobenius_pf(k);
            for mu in crate::partition::partitions_of(k) {
                let mu = CycleType::new(mu);
                let perm = mu.canonical_permutation();
                let mut direct = 0u64;
                let mut tuple = vec![0i64; k as usize];
                'outer: loop {
                    let permuted: Vec<i64> =
                        (0..tuple.len()).map(|i| tuple[perm[i]]).collect();
                    if permuted == tuple && is_parking_function(&tuple) {
                        direct += 1;
                    }
                    let mut i = 0;
                    loop {
                        if i == tuple.len() {
                            break 'outer;
                        }
                        tuple[i] += 1;
                        if tuple[i] < k as i64 {
                            break;
                        }
                        tuple[i] = 0;
                        i += 1;
                    }
                }
                let ch = frob.character(&mu).unwrap();
                assert!(ch.is_integer());
                assert_eq!(
                    ch.to_integer(),
                    BigInt::from(direct),
                    "k = {k}, mu = {mu}"
                );
            }
        }
    }

    #[test]
    fn dimension_is_count() {
        for k in 1..=7u32 {
            let frob = frobenius_pf(k);
            let ones = CycleType::new(Partition::new(vec![1; k as usize]));
            let dim = frob.character(&ones).unwrap();
            assert_eq!(
                dim.to_integer().to_u64(),
                count_parking_functions(k).to_u64(),
                "k = {k}"
            );
        }
    }
}
