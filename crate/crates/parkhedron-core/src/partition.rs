//! Partitions, padded partitions, lattice points, cycle types, and the
//! dominance order.
//!
//! `Partition` is the zero-part-free normal form used to index symmetric
//! function bases. `PaddedPartition` keeps trailing zeros and has its length
//! as part of its identity: `(2,1,0,0)` and `(2,1,0)` are different values.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::arith::{factorial, gcd_all};

/// A partition: weakly decreasing positive integers. The empty partition is
/// allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Panics unless `parts` is weakly decreasing with all parts >= 1.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing"
        );
        assert!(
            parts.iter().all(|&p| p >= 1),
            "partition parts must be positive"
        );
        Partition { parts }
    }

    /// Sorts a multiset of positive parts into partition form.
    pub fn from_multiset(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Pads with zeros up to `len`. Panics if `len` is shorter than the
    /// partition.
    pub fn pad(&self, len: usize) -> PaddedPartition {
        assert!(len >= self.parts.len(), "cannot pad to a shorter length");
        let mut parts = self.parts.clone();
        parts.resize(len, 0);
        PaddedPartition { parts }
    }

    /// Multiplicity map value -> count.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

/// A weakly decreasing tuple of nonnegative integers of fixed length;
/// trailing zeros are significant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PaddedPartition {
    parts: Vec<u32>,
}

impl PaddedPartition {
    /// Panics unless `parts` is weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "padded partition parts must be weakly decreasing"
        );
        PaddedPartition { parts }
    }

    /// Sorts an arbitrary multiset of nonnegative values.
    pub fn from_multiset(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        PaddedPartition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Drops trailing zeros, producing the normal form.
    pub fn stripped(&self) -> Partition {
        let keep = self.parts.iter().take_while(|&&p| p > 0).count();
        Partition {
            parts: self.parts[..keep].to_vec(),
        }
    }

    /// Multiplies every part by `t`.
    pub fn scaled(&self, t: u32) -> PaddedPartition {
        PaddedPartition {
            parts: self.parts.iter().map(|&p| p * t).collect(),
        }
    }

    /// The partition of the multiplicities of each part value (zeros count).
    /// The result has size equal to `self.len()`.
    pub fn multiplicity_partition(&self) -> Partition {
        let mut mults = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let mut j = i + 1;
            while j < self.parts.len() && self.parts[j] == self.parts[i] {
                j += 1;
            }
            mults.push((j - i) as u32);
            i = j;
        }
        Partition::from_multiset(mults)
    }

    /// Size of the orbit of this tuple under coordinate permutations:
    /// `len! / prod(multiplicity!)`.
    pub fn orbit_size(&self) -> BigUint {
        let mut size = factorial(self.parts.len() as u64);
        for &m in self.multiplicity_partition().parts() {
            size /= factorial(m as u64);
        }
        size
    }

    /// All distinct coordinate permutations of this tuple, as lattice
    /// points in lexicographic order.
    pub fn orbit_points(&self) -> OrbitPoints {
        let mut coords: Vec<i64> = self.parts.iter().map(|&p| p as i64).collect();
        coords.sort_unstable();
        OrbitPoints {
            next: Some(LatticePoint::new(coords)),
        }
    }

    pub fn as_lattice_point(&self) -> LatticePoint {
        LatticePoint::new(self.parts.iter().map(|&p| p as i64).collect())
    }
}

impl fmt::Display for PaddedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// Error from `dominates` on incomparable inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominanceError {
    LengthMismatch,
    SizeMismatch,
}

impl fmt::Display for DominanceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DominanceError::LengthMismatch => write!(f, "tuples have different lengths"),
            DominanceError::SizeMismatch => write!(f, "tuples have different part sums"),
        }
    }
}

impl core::error::Error for DominanceError {}

/// Dominance order: true iff every prefix sum of `mu` is at most the
/// corresponding prefix sum of `lambda` (so `mu` is dominated by `lambda`).
/// Requires equal lengths and equal sizes.
pub fn dominates(lambda: &PaddedPartition, mu: &PaddedPartition) -> Result<bool, DominanceError> {
    if lambda.len() != mu.len() {
        return Err(DominanceError::LengthMismatch);
    }
    if lambda.size() != mu.size() {
        return Err(DominanceError::SizeMismatch);
    }
    let mut prefix_lambda = 0u64;
    let mut prefix_mu = 0u64;
    for (&l, &m) in lambda.parts().iter().zip(mu.parts()) {
        prefix_lambda += l as u64;
        prefix_mu += m as u64;
        if prefix_mu > prefix_lambda {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A point of the integer lattice; fixed length, coordinates may repeat.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    coords: Vec<i64>,
}

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticePoint { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.coords.iter().sum()
    }

    /// Coordinates in weakly decreasing order. Panics on a negative
    /// coordinate, which cannot appear in any of the tuple spaces handled
    /// here.
    pub fn sort_desc(&self) -> PaddedPartition {
        let mut parts: Vec<u32> = self
            .coords
            .iter()
            .map(|&c| u32::try_from(c).expect("sort_desc requires nonnegative coordinates"))
            .collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        PaddedPartition { parts }
    }

    /// Applies a permutation given as an image array: coordinate `i` moves
    /// to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> LatticePoint {
        assert_eq!(perm.len(), self.coords.len(), "permutation length mismatch");
        let mut coords = vec![0i64; self.coords.len()];
        for (i, &c) in self.coords.iter().enumerate() {
            coords[perm[i]] = c;
        }
        LatticePoint { coords }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Iterator over all distinct rearrangements of a multiset of coordinates,
/// in lexicographic order.
pub struct OrbitPoints {
    next: Option<LatticePoint>,
}

impl Iterator for OrbitPoints {
    type Item = LatticePoint;

    fn next(&mut self) -> Option<LatticePoint> {
        let current = self.next.take()?;
        let mut coords = current.coords.clone();
        if next_permutation(&mut coords) {
            self.next = Some(LatticePoint { coords });
        }
        Some(current)
    }
}

/// Standard next-permutation step; returns false when `items` was the last
/// (weakly decreasing) arrangement.
pub(crate) fn next_permutation<T: Ord>(items: &mut [T]) -> bool {
    if items.len() < 2 {
        return false;
    }
    let mut i = items.len() - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = items.len() - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}

/// The cycle type of a permutation: a partition of `n` with all parts >= 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType {
    parts: Partition,
}

impl CycleType {
    /// Panics on the empty partition.
    pub fn new(parts: Partition) -> Self {
        assert!(!parts.is_empty(), "a cycle type needs at least one cycle");
        CycleType { parts }
    }

    pub fn parts(&self) -> &[u32] {
        self.parts.parts()
    }

    pub fn partition(&self) -> &Partition {
        &self.parts
    }

    /// The n of the symmetric group: sum of the cycle lengths.
    pub fn degree(&self) -> u32 {
        self.parts.size()
    }

    /// Number of cycles.
    pub fn num_cycles(&self) -> usize {
        self.parts.len()
    }

    /// GCD of the cycle lengths.
    pub fn gcd(&self) -> u32 {
        gcd_all(self.parts.parts())
    }

    /// A concrete permutation of this cycle type, with cycles on
    /// consecutive blocks of `0..n`, as an image array.
    pub fn canonical_permutation(&self) -> Vec<usize> {
        let n = self.degree() as usize;
        let mut perm = vec![0usize; n];
        let mut start = 0;
        for &len in self.parts.parts() {
            let len = len as usize;
            for i in 0..len {
                perm[start + i] = start + (i + 1) % len;
            }
            start += len;
        }
        perm
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.parts.fmt(f)
    }
}

/// All partitions of `k` (descending parts), in reverse lexicographic order
/// starting with `(k)` and ending with `(1,...,1)`.
pub fn partitions_of(k: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let mut p = max_part.min(remaining);
        while p >= 1 {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
            p -= 1;
        }
    }
    rec(k, k, &mut current, &mut out);
    out
}

/// Number of rearrangements of `lambda` fixed by a permutation of cycle
/// type `mu`: arrangements that are constant on every cycle and use each
/// part value with its multiplicity in `lambda`.
///
/// This is the orbit-by-orbit fixed point count done with multinomial
/// bookkeeping instead of touching every point of the orbit; requires
/// `mu.degree() == lambda.len()`.
pub fn fixed_rearrangement_count(lambda: &PaddedPartition, mu: &CycleType) -> BigUint {
    assert_eq!(
        mu.degree() as usize,
        lambda.len(),
        "cycle type degree must match tuple length"
    );
    // remaining multiplicity of each distinct value, cycles still to fill
    let mults: Vec<u32> = {
        let mut v = Vec::new();
        let parts = lambda.parts();
        let mut i = 0;
        while i < parts.len() {
            let mut j = i + 1;
            while j < parts.len() && parts[j] == parts[i] {
                j += 1;
            }
            v.push((j - i) as u32);
            i = j;
        }
        v
    };
    let cycles = mu.parts();
    let mut memo: BTreeMap<(usize, Vec<u32>), BigUint> = BTreeMap::new();
    fn rec(
        cycle_idx: usize,
        mults: &mut Vec<u32>,
        cycles: &[u32],
        memo: &mut BTreeMap<(usize, Vec<u32>), BigUint>,
    ) -> BigUint {
        if cycle_idx == cycles.len() {
            return BigUint::from(1u32);
        }
        if let Some(hit) = memo.get(&(cycle_idx, mults.clone())) {
            return hit.clone();
        }
        let mut total = BigUint::ZERO;
        let cycle_len = cycles[cycle_idx];
        for v in 0..mults.len() {
            if mults[v] >= cycle_len {
                mults[v] -= cycle_len;
                total += rec(cycle_idx + 1, mults, cycles, memo);
                mults[v] += cycle_len;
            }
        }
        memo.insert((cycle_idx, mults.clone()), total.clone());
        total
    }
    let mut mults = mults;
    rec(0, &mut mults, cycles, &mut memo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn padded(parts: &[u32]) -> PaddedPartition {
        PaddedPartition::new(parts.to_vec())
    }

    #[test]
    fn sort_desc_examples() {
        let p = LatticePoint::new(vec![0, 1, 2, 0]);
        assert_eq!(p.sort_desc(), padded(&[2, 1, 0, 0]));
        let p = LatticePoint::new(vec![1, 1, 1, 0]);
        assert_eq!(p.sort_desc(), padded(&[1, 1, 1, 0]));
        let p = LatticePoint::new(vec![3, 2, 1, 1, 3, 2, 4, 5, 0, 8]);
        assert_eq!(p.sort_desc(), padded(&[8, 5, 4, 3, 3, 2, 2, 1, 1, 0]));
    }

    #[test]
    fn dominance_examples() {
        let delta = padded(&[2, 1, 0, 0]);
        assert_eq!(dominates(&delta, &delta), Ok(true));
        assert_eq!(dominates(&delta, &padded(&[1, 1, 1, 0])), Ok(true));
        assert_eq!(dominates(&delta, &padded(&[3, 0, 0, 0])), Ok(false));
        assert_eq!(
            dominates(&delta, &padded(&[2, 1, 0])),
            Err(DominanceError::LengthMismatch)
        );
        assert_eq!(
            dominates(&delta, &padded(&[2, 2, 0, 0])),
            Err(DominanceError::SizeMismatch)
        );
    }

    #[test]
    fn dominance_is_partial_order_on_small_partitions() {
        // all padded partitions of 6 with length 4 and parts <= 6
        let mut all = Vec::new();
        for a in 0..=6u32 {
            for b in 0..=a {
                for c in 0..=b {
                    for d in 0..=c {
                        if a + b + c + d == 6 {
                            all.push(padded(&[a, b, c, d]));
                        }
                    }
                }
            }
        }
        for x in &all {
            assert_eq!(dominates(x, x), Ok(true));
            for y in &all {
                let xy = dominates(x, y).unwrap();
                let yx = dominates(y, x).unwrap();
                if xy && yx {
                    assert_eq!(x, y, "antisymmetry");
                }
                for z in &all {
                    if xy && dominates(y, z).unwrap() {
                        assert!(dominates(x, z).unwrap(), "transitivity");
                    }
                }
            }
        }
    }

    #[test]
    fn multiplicity_partition_examples() {
        assert_eq!(
            padded(&[2, 1, 0, 0]).multiplicity_partition(),
            Partition::new(vec![2, 1, 1])
        );
        assert_eq!(
            padded(&[1, 1, 1, 0]).multiplicity_partition(),
            Partition::new(vec![3, 1])
        );
        assert_eq!(
            padded(&[0, 0]).multiplicity_partition(),
            Partition::new(vec![2])
        );
        assert_eq!(padded(&[]).multiplicity_partition(), Partition::empty());
    }

    #[test]
    fn orbit_size_examples() {
        assert_eq!(padded(&[2, 1, 0, 0]).orbit_size(), BigUint::from(12u32));
        assert_eq!(padded(&[1, 1, 1, 0]).orbit_size(), BigUint::from(4u32));
        assert_eq!(padded(&[0, 0]).orbit_size(), BigUint::from(1u32));
    }

    #[test]
    fn orbit_size_matches_direct_enumeration() {
        // every padded partition with parts <= 3 and length <= 7
        for len in 0..=7usize {
            let mut stack = vec![Vec::<u32>::new()];
            while let Some(prefix) = stack.pop() {
                if prefix.len() == len {
                    let lambda = PaddedPartition::new(prefix.clone());
                    let direct = lambda.orbit_points().count();
                    assert_eq!(BigUint::from(direct), lambda.orbit_size(), "{lambda}");
                    continue;
                }
                let max = prefix.last().copied().unwrap_or(3);
                for v in 0..=max {
                    let mut next = prefix.clone();
                    next.push(v);
                    stack.push(next);
                }
            }
        }
    }

    #[test]
    fn orbit_points_are_distinct_and_sorted() {
        let lambda = padded(&[2, 1, 0, 0]);
        let points: Vec<LatticePoint> = lambda.orbit_points().collect();
        assert_eq!(points.len(), 12);
        let set: BTreeSet<_> = points.iter().cloned().collect();
        assert_eq!(set.len(), 12);
        let mut sorted = points.clone();
        sorted.sort();
        assert_eq!(points, sorted, "lexicographic order");
        for p in &points {
            assert_eq!(p.sort_desc(), lambda);
        }
    }

    #[test]
    fn partitions_of_small() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(8).len(), 22);
        assert_eq!(
            partitions_of(3),
            vec![
                Partition::new(vec![3]),
                Partition::new(vec![2, 1]),
                Partition::new(vec![1, 1, 1]),
            ]
        );
    }

    #[test]
    fn cycle_type_derived_data() {
        let mu = CycleType::new(Partition::new(vec![2, 2]));
        assert_eq!(mu.degree(), 4);
        assert_eq!(mu.num_cycles(), 2);
        assert_eq!(mu.gcd(), 2);
        let perm = mu.canonical_permutation();
        assert_eq!(perm, vec![1, 0, 3, 2]);
    }

    #[test]
    fn fixed_rearrangements_match_direct_action() {
        let lambda = padded(&[2, 1, 0, 0]);
        for mu in partitions_of(4) {
            let mu = CycleType::new(mu);
            let perm = mu.canonical_permutation();
            let direct = lambda
                .orbit_points()
                .filter(|p| p.permuted(&perm) == *p)
                .count();
            assert_eq!(
                fixed_rearrangement_count(&lambda, &mu),
                BigUint::from(direct),
                "mu = {mu}"
            );
        }
    }
}
