//! The tuple space C_{m,n}, its shift quotient, the orbit index set Y_{m,n},
//! the balanced word set B_{m,n} with its Lyndon subset, and the Frobenius
//! characteristic of the shift-quotient module.
//!
//! Throughout, `N = m * n` and tuples live in `[0, n-1]^N` with coordinate
//! sum congruent to a fixed residue mod n. The default residue is
//! `(N-2)(n-1)/2 mod n`; the word-level results are proved only for that
//! choice, so word-based operations refuse other residues instead of
//! guessing.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::{binomial, divisors, mobius};
use crate::partition::{next_permutation, LatticePoint, PaddedPartition};
use crate::symfunc::SymFunc;
use crate::word::BinaryWord;

/// Domain errors for the tuple-space operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParkingError {
    /// Requires m >= 1 and n >= 2.
    InvalidParameters { m: u32, n: u32 },
    /// A coordinate lies outside `[0, n-1]`.
    CoordinateOutOfRange { index: usize, value: i64 },
    /// Tuple or word length differs from the one the spec demands.
    WrongLength { expected: usize, got: usize },
    /// A part exceeds n-1.
    PartTooLarge { index: usize, value: u32 },
    /// The word does not have m times as many 1s as 0s.
    NotBalanced { zeros: usize, ones: usize },
    /// The word does not begin with 0.
    LeadsWithOne,
    /// The word weight is not -1 mod n.
    WrongWeight { weight: u64 },
    /// The operation is proved only for the default residue.
    UnsupportedResidue { residue: u32, default: u32 },
}

impl fmt::Display for ParkingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParkingError::InvalidParameters { m, n } => {
                write!(f, "need m >= 1 and n >= 2, got m = {m}, n = {n}")
            }
            ParkingError::CoordinateOutOfRange { index, value } => {
                write!(f, "coordinate {value} at index {index} is outside [0, n-1]")
            }
            ParkingError::WrongLength { expected, got } => {
                write!(f, "expected length {expected}, got {got}")
            }
            ParkingError::PartTooLarge { index, value } => {
                write!(f, "part {value} at index {index} exceeds n-1")
            }
            ParkingError::NotBalanced { zeros, ones } => {
                write!(f, "word with {zeros} zeros and {ones} ones is not m-balanced")
            }
            ParkingError::LeadsWithOne => write!(f, "word must begin with 0"),
            ParkingError::WrongWeight { weight } => {
                write!(f, "word weight {weight} is not -1 mod n")
            }
            ParkingError::UnsupportedResidue { residue, default } => {
                write!(
                    f,
                    "operation is only supported for the default residue {default}, got {residue}"
                )
            }
        }
    }
}

impl core::error::Error for ParkingError {}

/// Parameters of the tuple space: `m >= 1`, `n >= 2`, `N = m * n`, and the
/// residue class of the coordinate sum mod n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CmnSpec {
    m: u32,
    n: u32,
    residue: u32,
}

impl CmnSpec {
    /// Spec with the default residue `(N-2)(n-1)/2 mod n`.
    pub fn new(m: u32, n: u32) -> Result<Self, ParkingError> {
        if m < 1 || n < 2 {
            return Err(ParkingError::InvalidParameters { m, n });
        }
        let residue = Self::compute_default_residue(m, n);
        Ok(CmnSpec { m, n, residue })
    }

    /// Spec with an arbitrary residue; set-level operations work for any
    /// residue, word-level ones only for the default.
    pub fn with_residue(m: u32, n: u32, residue: i64) -> Result<Self, ParkingError> {
        if m < 1 || n < 2 {
            return Err(ParkingError::InvalidParameters { m, n });
        }
        let residue = residue.rem_euclid(n as i64) as u32;
        Ok(CmnSpec { m, n, residue })
    }

    fn compute_default_residue(m: u32, n: u32) -> u32 {
        let big_n = (m as u64) * (n as u64);
        let product = (big_n - 2) * (n as u64 - 1);
        debug_assert!(product % 2 == 0, "(N-2)(n-1) is even for all m >= 1, n >= 2");
        ((product / 2) % (n as u64)) as u32
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// N = m * n, the tuple length.
    pub fn tuple_len(&self) -> usize {
        (self.m as usize) * (self.n as usize)
    }

    /// Word length (m+1) * n.
    pub fn word_len(&self) -> usize {
        (self.m as usize + 1) * (self.n as usize)
    }

    pub fn residue(&self) -> u32 {
        self.residue
    }

    pub fn default_residue(&self) -> u32 {
        Self::compute_default_residue(self.m, self.n)
    }

    pub fn is_default_residue(&self) -> bool {
        self.residue == self.default_residue()
    }

    fn require_default_residue(&self) -> Result<(), ParkingError> {
        if self.is_default_residue() {
            Ok(())
        } else {
            Err(ParkingError::UnsupportedResidue {
                residue: self.residue,
                default: self.default_residue(),
            })
        }
    }

    /// `n^(N-1)`, the number of points of the tuple space (for any residue).
    pub fn count_c(&self) -> BigUint {
        BigUint::from(self.n).pow(self.tuple_len() as u32 - 1)
    }

    /// `n^(N-2)`, the number of shift-equivalence classes.
    pub fn count_classes(&self) -> BigUint {
        BigUint::from(self.n).pow(self.tuple_len() as u32 - 2)
    }

    /// All points of the tuple space in lexicographic order: entries in
    /// `[0, n-1]`, coordinate sum congruent to the residue mod n. The final
    /// coordinate is determined by the rest, so `n^(N-1)` points stream out
    /// without materializing anything.
    pub fn enumerate_c(&self) -> CPoints {
        CPoints {
            n: self.n,
            residue: self.residue,
            prefix: vec![0; self.tuple_len() - 1],
            done: false,
        }
    }

    /// All weakly decreasing members of the tuple space, in lexicographic
    /// order; these index the orbits of the coordinate-permuting action.
    pub fn enumerate_y(&self) -> Vec<PaddedPartition> {
        let n = self.n;
        let len = self.tuple_len();
        let residue = self.residue;
        fn rec(
            parts: &mut Vec<u32>,
            len: usize,
            n: u32,
            residue: u32,
            sum: u32,
            out: &mut Vec<PaddedPartition>,
        ) {
            if parts.len() == len {
                if sum % n == residue {
                    let mut sorted = parts.clone();
                    sorted.reverse();
                    out.push(PaddedPartition::new(sorted));
                }
                return;
            }
            let lo = parts.last().copied().unwrap_or(0);
            for v in lo..n {
                parts.push(v);
                rec(parts, len, n, residue, sum + v, out);
                parts.pop();
            }
        }
        let mut out = Vec::new();
        let mut parts: Vec<u32> = Vec::with_capacity(len);
        rec(&mut parts, len, n, residue, 0, &mut out);
        out.sort();
        out
    }

    /// Converts an orbit representative to its lattice-path word: the word
    /// of length `(m+1)n` whose 1-positions (1-indexed) are exactly
    /// `n - lambda_i + i`. Only the shape is checked here.
    pub fn partition_to_word(&self, lambda: &PaddedPartition) -> Result<BinaryWord, ParkingError> {
        let len = self.tuple_len();
        if lambda.len() != len {
            return Err(ParkingError::WrongLength {
                expected: len,
                got: lambda.len(),
            });
        }
        for (index, &value) in lambda.parts().iter().enumerate() {
            if value > self.n - 1 {
                return Err(ParkingError::PartTooLarge { index, value });
            }
        }
        let mut letters = vec![0u8; self.word_len()];
        for (i, &part) in lambda.parts().iter().enumerate() {
            let position = self.n as usize - part as usize + i + 1; // 1-indexed
            letters[position - 1] = 1;
        }
        Ok(BinaryWord::new(letters))
    }

    /// Inverse of `partition_to_word`: for the i-th smallest 1-position
    /// `p_i`, the part is `lambda_i = n + i - p_i`. The word must belong to
    /// the balanced weight-constrained set; each violated membership
    /// condition gets its own error.
    pub fn word_to_partition(&self, word: &BinaryWord) -> Result<PaddedPartition, ParkingError> {
        self.require_default_residue()?;
        if word.len() != self.word_len() {
            return Err(ParkingError::WrongLength {
                expected: self.word_len(),
                got: word.len(),
            });
        }
        let ones = word.count_ones();
        let zeros = word.count_zeros();
        if ones != (self.m as usize) * zeros {
            return Err(ParkingError::NotBalanced { zeros, ones });
        }
        if word.letters().first() != Some(&0) {
            return Err(ParkingError::LeadsWithOne);
        }
        let weight = word.weight();
        if weight % self.n as u64 != (self.n - 1) as u64 {
            return Err(ParkingError::WrongWeight { weight });
        }
        let mut parts = Vec::with_capacity(self.tuple_len());
        for (i, position) in word
            .letters()
            .iter()
            .enumerate()
            .filter(|(_, &b)| b == 1)
            .map(|(idx, _)| idx + 1)
            .enumerate()
        {
            parts.push(self.n + (i as u32 + 1) - position as u32);
        }
        let lambda = PaddedPartition::new(parts);
        debug_assert!(lambda.size() % self.n as u64 == self.residue as u64);
        Ok(lambda)
    }

    /// All balanced words of length `(m+1)n` starting with 0 whose weight is
    /// -1 mod n, in lexicographic order. Streams lazily; only supported for
    /// the default residue.
    pub fn enumerate_b(&self) -> Result<BWords, ParkingError> {
        self.require_default_residue()?;
        let mut letters = vec![1u8; self.word_len()];
        for slot in letters.iter_mut().take(self.n as usize) {
            *slot = 0;
        }
        Ok(BWords {
            n: self.n,
            current: Some(letters),
        })
    }

    /// The Lyndon subset of `enumerate_b`, generated by fixed-content Lyndon
    /// generation plus the weight filter, in lexicographic order.
    pub fn enumerate_b_lyndon(&self) -> Result<Vec<BinaryWord>, ParkingError> {
        self.require_default_residue()?;
        let n = self.n as u64;
        Ok(
            crate::word::lyndon_words_fixed_content(self.n as usize, self.tuple_len())
                .filter(|w| w.weight() % n == n - 1)
                .collect(),
        )
    }

    /// Closed form for `|Y|`: `(1/n) * sum over d | n of
    /// (-1)^(m(n+d)) mu(n/d) C((m+1)d - 1, m d)`.
    pub fn count_y_formula(&self) -> Result<BigUint, ParkingError> {
        self.require_default_residue()?;
        let m = self.m as u64;
        let n = self.n as u64;
        let mut sum = BigInt::ZERO;
        for d in divisors(n).unwrap() {
            let mu = mobius(n / d).unwrap();
            if mu == 0 {
                continue;
            }
            let sign = if (m * (n + d)) % 2 == 0 { 1 } else { -1 };
            let term = BigInt::from(binomial((m + 1) * d - 1, m * d));
            sum += BigInt::from(sign * mu as i64) * term;
        }
        debug_assert!(!sum.is_negative());
        let (q, r) = sum.div_rem(&BigInt::from(n));
        assert!(r.is_zero(), "orbit count formula must be divisible by n");
        Ok(q.to_biguint().unwrap())
    }

    /// `|Y| / n`, the number of Lyndon words (equivalently, of orbits of the
    /// shift-quotient module).
    pub fn count_lyndon_formula(&self) -> Result<BigUint, ParkingError> {
        let y = self.count_y_formula()?;
        let n = BigUint::from(self.n);
        let (q, r) = y.div_rem(&n);
        assert!(r.is_zero(), "|Y| must be divisible by n");
        Ok(q)
    }

    /// The set `{sort(shift^j(lambda)) : 0 <= j <= n-1}`. For the default
    /// residue this always has exactly n elements.
    pub fn shift_orbit_sorted(&self, lambda: &PaddedPartition) -> Vec<PaddedPartition> {
        let mut orbit = BTreeSet::new();
        let mut point = lambda.as_lattice_point();
        for _ in 0..self.n {
            orbit.insert(point.sort_desc());
            point = shift(&point, self.n).expect("orbit entries stay in range");
        }
        orbit.into_iter().collect()
    }

    /// Frobenius characteristic of the shift-quotient module: one
    /// `h_(sorted run lengths of w)` per Lyndon word w.
    pub fn frobenius_tau_hat(&self) -> Result<SymFunc, ParkingError> {
        let words = self.enumerate_b_lyndon()?;
        Ok(SymFunc::h_sum(
            self.tuple_len() as u32,
            words.iter().map(|w| {
                w.runs_of_ones()
                    .expect("Lyndon words with a 0 start with 0")
            }),
        ))
    }

    /// The orbit representatives of the Lyndon partitions, one point per
    /// shift-equivalence class: `n^(N-2)` points, streamed orbit by orbit
    /// (words in lexicographic order, each orbit in lexicographic order).
    pub fn class_representatives(
        &self,
    ) -> Result<impl Iterator<Item = LatticePoint> + '_, ParkingError> {
        let words = self.enumerate_b_lyndon()?;
        let spec = *self;
        Ok(words.into_iter().flat_map(move |w| {
            spec.word_to_partition(&w)
                .expect("Lyndon words are in B")
                .orbit_points()
        }))
    }
}

/// Adds 1 to every coordinate modulo n. Entries must lie in `[0, n-1]`.
pub fn shift(x: &LatticePoint, n: u32) -> Result<LatticePoint, ParkingError> {
    let n = n as i64;
    let mut coords = Vec::with_capacity(x.len());
    for (index, &value) in x.coords().iter().enumerate() {
        if value < 0 || value >= n {
            return Err(ParkingError::CoordinateOutOfRange { index, value });
        }
        coords.push((value + 1) % n);
    }
    Ok(LatticePoint::new(coords))
}

/// Lazy lexicographic stream over the points of the tuple space.
pub struct CPoints {
    n: u32,
    residue: u32,
    prefix: Vec<u32>,
    done: bool,
}

impl Iterator for CPoints {
    type Item = LatticePoint;

    fn next(&mut self) -> Option<LatticePoint> {
        if self.done {
            return None;
        }
        let n = self.n as u64;
        let sum: u64 = self.prefix.iter().map(|&v| v as u64).sum();
        let last = (self.residue as u64 + n - sum % n) % n;
        let mut coords: Vec<i64> = self.prefix.iter().map(|&v| v as i64).collect();
        coords.push(last as i64);
        // odometer step on the free coordinates
        let mut i = self.prefix.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.prefix[i] += 1;
            if self.prefix[i] < self.n {
                break;
            }
            self.prefix[i] = 0;
        }
        Some(LatticePoint::new(coords))
    }
}

/// Lazy lexicographic stream over the balanced, weight-constrained words.
pub struct BWords {
    n: u32,
    current: Option<Vec<u8>>,
}

impl Iterator for BWords {
    type Item = BinaryWord;

    fn next(&mut self) -> Option<BinaryWord> {
        let n = self.n as u64;
        loop {
            let letters = self.current.take()?;
            if letters.first() == Some(&1) {
                // all remaining words in lex order start with 1
                return None;
            }
            let mut advanced = letters.clone();
            if next_permutation(&mut advanced) {
                self.current = Some(advanced);
            }
            let word = BinaryWord::new(letters);
            if word.weight() % n == n - 1 {
                return Some(word);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::dominates;
    use alloc::collections::BTreeSet;
    use alloc::string::ToString;

    fn padded(parts: &[u32]) -> PaddedPartition {
        PaddedPartition::new(parts.to_vec())
    }

    fn word(s: &str) -> BinaryWord {
        BinaryWord::from(s)
    }

    #[test]
    fn spec_construction() {
        let spec = CmnSpec::new(1, 4).unwrap();
        assert_eq!(spec.tuple_len(), 4);
        assert_eq!(spec.residue(), 3); // (4-2)(4-1)/2 = 3
        let spec = CmnSpec::new(2, 3).unwrap();
        assert_eq!(spec.residue(), 1); // (6-2)(3-1)/2 = 4 = 1 mod 3
        let spec = CmnSpec::new(1, 2).unwrap();
        assert_eq!(spec.residue(), 0);
        assert!(CmnSpec::new(0, 4).is_err());
        assert!(CmnSpec::new(1, 1).is_err());
        let spec = CmnSpec::with_residue(1, 4, -1).unwrap();
        assert_eq!(spec.residue(), 3);
        assert!(spec.is_default_residue());
    }

    #[test]
    fn enumerate_c_smallest_case() {
        let spec = CmnSpec::new(1, 2).unwrap();
        let points: Vec<LatticePoint> = spec.enumerate_c().collect();
        assert_eq!(
            points,
            vec![
                LatticePoint::new(vec![0, 0]),
                LatticePoint::new(vec![1, 1]),
            ]
        );
    }

    #[test]
    fn enumerate_c_counts() {
        let spec = CmnSpec::new(1, 4).unwrap();
        assert_eq!(spec.enumerate_c().count(), 64);
        assert_eq!(spec.count_c(), BigUint::from(64u32));
        let spec = CmnSpec::new(2, 3).unwrap();
        assert_eq!(spec.enumerate_c().count(), 243);
        assert_eq!(spec.count_c(), BigUint::from(243u32));
    }

    #[test]
    fn enumerate_c_matches_brute_force_filter() {
        for (m, n) in [(1u32, 2u32), (1, 3), (1, 4), (2, 2), (2, 3)] {
            for residue in 0..n {
                let spec = CmnSpec::with_residue(m, n, residue as i64).unwrap();
                let len = spec.tuple_len();
                let mut expected = Vec::new();
                let mut tuple = vec![0i64; len];
                'outer: loop {
                    if tuple.iter().sum::<i64>() % n as i64 == residue as i64 {
                        expected.push(LatticePoint::new(tuple.clone()));
                    }
                    let mut i = len;
                    loop {
                        if i == 0 {
                            break 'outer;
                        }
                        i -= 1;
                        tuple[i] += 1;
                        if tuple[i] < n as i64 {
                            break;
                        }
                        tuple[i] = 0;
                    }
                }
                expected.sort();
                let got: Vec<LatticePoint> = spec.enumerate_c().collect();
                assert_eq!(got, expected, "(m, n, c) = ({m}, {n}, {residue})");
            }
        }
    }

    #[test]
    fn shift_examples() {
        let x = LatticePoint::new(vec![2, 1, 0, 0]);
        assert_eq!(shift(&x, 4).unwrap(), LatticePoint::new(vec![3, 2, 1, 1]));
        let x = LatticePoint::new(vec![3, 3, 3, 2]);
        assert_eq!(shift(&x, 4).unwrap(), LatticePoint::new(vec![0, 0, 0, 3]));
        let mut x = LatticePoint::new(vec![2, 1, 0, 0]);
        for _ in 0..4 {
            x = shift(&x, 4).unwrap();
        }
        assert_eq!(x, LatticePoint::new(vec![2, 1, 0, 0]));
        assert_eq!(
            shift(&LatticePoint::new(vec![4, 0]), 4),
            Err(ParkingError::CoordinateOutOfRange { index: 0, value: 4 })
        );
    }

    #[test]
    fn enumerate_y_paper_tables() {
        let spec = CmnSpec::new(1, 4).unwrap();
        let got: BTreeSet<PaddedPartition> = spec.enumerate_y().into_iter().collect();
        let expected: BTreeSet<PaddedPartition> = [
            [2, 1, 0, 0],
            [1, 1, 1, 0],
            [3, 2, 1, 1],
            [2, 2, 2, 1],
            [3, 2, 2, 0],
            [3, 3, 3, 2],
            [3, 3, 1, 0],
            [3, 0, 0, 0],
        ]
        .into_iter()
        .map(|p| padded(&p))
        .collect();
        assert_eq!(got, expected);

        let spec = CmnSpec::new(2, 3).unwrap();
        let got = spec.enumerate_y();
        assert_eq!(got.len(), 9);
        for p in [
            padded(&[1, 0, 0, 0, 0, 0]),
            padded(&[1, 1, 1, 1, 0, 0]),
            padded(&[2, 1, 1, 0, 0, 0]),
        ] {
            assert!(got.contains(&p), "{p}");
        }

        let spec = CmnSpec::new(1, 2).unwrap();
        assert_eq!(spec.enumerate_y(), vec![padded(&[0, 0]), padded(&[1, 1])]);
    }

    #[test]
    fn enumerate_y_is_sorted_c() {
        for (m, n) in [(1u32, 3u32), (1, 4), (2, 2), (2, 3)] {
            let spec = CmnSpec::new(m, n).unwrap();
            let via_c: BTreeSet<PaddedPartition> =
                spec.enumerate_c().map(|x| x.sort_desc()).collect();
            let direct: BTreeSet<PaddedPartition> = spec.enumerate_y().into_iter().collect();
            assert_eq!(direct, via_c, "(m, n) = ({m}, {n})");
        }
    }

    #[test]
    fn partition_word_bijection_examples() {
        let spec = CmnSpec::new(1, 5).unwrap();
        let lambda = padded(&[2, 2, 1, 1, 0]);
        assert_eq!(spec.partition_to_word(&lambda).unwrap(), word("0001101101"));
        assert_eq!(
            spec.word_to_partition(&word("0001101101")).unwrap(),
            lambda
        );

        let spec = CmnSpec::new(1, 2).unwrap();
        assert_eq!(spec.partition_to_word(&padded(&[0, 0])).unwrap(), word("0011"));
        assert_eq!(spec.word_to_partition(&word("0011")).unwrap(), padded(&[0, 0]));

        let spec = CmnSpec::new(1, 4).unwrap();
        assert_eq!(
            spec.partition_to_word(&padded(&[2, 1, 0, 0])).unwrap(),
            word("00101011")
        );
        assert_eq!(
            spec.word_to_partition(&word("00011101")).unwrap(),
            padded(&[1, 1, 1, 0])
        );
    }

    #[test]
    fn partition_to_word_shape_errors() {
        let spec = CmnSpec::new(1, 4).unwrap();
        assert_eq!(
            spec.partition_to_word(&padded(&[2, 1, 0])),
            Err(ParkingError::WrongLength { expected: 4, got: 3 })
        );
        assert_eq!(
            spec.partition_to_word(&padded(&[4, 1, 0, 0])),
            Err(ParkingError::PartTooLarge { index: 0, value: 4 })
        );
    }

    #[test]
    fn word_to_partition_names_the_violated_condition() {
        let spec = CmnSpec::new(1, 4).unwrap();
        assert_eq!(
            spec.word_to_partition(&word("0011")),
            Err(ParkingError::WrongLength { expected: 8, got: 4 })
        );
        assert_eq!(
            spec.word_to_partition(&word("00011111")),
            Err(ParkingError::NotBalanced { zeros: 3, ones: 5 })
        );
        assert_eq!(
            spec.word_to_partition(&word("11010100")),
            Err(ParkingError::LeadsWithOne)
        );
        // balanced and starts with 0, but 3+4+5+6 = 18 is 2 mod 4
        assert_eq!(
            spec.word_to_partition(&word("00111100")),
            Err(ParkingError::WrongWeight { weight: 18 })
        );
        let nondefault = CmnSpec::with_residue(1, 4, 0).unwrap();
        assert!(matches!(
            nondefault.word_to_partition(&word("00101011")),
            Err(ParkingError::UnsupportedResidue { .. })
        ));
    }

    #[test]
    fn enumerate_b_smallest_case() {
        let spec = CmnSpec::new(1, 2).unwrap();
        let words: Vec<BinaryWord> = spec.enumerate_b().unwrap().collect();
        assert_eq!(words, vec![word("0011"), word("0110")]);
    }

    #[test]
    fn enumerate_b_rejects_nondefault_residue() {
        let spec = CmnSpec::with_residue(1, 4, 1).unwrap();
        assert!(matches!(
            spec.enumerate_b(),
            Err(ParkingError::UnsupportedResidue { .. })
        ));
        assert!(matches!(
            spec.enumerate_b_lyndon(),
            Err(ParkingError::UnsupportedResidue { .. })
        ));
        assert!(matches!(
            spec.frobenius_tau_hat(),
            Err(ParkingError::UnsupportedResidue { .. })
        ));
        assert!(matches!(
            spec.count_y_formula(),
            Err(ParkingError::UnsupportedResidue { .. })
        ));
    }

    #[test]
    fn lyndon_sets_from_the_worked_examples() {
        let spec = CmnSpec::new(1, 4).unwrap();
        assert_eq!(
            spec.enumerate_b_lyndon().unwrap(),
            vec![word("00011101"), word("00101011")]
        );
        let spec = CmnSpec::new(2, 3).unwrap();
        assert_eq!(
            spec.enumerate_b_lyndon().unwrap(),
            vec![word("001011111"), word("001111011"), word("010110111")]
        );
        let spec = CmnSpec::new(1, 2).unwrap();
        assert_eq!(spec.enumerate_b_lyndon().unwrap(), vec![word("0011")]);
    }

    #[test]
    fn lyndon_generation_matches_filtering_b() {
        for (m, n) in [(1u32, 2u32), (1, 3), (1, 4), (1, 5), (2, 2), (2, 3), (3, 2)] {
            let spec = CmnSpec::new(m, n).unwrap();
            let filtered: Vec<BinaryWord> = spec
                .enumerate_b()
                .unwrap()
                .filter(|w| w.is_lyndon())
                .collect();
            assert_eq!(
                spec.enumerate_b_lyndon().unwrap(),
                filtered,
                "(m, n) = ({m}, {n})"
            );
        }
    }

    #[test]
    fn count_formulas_match_enumeration() {
        for (m, n) in [(1u32, 2u32), (1, 3), (1, 4), (1, 5), (1, 6), (2, 2), (2, 3), (2, 4)] {
            let spec = CmnSpec::new(m, n).unwrap();
            let y = spec.enumerate_y();
            assert_eq!(
                spec.count_y_formula().unwrap(),
                BigUint::from(y.len()),
                "|Y| at (m, n) = ({m}, {n})"
            );
            assert_eq!(
                spec.count_lyndon_formula().unwrap(),
                BigUint::from(spec.enumerate_b_lyndon().unwrap().len()),
                "|B^L| at (m, n) = ({m}, {n})"
            );
            let orbit_total: BigUint = y.iter().map(|l| l.orbit_size()).sum();
            assert_eq!(orbit_total, spec.count_c(), "orbit sizes at ({m}, {n})");
        }
    }

    #[test]
    fn count_formula_known_values() {
        assert_eq!(
            CmnSpec::new(1, 4).unwrap().count_y_formula().unwrap(),
            BigUint::from(8u32)
        );
        assert_eq!(
            CmnSpec::new(1, 4).unwrap().count_lyndon_formula().unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(
            CmnSpec::new(2, 3).unwrap().count_y_formula().unwrap(),
            BigUint::from(9u32)
        );
        assert_eq!(
            CmnSpec::new(2, 3).unwrap().count_lyndon_formula().unwrap(),
            BigUint::from(3u32)
        );
        assert_eq!(
            CmnSpec::new(1, 2).unwrap().count_y_formula().unwrap(),
            BigUint::from(2u32)
        );
    }

    #[test]
    fn shift_orbit_examples() {
        let spec = CmnSpec::new(1, 4).unwrap();
        let orbit: BTreeSet<PaddedPartition> = spec
            .shift_orbit_sorted(&padded(&[2, 1, 0, 0]))
            .into_iter()
            .collect();
        let expected: BTreeSet<PaddedPartition> = [
            padded(&[2, 1, 0, 0]),
            padded(&[3, 2, 1, 1]),
            padded(&[3, 2, 2, 0]),
            padded(&[3, 3, 1, 0]),
        ]
        .into_iter()
        .collect();
        assert_eq!(orbit, expected);

        let orbit: BTreeSet<PaddedPartition> = spec
            .shift_orbit_sorted(&padded(&[1, 1, 1, 0]))
            .into_iter()
            .collect();
        let expected: BTreeSet<PaddedPartition> = [
            padded(&[1, 1, 1, 0]),
            padded(&[2, 2, 2, 1]),
            padded(&[3, 3, 3, 2]),
            padded(&[3, 0, 0, 0]),
        ]
        .into_iter()
        .collect();
        assert_eq!(orbit, expected);

        // the n = 10 instance: sort(shift^6(lambda))
        let spec = CmnSpec::new(1, 10).unwrap();
        let lambda = padded(&[7, 5, 5, 5, 4, 4, 2, 2, 2, 0]);
        let orbit = spec.shift_orbit_sorted(&lambda);
        assert!(orbit.contains(&padded(&[8, 8, 8, 6, 3, 1, 1, 1, 0, 0])));
        let mut point = lambda.as_lattice_point();
        for _ in 0..6 {
            point = shift(&point, 10).unwrap();
        }
        assert_eq!(point.sort_desc(), padded(&[8, 8, 8, 6, 3, 1, 1, 1, 0, 0]));
    }

    #[test]
    fn shift_orbits_have_n_elements_and_tile_y() {
        for (m, n) in [(1u32, 2u32), (1, 3), (1, 4), (1, 5), (2, 2), (2, 3)] {
            let spec = CmnSpec::new(m, n).unwrap();
            let y: BTreeSet<PaddedPartition> = spec.enumerate_y().into_iter().collect();
            for lambda in &y {
                assert_eq!(
                    spec.shift_orbit_sorted(lambda).len(),
                    n as usize,
                    "orbit of {lambda} at ({m}, {n})"
                );
            }
            // orbits of the Lyndon partitions tile Y
            let mut covered = BTreeSet::new();
            for w in spec.enumerate_b_lyndon().unwrap() {
                let lambda = spec.word_to_partition(&w).unwrap();
                for member in spec.shift_orbit_sorted(&lambda) {
                    assert!(covered.insert(member), "overlap at ({m}, {n})");
                }
            }
            assert_eq!(covered, y, "tiling at ({m}, {n})");
        }
    }

    #[test]
    fn frobenius_tau_hat_examples() {
        let spec = CmnSpec::new(2, 3).unwrap();
        assert_eq!(
            spec.frobenius_tau_hat().unwrap(),
            SymFunc::parse("h[5,1] + h[4,2] + h[3,2,1]").unwrap()
        );
        let spec = CmnSpec::new(1, 4).unwrap();
        assert_eq!(
            spec.frobenius_tau_hat().unwrap(),
            SymFunc::parse("h[2,1,1] + h[3,1]").unwrap()
        );
        let spec = CmnSpec::new(1, 2).unwrap();
        assert_eq!(
            spec.frobenius_tau_hat().unwrap(),
            SymFunc::parse("h[2]").unwrap()
        );
    }

    #[test]
    fn class_representatives_counts() {
        let spec = CmnSpec::new(1, 4).unwrap();
        let reps: Vec<LatticePoint> = spec.class_representatives().unwrap().collect();
        assert_eq!(reps.len(), 16);
        let distinct: BTreeSet<LatticePoint> = reps.into_iter().collect();
        assert_eq!(distinct.len(), 16);

        let spec = CmnSpec::new(1, 2).unwrap();
        let reps: Vec<LatticePoint> = spec.class_representatives().unwrap().collect();
        assert_eq!(reps, vec![LatticePoint::new(vec![0, 0])]);

        let spec = CmnSpec::new(2, 3).unwrap();
        assert_eq!(spec.class_representatives().unwrap().count(), 81);
        assert_eq!(spec.count_classes(), BigUint::from(81u32));
    }

    #[test]
    fn class_representatives_hit_every_shift_class_once() {
        for (m, n) in [(1u32, 2u32), (1, 3), (1, 4), (2, 2), (2, 3)] {
            let spec = CmnSpec::new(m, n).unwrap();
            // canonical label of a shift class: the lexicographically least
            // point among the n shifts
            let class_label = |x: &LatticePoint| {
                let mut best = x.clone();
                let mut current = x.clone();
                for _ in 1..n {
                    current = shift(&current, n).unwrap();
                    if current < best {
                        best = current.clone();
                    }
                }
                best
            };
            let mut seen = BTreeSet::new();
            for rep in spec.class_representatives().unwrap() {
                assert!(seen.insert(class_label(&rep)), "double cover at ({m}, {n})");
            }
            let all_classes: BTreeSet<LatticePoint> =
                spec.enumerate_c().map(|x| class_label(&x)).collect();
            assert_eq!(seen, all_classes, "coverage at ({m}, {n})");
        }
    }

    #[test]
    fn primitivity_of_b_words() {
        for (m, n) in [(1u32, 2u32), (1, 5), (2, 3), (3, 2)] {
            let spec = CmnSpec::new(m, n).unwrap();
            for w in spec.enumerate_b().unwrap() {
                assert!(w.is_primitive().unwrap(), "{w} at ({m}, {n})");
            }
        }
    }

    #[test]
    fn bijection_roundtrip_on_y() {
        for (m, n) in [(1u32, 2u32), (1, 4), (1, 5), (2, 2), (2, 3)] {
            let spec = CmnSpec::new(m, n).unwrap();
            let y = spec.enumerate_y();
            let mut images = BTreeSet::new();
            for lambda in &y {
                let w = spec.partition_to_word(lambda).unwrap();
                assert_eq!(
                    spec.word_to_partition(&w).unwrap(),
                    *lambda,
                    "roundtrip at ({m}, {n})"
                );
                images.insert(w);
            }
            let b: BTreeSet<BinaryWord> = spec.enumerate_b().unwrap().collect();
            assert_eq!(images, b, "image is exactly B at ({m}, {n})");
        }
    }

    #[test]
    fn nondefault_residue_set_level_operations_work() {
        let spec = CmnSpec::with_residue(1, 2, 1).unwrap();
        let points: Vec<LatticePoint> = spec.enumerate_c().collect();
        assert_eq!(
            points,
            vec![
                LatticePoint::new(vec![0, 1]),
                LatticePoint::new(vec![1, 0]),
            ]
        );
        assert_eq!(spec.enumerate_y(), vec![padded(&[1, 0])]);
        // shift orbit collapses for this residue: sort(shift(1,0)) = (1,0)
        assert_eq!(spec.shift_orbit_sorted(&padded(&[1, 0])).len(), 1);
    }

    #[test]
    fn errors_display() {
        assert!(ParkingError::LeadsWithOne.to_string().contains("begin with 0"));
        assert!(CmnSpec::new(0, 2).unwrap_err().to_string().contains("m >= 1"));
    }

    #[test]
    fn y_members_lie_in_dominance_range() {
        // sanity: every Y member for (1, n) has size congruent to the
        // default residue and fits in the box
        let spec = CmnSpec::new(1, 6).unwrap();
        for lambda in spec.enumerate_y() {
            assert!(lambda.parts().iter().all(|&p| p <= 5));
            assert_eq!(lambda.size() % 6, spec.residue() as u64);
            let _ = dominates(&lambda, &lambda);
        }
    }
}
