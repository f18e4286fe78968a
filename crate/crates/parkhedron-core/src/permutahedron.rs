//! Lattice points of permutahedra via the dominance criterion, the trimmed
//! standard permutahedron, fixed-point counts, and exact Ehrhart
//! interpolation.
//!
//! The permutahedron of a weakly decreasing vertex `lambda` is the convex
//! hull of all coordinate permutations of `lambda`; an integer point lies in
//! it iff it has the right coordinate sum and its decreasing rearrangement
//! is dominated by `lambda`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::partition::{dominates, CycleType, LatticePoint, PaddedPartition};
use crate::symfunc::SymFunc;

/// Domain errors for permutahedron operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermutahedronError {
    /// n must be at least 2.
    TooSmall { n: u32 },
    LengthMismatch { expected: usize, got: usize },
    /// Cycle type degree differs from n.
    DegreeMismatch { expected: u32, got: u32 },
    /// A constant vertex spans a single point; no volume to speak of.
    DegeneratePolytope,
    /// An internal quantity that must be an integer was not; signals a
    /// transcription bug rather than bad input.
    NonIntegral { what: &'static str },
}

impl fmt::Display for PermutahedronError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermutahedronError::TooSmall { n } => write!(f, "need n >= 2, got {n}"),
            PermutahedronError::LengthMismatch { expected, got } => {
                write!(f, "expected length {expected}, got {got}")
            }
            PermutahedronError::DegreeMismatch { expected, got } => {
                write!(f, "cycle type of {got} does not match n = {expected}")
            }
            PermutahedronError::DegeneratePolytope => {
                write!(f, "constant vertex spans a degenerate polytope")
            }
            PermutahedronError::NonIntegral { what } => {
                write!(f, "internal consistency: {what} must be an integer")
            }
        }
    }
}

impl core::error::Error for PermutahedronError {}

/// The staircase with a doubled bottom step: `(n-2, n-3, ..., 1, 0, 0)` of
/// length n and size `C(n-1, 2)`.
pub fn delta(n: u32) -> Result<PaddedPartition, PermutahedronError> {
    if n < 2 {
        return Err(PermutahedronError::TooSmall { n });
    }
    let mut parts: Vec<u32> = (0..=n - 2).rev().collect();
    parts.push(0);
    Ok(PaddedPartition::new(parts))
}

/// The standard permutahedron vertex `(n-1, ..., 1, 0)` of length n.
pub fn standard_vertex(n: u32) -> PaddedPartition {
    assert!(n >= 1, "need n >= 1");
    PaddedPartition::new((0..n).rev().collect())
}

/// Reflects a point of the lattice of `P_(n-2, n-2, n-3, ..., 1, 0)` onto
/// the lattice of `P_delta(n)`: coordinatewise `x -> n - 2 - x`. Applying
/// it twice is the identity, and it commutes with coordinate permutations.
pub fn trimmed_to_delta(x: &LatticePoint, n: u32) -> LatticePoint {
    assert_eq!(x.len(), n as usize, "point length must be n");
    let c = n as i64 - 2;
    LatticePoint::new(x.coords().iter().map(|&v| c - v).collect())
}

/// A permutahedron given by its weakly decreasing generating vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutahedronSpec {
    vertex: PaddedPartition,
}

impl PermutahedronSpec {
    /// Panics on an empty vertex.
    pub fn new(vertex: PaddedPartition) -> Self {
        assert!(!vertex.is_empty(), "vertex must have positive length");
        PermutahedronSpec { vertex }
    }

    pub fn vertex(&self) -> &PaddedPartition {
        &self.vertex
    }

    pub fn len(&self) -> usize {
        self.vertex.len()
    }

    /// Membership by the dominance criterion: right sum, and the sorted
    /// point dominated by the vertex.
    pub fn is_lattice_point(&self, x: &LatticePoint) -> Result<bool, PermutahedronError> {
        if x.len() != self.vertex.len() {
            return Err(PermutahedronError::LengthMismatch {
                expected: self.vertex.len(),
                got: x.len(),
            });
        }
        if x.coords().iter().any(|&c| c < 0) {
            return Ok(false);
        }
        if x.sum() as u64 != self.vertex.size() {
            return Ok(false);
        }
        let sorted = x.sort_desc();
        Ok(dominates(&self.vertex, &sorted).expect("lengths and sizes already match"))
    }

    /// All weakly decreasing lattice points: every padded partition of the
    /// same length and size dominated by the vertex, each exactly once.
    pub fn orbit_reps(&self) -> Vec<PaddedPartition> {
        let len = self.vertex.len();
        let total = self.vertex.size();
        let prefix_bound: Vec<u64> = self
            .vertex
            .parts()
            .iter()
            .scan(0u64, |acc, &p| {
                *acc += p as u64;
                Some(*acc)
            })
            .collect();
        let mut out = Vec::new();
        let mut parts: Vec<u32> = Vec::with_capacity(len);
        fn rec(
            parts: &mut Vec<u32>,
            sum: u64,
            len: usize,
            total: u64,
            prefix_bound: &[u64],
            out: &mut Vec<PaddedPartition>,
        ) {
            if parts.len() == len {
                if sum == total {
                    out.push(PaddedPartition::new(parts.clone()));
                }
                return;
            }
            let i = parts.len();
            let remaining_slots = (len - i - 1) as u64;
            let cap_prev = parts.last().copied().unwrap_or(u32::MAX);
            let cap_prefix = prefix_bound[i] - sum; // keep prefix sums dominated
            let cap = (cap_prev as u64).min(cap_prefix).min(total - sum);
            for v in (0..=cap as u32).rev() {
                // everything after position i is at most v
                if sum + v as u64 + remaining_slots * (v as u64) < total {
                    break;
                }
                parts.push(v);
                rec(parts, sum + v as u64, len, total, prefix_bound, out);
                parts.pop();
            }
        }
        rec(&mut parts, 0, len, total, &prefix_bound, &mut out);
        out
    }

    /// Number of lattice points: sum of orbit sizes over the orbit
    /// representatives.
    pub fn lattice_point_count(&self) -> BigUint {
        self.orbit_reps().iter().map(|rep| rep.orbit_size()).sum()
    }

    /// Every lattice point, streamed orbit by orbit.
    pub fn lattice_points(&self) -> impl Iterator<Item = LatticePoint> {
        self.orbit_reps()
            .into_iter()
            .flat_map(|rep| rep.orbit_points())
    }

    /// Lattice point counts of the dilates `t * vertex` for `t = 0..=t_max`.
    pub fn ehrhart_counts(&self, t_max: u32) -> Vec<BigUint> {
        (0..=t_max)
            .map(|t| PermutahedronSpec::new(self.vertex.scaled(t)).lattice_point_count())
            .collect()
    }

    /// Coefficients (ascending degree) of the polynomial of degree
    /// `len - 1` interpolating the dilate counts at `t = 0..len-1`, by exact
    /// rational Lagrange interpolation.
    pub fn ehrhart_polynomial(&self) -> Result<Vec<BigRational>, PermutahedronError> {
        let first = self.vertex.parts().first().copied().unwrap_or(0);
        if self.vertex.parts().iter().all(|&p| p == first) {
            return Err(PermutahedronError::DegeneratePolytope);
        }
        let degree = self.vertex.len() - 1;
        let counts = self.ehrhart_counts(degree as u32);
        let points: Vec<BigRational> = counts
            .iter()
            .map(|c| BigRational::from_integer(BigInt::from(c.clone())))
            .collect();
        Ok(lagrange_interpolate(&points))
    }

    /// Leading coefficient of the interpolated dilate-count polynomial; for
    /// a full-dimensional polytope in its affine span this is the volume
    /// normalized to the induced lattice. Asserted to be a positive integer.
    pub fn normalized_volume(&self) -> Result<BigUint, PermutahedronError> {
        let coeffs = self.ehrhart_polynomial()?;
        let leading = coeffs.last().expect("length >= 1").clone();
        if !leading.is_integer() || !leading.is_positive() {
            return Err(PermutahedronError::NonIntegral {
                what: "leading Ehrhart coefficient",
            });
        }
        Ok(leading.to_integer().to_biguint().unwrap())
    }
}

/// Interpolates values at the nodes `x = 0, 1, ..., len-1`; returns
/// coefficients in ascending degree, length equal to `values.len()`.
fn lagrange_interpolate(values: &[BigRational]) -> Vec<BigRational> {
    let k = values.len();
    let mut coeffs = vec![BigRational::zero(); k];
    for (i, y) in values.iter().enumerate() {
        if y.is_zero() {
            continue;
        }
        // numerator polynomial prod_{j != i} (x - j)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for j in 0..k {
            if j == i {
                continue;
            }
            let root = BigRational::from_integer(BigInt::from(j));
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * &root;
            }
            basis = next;
            denom *= BigRational::from_integer(BigInt::from(i as i64 - j as i64));
        }
        let scale = y / denom;
        for (d, c) in basis.iter().enumerate() {
            coeffs[d] += c * &scale;
        }
    }
    coeffs
}

/// Frobenius characteristic of the action on the lattice points of
/// `P_delta(n)`: one `h_(multiplicity partition)` per orbit representative.
pub fn frobenius_gamma(n: u32) -> Result<SymFunc, PermutahedronError> {
    let spec = PermutahedronSpec::new(delta(n)?);
    Ok(SymFunc::h_sum(
        n,
        spec.orbit_reps()
            .into_iter()
            .map(|rep| rep.multiplicity_partition()),
    ))
}

/// Number of lattice points of `P_delta(n)` fixed by a permutation of cycle
/// type `mu`: enumerate one value per cycle in `[0, n-2]`, demand the
/// weighted sum `C(n-1, 2)`, and check dominance of the expanded tuple.
pub fn fixed_point_count(n: u32, mu: &CycleType) -> Result<BigUint, PermutahedronError> {
    if mu.degree() != n {
        return Err(PermutahedronError::DegreeMismatch {
            expected: n,
            got: mu.degree(),
        });
    }
    let delta_n = delta(n)?;
    let target = delta_n.size();
    let cycles = mu.parts();
    let max_value = (n - 2) as u64;
    let suffix_capacity: Vec<u64> = {
        // max contribution of cycles i.. when every value is n-2
        let mut caps = vec![0u64; cycles.len() + 1];
        for i in (0..cycles.len()).rev() {
            caps[i] = caps[i + 1] + cycles[i] as u64 * max_value;
        }
        caps
    };
    let mut count = BigUint::ZERO;
    let mut values = vec![0u32; cycles.len()];
    fn rec(
        idx: usize,
        sum: u64,
        values: &mut Vec<u32>,
        cycles: &[u32],
        max_value: u64,
        target: u64,
        suffix_capacity: &[u64],
        delta_n: &PaddedPartition,
        count: &mut BigUint,
    ) {
        if sum > target || sum + suffix_capacity[idx] < target {
            return;
        }
        if idx == cycles.len() {
            let mut expanded: Vec<u32> = Vec::with_capacity(delta_n.len());
            for (i, &v) in values.iter().enumerate() {
                for _ in 0..cycles[i] {
                    expanded.push(v);
                }
            }
            let sorted = PaddedPartition::from_multiset(expanded);
            if dominates(delta_n, &sorted).expect("sizes match by construction") {
                *count += BigUint::one();
            }
            return;
        }
        for v in 0..=max_value as u32 {
            values[idx] = v;
            rec(
                idx + 1,
                sum + cycles[idx] as u64 * v as u64,
                values,
                cycles,
                max_value,
                target,
                suffix_capacity,
                delta_n,
                count,
            );
        }
        values[idx] = 0;
    }
    rec(
        0,
        0,
        &mut values,
        cycles,
        max_value,
        target,
        &suffix_capacity,
        &delta_n,
        &mut count,
    );
    Ok(count)
}

/// The closed form for the fixed-point count: `f(d) * n^(l-2)` with
/// `f(1) = 1`, `f(2) = 2` when `n = 2 mod 4`, and `f = 0` otherwise, where
/// `d` is the gcd of the cycle lengths and `l` their number. Evaluated as
/// an exact rational (`l = 1` makes the power negative) and checked to be
/// an integer.
pub fn fixed_point_formula(n: u32, mu: &CycleType) -> Result<BigUint, PermutahedronError> {
    if mu.degree() != n {
        return Err(PermutahedronError::DegreeMismatch {
            expected: n,
            got: mu.degree(),
        });
    }
    let d = mu.gcd();
    let f: u32 = match d {
        1 => 1,
        2 if n % 4 == 2 => 2,
        _ => 0,
    };
    let l = mu.num_cycles() as i64;
    let n_big = BigInt::from(n);
    let power = if l >= 2 {
        BigRational::from_integer(n_big.pow((l - 2) as u32))
    } else {
        BigRational::new(BigInt::one(), n_big.pow((2 - l) as u32))
    };
    let value = power * BigRational::from_integer(BigInt::from(f));
    if !value.is_integer() {
        return Err(PermutahedronError::NonIntegral {
            what: "fixed point formula value",
        });
    }
    Ok(value.to_integer().to_biguint().unwrap())
}
