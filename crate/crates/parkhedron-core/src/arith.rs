//! Number-theoretic helpers over arbitrary-precision integers.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

/// Error for operations that only accept positive integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NonPositiveError;

impl fmt::Display for NonPositiveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "argument must be a positive integer")
    }
}

impl core::error::Error for NonPositiveError {}

/// Classical Möbius function: 0 if `k` has a squared prime factor,
/// otherwise (-1)^(number of prime factors).
pub fn mobius(k: u64) -> Result<i8, NonPositiveError> {
    if k == 0 {
        return Err(NonPositiveError);
    }
    let mut k = k;
    let mut primes = 0u32;
    let mut p = 2u64;
    while p * p <= k {
        if k % p == 0 {
            k /= p;
            if k % p == 0 {
                return Ok(0);
            }
            primes += 1;
        }
        p += 1;
    }
    if k > 1 {
        primes += 1;
    }
    Ok(if primes % 2 == 0 { 1 } else { -1 })
}

/// All positive divisors of `k`, in increasing order.
pub fn divisors(k: u64) -> Result<Vec<u64>, NonPositiveError> {
    if k == 0 {
        return Err(NonPositiveError);
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= k {
        if k % d == 0 {
            small.push(d);
            if d * d != k {
                large.push(k / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Ok(small)
}

/// Greatest common divisor of a slice; 0 for the empty slice.
pub fn gcd_all(parts: &[u32]) -> u32 {
    parts.iter().fold(0u32, |acc, &p| gcd(acc, p))
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Binomial coefficient `C(n, k)` as a big integer; 0 when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_small_values() {
        assert_eq!(mobius(1), Ok(1));
        assert_eq!(mobius(2), Ok(-1));
        assert_eq!(mobius(3), Ok(-1));
        assert_eq!(mobius(4), Ok(0));
        assert_eq!(mobius(6), Ok(1));
        assert_eq!(mobius(12), Ok(0));
        assert_eq!(mobius(30), Ok(-1));
        assert!(mobius(0).is_err());
    }

    #[test]
    fn mobius_divisor_sum_is_iverson() {
        // sum_{d|k} mu(d) = [k == 1]
        for k in 1u64..=200 {
            let s: i64 = divisors(k)
                .unwrap()
                .iter()
                .map(|&d| mobius(d).unwrap() as i64)
                .sum();
            assert_eq!(s, if k == 1 { 1 } else { 0 }, "k = {k}");
        }
    }

    #[test]
    fn divisors_of_12() {
        assert_eq!(divisors(12).unwrap(), [1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1).unwrap(), [1]);
        assert!(divisors(0).is_err());
    }

    #[test]
    fn gcd_all_examples() {
        assert_eq!(gcd_all(&[2, 2]), 2);
        assert_eq!(gcd_all(&[4, 6, 10]), 2);
        assert_eq!(gcd_all(&[3]), 3);
        assert_eq!(gcd_all(&[]), 0);
    }

    #[test]
    fn factorial_and_binomial() {
        assert_eq!(factorial(0), BigUint::from(1u32));
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(binomial(7, 4), BigUint::from(35u32));
        assert_eq!(binomial(3, 2), BigUint::from(3u32));
        assert_eq!(binomial(2, 5), BigUint::ZERO);
        // 20! overflows u64; check against a known value.
        assert_eq!(
            factorial(20).to_string(),
            "2432902008176640000".to_string()
        );
        assert_eq!(binomial(28, 14).to_string(), "40116600");
    }
}
