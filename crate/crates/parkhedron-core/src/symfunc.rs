//! Homogeneous symmetric functions over exact rationals, in the complete
//! homogeneous (h) and power-sum (p) bases.
//!
//! Just enough of the ring is implemented to state Frobenius
//! characteristics of permutation modules, extract characters, and restrict
//! representations: linear combinations, the h -> p change of basis, and
//! the two equivalent restriction rules.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::partition::{CycleType, Partition};

/// Basis tag for a `SymFunc`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// Complete homogeneous basis h.
    H,
    /// Power-sum basis p.
    P,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::H => write!(f, "h"),
            Basis::P => write!(f, "p"),
        }
    }
}

/// A homogeneous symmetric function: a finite map from partitions of
/// `degree` to exact rational coefficients, in one basis.
///
/// Zero coefficients are never stored. Equality is basis-aware: both sides
/// are compared in the p basis.
#[derive(Debug, Clone)]
pub struct SymFunc {
    basis: Basis,
    degree: u32,
    terms: BTreeMap<Partition, BigRational>,
}

/// Domain errors for symmetric function operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymFuncError {
    DegreeMismatch { left: u32, right: u32 },
    BasisMismatch,
    WrongBasis { expected: Basis },
    DegreeZero,
}

impl fmt::Display for SymFuncError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymFuncError::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {left} vs {right}")
            }
            SymFuncError::BasisMismatch => write!(f, "operands are in different bases"),
            SymFuncError::WrongBasis { expected } => {
                write!(f, "operation requires the {expected} basis")
            }
            SymFuncError::DegreeZero => write!(f, "operation requires degree >= 1"),
        }
    }
}

impl core::error::Error for SymFuncError {}

/// Centralizer order of the conjugacy class `lambda`:
/// product over part values k with multiplicity m_k of `k^m_k * m_k!`.
pub fn z_lambda(lambda: &Partition) -> BigUint {
    let mut z = BigUint::one();
    for (&value, &mult) in &lambda.multiplicities() {
        z *= BigUint::from(value).pow(mult);
        z *= crate::arith::factorial(mult as u64);
    }
    z
}

impl SymFunc {
    pub fn zero(basis: Basis, degree: u32) -> Self {
        SymFunc {
            basis,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The single basis element indexed by `lambda`, coefficient 1.
    pub fn monomial(basis: Basis, lambda: Partition) -> Self {
        let degree = lambda.size();
        let mut terms = BTreeMap::new();
        terms.insert(lambda, BigRational::one());
        SymFunc {
            basis,
            degree,
            terms,
        }
    }

    pub fn h_monomial(lambda: Partition) -> Self {
        SymFunc::monomial(Basis::H, lambda)
    }

    pub fn p_monomial(lambda: Partition) -> Self {
        SymFunc::monomial(Basis::P, lambda)
    }

    /// Sum of h basis elements with multiplicity; every partition must have
    /// size `degree`.
    pub fn h_sum<I: IntoIterator<Item = Partition>>(degree: u32, lambdas: I) -> Self {
        let mut terms: BTreeMap<Partition, BigRational> = BTreeMap::new();
        for lambda in lambdas {
            assert_eq!(lambda.size(), degree, "h_sum term of wrong degree");
            *terms.entry(lambda).or_insert_with(BigRational::zero) += BigRational::one();
        }
        SymFunc {
            basis: Basis::H,
            degree,
            terms,
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigRational {
        self.terms.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Linear combination; both operands must share basis and degree.
    pub fn add(&self, other: &SymFunc) -> Result<SymFunc, SymFuncError> {
        if self.basis != other.basis {
            return Err(SymFuncError::BasisMismatch);
        }
        if self.degree != other.degree {
            return Err(SymFuncError::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let mut terms = self.terms.clone();
        for (lambda, coeff) in &other.terms {
            let entry = terms.entry(lambda.clone()).or_insert_with(BigRational::zero);
            *entry += coeff;
            if entry.is_zero() {
                terms.remove(lambda);
            }
        }
        Ok(SymFunc {
            basis: self.basis,
            degree: self.degree,
            terms,
        })
    }

    pub fn scale(&self, q: &BigRational) -> SymFunc {
        if q.is_zero() {
            return SymFunc::zero(self.basis, self.degree);
        }
        SymFunc {
            basis: self.basis,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(lambda, c)| (lambda.clone(), c * q))
                .collect(),
        }
    }

    /// The same function expressed in the p basis, via
    /// `h_k = sum over partitions nu of k of p_nu / z_nu` and
    /// multiplicativity over the parts of each index partition.
    pub fn to_p_basis(&self) -> SymFunc {
        if self.basis == Basis::P {
            return self.clone();
        }
        let mut rows: BTreeMap<u32, Vec<(Partition, BigRational)>> = BTreeMap::new();
        let mut terms: BTreeMap<Partition, BigRational> = BTreeMap::new();
        for (lambda, coeff) in &self.terms {
            // expand the product of single-row h's part by part
            let mut acc: BTreeMap<Partition, BigRational> = BTreeMap::new();
            acc.insert(Partition::empty(), coeff.clone());
            for &part in lambda.parts() {
                let row = rows.entry(part).or_insert_with(|| h_row_in_p(part));
                let mut next: BTreeMap<Partition, BigRational> = BTreeMap::new();
                for (mu, c) in &acc {
                    for (nu, d) in row.iter() {
                        let merged = merge_partitions(mu, nu);
                        *next.entry(merged).or_insert_with(BigRational::zero) += c * d;
                    }
                }
                acc = next;
            }
            for (mu, c) in acc {
                let entry = terms.entry(mu).or_insert_with(BigRational::zero);
                *entry += c;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        SymFunc {
            basis: Basis::P,
            degree: self.degree,
            terms,
        }
    }

    /// Character of the represented class function at cycle type `mu`:
    /// `z(mu)` times the coefficient of `p_mu`.
    pub fn character(&self, mu: &CycleType) -> Result<BigRational, SymFuncError> {
        if mu.degree() != self.degree {
            return Err(SymFuncError::DegreeMismatch {
                left: self.degree,
                right: mu.degree(),
            });
        }
        let p_form = self.to_p_basis();
        let coeff = p_form.coefficient(mu.partition());
        let z = BigRational::from_integer(BigInt::from(z_lambda(mu.partition())));
        Ok(coeff * z)
    }

    /// Frobenius characteristic of the restriction to the next smaller
    /// symmetric group, computed on h-expansions by the Leibniz rule:
    /// `h_lambda` maps to the sum over distinct part values v (multiplicity
    /// m_v) of `m_v * h_(lambda with one v lowered to v-1)`, dropping parts
    /// that reach 0.
    pub fn restrict(&self) -> Result<SymFunc, SymFuncError> {
        if self.basis != Basis::H {
            return Err(SymFuncError::WrongBasis { expected: Basis::H });
        }
        if self.degree == 0 {
            return Err(SymFuncError::DegreeZero);
        }
        let mut terms: BTreeMap<Partition, BigRational> = BTreeMap::new();
        for (lambda, coeff) in &self.terms {
            for (&value, &mult) in &lambda.multiplicities() {
                let mut parts: Vec<u32> = lambda.parts().to_vec();
                let idx = parts.iter().position(|&p| p == value).unwrap();
                parts.remove(idx);
                if value > 1 {
                    // v-1 still fits right after the block of v's
                    let insert_at = parts
                        .iter()
                        .position(|&p| p < value - 1)
                        .unwrap_or(parts.len());
                    parts.insert(insert_at, value - 1);
                }
                let lowered = Partition::new(parts);
                let entry = terms.entry(lowered).or_insert_with(BigRational::zero);
                *entry += coeff * BigRational::from_integer(BigInt::from(mult));
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(SymFunc {
            basis: Basis::H,
            degree: self.degree - 1,
            terms,
        })
    }

    /// Partial derivative with respect to `p_1` of a p-basis expansion;
    /// the power-sum route to restriction.
    pub fn p1_derivative(&self) -> Result<SymFunc, SymFuncError> {
        if self.basis != Basis::P {
            return Err(SymFuncError::WrongBasis { expected: Basis::P });
        }
        if self.degree == 0 {
            return Err(SymFuncError::DegreeZero);
        }
        let mut terms: BTreeMap<Partition, BigRational> = BTreeMap::new();
        for (mu, coeff) in &self.terms {
            let ones = mu.parts().iter().filter(|&&p| p == 1).count() as u32;
            if ones == 0 {
                continue;
            }
            let mut parts = mu.parts().to_vec();
            parts.pop();
            let lowered = Partition::new(parts);
            let entry = terms.entry(lowered).or_insert_with(BigRational::zero);
            *entry += coeff * BigRational::from_integer(BigInt::from(ones));
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(SymFunc {
            basis: Basis::P,
            degree: self.degree - 1,
            terms,
        })
    }
}

/// p-expansion of the single row `h_k`.
fn h_row_in_p(k: u32) -> Vec<(Partition, BigRational)> {
    crate::partition::partitions_of(k)
        .into_iter()
        .map(|nu| {
            let z = BigRational::from_integer(BigInt::from(z_lambda(&nu)));
            (nu, BigRational::one() / z)
        })
        .collect()
}

/// Union of two partitions as multisets of parts.
fn merge_partitions(a: &Partition, b: &Partition) -> Partition {
    let mut parts = Vec::with_capacity(a.len() + b.len());
    parts.extend_from_slice(a.parts());
    parts.extend_from_slice(b.parts());
    Partition::from_multiset(parts)
}

impl PartialEq for SymFunc {
    fn eq(&self, other: &SymFunc) -> bool {
        if self.degree != other.degree {
            return false;
        }
        if self.basis == other.basis {
            return self.terms == other.terms;
        }
        self.to_p_basis().terms == other.to_p_basis().terms
    }
}

impl Eq for SymFunc {}

// ---------------------------------------------------------------------
// Text format: `term ("+"|"-" term)*` with
// `term := [coeff] basis "[" parts "]"`, whitespace insignificant,
// coefficients integers or fractions, terms printed in reverse
// lexicographic partition order.
// ---------------------------------------------------------------------

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lambda, coeff)) in self.terms.iter().rev().enumerate() {
            if i == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let magnitude = coeff.abs();
            if !magnitude.is_one() {
                write!(f, "{magnitude} ")?;
            }
            write!(f, "{}[", self.basis)?;
            for (j, p) in lambda.parts().iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Error from `SymFunc::parse`, with the byte offset of the failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at offset {}: {}", self.position, self.message)
    }
}

impl core::error::Error for ParseError {}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn err<T>(&self, message: &str) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            message: String::from(message),
        })
    }

    fn expect(&mut self, b: u8) -> Result<(), ParseError> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError {
                position: self.pos,
                message: alloc::format!("expected '{}'", b as char),
            })
        }
    }

    fn parse_digits(&mut self) -> Result<BigUint, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected an integer");
        }
        Ok(BigUint::parse_bytes(&self.bytes[start..self.pos], 10).unwrap())
    }

    fn parse_u32(&mut self) -> Result<u32, ParseError> {
        let at = self.pos;
        let n = self.parse_digits()?;
        u32::try_from(&n).map_err(|_| ParseError {
            position: at,
            message: String::from("integer too large"),
        })
    }

    /// `[coeff] basis "[" parts "]"`.
    fn parse_term(&mut self) -> Result<(BigRational, Basis, Partition), ParseError> {
        self.skip_ws();
        let coeff = if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            let numer = self.parse_digits()?;
            self.skip_ws();
            let denom = if self.peek() == Some(b'/') {
                self.pos += 1;
                self.skip_ws();
                let at = self.pos;
                let d = self.parse_digits()?;
                if d.is_zero() {
                    return Err(ParseError {
                        position: at,
                        message: String::from("zero denominator"),
                    });
                }
                d
            } else {
                BigUint::one()
            };
            self.skip_ws();
            BigRational::new(BigInt::from(numer), BigInt::from(denom))
        } else {
            BigRational::one()
        };
        let basis = match self.peek() {
            Some(b'h') => Basis::H,
            Some(b'p') => Basis::P,
            _ => return self.err("expected basis 'h' or 'p'"),
        };
        self.pos += 1;
        self.skip_ws();
        self.expect(b'[')?;
        self.skip_ws();
        let mut parts = Vec::new();
        if self.peek() != Some(b']') {
            loop {
                let at = self.pos;
                let part = self.parse_u32()?;
                if part == 0 {
                    return Err(ParseError {
                        position: at,
                        message: String::from("partition parts must be positive"),
                    });
                }
                if parts.last().is_some_and(|&prev| prev < part) {
                    return Err(ParseError {
                        position: at,
                        message: String::from("partition parts must be weakly decreasing"),
                    });
                }
                parts.push(part);
                self.skip_ws();
                match self.peek() {
                    Some(b',') => {
                        self.pos += 1;
                        self.skip_ws();
                    }
                    Some(b']') => break,
                    _ => return self.err("expected ',' or ']'"),
                }
            }
        }
        self.expect(b']')?;
        Ok((coeff, basis, Partition::new(parts)))
    }
}

impl SymFunc {
    /// Parses the text grammar produced by `Display`.
    pub fn parse(text: &str) -> Result<SymFunc, ParseError> {
        let mut parser = Parser {
            bytes: text.as_bytes(),
            pos: 0,
        };
        parser.skip_ws();
        let mut negative = false;
        if parser.peek() == Some(b'-') {
            parser.pos += 1;
            negative = true;
        }
        let mut result: Option<SymFunc> = None;
        loop {
            parser.skip_ws();
            let term_at = parser.pos;
            let (coeff, basis, lambda) = parser.parse_term()?;
            let coeff = if negative { -coeff } else { coeff };
            match &mut result {
                None => {
                    let degree = lambda.size();
                    let mut terms = BTreeMap::new();
                    if !coeff.is_zero() {
                        terms.insert(lambda, coeff);
                    }
                    result = Some(SymFunc {
                        basis,
                        degree,
                        terms,
                    });
                }
                Some(f) => {
                    if basis != f.basis {
                        return Err(ParseError {
                            position: term_at,
                            message: String::from("mixed bases in one expression"),
                        });
                    }
                    if lambda.size() != f.degree {
                        return Err(ParseError {
                            position: term_at,
                            message: alloc::format!(
                                "term of degree {} in an expression of degree {}",
                                lambda.size(),
                                f.degree
                            ),
                        });
                    }
                    let entry = f
                        .terms
                        .entry(lambda.clone())
                        .or_insert_with(BigRational::zero);
                    *entry += coeff;
                    if entry.is_zero() {
                        f.terms.remove(&lambda);
                    }
                }
            }
            parser.skip_ws();
            match parser.peek() {
                None => break,
                Some(b'+') => {
                    parser.pos += 1;
                    negative = false;
                }
                Some(b'-') => {
                    parser.pos += 1;
                    negative = true;
                }
                Some(_) => return parser.err("expected '+' or '-'"),
            }
        }
        Ok(result.expect("loop parses at least one term"))
    }
}
