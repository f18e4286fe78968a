//! Binary words: rotations, primitivity, canonical (Lyndon) rotations, and
//! generation of Lyndon words with fixed letter content.
//!
//! The lexicographic order everywhere declares 0 < 1. Word positions exposed
//! by `weight` are 1-indexed.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::partition::Partition;

/// A finite word over the alphabet {0, 1}.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWord {
    letters: Vec<u8>,
}

/// Domain errors for word operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordError {
    /// The operation is undefined on the empty word.
    Empty,
    /// The word starts with 1, so linear runs of 1s would wrap around.
    LeadsWithOne,
    /// A letter other than 0 or 1 was supplied.
    BadLetter(char),
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordError::Empty => write!(f, "operation undefined on the empty word"),
            WordError::LeadsWithOne => write!(f, "word must begin with 0"),
            WordError::BadLetter(c) => write!(f, "invalid letter {c:?}; alphabet is {{0,1}}"),
        }
    }
}

impl core::error::Error for WordError {}

impl BinaryWord {
    /// Panics if any letter is not 0 or 1.
    pub fn new(letters: Vec<u8>) -> Self {
        assert!(
            letters.iter().all(|&b| b <= 1),
            "letters must be 0 or 1"
        );
        BinaryWord { letters }
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn count_ones(&self) -> usize {
        self.letters.iter().filter(|&&b| b == 1).count()
    }

    pub fn count_zeros(&self) -> usize {
        self.len() - self.count_ones()
    }

    /// The rotation `rot^j`, moving the first `j` letters to the end;
    /// `j` is taken modulo the length.
    pub fn rotate(&self, j: usize) -> BinaryWord {
        if self.letters.is_empty() {
            return self.clone();
        }
        let j = j % self.letters.len();
        let mut letters = Vec::with_capacity(self.letters.len());
        letters.extend_from_slice(&self.letters[j..]);
        letters.extend_from_slice(&self.letters[..j]);
        BinaryWord { letters }
    }

    /// True iff no proper cyclic rotation of the word coincides with it.
    pub fn is_primitive(&self) -> Result<bool, WordError> {
        if self.letters.is_empty() {
            return Err(WordError::Empty);
        }
        for j in 1..self.letters.len() {
            if self.rotate(j) == *self {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The smallest index `j` such that `rot^j` of the word is
    /// lexicographically minimal among all rotations (Booth's algorithm,
    /// linear time). Returns 0 on the empty word.
    pub fn least_rotation(&self) -> usize {
        booth(&self.letters)
    }

    /// True iff the word is primitive and already the lexicographically
    /// smallest among its rotations. False on the empty word.
    pub fn is_lyndon(&self) -> bool {
        !self.letters.is_empty()
            && self.least_rotation() == 0
            && self.is_primitive().unwrap_or(false)
    }

    /// Lengths of the maximal runs of consecutive 1s, sorted decreasingly.
    /// The word must begin with 0 so the linear runs agree with the cyclic
    /// ones. The empty word has no runs.
    pub fn runs_of_ones(&self) -> Result<Partition, WordError> {
        if self.letters.first() == Some(&1) {
            return Err(WordError::LeadsWithOne);
        }
        let mut runs = Vec::new();
        let mut current = 0u32;
        for &b in &self.letters {
            if b == 1 {
                current += 1;
            } else if current > 0 {
                runs.push(current);
                current = 0;
            }
        }
        if current > 0 {
            runs.push(current);
        }
        Ok(Partition::from_multiset(runs))
    }

    /// Sum of the 1-indexed positions carrying the letter 1.
    pub fn weight(&self) -> u64 {
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, &b)| b == 1)
            .map(|(i, _)| (i + 1) as u64)
            .sum()
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.letters {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, WordError> {
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => letters.push(0),
                '1' => letters.push(1),
                other => return Err(WordError::BadLetter(other)),
            }
        }
        Ok(BinaryWord { letters })
    }
}

impl From<&str> for BinaryWord {
    /// Convenience for literals; panics on letters outside {0,1}.
    fn from(s: &str) -> Self {
        BinaryWord::from_str(s).expect("word literal must be over {0,1}")
    }
}

fn booth(s: &[u8]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    // failure function over the doubled word; -1 plays the usual KMP role
    let mut fail = vec![-1isize; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = s[j % n];
        let mut i = fail[j - k - 1];
        while i != -1 && sj != s[(k + i as usize + 1) % n] {
            if sj < s[(k + i as usize + 1) % n] {
                k = j - i as usize - 1;
            }
            i = fail[i as usize];
        }
        if i == -1 && sj != s[k % n] {
            if sj < s[k % n] {
                k = j;
            }
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    k
}

/// Naive quadratic scan for the least minimal rotation; the independent
/// oracle for `least_rotation`.
pub fn least_rotation_naive(w: &BinaryWord) -> usize {
    if w.is_empty() {
        return 0;
    }
    let mut best = 0usize;
    let mut best_word = w.clone();
    for j in 1..w.len() {
        let candidate = w.rotate(j);
        if candidate < best_word {
            best_word = candidate;
            best = j;
        }
    }
    best
}

/// All binary Lyndon words with exactly `zeros` 0s and `ones` 1s, in
/// lexicographic order. The empty content yields an empty stream.
///
/// Generation walks the prenecklace tree with the remaining letter counts
/// as a pruning filter, so only words of the requested content are touched.
pub fn lyndon_words_fixed_content(zeros: usize, ones: usize) -> impl Iterator<Item = BinaryWord> {
    let len = zeros + ones;
    let mut out = Vec::new();
    if len > 0 {
        let mut word = vec![0u8; len + 1];
        let mut remaining = [zeros, ones];
        gen_lyndon(1, 1, len, &mut word, &mut remaining, &mut out);
    }
    out.into_iter()
}

/// Prenecklace extension step: `word[1..t]` is filled, `p` is the length of
/// its longest Lyndon prefix period; a word is emitted iff it is Lyndon
/// (`p == len`) when complete.
fn gen_lyndon(
    t: usize,
    p: usize,
    len: usize,
    word: &mut Vec<u8>,
    remaining: &mut [usize; 2],
    out: &mut Vec<BinaryWord>,
) {
    if t > len {
        if p == len {
            out.push(BinaryWord {
                letters: word[1..=len].to_vec(),
            });
        }
        return;
    }
    for c in word[t - p]..=1 {
        if remaining[c as usize] == 0 {
            continue;
        }
        remaining[c as usize] -= 1;
        word[t] = c;
        let next_p = if c == word[t - p] { p } else { t };
        gen_lyndon(t + 1, next_p, len, word, remaining, out);
        remaining[c as usize] += 1;
    }
}
