//! Binary codewords of ternary words.
//!
//! Bit `i` of the codeword is 0 when the letter two steps ahead equals the
//! letter at `i`, and 1 otherwise. A word without squares of letters is
//! recovered from its codeword and its first two letters; the codeword alone
//! determines the word up to a bijection of the alphabet.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::words::{least_rotation, strip_parens, CircularWord, Letter, LinearWord, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodewordError {
    #[error("word of length {0} is too short to encode (need at least 3)")]
    TooShort(usize),
    #[error("letter {letter} is repeated at position {position}")]
    LetterSquare { letter: Letter, position: usize },
    #[error("seed letters must differ")]
    EqualSeed,
    #[error("invalid bit {0:?}, expected 0 or 1")]
    InvalidBit(char),
    #[error("circular codewords must have length at least 3, got {0}")]
    CircularTooShort(usize),
    #[error(transparent)]
    Word(#[from] WordError),
}

fn parse_bits(s: &str) -> Result<Vec<u8>, CodewordError> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            other => Err(CodewordError::InvalidBit(other)),
        })
        .collect()
}

fn write_bits(f: &mut fmt::Formatter<'_>, bits: &[u8]) -> fmt::Result {
    bits.iter().try_for_each(|b| write!(f, "{b}"))
}

/// Occurrence check for `pattern` in `bits` read cyclically; only factors
/// no longer than `bits` count.
pub(crate) fn occurs_cyclically(bits: &[u8], pattern: &[u8]) -> bool {
    let n = bits.len();
    pattern.len() <= n && (0..n).any(|i| pattern.iter().enumerate().all(|(j, &b)| bits[(i + j) % n] == b))
}

/// Codeword of a linear word. Its length is two less than the word's.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearCodeword(Vec<u8>);

impl LinearCodeword {
    pub fn new(bits: Vec<u8>) -> Result<Self, CodewordError> {
        if let Some(&b) = bits.iter().find(|&&b| b > 1) {
            return Err(CodewordError::InvalidBit(char::from(b'0' + b.min(9))));
        }
        Ok(LinearCodeword(bits))
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromStr for LinearCodeword {
    type Err = CodewordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_bits(s).map(LinearCodeword)
    }
}

impl fmt::Display for LinearCodeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bits(f, &self.0)
    }
}

/// Circular codeword, stored as its least rotation (so it starts with 0
/// whenever it contains one). Length is at least 3.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CircularCodeword(Vec<u8>);

impl CircularCodeword {
    pub fn new(mut bits: Vec<u8>) -> Result<Self, CodewordError> {
        if bits.len() < 3 {
            return Err(CodewordError::CircularTooShort(bits.len()));
        }
        if let Some(&b) = bits.iter().find(|&&b| b > 1) {
            return Err(CodewordError::InvalidBit(char::from(b'0' + b.min(9))));
        }
        let start = least_rotation(&bits);
        bits.rotate_left(start);
        Ok(CircularCodeword(bits))
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn zero_count(&self) -> usize {
        self.0.iter().filter(|&&b| b == 0).count()
    }

    /// Decodes with seed `(a, b)`. `None` when the bits are not the codeword
    /// of any circular word: the rule fails across the wrap, or two
    /// cyclically adjacent letters coincide.
    pub fn decode(&self) -> Option<CircularWord> {
        let l = self.0.len();
        let mut w = vec![Letter::A, Letter::B];
        for i in 0..l - 2 {
            let next = match self.0[i] {
                0 => w[i],
                _ => w[i].third(w[i + 1]),
            };
            w.push(next);
        }
        if (0..l).any(|i| w[i] == w[(i + 1) % l]) {
            return None;
        }
        if raw_circular_bits(&w) != self.0 {
            return None;
        }
        Some(CircularWord::new(w).expect("nonempty"))
    }

    /// True iff the codeword decodes to a square-free circular word.
    pub fn is_square_free(&self) -> bool {
        self.decode().is_some_and(|w| w.is_square_free())
    }

    pub fn forbidden_factor(&self) -> Option<ForbiddenFactor> {
        ForbiddenFactor::CATALOGUE
            .into_iter()
            .find(|f| occurs_cyclically(&self.0, f.bits()))
    }
}

impl FromStr for CircularCodeword {
    type Err = CodewordError;

    /// Accepts `(0101)` as well as a bare `0101`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = strip_parens(s)?.unwrap_or(s);
        CircularCodeword::new(parse_bits(inner)?)
    }
}

impl fmt::Display for CircularCodeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        write_bits(f, &self.0)?;
        write!(f, ")")
    }
}

// Bits of a cyclic letter sequence at its own alignment, no normalization.
fn raw_circular_bits(w: &[Letter]) -> Vec<u8> {
    let l = w.len();
    (0..l).map(|i| u8::from(w[(i + 2) % l] != w[i])).collect()
}

pub fn encode_linear(w: &LinearWord) -> Result<LinearCodeword, CodewordError> {
    let s = w.letters();
    if s.len() < 3 {
        return Err(CodewordError::TooShort(s.len()));
    }
    if let Some(i) = (0..s.len() - 1).find(|&i| s[i] == s[i + 1]) {
        return Err(CodewordError::LetterSquare {
            letter: s[i],
            position: i + 1,
        });
    }
    Ok(LinearCodeword(s.windows(3).map(|t| u8::from(t[2] != t[0])).collect()))
}

pub fn decode_linear(c: &LinearCodeword, seed: (Letter, Letter)) -> Result<LinearWord, CodewordError> {
    if seed.0 == seed.1 {
        return Err(CodewordError::EqualSeed);
    }
    let mut w = Vec::with_capacity(c.len() + 2);
    w.extend([seed.0, seed.1]);
    for (i, &bit) in c.bits().iter().enumerate() {
        let next = match bit {
            0 => w[i],
            _ => w[i].third(w[i + 1]),
        };
        w.push(next);
    }
    Ok(LinearWord::new(w))
}

pub fn encode_circular(cw: &CircularWord) -> Result<CircularCodeword, CodewordError> {
    let s = cw.letters();
    let l = s.len();
    if l < 3 {
        return Err(CodewordError::TooShort(l));
    }
    if let Some(i) = (0..l).find(|&i| s[i] == s[(i + 1) % l]) {
        return Err(CodewordError::LetterSquare {
            letter: s[i],
            position: i + 1,
        });
    }
    CircularCodeword::new(raw_circular_bits(s))
}

pub fn decode_circular(c: &CircularCodeword) -> Option<CircularWord> {
    c.decode()
}

pub fn is_square_free_codeword(c: &CircularCodeword) -> bool {
    c.is_square_free()
}

pub fn circular_factor_scan(c: &CircularCodeword) -> Option<ForbiddenFactor> {
    c.forbidden_factor()
}

/// Codeword factors that betray a short minimal square in a circular word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ForbiddenFactor {
    DoubleZero,
    FourOnes,
    AlternatingFive,
    Period6Left,
    Period6Right,
    Period8,
}

impl ForbiddenFactor {
    pub const CATALOGUE: [ForbiddenFactor; 6] = [
        ForbiddenFactor::DoubleZero,
        ForbiddenFactor::FourOnes,
        ForbiddenFactor::AlternatingFive,
        ForbiddenFactor::Period6Left,
        ForbiddenFactor::Period6Right,
        ForbiddenFactor::Period8,
    ];

    pub fn pattern(self) -> &'static str {
        match self {
            ForbiddenFactor::DoubleZero => "00",
            ForbiddenFactor::FourOnes => "1111",
            ForbiddenFactor::AlternatingFive => "01010",
            ForbiddenFactor::Period6Left => "011011011",
            ForbiddenFactor::Period6Right => "110110110",
            ForbiddenFactor::Period8 => "11101110111",
        }
    }

    pub fn bits(self) -> &'static [u8] {
        match self {
            ForbiddenFactor::DoubleZero => &[0, 0],
            ForbiddenFactor::FourOnes => &[1, 1, 1, 1],
            ForbiddenFactor::AlternatingFive => &[0, 1, 0, 1, 0],
            ForbiddenFactor::Period6Left => &[0, 1, 1, 0, 1, 1, 0, 1, 1],
            ForbiddenFactor::Period6Right => &[1, 1, 0, 1, 1, 0, 1, 1, 0],
            ForbiddenFactor::Period8 => &[1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1],
        }
    }

    /// Period of the minimal square this factor stands for.
    pub fn source_period(self) -> usize {
        match self {
            ForbiddenFactor::DoubleZero => 2,
            ForbiddenFactor::FourOnes => 3,
            ForbiddenFactor::AlternatingFive => 4,
            ForbiddenFactor::Period6Left | ForbiddenFactor::Period6Right => 6,
            ForbiddenFactor::Period8 => 8,
        }
    }
}

impl fmt::Display for ForbiddenFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.pattern())
    }
}
