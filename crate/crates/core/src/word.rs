//! Fixed-length words over {0,1} and {0,1,2,3}, packed into a single machine
//! word.
//!
//! Coordinates are 1-based in all documentation and messages, matching the
//! usual x₁x₂…xₙ notation; bit 0 of the backing `u64` is coordinate 1. The
//! canonical order everywhere (sorting, witnesses, serialized output) is
//! lexicographic on the coordinate string with coordinate 1 most significant,
//! which is *not* the numeric order of the backing integer.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A binary word of length 1..=63 over {0,1}.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BinaryWord {
    length: u8,
    bits: u64,
}

/// Maximum supported binary word length.
///
/// Everything in scope lives in length ≤ 31 (length 29 inputs plus two
/// appended coordinates), so a single `u64` per word keeps every distance
/// computation one XOR and one popcount. The cap is asserted at construction.
pub const MAX_BINARY_LENGTH: u32 = 63;

impl BinaryWord {
    pub fn new(length: u32, bits: u64) -> Result<Self> {
        if length == 0 || length > MAX_BINARY_LENGTH {
            return Err(Error::usage(format!(
                "binary word length must be in 1..={MAX_BINARY_LENGTH}, got {length}"
            )));
        }
        if length < 64 && bits >> length != 0 {
            return Err(Error::usage(format!(
                "bits set beyond word length {length}"
            )));
        }
        Ok(BinaryWord {
            length: length as u8,
            bits,
        })
    }

    /// The all-zero word 0̄ of the given length.
    pub fn zero(length: u32) -> Self {
        Self::new(length, 0).expect("valid length")
    }

    /// The all-one word 1̄ of the given length.
    pub fn all_ones(length: u32) -> Self {
        let bits = if length >= 64 {
            !0
        } else {
            (1u64 << length) - 1
        };
        Self::new(length, bits).expect("valid length")
    }

    pub fn length(&self) -> u32 {
        self.length as u32
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Hamming weight (number of ones).
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Value of coordinate `coord` (1-based).
    pub fn bit(&self, coord: u32) -> bool {
        assert!(
            coord >= 1 && coord <= self.length(),
            "coordinate {coord} out of range 1..={}",
            self.length()
        );
        (self.bits >> (coord - 1)) & 1 == 1
    }

    /// Copy with coordinate `coord` flipped.
    pub fn flip(&self, coord: u32) -> Self {
        assert!(coord >= 1 && coord <= self.length());
        BinaryWord {
            length: self.length,
            bits: self.bits ^ (1u64 << (coord - 1)),
        }
    }

    /// The antipode x̄ + 1̄.
    pub fn complement(&self) -> Self {
        BinaryWord {
            length: self.length,
            bits: self.bits ^ Self::all_ones(self.length()).bits,
        }
    }

    /// Coordinatewise sum modulo 2. Adding words of different lengths is a
    /// usage error and panics.
    pub fn xor(&self, other: &Self) -> Self {
        assert_eq!(
            self.length, other.length,
            "cannot add words of lengths {} and {}",
            self.length, other.length
        );
        BinaryWord {
            length: self.length,
            bits: self.bits ^ other.bits,
        }
    }

    /// Parity of the word: sum of all coordinates mod 2.
    pub fn parity(&self) -> bool {
        self.weight() % 2 == 1
    }

    /// Concatenation `self ∥ other` (self occupies the leading coordinates).
    pub fn concat(&self, other: &Self) -> Result<Self> {
        let length = self.length() + other.length();
        Self::new(length, self.bits | (other.bits << self.length()))
    }

    /// Append one coordinate at the end.
    pub fn append(&self, value: bool) -> Result<Self> {
        Self::new(
            self.length() + 1,
            self.bits | ((value as u64) << self.length()),
        )
    }

    /// Append two coordinates `(a, b)` at the end, in order: the new
    /// coordinate n+1 takes `a` and n+2 takes `b`.
    pub fn append2(&self, a: bool, b: bool) -> Result<Self> {
        self.append(a)?.append(b)
    }

    /// The word restricted to its first `len` coordinates.
    pub fn prefix(&self, len: u32) -> Result<Self> {
        if len == 0 || len > self.length() {
            return Err(Error::usage(format!(
                "prefix length {len} out of range for word of length {}",
                self.length()
            )));
        }
        Self::new(len, self.bits & ((1u64 << len) - 1))
    }

    /// Apply a coordinate permutation: coordinate `j` of the result equals
    /// coordinate `perm[j-1]` of `self`. `perm` must be a bijection on
    /// 1..=length.
    pub fn permuted(&self, perm: &[u32]) -> Result<Self> {
        let n = self.length();
        if perm.len() != n as usize {
            return Err(Error::usage(format!(
                "permutation has {} entries, word has length {n}",
                perm.len()
            )));
        }
        let mut seen = 0u64;
        let mut bits = 0u64;
        for (j, &src) in perm.iter().enumerate() {
            if src < 1 || src > n || seen >> (src - 1) & 1 == 1 {
                return Err(Error::usage(format!(
                    "permutation is not a bijection on 1..={n}"
                )));
            }
            seen |= 1 << (src - 1);
            if self.bit(src) {
                bits |= 1 << j;
            }
        }
        Self::new(n, bits)
    }

    /// Key realizing lexicographic order (coordinate 1 most significant) as
    /// integer order, for words of equal length.
    pub fn lex_key(&self) -> u64 {
        self.bits.reverse_bits()
    }
}

impl Ord for BinaryWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.length, self.lex_key()).cmp(&(other.length, other.lex_key()))
    }
}

impl PartialOrd for BinaryWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for coord in 1..=self.length() {
            f.write_str(if self.bit(coord) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({self})")
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = 0u64;
        let mut length = 0u32;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1u64 << i,
                _ => {
                    return Err(Error::usage(format!(
                        "invalid character {c:?} in binary word"
                    )))
                }
            }
            length += 1;
            if length > MAX_BINARY_LENGTH {
                return Err(Error::usage(format!(
                    "binary word longer than {MAX_BINARY_LENGTH}"
                )));
            }
        }
        BinaryWord::new(length, bits)
    }
}

/// Hamming distance between two words of equal length. Panics on a length
/// mismatch (usage error).
pub fn hamming_distance(x: &BinaryWord, y: &BinaryWord) -> u32 {
    assert_eq!(
        x.length(),
        y.length(),
        "hamming distance undefined for lengths {} and {}",
        x.length(),
        y.length()
    );
    (x.bits() ^ y.bits()).count_ones()
}

/// All 2ⁿ words of length `n` in lexicographic order.
pub fn lex_words(n: u32) -> impl Iterator<Item = BinaryWord> {
    assert!((1..=MAX_BINARY_LENGTH).contains(&n));
    (0u64..(1u64 << n)).map(move |r| BinaryWord {
        length: n as u8,
        bits: r.reverse_bits() >> (64 - n),
    })
}

/// A quaternary word of length 1..=31 over {0,1,2,3}, two bits per digit.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuaternaryWord {
    length: u8,
    digits: u64,
}

/// Maximum supported quaternary word length.
pub const MAX_QUATERNARY_LENGTH: u32 = 31;

impl QuaternaryWord {
    pub fn new(length: u32, digits: u64) -> Result<Self> {
        if length == 0 || length > MAX_QUATERNARY_LENGTH {
            return Err(Error::usage(format!(
                "quaternary word length must be in 1..={MAX_QUATERNARY_LENGTH}, got {length}"
            )));
        }
        if digits >> (2 * length) != 0 {
            return Err(Error::usage(format!(
                "digits set beyond word length {length}"
            )));
        }
        Ok(QuaternaryWord {
            length: length as u8,
            digits,
        })
    }

    pub fn zero(length: u32) -> Self {
        Self::new(length, 0).expect("valid length")
    }

    pub fn from_digits(digits: &[u8]) -> Result<Self> {
        let mut packed = 0u64;
        for (i, &d) in digits.iter().enumerate() {
            if d > 3 {
                return Err(Error::usage(format!("digit {d} not in 0..=3")));
            }
            packed |= (d as u64) << (2 * i);
        }
        Self::new(digits.len() as u32, packed)
    }

    pub fn length(&self) -> u32 {
        self.length as u32
    }

    /// Digit at 1-based position `pos`.
    pub fn digit(&self, pos: u32) -> u8 {
        assert!(pos >= 1 && pos <= self.length());
        ((self.digits >> (2 * (pos - 1))) & 3) as u8
    }

    /// Copy with the digit at `pos` replaced by `value`.
    pub fn with_digit(&self, pos: u32, value: u8) -> Self {
        assert!(pos >= 1 && pos <= self.length());
        assert!(value <= 3);
        let shift = 2 * (pos - 1);
        QuaternaryWord {
            length: self.length,
            digits: (self.digits & !(3u64 << shift)) | ((value as u64) << shift),
        }
    }

    /// Append one digit at the end.
    pub fn append(&self, value: u8) -> Result<Self> {
        assert!(value <= 3);
        Self::new(
            self.length() + 1,
            self.digits | ((value as u64) << (2 * self.length())),
        )
    }

    /// The word restricted to its first `len` positions.
    pub fn prefix(&self, len: u32) -> Result<Self> {
        if len == 0 || len > self.length() {
            return Err(Error::usage("prefix length out of range".to_string()));
        }
        Self::new(len, self.digits & ((1u64 << (2 * len)) - 1))
    }

    /// Apply a position permutation: position `j` of the result reads
    /// position `perm[j-1]` of `self`.
    pub fn permuted(&self, perm: &[u32]) -> Result<Self> {
        let m = self.length();
        if perm.len() != m as usize {
            return Err(Error::usage(format!(
                "permutation has {} entries, word has length {m}",
                perm.len()
            )));
        }
        let mut seen = 0u64;
        let mut out = Self::zero(m);
        for (j, &src) in perm.iter().enumerate() {
            if src < 1 || src > m || seen >> (src - 1) & 1 == 1 {
                return Err(Error::usage(format!(
                    "permutation is not a bijection on 1..={m}"
                )));
            }
            seen |= 1 << (src - 1);
            out = out.with_digit(j as u32 + 1, self.digit(src));
        }
        Ok(out)
    }

    /// Number of positions where the two words differ. Panics on a length
    /// mismatch.
    pub fn distance(&self, other: &Self) -> u32 {
        assert_eq!(self.length, other.length);
        let diff = self.digits ^ other.digits;
        // collapse each 2-bit digit to one indicator bit
        ((diff | (diff >> 1)) & 0x5555_5555_5555_5555).count_ones()
    }

    /// Key realizing lexicographic order (position 1 most significant).
    pub fn lex_key(&self) -> u64 {
        let mut key = 0u64;
        for pos in 1..=self.length() {
            key = (key << 2) | self.digit(pos) as u64;
        }
        key
    }
}

impl Ord for QuaternaryWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.length, self.lex_key()).cmp(&(other.length, other.lex_key()))
    }
}

impl PartialOrd for QuaternaryWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QuaternaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for pos in 1..=self.length() {
            write!(f, "{}", self.digit(pos))?;
        }
        Ok(())
    }
}

impl fmt::Debug for QuaternaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuaternaryWord({self})")
    }
}

impl FromStr for QuaternaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut digits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0'..='3' => digits.push(c as u8 - b'0'),
                _ => {
                    return Err(Error::usage(format!(
                        "invalid character {c:?} in quaternary word"
                    )))
                }
            }
        }
        if digits.len() > MAX_QUATERNARY_LENGTH as usize {
            return Err(Error::usage(format!(
                "quaternary word longer than {MAX_QUATERNARY_LENGTH}"
            )));
        }
        Self::from_digits(&digits)
    }
}

/// All 4^m words of length `m` in lexicographic order.
pub fn lex_quaternary_words(m: u32) -> impl Iterator<Item = QuaternaryWord> {
    assert!((1..=MAX_QUATERNARY_LENGTH).contains(&m));
    (0u64..(1u64 << (2 * m))).map(move |r| {
        let mut digits = 0u64;
        for pos in 0..m {
            let d = (r >> (2 * (m - 1 - pos))) & 3;
            digits |= d << (2 * pos);
        }
        QuaternaryWord {
            length: m as u8,
            digits,
        }
    })
}
