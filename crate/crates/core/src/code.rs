//! Code containers: plain sets of binary words, multisets with
//! multiplicities, and quaternary codes.

use crate::error::{Error, Result, Verdict};
use crate::word::{hamming_distance, BinaryWord, QuaternaryWord};

/// A set of equal-length binary words, stored sorted and duplicate-free in
/// lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinaryCode {
    length: u32,
    words: Vec<BinaryWord>,
}

impl BinaryCode {
    /// Build a code from words, sorting and removing duplicates. All words
    /// must have length `length`.
    pub fn from_words(length: u32, words: impl IntoIterator<Item = BinaryWord>) -> Result<Self> {
        let mut words: Vec<BinaryWord> = words.into_iter().collect();
        for x in &words {
            if x.length() != length {
                return Err(Error::LengthMismatch {
                    left: length,
                    right: x.length(),
                });
            }
        }
        words.sort();
        words.dedup();
        Ok(BinaryCode { length, words })
    }

    pub fn empty(length: u32) -> Self {
        BinaryCode {
            length,
            words: Vec::new(),
        }
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[BinaryWord] {
        &self.words
    }

    pub fn iter(&self) -> impl Iterator<Item = &BinaryWord> {
        self.words.iter()
    }

    pub fn contains(&self, x: &BinaryWord) -> bool {
        self.words.binary_search(x).is_ok()
    }

    /// Minimum pairwise distance, or `None` when the code has fewer than two
    /// words (the minimum distance is then undefined).
    pub fn code_distance(&self) -> Option<u32> {
        if self.words.len() < 2 {
            return None;
        }
        let mut best = u32::MAX;
        for (i, x) in self.words.iter().enumerate() {
            for y in &self.words[i + 1..] {
                best = best.min(hamming_distance(x, y));
                if best == 1 {
                    return Some(1);
                }
            }
        }
        Some(best)
    }

    /// Translate every word by `t` (coordinatewise XOR).
    pub fn translate(&self, t: &BinaryWord) -> Result<Self> {
        if t.length() != self.length {
            return Err(Error::LengthMismatch {
                left: self.length,
                right: t.length(),
            });
        }
        Self::from_words(self.length, self.words.iter().map(|x| x.xor(t)))
    }

    /// The set {x̄ + 1̄ : x̄ ∈ C}.
    pub fn antipode(&self) -> Self {
        self.translate(&BinaryWord::all_ones(self.length))
            .expect("same length")
    }

    /// Union of two disjoint codes of equal length; overlapping inputs are a
    /// usage error.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        if self.length != other.length {
            return Err(Error::LengthMismatch {
                left: self.length,
                right: other.length,
            });
        }
        let merged = Self::from_words(
            self.length,
            self.words.iter().chain(other.words.iter()).copied(),
        )?;
        if merged.len() != self.len() + other.len() {
            return Err(Error::usage("codes are not disjoint"));
        }
        Ok(merged)
    }

    /// Append the same two-coordinate suffix to every word.
    pub fn with_suffix2(&self, a: bool, b: bool) -> Result<Self> {
        Self::from_words(
            self.length + 2,
            self.words
                .iter()
                .map(|x| x.append2(a, b))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// Append one coordinate to every word.
    pub fn with_suffix1(&self, a: bool) -> Result<Self> {
        Self::from_words(
            self.length + 1,
            self.words
                .iter()
                .map(|x| x.append(a))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// Extend every word by a parity coordinate. With `even` the extended
    /// words all have even weight; otherwise odd.
    pub fn extend_parity(&self, even: bool) -> Result<Self> {
        Self::from_words(
            self.length + 1,
            self.words
                .iter()
                .map(|x| x.append(x.parity() == even))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// Apply one coordinate permutation to every word.
    pub fn permuted(&self, perm: &[u32]) -> Result<Self> {
        Self::from_words(
            self.length,
            self.words
                .iter()
                .map(|x| x.permuted(perm))
                .collect::<Result<Vec<_>>>()?,
        )
    }
}

impl<'a> IntoIterator for &'a BinaryCode {
    type Item = &'a BinaryWord;
    type IntoIter = std::slice::Iter<'a, BinaryWord>;

    fn into_iter(self) -> Self::IntoIter {
        self.words.iter()
    }
}

/// A multiset of equal-length binary words: sorted distinct words, each with a
/// positive multiplicity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultisetCode {
    length: u32,
    entries: Vec<(BinaryWord, u32)>,
}

impl MultisetCode {
    /// Build from (word, multiplicity) pairs; repeated words accumulate.
    pub fn from_entries(
        length: u32,
        entries: impl IntoIterator<Item = (BinaryWord, u32)>,
    ) -> Result<Self> {
        let mut pairs: Vec<(BinaryWord, u32)> = Vec::new();
        for (x, mult) in entries {
            if x.length() != length {
                return Err(Error::LengthMismatch {
                    left: length,
                    right: x.length(),
                });
            }
            if mult == 0 {
                return Err(Error::usage("multiplicity must be positive"));
            }
            pairs.push((x, mult));
        }
        pairs.sort_by_key(|(x, _)| *x);
        let mut entries: Vec<(BinaryWord, u32)> = Vec::with_capacity(pairs.len());
        for (x, mult) in pairs {
            match entries.last_mut() {
                Some((last, m)) if *last == x => *m += mult,
                _ => entries.push((x, mult)),
            }
        }
        Ok(MultisetCode { length, entries })
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    /// Number of distinct words.
    pub fn distinct_len(&self) -> usize {
        self.entries.len()
    }

    /// Total size counting multiplicities.
    pub fn total_multiplicity(&self) -> u64 {
        self.entries.iter().map(|&(_, m)| m as u64).sum()
    }

    pub fn entries(&self) -> &[(BinaryWord, u32)] {
        &self.entries
    }

    pub fn multiplicity(&self, x: &BinaryWord) -> u32 {
        match self.entries.binary_search_by_key(x, |(w, _)| *w) {
            Ok(i) => self.entries[i].1,
            Err(_) => 0,
        }
    }

    pub fn translate(&self, t: &BinaryWord) -> Result<Self> {
        Self::from_entries(
            self.length,
            self.entries.iter().map(|&(x, m)| (x.xor(t), m)),
        )
    }

    /// Multiset union.
    pub fn union(&self, other: &Self) -> Result<Self> {
        if self.length != other.length {
            return Err(Error::LengthMismatch {
                left: self.length,
                right: other.length,
            });
        }
        Self::from_entries(
            self.length,
            self.entries.iter().chain(other.entries.iter()).copied(),
        )
    }

    /// The distinct words, forgetting multiplicities.
    pub fn support(&self) -> BinaryCode {
        BinaryCode::from_words(self.length, self.entries.iter().map(|&(x, _)| x))
            .expect("lengths validated")
    }

    /// Convert to a plain code; words with multiplicity above one are a usage
    /// error.
    pub fn into_set(self) -> Result<BinaryCode> {
        if let Some((x, m)) = self.entries.iter().find(|&&(_, m)| m > 1) {
            return Err(Error::usage(format!(
                "word {x} has multiplicity {m}, not a plain set"
            )));
        }
        Ok(BinaryCode {
            length: self.length,
            words: self.entries.into_iter().map(|(x, _)| x).collect(),
        })
    }

    /// True iff for every word the multiplicities of x̄ and x̄ + 1̄ coincide;
    /// otherwise the lexicographically smallest violating word.
    pub fn is_antipodal(&self) -> Verdict<BinaryWord> {
        for &(x, m) in &self.entries {
            if self.multiplicity(&x.complement()) != m {
                return Verdict::Fails(x.min(x.complement()));
            }
        }
        Verdict::Holds
    }
}

impl From<&BinaryCode> for MultisetCode {
    fn from(code: &BinaryCode) -> Self {
        MultisetCode {
            length: code.length(),
            entries: code.words().iter().map(|&x| (x, 1)).collect(),
        }
    }
}

/// A set of equal-length quaternary words, sorted and duplicate-free.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuaternaryCode {
    length: u32,
    words: Vec<QuaternaryWord>,
}

impl QuaternaryCode {
    pub fn from_words(
        length: u32,
        words: impl IntoIterator<Item = QuaternaryWord>,
    ) -> Result<Self> {
        let mut words: Vec<QuaternaryWord> = words.into_iter().collect();
        for x in &words {
            if x.length() != length {
                return Err(Error::LengthMismatch {
                    left: length,
                    right: x.length(),
                });
            }
        }
        words.sort();
        words.dedup();
        Ok(QuaternaryCode { length, words })
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[QuaternaryWord] {
        &self.words
    }

    pub fn contains(&self, x: &QuaternaryWord) -> bool {
        self.words.binary_search(x).is_ok()
    }

    pub fn code_distance(&self) -> Option<u32> {
        if self.words.len() < 2 {
            return None;
        }
        let mut best = u32::MAX;
        for (i, x) in self.words.iter().enumerate() {
            for y in &self.words[i + 1..] {
                best = best.min(x.distance(y));
            }
        }
        Some(best)
    }

    /// Complement within the full space of 4^m words.
    pub fn complement(&self) -> Self {
        let words = crate::word::lex_quaternary_words(self.length)
            .filter(|x| !self.contains(x))
            .collect();
        QuaternaryCode {
            length: self.length,
            words,
        }
    }

    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        if self.length != other.length {
            return Err(Error::LengthMismatch {
                left: self.length,
                right: other.length,
            });
        }
        let merged = Self::from_words(
            self.length,
            self.words.iter().chain(other.words.iter()).copied(),
        )?;
        if merged.len() != self.len() + other.len() {
            return Err(Error::usage("codes are not disjoint"));
        }
        Ok(merged)
    }

    /// Append the same digit to every word.
    pub fn with_suffix(&self, digit: u8) -> Result<Self> {
        Self::from_words(
            self.length + 1,
            self.words
                .iter()
                .map(|x| x.append(digit))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// Apply one position permutation to every word.
    pub fn permuted(&self, perm: &[u32]) -> Result<Self> {
        Self::from_words(
            self.length,
            self.words
                .iter()
                .map(|x| x.permuted(perm))
                .collect::<Result<Vec<_>>>()?,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(length: u32, words: &[&str]) -> BinaryCode {
        BinaryCode::from_words(length, words.iter().map(|s| s.parse().unwrap())).unwrap()
    }

    #[test]
    fn code_distance_cases() {
        assert_eq!(code(5, &["00000", "11111"]).code_distance(), Some(5));
        assert_eq!(code(3, &["000"]).code_distance(), None);
        assert_eq!(code(4, &["0000", "0011", "0111"]).code_distance(), Some(1));
    }

    #[test]
    fn words_sorted_lexicographically() {
        let c = code(3, &["110", "001", "100"]);
        let strings: Vec<String> = c.words().iter().map(|x| x.to_string()).collect();
        assert_eq!(strings, ["001", "100", "110"]);
    }

    #[test]
    fn multiset_accumulates_and_counts() {
        let w: BinaryWord = "010".parse().unwrap();
        let v: BinaryWord = "111".parse().unwrap();
        let m = MultisetCode::from_entries(3, [(w, 1), (v, 2), (w, 1)]).unwrap();
        assert_eq!(m.distinct_len(), 2);
        assert_eq!(m.total_multiplicity(), 4);
        assert_eq!(m.multiplicity(&w), 2);
        assert_eq!(m.multiplicity(&"000".parse().unwrap()), 0);
    }

    #[test]
    fn antipodal_check_with_counterexample() {
        let zero: BinaryWord = "000".parse().unwrap();
        let m = MultisetCode::from_entries(3, [(zero, 1)]).unwrap();
        match m.is_antipodal() {
            Verdict::Fails(x) => assert_eq!(x, zero),
            Verdict::Holds => panic!("{{000}} is not antipodal"),
        }
        let pair = MultisetCode::from_entries(3, [(zero, 2), (zero.complement(), 2)]).unwrap();
        assert!(pair.is_antipodal().holds());
    }

    #[test]
    fn quaternary_complement_partitions_space() {
        let m = QuaternaryCode::from_words(
            2,
            ["00", "11", "22", "33"].iter().map(|s| s.parse().unwrap()),
        )
        .unwrap();
        let c = m.complement();
        assert_eq!(c.len(), 12);
        assert!(m.disjoint_union(&c).unwrap().len() == 16);
    }
}
