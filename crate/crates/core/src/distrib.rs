//! Distance-distribution machinery: per-word weight distributions Aʲ_l(x̄)
//! and exact-rational mean distributions Āⁱʲ_l.
//!
//! All means are kept as exact rationals; the invariance and relation checks
//! elsewhere in the crate depend on exact equality, so floating point never
//! appears here.

pub use num_rational::Rational64;

use crate::code::{BinaryCode, MultisetCode};
use crate::error::{Error, Result};
use crate::word::{hamming_distance, BinaryWord};

/// Binomial coefficient C(n, k) for n ≤ 63 (fits in i64 for this range).
pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
    }
    acc as u64
}

/// Anything that behaves as a collection of equal-length binary words with
/// multiplicities.
pub trait WordCollection {
    fn length(&self) -> u32;
    fn total(&self) -> u64;
    fn for_each(&self, f: impl FnMut(&BinaryWord, u32));
}

impl WordCollection for BinaryCode {
    fn length(&self) -> u32 {
        BinaryCode::length(self)
    }

    fn total(&self) -> u64 {
        self.len() as u64
    }

    fn for_each(&self, mut f: impl FnMut(&BinaryWord, u32)) {
        for x in self.words() {
            f(x, 1);
        }
    }
}

impl WordCollection for MultisetCode {
    fn length(&self) -> u32 {
        MultisetCode::length(self)
    }

    fn total(&self) -> u64 {
        self.total_multiplicity()
    }

    fn for_each(&self, mut f: impl FnMut(&BinaryWord, u32)) {
        for &(x, m) in self.entries() {
            f(&x, m);
        }
    }
}

/// The weight distribution of `code` with respect to `x`: entry l counts the
/// codewords at distance l from x̄, with multiplicity. Panics on a length
/// mismatch (usage error).
pub fn weight_distribution(x: &BinaryWord, code: &impl WordCollection) -> Vec<u64> {
    assert_eq!(
        x.length(),
        code.length(),
        "weight distribution needs matching lengths"
    );
    let mut dist = vec![0u64; x.length() as usize + 1];
    code.for_each(|y, mult| {
        dist[hamming_distance(x, y) as usize] += mult as u64;
    });
    dist
}

/// Mean distance distribution of `cj` as seen from `ci`: per-word integer
/// tables for every x̄ ∈ Cᵢ and their exact rational mean.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributionTable {
    n: u32,
    per_word: Vec<(BinaryWord, Vec<u64>)>,
    mean: Vec<Rational64>,
}

impl DistributionTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Mean values Ā_l for l = 0..=n.
    pub fn mean(&self) -> &[Rational64] {
        &self.mean
    }

    pub fn mean_at(&self, l: u32) -> Rational64 {
        self.mean[l as usize]
    }

    /// Per-word tables in lexicographic word order.
    pub fn per_word(&self) -> &[(BinaryWord, Vec<u64>)] {
        &self.per_word
    }

    pub fn table_for(&self, x: &BinaryWord) -> Option<&[u64]> {
        self.per_word
            .binary_search_by_key(x, |(w, _)| *w)
            .ok()
            .map(|i| self.per_word[i].1.as_slice())
    }
}

/// Compute the table of Āⁱʲ values for the pair (Cᵢ, Cⱼ) by direct pairwise
/// distance counting. Cᵢ must be nonempty and lengths must match.
pub fn mean_distribution(ci: &BinaryCode, cj: &BinaryCode) -> Result<DistributionTable> {
    if ci.length() != cj.length() {
        return Err(Error::LengthMismatch {
            left: ci.length(),
            right: cj.length(),
        });
    }
    if ci.is_empty() {
        return Err(Error::usage("mean distribution over an empty code"));
    }
    let n = ci.length();
    let mut per_word = Vec::with_capacity(ci.len());
    let mut sums = vec![0i64; n as usize + 1];
    for &x in ci.words() {
        let mut row = vec![0u64; n as usize + 1];
        for y in cj.words() {
            row[hamming_distance(&x, y) as usize] += 1;
        }
        for (s, &v) in sums.iter_mut().zip(row.iter()) {
            *s += v as i64;
        }
        per_word.push((x, row));
    }
    let size = ci.len() as i64;
    let mean = sums.into_iter().map(|s| Rational64::new(s, size)).collect();
    Ok(DistributionTable { n, per_word, mean })
}
