//! Steiner triple systems and twofold triple systems.
//!
//! The weight-3 codewords of a 1-perfect code containing 0̄ form an STS:
//! every pair of points lies in exactly one block. A twofold cover containing
//! 0̄ twice yields a twofold STS, covering every pair exactly twice. Splitting
//! a twofold STS into two STSs is a 2-coloring problem: blocks sharing a pair
//! (Hamming distance 2 between their characteristic vectors) must separate,
//! and the two copies of a doubled block must separate.

use std::fmt;

use crate::code::{BinaryCode, MultisetCode};
use crate::error::{Error, Result, Verdict};
use crate::io::parse_code;
use crate::splitgraph::{bipartition, build_graph, shortest_odd_cycle, OddCycle, SplitResult};
use crate::word::BinaryWord;

/// A collection of 3-element blocks over `point_count` points, stored as
/// weight-3 characteristic vectors with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleSystem {
    point_count: u32,
    blocks: MultisetCode,
    fold: u32,
}

impl TripleSystem {
    pub fn new(point_count: u32, blocks: MultisetCode, fold: u32) -> Result<Self> {
        if !(1..=2).contains(&fold) {
            return Err(Error::usage("fold must be 1 or 2"));
        }
        if blocks.length() != point_count {
            return Err(Error::LengthMismatch {
                left: point_count,
                right: blocks.length(),
            });
        }
        if let Some((x, _)) = blocks.entries().iter().find(|(x, _)| x.weight() != 3) {
            return Err(Error::usage(format!(
                "block {x} has weight {}, expected 3",
                x.weight()
            )));
        }
        Ok(TripleSystem {
            point_count,
            blocks,
            fold,
        })
    }

    pub fn point_count(&self) -> u32 {
        self.point_count
    }

    pub fn fold(&self) -> u32 {
        self.fold
    }

    pub fn blocks(&self) -> &MultisetCode {
        &self.blocks
    }

    /// Total number of blocks counting multiplicity.
    pub fn block_count(&self) -> u64 {
        self.blocks.total_multiplicity()
    }
}

/// A point pair covered the wrong number of times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairWitness {
    /// 1-based points, a < b.
    pub a: u32,
    pub b: u32,
    pub covered: u64,
    pub expected: u32,
}

impl fmt::Display for PairWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pair {{{}, {}}} covered {} times, expected {}",
            self.a, self.b, self.covered, self.expected
        )
    }
}

/// Collect the weight-3 codewords of a 1-perfect code containing 0̄.
pub fn extract_sts(code: &BinaryCode) -> Result<TripleSystem> {
    if !code.contains(&BinaryWord::zero(code.length())) {
        return Err(Error::precondition(
            "the code does not contain the all-zero word",
        ));
    }
    let blocks = MultisetCode::from_entries(
        code.length(),
        code.words()
            .iter()
            .filter(|x| x.weight() == 3)
            .map(|&x| (x, 1)),
    )?;
    TripleSystem::new(code.length(), blocks, 1)
}

/// Collect the weight-3 codewords (with multiplicities) of a twofold cover
/// containing 0̄ with multiplicity 2.
pub fn extract_sts_twofold(code: &MultisetCode) -> Result<TripleSystem> {
    if code.multiplicity(&BinaryWord::zero(code.length())) != 2 {
        return Err(Error::precondition(
            "the multiset does not contain the all-zero word twice",
        ));
    }
    let blocks = MultisetCode::from_entries(
        code.length(),
        code.entries()
            .iter()
            .filter(|(x, _)| x.weight() == 3)
            .copied(),
    )?;
    TripleSystem::new(code.length(), blocks, 2)
}

/// Check the covering property: every point pair lies in exactly `fold`
/// blocks, counted with multiplicity. The witness is the first violating
/// pair in lexicographic order.
pub fn verify_triple_system(system: &TripleSystem) -> Verdict<PairWitness> {
    let v = system.point_count() as usize;
    let mut counts = vec![0u64; v * v];
    for &(block, mult) in system.blocks().entries() {
        let points: Vec<u32> = (1..=system.point_count())
            .filter(|&p| block.bit(p))
            .collect();
        for i in 0..3 {
            for j in (i + 1)..3 {
                counts[(points[i] as usize - 1) * v + (points[j] as usize - 1)] += mult as u64;
            }
        }
    }
    for a in 0..v {
        for b in (a + 1)..v {
            let covered = counts[a * v + b];
            if covered != system.fold() as u64 {
                return Verdict::Fails(PairWitness {
                    a: a as u32 + 1,
                    b: b as u32 + 1,
                    covered,
                    expected: system.fold(),
                });
            }
        }
    }
    debug_assert_eq!(
        system.block_count(),
        system.fold() as u64 * (v as u64 * (v as u64 - 1)) / 6
    );
    Verdict::Holds
}

/// Attempt to split a twofold triple system into two triple systems. Blocks
/// conflict when they share a pair of points (distance 2) or are the two
/// copies of the same block.
pub fn split_triple_system(system: &TripleSystem) -> Result<SplitResult> {
    if system.fold() != 2 {
        return Err(Error::usage("only twofold systems can be split"));
    }
    let graph = build_graph(system.blocks(), &[2])?;
    Ok(bipartition(&graph))
}

/// The embedded 15-point example: a twofold STS satisfying the structural
/// properties of covers with doubled ends, yet unsplittable.
pub const EMBEDDED_STS15: &str = include_str!("../data/sts15_twofold.code");

/// Parse the embedded 15-point twofold STS.
pub fn embedded_sts15() -> TripleSystem {
    let blocks = parse_code(EMBEDDED_STS15)
        .expect("embedded data parses")
        .into_multiset();
    TripleSystem::new(15, blocks, 2).expect("embedded data is a block list")
}

/// Findings on the embedded example.
#[derive(Clone, Debug)]
pub struct EmbeddedExampleReport {
    pub distinct_words: usize,
    pub total_multiplicity: u64,
    /// Pair coverage of the twofold system.
    pub twofold_sts: Verdict<PairWitness>,
    /// Every 00/11-suffix block doubled, every 01/10-suffix block simple.
    pub property_a: Verdict<BinaryWord>,
    /// The 01- and 10-suffix blocks come in pairs with equal prefixes.
    pub property_b: Verdict<BinaryWord>,
    /// Outcome of the splitting attempt (an odd cycle is expected).
    pub split: SplitResult,
    /// Shortest odd cycle of the conflict graph.
    pub shortest_cycle: Option<OddCycle>,
}

impl EmbeddedExampleReport {
    /// True when the example verifies exactly as documented: a genuine
    /// twofold STS with both structural properties that fails to split.
    pub fn all_expected(&self) -> bool {
        self.twofold_sts.holds()
            && self.property_a.holds()
            && self.property_b.holds()
            && matches!(self.split, SplitResult::OddCycle(_))
    }
}

impl fmt::Display for EmbeddedExampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "blocks: {} distinct, {} with multiplicity",
            self.distinct_words, self.total_multiplicity
        )?;
        let line = |v: bool| if v { "OK" } else { "FAIL" };
        writeln!(f, "TWOFOLD_STS: {}", line(self.twofold_sts.holds()))?;
        writeln!(f, "PROPERTY a: {}", line(self.property_a.holds()))?;
        writeln!(f, "PROPERTY b: {}", line(self.property_b.holds()))?;
        match &self.split {
            SplitResult::Split(_) => writeln!(f, "SPLITTABLE: YES")?,
            SplitResult::OddCycle(_) => writeln!(f, "SPLITTABLE: NO")?,
        }
        if let Some(cycle) = &self.shortest_cycle {
            write!(f, "{cycle}")?;
        }
        Ok(())
    }
}

fn check_property_a(blocks: &MultisetCode) -> Verdict<BinaryWord> {
    let n = blocks.length();
    for &(x, m) in blocks.entries() {
        let expected = if x.bit(n - 1) == x.bit(n) { 2 } else { 1 };
        if m != expected {
            return Verdict::Fails(x);
        }
    }
    Verdict::Holds
}

fn check_property_b(blocks: &MultisetCode) -> Verdict<BinaryWord> {
    let n = blocks.length();
    for &(x, _) in blocks.entries() {
        if x.bit(n - 1) != x.bit(n) {
            let partner = x.flip(n - 1).flip(n);
            if blocks.multiplicity(&partner) != blocks.multiplicity(&x) {
                return Verdict::Fails(x);
            }
        }
    }
    Verdict::Holds
}

/// Verify everything documented about the embedded 15-point example.
pub fn check_embedded_example() -> Result<EmbeddedExampleReport> {
    let system = embedded_sts15();
    let blocks = system.blocks();
    let graph = build_graph(blocks, &[2])?;
    Ok(EmbeddedExampleReport {
        distinct_words: blocks.distinct_len(),
        total_multiplicity: blocks.total_multiplicity(),
        twofold_sts: verify_triple_system(&system),
        property_a: check_property_a(blocks),
        property_b: check_property_b(blocks),
        split: bipartition(&graph),
        shortest_cycle: shortest_odd_cycle(&graph),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::hamming;
    use crate::perfect::{build_b, split_twofold, TwofoldSplit, TwofoldVariant};
    use crate::word::lex_words;

    #[test]
    fn hamming_codes_carry_triple_systems() {
        let sts7 = extract_sts(&hamming(3).unwrap()).unwrap();
        assert_eq!(sts7.block_count(), 7);
        assert!(verify_triple_system(&sts7).holds());

        let sts15 = extract_sts(&hamming(4).unwrap()).unwrap();
        assert_eq!(sts15.block_count(), 35);
        assert!(verify_triple_system(&sts15).holds());
    }

    #[test]
    fn single_block_is_a_valid_sts3() {
        let block: BinaryWord = "111".parse().unwrap();
        let system =
            TripleSystem::new(3, MultisetCode::from_entries(3, [(block, 1)]).unwrap(), 1).unwrap();
        assert!(verify_triple_system(&system).holds());
    }

    #[test]
    fn missing_block_yields_pair_witness() {
        let sts = extract_sts(&hamming(3).unwrap()).unwrap();
        let first = sts.blocks().entries()[0].0;
        let reduced = MultisetCode::from_entries(
            7,
            sts.blocks()
                .entries()
                .iter()
                .filter(|&&(x, _)| x != first)
                .copied(),
        )
        .unwrap();
        let system = TripleSystem::new(7, reduced, 1).unwrap();
        match verify_triple_system(&system) {
            Verdict::Fails(w) => {
                assert_eq!(w.covered, 0);
                assert!(first.bit(w.a) && first.bit(w.b));
            }
            Verdict::Holds => panic!("must fail after removing a block"),
        }
    }

    #[test]
    fn twofold_extraction_from_doubled_cover() {
        let c1 = crate::perfect::double_shorten(&hamming(3).unwrap()).unwrap();
        let b = build_b(&c1).unwrap();
        // translate so that 0̄ gets multiplicity 2
        let anchor = b
            .entries()
            .iter()
            .find(|&&(_, m)| m == 2)
            .map(|&(x, _)| x)
            .unwrap();
        let translated = b.translate(&anchor).unwrap();
        let system = extract_sts_twofold(&translated).unwrap();
        assert_eq!(system.fold(), 2);
        assert!(verify_triple_system(&system).holds());
        assert_eq!(system.block_count(), 2 * 7 * 6 / 6);
    }

    #[test]
    fn split_half_of_splittable_cover_is_a_plain_sts() {
        let c1 = crate::perfect::double_shorten(&hamming(3).unwrap()).unwrap();
        let b = build_b(&c1).unwrap();
        let anchor = b
            .entries()
            .iter()
            .find(|&&(_, m)| m == 2)
            .map(|&(x, _)| x)
            .unwrap();
        match split_twofold(&b, &c1, TwofoldVariant::B).unwrap() {
            TwofoldSplit::Split { half_a, .. } => {
                let translated = half_a.translate(&anchor).unwrap();
                let system = extract_sts(&translated).unwrap();
                assert!(verify_triple_system(&system).holds());
            }
            TwofoldSplit::Unsplittable { .. } => panic!("n=5 cover splits"),
        }
    }

    #[test]
    fn verification_invariant_under_point_relabeling() {
        let system = embedded_sts15();
        assert!(verify_triple_system(&system).holds());
        let perm: Vec<u32> = (1..=15).rev().collect();
        let relabeled = TripleSystem::new(
            15,
            MultisetCode::from_entries(
                15,
                system
                    .blocks()
                    .entries()
                    .iter()
                    .map(|&(x, m)| (x.permuted(&perm).unwrap(), m)),
            )
            .unwrap(),
            2,
        )
        .unwrap();
        assert!(verify_triple_system(&relabeled).holds());
    }

    #[test]
    fn extraction_requires_the_zero_word() {
        let c = BinaryCode::from_words(4, lex_words(4).skip(1).take(3)).unwrap();
        assert!(matches!(extract_sts(&c), Err(Error::Precondition(_))));
    }

    #[test]
    fn embedded_example_counts() {
        let system = embedded_sts15();
        assert_eq!(system.blocks().distinct_len(), 47);
        assert_eq!(system.block_count(), 70);
        let doubled = system
            .blocks()
            .entries()
            .iter()
            .filter(|&&(_, m)| m == 2)
            .count();
        assert_eq!(doubled, 23);
    }

    #[test]
    fn embedded_example_checksum() {
        // guards against transcription slips in the data file
        use sha2::{Digest, Sha256};
        let hash = Sha256::digest(EMBEDDED_STS15.as_bytes());
        assert_eq!(
            format!("{hash:x}"),
            "3cabdef9ddc224289ba8fd57b13aa3a18b145d0afaa5cc6428df0a6164a5dc1c",
        );
    }

    #[test]
    fn embedded_example_report() {
        let report = check_embedded_example().unwrap();
        assert!(report.twofold_sts.holds());
        assert!(report.property_a.holds());
        assert!(report.property_b.holds());
        match &report.split {
            SplitResult::OddCycle(cycle) => {
                let graph = build_graph(embedded_sts15().blocks(), &[2]).unwrap();
                assert!(graph.validates_odd_cycle(&cycle.words));
            }
            SplitResult::Split(_) => panic!("the example must not split"),
        }
        let shortest = report.shortest_cycle.as_ref().unwrap();
        assert_eq!(shortest.len(), 5);
        assert!(report.all_expected());
    }

    #[test]
    fn removing_a_block_breaks_the_embedded_example() {
        let system = embedded_sts15();
        let victim = system.blocks().entries()[0].0;
        let reduced = MultisetCode::from_entries(
            15,
            system
                .blocks()
                .entries()
                .iter()
                .filter(|&&(x, _)| x != victim)
                .copied(),
        )
        .unwrap();
        let broken = TripleSystem::new(15, reduced, 2).unwrap();
        assert!(!verify_triple_system(&broken).holds());
    }
}
