//! Quaternary-cube machinery: MDS and double-MDS codes, the pair-block
//! construction of binary perfect codes from them, latin-hypercuboid
//! conversions, and an exhaustive conjecture probe.
//!
//! A line (4-clique) of Q^m fixes all positions but one. An MDS code meets
//! every line exactly once, a double-MDS code exactly twice. Splitting a
//! double-MDS code into two MDS codes is 2-coloring its distance-1 graph; the
//! pair-block construction transports both the splits and the odd-cycle
//! obstructions to binary covers in H^(4m−1).

use std::fmt;

use crate::code::{BinaryCode, MultisetCode, QuaternaryCode};
use crate::error::{Error, Result, Verdict};
use crate::perfect::{
    equivalence_report, is_1perfect_with, suffix_flip_closed, SweepOptions, TwofoldWitnessReport,
};
use crate::splitgraph::{two_color, ColorOutcome, OddCycle};
use crate::word::{hamming_distance, lex_quaternary_words, BinaryWord, QuaternaryWord};

/// A line meeting the code the wrong number of times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineWitness {
    /// The free position of the line, 1-based.
    pub position: u32,
    /// The four words of the line in symbol order.
    pub line: [QuaternaryWord; 4],
    pub count: u32,
    pub expected: u32,
}

impl fmt::Display for LineWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line through {} (position {}) contains {} codewords, expected {}",
            self.line[0], self.position, self.count, self.expected
        )
    }
}

fn line_occupancy(code: &QuaternaryCode, expected: u32) -> Verdict<LineWitness> {
    let m = code.length();
    for position in 1..=m {
        for base in lex_quaternary_words(m) {
            if base.digit(position) != 0 {
                continue;
            }
            let line = [
                base,
                base.with_digit(position, 1),
                base.with_digit(position, 2),
                base.with_digit(position, 3),
            ];
            let count = line.iter().filter(|w| code.contains(w)).count() as u32;
            if count != expected {
                return Verdict::Fails(LineWitness {
                    position,
                    line,
                    count,
                    expected,
                });
            }
        }
    }
    Verdict::Holds
}

/// Every line contains exactly one codeword.
pub fn is_mds(code: &QuaternaryCode) -> Verdict<LineWitness> {
    line_occupancy(code, 1)
}

/// Every line contains exactly two codewords.
pub fn is_double_mds(code: &QuaternaryCode) -> Verdict<LineWitness> {
    line_occupancy(code, 2)
}

/// Outcome of splitting a double-MDS code into two MDS codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MdsSplit {
    Split(QuaternaryCode, QuaternaryCode),
    /// Odd cycle in the distance-1 graph.
    OddCycle(Vec<QuaternaryWord>),
}

fn distance1_adjacency(code: &QuaternaryCode) -> Vec<Vec<u32>> {
    let m = code.length();
    let mut adjacency: Vec<Vec<u32>> = vec![Vec::new(); code.len()];
    for (i, w) in code.words().iter().enumerate() {
        for position in 1..=m {
            for symbol in 0..4u8 {
                if symbol == w.digit(position) {
                    continue;
                }
                let other = w.with_digit(position, symbol);
                if let Ok(j) = code.words().binary_search(&other) {
                    adjacency[i].push(j as u32);
                }
            }
        }
        adjacency[i].sort_unstable();
    }
    adjacency
}

/// Split a double-MDS code into two MDS codes via its distance-1 graph, or
/// return an odd cycle.
pub fn split_double_mds(code: &QuaternaryCode) -> Result<MdsSplit> {
    if let Verdict::Fails(w) = is_double_mds(code) {
        return Err(Error::precondition(format!("not a double-MDS code: {w}")));
    }
    let adjacency = distance1_adjacency(code);
    match two_color(&adjacency) {
        ColorOutcome::OddCycle(indices) => Ok(MdsSplit::OddCycle(
            indices
                .into_iter()
                .map(|i| code.words()[i as usize])
                .collect(),
        )),
        ColorOutcome::Bipartite(coloring) => {
            let part = |color: u8| -> Result<QuaternaryCode> {
                QuaternaryCode::from_words(
                    code.length(),
                    code.words()
                        .iter()
                        .zip(coloring.colors.iter())
                        .filter(|(_, &c)| c == color)
                        .map(|(&w, _)| w),
                )
            };
            let a = part(0)?;
            let b = part(1)?;
            for half in [&a, &b] {
                if let Verdict::Fails(w) = is_mds(half) {
                    return Err(Error::internal(format!(
                        "2-coloring produced a non-MDS part: {w}"
                    )));
                }
            }
            Ok(MdsSplit::Split(a, b))
        }
    }
}

/// Check that a quaternary cycle is odd, closed under the distance-1
/// relation, and contained in the code.
pub fn validates_mds_cycle(code: &QuaternaryCode, cycle: &[QuaternaryWord]) -> bool {
    if cycle.len() < 3 || cycle.len() % 2 == 0 {
        return false;
    }
    cycle
        .iter()
        .enumerate()
        .all(|(k, w)| code.contains(w) && w.distance(&cycle[(k + 1) % cycle.len()]) == 1)
}

/// The eight constant pair blocks: four antipodal pairs partitioning the
/// even-weight words of H^4, and four pairs partitioning H^3.
#[derive(Clone, Debug)]
pub struct PairTable {
    pub quads: [[BinaryWord; 2]; 4],
    pub triples: [[BinaryWord; 2]; 4],
}

pub fn pair_table() -> PairTable {
    let parse = |s: &str| -> BinaryWord { s.parse().expect("valid constant") };
    let sorted = |a: &str, b: &str| -> [BinaryWord; 2] {
        let (x, y) = (parse(a), parse(b));
        if x < y {
            [x, y]
        } else {
            [y, x]
        }
    };
    PairTable {
        quads: [
            sorted("0000", "1111"),
            sorted("0011", "1100"),
            sorted("0101", "1010"),
            sorted("0110", "1001"),
        ],
        triples: [
            sorted("000", "111"),
            sorted("011", "100"),
            sorted("101", "010"),
            sorted("110", "001"),
        ],
    }
}

fn inner_translation(inner_word: &BinaryWord, m: u32) -> Result<BinaryWord> {
    // 000c₁ 000c₂ … 000c_{m−1} 000: bit cᵢ lands on coordinate 4i
    let mut bits = 0u64;
    for i in 1..=m - 1 {
        if inner_word.bit(i) {
            bits |= 1u64 << (4 * i - 1);
        }
    }
    BinaryWord::new(4 * m - 1, bits)
}

fn validate_s_inputs(code: &QuaternaryCode, inner: &BinaryCode) -> Result<()> {
    let m = code.length();
    if m < 2 {
        return Err(Error::precondition("pair-block construction needs m >= 2"));
    }
    if code.is_empty() {
        return Err(Error::precondition("empty quaternary code"));
    }
    if inner.length() != m - 1 {
        return Err(Error::precondition(format!(
            "inner code has length {}, expected {}",
            inner.length(),
            m - 1
        )));
    }
    match is_1perfect_with(inner, &SweepOptions::default())? {
        Verdict::Holds => Ok(()),
        Verdict::Fails(w) => Err(Error::precondition(format!(
            "inner code is not 1-perfect: {w}"
        ))),
    }
}

fn generate_s(code: &QuaternaryCode, inner: &BinaryCode) -> Result<Vec<BinaryWord>> {
    let m = code.length();
    let table = pair_table();
    let translations: Vec<BinaryWord> = inner
        .words()
        .iter()
        .map(|c| inner_translation(c, m))
        .collect::<Result<Vec<_>>>()?;
    let mut words = Vec::with_capacity(code.len() << m);
    for mu in code.words() {
        for selection in 0u32..(1 << m) {
            let mut bits = 0u64;
            for i in 1..=m - 1 {
                let element =
                    &table.quads[mu.digit(i) as usize][(selection >> (i - 1) & 1) as usize];
                bits |= element.bits() << (4 * (i - 1));
            }
            let last = &table.triples[mu.digit(m) as usize][(selection >> (m - 1) & 1) as usize];
            bits |= last.bits() << (4 * (m - 1));
            let base = BinaryWord::new(4 * m - 1, bits)?;
            for t in &translations {
                words.push(base.xor(t));
            }
        }
    }
    Ok(words)
}

/// The pair-block construction: map a quaternary code M ⊂ Q^m and a
/// 1-perfect inner code of length m−1 to a binary code in H^(4m−1). Distinct
/// generation triples always produce distinct words, so the result has
/// |M|·2^m·|inner| words; when M has distance ≥ 2 the result has distance at
/// least 3, and an MDS input yields a 1-perfect code.
pub fn pair_block_code(code: &QuaternaryCode, inner: &BinaryCode) -> Result<BinaryCode> {
    validate_s_inputs(code, inner)?;
    let words = generate_s(code, inner)?;
    let expected = words.len();
    let result = BinaryCode::from_words(4 * code.length() - 1, words)?;
    if result.len() != expected {
        return Err(Error::internal(
            "pair-block generation produced colliding words",
        ));
    }
    Ok(result)
}

/// Splittability verdict transported from the quaternary level to the cover.
#[derive(Clone, Debug)]
pub enum CoverVerdict {
    Splittable {
        mds_parts: (QuaternaryCode, QuaternaryCode),
        halves: (BinaryCode, BinaryCode),
    },
    Unsplittable {
        mds_cycle: Vec<QuaternaryWord>,
        transported: OddCycle,
    },
}

/// A twofold cover built from a double-MDS code.
#[derive(Clone, Debug)]
pub struct TwofoldFromMds {
    pub cover: MultisetCode,
    pub verdict: CoverVerdict,
}

/// Apply the pair-block construction to a double-MDS code, producing a
/// twofold 1-perfect cover together with a transported splittability verdict:
/// a split of M gives the two 1-perfect halves, an odd cycle in M's
/// distance-1 graph maps to an odd cycle in the cover's distance-{1,2} graph
/// (each quaternary word to a fixed representative of its block).
pub fn pair_block_twofold(
    code: &QuaternaryCode,
    inner: &BinaryCode,
    opts: &SweepOptions,
) -> Result<TwofoldFromMds> {
    if let Verdict::Fails(w) = is_double_mds(code) {
        return Err(Error::precondition(format!("not a double-MDS code: {w}")));
    }
    validate_s_inputs(code, inner)?;
    let words = generate_s(code, inner)?;
    let expected = words.len() as u64;
    let cover =
        MultisetCode::from_entries(4 * code.length() - 1, words.into_iter().map(|w| (w, 1)))?;
    if cover.total_multiplicity() != expected || cover.distinct_len() as u64 != expected {
        return Err(Error::internal(
            "pair-block generation produced colliding words",
        ));
    }
    let verdict = match split_double_mds(code)? {
        MdsSplit::Split(a, b) => {
            let half_a = pair_block_code(&a, inner)?;
            let half_b = pair_block_code(&b, inner)?;
            let union = MultisetCode::from(&half_a).union(&MultisetCode::from(&half_b))?;
            if union != cover {
                return Err(Error::internal("halves do not reassemble the cover"));
            }
            for half in [&half_a, &half_b] {
                if !is_1perfect_with(half, opts)?.holds() {
                    return Err(Error::internal("MDS part produced a non-perfect half"));
                }
            }
            CoverVerdict::Splittable {
                mds_parts: (a, b),
                halves: (half_a, half_b),
            }
        }
        MdsSplit::OddCycle(cycle) => {
            let table = pair_table();
            let m = code.length();
            let anchor = inner_translation(&inner.words()[0], m)?;
            let representative = |mu: &QuaternaryWord| -> Result<BinaryWord> {
                let mut bits = 0u64;
                for i in 1..=m - 1 {
                    bits |= table.quads[mu.digit(i) as usize][0].bits() << (4 * (i - 1));
                }
                bits |= table.triples[mu.digit(m) as usize][0].bits() << (4 * (m - 1));
                Ok(BinaryWord::new(4 * m - 1, bits)?.xor(&anchor))
            };
            let transported = OddCycle {
                words: cycle
                    .iter()
                    .map(representative)
                    .collect::<Result<Vec<_>>>()?,
            };
            for (k, w) in transported.words.iter().enumerate() {
                let next = &transported.words[(k + 1) % transported.words.len()];
                let d = hamming_distance(w, next);
                if cover.multiplicity(w) == 0 || !(1..=2).contains(&d) {
                    return Err(Error::internal(
                        "transported cycle does not replay in the cover",
                    ));
                }
            }
            CoverVerdict::Unsplittable {
                mds_cycle: cycle,
                transported,
            }
        }
    };
    Ok(TwofoldFromMds { cover, verdict })
}

/// Report of the seed-code pipeline driven by a double-MDS code in
/// Q^(2^(k−2)−1).
#[derive(Clone, Debug)]
pub struct SeedPipelineReport {
    pub k: u32,
    pub m: u32,
    /// Whether the driving code split (the interesting hypothesis needs it
    /// unsplittable).
    pub m1_splittable: bool,
    /// Unsplittable driver with splittable complement.
    pub hypothesis_met: bool,
    /// C₁ = the double shortening of the carrier code.
    pub seed: BinaryCode,
    /// The carrier code built from half of the split complement.
    pub carrier: BinaryCode,
    /// The twofold cover built from the assembled double-MDS code.
    pub cover: MultisetCode,
    pub cover_twofold: bool,
    pub cover_closed_under_suffix_flip: bool,
    pub seed_size_expected: u64,
    pub seed_size_ok: bool,
    pub seed_distance: Option<u32>,
    pub seed_embeds_in_cover: bool,
    pub equivalence: TwofoldWitnessReport,
    pub notes: Vec<String>,
}

/// Drive the seed-code pipeline: given a double-MDS code M₁ in Q^(m−1) with
/// m = 2^(k−2) and a splittable complement M₀ = M′ ∪ M″, assemble
/// M = M₀0 ∪ M₀1 ∪ M₁2 ∪ M₁3, build the twofold cover from M and the carrier
/// code from M′0 ∪ M″1, and doubly shorten the carrier into a seed code with
/// parameters (2^k−3, 2^(2^k−k−3), 3). When M₁ is splittable the pipeline
/// still runs as a control and the report notes the unmet hypothesis.
pub fn double_mds_seed_pipeline(
    m1: &QuaternaryCode,
    k: u32,
    opts: &SweepOptions,
) -> Result<SeedPipelineReport> {
    if !(4..=7).contains(&k) {
        return Err(Error::usage("k must be in 4..=7"));
    }
    let m = 1u32 << (k - 2);
    if m1.length() != m - 1 {
        return Err(Error::precondition(format!(
            "driver code has length {}, expected {}",
            m1.length(),
            m - 1
        )));
    }
    if let Verdict::Fails(w) = is_double_mds(m1) {
        return Err(Error::precondition(format!(
            "driver is not double-MDS: {w}"
        )));
    }
    let mut notes = Vec::new();
    let m1_splittable = matches!(split_double_mds(m1)?, MdsSplit::Split(..));
    if m1_splittable {
        notes.push(
            "driver code is splittable: control run, the unsplittability hypothesis is unmet"
                .to_string(),
        );
    }
    let m0 = m1.complement();
    if let Verdict::Fails(w) = is_double_mds(&m0) {
        return Err(Error::internal(format!(
            "complement of a double-MDS code must be double-MDS: {w}"
        )));
    }
    let (m_prime, m_second) = match split_double_mds(&m0)? {
        MdsSplit::Split(a, b) => (a, b),
        MdsSplit::OddCycle(_) => {
            return Err(Error::precondition(
                "the complement does not split; the pipeline needs a split complement",
            ))
        }
    };
    let assembled = QuaternaryCode::from_words(
        m,
        m0.words()
            .iter()
            .flat_map(|w| [w.append(0), w.append(1)])
            .chain(m1.words().iter().flat_map(|w| [w.append(2), w.append(3)]))
            .collect::<Result<Vec<_>>>()?,
    )?;
    if let Verdict::Fails(w) = is_double_mds(&assembled) {
        return Err(Error::internal(format!(
            "assembled code must be double-MDS: {w}"
        )));
    }
    let inner = crate::generators::hamming(k - 2)?;
    let cover = pair_block_twofold(&assembled, &inner, opts)?;
    let carrier_driver = m_prime
        .with_suffix(0)?
        .disjoint_union(&m_second.with_suffix(1)?)?;
    let carrier = pair_block_code(&carrier_driver, &inner)?;
    let seed = crate::perfect::double_shorten(&carrier)?;

    let seed_size_expected = 1u64 << ((1u64 << k) - k as u64 - 3);
    let seed_size_ok = seed.len() as u64 == seed_size_expected && seed.len() * 2 == carrier.len();
    let seed_distance = seed.code_distance();
    let seed_embeds_in_cover = seed
        .words()
        .iter()
        .map(|x| x.append2(false, false))
        .collect::<Result<Vec<_>>>()?
        .iter()
        .all(|x| cover.cover.multiplicity(x) >= 1);
    let cover_twofold = crate::perfect::is_twofold_1perfect_with(&cover.cover, opts)?.holds();
    let cover_closed = suffix_flip_closed(&cover.cover, true).holds();
    let equivalence = equivalence_report(&seed, opts)?;
    Ok(SeedPipelineReport {
        k,
        m,
        m1_splittable,
        hypothesis_met: !m1_splittable,
        seed,
        carrier,
        cover: cover.cover,
        cover_twofold,
        cover_closed_under_suffix_flip: cover_closed,
        seed_size_expected,
        seed_size_ok,
        seed_distance,
        seed_embeds_in_cover,
        equivalence,
        notes,
    })
}

/// A latin hypercuboid of order 4: `index_length` quaternary indices plus a
/// layer index of size `layers`, cells holding symbols 0..=3, no two cells
/// differing in exactly one index sharing a symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatinHypercuboid {
    index_length: u32,
    layers: u32,
    /// cells[point * layers + layer], points in lexicographic order.
    cells: Vec<u8>,
}

/// Two cells differing in one index with equal symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatinWitness {
    pub point_a: QuaternaryWord,
    pub layer_a: u32,
    pub point_b: QuaternaryWord,
    pub layer_b: u32,
    pub symbol: u8,
}

impl fmt::Display for LatinWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cells ({}, layer {}) and ({}, layer {}) both hold symbol {}",
            self.point_a, self.layer_a, self.point_b, self.layer_b, self.symbol
        )
    }
}

impl LatinHypercuboid {
    pub fn new(index_length: u32, layers: u32, cells: Vec<u8>) -> Result<Self> {
        if index_length < 1 {
            return Err(Error::usage("need at least one quaternary index"));
        }
        if !(1..=4).contains(&layers) {
            return Err(Error::usage("layer count must be in 1..=4"));
        }
        let points = 1usize << (2 * index_length);
        if cells.len() != points * layers as usize {
            return Err(Error::usage(format!(
                "expected {} cells, got {}",
                points * layers as usize,
                cells.len()
            )));
        }
        if cells.iter().any(|&c| c > 3) {
            return Err(Error::usage("cell symbols must be in 0..=3"));
        }
        Ok(LatinHypercuboid {
            index_length,
            layers,
            cells,
        })
    }

    pub fn index_length(&self) -> u32 {
        self.index_length
    }

    pub fn layers(&self) -> u32 {
        self.layers
    }

    fn point_index(&self, point: &QuaternaryWord) -> usize {
        point.lex_key() as usize
    }

    pub fn cell(&self, point: &QuaternaryWord, layer: u32) -> u8 {
        self.cells[self.point_index(point) * self.layers as usize + layer as usize]
    }

    /// Check the latin condition across all index directions.
    pub fn is_latin(&self) -> Verdict<LatinWitness> {
        for point in lex_quaternary_words(self.index_length) {
            for layer in 0..self.layers {
                let symbol = self.cell(&point, layer);
                // other layers at the same point
                for other in layer + 1..self.layers {
                    if self.cell(&point, other) == symbol {
                        return Verdict::Fails(LatinWitness {
                            point_a: point,
                            layer_a: layer,
                            point_b: point,
                            layer_b: other,
                            symbol,
                        });
                    }
                }
                // same layer, one quaternary index changed upward
                for position in 1..=self.index_length {
                    for value in point.digit(position) + 1..4 {
                        let neighbor = point.with_digit(position, value);
                        if self.cell(&neighbor, layer) == symbol {
                            return Verdict::Fails(LatinWitness {
                                point_a: point,
                                layer_a: layer,
                                point_b: neighbor,
                                layer_b: layer,
                                symbol,
                            });
                        }
                    }
                }
            }
        }
        Verdict::Holds
    }
}

/// Encode an MDS (one layer) or double-MDS (two layers) code as a latin
/// hypercuboid. A two-layer cuboid *is* a split into two MDS layers — a
/// pointwise-sorted layer assignment can never be latin, since the minimum
/// of two symbols below 4 never reaches 3 — so the layers follow the
/// canonical 2-coloring of the distance-1 graph. Inputs violating the line
/// constraints, or unsplittable two-layer inputs, are a conversion error
/// carrying the witness.
pub fn to_latin(code: &QuaternaryCode) -> Result<LatinHypercuboid> {
    let m = code.length();
    if m < 2 {
        return Err(Error::usage("need length at least 2"));
    }
    let points = 1usize << (2 * (m - 1));
    if code.len() % points != 0 {
        return Err(Error::precondition(format!(
            "{} words cannot fill layers over {points} points",
            code.len()
        )));
    }
    let layers = (code.len() / points) as u32;
    if !(1..=2).contains(&layers) {
        return Err(Error::precondition(format!(
            "{layers} layers: only MDS (1) and double-MDS (2) codes convert"
        )));
    }
    let mut cells = vec![0u8; points * layers as usize];
    if layers == 1 {
        if let Verdict::Fails(w) = is_mds(code) {
            return Err(Error::precondition(format!("not an MDS code: {w}")));
        }
        for (idx, point) in lex_quaternary_words(m - 1).enumerate() {
            let symbol = (0..4u8)
                .find(|&s| code.contains(&point.append(s).unwrap()))
                .ok_or_else(|| Error::precondition(format!("point {point} carries no symbol")))?;
            cells[idx] = symbol;
        }
    } else {
        let (a, b) = match split_double_mds(code)? {
            MdsSplit::Split(a, b) => (a, b),
            MdsSplit::OddCycle(cycle) => {
                return Err(Error::precondition(format!(
                    "unsplittable input admits no latin layer assignment \
                     (odd cycle of length {})",
                    cycle.len()
                )))
            }
        };
        for (idx, point) in lex_quaternary_words(m - 1).enumerate() {
            for (layer, part) in [&a, &b].into_iter().enumerate() {
                let symbol = (0..4u8)
                    .find(|&s| part.contains(&point.append(s).unwrap()))
                    .ok_or_else(|| Error::internal("MDS layer misses a point".to_string()))?;
                cells[idx * 2 + layer] = symbol;
            }
        }
    }
    let cuboid = LatinHypercuboid::new(m - 1, layers, cells)?;
    match cuboid.is_latin() {
        Verdict::Holds => Ok(cuboid),
        Verdict::Fails(w) => Err(Error::internal(format!(
            "layer assignment violates the latin condition: {w}"
        ))),
    }
}

/// Decode a latin hypercuboid back into the quaternary code of its cell
/// graph.
pub fn from_latin(cuboid: &LatinHypercuboid) -> Result<QuaternaryCode> {
    let mut words = Vec::new();
    for point in lex_quaternary_words(cuboid.index_length()) {
        for layer in 0..cuboid.layers() {
            words.push(point.append(cuboid.cell(&point, layer))?);
        }
    }
    QuaternaryCode::from_words(cuboid.index_length() + 1, words)
}

/// Outcome of completing a two-layer cuboid to a full latin hypercube.
#[derive(Clone, Debug)]
pub enum CompletionOutcome {
    Completed(LatinHypercuboid),
    /// Odd cycle in the distance-1 graph of the complement.
    Incompletable(Vec<QuaternaryWord>),
}

/// Try to extend a 4×…×4×2 latin hypercuboid to a 4×…×4×4 latin hypercube
/// by splitting the complement of its cell graph into two MDS layers.
pub fn complete_latin(cuboid: &LatinHypercuboid) -> Result<CompletionOutcome> {
    if cuboid.layers() != 2 {
        return Err(Error::usage("completion starts from a two-layer cuboid"));
    }
    let code = from_latin(cuboid)?;
    let complement = code.complement();
    match split_double_mds(&complement)? {
        MdsSplit::OddCycle(cycle) => Ok(CompletionOutcome::Incompletable(cycle)),
        MdsSplit::Split(a, b) => {
            let points = 1usize << (2 * cuboid.index_length());
            let mut cells = vec![0u8; points * 4];
            for (idx, point) in lex_quaternary_words(cuboid.index_length()).enumerate() {
                cells[idx * 4] = cuboid.cell(&point, 0);
                cells[idx * 4 + 1] = cuboid.cell(&point, 1);
                let layer_symbol = |part: &QuaternaryCode| -> Result<u8> {
                    (0..4u8)
                        .find(|&s| part.contains(&point.append(s).unwrap()))
                        .ok_or_else(|| Error::internal("MDS layer misses a point"))
                };
                cells[idx * 4 + 2] = layer_symbol(&a)?;
                cells[idx * 4 + 3] = layer_symbol(&b)?;
            }
            let full = LatinHypercuboid::new(cuboid.index_length(), 4, cells)?;
            if let Verdict::Fails(w) = full.is_latin() {
                return Err(Error::internal(format!("completion is not latin: {w}")));
            }
            Ok(CompletionOutcome::Completed(full))
        }
    }
}

/// Options for the double-MDS enumeration.
#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Maximum number of backtracking nodes to visit.
    pub budget: u64,
    /// Fix the first line's symbols to {0,1}, cutting the search by the
    /// symbol symmetry of that line (scale factor 6).
    pub reduce: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: 1_000_000,
            reduce: false,
        }
    }
}

/// Statistics of an enumeration run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationStats {
    /// Backtracking nodes visited.
    pub nodes: u64,
    /// Double-MDS codes enumerated (after reduction, if any).
    pub enumerated: u64,
    /// Whether the enumeration ran to completion within the budget.
    pub complete: bool,
    /// Multiply `enumerated` by this to account for the fixed first line.
    pub scale: u64,
}

struct Enumerator<'a> {
    m: u32,
    cells: Vec<QuaternaryWord>,
    /// line_ids[cell][direction]
    line_ids: Vec<Vec<u32>>,
    chosen: Vec<Vec<u32>>,
    undecided: Vec<Vec<u32>>,
    forced: Vec<Option<bool>>,
    membership: Vec<bool>,
    nodes: u64,
    budget: u64,
    enumerated: u64,
    visit: &'a mut dyn FnMut(&QuaternaryCode),
}

impl Enumerator<'_> {
    /// Returns false when the budget ran out.
    fn run(&mut self, cell: usize) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        if cell == self.cells.len() {
            let code = QuaternaryCode::from_words(
                self.m,
                self.cells
                    .iter()
                    .zip(self.membership.iter())
                    .filter(|(_, &inside)| inside)
                    .map(|(&w, _)| w),
            )
            .expect("equal lengths");
            self.enumerated += 1;
            (self.visit)(&code);
            return true;
        }
        for inside in [false, true] {
            if let Some(f) = self.forced[cell] {
                if f != inside {
                    continue;
                }
            }
            let mut feasible = true;
            for dir in 0..self.m as usize {
                let line = self.line_ids[cell][dir] as usize;
                let chosen = self.chosen[dir][line] + inside as u32;
                let undecided = self.undecided[dir][line] - 1;
                if chosen > 2 || chosen + undecided < 2 {
                    feasible = false;
                    break;
                }
            }
            if !feasible {
                continue;
            }
            for dir in 0..self.m as usize {
                let line = self.line_ids[cell][dir] as usize;
                self.chosen[dir][line] += inside as u32;
                self.undecided[dir][line] -= 1;
            }
            self.membership[cell] = inside;
            let ok = self.run(cell + 1);
            for dir in 0..self.m as usize {
                let line = self.line_ids[cell][dir] as usize;
                self.chosen[dir][line] -= inside as u32;
                self.undecided[dir][line] += 1;
            }
            if !ok {
                return false;
            }
        }
        true
    }
}

/// Enumerate every double-MDS code in Q^m by line-constrained backtracking
/// over the cells in lexicographic order, calling `visit` on each one.
pub fn enumerate_double_mds(
    m: u32,
    opts: &SearchOptions,
    mut visit: impl FnMut(&QuaternaryCode),
) -> Result<EnumerationStats> {
    if !(2..=3).contains(&m) {
        return Err(Error::usage("enumeration supports m in 2..=3"));
    }
    if opts.budget == 0 {
        return Err(Error::usage("budget must be positive"));
    }
    let cells: Vec<QuaternaryWord> = lex_quaternary_words(m).collect();
    let lines_per_dir = 1usize << (2 * (m - 1));
    let line_ids: Vec<Vec<u32>> = cells
        .iter()
        .map(|w| {
            (1..=m)
                .map(|pos| {
                    let mut id = 0u32;
                    for q in 1..=m {
                        if q != pos {
                            id = id * 4 + w.digit(q) as u32;
                        }
                    }
                    id
                })
                .collect()
        })
        .collect();
    let mut forced = vec![None; cells.len()];
    if opts.reduce {
        // the first four cells in lexicographic order form the line through
        // 0…0 in the last position; pin its symbols to {0, 1}
        forced[0] = Some(true);
        forced[1] = Some(true);
        forced[2] = Some(false);
        forced[3] = Some(false);
    }
    let mut enumerator = Enumerator {
        m,
        membership: vec![false; cells.len()],
        cells,
        line_ids,
        chosen: vec![vec![0u32; lines_per_dir]; m as usize],
        undecided: vec![vec![4u32; lines_per_dir]; m as usize],
        forced,
        nodes: 0,
        budget: opts.budget,
        enumerated: 0,
        visit: &mut visit,
    };
    let complete = enumerator.run(0);
    Ok(EnumerationStats {
        nodes: enumerator.nodes,
        enumerated: enumerator.enumerated,
        complete,
        scale: if opts.reduce { 6 } else { 1 },
    })
}

/// A code violating the splittability equivalence between a double-MDS code
/// and its complement.
#[derive(Clone, Debug)]
pub struct SearchHit {
    pub code: QuaternaryCode,
    pub splittable: bool,
    pub complement_splittable: bool,
}

/// Outcome of the conjecture probe.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub stats: EnumerationStats,
    pub hits: Vec<SearchHit>,
}

/// Enumerate double-MDS codes in Q^m and report every instance whose
/// splittability differs from its complement's.
pub fn search_double_mds(m: u32, opts: &SearchOptions) -> Result<SearchOutcome> {
    let mut hits = Vec::new();
    let stats = enumerate_double_mds(m, opts, |code| {
        let splittable = matches!(
            split_double_mds(code).expect("enumerated codes are double-MDS"),
            MdsSplit::Split(..)
        );
        let complement_splittable = matches!(
            split_double_mds(&code.complement()).expect("complement is double-MDS"),
            MdsSplit::Split(..)
        );
        if splittable != complement_splittable {
            hits.push(SearchHit {
                code: code.clone(),
                splittable,
                complement_splittable,
            });
        }
    })?;
    Ok(SearchOutcome { stats, hits })
}
