//! Equitable partitions of the hypercube.
//!
//! The central construction takes an optimal (2^m−3, 2^(n−m), 3) code C₁ and
//! produces the four-part partition {C₁, C₂, C₃, C₄} of V(Hⁿ), where
//! C₂ = C₁ + 1̄, C₃ is the set of vertices at distance exactly 1 from C₁
//! minus C₂, and C₄ is the rest. The module verifies equitability, merges,
//! refines and parity-extends these partitions, and checks the exact
//! distance-distribution identities that the four parts satisfy.

use std::fmt;

use num_rational::Rational64;

use crate::code::BinaryCode;
use crate::distrib::{binomial, mean_distribution};
use crate::error::{Error, Result, Verdict};
use crate::word::BinaryWord;
use crate::DEFAULT_SPACE_BUDGET;

/// An ordered partition of V(Hⁿ) into disjoint nonempty codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    n: u32,
    parts: Vec<BinaryCode>,
}

pub(crate) fn guard_space(n: u32) -> Result<()> {
    let needed = 1u64 << n;
    if needed > DEFAULT_SPACE_BUDGET {
        return Err(Error::Budget {
            needed,
            budget: DEFAULT_SPACE_BUDGET,
        });
    }
    Ok(())
}

impl Partition {
    /// Validate that the parts are nonempty, pairwise disjoint, and cover the
    /// full space.
    pub fn new(n: u32, parts: Vec<BinaryCode>) -> Result<Self> {
        guard_space(n)?;
        if parts.len() < 2 {
            return Err(Error::usage("a partition needs at least 2 parts"));
        }
        let mut seen = vec![false; 1usize << n];
        let mut covered = 0u64;
        for part in &parts {
            if part.length() != n {
                return Err(Error::LengthMismatch {
                    left: n,
                    right: part.length(),
                });
            }
            if part.is_empty() {
                return Err(Error::usage("partition parts must be nonempty"));
            }
            for x in part.words() {
                let idx = x.bits() as usize;
                if seen[idx] {
                    return Err(Error::usage(format!("word {x} appears in two parts")));
                }
                seen[idx] = true;
                covered += 1;
            }
        }
        if covered != 1u64 << n {
            return Err(Error::usage(format!(
                "parts cover {covered} of {} words",
                1u64 << n
            )));
        }
        Ok(Partition { n, parts })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn parts(&self) -> &[BinaryCode] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &BinaryCode {
        &self.parts[i]
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// Map from vertex bits to 0-based part index.
    fn class_array(&self) -> Vec<u8> {
        let mut class = vec![0u8; 1usize << self.n];
        for (i, part) in self.parts.iter().enumerate() {
            for x in part.words() {
                class[x.bits() as usize] = i as u8;
            }
        }
        class
    }
}

/// The matrix (S_ij) of an equitable partition: a vertex of part i has
/// exactly S_ij neighbors in part j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterMatrix {
    rows: Vec<Vec<u32>>,
}

impl ParameterMatrix {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let r = rows.len();
        if r < 2 {
            return Err(Error::usage("parameter matrix needs at least 2 rows"));
        }
        if rows.iter().any(|row| row.len() != r) {
            return Err(Error::usage("parameter matrix must be square"));
        }
        Ok(ParameterMatrix { rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.rows[i]
    }

    pub fn row_sums(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }
}

impl fmt::Display for ParameterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Expected parameters of the derived four-part partition.
pub fn four_part_parameters(n: u32) -> ParameterMatrix {
    ParameterMatrix::new(vec![
        vec![0, 1, n - 1, 0],
        vec![1, 0, n - 1, 0],
        vec![1, 1, n - 4, 2],
        vec![0, 0, n - 1, 1],
    ])
    .expect("square")
}

/// Expected parameters after merging the first two parts.
pub fn merged_parameters(n: u32) -> ParameterMatrix {
    ParameterMatrix::new(vec![
        vec![1, n - 1, 0],
        vec![2, n - 4, 2],
        vec![0, n - 1, 1],
    ])
    .expect("square")
}

/// Expected parameters of the five-part refinement obtained by splitting the
/// fourth part into two distance-3 codes.
pub fn refined_parameters(n: u32) -> ParameterMatrix {
    ParameterMatrix::new(vec![
        vec![0, 1, n - 1, 0, 0],
        vec![1, 0, n - 1, 0, 0],
        vec![1, 1, n - 4, 1, 1],
        vec![0, 0, n - 1, 0, 1],
        vec![0, 0, n - 1, 1, 0],
    ])
    .expect("square")
}

/// Expected parameters of the parity-extended partition in H^(n+1).
pub fn extended_parameters(n_prime: u32) -> ParameterMatrix {
    ParameterMatrix::new(vec![
        vec![0, n_prime, 0, 0],
        vec![2, 0, n_prime - 2, 0],
        vec![0, n_prime - 2, 0, 2],
        vec![0, 0, n_prime, 0],
    ])
    .expect("square")
}

/// A vertex whose neighbor counts contradict equitability.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquityWitness {
    /// Lexicographically smallest violating vertex.
    pub vertex: BinaryWord,
    /// 0-based part index of the vertex.
    pub part: usize,
    /// Neighbor counts per part observed at the vertex.
    pub observed: Vec<u32>,
    /// The counts the vertex was required to have.
    pub expected: Vec<u32>,
}

impl fmt::Display for EquityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vertex {} in part {} sees {:?}, expected {:?}",
            self.vertex,
            self.part + 1,
            self.observed,
            self.expected
        )
    }
}

/// Result of computing partition parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParametersOutcome {
    Equitable(ParameterMatrix),
    NotEquitable(EquityWitness),
}

impl ParametersOutcome {
    pub fn matrix(&self) -> Option<&ParameterMatrix> {
        match self {
            ParametersOutcome::Equitable(m) => Some(m),
            ParametersOutcome::NotEquitable(_) => None,
        }
    }
}

fn neighbor_row(class: &[u8], n: u32, r: usize, bits: u64) -> Vec<u32> {
    let mut row = vec![0u32; r];
    for coord in 0..n {
        row[class[(bits ^ (1u64 << coord)) as usize] as usize] += 1;
    }
    row
}

/// Determine whether the partition is equitable. The reference row for each
/// part is taken from its lexicographically smallest vertex; the witness on
/// failure is the lexicographically smallest vertex whose row differs from
/// its part's reference row.
pub fn compute_parameters(partition: &Partition) -> ParametersOutcome {
    let n = partition.n();
    let r = partition.part_count();
    let class = partition.class_array();
    let mut reference: Vec<Option<Vec<u32>>> = vec![None; r];
    for x in crate::word::lex_words(n) {
        let part = class[x.bits() as usize] as usize;
        let row = neighbor_row(&class, n, r, x.bits());
        match &reference[part] {
            None => reference[part] = Some(row),
            Some(expected) => {
                if *expected != row {
                    return ParametersOutcome::NotEquitable(EquityWitness {
                        vertex: x,
                        part,
                        observed: row,
                        expected: expected.clone(),
                    });
                }
            }
        }
    }
    let rows = reference
        .into_iter()
        .map(|row| row.expect("every part is nonempty"))
        .collect();
    ParametersOutcome::Equitable(ParameterMatrix::new(rows).expect("square by construction"))
}

/// Check the partition against a prescribed parameter matrix.
pub fn verify_equitable(
    partition: &Partition,
    expected: &ParameterMatrix,
) -> Result<Verdict<EquityWitness>> {
    let r = partition.part_count();
    if expected.size() != r {
        return Err(Error::usage(format!(
            "matrix has {} rows but partition has {r} parts",
            expected.size()
        )));
    }
    let n = partition.n();
    let class = partition.class_array();
    for x in crate::word::lex_words(n) {
        let part = class[x.bits() as usize] as usize;
        let row = neighbor_row(&class, n, r, x.bits());
        if row != expected.row(part) {
            return Ok(Verdict::Fails(EquityWitness {
                vertex: x,
                part,
                observed: row,
                expected: expected.row(part).to_vec(),
            }));
        }
    }
    Ok(Verdict::Holds)
}

/// Check that a code has the parameters (2^m−3, 2^(n−m), 3) required of C₁,
/// returning m. Each failing check is named.
pub fn validate_seed_code(c1: &BinaryCode) -> Result<u32> {
    let n = c1.length();
    let m = (3..=16u32)
        .find(|m| (1u64 << m) - 3 == n as u64)
        .ok_or_else(|| {
            Error::precondition(format!("length {n} is not of the form 2^m - 3 with m >= 3"))
        })?;
    let expected = 1u64 << (n - m);
    if c1.len() as u64 != expected {
        return Err(Error::precondition(format!(
            "cardinality {} differs from 2^(n-m) = {expected}",
            c1.len()
        )));
    }
    match c1.code_distance() {
        Some(d) if d >= 3 => {}
        Some(d) => return Err(Error::precondition(format!("code distance {d} is below 3"))),
        None => return Err(Error::precondition("code has fewer than 2 words")),
    }
    Ok(m)
}

/// Derive the four-part partition {C₁, C₂, C₃, C₄} from a seed code with
/// parameters (2^m−3, 2^(n−m), 3).
pub fn derive_partition(c1: &BinaryCode) -> Result<Partition> {
    validate_seed_code(c1)?;
    let n = c1.length();
    guard_space(n)?;
    let size = 1usize << n;
    // 0 = unassigned (ends up C4), 1..3 = C1..C3
    let mut class = vec![0u8; size];
    for x in c1.words() {
        class[x.bits() as usize] = 1;
    }
    for x in c1.words() {
        let idx = x.complement().bits() as usize;
        if class[idx] == 1 {
            return Err(Error::internal("seed code intersects its own antipode"));
        }
        class[idx] = 2;
    }
    for x in c1.words() {
        for coord in 1..=n {
            let idx = x.flip(coord).bits() as usize;
            if class[idx] == 0 || class[idx] == 3 {
                class[idx] = 3;
            } else if class[idx] == 1 {
                return Err(Error::internal("distance-1 pair inside the seed code"));
            }
        }
    }
    let mut buckets: Vec<Vec<BinaryWord>> = vec![Vec::new(); 4];
    for (bits, &c) in class.iter().enumerate() {
        let part = if c == 0 { 3 } else { c as usize - 1 };
        buckets[part].push(BinaryWord::new(n, bits as u64)?);
    }
    let parts = buckets
        .into_iter()
        .map(|words| BinaryCode::from_words(n, words))
        .collect::<Result<Vec<_>>>()?;
    let c1_size = c1.len();
    let expected_sizes = [c1_size, c1_size, (n as usize - 1) * c1_size, 2 * c1_size];
    for (part, &want) in parts.iter().zip(expected_sizes.iter()) {
        if part.len() != want {
            return Err(Error::internal(format!(
                "derived part has {} words, expected {want}",
                part.len()
            )));
        }
    }
    Partition::new(n, parts)
}

/// Replace parts i and j by their union. The merged part comes first, the
/// remaining parts keep their original order.
pub fn merge_parts(partition: &Partition, i: usize, j: usize) -> Result<Partition> {
    let r = partition.part_count();
    if i >= r || j >= r {
        return Err(Error::usage(format!(
            "part index out of range: {} parts",
            r
        )));
    }
    if i == j {
        return Err(Error::usage("cannot merge a part with itself"));
    }
    let merged = partition.part(i).disjoint_union(partition.part(j))?;
    let mut parts = vec![merged];
    for (k, part) in partition.parts().iter().enumerate() {
        if k != i && k != j {
            parts.push(part.clone());
        }
    }
    Partition::new(partition.n(), parts)
}

/// Refine the four-part partition by splitting C₄ into two distance-3 codes,
/// yielding {C₁, C₂, C₃, C′, C″}.
pub fn split_refine(
    partition: &Partition,
    c_prime: &BinaryCode,
    c_second: &BinaryCode,
) -> Result<Partition> {
    if partition.part_count() != 4 {
        return Err(Error::usage("refinement expects the four-part partition"));
    }
    let c4 = partition.part(3);
    let union = c_prime
        .disjoint_union(c_second)
        .map_err(|_| Error::precondition("the two pieces are not disjoint"))?;
    if &union != c4 {
        return Err(Error::precondition(
            "the two pieces do not partition the fourth part",
        ));
    }
    for (label, piece) in [("first", c_prime), ("second", c_second)] {
        if let Some(d) = piece.code_distance() {
            if d < 3 {
                return Err(Error::precondition(format!(
                    "{label} piece has code distance {d} < 3"
                )));
            }
        }
    }
    let parts = vec![
        partition.part(0).clone(),
        partition.part(1).clone(),
        partition.part(2).clone(),
        c_prime.clone(),
        c_second.clone(),
    ];
    Partition::new(partition.n(), parts)
}

/// Extend the merged three-part partition {C₁₂, C₃, C₄} of Hⁿ to the
/// four-part partition {G₁, G₂, G₃, G₄} of H^(n+1): G₁ is the even-parity
/// extension of C₁₂, G₄ the odd-parity extension of C₄, and G₂/G₃ collect the
/// vertices at distance 1 from G₁/G₄ respectively.
pub fn extend_partition(partition: &Partition) -> Result<Partition> {
    if partition.part_count() != 3 {
        return Err(Error::precondition(
            "extension expects the merged three-part partition",
        ));
    }
    let n = partition.n();
    match compute_parameters(partition) {
        ParametersOutcome::Equitable(m) if m == merged_parameters(n) => {}
        _ => {
            return Err(Error::precondition(
                "input is not an equitable merged partition with the expected parameters",
            ))
        }
    }
    let n_prime = n + 1;
    guard_space(n_prime)?;
    let g1 = partition.part(0).extend_parity(true)?;
    let g4 = partition.part(2).extend_parity(false)?;
    let size = 1usize << n_prime;
    // 0 unassigned, 1..4 = G1..G4
    let mut class = vec![0u8; size];
    for x in g1.words() {
        class[x.bits() as usize] = 1;
    }
    for x in g4.words() {
        class[x.bits() as usize] = 4;
    }
    for (code, mark) in [(&g1, 2u8), (&g4, 3u8)] {
        for x in code.words() {
            for coord in 1..=n_prime {
                let idx = x.flip(coord).bits() as usize;
                match class[idx] {
                    0 => class[idx] = mark,
                    c if c == mark => {}
                    _ => {
                        // adjacent to both seeds, or a seed vertex adjacent to
                        // the other seed: the input was not a valid merged
                        // partition
                        return Err(Error::precondition(format!(
                            "vertex {} breaks the extended partition",
                            x.flip(coord)
                        )));
                    }
                }
            }
        }
    }
    let mut buckets: Vec<Vec<BinaryWord>> = vec![Vec::new(); 4];
    for (bits, &c) in class.iter().enumerate() {
        if c == 0 {
            return Err(Error::precondition(format!(
                "vertex {} not covered by the extended partition",
                BinaryWord::new(n_prime, bits as u64)?
            )));
        }
        buckets[c as usize - 1].push(BinaryWord::new(n_prime, bits as u64)?);
    }
    let parts = buckets
        .into_iter()
        .map(|words| BinaryCode::from_words(n_prime, words))
        .collect::<Result<Vec<_>>>()?;
    if parts[0].len() != partition.part(0).len() || parts[3].len() != partition.part(2).len() {
        return Err(Error::internal("parity extension changed part sizes"));
    }
    Partition::new(n_prime, parts)
}

/// The 16 mean distance-distribution vectors of a derived partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributionBundle {
    pub n: u32,
    pub sizes: [usize; 4],
    /// `means[i][j][l]` = Ā^{(i+1)(j+1)}_l, exact.
    pub means: Vec<Vec<Vec<Rational64>>>,
}

/// Compute all 16 Ā vectors of a four-part partition.
pub fn distribution_bundle(partition: &Partition) -> Result<DistributionBundle> {
    if partition.part_count() != 4 {
        return Err(Error::usage("distribution bundle expects four parts"));
    }
    let mut means = Vec::with_capacity(4);
    for i in 0..4 {
        let mut row = Vec::with_capacity(4);
        for j in 0..4 {
            let table = mean_distribution(partition.part(i), partition.part(j))?;
            row.push(table.mean().to_vec());
        }
        means.push(row);
    }
    let sizes = [
        partition.part(0).len(),
        partition.part(1).len(),
        partition.part(2).len(),
        partition.part(3).len(),
    ];
    Ok(DistributionBundle {
        n: partition.n(),
        sizes,
        means,
    })
}

/// One named relation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    pub ok: bool,
    pub detail: Option<String>,
}

/// Report of the exact distribution relations on a derived partition.
#[derive(Clone, Debug)]
pub struct RelationsReport {
    pub n: u32,
    pub bundle: DistributionBundle,
    pub checks: Vec<RelationCheck>,
}

impl RelationsReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

impl fmt::Display for RelationsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            write!(
                f,
                "{}: {}",
                check.name,
                if check.ok { "OK" } else { "FAIL" }
            )?;
            if let Some(detail) = &check.detail {
                write!(f, " ({detail})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn rational(v: i64) -> Rational64 {
    Rational64::from_integer(v)
}

/// Verify, in exact rational arithmetic, the distance-distribution identities
/// of the derived partition:
///
/// * Ā^{i2}_l = Ā^{i1}_{n−l};
/// * Ā^{i3}_l = (n−l+1)·Ā^{i1}_{l−1} + (l+1)·Ā^{i1}_{l+1} − Ā^{i2}_l, with
///   out-of-range terms defined as 0 (the neighbor-counting identity; every
///   vertex at distance exactly 1 from C₁ has a unique C₁-neighbor);
/// * Ā^{i4}_l = C(n,l) − Ā^{i1}_l − Ā^{i2}_l − Ā^{i3}_l;
/// * |Cᵢ|·Ā^{ij}_l = |Cⱼ|·Ā^{ji}_l;
///
/// plus the fixed values Ā^{11}_n = 0, Ā^{11}_{n−1} = 1, Ā^{24}_1 = Ā^{42}_1
/// = 0, Ā^{44}_1 = 1, Ā^{34}_1 = 2, and A^4_1(x̄) = 2 for every x̄ ∈ C₃.
pub fn check_distribution_relations(c1: &BinaryCode) -> Result<RelationsReport> {
    let partition = derive_partition(c1)?;
    let n = partition.n();
    let bundle = distribution_bundle(&partition)?;
    let a = &bundle.means;
    let nl = n as usize;
    let mut checks = Vec::new();

    let term = |i: usize, j: usize, l: i64| -> Rational64 {
        if l < 0 || l > nl as i64 {
            Rational64::from_integer(0)
        } else {
            a[i][j][l as usize]
        }
    };

    for i in 0..4 {
        let mut ok = true;
        let mut detail = None;
        for l in 0..=nl {
            if a[i][1][l] != a[i][0][nl - l] {
                ok = false;
                detail = Some(format!("fails at l={l}"));
                break;
            }
        }
        checks.push(RelationCheck {
            name: format!("antipode reflection, i={}", i + 1),
            ok,
            detail,
        });
    }

    for i in 0..4 {
        let mut ok = true;
        let mut detail = None;
        for l in 0..=nl as i64 {
            let expected = rational(n as i64 - l + 1) * term(i, 0, l - 1)
                + rational(l + 1) * term(i, 0, l + 1)
                - term(i, 1, l);
            if term(i, 2, l) != expected {
                ok = false;
                detail = Some(format!("fails at l={l}"));
                break;
            }
        }
        checks.push(RelationCheck {
            name: format!("neighbor convolution, i={}", i + 1),
            ok,
            detail,
        });
    }

    for i in 0..4 {
        let mut ok = true;
        let mut detail = None;
        for l in 0..=nl {
            let expected =
                rational(binomial(n, l as u32) as i64) - a[i][0][l] - a[i][1][l] - a[i][2][l];
            if a[i][3][l] != expected {
                ok = false;
                detail = Some(format!("fails at l={l}"));
                break;
            }
        }
        checks.push(RelationCheck {
            name: format!("binomial complement, i={}", i + 1),
            ok,
            detail,
        });
    }

    {
        let mut ok = true;
        let mut detail = None;
        'outer: for i in 0..4 {
            for j in 0..4 {
                for l in 0..=nl {
                    let lhs = rational(bundle.sizes[i] as i64) * a[i][j][l];
                    let rhs = rational(bundle.sizes[j] as i64) * a[j][i][l];
                    if lhs != rhs {
                        ok = false;
                        detail = Some(format!("fails at i={},j={},l={l}", i + 1, j + 1));
                        break 'outer;
                    }
                }
            }
        }
        checks.push(RelationCheck {
            name: "pair-count symmetry".to_string(),
            ok,
            detail,
        });
    }

    let fixed: [(&str, Rational64, Rational64); 6] = [
        ("Abar11[n] = 0", a[0][0][nl], rational(0)),
        ("Abar11[n-1] = 1", a[0][0][nl - 1], rational(1)),
        ("Abar24[1] = 0", a[1][3][1], rational(0)),
        ("Abar42[1] = 0", a[3][1][1], rational(0)),
        ("Abar44[1] = 1", a[3][3][1], rational(1)),
        ("Abar34[1] = 2", a[2][3][1], rational(2)),
    ];
    for (name, got, want) in fixed {
        checks.push(RelationCheck {
            name: name.into(),
            ok: got == want,
            detail: (got != want).then(|| format!("got {got}")),
        });
    }

    {
        let table34 = mean_distribution(partition.part(2), partition.part(3))?;
        let bad = table34
            .per_word()
            .iter()
            .find(|(_, row)| row[1] != 2)
            .map(|(x, row)| format!("A4_1({x}) = {}", row[1]));
        checks.push(RelationCheck {
            name: "A4_1(x) = 2 for all x in C3".to_string(),
            ok: bad.is_none(),
            detail: bad,
        });
    }

    {
        let mut ok = true;
        let mut detail = None;
        'sum: for i in 0..4 {
            for l in 0..=nl {
                let total: Rational64 = (0..4).map(|j| a[i][j][l]).sum();
                if total != rational(binomial(n, l as u32) as i64) {
                    ok = false;
                    detail = Some(format!("fails at i={},l={l}", i + 1));
                    break 'sum;
                }
            }
        }
        checks.push(RelationCheck {
            name: "level sums equal binomials".to_string(),
            ok,
            detail,
        });
    }

    Ok(RelationsReport { n, bundle, checks })
}

/// Location of the first disagreement between distribution bundles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceWitness {
    /// Index (into the input list) of the disagreeing code.
    pub code_index: usize,
    pub i: usize,
    pub j: usize,
    pub l: usize,
    pub reference: Rational64,
    pub found: Rational64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceOutcome {
    pub agree: bool,
    pub witness: Option<InvarianceWitness>,
}

/// Check that all 16 Ā vectors agree exactly across codes with identical
/// parameters. The first code serves as reference.
pub fn invariance_check(codes: &[BinaryCode]) -> Result<InvarianceOutcome> {
    if codes.len() < 2 {
        return Err(Error::usage("invariance check needs at least two codes"));
    }
    let n = codes[0].length();
    let size = codes[0].len();
    for code in codes {
        if code.length() != n || code.len() != size {
            return Err(Error::usage("codes have different parameters".to_string()));
        }
        validate_seed_code(code).map_err(|e| Error::usage(format!("{e}")))?;
    }
    let reference = distribution_bundle(&derive_partition(&codes[0])?)?;
    for (idx, code) in codes.iter().enumerate().skip(1) {
        let bundle = distribution_bundle(&derive_partition(code)?)?;
        for i in 0..4 {
            for j in 0..4 {
                for l in 0..=n as usize {
                    if bundle.means[i][j][l] != reference.means[i][j][l] {
                        return Ok(InvarianceOutcome {
                            agree: false,
                            witness: Some(InvarianceWitness {
                                code_index: idx,
                                i: i + 1,
                                j: j + 1,
                                l,
                                reference: reference.means[i][j][l],
                                found: bundle.means[i][j][l],
                            }),
                        });
                    }
                }
            }
        }
    }
    Ok(InvarianceOutcome {
        agree: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::hamming;
    use crate::perfect::double_shorten;
    use crate::word::lex_words;

    fn seed5() -> BinaryCode {
        double_shorten(&hamming(3).unwrap()).unwrap()
    }

    #[test]
    fn derive_partition_n5_sizes() {
        let p = derive_partition(&seed5()).unwrap();
        let sizes: Vec<usize> = p.parts().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, [4, 4, 16, 8]);
    }

    #[test]
    fn derived_partition_matches_expected_matrix() {
        let p = derive_partition(&seed5()).unwrap();
        match compute_parameters(&p) {
            ParametersOutcome::Equitable(m) => assert_eq!(m, four_part_parameters(5)),
            ParametersOutcome::NotEquitable(w) => panic!("not equitable: {w}"),
        }
    }

    #[test]
    fn seed_validation_names_failures() {
        let bad_len = BinaryCode::from_words(4, lex_words(4).take(2)).unwrap();
        let err = derive_partition(&bad_len).unwrap_err().to_string();
        assert!(err.contains("2^m - 3"), "{err}");

        let c = seed5();
        let wrong_size = BinaryCode::from_words(5, c.words().iter().take(3).copied()).unwrap();
        let err = derive_partition(&wrong_size).unwrap_err().to_string();
        assert!(err.contains("cardinality"), "{err}");

        let close = BinaryCode::from_words(
            5,
            ["00000", "00011", "11100", "11111"]
                .iter()
                .map(|s| s.parse().unwrap()),
        )
        .unwrap();
        let err = derive_partition(&close).unwrap_err().to_string();
        assert!(err.contains("distance"), "{err}");
    }

    #[test]
    fn two_part_perfect_partition_parameters() {
        let c = hamming(3).unwrap();
        let rest = BinaryCode::from_words(7, lex_words(7).filter(|x| !c.contains(x))).unwrap();
        let p = Partition::new(7, vec![c, rest]).unwrap();
        match compute_parameters(&p) {
            ParametersOutcome::Equitable(m) => {
                assert_eq!(m.rows(), &[vec![0, 7], vec![1, 6]]);
            }
            ParametersOutcome::NotEquitable(w) => panic!("not equitable: {w}"),
        }
    }

    #[test]
    fn random_two_part_partition_yields_witness() {
        // an unbalanced split cannot be equitable; the witness must replay
        let first = BinaryCode::from_words(5, lex_words(5).take(11)).unwrap();
        let second = BinaryCode::from_words(5, lex_words(5).skip(11)).unwrap();
        let p = Partition::new(5, vec![first, second]).unwrap();
        match compute_parameters(&p) {
            ParametersOutcome::Equitable(m) => panic!("unexpectedly equitable: {m}"),
            ParametersOutcome::NotEquitable(w) => {
                // replay the witness by brute force
                let mut row = vec![0u32; 2];
                for coord in 1..=5 {
                    let y = w.vertex.flip(coord);
                    let in_first = p.part(0).contains(&y);
                    row[if in_first { 0 } else { 1 }] += 1;
                }
                assert_eq!(row, w.observed);
                assert_ne!(w.observed, w.expected);
            }
        }
    }

    #[test]
    fn verify_rejects_transposed_matrix() {
        let p = derive_partition(&seed5()).unwrap();
        let m = four_part_parameters(5);
        let transposed = ParameterMatrix::new(
            (0..4)
                .map(|i| (0..4).map(|j| m.row(j)[i]).collect())
                .collect(),
        )
        .unwrap();
        assert!(verify_equitable(&p, &m).unwrap().holds());
        assert!(!verify_equitable(&p, &transposed).unwrap().holds());
    }

    #[test]
    fn verify_dimension_mismatch_is_usage_error() {
        let p = derive_partition(&seed5()).unwrap();
        let wrong = merged_parameters(5);
        assert!(matches!(verify_equitable(&p, &wrong), Err(Error::Usage(_))));
    }

    #[test]
    fn merged_partition_parameters() {
        let p = derive_partition(&seed5()).unwrap();
        let merged = merge_parts(&p, 0, 1).unwrap();
        assert_eq!(merged.part_count(), 3);
        assert_eq!(merged.part(0).len(), 8);
        match compute_parameters(&merged) {
            ParametersOutcome::Equitable(m) => assert_eq!(m, merged_parameters(5)),
            ParametersOutcome::NotEquitable(w) => panic!("not equitable: {w}"),
        }
    }

    #[test]
    fn merged_matrix_symmetric_under_part_swap() {
        let m = merged_parameters(13);
        // swapping the first and third parts leaves the matrix unchanged
        let swap = [2usize, 1, 0];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.row(i)[j], m.row(swap[i])[swap[j]]);
            }
        }
    }

    #[test]
    fn merging_down_to_two_parts_is_not_equitable() {
        let p = derive_partition(&seed5()).unwrap();
        let merged = merge_parts(&p, 0, 1).unwrap();
        let two = merge_parts(&merged, 1, 2).unwrap();
        match compute_parameters(&two) {
            ParametersOutcome::Equitable(m) => panic!("unexpectedly equitable: {m}"),
            ParametersOutcome::NotEquitable(w) => {
                let mut row = vec![0u32; 2];
                for coord in 1..=5 {
                    let y = w.vertex.flip(coord);
                    row[if two.part(0).contains(&y) { 0 } else { 1 }] += 1;
                }
                assert_eq!(row, w.observed);
            }
        }
    }

    #[test]
    fn refinement_symmetric_under_piece_swap_and_rejects_moved_words() {
        use crate::splitgraph::{split_code, SplitResult};
        let p = derive_partition(&seed5()).unwrap();
        let (a, b) = match split_code(p.part(3)).unwrap() {
            SplitResult::Split(s) => (s.part_a, s.part_b),
            SplitResult::OddCycle(c) => panic!("n=5 splits, got {c}"),
        };
        for (x, y) in [(&a, &b), (&b, &a)] {
            let refined = split_refine(&p, x, y).unwrap();
            assert!(verify_equitable(&refined, &refined_parameters(5))
                .unwrap()
                .holds());
        }
        // moving one word between the pieces breaks the distance-3
        // precondition: the moved word's unique in-part neighbor follows it
        let moved = a.words()[0];
        let a_less =
            BinaryCode::from_words(5, a.words().iter().copied().filter(|&w| w != moved)).unwrap();
        let b_more = BinaryCode::from_words(5, b.words().iter().copied().chain([moved])).unwrap();
        let err = split_refine(&p, &a_less, &b_more).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)), "{err}");
    }

    #[test]
    fn parameters_invariant_under_coordinate_permutation() {
        let p = derive_partition(&seed5()).unwrap();
        let perm = [3u32, 5, 1, 2, 4];
        let permuted = Partition::new(
            5,
            p.parts()
                .iter()
                .map(|c| c.permuted(&perm).unwrap())
                .collect(),
        )
        .unwrap();
        let a = compute_parameters(&p);
        let b = compute_parameters(&permuted);
        assert_eq!(a.matrix().unwrap(), b.matrix().unwrap());
    }

    #[test]
    fn partition_validation_catches_overlap_and_gaps() {
        let c = seed5();
        let err = Partition::new(5, vec![c.clone(), c.clone()]).unwrap_err();
        assert!(matches!(err, Error::Usage(_)));
        let small = BinaryCode::from_words(5, lex_words(5).take(4)).unwrap();
        let err = Partition::new(
            5,
            vec![
                small.clone(),
                small.translate(&"10000".parse().unwrap()).unwrap(),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, Error::Usage(_)));
    }
}
