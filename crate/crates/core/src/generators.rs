//! Deterministic constructions of test inputs: Hamming codes, shortenings,
//! linear and symbol-permuted MDS codes, and pair-block perfect codes.
//!
//! Variety comes only from seeded symbol permutations, so every generated
//! object is reproducible from its specification.

use std::fmt;

use crate::code::{BinaryCode, QuaternaryCode};
use crate::error::{Error, Result, Verdict};
use crate::mds::{is_mds, pair_block_code};
use crate::perfect::{double_shorten, is_1perfect, shorten_at};
use crate::word::BinaryWord;
use crate::DEFAULT_SPACE_BUDGET;

/// The linear 1-perfect code of length 2^m − 1 whose parity checks are all
/// nonzero m-bit columns in lexicographic order (the column at coordinate j
/// is the binary representation of j).
pub fn hamming(m: u32) -> Result<BinaryCode> {
    if !(2..=5).contains(&m) {
        return Err(Error::usage("hamming construction supports m in 2..=5"));
    }
    let n = (1u32 << m) - 1;
    let data_positions: Vec<u32> = (1..=n).filter(|j| !j.is_power_of_two()).collect();
    let k = data_positions.len() as u32;
    let mut words = Vec::with_capacity(1usize << k);
    for message in 0u64..(1u64 << k) {
        let mut bits = 0u64;
        for (b, &j) in data_positions.iter().enumerate() {
            if message >> b & 1 == 1 {
                bits |= 1u64 << (j - 1);
            }
        }
        for i in 0..m {
            let p = 1u32 << i;
            let mut parity = 0u64;
            for j in 1..=n {
                if j != p && j & p != 0 {
                    parity ^= bits >> (j - 1) & 1;
                }
            }
            bits |= parity << (p - 1);
        }
        words.push(BinaryWord::new(n, bits)?);
    }
    let code = BinaryCode::from_words(n, words)?;
    if code.len() != 1usize << k {
        return Err(Error::internal("hamming generation collided"));
    }
    if (1u64 << n) <= DEFAULT_SPACE_BUDGET {
        if let Verdict::Fails(w) = is_1perfect(&code)? {
            return Err(Error::internal(format!(
                "hamming construction failed verification: {w}"
            )));
        }
    }
    Ok(code)
}

/// Group structure imposed on the symbols {0,1,2,3}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupStructure {
    /// Symbols as integers modulo 4.
    Z4,
    /// Symbols as pairs of bits under XOR.
    Z2xZ2,
}

impl fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupStructure::Z4 => write!(f, "z4"),
            GroupStructure::Z2xZ2 => write!(f, "z2z2"),
        }
    }
}

/// The MDS code {x : Σ xᵢ = 0} in the chosen group, of size 4^(m−1).
pub fn linear_mds(m: u32, structure: GroupStructure) -> Result<QuaternaryCode> {
    if m < 2 {
        return Err(Error::usage("linear MDS codes need m >= 2"));
    }
    if m > 12 {
        return Err(Error::usage("m above 12 would materialize 4^(m-1) words"));
    }
    let mut words = Vec::with_capacity(1usize << (2 * (m - 1)));
    for prefix in crate::word::lex_quaternary_words(m - 1) {
        let mut acc = 0u8;
        for pos in 1..=m - 1 {
            acc = match structure {
                GroupStructure::Z4 => (acc + prefix.digit(pos)) % 4,
                GroupStructure::Z2xZ2 => acc ^ prefix.digit(pos),
            };
        }
        let last = match structure {
            GroupStructure::Z4 => (4 - acc) % 4,
            GroupStructure::Z2xZ2 => acc,
        };
        words.push(prefix.append(last)?);
    }
    let code = QuaternaryCode::from_words(m, words)?;
    if m <= 4 {
        if let Verdict::Fails(w) = is_mds(&code) {
            return Err(Error::internal(format!(
                "linear construction failed verification: {w}"
            )));
        }
    }
    Ok(code)
}

/// Apply one symbol permutation per coordinate. Each permutation must be a
/// bijection of {0,1,2,3}; MDS and double-MDS properties are preserved.
pub fn permute_symbols(code: &QuaternaryCode, permutations: &[[u8; 4]]) -> Result<QuaternaryCode> {
    let m = code.length();
    if permutations.len() != m as usize {
        return Err(Error::usage(format!(
            "need {m} permutations, got {}",
            permutations.len()
        )));
    }
    for p in permutations {
        let mut seen = [false; 4];
        for &v in p {
            if v > 3 || seen[v as usize] {
                return Err(Error::usage(format!("{p:?} is not a bijection of 0..=3")));
            }
            seen[v as usize] = true;
        }
    }
    QuaternaryCode::from_words(
        m,
        code.words().iter().map(|w| {
            let mut out = *w;
            for pos in 1..=m {
                out = out.with_digit(pos, permutations[pos as usize - 1][w.digit(pos) as usize]);
            }
            out
        }),
    )
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Seeded per-coordinate symbol permutations (Fisher–Yates over a splitmix
/// stream), identical across platforms.
pub fn seeded_symbol_permutations(m: u32, seed: u64) -> Vec<[u8; 4]> {
    let mut state = seed;
    (0..m)
        .map(|_| {
            let mut p = [0u8, 1, 2, 3];
            for i in (1..4usize).rev() {
                let j = (splitmix(&mut state) % (i as u64 + 1)) as usize;
                p.swap(i, j);
            }
            p
        })
        .collect()
}

/// A 1-perfect code of length 4m−1 from the pair-block construction over an
/// MDS code; feeds the shortening pipeline with non-linear inputs.
pub fn phelps_perfect(m: u32, code: &QuaternaryCode, inner: &BinaryCode) -> Result<BinaryCode> {
    if code.length() != m {
        return Err(Error::LengthMismatch {
            left: m,
            right: code.length(),
        });
    }
    if let Verdict::Fails(w) = is_mds(code) {
        return Err(Error::precondition(format!("not an MDS code: {w}")));
    }
    let result = pair_block_code(code, inner)?;
    if (1u64 << result.length()) <= DEFAULT_SPACE_BUDGET {
        if let Verdict::Fails(w) = is_1perfect(&result)? {
            return Err(Error::internal(format!(
                "pair-block construction failed verification: {w}"
            )));
        }
    }
    Ok(result)
}

/// Declarative description of a generated object, for reproducible runs and
/// provenance headers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorSpec {
    Hamming {
        m: u32,
    },
    DoubleShortenedHamming {
        m: u32,
        coords: Option<(u32, u32)>,
    },
    LinearMds {
        m: u32,
        structure: GroupStructure,
    },
    PermutedMds {
        m: u32,
        structure: GroupStructure,
        seed: u64,
    },
    PhelpsPerfect {
        m: u32,
        seed: u64,
    },
}

/// What a generator produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorOutput {
    Binary(BinaryCode),
    Quaternary(QuaternaryCode),
}

impl GeneratorSpec {
    /// One-line provenance description.
    pub fn describe(&self) -> String {
        match self {
            GeneratorSpec::Hamming { m } => format!("hamming m={m}"),
            GeneratorSpec::DoubleShortenedHamming { m, coords: None } => {
                format!("double-shortened-hamming m={m}")
            }
            GeneratorSpec::DoubleShortenedHamming {
                m,
                coords: Some((a, b)),
            } => format!("double-shortened-hamming m={m} coords={a},{b}"),
            GeneratorSpec::LinearMds { m, structure } => {
                format!("linear-mds m={m} structure={structure}")
            }
            GeneratorSpec::PermutedMds { m, structure, seed } => {
                format!("permuted-mds m={m} structure={structure} seed={seed}")
            }
            GeneratorSpec::PhelpsPerfect { m, seed } => {
                format!("phelps-perfect m={m} seed={seed}")
            }
        }
    }

    pub fn build(&self) -> Result<GeneratorOutput> {
        match *self {
            GeneratorSpec::Hamming { m } => Ok(GeneratorOutput::Binary(hamming(m)?)),
            GeneratorSpec::DoubleShortenedHamming { m, coords } => {
                let base = hamming(m)?;
                let code = match coords {
                    None => double_shorten(&base)?,
                    Some((a, b)) => shorten_at(&base, &[a, b])?,
                };
                crate::partition::validate_seed_code(&code)?;
                Ok(GeneratorOutput::Binary(code))
            }
            GeneratorSpec::LinearMds { m, structure } => {
                Ok(GeneratorOutput::Quaternary(linear_mds(m, structure)?))
            }
            GeneratorSpec::PermutedMds { m, structure, seed } => {
                let base = linear_mds(m, structure)?;
                let permuted = permute_symbols(&base, &seeded_symbol_permutations(m, seed))?;
                if let Verdict::Fails(w) = is_mds(&permuted) {
                    return Err(Error::internal(format!(
                        "symbol permutation broke the MDS property: {w}"
                    )));
                }
                Ok(GeneratorOutput::Quaternary(permuted))
            }
            GeneratorSpec::PhelpsPerfect { m, seed } => {
                if !(m == 2 || m == 4 || m == 8) {
                    return Err(Error::usage(
                        "pair-block perfect codes need an inner 1-perfect code: m in {2, 4, 8}",
                    ));
                }
                let base = linear_mds(m, GroupStructure::Z4)?;
                let mds = permute_symbols(&base, &seeded_symbol_permutations(m, seed))?;
                let inner = if m == 2 {
                    BinaryCode::from_words(1, ["0".parse()?])?
                } else {
                    let s = m.trailing_zeros();
                    hamming(s)?
                };
                Ok(GeneratorOutput::Binary(phelps_perfect(m, &mds, &inner)?))
            }
        }
    }
}
