//! Reading and writing code files.
//!
//! The file format is UTF-8 text with one word per line as a string over
//! {0,1} (or {0,1,2,3} for quaternary codes). A line may carry an optional
//! multiplicity suffix ` x<k>` with k ≥ 2. Lines starting with `#` are
//! comments, blank lines are ignored, and all words in a file must have equal
//! length. The canonical writer emits words in lexicographic order.
//!
//! Partitions are serialized as concatenated code files with
//! `## part <k>` separator lines.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::code::{BinaryCode, MultisetCode, QuaternaryCode};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::word::{BinaryWord, QuaternaryWord};

/// Result of parsing a code file: a plain set when no line carries a
/// multiplicity marker, a multiset otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedCode {
    Binary(BinaryCode),
    Multiset(MultisetCode),
}

impl ParsedCode {
    /// View as a multiset either way.
    pub fn into_multiset(self) -> MultisetCode {
        match self {
            ParsedCode::Binary(c) => MultisetCode::from(&c),
            ParsedCode::Multiset(m) => m,
        }
    }

    /// View as a plain set; multiplicities above one are a usage error.
    pub fn into_binary(self) -> Result<BinaryCode> {
        match self {
            ParsedCode::Binary(c) => Ok(c),
            ParsedCode::Multiset(m) => m.into_set(),
        }
    }

    pub fn length(&self) -> u32 {
        match self {
            ParsedCode::Binary(c) => c.length(),
            ParsedCode::Multiset(m) => m.length(),
        }
    }
}

fn split_multiplicity(line: &str, lineno: usize) -> Result<(&str, u32)> {
    match line.split_once(' ') {
        None => Ok((line, 1)),
        Some((word, rest)) => {
            let rest = rest.trim();
            let Some(count) = rest.strip_prefix('x') else {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("expected multiplicity suffix \" x<k>\", got {rest:?}"),
                });
            };
            let mult: u32 = count.parse().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("invalid multiplicity {count:?}"),
            })?;
            if mult < 2 {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("multiplicity suffix must be at least 2, got {mult}"),
                });
            }
            Ok((word, mult))
        }
    }
}

/// Parse code-file text. Multiplicity markers turn the result into a
/// multiset; duplicate plain lines accumulate as multiplicities too.
pub fn parse_code(text: &str) -> Result<ParsedCode> {
    let mut entries: Vec<(BinaryWord, u32)> = Vec::new();
    let mut length: Option<u32> = None;
    let mut saw_marker = false;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (word_str, mult) = split_multiplicity(line, lineno)?;
        saw_marker |= mult > 1;
        let word: BinaryWord = word_str.parse().map_err(|e| Error::Parse {
            line: lineno,
            message: format!("{e}"),
        })?;
        match length {
            None => length = Some(word.length()),
            Some(n) if n != word.length() => {
                return Err(Error::Format(format!(
                    "line {lineno}: word length {} differs from {n}",
                    word.length()
                )));
            }
            _ => {}
        }
        entries.push((word, mult));
    }
    let Some(length) = length else {
        return Err(Error::Format("file contains no codewords".into()));
    };
    let multiset = MultisetCode::from_entries(length, entries)?;
    let duplicated = multiset.entries().iter().any(|&(_, m)| m > 1);
    if saw_marker || duplicated {
        Ok(ParsedCode::Multiset(multiset))
    } else {
        Ok(ParsedCode::Binary(multiset.into_set()?))
    }
}

pub fn read_code(path: impl AsRef<Path>) -> Result<ParsedCode> {
    parse_code(&fs::read_to_string(path)?)
}

/// Read a file that must be a plain set (no multiplicities).
pub fn read_binary_code(path: impl AsRef<Path>) -> Result<BinaryCode> {
    read_code(path)?.into_binary()
}

/// Read a file as a multiset (plain sets come back with multiplicity 1).
pub fn read_multiset_code(path: impl AsRef<Path>) -> Result<MultisetCode> {
    Ok(read_code(path)?.into_multiset())
}

/// Render a plain code in canonical form, preceded by the given comment
/// lines (written as `# ...`).
pub fn format_binary_code(code: &BinaryCode, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    for x in code.words() {
        let _ = writeln!(out, "{x}");
    }
    out
}

pub fn format_multiset_code(code: &MultisetCode, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    for &(x, m) in code.entries() {
        if m == 1 {
            let _ = writeln!(out, "{x}");
        } else {
            let _ = writeln!(out, "{x} x{m}");
        }
    }
    out
}

pub fn write_binary_code(
    code: &BinaryCode,
    path: impl AsRef<Path>,
    comments: &[String],
) -> Result<()> {
    fs::write(path, format_binary_code(code, comments))?;
    Ok(())
}

pub fn write_multiset_code(
    code: &MultisetCode,
    path: impl AsRef<Path>,
    comments: &[String],
) -> Result<()> {
    fs::write(path, format_multiset_code(code, comments))?;
    Ok(())
}

pub fn parse_quaternary_code(text: &str) -> Result<QuaternaryCode> {
    let mut words: Vec<QuaternaryWord> = Vec::new();
    let mut length: Option<u32> = None;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let word: QuaternaryWord = line.parse().map_err(|e| Error::Parse {
            line: lineno,
            message: format!("{e}"),
        })?;
        match length {
            None => length = Some(word.length()),
            Some(n) if n != word.length() => {
                return Err(Error::Format(format!(
                    "line {lineno}: word length {} differs from {n}",
                    word.length()
                )));
            }
            _ => {}
        }
        words.push(word);
    }
    let Some(length) = length else {
        return Err(Error::Format("file contains no codewords".into()));
    };
    let count = words.len();
    let code = QuaternaryCode::from_words(length, words)?;
    if code.len() != count {
        return Err(Error::Format("duplicate quaternary codeword".into()));
    }
    Ok(code)
}

pub fn read_quaternary_code(path: impl AsRef<Path>) -> Result<QuaternaryCode> {
    parse_quaternary_code(&fs::read_to_string(path)?)
}

pub fn format_quaternary_code(code: &QuaternaryCode, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    for x in code.words() {
        let _ = writeln!(out, "{x}");
    }
    out
}

pub fn write_quaternary_code(
    code: &QuaternaryCode,
    path: impl AsRef<Path>,
    comments: &[String],
) -> Result<()> {
    fs::write(path, format_quaternary_code(code, comments))?;
    Ok(())
}

/// Serialize a partition as concatenated code files with part separators.
pub fn format_partition(partition: &Partition, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    for (k, part) in partition.parts().iter().enumerate() {
        let _ = writeln!(out, "## part {}", k + 1);
        for x in part.words() {
            let _ = writeln!(out, "{x}");
        }
    }
    out
}

pub fn write_partition(
    partition: &Partition,
    path: impl AsRef<Path>,
    comments: &[String],
) -> Result<()> {
    fs::write(path, format_partition(partition, comments))?;
    Ok(())
}

/// Parse a serialized partition; the parts must form a genuine partition of
/// the full space.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let mut groups: Vec<Vec<BinaryWord>> = Vec::new();
    let mut length: Option<u32> = None;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if let Some(rest) = line.strip_prefix("## part") {
            let expected = groups.len() + 1;
            let label: usize = rest.trim().parse().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("invalid part label {rest:?}"),
            })?;
            if label != expected {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("expected part {expected}, found part {label}"),
                });
            }
            groups.push(Vec::new());
            continue;
        }
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let word: BinaryWord = line.parse().map_err(|e| Error::Parse {
            line: lineno,
            message: format!("{e}"),
        })?;
        match length {
            None => length = Some(word.length()),
            Some(n) if n != word.length() => {
                return Err(Error::Format(format!(
                    "line {lineno}: word length {} differs from {n}",
                    word.length()
                )));
            }
            _ => {}
        }
        match groups.last_mut() {
            Some(g) => g.push(word),
            None => {
                return Err(Error::Parse {
                    line: lineno,
                    message: "codeword before the first \"## part\" separator".to_string(),
                })
            }
        }
    }
    let Some(length) = length else {
        return Err(Error::Format("partition file contains no codewords".into()));
    };
    let parts = groups
        .into_iter()
        .map(|g| BinaryCode::from_words(length, g))
        .collect::<Result<Vec<_>>>()?;
    Partition::new(length, parts)
}

pub fn read_partition(path: impl AsRef<Path>) -> Result<Partition> {
    parse_partition(&fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplicity_suffix_parses() {
        let parsed = parse_code("# comment\n0000000000000111 x2\n0000000011000001\n").unwrap();
        let m = match parsed {
            ParsedCode::Multiset(m) => m,
            _ => panic!("expected multiset"),
        };
        assert_eq!(m.total_multiplicity(), 3);
        assert_eq!(m.multiplicity(&"0000000000000111".parse().unwrap()), 2);
    }

    #[test]
    fn empty_file_is_an_error() {
        assert!(matches!(parse_code("# nothing\n"), Err(Error::Format(_))));
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let err = parse_code("000\n0x0\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn inconsistent_lengths_rejected() {
        assert!(matches!(parse_code("000\n0000\n"), Err(Error::Format(_))));
    }

    #[test]
    fn bad_multiplicities_rejected() {
        assert!(parse_code("000 x1\n").is_err());
        assert!(parse_code("000 y2\n").is_err());
        assert!(parse_code("000 x\n").is_err());
    }

    #[test]
    fn roundtrip_is_identity() {
        let text = "0011 x3\n0101\n1010\n1100 x2\n";
        let parsed = parse_code(text).unwrap().into_multiset();
        let written = format_multiset_code(&parsed, &[]);
        assert_eq!(written, text);
        assert_eq!(parse_code(&written).unwrap().into_multiset(), parsed);
    }

    #[test]
    fn partition_roundtrip() {
        use crate::generators::hamming;
        use crate::partition::derive_partition;
        use crate::perfect::double_shorten;
        let seed = double_shorten(&hamming(3).unwrap()).unwrap();
        let partition = derive_partition(&seed).unwrap();
        let text = format_partition(&partition, &["derived".into()]);
        assert!(text.contains("## part 4"));
        let parsed = parse_partition(&text).unwrap();
        assert_eq!(parsed, partition);
        // labels must be consecutive
        assert!(parse_partition("## part 2\n00\n## part 1\n01\n10\n11\n").is_err());
    }

    #[test]
    fn duplicate_plain_lines_become_multiplicity() {
        let parsed = parse_code("010\n010\n").unwrap();
        match parsed {
            ParsedCode::Multiset(m) => {
                assert_eq!(m.multiplicity(&"010".parse().unwrap()), 2)
            }
            _ => panic!("expected multiset"),
        }
    }
}
