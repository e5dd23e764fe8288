//! Codebook text files.
//!
//! ```text
//! # n=6 k=3 generator=1000,B220,D330,1000
//! 1000,B220,D330,1000,0000,0000<TAB>TTTTTTTT...
//! ```
//!
//! One header line, then one line per codeword: comma-separated hex words,
//! a tab, and the DNA string of length 8n.

use std::fmt;
use std::str::FromStr;

use crate::code::SkewCyclicCode;
use crate::r16::R16Elem;
use crate::skewpoly::SkewPoly;
use crate::{Error, Result};

use super::codeword_to_dna;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodebookEntry {
    pub codeword: Vec<R16Elem>,
    pub dna: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codebook {
    pub n: usize,
    pub k: usize,
    pub generator: SkewPoly,
    pub entries: Vec<CodebookEntry>,
}

impl Codebook {
    pub fn new(
        code: &SkewCyclicCode,
        codewords: impl IntoIterator<Item = Vec<R16Elem>>,
    ) -> Codebook {
        let entries = codewords
            .into_iter()
            .map(|codeword| CodebookEntry {
                dna: codeword_to_dna(&codeword),
                codeword,
            })
            .collect();
        Codebook {
            n: code.n(),
            k: code.k(),
            generator: code.generator().clone(),
            entries,
        }
    }

    /// 1-based line numbers (header is line 1) whose DNA field does not match
    /// the DNA image of the codeword field.
    pub fn inconsistent_lines(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| codeword_to_dna(&e.codeword) != e.dna)
            .map(|(i, _)| i + 2)
            .collect()
    }
}

impl fmt::Display for Codebook {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "# n={} k={} generator={}",
            self.n, self.k, self.generator
        )?;
        for e in &self.entries {
            let words: Vec<String> = e.codeword.iter().map(|x| x.to_hex()).collect();
            writeln!(f, "{}\t{}", words.join(","), e.dna)?;
        }
        Ok(())
    }
}

fn header_field<'a>(header: &'a str, key: &str) -> Result<&'a str> {
    header
        .split_whitespace()
        .find_map(|kv| kv.strip_prefix(key).and_then(|v| v.strip_prefix('=')))
        .ok_or_else(|| Error::Format(format!("header is missing {key}=")))
}

impl FromStr for Codebook {
    type Err = Error;

    fn from_str(s: &str) -> Result<Codebook> {
        let mut lines = s.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::Format("empty codebook".into()))?;
        let header = header
            .strip_prefix('#')
            .ok_or_else(|| Error::Format("first line must be a '#' header".into()))?;
        let n: usize = header_field(header, "n")?
            .parse()
            .map_err(|_| Error::Format("n is not an integer".into()))?;
        let k: usize = header_field(header, "k")?
            .parse()
            .map_err(|_| Error::Format("k is not an integer".into()))?;
        let generator: SkewPoly = header_field(header, "generator")?
            .parse()
            .map_err(|e| Error::Format(format!("generator: {e}")))?;

        let mut entries = Vec::new();
        for (lineno, line) in lines {
            let lineno = lineno + 1;
            let (words, dna) = line
                .split_once('\t')
                .ok_or_else(|| Error::Format(format!("line {lineno}: missing tab separator")))?;
            let codeword = words
                .split(',')
                .map(str::parse)
                .collect::<Result<Vec<R16Elem>>>()
                .map_err(|e| Error::Format(format!("line {lineno}: {e}")))?;
            if codeword.len() != n {
                return Err(Error::Format(format!(
                    "line {lineno}: {} symbols, expected {n}",
                    codeword.len()
                )));
            }
            let dna = dna.trim();
            if dna.len() != 8 * n || !dna.bytes().all(|b| b"ACGT".contains(&b)) {
                return Err(Error::Format(format!(
                    "line {lineno}: DNA field must be {} letters over ACGT",
                    8 * n
                )));
            }
            entries.push(CodebookEntry {
                codeword,
                dna: dna.to_string(),
            });
        }
        Ok(Codebook {
            n,
            k,
            generator,
            entries,
        })
    }
}
