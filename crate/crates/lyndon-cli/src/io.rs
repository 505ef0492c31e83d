//! Input ingestion and the RLE text format.
//!
//! The RLE text format stores one run per line as
//! `SYMBOL_DECIMAL SPACE LENGTH_DECIMAL` with LF line endings, e.g. `97 3`
//! for three `a` bytes. FASTA ingestion drops header lines (starting with
//! `>`) and strips all whitespace from sequence lines, concatenating every
//! record's bytes.

use anyhow::{bail, Context, Result};
use lyndon::{Run, RleString};
use std::io::Read;
use std::path::Path;

/// Reads the named file, or all of stdin when `path` is `None` or `-`.
pub fn read_input(path: Option<&Path>) -> Result<Vec<u8>> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read(p).with_context(|| format!("cannot read {}", p.display()))
        }
        _ => {
            let mut buf = Vec::new();
            std::io::stdin()
                .read_to_end(&mut buf)
                .context("cannot read stdin")?;
            Ok(buf)
        }
    }
}

/// Extracts the concatenated sequence bytes from FASTA input. The first
/// non-whitespace byte must start a header line.
pub fn parse_fasta(bytes: &[u8]) -> Result<Vec<u8>> {
    match bytes.iter().find(|b| !b.is_ascii_whitespace()) {
        None => Ok(Vec::new()),
        Some(b'>') => {
            let mut seq = Vec::new();
            for line in bytes.split(|&b| b == b'\n') {
                if line.first() == Some(&b'>') {
                    continue;
                }
                seq.extend(line.iter().filter(|b| !b.is_ascii_whitespace()));
            }
            Ok(seq)
        }
        Some(_) => bail!("malformed FASTA: input does not start with a '>' header"),
    }
}

/// Parses the RLE text format, enforcing the run invariants.
pub fn parse_rle_text(bytes: &[u8]) -> Result<RleString> {
    let text = std::str::from_utf8(bytes).context("RLE file is not valid UTF-8 text")?;
    let mut runs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (sym, len) = match (fields.next(), fields.next(), fields.next()) {
            (Some(s), Some(l), None) => (s, l),
            _ => bail!("RLE line {}: expected \"SYMBOL LENGTH\"", lineno + 1),
        };
        let symbol: u8 = sym
            .parse()
            .with_context(|| format!("RLE line {}: bad symbol {sym:?}", lineno + 1))?;
        let len: usize = len
            .parse()
            .with_context(|| format!("RLE line {}: bad length {len:?}", lineno + 1))?;
        runs.push(Run::new(symbol, len));
    }
    RleString::from_runs(runs).context("invalid RLE input")
}

/// Renders an RLE string in the text format.
pub fn format_rle_text(rle: &RleString) -> String {
    let mut out = String::new();
    for run in rle.runs() {
        out.push_str(&format!("{} {}\n", run.symbol, run.len));
    }
    out
}
