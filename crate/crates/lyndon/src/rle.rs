//! Run-length encoding of byte strings.

use std::fmt;

/// One maximal run: `len` copies of `symbol`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Run {
    pub symbol: u8,
    pub len: usize,
}

impl Run {
    pub fn new(symbol: u8, len: usize) -> Self {
        Run { symbol, len }
    }
}

/// A run-length encoded string. Every run is nonempty and adjacent runs
/// carry distinct symbols, so an `RleString` is always the canonical
/// encoding of its decoded word.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RleString {
    runs: Vec<Run>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RleError {
    /// The run at this index has length zero.
    EmptyRun(usize),
    /// The runs at this index and the next carry the same symbol.
    EqualAdjacent(usize),
}

impl fmt::Display for RleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RleError::EmptyRun(i) => write!(f, "run {i} has zero length"),
            RleError::EqualAdjacent(i) => {
                write!(f, "runs {i} and {} carry the same symbol", i + 1)
            }
        }
    }
}

impl std::error::Error for RleError {}

impl RleString {
    /// Encodes `w` as maximal runs.
    pub fn encode(w: &[u8]) -> Self {
        let mut runs: Vec<Run> = Vec::new();
        for &b in w {
            match runs.last_mut() {
                Some(run) if run.symbol == b => run.len += 1,
                _ => runs.push(Run::new(b, 1)),
            }
        }
        RleString { runs }
    }

    /// Builds an RLE string from raw runs, rejecting zero-length runs and
    /// equal adjacent symbols.
    pub fn from_runs(runs: Vec<Run>) -> Result<Self, RleError> {
        for (i, run) in runs.iter().enumerate() {
            if run.len == 0 {
                return Err(RleError::EmptyRun(i));
            }
        }
        for (i, pair) in runs.windows(2).enumerate() {
            if pair[0].symbol == pair[1].symbol {
                return Err(RleError::EqualAdjacent(i));
            }
        }
        Ok(RleString { runs })
    }

    /// Decodes back to the underlying byte string.
    pub fn decode(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.decoded_len());
        for run in &self.runs {
            out.resize(out.len() + run.len, run.symbol);
        }
        out
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    /// Number of runs.
    pub fn run_count(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Total number of characters in the decoded string.
    pub fn decoded_len(&self) -> usize {
        self.runs.iter().map(|r| r.len).sum()
    }
}
