//! Core domain types shared by every factorization engine.
//!
//! Words are plain byte slices; symbols are compared by numeric byte value.

/// Inclusive interval of character positions covered by one factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FactorInterval {
    /// 0-based index of the first character.
    pub start: usize,
    /// 0-based index of the last character (inclusive).
    pub end: usize,
}

// a factor always covers at least one character, so there is no is_empty
#[allow(clippy::len_without_is_empty)]
impl FactorInterval {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(start <= end);
        FactorInterval { start, end }
    }

    /// Number of characters covered.
    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    /// The factor's bytes within `w`.
    pub fn bytes<'a>(&self, w: &'a [u8]) -> &'a [u8] {
        &w[self.start..=self.end]
    }
}

/// A Chen-Fox-Lyndon factorization: a left-to-right tiling of the word into
/// Lyndon factors whose sequence is lexicographically nonincreasing.
pub type Factorization = Vec<FactorInterval>;

/// Length of the longest common prefix of the suffixes of `w` starting at
/// `i` and `j`. Both indices may equal `w.len()` (empty suffix).
pub fn lcp(w: &[u8], i: usize, j: usize) -> usize {
    debug_assert!(i <= w.len() && j <= w.len());
    w[i..]
        .iter()
        .zip(&w[j..])
        .take_while(|(a, b)| a == b)
        .count()
}
