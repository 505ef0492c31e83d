//! Brute-force reference implementations. These are deliberately simple and
//! slow (quadratic to cubic) and serve as ground truth for the optimized
//! engines in differential tests and in the `verify` command.

use crate::types::{FactorInterval, Factorization};

/// True iff `w` is strictly smaller than every one of its proper rotations.
///
/// Panics on the empty word, which is neither a Lyndon word nor a rotation
/// subject.
pub fn is_lyndon(w: &[u8]) -> bool {
    assert!(!w.is_empty(), "the empty word has no rotations");
    (1..w.len()).all(|i| {
        let rotation = w[i..].iter().chain(&w[..i]);
        w.iter().lt(rotation)
    })
}

/// The factorization computed by repeatedly stripping the longest prefix
/// that is a Lyndon word, each found by exhaustive search.
pub fn cfl(w: &[u8]) -> Factorization {
    let mut out = Vec::new();
    let mut start = 0;
    while start < w.len() {
        let rest = &w[start..];
        let mut longest = 1;
        for p in (1..=rest.len()).rev() {
            if is_lyndon(&rest[..p]) {
                longest = p;
                break;
            }
        }
        out.push(FactorInterval::new(start, start + longest - 1));
        start += longest;
    }
    out
}

/// Length of the longest proper prefix of `w` that is also a suffix.
pub fn longest_border(w: &[u8]) -> usize {
    assert!(!w.is_empty(), "border of the empty word is undefined");
    (1..w.len())
        .rev()
        .find(|&b| w[..b] == w[w.len() - b..])
        .unwrap_or(0)
}

/// Structural validity of `factors` as a factorization of `w`: the
/// intervals tile `[0, |w|-1]` contiguously and the factor substrings are
/// lexicographically nonincreasing. Runs in O(|w|); does not re-check that
/// each factor is a Lyndon word (use [`is_lyndon`] for that).
pub fn validate_cfl(w: &[u8], factors: &[FactorInterval]) -> Result<(), String> {
    if w.is_empty() {
        return if factors.is_empty() {
            Ok(())
        } else {
            Err("nonempty factorization of the empty word".to_string())
        };
    }
    let mut expected = 0usize;
    for (idx, f) in factors.iter().enumerate() {
        if f.start != expected {
            return Err(format!(
                "factor {idx} starts at {} instead of {expected}",
                f.start
            ));
        }
        if f.end < f.start || f.end >= w.len() {
            return Err(format!("factor {idx} has invalid end {}", f.end));
        }
        expected = f.end + 1;
    }
    if expected != w.len() {
        return Err(format!("factors cover {expected} of {} characters", w.len()));
    }
    for idx in 1..factors.len() {
        if factors[idx - 1].bytes(w) < factors[idx].bytes(w) {
            return Err(format!("factor {idx} is larger than its predecessor"));
        }
    }
    Ok(())
}
