//! Baseline linear-time factorization engines.
//!
//! [`cfl_duval`] is the classic left-to-right scan in constant auxiliary
//! space. [`cfl_duval_lcp`] is an equivalent reformulation that drives the
//! scan with longest-common-prefix jumps; it produces identical output and
//! is the shape the run-skipping engine builds on.

use crate::count::Count;
use crate::types::{lcp, FactorInterval, Factorization};
use std::cmp::Ordering;

/// Computes the factorization of `w` with a single left-to-right scan.
///
/// Loop state: `k` is the start of the still unfactored suffix, `j` the scan
/// frontier, and `i` trails `j` so that `j - i` is the length of the current
/// candidate factor (1-based presentations start `i` and `j` one position
/// later; here all indices are 0-based). Emitted factors have length
/// `j - i`, repeated while `k <= i`.
pub fn cfl_duval(w: &[u8]) -> Factorization {
    let mut out = Vec::new();
    duval_into(w, 0, &mut out, &mut ());
    out
}

/// Like [`cfl_duval`], also returning the number of symbol comparisons
/// performed. The count is at most `2 * w.len()`.
pub fn cfl_duval_counted(w: &[u8]) -> (Factorization, u64) {
    let mut out = Vec::new();
    let mut comparisons = 0u64;
    duval_into(w, 0, &mut out, &mut comparisons);
    (out, comparisons)
}

pub(crate) fn duval_into<C: Count>(
    w: &[u8],
    base: usize,
    out: &mut Factorization,
    comparisons: &mut C,
) {
    let n = w.len();
    let mut k = 0;
    while k < n {
        let mut i = k;
        let mut j = k + 1;
        while j < n {
            comparisons.add(1);
            match w[i].cmp(&w[j]) {
                Ordering::Less => i = k,
                Ordering::Equal => i += 1,
                Ordering::Greater => break,
            }
            j += 1;
        }
        let len = j - i;
        while k <= i {
            out.push(FactorInterval::new(base + k, base + k + len - 1));
            k += len;
        }
    }
}

/// Computes the factorization by repeated lcp evaluation.
///
/// For the unfactored suffix `v`, a frontier `j` advances until `v[j..]`
/// precedes `v`: with `h = lcp(v, v[j..])`, either `j + h` reaches the end
/// or `v[h] < v[j + h]` keeps `v` smaller and `j` jumps past `j + h`.
/// Otherwise the first factor has length `j` and repeats `1 + h / j` times.
/// The lcp is recomputed by direct character comparison each round, keeping
/// the scan online and constant-space.
pub fn cfl_duval_lcp(w: &[u8]) -> Factorization {
    let mut out = Vec::new();
    let n = w.len();
    let mut base = 0;
    while base < n {
        let v = &w[base..];
        let mut j = 1;
        loop {
            let h = lcp(v, 0, j);
            if j + h < v.len() && v[h] < v[j + h] {
                j += h + 1;
            } else {
                let reps = 1 + h / j;
                for t in 0..reps {
                    out.push(FactorInterval::new(base + t * j, base + (t + 1) * j - 1));
                }
                base += j * reps;
                break;
            }
        }
    }
    out
}
