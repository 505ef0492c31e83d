//! Factorization engine that skips characters on words containing runs of
//! the smallest symbol.
//!
//! The observation driving it: once some factor starts with a doubled
//! smallest symbol, every later factor (before the trailing run of that
//! symbol) starts with at least as long a run of it. Factor boundaries can
//! therefore only sit at occurrences of `min^r c` with `c <= v[r]`, which a
//! bit-parallel window scanner can locate while inspecting a fraction of
//! the text. Each located candidate is verified with one lcp computation,
//! and verified candidates prune everything up to `i + h`.

use crate::duval::duval_into;
use crate::matcher::{ClassPattern, PatternScanner};
use crate::types::{lcp, FactorInterval, Factorization};

/// Splits `w` into the longest prefix ending in a symbol greater than
/// `min_symbol` and the trailing run. Returns the index of the last symbol
/// greater than `min_symbol` (`None` when no such symbol exists) and the
/// length of the trailing run, which factorizes into that many unit
/// factors.
pub fn trim_trailing_min(w: &[u8], min_symbol: u8) -> (Option<usize>, usize) {
    let head_last = w.iter().rposition(|&c| c > min_symbol);
    let tail_len = w.len() - head_last.map_or(0, |e| e + 1);
    (head_last, tail_len)
}

/// Instrumentation from a traced [`cfl_skip`] run.
#[derive(Debug, Clone, Default)]
pub struct SkipTrace {
    /// Candidate positions whose suffix was compared against the word.
    pub verified_positions: u64,
    /// Leading-run length at each factor-group iteration, in order.
    pub run_lengths: Vec<usize>,
}

/// Computes the factorization of `w`, skipping text where possible.
///
/// Output is identical to [`cfl_duval`](crate::cfl_duval). The smallest
/// symbol is taken from `w` itself, which maximizes skipping without any
/// alphabet configuration.
pub fn cfl_skip(w: &[u8]) -> Factorization {
    skip_core(w, None)
}

/// Like [`cfl_skip`], also returning instrumentation counters.
pub fn cfl_skip_traced(w: &[u8]) -> (Factorization, SkipTrace) {
    let mut trace = SkipTrace::default();
    let out = skip_core(w, Some(&mut trace));
    (out, trace)
}

fn skip_core(w: &[u8], mut trace: Option<&mut SkipTrace>) -> Factorization {
    let mut out = Vec::new();
    if w.is_empty() {
        return out;
    }
    // fold instead of Iterator::min: this one vectorizes
    let min_symbol = w.iter().fold(u8::MAX, |m, &b| m.min(b));
    let (head_last, tail_len) = trim_trailing_min(w, min_symbol);
    let head_len = head_last.map_or(0, |e| e + 1);
    let head = &w[..head_len];

    // Everything before the first doubled minimum factorizes independently;
    // when no double occurs the whole head goes to the baseline scan.
    let split = PatternScanner::double(min_symbol)
        .find_next(head, 0)
        .unwrap_or(head_len);
    duval_into(&head[..split], 0, &mut out, &mut ());

    let mut base = split;
    let mut run = 0usize;
    while base < head_len {
        let v = &head[base..];
        debug_assert!(v.len() >= 2 && v[0] == min_symbol && v[1] == min_symbol);
        debug_assert!(*v.last().unwrap() != min_symbol);
        // The leading run only grows from one group to the next, so resume
        // the count instead of rescanning it.
        debug_assert!(v[..run].iter().all(|&c| c == min_symbol));
        while v[run] == min_symbol {
            run += 1;
        }
        if let Some(t) = trace.as_deref_mut() {
            t.run_lengths.push(run);
        }

        let pattern = ClassPattern::new(min_symbol, run, v[run]);
        let scanner = PatternScanner::new(&pattern);
        let mut split_at = v.len();
        let mut reps = 1usize;
        let mut frontier = 0usize;
        while let Some(i) = scanner.find_next(v, frontier + 1) {
            if let Some(t) = trace.as_deref_mut() {
                t.verified_positions += 1;
            }
            let h = lcp(v, 0, i);
            if h == v.len() - i || v[i + h] < v[h] {
                // v[i..] precedes v: the first factor ends right before i
                // and repeats 1 + h / i times.
                split_at = i;
                reps = 1 + h / i;
                break;
            }
            // No boundary at or before i + h; resume past it.
            frontier = i + h;
        }
        for t in 0..reps {
            out.push(FactorInterval::new(
                base + t * split_at,
                base + (t + 1) * split_at - 1,
            ));
        }
        base += split_at * reps;
    }

    for t in 0..tail_len {
        out.push(FactorInterval::new(head_len + t, head_len + t));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duval::cfl_duval;
    use crate::oracle;

    fn pairs(f: &Factorization) -> Vec<(usize, usize)> {
        f.iter().map(|i| (i.start, i.end)).collect()
    }

    #[test]
    fn trim_known_cases() {
        assert_eq!(trim_trailing_min(b"cctgccaa", b'a'), (Some(5), 2));
        assert_eq!(trim_trailing_min(b"aaaa", b'a'), (None, 4));
        assert_eq!(trim_trailing_min(b"abbabbab", b'a'), (Some(7), 0));
        assert_eq!(trim_trailing_min(b"", b'a'), (None, 0));
    }

    #[test]
    fn skip_known_words() {
        assert_eq!(pairs(&cfl_skip(b"aabaab")), vec![(0, 2), (3, 5)]);
        assert_eq!(
            pairs(&cfl_skip(b"cctgccaa")),
            vec![(0, 3), (4, 4), (5, 5), (6, 6), (7, 7)]
        );
        assert_eq!(
            pairs(&cfl_skip(b"aaaa")),
            vec![(0, 0), (1, 1), (2, 2), (3, 3)]
        );
        assert_eq!(pairs(&cfl_skip(b"")), vec![]);
        assert_eq!(pairs(&cfl_skip(b"abbabbab")), vec![(0, 2), (3, 5), (6, 7)]);
    }

    #[test]
    fn matches_oracle_on_short_binary_words() {
        for n in 0..=14usize {
            for bits in 0..(1u32 << n) {
                let w: Vec<u8> = (0..n)
                    .map(|i| if bits >> i & 1 == 1 { b'b' } else { b'a' })
                    .collect();
                assert_eq!(cfl_skip(&w), oracle::cfl(&w), "on {w:?}");
            }
        }
    }

    #[test]
    fn run_lengths_never_decrease() {
        for w in [
            &b"aabaaabaaaabaaab"[..],
            b"aacaabaaacaab",
            b"aabaabaacaacaab",
        ] {
            let (f, trace) = cfl_skip_traced(w);
            assert_eq!(f, cfl_duval(w));
            for pair in trace.run_lengths.windows(2) {
                assert!(pair[0] <= pair[1], "run lengths {:?}", trace.run_lengths);
            }
        }
    }

    #[test]
    fn verified_positions_bounded_by_baseline_comparisons() {
        for w in [
            &b"aabaaabaaaab"[..],
            b"cctgccaa",
            b"abbabbab",
            b"aaaaaaaab",
            b"baaaaaaaa",
        ] {
            let (_, trace) = cfl_skip_traced(w);
            let (_, cmps) = crate::duval::cfl_duval_counted(w);
            assert!(trace.verified_positions <= cmps);
        }
    }
}
