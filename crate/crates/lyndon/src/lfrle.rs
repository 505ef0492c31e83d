//! Factorization of run-length encoded strings in time linear in the
//! number of runs and constant auxiliary space.
//!
//! A run either lies entirely inside one factor or decomposes into
//! unit-length factors, so the factorization admits a compressed form of
//! size proportional to the run count: factors are either Lyndon words or
//! powers `a^k` with `k >= 2` (the latter standing for `k` unit factors).
//! [`cfl_rle`] produces that form and [`lr_to_cfl`] expands it back to
//! character intervals.
//!
//! The scan mirrors the baseline engine one run at a time. For the prefix
//! of runs `k..j-1` read so far it maintains the length in runs of the
//! prefix's longest border; a flag records when that border ends inside a
//! run rather than at a run boundary, in which case the comparison run for
//! the next input run shifts back by one.

use crate::rle::{Run, RleString};
use crate::types::{FactorInterval, Factorization};

/// Result of one factor-group scan: the factor spans `run_count` runs and
/// repeats `repeats` times consecutively.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RleNextResult {
    pub run_count: usize,
    pub repeats: usize,
}

/// One item of the compressed factorization: `repeats` consecutive factors
/// of `run_count` runs each, the first starting at run index `start_run`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LrFactor {
    pub start_run: usize,
    pub run_count: usize,
    pub repeats: usize,
}

/// Compressed factorization in the run-index domain.
pub type LrFactorization = Vec<LrFactor>;

/// Why a factor-group scan stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanEnd {
    /// All runs consumed.
    Exhausted,
    /// The next run's symbol is smaller than the comparison symbol.
    SmallerSymbol,
    /// The next run carries the comparison symbol but is longer than the
    /// comparison run, and its symbol is smaller than the one following the
    /// comparison run; the border cannot cover such a run.
    LongerRun,
}

/// Scan state captured at one loop head of a traced [`lf_rle_next`] run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RleScanStep {
    /// Border length in runs of the prefix read so far.
    pub border_runs: usize,
    /// Index of the next run to read.
    pub frontier: usize,
    /// True when the border ends inside the run preceding the border end,
    /// covering it only partially.
    pub partial_cover: bool,
}

/// Full trace of a [`lf_rle_next`] scan.
#[derive(Debug, Clone, Default)]
pub struct RleScanTrace {
    /// One entry per loop head, in order; the last entry is the state the
    /// scan terminated in.
    pub steps: Vec<RleScanStep>,
    pub end: Option<ScanEnd>,
}

trait ScanProbe {
    fn step(&mut self, border_runs: usize, frontier: usize, partial_cover: bool);
    fn end(&mut self, end: ScanEnd);
}

impl ScanProbe for () {
    #[inline(always)]
    fn step(&mut self, _: usize, _: usize, _: bool) {}
    #[inline(always)]
    fn end(&mut self, _: ScanEnd) {}
}

impl ScanProbe for u64 {
    #[inline(always)]
    fn step(&mut self, _: usize, _: usize, _: bool) {
        *self += 1;
    }
    #[inline(always)]
    fn end(&mut self, _: ScanEnd) {}
}

impl ScanProbe for RleScanTrace {
    fn step(&mut self, border_runs: usize, frontier: usize, partial_cover: bool) {
        self.steps.push(RleScanStep {
            border_runs,
            frontier,
            partial_cover,
        });
    }
    fn end(&mut self, end: ScanEnd) {
        self.end = Some(end);
    }
}

/// Longest compressed factor of `rle` starting at run `k`, together with
/// its consecutive repetition count.
///
/// Panics if `k` is not a valid run index.
pub fn lf_rle_next(rle: &RleString, k: usize) -> RleNextResult {
    next_core(rle.runs(), k, &mut ())
}

/// Traced variant of [`lf_rle_next`] exposing every loop-head state and the
/// termination case.
pub fn lf_rle_next_traced(rle: &RleString, k: usize) -> (RleNextResult, RleScanTrace) {
    let mut trace = RleScanTrace::default();
    let result = next_core(rle.runs(), k, &mut trace);
    (result, trace)
}

fn next_core<P: ScanProbe>(runs: &[Run], k: usize, probe: &mut P) -> RleNextResult {
    assert!(k < runs.len(), "run index {k} out of range");
    let rho = runs.len();
    let mut i = k; // k + border length in runs
    let mut j = k + 1; // next run to read
    loop {
        let partial = i > k && runs[j - 1].len < runs[i - 1].len;
        probe.step(i - k, j, partial);
        let s = i - usize::from(partial);
        let end = if j == rho {
            Some(ScanEnd::Exhausted)
        } else if runs[j].symbol < runs[s].symbol {
            Some(ScanEnd::SmallerSymbol)
        } else if runs[j].symbol == runs[s].symbol && runs[j].len > runs[s].len {
            // Adjacent runs carry distinct symbols, so a border spanning all
            // but one run of the prefix is impossible; hence s + 1 < j and
            // the comparison below never reads run j itself.
            debug_assert!(s + 1 < j);
            if runs[j].symbol < runs[s + 1].symbol {
                Some(ScanEnd::LongerRun)
            } else {
                None
            }
        } else {
            None
        };
        if let Some(end) = end {
            probe.end(end);
            let z = usize::from(partial);
            return RleNextResult {
                run_count: j - i,
                repeats: (j - k - z) / (j - i),
            };
        }
        if runs[j].symbol > runs[s].symbol || runs[j].len > runs[s].len {
            i = k;
        } else {
            i += 1;
        }
        j += 1;
    }
}

/// Compressed factorization of `rle`.
pub fn cfl_rle(rle: &RleString) -> LrFactorization {
    rle_core(rle, &mut ())
}

/// Like [`cfl_rle`], also returning the total number of scan iterations,
/// which is always below twice the run count.
pub fn cfl_rle_counted(rle: &RleString) -> (LrFactorization, u64) {
    let mut iterations = 0u64;
    let out = rle_core(rle, &mut iterations);
    (out, iterations)
}

fn rle_core<P: ScanProbe>(rle: &RleString, probe: &mut P) -> LrFactorization {
    let runs = rle.runs();
    let mut out = Vec::new();
    let mut k = 0;
    while k < runs.len() {
        let next = next_core(runs, k, probe);
        out.push(LrFactor {
            start_run: k,
            run_count: next.run_count,
            repeats: next.repeats,
        });
        k += next.run_count * next.repeats;
    }
    out
}

/// Expands a compressed factorization into character intervals over the
/// decoded word. Single-run factors of length at least two stand for that
/// many unit factors; everything else maps to one interval via prefix sums
/// of the run lengths.
pub fn lr_to_cfl(lr: &[LrFactor], rle: &RleString) -> Factorization {
    let runs = rle.runs();
    let mut out = Vec::new();
    let mut run_idx = 0;
    let mut char_pos = 0;
    for item in lr {
        debug_assert_eq!(item.start_run, run_idx);
        for _ in 0..item.repeats {
            if item.run_count == 1 {
                let run = runs[run_idx];
                if run.len >= 2 {
                    for t in 0..run.len {
                        out.push(FactorInterval::new(char_pos + t, char_pos + t));
                    }
                } else {
                    out.push(FactorInterval::new(char_pos, char_pos));
                }
                char_pos += run.len;
                run_idx += 1;
            } else {
                let start = char_pos;
                for _ in 0..item.run_count {
                    char_pos += runs[run_idx].len;
                    run_idx += 1;
                }
                out.push(FactorInterval::new(start, char_pos - 1));
            }
        }
    }
    debug_assert_eq!(run_idx, runs.len());
    out
}
