//! Wall-clock benchmarking of the factorization engines.
//!
//! Inputs are generated up front so I/O never enters a measurement, every
//! reported time is the median of repeated runs on a monotonic clock, and
//! speed-ups are only ever formed from same-input pairs.

use crate::gen;
use lyndon::{cfl_duval, cfl_rle, cfl_rle_counted, cfl_skip, RleString, Run};
use std::hint::black_box;
use std::time::Instant;

/// Default repetition count per measurement; override with the
/// `LYNDON_BENCH_REPS` environment variable.
pub const DEFAULT_REPS: usize = 5;

pub fn repetitions() -> usize {
    std::env::var("LYNDON_BENCH_REPS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(DEFAULT_REPS)
}

/// Median wall time of `reps` runs of `f`, in seconds.
pub fn median_secs<F: FnMut()>(reps: usize, mut f: F) -> f64 {
    assert!(reps >= 1);
    let mut times: Vec<f64> = (0..reps)
        .map(|_| {
            let start = Instant::now();
            f();
            start.elapsed().as_secs_f64()
        })
        .collect();
    times.sort_by(|a, b| a.total_cmp(b));
    times[times.len() / 2]
}

/// One benchmark row: both engines timed on the same generated input.
#[derive(Debug, Clone)]
pub struct SpeedupRow {
    pub sigma: u32,
    pub length: usize,
    pub duval_secs: f64,
    pub skip_secs: f64,
}

impl SpeedupRow {
    /// Ratio of the baseline engine's time to the skipping engine's.
    pub fn speedup(&self) -> f64 {
        self.duval_secs / self.skip_secs
    }
}

/// Times the baseline and skipping engines on one random text per alphabet
/// size.
pub fn measure_speedups(sigmas: &[u32], length: usize, seed: u64, reps: usize) -> Vec<SpeedupRow> {
    sigmas
        .iter()
        .map(|&sigma| {
            let text = gen::gen_word(length, sigma, seed.wrapping_add(u64::from(sigma)));
            // warm-up outside the measurement
            black_box(cfl_duval(&text));
            black_box(cfl_skip(&text));
            let duval_secs = median_secs(reps, || {
                black_box(cfl_duval(black_box(&text)));
            });
            let skip_secs = median_secs(reps, || {
                black_box(cfl_skip(black_box(&text)));
            });
            SpeedupRow {
                sigma,
                length,
                duval_secs,
                skip_secs,
            }
        })
        .collect()
}

/// Result of the run-length scaling experiment: the same run structure
/// with all run lengths multiplied, so the decoded text grows while the
/// run count stays fixed.
#[derive(Debug, Clone)]
pub struct RleScalingReport {
    pub rho: usize,
    pub scale: usize,
    pub base_decoded_len: usize,
    pub scaled_decoded_len: usize,
    pub base_secs: f64,
    pub scaled_secs: f64,
    pub base_iterations: u64,
    pub scaled_iterations: u64,
}

impl RleScalingReport {
    pub fn time_ratio(&self) -> f64 {
        self.scaled_secs / self.base_secs
    }
}

/// Times the RLE engine on a random encoding and on the same encoding with
/// every run length multiplied by `scale`. `inner_loops` repeats the
/// factorization inside one timed run so short inputs do not drown in
/// clock granularity.
pub fn measure_rle_scaling(
    rho: usize,
    sigma: u32,
    max_run: usize,
    scale: usize,
    seed: u64,
    reps: usize,
    inner_loops: usize,
) -> RleScalingReport {
    let base = gen::gen_rle(rho, sigma, max_run, seed);
    let scaled = RleString::from_runs(
        base.runs()
            .iter()
            .map(|r| Run::new(r.symbol, r.len * scale))
            .collect(),
    )
    .expect("scaling run lengths preserves validity");

    let (_, base_iterations) = cfl_rle_counted(&base);
    let (_, scaled_iterations) = cfl_rle_counted(&scaled);

    black_box(cfl_rle(&base));
    black_box(cfl_rle(&scaled));
    let base_secs = median_secs(reps, || {
        for _ in 0..inner_loops {
            black_box(cfl_rle(black_box(&base)));
        }
    });
    let scaled_secs = median_secs(reps, || {
        for _ in 0..inner_loops {
            black_box(cfl_rle(black_box(&scaled)));
        }
    });

    RleScalingReport {
        rho,
        scale,
        base_decoded_len: base.decoded_len(),
        scaled_decoded_len: scaled.decoded_len(),
        base_secs,
        scaled_secs,
        base_iterations,
        scaled_iterations,
    }
}

/// CSV rows in the stable column order `sigma,engine,length,median_seconds`.
pub fn speedup_csv(rows: &[SpeedupRow]) -> String {
    let mut out = String::from("sigma,engine,length,median_seconds\n");
    for row in rows {
        out.push_str(&format!(
            "{},duval,{},{:.9}\n",
            row.sigma, row.length, row.duval_secs
        ));
        out.push_str(&format!(
            "{},skip,{},{:.9}\n",
            row.sigma, row.length, row.skip_secs
        ));
    }
    out
}
