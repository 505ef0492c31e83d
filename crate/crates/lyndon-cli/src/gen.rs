//! Deterministic random input generation.

use lyndon::{Run, RleString};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Uniform random word over the `sigma` byte values starting at `a`
/// (wrapping past 255). Deterministic for a fixed seed.
///
/// Panics unless `2 <= sigma <= 256`.
pub fn gen_word(len: usize, sigma: u32, seed: u64) -> Vec<u8> {
    assert!((2..=256).contains(&sigma), "sigma must be in 2..=256");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len)
        .map(|_| (u32::from(b'a') + rng.random_range(0..sigma)) as u8)
        .collect()
}

/// Random RLE string with exactly `rho` runs over the same alphabet as
/// [`gen_word`], run lengths uniform in `1..=max_run`, adjacent symbols
/// distinct. Deterministic for a fixed seed.
pub fn gen_rle(rho: usize, sigma: u32, max_run: usize, seed: u64) -> RleString {
    assert!((2..=256).contains(&sigma), "sigma must be in 2..=256");
    assert!(max_run >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut runs: Vec<Run> = Vec::with_capacity(rho);
    for _ in 0..rho {
        let symbol = loop {
            let s = (u32::from(b'a') + rng.random_range(0..sigma)) as u8;
            if runs.last().map(|r| r.symbol) != Some(s) {
                break s;
            }
        };
        runs.push(Run::new(symbol, rng.random_range(1..=max_run)));
    }
    RleString::from_runs(runs).expect("generated runs are valid by construction")
}
