//! Property tests for the core primitives and the scan-state invariants of
//! the run-length engine.

use lyndon::{
    cfl_rle, lcp, lf_rle_next_traced, oracle, LrFactor, Run, RleString,
};
use proptest::prelude::*;

fn word_strategy(max_len: usize, sigma: u8) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec((0..sigma).prop_map(|c| b'a' + c), 0..=max_len)
}

proptest! {
    #[test]
    fn rle_round_trip(w in word_strategy(300, 5)) {
        let r = RleString::encode(&w);
        prop_assert_eq!(r.decode(), w.clone());
        // re-encoding the decoding is the identity on valid RLE strings
        prop_assert_eq!(RleString::encode(&r.decode()), r);
    }

    #[test]
    fn rle_runs_are_maximal(w in word_strategy(300, 3)) {
        let r = RleString::encode(&w);
        for run in r.runs() {
            prop_assert!(run.len >= 1);
        }
        for pair in r.runs().windows(2) {
            prop_assert_ne!(pair[0].symbol, pair[1].symbol);
        }
        prop_assert_eq!(r.decoded_len(), w.len());
    }

    #[test]
    fn lcp_is_symmetric_and_reflexive(w in word_strategy(80, 4), i in 0usize..=80, j in 0usize..=80) {
        let i = i.min(w.len());
        let j = j.min(w.len());
        prop_assert_eq!(lcp(&w, i, j), lcp(&w, j, i));
        prop_assert_eq!(lcp(&w, i, i), w.len() - i);
    }

    #[test]
    fn oracle_factors_are_lyndon_and_nonincreasing(w in word_strategy(120, 4)) {
        let f = oracle::cfl(&w);
        prop_assert_eq!(oracle::validate_cfl(&w, &f), Ok(()));
        for factor in &f {
            prop_assert!(oracle::is_lyndon(factor.bytes(&w)));
        }
    }

    #[test]
    fn lyndon_words_have_no_border_and_small_first_symbol(w in word_strategy(60, 3)) {
        prop_assume!(!w.is_empty());
        if oracle::is_lyndon(&w) {
            prop_assert_eq!(oracle::longest_border(&w), 0);
            prop_assert!(w.len() == 1 || w[0] < w[w.len() - 1]);
        }
    }
}

/// A word is a nonempty prefix of a Lyndon word (or a power of a single
/// symbol) exactly when stripping its longest border leaves a Lyndon period.
fn is_lyndon_prefix_or_power(w: &[u8]) -> bool {
    let period = w.len() - oracle::longest_border(w);
    oracle::is_lyndon(&w[..period])
}

#[test]
fn scan_state_invariants_hold_at_every_loop_head() {
    let words: Vec<Vec<u8>> = vec![
        b"abbabbab".to_vec(),
        b"abbaab".to_vec(),
        b"cctgccaa".to_vec(),
        b"aabaab".to_vec(),
        b"abababab".to_vec(),
        b"aabbaabbaabb".to_vec(),
        b"abbcabbcabb".to_vec(),
        b"zyxabczyx".to_vec(),
        b"aaaa".to_vec(),
        b"ababaabababaab".to_vec(),
        // Fibonacci word, dense with borders
        b"abaababaabaababaababaabaababaabaab".to_vec(),
    ];
    // plus every ternary word of length up to 9
    let mut all = words;
    for n in 1..=9usize {
        for mut code in 0..3usize.pow(n as u32) {
            let mut w = Vec::with_capacity(n);
            for _ in 0..n {
                w.push(b'a' + (code % 3) as u8);
                code /= 3;
            }
            all.push(w);
        }
    }

    for w in &all {
        let r = RleString::encode(w);
        let runs = r.runs();
        let mut k = 0;
        while k < runs.len() {
            let (result, trace) = lf_rle_next_traced(&r, k);
            for step in &trace.steps {
                let j = step.frontier;
                let ell = step.border_runs;
                // decoded prefix of runs k..j-1
                let prefix: Vec<u8> = runs[k..j]
                    .iter()
                    .flat_map(|run| std::iter::repeat_n(run.symbol, run.len))
                    .collect();
                assert!(
                    is_lyndon_prefix_or_power(&prefix),
                    "prefix {:?} of {:?} not a Lyndon prefix or power",
                    prefix,
                    String::from_utf8_lossy(w),
                );
                if j - k > 1 {
                    let border_len = oracle::longest_border(&prefix);
                    let expected_ell = if border_len == 0 {
                        0
                    } else {
                        RleString::encode(&prefix[..border_len]).run_count()
                    };
                    assert_eq!(
                        ell, expected_ell,
                        "border runs for prefix {:?}",
                        String::from_utf8_lossy(&prefix)
                    );
                } else {
                    assert_eq!(ell, 0);
                }
                // the partial-cover flag matches its definition
                let expected_partial = ell > 0 && runs[j - 1].len < runs[k + ell - 1].len;
                assert_eq!(step.partial_cover, expected_partial);
                // The border's right-hand occurrence starts at a run
                // boundary and fully covers run j-ell whenever the border
                // spans at least two runs or fully covers the prefix-side
                // run. A single-run border with a partial prefix-side cover
                // sits strictly inside the first run instead.
                if ell >= 2 || (ell == 1 && !step.partial_cover) {
                    assert_eq!(runs[j - ell].len, runs[k].len);
                } else if ell == 1 {
                    assert!(runs[j - 1].len < runs[k].len);
                }
            }
            k += result.run_count * result.repeats;
        }
    }
}

#[test]
fn compressed_factors_tile_and_decode_to_lr_words() {
    let mut words: Vec<Vec<u8>> = vec![b"cctgccaa".to_vec(), b"abbabbab".to_vec()];
    for n in 1..=10usize {
        for mut code in 0..2usize.pow(n as u32) {
            let mut w = Vec::with_capacity(n);
            for _ in 0..n {
                w.push(b'a' + (code % 2) as u8);
                code /= 2;
            }
            words.push(w);
        }
    }
    for w in &words {
        let r = RleString::encode(w);
        let lr = cfl_rle(&r);
        let mut next_run = 0;
        for LrFactor {
            start_run,
            run_count,
            repeats,
        } in &lr
        {
            assert_eq!(*start_run, next_run);
            assert!(*run_count >= 1 && *repeats >= 1);
            for rep in 0..*repeats {
                let lo = start_run + rep * run_count;
                let decoded: Vec<u8> = r.runs()[lo..lo + run_count]
                    .iter()
                    .flat_map(|run| std::iter::repeat_n(run.symbol, run.len))
                    .collect();
                let single_power =
                    *run_count == 1 && r.runs()[lo].len >= 2;
                assert!(
                    single_power || oracle::is_lyndon(&decoded),
                    "factor {:?} is neither Lyndon nor a power",
                    String::from_utf8_lossy(&decoded)
                );
            }
            next_run += run_count * repeats;
        }
        assert_eq!(next_run, r.run_count());
    }
}

#[test]
fn single_run_factors_never_repeat() {
    // a repeated factor spanning one run would need equal adjacent symbols
    for w in [&b"aabbaabb"[..], b"aaaa", b"abab", b"cctgccaa"] {
        for item in cfl_rle(&RleString::encode(w)) {
            if item.run_count == 1 {
                assert_eq!(item.repeats, 1);
            }
        }
    }
}

#[test]
fn scaling_run_lengths_preserves_scan_structure() {
    let words: &[&[u8]] = &[b"aabbbacccaabdd", b"abbabbab", b"aabaab"];
    for w in words {
        let base = RleString::encode(w);
        for scale in [2usize, 10, 1000] {
            let scaled = RleString::from_runs(
                base.runs()
                    .iter()
                    .map(|r| Run::new(r.symbol, r.len * scale))
                    .collect(),
            )
            .unwrap();
            assert_eq!(cfl_rle(&base), cfl_rle(&scaled));
        }
    }
}
