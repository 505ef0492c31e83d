//! Bit-parallel search for the pattern family used by the run-skipping
//! engine: a run of the smallest symbol followed by one character from the
//! class of symbols at most a given bound.
//!
//! The scanner is a backward nondeterministic window matcher with 2-gram
//! loop unrolling. A mask table maps each byte to the set of pattern
//! positions it may occupy, one bit per position with bit 0 for the last
//! position; the window scan keeps the current factor's state in a single
//! accumulator and shifts the window by the last detected pattern-prefix
//! position when the accumulator dies. Windows whose trailing 2-gram does
//! not occur in the pattern are skipped after two reads, which is where the
//! sublinear average behavior comes from.
//!
//! Patterns longer than the 64-bit accumulator are handled by matching the
//! rightmost 64 positions bit-parallel and verifying the remaining left
//! extension (which consists of the run symbol only) by direct comparison.

use crate::count::Count;

/// A pattern of `run_length` copies of `min_symbol` followed by any single
/// symbol `c` with `c <= class_bound`. Total pattern length is
/// `run_length + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassPattern {
    min_symbol: u8,
    run_length: usize,
    class_bound: u8,
}

// patterns are at least two symbols long, so there is no is_empty
#[allow(clippy::len_without_is_empty)]
impl ClassPattern {
    /// Panics if `run_length` is zero or `min_symbol > class_bound`
    /// (the run symbol itself must belong to the class).
    pub fn new(min_symbol: u8, run_length: usize, class_bound: u8) -> Self {
        assert!(run_length >= 1, "run length must be at least 1");
        assert!(
            min_symbol <= class_bound,
            "the run symbol must be inside the class"
        );
        ClassPattern {
            min_symbol,
            run_length,
            class_bound,
        }
    }

    pub fn min_symbol(&self) -> u8 {
        self.min_symbol
    }

    pub fn run_length(&self) -> usize {
        self.run_length
    }

    pub fn class_bound(&self) -> u8 {
        self.class_bound
    }

    /// Total pattern length, run plus class position.
    pub fn len(&self) -> usize {
        self.run_length + 1
    }
}

const ACC_BITS: usize = u64::BITS as usize;

/// Preprocessed immutable search state for one pattern; searches are pure
/// and may run concurrently.
#[derive(Clone)]
pub struct PatternScanner {
    masks: [u64; 256],
    /// Window length handled bit-parallel (min of pattern length and 64).
    window: usize,
    /// Leftover pattern positions left of the window, all `pad_symbol`.
    pad: usize,
    pad_symbol: u8,
}

impl PatternScanner {
    pub fn new(pattern: &ClassPattern) -> Self {
        let full = pattern.len();
        let window = full.min(ACC_BITS);
        let mut masks = [0u64; 256];
        // Bit 0 is the last pattern position: the character class.
        for c in 0..=pattern.class_bound {
            masks[c as usize] |= 1;
        }
        // Bits 1 ..= window-1 are run positions: min_symbol only.
        let run_bits = (u64::MAX >> (ACC_BITS - (window - 1))) << 1;
        masks[pattern.min_symbol as usize] |= run_bits;
        PatternScanner {
            masks,
            window,
            pad: full - window,
            pad_symbol: pattern.min_symbol,
        }
    }

    /// Scanner for two adjacent copies of `symbol`.
    pub fn double(symbol: u8) -> Self {
        let mut masks = [0u64; 256];
        masks[symbol as usize] = 0b11;
        PatternScanner {
            masks,
            window: 2,
            pad: 0,
            pad_symbol: symbol,
        }
    }

    /// Smallest occurrence start at or after `from`, if any.
    pub fn find_next(&self, text: &[u8], from: usize) -> Option<usize> {
        self.search(text, from, &mut ())
    }

    /// Like [`find_next`](Self::find_next), also accumulating the number of
    /// text reads into `reads`.
    pub fn find_next_counted(&self, text: &[u8], from: usize, reads: &mut u64) -> Option<usize> {
        self.search(text, from, reads)
    }

    fn search<C: Count>(&self, text: &[u8], from: usize, reads: &mut C) -> Option<usize> {
        let n = text.len();
        let m = self.window + self.pad;
        if m > n || from > n - m {
            return None;
        }
        let me = self.window;
        let top = 1u64 << (me - 1);
        let last_start = n - me;
        // Window start for the bit-parallel part; the reported occurrence
        // starts `pad` positions earlier.
        let mut pos = from + self.pad;
        while pos <= last_start {
            reads.add(2);
            let mut d = (self.masks[text[pos + me - 1] as usize] << 1)
                & self.masks[text[pos + me - 2] as usize];
            let mut shift = me - 1;
            if d != 0 {
                let mut j = me - 2;
                loop {
                    if d & top != 0 {
                        if j == 0 {
                            // Window match; verify the run extension left of it.
                            let lo = pos - self.pad;
                            let mut ok = true;
                            for &c in &text[lo..pos] {
                                reads.add(1);
                                if c != self.pad_symbol {
                                    ok = false;
                                    break;
                                }
                            }
                            if ok {
                                return Some(lo);
                            }
                            // Failed verification: fall back to the shift
                            // recorded from interior prefix hits.
                            break;
                        }
                        shift = j;
                    }
                    if j == 0 {
                        break;
                    }
                    reads.add(1);
                    d = (d << 1) & self.masks[text[pos + j - 1] as usize];
                    j -= 1;
                    if d == 0 {
                        break;
                    }
                }
            }
            pos += shift;
        }
        None
    }
}

/// Smallest `i >= from` such that `text[i .. i + r]` is `r` copies of the
/// pattern's run symbol followed by a class symbol, requiring the full
/// pattern to fit inside `text`.
pub fn find_next(text: &[u8], pattern: &ClassPattern, from: usize) -> Option<usize> {
    PatternScanner::new(pattern).find_next(text, from)
}

/// Smallest `i` with `text[i] == text[i + 1] == symbol`, or `text.len()`
/// when no such pair exists.
pub fn find_first_double_min(text: &[u8], symbol: u8) -> usize {
    PatternScanner::double(symbol)
        .find_next(text, 0)
        .unwrap_or(text.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_all(text: &[u8], p: &ClassPattern) -> Vec<usize> {
        let r = p.run_length();
        (0..text.len().saturating_sub(r))
            .filter(|&i| {
                text[i..i + r].iter().all(|&c| c == p.min_symbol())
                    && text[i + r] <= p.class_bound()
            })
            .collect()
    }

    fn scan_all(text: &[u8], p: &ClassPattern) -> Vec<usize> {
        let scanner = PatternScanner::new(p);
        let mut out = Vec::new();
        let mut from = 0;
        while let Some(i) = scanner.find_next(text, from) {
            assert!(i >= from);
            out.push(i);
            from = i + 1;
        }
        out
    }

    #[test]
    fn find_next_known_cases() {
        let p = ClassPattern::new(b'a', 2, b'b');
        assert_eq!(find_next(b"aabaab", &p, 1), Some(3));
        assert_eq!(find_next(b"aabaab", &p, 0), Some(0));
        let p = ClassPattern::new(b'a', 2, b'c');
        assert_eq!(find_next(b"cctgcc", &p, 0), None);
        let p = ClassPattern::new(b'a', 2, b'z');
        assert_eq!(find_next(b"aa", &p, 0), None);
    }

    #[test]
    fn double_known_cases() {
        assert_eq!(find_first_double_min(b"abbaab", b'a'), 3);
        assert_eq!(find_first_double_min(b"cctgcc", b'c'), 0);
        assert_eq!(find_first_double_min(b"ab", b'a'), 2);
        assert_eq!(find_first_double_min(b"", b'a'), 0);
        assert_eq!(find_first_double_min(b"a", b'a'), 1);
        assert_eq!(find_first_double_min(b"aa", b'a'), 0);
    }

    #[test]
    fn enumeration_matches_naive_scan() {
        // small hand-picked texts covering overlap and boundary cases
        let texts: &[&[u8]] = &[
            b"",
            b"a",
            b"aa",
            b"aaa",
            b"aaaa",
            b"aab",
            b"baa",
            b"aabaab",
            b"aaabaaab",
            b"abbaab",
            b"bbbb",
            b"aabaaabaaaab",
            b"abaabaaabaaaabab",
        ];
        for &text in texts {
            for r in 1..=4 {
                for bound in *b"abc" {
                    let p = ClassPattern::new(b'a', r, bound);
                    assert_eq!(
                        scan_all(text, &p),
                        naive_all(text, &p),
                        "text {:?} r {} bound {}",
                        std::str::from_utf8(text).unwrap(),
                        r,
                        bound as char
                    );
                }
            }
        }
    }

    #[test]
    fn long_pattern_beyond_accumulator_width() {
        // run of 100 a's then the class position; matches only where the
        // full run fits
        let mut text = vec![b'b'; 8];
        text.extend(vec![b'a'; 120]);
        text.push(b'b');
        text.extend(vec![b'a'; 99]);
        text.push(b'c');
        let p = ClassPattern::new(b'a', 100, b'b');
        assert_eq!(scan_all(&text, &p), naive_all(&text, &p));
        // occurrences: positions 8..=27 give a^100 followed by 'a' (class),
        // position 28 gives a^100 followed by 'b'
        assert_eq!(scan_all(&text, &p).first(), Some(&8));
    }

    #[test]
    fn from_positions_are_respected() {
        let text = b"aaaaab";
        let p = ClassPattern::new(b'a', 2, b'b');
        let all = naive_all(text, &p);
        let scanner = PatternScanner::new(&p);
        for from in 0..=text.len() {
            let expect = all.iter().copied().find(|&i| i >= from);
            assert_eq!(scanner.find_next(text, from), expect, "from {from}");
        }
    }

    #[test]
    fn skip_reads_fewer_positions_than_text_length() {
        // pseudo-random text over {a,b,c,d}, fixed linear congruential seed
        let mut state = 0x9e3779b97f4a7c15u64;
        let text: Vec<u8> = (0..100_000)
            .map(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                b'a' + (state >> 33) as u8 % 4
            })
            .collect();
        let p = ClassPattern::new(b'a', 4, b'd');
        let scanner = PatternScanner::new(&p);
        let mut reads = 0u64;
        let mut from = 0;
        while let Some(i) = scanner.find_next_counted(&text, from, &mut reads) {
            from = i + 1;
        }
        assert!(
            reads < (text.len() as u64) * 8 / 10,
            "{reads} reads on {} characters",
            text.len()
        );
    }
}
