//! Chen-Fox-Lyndon factorization of byte strings.
//!
//! Every byte string factors uniquely into a lexicographically nonincreasing
//! sequence of Lyndon words (words strictly smaller than all of their proper
//! rotations). This crate computes that factorization with four engines that
//! all produce identical output:
//!
//! - [`cfl_duval`]: the classic linear-time, constant-space scan.
//! - [`cfl_duval_lcp`]: an equivalent scan driven by longest-common-prefix
//!   jumps.
//! - [`cfl_skip`]: skips characters on words containing runs of their
//!   smallest symbol, using the bit-parallel [`matcher`]. Fastest on small
//!   alphabets such as DNA.
//! - [`cfl_rle`]: works directly on a run-length encoded string in time
//!   linear in the number of runs, returning a compressed factorization
//!   that [`lr_to_cfl`] expands to character intervals.
//!
//! The [`oracle`] module holds brute-force reference implementations that
//! the engines are differentially tested against.
//!
//! All operations are pure functions of their inputs; values are immutable
//! after construction and safe to share across threads.
//!
//! ```
//! use lyndon::{cfl_duval, cfl_rle, cfl_skip, lr_to_cfl, RleString};
//!
//! let word = b"abbabbab";
//! let factors = cfl_duval(word);
//! assert_eq!(factors[0].bytes(word), b"abb");
//! assert_eq!(cfl_skip(word), factors);
//!
//! // the same factorization computed on the encoding, without decoding it
//! let rle = RleString::encode(word);
//! assert_eq!(lr_to_cfl(&cfl_rle(&rle), &rle), factors);
//! ```

mod count;
pub mod duval;
pub mod lfrle;
pub mod lfskip;
pub mod matcher;
pub mod oracle;
pub mod rle;
pub mod types;

pub use duval::{cfl_duval, cfl_duval_counted, cfl_duval_lcp};
pub use lfrle::{
    cfl_rle, cfl_rle_counted, lf_rle_next, lf_rle_next_traced, lr_to_cfl, LrFactor,
    LrFactorization, RleNextResult, RleScanStep, RleScanTrace, ScanEnd,
};
pub use lfskip::{cfl_skip, cfl_skip_traced, trim_trailing_min, SkipTrace};
pub use matcher::{find_first_double_min, find_next, ClassPattern, PatternScanner};
pub use rle::{Run, RleError, RleString};
pub use types::{lcp, FactorInterval, Factorization};
