//! Support library for the `lyndon` command-line tool: input ingestion,
//! deterministic generation, cross-engine verification, and benchmarking.

pub mod bench;
pub mod gen;
pub mod io;
pub mod verify;
