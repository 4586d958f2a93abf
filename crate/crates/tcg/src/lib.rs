//! File formats, reports and the `tcg` command line on top of `tcg-core`.

pub mod cayley;
pub mod cli;
pub mod export;
pub mod report;
