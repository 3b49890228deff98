//! Catalog ingestion, batch checking, and the JSON report shapes behind
//! the `turaev` binary. Kept as a library so the pieces are testable
//! without spawning the executable.

pub mod batch;
pub mod catalog;
pub mod report;
