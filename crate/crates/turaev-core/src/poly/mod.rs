//! Polynomial machinery: single-variable Laurent polynomials, multivariate
//! polynomials for graph invariants, and the bracket/Jones pipeline.

mod bracket;
mod laurent;
mod mpoly;

pub use bracket::{
    bracket_bruteforce, bracket_sweep, delta, jones, span_report, turaev_genus_certificate,
    BracketError, BracketPoly, GenusBound, JonesPoly, SpanReport, DEFAULT_SWEEP_WIDTH_CAP,
};
pub use laurent::Laurent;
pub use mpoly::MPoly;
