//! Invariants of link diagrams that live on the Turaev surface.
//!
//! The crate is organized around a pipeline:
//! [`diagram`] parses and manipulates PD codes; [`states`] smooths crossings
//! into state circles and measures the Turaev surface; [`poly`] computes
//! bracket, Jones, and span certificates; [`ribbon`] builds the all-A ribbon
//! graph with its Tutte and Bollobas-Riordan polynomials; [`cutting`]
//! decomposes diagrams along cutting arcs and performs genus-dropping
//! surgery; [`khovanov`] computes bigraded homology and its diagonal width.

pub mod cutting;
pub mod diagram;
pub mod khovanov;
pub mod poly;
pub mod ribbon;
pub mod states;

#[cfg(test)]
mod testutil;
mod unionfind;

pub use cutting::{
    alternating_tangle_decomposition, cutting_arcs, genus_one_structure, is_prime,
    non_alternating_edges, surgery, CuttingArc, CycleCheck, StructureError, SurgeryError,
    SurgeryOutcome, TangleDecomposition,
};
pub use diagram::{Dart, EdgeId, LinkDiagram, MoveError, PdParseError, RMove, ValidationReport};
pub use khovanov::{khovanov, HomologyField, KhovanovError, KhovanovHomology};
pub use poly::{
    bracket_bruteforce, bracket_sweep, jones, BracketError, BracketPoly, GenusBound, JonesPoly,
    Laurent, MPoly, SpanReport,
};
pub use ribbon::{
    bollobas_riordan, check_br_bracket, check_thistlethwaite, ribbon_from_all_a, ribbon_genus,
    tutte, MultiGraph, RibbonError, RibbonGraph, ThistlethwaiteError, TutteJonesMatch,
};
pub use states::{Marker, State, StateResolution, TuraevSurfaceMap};
