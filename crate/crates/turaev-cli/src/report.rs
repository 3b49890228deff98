//! JSON shapes the tool prints. Every schema is versioned and pinned by a
//! golden-file test; the genus report alone stays unversioned because its
//! four-field shape is part of the documented interface.

use serde::Serialize;
use turaev_core::poly::SpanReport;
use turaev_core::{JonesPoly, KhovanovHomology, LinkDiagram, MPoly, ValidationReport};

pub const PARSE_SCHEMA: &str = "turaev/parse/v1";
pub const ADEQUACY_SCHEMA: &str = "turaev/adequacy/v1";
pub const JONES_SCHEMA: &str = "turaev/jones/v1";
pub const SPAN_SCHEMA: &str = "turaev/span/v1";
pub const RIBBON_SCHEMA: &str = "turaev/ribbon/v1";
pub const TUTTE_SCHEMA: &str = "turaev/tutte/v1";
pub const BR_SCHEMA: &str = "turaev/br/v1";
pub const DECOMPOSE_SCHEMA: &str = "turaev/decompose/v1";
pub const SURGERY_SCHEMA: &str = "turaev/surgery/v1";
pub const KHOVANOV_SCHEMA: &str = "turaev/khovanov/v1";
pub const BATCH_SCHEMA: &str = "turaev/batch/v1";

#[derive(Serialize)]
pub struct DiagnosticOut {
    pub code: String,
    pub severity: String,
    pub message: String,
    pub location: String,
}

#[derive(Serialize)]
pub struct ParseOut {
    pub schema: &'static str,
    pub ok: bool,
    pub crossings: usize,
    pub edges: usize,
    pub components: usize,
    pub writhe: i64,
    pub faces: usize,
    pub alternating: bool,
    pub reduced: bool,
    pub nugatory: Vec<usize>,
    pub diagnostics: Vec<DiagnosticOut>,
}

impl ParseOut {
    pub fn from_validation(v: &ValidationReport) -> Self {
        ParseOut {
            schema: PARSE_SCHEMA,
            ok: v.ok,
            crossings: v.crossings,
            edges: v.edges,
            components: v.components,
            writhe: v.writhe,
            faces: v.faces,
            alternating: v.alternating,
            reduced: v.reduced,
            nugatory: v.nugatory.clone(),
            diagnostics: v
                .diagnostics
                .iter()
                .map(|d| DiagnosticOut {
                    code: d.code.to_string(),
                    severity: format!("{:?}", d.severity).to_lowercase(),
                    message: d.message.clone(),
                    location: d.location.clone(),
                })
                .collect(),
        }
    }
}

/// The documented shape: `{"c":3,"sA":2,"sB":3,"genus":0}`.
#[derive(Serialize)]
pub struct GenusOut {
    pub c: usize,
    #[serde(rename = "sA")]
    pub s_a: usize,
    #[serde(rename = "sB")]
    pub s_b: usize,
    pub genus: usize,
}

#[derive(Serialize)]
pub struct AdequacyOut {
    pub schema: &'static str,
    #[serde(rename = "aAdequate")]
    pub a_adequate: bool,
    #[serde(rename = "bAdequate")]
    pub b_adequate: bool,
    pub adequate: bool,
}

#[derive(Serialize)]
pub struct JonesOut {
    pub schema: &'static str,
    pub c: usize,
    pub writhe: i64,
    /// `[exponent, coefficient]` pairs of V(q), ascending exponents.
    pub terms: Vec<(i64, i64)>,
}

#[derive(Serialize)]
pub struct SpanOut {
    pub schema: &'static str,
    pub c: usize,
    pub genus: usize,
    pub span: i64,
    pub slack: i64,
    #[serde(rename = "aAdequate")]
    pub a_adequate: bool,
    #[serde(rename = "bAdequate")]
    pub b_adequate: bool,
    pub adequate: bool,
}

impl SpanOut {
    pub fn from_report(r: &SpanReport) -> Self {
        SpanOut {
            schema: SPAN_SCHEMA,
            c: r.crossings,
            genus: r.genus,
            span: r.span,
            slack: r.slack,
            a_adequate: r.adequacy.a_adequate,
            b_adequate: r.adequacy.b_adequate,
            adequate: r.adequacy.adequate(),
        }
    }
}

#[derive(Serialize)]
pub struct RibbonOut {
    pub schema: &'static str,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub genus: usize,
    pub orientable: bool,
}

#[derive(Serialize)]
pub struct TutteOut {
    pub schema: &'static str,
    pub vertices: usize,
    pub edges: usize,
    /// `[x-exponent, y-exponent, coefficient]` triples, ascending.
    pub terms: Vec<(u32, u32, i64)>,
}

#[derive(Serialize)]
pub struct BrOut {
    pub schema: &'static str,
    pub vertices: usize,
    pub edges: usize,
    /// `[X-exponent, Y-exponent, Z-exponent, coefficient]`, ascending.
    pub terms: Vec<(u32, u32, u32, i64)>,
}

#[derive(Serialize)]
pub struct DecomposeOut {
    pub schema: &'static str,
    pub c: usize,
    pub genus: usize,
    pub tangles: usize,
    /// Crossing count per tangle, in tangle index order.
    pub sizes: Vec<usize>,
    pub connectors: usize,
    #[serde(rename = "isCycle")]
    pub is_cycle: bool,
    pub cycle: Option<Vec<usize>>,
    /// Genus-one structure verdict; absent unless the diagram has genus 1.
    #[serde(rename = "genusOne")]
    pub genus_one: Option<String>,
}

#[derive(Serialize)]
pub struct SurgeryOut {
    pub schema: &'static str,
    pub c: usize,
    pub genus: usize,
    pub arcs: usize,
    pub arc: usize,
    /// The two non-alternating edges the chosen arc connects.
    pub edges: (usize, usize),
    pub outcome: &'static str,
    #[serde(rename = "genusAfter")]
    pub genus_after: Option<usize>,
    pub pd: Option<String>,
    pub pieces: Option<Vec<String>>,
}

#[derive(Serialize)]
pub struct KhovanovOut {
    pub schema: &'static str,
    pub field: &'static str,
    pub c: usize,
    pub total: usize,
    /// `[homological degree, quantum degree, rank]` triples, ascending.
    pub betti: Vec<(i64, i64, usize)>,
    #[serde(rename = "deltaDiagonals")]
    pub delta_diagonals: Vec<i64>,
    #[serde(rename = "deltaWidth")]
    pub delta_width: usize,
    /// Graded Euler characteristic as `[exponent, coefficient]` pairs.
    pub euler: Vec<(i64, i64)>,
}

impl KhovanovOut {
    pub fn new(d: &LinkDiagram, kh: &KhovanovHomology, field: &'static str) -> Self {
        KhovanovOut {
            schema: KHOVANOV_SCHEMA,
            field,
            c: d.crossing_count(),
            total: kh.total_rank(),
            betti: kh.table().iter().map(|(&(i, j), &b)| (i, j, b)).collect(),
            delta_diagonals: kh.delta_diagonals(),
            delta_width: kh.delta_width(),
            euler: laurent_terms(&kh.graded_euler_characteristic()),
        }
    }
}

pub fn laurent_terms(p: &JonesPoly) -> Vec<(i64, i64)> {
    p.terms().collect()
}

pub fn mpoly2_terms(p: &MPoly<2>) -> Vec<(u32, u32, i64)> {
    p.terms().map(|(e, c)| (e[0], e[1], c)).collect()
}

pub fn mpoly3_terms(p: &MPoly<3>) -> Vec<(u32, u32, u32, i64)> {
    p.terms().map(|(e, c)| (e[0], e[1], e[2], c)).collect()
}
