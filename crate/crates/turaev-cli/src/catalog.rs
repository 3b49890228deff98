//! Bundled knot-table ingestion.
//!
//! A catalog is a TSV file with one entry per line, `name<TAB>pdcode`;
//! further columns carry expected flags where known (alternating, adequate).
//! Comment lines start with `#`. Malformed lines are skipped and reported as
//! diagnostics rather than failing the whole ingest.

use std::fmt;
use std::path::Path;

use serde::Serialize;
use turaev_core::LinkDiagram;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub pd: String,
    pub expected_alternating: Option<bool>,
    pub expected_adequate: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IngestDiagnostic {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for IngestDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum IngestError {
    #[error("cannot read catalog {path}: {source}")]
    Unreadable {
        path: String,
        source: std::io::Error,
    },
}

fn parse_flag(field: &str) -> Option<bool> {
    match field {
        "1" => Some(true),
        "0" => Some(false),
        _ => None,
    }
}

/// Reads a catalog file. Every returned entry has a PD code that parses and
/// validates; anything else lands in the diagnostics, as does a warning for
/// a file with no entries at all.
pub fn ingest_catalog(
    path: &Path,
) -> Result<(Vec<CatalogEntry>, Vec<IngestDiagnostic>), IngestError> {
    let text = std::fs::read_to_string(path).map_err(|source| IngestError::Unreadable {
        path: path.display().to_string(),
        source,
    })?;
    let mut entries = Vec::new();
    let mut diagnostics = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = raw.split('\t').collect();
        if fields.len() < 2 {
            diagnostics.push(IngestDiagnostic {
                line,
                message: "expected name<TAB>pdcode".into(),
            });
            continue;
        }
        let name = fields[0].trim().to_string();
        let pd = fields[1].trim().to_string();
        if name.is_empty() {
            diagnostics.push(IngestDiagnostic {
                line,
                message: "empty entry name".into(),
            });
            continue;
        }
        match LinkDiagram::parse(&pd) {
            Ok(d) => {
                let v = d.validate();
                if !v.ok {
                    let why = v
                        .diagnostics
                        .iter()
                        .map(|x| x.message.as_str())
                        .collect::<Vec<_>>()
                        .join("; ");
                    diagnostics.push(IngestDiagnostic {
                        line,
                        message: format!("{name}: diagram fails validation: {why}"),
                    });
                    continue;
                }
            }
            Err(e) => {
                diagnostics.push(IngestDiagnostic {
                    line,
                    message: format!("{name}: bad PD code: {e}"),
                });
                continue;
            }
        }
        entries.push(CatalogEntry {
            name,
            pd,
            expected_alternating: fields.get(2).and_then(|f| parse_flag(f.trim())),
            expected_adequate: fields.get(3).and_then(|f| parse_flag(f.trim())),
        });
    }
    if entries.is_empty() {
        diagnostics.push(IngestDiagnostic {
            line: 0,
            message: "catalog has no entries".into(),
        });
    }
    Ok((entries, diagnostics))
}
