//! Batch identity runs over a catalog.
//!
//! Every entry gets the same fixed list of checks; each check lands as
//! pass, fail, or skipped with a reason. Entries are processed in parallel
//! but reported in catalog order, and the report depends only on the
//! entries and options, never on scheduling. Timings are opt-in because
//! they would break the byte-identical contract.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;
use turaev_core::poly::{bracket_bruteforce, bracket_sweep, jones, span_report};
use turaev_core::ribbon::{ribbon_from_all_a, ribbon_genus};
use turaev_core::states::{adequacy, turaev_genus_diagram, turaev_surface_map};
use turaev_core::{khovanov, HomologyField, JonesPoly, LinkDiagram};

use crate::catalog::{CatalogEntry, IngestDiagnostic};
use crate::report::BATCH_SCHEMA;

#[derive(Clone, Copy, Debug)]
pub struct BatchOptions {
    /// State-enumeration cap handed to the bracket computations.
    pub cap: Option<usize>,
    pub khovanov: bool,
    pub khovanov_cap: usize,
    pub field: HomologyField,
    pub jobs: usize,
    pub timings: bool,
}

impl Default for BatchOptions {
    fn default() -> Self {
        BatchOptions {
            cap: None,
            khovanov: false,
            khovanov_cap: 9,
            field: HomologyField::Rational,
            jobs: 1,
            timings: false,
        }
    }
}

#[derive(Serialize)]
pub struct OptionsOut {
    pub cap: Option<usize>,
    pub khovanov: bool,
    #[serde(rename = "khovanovCap")]
    pub khovanov_cap: usize,
    pub field: &'static str,
    pub jobs: usize,
}

#[derive(Clone, Serialize)]
pub struct CheckOut {
    pub name: &'static str,
    pub outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl CheckOut {
    fn pass(name: &'static str) -> Self {
        CheckOut {
            name,
            outcome: "pass",
            reason: None,
        }
    }

    fn fail(name: &'static str, reason: String) -> Self {
        CheckOut {
            name,
            outcome: "fail",
            reason: Some(reason),
        }
    }

    fn skipped(name: &'static str, reason: &str) -> Self {
        CheckOut {
            name,
            outcome: "skipped",
            reason: Some(reason.to_string()),
        }
    }

    fn verdict(name: &'static str, ok: bool, reason: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, reason())
        }
    }
}

#[derive(Clone, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub crossings: usize,
    pub writhe: i64,
    pub alternating: bool,
    pub adequate: bool,
    pub genus: usize,
    pub span: Option<i64>,
    pub slack: Option<i64>,
    pub checks: Vec<CheckOut>,
}

#[derive(Serialize)]
pub struct Summary {
    pub entries: usize,
    pub checks: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Serialize)]
pub struct RunReport {
    pub schema: &'static str,
    pub options: OptionsOut,
    pub diagnostics: Vec<IngestDiagnostic>,
    pub entries: Vec<EntryReport>,
    pub summary: Summary,
    /// Milliseconds per entry plus a total; present only with `timings`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

#[derive(Serialize)]
pub struct Timings {
    #[serde(rename = "totalMs")]
    pub total_ms: u128,
    #[serde(rename = "perEntryMs")]
    pub per_entry_ms: Vec<(String, u128)>,
}

impl RunReport {
    pub fn failed(&self) -> bool {
        self.summary.fail > 0
    }
}

fn field_name(f: HomologyField) -> &'static str {
    match f {
        HomologyField::Rational => "q",
        HomologyField::Mod2 => "f2",
    }
}

fn unknot_factor() -> JonesPoly {
    JonesPoly::from_terms(&[(-1, 1), (1, 1)])
}

fn check_entry(entry: &CatalogEntry, opts: &BatchOptions) -> EntryReport {
    let d = match LinkDiagram::parse(&entry.pd) {
        Ok(d) => d,
        Err(e) => {
            return EntryReport {
                name: entry.name.clone(),
                crossings: 0,
                writhe: 0,
                alternating: false,
                adequate: false,
                genus: 0,
                span: None,
                slack: None,
                checks: vec![CheckOut::fail("parse", e.to_string())],
            }
        }
    };
    let mut checks = vec![CheckOut::pass("parse")];
    let genus = turaev_genus_diagram(&d);
    let adeq = adequacy(&d);
    let alternating = d.is_alternating();

    let ribbon = ribbon_from_all_a(&d);
    let surface = turaev_surface_map(&d);
    checks.push(match ribbon_genus(&ribbon) {
        Ok(rg) => CheckOut::verdict("genus formula", rg == genus && surface.genus == genus, || {
            format!("state formula {genus}, ribbon {rg}, surface map {}", surface.genus)
        }),
        Err(e) => CheckOut::fail("genus formula", e.to_string()),
    });

    let (span, slack) = match span_report(&d, opts.cap) {
        Ok(r) => {
            checks.push(CheckOut::verdict("span bound", r.slack >= 0, || {
                format!("span {} exceeds c - g = {}", r.span, r.crossings as i64 - r.genus as i64)
            }));
            if adeq.adequate() {
                checks.push(CheckOut::verdict("adequate slack", r.slack == 0, || {
                    format!("adequate diagram has slack {}", r.slack)
                }));
            } else {
                checks.push(CheckOut::skipped("adequate slack", "diagram not adequate"));
            }
            (Some(r.span), Some(r.slack))
        }
        Err(e) => {
            checks.push(CheckOut::fail("span bound", e.to_string()));
            checks.push(CheckOut::skipped("adequate slack", "no span report"));
            (None, None)
        }
    };

    checks.push(
        match (bracket_sweep(&d, None), bracket_bruteforce(&d, opts.cap)) {
            (Ok(s), Ok(b)) => CheckOut::verdict("sweep oracle", s == b, || {
                "transfer-matrix bracket disagrees with the state sum".into()
            }),
            (Err(e), _) | (_, Err(e)) => CheckOut::skipped("sweep oracle", &e.to_string()),
        },
    );

    checks.push(match entry.expected_alternating {
        Some(want) => CheckOut::verdict("alternating flag", alternating == want, || {
            format!("catalog says {want}, diagram says {alternating}")
        }),
        None => CheckOut::skipped("alternating flag", "no expectation recorded"),
    });
    checks.push(match entry.expected_adequate {
        Some(want) => CheckOut::verdict("adequacy flag", adeq.adequate() == want, || {
            format!("catalog says {want}, diagram says {}", adeq.adequate())
        }),
        None => CheckOut::skipped("adequacy flag", "no expectation recorded"),
    });

    if !opts.khovanov {
        checks.push(CheckOut::skipped("khovanov euler", "khovanov disabled"));
    } else if d.crossing_count() > opts.khovanov_cap {
        checks.push(CheckOut::skipped("khovanov euler", "over the khovanov cap"));
    } else if d.component_count() != 1 {
        checks.push(CheckOut::skipped("khovanov euler", "not a knot"));
    } else {
        checks.push(
            match (
                khovanov(&d, opts.field, Some(opts.khovanov_cap)),
                jones(&d, opts.cap),
            ) {
                (Ok(kh), Ok(v)) => {
                    let expect = &v * &unknot_factor();
                    CheckOut::verdict(
                        "khovanov euler",
                        kh.graded_euler_characteristic() == expect,
                        || "graded Euler characteristic differs from (q + 1/q) V".into(),
                    )
                }
                (Err(e), _) => CheckOut::fail("khovanov euler", e.to_string()),
                (_, Err(e)) => CheckOut::fail("khovanov euler", e.to_string()),
            },
        );
    }

    EntryReport {
        name: entry.name.clone(),
        crossings: d.crossing_count(),
        writhe: d.writhe(),
        alternating,
        adequate: adeq.adequate(),
        genus,
        span,
        slack,
        checks,
    }
}

/// Runs the fixed check list over all entries, `opts.jobs` at a time.
pub fn run_invariants(
    entries: &[CatalogEntry],
    diagnostics: Vec<IngestDiagnostic>,
    opts: &BatchOptions,
) -> RunReport {
    let start = Instant::now();
    let jobs = opts.jobs.max(1).min(entries.len().max(1));
    let results: Mutex<Vec<Option<(EntryReport, u128)>>> =
        Mutex::new(vec![None; entries.len()]);
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= entries.len() {
                    break;
                }
                let t = Instant::now();
                let report = check_entry(&entries[i], opts);
                let elapsed = t.elapsed().as_millis();
                results.lock().expect("no panics while batching")[i] =
                    Some((report, elapsed));
            });
        }
    });
    let mut per_entry = Vec::with_capacity(entries.len());
    let mut reports = Vec::with_capacity(entries.len());
    for slot in results.into_inner().expect("batch workers finished") {
        let (report, ms) = slot.expect("every entry processed");
        per_entry.push((report.name.clone(), ms));
        reports.push(report);
    }
    let mut summary = Summary {
        entries: reports.len(),
        checks: 0,
        pass: 0,
        fail: 0,
        skipped: 0,
    };
    for r in &reports {
        for c in &r.checks {
            summary.checks += 1;
            match c.outcome {
                "pass" => summary.pass += 1,
                "fail" => summary.fail += 1,
                _ => summary.skipped += 1,
            }
        }
    }
    RunReport {
        schema: BATCH_SCHEMA,
        options: OptionsOut {
            cap: opts.cap,
            khovanov: opts.khovanov,
            khovanov_cap: opts.khovanov_cap,
            field: field_name(opts.field),
            jobs: opts.jobs,
        },
        diagnostics,
        entries: reports,
        summary,
        timings: opts.timings.then(|| Timings {
            total_ms: start.elapsed().as_millis(),
            per_entry_ms: per_entry,
        }),
    }
}
