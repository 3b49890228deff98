//! Command-line front end for the Turaev-surface toolkit.
//!
//! Every subcommand reads a PD code (inline or from a file), computes one
//! invariant, and prints a single JSON object on stdout. Exit codes:
//! 0 success, 1 a check or computation failed on valid input, 2 the input
//! itself was unusable.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use turaev_cli::batch::{run_invariants, BatchOptions};
use turaev_cli::catalog::ingest_catalog;
use turaev_cli::report::{
    laurent_terms, mpoly2_terms, mpoly3_terms, AdequacyOut, BrOut, DecomposeOut, GenusOut,
    JonesOut, KhovanovOut, ParseOut, RibbonOut, SpanOut, SurgeryOut, TutteOut, ADEQUACY_SCHEMA,
    BR_SCHEMA, DECOMPOSE_SCHEMA, JONES_SCHEMA, RIBBON_SCHEMA, SURGERY_SCHEMA, TUTTE_SCHEMA,
};
use turaev_core::cutting::{
    alternating_tangle_decomposition, cutting_arcs, genus_one_structure, surgery, CycleCheck,
    SurgeryOutcome,
};
use turaev_core::poly::{jones, span_report};
use turaev_core::ribbon::{bollobas_riordan, ribbon_from_all_a, ribbon_genus, tutte};
use turaev_core::states::{adequacy, s_a_circles, s_b_circles, turaev_genus_diagram};
use turaev_core::{khovanov, HomologyField, LinkDiagram};

#[derive(Parser)]
#[command(
    name = "turaev",
    version,
    about = "Turaev-surface invariants of link diagrams",
    propagate_version = true
)]
struct Cli {
    /// Pretty-print the JSON output.
    #[arg(long, global = true)]
    pretty: bool,

    /// Work cap. Bounds state enumeration for bracket commands, crossing
    /// count for khovanov, and edge count for br.
    #[arg(long, global = true)]
    cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PdInput {
    /// PD code, e.g. "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)".
    pd: Option<String>,

    /// Read the PD code from a file instead.
    #[arg(long, conflicts_with = "pd")]
    file: Option<PathBuf>,
}

impl PdInput {
    fn text(&self) -> Result<String, Failure> {
        if let Some(pd) = &self.pd {
            return Ok(pd.clone());
        }
        if let Some(path) = &self.file {
            return std::fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())));
        }
        Err(Failure::Input(
            "give a PD code or --file <path>".to_string(),
        ))
    }

    fn diagram(&self) -> Result<LinkDiagram, Failure> {
        let text = self.text()?;
        LinkDiagram::parse(&text).map_err(|e| Failure::Input(format!("bad PD: {e}")))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    /// Rational coefficients.
    Q,
    /// Two-element field.
    F2,
}

impl FieldArg {
    fn field(self) -> HomologyField {
        match self {
            FieldArg::Q => HomologyField::Rational,
            FieldArg::F2 => HomologyField::Mod2,
        }
    }

    fn name(self) -> &'static str {
        match self {
            FieldArg::Q => "q",
            FieldArg::F2 => "f2",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse a PD code and report structure and diagnostics.
    Parse(PdInput),
    /// State-circle counts and the Turaev genus of the diagram.
    Genus(PdInput),
    /// A- and B-adequacy flags.
    Adequacy(PdInput),
    /// Jones polynomial V in the variable q.
    Jones(PdInput),
    /// Kauffman bracket span and its gap to the crossing number.
    Span(PdInput),
    /// All-A ribbon graph summary.
    Ribbon(PdInput),
    /// Tutte polynomial of the all-A state graph.
    Tutte(PdInput),
    /// Bollobas-Riordan polynomial of the all-A ribbon graph.
    Br(PdInput),
    /// Alternating-tangle decomposition, with the cycle test on genus-one
    /// diagrams.
    Decompose(PdInput),
    /// Splice along a cutting arc and report what the genus drops to.
    Surgery {
        #[command(flatten)]
        input: PdInput,
        /// Index into the cutting-arc list.
        #[arg(long, default_value_t = 0)]
        arc: usize,
    },
    /// Khovanov homology table.
    Khovanov {
        #[command(flatten)]
        input: PdInput,
        /// Coefficient field.
        #[arg(long, value_enum, default_value_t = FieldArg::Q)]
        field: FieldArg,
    },
    /// Run the invariant checks over every entry of a catalog file.
    Batch {
        /// Tab-separated catalog: name, PD, then optional alternating and
        /// adequacy flags.
        path: PathBuf,
        /// Also check the Khovanov Euler characteristic against Jones.
        #[arg(long)]
        khovanov: bool,
        /// Skip the Khovanov check above this many crossings.
        #[arg(long, default_value_t = 9)]
        khovanov_cap: usize,
        /// Coefficient field for the Khovanov check.
        #[arg(long, value_enum, default_value_t = FieldArg::Q)]
        field: FieldArg,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Include wall-clock timings in the report.
        #[arg(long)]
        timings: bool,
    },
}

enum Failure {
    /// Unusable input: exit 2.
    Input(String),
    /// Valid input, failed check or computation: exit 1.
    Check(String),
}

fn check(e: impl std::fmt::Display) -> Failure {
    Failure::Check(e.to_string())
}

fn emit<T: Serialize>(value: &T, pretty: bool) {
    let text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .expect("reports serialize");
    println!("{text}");
}

fn run(cli: Cli) -> Result<(), Failure> {
    let pretty = cli.pretty;
    let cap = cli.cap;
    match cli.command {
        Command::Parse(input) => {
            let d = input.diagram()?;
            let v = d.validate();
            emit(&ParseOut::from_validation(&v), pretty);
            if v.ok {
                Ok(())
            } else {
                Err(Failure::Check("diagram failed validation".to_string()))
            }
        }
        Command::Genus(input) => {
            let d = input.diagram()?;
            let out = GenusOut {
                c: d.crossing_count(),
                s_a: s_a_circles(&d).circle_count(),
                s_b: s_b_circles(&d).circle_count(),
                genus: turaev_genus_diagram(&d),
            };
            emit(&out, pretty);
            Ok(())
        }
        Command::Adequacy(input) => {
            let d = input.diagram()?;
            let a = adequacy(&d);
            let out = AdequacyOut {
                schema: ADEQUACY_SCHEMA,
                a_adequate: a.a_adequate,
                b_adequate: a.b_adequate,
                adequate: a.adequate(),
            };
            emit(&out, pretty);
            Ok(())
        }
        Command::Jones(input) => {
            let d = input.diagram()?;
            let v = jones(&d, cap).map_err(check)?;
            let out = JonesOut {
                schema: JONES_SCHEMA,
                c: d.crossing_count(),
                writhe: d.writhe(),
                terms: laurent_terms(&v),
            };
            emit(&out, pretty);
            Ok(())
        }
        Command::Span(input) => {
            let d = input.diagram()?;
            let r = span_report(&d, cap).map_err(check)?;
            emit(&SpanOut::from_report(&r), pretty);
            Ok(())
        }
        Command::Ribbon(input) => {
            let d = input.diagram()?;
            let g = ribbon_from_all_a(&d);
            let genus = ribbon_genus(&g).map_err(check)?;
            let out = RibbonOut {
                schema: RIBBON_SCHEMA,
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                faces: g.faces().len(),
                genus,
                orientable: g.orientable(),
            };
            emit(&out, pretty);
            Ok(())
        }
        Command::Tutte(input) => {
            let d = input.diagram()?;
            let g = ribbon_from_all_a(&d).underlying();
            let t = tutte(&g);
            let out = TutteOut {
                schema: TUTTE_SCHEMA,
                vertices: g.vertex_count(),
                edges: g.edges().len(),
                terms: mpoly2_terms(&t),
            };
            emit(&out, pretty);
            Ok(())
        }
        Command::Br(input) => {
            let d = input.diagram()?;
            let g = ribbon_from_all_a(&d);
            let p = bollobas_riordan(&g, cap).map_err(check)?;
            let out = BrOut {
                schema: BR_SCHEMA,
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                terms: mpoly3_terms(&p),
            };
            emit(&out, pretty);
            Ok(())
        }
        Command::Decompose(input) => {
            let d = input.diagram()?;
            let dec = alternating_tangle_decomposition(&d);
            let genus = turaev_genus_diagram(&d);
            let genus_one = (genus == 1).then(|| match genus_one_structure(&d) {
                Ok(CycleCheck::Cycle { .. }) => "cycle".to_string(),
                Ok(CycleCheck::SingleTangle) => "single tangle".to_string(),
                Ok(CycleCheck::Counterexample { reason }) => {
                    format!("counterexample: {reason}")
                }
                Err(e) => format!("not applicable: {e}"),
            });
            let out = DecomposeOut {
                schema: DECOMPOSE_SCHEMA,
                c: d.crossing_count(),
                genus,
                tangles: dec.tangles().len(),
                sizes: dec.tangles().iter().map(|t| t.len()).collect(),
                connectors: dec.connectors().len(),
                is_cycle: dec.is_cycle(),
                cycle: dec.cycle().map(|o| o.to_vec()),
                genus_one,
            };
            emit(&out, pretty);
            Ok(())
        }
        Command::Surgery { input, arc } => {
            let d = input.diagram()?;
            let arcs = cutting_arcs(&d);
            if arcs.is_empty() {
                return Err(Failure::Check("diagram has no cutting arcs".to_string()));
            }
            if arc >= arcs.len() {
                return Err(Failure::Check(format!(
                    "arc index {arc} out of range, diagram has {} arcs",
                    arcs.len()
                )));
            }
            let chosen = &arcs[arc];
            let outcome = surgery(&d, chosen).map_err(check)?;
            let out = match outcome {
                SurgeryOutcome::Connected(nd) => SurgeryOut {
                    schema: SURGERY_SCHEMA,
                    c: d.crossing_count(),
                    genus: turaev_genus_diagram(&d),
                    arcs: arcs.len(),
                    arc,
                    edges: chosen.edges,
                    outcome: "connected",
                    genus_after: Some(turaev_genus_diagram(&nd)),
                    pd: Some(nd.to_pd_string()),
                    pieces: None,
                },
                SurgeryOutcome::Disconnected { pieces } => SurgeryOut {
                    schema: SURGERY_SCHEMA,
                    c: d.crossing_count(),
                    genus: turaev_genus_diagram(&d),
                    arcs: arcs.len(),
                    arc,
                    edges: chosen.edges,
                    outcome: "disconnected",
                    genus_after: None,
                    pd: None,
                    pieces: Some(pieces),
                },
            };
            emit(&out, pretty);
            Ok(())
        }
        Command::Khovanov { input, field } => {
            let d = input.diagram()?;
            let kh = khovanov(&d, field.field(), cap).map_err(check)?;
            emit(&KhovanovOut::new(&d, &kh, field.name()), pretty);
            Ok(())
        }
        Command::Batch {
            path,
            khovanov,
            khovanov_cap,
            field,
            jobs,
            timings,
        } => {
            let (entries, diagnostics) =
                ingest_catalog(&path).map_err(|e| Failure::Input(e.to_string()))?;
            let opts = BatchOptions {
                cap,
                khovanov,
                khovanov_cap,
                field: field.field(),
                jobs,
                timings,
            };
            let report = run_invariants(&entries, diagnostics, &opts);
            emit(&report, pretty);
            if entries.is_empty() {
                Err(Failure::Check("catalog has no entries".to_string()))
            } else if report.failed() {
                Err(Failure::Check(format!(
                    "{} of {} checks failed",
                    report.summary.fail, report.summary.checks
                )))
            } else {
                Ok(())
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("turaev: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("turaev: {msg}");
            ExitCode::from(2)
        }
    }
}
