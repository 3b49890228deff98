//! Acceptance gate for the workspace: ten end-to-end criteria over the
//! bundled tables, one pass/fail line each. Runs without the libtest
//! harness so the lines always reach the terminal; a nonzero exit marks
//! the whole gate failed.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use turaev_core::cutting::{
    alternating_tangle_decomposition, cutting_arcs, genus_one_structure, surgery, CycleCheck,
    SurgeryOutcome,
};
use turaev_core::poly::{bracket_bruteforce, bracket_sweep, jones, span_report};
use turaev_core::ribbon::{check_br_bracket, check_thistlethwaite, ribbon_from_all_a, ribbon_genus};
use turaev_core::states::{adequacy, turaev_genus_diagram, turaev_surface_map};
use turaev_core::{khovanov, HomologyField, LinkDiagram, RMove};

struct Entry {
    name: String,
    diagram: LinkDiagram,
    alternating: bool,
    adequate: bool,
}

fn load(file: &str) -> Vec<Entry> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(file);
    std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("cannot read {}: {e}", path.display()))
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            let diagram = LinkDiagram::parse(f[1]).expect("bundled PD parses");
            Entry {
                name: f[0].to_string(),
                alternating: diagram.is_alternating(),
                adequate: adequacy(&diagram).adequate(),
                diagram,
            }
        })
        .collect()
}

/// Random walk over Reidemeister variants. Crossing growth is held under
/// `cap`; if the walk strands itself above the cap with no R3 site it
/// restarts from the base.
struct MoveWalk<'a> {
    rng: &'a mut ChaCha8Rng,
    cap: usize,
}

impl MoveWalk<'_> {
    fn step(&mut self, base: &LinkDiagram, d: &LinkDiagram) -> LinkDiagram {
        let c = d.crossing_count();
        if c > self.cap {
            return self.step(base, base);
        }
        let mut moves = Vec::new();
        if d.reidemeister_site_count(RMove::R3) > 0 {
            moves.extend([RMove::R3; 3]);
        }
        if c < self.cap {
            moves.push(RMove::R1Pos);
            moves.push(RMove::R1Neg);
        }
        if c + 1 < self.cap {
            moves.push(RMove::R2);
        }
        if moves.is_empty() {
            // At the cap with no triangle to flip; a kink is the only
            // move left and the next step will restart.
            moves.push(RMove::R1Pos);
        }
        let mv = *moves.choose(self.rng).expect("move list nonempty");
        let site = self.rng.gen_range(0..d.reidemeister_site_count(mv));
        d.reidemeister_variant(mv, site).expect("site index in range")
    }
}

type Outcome = Result<String, String>;

fn criterion_1(catalog: &[Entry]) -> Outcome {
    let start = Instant::now();
    let mut n = 0;
    for e in catalog.iter().filter(|e| e.alternating) {
        if !e.diagram.is_reduced() {
            return Err(format!("{}: bundled alternating diagram not reduced", e.name));
        }
        let g = turaev_genus_diagram(&e.diagram);
        if g != 0 {
            return Err(format!("{}: alternating diagram has genus {g}", e.name));
        }
        let r = span_report(&e.diagram, None).map_err(|e| e.to_string())?;
        if r.span != r.crossings as i64 {
            return Err(format!("{}: span {} != c {}", e.name, r.span, r.crossings));
        }
        n += 1;
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(10) {
        return Err(format!("budget blown: {elapsed:.1?} > 10s"));
    }
    Ok(format!("{n} alternating diagrams, {elapsed:.1?}"))
}

fn criterion_2(catalog: &[Entry]) -> Outcome {
    let mut adequate = 0;
    for e in catalog {
        let r = span_report(&e.diagram, None).map_err(|e| e.to_string())?;
        if r.slack < 0 {
            return Err(format!(
                "{}: span {} exceeds c - g = {}",
                e.name,
                r.span,
                r.crossings as i64 - r.genus as i64
            ));
        }
        if e.adequate {
            if r.slack != 0 {
                return Err(format!("{}: adequate but slack {}", e.name, r.slack));
            }
            adequate += 1;
        }
    }
    for name in ["8_19", "8_20", "8_21"] {
        let e = catalog
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| format!("{name} missing from the table"))?;
        // These classes admit no adequate diagram, so the equality clause
        // is vacuous for them; the inequality above still applies.
        if e.adequate {
            return Err(format!("{name}: bundled diagram unexpectedly adequate"));
        }
    }
    Ok(format!("slack 0 on {adequate} adequate diagrams"))
}

fn criterion_3(catalog: &[Entry], extras: &[Entry]) -> Outcome {
    for e in catalog.iter().chain(extras) {
        let g_states = turaev_genus_diagram(&e.diagram);
        let g_ribbon =
            ribbon_genus(&ribbon_from_all_a(&e.diagram)).map_err(|e| e.to_string())?;
        let g_surface = turaev_surface_map(&e.diagram).genus;
        if g_states != g_ribbon || g_states != g_surface {
            return Err(format!(
                "{}: state formula {g_states}, ribbon {g_ribbon}, surface map {g_surface}",
                e.name
            ));
        }
    }
    Ok(format!("{} diagrams agree", catalog.len() + extras.len()))
}

fn criterion_4(catalog: &[Entry]) -> Outcome {
    let start = Instant::now();
    for e in catalog {
        let s = bracket_sweep(&e.diagram, None).map_err(|e| e.to_string())?;
        let b = bracket_bruteforce(&e.diagram, None).map_err(|e| e.to_string())?;
        if s != b {
            return Err(format!("{}: sweep disagrees with state sum", e.name));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x7452_6163);
    let mut walk = MoveWalk { rng: &mut rng, cap: 14 };
    let mut d = catalog[0].diagram.clone();
    let mut base = 0;
    for i in 0..500 {
        if i % 20 == 0 {
            base = walk.rng.gen_range(0..catalog.len());
            d = catalog[base].diagram.clone();
        }
        d = walk.step(&catalog[base].diagram, &d);
        let s = bracket_sweep(&d, Some(16)).map_err(|e| e.to_string())?;
        let b = bracket_bruteforce(&d, None).map_err(|e| e.to_string())?;
        if s != b {
            return Err(format!(
                "mutation {i} of {}: sweep disagrees with state sum on {}",
                catalog[base].name,
                d.to_pd_string()
            ));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(120) {
        return Err(format!("budget blown: {elapsed:.1?} > 2min"));
    }
    Ok(format!("84 + 500 mutations, {elapsed:.1?}"))
}

fn criterion_5(catalog: &[Entry]) -> Outcome {
    let mut n = 0;
    for e in catalog.iter().filter(|e| e.alternating) {
        check_thistlethwaite(&e.diagram)
            .map_err(|err| format!("{}: {err}", e.name))?;
        n += 1;
    }
    Ok(format!("{n} alternating diagrams"))
}

fn criterion_6(catalog: &[Entry]) -> Outcome {
    for e in catalog {
        check_br_bracket(&e.diagram, None).map_err(|err| format!("{}: {err}", e.name))?;
    }
    Ok(format!("{} diagrams", catalog.len()))
}

fn criterion_7(catalog: &[Entry], extras: &[Entry]) -> Outcome {
    let mut diagrams = 0;
    let mut arcs_total = 0;
    for e in catalog.iter().chain(extras) {
        if turaev_genus_diagram(&e.diagram) != 1 {
            continue;
        }
        diagrams += 1;
        let arcs = cutting_arcs(&e.diagram);
        if arcs.is_empty() {
            return Err(format!("{}: genus-one diagram with no cutting arcs", e.name));
        }
        for (i, arc) in arcs.iter().enumerate() {
            match surgery(&e.diagram, arc).map_err(|err| format!("{}: {err}", e.name))? {
                SurgeryOutcome::Connected(nd) => {
                    let g = turaev_genus_diagram(&nd);
                    if g != 0 {
                        return Err(format!("{} arc {i}: surgered genus {g}", e.name));
                    }
                }
                SurgeryOutcome::Disconnected { .. } => {
                    return Err(format!("{} arc {i}: splice disconnected", e.name));
                }
            }
            arcs_total += 1;
        }
        match genus_one_structure(&e.diagram).map_err(|err| format!("{}: {err}", e.name))? {
            CycleCheck::Cycle { order } => {
                if order.len() < 2 {
                    return Err(format!("{}: cycle of {} tangles", e.name, order.len()));
                }
                let connectors = alternating_tangle_decomposition(&e.diagram).connectors().len();
                if connectors != 2 * order.len() {
                    return Err(format!(
                        "{}: {connectors} connector strands for {} tangles",
                        e.name,
                        order.len()
                    ));
                }
            }
            CycleCheck::SingleTangle => {
                return Err(format!("{}: decomposition is a single tangle", e.name));
            }
            CycleCheck::Counterexample { reason } => {
                return Err(format!("{}: {reason}", e.name));
            }
        }
    }
    Ok(format!("{diagrams} genus-one diagrams, {arcs_total} arcs"))
}

fn criterion_8(catalog: &[Entry]) -> Outcome {
    let start = Instant::now();
    for e in catalog {
        let kh = khovanov(&e.diagram, HomologyField::Rational, Some(9))
            .map_err(|err| format!("{}: {err}", e.name))?;
        let w = kh.delta_width();
        let g = turaev_genus_diagram(&e.diagram);
        if w < 2 || (w - 2) > g {
            return Err(format!("{}: width {w} against genus {g}", e.name));
        }
        if e.adequate && w - 2 != g {
            return Err(format!("{}: adequate, width {w}, genus {g}", e.name));
        }
        if e.alternating && w != 2 {
            return Err(format!("{}: alternating but width {w}", e.name));
        }
        if e.name == "8_19" && w != 3 {
            return Err(format!("8_19: width {w}, expected 3"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(600) {
        return Err(format!("budget blown: {elapsed:.1?} > 10min"));
    }
    Ok(format!("{} diagrams, {elapsed:.1?}", catalog.len()))
}

fn criterion_9(catalog: &[Entry]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0_4E_C7);
    for trial in 0..50 {
        let a = &catalog[rng.gen_range(0..catalog.len())];
        let b = &catalog[rng.gen_range(0..catalog.len())];
        let e1 = rng.gen_range(0..a.diagram.edge_count());
        let e2 = rng.gen_range(0..b.diagram.edge_count());
        let sum = a
            .diagram
            .connected_sum(e1, &b.diagram, e2)
            .map_err(|err| format!("trial {trial} {}#{}: {err:?}", a.name, b.name))?;
        let g = turaev_genus_diagram(&sum);
        let want = turaev_genus_diagram(&a.diagram) + turaev_genus_diagram(&b.diagram);
        if g != want {
            return Err(format!(
                "trial {trial} {}#{}: genus {g}, expected {want}",
                a.name, b.name
            ));
        }
        let v = jones(&sum, None).map_err(|e| e.to_string())?;
        let va = jones(&a.diagram, None).map_err(|e| e.to_string())?;
        let vb = jones(&b.diagram, None).map_err(|e| e.to_string())?;
        if v != &va * &vb {
            return Err(format!(
                "trial {trial} {}#{}: jones not multiplicative",
                a.name, b.name
            ));
        }
    }
    Ok("50 random pairs".to_string())
}

fn criterion_10(catalog: &[Entry], extras: &[Entry]) -> Outcome {
    // Small bases keep every homology call affordable; the extras and the
    // kink bring non-alternating and unreduced diagrams into the walk.
    let kink = Entry {
        name: "kink".to_string(),
        diagram: LinkDiagram::parse("X(1,2,2,1)").expect("kink parses"),
        alternating: false,
        adequate: false,
    };
    let mut bases: Vec<&Entry> = Vec::new();
    for name in ["3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3"] {
        bases.push(
            catalog
                .iter()
                .find(|e| e.name == name)
                .ok_or_else(|| format!("{name} missing from the table"))?,
        );
    }
    for name in ["trefoil_braid4", "trefoil_inadequate_c5"] {
        bases.push(
            extras
                .iter()
                .find(|e| e.name == name)
                .ok_or_else(|| format!("{name} missing from extras"))?,
        );
    }
    bases.push(&kink);
    let mut rng = ChaCha8Rng::seed_from_u64(0x1030_3070);
    let mut applications = 0;
    for e in &bases {
        let v0 = jones(&e.diagram, None).map_err(|e| e.to_string())?;
        let kh0 = khovanov(&e.diagram, HomologyField::Rational, None)
            .map_err(|err| format!("{}: {err}", e.name))?;
        let mut walk = MoveWalk { rng: &mut rng, cap: 8 };
        let mut d = e.diagram.clone();
        for step in 0..10 {
            d = walk.step(&e.diagram, &d);
            applications += 1;
            let v = jones(&d, None).map_err(|e| e.to_string())?;
            if v != v0 {
                return Err(format!("{} step {step}: jones changed", e.name));
            }
            let kh = khovanov(&d, HomologyField::Rational, Some(9))
                .map_err(|err| format!("{} step {step}: {err}", e.name))?;
            if kh.table() != kh0.table() {
                return Err(format!("{} step {step}: betti table changed", e.name));
            }
        }
    }
    Ok(format!("{applications} move applications over {} bases", bases.len()))
}

fn main() {
    let catalog = load("knots_leq9.tsv");
    let extras = load("extras.tsv");
    assert_eq!(catalog.len(), 84, "bundled table size");

    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        (
            "alternating baseline: genus 0 and span = c",
            Box::new(|| criterion_1(&catalog)),
        ),
        (
            "span bound with equality on adequate diagrams",
            Box::new(|| criterion_2(&catalog)),
        ),
        (
            "state, ribbon and surface-map genus agree",
            Box::new(|| criterion_3(&catalog, &extras)),
        ),
        (
            "transfer-matrix bracket matches the state sum",
            Box::new(|| criterion_4(&catalog)),
        ),
        (
            "Tutte specialization gives Jones on alternating diagrams",
            Box::new(|| criterion_5(&catalog)),
        ),
        (
            "Bollobas-Riordan specialization gives the bracket",
            Box::new(|| criterion_6(&catalog)),
        ),
        (
            "surgery drops genus one to zero, tangles form a cycle",
            Box::new(|| criterion_7(&catalog, &extras)),
        ),
        (
            "homological width minus two bounds the genus",
            Box::new(|| criterion_8(&catalog)),
        ),
        (
            "connected sums add genus and multiply Jones",
            Box::new(|| criterion_9(&catalog)),
        ),
        (
            "invariants survive random Reidemeister moves",
            Box::new(|| criterion_10(&catalog, &extras)),
        ),
    ];

    let mut failed = 0;
    for (i, (desc, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(note) => println!("criterion {:2} {desc}: pass ({note})", i + 1),
            Err(msg) => {
                println!("criterion {:2} {desc}: FAIL ({msg})", i + 1);
                failed += 1;
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
