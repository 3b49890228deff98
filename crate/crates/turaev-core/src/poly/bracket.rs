//! Kauffman bracket state sums, the Jones polynomial, and the span report
//! that compares the Jones span against crossing number minus surface genus.

use std::collections::HashMap;

use thiserror::Error;

use crate::diagram::{EdgeId, LinkDiagram};
use crate::states::{
    adequacy, circle_count_only, turaev_genus_diagram, Adequacy, State, StateError,
    DEFAULT_STATE_CAP,
};
use crate::unionfind::UnionFind;

use super::Laurent;

/// Bracket polynomials are written in the smoothing variable A.
pub type BracketPoly = Laurent<'A'>;

/// Jones polynomials are written in q with t = q^2, so links whose Jones
/// polynomial has half-integer t-powers still get integer exponents.
pub type JonesPoly = Laurent<'q'>;

/// Most open strands the sweep frontier may hold between two crossings.
pub const DEFAULT_SWEEP_WIDTH_CAP: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BracketError {
    #[error(transparent)]
    StateSpace(#[from] StateError),
    #[error("sweep frontier needs {width} open strands (cap {cap})")]
    WidthExceeded { width: usize, cap: usize },
}

/// The loop value -A^2 - A^-2.
pub fn delta() -> BracketPoly {
    BracketPoly::from_terms(&[(2, -1), (-2, -1)])
}

/// Sum A^(a-b) * delta^(circles-1) over all 2^c states. `cap` bounds the
/// crossing count, defaulting to [`DEFAULT_STATE_CAP`].
pub fn bracket_bruteforce(
    d: &LinkDiagram,
    cap: Option<usize>,
) -> Result<BracketPoly, BracketError> {
    let c = d.crossing_count();
    let cap = cap.unwrap_or(DEFAULT_STATE_CAP);
    if c > cap.min(62) {
        return Err(StateError::CapExceeded { crossings: c, cap }.into());
    }
    let dl = delta();
    let mut dpow: Vec<BracketPoly> = Vec::with_capacity(c + 1);
    dpow.push(BracketPoly::one());
    for _ in 0..c {
        let next = dpow.last().unwrap() * &dl;
        dpow.push(next);
    }
    let mut total = BracketPoly::zero();
    for mask in 0..1u64 << c {
        let s = State::from_mask(c, mask);
        let circles = circle_count_only(d, &s)?;
        let b = mask.count_ones() as i64;
        let mut term = dpow[circles - 1].clone();
        term.mul_term(c as i64 - 2 * b, 1);
        total += &term;
    }
    Ok(total)
}

/// Same polynomial as [`bracket_bruteforce`], via a transfer matrix over
/// frontier pairings. Crossings are visited in a greedy min-width order; the
/// frontier pairs up open edges whose already-swept ends are connected, and
/// every circle closed along the way contributes one loop factor. The grand
/// total is delta times the bracket, and the final division is exact.
pub fn bracket_sweep(
    d: &LinkDiagram,
    width_cap: Option<usize>,
) -> Result<BracketPoly, BracketError> {
    let cap = width_cap.unwrap_or(DEFAULT_SWEEP_WIDTH_CAP);
    let (order, width) = sweep_order(d);
    if width > cap {
        return Err(BracketError::WidthExceeded { width, cap });
    }
    let dl = delta();
    let dsq = &dl * &dl;
    let dpow = [BracketPoly::one(), dl, dsq];

    // A pairing lists (lo, hi) open-edge pairs sorted by first entry.
    let mut frontier: HashMap<Vec<(EdgeId, EdgeId)>, BracketPoly> = HashMap::new();
    frontier.insert(Vec::new(), BracketPoly::one());
    let mut open = vec![false; d.edge_count()];

    for &ci in &order {
        let slots = [
            d.edge_at(ci, 0),
            d.edge_at(ci, 1),
            d.edge_at(ci, 2),
            d.edge_at(ci, 3),
        ];
        // Loop edges occupy two slots of this crossing and are never open;
        // every other slot edge either closes here or opens here.
        let mut token_of: Vec<(EdgeId, usize)> = Vec::new();
        let mut closing: Vec<EdgeId> = Vec::new();
        for (i, &e) in slots.iter().enumerate() {
            if slots[..i].contains(&e) {
                continue;
            }
            let is_loop = slots[i + 1..].contains(&e);
            if is_loop || open[e] {
                token_of.push((e, 4 + token_of.len()));
                if !is_loop {
                    closing.push(e);
                }
            }
        }
        let token = |e: EdgeId| token_of.iter().find(|&&(x, _)| x == e).map(|&(_, id)| id);

        let mut next: HashMap<Vec<(EdgeId, EdgeId)>, BracketPoly> =
            HashMap::with_capacity(frontier.len() * 2);
        for (pairing, coeff) in &frontier {
            let partner = |e: EdgeId| {
                pairing
                    .iter()
                    .find_map(|&(x, y)| (x == e).then_some(y).or((y == e).then_some(x)))
                    .expect("open edge is paired")
            };
            for b_smoothing in [false, true] {
                let mut uf = UnionFind::new(4 + token_of.len());
                let arcs: [(usize, usize); 2] = if b_smoothing {
                    [(0, 1), (2, 3)]
                } else {
                    [(0, 3), (1, 2)]
                };
                for (x, y) in arcs {
                    uf.union(x, y);
                }
                for (s, &e) in slots.iter().enumerate() {
                    if let Some(t) = token(e) {
                        uf.union(s, t);
                    }
                }
                // Stub = a strand end that stays open after this crossing.
                let mut stubs: Vec<(usize, EdgeId)> = Vec::new();
                for (s, &e) in slots.iter().enumerate() {
                    if token(e).is_none() {
                        stubs.push((s, e));
                    }
                }
                for &e in &closing {
                    let p = partner(e);
                    match token(p) {
                        Some(tp) => {
                            let te = token(e).unwrap();
                            if e < p {
                                uf.union(te, tp);
                            }
                        }
                        None => stubs.push((token(e).unwrap(), p)),
                    }
                }

                let mut new_pairs: Vec<(EdgeId, EdgeId)> = pairing
                    .iter()
                    .copied()
                    .filter(|&(x, y)| !closing.contains(&x) && !closing.contains(&y))
                    .collect();
                let mut by_root: Vec<(usize, EdgeId)> = stubs
                    .iter()
                    .map(|&(node, e)| (uf.find(node), e))
                    .collect();
                by_root.sort_unstable();
                debug_assert!(by_root.len() % 2 == 0);
                for pair in by_root.chunks(2) {
                    debug_assert_eq!(pair[0].0, pair[1].0, "stub roots pair up");
                    let (x, y) = (pair[0].1, pair[1].1);
                    new_pairs.push((x.min(y), x.max(y)));
                }
                new_pairs.sort_unstable();

                // Components without stubs are circles closed by this
                // smoothing.
                let mut roots: Vec<usize> = (0..4 + token_of.len()).map(|n| uf.find(n)).collect();
                roots.sort_unstable();
                roots.dedup();
                let stub_roots: Vec<usize> = by_root.iter().map(|&(r, _)| r).collect();
                let closed = roots
                    .iter()
                    .filter(|r| !stub_roots.contains(r))
                    .count();

                let mut add = coeff.clone();
                add.mul_term(if b_smoothing { -1 } else { 1 }, 1);
                add *= &dpow[closed];
                let entry = next
                    .entry(new_pairs)
                    .or_insert_with(BracketPoly::zero);
                *entry += &add;
            }
        }
        frontier = next;
        for &(e, _) in &token_of {
            open[e] = false;
        }
        for &e in &slots {
            if token(e).is_none() {
                open[e] = true;
            }
        }
    }

    debug_assert_eq!(frontier.len(), 1);
    let total = frontier
        .remove(&Vec::new())
        .expect("all strands close by the end of the sweep");
    Ok(total
        .div_exact(&delta())
        .expect("the grand total carries one loop factor per circle"))
}

/// Greedy linear layout: repeatedly take the crossing that leaves the fewest
/// open edges, breaking ties toward fewer fresh edges and then lower index.
/// Returns the order and the maximal frontier width along it.
fn sweep_order(d: &LinkDiagram) -> (Vec<usize>, usize) {
    let c = d.crossing_count();
    let mut open = vec![false; d.edge_count()];
    let mut open_count = 0usize;
    let mut done = vec![false; c];
    let mut order = Vec::with_capacity(c);
    let mut width = 0usize;
    for _ in 0..c {
        let mut best: Option<(usize, usize, usize)> = None;
        for ci in 0..c {
            if done[ci] {
                continue;
            }
            let (closing, fresh) = degree_change(d, ci, &open);
            let key = (open_count - closing + fresh, fresh, ci);
            if best.map_or(true, |b| key < b) {
                best = Some(key);
            }
        }
        let (new_open, _, ci) = best.expect("an unprocessed crossing remains");
        done[ci] = true;
        order.push(ci);
        for s in 0..4u8 {
            let e = d.edge_at(ci, s);
            open[e] = !open[e];
        }
        // An edge toggled twice was a loop here or has both ends swept.
        open_count = new_open;
        width = width.max(new_open);
    }
    (order, width)
}

/// How many of the crossing's distinct edges would close (already open) and
/// how many would newly open.
fn degree_change(d: &LinkDiagram, ci: usize, open: &[bool]) -> (usize, usize) {
    let slots = [
        d.edge_at(ci, 0),
        d.edge_at(ci, 1),
        d.edge_at(ci, 2),
        d.edge_at(ci, 3),
    ];
    let mut closing = 0;
    let mut fresh = 0;
    for (i, &e) in slots.iter().enumerate() {
        if slots[..i].contains(&e) {
            continue;
        }
        if slots[i + 1..].contains(&e) {
            continue;
        }
        if open[e] {
            closing += 1;
        } else {
            fresh += 1;
        }
    }
    (closing, fresh)
}

/// V(D) = (-A^3)^(-writhe) <D>, rewritten in q via A^e -> q^(-e/2).
/// Prefers the sweep and falls back to the brute-force sum when the frontier
/// would be too wide; `cap` bounds the fallback's state count.
pub fn jones(d: &LinkDiagram, cap: Option<usize>) -> Result<JonesPoly, BracketError> {
    let bracket = match bracket_sweep(d, None) {
        Ok(p) => p,
        Err(BracketError::WidthExceeded { .. }) => bracket_bruteforce(d, cap)?,
        Err(e) => return Err(e),
    };
    Ok(jones_from_bracket(&bracket, d.writhe()))
}

fn jones_from_bracket(bracket: &BracketPoly, writhe: i64) -> JonesPoly {
    let mut p = bracket.clone();
    p.mul_term(-3 * writhe, if writhe % 2 == 0 { 1 } else { -1 });
    p.reindex(|e| (e % 2 == 0).then_some(-e / 2))
        .expect("writhe normalization leaves only even exponents")
}

/// Jones span in t units against crossing count and diagram genus.
/// The slack is nonnegative and vanishes on adequate diagrams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanReport {
    pub crossings: usize,
    pub genus: usize,
    pub span: i64,
    pub slack: i64,
    pub adequacy: Adequacy,
}

pub fn span_report(d: &LinkDiagram, cap: Option<usize>) -> Result<SpanReport, BracketError> {
    let v = jones(d, cap)?;
    let qspan = v
        .span()
        .expect("the Jones polynomial of a diagram is nonzero");
    assert_eq!(qspan % 2, 0, "Jones exponents share one parity");
    let genus = turaev_genus_diagram(d);
    let crossings = d.crossing_count();
    Ok(SpanReport {
        crossings,
        genus,
        span: qspan / 2,
        slack: crossings as i64 - genus as i64 - qspan / 2,
        adequacy: adequacy(d),
    })
}

/// What the diagram certifies about the Turaev genus of its link.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenusBound {
    /// Adequate diagrams realize the genus exactly.
    Exact { genus: usize },
    /// Otherwise the diagram only gives an upper bound; a homology width,
    /// when supplied, gives the lower one.
    Interval { lower: usize, upper: usize },
}

/// `width_lower` is a delta-graded homology width for the same link, used as
/// the lower bound width - 2 when the diagram is not adequate.
pub fn turaev_genus_certificate(d: &LinkDiagram, width_lower: Option<usize>) -> GenusBound {
    let g = turaev_genus_diagram(d);
    if adequacy(d).adequate() {
        GenusBound::Exact { genus: g }
    } else {
        let lower = width_lower.map_or(0, |w| w.saturating_sub(2));
        debug_assert!(lower <= g, "width bound stays below the diagram genus");
        GenusBound::Interval {
            lower: lower.min(g),
            upper: g,
        }
    }
}
