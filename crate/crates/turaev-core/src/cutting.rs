//! Cutting arcs and surgery on the Turaev surface.
//!
//! Non-alternating edges are where the all-A and all-B state circles cross.
//! A pair of them on a common circle of each state spans a cutting arc;
//! re-routing both edges along it compresses the surface and drops the
//! Turaev genus by one. Cutting every non-alternating edge splits the
//! diagram into alternating tangles, and genus-one diagrams decompose into
//! a cycle of such tangles.

use std::collections::HashMap;

use thiserror::Error;

use crate::diagram::{dart_index, EdgeId, LinkDiagram};
use crate::states::{s_a_circles, s_b_circles, turaev_genus_diagram};
use crate::unionfind::UnionFind;

/// Edges joining two overpasses or two underpasses, self-loops included.
/// Empty exactly when the diagram is alternating.
pub fn non_alternating_edges(d: &LinkDiagram) -> Vec<EdgeId> {
    (0..d.edge_count())
        .filter(|&e| !d.edge_is_alternating(e))
        .collect()
}

/// An unordered pair of non-alternating edges lying on one common all-A
/// circle and one common all-B circle, consecutive along both. Surgery
/// along it re-routes both edges and drops the Turaev genus by one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CuttingArc {
    pub edges: (EdgeId, EdgeId),
    /// Shared all-A circle.
    pub alpha: usize,
    /// Shared all-B circle.
    pub beta: usize,
}

/// All cutting arcs: pairs of non-alternating edges sharing both an all-A
/// and an all-B circle, with no other non-alternating edge between them
/// along some arc of each circle. The second condition makes the cutting
/// loop embeddable: midpoints of non-alternating edges are exactly where
/// state circles of the two kinds cross, and the loop through the two cut
/// points must avoid every other such crossing point. Pairs that merely
/// share both circles admit no planar genus-dropping splice.
/// Alternating diagrams yield an empty list.
pub fn cutting_arcs(d: &LinkDiagram) -> Vec<CuttingArc> {
    let nae = non_alternating_edges(d);
    let is_nae = {
        let mut v = vec![false; d.edge_count()];
        for &e in &nae {
            v[e] = true;
        }
        v
    };
    let sa = s_a_circles(d);
    let sb = s_b_circles(d);
    let adjacent = |walk: &[EdgeId], e1: EdgeId, e2: EdgeId| -> bool {
        let cuts: Vec<EdgeId> = walk.iter().copied().filter(|&e| is_nae[e]).collect();
        let i = cuts.iter().position(|&e| e == e1).unwrap();
        let j = cuts.iter().position(|&e| e == e2).unwrap();
        let n = cuts.len();
        (i + 1) % n == j || (j + 1) % n == i
    };
    let mut out = Vec::new();
    for (i, &e1) in nae.iter().enumerate() {
        for &e2 in &nae[i + 1..] {
            let alpha = sa.circle_of_edge(e1);
            let beta = sb.circle_of_edge(e1);
            if alpha == sa.circle_of_edge(e2)
                && beta == sb.circle_of_edge(e2)
                && adjacent(&sa.circles()[alpha], e1, e2)
                && adjacent(&sb.circles()[beta], e1, e2)
            {
                out.push(CuttingArc {
                    edges: (e1, e2),
                    alpha,
                    beta,
                });
            }
        }
    }
    out
}

/// No pair of edges disconnects the crossings. Rules out diagrams presented
/// as connected sums; 4-valent maps have no bridges, so 2-edge cuts are the
/// minimal separations.
pub fn is_prime(d: &LinkDiagram) -> bool {
    let c = d.crossing_count();
    if c <= 1 {
        return true;
    }
    let ne = d.edge_count();
    for e in 0..ne {
        for f in e + 1..ne {
            let mut uf = UnionFind::new(c);
            let mut classes = c;
            for x in 0..ne {
                if x == e || x == f {
                    continue;
                }
                if uf.union(d.edge_tail(x).0, d.edge_head(x).0) {
                    classes -= 1;
                }
            }
            if classes > 1 {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SurgeryError {
    #[error("diagram already has Turaev genus 0")]
    GenusZero,
    #[error("not a cutting arc of this diagram: {0}")]
    InvalidArc(String),
    #[error("no admissible reconnection: {0}")]
    SpliceSelection(String),
}

/// Result of re-routing the two edges of a cutting arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurgeryOutcome {
    /// The compressed diagram; its Turaev genus is one less.
    Connected(LinkDiagram),
    /// The splice severed the diagram; the pieces are reported as PD text
    /// and not treated as failure.
    Disconnected { pieces: Vec<String> },
}

const A_JOINS: [(usize, usize); 2] = [(0, 3), (1, 2)];
const B_JOINS: [(usize, usize); 2] = [(0, 1), (2, 3)];

/// Cuts both edges of the arc and reconnects their four ends crosswise.
/// Of the two crosswise matchings, the one realizing the compression is
/// selected by requiring a planar reconnection that raises |s_A| + |s_B|
/// by exactly 2; the other is rejected.
pub fn surgery(d: &LinkDiagram, arc: &CuttingArc) -> Result<SurgeryOutcome, SurgeryError> {
    let g = turaev_genus_diagram(d);
    if g == 0 {
        return Err(SurgeryError::GenusZero);
    }
    if !cutting_arcs(d).contains(arc) {
        return Err(SurgeryError::InvalidArc(format!(
            "edge pair {},{} with circles {},{}",
            arc.edges.0, arc.edges.1, arc.alpha, arc.beta
        )));
    }
    let (e1, e2) = arc.edges;
    let c = d.crossing_count();
    let base = mate_of(d);
    let sab = s_a_circles(d).circle_count() + s_b_circles(d).circle_count();
    let p = dart_index(d.edge_tail(e1));
    let q = dart_index(d.edge_head(e1));
    let r = dart_index(d.edge_tail(e2));
    let s = dart_index(d.edge_head(e2));

    let mut connected: Option<Vec<usize>> = None;
    let mut degenerate: Option<Vec<Vec<[u64; 4]>>> = None;
    for (x1, y1, x2, y2) in [(p, r, q, s), (p, s, q, r)] {
        let mut mate = base.clone();
        mate[x1] = y1;
        mate[y1] = x1;
        mate[x2] = y2;
        mate[y2] = x2;
        if !map_planar(c, &mate) {
            continue;
        }
        let pieces = piece_count(c, &mate);
        let nsab = abstract_circles(c, &mate, A_JOINS) + abstract_circles(c, &mate, B_JOINS);
        if pieces == 1 && nsab == sab + 2 {
            if connected.is_some() {
                return Err(SurgeryError::SpliceSelection(
                    "both reconnections raise the circle count".into(),
                ));
            }
            connected = Some(mate);
        } else if pieces > 1 && degenerate.is_none() {
            degenerate = Some(rebuild_pieces(c, &mate));
        }
    }

    if let Some(mate) = connected {
        let raw = rebuild_pieces(c, &mate).pop().expect("single piece");
        let d2 = LinkDiagram::from_raw(raw).map_err(|e| {
            SurgeryError::SpliceSelection(format!("rebuilt diagram rejected: {e}"))
        })?;
        debug_assert_eq!(turaev_genus_diagram(&d2), g - 1);
        Ok(SurgeryOutcome::Connected(d2))
    } else if let Some(pieces) = degenerate {
        Ok(SurgeryOutcome::Disconnected {
            pieces: pieces.iter().map(|p| pd_text(p)).collect(),
        })
    } else {
        Err(SurgeryError::SpliceSelection(
            "neither reconnection raises the circle count".into(),
        ))
    }
}

/// Dart pairing along edges: mate[dart] is the other end of its edge.
fn mate_of(d: &LinkDiagram) -> Vec<usize> {
    let mut mate = vec![usize::MAX; 4 * d.crossing_count()];
    for e in 0..d.edge_count() {
        let t = dart_index(d.edge_tail(e));
        let h = dart_index(d.edge_head(e));
        mate[t] = h;
        mate[h] = t;
    }
    mate
}

/// Circles of the state that joins the given slot pairs at every crossing.
fn abstract_circles(c: usize, mate: &[usize], joins: [(usize, usize); 2]) -> usize {
    let mut uf = UnionFind::new(4 * c);
    let mut classes = 4 * c;
    for ci in 0..c {
        for (a, b) in joins {
            if uf.union(4 * ci + a, 4 * ci + b) {
                classes -= 1;
            }
        }
    }
    for dt in 0..4 * c {
        if uf.union(dt, mate[dt]) {
            classes -= 1;
        }
    }
    classes
}

fn piece_count(c: usize, mate: &[usize]) -> usize {
    let mut uf = UnionFind::new(c);
    let mut classes = c;
    for dt in 0..4 * c {
        if uf.union(dt / 4, mate[dt] / 4) {
            classes -= 1;
        }
    }
    classes
}

/// Every connected piece satisfies V - E + F = 2 for the 4-valent map
/// (E = 2V; faces by orbit tracing of dart -> rotate(mate[dart])).
fn map_planar(c: usize, mate: &[usize]) -> bool {
    let n = 4 * c;
    let mut uf = UnionFind::new(c);
    for dt in 0..n {
        uf.union(dt / 4, mate[dt] / 4);
    }
    let mut v_of = vec![0usize; c];
    let mut f_of = vec![0usize; c];
    for ci in 0..c {
        let root = uf.find(ci);
        v_of[root] += 1;
    }
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut dt = start;
        while !seen[dt] {
            seen[dt] = true;
            let m = mate[dt];
            dt = (m & !3) | ((m + 1) & 3);
        }
        let root = uf.find(start / 4);
        f_of[root] += 1;
    }
    for ci in 0..c {
        if v_of[ci] > 0 && f_of[ci] != v_of[ci] + 2 {
            return false;
        }
    }
    true
}

/// Reconstructs PD tuples from the modified pairing, one tuple list per
/// connected piece. Strand directions are chosen per component by walking
/// from the lowest dart; each tuple starts at its incoming under slot.
fn rebuild_pieces(c: usize, mate: &[usize]) -> Vec<Vec<[u64; 4]>> {
    let n = 4 * c;
    let mut uf = UnionFind::new(c);
    for dt in 0..n {
        uf.union(dt / 4, mate[dt] / 4);
    }
    let mut piece_of = vec![usize::MAX; c];
    let mut piece_crossings: Vec<Vec<usize>> = Vec::new();
    for ci in 0..c {
        let root = uf.find(ci);
        if piece_of[root] == usize::MAX {
            piece_of[root] = piece_crossings.len();
            piece_crossings.push(Vec::new());
        }
        piece_of[ci] = piece_of[root];
        piece_crossings[piece_of[ci]].push(ci);
    }

    let mut incoming = vec![false; n];
    let mut visited = vec![false; n];
    let mut label = vec![0u64; n];
    let mut next_label = vec![1u64; piece_crossings.len()];
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let mut arrive = start;
        loop {
            visited[arrive] = true;
            incoming[arrive] = true;
            let exit = (arrive & !3) | ((arrive + 2) & 3);
            visited[exit] = true;
            let key = exit.min(mate[exit]);
            if label[key] == 0 {
                let pid = piece_of[exit / 4];
                label[key] = next_label[pid];
                next_label[pid] += 1;
            }
            arrive = mate[exit];
            if arrive == start {
                break;
            }
        }
    }

    piece_crossings
        .iter()
        .map(|crossings| {
            crossings
                .iter()
                .map(|&ci| {
                    let b = 4 * ci;
                    debug_assert!(incoming[b] != incoming[b + 2]);
                    let rot = if incoming[b] { 0 } else { 2 };
                    [0, 1, 2, 3].map(|k| {
                        let dt = b + ((rot + k) & 3);
                        label[dt.min(mate[dt])]
                    })
                })
                .collect()
        })
        .collect()
}

fn pd_text(raw: &[[u64; 4]]) -> String {
    raw.iter()
        .map(|t| format!("X({},{},{},{})", t[0], t[1], t[2], t[3]))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Split of the diagram along every non-alternating edge. Each piece is an
/// internally alternating tangle; the cut edges connect them.
#[derive(Clone, Debug)]
pub struct TangleDecomposition {
    tangles: Vec<Vec<usize>>,
    tangle_of: Vec<usize>,
    connectors: Vec<(EdgeId, usize, usize)>,
    cycle: Option<Vec<usize>>,
}

impl TangleDecomposition {
    /// Crossing ids of each tangle, ascending.
    pub fn tangles(&self) -> &[Vec<usize>] {
        &self.tangles
    }

    pub fn tangle_of(&self, ci: usize) -> usize {
        self.tangle_of[ci]
    }

    /// Non-alternating edges with the tangles at their two ends.
    pub fn connectors(&self) -> &[(EdgeId, usize, usize)] {
        &self.connectors
    }

    /// Cyclic tangle order when the decomposition is a cycle of 2-tangles:
    /// two or more tangles, consecutive ones joined by exactly 2 strands.
    pub fn cycle(&self) -> Option<&[usize]> {
        self.cycle.as_deref()
    }

    pub fn is_cycle(&self) -> bool {
        self.cycle.is_some()
    }
}

/// Cuts every non-alternating edge and groups the remaining connected
/// pieces. Alternating diagrams come back as a single tangle.
pub fn alternating_tangle_decomposition(d: &LinkDiagram) -> TangleDecomposition {
    let c = d.crossing_count();
    let nae = non_alternating_edges(d);
    let cut: Vec<bool> = {
        let mut v = vec![false; d.edge_count()];
        for &e in &nae {
            v[e] = true;
        }
        v
    };
    let mut uf = UnionFind::new(c);
    for e in 0..d.edge_count() {
        if !cut[e] {
            uf.union(d.edge_tail(e).0, d.edge_head(e).0);
        }
    }
    let mut tangle_of = vec![usize::MAX; c];
    let mut tangles: Vec<Vec<usize>> = Vec::new();
    for ci in 0..c {
        let root = uf.find(ci);
        if tangle_of[root] == usize::MAX {
            tangle_of[root] = tangles.len();
            tangles.push(Vec::new());
        }
        tangle_of[ci] = tangle_of[root];
        tangles[tangle_of[ci]].push(ci);
    }
    let connectors: Vec<(EdgeId, usize, usize)> = nae
        .iter()
        .map(|&e| (e, tangle_of[d.edge_tail(e).0], tangle_of[d.edge_head(e).0]))
        .collect();
    let cycle = detect_cycle(tangles.len(), &connectors);
    TangleDecomposition {
        tangles,
        tangle_of,
        connectors,
        cycle,
    }
}

/// Recognizes a single cycle of 2-tangles: every consecutive pair joined by
/// exactly 2 connectors (4 parallel connectors for a 2-cycle), no connector
/// internal to a tangle, every tangle visited once.
fn detect_cycle(k: usize, connectors: &[(EdgeId, usize, usize)]) -> Option<Vec<usize>> {
    if k < 2 {
        return None;
    }
    let mut mult: HashMap<(usize, usize), usize> = HashMap::new();
    for &(_, a, b) in connectors {
        if a == b {
            return None;
        }
        *mult.entry((a.min(b), a.max(b))).or_insert(0) += 1;
    }
    if k == 2 {
        return (connectors.len() == 4 && mult.get(&(0, 1)) == Some(&4)).then(|| vec![0, 1]);
    }
    if connectors.len() != 2 * k || mult.values().any(|&m| m != 2) {
        return None;
    }
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); k];
    for &(a, b) in mult.keys() {
        nbrs[a].push(b);
        nbrs[b].push(a);
    }
    if nbrs.iter().any(|v| v.len() != 2) {
        return None;
    }
    let mut order = vec![0usize];
    let mut prev = 0;
    let mut cur = nbrs[0][0].min(nbrs[0][1]);
    while cur != 0 {
        order.push(cur);
        let next = if nbrs[cur][0] == prev { nbrs[cur][1] } else { nbrs[cur][0] };
        prev = cur;
        cur = next;
    }
    (order.len() == k).then_some(order)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("diagram has a nugatory crossing")]
    NotReduced,
    #[error("diagram is a connected sum (2-edge cut found)")]
    NotPrime,
    #[error("Turaev genus is {0}, expected 1")]
    WrongGenus(usize),
}

/// Outcome of the genus-one cycle test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleCheck {
    /// Cyclic order of the tangles.
    Cycle { order: Vec<usize> },
    /// The whole diagram is one tangle; flagged for review rather than
    /// accepted as a cycle.
    SingleTangle,
    Counterexample { reason: String },
}

/// Checks that a genus-one diagram is a cycle of alternating 2-tangles.
pub fn genus_one_structure(d: &LinkDiagram) -> Result<CycleCheck, StructureError> {
    if !d.is_reduced() {
        return Err(StructureError::NotReduced);
    }
    if !is_prime(d) {
        return Err(StructureError::NotPrime);
    }
    let g = turaev_genus_diagram(d);
    if g != 1 {
        return Err(StructureError::WrongGenus(g));
    }
    let dec = alternating_tangle_decomposition(d);
    if dec.tangles().len() == 1 {
        return Ok(CycleCheck::SingleTangle);
    }
    match dec.cycle() {
        Some(order) => Ok(CycleCheck::Cycle {
            order: order.to_vec(),
        }),
        None => Ok(CycleCheck::Counterexample {
            reason: format!(
                "{} tangles do not form a 2-strand cycle",
                dec.tangles().len()
            ),
        }),
    }
}
