//! Link diagrams as PD codes: parsing, validation, orientation, faces, and
//! diagram-level constructions (mirror, connected sum, Reidemeister variants).
//!
//! A crossing is written `X(a,b,c,d)`: four edge labels counterclockwise
//! starting from the incoming under-strand. Slot 0 is the under-strand
//! entering, slot 2 the under-strand leaving; slots 1 and 3 carry the
//! over-strand.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::unionfind::UnionFind;

pub type EdgeId = usize;

/// One end of an edge: (crossing index, slot 0..=3).
pub type Dart = (usize, u8);

/// Crossing tuple; entries are 0-based edge ids after normalization.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PdCrossing {
    pub slots: [EdgeId; 4],
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PdParseError {
    #[error("empty diagram: at least one crossing is required")]
    Empty,
    #[error("syntax error at byte {at}: {msg}")]
    Syntax { at: usize, msg: String },
    #[error("edge labels must be positive")]
    NonPositiveLabel,
    #[error("edge label {label} appears {count} times, expected exactly 2")]
    LabelCount { label: u64, count: usize },
    #[error("orientation conflict: edge {label} cannot be directed consistently")]
    OrientationConflict { label: u64 },
    #[error("split diagram: {parts} disconnected pieces, expected 1")]
    Split { parts: usize },
    #[error("not a sphere diagram: {faces} faces with {crossings} crossings (expected {})", .crossings + 2)]
    NotSpherical { faces: usize, crossings: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MoveError {
    #[error("edge {0} out of range")]
    BadEdge(EdgeId),
    #[error("site {site} out of range: move has {count} sites here")]
    BadSite { site: usize, count: usize },
    #[error("connected sum requires single-component diagrams")]
    NotAKnot,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RMove {
    /// Add a positive kink on an edge.
    R1Pos,
    /// Add a negative kink on an edge.
    R1Neg,
    /// Push one strand over another across a shared face.
    R2,
    /// Flip a triangular face across its third crossing.
    R3,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Severity {
    Error,
    Warning,
    Info,
}

#[derive(Clone, Debug)]
pub struct Diagnostic {
    pub code: &'static str,
    pub severity: Severity,
    pub message: String,
    pub location: String,
}

/// Summary emitted by [`LinkDiagram::validate`]. Structural failures are
/// rejected at construction time, so diagnostics here are warnings about
/// accepted but degenerate features (nugatory crossings).
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub ok: bool,
    pub diagnostics: Vec<Diagnostic>,
    pub crossings: usize,
    pub edges: usize,
    pub components: usize,
    pub writhe: i64,
    pub faces: usize,
    pub alternating: bool,
    pub reduced: bool,
    pub nugatory: Vec<usize>,
}

/// A validated, oriented link diagram on the 2-sphere.
///
/// Invariants held by every constructed value: every edge label occurs twice,
/// strand traversal closes into cycles, the diagram is connected, and face
/// tracing satisfies V - E + F = 2.
#[derive(Clone)]
pub struct LinkDiagram {
    crossings: Vec<PdCrossing>,
    original_labels: Vec<u64>,
    edge_tail: Vec<Dart>,
    edge_head: Vec<Dart>,
    comp_of_edge: Vec<usize>,
    components: Vec<Vec<EdgeId>>,
    signs: Vec<i8>,
    over_in: Vec<u8>,
    faces: Vec<Vec<Dart>>,
    corner_face: Vec<[usize; 4]>,
}

impl PartialEq for LinkDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.crossings == other.crossings
    }
}
impl Eq for LinkDiagram {}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Flow {
    In,
    Out,
}

impl Flow {
    fn flip(self) -> Self {
        match self {
            Flow::In => Flow::Out,
            Flow::Out => Flow::In,
        }
    }
}

/// Dense index of a dart: 4 darts per crossing.
pub fn dart_index(d: Dart) -> usize {
    d.0 * 4 + d.1 as usize
}

impl LinkDiagram {
    /// Parses PD text such as `X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)`.
    /// Square brackets and comma separators between crossings are accepted.
    pub fn parse(text: &str) -> Result<Self, PdParseError> {
        let raw = parse_pd_text(text)?;
        Self::from_raw(raw)
    }

    /// Builds a diagram from raw crossing tuples with arbitrary positive
    /// labels. Labels are normalized to 1..2c in sorted order of the
    /// originals; the originals are kept for diagnostics.
    pub fn from_raw(raw: Vec<[u64; 4]>) -> Result<Self, PdParseError> {
        if raw.is_empty() {
            return Err(PdParseError::Empty);
        }
        let c = raw.len();
        let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
        for tuple in &raw {
            for &label in tuple {
                if label == 0 {
                    return Err(PdParseError::NonPositiveLabel);
                }
                *counts.entry(label).or_insert(0) += 1;
            }
        }
        for (&label, &count) in &counts {
            if count != 2 {
                return Err(PdParseError::LabelCount { label, count });
            }
        }
        let original_labels: Vec<u64> = counts.keys().copied().collect();
        debug_assert_eq!(original_labels.len(), 2 * c);
        let id_of: BTreeMap<u64, EdgeId> = original_labels
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, i))
            .collect();
        let crossings: Vec<PdCrossing> = raw
            .iter()
            .map(|t| PdCrossing {
                slots: [id_of[&t[0]], id_of[&t[1]], id_of[&t[2]], id_of[&t[3]]],
            })
            .collect();

        let n_edges = 2 * c;
        let mut ends: Vec<Vec<Dart>> = vec![Vec::new(); n_edges];
        for (ci, cr) in crossings.iter().enumerate() {
            for (si, &e) in cr.slots.iter().enumerate() {
                ends[e].push((ci, si as u8));
            }
        }
        let edge_ends: Vec<[Dart; 2]> = ends.iter().map(|v| [v[0], v[1]]).collect();

        let mut conn = UnionFind::new(c);
        for e in &edge_ends {
            conn.union(e[0].0, e[1].0);
        }
        let root0 = conn.find(0);
        let parts = (0..c).filter(|&i| conn.find(i) == root0).count();
        if parts != c {
            let mut roots: Vec<usize> = (0..c).map(|i| conn.find(i)).collect();
            roots.sort_unstable();
            roots.dedup();
            return Err(PdParseError::Split { parts: roots.len() });
        }

        let flow = derive_flow(&crossings, &edge_ends)
            .map_err(|e| PdParseError::OrientationConflict {
                label: original_labels[e],
            })?;

        let mut edge_tail = vec![(0usize, 0u8); n_edges];
        let mut edge_head = vec![(0usize, 0u8); n_edges];
        for (e, pair) in edge_ends.iter().enumerate() {
            let (a, b) = (pair[0], pair[1]);
            match (flow[dart_index(a)], flow[dart_index(b)]) {
                (Flow::Out, Flow::In) => {
                    edge_tail[e] = a;
                    edge_head[e] = b;
                }
                (Flow::In, Flow::Out) => {
                    edge_tail[e] = b;
                    edge_head[e] = a;
                }
                _ => {
                    return Err(PdParseError::OrientationConflict {
                        label: original_labels[e],
                    })
                }
            }
        }

        // Strand traversal: entering a crossing at slot s exits at slot s+2.
        let mut comp_of_edge = vec![usize::MAX; n_edges];
        let mut components = Vec::new();
        for start in 0..n_edges {
            if comp_of_edge[start] != usize::MAX {
                continue;
            }
            let comp_id = components.len();
            let mut cycle = Vec::new();
            let mut e = start;
            loop {
                comp_of_edge[e] = comp_id;
                cycle.push(e);
                let (ci, si) = edge_head[e];
                let exit = (si + 2) % 4;
                let next = crossings[ci].slots[exit as usize];
                debug_assert_eq!(edge_tail[next], (ci, exit));
                e = next;
                if e == start {
                    break;
                }
            }
            components.push(cycle);
        }

        let mut over_in = vec![0u8; c];
        let mut signs = vec![0i8; c];
        for ci in 0..c {
            let s1_in = flow[dart_index((ci, 1))] == Flow::In;
            let s3_in = flow[dart_index((ci, 3))] == Flow::In;
            debug_assert_ne!(s1_in, s3_in);
            over_in[ci] = if s1_in { 1 } else { 3 };
            signs[ci] = if s1_in { 1 } else { -1 };
        }

        let faces = trace_faces(&crossings, &edge_ends);
        if faces.len() != c + 2 {
            return Err(PdParseError::NotSpherical {
                faces: faces.len(),
                crossings: c,
            });
        }
        let mut face_of_dart = vec![usize::MAX; 4 * c];
        for (fi, face) in faces.iter().enumerate() {
            for &d in face {
                face_of_dart[dart_index(d)] = fi;
            }
        }
        let corner_face: Vec<[usize; 4]> = (0..c)
            .map(|ci| {
                // Corner k sits between slots k and k+1; the face passing it
                // contains the dart at slot k+1.
                [
                    face_of_dart[dart_index((ci, 1))],
                    face_of_dart[dart_index((ci, 2))],
                    face_of_dart[dart_index((ci, 3))],
                    face_of_dart[dart_index((ci, 0))],
                ]
            })
            .collect();

        Ok(Self {
            crossings,
            original_labels,
            edge_tail,
            edge_head,
            comp_of_edge,
            components,
            signs,
            over_in,
            faces,
            corner_face,
        })
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn crossings(&self) -> &[PdCrossing] {
        &self.crossings
    }

    pub fn edge_at(&self, ci: usize, slot: u8) -> EdgeId {
        self.crossings[ci].slots[slot as usize]
    }

    /// The original label an edge carried before normalization.
    pub fn original_label(&self, e: EdgeId) -> u64 {
        self.original_labels[e]
    }

    pub fn edge_tail(&self, e: EdgeId) -> Dart {
        self.edge_tail[e]
    }

    pub fn edge_head(&self, e: EdgeId) -> Dart {
        self.edge_head[e]
    }

    /// The other end of the edge occupying the given dart.
    pub fn opposite_end(&self, d: Dart) -> Dart {
        let e = self.edge_at(d.0, d.1);
        if self.edge_tail[e] == d {
            self.edge_head[e]
        } else {
            self.edge_tail[e]
        }
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Components as edge cycles in traversal order.
    pub fn components(&self) -> &[Vec<EdgeId>] {
        &self.components
    }

    pub fn component_of(&self, e: EdgeId) -> usize {
        self.comp_of_edge[e]
    }

    pub fn sign(&self, ci: usize) -> i8 {
        self.signs[ci]
    }

    /// Which of slots 1 and 3 carries the incoming over-strand.
    pub fn over_in_slot(&self, ci: usize) -> u8 {
        self.over_in[ci]
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    /// Faces of the sphere map, each a cyclic dart sequence.
    pub fn planar_faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    /// Face at the corner between slots k and k+1 of a crossing.
    pub fn corner_face(&self, ci: usize, corner: u8) -> usize {
        self.corner_face[ci][corner as usize]
    }

    /// A crossing is nugatory when the same face touches two opposite
    /// corners, so a circle meets the diagram only at that crossing.
    pub fn nugatory_crossings(&self) -> Vec<usize> {
        (0..self.crossings.len())
            .filter(|&ci| {
                self.corner_face[ci][0] == self.corner_face[ci][2]
                    || self.corner_face[ci][1] == self.corner_face[ci][3]
            })
            .collect()
    }

    pub fn is_reduced(&self) -> bool {
        self.nugatory_crossings().is_empty()
    }

    /// True when every edge joins an underpass to an overpass at two distinct
    /// crossings. Edges looping back to their own crossing count as
    /// non-alternating.
    pub fn is_alternating(&self) -> bool {
        (0..self.edge_count()).all(|e| self.edge_is_alternating(e))
    }

    pub fn edge_is_alternating(&self, e: EdgeId) -> bool {
        let (t, h) = (self.edge_tail[e], self.edge_head[e]);
        t.0 != h.0 && (t.1 % 2) != (h.1 % 2)
    }

    pub fn validate(&self) -> ValidationReport {
        let nugatory = self.nugatory_crossings();
        let diagnostics: Vec<Diagnostic> = nugatory
            .iter()
            .map(|&ci| Diagnostic {
                code: "nugatory-crossing",
                severity: Severity::Warning,
                message: format!(
                    "crossing {ci} is nugatory: a circle meets the diagram only there"
                ),
                location: format!("crossing {ci}"),
            })
            .collect();
        ValidationReport {
            ok: !diagnostics.iter().any(|d| d.severity == Severity::Error),
            crossings: self.crossing_count(),
            edges: self.edge_count(),
            components: self.component_count(),
            writhe: self.writhe(),
            faces: self.faces.len(),
            alternating: self.is_alternating(),
            reduced: nugatory.is_empty(),
            nugatory,
            diagnostics,
        }
    }

    /// Over/under swapped at every crossing: each tuple is rotated by one so
    /// that the old incoming over-strand slot becomes slot 0.
    pub fn mirror(&self) -> Self {
        let raw: Vec<[u64; 4]> = self
            .crossings
            .iter()
            .zip(&self.over_in)
            .map(|(cr, &oi)| {
                let s = cr.slots;
                let rot = |k: usize| self.original_labels[s[(k + oi as usize) % 4]];
                [rot(0), rot(1), rot(2), rot(3)]
            })
            .collect();
        Self::from_raw(raw).expect("mirror of a valid diagram is valid")
    }

    /// Cuts edge `e1` here and `e2` in `other` and splices the strands,
    /// concatenating the diagrams. Both diagrams must be knots (one
    /// component).
    pub fn connected_sum(
        &self,
        e1: EdgeId,
        other: &Self,
        e2: EdgeId,
    ) -> Result<Self, MoveError> {
        if self.component_count() != 1 || other.component_count() != 1 {
            return Err(MoveError::NotAKnot);
        }
        if e1 >= self.edge_count() {
            return Err(MoveError::BadEdge(e1));
        }
        if e2 >= other.edge_count() {
            return Err(MoveError::BadEdge(e2));
        }
        let shift = self.edge_count() as u64;
        let mut raw: Vec<[u64; 4]> = Vec::with_capacity(self.crossings.len() + other.crossings.len());
        for cr in &self.crossings {
            raw.push([
                cr.slots[0] as u64 + 1,
                cr.slots[1] as u64 + 1,
                cr.slots[2] as u64 + 1,
                cr.slots[3] as u64 + 1,
            ]);
        }
        for cr in &other.crossings {
            raw.push([
                cr.slots[0] as u64 + 1 + shift,
                cr.slots[1] as u64 + 1 + shift,
                cr.slots[2] as u64 + 1 + shift,
                cr.slots[3] as u64 + 1 + shift,
            ]);
        }
        // Resplice: tail(e1) -> head(e2) keeps label e1; tail(e2) -> head(e1)
        // keeps label e2.
        let h1 = self.edge_head[e1];
        let h2 = other.edge_head[e2];
        let l1 = e1 as u64 + 1;
        let l2 = e2 as u64 + 1 + shift;
        raw[h1.0][h1.1 as usize] = l2;
        raw[self.crossings.len() + h2.0][h2.1 as usize] = l1;
        Ok(Self::from_raw(raw).expect("connected sum of valid knots is valid"))
    }

    /// Number of distinct sites the move can target in this diagram.
    pub fn reidemeister_site_count(&self, mv: RMove) -> usize {
        match mv {
            RMove::R1Pos | RMove::R1Neg => self.edge_count(),
            RMove::R2 => self.r2_sites().len(),
            RMove::R3 => self.r3_sites().len(),
        }
    }

    /// Applies the move at the site with the given index; sites are
    /// enumerated deterministically per move kind.
    pub fn reidemeister_variant(&self, mv: RMove, site: usize) -> Result<Self, MoveError> {
        match mv {
            RMove::R1Pos | RMove::R1Neg => {
                if site >= self.edge_count() {
                    return Err(MoveError::BadSite {
                        site,
                        count: self.edge_count(),
                    });
                }
                Ok(self.kink(site, mv == RMove::R1Pos))
            }
            RMove::R2 => {
                let sites = self.r2_sites();
                let &(d1, d2) = sites.get(site).ok_or(MoveError::BadSite {
                    site,
                    count: sites.len(),
                })?;
                Ok(self.poke(d1, d2))
            }
            RMove::R3 => {
                let sites = self.r3_sites();
                let &(face, side) = sites.get(site).ok_or(MoveError::BadSite {
                    site,
                    count: sites.len(),
                })?;
                Ok(self.triangle_flip(face, side))
            }
        }
    }

    fn labels_raw(&self) -> Vec<[u64; 4]> {
        self.crossings
            .iter()
            .map(|cr| {
                [
                    cr.slots[0] as u64 + 1,
                    cr.slots[1] as u64 + 1,
                    cr.slots[2] as u64 + 1,
                    cr.slots[3] as u64 + 1,
                ]
            })
            .collect()
    }

    /// R1: edge e is cut and a kink crossing inserted. The strand runs
    /// p (under-in), loop q, then leaves as r.
    fn kink(&self, e: EdgeId, positive: bool) -> Self {
        let mut raw = self.labels_raw();
        let p = e as u64 + 1;
        let q = self.edge_count() as u64 + 1;
        let r = self.edge_count() as u64 + 2;
        let h = self.edge_head[e];
        raw[h.0][h.1 as usize] = r;
        if positive {
            raw.push([p, q, q, r]);
        } else {
            raw.push([p, r, q, q]);
        }
        Self::from_raw(raw).expect("kink insertion preserves validity")
    }

    /// Dart pairs on a common face with distinct underlying edges; the first
    /// dart's strand is pushed over the second's.
    fn r2_sites(&self) -> Vec<(Dart, Dart)> {
        let mut sites = Vec::new();
        for face in &self.faces {
            for &d1 in face {
                for &d2 in face {
                    if self.edge_at(d1.0, d1.1) != self.edge_at(d2.0, d2.1) {
                        sites.push((d1, d2));
                    }
                }
            }
        }
        sites
    }

    /// R2: push the strand of `d1`'s edge across the face, over the strand of
    /// `d2`'s edge. Both darts lie on the same face.
    fn poke(&self, d1: Dart, d2: Dart) -> Self {
        let e = self.edge_at(d1.0, d1.1);
        let f = self.edge_at(d2.0, d2.1);
        let b_e = self.opposite_end(d1);
        let b_f = self.opposite_end(d2);
        let mut raw = self.labels_raw();
        let base = self.edge_count() as u64;
        // e splits into p1 (keeps label), p2, p3; f into q1 (keeps label),
        // q2, q3, met in the order seen from d2's end of f.
        let p1 = e as u64 + 1;
        let (p2, p3, q2, q3) = (base + 1, base + 2, base + 3, base + 4);
        let q1 = f as u64 + 1;
        raw[b_e.0][b_e.1 as usize] = p3;
        raw[b_f.0][b_f.1 as usize] = q3;
        // Over-strand pieces sit in slots 1 and 3; the under-strand's
        // direction fixes slot 0 of each new crossing.
        let f_tail_at_d2 = self.edge_tail[f] == d2;
        if f_tail_at_d2 {
            raw.push([q2, p1, q3, p2]);
            raw.push([q1, p3, q2, p2]);
        } else {
            raw.push([q3, p2, q2, p1]);
            raw.push([q2, p2, q1, p3]);
        }
        Self::from_raw(raw).expect("poke across a face preserves validity")
    }

    /// Triangular faces with a side whose strand passes the triangle's two
    /// corners both over or both under; `side` indexes the slidable side.
    fn r3_sites(&self) -> Vec<(usize, usize)> {
        let mut sites = Vec::new();
        for (fi, face) in self.faces.iter().enumerate() {
            if face.len() != 3 {
                continue;
            }
            let edges: Vec<EdgeId> = face.iter().map(|&d| self.edge_at(d.0, d.1)).collect();
            let corners: Vec<usize> = face.iter().map(|&d| self.opposite_end(d).0).collect();
            let distinct_edges =
                edges[0] != edges[1] && edges[1] != edges[2] && edges[0] != edges[2];
            let distinct_corners =
                corners[0] != corners[1] && corners[1] != corners[2] && corners[0] != corners[2];
            if !distinct_edges || !distinct_corners {
                continue;
            }
            for side in 0..3 {
                let e = edges[side];
                let (t, h) = (self.edge_tail[e], self.edge_head[e]);
                if (t.1 % 2) == (h.1 % 2) {
                    sites.push((fi, side));
                }
            }
        }
        sites
    }

    /// R3: flip the triangle across the crossing opposite the sliding side.
    /// At each corner, the slot holding a triangle side receives that
    /// strand's far leg, and each leg slot receives the strand's new side.
    fn triangle_flip(&self, face_id: usize, _side: usize) -> Self {
        let face = &self.faces[face_id];
        let side_edges: Vec<EdgeId> = face.iter().map(|&d| self.edge_at(d.0, d.1)).collect();
        let mut raw = self.labels_raw();
        let base = self.edge_count() as u64;
        // One fresh label per triangle side: the new side of the same strand.
        let new_label = |i: usize| base + 1 + i as u64;
        for (i, &s) in side_edges.iter().enumerate() {
            let old = s as u64 + 1;
            for end in [self.edge_tail[s], self.edge_head[s]] {
                let ci = end.0;
                // Leg of this strand at the corner: the slot opposite the
                // side's own slot.
                let leg_slot = (end.1 + 2) % 4;
                let other_end = if self.edge_tail[s] == end {
                    self.edge_head[s]
                } else {
                    self.edge_tail[s]
                };
                let far_leg_slot = (other_end.1 + 2) % 4;
                let far_leg = self.edge_at(other_end.0, far_leg_slot) as u64 + 1;
                debug_assert_eq!(raw[ci][end.1 as usize], old);
                raw[ci][end.1 as usize] = far_leg;
                raw[ci][leg_slot as usize] = new_label(i);
            }
        }
        Self::from_raw(raw).expect("triangle flip preserves validity")
    }

    /// PD text with normalized labels.
    pub fn to_pd_string(&self) -> String {
        self.crossings
            .iter()
            .map(|cr| {
                format!(
                    "X({},{},{},{})",
                    cr.slots[0] + 1,
                    cr.slots[1] + 1,
                    cr.slots[2] + 1,
                    cr.slots[3] + 1
                )
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Debug for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinkDiagram[{}]", self.to_pd_string())
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_pd_string())
    }
}

/// Assigns an in/out direction to every dart. Slot 0 is forced inward and
/// slot 2 outward; the over-strand slots 1 and 3 are opposite at each
/// crossing, and the two ends of an edge are opposite. Strands that are
/// never an under-strand get the direction making their smallest dart
/// outgoing.
fn derive_flow(
    crossings: &[PdCrossing],
    edge_ends: &[[Dart; 2]],
) -> Result<Vec<Flow>, EdgeId> {
    let c = crossings.len();
    let n = 4 * c;
    let mut flow: Vec<Option<Flow>> = vec![None; n];
    let mut other_end = vec![(0usize, 0u8); n];
    for pair in edge_ends {
        other_end[dart_index(pair[0])] = pair[1];
        other_end[dart_index(pair[1])] = pair[0];
    }

    let mut queue: Vec<Dart> = Vec::new();
    let assign =
        |flow: &mut Vec<Option<Flow>>, queue: &mut Vec<Dart>, d: Dart, v: Flow| -> bool {
            match flow[dart_index(d)] {
                None => {
                    flow[dart_index(d)] = Some(v);
                    queue.push(d);
                    true
                }
                Some(old) => old == v,
            }
        };

    let seed_and_sweep = |flow: &mut Vec<Option<Flow>>,
                              queue: &mut Vec<Dart>,
                              seed: Dart,
                              v: Flow|
     -> Result<(), EdgeId> {
        if !assign(flow, queue, seed, v) {
            return Err(crossings[seed.0].slots[seed.1 as usize]);
        }
        while let Some(d) = queue.pop() {
            let val = flow[dart_index(d)].unwrap();
            let opp = other_end[dart_index(d)];
            if !assign(flow, queue, opp, val.flip()) {
                return Err(crossings[d.0].slots[d.1 as usize]);
            }
            if d.1 == 1 || d.1 == 3 {
                let partner = (d.0, (d.1 + 2) % 4);
                if !assign(flow, queue, partner, val.flip()) {
                    return Err(crossings[d.0].slots[d.1 as usize]);
                }
            }
        }
        Ok(())
    };

    for ci in 0..c {
        seed_and_sweep(&mut flow, &mut queue, (ci, 0), Flow::In)?;
        seed_and_sweep(&mut flow, &mut queue, (ci, 2), Flow::Out)?;
    }
    for ci in 0..c {
        for s in [1u8, 3u8] {
            if flow[dart_index((ci, s))].is_none() {
                seed_and_sweep(&mut flow, &mut queue, (ci, s), Flow::Out)?;
            }
        }
    }
    Ok(flow.into_iter().map(|f| f.unwrap()).collect())
}

/// Faces are orbits of darts under "walk to the other end of the edge, then
/// rotate one slot counterclockwise".
fn trace_faces(crossings: &[PdCrossing], edge_ends: &[[Dart; 2]]) -> Vec<Vec<Dart>> {
    let c = crossings.len();
    let mut other_end = vec![(0usize, 0u8); 4 * c];
    for pair in edge_ends {
        other_end[dart_index(pair[0])] = pair[1];
        other_end[dart_index(pair[1])] = pair[0];
    }
    let step = |d: Dart| -> Dart {
        let (ci, si) = other_end[dart_index(d)];
        (ci, (si + 1) % 4)
    };
    let mut seen = vec![false; 4 * c];
    let mut faces = Vec::new();
    for ci in 0..c {
        for si in 0..4u8 {
            let start = (ci, si);
            if seen[dart_index(start)] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = start;
            loop {
                seen[dart_index(d)] = true;
                face.push(d);
                d = step(d);
                if d == start {
                    break;
                }
            }
            faces.push(face);
        }
    }
    faces
}

fn parse_pd_text(text: &str) -> Result<Vec<[u64; 4]>, PdParseError> {
    let bytes = text.as_bytes();
    let mut i = 0usize;
    let mut raw = Vec::new();
    let skip_sep = |i: &mut usize| {
        while *i < bytes.len()
            && (bytes[*i].is_ascii_whitespace() || bytes[*i] == b',' || bytes[*i] == b';')
        {
            *i += 1;
        }
    };
    skip_sep(&mut i);
    while i < bytes.len() {
        if bytes[i] != b'X' && bytes[i] != b'x' {
            return Err(PdParseError::Syntax {
                at: i,
                msg: format!("expected 'X', found {:?}", bytes[i] as char),
            });
        }
        i += 1;
        if i >= bytes.len() || (bytes[i] != b'(' && bytes[i] != b'[') {
            return Err(PdParseError::Syntax {
                at: i,
                msg: "expected '(' after 'X'".to_string(),
            });
        }
        let close = if bytes[i] == b'(' { b')' } else { b']' };
        i += 1;
        let mut tuple = [0u64; 4];
        for k in 0..4 {
            while i < bytes.len() && bytes[i].is_ascii_whitespace() {
                i += 1;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(PdParseError::Syntax {
                    at: i,
                    msg: "expected an edge label".to_string(),
                });
            }
            tuple[k] = text[start..i].parse().map_err(|_| PdParseError::Syntax {
                at: start,
                msg: "edge label does not fit in 64 bits".to_string(),
            })?;
            while i < bytes.len() && bytes[i].is_ascii_whitespace() {
                i += 1;
            }
            let expect = if k < 3 { b',' } else { close };
            if i >= bytes.len() || bytes[i] != expect {
                return Err(PdParseError::Syntax {
                    at: i,
                    msg: format!("expected {:?}", expect as char),
                });
            }
            i += 1;
        }
        raw.push(tuple);
        skip_sep(&mut i);
    }
    if raw.is_empty() {
        return Err(PdParseError::Empty);
    }
    Ok(raw)
}
