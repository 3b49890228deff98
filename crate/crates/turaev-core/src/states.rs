//! Kauffman states and the Turaev surface.
//!
//! A state picks an A or B smoothing at every crossing. The A smoothing
//! joins slot 0 to slot 3 and slot 1 to slot 2; the B smoothing joins
//! slot 0 to slot 1 and slot 2 to slot 3. This pairing is frozen by the
//! calibration tests: the bundled trefoil must have two all-A circles and
//! three all-B circles.

use std::fmt;

use thiserror::Error;

use crate::diagram::{dart_index, Dart, EdgeId, LinkDiagram};
use crate::unionfind::UnionFind;

/// Default bound on the number of crossings for full state enumeration.
pub const DEFAULT_STATE_CAP: usize = 20;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Marker {
    A,
    B,
}

impl Marker {
    pub fn flipped(self) -> Self {
        match self {
            Marker::A => Marker::B,
            Marker::B => Marker::A,
        }
    }
}

/// Slot reached from `slot` by the smoothing arc of the given marker.
pub fn partner_slot(slot: u8, m: Marker) -> u8 {
    match m {
        Marker::A => [3, 2, 1, 0][slot as usize],
        Marker::B => [1, 0, 3, 2][slot as usize],
    }
}

/// A smoothing choice at every crossing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct State {
    markers: Vec<Marker>,
}

impl State {
    pub fn new(markers: Vec<Marker>) -> Self {
        Self { markers }
    }

    pub fn all_a(crossings: usize) -> Self {
        Self {
            markers: vec![Marker::A; crossings],
        }
    }

    pub fn all_b(crossings: usize) -> Self {
        Self {
            markers: vec![Marker::B; crossings],
        }
    }

    /// Crossing i gets a B marker iff bit i of `mask` is set.
    pub fn from_mask(crossings: usize, mask: u64) -> Self {
        Self {
            markers: (0..crossings)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        Marker::B
                    } else {
                        Marker::A
                    }
                })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.markers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.markers.is_empty()
    }

    pub fn marker(&self, crossing: usize) -> Marker {
        self.markers[crossing]
    }

    pub fn markers(&self) -> &[Marker] {
        &self.markers
    }

    /// Number of A markers.
    pub fn a_count(&self) -> usize {
        self.markers.iter().filter(|&&m| m == Marker::A).count()
    }

    /// Number of B markers.
    pub fn b_count(&self) -> usize {
        self.markers.len() - self.a_count()
    }

    pub fn with_flipped(&self, crossing: usize) -> Self {
        let mut markers = self.markers.clone();
        markers[crossing] = markers[crossing].flipped();
        Self { markers }
    }
}

impl fmt::Debug for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.markers {
            write!(f, "{}", if *m == Marker::A { 'A' } else { 'B' })?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StateError {
    #[error("state has {got} markers but the diagram has {expected} crossings")]
    MarkerCount { got: usize, expected: usize },
    #[error("enumeration of 2^{crossings} states exceeds the cap of {cap} crossings")]
    CapExceeded { crossings: usize, cap: usize },
}

/// Circles of a smoothed diagram.
#[derive(Clone, Debug)]
pub struct StateResolution {
    circle_of_edge: Vec<usize>,
    circle_of_dart: Vec<usize>,
    /// Each circle as its cyclic edge walk, ids ordered by smallest dart.
    circles: Vec<Vec<EdgeId>>,
}

impl StateResolution {
    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    pub fn circle_of_edge(&self, e: EdgeId) -> usize {
        self.circle_of_edge[e]
    }

    pub fn circle_of_dart(&self, d: Dart) -> usize {
        self.circle_of_dart[dart_index(d)]
    }

    pub fn circles(&self) -> &[Vec<EdgeId>] {
        &self.circles
    }
}

/// Traces the state circles by walking edges and smoothing arcs.
pub fn resolve(d: &LinkDiagram, s: &State) -> Result<StateResolution, StateError> {
    if s.len() != d.crossing_count() {
        return Err(StateError::MarkerCount {
            got: s.len(),
            expected: d.crossing_count(),
        });
    }
    let n = d.edge_count();
    let mut visited = vec![false; n];
    let mut raw_circles: Vec<Vec<EdgeId>> = Vec::new();
    let mut circle_of_edge = vec![usize::MAX; n];
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let id = raw_circles.len();
        let mut walk = Vec::new();
        let mut edge = start;
        let mut arrive: Dart = d.edge_head(edge);
        loop {
            visited[edge] = true;
            circle_of_edge[edge] = id;
            walk.push(edge);
            let exit_slot = partner_slot(arrive.1, s.marker(arrive.0));
            let exit: Dart = (arrive.0, exit_slot);
            let next = d.edge_at(exit.0, exit.1);
            arrive = d.opposite_end(exit);
            edge = next;
            if edge == start && arrive == d.edge_head(start) {
                break;
            }
            debug_assert!(!visited[edge] || edge == start);
        }
        raw_circles.push(walk);
    }

    // Deterministic ids: circles sorted by their smallest dart.
    let min_dart = |walk: &Vec<EdgeId>| -> usize {
        walk.iter()
            .map(|&e| dart_index(d.edge_tail(e)).min(dart_index(d.edge_head(e))))
            .min()
            .unwrap()
    };
    let mut order: Vec<usize> = (0..raw_circles.len()).collect();
    order.sort_by_key(|&i| min_dart(&raw_circles[i]));
    let mut rank = vec![0usize; raw_circles.len()];
    for (new_id, &old_id) in order.iter().enumerate() {
        rank[old_id] = new_id;
    }
    let mut circles = vec![Vec::new(); raw_circles.len()];
    for (old_id, walk) in raw_circles.into_iter().enumerate() {
        circles[rank[old_id]] = walk;
    }
    let circle_of_edge: Vec<usize> = circle_of_edge.into_iter().map(|c| rank[c]).collect();
    let mut circle_of_dart = vec![usize::MAX; 4 * d.crossing_count()];
    for ci in 0..d.crossing_count() {
        for slot in 0..4u8 {
            circle_of_dart[dart_index((ci, slot))] = circle_of_edge[d.edge_at(ci, slot)];
        }
    }
    Ok(StateResolution {
        circle_of_edge,
        circle_of_dart,
        circles,
    })
}

pub fn all_a(d: &LinkDiagram) -> State {
    State::all_a(d.crossing_count())
}

pub fn all_b(d: &LinkDiagram) -> State {
    State::all_b(d.crossing_count())
}

/// Circle count of the all-A state.
pub fn s_a_circles(d: &LinkDiagram) -> StateResolution {
    resolve(d, &all_a(d)).expect("all-A state always matches the diagram")
}

/// Circle count of the all-B state.
pub fn s_b_circles(d: &LinkDiagram) -> StateResolution {
    resolve(d, &all_b(d)).expect("all-B state always matches the diagram")
}

/// Genus of the Turaev surface built over the diagram:
/// (c + 2 - |s_A| - |s_B|) / 2.
pub fn turaev_genus_diagram(d: &LinkDiagram) -> usize {
    let c = d.crossing_count();
    let sa = s_a_circles(d).circle_count();
    let sb = s_b_circles(d).circle_count();
    let num = c + 2 - sa - sb;
    assert!(num % 2 == 0, "parity of |s_A|+|s_B| must match c");
    num / 2
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Adequacy {
    pub a_adequate: bool,
    pub b_adequate: bool,
}

impl Adequacy {
    pub fn adequate(&self) -> bool {
        self.a_adequate && self.b_adequate
    }

    pub fn inadequate(&self) -> bool {
        !self.a_adequate && !self.b_adequate
    }
}

/// Per-crossing arc test: the diagram is A-adequate when the two A-smoothing
/// arcs at every crossing lie on distinct all-A circles, and dually for B.
pub fn adequacy(d: &LinkDiagram) -> Adequacy {
    let sa = s_a_circles(d);
    let sb = s_b_circles(d);
    let mut a_adequate = true;
    let mut b_adequate = true;
    for ci in 0..d.crossing_count() {
        // A arcs pair slots (0,3) and (1,2); their circles are the circles
        // of the edges in those slots.
        if sa.circle_of_dart((ci, 0)) == sa.circle_of_dart((ci, 1)) {
            a_adequate = false;
        }
        // B arcs pair slots (0,1) and (2,3).
        if sb.circle_of_dart((ci, 0)) == sb.circle_of_dart((ci, 2)) {
            b_adequate = false;
        }
    }
    Adequacy {
        a_adequate,
        b_adequate,
    }
}

/// All 2^c states with their resolutions, in mask order (crossing i smoothed
/// B iff bit i set).
pub fn enumerate_states<'a>(
    d: &'a LinkDiagram,
    cap: Option<usize>,
) -> Result<impl Iterator<Item = (State, StateResolution)> + 'a, StateError> {
    let cap = cap.unwrap_or(DEFAULT_STATE_CAP);
    let c = d.crossing_count();
    if c > cap.min(62) {
        return Err(StateError::CapExceeded { crossings: c, cap });
    }
    Ok((0..1u64 << c).map(move |mask| {
        let s = State::from_mask(c, mask);
        let r = resolve(d, &s).expect("mask state always matches the diagram");
        (s, r)
    }))
}

/// The Turaev surface as a two-colored combinatorial map: vertices are
/// crossings, edges are diagram edges, white faces are all-A circles and
/// black faces are all-B circles. Around every vertex the four corners
/// alternate white, black, white, black by construction of the smoothings.
#[derive(Clone, Debug)]
pub struct TuraevSurfaceMap {
    pub vertices: usize,
    pub edges: usize,
    pub white_faces: Vec<Vec<EdgeId>>,
    pub black_faces: Vec<Vec<EdgeId>>,
    pub euler: i64,
    pub genus: usize,
}

pub fn turaev_surface_map(d: &LinkDiagram) -> TuraevSurfaceMap {
    let sa = s_a_circles(d);
    let sb = s_b_circles(d);
    let v = d.crossing_count() as i64;
    let e = d.edge_count() as i64;
    let f = (sa.circle_count() + sb.circle_count()) as i64;
    let euler = v - e + f;
    debug_assert_eq!(euler, f - v);
    let genus = {
        let two_g = 2 - euler;
        debug_assert!(two_g >= 0 && two_g % 2 == 0);
        (two_g / 2) as usize
    };
    debug_assert_eq!(genus, turaev_genus_diagram(d));
    TuraevSurfaceMap {
        vertices: d.crossing_count(),
        edges: d.edge_count(),
        white_faces: sa.circles().to_vec(),
        black_faces: sb.circles().to_vec(),
        euler,
        genus,
    }
}

/// Brute-force A-adequacy: every state with exactly one B marker has fewer
/// circles than the all-A state. Used as an oracle for the arc test.
pub fn a_adequate_bruteforce(d: &LinkDiagram) -> bool {
    let sa = s_a_circles(d).circle_count();
    let base = all_a(d);
    (0..d.crossing_count()).all(|ci| {
        let s = base.with_flipped(ci);
        let r = resolve(d, &s).expect("flipped state matches the diagram");
        r.circle_count() < sa
    })
}

/// Brute-force B-adequacy, dual to [`a_adequate_bruteforce`].
pub fn b_adequate_bruteforce(d: &LinkDiagram) -> bool {
    let sb = s_b_circles(d).circle_count();
    let base = all_b(d);
    (0..d.crossing_count()).all(|ci| {
        let s = base.with_flipped(ci);
        let r = resolve(d, &s).expect("flipped state matches the diagram");
        r.circle_count() < sb
    })
}

/// Union-find over edges; fast path for circle counts only.
pub fn circle_count_only(d: &LinkDiagram, s: &State) -> Result<usize, StateError> {
    if s.len() != d.crossing_count() {
        return Err(StateError::MarkerCount {
            got: s.len(),
            expected: d.crossing_count(),
        });
    }
    let mut uf = UnionFind::new(d.edge_count());
    let mut classes = d.edge_count();
    for ci in 0..d.crossing_count() {
        let (p, q) = match s.marker(ci) {
            Marker::A => ((0u8, 3u8), (1u8, 2u8)),
            Marker::B => ((0u8, 1u8), (2u8, 3u8)),
        };
        for (x, y) in [p, q] {
            if uf.union(d.edge_at(ci, x), d.edge_at(ci, y)) {
                classes -= 1;
            }
        }
    }
    Ok(classes)
}
