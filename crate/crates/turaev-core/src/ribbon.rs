//! The all-A ribbon graph of a diagram and its graph polynomials.
//!
//! Collapsing every circle of the all-A state to a vertex and every crossing
//! saddle to an edge produces a ribbon graph embedded in the Turaev surface.
//! Its faces are the all-B circles, so its genus equals the Turaev genus of
//! the diagram. The Tutte polynomial of the underlying graph recovers the
//! Jones polynomial on alternating diagrams, and the Bollobas-Riordan
//! polynomial recovers the Kauffman bracket in general.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::diagram::LinkDiagram;
use crate::poly::{
    bracket_bruteforce, bracket_sweep, delta, jones, BracketError, BracketPoly, Laurent, MPoly,
};
use crate::states::{partner_slot, s_a_circles, s_b_circles, Marker};
use crate::unionfind::UnionFind;

/// Cap on edge count for the spanning-subgraph sum: 2^e subgraphs.
pub const DEFAULT_BR_EDGE_CAP: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RibbonError {
    #[error("rotation system has an odd number of half-edges ({0})")]
    OddHalfEdges(usize),
    #[error("half-edge {0} is out of range or listed twice")]
    BadHalfEdge(usize),
    #[error("ribbon graph is disconnected")]
    Disconnected,
    #[error("subgraph sum over {edges} edges exceeds cap {cap}")]
    EdgeCapExceeded { edges: usize, cap: usize },
}

/// Orientable ribbon graph as a rotation system. Edge `e` consists of
/// half-edges `2e` and `2e + 1`; each vertex lists its incident half-edges
/// in cyclic order. Every half-edge appears at exactly one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonGraph {
    rotation: Vec<Vec<usize>>,
    vertex_of: Vec<usize>,
    /// Cyclic successor within the rotation at the half-edge's vertex.
    next: Vec<usize>,
}

impl RibbonGraph {
    pub fn new(rotation: Vec<Vec<usize>>) -> Result<Self, RibbonError> {
        let total: usize = rotation.iter().map(|r| r.len()).sum();
        if total % 2 != 0 {
            return Err(RibbonError::OddHalfEdges(total));
        }
        let mut vertex_of = vec![usize::MAX; total];
        let mut next = vec![usize::MAX; total];
        for (v, rot) in rotation.iter().enumerate() {
            for (i, &h) in rot.iter().enumerate() {
                if h >= total || vertex_of[h] != usize::MAX {
                    return Err(RibbonError::BadHalfEdge(h));
                }
                vertex_of[h] = v;
                next[h] = rot[(i + 1) % rot.len()];
            }
        }
        Ok(RibbonGraph {
            rotation,
            vertex_of,
            next,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.vertex_of.len() / 2
    }

    /// Cyclic half-edge order around each vertex.
    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn vertex_of(&self, half: usize) -> usize {
        self.vertex_of[half]
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        (self.vertex_of[2 * e], self.vertex_of[2 * e + 1])
    }

    /// Rotation systems encode exactly the orientable ribbon graphs.
    pub fn orientable(&self) -> bool {
        true
    }

    pub fn is_connected(&self) -> bool {
        if self.rotation.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(self.vertex_count());
        let mut classes = self.vertex_count();
        for e in 0..self.edge_count() {
            let (a, b) = self.endpoints(e);
            if uf.union(a, b) {
                classes -= 1;
            }
        }
        classes == 1
    }

    /// Face walks, each as its cyclic half-edge orbit under h -> next[h ^ 1].
    /// A vertex with no incident edges bounds one face, reported empty.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let total = self.vertex_of.len();
        let mut seen = vec![false; total];
        let mut out = Vec::new();
        for start in 0..total {
            if seen[start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut h = start;
            loop {
                seen[h] = true;
                walk.push(h);
                h = self.next[h ^ 1];
                if h == start {
                    break;
                }
            }
            out.push(walk);
        }
        for rot in &self.rotation {
            if rot.is_empty() {
                out.push(Vec::new());
            }
        }
        out
    }

    /// Genus via face tracing: (2 - V + E - F) / 2.
    pub fn genus(&self) -> Result<usize, RibbonError> {
        if !self.is_connected() {
            return Err(RibbonError::Disconnected);
        }
        let v = self.vertex_count() as i64;
        let e = self.edge_count() as i64;
        let f = self.faces().len() as i64;
        let two_g = 2 - v + e - f;
        debug_assert!(two_g >= 0 && two_g % 2 == 0, "Euler count of a closed orientable surface");
        Ok((two_g / 2) as usize)
    }

    /// Forgets the embedding.
    pub fn underlying(&self) -> MultiGraph {
        MultiGraph::new(
            self.vertex_count(),
            (0..self.edge_count()).map(|e| self.endpoints(e)).collect(),
        )
    }
}

pub fn ribbon_genus(g: &RibbonGraph) -> Result<usize, RibbonError> {
    g.genus()
}

/// Entry slot of a crossing passage through a smoothed arc. Arc kind 0 joins
/// slots 0 and 3, kind 1 joins slots 1 and 2; direction `true` enters at the
/// smaller slot.
fn entry_slot(kind: usize, dir: bool) -> u8 {
    match (kind, dir) {
        (0, true) => 0,
        (0, false) => 3,
        (1, true) => 1,
        _ => 2,
    }
}

/// Builds the ribbon graph of the all-A state: one vertex per state circle,
/// one edge per crossing, rotations read off by walking the circles.
///
/// Walk directions are aligned across circles so that the rotation system is
/// the one induced by the Turaev surface: at each crossing the two smoothed
/// arcs are traversed in opposite senses relative to the slot numbering.
/// The alignment propagates crossing by crossing and must close up
/// consistently; face tracing then reproduces the all-B circles, which is
/// asserted on every construction.
pub fn ribbon_from_all_a(d: &LinkDiagram) -> RibbonGraph {
    let c = d.crossing_count();
    // Arc 2*ci joins slots (0,3) at crossing ci, arc 2*ci+1 joins (1,2).
    let mut dir: Vec<Option<bool>> = vec![None; 2 * c];
    let mut rotation: Vec<Vec<usize>> = Vec::new();
    let mut queue: VecDeque<(usize, bool)> = VecDeque::new();
    queue.push_back((0, true));
    while let Some((start, want)) = queue.pop_front() {
        if let Some(b) = dir[start] {
            assert_eq!(b, want, "walk directions must close up consistently");
            continue;
        }
        let mut rot = Vec::new();
        let mut ci = start / 2;
        let mut kind = start % 2;
        let mut slot = entry_slot(kind, want);
        loop {
            let arc = 2 * ci + kind;
            debug_assert!(dir[arc].is_none(), "each arc lies on one circle");
            let b = slot == 0 || slot == 1;
            dir[arc] = Some(b);
            rot.push(arc);
            queue.push_back((arc ^ 1, !b));
            let out = partner_slot(slot, Marker::A);
            let (cj, s2) = d.opposite_end((ci, out));
            ci = cj;
            kind = usize::from(s2 == 1 || s2 == 2);
            slot = s2;
            if 2 * ci + kind == start {
                break;
            }
        }
        rotation.push(rot);
    }
    debug_assert_eq!(rotation.len(), s_a_circles(d).circle_count());
    let g = RibbonGraph::new(rotation).expect("circle walks visit every arc once");
    assert_eq!(
        g.faces().len(),
        s_b_circles(d).circle_count(),
        "faces of the all-A ribbon graph must trace the all-B circles"
    );
    g
}

/// Abstract multigraph: numbered vertices and an unordered edge list.
/// Loops and parallel edges allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Self {
        assert!(edges.iter().all(|&(a, b)| a < vertices && b < vertices));
        MultiGraph { vertices, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices == 0 {
            return false;
        }
        let mut uf = UnionFind::new(self.vertices);
        let mut classes = self.vertices;
        for &(a, b) in &self.edges {
            if uf.union(a, b) {
                classes -= 1;
            }
        }
        classes == 1
    }
}

/// Tutte polynomial in (x, y) by deletion and contraction: loops give y,
/// bridges give x, the edgeless graph gives 1. Subproblems are memoized on
/// an exact canonical labeling so recombining branches share work.
pub fn tutte(g: &MultiGraph) -> MPoly<2> {
    assert!(g.is_connected(), "deletion-contraction expects a connected graph");
    let mut memo = HashMap::new();
    tutte_rec(g.vertex_count(), g.edges().to_vec(), &mut memo)
}

type GraphKey = (usize, Vec<(usize, usize)>);

fn tutte_rec(
    nv: usize,
    mut edges: Vec<(usize, usize)>,
    memo: &mut HashMap<GraphKey, MPoly<2>>,
) -> MPoly<2> {
    if edges.is_empty() {
        return MPoly::one();
    }
    let key = canonical_form(nv, &edges);
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let (a, b) = edges.pop().unwrap();
    let val = if a == b {
        &MPoly::var(1) * &tutte_rec(nv, edges, memo)
    } else if !connects(nv, &edges, a, b) {
        let (cn, ce) = contract(nv, &edges, a, b);
        &MPoly::var(0) * &tutte_rec(cn, ce, memo)
    } else {
        let (cn, ce) = contract(nv, &edges, a, b);
        &tutte_rec(nv, edges, memo) + &tutte_rec(cn, ce, memo)
    };
    memo.insert(key, val.clone());
    val
}

fn connects(nv: usize, edges: &[(usize, usize)], a: usize, b: usize) -> bool {
    let mut uf = UnionFind::new(nv);
    for &(u, v) in edges {
        uf.union(u, v);
    }
    uf.find(a) == uf.find(b)
}

/// Merges the higher endpoint into the lower and compacts vertex ids.
fn contract(nv: usize, edges: &[(usize, usize)], a: usize, b: usize) -> GraphKey {
    debug_assert!(a != b);
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    let map = |w: usize| {
        if w == hi {
            lo
        } else if w > hi {
            w - 1
        } else {
            w
        }
    };
    (nv - 1, edges.iter().map(|&(u, v)| (map(u), map(v))).collect())
}

/// Canonical multigraph key: lexicographically least normalized edge list
/// over vertex orders reached by color refinement with branching on ties.
/// Isomorphic graphs get equal keys, non-isomorphic graphs distinct ones.
fn canonical_form(nv: usize, edges: &[(usize, usize)]) -> GraphKey {
    canon_search(nv, edges, &vec![0; nv])
}

fn canon_search(nv: usize, edges: &[(usize, usize)], init: &[usize]) -> GraphKey {
    let color = refine(nv, edges, init);
    let classes = color.iter().max().map_or(0, |&m| m + 1);
    if classes == nv {
        let mut named: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(u, v)| {
                let (cu, cv) = (color[u], color[v]);
                (cu.min(cv), cu.max(cv))
            })
            .collect();
        named.sort_unstable();
        return (nv, named);
    }
    let mut counts = vec![0usize; classes];
    for &c in &color {
        counts[c] += 1;
    }
    let split = (0..classes)
        .filter(|&c| counts[c] > 1)
        .min_by_key(|&c| counts[c])
        .unwrap();
    let mut best: Option<GraphKey> = None;
    for v in 0..nv {
        if color[v] != split {
            continue;
        }
        let mut forced: Vec<usize> = color.iter().map(|&c| 2 * c + 1).collect();
        forced[v] -= 1;
        let cand = canon_search(nv, edges, &forced);
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    best.unwrap()
}

/// Iterated partition refinement by loop count and neighbor color multiset.
/// Returns contiguous color ids ordered by signature.
fn refine(nv: usize, edges: &[(usize, usize)], init: &[usize]) -> Vec<usize> {
    let mut color = rank_values(init);
    loop {
        let mut sig: Vec<(usize, usize, Vec<usize>)> =
            (0..nv).map(|v| (color[v], 0, Vec::new())).collect();
        for &(a, b) in edges {
            if a == b {
                sig[a].1 += 1;
            } else {
                sig[a].2.push(color[b]);
                sig[b].2.push(color[a]);
            }
        }
        for s in &mut sig {
            s.2.sort_unstable();
        }
        let next = rank_values(&sig);
        if next == color {
            return color;
        }
        color = next;
    }
}

fn rank_values<T: Ord + Clone>(vals: &[T]) -> Vec<usize> {
    let mut sorted: Vec<&T> = vals.iter().collect();
    sorted.sort();
    sorted.dedup();
    vals.iter()
        .map(|v| sorted.binary_search(&v).unwrap())
        .collect()
}

#[derive(Debug, Error)]
pub enum ThistlethwaiteError {
    #[error("diagram is not alternating")]
    NotAlternating,
    #[error("diagram has a nugatory crossing")]
    NotReduced,
    #[error(transparent)]
    Bracket(#[from] BracketError),
    #[error("Jones and Tutte at (-1/t, -t) differ beyond a monomial: {0}")]
    Mismatch(String),
}

/// Monomial relating the Jones polynomial to the Tutte evaluation:
/// jones = sign * q^q_power * T_{G_A}(-1/t, -t) with t = q^2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TutteJonesMatch {
    pub sign: i64,
    pub q_power: i64,
}

/// Checks the alternating-diagram identity between the Jones polynomial and
/// the Tutte polynomial of the all-A ribbon graph. The substitution pairs
/// x with -1/t and y with -t; on the checkerboard-dual graph this is the
/// classical (-t, -1/t) form.
pub fn check_thistlethwaite(d: &LinkDiagram) -> Result<TutteJonesMatch, ThistlethwaiteError> {
    if !d.is_alternating() {
        return Err(ThistlethwaiteError::NotAlternating);
    }
    if !d.is_reduced() {
        return Err(ThistlethwaiteError::NotReduced);
    }
    let v = jones(d, None)?;
    let g = ribbon_from_all_a(d);
    let t = tutte(&g.underlying());
    let x = Laurent::<'q'>::monomial(-1, -2);
    let y = Laurent::<'q'>::monomial(-1, 2);
    let tv = t.eval_laurent(&[x, y]);
    let ratio = v
        .div_exact(&tv)
        .ok_or_else(|| ThistlethwaiteError::Mismatch(format!("{} vs {}", v, tv)))?;
    let terms: Vec<(i64, i64)> = ratio.terms().collect();
    if terms.len() != 1 || terms[0].1.abs() != 1 {
        return Err(ThistlethwaiteError::Mismatch(format!("quotient {}", ratio)));
    }
    let (q_power, sign) = terms[0];
    let w = d.writhe();
    let sa = s_a_circles(d).circle_count() as i64;
    debug_assert_eq!(sign, if w % 2 == 0 { 1 } else { -1 });
    debug_assert_eq!(q_power, (3 * w - d.crossing_count() as i64 + 2 * sa - 2) / 2);
    Ok(TutteJonesMatch { sign, q_power })
}

/// Bollobas-Riordan polynomial in (X, Y, Z): the sum over spanning subgraphs
/// S of X^(r(E)-r(S)) Y^(n(S)) Z^(k(S)-bc(S)+n(S)), where r = V - k,
/// n = |S| - r, and bc counts boundary components of the ribbon subgraph.
/// The Z-exponent is twice the subgraph genus, so setting Z to 1 on a planar
/// graph collapses to the Whitney rank polynomial, hence to Tutte under
/// x = X + 1, y = Y + 1.
pub fn bollobas_riordan(g: &RibbonGraph, cap: Option<usize>) -> Result<MPoly<3>, RibbonError> {
    let ne = g.edge_count();
    let nv = g.vertex_count();
    let cap = cap.unwrap_or(DEFAULT_BR_EDGE_CAP);
    if ne > cap.min(62) {
        return Err(RibbonError::EdgeCapExceeded { edges: ne, cap });
    }
    let rank_full = (nv - component_count(g, u64::MAX)) as u32;
    let mut out = MPoly::zero();
    for mask in 0u64..(1u64 << ne) {
        let k = component_count(g, mask);
        let r = (nv - k) as u32;
        let n = mask.count_ones() - r;
        let bc = boundary_components(g, mask);
        let z = k as i64 - bc as i64 + n as i64;
        debug_assert!(z >= 0 && z % 2 == 0, "Z-exponent is twice the subgraph genus");
        out.add_term([rank_full - r, n, z as u32], 1);
    }
    Ok(out)
}

/// Connected components of the spanning subgraph, isolated vertices included.
fn component_count(g: &RibbonGraph, mask: u64) -> usize {
    let mut uf = UnionFind::new(g.vertex_count());
    let mut classes = g.vertex_count();
    for e in 0..g.edge_count() {
        if mask & (1 << e) != 0 {
            let (a, b) = g.endpoints(e);
            if uf.union(a, b) {
                classes -= 1;
            }
        }
    }
    classes
}

/// Boundary components of the ribbon subgraph: face tracing with rotations
/// restricted to the chosen edges. Isolated vertices bound one circle each.
fn boundary_components(g: &RibbonGraph, mask: u64) -> usize {
    let total = 2 * g.edge_count();
    let mut sub_next = vec![usize::MAX; total];
    let mut isolated = 0usize;
    for rot in g.rotations() {
        let kept: Vec<usize> = rot
            .iter()
            .copied()
            .filter(|&h| mask & (1 << (h / 2)) != 0)
            .collect();
        if kept.is_empty() {
            isolated += 1;
            continue;
        }
        for (i, &h) in kept.iter().enumerate() {
            sub_next[h] = kept[(i + 1) % kept.len()];
        }
    }
    let mut seen = vec![false; total];
    let mut circles = 0usize;
    for start in 0..total {
        if sub_next[start] == usize::MAX || seen[start] {
            continue;
        }
        circles += 1;
        let mut h = start;
        while !seen[h] {
            seen[h] = true;
            h = sub_next[h ^ 1];
        }
    }
    circles + isolated
}

#[derive(Debug, Error)]
pub enum BrIdentityError {
    #[error(transparent)]
    Ribbon(#[from] RibbonError),
    #[error(transparent)]
    Bracket(#[from] BracketError),
    #[error("bracket specialization mismatch: {lhs} vs {rhs}")]
    Mismatch { lhs: String, rhs: String },
}

/// Verifies that the Bollobas-Riordan polynomial of the all-A ribbon graph
/// specializes to the Kauffman bracket. Cross-multiplied by delta^m with m
/// the top Z-degree, so the whole check stays in Laurent polynomials:
///
///   delta^m * bracket = A^(c - 2|s_A| + 2) *
///       sum of coef * (-1 - A^4)^i * (-1 - A^-4)^j * delta^(m - z)
///
/// over BR terms coef * X^i Y^j Z^z.
pub fn check_br_bracket(d: &LinkDiagram, cap: Option<usize>) -> Result<(), BrIdentityError> {
    let g = ribbon_from_all_a(d);
    let br = bollobas_riordan(&g, cap)?;
    let m = br.max_degree_in(2);
    let dl = delta();
    let x = Laurent::<'A'>::from_terms(&[(0, -1), (4, -1)]);
    let y = Laurent::<'A'>::from_terms(&[(0, -1), (-4, -1)]);
    let mut rhs = BracketPoly::zero();
    for (exps, coef) in br.terms() {
        let mut term = &x.pow(exps[0]) * &y.pow(exps[1]);
        term *= &dl.pow(m - exps[2]);
        term.mul_term(0, coef);
        rhs += &term;
    }
    let c = d.crossing_count() as i64;
    let sa = s_a_circles(d).circle_count() as i64;
    rhs.mul_term(c - 2 * sa + 2, 1);
    let bracket = match bracket_sweep(d, None) {
        Ok(b) => b,
        Err(BracketError::WidthExceeded { .. }) => bracket_bruteforce(d, None)?,
        Err(e) => return Err(e.into()),
    };
    let mut lhs = bracket;
    lhs *= &dl.pow(m);
    if lhs != rhs {
        return Err(BrIdentityError::Mismatch {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::turaev_genus_diagram;
    use crate::testutil::{braid_closure_pd, parse, rng, torus3_pd, variant_walk, TREFOIL, TREFOIL_BRAID4};
    use rand::seq::SliceRandom;

    fn poly2(pairs: &[([u32; 2], i64)]) -> MPoly<2> {
        let mut p = MPoly::zero();
        for &(e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    #[test]
    fn trefoil_ribbon_is_theta_graph() {
        let g = ribbon_from_all_a(&parse(TREFOIL));
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 3);
        for e in 0..3 {
            let (a, b) = g.endpoints(e);
            assert_ne!(a, b);
        }
        assert_eq!(g.faces().len(), 3);
        assert_eq!(g.genus(), Ok(0));
    }

    #[test]
    fn kink_ribbon_is_a_bridge() {
        let g = ribbon_from_all_a(&parse("X(1,2,2,1)"));
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
        assert_eq!(g.faces().len(), 1);
        assert_eq!(g.genus(), Ok(0));
    }

    #[test]
    fn edgeless_vertex_is_a_sphere() {
        let g = RibbonGraph::new(vec![vec![]]).unwrap();
        assert_eq!(g.faces().len(), 1);
        assert_eq!(g.genus(), Ok(0));
    }

    #[test]
    fn loop_order_at_a_bouquet_decides_genus() {
        let interleaved = RibbonGraph::new(vec![vec![0, 2, 1, 3]]).unwrap();
        assert_eq!(interleaved.faces().len(), 1);
        assert_eq!(interleaved.genus(), Ok(1));
        let nested = RibbonGraph::new(vec![vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(nested.faces().len(), 3);
        assert_eq!(nested.genus(), Ok(0));
    }

    #[test]
    fn bad_rotation_systems_are_rejected() {
        assert_eq!(
            RibbonGraph::new(vec![vec![0, 1, 2]]).unwrap_err(),
            RibbonError::OddHalfEdges(3)
        );
        assert_eq!(
            RibbonGraph::new(vec![vec![0, 0], vec![1, 2]]).unwrap_err(),
            RibbonError::BadHalfEdge(0)
        );
        let disconnected = RibbonGraph::new(vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(disconnected.genus(), Err(RibbonError::Disconnected));
    }

    #[test]
    fn ribbon_genus_matches_diagram_genus() {
        for (pd, want) in [
            (TREFOIL.to_string(), 0),
            (TREFOIL_BRAID4.to_string(), 1),
            (torus3_pd(4), 3),
            (torus3_pd(6), 5),
        ] {
            let d = parse(&pd);
            let g = ribbon_from_all_a(&d);
            assert_eq!(g.genus(), Ok(want));
            assert_eq!(g.genus().unwrap(), turaev_genus_diagram(&d));
        }
    }

    #[test]
    fn ribbon_genus_tracks_diagram_genus_along_variant_walks() {
        for (seed, base) in [(11, parse(TREFOIL)), (12, parse(TREFOIL_BRAID4))] {
            for v in variant_walk(&base, 30, 10, &mut rng(seed)) {
                let g = ribbon_from_all_a(&v);
                assert_eq!(g.vertex_count(), s_a_circles(&v).circle_count());
                assert_eq!(g.edge_count(), v.crossing_count());
                assert_eq!(g.genus().unwrap(), turaev_genus_diagram(&v));
            }
        }
    }

    #[test]
    fn tutte_base_cases() {
        let bridge = MultiGraph::new(2, vec![(0, 1)]);
        assert_eq!(tutte(&bridge), poly2(&[([1, 0], 1)]));
        let lp = MultiGraph::new(1, vec![(0, 0)]);
        assert_eq!(tutte(&lp), poly2(&[([0, 1], 1)]));
        let point = MultiGraph::new(1, vec![]);
        assert_eq!(tutte(&point), MPoly::one());
    }

    #[test]
    fn tutte_of_theta_graph() {
        let theta = MultiGraph::new(2, vec![(0, 1), (0, 1), (0, 1)]);
        assert_eq!(tutte(&theta), poly2(&[([1, 0], 1), ([0, 1], 1), ([0, 2], 1)]));
    }

    #[test]
    fn tutte_of_triangle_is_dual_to_theta() {
        let triangle = MultiGraph::new(3, vec![(0, 1), (1, 2), (2, 0)]);
        assert_eq!(
            tutte(&triangle),
            poly2(&[([2, 0], 1), ([1, 0], 1), ([0, 1], 1)])
        );
    }

    #[test]
    fn tutte_is_independent_of_edge_order() {
        let mut edges = vec![(0, 1), (0, 1), (1, 2), (2, 0), (2, 2), (0, 1)];
        let reference = tutte(&MultiGraph::new(3, edges.clone()));
        let mut r = rng(21);
        for _ in 0..6 {
            edges.shuffle(&mut r);
            assert_eq!(tutte(&MultiGraph::new(3, edges.clone())), reference);
        }
    }

    #[test]
    fn canonical_form_ignores_vertex_labels() {
        let a = canonical_form(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 0)]);
        let b = canonical_form(4, &[(3, 2), (2, 1), (1, 0), (0, 3), (3, 3)]);
        assert_eq!(a, b);
        let c = canonical_form(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 1)]);
        assert_eq!(b, c);
        let parallel = canonical_form(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 1)]);
        assert_ne!(a, parallel);
    }

    #[test]
    fn thistlethwaite_match_on_the_trefoil() {
        let m = check_thistlethwaite(&parse(TREFOIL)).unwrap();
        assert_eq!(m, TutteJonesMatch { sign: -1, q_power: 4 });
    }

    #[test]
    fn thistlethwaite_match_on_alternating_samples() {
        let t25 = braid_closure_pd(2, &[(0, true); 5]);
        let fig8 = braid_closure_pd(3, &[(0, true), (1, false), (0, true), (1, false)]);
        for pd in [t25, fig8] {
            let d = parse(&pd);
            assert!(d.is_alternating() && d.is_reduced());
            check_thistlethwaite(&d).unwrap();
        }
    }

    #[test]
    fn thistlethwaite_preconditions() {
        assert!(matches!(
            check_thistlethwaite(&parse(TREFOIL_BRAID4)),
            Err(ThistlethwaiteError::NotAlternating)
        ));
        // two trefoil tangles sharing one crossing: alternating, nugatory
        let clasped = parse(
            "X(7,4,2,5) X(3,6,4,8) X(5,2,6,3) X(11,18,12,15) X(13,16,17,11) X(15,12,16,13) X(8,17,18,7)",
        );
        assert!(clasped.is_alternating() && !clasped.is_reduced());
        assert!(matches!(
            check_thistlethwaite(&clasped),
            Err(ThistlethwaiteError::NotReduced)
        ));
    }

    #[test]
    fn br_at_z_one_is_tutte_shifted_for_planar_graphs() {
        for pd in [TREFOIL.to_string(), torus3_pd(2)] {
            let g = ribbon_from_all_a(&parse(&pd));
            let br = bollobas_riordan(&g, None).unwrap();
            assert_eq!(br.max_degree_in(2), 2 * g.genus().unwrap() as u32);
            let t = tutte(&g.underlying());
            // polynomial identity testing on an integer grid larger than
            // the degree: BR(X, Y, 1) = T(X + 1, Y + 1)
            let e = g.edge_count() as i64;
            for xv in 2..e + 4 {
                for yv in 2..e + 4 {
                    let lhs = br.eval_i64([xv, yv, 1]).unwrap();
                    let rhs = t.eval_i64([xv + 1, yv + 1]).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn br_of_interleaved_bouquet_by_hand() {
        // subgraphs: empty -> X, one loop -> Y (twice), both -> Y^2 Z^2
        let g = RibbonGraph::new(vec![vec![0, 2, 1, 3]]).unwrap();
        let br = bollobas_riordan(&g, None).unwrap();
        let mut want = MPoly::zero();
        want.add_term([0, 0, 0], 1);
        want.add_term([0, 1, 0], 2);
        want.add_term([0, 2, 2], 1);
        assert_eq!(br, want);
    }

    #[test]
    fn br_edge_cap_is_enforced() {
        let g = ribbon_from_all_a(&parse(TREFOIL));
        assert_eq!(
            bollobas_riordan(&g, Some(2)).unwrap_err(),
            RibbonError::EdgeCapExceeded { edges: 3, cap: 2 }
        );
    }

    #[test]
    fn bracket_specialization_on_fixtures() {
        for pd in [
            "X(1,2,2,1)".to_string(),
            TREFOIL.to_string(),
            TREFOIL_BRAID4.to_string(),
            torus3_pd(3),
        ] {
            check_br_bracket(&parse(&pd), None).unwrap();
        }
    }

    #[test]
    fn bracket_specialization_along_variant_walks() {
        for (seed, base) in [(31, parse(TREFOIL)), (32, parse(TREFOIL_BRAID4))] {
            for v in variant_walk(&base, 25, 9, &mut rng(seed)) {
                check_br_bracket(&v, None).unwrap();
            }
        }
    }
}
