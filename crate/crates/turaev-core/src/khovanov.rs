//! Khovanov homology of a link diagram.
//!
//! The cube of resolutions puts the A-smoothing at coordinate 0 and the
//! B-smoothing at coordinate 1. A state with r B-markers sits in homological
//! degree i = r - n_minus; a labelling of its circles with 1 or x sits in
//! quantum degree j = (#1 - #x) + r + n_plus - 2 n_minus. Merges multiply,
//! splits comultiply, and edge signs make the cube anticommute. The graded
//! Euler characteristic is (q + 1/q) times the Jones polynomial.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::diagram::LinkDiagram;
use crate::poly::JonesPoly;
use crate::states::{resolve, State, StateResolution};

/// Cap on crossing count: the cube has 2^c states.
pub const DEFAULT_KHOVANOV_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomologyField {
    Rational,
    Mod2,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KhovanovError {
    #[error("diagram has {crossings} crossings, over the homology cap of {cap}")]
    TooManyCrossings { crossings: usize, cap: usize },
}

/// Betti numbers of the Khovanov complex over one field, indexed by the
/// bigrading (i, j). Only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KhovanovHomology {
    field: HomologyField,
    betti: BTreeMap<(i64, i64), usize>,
}

impl KhovanovHomology {
    pub fn field(&self) -> HomologyField {
        self.field
    }

    pub fn betti(&self, i: i64, j: i64) -> usize {
        self.betti.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn table(&self) -> &BTreeMap<(i64, i64), usize> {
        &self.betti
    }

    pub fn total_rank(&self) -> usize {
        self.betti.values().sum()
    }

    /// Sum of (-1)^i q^j over the table. For a knot this equals
    /// (q + 1/q) V(q) whatever the field.
    pub fn graded_euler_characteristic(&self) -> JonesPoly {
        let mut p = JonesPoly::zero();
        for (&(i, j), &b) in &self.betti {
            let sign = if i.rem_euclid(2) == 0 { 1 } else { -1 };
            p.add_term(j, sign * b as i64);
        }
        p
    }

    /// Distinct values of delta = j - 2i carrying homology.
    pub fn delta_diagonals(&self) -> Vec<i64> {
        let set: BTreeSet<i64> = self.betti.keys().map(|&(i, j)| j - 2 * i).collect();
        set.into_iter().collect()
    }

    pub fn delta_range(&self) -> Option<(i64, i64)> {
        let diags = self.delta_diagonals();
        Some((*diags.first()?, *diags.last()?))
    }

    /// Homological width: the number of occupied delta diagonals.
    /// Thin links have width 2.
    pub fn delta_width(&self) -> usize {
        self.delta_diagonals().len()
    }
}

pub fn khovanov(
    d: &LinkDiagram,
    field: HomologyField,
    cap: Option<usize>,
) -> Result<KhovanovHomology, KhovanovError> {
    let cap = cap.unwrap_or(DEFAULT_KHOVANOV_CAP);
    let crossings = d.crossing_count();
    if crossings > cap {
        return Err(KhovanovError::TooManyCrossings { crossings, cap });
    }
    let cube = CubeComplex::build(d);
    Ok(KhovanovHomology {
        field,
        betti: cube.betti(field),
    })
}

/// Chain groups of the cube grouped by bigrading, with the differential of
/// each block as sparse integer triplets (target row, source column, sign).
/// The block keyed by (i, j) maps into the block keyed by (i + 1, j).
struct CubeComplex {
    dims: BTreeMap<(i64, i64), usize>,
    diffs: BTreeMap<(i64, i64), Vec<(usize, usize, i64)>>,
}

impl CubeComplex {
    fn build(d: &LinkDiagram) -> Self {
        let c = d.crossing_count();
        let n_minus = (0..c).filter(|&ci| d.sign(ci) < 0).count() as i64;
        let n_plus = c as i64 - n_minus;
        let res: Vec<StateResolution> = (0..1u64 << c)
            .map(|m| resolve(d, &State::from_mask(c, m)).expect("mask covers every crossing"))
            .collect();

        let mut dims: BTreeMap<(i64, i64), usize> = BTreeMap::new();
        let mut index: HashMap<(u64, u32), usize> = HashMap::new();
        for m in 0..1u64 << c {
            let k = res[m as usize].circle_count();
            let r = m.count_ones() as i64;
            let i = r - n_minus;
            let j_base = k as i64 + r + n_plus - 2 * n_minus;
            for lam in 0..1u32 << k {
                let j = j_base - 2 * lam.count_ones() as i64;
                let slot = dims.entry((i, j)).or_insert(0);
                index.insert((m, lam), *slot);
                *slot += 1;
            }
        }

        let mut diffs: BTreeMap<(i64, i64), Vec<(usize, usize, i64)>> = BTreeMap::new();
        for m in 0..1u64 << c {
            let src = &res[m as usize];
            let k = src.circle_count();
            let r = m.count_ones() as i64;
            let i = r - n_minus;
            let j_base = k as i64 + r + n_plus - 2 * n_minus;
            for t in 0..c {
                if m >> t & 1 == 1 {
                    continue;
                }
                let m2 = m | 1 << t;
                let dst = &res[m2 as usize];
                let sign = if (m & ((1 << t) - 1)).count_ones() % 2 == 0 {
                    1
                } else {
                    -1
                };
                // The A-smoothing at t pairs slots (0,3) and (1,2), so the
                // two strands there lie on the circles through darts (t,0)
                // and (t,1). Every other circle keeps its darts and maps to
                // the unique target circle containing them.
                let c1 = src.circle_of_dart((t, 0));
                let c2 = src.circle_of_dart((t, 1));
                let mut carry = vec![0usize; k];
                for ci in 0..c {
                    for s in 0..4u8 {
                        carry[src.circle_of_dart((ci, s))] = dst.circle_of_dart((ci, s));
                    }
                }
                let mut push = |lam: u32, lam2: u32, j: i64| {
                    let col = index[&(m, lam)];
                    let row = index[&(m2, lam2)];
                    diffs.entry((i, j)).or_default().push((row, col, sign));
                };
                if c1 != c2 {
                    // merge: 1*1 -> 1, 1*x and x*1 -> x, x*x -> 0
                    let merged = carry[c1];
                    debug_assert_eq!(dst.circle_count(), k - 1);
                    for lam in 0..1u32 << k {
                        let b1 = lam >> c1 & 1;
                        let b2 = lam >> c2 & 1;
                        if b1 == 1 && b2 == 1 {
                            continue;
                        }
                        let mut lam2 = 0u32;
                        for s in 0..k {
                            if s != c1 && s != c2 {
                                lam2 |= (lam >> s & 1) << carry[s];
                            }
                        }
                        lam2 |= (b1 | b2) << merged;
                        push(lam, lam2, j_base - 2 * lam.count_ones() as i64);
                    }
                } else {
                    // split: 1 -> 1(x) + (x)1, x -> xx; the B-smoothing
                    // pairs slots (0,1) and (2,3)
                    let s1 = dst.circle_of_dart((t, 0));
                    let s2 = dst.circle_of_dart((t, 2));
                    debug_assert_eq!(dst.circle_count(), k + 1);
                    debug_assert_ne!(s1, s2);
                    for lam in 0..1u32 << k {
                        let mut base = 0u32;
                        for s in 0..k {
                            if s != c1 {
                                base |= (lam >> s & 1) << carry[s];
                            }
                        }
                        let j = j_base - 2 * lam.count_ones() as i64;
                        if lam >> c1 & 1 == 1 {
                            push(lam, base | 1 << s1 | 1 << s2, j);
                        } else {
                            push(lam, base | 1 << s1, j);
                            push(lam, base | 1 << s2, j);
                        }
                    }
                }
            }
        }
        CubeComplex { dims, diffs }
    }

    fn betti(&self, field: HomologyField) -> BTreeMap<(i64, i64), usize> {
        let mut ranks: HashMap<(i64, i64), usize> = HashMap::new();
        for (&key, triplets) in &self.diffs {
            let r = match field {
                HomologyField::Rational => rank_rational(triplets),
                HomologyField::Mod2 => rank_mod2(triplets),
            };
            ranks.insert(key, r);
        }
        let mut out = BTreeMap::new();
        for (&(i, j), &dim) in &self.dims {
            let out_rank = ranks.get(&(i, j)).copied().unwrap_or(0);
            let in_rank = ranks.get(&(i - 1, j)).copied().unwrap_or(0);
            let b = dim as i64 - out_rank as i64 - in_rank as i64;
            assert!(b >= 0, "ranks exceed the chain group dimension");
            if b > 0 {
                out.insert((i, j), b as usize);
            }
        }
        out
    }
}

/// Rank over GF(2) by bitset row reduction.
fn rank_mod2(triplets: &[(usize, usize, i64)]) -> usize {
    let mut parity: HashMap<(usize, usize), bool> = HashMap::new();
    for &(r, c, v) in triplets {
        if v.rem_euclid(2) == 1 {
            let e = parity.entry((r, c)).or_insert(false);
            *e = !*e;
        }
    }
    let mut cols = 0usize;
    let mut rows: HashMap<usize, Vec<u64>> = HashMap::new();
    for (&(r, c), &odd) in &parity {
        if odd {
            cols = cols.max(c + 1);
            let words = rows.entry(r).or_default();
            if words.len() <= c / 64 {
                words.resize(c / 64 + 1, 0);
            }
            words[c / 64] ^= 1 << (c % 64);
        }
    }
    let words = cols.div_ceil(64);
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    for (_, mut row) in rows {
        row.resize(words, 0);
        loop {
            let Some(lead) = leading_bit(&row) else { break };
            match pivots.iter().find(|(l, _)| *l == lead) {
                Some((_, p)) => {
                    for (a, b) in row.iter_mut().zip(p) {
                        *a ^= b;
                    }
                }
                None => {
                    pivots.push((lead, row));
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn leading_bit(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Rank over the rationals. Unit entries are eliminated sparsely with exact
/// integer updates; whatever remains has no +-1 entry and is handed to a
/// fraction-free dense elimination over big integers.
fn rank_rational(triplets: &[(usize, usize, i64)]) -> usize {
    let mut cells: HashMap<(usize, usize), i128> = HashMap::new();
    for &(r, c, v) in triplets {
        *cells.entry((r, c)).or_insert(0) += v as i128;
    }
    let mut rows: HashMap<usize, HashMap<usize, i128>> = HashMap::new();
    let mut col_rows: HashMap<usize, HashSet<usize>> = HashMap::new();
    let mut units: VecDeque<(usize, usize)> = VecDeque::new();
    for ((r, c), v) in cells {
        if v == 0 {
            continue;
        }
        rows.entry(r).or_default().insert(c, v);
        col_rows.entry(c).or_default().insert(r);
        if v.abs() == 1 {
            units.push_back((r, c));
        }
    }

    let mut rank = 0usize;
    while let Some((r, c)) = units.pop_front() {
        let Some(&v) = rows.get(&r).and_then(|row| row.get(&c)) else {
            continue;
        };
        if v.abs() != 1 {
            continue;
        }
        let pivot_row = rows.remove(&r).unwrap();
        for (&c2, _) in &pivot_row {
            col_rows.get_mut(&c2).unwrap().remove(&r);
        }
        let in_col: Vec<usize> = col_rows.remove(&c).into_iter().flatten().collect();
        for r2 in in_col {
            let row2 = rows.get_mut(&r2).unwrap();
            let factor = row2[&c] * v;
            for (&c2, &w) in &pivot_row {
                let delta = factor.checked_mul(w).expect("entry overflow");
                let e = row2.entry(c2).or_insert(0);
                *e = e.checked_sub(delta).expect("entry overflow");
                if *e == 0 {
                    row2.remove(&c2);
                    if c2 != c {
                        col_rows.get_mut(&c2).unwrap().remove(&r2);
                    }
                } else {
                    if c2 != c {
                        col_rows.entry(c2).or_default().insert(r2);
                    }
                    if e.abs() == 1 {
                        units.push_back((r2, c2));
                    }
                }
            }
            debug_assert!(!rows[&r2].contains_key(&c));
        }
        rank += 1;
    }

    let live_rows: Vec<&HashMap<usize, i128>> = rows.values().filter(|r| !r.is_empty()).collect();
    if live_rows.is_empty() {
        return rank;
    }
    let mut col_ids: Vec<usize> = live_rows
        .iter()
        .flat_map(|r| r.keys().copied())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    col_ids.dedup();
    let col_of: HashMap<usize, usize> = col_ids.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let dense: Vec<Vec<BigInt>> = live_rows
        .iter()
        .map(|row| {
            let mut out = vec![BigInt::zero(); col_ids.len()];
            for (&c, &v) in row.iter() {
                out[col_of[&c]] = BigInt::from(v);
            }
            out
        })
        .collect();
    rank + bareiss_rank(dense)
}

/// Fraction-free Gaussian elimination; every division is exact.
fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r2 in rank + 1..rows {
            for c2 in col + 1..cols {
                m[r2][c2] = (&m[r2][c2] * &m[rank][col] - &m[r2][col] * &m[rank][c2]) / &prev;
            }
            m[r2][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
