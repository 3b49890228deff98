//! Shared fixtures for unit tests: pinned diagrams, braid closures, and
//! seeded Reidemeister walks.

use crate::diagram::{LinkDiagram, RMove};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Standard 3-crossing trefoil; the calibration diagram for the smoothing
/// conventions.
pub(crate) const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

/// Closure of the 3-strand braid (s1 s2)^2: a 4-crossing positive trefoil
/// diagram whose Turaev surface is a torus.
pub(crate) const TREFOIL_BRAID4: &str = "X(2,1,4,5) X(3,5,6,7) X(6,4,1,8) X(7,8,2,3)";

pub(crate) fn parse(pd: &str) -> LinkDiagram {
    LinkDiagram::parse(pd).unwrap()
}

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// PD code for the closure of a braid word on `strands` strands, read top to
/// bottom. The letter `(i, true)` crosses lanes i and i+1 with positive sign
/// (over strand entering slot 1). Every lane must carry at least one letter,
/// otherwise the closure would have a crossing-free split component.
pub(crate) fn braid_closure_pd(strands: usize, word: &[(usize, bool)]) -> String {
    let mut uses = vec![0usize; strands];
    for &(i, _) in word {
        assert!(i + 1 < strands, "generator index out of range");
        uses[i] += 1;
        uses[i + 1] += 1;
    }
    assert!(uses.iter().all(|&k| k > 0), "every lane needs a crossing");
    let mut base = vec![0usize; strands];
    for l in 1..strands {
        base[l] = base[l - 1] + uses[l - 1];
    }
    let label = |lane: usize, seg: usize| base[lane] + (seg % uses[lane]) + 1;
    let mut cur = vec![0usize; strands];
    let mut out = Vec::new();
    for &(i, positive) in word {
        let a = label(i, cur[i]);
        let b = label(i + 1, cur[i + 1]);
        cur[i] += 1;
        cur[i + 1] += 1;
        let c = label(i, cur[i]);
        let d = label(i + 1, cur[i + 1]);
        // Strands swap lanes below the crossing; slots are listed
        // counterclockwise from the incoming under strand.
        out.push(if positive {
            format!("X({b},{a},{c},{d})")
        } else {
            format!("X({a},{c},{d},{b})")
        });
    }
    out.join(" ")
}

/// Torus-knot braid diagram for T(3, n): closure of (s1 s2)^n.
pub(crate) fn torus3_pd(n: usize) -> String {
    let word: Vec<(usize, bool)> = (0..n).flat_map(|_| [(0, true), (1, true)]).collect();
    braid_closure_pd(3, &word)
}

/// Seeded walk applying random Reidemeister variants while keeping the
/// crossing count at or below `max_crossings`. Returns every diagram
/// visited, starting with `d` itself; consecutive entries differ by one move.
pub(crate) fn variant_walk(
    d: &LinkDiagram,
    steps: usize,
    max_crossings: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<LinkDiagram> {
    let mut out = vec![d.clone()];
    for _ in 0..steps {
        let cur = out.last().unwrap();
        let mv = match rng.gen_range(0..4) {
            0 => RMove::R1Pos,
            1 => RMove::R1Neg,
            2 => RMove::R2,
            _ => RMove::R3,
        };
        let growth = match mv {
            RMove::R1Pos | RMove::R1Neg => 1,
            RMove::R2 => 2,
            RMove::R3 => 0,
        };
        if cur.crossing_count() + growth > max_crossings {
            continue;
        }
        let count = cur.reidemeister_site_count(mv);
        if count == 0 {
            continue;
        }
        let site = rng.gen_range(0..count);
        out.push(cur.reidemeister_variant(mv, site).unwrap());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braid_closure_labels_are_consistent() {
        let hopf = braid_closure_pd(2, &[(0, true), (0, true)]);
        let d = parse(&hopf);
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.writhe(), 2);

        let t23 = parse(&braid_closure_pd(2, &[(0, true), (0, true), (0, true)]));
        assert_eq!(t23.component_count(), 1);
        assert_eq!(t23.writhe(), 3);
        assert!(t23.is_alternating());

        let t34 = parse(&torus3_pd(4));
        assert_eq!(t34.crossing_count(), 8);
        assert_eq!(t34.component_count(), 1);
        assert_eq!(t34.writhe(), 8);
    }

    #[test]
    fn walk_preserves_validity() {
        let d = parse(TREFOIL);
        let seen = variant_walk(&d, 30, 9, &mut rng(11));
        assert!(seen.len() > 1);
        for v in &seen {
            assert!(v.crossing_count() <= 9);
            assert!(v.validate().ok);
        }
    }
}
