//! End-to-end consistency of the public API on a few fixed diagrams:
//! each test chains several modules the way a caller would.

use turaev_core::cutting::{cutting_arcs, surgery, SurgeryOutcome};
use turaev_core::poly::{bracket_bruteforce, bracket_sweep, jones};
use turaev_core::ribbon::{check_br_bracket, check_thistlethwaite, ribbon_from_all_a, ribbon_genus};
use turaev_core::states::{adequacy, s_a_circles, s_b_circles, turaev_genus_diagram, turaev_surface_map};
use turaev_core::{khovanov, HomologyField, JonesPoly, LinkDiagram, RMove};

const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const FIGURE_EIGHT: &str = "X(8,3,1,4) X(2,6,3,5) X(4,7,5,8) X(6,2,7,1)";
const BRAID4: &str = "X(8,5,1,6) X(3,6,4,7) X(4,1,5,2) X(7,2,8,3)";

fn parse(pd: &str) -> LinkDiagram {
    LinkDiagram::parse(pd).expect("valid PD")
}

#[test]
fn trefoil_full_pipeline() {
    let d = parse(TREFOIL);
    assert!(d.validate().ok);
    assert_eq!(d.writhe(), 3);
    assert_eq!(s_a_circles(&d).circle_count(), 2);
    assert_eq!(s_b_circles(&d).circle_count(), 3);
    assert_eq!(turaev_genus_diagram(&d), 0);
    assert!(adequacy(&d).adequate());

    let v = jones(&d, None).expect("jones");
    assert_eq!(v, JonesPoly::from_terms(&[(2, 1), (6, 1), (8, -1)]));

    let g = ribbon_from_all_a(&d);
    assert_eq!(ribbon_genus(&g).expect("orientable"), 0);
    assert_eq!(turaev_surface_map(&d).genus, 0);
    check_thistlethwaite(&d).expect("alternating identity");
    check_br_bracket(&d, None).expect("bracket identity");

    let kh = khovanov(&d, HomologyField::Rational, None).expect("homology");
    let unknot_factor = JonesPoly::from_terms(&[(-1, 1), (1, 1)]);
    assert_eq!(kh.graded_euler_characteristic(), &v * &unknot_factor);
    assert_eq!(kh.delta_width(), 2);
}

#[test]
fn mirror_inverts_jones_and_swaps_adequacy_sides() {
    for pd in [TREFOIL, FIGURE_EIGHT, BRAID4] {
        let d = parse(pd);
        let m = d.mirror();
        assert_eq!(m.writhe(), -d.writhe());
        assert_eq!(turaev_genus_diagram(&m), turaev_genus_diagram(&d));
        let a = adequacy(&d);
        let b = adequacy(&m);
        assert_eq!((b.a_adequate, b.b_adequate), (a.b_adequate, a.a_adequate));
        let v = jones(&d, None).expect("jones");
        let w = jones(&m, None).expect("mirror jones");
        assert_eq!(w, v.invert_var());
    }
}

#[test]
fn figure_eight_is_amphichiral_and_thin() {
    let d = parse(FIGURE_EIGHT);
    let v = jones(&d, None).expect("jones");
    assert_eq!(v, v.invert_var());
    let kh = khovanov(&d, HomologyField::Rational, None).expect("homology");
    assert_eq!(kh.delta_width(), 2);
    // determinant + 1 generators, the thin-knot count
    assert_eq!(kh.total_rank(), 6);
}

#[test]
fn both_bracket_engines_agree_on_fixed_diagrams() {
    for pd in [TREFOIL, FIGURE_EIGHT, BRAID4, "X(1,2,2,1)"] {
        let d = parse(pd);
        assert_eq!(
            bracket_sweep(&d, None).expect("sweep"),
            bracket_bruteforce(&d, None).expect("state sum"),
            "{pd}"
        );
    }
}

#[test]
fn surgery_flattens_the_genus_one_braid() {
    let d = parse(BRAID4);
    assert_eq!(turaev_genus_diagram(&d), 1);
    let arcs = cutting_arcs(&d);
    assert_eq!(arcs.len(), 4);
    for arc in &arcs {
        match surgery(&d, arc).expect("valid arc") {
            SurgeryOutcome::Connected(nd) => {
                // The splice may leave kinks, so the result is genus zero
                // without necessarily being alternating as drawn.
                assert_eq!(turaev_genus_diagram(&nd), 0);
                assert!(nd.validate().ok);
            }
            SurgeryOutcome::Disconnected { pieces } => {
                panic!("unexpected disconnection into {pieces:?}")
            }
        }
    }
}

#[test]
fn moves_preserve_jones_and_homology() {
    let d = parse(TREFOIL);
    let v = jones(&d, None).expect("jones");
    let kh = khovanov(&d, HomologyField::Rational, None).expect("homology");
    for (mv, site) in [(RMove::R1Pos, 0), (RMove::R1Neg, 3), (RMove::R2, 0)] {
        let moved = d.reidemeister_variant(mv, site).expect("legal move");
        assert_eq!(jones(&moved, None).expect("jones"), v, "{mv:?}");
        let kh2 = khovanov(&moved, HomologyField::Rational, None).expect("homology");
        assert_eq!(kh2.table(), kh.table(), "{mv:?}");
    }
    let r3_sites = d.reidemeister_site_count(RMove::R3);
    if r3_sites > 0 {
        let moved = d.reidemeister_variant(RMove::R3, 0).expect("legal move");
        assert_eq!(jones(&moved, None).expect("jones"), v, "R3");
    }
}

#[test]
fn connected_sum_composes_invariants() {
    let t = parse(TREFOIL);
    let b = parse(BRAID4);
    let sum = t.connected_sum(0, &b, 0).expect("knots compose");
    assert_eq!(sum.crossing_count(), 7);
    assert_eq!(sum.component_count(), 1);
    assert_eq!(turaev_genus_diagram(&sum), 1);
    let vt = jones(&t, None).expect("jones");
    let vb = jones(&b, None).expect("jones");
    assert_eq!(jones(&sum, None).expect("jones"), &vt * &vb);
}
