//! Recomputes every precomputed column of the bundled tables. The data
//! files were produced by an independent generator (tools/gen_catalog.py),
//! so agreement here cross-validates both sides.

use std::collections::BTreeSet;
use std::path::PathBuf;

use turaev_core::poly::jones;
use turaev_core::states::{adequacy, turaev_genus_diagram};
use turaev_core::{JonesPoly, LinkDiagram};

fn data_file(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn rows(name: &str) -> Vec<Vec<String>> {
    std::fs::read_to_string(data_file(name))
        .expect("bundled table readable")
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| l.split('\t').map(str::to_string).collect())
        .collect()
}

/// "exponent:coefficient,..." as written by the generator.
fn parse_jones(text: &str) -> JonesPoly {
    let mut p = JonesPoly::zero();
    for pair in text.split(',') {
        let (e, c) = pair.split_once(':').expect("exponent:coefficient pair");
        p.add_term(
            e.parse().expect("integer exponent"),
            c.parse().expect("integer coefficient"),
        );
    }
    p
}

/// |V(q)| at q^2 = -1; exponents of a knot polynomial are even.
fn determinant(v: &JonesPoly) -> i64 {
    v.terms()
        .map(|(e, c)| {
            assert_eq!(e.rem_euclid(2), 0, "odd exponent {e} in a knot polynomial");
            if (e / 2).rem_euclid(2) == 0 {
                c
            } else {
                -c
            }
        })
        .sum::<i64>()
        .abs()
}

#[test]
fn main_table_columns_recompute() {
    let table = rows("knots_leq9.tsv");
    assert_eq!(table.len(), 84, "prime knots through 9 crossings");
    let names: BTreeSet<&str> = table.iter().map(|r| r[0].as_str()).collect();
    assert_eq!(names.len(), 84, "names are unique");

    for row in &table {
        let [name, pd, alternating, adequate, genus, det, jones_col] =
            <&[String; 7]>::try_from(row.as_slice()).expect("seven columns").clone();
        let d = LinkDiagram::parse(&pd).expect("bundled PD parses");
        assert!(d.validate().ok, "{name}: diagram valid");
        assert_eq!(d.component_count(), 1, "{name}: one component");
        assert_eq!(
            d.is_alternating(),
            alternating == "1",
            "{name}: alternating flag"
        );
        assert_eq!(
            adequacy(&d).adequate(),
            adequate == "1",
            "{name}: adequacy flag"
        );
        assert_eq!(
            turaev_genus_diagram(&d).to_string(),
            genus,
            "{name}: diagram genus"
        );
        let v = jones(&d, None).expect("jones under default cap");
        assert_eq!(v, parse_jones(&jones_col), "{name}: jones column");
        assert_eq!(determinant(&v).to_string(), det, "{name}: determinant");
    }
}

#[test]
fn main_table_is_ordered_and_complete() {
    let per_crossing = [(3, 1), (4, 1), (5, 2), (6, 3), (7, 7), (8, 21), (9, 49)];
    let table = rows("knots_leq9.tsv");
    let mut at = 0;
    for (c, count) in per_crossing {
        for k in 1..=count {
            assert_eq!(table[at][0], format!("{c}_{k}"), "row {at}");
            let d = LinkDiagram::parse(&table[at][1]).expect("pd parses");
            assert_eq!(d.crossing_count(), c, "{c}_{k}: crossing count");
            at += 1;
        }
    }
    assert_eq!(at, table.len());
}

#[test]
fn extras_behave_as_described() {
    let table = rows("extras.tsv");
    assert_eq!(table.len(), 5);
    let diagram = |name: &str| {
        let row = table.iter().find(|r| r[0] == name).expect("extra present");
        LinkDiagram::parse(&row[1]).expect("extra PD parses")
    };

    let trefoil = LinkDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").expect("trefoil");
    let v3 = jones(&trefoil, None).expect("trefoil jones");

    let c5 = diagram("trefoil_inadequate_c5");
    assert_eq!(c5.crossing_count(), 5);
    assert!(adequacy(&c5).inadequate());
    assert_eq!(turaev_genus_diagram(&c5), 1);
    assert_eq!(jones(&c5, None).expect("jones"), v3, "same knot as 3_1");

    let braid4 = diagram("trefoil_braid4");
    assert_eq!(turaev_genus_diagram(&braid4), 1);
    assert_eq!(jones(&braid4, None).expect("jones"), v3, "same knot as 3_1");

    let sum = diagram("genus2_sum_c8");
    assert_eq!(turaev_genus_diagram(&sum), 2);
    assert_eq!(jones(&sum, None).expect("jones"), &v3 * &v3, "square of 3_1");

    let t34 = diagram("t34_braid_c8");
    assert_eq!(turaev_genus_diagram(&t34), 3);
    let main = rows("knots_leq9.tsv");
    let row819 = main.iter().find(|r| r[0] == "8_19").expect("8_19 present");
    assert_eq!(
        jones(&t34, None).expect("jones"),
        parse_jones(&row819[6]),
        "same knot as 8_19"
    );

    let t310 = diagram("t3_10_braid_c20");
    assert_eq!(t310.crossing_count(), 20);
    assert_eq!(turaev_genus_diagram(&t310), 9);
}
