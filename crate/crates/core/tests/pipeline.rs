use durfee_core::harness::{durfee_check, render, scaling_scan, Format, Options, CSV_HEADER};
use durfee_core::invariants::{milnor_hypersurface, pg_hypersurface, IcisInput};
use durfee_core::io::{diagram_to_json, parse_diagram, parse_document, parse_tuple, InputDocument};
use durfee_core::{NewtonDiagram, Rational};
use serde_json::Value;

const BRIESKORN: &str = r#"{"ambient_dim": 3, "support": [[2,0,0],[0,3,0],[0,0,5]]}"#;

#[test]
fn diagram_survives_json_round_trip() {
    let g = parse_diagram(BRIESKORN).unwrap();
    let again = parse_diagram(&diagram_to_json(&g).to_string()).unwrap();
    assert_eq!(g.vertex_strings(), again.vertex_strings());
    assert_eq!(milnor_hypersurface(&g).unwrap(), milnor_hypersurface(&again).unwrap());
}

#[test]
fn brieskorn_e8_invariants() {
    // x² + y³ + z⁵: μ = 1·2·4 = 8, p_g = 0.
    let g = parse_diagram(BRIESKORN).unwrap();
    assert_eq!(milnor_hypersurface(&g).unwrap(), 8.into());
    assert_eq!(pg_hypersurface(&g).unwrap(), 0.into());
}

#[test]
fn brieskorn_products_match_milnor() {
    // x^a + y^b + z^c has μ = (a−1)(b−1)(c−1).
    for (a, b, c) in [(2, 2, 2), (3, 4, 5), (2, 7, 3), (6, 6, 2)] {
        let g = NewtonDiagram::from_exponents(3, &[&[a, 0, 0], &[0, b, 0], &[0, 0, c]]).unwrap();
        assert_eq!(milnor_hypersurface(&g).unwrap(), ((a - 1) * (b - 1) * (c - 1)).into());
    }
}

#[test]
fn brieskorn_genus_by_brute_force() {
    // p_g counts positive points with x/a + y/b + z/c ≤ 1.
    for (a, b, c) in [(3i64, 4, 5), (4, 4, 4), (2, 7, 9), (5, 6, 7)] {
        let g = NewtonDiagram::from_exponents(3, &[&[a, 0, 0], &[0, b, 0], &[0, 0, c]]).unwrap();
        let mut count = 0i64;
        for x in 1..=a {
            for y in 1..=b {
                for z in 1..=c {
                    if x * b * c + y * a * c + z * a * b <= a * b * c {
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(pg_hypersurface(&g).unwrap(), count.into(), "({a},{b},{c})");
    }
}

#[test]
fn document_kinds_are_recognised() {
    assert!(matches!(parse_document(BRIESKORN).unwrap(), InputDocument::Diagram(_)));
    let poly = r#"{"ambient_dim": 2, "vertices": [[0,0],[1,0],[0,1]]}"#;
    assert!(matches!(parse_document(poly).unwrap(), InputDocument::Polytope(_)));
    let pair = r#"{"n": 1, "r": 2, "diagrams": [
        {"ambient_dim": 3, "support": [[2,0,0],[0,2,0],[0,0,2]]},
        {"ambient_dim": 3, "support": [[3,0,0],[0,3,0],[0,0,3]]}]}"#;
    let t = parse_tuple(pair).unwrap();
    assert_eq!((t.n(), t.r()), (1, 2));
}

#[test]
fn report_json_is_parseable_and_exact() {
    let g = NewtonDiagram::homogeneous(4, 5).unwrap();
    let report = durfee_check(&IcisInput::hypersurface(g), &Options::default()).unwrap();
    let v: Value = serde_json::from_str(&render(&report, Format::Json).unwrap()).unwrap();
    assert_eq!(v["mu"], "256");
    assert_eq!(v["pg"], "5");
    assert_eq!(v["cnr"], "24");
    assert_eq!(v["ratio"], "256/5");
    assert_eq!(v["verdict"], "holds");
    assert_eq!(v["input"]["hash"].as_str().unwrap().len(), 64);
}

#[test]
fn scan_csv_rows_follow_header() {
    let g = NewtonDiagram::homogeneous(3, 2).unwrap();
    let scan = scaling_scan(&IcisInput::hypersurface(g), 1..=4, &Options::default()).unwrap();
    let csv = render(&scan, Format::Csv).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4);
    for row in rows {
        assert_eq!(row.split(',').count(), CSV_HEADER.split(',').count());
    }
    assert_eq!(scan.leading.quotient, scan.leading.cnr);
    assert_eq!(scan.leading.cnr, Rational::from_integer(6.into()));
}

#[test]
fn hashes_are_stable_under_support_order() {
    let a = parse_diagram(BRIESKORN).unwrap();
    let b = parse_diagram(r#"{"ambient_dim": 3, "support": [[0,0,5],[2,0,0],[0,3,0],[1,2,3]]}"#).unwrap();
    let ra = durfee_check(&IcisInput::hypersurface(a), &Options::default()).unwrap();
    let rb = durfee_check(&IcisInput::hypersurface(b), &Options::default()).unwrap();
    assert_eq!(ra.input.hash, rb.input.hash);
}
