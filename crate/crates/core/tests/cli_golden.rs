mod common;

use std::fs;

use common::{clasp, golden_path, GOLDEN_CASES};

#[test]
fn outputs_match_golden_files() {
    for (name, args) in GOLDEN_CASES {
        let out = clasp(args);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let expected = fs::read(golden_path(&format!("{name}.out"))).unwrap();
        assert_eq!(
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&expected),
            "{name}"
        );
    }
}

#[test]
fn staircase_svg_matches_golden_file() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("staircase.svg");
    let out = clasp(&["curve", "x1 x2 x1 x2 x1^-2 x2^-2", "1", "2", "--out", svg.to_str().unwrap(), "--grid"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, fs::read(golden_path("curve_staircase.out")).unwrap());
    assert_eq!(fs::read(&svg).unwrap(), fs::read(golden_path("curve_staircase.svg")).unwrap());
}

#[test]
fn generator_round_trips_through_the_shipped_file() {
    let generated = clasp(&["gen-brn", "2"]).stdout;
    assert_eq!(generated, fs::read(common::crate_dir().join("data/brn2.cc")).unwrap());
}

#[test]
fn exit_codes() {
    assert_eq!(clasp(&["eij", "x1 x0", "1", "2"]).status.code(), Some(2));
    assert_eq!(clasp(&["bounds", "data/missing.cc"]).status.code(), Some(3));
    assert_eq!(clasp(&["oracle", "polyomino", "--max-area", "0"]).status.code(), Some(2));
    assert_eq!(clasp(&["gen-brn", "0"]).status.code(), Some(2));
    assert_eq!(clasp(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(clasp(&["--help"]).status.code(), Some(0));
}
