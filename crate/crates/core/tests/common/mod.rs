use std::path::{Path, PathBuf};
use std::process::{Command, Output};

/// `(golden file stem, arguments)`; paths are relative to the crate root.
pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    ("words_borromean", &["words", "data/borromean.cc"]),
    ("validate_borromean", &["validate", "data/borromean.cc"]),
    ("lk_borromean", &["lk", "data/borromean.cc", "1", "2"]),
    ("mu_borromean", &["mu", "data/borromean.cc", "1", "2", "3"]),
    ("mu_boundary3", &["mu", "data/boundary3.cc", "1", "2", "3"]),
    ("mu_brn2", &["mu", "data/brn2.cc", "1", "2", "3"]),
    ("bounds_borromean", &["bounds", "data/borromean.cc"]),
    ("bounds_brn2", &["bounds", "data/brn2.cc"]),
    ("bounds_two_component_lk1", &["bounds", "data/two_component_lk1.cc"]),
    ("bounds_boundary3", &["bounds", "data/boundary3.cc"]),
    ("gen_brn_2", &["gen-brn", "2"]),
    ("eij_staircase", &["eij", "x1 x2 x1 x2 x1^-2 x2^-2", "1", "2", "--method", "both"]),
    ("eij_commutator", &["eij", "x1 x2 x1^-1 x2^-1", "1", "2"]),
    ("oracle_polyomino_6", &["oracle", "polyomino", "--max-area", "6"]),
    ("oracle_words_8", &["oracle", "words", "--max-len", "8"]),
];

pub fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    crate_dir().join("tests/golden").join(name)
}

pub fn clasp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clasp"))
        .args(args)
        .current_dir(crate_dir())
        .output()
        .expect("run clasp")
}
