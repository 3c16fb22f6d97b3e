//! C-complex invariants from combinatorial clasp data.
//!
//! A C-complex is described by its signed clasps and by the order in which
//! each link component meets them. From that data this crate derives the
//! clasp words, the pairing `e_ij`, pairwise and triple linking numbers, and
//! integer bounds on the clasp number. The [`oracle`] module holds
//! brute-force checks of the closed-form bounds.

pub mod bounds;
pub mod cli;
pub mod complex;
pub mod curve;
pub mod error;
pub mod invariants;
pub mod oracle;
pub mod svg;
pub mod word;

pub use bounds::{
    bound_report, ceil_two_sqrt, min_polyomino_perimeter, three_component_lower_bound,
    two_component_clasp_number, BoundReport, ClaspNumber,
};
pub use complex::{parse_complex, CComplex, Clasp, Violation};
pub use curve::{LatticeCurve, Point, Step};
pub use error::{Error, Result};
pub use invariants::{e_ij, pairwise_linking, triple_linking, TripleLinking};
pub use word::{parse_word, ClaspWord, Sign, SignedLetter};
