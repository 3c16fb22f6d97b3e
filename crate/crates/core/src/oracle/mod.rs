//! Brute-force checks of the closed-form bounds: fixed-polyomino enumeration
//! for the minimum perimeter, and an exhaustive sweep of balanced two-letter
//! words for the word-length bound.

use std::fmt;

use crate::error::{Error, Result};

mod polyomino;
mod words;

pub use polyomino::{
    cross_check_counts, enumerate_polyominoes, redelmeier_counts, verify_min_perimeter, Cell,
    Polyomino,
};
pub use words::{verify_word_length_bound, WordSweep};

pub const DEFAULT_AREA_CAP: usize = 10;
pub const DEFAULT_LENGTH_CAP: usize = 12;

/// One row of an oracle run: the value swept, what brute force found, and
/// what the closed form predicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleReport {
    pub parameter: u64,
    pub observed: u64,
    pub predicted: u64,
    pub agree: bool,
}

impl OracleReport {
    pub fn new(parameter: u64, observed: u64, predicted: u64) -> Self {
        OracleReport { parameter, observed, predicted, agree: observed == predicted }
    }
}

fn check_cap(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        return Err(Error::CapExceeded { what, value, cap });
    }
    Ok(())
}

/// Fixed-width table with a header row.
pub struct ReportTable<'a> {
    pub headers: [&'a str; 4],
    pub rows: &'a [OracleReport],
}

impl fmt::Display for ReportTable<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.headers;
        writeln!(f, "{a:>10} {b:>10} {c:>10} {d:>6}")?;
        for r in self.rows {
            let agree = if r.agree { "yes" } else { "NO" };
            writeln!(f, "{:>10} {:>10} {:>10} {:>6}", r.parameter, r.observed, r.predicted, agree)?;
        }
        Ok(())
    }
}
