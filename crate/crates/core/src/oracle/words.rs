//! Exhaustive sweep over balanced words in `x1^±1, x2^±1`.
//!
//! Only two letter indices are needed: `e_12` of any word equals `e_12` of
//! its restriction to `x1, x2`.

use std::collections::BTreeMap;

use super::{check_cap, OracleReport};
use crate::bounds::ceil_two_sqrt;
use crate::curve::LatticeCurve;
use crate::error::{Error, Result};
use crate::invariants::e_ij;
use crate::word::{ClaspWord, SignedLetter};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSweep {
    /// One row per achieved `|e_12|`: the shortest balanced word reaching it
    /// against `2⌈2√|e_12|⌉`.
    pub reports: Vec<OracleReport>,
    /// Balanced words examined (all lengths, including the empty word).
    pub words_checked: u64,
    /// Words shorter than `2⌈2√|e_12|⌉`.
    pub word_bound_failures: Vec<ClaspWord>,
    /// Closed curves shorter than `2⌈2√|∮ x dy|⌉`.
    pub curve_bound_failures: Vec<ClaspWord>,
    /// Words whose `e_12` differs from the line integral of their curve.
    pub integral_mismatches: Vec<ClaspWord>,
}

impl WordSweep {
    pub fn counterexamples(&self) -> usize {
        self.word_bound_failures.len() + self.curve_bound_failures.len() + self.integral_mismatches.len()
    }

    pub fn all_agree(&self) -> bool {
        self.counterexamples() == 0 && self.reports.iter().all(|r| r.agree)
    }
}

const LETTERS: [(SignedLetter, i64, i64); 4] = [
    (SignedLetter::pos(1), 1, 0),
    (SignedLetter::neg(1), -1, 0),
    (SignedLetter::pos(2), 0, 1),
    (SignedLetter::neg(2), 0, -1),
];

/// Visits every word over `{x1^±, x2^±}` of length at most `max_len` whose
/// signed counts of `x1` and `x2` both vanish, and checks the word-length
/// bound, the curve-length bound, and that `e_12` is the line integral.
pub fn verify_word_length_bound(max_len: usize, cap: usize) -> Result<WordSweep> {
    if max_len == 0 {
        return Err(Error::OutOfDomain("maximum word length must be at least 1".into()));
    }
    check_cap("word length", max_len, cap)?;

    let mut sweep = WordSweep {
        reports: Vec::new(),
        words_checked: 0,
        word_bound_failures: Vec::new(),
        curve_bound_failures: Vec::new(),
        integral_mismatches: Vec::new(),
    };
    let mut shortest: BTreeMap<u64, usize> = BTreeMap::new();
    let mut prefix = Vec::with_capacity(max_len);
    visit(&mut prefix, (0, 0), max_len, &mut |letters| {
        let word = ClaspWord::from_letters(letters.to_vec());
        let e = e_ij(&word, 1, 2).expect("distinct indices");
        let curve = LatticeCurve::from_word(&word, 1, 2).expect("distinct indices");
        debug_assert!(curve.is_closed());
        let area = curve.line_integral_x_dy();
        if e != area {
            sweep.integral_mismatches.push(word.clone());
        }
        if (word.len() as u64) < 2 * ceil_two_sqrt(e.unsigned_abs()) {
            sweep.word_bound_failures.push(word.clone());
        }
        if (curve.len() as u64) < 2 * ceil_two_sqrt(area.unsigned_abs()) {
            sweep.curve_bound_failures.push(word.clone());
        }
        sweep.words_checked += 1;
        let best = shortest.entry(e.unsigned_abs()).or_insert(word.len());
        *best = (*best).min(word.len());
    });

    sweep.reports = shortest
        .into_iter()
        .map(|(a, len)| OracleReport::new(a, len as u64, 2 * ceil_two_sqrt(a)))
        .collect();
    Ok(sweep)
}

/// Depth-first over prefixes, pruning any prefix whose lattice endpoint is
/// too far from the origin to return within the remaining letters.
fn visit(prefix: &mut Vec<SignedLetter>, at: (i64, i64), max_len: usize, f: &mut dyn FnMut(&[SignedLetter])) {
    if at == (0, 0) {
        f(prefix);
    }
    let room = (max_len - prefix.len()) as i64;
    for (letter, dx, dy) in LETTERS {
        let next = (at.0 + dx, at.1 + dy);
        if next.0.abs() + next.1.abs() < room {
            prefix.push(letter);
            visit(prefix, next, max_len, f);
            prefix.pop();
        }
    }
}
