//! Bounds on the clasp number `C(L)` and on `B(L)`, the number of crossing
//! changes needed to reach a boundary link.
//!
//! Ceilings of square roots are always evaluated through integer
//! inequalities (`m² >= 4A`), never with floating point.

use std::fmt;

use crate::complex::CComplex;
use crate::error::{Error, Result};
use crate::invariants::{pairwise_linking, triple_linking, TripleLinking};

/// Smallest `m` with `m² >= n`.
pub fn ceil_sqrt(n: u128) -> u128 {
    let r = n.isqrt();
    if r * r < n {
        r + 1
    } else {
        r
    }
}

/// `⌈2√a⌉`, i.e. the smallest `m` with `m² >= 4a`.
pub fn ceil_two_sqrt(a: u64) -> u64 {
    ceil_sqrt(4 * a as u128) as u64
}

/// Least perimeter of a polyomino with `area` cells: `2⌈2√area⌉`.
pub fn min_polyomino_perimeter(area: u64) -> Result<u64> {
    if area == 0 {
        return Err(Error::OutOfDomain("a polyomino has at least one cell".into()));
    }
    Ok(2 * ceil_two_sqrt(area))
}

/// Lower bound `2⌈2√(|μ|/3)⌉` on the clasp number of a three-component link
/// with vanishing pairwise linking numbers, as `2·min{m : 3m² >= 4|μ|}`.
pub fn three_component_lower_bound(mu: i64) -> u64 {
    let four_mu = 4 * mu.unsigned_abs() as u128;
    // 3m² >= 4|μ|  <=>  m² >= ⌈4|μ|/3⌉ for integer m
    2 * ceil_sqrt(four_mu.div_ceil(3)) as u64
}

/// What the linking number says about a two-component link's clasp number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaspNumber {
    Exact(u64),
    /// Either 0 or 2; which one depends on whether the link is a boundary link.
    ZeroOrTwo,
}

impl fmt::Display for ClaspNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClaspNumber::Exact(c) => write!(f, "{c}"),
            ClaspNumber::ZeroOrTwo => write!(f, "{{0, 2}}"),
        }
    }
}

pub fn two_component_clasp_number(lk: i64) -> ClaspNumber {
    if lk == 0 {
        ClaspNumber::ZeroOrTwo
    } else {
        ClaspNumber::Exact(lk.unsigned_abs())
    }
}

/// Where a reported bound comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Two components: `C = |lk|` for `lk != 0`, else `C ∈ {0, 2}`.
    TwoComponentLinking,
    /// Three components, vanishing linking: `C >= 2⌈2√(|μ|/3)⌉`.
    TripleLinkingArea,
    /// `Σ|lk| <= B <= C`.
    LinkingSum,
    /// The supplied complex realises this many clasps.
    ComplexClaspCount,
    /// `B <= C`.
    BoundaryBelowClasp,
}

impl Provenance {
    pub fn describe(self) -> &'static str {
        match self {
            Provenance::TwoComponentLinking => "two-component linking theorem",
            Provenance::TripleLinkingArea => "triple linking area bound",
            Provenance::LinkingSum => "sum of |lk| over pairs",
            Provenance::ComplexClaspCount => "clasps in this complex",
            Provenance::BoundaryBelowClasp => "B(L) <= C(L)",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bound {
    pub value: u64,
    pub source: Provenance,
}

impl Bound {
    fn new(value: u64, source: Provenance) -> Self {
        Bound { value, source }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub components: usize,
    pub clasps: usize,
    /// `((i, j), lk(i, j))` for every pair `i < j`.
    pub linking: Vec<((u32, u32), i64)>,
    pub triple: Option<TripleLinking>,
    pub lower_c: Bound,
    pub upper_c: Option<Bound>,
    pub exact_c: Option<ClaspNumber>,
    pub lower_b: Bound,
    pub upper_b: Option<Bound>,
}

/// Bounds on `C(L)` and `B(L)` for the link bounded by `f`, which must have
/// two or three components.
pub fn bound_report(f: &CComplex) -> Result<BoundReport> {
    let n = f.components();
    if !(2..=3).contains(&n) {
        return Err(Error::UnsupportedComponents(n));
    }
    f.ensure_valid()?;
    let mut linking = Vec::new();
    for i in 1..=n as u32 {
        for j in i + 1..=n as u32 {
            linking.push(((i, j), pairwise_linking(f, i, j)?));
        }
    }
    let lk_sum: u64 = linking.iter().map(|(_, lk)| lk.unsigned_abs()).sum();
    let clasps = f.total_clasps();
    let upper_c = Bound::new(clasps as u64, Provenance::ComplexClaspCount);

    let (lower_c, exact_c, triple) = if n == 2 {
        let lk = linking[0].1;
        let exact = if clasps == 0 {
            // a clasp-free complex is a boundary surface
            ClaspNumber::Exact(0)
        } else {
            two_component_clasp_number(lk)
        };
        (Bound::new(lk.unsigned_abs(), Provenance::TwoComponentLinking), Some(exact), None)
    } else {
        let mu = triple_linking(f, 1, 2, 3)?;
        let lower = if mu.well_defined {
            Bound::new(three_component_lower_bound(mu.value), Provenance::TripleLinkingArea)
        } else {
            Bound::new(lk_sum, Provenance::LinkingSum)
        };
        let exact = (lower.value == upper_c.value).then_some(ClaspNumber::Exact(lower.value));
        (lower, exact, Some(mu))
    };

    Ok(BoundReport {
        components: n,
        clasps,
        linking,
        triple,
        lower_c,
        upper_c: Some(upper_c),
        exact_c,
        lower_b: Bound::new(lk_sum, Provenance::LinkingSum),
        upper_b: Some(Bound::new(upper_c.value, Provenance::BoundaryBelowClasp)),
    })
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bound = |b: &Option<Bound>| match b {
            Some(b) => format!("{}  # {}", b.value, b.source.describe()),
            None => "unknown".to_string(),
        };
        writeln!(f, "components = {}", self.components)?;
        writeln!(f, "clasps = {}", self.clasps)?;
        for ((i, j), lk) in &self.linking {
            writeln!(f, "lk({i},{j}) = {lk}")?;
        }
        if let Some(mu) = &self.triple {
            let note = if mu.well_defined { "" } else { " (not well-defined)" };
            writeln!(f, "mu(1,2,3) = {}{note}", mu.value)?;
        }
        writeln!(f, "lower_C = {}", bound(&Some(self.lower_c)))?;
        writeln!(f, "upper_C = {}", bound(&self.upper_c))?;
        writeln!(f, "lower_B = {}", bound(&Some(self.lower_b)))?;
        writeln!(f, "upper_B = {}", bound(&self.upper_b))?;
        match (self.exact_c, self.upper_c) {
            (Some(ClaspNumber::Exact(c)), Some(up)) if up.value != c => {
                writeln!(f, "C = {c} (exact); this complex has {}", up.value)
            }
            (Some(ClaspNumber::Exact(c)), _) => writeln!(f, "C = {c} (exact)"),
            (Some(ClaspNumber::ZeroOrTwo), Some(up)) => {
                writeln!(f, "C in {{0, 2}}; this complex has {}", up.value)
            }
            (Some(ClaspNumber::ZeroOrTwo), None) => writeln!(f, "C in {{0, 2}}"),
            (None, Some(up)) => writeln!(f, "{} <= C <= {}", self.lower_c.value, up.value),
            (None, None) => writeln!(f, "C >= {}", self.lower_c.value),
        }
    }
}
