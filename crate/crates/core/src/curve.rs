//! Unit-step lattice curves traced by clasp words.
//!
//! Reading a word left to right, `x_i` / `x_i^-1` step right / left and
//! `x_j` / `x_j^-1` step up / down. Letters with any other index are dropped
//! (they would be constant segments contributing nothing to `∮ x dy`).
//! Everything here is integer arithmetic.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::word::{ClaspWord, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0, y: 0 };

    pub fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    fn step(self, dir: Step) -> Point {
        let (dx, dy) = dir.delta();
        Point { x: self.x + dx, y: self.y + dy }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Right,
    Left,
    Up,
    Down,
}

impl Step {
    pub const ALL: [Step; 4] = [Step::Right, Step::Left, Step::Up, Step::Down];

    pub fn delta(self) -> (i64, i64) {
        match self {
            Step::Right => (1, 0),
            Step::Left => (-1, 0),
            Step::Up => (0, 1),
            Step::Down => (0, -1),
        }
    }

    fn between(p: Point, q: Point) -> Option<Step> {
        match (q.x - p.x, q.y - p.y) {
            (1, 0) => Some(Step::Right),
            (-1, 0) => Some(Step::Left),
            (0, 1) => Some(Step::Up),
            (0, -1) => Some(Step::Down),
            _ => None,
        }
    }
}

/// A path of unit cardinal steps starting at the origin.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeCurve {
    vertices: Vec<Point>,
}

impl Default for LatticeCurve {
    fn default() -> Self {
        LatticeCurve { vertices: vec![Point::ORIGIN] }
    }
}

impl LatticeCurve {
    /// The curve of `word` in the `(i, j)` plane.
    pub fn from_word(word: &ClaspWord, i: u32, j: u32) -> Result<Self> {
        if i == j {
            return Err(Error::RepeatedIndex(i));
        }
        let steps = word.letters().iter().filter_map(|l| {
            match (l.index(), l.sign()) {
                (x, Sign::Plus) if x == i => Some(Step::Right),
                (x, Sign::Minus) if x == i => Some(Step::Left),
                (y, Sign::Plus) if y == j => Some(Step::Up),
                (y, Sign::Minus) if y == j => Some(Step::Down),
                _ => None,
            }
        });
        Ok(Self::from_steps(steps))
    }

    pub fn from_steps(steps: impl IntoIterator<Item = Step>) -> Self {
        let mut vertices = vec![Point::ORIGIN];
        let mut at = Point::ORIGIN;
        for s in steps {
            at = at.step(s);
            vertices.push(at);
        }
        LatticeCurve { vertices }
    }

    /// Builds a curve from explicit vertices, translating so the first one is
    /// the origin. Fails if any consecutive pair is not a unit cardinal step.
    pub fn from_vertices(points: &[Point]) -> Result<Self> {
        let Some(&first) = points.first() else {
            return Err(Error::OutOfDomain("a curve needs at least one vertex".into()));
        };
        for (n, pair) in points.windows(2).enumerate() {
            if Step::between(pair[0], pair[1]).is_none() {
                return Err(Error::OutOfDomain(format!(
                    "vertices {} and {} are not one unit step apart",
                    n,
                    n + 1
                )));
            }
        }
        Ok(LatticeCurve {
            vertices: points
                .iter()
                .map(|p| Point::new(p.x - first.x, p.y - first.y))
                .collect(),
        })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn steps(&self) -> impl Iterator<Item = Step> + '_ {
        self.vertices
            .windows(2)
            .map(|p| Step::between(p[0], p[1]).expect("unit steps"))
    }

    /// Number of unit steps, `||γ||`.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn end(&self) -> Point {
        *self.vertices.last().expect("at least one vertex")
    }

    pub fn is_closed(&self) -> bool {
        self.end() == Point::ORIGIN
    }

    /// Whether a closed curve is embedded: no lattice point is visited twice
    /// apart from the shared start/end. For unit-step paths this is the same
    /// as the polygon having no self-intersection.
    pub fn is_simple(&self) -> Result<bool> {
        if !self.is_closed() {
            return Err(Error::OutOfDomain("simplicity is only defined for closed curves".into()));
        }
        let interior = &self.vertices[..self.vertices.len() - 1];
        let mut seen = HashSet::with_capacity(interior.len());
        Ok(interior.iter().all(|p| seen.insert(*p)))
    }

    /// `∮ x dy`: each vertical step contributes its x-coordinate times its
    /// direction; horizontal steps contribute nothing.
    pub fn line_integral_x_dy(&self) -> i64 {
        self.vertices
            .windows(2)
            .map(|p| p[0].x * (p[1].y - p[0].y))
            .sum()
    }

    /// The same point set traversed backwards, re-anchored at the origin.
    pub fn orientation_reversed(&self) -> LatticeCurve {
        let end = self.end();
        LatticeCurve {
            vertices: self
                .vertices
                .iter()
                .rev()
                .map(|p| Point::new(p.x - end.x, p.y - end.y))
                .collect(),
        }
    }

    /// Inclusive bounding box as `(min, max)`.
    pub fn bounding_box(&self) -> (Point, Point) {
        let mut lo = Point::ORIGIN;
        let mut hi = Point::ORIGIN;
        for p in &self.vertices {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        (lo, hi)
    }

    /// Plain-text export, one `x y` line per vertex.
    pub fn to_vertex_list(&self) -> String {
        let mut out = String::new();
        for p in &self.vertices {
            writeln!(out, "{} {}", p.x, p.y).unwrap();
        }
        out
    }

    pub fn parse_vertex_list(text: &str) -> Result<Self> {
        let mut points = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || Error::Format { line: n + 1, msg: format!("expected \"x y\", got {line:?}") };
            let mut it = line.split_whitespace();
            let x = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
            let y = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
            if it.next().is_some() {
                return Err(bad());
            }
            points.push(Point::new(x, y));
        }
        Self::from_vertices(&points)
    }
}
