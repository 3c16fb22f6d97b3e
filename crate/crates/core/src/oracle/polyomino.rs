//! Fixed polyominoes: enumeration, perimeter, and the minimum-perimeter check.

use std::collections::{BTreeSet, HashSet};

use super::{check_cap, OracleReport};
use crate::bounds::min_polyomino_perimeter;
use crate::error::{Error, Result};

pub type Cell = (i32, i32);

const NEIGHBOURS: [Cell; 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];

/// An edge-connected set of unit cells, translated so the minimum x and the
/// minimum y are both 0. Cells are kept sorted, so equality is identity of
/// fixed polyominoes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polyomino {
    cells: Vec<Cell>,
}

impl Polyomino {
    pub fn from_cells(cells: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let p = Self::normalized(cells);
        if p.cells.is_empty() {
            return Err(Error::OutOfDomain("a polyomino has at least one cell".into()));
        }
        if !p.is_connected() {
            return Err(Error::OutOfDomain("polyomino cells are not edge-connected".into()));
        }
        Ok(p)
    }

    fn normalized(cells: impl IntoIterator<Item = Cell>) -> Self {
        let mut cells: Vec<Cell> = cells.into_iter().collect();
        let min_x = cells.iter().map(|c| c.0).min().unwrap_or(0);
        let min_y = cells.iter().map(|c| c.1).min().unwrap_or(0);
        for c in &mut cells {
            *c = (c.0 - min_x, c.1 - min_y);
        }
        cells.sort_unstable();
        cells.dedup();
        Polyomino { cells }
    }

    fn grow(&self, cell: Cell) -> Polyomino {
        Polyomino::normalized(self.cells.iter().copied().chain(std::iter::once(cell)))
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn area(&self) -> usize {
        self.cells.len()
    }

    fn contains(&self, c: Cell) -> bool {
        self.cells.binary_search(&c).is_ok()
    }

    /// Unit edges with a cell on exactly one side: `4·area - 2·(adjacent pairs)`.
    pub fn perimeter(&self) -> usize {
        let adjacent = self
            .cells
            .iter()
            .filter(|&&(x, y)| self.contains((x + 1, y)))
            .count()
            + self
                .cells
                .iter()
                .filter(|&&(x, y)| self.contains((x, y + 1)))
                .count();
        4 * self.area() - 2 * adjacent
    }

    pub fn is_normalized(&self) -> bool {
        self.cells.iter().map(|c| c.0).min() == Some(0)
            && self.cells.iter().map(|c| c.1).min() == Some(0)
    }

    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.cells.first() else {
            return false;
        };
        let mut seen = HashSet::from([start]);
        let mut stack = vec![start];
        while let Some((x, y)) = stack.pop() {
            for (dx, dy) in NEIGHBOURS {
                let n = (x + dx, y + dy);
                if self.contains(n) && seen.insert(n) {
                    stack.push(n);
                }
            }
        }
        seen.len() == self.cells.len()
    }

    /// Image under one of the 8 symmetries of the square grid.
    pub fn transformed(&self, symmetry: u8) -> Polyomino {
        Self::normalized(self.cells.iter().map(|&(x, y)| {
            let (x, y) = if symmetry & 4 != 0 { (y, x) } else { (x, y) };
            let x = if symmetry & 1 != 0 { -x } else { x };
            let y = if symmetry & 2 != 0 { -y } else { y };
            (x, y)
        }))
    }
}

/// All fixed polyominoes with `area` cells, grown one cell at a time from
/// the monomino and deduplicated by normalized cell set.
pub fn enumerate_polyominoes(area: usize, cap: usize) -> Result<BTreeSet<Polyomino>> {
    if area == 0 {
        return Err(Error::OutOfDomain("polyomino area must be at least 1".into()));
    }
    check_cap("area", area, cap)?;
    Ok(grow_levels(area).pop().expect("at least one level"))
}

/// Levels `1..=max_area` of the growth enumeration.
fn grow_levels(max_area: usize) -> Vec<BTreeSet<Polyomino>> {
    let mut levels = vec![BTreeSet::from([Polyomino { cells: vec![(0, 0)] }])];
    while levels.len() < max_area {
        let mut next = BTreeSet::new();
        for p in levels.last().unwrap() {
            for &(x, y) in &p.cells {
                for (dx, dy) in NEIGHBOURS {
                    let n = (x + dx, y + dy);
                    if !p.contains(n) {
                        next.insert(p.grow(n));
                    }
                }
            }
        }
        levels.push(next);
    }
    levels
}

/// For each area `1..=max_area`: the least perimeter found by enumeration
/// against `2⌈2√A⌉`.
pub fn verify_min_perimeter(max_area: usize, cap: usize) -> Result<Vec<OracleReport>> {
    if max_area == 0 {
        return Err(Error::OutOfDomain("maximum area must be at least 1".into()));
    }
    check_cap("area", max_area, cap)?;
    grow_levels(max_area)
        .iter()
        .enumerate()
        .map(|(slot, level)| {
            let area = slot as u64 + 1;
            let observed = level
                .iter()
                .map(Polyomino::perimeter)
                .min()
                .expect("every area has a polyomino") as u64;
            Ok(OracleReport::new(area, observed, min_polyomino_perimeter(area)?))
        })
        .collect()
}

/// Fixed-polyomino counts for areas `1..=max_area` by Redelmeier's method:
/// cells are added only from an "untried" set restricted to the upper half
/// plane, so each fixed polyomino is produced exactly once and nothing needs
/// deduplicating. Index 0 of the result is area 1.
pub fn redelmeier_counts(max_area: usize) -> Vec<u64> {
    fn admissible((x, y): Cell) -> bool {
        y > 0 || (y == 0 && x >= 0)
    }

    fn extend(untried: Vec<Cell>, size: usize, max: usize, seen: &mut HashSet<Cell>, counts: &mut [u64]) {
        let mut untried = untried;
        while let Some(cell) = untried.pop() {
            counts[size] += 1;
            if size + 1 < max {
                let mut fresh = Vec::new();
                for (dx, dy) in NEIGHBOURS {
                    let n = (cell.0 + dx, cell.1 + dy);
                    if admissible(n) && seen.insert(n) {
                        fresh.push(n);
                    }
                }
                let mut next = untried.clone();
                next.extend(&fresh);
                extend(next, size + 1, max, seen, counts);
                for n in fresh {
                    seen.remove(&n);
                }
            }
        }
    }

    let mut counts = vec![0; max_area];
    if max_area > 0 {
        let mut seen = HashSet::from([(0, 0)]);
        extend(vec![(0, 0)], 0, max_area, &mut seen, &mut counts);
    }
    counts
}

/// Growth-enumeration counts against Redelmeier counts, one row per area.
pub fn cross_check_counts(max_area: usize, cap: usize) -> Result<Vec<OracleReport>> {
    if max_area == 0 {
        return Err(Error::OutOfDomain("maximum area must be at least 1".into()));
    }
    check_cap("area", max_area, cap)?;
    let second = redelmeier_counts(max_area);
    Ok(grow_levels(max_area)
        .iter()
        .zip(second)
        .enumerate()
        .map(|(slot, (level, count))| OracleReport::new(slot as u64 + 1, level.len() as u64, count))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(cells: &[Cell]) -> Polyomino {
        Polyomino::from_cells(cells.iter().copied()).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_polyominoes(1, 10).unwrap().len(), 1);
        let dominoes = enumerate_polyominoes(2, 10).unwrap();
        assert_eq!(dominoes.len(), 2);
        assert!(dominoes.contains(&poly(&[(0, 0), (1, 0)])));
        assert!(dominoes.contains(&poly(&[(0, 0), (0, 1)])));
        assert_eq!(enumerate_polyominoes(3, 10).unwrap().len(), 6);
    }

    #[test]
    fn redelmeier_small() {
        assert_eq!(redelmeier_counts(5), vec![1, 2, 6, 19, 63]);
        assert!(redelmeier_counts(0).is_empty());
    }

    #[test]
    fn errors() {
        assert!(enumerate_polyominoes(0, 10).is_err());
        assert!(matches!(enumerate_polyominoes(11, 10), Err(Error::CapExceeded { .. })));
        assert!(verify_min_perimeter(0, 10).is_err());
        assert!(Polyomino::from_cells([]).is_err());
        assert!(Polyomino::from_cells([(0, 0), (1, 1)]).is_err());
    }

    #[test]
    fn perimeters() {
        assert_eq!(poly(&[(0, 0)]).perimeter(), 4);
        assert_eq!(poly(&[(0, 0), (0, 1), (1, 0), (1, 1)]).perimeter(), 8);
        assert_eq!(poly(&[(0, 0), (1, 0), (2, 0)]).perimeter(), 8);
        // U-pentomino: 4·5 - 2·4
        assert_eq!(poly(&[(0, 0), (0, 1), (1, 0), (2, 0), (2, 1)]).perimeter(), 12);
    }

    #[test]
    fn normalization() {
        let p = poly(&[(5, -3), (6, -3)]);
        assert_eq!(p.cells(), &[(0, 0), (1, 0)]);
        assert!(p.is_normalized());
    }

    #[test]
    fn min_perimeter_up_to_four() {
        let r = verify_min_perimeter(4, 10).unwrap();
        let observed: Vec<u64> = r.iter().map(|x| x.observed).collect();
        assert_eq!(observed, vec![4, 6, 8, 8]);
        assert!(r.iter().all(|x| x.agree));
        assert_eq!(verify_min_perimeter(1, 10).unwrap(), vec![OracleReport::new(1, 4, 4)]);
    }

    #[test]
    fn enumerated_items_are_well_formed() {
        for area in 1..=7 {
            for p in enumerate_polyominoes(area, 10).unwrap() {
                assert_eq!(p.area(), area);
                assert!(p.is_connected() && p.is_normalized());
            }
        }
    }

    proptest! {
        #[test]
        fn perimeter_is_symmetry_invariant(index in 0usize..63, symmetry in 0u8..8) {
            let all: Vec<Polyomino> = enumerate_polyominoes(5, 10).unwrap().into_iter().collect();
            let p = &all[index];
            let q = p.transformed(symmetry);
            prop_assert_eq!(q.perimeter(), p.perimeter());
            prop_assert!(all.contains(&q));
        }
    }
}
