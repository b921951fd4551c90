//! Sparse unbounded grid, coordinates and headings.
//!
//! Coordinate convention: `i` increases rightward (east), `j` increases
//! upward (north), so `Up = (0, 1)`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// An integer grid coordinate.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point {
    pub i: i64,
    pub j: i64,
}

impl Point {
    pub const ORIGIN: Point = Point { i: 0, j: 0 };

    pub fn new(i: i64, j: i64) -> Point {
        Point { i, j }
    }

    /// Quarter-turn rotation counterclockwise about the origin: (i,j) -> (-j,i).
    pub fn rotate_ccw(self) -> Point {
        Point { i: -self.j, j: self.i }
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.i + rhs.i, self.j + rhs.j)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.i - rhs.i, self.j - rhs.j)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.i, -self.j)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// One of the four ant directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Heading {
    Up,
    Right,
    Down,
    Left,
}

impl Heading {
    /// Unit-vector embedding: Up=(0,1), Right=(1,0), Down=(0,-1), Left=(-1,0).
    pub fn unit(self) -> Point {
        match self {
            Heading::Up => Point::new(0, 1),
            Heading::Right => Point::new(1, 0),
            Heading::Down => Point::new(0, -1),
            Heading::Left => Point::new(-1, 0),
        }
    }

    pub fn turn_ccw(self) -> Heading {
        match self {
            Heading::Up => Heading::Left,
            Heading::Left => Heading::Down,
            Heading::Down => Heading::Right,
            Heading::Right => Heading::Up,
        }
    }

    pub fn turn_cw(self) -> Heading {
        match self {
            Heading::Up => Heading::Right,
            Heading::Right => Heading::Down,
            Heading::Down => Heading::Left,
            Heading::Left => Heading::Up,
        }
    }
}

impl FromStr for Heading {
    type Err = Error;
    fn from_str(s: &str) -> Result<Heading, Error> {
        match s {
            "U" | "u" | "up" => Ok(Heading::Up),
            "R" | "r" | "right" => Ok(Heading::Right),
            "D" | "d" | "down" => Ok(Heading::Down),
            "L" | "l" | "left" => Ok(Heading::Left),
            other => Err(Error::Rule(format!("bad heading {other:?}"))),
        }
    }
}

impl fmt::Display for Heading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Heading::Up => "U",
            Heading::Right => "R",
            Heading::Down => "D",
            Heading::Left => "L",
        })
    }
}

/// Sparse grid configuration: finitely many cells differ from the
/// background state. Entries equal to the background are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridConfig {
    cells: FxHashMap<Point, u8>,
    background: u8,
}

impl GridConfig {
    pub fn uniform(background: u8) -> GridConfig {
        GridConfig {
            cells: FxHashMap::default(),
            background,
        }
    }

    pub fn background(&self) -> u8 {
        self.background
    }

    pub fn get(&self, p: Point) -> u8 {
        self.cells.get(&p).copied().unwrap_or(self.background)
    }

    /// Writes a state; entries equal to the background are deleted.
    pub fn set(&mut self, p: Point, state: u8) {
        if state == self.background {
            self.cells.remove(&p);
        } else {
            self.cells.insert(p, state);
        }
    }

    pub fn non_background_count(&self) -> usize {
        self.cells.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Point, u8)> + '_ {
        self.cells.iter().map(|(&p, &s)| (p, s))
    }

    /// Minimal bounding box of non-background cells, as (min, max) corners.
    pub fn bounds(&self) -> Option<(Point, Point)> {
        let mut it = self.cells.keys();
        let first = *it.next()?;
        let (mut lo, mut hi) = (first, first);
        for &p in it {
            lo.i = lo.i.min(p.i);
            lo.j = lo.j.min(p.j);
            hi.i = hi.i.max(p.i);
            hi.j = hi.j.max(p.j);
        }
        Some((lo, hi))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turn_cycles_are_inverse() {
        for h in [Heading::Up, Heading::Right, Heading::Down, Heading::Left] {
            assert_eq!(h.turn_ccw().turn_cw(), h);
            assert_eq!(h.turn_cw().turn_ccw(), h);
        }
        assert_eq!(Heading::Up.turn_ccw(), Heading::Left);
        assert_eq!(Heading::Left.turn_ccw(), Heading::Down);
        assert_eq!(Heading::Down.turn_ccw(), Heading::Right);
        assert_eq!(Heading::Right.turn_ccw(), Heading::Up);
    }

    #[test]
    fn heading_rotation_matches_point_rotation() {
        for h in [Heading::Up, Heading::Right, Heading::Down, Heading::Left] {
            assert_eq!(h.turn_ccw().unit(), h.unit().rotate_ccw());
        }
    }

    #[test]
    fn background_entries_are_not_stored() {
        let mut g = GridConfig::uniform(0);
        g.set(Point::new(3, -1), 2);
        assert_eq!(g.get(Point::new(3, -1)), 2);
        assert_eq!(g.non_background_count(), 1);
        g.set(Point::new(3, -1), 0);
        assert_eq!(g.non_background_count(), 0);
        assert_eq!(g.get(Point::new(3, -1)), 0);
    }

    #[test]
    fn bounds_track_extrema() {
        let mut g = GridConfig::uniform(0);
        assert_eq!(g.bounds(), None);
        g.set(Point::new(-2, 5), 1);
        g.set(Point::new(4, -3), 1);
        assert_eq!(g.bounds(), Some((Point::new(-2, -3), Point::new(4, 5))));
    }
}
