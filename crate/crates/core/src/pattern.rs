//! Finite seed patterns and their text format.
//!
//! Format: line 1 is `width height offset_i offset_j`, followed by `height`
//! rows of `width` digits in row-major order with the top row at the
//! highest `j`. Lines starting with `#` are comments. Optional metadata
//! lines `ant: i j heading` and `background: b` may appear anywhere.

use std::fmt::Write as _;

use crate::error::Error;
use crate::grid::{Heading, Point};

/// A finite rectangular pattern perturbing the uniform background.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternGrid {
    pub width: usize,
    pub height: usize,
    /// Grid coordinate of the bottom-left cell.
    pub offset: Point,
    /// Row-major states, top row first.
    pub values: Vec<u8>,
    pub ant: Option<(Point, Heading)>,
    pub background: Option<u8>,
}

impl PatternGrid {
    /// A width x height pattern of the given states, centred on the origin.
    pub fn centred(width: usize, height: usize, values: Vec<u8>) -> PatternGrid {
        assert_eq!(values.len(), width * height);
        PatternGrid {
            width,
            height,
            offset: Point::new(-((width / 2) as i64), -((height / 2) as i64)),
            values,
            ant: None,
            background: None,
        }
    }

    /// The empty pattern: no cells, ant defaulted.
    pub fn empty() -> PatternGrid {
        PatternGrid {
            width: 0,
            height: 0,
            offset: Point::ORIGIN,
            values: Vec::new(),
            ant: None,
            background: None,
        }
    }

    /// Grid coordinates and states of the pattern cells.
    pub fn cells(&self) -> impl Iterator<Item = (Point, u8)> + '_ {
        (0..self.height).flat_map(move |row| {
            (0..self.width).map(move |col| {
                let p = Point::new(
                    self.offset.i + col as i64,
                    self.offset.j + (self.height - 1 - row) as i64,
                );
                (p, self.values[row * self.width + col])
            })
        })
    }

    pub fn parse(text: &str) -> Result<PatternGrid, Error> {
        let err = |line: usize, msg: String| Error::Pattern { line, msg };
        let mut header: Option<(usize, usize, i64, i64)> = None;
        let mut rows: Vec<Vec<u8>> = Vec::new();
        let mut ant = None;
        let mut background = None;

        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("ant:") {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                if parts.len() != 3 {
                    return Err(err(lineno, "ant line needs `i j heading`".into()));
                }
                let i = parts[0]
                    .parse()
                    .map_err(|_| err(lineno, format!("bad ant i {:?}", parts[0])))?;
                let j = parts[1]
                    .parse()
                    .map_err(|_| err(lineno, format!("bad ant j {:?}", parts[1])))?;
                let heading: Heading = parts[2]
                    .parse()
                    .map_err(|_| err(lineno, format!("bad heading {:?}", parts[2])))?;
                ant = Some((Point::new(i, j), heading));
                continue;
            }
            if let Some(rest) = line.strip_prefix("background:") {
                let b = rest
                    .trim()
                    .parse()
                    .map_err(|_| err(lineno, format!("bad background {:?}", rest.trim())))?;
                background = Some(b);
                continue;
            }
            if header.is_none() {
                let parts: Vec<&str> = line.split_whitespace().collect();
                if parts.len() != 4 {
                    return Err(err(
                        lineno,
                        "header needs `width height offset_i offset_j`".into(),
                    ));
                }
                let w = parts[0]
                    .parse()
                    .map_err(|_| err(lineno, format!("bad width {:?}", parts[0])))?;
                let h = parts[1]
                    .parse()
                    .map_err(|_| err(lineno, format!("bad height {:?}", parts[1])))?;
                let oi = parts[2]
                    .parse()
                    .map_err(|_| err(lineno, format!("bad offset_i {:?}", parts[2])))?;
                let oj = parts[3]
                    .parse()
                    .map_err(|_| err(lineno, format!("bad offset_j {:?}", parts[3])))?;
                header = Some((w, h, oi, oj));
                continue;
            }
            let (w, h, _, _) = header.unwrap();
            if rows.len() == h {
                return Err(err(lineno, format!("more than {h} rows")));
            }
            let mut row = Vec::with_capacity(w);
            for (col, ch) in line.chars().enumerate() {
                match ch.to_digit(10) {
                    Some(d) => row.push(d as u8),
                    None => {
                        return Err(err(
                            lineno,
                            format!("non-digit cell {ch:?} at column {}", col + 1),
                        ))
                    }
                }
            }
            if row.len() != w {
                return Err(err(
                    lineno,
                    format!("row has {} cells, expected {w}", row.len()),
                ));
            }
            rows.push(row);
        }

        let (width, height, oi, oj) = header.ok_or(err(0, "missing header line".into()))?;
        if rows.len() != height {
            return Err(err(0, format!("got {} rows, expected {height}", rows.len())));
        }
        Ok(PatternGrid {
            width,
            height,
            offset: Point::new(oi, oj),
            values: rows.concat(),
            ant,
            background,
        })
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} {} {} {}",
            self.width, self.height, self.offset.i, self.offset.j
        );
        for row in 0..self.height {
            for col in 0..self.width {
                let _ = write!(out, "{}", self.values[row * self.width + col]);
            }
            out.push('\n');
        }
        if let Some((p, h)) = self.ant {
            let _ = writeln!(out, "ant: {} {} {}", p.i, p.j, h);
        }
        if let Some(b) = self.background {
            let _ = writeln!(out, "background: {b}");
        }
        out
    }
}
