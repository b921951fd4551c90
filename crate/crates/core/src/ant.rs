//! The ant transition system: forward step, inverse step, bulk runs and
//! whole-configuration rotation.

use std::collections::VecDeque;

use crate::error::Error;
use crate::grid::{GridConfig, Heading, Point};
use crate::pattern::PatternGrid;
use crate::rule::{RuleWord, Turn};

/// A full ant configuration: grid, ant position, ant heading and rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntConfiguration {
    pub grid: GridConfig,
    pub position: Point,
    pub heading: Heading,
    pub rule: RuleWord,
}

impl AntConfiguration {
    /// Uniform-background configuration with the ant at the origin facing up.
    pub fn uniform(rule: RuleWord, background: u8) -> Result<AntConfiguration, Error> {
        if background >= rule.modulus() {
            return Err(Error::BackgroundOutOfRange {
                state: background,
                m: rule.modulus(),
            });
        }
        Ok(AntConfiguration {
            grid: GridConfig::uniform(background),
            position: Point::ORIGIN,
            heading: Heading::Up,
            rule,
        })
    }

    /// Perturbs the uniform configuration by `pattern` at its declared offset.
    /// The ant pose defaults to the origin facing up.
    pub fn from_pattern(rule: RuleWord, pattern: &PatternGrid) -> Result<AntConfiguration, Error> {
        let m = rule.modulus();
        let background = pattern.background.unwrap_or(0);
        let mut config = AntConfiguration::uniform(rule, background)?;
        for (p, state) in pattern.cells() {
            if state >= m {
                return Err(Error::StateOutOfRange {
                    state,
                    i: p.i,
                    j: p.j,
                    m,
                });
            }
            config.grid.set(p, state);
        }
        if let Some((pos, heading)) = pattern.ant {
            config.position = pos;
            config.heading = heading;
        }
        Ok(config)
    }

    /// One transition. Returns the symbol read (the state of the cell the
    /// ant stood on, before the increment).
    pub fn step(&mut self) -> u8 {
        let k = self.grid.get(self.position);
        self.heading = match self.rule.turn(k) {
            Turn::Left => self.heading.turn_ccw(),
            Turn::Right => self.heading.turn_cw(),
        };
        let m = self.rule.modulus();
        self.grid.set(self.position, (k + 1) % m);
        self.position = self.position + self.heading.unit();
        k
    }

    /// Inverse transition: `inverse_step . step` is the identity.
    pub fn inverse_step(&mut self) {
        let m = self.rule.modulus();
        let prev = self.position - self.heading.unit();
        let k = (self.grid.get(prev) + m - 1) % m;
        self.grid.set(prev, k);
        self.heading = match self.rule.turn(k) {
            Turn::Left => self.heading.turn_cw(),
            Turn::Right => self.heading.turn_ccw(),
        };
        self.position = prev;
    }

    /// Applies `steps` transitions, recording the pre-increment symbol and
    /// pre-move position of each.
    pub fn run(&mut self, steps: u64, recorder: &mut Recorder) {
        for _ in 0..steps {
            let pos = self.position;
            let symbol = self.step();
            recorder.record(symbol, pos);
        }
    }

    /// Rotates the whole configuration (grid, position, heading) by
    /// `quarter_turns` x pi/2 counterclockwise about the origin.
    pub fn rotated(&self, quarter_turns: u8) -> AntConfiguration {
        let k = quarter_turns % 4;
        let rot = |mut p: Point| {
            for _ in 0..k {
                p = p.rotate_ccw();
            }
            p
        };
        let mut grid = GridConfig::uniform(self.grid.background());
        for (p, s) in self.grid.iter() {
            grid.set(rot(p), s);
        }
        let mut heading = self.heading;
        for _ in 0..k {
            heading = heading.turn_ccw();
        }
        AntConfiguration {
            grid,
            position: rot(self.position),
            heading,
            rule: self.rule.clone(),
        }
    }
}

/// Records the trace (symbols read) and trajectory (positions visited) of a
/// run, either in full or as a rolling window of the most recent entries.
///
/// Entries are addressed by absolute time index; `start_index` is the index
/// of the oldest retained entry.
#[derive(Debug, Clone)]
pub struct Recorder {
    trace: VecDeque<u8>,
    trajectory: VecDeque<Point>,
    start: u64,
    window: Option<usize>,
}

impl Recorder {
    /// Retains the whole trace and trajectory.
    pub fn full() -> Recorder {
        Recorder {
            trace: VecDeque::new(),
            trajectory: VecDeque::new(),
            start: 0,
            window: None,
        }
    }

    /// Retains only the most recent `window` entries.
    pub fn windowed(window: usize) -> Recorder {
        assert!(window > 0);
        Recorder {
            trace: VecDeque::with_capacity(window),
            trajectory: VecDeque::with_capacity(window),
            start: 0,
            window: Some(window),
        }
    }

    pub fn record(&mut self, symbol: u8, position: Point) {
        if let Some(w) = self.window {
            if self.trace.len() == w {
                self.trace.pop_front();
                self.trajectory.pop_front();
                self.start += 1;
            }
        }
        self.trace.push_back(symbol);
        self.trajectory.push_back(position);
    }

    /// Number of retained entries.
    pub fn len(&self) -> usize {
        self.trace.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trace.is_empty()
    }

    /// Absolute time index of the oldest retained entry.
    pub fn start_index(&self) -> u64 {
        self.start
    }

    /// One past the absolute time index of the newest entry.
    pub fn end_index(&self) -> u64 {
        self.start + self.trace.len() as u64
    }

    /// Symbol read at absolute time `t` (must be retained).
    pub fn symbol_at(&self, t: u64) -> u8 {
        self.trace[(t - self.start) as usize]
    }

    /// Ant position at absolute time `t` (must be retained).
    pub fn position_at(&self, t: u64) -> Point {
        self.trajectory[(t - self.start) as usize]
    }

    pub fn trace(&self) -> impl Iterator<Item = u8> + '_ {
        self.trace.iter().copied()
    }

    pub fn trajectory(&self) -> impl Iterator<Item = Point> + '_ {
        self.trajectory.iter().copied()
    }
}
