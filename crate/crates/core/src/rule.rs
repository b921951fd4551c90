//! Rule words over the alphabet `{L, R}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A single quarter turn: `L` is counterclockwise, `R` is clockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Turn {
    Left,
    Right,
}

/// A word over `{L, R}` naming a generalised ant. Letter `k` gives the turn
/// taken on a cell in state `k`; the word length is the cell-state modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct RuleWord {
    letters: Vec<Turn>,
}

impl RuleWord {
    /// Largest supported modulus; longer words are rejected.
    pub const MAX_STATES: usize = 64;

    pub fn parse(s: &str) -> Result<Self, Error> {
        let mut letters = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                'L' | 'l' => letters.push(Turn::Left),
                'R' | 'r' => letters.push(Turn::Right),
                other => return Err(Error::Rule(format!("bad letter {other:?} in {s:?}"))),
            }
        }
        if letters.len() < 2 {
            return Err(Error::Rule(format!(
                "rule word must have at least 2 letters, got {:?}",
                s
            )));
        }
        if letters.len() > Self::MAX_STATES {
            return Err(Error::Rule(format!(
                "rule word longer than {} letters",
                Self::MAX_STATES
            )));
        }
        Ok(RuleWord { letters })
    }

    /// The family L^{2k+1}R: 2k+1 left turns followed by one right turn.
    pub fn l_family(k: usize) -> Result<Self, Error> {
        let mut letters = vec![Turn::Left; 2 * k + 1];
        letters.push(Turn::Right);
        if letters.len() > Self::MAX_STATES {
            return Err(Error::Rule(format!("k = {k} exceeds supported modulus")));
        }
        Ok(RuleWord { letters })
    }

    /// Cell-state modulus `m = |letters|`.
    pub fn modulus(&self) -> u8 {
        self.letters.len() as u8
    }

    /// Turn taken on a cell in state `state` (state < modulus).
    pub fn turn(&self, state: u8) -> Turn {
        self.letters[state as usize]
    }
}

impl FromStr for RuleWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        RuleWord::parse(s)
    }
}

impl TryFrom<String> for RuleWord {
    type Error = Error;
    fn try_from(s: String) -> Result<Self, Error> {
        RuleWord::parse(&s)
    }
}

impl From<RuleWord> for String {
    fn from(r: RuleWord) -> String {
        r.to_string()
    }
}

impl fmt::Display for RuleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.letters {
            f.write_str(match t {
                Turn::Left => "L",
                Turn::Right => "R",
            })?;
        }
        Ok(())
    }
}
