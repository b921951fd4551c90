//! JSON run record written by `simulate` and consumed by `detect`/`render`.

use glant_core::{AntConfiguration, Heading, Point, Recorder, RuleWord};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunRecord {
    pub rule: RuleWord,
    pub background: u8,
    pub steps: u64,
    pub position: Point,
    pub heading: Heading,
    /// Non-background cells, sorted by (j, i) for stable output.
    pub cells: Vec<(i64, i64, u8)>,
    pub trace: Vec<u8>,
    pub trajectory: Vec<(i64, i64)>,
}

impl RunRecord {
    pub fn new(config: &AntConfiguration, rec: &Recorder, steps: u64) -> RunRecord {
        let mut cells: Vec<(i64, i64, u8)> =
            config.grid.iter().map(|(p, s)| (p.i, p.j, s)).collect();
        cells.sort_by_key(|&(i, j, _)| (j, i));
        RunRecord {
            rule: config.rule.clone(),
            background: config.grid.background(),
            steps,
            position: config.position,
            heading: config.heading,
            cells,
            trace: rec.trace().collect(),
            trajectory: rec.trajectory().map(|p| (p.i, p.j)).collect(),
        }
    }

    pub fn configuration(&self) -> Result<AntConfiguration, glant_core::Error> {
        let mut config = AntConfiguration::uniform(self.rule.clone(), self.background)?;
        for &(i, j, s) in &self.cells {
            config.grid.set(Point::new(i, j), s);
        }
        config.position = self.position;
        config.heading = self.heading;
        Ok(config)
    }

    pub fn recorder(&self) -> Recorder {
        let mut rec = Recorder::full();
        for (&s, &(i, j)) in self.trace.iter().zip(&self.trajectory) {
            rec.record(s, Point::new(i, j));
        }
        rec
    }
}
