//! Catalog of known highways and report classification.
//!
//! Catalog files are line-oriented: `rule name period |a| |b| [word]`,
//! with `#` comments. Drift columns may be `*` for period-only entries
//! whose drift has not been pinned down. Words are written as digit
//! strings and stored in canonical (least-rotation) form.

use std::fmt::Write as _;

use crate::analysis::{canonical_rotation, primitive_period, word_from_string, word_to_string, HighwayReport};
use crate::error::Error;
use crate::rule::RuleWord;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub rule: RuleWord,
    pub name: String,
    pub period: usize,
    /// Absolute drift components; `None` matches any drift.
    pub drift_magnitude: Option<(i64, i64)>,
    /// Canonical rotation of the periodic trace word, when known.
    pub word_class: Option<Vec<u8>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// The catalog shipped with the crate.
    pub fn builtin() -> Catalog {
        Catalog::parse(include_str!("builtin_catalog.txt"))
            .expect("builtin catalog must parse")
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn parse(text: &str) -> Result<Catalog, Error> {
        let err = |line: usize, msg: String| Error::Catalog { line, msg };
        let mut entries = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() < 5 || parts.len() > 6 {
                return Err(err(
                    lineno,
                    "expected `rule name period |a| |b| [word]`".into(),
                ));
            }
            let rule = RuleWord::parse(parts[0])
                .map_err(|e| err(lineno, e.to_string()))?;
            let period: usize = parts[2]
                .parse()
                .map_err(|_| err(lineno, format!("bad period {:?}", parts[2])))?;
            let drift_magnitude = if parts[3] == "*" && parts[4] == "*" {
                None
            } else {
                let a: i64 = parts[3]
                    .parse()
                    .map_err(|_| err(lineno, format!("bad drift {:?}", parts[3])))?;
                let b: i64 = parts[4]
                    .parse()
                    .map_err(|_| err(lineno, format!("bad drift {:?}", parts[4])))?;
                if a < 0 || b < 0 {
                    return Err(err(lineno, "drift magnitudes must be >= 0".into()));
                }
                Some((a, b))
            };
            let word_class = match parts.get(5) {
                Some(w) => Some(word_from_string(w).map_err(|e| err(lineno, e.to_string()))?),
                None => None,
            };
            entries.push(CatalogEntry {
                rule,
                name: parts[1].to_string(),
                period,
                drift_magnitude,
                word_class,
            });
        }
        if entries.is_empty() {
            return Err(err(0, "catalog has no entries".into()));
        }
        Ok(Catalog { entries })
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let _ = write!(out, "{} {} {}", e.rule, e.name, e.period);
            match e.drift_magnitude {
                Some((a, b)) => {
                    let _ = write!(out, " {a} {b}");
                }
                None => out.push_str(" * *"),
            }
            if let Some(w) = &e.word_class {
                let _ = write!(out, " {}", word_to_string(w));
            }
            out.push('\n');
        }
        out
    }

    /// Checks every stored word: length equals the period, symbols are
    /// below the rule modulus, the word is primitive, and it is already in
    /// canonical rotation.
    pub fn verify(&self) -> Result<(), Error> {
        for (idx, e) in self.entries.iter().enumerate() {
            let line = idx + 1;
            let err = |msg: String| Error::Catalog { line, msg };
            if let Some(w) = &e.word_class {
                if w.len() != e.period {
                    return Err(err(format!(
                        "{}: word length {} != period {}",
                        e.name,
                        w.len(),
                        e.period
                    )));
                }
                if w.iter().any(|&s| s >= e.rule.modulus()) {
                    return Err(err(format!("{}: word symbol out of range", e.name)));
                }
                if primitive_period(w) != e.period {
                    return Err(err(format!(
                        "{}: word is {}-periodic, not primitive",
                        e.name,
                        primitive_period(w)
                    )));
                }
                let canon = canonical_rotation(w).expect("non-empty");
                if &canon != w {
                    return Err(err(format!("{}: word not in canonical rotation", e.name)));
                }
            }
        }
        Ok(())
    }

    /// Matches a report against the catalog. Zero drift is a closed cycle,
    /// not a highway. Matching uses drift magnitudes (sorted), so it is
    /// invariant under quarter-turn rotation of the configuration.
    pub fn classify(&self, rule: &RuleWord, report: &HighwayReport) -> String {
        if report.drift == (0, 0) {
            return "cycle".to_string();
        }
        let mag = sorted_abs(report.drift);
        for e in &self.entries {
            if &e.rule != rule || e.period != report.period {
                continue;
            }
            if let Some(d) = e.drift_magnitude {
                if sorted_abs((d.0, d.1)) != mag {
                    continue;
                }
            }
            if let Some(w) = &e.word_class {
                if w != &report.word {
                    continue;
                }
            }
            return e.name.clone();
        }
        format!("unknown(period={})", report.period)
    }
}

fn sorted_abs((a, b): (i64, i64)) -> (i64, i64) {
    let (a, b) = (a.abs(), b.abs());
    (a.min(b), a.max(b))
}
