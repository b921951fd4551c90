//! Highway detection and periodic-word utilities.
//!
//! A run is in a highway of period `n` and drift `(a,b)` when its trace is
//! `n`-periodic (and not `k`-periodic for `k < n`) and its trajectory is
//! `n`-periodic modulo the constant drift `(a,b)`.

use serde::{Deserialize, Serialize};

use crate::ant::{AntConfiguration, Recorder};
use crate::error::Error;
use crate::grid::Point;

/// Tuning knobs for the online detector.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DetectorParams {
    /// Largest candidate period considered.
    pub n_max: usize,
    /// Number of confirmation periods K: a candidate must hold over the
    /// final (K+1)*n recorded steps.
    pub confirm_periods: usize,
    /// Steps between detection attempts during an online run.
    pub check_interval: u64,
    /// Minimum span (in steps) the candidate conditions must hold over,
    /// regardless of period. Guards against short periods certified on a
    /// brief regular stretch: the chaotic phase of the classic LR ant
    /// contains diagonal staircase segments that satisfy a period-2 drift
    /// condition for a few dozen steps.
    pub min_confirm_steps: usize,
}

impl Default for DetectorParams {
    fn default() -> DetectorParams {
        DetectorParams {
            n_max: 2048,
            confirm_periods: 3,
            check_interval: 256,
            min_confirm_steps: 200,
        }
    }
}

impl DetectorParams {
    /// Default rolling-window length for long detection runs: 3 * n_max.
    pub fn default_window(&self) -> usize {
        3 * self.n_max
    }
}

/// A certified highway: from `entry_step` on, the trace repeats `word`
/// (period `period`) and the trajectory gains `drift` per period.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HighwayReport {
    pub entry_step: u64,
    pub period: usize,
    pub drift: (i64, i64),
    /// Canonical (least-rotation) form of the periodic trace word.
    pub word: Vec<u8>,
    pub speed: f64,
}

impl HighwayReport {
    /// The word as a digit string (states >= 10 rendered in a wider alphabet).
    pub fn word_string(&self) -> String {
        word_to_string(&self.word)
    }
}

const WORD_ALPHABET: &[u8; 64] =
    b"0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ+/";

pub fn word_to_string(word: &[u8]) -> String {
    word.iter()
        .map(|&s| WORD_ALPHABET[s as usize] as char)
        .collect()
}

pub fn word_from_string(s: &str) -> Result<Vec<u8>, Error> {
    s.bytes()
        .map(|b| {
            WORD_ALPHABET
                .iter()
                .position(|&a| a == b)
                .map(|p| p as u8)
                .ok_or_else(|| Error::Rule(format!("bad word symbol {:?}", b as char)))
        })
        .collect()
}

/// Drift magnitude per step.
pub fn speed(period: usize, drift: (i64, i64)) -> f64 {
    let (a, b) = drift;
    ((a * a + b * b) as f64).sqrt() / period as f64
}

/// Index of the lexicographically least cyclic rotation (Booth's algorithm).
pub fn least_rotation_index(word: &[u8]) -> usize {
    let n = word.len();
    let at = |i: usize| word[i % n];
    let mut f = vec![usize::MAX; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = f[j - k - 1];
        while i != usize::MAX && sj != at(k + i + 1) {
            if sj < at(k + i + 1) {
                k = j - i - 1;
            }
            i = f[i];
        }
        if i == usize::MAX && sj != at(k) {
            if sj < at(k) {
                k = j;
            }
            f[j - k] = usize::MAX;
        } else {
            f[j - k] = i.wrapping_add(1);
        }
    }
    k
}

/// The lexicographically least cyclic rotation of a non-empty word.
pub fn canonical_rotation(word: &[u8]) -> Result<Vec<u8>, Error> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let k = least_rotation_index(word);
    let mut out = Vec::with_capacity(word.len());
    out.extend_from_slice(&word[k..]);
    out.extend_from_slice(&word[..k]);
    Ok(out)
}

/// Smallest `p` dividing `|word|` such that the word is `p`-periodic.
pub fn primitive_period(word: &[u8]) -> usize {
    let n = word.len();
    'outer: for p in 1..=n {
        if !n.is_multiple_of(p) {
            continue;
        }
        for i in p..n {
            if word[i] != word[i - p] {
                continue 'outer;
            }
        }
        return p;
    }
    n
}

/// Scans the recorded window for the smallest period `n <= n_max` such
/// that, over the final `(K+1)*n` steps, the trace is `n`-periodic and the
/// trajectory is `n`-periodic modulo a fixed drift. The entry step is the
/// earliest retained index from which both conditions extend backwards.
pub fn detect_highway(rec: &Recorder, params: &DetectorParams) -> Option<HighwayReport> {
    let len = rec.len() as u64;
    let end = rec.end_index();
    let k = params.confirm_periods as u64;
    if (params.min_confirm_steps as u64) > len {
        return None;
    }

    for n in 1..=params.n_max {
        let n64 = n as u64;
        if (k + 1) * n64 > len {
            break;
        }
        // Cheap drift-consistency prune before the full window verify.
        let drift = rec.position_at(end - 1) - rec.position_at(end - 1 - n64);
        let consistent = (1..k).all(|j| {
            rec.position_at(end - 1 - j * n64) - rec.position_at(end - 1 - (j + 1) * n64) == drift
        });
        if !consistent {
            continue;
        }
        let window_start = end - ((k + 1) * n64).max(params.min_confirm_steps as u64);
        let verified = (window_start..end - n64).all(|t| {
            rec.symbol_at(t + n64) == rec.symbol_at(t)
                && rec.position_at(t + n64) == rec.position_at(t) + drift
        });
        if !verified {
            continue;
        }
        let word: Vec<u8> = (end - n64..end).map(|t| rec.symbol_at(t)).collect();
        if primitive_period(&word) != n {
            // Trace repeats faster than the trajectory: not a primitive
            // highway period, keep searching.
            continue;
        }
        // Back-extend to the earliest retained step where the conditions hold.
        let mut entry = window_start;
        while entry > rec.start_index()
            && rec.symbol_at(entry - 1) == rec.symbol_at(entry - 1 + n64)
            && rec.position_at(entry - 1 + n64) == rec.position_at(entry - 1) + drift
        {
            entry -= 1;
        }
        return Some(HighwayReport {
            entry_step: entry,
            period: n,
            drift: (drift.i, drift.j),
            word: canonical_rotation(&word).expect("word is non-empty"),
            speed: speed(n, (drift.i, drift.j)),
        });
    }
    None
}

/// Runs `config` for at most `horizon` steps, attempting detection every
/// `check_interval` steps, and stops early on a confirmed report.
pub fn run_with_detection(
    config: &mut AntConfiguration,
    horizon: u64,
    params: &DetectorParams,
    rec: &mut Recorder,
) -> Option<HighwayReport> {
    let mut done = rec.end_index();
    debug_assert_eq!(done, 0, "recorder should start empty");
    while done < horizon {
        let chunk = params.check_interval.min(horizon - done);
        config.run(chunk, rec);
        done += chunk;
        if let Some(report) = detect_highway(rec, params) {
            return Some(report);
        }
    }
    None
}

/// Re-verifies a report against the recorded window: the trace and drift
/// conditions must hold from the entry step to the end of the window.
pub fn verify_report(rec: &Recorder, report: &HighwayReport) -> bool {
    let n = report.period as u64;
    let end = rec.end_index();
    if report.entry_step < rec.start_index() || report.entry_step + n > end {
        return false;
    }
    let drift = Point::new(report.drift.0, report.drift.1);
    (report.entry_step..end - n).all(|t| {
        rec.symbol_at(t + n) == rec.symbol_at(t)
            && rec.position_at(t + n) == rec.position_at(t) + drift
    })
}
