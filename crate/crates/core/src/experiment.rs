//! Randomized-seed experiment harness.
//!
//! Each trial draws a uniform random pattern, runs the ant with online
//! highway detection, and classifies the outcome. Per-trial random
//! streams are ChaCha8 (rand_chacha 0.9), seeded from the master seed and
//! trial index through a splitmix64 avalanche mix, so any trial can be
//! replayed in isolation and batch output is independent of scheduling.

use std::collections::BTreeMap;
use std::io;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{run_with_detection, DetectorParams, HighwayReport};
use crate::ant::{AntConfiguration, Recorder};
use crate::catalog::Catalog;
use crate::error::Error;
use crate::pattern::PatternGrid;
use crate::rule::RuleWord;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExperimentPlan {
    pub rule: RuleWord,
    pub pattern_width: usize,
    pub pattern_height: usize,
    pub horizon: u64,
    pub trials: u64,
    pub master_seed: u64,
    pub background: u8,
    pub detector: DetectorParams,
}

impl ExperimentPlan {
    pub fn new(rule: RuleWord) -> ExperimentPlan {
        ExperimentPlan {
            rule,
            pattern_width: 11,
            pattern_height: 11,
            horizon: 100_000,
            trials: 0,
            master_seed: 0,
            background: 0,
            detector: DetectorParams::default(),
        }
    }
}

/// splitmix64 finalizer: a bijective 64-bit avalanche mix.
pub fn mix64(mut x: u64) -> u64 {
    x ^= x >> 30;
    x = x.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x ^= x >> 27;
    x = x.wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^= x >> 31;
    x
}

const GOLDEN_RATIO: u64 = 0x9E37_79B9_7F4A_7C15;

/// Per-trial stream seed: mix64(master XOR golden-ratio-scrambled index).
pub fn trial_seed(master_seed: u64, trial_index: u64) -> u64 {
    mix64(master_seed ^ trial_index.wrapping_mul(GOLDEN_RATIO))
}

/// Draws a width x height pattern of i.i.d. uniform states in `{0..m-1}`,
/// centred on the origin.
pub fn random_pattern<R: Rng>(rng: &mut R, width: usize, height: usize, m: u8) -> PatternGrid {
    let values = (0..width * height)
        .map(|_| rng.random_range(0..m))
        .collect();
    PatternGrid::centred(width, height, values)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialOutcome {
    pub trial: u64,
    pub label: String,
    pub report: Option<HighwayReport>,
}

/// Runs one trial of the plan. Deterministic in (plan, trial_index).
pub fn run_trial(plan: &ExperimentPlan, catalog: &Catalog, trial_index: u64) -> TrialOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(plan.master_seed, trial_index));
    let mut pattern = random_pattern(
        &mut rng,
        plan.pattern_width,
        plan.pattern_height,
        plan.rule.modulus(),
    );
    pattern.background = Some(plan.background);
    let mut config = AntConfiguration::from_pattern(plan.rule.clone(), &pattern)
        .expect("random pattern states are below the modulus");
    let mut rec = Recorder::full();
    let report = run_with_detection(&mut config, plan.horizon, &plan.detector, &mut rec);
    let label = match &report {
        Some(r) => plan_classify(plan, catalog, r),
        None => "none".to_string(),
    };
    TrialOutcome {
        trial: trial_index,
        label,
        report,
    }
}

fn plan_classify(plan: &ExperimentPlan, catalog: &Catalog, report: &HighwayReport) -> String {
    catalog.classify(&plan.rule, report)
}

/// Runs all trials of the plan in parallel and merges by trial index, so
/// the result does not depend on scheduling.
pub fn run_batch(plan: &ExperimentPlan, catalog: &Catalog) -> Vec<TrialOutcome> {
    (0..plan.trials)
        .into_par_iter()
        .map(|t| run_trial(plan, catalog, t))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabelStats {
    pub count: u64,
    pub proportion: f64,
    pub min_entry: Option<u64>,
    pub mean_entry: Option<f64>,
    pub max_entry: Option<u64>,
}

/// Aggregated per-label counts and entry-step statistics for a batch.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentStats {
    pub trials: u64,
    pub master_seed: u64,
    pub labels: BTreeMap<String, LabelStats>,
}

impl ExperimentStats {
    pub fn from_outcomes(plan: &ExperimentPlan, outcomes: &[TrialOutcome]) -> ExperimentStats {
        let mut acc: BTreeMap<String, (u64, Vec<u64>)> = BTreeMap::new();
        for o in outcomes {
            let slot = acc.entry(o.label.clone()).or_default();
            slot.0 += 1;
            if let Some(r) = &o.report {
                slot.1.push(r.entry_step);
            }
        }
        let total = outcomes.len() as u64;
        let labels = acc
            .into_iter()
            .map(|(label, (count, entries))| {
                let stats = LabelStats {
                    count,
                    proportion: count as f64 / total as f64,
                    min_entry: entries.iter().min().copied(),
                    max_entry: entries.iter().max().copied(),
                    mean_entry: if entries.is_empty() {
                        None
                    } else {
                        Some(entries.iter().sum::<u64>() as f64 / entries.len() as f64)
                    },
                };
                (label, stats)
            })
            .collect();
        ExperimentStats {
            trials: plan.trials,
            master_seed: plan.master_seed,
            labels,
        }
    }
}

/// Writes the per-trial CSV followed by a `#`-commented summary block.
pub fn write_csv<W: io::Write>(
    mut w: W,
    plan: &ExperimentPlan,
    outcomes: &[TrialOutcome],
    stats: &ExperimentStats,
) -> io::Result<()> {
    writeln!(w, "trial,label,entry_step,period,drift_a,drift_b")?;
    for o in outcomes {
        match &o.report {
            Some(r) => writeln!(
                w,
                "{},{},{},{},{},{}",
                o.trial, o.label, r.entry_step, r.period, r.drift.0, r.drift.1
            )?,
            None => writeln!(w, "{},{},,,,", o.trial, o.label)?,
        }
    }
    writeln!(
        w,
        "# rule={} trials={} horizon={} pattern={}x{} background={} master_seed={}",
        plan.rule,
        plan.trials,
        plan.horizon,
        plan.pattern_width,
        plan.pattern_height,
        plan.background,
        plan.master_seed
    )?;
    writeln!(
        w,
        "# detector: n_max={} confirm_periods={} check_interval={}",
        plan.detector.n_max, plan.detector.confirm_periods, plan.detector.check_interval
    )?;
    for (label, s) in &stats.labels {
        let entry = match (s.min_entry, s.mean_entry, s.max_entry) {
            (Some(lo), Some(mean), Some(hi)) => {
                format!(" entry min/mean/max={lo}/{mean:.2}/{hi}")
            }
            _ => String::new(),
        };
        writeln!(
            w,
            "# {label}: count={} proportion={:.6}{entry}",
            s.count, s.proportion
        )?;
    }
    Ok(())
}

/// Anomalous outcomes worth keeping with their full reports: highways the
/// catalog does not know about, and zero-drift cycles.
pub fn anomalies(outcomes: &[TrialOutcome]) -> Vec<&TrialOutcome> {
    outcomes
        .iter()
        .filter(|o| o.label.starts_with("unknown") || o.label == "cycle")
        .collect()
}

/// Validates plan fields that cross module boundaries.
pub fn validate_plan(plan: &ExperimentPlan) -> Result<(), Error> {
    if plan.background >= plan.rule.modulus() {
        return Err(Error::BackgroundOutOfRange {
            state: plan.background,
            m: plan.rule.modulus(),
        });
    }
    if plan.horizon < 1 {
        return Err(Error::Rule("horizon must be >= 1".into()));
    }
    Ok(())
}
