//! `glant` — simulate generalised Langton's ants, detect and classify
//! highways, run randomized-seed experiments, and render configurations.
//!
//! Exit codes: 0 success (including "no highway found"), 1 I/O failure,
//! 2 invalid input.

mod record;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use glant_core::analysis::{detect_highway, run_with_detection, word_to_string};
use glant_core::experiment::{self, ExperimentPlan, ExperimentStats};
use glant_core::render::{render_bitmap, Palette, Viewport};
use glant_core::{
    AntConfiguration, Catalog, DetectorParams, PatternGrid, Point, Recorder, RuleWord,
};

use record::RunRecord;

const EXIT_IO: u8 = 1;
const EXIT_INVALID: u8 = 2;

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn invalid(message: impl Into<String>) -> CliError {
        CliError {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }

    fn io(context: &str, err: std::io::Error) -> CliError {
        CliError {
            code: EXIT_IO,
            message: format!("{context}: {err}"),
        }
    }
}

#[derive(Parser)]
#[command(name = "glant", version, about = "Generalised Langton's ant toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an ant and write the final configuration with its trace and
    /// trajectory as a JSON run record.
    Simulate(SimulateArgs),
    /// Detect highway behaviour in a run record or a fresh run.
    Detect(DetectArgs),
    /// Run a batch of randomized-seed trials and write per-trial CSV.
    Experiment(ExperimentArgs),
    /// Render a configuration as a binary PPM bitmap.
    Render(RenderArgs),
    /// Print or verify the highway catalog.
    Catalog(CatalogArgs),
}

/// Flags describing a fresh simulation source.
#[derive(Args, Clone)]
struct SourceArgs {
    /// Rule word over {L,R}, e.g. LLLR.
    #[arg(long)]
    rule: Option<String>,
    /// Number of steps to run.
    #[arg(long)]
    steps: Option<u64>,
    /// Seed pattern file.
    #[arg(long, conflicts_with = "uniform")]
    pattern: Option<PathBuf>,
    /// Start from the uniform background configuration.
    #[arg(long)]
    uniform: bool,
    /// Background state (overrides the pattern's `background:` line).
    #[arg(long)]
    background: Option<u8>,
}

impl SourceArgs {
    fn rule(&self) -> Result<RuleWord, CliError> {
        let word = self
            .rule
            .as_deref()
            .ok_or_else(|| CliError::invalid("--rule is required"))?;
        RuleWord::parse(word).map_err(|e| CliError::invalid(e.to_string()))
    }

    fn configuration(&self) -> Result<AntConfiguration, CliError> {
        let rule = self.rule()?;
        let mut pattern = match &self.pattern {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|e| {
                    CliError::invalid(format!("cannot read pattern {}: {e}", path.display()))
                })?;
                PatternGrid::parse(&text).map_err(|e| CliError::invalid(e.to_string()))?
            }
            None => PatternGrid::empty(),
        };
        if let Some(b) = self.background {
            pattern.background = Some(b);
        }
        AntConfiguration::from_pattern(rule, &pattern)
            .map_err(|e| CliError::invalid(e.to_string()))
    }

    fn describe(&self) -> String {
        format!(
            "rule={} steps={} source={} background={}",
            self.rule.as_deref().unwrap_or("?"),
            self.steps.map_or("?".into(), |s| s.to_string()),
            self.pattern
                .as_ref()
                .map_or("uniform".into(), |p| p.display().to_string()),
            self.background.unwrap_or(0),
        )
    }
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Output path for the JSON run record (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DetectorArgs {
    /// Largest candidate period.
    #[arg(long = "n-max", default_value_t = DetectorParams::default().n_max)]
    n_max: usize,
    /// Confirmation periods K.
    #[arg(long = "confirm", default_value_t = DetectorParams::default().confirm_periods)]
    confirm: usize,
    /// Steps between online detection attempts.
    #[arg(long = "check-interval", default_value_t = DetectorParams::default().check_interval)]
    check_interval: u64,
    /// Minimum span the periodicity conditions must hold over.
    #[arg(long = "min-confirm-steps", default_value_t = DetectorParams::default().min_confirm_steps)]
    min_confirm_steps: usize,
}

impl DetectorArgs {
    fn params(&self) -> Result<DetectorParams, CliError> {
        if self.n_max < 1 || self.confirm < 2 {
            return Err(CliError::invalid("need --n-max >= 1 and --confirm >= 2"));
        }
        Ok(DetectorParams {
            n_max: self.n_max,
            confirm_periods: self.confirm,
            check_interval: self.check_interval,
            min_confirm_steps: self.min_confirm_steps,
        })
    }
}

#[derive(Args)]
struct DetectArgs {
    /// Run record produced by `simulate` (otherwise pass simulate flags).
    #[arg(long = "in", conflicts_with_all = ["rule", "steps", "pattern", "uniform", "background"])]
    input: Option<PathBuf>,
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    detector: DetectorArgs,
    /// Catalog file overriding the builtin catalog.
    #[arg(long)]
    catalog: Option<PathBuf>,
}

#[derive(Args)]
struct ExperimentArgs {
    /// Rule word over {L,R}.
    #[arg(long)]
    rule: String,
    /// Number of trials.
    #[arg(long)]
    trials: u64,
    /// Step horizon per trial.
    #[arg(long, default_value_t = 100_000)]
    horizon: u64,
    /// Side of the square random seed pattern.
    #[arg(long = "pattern-size", default_value_t = 11)]
    pattern_size: usize,
    /// Master seed for the per-trial random streams.
    #[arg(long = "master-seed", default_value_t = 0)]
    master_seed: u64,
    /// Background state.
    #[arg(long, default_value_t = 0)]
    background: u8,
    #[command(flatten)]
    detector: DetectorArgs,
    /// Catalog file overriding the builtin catalog.
    #[arg(long)]
    catalog: Option<PathBuf>,
    /// Output CSV path (stdout when omitted). Anomalous trials with
    /// uncataloged highways additionally go to `<out>.anomalies.jsonl`.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    /// Run record produced by `simulate` (otherwise pass simulate flags).
    #[arg(long = "in", conflicts_with_all = ["rule", "steps", "pattern", "uniform", "background"])]
    input: Option<PathBuf>,
    #[command(flatten)]
    source: SourceArgs,
    /// Pixels per cell.
    #[arg(long, default_value_t = 4)]
    scale: usize,
    /// `auto`, or four integers `i0 j0 i1 j1` (inclusive cell box).
    #[arg(long, num_args = 1..=4, default_values = ["auto"])]
    viewport: Vec<String>,
    /// Outline the origin cell.
    #[arg(long = "origin-outline")]
    origin_outline: bool,
    /// Output PPM path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct CatalogArgs {
    /// Print the catalog entries.
    #[arg(long, conflicts_with = "verify")]
    list: bool,
    /// Re-check stored words: lengths, primitivity, canonical rotation.
    #[arg(long)]
    verify: bool,
    /// Catalog file overriding the builtin catalog.
    #[arg(long)]
    file: Option<PathBuf>,
}

fn load_catalog(path: &Option<PathBuf>) -> Result<Catalog, CliError> {
    match path {
        None => Ok(Catalog::builtin()),
        Some(p) => {
            let text = fs::read_to_string(p)
                .map_err(|e| CliError::invalid(format!("cannot read catalog {}: {e}", p.display())))?;
            Catalog::parse(&text).map_err(|e| CliError::invalid(e.to_string()))
        }
    }
}

fn write_output(path: &Option<PathBuf>, bytes: &[u8]) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, bytes).map_err(|e| CliError::io(&p.display().to_string(), e)),
        None => std::io::stdout()
            .write_all(bytes)
            .map_err(|e| CliError::io("stdout", e)),
    }
}

fn cmd_simulate(args: &SimulateArgs) -> Result<(), CliError> {
    let steps = args
        .source
        .steps
        .ok_or_else(|| CliError::invalid("--steps is required"))?;
    let mut config = args.source.configuration()?;
    eprintln!("# simulate {}", args.source.describe());
    let mut rec = Recorder::full();
    config.run(steps, &mut rec);
    let record = RunRecord::new(&config, &rec, steps);
    let mut json = serde_json::to_vec_pretty(&record).expect("record serializes");
    json.push(b'\n');
    write_output(&args.out, &json)
}

/// Report record emitted by `detect`: the certified highway plus its
/// catalog classification, or an explicit "none".
#[derive(Serialize)]
struct DetectOutput {
    entry_step: u64,
    period: usize,
    drift: (i64, i64),
    word: String,
    speed: f64,
    classification: String,
}

fn cmd_detect(args: &DetectArgs) -> Result<(), CliError> {
    let params = args.detector.params()?;
    let catalog = load_catalog(&args.catalog)?;

    let (rule, report) = match &args.input {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::io(&path.display().to_string(), e))?;
            let record: RunRecord = serde_json::from_str(&text)
                .map_err(|e| CliError::invalid(format!("bad run record: {e}")))?;
            eprintln!(
                "# detect in={} n_max={} confirm={} min_confirm_steps={}",
                path.display(),
                params.n_max,
                params.confirm_periods,
                params.min_confirm_steps
            );
            let rec = record.recorder();
            (record.rule, detect_highway(&rec, &params))
        }
        None => {
            let steps = args
                .source
                .steps
                .ok_or_else(|| CliError::invalid("need --in or simulate flags (--rule, --steps)"))?;
            let mut config = args.source.configuration()?;
            eprintln!(
                "# detect {} n_max={} confirm={} min_confirm_steps={}",
                args.source.describe(),
                params.n_max,
                params.confirm_periods,
                params.min_confirm_steps
            );
            let mut rec = Recorder::full();
            let report = run_with_detection(&mut config, steps, &params, &mut rec);
            (config.rule.clone(), report)
        }
    };

    match report {
        Some(r) => {
            let out = DetectOutput {
                entry_step: r.entry_step,
                period: r.period,
                drift: r.drift,
                word: word_to_string(&r.word),
                speed: r.speed,
                classification: catalog.classify(&rule, &r),
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("serializes"));
        }
        None => println!("none"),
    }
    Ok(())
}

fn cmd_experiment(args: &ExperimentArgs) -> Result<(), CliError> {
    let rule = RuleWord::parse(&args.rule).map_err(|e| CliError::invalid(e.to_string()))?;
    let catalog = load_catalog(&args.catalog)?;
    let mut plan = ExperimentPlan::new(rule);
    plan.trials = args.trials;
    plan.horizon = args.horizon;
    plan.pattern_width = args.pattern_size;
    plan.pattern_height = args.pattern_size;
    plan.master_seed = args.master_seed;
    plan.background = args.background;
    plan.detector = args.detector.params()?;
    experiment::validate_plan(&plan).map_err(|e| CliError::invalid(e.to_string()))?;
    eprintln!(
        "# experiment {}",
        serde_json::to_string(&plan).expect("plan serializes")
    );

    let outcomes = experiment::run_batch(&plan, &catalog);
    let stats = ExperimentStats::from_outcomes(&plan, &outcomes);
    let mut csv = Vec::new();
    experiment::write_csv(&mut csv, &plan, &outcomes, &stats)
        .expect("writing to memory cannot fail");
    write_output(&args.out, &csv)?;
    let stats_json = serde_json::to_string_pretty(&stats).expect("stats serialize");
    if args.out.is_some() {
        println!("{stats_json}");
    } else {
        eprintln!("{stats_json}");
    }

    let anomalies = experiment::anomalies(&outcomes);
    if !anomalies.is_empty() {
        if let Some(out) = &args.out {
            let path = overflow_path(out);
            let mut lines = String::new();
            for o in &anomalies {
                lines.push_str(&serde_json::to_string(o).expect("outcome serializes"));
                lines.push('\n');
            }
            fs::write(&path, lines)
                .map_err(|e| CliError::io(&path.display().to_string(), e))?;
            eprintln!("# {} anomalous trials written to {}", anomalies.len(), path.display());
        } else {
            eprintln!("# {} anomalous trials (uncataloged highways)", anomalies.len());
        }
    }
    Ok(())
}

fn overflow_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_os_string();
    name.push(".anomalies.jsonl");
    PathBuf::from(name)
}

fn cmd_render(args: &RenderArgs) -> Result<(), CliError> {
    if args.scale < 1 {
        return Err(CliError::invalid("--scale must be >= 1"));
    }
    let viewport = parse_viewport(&args.viewport)?;
    let config = match &args.input {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::io(&path.display().to_string(), e))?;
            let record: RunRecord = serde_json::from_str(&text)
                .map_err(|e| CliError::invalid(format!("bad run record: {e}")))?;
            record
                .configuration()
                .map_err(|e| CliError::invalid(e.to_string()))?
        }
        None => {
            let mut config = args.source.configuration()?;
            let steps = args.source.steps.unwrap_or(0);
            let mut rec = Recorder::windowed(1.max(steps as usize));
            config.run(steps, &mut rec);
            config
        }
    };
    eprintln!(
        "# render scale={} viewport={} out={}",
        args.scale,
        args.viewport.join(" "),
        args.out.display()
    );
    let mut palette = Palette::grayscale(config.rule.modulus());
    palette.outline_origin = args.origin_outline;
    let bytes = render_bitmap(&config, viewport, args.scale, &palette);
    fs::write(&args.out, bytes).map_err(|e| CliError::io(&args.out.display().to_string(), e))
}

fn parse_viewport(parts: &[String]) -> Result<Viewport, CliError> {
    if parts.len() == 1 && parts[0] == "auto" {
        return Ok(Viewport::Auto);
    }
    if parts.len() == 4 {
        let v: Vec<i64> = parts
            .iter()
            .map(|p| p.parse())
            .collect::<Result<_, _>>()
            .map_err(|_| CliError::invalid(format!("bad viewport {parts:?}")))?;
        if v[0] > v[2] || v[1] > v[3] {
            return Err(CliError::invalid("viewport min must not exceed max"));
        }
        return Ok(Viewport::Box {
            min: Point::new(v[0], v[1]),
            max: Point::new(v[2], v[3]),
        });
    }
    Err(CliError::invalid(
        "--viewport takes `auto` or `i0 j0 i1 j1`",
    ))
}

fn cmd_catalog(args: &CatalogArgs) -> Result<(), CliError> {
    if !args.list && !args.verify {
        return Err(CliError::invalid("pass --list or --verify"));
    }
    let catalog = load_catalog(&args.file)?;
    if args.list {
        print!("{}", catalog.serialize());
    }
    if args.verify {
        catalog.verify().map_err(|e| CliError::invalid(e.to_string()))?;
        for e in catalog.entries() {
            match &e.word_class {
                Some(w) => println!(
                    "{}: period {} word ok (length {}, primitive, canonical)",
                    e.name,
                    e.period,
                    w.len()
                ),
                None => println!("{}: period {} (period-only entry)", e.name, e.period),
            }
        }
        println!("catalog ok: {} entries", catalog.entries().len());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Simulate(a) => cmd_simulate(a),
        Command::Detect(a) => cmd_detect(a),
        Command::Experiment(a) => cmd_experiment(a),
        Command::Render(a) => cmd_render(a),
        Command::Catalog(a) => cmd_catalog(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
