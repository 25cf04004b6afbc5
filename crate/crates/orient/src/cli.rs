//! Command-line front end.
//!
//! Exit codes: 0 success (and, for verification commands, no violations);
//! 1 usage or parse error; 2 budget exceeded; 3 cross-check mismatch or
//! verification failure. JSON output is a `{command, config, result,
//! version}` envelope; the worker-thread count is never part of it, so
//! reports are byte-identical at any parallelism.

use std::fmt;
use std::io::Write;

use serde::Serialize;
use thiserror::Error;

use crate::census::{build_census, CensusBuild};
use crate::mapping::Transformation;
use crate::seq::{OrientationSort, Seq};
use crate::sweep::{SweepError, SweepOptions, DEFAULT_BUDGET};
use crate::triples::{
    check_subsequence_closure, find_rank2_counterexamples, is_determined_by_triples,
    predicted_orientation, verify_triple_determinacy, VerificationReport,
};

pub mod exit_code {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const BUDGET: i32 = 2;
    pub const CROSS_CHECK: i32 = 3;
}

pub const DEFAULT_SAMPLES: usize = 3;

pub const USAGE: &str = "\
orient — orientation classification of sequences and chain transformations

usage: orient <command> [arguments] [flags]

commands:
  classify <seq>                         classify a comma-separated sequence
  classify-map <tuple>                   classify a transformation of [n] given as its image tuple
  enumerate <n>                          orientation census over all n^n transformations of [n]
  verify <max_length> <alphabet>         exhaustively test the triple-determinacy rule
  counterexamples <length> <alphabet>    list rank-2 sequences not determined by their triples
  closure-check <max_length> <alphabet>  exhaustively test subsequence closure of increasing/cyclic

flags:
  --format <plain|json|csv>   output format (default plain)
  --budget <N>                cap on objects an exhaustive run may visit (default 10000000)
  --jobs <N>                  worker threads (default 1; never changes results)
  --samples <N>               example mappings kept per sort by enumerate (default 3)
  -h, --help                  show this help

The ORIENT_BUDGET environment variable overrides the default budget; the
--budget flag wins over the environment.

exit codes:
  0  success, and no violations found
  1  usage or parse error
  2  budget exceeded
  3  cross-check mismatch or verification failure";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0}")]
pub struct UsageError(pub String);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Plain,
    Json,
    Csv,
}

impl std::str::FromStr for OutputFormat {
    type Err = UsageError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plain" => Ok(OutputFormat::Plain),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(UsageError(format!(
                "unknown format `{other}` (expected plain, json, or csv)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Classify {
        seq: Seq,
    },
    ClassifyMap {
        map: Transformation,
    },
    Enumerate {
        n: usize,
    },
    Verify {
        max_length: usize,
        alphabet_size: u64,
    },
    Counterexamples {
        length: usize,
        alphabet_size: u64,
    },
    ClosureCheck {
        max_length: usize,
        alphabet_size: u64,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Classify { .. } => "classify",
            Command::ClassifyMap { .. } => "classify-map",
            Command::Enumerate { .. } => "enumerate",
            Command::Verify { .. } => "verify",
            Command::Counterexamples { .. } => "counterexamples",
            Command::ClosureCheck { .. } => "closure-check",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub format: OutputFormat,
    pub budget: u64,
    pub jobs: usize,
    pub samples: usize,
}

impl RunConfig {
    fn sweep_options(&self) -> SweepOptions {
        SweepOptions {
            budget: self.budget,
            jobs: self.jobs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parsed {
    Run(Box<RunConfig>),
    Help,
}

/// Parse command-line arguments (without the program name). `env_budget` is
/// the raw value of `ORIENT_BUDGET`, if set; an explicit `--budget` flag
/// wins over it.
pub fn parse_args(args: &[String], env_budget: Option<&str>) -> Result<Parsed, UsageError> {
    let mut positionals: Vec<&str> = Vec::new();
    let mut format = OutputFormat::Plain;
    let mut budget: Option<u64> = None;
    let mut jobs: usize = 1;
    let mut samples: usize = DEFAULT_SAMPLES;

    let mut i = 0;
    while i < args.len() {
        let arg = args[i].as_str();
        if arg == "-h" || arg == "--help" || arg == "help" {
            return Ok(Parsed::Help);
        }
        if let Some(flag) = arg.strip_prefix("--") {
            let (name, inline) = match flag.split_once('=') {
                Some((n, v)) => (n, Some(v.to_string())),
                None => (flag, None),
            };
            let value = match inline {
                Some(v) => v,
                None => {
                    i += 1;
                    args.get(i)
                        .ok_or_else(|| UsageError(format!("flag --{name} needs a value")))?
                        .clone()
                }
            };
            match name {
                "format" => format = value.parse()?,
                "budget" => budget = Some(parse_number(&value, "--budget")?),
                "jobs" => {
                    jobs = parse_number(&value, "--jobs")?;
                    if jobs == 0 {
                        return Err(UsageError("--jobs must be at least 1".into()));
                    }
                }
                "samples" => samples = parse_number(&value, "--samples")?,
                other => return Err(UsageError(format!("unknown flag --{other}"))),
            }
        } else {
            positionals.push(arg);
        }
        i += 1;
    }

    let budget = match budget {
        Some(b) => b,
        None => match env_budget {
            Some(raw) => raw
                .trim()
                .parse()
                .map_err(|_| UsageError(format!("ORIENT_BUDGET is not a valid budget: `{raw}`")))?,
            None => DEFAULT_BUDGET,
        },
    };

    let (&name, rest) = positionals
        .split_first()
        .ok_or_else(|| UsageError("missing command".into()))?;

    let command = match name {
        "classify" => Command::Classify {
            seq: parse_positional_seq(rest, name)?,
        },
        "classify-map" => {
            let text = single_positional(rest, name)?;
            let map = text
                .parse::<Transformation>()
                .map_err(|e| UsageError(format!("invalid mapping `{text}`: {e}")))?;
            Command::ClassifyMap { map }
        }
        "enumerate" => {
            let n = parse_number(single_positional(rest, name)?, "n")?;
            Command::Enumerate { n }
        }
        "verify" => {
            let (a, b) = two_positionals(rest, name)?;
            Command::Verify {
                max_length: parse_number(a, "max_length")?,
                alphabet_size: parse_number(b, "alphabet")?,
            }
        }
        "counterexamples" => {
            let (a, b) = two_positionals(rest, name)?;
            Command::Counterexamples {
                length: parse_number(a, "length")?,
                alphabet_size: parse_number(b, "alphabet")?,
            }
        }
        "closure-check" => {
            let (a, b) = two_positionals(rest, name)?;
            Command::ClosureCheck {
                max_length: parse_number(a, "max_length")?,
                alphabet_size: parse_number(b, "alphabet")?,
            }
        }
        other => return Err(UsageError(format!("unknown command `{other}`"))),
    };

    Ok(Parsed::Run(Box::new(RunConfig {
        command,
        format,
        budget,
        jobs,
        samples,
    })))
}

fn parse_positional_seq(rest: &[&str], command: &str) -> Result<Seq, UsageError> {
    let text = single_positional(rest, command)?;
    text.parse::<Seq>()
        .map_err(|e| UsageError(format!("invalid sequence: {e}")))
}

fn single_positional<'a>(rest: &[&'a str], command: &str) -> Result<&'a str, UsageError> {
    match rest {
        [one] => Ok(one),
        _ => Err(UsageError(format!(
            "{command} takes exactly one argument, got {}",
            rest.len()
        ))),
    }
}

fn two_positionals<'a>(rest: &[&'a str], command: &str) -> Result<(&'a str, &'a str), UsageError> {
    match rest {
        [a, b] => Ok((a, b)),
        _ => Err(UsageError(format!(
            "{command} takes exactly two arguments, got {}",
            rest.len()
        ))),
    }
}

fn parse_number<T: std::str::FromStr>(text: &str, what: &str) -> Result<T, UsageError> {
    text.trim()
        .parse()
        .map_err(|_| UsageError(format!("{what} is not a valid number: `{text}`")))
}

/// Everything `classify` reports about one sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub sequence: Seq,
    pub orientation: OrientationSort,
    pub rank: usize,
    pub cyclic_descents: usize,
    pub cyclic_ascents: usize,
    /// Absent for sequences shorter than 3, which have no triples.
    pub determined_by_triples: Option<bool>,
}

pub fn classify_sequence(s: &Seq) -> Classification {
    Classification {
        sequence: s.clone(),
        orientation: s.orientation(),
        rank: s.rank(),
        cyclic_descents: s.cyclic_descent_count(),
        cyclic_ascents: s.cyclic_ascent_count(),
        determined_by_triples: is_determined_by_triples(s).ok(),
    }
}

/// Everything `classify-map` reports about one transformation, over its
/// full domain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapClassification {
    pub mapping: Transformation,
    pub n: usize,
    pub orientation: OrientationSort,
    pub orientation_preserving: bool,
    pub orientation_reversing: bool,
    pub rank: usize,
}

pub fn classify_transformation(f: &Transformation) -> MapClassification {
    let full = f.full_domain();
    let image = f.image_seq(&full).expect("the full domain is always valid");
    MapClassification {
        mapping: f.clone(),
        n: f.n(),
        orientation: image.orientation(),
        orientation_preserving: image.is_cyclic(),
        orientation_reversing: image.is_anticyclic(),
        rank: f.rank(),
    }
}

/// One mined counterexample with its failed prediction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleRecord {
    pub sequence: Seq,
    pub predicted: OrientationSort,
    pub actual: OrientationSort,
}

pub fn mine_counterexamples(
    length: usize,
    alphabet_size: u64,
    options: SweepOptions,
) -> Result<Vec<CounterexampleRecord>, SweepError> {
    let found = find_rank2_counterexamples(length, alphabet_size, options)?;
    Ok(found
        .into_iter()
        .map(|sequence| {
            let predicted =
                predicted_orientation(&sequence).expect("mined sequences have length at least 3");
            let actual = sequence.orientation();
            CounterexampleRecord {
                sequence,
                predicted,
                actual,
            }
        })
        .collect())
}

#[derive(Serialize)]
struct Envelope<'a, C: Serialize, T: Serialize> {
    command: &'a str,
    config: C,
    result: &'a T,
    version: &'a str,
}

fn to_json<C: Serialize, T: Serialize>(command: &str, config: C, result: &T) -> String {
    let envelope = Envelope {
        command,
        config,
        result,
        version: env!("CARGO_PKG_VERSION"),
    };
    serde_json::to_string_pretty(&envelope).expect("serialize report")
}

#[derive(Serialize)]
struct ClassifyConfig<'a> {
    sequence: &'a Seq,
}

#[derive(Serialize)]
struct ClassifyMapConfig<'a> {
    mapping: &'a Transformation,
}

#[derive(Serialize)]
struct EnumerateConfig {
    n: usize,
    budget: u64,
    samples: usize,
}

#[derive(Serialize)]
struct BoundsConfig {
    max_length: usize,
    alphabet_size: u64,
    budget: u64,
}

#[derive(Serialize)]
struct LengthConfig {
    length: usize,
    alphabet_size: u64,
    budget: u64,
}

fn csv_string(build: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    build(&mut writer).expect("write csv");
    String::from_utf8(writer.into_inner().expect("flush csv")).expect("csv is utf-8")
}

fn opt_bool(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "true",
        Some(false) => "false",
        None => "",
    }
}

fn render_classification(record: &Classification, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(
            "classify",
            ClassifyConfig {
                sequence: &record.sequence,
            },
            record,
        ),
        OutputFormat::Csv => csv_string(|w| {
            w.write_record([
                "sequence",
                "orientation",
                "rank",
                "cyclic_descents",
                "cyclic_ascents",
                "determined_by_triples",
            ])?;
            w.write_record([
                record.sequence.to_string(),
                record.orientation.to_string(),
                record.rank.to_string(),
                record.cyclic_descents.to_string(),
                record.cyclic_ascents.to_string(),
                opt_bool(record.determined_by_triples).to_string(),
            ])
        }),
        OutputFormat::Plain => {
            let mut line = format!(
                "orientation={} rank={} cyclic_descents={} cyclic_ascents={}",
                record.orientation, record.rank, record.cyclic_descents, record.cyclic_ascents
            );
            if let Some(d) = record.determined_by_triples {
                line.push_str(&format!(" determined_by_triples={d}"));
            }
            line
        }
    }
}

fn render_map_classification(record: &MapClassification, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(
            "classify-map",
            ClassifyMapConfig {
                mapping: &record.mapping,
            },
            record,
        ),
        OutputFormat::Csv => csv_string(|w| {
            w.write_record([
                "mapping",
                "n",
                "orientation",
                "orientation_preserving",
                "orientation_reversing",
                "rank",
            ])?;
            w.write_record([
                record.mapping.to_string(),
                record.n.to_string(),
                record.orientation.to_string(),
                record.orientation_preserving.to_string(),
                record.orientation_reversing.to_string(),
                record.rank.to_string(),
            ])
        }),
        OutputFormat::Plain => format!(
            "orientation={} orientation_preserving={} orientation_reversing={} rank={}",
            record.orientation,
            record.orientation_preserving,
            record.orientation_reversing,
            record.rank
        ),
    }
}

fn join_samples(samples: &[Transformation]) -> String {
    samples
        .iter()
        .map(Transformation::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

fn render_census(build: &CensusBuild, config: &RunConfig, format: OutputFormat) -> String {
    let census = &build.census;
    match format {
        OutputFormat::Json => to_json(
            "enumerate",
            EnumerateConfig {
                n: census.n,
                budget: config.budget,
                samples: config.samples,
            },
            census,
        ),
        OutputFormat::Csv => csv_string(|w| {
            w.write_record(["sort", "count", "samples"])?;
            for (sort, samples) in [
                (OrientationSort::None, &census.samples.none),
                (OrientationSort::Cyclic, &census.samples.cyclic),
                (OrientationSort::Anticyclic, &census.samples.anticyclic),
                (OrientationSort::Both, &census.samples.both),
            ] {
                w.write_record([
                    sort.to_string(),
                    census.counts.get(sort).to_string(),
                    join_samples(samples),
                ])?;
            }
            Ok(())
        }),
        OutputFormat::Plain => {
            let mut lines = vec![format!(
                "n={} total={} none={} cyclic={} anticyclic={} both={}",
                census.n,
                census.total,
                census.counts.none,
                census.counts.cyclic,
                census.counts.anticyclic,
                census.counts.both
            )];
            for (label, samples) in [
                ("none", &census.samples.none),
                ("cyclic", &census.samples.cyclic),
                ("anticyclic", &census.samples.anticyclic),
                ("both", &census.samples.both),
            ] {
                if !samples.is_empty() {
                    lines.push(format!("samples {label}: {}", join_samples(samples)));
                }
            }
            lines.join("\n")
        }
    }
}

fn render_verify_report(report: &VerificationReport, config: &RunConfig) -> String {
    match config.format {
        OutputFormat::Json => to_json(
            "verify",
            BoundsConfig {
                max_length: report.max_length,
                alphabet_size: report.alphabet_size,
                budget: config.budget,
            },
            report,
        ),
        OutputFormat::Csv => csv_string(|w| {
            w.write_record(["kind", "sequence", "predicted", "actual"])?;
            for (kind, list) in [
                ("violation", &report.violations),
                ("counterexample", &report.counterexamples),
            ] {
                for s in list {
                    let predicted =
                        predicted_orientation(s).expect("swept sequences have length at least 3");
                    w.write_record([
                        kind.to_string(),
                        s.to_string(),
                        predicted.to_string(),
                        s.orientation().to_string(),
                    ])?;
                }
            }
            Ok(())
        }),
        OutputFormat::Plain => {
            let mut lines = vec![format!(
                "checked={} violations={} counterexamples={} none={} cyclic={} anticyclic={} both={}",
                report.checked,
                report.violations.len(),
                report.counterexamples.len(),
                report.census.none,
                report.census.cyclic,
                report.census.anticyclic,
                report.census.both
            )];
            for s in &report.violations {
                lines.push(format!("violation: {s}"));
            }
            lines.join("\n")
        }
    }
}

fn render_closure_report(report: &VerificationReport, config: &RunConfig) -> String {
    match config.format {
        OutputFormat::Json => to_json(
            "closure-check",
            BoundsConfig {
                max_length: report.max_length,
                alphabet_size: report.alphabet_size,
                budget: config.budget,
            },
            report,
        ),
        OutputFormat::Csv => csv_string(|w| {
            w.write_record(["kind", "sequence"])?;
            for s in &report.violations {
                w.write_record(["violation".to_string(), s.to_string()])?;
            }
            Ok(())
        }),
        OutputFormat::Plain => {
            let mut lines = vec![format!(
                "checked={} violations={}",
                report.checked,
                report.violations.len()
            )];
            for s in &report.violations {
                lines.push(format!("violation: {s}"));
            }
            lines.join("\n")
        }
    }
}

fn render_counterexamples(
    records: &[CounterexampleRecord],
    length: usize,
    alphabet_size: u64,
    config: &RunConfig,
) -> String {
    match config.format {
        OutputFormat::Json => to_json(
            "counterexamples",
            LengthConfig {
                length,
                alphabet_size,
                budget: config.budget,
            },
            &records,
        ),
        OutputFormat::Csv => csv_string(|w| {
            w.write_record(["sequence", "predicted", "actual"])?;
            for r in records {
                w.write_record([
                    r.sequence.to_string(),
                    r.predicted.to_string(),
                    r.actual.to_string(),
                ])?;
            }
            Ok(())
        }),
        OutputFormat::Plain => {
            let mut lines = vec![format!("found={}", records.len())];
            for r in records {
                lines.push(format!(
                    "{} predicted={} actual={}",
                    r.sequence, r.predicted, r.actual
                ));
            }
            lines.join("\n")
        }
    }
}

fn sweep_failure(e: &SweepError, err: &mut dyn Write) -> i32 {
    let _ = writeln!(err, "error: {e}");
    match e {
        SweepError::InvalidBounds(_) => exit_code::USAGE,
        SweepError::BudgetExceeded { .. } => exit_code::BUDGET,
    }
}

/// Execute a parsed configuration, writing the report to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match &config.command {
        Command::Classify { seq } => {
            let record = classify_sequence(seq);
            let _ = writeln!(out, "{}", render_classification(&record, config.format));
            exit_code::OK
        }
        Command::ClassifyMap { map } => {
            let record = classify_transformation(map);
            let _ = writeln!(out, "{}", render_map_classification(&record, config.format));
            exit_code::OK
        }
        Command::Enumerate { n } => {
            match build_census(*n, config.samples, config.sweep_options()) {
                Ok(build) => {
                    if !build.cross_check() {
                        let _ = writeln!(
                            err,
                            "error: census cross-check mismatch: recursive {:?} vs rotation {:?}",
                            build.census.counts, build.rotation_counts
                        );
                        return exit_code::CROSS_CHECK;
                    }
                    let _ = writeln!(out, "{}", render_census(&build, config, config.format));
                    exit_code::OK
                }
                Err(e) => sweep_failure(&e, err),
            }
        }
        Command::Verify {
            max_length,
            alphabet_size,
        } => match verify_triple_determinacy(*max_length, *alphabet_size, config.sweep_options()) {
            Ok(report) => {
                let _ = writeln!(out, "{}", render_verify_report(&report, config));
                if report.violations.is_empty() {
                    exit_code::OK
                } else {
                    let _ = writeln!(
                        err,
                        "error: {} sequence(s) of rank other than 2 are not determined by their triples",
                        report.violations.len()
                    );
                    exit_code::CROSS_CHECK
                }
            }
            Err(e) => sweep_failure(&e, err),
        },
        Command::Counterexamples {
            length,
            alphabet_size,
        } => match mine_counterexamples(*length, *alphabet_size, config.sweep_options()) {
            Ok(records) => {
                let _ = writeln!(
                    out,
                    "{}",
                    render_counterexamples(&records, *length, *alphabet_size, config)
                );
                exit_code::OK
            }
            Err(e) => sweep_failure(&e, err),
        },
        Command::ClosureCheck {
            max_length,
            alphabet_size,
        } => match check_subsequence_closure(*max_length, *alphabet_size, config.sweep_options()) {
            Ok(report) => {
                let _ = writeln!(out, "{}", render_closure_report(&report, config));
                if report.violations.is_empty() {
                    exit_code::OK
                } else {
                    let _ = writeln!(
                        err,
                        "error: {} sequence(s) violate subsequence closure",
                        report.violations.len()
                    );
                    exit_code::CROSS_CHECK
                }
            }
            Err(e) => sweep_failure(&e, err),
        },
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Plain => "plain",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        })
    }
}
