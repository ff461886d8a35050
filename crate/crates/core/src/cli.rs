//! Command-line front end. Output is JSON lines on stdout, diagnostics on
//! stderr. Exit codes: 0 success, 2 validation failure, 1 usage error.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::construct::{
    build_stabilizer, class_partition_check, cyclicity_check, generators, search_specs, SearchMode, SetKind,
    StabilizerSpec, EXHAUSTIVE_LIMIT,
};
use crate::entangle::{entanglement_vector, EntanglementVector};
use crate::equiv::{compare_specs, EquivError};
use crate::oracle::{basis_to_json, verify_mub, MubSet, MAX_NUMERIC_QUBITS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "mubforge", version, about = "Cyclic mutually unbiased bases for qubits from GF(2) matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Search for valid specs and print them as JSON lines.
    Search(SearchArgs),
    /// Build the set for a spec file and print a run report.
    Build(BuildArgs),
    /// Print the entanglement vector of each spec file.
    Classify(ClassifyArgs),
    /// Check whether two specs generate equivalent sets.
    Equiv(EquivArgs),
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long, default_value = "field")]
    pub kind: SetKind,
    /// Number of specs to emit [default: all when exhaustive, 1 when seeded]
    #[arg(long)]
    pub count: Option<usize>,
    #[arg(long, conflicts_with = "seed")]
    pub exhaustive: bool,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    pub spec: PathBuf,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// Largest m verified numerically.
    #[arg(long, default_value_t = 5)]
    pub numeric_cap: usize,
    /// Write the report and the numeric bases to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(required = true)]
    pub specs: Vec<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EquivArgs {
    pub spec_a: PathBuf,
    pub spec_b: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NumericStatus {
    Passed,
    Failed,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub spec: StabilizerSpec,
    pub cyclic_ok: bool,
    pub bandyopadhyay_ok: bool,
    pub entanglement: EntanglementVector,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mub_max_deviation: Option<f64>,
    pub numeric: NumericStatus,
    /// Milliseconds per stage.
    pub timings: BTreeMap<&'static str, f64>,
}

impl RunReport {
    pub fn ok(&self) -> bool {
        self.cyclic_ok && self.bandyopadhyay_ok && self.numeric != NumericStatus::Failed
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }

    fn invalid(message: impl Into<String>) -> Self {
        Self { code: EXIT_INVALID, message: message.into() }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    let result = match &cli.command {
        Command::Search(a) => cmd_search(a, stdout, stderr),
        Command::Build(a) => cmd_build(a, stdout, stderr),
        Command::Classify(a) => cmd_classify(a, stdout, stderr),
        Command::Equiv(a) => cmd_equiv(a, stdout, stderr),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn emit(out: &Option<PathBuf>, stdout: &mut dyn Write, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(|e| Failure::usage(format!("cannot write output: {e}"))),
    }
}

fn read_spec(path: &Path) -> Result<StabilizerSpec, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    StabilizerSpec::from_json(&text).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
}

fn cmd_search(args: &SearchArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    let mode = match (args.exhaustive, args.seed) {
        (_, Some(seed)) => SearchMode::Random { seed },
        (true, None) => SearchMode::Exhaustive,
        (false, None) if args.m <= EXHAUSTIVE_LIMIT => SearchMode::Exhaustive,
        (false, None) => {
            return Err(Failure::usage(format!("--seed is required for m > {EXHAUSTIVE_LIMIT}")));
        }
    };
    let count = args.count.unwrap_or(match mode {
        SearchMode::Exhaustive => usize::MAX,
        SearchMode::Random { .. } => 1,
    });
    let outcome = search_specs(args.kind, args.m, mode, count).map_err(|e| Failure::usage(e.to_string()))?;
    if let Some(w) = &outcome.warning {
        let _ = writeln!(stderr, "warning: {w}");
    }
    let text: String = outcome.specs.iter().map(|s| s.to_json() + "\n").collect();
    emit(&args.out, stdout, &text)?;
    Ok(EXIT_OK)
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Full pipeline for one spec. Numeric bases are returned when verified.
pub fn build_report(spec: &StabilizerSpec, tol: f64, numeric_cap: usize) -> Result<(RunReport, Option<MubSet>), String> {
    let mut timings = BTreeMap::new();
    let t = Instant::now();
    let c = build_stabilizer(spec);
    let cyclic_ok = cyclicity_check(&c, spec.d());
    timings.insert("stabilizer", elapsed_ms(t));

    let t = Instant::now();
    let gens = generators(spec).map_err(|e| e.to_string())?;
    timings.insert("generators", elapsed_ms(t));

    let t = Instant::now();
    let bandyopadhyay_ok = gens.standard_forms_valid() && class_partition_check(&gens, Some(&c)).ok();
    timings.insert("classes", elapsed_ms(t));

    let t = Instant::now();
    let entanglement = entanglement_vector(&gens).map_err(|e| e.to_string())?;
    timings.insert("entanglement", elapsed_ms(t));

    let (mub_max_deviation, numeric, set) = if spec.m() <= numeric_cap.min(MAX_NUMERIC_QUBITS) {
        let t = Instant::now();
        let set = MubSet::from_generators(&gens).map_err(|e| e.to_string())?;
        let check = verify_mub(&set, tol);
        timings.insert("numeric", elapsed_ms(t));
        let status = if check.pass { NumericStatus::Passed } else { NumericStatus::Failed };
        (Some(check.max_deviation), status, Some(set))
    } else {
        (None, NumericStatus::Skipped, None)
    };
    let report =
        RunReport { spec: spec.clone(), cyclic_ok, bandyopadhyay_ok, entanglement, mub_max_deviation, numeric, timings };
    Ok((report, set))
}

fn cmd_build(args: &BuildArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    let spec = read_spec(&args.spec)?;
    let (report, set) = build_report(&spec, args.tol, args.numeric_cap).map_err(Failure::invalid)?;
    if report.numeric == NumericStatus::Skipped {
        let _ = writeln!(stderr, "warning: numeric verification skipped for m = {} (cap {})", spec.m(), args.numeric_cap);
    }
    let line = serde_json::to_string(&report).expect("report serializes") + "\n";
    stdout.write_all(line.as_bytes()).map_err(|e| Failure::usage(e.to_string()))?;
    if let Some(path) = &args.out {
        let bases: Vec<_> = set.iter().flat_map(|s| s.bases.iter().map(basis_to_json)).collect();
        let doc = json!({ "report": report, "bases": bases });
        emit(&Some(path.clone()), stdout, &(serde_json::to_string(&doc).expect("json") + "\n"))?;
    }
    if report.ok() {
        return Ok(EXIT_OK);
    }
    let mut failed = Vec::new();
    if !report.cyclic_ok {
        failed.push("cyclicity");
    }
    if !report.bandyopadhyay_ok {
        failed.push("class partition");
    }
    if report.numeric == NumericStatus::Failed {
        failed.push("unbiasedness");
    }
    let _ = writeln!(stderr, "error: failed checks: {}", failed.join(", "));
    Ok(EXIT_INVALID)
}

fn counts_row(v: &EntanglementVector) -> String {
    let parts: Vec<String> = v.counts.iter().map(u64::to_string).collect();
    format!("({})", parts.join(","))
}

fn cmd_classify(args: &ClassifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    let mut text = String::new();
    let mut code = EXIT_OK;
    for path in &args.specs {
        let row = read_spec(path).and_then(|spec| {
            let gens = generators(&spec).map_err(|e| Failure::invalid(e.to_string()))?;
            let v = entanglement_vector(&gens).map_err(|e| Failure::invalid(e.to_string()))?;
            Ok(json!({
                "file": path.display().to_string(),
                "kind": spec.kind(),
                "m": spec.m(),
                "row": counts_row(&v),
                "entanglement": v,
            }))
        });
        match row {
            Ok(v) => text += &(v.to_string() + "\n"),
            Err(f) => {
                let _ = writeln!(stderr, "error: {}", f.message);
                code = code.max(f.code);
            }
        }
    }
    emit(&args.out, stdout, &text)?;
    Ok(code)
}

fn cmd_equiv(args: &EquivArgs, stdout: &mut dyn Write, _stderr: &mut dyn Write) -> Result<i32, Failure> {
    let a = read_spec(&args.spec_a)?;
    let b = read_spec(&args.spec_b)?;
    let (doc, code) = match compare_specs(&a, &b) {
        Ok(v) => {
            let code = if v.equivalent { EXIT_OK } else { EXIT_INVALID };
            (serde_json::to_value(&v).expect("json"), code)
        }
        Err(EquivError::NotExpressible) => (
            json!({ "equivalent": false, "not_expressible": true, "reason": EquivError::NotExpressible.to_string() }),
            EXIT_INVALID,
        ),
        Err(e) => return Err(Failure::invalid(e.to_string())),
    };
    emit(&args.out, stdout, &(doc.to_string() + "\n"))?;
    Ok(code)
}
