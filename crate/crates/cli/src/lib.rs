//! Command implementations behind the `operadlab` binary.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use operadlab_core::cubes::analyze_counterexample;
use operadlab_core::kgraph::{base_graph, enumerate, to_dot, CompleteGraphElement, Variant};
use operadlab_core::topology::fixtures::recorded_conf_betti;
use operadlab_core::verify::{acyclicity_sweep, poset_homology, run_all, run_check, CheckReport, VerifyConfig};
use operadlab_core::{Budget, Error};
use serde::{Deserialize, Serialize};
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Environment variable holding an advisory memory cap in megabytes.
pub const BUDGET_MB_VAR: &str = "OPERADLAB_BUDGET_MB";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_budget() => EXIT_BUDGET,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "operadlab", version, about = "Complete graphs operads, little cubes cells and their homology")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the elements of an operad in one arity.
    Enumerate(Options),
    /// Run verification suites.
    Verify(Options),
    /// Homology of the order complex of an operad in one arity.
    Homology(Options),
    /// Reproduce the three-cube configuration that defeats Berger cells.
    Counterexample(Options),
    /// Nerve acyclicity of the covers of cell unions.
    Acyclicity(Options),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Options {
    /// One of K, KB, Khat.
    #[arg(long)]
    pub variant: Option<String>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub k: Option<usize>,
    /// A single verification suite (see `verify --list`).
    #[arg(long)]
    pub check: Option<String>,
    /// List the verification suites and exit.
    #[arg(long)]
    pub list: bool,
    #[arg(long)]
    pub trials: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub budget_elements: Option<usize>,
    #[arg(long)]
    pub budget_simplices: Option<usize>,
    #[arg(long)]
    pub budget_constraints: Option<usize>,
    /// Restrict `acyclicity` to one base graph: `blank` or a graph in JSON.
    #[arg(long)]
    pub lambda: Option<String>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// JSON file with any of the fields above; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

/// Settings after merging the config file, flags and defaults.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub variant: String,
    pub n: u32,
    pub k: usize,
    pub check: Option<String>,
    pub trials: u64,
    pub seed: u64,
    pub budget: Budget,
    pub lambda: Option<String>,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            variant: "K".into(),
            n: 2,
            k: 3,
            check: None,
            trials: 1000,
            seed: 0,
            budget: Budget::default(),
            lambda: None,
            format: Format::Json,
            out: None,
        }
    }
}

/// Partial config as read from a file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    variant: Option<String>,
    n: Option<u32>,
    k: Option<usize>,
    check: Option<String>,
    trials: Option<u64>,
    seed: Option<u64>,
    budget_elements: Option<usize>,
    budget_simplices: Option<usize>,
    budget_constraints: Option<usize>,
    lambda: Option<String>,
    format: Option<Format>,
    out: Option<PathBuf>,
}

/// Rough bytes held per stored simplex or constraint, for the memory cap.
const BYTES_PER_ITEM: usize = 256;

/// Requested budgets may only tighten the defaults; larger requests are
/// clamped with a warning. The memory cap from the environment tightens them
/// further.
fn settle_budget(
    elements: Option<usize>,
    simplices: Option<usize>,
    constraints: Option<usize>,
    memory_mb: Option<&str>,
    warnings: &mut Vec<String>,
) -> Result<Budget, CliError> {
    let d = Budget::default();
    let mut clamp = |name: &str, asked: Option<usize>, default: usize| -> Result<usize, CliError> {
        match asked {
            None => Ok(default),
            Some(0) => Err(CliError::Usage(format!("--budget-{name} must be positive"))),
            Some(v) if v > default => {
                warnings.push(format!("--budget-{name} {v} exceeds the default {default}; using {default}"));
                Ok(default)
            }
            Some(v) => Ok(v),
        }
    };
    let mut b = Budget {
        max_elements: clamp("elements", elements, d.max_elements)?,
        max_simplices: clamp("simplices", simplices, d.max_simplices)?,
        max_constraints: clamp("constraints", constraints, d.max_constraints)?,
    };
    if let Some(raw) = memory_mb {
        let mb: usize = raw
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{BUDGET_MB_VAR}={raw:?} is not a whole number of megabytes")))?;
        let cap = (mb * 1024 * 1024 / BYTES_PER_ITEM).max(1);
        for (name, v) in [("elements", &mut b.max_elements), ("simplices", &mut b.max_simplices)] {
            if *v > cap {
                warnings.push(format!("{BUDGET_MB_VAR}={mb} lowers the {name} budget to {cap}"));
                *v = cap;
            }
        }
    }
    Ok(b)
}

impl RunConfig {
    /// Merges defaults, the optional config file and the flags, in that order
    /// of increasing precedence.
    pub fn resolve(opts: &Options, memory_mb: Option<&str>, warnings: &mut Vec<String>) -> Result<RunConfig, CliError> {
        let file = match &opts.config {
            None => FileConfig::default(),
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
                serde_json::from_str(&text)
                    .map_err(|e| CliError::Usage(format!("bad config {}: {e}", path.display())))?
            }
        };
        let d = RunConfig::default();
        let cfg = RunConfig {
            variant: opts.variant.clone().or(file.variant).unwrap_or(d.variant),
            n: opts.n.or(file.n).unwrap_or(d.n),
            k: opts.k.or(file.k).unwrap_or(d.k),
            check: opts.check.clone().or(file.check),
            trials: opts.trials.or(file.trials).unwrap_or(d.trials),
            seed: opts.seed.or(file.seed).unwrap_or(d.seed),
            budget: settle_budget(
                opts.budget_elements.or(file.budget_elements),
                opts.budget_simplices.or(file.budget_simplices),
                opts.budget_constraints.or(file.budget_constraints),
                memory_mb,
                warnings,
            )?,
            lambda: opts.lambda.clone().or(file.lambda),
            format: opts.format.or(file.format).unwrap_or(d.format),
            out: opts.out.clone().or(file.out),
        };
        if cfg.n == 0 || cfg.k == 0 {
            return Err(CliError::Usage("--n and --k must be positive".into()));
        }
        Variant::parse(&cfg.variant).map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(cfg)
    }

    fn variant(&self) -> Variant {
        Variant::parse(&self.variant).expect("validated in resolve")
    }

    fn verify_config(&self) -> VerifyConfig {
        VerifyConfig { n: self.n, k: self.k, trials: self.trials, seed: self.seed, budget: self.budget }
    }
}

/// Rendered output and exit status of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

fn to_json(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn no_dot(cmd: &str, cfg: &RunConfig) -> Result<(), CliError> {
    if cfg.format == Format::Dot {
        return Err(CliError::Usage(format!("--format dot is only available for `enumerate`, not `{cmd}`")));
    }
    Ok(())
}

pub fn cmd_enumerate(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let variant = cfg.variant();
    let elements = enumerate(variant, cfg.n, cfg.k, &cfg.budget)?;
    let output = match cfg.format {
        Format::Json => to_json(&json!({
            "variant": variant.name(),
            "n": cfg.n,
            "k": cfg.k,
            "count": elements.len(),
            "elements": elements,
        })),
        Format::Text => {
            let mut s: String = elements.iter().map(|g| format!("{g}\n")).collect();
            s.push_str(&format!("count: {}\n", elements.len()));
            s
        }
        Format::Dot => elements.iter().enumerate().map(|(i, g)| to_dot(g, &format!("g{}", i + 1))).collect(),
    };
    Ok(Outcome { output, exit_code: EXIT_OK })
}

fn render_reports(cfg: &RunConfig, reports: &[CheckReport]) -> String {
    let passed = reports.iter().all(CheckReport::ok);
    match cfg.format {
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                let status = if r.ok() { "pass" } else { "FAIL" };
                s.push_str(&format!("{status} {}: {}/{}\n", r.name, r.passed, r.total));
                for d in &r.details {
                    s.push_str(&format!("    {d}\n"));
                }
                for f in &r.failures {
                    s.push_str(&format!("    failure: {f}\n"));
                }
            }
            s
        }
        _ => to_json(&json!({
            "config": {"n": cfg.n, "k": cfg.k, "trials": cfg.trials, "seed": cfg.seed, "budget": cfg.budget},
            "passed": passed,
            "checks": reports,
        })),
    }
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<Outcome, CliError> {
    no_dot("verify", cfg)?;
    let vc = cfg.verify_config();
    let reports = match &cfg.check {
        Some(name) => vec![run_check(name, &vc).map_err(|e| match e {
            Error::Parse(msg) => CliError::Usage(msg),
            other => CliError::Core(other),
        })?],
        None => run_all(&vc)?,
    };
    let exit_code = if reports.iter().all(CheckReport::ok) { EXIT_OK } else { EXIT_VERIFICATION };
    Ok(Outcome { output: render_reports(cfg, &reports), exit_code })
}

pub fn cmd_homology(cfg: &RunConfig) -> Result<Outcome, CliError> {
    no_dot("homology", cfg)?;
    let variant = cfg.variant();
    let (poset, complex, h) = poset_homology(variant, cfg.n, cfg.k, &cfg.budget)?;
    let betti: Vec<u64> = h.betti_trimmed().iter().map(|&b| b as u64).collect();
    let expected = if variant == Variant::K { recorded_conf_betti(cfg.n as usize, cfg.k) } else { None };
    let matches = expected.as_ref().map(|e| *e == betti && h.torsion_free());
    let output = match cfg.format {
        Format::Text => {
            let mut s = format!("{}_{}({}): {} elements\n", variant.name(), cfg.n, cfg.k, poset.len());
            s.push_str(&format!("f-vector: {:?}\nBetti: {betti:?}\n", complex.f_vector()));
            s.push_str(&format!("torsion: {:?}\n", h.torsion));
            if let Some(e) = &expected {
                s.push_str(&format!("configuration space Betti: {e:?}\n"));
            }
            s
        }
        _ => to_json(&json!({
            "variant": variant.name(),
            "n": cfg.n,
            "k": cfg.k,
            "elements": poset.len(),
            "f_vector": complex.f_vector(),
            "betti": betti,
            "torsion": h.torsion,
            "euler_characteristic": h.euler_characteristic(),
            "configuration_space_betti": expected,
            "matches_configuration_space": matches,
        })),
    };
    let exit_code = if matches == Some(false) { EXIT_VERIFICATION } else { EXIT_OK };
    Ok(Outcome { output, exit_code })
}

pub fn cmd_counterexample(cfg: &RunConfig) -> Result<Outcome, CliError> {
    no_dot("counterexample", cfg)?;
    let report = analyze_counterexample(&cfg.budget)?;
    let violated = report.exhibits_violation();
    let output = match cfg.format {
        Format::Text => {
            let mut s = String::from("configuration:\n");
            for (i, c) in report.configuration.cubes().iter().enumerate() {
                s.push_str(&format!("  c{} = {c}\n", i + 1));
            }
            s.push_str(&format!("pairwise interior-disjoint: {}\n", report.pairwise_disjoint));
            s.push_str("minimal Berger cells containing it:\n");
            for mu in &report.berger_minimal_cells {
                s.push_str(&format!("  {mu}\n"));
            }
            s.push_str(&format!("pairs with overlapping interiors: {:?}\n", report.overlapping_interiors));
            s.push_str(&format!("minimal cell in K_3(3): {}\n", report.gamma));
            s.push_str(&format!("in K_3(3): {}, in Berger's K_3(3): {}\n", report.gamma_in_k, report.gamma_in_berger));
            if let Some(cycle) = &report.gamma_polychrome_cycle {
                let path: Vec<String> = cycle.iter().map(usize::to_string).collect();
                s.push_str(&format!("polychrome cycle: {} → {}\n", path.join(" → "), cycle[0]));
            }
            s.push_str(&format!("violation exhibited: {violated}\n"));
            s
        }
        _ => {
            let mut v = serde_json::to_value(&report).expect("serializable");
            v["violation_exhibited"] = json!(violated);
            to_json(&v)
        }
    };
    Ok(Outcome { output, exit_code: if violated { EXIT_OK } else { EXIT_VERIFICATION } })
}

pub fn cmd_acyclicity(cfg: &RunConfig) -> Result<Outcome, CliError> {
    no_dot("acyclicity", cfg)?;
    let mut report = CheckReport::new("acyclicity");
    match cfg.lambda.as_deref() {
        None => {
            for k in 1..=cfg.k {
                acyclicity_sweep(&mut report, cfg.n, k, &cfg.budget)?;
            }
        }
        Some(raw) => {
            let lambda = if raw == "blank" {
                CompleteGraphElement::blank(cfg.k)
            } else {
                serde_json::from_str::<CompleteGraphElement>(raw)
                    .map_err(|e| CliError::Usage(format!("--lambda: {e}")))?
            };
            let lambda = base_graph(&lambda, cfg.n).map_err(|e| CliError::Usage(format!("--lambda: {e}")))?;
            let label = format!("n = {}, λ = {lambda}", cfg.n);
            report.section(label, |r| {
                for top in operadlab_core::kgraph::complementary_graphs(&lambda, cfg.n, &cfg.budget)? {
                    let ok = operadlab_core::cubes::cover_nerve_acyclic(&lambda, &top, cfg.n, &cfg.budget)?;
                    r.record(ok, || json!({"lambda": lambda, "lambda_prime": top}));
                }
                Ok(())
            })?;
        }
    }
    let exit_code = if report.ok() { EXIT_OK } else { EXIT_VERIFICATION };
    Ok(Outcome { output: render_reports(cfg, std::slice::from_ref(&report)), exit_code })
}

type Handler = fn(&RunConfig) -> Result<Outcome, CliError>;

/// Runs a parsed command line, collecting warnings for stderr.
pub fn run(cli: &Cli, memory_mb: Option<&str>, warnings: &mut Vec<String>) -> Result<(RunConfig, Outcome), CliError> {
    let (opts, cmd): (&Options, Handler) = match &cli.command {
        Command::Enumerate(o) => (o, cmd_enumerate),
        Command::Verify(o) => (o, cmd_verify),
        Command::Homology(o) => (o, cmd_homology),
        Command::Counterexample(o) => (o, cmd_counterexample),
        Command::Acyclicity(o) => (o, cmd_acyclicity),
    };
    if opts.list {
        let output = operadlab_core::verify::CHECKS.iter().map(|c| format!("{c}\n")).collect();
        return Ok((RunConfig::default(), Outcome { output, exit_code: EXIT_OK }));
    }
    let cfg = RunConfig::resolve(opts, memory_mb, warnings)?;
    let outcome = cmd(&cfg)?;
    Ok((cfg, outcome))
}

/// Writes the output to `--out` or stdout.
pub fn emit(cfg: &RunConfig, outcome: &Outcome) -> Result<(), CliError> {
    match &cfg.out {
        Some(path) => std::fs::write(path, &outcome.output).map_err(|source| CliError::Io { path: path.clone(), source }),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(outcome.output.as_bytes())
                .map_err(|source| CliError::Io { path: PathBuf::from("<stdout>"), source })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budgets_only_tighten() {
        let mut w = Vec::new();
        let b = settle_budget(Some(10), None, Some(usize::MAX), None, &mut w).unwrap();
        assert_eq!(b.max_elements, 10);
        assert_eq!(b.max_constraints, Budget::default().max_constraints);
        assert_eq!(w.len(), 1);
        assert!(settle_budget(Some(0), None, None, None, &mut w).is_err());
    }

    #[test]
    fn memory_cap() {
        let mut w = Vec::new();
        let b = settle_budget(None, None, None, Some("1"), &mut w).unwrap();
        assert_eq!(b.max_simplices, 4096);
        assert_eq!(w.len(), 2);
        assert!(settle_budget(None, None, None, Some("lots"), &mut w).is_err());
    }

    #[test]
    fn flags_override_file() {
        let dir = std::env::temp_dir().join(format!("operadlab-cfg-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cfg.json");
        std::fs::write(&path, r#"{"n": 1, "k": 4, "seed": 9, "format": "text"}"#).unwrap();
        let opts = Options { k: Some(2), config: Some(path.clone()), ..Default::default() };
        let cfg = RunConfig::resolve(&opts, None, &mut Vec::new()).unwrap();
        assert_eq!((cfg.n, cfg.k, cfg.seed, cfg.format), (1, 2, 9, Format::Text));
        std::fs::write(&path, r#"{"bogus": 1}"#).unwrap();
        assert!(RunConfig::resolve(&opts, None, &mut Vec::new()).is_err());
        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn rejects_bad_values() {
        let opts = Options { variant: Some("Q".into()), ..Default::default() };
        assert_eq!(RunConfig::resolve(&opts, None, &mut Vec::new()).unwrap_err().exit_code(), EXIT_USAGE);
        let opts = Options { n: Some(0), ..Default::default() };
        assert!(RunConfig::resolve(&opts, None, &mut Vec::new()).is_err());
    }

    #[test]
    fn budget_errors_map_to_exit_code_3() {
        let cfg = RunConfig { n: 2, k: 4, budget: Budget { max_elements: 10, ..Budget::default() }, ..Default::default() };
        assert_eq!(cmd_enumerate(&cfg).unwrap_err().exit_code(), EXIT_BUDGET);
    }
}
