use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use tcg_core::catalog::catalog_groups;
use tcg_core::classification::check_theorem_a;
use tcg_core::commuting::{transversal_graph_on, CommutingError};
use tcg_core::graph_iso::graphs_isomorphic;
use tcg_core::group::DEFAULT_MAX_ORDER;
use tcg_core::isoclinism::{
    isoclinism_invariance_check, prescreen, search_isoclinism_bounded, IsoclinismWitness, DEFAULT_QUOTIENT_BOUND,
};
use tcg_core::spec::SpecBuildError;
use tcg_core::{gamma, transversal_graph, ElementSubset, FiniteGroup, Graph, GroupSpec};

use crate::cayley::{load_cayley, write_cayley, CayleyError};
use crate::export::{export_dot, export_json};
use crate::report::{analyze, run_checks, VerdictRecord};

pub const MAX_ORDER_ENV: &str = "TCG_MAX_ORDER";

#[derive(Debug, Parser)]
#[command(name = "tcg", version, about = "Commuting graphs on central transversals of finite groups")]
pub struct Cli {
    /// Largest group order accepted [default: $TCG_MAX_ORDER or 512]
    #[arg(long, global = true, value_name = "N")]
    pub max_order: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the Cayley table of a group spec in `cayley v1` format.
    Build {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print a JSON analysis report.
    Analyze(Source),
    /// Export T(G) or Γ(G).
    Graph {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "T")]
        which: Which,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Search for an isoclinism and compare the transversal graphs.
    Isoclinic {
        spec_a: String,
        spec_b: String,
        #[arg(long, default_value_t = DEFAULT_QUOTIENT_BOUND, value_name = "N")]
        bound_quotient: usize,
    },
    /// Run the classification checks over the built-in catalog.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Same as --max-order.
        #[arg(value_name = "MAX_ORDER")]
        order: Option<usize>,
        /// Extra groups from Cayley table files.
        #[arg(long)]
        file: Vec<PathBuf>,
        /// Extra groups from specs.
        #[arg(long)]
        spec: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_QUOTIENT_BOUND, value_name = "N")]
        bound_quotient: usize,
        /// Seed for the random transversal sweep.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    #[arg(long)]
    pub spec: Option<String>,
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "T")]
    Transversal,
    #[value(name = "gamma")]
    Gamma,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    TheoremA,
    All,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Validation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 1,
            CliError::Validation(_) => 2,
        }
    }
}

impl From<CayleyError> for CliError {
    fn from(e: CayleyError) -> Self {
        match e {
            CayleyError::Invalid(_) => CliError::Validation(e.to_string()),
            CayleyError::Syntax { .. } => CliError::Parse(e.to_string()),
            CayleyError::Io { .. } => CliError::Usage(e.to_string()),
        }
    }
}

/// Text for stdout plus the exit code it goes with.
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

pub fn resolve_cap(flag: Option<usize>, env: Option<&str>) -> Result<usize, CliError> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match env {
        Some(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{MAX_ORDER_ENV}={v:?} is not a number"))),
        None => Ok(DEFAULT_MAX_ORDER),
    }
}

/// Builds a spec, loading `file:` leaves as Cayley tables and keeping their
/// error kind.
pub fn build_spec(text: &str, cap: usize) -> Result<FiniteGroup, CliError> {
    let spec = GroupSpec::parse(text).map_err(|e| CliError::Parse(format!("spec {text:?}: {e}")))?;
    let mut failure = None;
    let built = spec.build(cap, &mut |path| {
        load_cayley(Path::new(path), cap).map_err(|e| {
            let message = e.to_string();
            failure = Some(CliError::from(e));
            SpecBuildError::File { path: path.to_string(), message }
        })
    });
    built.map_err(|e| failure.take().unwrap_or_else(|| CliError::Validation(format!("{text}: {e}"))))
}

pub fn load_source(source: &Source, cap: usize) -> Result<FiniteGroup, CliError> {
    match (&source.spec, &source.file) {
        (Some(spec), _) => build_spec(spec, cap),
        (None, Some(path)) => Ok(load_cayley(path, cap)?),
        (None, None) => Err(CliError::Usage("one of --spec or --file is required".into())),
    }
}

/// `T(G)`, or the empty graph for an abelian group.
fn transversal_or_empty(g: &FiniteGroup) -> Result<Graph, CliError> {
    match transversal_graph(g) {
        Ok(t) => Ok(t.graph),
        Err(CommutingError::AbelianGroup) => Ok(Graph::new(0)),
        Err(e) => Err(CliError::Validation(e.to_string())),
    }
}

pub fn cmd_build(spec: &str, out: &Path, cap: usize) -> Result<Outcome, CliError> {
    let g = build_spec(spec, cap)?;
    std::fs::write(out, write_cayley(&g)).map_err(|e| CliError::Usage(format!("{}: {e}", out.display())))?;
    Ok(Outcome::ok(String::new()))
}

pub fn cmd_analyze(g: &FiniteGroup) -> Outcome {
    let report = analyze(g);
    let code = if report.has_violation() { 3 } else { 0 };
    Outcome { text: to_json(&report), code }
}

pub fn cmd_graph(g: &FiniteGroup, which: Which, format: Format) -> Result<Outcome, CliError> {
    let (graph, title) = match which {
        Which::Transversal => (transversal_or_empty(g)?, format!("T({})", g.name())),
        Which::Gamma => match gamma(g) {
            Ok(c) => (c.graph, format!("Gamma({})", g.name())),
            Err(CommutingError::AbelianGroup) => (Graph::new(0), format!("Gamma({})", g.name())),
            Err(e) => return Err(CliError::Validation(e.to_string())),
        },
    };
    let text = match format {
        Format::Dot => export_dot(&graph, &title),
        Format::Json => export_json(&graph) + "\n",
    };
    Ok(Outcome::ok(text))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoclinicReport {
    pub group_a: String,
    pub group_b: String,
    pub isoclinic: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<IsoclinismWitness>,
    pub t_graphs_isomorphic: bool,
}

pub fn cmd_isoclinic(a: &FiniteGroup, b: &FiniteGroup, bound: usize) -> Result<IsoclinicReport, CliError> {
    let witness = search_isoclinism_bounded(a, b, bound).map_err(|e| CliError::Validation(e.to_string()))?;
    let (ta, tb) = (transversal_or_empty(a)?, transversal_or_empty(b)?);
    let iso = graphs_isomorphic(&ta, &tb).map_err(|e| CliError::Validation(e.to_string()))?;
    Ok(IsoclinicReport {
        group_a: a.name().to_string(),
        group_b: b.name().to_string(),
        isoclinic: witness.is_some(),
        witness,
        t_graphs_isomorphic: iso.is_some(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransversalSweep {
    pub seed: u64,
    pub groups: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoclinismSweep {
    pub bound_quotient: usize,
    pub pairs_searched: usize,
    pub isoclinic_pairs: Vec<(String, String)>,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub suite: String,
    pub max_order: usize,
    pub groups_checked: usize,
    pub abelian_skipped: usize,
    pub checks_run: usize,
    pub violations: usize,
    pub results: Vec<VerdictRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transversals: Option<TransversalSweep>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub isoclinism: Option<IsoclinismSweep>,
}

pub struct VerifyOptions {
    pub suite: Suite,
    pub max_order: usize,
    pub bound_quotient: usize,
    pub seed: u64,
}

fn random_transversal(g: &FiniteGroup, rng: &mut ChaCha8Rng) -> ElementSubset {
    let cosets = g.left_cosets(&g.center());
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); cosets.representatives.len()];
    for x in 0..g.order() {
        members[cosets.index_of[x]].push(x);
    }
    let picks = members.iter().enumerate().map(|(c, m)| if c == 0 { 0 } else { *m.choose(rng).unwrap() });
    ElementSubset::new(g.order(), picks.collect::<Vec<_>>()).expect("one element per coset")
}

fn transversal_sweep(groups: &[FiniteGroup], seed: u64) -> Result<TransversalSweep, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for g in groups {
        let t = random_transversal(g, &mut rng);
        let canonical = transversal_graph(g).map_err(|e| CliError::Validation(e.to_string()))?;
        let other = transversal_graph_on(g, &t).map_err(|e| CliError::Validation(e.to_string()))?;
        match graphs_isomorphic(&canonical.graph, &other.graph) {
            Ok(Some(_)) => {}
            Ok(None) => failures.push(format!("{}: T(G) depends on the transversal", g.name())),
            // Too large to compare; not a failure of the group.
            Err(_) => {}
        }
    }
    Ok(TransversalSweep { seed, groups: groups.len(), failures })
}

fn isoclinism_sweep(groups: &[FiniteGroup], bound: usize) -> IsoclinismSweep {
    let small: Vec<&FiniteGroup> = groups.iter().filter(|g| g.order() / g.center().len() <= bound).collect();
    let mut sweep = IsoclinismSweep { bound_quotient: bound, pairs_searched: 0, isoclinic_pairs: Vec::new(), failures: Vec::new() };
    for (i, g) in small.iter().enumerate() {
        for h in &small[i + 1..] {
            if !prescreen(g, h) {
                continue;
            }
            sweep.pairs_searched += 1;
            let pair = format!("{} / {}", g.name(), h.name());
            match search_isoclinism_bounded(g, h, bound) {
                Ok(Some(w)) => {
                    sweep.isoclinic_pairs.push((g.name().to_string(), h.name().to_string()));
                    match isoclinism_invariance_check(g, h, &w) {
                        Ok(r) if r.holds() => {}
                        Ok(_) => sweep.failures.push(format!("{pair}: T graphs not matched by the witness")),
                        Err(e) => sweep.failures.push(format!("{pair}: {e}")),
                    }
                }
                Ok(None) => {}
                Err(e) => sweep.failures.push(format!("{pair}: {e}")),
            }
        }
    }
    sweep
}

/// Checks every non-abelian group in `extra` and in the catalog up to
/// `max_order`, in name order.
pub fn cmd_verify(opts: &VerifyOptions, extra: Vec<FiniteGroup>) -> Result<VerifySummary, CliError> {
    let catalog = catalog_groups(opts.max_order).map_err(|e| CliError::Validation(e.to_string()))?;
    let mut groups: Vec<FiniteGroup> = catalog.into_iter().map(|(_, g)| g).chain(extra).collect();
    groups.sort_by(|a, b| a.name().cmp(b.name()));
    let before = groups.len();
    groups.retain(|g| !g.is_abelian());

    let mut results = Vec::new();
    for g in &groups {
        match opts.suite {
            Suite::TheoremA => results.push(VerdictRecord::from_result("theorem-a", g.name(), check_theorem_a(g))),
            Suite::All => results.extend(run_checks(g)),
        }
    }
    let (transversals, isoclinism) = match opts.suite {
        Suite::TheoremA => (None, None),
        Suite::All => (Some(transversal_sweep(&groups, opts.seed)?), Some(isoclinism_sweep(&groups, opts.bound_quotient))),
    };
    let violations = results.iter().filter(|r| r.is_violation()).count()
        + transversals.as_ref().map_or(0, |t| t.failures.len())
        + isoclinism.as_ref().map_or(0, |s| s.failures.len());
    Ok(VerifySummary {
        suite: match opts.suite {
            Suite::TheoremA => "theorem-a",
            Suite::All => "all",
        }
        .to_string(),
        max_order: opts.max_order,
        groups_checked: groups.len(),
        abelian_skipped: before - groups.len(),
        checks_run: results.iter().filter(|r| r.skipped.is_none()).count(),
        violations,
        results,
        transversals,
        isoclinism,
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes") + "\n"
}

pub fn execute(cli: Cli, env_cap: Option<&str>) -> Result<Outcome, CliError> {
    let cap = resolve_cap(cli.max_order, env_cap)?;
    match cli.command {
        Command::Build { spec, out } => cmd_build(&spec, &out, cap),
        Command::Analyze(source) => Ok(cmd_analyze(&load_source(&source, cap)?)),
        Command::Graph { source, which, format } => cmd_graph(&load_source(&source, cap)?, which, format),
        Command::Isoclinic { spec_a, spec_b, bound_quotient } => {
            let (a, b) = (build_spec(&spec_a, cap)?, build_spec(&spec_b, cap)?);
            Ok(Outcome::ok(to_json(&cmd_isoclinic(&a, &b, bound_quotient)?)))
        }
        Command::Verify { suite, order, file, spec, bound_quotient, seed } => {
            let max_order = order.map_or(cap, |o| o.min(cap));
            let mut extra = Vec::new();
            for path in &file {
                extra.push(load_cayley(path, cap)?);
            }
            for s in &spec {
                extra.push(build_spec(s, cap)?);
            }
            let summary = cmd_verify(&VerifyOptions { suite, max_order, bound_quotient, seed }, extra)?;
            let code = if summary.violations > 0 { 3 } else { 0 };
            Ok(Outcome { text: to_json(&summary), code })
        }
    }
}

/// Parses arguments, runs, prints, and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let env_cap = std::env::var(MAX_ORDER_ENV).ok();
    match execute(cli, env_cap.as_deref()) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            outcome.code
        }
        Err(e) => {
            eprintln!("tcg: {e}");
            e.exit_code()
        }
    }
}
