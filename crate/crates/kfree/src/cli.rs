//! Command-line front end. Standard output carries only graph6 lines, numbers or JSON;
//! anything meant for people goes to standard error.
//!
//! Exit codes: 0 success, 1 a verification mismatch, 2 usage or input errors,
//! 3 refusal (budget exceeded, or parameters outside a claim's range).

use std::ffi::OsString;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kfree_core::constructions::{self, Family, FamilySpec};
use kfree_core::enumeration::{EnumConstraints, Enumerator};
use kfree_core::formulas::{count_cliques, edge_bound, edge_bound_value, turan_edges, BoundError};
use kfree_core::properties::{decide, Counterexample, Decision, WitnessKind};
use kfree_core::verify::{self, Exceptional, Metric, Verdict, VerifyError};
use kfree_core::{graph6, Graph, PropertyKind};

use crate::exec::{default_jobs, Parallel};
use crate::report::Report;
use crate::stream::{read_stream, StreamError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_REFUSED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "kfree",
    version,
    about = "Extremal Hamiltonicity-type problems in K_{r+1}-free graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a graph and print it as graph6.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Decide a property for graph6 input; prints a verdict line per graph.
    Check(CheckArgs),
    /// Count t-cliques for graph6 input.
    Count(CountArgs),
    /// Closed-form values.
    Formula {
        #[command(subcommand)]
        what: Formula,
    },
    /// Stream one graph6 line per isomorphism class.
    Enumerate(EnumerateArgs),
    /// Run a registered check and emit a JSON report.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// Turán graph T_r(n).
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// First m edges in colex order.
    Colex {
        #[arg(long)]
        m: usize,
    },
    /// First m colex edges joining different residues mod r.
    ColexTuran {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
    },
    /// Every member of a family, one graph6 line each.
    Family {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, allow_negative_numbers = true)]
        ell: i64,
    },
    /// Complete multipartite graph, e.g. --parts 6,2,2,1.
    Multipartite {
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
    },
    /// T_r(n-1) plus a vertex whose neighbourhood is T_{r-1}(l+1).
    GStar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, allow_negative_numbers = true)]
        ell: i64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FamilyArg {
    G,
    H,
    J,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PropertyArg {
    Trace,
    Ham,
    Hamconn,
    Kpath,
    Kham,
    Chorded,
}

impl PropertyArg {
    fn with_k(self, k: Option<usize>) -> Result<PropertyKind, CliError> {
        let need = |k: Option<usize>| k.ok_or_else(|| CliError::Usage("--k is required for kpath and kham".into()));
        Ok(match self {
            Self::Trace => PropertyKind::Traceable,
            Self::Ham => PropertyKind::Hamiltonian,
            Self::Hamconn => PropertyKind::HamiltonianConnected,
            Self::Kpath => PropertyKind::KPathHamiltonian(need(k)?),
            Self::Kham => PropertyKind::KHamiltonian(need(k)?),
            Self::Chorded => PropertyKind::ChordedPancyclic,
        })
    }
}

/// Graph6 from the command line or from standard input.
#[derive(Debug, Args)]
pub struct GraphInput {
    /// A single graph6 string.
    pub graph6: Option<String>,
    /// Read graph6 lines from standard input.
    #[arg(long, conflicts_with = "graph6")]
    pub stdin: bool,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, value_enum)]
    pub property: PropertyArg,
    #[arg(long)]
    pub k: Option<usize>,
    #[command(flatten)]
    pub input: GraphInput,
    /// One JSON object per graph instead of a verdict line.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub cliques: usize,
    #[command(flatten)]
    pub input: GraphInput,
}

#[derive(Debug, Subcommand)]
pub enum Formula {
    /// e(T_r(n)).
    TuranEdges {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
    },
    /// The extremal edge bound for a property.
    Bound {
        #[arg(long, value_enum)]
        property: PropertyArg,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
        /// Print the value even when n is below the claim's range.
        #[arg(long)]
        unchecked: bool,
    },
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    /// Keep only K_{R+1}-free graphs.
    #[arg(long)]
    pub max_clique: Option<usize>,
    #[arg(long)]
    pub min_edges: Option<usize>,
    #[arg(long)]
    pub max_edges: Option<usize>,
    #[arg(long)]
    pub bipartite: bool,
    #[arg(long, env = "KFREE_JOBS")]
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    Trace,
    Ham,
    Hamconn,
    Kpath,
    Kham,
    Chorded,
    /// Degree-sequence edge bound (needs --r --ell --n).
    Degree,
    /// Clique counts against colex graphs (needs --t --m).
    KkClique,
    /// Clique counts of K_{r+1}-free graphs against colex Turán graphs (needs --t --m --r).
    Frohmader,
    /// Family membership claims (needs --n --r --ell).
    Family,
    /// Exceptional extremal graphs (optional --graph).
    Witness,
    /// Degree-condition soundness over all graphs on --n vertices.
    Conditions,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub theorem: TheoremArg,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Use t-clique counts instead of edges.
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long, allow_negative_numbers = true)]
    pub ell: Option<i64>,
    #[arg(long)]
    pub m: Option<usize>,
    /// Exceptional graph id such as K_{6,2,2,1}.
    #[arg(long)]
    pub graph: Option<String>,
    /// Check only the predicted graphs; allowed past the exhaustive budget.
    #[arg(long)]
    pub witness_only: bool,
    /// Include k-path checks in the degree-condition sweep.
    #[arg(long)]
    pub paths: bool,
    #[arg(long, env = "KFREE_JOBS")]
    pub jobs: Option<usize>,
    /// Write the JSON report here instead of standard output.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Print a CSV summary row on standard output.
    #[arg(long)]
    pub csv: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Refused(String),
    #[error(transparent)]
    Stream(#[from] StreamError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Refused(_) => EXIT_REFUSED,
            _ => EXIT_USAGE,
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::OverBudget { .. } => Self::Refused(e.to_string()),
            VerifyError::Enumeration(_) => Self::Refused(e.to_string()),
            _ => Self::Usage(e.to_string()),
        }
    }
}

impl From<BoundError> for CliError {
    fn from(e: BoundError) -> Self {
        match e {
            BoundError::HypothesesNotMet { .. } => Self::Refused(e.to_string()),
            _ => Self::Usage(e.to_string()),
        }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("--{flag} is required for this theorem")))
}

/// Parses `args` and runs the command. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, stdin: &mut dyn BufRead) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            // --help and --version are requested output; everything else is an error.
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err, stdin) {
        Ok(code) => code,
        // The reader went away (`kfree enumerate | head`); nothing left to report.
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write, stdin: &mut dyn BufRead) -> Result<i32, CliError> {
    match cmd {
        Command::Construct { what } => construct(what, out),
        Command::Check(a) => check(a, out, stdin),
        Command::Count(a) => count(a, out, stdin),
        Command::Formula { what } => formula(what, out),
        Command::Enumerate(a) => enumerate(a, out),
        Command::Verify(a) => run_verify(a, out, err),
    }
}

fn construct(what: Construct, out: &mut dyn Write) -> Result<i32, CliError> {
    let graphs: Vec<Graph> = match what {
        Construct::Turan { n, r } => vec![constructions::turan_graph(n, r).map_err(usage)?],
        Construct::Colex { m } => vec![constructions::colex_graph(m).map_err(usage)?],
        Construct::ColexTuran { m, r } => vec![constructions::colex_turan_graph(m, r).map_err(usage)?],
        Construct::Family { family, n, r, ell } => {
            let family = match family {
                FamilyArg::G => Family::G,
                FamilyArg::H => Family::H,
                FamilyArg::J => Family::J,
            };
            constructions::family_members(FamilySpec::new(family, n, r, ell)).map_err(usage)?
        }
        Construct::Multipartite { parts } => vec![constructions::named::multipartite(&parts).map_err(usage)?],
        Construct::GStar { n, r, ell } => vec![constructions::g_star(n, r, ell).map_err(usage)?],
    };
    for g in &graphs {
        writeln!(out, "{}", graph6::encode(g))?;
    }
    Ok(EXIT_OK)
}

/// Graphs named by `input`, in order.
fn graphs_from(input: &GraphInput, stdin: &mut dyn BufRead) -> Result<Vec<Graph>, CliError> {
    match (&input.graph6, input.stdin) {
        (Some(s), _) => Ok(vec![
            graph6::decode(s.trim().as_bytes()).map_err(|e| CliError::Usage(format!("{s}: {e}")))?
        ]),
        (None, true) => Ok(read_stream(stdin).collect::<Result<_, _>>()?),
        (None, false) => Err(CliError::Usage("give a graph6 string or --stdin".into())),
    }
}

fn verdict_token(p: PropertyKind) -> String {
    match p {
        PropertyKind::Traceable => "traceable".into(),
        PropertyKind::Hamiltonian => "hamiltonian".into(),
        PropertyKind::HamiltonianConnected => "hamiltonian-connected".into(),
        PropertyKind::KPathHamiltonian(k) => format!("{k}-path-hamiltonian"),
        PropertyKind::KHamiltonian(k) => format!("{k}-hamiltonian"),
        PropertyKind::ChordedPancyclic => "chorded-pancyclic".into(),
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn check(a: CheckArgs, out: &mut dyn Write, stdin: &mut dyn BufRead) -> Result<i32, CliError> {
    let p = a.property.with_k(a.k)?;
    for g in graphs_from(&a.input, stdin)? {
        let d = decide(&g, p).map_err(usage)?;
        let token = verdict_token(p);
        let (verdict, detail_kind, detail): (String, &str, Vec<usize>) = match &d {
            Decision::Holds(w) => {
                let kind = match w.kind {
                    WitnessKind::Cycle => "cycle",
                    WitnessKind::Path => "path",
                    WitnessKind::PathBetween => "path-between",
                    WitnessKind::None => "exhaustive",
                };
                (token, kind, w.vertices.clone())
            }
            Decision::Fails(c) => {
                let (kind, v) = match c {
                    Counterexample::NoCycle => ("no-cycle", vec![]),
                    Counterexample::NoPath => ("no-path", vec![]),
                    Counterexample::Pair(u, v) => ("pair", vec![*u, *v]),
                    Counterexample::Segment(s) => ("segment", s.clone()),
                    Counterexample::Deletion(s) => ("deletion", s.clone()),
                    Counterexample::MissingLength(l) => ("missing-length", vec![*l]),
                };
                (format!("non-{token}"), kind, v)
            }
        };
        if a.json {
            let obj = serde_json::json!({
                "graph6": graph6::encode(&g),
                "property": p.to_string(),
                "holds": d.holds(),
                "verdict": verdict,
                "detail": detail_kind,
                "vertices": detail,
            });
            writeln!(out, "{obj}")?;
        } else if detail.is_empty() {
            writeln!(out, "{verdict}\t{detail_kind}")?;
        } else {
            writeln!(out, "{verdict}\t{detail_kind} {}", join(&detail))?;
        }
    }
    Ok(EXIT_OK)
}

fn count(a: CountArgs, out: &mut dyn Write, stdin: &mut dyn BufRead) -> Result<i32, CliError> {
    for g in graphs_from(&a.input, stdin)? {
        writeln!(out, "{}", count_cliques(&g, a.cliques))?;
    }
    Ok(EXIT_OK)
}

fn formula(what: Formula, out: &mut dyn Write) -> Result<i32, CliError> {
    match what {
        Formula::TuranEdges { n, r } => {
            if r == 0 {
                return Err(CliError::Usage("--r must be at least 1".into()));
            }
            writeln!(out, "{}", turan_edges(n, r))?;
        }
        Formula::Bound {
            property,
            k,
            n,
            r,
            unchecked,
        } => {
            let p = property.with_k(k)?;
            let v = if unchecked {
                edge_bound_value(p, n, r)?
            } else {
                edge_bound(p, n, r)?
            };
            writeln!(out, "{v}")?;
        }
    }
    Ok(EXIT_OK)
}

fn jobs_or_default(jobs: Option<usize>) -> usize {
    jobs.unwrap_or_else(default_jobs).max(1)
}

fn enumerate(a: EnumerateArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let c = EnumConstraints {
        n: a.n,
        max_clique: a.max_clique,
        min_edges: a.min_edges,
        max_edges: a.max_edges,
        bipartite_only: a.bipartite,
    };
    let jobs = jobs_or_default(a.jobs);
    if jobs == 1 {
        let en = Enumerator::new(c).map_err(|e| CliError::Refused(e.to_string()))?;
        let mut res = Ok(());
        en.for_each(|g| {
            if res.is_ok() {
                res = writeln!(out, "{}", graph6::encode(g));
            }
        });
        res?;
    } else {
        let exec = Parallel::new(jobs).map_err(usage)?;
        let lines = verify::fold_enumeration(
            &exec,
            c,
            String::new(),
            |acc, g| {
                acc.push_str(&graph6::encode(g));
                acc.push('\n');
            },
            |mut a, b| {
                a.push_str(&b);
                a
            },
        )?;
        out.write_all(lines.as_bytes())?;
    }
    Ok(EXIT_OK)
}

fn build_report(a: &VerifyArgs, exec: &Parallel) -> Result<Report, CliError> {
    let property = match a.theorem {
        TheoremArg::Trace => Some(PropertyArg::Trace),
        TheoremArg::Ham => Some(PropertyArg::Ham),
        TheoremArg::Hamconn => Some(PropertyArg::Hamconn),
        TheoremArg::Kpath => Some(PropertyArg::Kpath),
        TheoremArg::Kham => Some(PropertyArg::Kham),
        TheoremArg::Chorded => Some(PropertyArg::Chorded),
        _ => None,
    };
    if let Some(p) = property {
        let p = p.with_k(a.k)?;
        let metric = a.t.map_or(Metric::Edges, Metric::Cliques);
        let rep = verify::extremal_number(exec, p, need(a.n, "n")?, need(a.r, "r")?, metric, a.witness_only)?;
        return Ok(Report::Extremal(rep));
    }
    Ok(match a.theorem {
        TheoremArg::Degree => Report::Extremal(verify::verify_degree_theorem(
            exec,
            need(a.r, "r")?,
            need(a.ell, "ell")?,
            need(a.n, "n")?,
        )?),
        TheoremArg::KkClique => Report::Check(verify::verify_clique_bounds(
            exec,
            need(a.t, "t")?,
            need(a.m, "m")?,
            None,
            a.n.unwrap_or(8),
        )?),
        TheoremArg::Frohmader => Report::Check(verify::verify_clique_bounds(
            exec,
            need(a.t, "t")?,
            need(a.m, "m")?,
            Some(need(a.r, "r")?),
            a.n.unwrap_or(8),
        )?),
        TheoremArg::Family => Report::Check(verify::family_characterization_check(
            need(a.n, "n")?,
            need(a.r, "r")?,
            need(a.ell, "ell")?,
        )?),
        TheoremArg::Witness => {
            let which: Vec<Exceptional> =
                match &a.graph {
                    None => Exceptional::ALL.to_vec(),
                    Some(id) => vec![Exceptional::parse(id)
                        .ok_or_else(|| CliError::Usage(format!("unknown exceptional graph {id}")))?],
                };
            Report::Witness(which.into_iter().map(verify::witness_check).collect::<Result<_, _>>()?)
        }
        TheoremArg::Conditions => Report::Check(verify::condition_soundness(exec, need(a.n, "n")?, a.paths)?),
        _ => unreachable!("property theorems handled above"),
    })
}

fn run_verify(a: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let exec = Parallel::new(jobs_or_default(a.jobs)).map_err(usage)?;
    let started = Instant::now();
    let report = build_report(&a, &exec)?;
    let json = report.to_json();
    match &a.json {
        Some(path) => std::fs::write(path, &json)?,
        None if !a.csv => out.write_all(json.as_bytes())?,
        None => {}
    }
    if a.csv {
        out.write_all(report.to_csv().map_err(usage)?.as_bytes())?;
    }
    let verdict = report.verdict();
    writeln!(err, "verdict: {verdict}")?;
    writeln!(err, "runtime_ms: {}", started.elapsed().as_millis())?;
    Ok(match verdict {
        Verdict::Match | Verdict::WitnessOnly => EXIT_OK,
        Verdict::Mismatch => EXIT_MISMATCH,
        Verdict::OutOfHypothesis => EXIT_REFUSED,
    })
}
