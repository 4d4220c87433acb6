//! Command-line front end.
//!
//! Exit codes: `0` success, `1` verification failed, `2` unreadable or
//! unparsable input, `3` violated precondition, `4` budget exceeded.

use crate::error::{Error, Result};
use crate::exact::{brute_force_msim, SimResult};
use crate::generators::{
    find_hamiltonian_cycle, gen_hamcycle, gen_laplacian_pair, gen_lowrank, gen_partition,
    gen_partition_psd, gen_three_partition, random_hamiltonian_cubic, verify, PlantedInstance,
};
use crate::matrix::io::{parse_input, Input};
use crate::matrix::{
    adjacency, clustering_of, laplacian, spectral_decompose, Graph, SymMatrix, DEFAULT_CLUSTER_TOL,
    DEFAULT_RANK_TOL,
};
use crate::pathtree::path_tree_between;
use crate::solver::{solve_msim, MsimOptions, SolveStats, SolverOptions, DEFAULT_BUDGET};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

/// Largest graph the generator searches for a Hamiltonian cycle on its own.
const CYCLE_SEARCH_LIMIT: usize = 20;

#[derive(Parser, Debug)]
#[command(name = "frobsim", version, about = "Frobenius distance between graphs and symmetric matrices")]
pub struct Cli {
    /// Worker threads for the partition solver; output does not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Distance between two graphs or matrices.
    Dist(DistArgs),
    /// Rank, eigenvalues and clustering number of one input.
    Spectral(SpectralArgs),
    /// Write a reduction instance with its certificate.
    Gen(GenArgs),
    /// Recheck an instance directory written by `gen`.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// pathtree for a path and a tree, exact up to the oracle limit, qvp beyond.
    Auto,
    Exact,
    Qvp,
    Pathtree,
}

#[derive(Clone, Debug, Args, Serialize)]
pub struct Tolerances {
    /// Eigenvalues below this times the largest magnitude count as zero.
    #[arg(long, default_value_t = DEFAULT_RANK_TOL)]
    pub rank_tol: f64,
    /// Spectral rows closer than this times the largest row norm are merged.
    #[arg(long, default_value_t = DEFAULT_CLUSTER_TOL)]
    pub cluster_tol: f64,
}

#[derive(Debug, Args)]
pub struct DistArgs {
    pub left: PathBuf,
    pub right: PathBuf,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    pub method: Method,
    /// Use graph Laplacians instead of adjacency matrices.
    #[arg(long)]
    pub laplacian: bool,
    #[command(flatten)]
    pub tol: Tolerances,
    /// Largest hyperplane branch count the partition solver may enumerate.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SpectralArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub laplacian: bool,
    #[command(flatten)]
    pub tol: Tolerances,
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum GenKind {
    Hamcycle,
    Threepart,
    ThreepartForest,
    Partition,
    PartitionPsd,
    LaplacianPair,
    Lowrank,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub kind: GenKind,
    /// Output directory.
    #[arg(long)]
    pub out: PathBuf,
    /// 3-regular graph file (hamcycle, laplacian_pair).
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Hamiltonian cycle of the input graph as a vertex sequence.
    #[arg(long, value_delimiter = ',')]
    pub cycle: Option<Vec<usize>>,
    /// Number of vertices for randomly generated instances.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Item sizes (threepart, partition).
    #[arg(long, value_delimiter = ',')]
    pub a: Option<Vec<u64>>,
    /// Number of triples (threepart).
    #[arg(long)]
    pub m: Option<usize>,
    /// Triple sum `A` (threepart).
    #[arg(long)]
    pub target: Option<u64>,
    /// Triples as `i,j,k;i,j,k;...` (threepart).
    #[arg(long)]
    pub triples: Option<String>,
    /// Indices of one half of a balanced split (partition).
    #[arg(long, value_delimiter = ',')]
    pub split: Option<Vec<usize>>,
    /// Rank of each side (lowrank).
    #[arg(long, default_value_t = 2)]
    pub rank: usize,
    /// Spectral classes of the right side (lowrank).
    #[arg(long, default_value_t = 3)]
    pub p: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub dir: PathBuf,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Serialize)]
pub struct ReportResult {
    pub n: usize,
    pub dist: f64,
    pub dist_sq: f64,
    pub perm: Vec<usize>,
    pub mismatches: Option<usize>,
    pub objective: Option<f64>,
    pub k: Option<usize>,
    pub p: Option<usize>,
    pub swapped: Option<bool>,
    pub near_threshold: Option<bool>,
    pub stats: Option<SolveStats>,
}

/// Machine output of `dist --json`. Thread count and timings are left out
/// so that the report depends only on inputs and flags.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    pub method: Method,
    pub laplacian: bool,
    pub inputs: [InputDigest; 2],
    pub tolerances: Tolerances,
    pub budget: u128,
    pub result: ReportResult,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Io(_) | Error::Json(_) => EXIT_PARSE,
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_PRECONDITION,
    }
}

fn read_file(path: &Path) -> Result<(Input, InputDigest)> {
    let bytes = std::fs::read(path)
        .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| Error::parse(0, "input is not UTF-8"))?;
    let input = parse_input(&text)?;
    let digest = InputDigest {
        path: path.display().to_string(),
        sha256: format!("{:x}", Sha256::digest(&bytes)),
    };
    Ok((input, digest))
}

fn to_matrix(input: &Input, use_laplacian: bool) -> SymMatrix {
    match input {
        Input::Graph(g) if use_laplacian => laplacian(g),
        Input::Graph(g) => adjacency(g),
        Input::Matrix(m) => m.clone(),
    }
}

fn path_and_tree(l: &Input, r: &Input) -> Option<(Graph, Graph)> {
    match (l, r) {
        (Input::Graph(g), Input::Graph(h))
            if g.is_unweighted() && h.is_unweighted() && ((g.is_path() && h.is_tree()) || (h.is_path() && g.is_tree())) =>
        {
            Some((g.clone(), h.clone()))
        }
        _ => None,
    }
}

fn cmd_dist(args: &DistArgs, out: &mut dyn Write) -> Result<()> {
    let (left, dl) = read_file(&args.left)?;
    let (right, dr) = read_file(&args.right)?;
    let (a, b) = (to_matrix(&left, args.laplacian), to_matrix(&right, args.laplacian));
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch { left: a.n(), right: b.n() });
    }
    let method = match args.method {
        Method::Auto if !args.laplacian && path_and_tree(&left, &right).is_some() => Method::Pathtree,
        Method::Auto if a.n() <= crate::exact::MAX_MSIM_ORACLE_N => Method::Exact,
        Method::Auto => Method::Qvp,
        m => m,
    };
    let mut result = ReportResult::blank();
    let sim: SimResult = match method {
        Method::Exact => brute_force_msim(&a, &b)?,
        Method::Pathtree => {
            if args.laplacian {
                return Err(Error::Precondition("pathtree compares adjacency structure; drop --laplacian".into()));
            }
            let (g, h) = path_and_tree(&left, &right)
                .ok_or_else(|| Error::Precondition("pathtree needs one unweighted path and one unweighted tree".into()))?;
            path_tree_between(&g, &h)?
        }
        Method::Qvp => {
            let opts = MsimOptions {
                rank_tol: args.tol.rank_tol,
                cluster_tol: args.tol.cluster_tol,
                solver: SolverOptions {
                    budget: args.budget,
                    ..SolverOptions::default()
                },
                orient: true,
            };
            let s = solve_msim(&a, &b, &opts)?;
            result.k = Some(s.k);
            result.p = Some(s.p);
            result.swapped = Some(s.swapped);
            result.near_threshold = Some(s.near_threshold);
            result.stats = Some(s.stats);
            s.result
        }
        Method::Auto => unreachable!("resolved above"),
    };
    result.n = a.n();
    result.dist = sim.dist;
    result.dist_sq = sim.dist_sq;
    result.perm = sim.perm.as_slice().to_vec();
    result.mismatches = sim.mismatches;
    result.objective = sim.objective;

    if args.json {
        let report = RunReport {
            command: "dist",
            method,
            laplacian: args.laplacian,
            inputs: [dl, dr],
            tolerances: args.tol.clone(),
            budget: args.budget,
            result,
        };
        writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
    } else {
        let r = &result;
        writeln!(out, "method {}", serde_json::to_value(method)?.as_str().unwrap_or("?"))?;
        writeln!(out, "n {}", r.n)?;
        writeln!(out, "dist {:.9}", r.dist)?;
        writeln!(out, "dist_sq {}", r.dist_sq)?;
        writeln!(out, "perm {}", sim.perm)?;
        if let Some(m) = r.mismatches {
            writeln!(out, "mismatches {m}")?;
        }
        if let Some(f) = r.objective {
            writeln!(out, "objective {f}")?;
        }
        if let (Some(k), Some(p)) = (r.k, r.p) {
            writeln!(out, "k {k}")?;
            writeln!(out, "p {p}")?;
        }
        if r.near_threshold == Some(true) {
            writeln!(out, "warning spectral classes lie within 10x the clustering tolerance")?;
        }
    }
    Ok(())
}

impl ReportResult {
    fn blank() -> Self {
        ReportResult {
            n: 0,
            dist: 0.0,
            dist_sq: 0.0,
            perm: vec![],
            mismatches: None,
            objective: None,
            k: None,
            p: None,
            swapped: None,
            near_threshold: None,
            stats: None,
        }
    }
}

#[derive(Serialize)]
struct SpectralReport {
    n: usize,
    k: usize,
    eigenvalues: Vec<f64>,
    min_eigenvalue: f64,
    p: usize,
    multiplicities: Vec<usize>,
    blocks: Vec<Vec<usize>>,
    near_threshold: bool,
}

fn cmd_spectral(args: &SpectralArgs, out: &mut dyn Write) -> Result<()> {
    let (input, _) = read_file(&args.file)?;
    let m = to_matrix(&input, args.laplacian);
    let d = spectral_decompose(&m, args.tol.rank_tol)?;
    let c = clustering_of(&d, args.tol.cluster_tol)?;
    let report = SpectralReport {
        n: d.n,
        k: d.k,
        eigenvalues: d.eigvals.clone(),
        min_eigenvalue: d.min_eig,
        p: c.p,
        multiplicities: c.multiplicities.clone(),
        blocks: c.blocks.clone(),
        near_threshold: c.near_threshold,
    };
    if args.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
        return Ok(());
    }
    let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    writeln!(out, "n {}", report.n)?;
    writeln!(out, "k {}", report.k)?;
    let eig: Vec<String> = report.eigenvalues.iter().map(|x| format!("{x:.9}")).collect();
    writeln!(out, "eigenvalues {}", eig.join(" "))?;
    writeln!(out, "min_eigenvalue {:.9}", report.min_eigenvalue)?;
    writeln!(out, "p {}", report.p)?;
    writeln!(out, "multiplicities {}", join(&report.multiplicities))?;
    for (l, block) in report.blocks.iter().enumerate() {
        writeln!(out, "class {l} {}", join(block))?;
    }
    if report.near_threshold {
        writeln!(out, "warning spectral classes lie within 10x the clustering tolerance")?;
    }
    Ok(())
}

fn parse_triples(s: &str) -> Result<Vec<[usize; 3]>> {
    s.split(';')
        .map(|t| {
            let idx: Vec<usize> = t
                .split(',')
                .map(|x| x.trim().parse().map_err(|_| Error::parse(0, format!("invalid triple index `{x}`"))))
                .collect::<Result<_>>()?;
            <[usize; 3]>::try_from(idx).map_err(|_| Error::parse(0, format!("triple `{t}` needs three indices")))
        })
        .collect()
}

fn cubic_source(args: &GenArgs) -> Result<(Graph, Option<Vec<usize>>, Option<u64>)> {
    if let Some(path) = &args.input {
        let g = match read_file(path)?.0 {
            Input::Graph(g) => g,
            Input::Matrix(_) => return Err(Error::Precondition("--input must be a graph file".into())),
        };
        let cycle = match &args.cycle {
            Some(c) => Some(c.clone()),
            None if g.n() <= CYCLE_SEARCH_LIMIT => find_hamiltonian_cycle(&g, CYCLE_SEARCH_LIMIT)?,
            None => None,
        };
        return Ok((g, cycle, None));
    }
    let n = args
        .n
        .ok_or_else(|| Error::Precondition("give --input FILE or --n N".into()))?;
    let (g, cycle) = random_hamiltonian_cubic(n, &mut ChaCha8Rng::seed_from_u64(args.seed))?;
    Ok((g, Some(cycle), Some(args.seed)))
}

fn require<T: Clone>(v: &Option<T>, flag: &str) -> Result<T> {
    v.clone().ok_or_else(|| Error::Precondition(format!("missing --{flag}")))
}

fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> Result<()> {
    let inst: PlantedInstance = match args.kind {
        GenKind::Hamcycle | GenKind::LaplacianPair => {
            let (g, cycle, seed) = cubic_source(args)?;
            let mut inst = if args.kind == GenKind::Hamcycle {
                gen_hamcycle(&g, cycle.as_deref())?
            } else {
                gen_laplacian_pair(&g, cycle.as_deref())?
            };
            inst.seed = seed;
            inst
        }
        GenKind::Threepart | GenKind::ThreepartForest => {
            let triples = args.triples.as_deref().map(parse_triples).transpose()?;
            gen_three_partition(
                require(&args.m, "m")?,
                &require(&args.a, "a")?,
                require(&args.target, "target")?,
                triples.as_deref(),
                args.kind == GenKind::Threepart,
            )?
        }
        GenKind::Partition => gen_partition(&require(&args.a, "a")?, args.split.as_deref())?,
        GenKind::PartitionPsd => gen_partition_psd(&require(&args.a, "a")?, args.split.as_deref())?,
        GenKind::Lowrank => gen_lowrank(require(&args.n, "n")?, args.rank, args.p, args.seed)?,
    };
    inst.write_dir(&args.out)?;
    writeln!(out, "kind {}", inst.kind.name())?;
    writeln!(out, "n {}", inst.n())?;
    let name = |v: serde_json::Value| v.as_str().unwrap_or("?").to_string();
    writeln!(
        out,
        "claimed {} {} {}",
        name(serde_json::to_value(inst.claimed.quantity)?),
        name(serde_json::to_value(inst.claimed.meaning)?),
        inst.claimed.value
    )?;
    writeln!(out, "certificate {}", if inst.certificate.is_some() { "yes" } else { "no" })?;
    writeln!(out, "wrote {}", args.out.display())?;
    Ok(())
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<bool> {
    let inst = PlantedInstance::read_dir(&args.dir)?;
    let v = verify(&inst)?;
    if args.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
    } else {
        writeln!(out, "kind {}", inst.kind.name())?;
        for c in &v.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            writeln!(out, "{tag} {}: expected {}, observed {}", c.name, c.expected, c.observed)?;
        }
        writeln!(out, "verify {}", if v.passed() { "pass" } else { "fail" })?;
    }
    Ok(v.passed())
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Dist(a) => cmd_dist(a, out).map(|_| 0),
        Command::Spectral(a) => cmd_spectral(a, out).map(|_| 0),
        Command::Gen(a) => cmd_gen(a, out).map(|_| 0),
        Command::Verify(a) => cmd_verify(a, out).map(|ok| if ok { 0 } else { EXIT_VERIFY_FAILED }),
    }
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let mut buf = Vec::new();
    let outcome = match cli.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| dispatch(&cli, &mut buf)),
            Err(e) => Err(Error::Precondition(format!("cannot start {t} threads: {e}"))),
        },
        None => dispatch(&cli, &mut buf),
    };
    let _ = out.write_all(&buf);
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
