//! Command-line front end. Every command prints one JSON document on
//! standard output (see `schema/result.json`), except `gen` without
//! `--out`, which prints the generated DIMACS file.

pub mod dimacs;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Map, Value};

use vc3::analysis::{analyze_catalog, interleave_base, KERNEL_GROWTH, REAL_CYCLE_BASE};
use vc3::generate::{cycle, random_cubic, random_maxdeg3, random_tree};
use vc3::oracle::{is_vertex_cover, min_vc_bruteforce};
use vc3::search::{check_node_budget, SearchStats, DEFAULT_NODE_BUDGET};
use vc3::structure::{circuit_rank, extra_degree_graph, tau, tau_upper_bound};
use vc3::{nt_kernelize, vc_decide, vc_minimum, Answer, Error, Graph, RuleSet, SearchConfig};

use crate::dimacs::{labels, parse_cover, parse_dimacs, write_dimacs, Parsed};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "vc3", version, about = "Exact vertex cover for sparse graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether the graph has a vertex cover of size at most k.
    Solve {
        input: PathBuf,
        #[arg(long)]
        k: u64,
        #[command(flatten)]
        search: SearchFlags,
    },
    /// Compute a minimum vertex cover.
    Minimize {
        input: PathBuf,
        #[command(flatten)]
        search: SearchFlags,
    },
    /// Nemhauser–Trotter kernel for budget k.
    Kernelize {
        input: PathBuf,
        #[arg(long)]
        k: u64,
    },
    /// Real-cycle number, extra-degree and circuit rank.
    Tau { input: PathBuf },
    /// Branching numbers of the case catalog and the interleaving bound.
    Analyze,
    /// Random instance in DIMACS format.
    Gen {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Target average degree for `maxdeg3`.
        #[arg(long, default_value_t = 2.5)]
        avg_degree: f64,
        /// Write the graph here and print a JSON summary instead.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a cover file covers every edge.
    Verify { input: PathBuf, cover: PathBuf },
    /// Brute-force minimum cover for small graphs.
    Oracle { input: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Cubic,
    Maxdeg3,
    Tree,
    Cycle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Toggle {
    On,
    Off,
}

#[derive(Debug, Args)]
pub struct SearchFlags {
    /// Enable the struction rule.
    #[arg(long)]
    struction: bool,
    /// LP lower-bound pruning [default: on for minimize, off for solve].
    #[arg(long, value_enum)]
    lp_bound: Option<Toggle>,
    /// Re-kernelize every this many branching levels; 0 means root only.
    #[arg(long, default_value_t = 8)]
    interleave_depth: usize,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    node_budget: u64,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    threads: u64,
    /// Check real-cycle monotonicity at every branch and report it.
    #[arg(long)]
    instrument: bool,
    /// Include wall-clock time in the stats.
    #[arg(long)]
    timing: bool,
}

impl SearchFlags {
    fn config(&self, mut base: SearchConfig) -> SearchConfig {
        base.rules = RuleSet {
            struction: self.struction,
            ..base.rules
        };
        if let Some(t) = self.lp_bound {
            base.lp_bound = t == Toggle::On;
        }
        base.interleave_depth = self.interleave_depth;
        base.node_budget = self.node_budget;
        base.threads = self.threads as usize;
        base.instrument = self.instrument;
        base
    }
}

#[derive(Debug, Default, Serialize)]
pub struct Stats {
    pub nodes_expanded: Option<u64>,
    pub max_depth: Option<usize>,
    pub tau_root: Option<usize>,
    pub tree_leaf_count: Option<u64>,
    pub envelope_1_15855: Option<f64>,
    pub envelope_1_1504: Option<f64>,
    pub duplicate_edges: usize,
    #[serde(flatten)]
    pub extra: Map<String, Value>,
}

impl Stats {
    fn from_search(s: &SearchStats, k: usize, flags: &SearchFlags, duplicate_edges: usize) -> Self {
        let env = check_node_budget(s, k);
        let mut extra = Map::new();
        extra.insert("branch_nodes".into(), json!(s.branch_nodes));
        extra.insert("k_exhausted_leaves".into(), json!(s.k_exhausted_leaves));
        extra.insert("lp_prunes".into(), json!(s.lp_prunes));
        extra.insert("kernel_prunes".into(), json!(s.kernel_prunes));
        extra.insert("log_nodes_per_k".into(), json!(env.log_nodes_per_k));
        if flags.instrument {
            extra.insert("branches_checked".into(), json!(s.branches_checked));
            extra.insert("tau_trajectory_ok".into(), json!(s.tau_trajectory_ok));
            extra.insert("tau_drop_ok".into(), json!(s.tau_drop_ok));
            extra.insert("estimate_ok".into(), json!(s.estimate_ok));
        }
        if flags.timing {
            extra.insert("wallclock_secs".into(), json!(s.wallclock.as_secs_f64()));
        }
        Stats {
            nodes_expanded: Some(s.nodes_expanded),
            max_depth: Some(s.max_depth),
            tau_root: Some(s.tau_root),
            tree_leaf_count: Some(s.tree_leaf_count),
            envelope_1_15855: Some(env.envelope_1_15855),
            envelope_1_1504: Some(env.envelope_1_1504),
            duplicate_edges,
            extra,
        }
    }
}

/// The JSON document printed by every command.
#[derive(Debug, Serialize)]
pub struct Output {
    pub command: &'static str,
    pub answer: Option<&'static str>,
    pub cover: Option<Vec<u32>>,
    pub size: Option<usize>,
    pub k: Option<u64>,
    pub stats: Stats,
    pub warnings: Vec<String>,
    #[serde(flatten)]
    pub extra: Map<String, Value>,
}

impl Output {
    fn new(command: &'static str) -> Self {
        Output {
            command,
            answer: None,
            cover: None,
            size: None,
            k: None,
            stats: Stats::default(),
            warnings: Vec::new(),
            extra: Map::new(),
        }
    }

    fn with_input(command: &'static str, parsed: &Parsed) -> Self {
        let mut out = Self::new(command);
        out.stats.duplicate_edges = parsed.duplicate_edges;
        if parsed.duplicate_edges > 0 {
            out.warnings.push(format!(
                "{} duplicate edge lines ignored",
                parsed.duplicate_edges
            ));
        }
        out
    }

    fn set(&mut self, key: &str, value: impl Serialize) {
        self.extra.insert(
            key.into(),
            serde_json::to_value(value).expect("serializable"),
        );
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Parse { .. } | CliError::Io(_) => EXIT_PARSE,
            CliError::Resource(_) => EXIT_RESOURCE,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit(m) => CliError::Resource(m),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    let mut text = String::new();
    if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| CliError::Parse {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
    }
    Ok(text)
}

fn load_graph(path: &Path) -> Result<Parsed, CliError> {
    parse_dimacs(&read_input(path)?).map_err(|e| CliError::Parse {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn answer(a: Answer) -> &'static str {
    match a {
        Answer::Yes => "YES",
        Answer::No => "NO",
    }
}

/// `floor(ex/2) + 1` summed over the components that have edges.
fn tau_bound(g: &Graph) -> Result<usize, CliError> {
    let mut total = 0;
    for comp in g.connected_components() {
        let sub = g.induced_subgraph(&comp);
        if sub.num_edges() > 0 {
            total += tau_upper_bound(&sub)?;
        }
    }
    Ok(total)
}

/// Output of a command: a JSON document or raw text.
pub enum Rendered {
    Json(Box<Output>),
    Text(String),
}

pub fn execute(cli: Cli) -> Result<Rendered, CliError> {
    let out = match cli.command {
        Command::Solve { input, k, search } => {
            let parsed = load_graph(&input)?;
            let k_i =
                i64::try_from(k).map_err(|_| CliError::Usage(format!("k = {k} too large")))?;
            let v = vc_decide(&parsed.graph, k_i, &search.config(SearchConfig::decide()))?;
            let mut out = Output::with_input("solve", &parsed);
            out.answer = Some(answer(v.answer));
            out.cover = v.cover.as_ref().map(labels);
            out.size = v.cover.as_ref().map(|c| c.len());
            out.k = Some(k);
            out.stats = Stats::from_search(&v.stats, k as usize, &search, parsed.duplicate_edges);
            out
        }
        Command::Minimize { input, search } => {
            let parsed = load_graph(&input)?;
            let m = vc_minimum(&parsed.graph, &search.config(SearchConfig::minimize()))?;
            let mut out = Output::with_input("minimize", &parsed);
            out.answer = Some("OPTIMAL");
            out.cover = Some(labels(&m.cover));
            out.size = Some(m.size);
            out.stats = Stats::from_search(&m.stats, m.size, &search, parsed.duplicate_edges);
            out
        }
        Command::Kernelize { input, k } => {
            let parsed = load_graph(&input)?;
            let kernel = nt_kernelize(&parsed.graph, k as usize);
            let mut out = Output::with_input("kernelize", &parsed);
            out.answer = Some(match kernel.verdict {
                vc3::KernelVerdict::Yes => "YES",
                vc3::KernelVerdict::No => "NO",
                vc3::KernelVerdict::Open => "OPEN",
            });
            out.k = Some(k);
            out.cover = Some(labels(&kernel.partition.ones));
            out.size = Some(kernel.partition.ones.len());
            out.set("k_residual", kernel.k_residual);
            out.set(
                "partition",
                json!({
                    "ones": labels(&kernel.partition.ones),
                    "zeros": labels(&kernel.partition.zeros),
                    "halves": labels(&kernel.partition.halves),
                    "lp_value": kernel.partition.doubled_lp_value() as f64 / 2.0,
                }),
            );
            out.set("kernel_vertices", kernel.graph.num_vertices());
            out.set("kernel_edges", kernel.graph.num_edges());
            out.set(
                "kernel_dimacs",
                write_dimacs(&kernel.graph, parsed.num_vertices, &["kernel".to_string()]),
            );
            out
        }
        Command::Tau { input } => {
            let parsed = load_graph(&input)?;
            let g = &parsed.graph;
            let mut out = Output::with_input("tau", &parsed);
            out.set("tau", tau(g));
            out.set("ex", extra_degree_graph(g));
            out.set("circuit_rank", circuit_rank(g));
            out.set("tau_upper_bound", tau_bound(g)?);
            out.set("n", g.num_vertices());
            out.set("m", g.num_edges());
            out.set("components", g.num_components());
            out
        }
        Command::Analyze => {
            let mut out = Output::new("analyze");
            out.set("catalog", analyze_catalog()?);
            let (alpha, effective) = interleave_base(REAL_CYCLE_BASE, KERNEL_GROWTH)?;
            out.set(
                "interleave",
                json!({
                    "base": REAL_CYCLE_BASE,
                    "kernel_growth": KERNEL_GROWTH,
                    "alpha": alpha,
                    "effective_base": effective,
                }),
            );
            out
        }
        Command::Gen {
            model,
            n,
            seed,
            avg_degree,
            out: path,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (g, name) = match model {
                Model::Cubic => (random_cubic(n, &mut rng)?, "cubic"),
                Model::Maxdeg3 => {
                    if !(avg_degree.is_finite() && avg_degree >= 0.0) {
                        return Err(CliError::Usage(format!("bad --avg-degree {avg_degree}")));
                    }
                    (random_maxdeg3(n, avg_degree, &mut rng), "maxdeg3")
                }
                Model::Tree => (random_tree(n, &mut rng), "tree"),
                Model::Cycle => {
                    if n < 3 {
                        return Err(CliError::Usage(format!("a cycle needs n >= 3, got {n}")));
                    }
                    (cycle(n), "cycle")
                }
            };
            let text = write_dimacs(&g, n, &[format!("vc3 gen model={name} n={n} seed={seed}")]);
            let Some(path) = path else {
                return Ok(Rendered::Text(text));
            };
            std::fs::write(&path, &text)?;
            let mut out = Output::new("gen");
            out.set("model", name);
            out.set("n", n);
            out.set("m", g.num_edges());
            out.set("seed", seed);
            out.set("path", path.display().to_string());
            out
        }
        Command::Verify { input, cover } => {
            let parsed = load_graph(&input)?;
            let set = parse_cover(&read_input(&cover)?, parsed.num_vertices).map_err(|e| {
                CliError::Parse {
                    path: cover.display().to_string(),
                    message: e.to_string(),
                }
            })?;
            let valid = is_vertex_cover(&parsed.graph, &set);
            let mut out = Output::with_input("verify", &parsed);
            out.answer = Some(if valid { "YES" } else { "NO" });
            out.size = Some(set.len());
            out.cover = Some(labels(&set));
            out.set("valid", valid);
            out
        }
        Command::Oracle { input } => {
            let parsed = load_graph(&input)?;
            let (size, cover) = min_vc_bruteforce(&parsed.graph)?;
            let mut out = Output::with_input("oracle", &parsed);
            out.answer = Some("OPTIMAL");
            out.size = Some(size);
            out.cover = Some(labels(&cover));
            out
        }
    };
    Ok(Rendered::Json(Box::new(out)))
}

/// Parses `args`, runs the command and writes its result; returns the exit
/// code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli) {
        Ok(Rendered::Json(out)) => {
            let text = serde_json::to_string_pretty(&out).expect("serializable");
            let _ = writeln!(stdout, "{text}");
            EXIT_OK
        }
        Ok(Rendered::Text(text)) => {
            let _ = write!(stdout, "{text}");
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(stderr, "vc3: {e}");
            e.exit_code()
        }
    }
}
