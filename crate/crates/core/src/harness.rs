//! Command-line surface: single runs print one JSON object, `corpus` writes a
//! CSV with one row per network and statistic.
//!
//! Exit codes: 0 ok, 1 I/O or other failure, 2 malformed input or
//! arguments, 3 time limit, 4 memory cap.

use std::fs;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{mpsc, Arc, Mutex};
use std::thread;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::control::Control;
use crate::counter::{self, run_plan, CountPlan};
use crate::error::{Error, Result};
use crate::graph::{degeneracy_order, read_edge_list, Graph, LoadedGraph};
use crate::ladder::ladder_approx_with;
use crate::pattern::{analyze, Pattern};
use crate::vc::{self, VcConfig, VcMode};

pub const SCHEMA: u32 = 1;

/// Extra time granted to a solver after its deadline before it is abandoned.
pub const GRACE: Duration = Duration::from_millis(500);

#[derive(Debug, Parser)]
#[command(name = "degpat", version, about = "Pattern statistics for degenerate graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct InputArgs {
    /// Edge-list file: two tokens per line, `#`/`%` comments.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Edgelist,
}

#[derive(Debug, Args, Clone, Default)]
pub struct Limits {
    /// Wall-clock limit in seconds.
    #[arg(long)]
    pub timeout: Option<f64>,
    #[arg(long)]
    pub max_mem_mb: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Count,
    Decide,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertex, edge and degeneracy counts.
    Stats {
        #[command(flatten)]
        input: InputArgs,
    },
    /// VC-dimension of the neighbourhood set system.
    Vcdim {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, conflicts_with_all = ["approx", "linear"])]
        exact: bool,
        /// Approximation factor in (0, 1].
        #[arg(long, alias = "epsilon", conflicts_with = "linear")]
        approx: Option<f64>,
        #[arg(long)]
        linear: bool,
        #[arg(long, default_value_t = 1.0)]
        brute_force_factor: f64,
        #[command(flatten)]
        limits: Limits,
    },
    /// Count `K_{s,t}`, or find the largest balanced biclique without `--s/--t`.
    Biclique {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, requires = "t")]
        s: Option<usize>,
        #[arg(long, requires = "s")]
        t: Option<usize>,
        #[command(flatten)]
        limits: Limits,
    },
    /// Count co-matchings of size `--t`, or find the largest one.
    Comatching {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        t: Option<usize>,
        #[command(flatten)]
        limits: Limits,
    },
    /// Ladder of at least half the ladder index, with certificate.
    Ladder {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        limits: Limits,
    },
    /// Count or detect an arbitrary bipartite pattern.
    Pattern {
        #[command(flatten)]
        input: InputArgs,
        /// Pattern file or `builtin:<name>:<sizes>`.
        #[arg(long)]
        pattern: String,
        #[arg(long, value_enum, default_value_t = Mode::Count)]
        mode: Mode,
        #[command(flatten)]
        limits: Limits,
    },
    /// Write the graph whose VC-dimension reaches `k` iff the host has a `k`-clique.
    Genreduction {
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run statistics over every edge-list file in a directory.
    Corpus {
        #[arg(long)]
        dir: PathBuf,
        /// Per-task limit in seconds.
        #[arg(long, default_value_t = 600.0)]
        timeout: f64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// CSV destination; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = Statistic::ALL)]
        stats: Vec<Statistic>,
        /// Leave the `ms` column empty so reruns are byte-identical.
        #[arg(long)]
        omit_timings: bool,
        #[arg(long)]
        max_mem_mb: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistic {
    Vc,
    Ladder,
    Biclique,
    Comatching,
}

impl Statistic {
    pub const ALL: [Statistic; 4] = [Statistic::Vc, Statistic::Ladder, Statistic::Biclique, Statistic::Comatching];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Vc => "vc",
            Statistic::Ladder => "ladder",
            Statistic::Biclique => "biclique",
            Statistic::Comatching => "comatching",
        }
    }

    pub fn compute(self, g: &Graph, ctl: &Control) -> Result<usize> {
        ctl.check()?;
        match self {
            Statistic::Vc => Ok(vc::vc_exact_with(g, &VcConfig::default(), ctl)?.vc),
            Statistic::Ladder => Ok(ladder_approx_with(g, ctl)?.k),
            Statistic::Biclique => counter::max_biclique_with(g, ctl),
            Statistic::Comatching => counter::max_comatching_with(g, ctl),
        }
    }
}

impl std::fmt::Display for Statistic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Timeout,
    MemoryCap,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Timeout => "timeout",
            Status::MemoryCap => "memory-cap",
            Status::Error => "error",
        }
    }

    fn of(err: &Error) -> Status {
        match err {
            Error::Timeout => Status::Timeout,
            Error::MemoryCap(_) => Status::MemoryCap,
            _ => Status::Error,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunRecord {
    pub network: String,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub degeneracy: Option<usize>,
    pub stat: String,
    pub value: Option<String>,
    pub ms: Option<u64>,
    pub status: Status,
}

/// Runs `f` on its own thread with a deadline. The solver is asked to stop
/// at the deadline and abandoned if it has not returned `GRACE` later.
pub fn run_with_deadline<T, F>(timeout: Option<Duration>, max_mem_mb: Option<u64>, f: F) -> Result<T>
where
    T: Send + 'static,
    F: FnOnce(&Control) -> Result<T> + Send + 'static,
{
    let ctl = Control::unbounded()
        .deadline(timeout.map(|t| Instant::now() + t))
        .max_mem_mb(max_mem_mb);
    ctl.check()?;
    let (tx, rx) = mpsc::channel();
    let worker = ctl.clone();
    thread::spawn(move || {
        let _ = tx.send(f(&worker));
    });
    let received = match timeout {
        Some(t) => rx.recv_timeout(t + GRACE).map_err(|e| match e {
            mpsc::RecvTimeoutError::Timeout => Error::Timeout,
            mpsc::RecvTimeoutError::Disconnected => Error::Solver("worker thread panicked".into()),
        }),
        None => rx.recv().map_err(|_| Error::Solver("worker thread panicked".into())),
    };
    if received.is_err() {
        ctl.cancel();
    }
    received?
}

/// Computes one statistic for one network under a time limit.
pub fn run_statistic(
    network: &str,
    g: Arc<Graph>,
    degeneracy: usize,
    stat: Statistic,
    timeout: Duration,
    max_mem_mb: Option<u64>,
) -> RunRecord {
    let start = Instant::now();
    let graph = Arc::clone(&g);
    let outcome = run_with_deadline(Some(timeout), max_mem_mb, move |ctl| stat.compute(&graph, ctl));
    let ms = start.elapsed().as_millis() as u64;
    let (value, status) = match outcome {
        Ok(v) => (Some(v.to_string()), Status::Ok),
        Err(e) => (None, Status::of(&e)),
    };
    RunRecord {
        network: network.to_string(),
        n: Some(g.n()),
        m: Some(g.m()),
        degeneracy: Some(degeneracy),
        stat: stat.name().to_string(),
        value,
        ms: Some(ms),
        status,
    }
}

#[derive(Debug, Clone)]
pub struct CorpusOptions {
    pub timeout: Duration,
    pub jobs: usize,
    pub stats: Vec<Statistic>,
    pub max_mem_mb: Option<u64>,
}

impl Default for CorpusOptions {
    fn default() -> Self {
        CorpusOptions {
            timeout: Duration::from_secs(600),
            jobs: 1,
            stats: Statistic::ALL.to_vec(),
            max_mem_mb: None,
        }
    }
}

/// Regular, non-hidden files of `dir` in name order.
pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.is_file() && !p.file_name().is_some_and(|n| n.to_string_lossy().starts_with('.')))
        .collect();
    files.sort();
    Ok(files)
}

pub fn load_graph(path: &Path) -> Result<LoadedGraph> {
    read_edge_list(BufReader::new(fs::File::open(path)?))
}

fn run_network(path: &Path, opts: &CorpusOptions) -> Vec<RunRecord> {
    let network = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    match load_graph(path) {
        Ok(loaded) => {
            let g = Arc::new(loaded.graph);
            let d = degeneracy_order(&g).degeneracy();
            opts.stats
                .iter()
                .map(|&stat| run_statistic(&network, Arc::clone(&g), d, stat, opts.timeout, opts.max_mem_mb))
                .collect()
        }
        Err(e) => {
            eprintln!("{network}: {e}");
            opts.stats
                .iter()
                .map(|stat| RunRecord {
                    network: network.clone(),
                    n: None,
                    m: None,
                    degeneracy: None,
                    stat: stat.name().to_string(),
                    value: None,
                    ms: None,
                    status: Status::Error,
                })
                .collect()
        }
    }
}

/// Runs every statistic on every file, up to `jobs` networks at a time. Rows
/// come back in file order and statistic order whatever the job count.
pub fn run_corpus(dir: &Path, opts: &CorpusOptions) -> Result<Vec<RunRecord>> {
    let files = corpus_files(dir)?;
    let slots: Mutex<Vec<Option<Vec<RunRecord>>>> = Mutex::new(vec![None; files.len()]);
    let next = AtomicUsize::new(0);
    thread::scope(|scope| {
        for _ in 0..opts.jobs.max(1).min(files.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                let Some(path) = files.get(i) else { break };
                let rows = run_network(path, opts);
                slots.lock().expect("no worker panics while holding the lock")[i] = Some(rows);
            });
        }
    });
    Ok(slots.into_inner().expect("lock not poisoned").into_iter().flatten().flatten().collect())
}

pub const CSV_HEADER: [&str; 8] = ["network", "n", "m", "degeneracy", "stat", "value", "ms", "status"];

/// Writes the records followed by one `#completed` row per statistic
/// (omitted when there are no records).
pub fn write_csv<W: Write>(records: &[RunRecord], out: W, omit_timings: bool) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let csv_err = |e: csv::Error| Error::Io(std::io::Error::other(e));
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
    for r in records {
        let ms = if omit_timings { String::new() } else { r.ms.map(|x| x.to_string()).unwrap_or_default() };
        w.write_record([
            r.network.clone(),
            opt(r.n),
            opt(r.m),
            opt(r.degeneracy),
            r.stat.clone(),
            r.value.clone().unwrap_or_default(),
            ms,
            r.status.as_str().to_string(),
        ])
        .map_err(csv_err)?;
    }
    let mut stats: Vec<&str> = Vec::new();
    for r in records {
        if !stats.contains(&r.stat.as_str()) {
            stats.push(&r.stat);
        }
    }
    for stat in stats {
        let done = records.iter().filter(|r| r.stat == stat && r.status == Status::Ok).count();
        let total = records.iter().filter(|r| r.stat == stat).count();
        w.write_record(["#completed", "", "", "", stat, &done.to_string(), "", &format!("summary of {total}")])
            .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

pub fn edge_list_text(g: &Graph) -> String {
    let mut s = format!("# n={} m={}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// `builtin:` specs, pattern files, and bare built-in specs, in that order.
pub fn load_pattern(spec: &str) -> Result<Pattern> {
    if let Some(rest) = spec.strip_prefix("builtin:") {
        return Pattern::from_builtin(rest);
    }
    let path = Path::new(spec);
    if path.is_file() {
        return Pattern::from_json(&fs::read_to_string(path)?);
    }
    Pattern::from_builtin(spec)
}

fn limits(l: &Limits) -> Result<Option<Duration>> {
    match l.timeout {
        None => Ok(None),
        Some(s) if s.is_finite() && s >= 0.0 => Ok(Some(Duration::from_secs_f64(s))),
        Some(s) => Err(Error::InvalidArgument(format!("bad timeout {s}"))),
    }
}

fn base(command: &str, input: &Path, loaded: &LoadedGraph, d: usize) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command));
    m.insert("input".into(), json!(input.display().to_string()));
    m.insert("n".into(), json!(loaded.graph.n()));
    m.insert("m".into(), json!(loaded.graph.m()));
    m.insert("degeneracy".into(), json!(d));
    m
}

/// Outcome of one command: the JSON to print and the exit code.
pub struct CommandOutput {
    pub json: Value,
    pub exit_code: i32,
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. }
        | Error::InvalidArgument(_)
        | Error::UnsupportedPattern(_)
        | Error::PatternTooLarge { .. }
        | Error::Json(_)
        | Error::UnknownVertex(_)
        | Error::UnsortedKey => 2,
        Error::Timeout => 3,
        Error::MemoryCap(_) => 4,
        Error::Capacity { .. } | Error::Solver(_) | Error::Io(_) => 1,
    }
}

/// Executes a parsed command. Solver failures come back as a JSON object
/// with a non-ok status; only unusable input produces `Err`.
pub fn execute(command: Command) -> Result<CommandOutput> {
    match command {
        Command::Stats { input } => {
            let loaded = load_graph(&input.input)?;
            let d = degeneracy_order(&loaded.graph).degeneracy();
            let mut m = base("stats", &input.input, &loaded, d);
            m.insert("duplicate_edges".into(), json!(loaded.duplicate_edges));
            m.insert("self_loops".into(), json!(loaded.self_loops));
            m.insert("status".into(), json!("ok"));
            Ok(CommandOutput {
                json: Value::Object(m),
                exit_code: 0,
            })
        }
        Command::Vcdim {
            input,
            exact: _,
            approx,
            linear,
            brute_force_factor,
            limits: l,
        } => solve(&input, "vcdim", &l, move |g, ctl| {
            let res = match (approx, linear) {
                (Some(eps), _) => vc::vc_approx_with(&g, eps, ctl)?,
                (None, true) => vc::vc_approx_linear_with(&g, ctl)?,
                (None, false) => vc::vc_exact_with(&g, &VcConfig { brute_force_factor }, ctl)?,
            };
            Ok(res)
        }, |res, loaded, m| {
            let mode = match res.mode {
                VcMode::Exact => "exact".to_string(),
                VcMode::Approx { epsilon } => format!("approx({epsilon})"),
                VcMode::Linear => "linear".to_string(),
            };
            m.insert("mode".into(), json!(mode));
            m.insert("vc".into(), json!(res.vc));
            m.insert("shattered_set".into(), json!(loaded.labels_of(&res.shattered_set)));
            let witnesses: Vec<Value> = res
                .witnesses
                .iter()
                .map(|w| json!({"subset": loaded.labels_of(&w.subset), "witness": loaded.label(w.vertex)}))
                .collect();
            m.insert("witnesses".into(), json!(witnesses));
            m.insert("sets_tested".into(), json!(res.sets_tested));
        }),
        Command::Biclique { input, s, t, limits: l } => solve(&input, "biclique", &l, move |g, ctl| {
            Ok(match (s, t) {
                (Some(s), Some(t)) => {
                    let r = counter::count_bicliques_with(&g, s.max(t), s.min(t), ctl)?;
                    (Some((s, t, r.count.to_string(), r.candidates_examined)), None)
                }
                _ => (None, Some(counter::max_biclique_with(&g, ctl)?)),
            })
        }, |res, _, m| match res {
            (Some((s, t, count, examined)), _) => {
                m.insert("s".into(), json!(s));
                m.insert("t".into(), json!(t));
                m.insert("count".into(), json!(count));
                m.insert("candidates_examined".into(), json!(examined));
            }
            (_, max) => {
                m.insert("max_t".into(), json!(max));
            }
        }),
        Command::Comatching { input, t, limits: l } => solve(&input, "comatching", &l, move |g, ctl| {
            Ok(match t {
                Some(t) => {
                    let r = counter::count_comatchings_with(&g, t, ctl)?;
                    (Some((t, r.count.to_string(), r.candidates_examined)), None)
                }
                None => (None, Some(counter::max_comatching_with(&g, ctl)?)),
            })
        }, |res, _, m| match res {
            (Some((t, count, examined)), _) => {
                m.insert("t".into(), json!(t));
                m.insert("count".into(), json!(count));
                m.insert("candidates_examined".into(), json!(examined));
            }
            (_, max) => {
                m.insert("max_t".into(), json!(max));
            }
        }),
        Command::Ladder { input, limits: l } => solve(&input, "ladder", &l, |g, ctl| ladder_approx_with(&g, ctl), |res, loaded, m| {
            let (a, b) = res.sequences();
            m.insert("k".into(), json!(res.k));
            m.insert("a".into(), json!(loaded.labels_of(&a)));
            m.insert("b".into(), json!(loaded.labels_of(&b)));
            let levels: Vec<Value> = res
                .levels
                .iter()
                .map(|l| json!({"set": loaded.labels_of(&l.set), "witness": loaded.label(l.witness)}))
                .collect();
            m.insert("levels".into(), json!(levels));
        }),
        Command::Pattern {
            input,
            pattern,
            mode,
            limits: l,
        } => {
            let p = load_pattern(&pattern)?;
            let lc = analyze(&p)?.lc;
            let plan = CountPlan::with_cover_bound(&p, lc)?;
            let spec = pattern.clone();
            solve(&input, "pattern", &l, move |g, ctl| {
                run_plan(&degeneracy_order(&g), &plan, ctl, mode == Mode::Decide)
            }, move |res, _, m| {
                m.insert("pattern".into(), json!(spec));
                m.insert("lc".into(), json!(lc));
                match mode {
                    Mode::Count => {
                        m.insert("mode".into(), json!("count"));
                        m.insert("count".into(), json!(res.count.to_string()));
                    }
                    Mode::Decide => {
                        m.insert("mode".into(), json!("decide"));
                        m.insert("present".into(), json!(res.count > num_bigint::BigUint::ZERO));
                    }
                }
                m.insert("candidates_examined".into(), json!(res.candidates_examined));
            })
        }
        Command::Genreduction { host, k, out } => {
            let loaded = load_graph(&host)?;
            let g = vc::clique_reduction(&loaded.graph, k)?;
            fs::write(&out, edge_list_text(&g))?;
            Ok(CommandOutput {
                json: json!({
                    "schema": SCHEMA,
                    "command": "genreduction",
                    "host": host.display().to_string(),
                    "k": k,
                    "n": g.n(),
                    "m": g.m(),
                    "out": out.display().to_string(),
                    "status": "ok",
                }),
                exit_code: 0,
            })
        }
        Command::Corpus {
            dir,
            timeout,
            jobs,
            out,
            stats,
            omit_timings,
            max_mem_mb,
        } => {
            if !(timeout.is_finite() && timeout >= 0.0) {
                return Err(Error::InvalidArgument(format!("bad timeout {timeout}")));
            }
            let opts = CorpusOptions {
                timeout: Duration::from_secs_f64(timeout),
                jobs,
                stats,
                max_mem_mb,
            };
            let records = run_corpus(&dir, &opts)?;
            match &out {
                Some(path) => write_csv(&records, fs::File::create(path)?, omit_timings)?,
                None => write_csv(&records, std::io::stdout().lock(), omit_timings)?,
            }
            let completed: serde_json::Map<String, Value> = opts
                .stats
                .iter()
                .map(|s| {
                    let done = records.iter().filter(|r| r.stat == s.name() && r.status == Status::Ok).count();
                    (s.name().to_string(), json!(done))
                })
                .collect();
            let networks = records.len() / opts.stats.len().max(1);
            let summary = json!({
                "schema": SCHEMA,
                "command": "corpus",
                "networks": networks,
                "rows": records.len(),
                "completed": completed,
                "out": out.map(|p| p.display().to_string()),
                "status": "ok",
            });
            Ok(CommandOutput {
                json: summary,
                exit_code: 0,
            })
        }
    }
}

/// Loads the input, runs `solver` under the limits and renders its result
/// with `render` into the common JSON envelope.
fn solve<T, S, R>(input: &InputArgs, command: &str, l: &Limits, solver: S, render: R) -> Result<CommandOutput>
where
    T: Send + 'static,
    S: FnOnce(Arc<Graph>, &Control) -> Result<T> + Send + 'static,
    R: FnOnce(T, &LoadedGraph, &mut serde_json::Map<String, Value>),
{
    let timeout = limits(l)?;
    let loaded = load_graph(&input.input)?;
    let d = degeneracy_order(&loaded.graph).degeneracy();
    let mut m = base(command, &input.input, &loaded, d);
    let g = Arc::new(loaded.graph.clone());
    let start = Instant::now();
    let outcome = run_with_deadline(timeout, l.max_mem_mb, move |ctl| solver(g, ctl));
    m.insert("elapsed_ms".into(), json!(start.elapsed().as_millis() as u64));
    let exit_code = match outcome {
        Ok(res) => {
            render(res, &loaded, &mut m);
            m.insert("status".into(), json!("ok"));
            0
        }
        Err(e) => {
            m.insert("status".into(), json!(Status::of(&e).as_str()));
            m.insert("error".into(), json!(e.to_string()));
            exit_code(&e)
        }
    };
    Ok(CommandOutput {
        json: Value::Object(m),
        exit_code,
    })
}

/// Entry point shared by the binary: parses `args`, prints the JSON result
/// and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(out) => {
            println!("{}", serde_json::to_string_pretty(&out.json).expect("json value serializes"));
            out.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deadline_wrapper() {
        assert_eq!(run_with_deadline(None, None, |_| Ok(7)).unwrap(), 7);
        let r: Result<()> = run_with_deadline(Some(Duration::ZERO), None, |_| Ok(()));
        assert!(matches!(r, Err(Error::Timeout)));
        let start = Instant::now();
        let r: Result<()> = run_with_deadline(Some(Duration::from_millis(50)), None, |_| {
            thread::sleep(Duration::from_secs(5));
            Ok(())
        });
        assert!(matches!(r, Err(Error::Timeout)));
        assert!(start.elapsed() < Duration::from_secs(2));
    }

    #[test]
    fn csv_layout() {
        let mut buf = Vec::new();
        write_csv(&[], &mut buf, false).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "network,n,m,degeneracy,stat,value,ms,status\n");
        let rec = RunRecord {
            network: "p3".into(),
            n: Some(3),
            m: Some(2),
            degeneracy: Some(1),
            stat: "vc".into(),
            value: Some("1".into()),
            ms: Some(4),
            status: Status::Ok,
        };
        let mut buf = Vec::new();
        write_csv(&[rec], &mut buf, true).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("\np3,3,2,1,vc,1,,ok\n"));
        assert!(text.ends_with("#completed,,,,vc,1,,summary of 1\n"));
    }

    #[test]
    fn pattern_specs() {
        assert!(load_pattern("builtin:ladder:3").is_ok());
        assert!(load_pattern("comatching:2").is_ok());
        assert!(load_pattern("/nonexistent/file.json").is_err());
    }
}
