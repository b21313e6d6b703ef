//! Command-line front end: load or generate a graph, run one algorithm (or
//! two side by side), write labels and counters.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, ValueEnum};
use thiserror::Error;

use crate::generate::{generate, parse_spec, GenerateError};
use crate::graph::{load_edge_list, EdgeId, Graph, GraphError};
use crate::optimized::{hot_decompose_plus_with, PeelOptions};
use crate::result::{RunStats, TrussResult};
use crate::topr::{hot_top_r, TopRResult};
use crate::{hot_decompose, oracle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Baseline,
    Optimized,
    Topr,
    Oracle,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Baseline => "baseline",
            Algorithm::Optimized => "optimized",
            Algorithm::Topr => "topr",
            Algorithm::Oracle => "oracle",
        }
    }
}

/// Higher-order truss decomposition of an edge list.
#[derive(Debug, Clone, Parser)]
#[command(name = "hotruss", version)]
pub struct RunConfig {
    /// Edge list: one `u v` pair per line, `#` starts a comment.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Hop limit.
    #[arg(long, default_value_t = 2)]
    pub tau: u32,
    #[arg(long, value_enum, default_value_t = Algorithm::Optimized)]
    pub algorithm: Algorithm,
    /// Number of top levels (topr only).
    #[arg(long)]
    pub r: Option<u32>,
    /// Where to write results; stdout when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Where to write `key<TAB>value` counters.
    #[arg(long)]
    pub stats: Option<PathBuf>,
    /// Seed for --generate.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Recompute supports the optimized run skips and fail on any mismatch.
    #[arg(long)]
    pub self_check: bool,
    /// Write a synthetic edge list instead of decomposing: `kind:n:m` with
    /// kind uniform-random or preferential-attachment.
    #[arg(long, value_name = "KIND:N:M")]
    pub generate: Option<String>,
    /// Also run this algorithm, check that the labels agree, and report both
    /// sets of counters.
    #[arg(long)]
    pub compare: Option<Algorithm>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            input: None,
            tau: 2,
            algorithm: Algorithm::Optimized,
            r: None,
            output: None,
            stats: None,
            seed: 0,
            self_check: false,
            generate: None,
            compare: None,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Graph { path: String, source: GraphError },
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error("self-check found {0} wrong skipped supports")]
    SelfCheck(u64),
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Generate(_) => 2,
            CliError::Io { .. } | CliError::Graph { .. } => 1,
            CliError::SelfCheck(_) => 3,
            CliError::Mismatch(_) => 4,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.tau < 1 {
            return Err(CliError::Usage("--tau must be at least 1".into()));
        }
        let uses_topr = self.algorithm == Algorithm::Topr || self.compare == Some(Algorithm::Topr);
        match self.r {
            Some(0) => return Err(CliError::Usage("--r must be at least 1".into())),
            None if uses_topr && self.generate.is_none() => {
                return Err(CliError::Usage("--r is required with topr".into()))
            }
            _ => {}
        }
        if self.generate.is_none() && self.input.is_none() {
            return Err(CliError::Usage("one of --input or --generate is required".into()));
        }
        Ok(())
    }
}

/// What one algorithm produced.
#[derive(Debug, Clone)]
pub enum Labels {
    Full(TrussResult),
    Top(TopRResult),
}

impl Labels {
    /// `label_u<TAB>label_v<TAB>phi` lines sorted by label. For a top-r run
    /// only edges of the returned trusses appear.
    pub fn to_tsv(&self, g: &Graph) -> String {
        match self {
            Labels::Full(r) => r.to_tsv(g),
            Labels::Top(t) => {
                let mut rows: Vec<(u64, u64, u32)> = t
                    .edges()
                    .iter()
                    .map(|&e| {
                        let (a, b) = g.endpoints(e);
                        let (la, lb) = (g.label(a), g.label(b));
                        (la.min(lb), la.max(lb), t.phi(e).expect("returned edges are labelled"))
                    })
                    .collect();
                rows.sort_unstable();
                rows.iter().map(|(a, b, k)| format!("{a}\t{b}\t{k}\n")).collect()
            }
        }
    }

    pub fn k_max(&self) -> Option<u32> {
        match self {
            Labels::Full(r) => r.k_max(),
            Labels::Top(t) => t.k_max,
        }
    }

    /// The top `r` levels as `k -> sorted truss edges`.
    fn top_slice(&self, r: u32) -> BTreeMap<u32, Vec<EdgeId>> {
        match self {
            Labels::Full(res) => res.top_levels(r),
            Labels::Top(t) => t.trusses.clone(),
        }
    }
}

/// One timed run.
#[derive(Debug, Clone)]
pub struct Execution {
    pub algorithm: Algorithm,
    pub labels: Labels,
    pub stats: RunStats,
    pub wall_time_ms: f64,
}

impl Execution {
    /// Counter lines; everything but `wall_time_ms` is deterministic.
    pub fn stats_kv(&self, g: &Graph, tau: u32) -> Vec<(String, String)> {
        let mut kv = vec![
            ("algorithm".to_string(), self.algorithm.name().to_string()),
            ("tau".to_string(), tau.to_string()),
            ("vertices".to_string(), g.alive_vertex_count().to_string()),
            ("edges".to_string(), g.edge_count().to_string()),
            (
                "k_max".to_string(),
                self.labels.k_max().map_or("none".to_string(), |k| k.to_string()),
            ),
        ];
        kv.extend(self.stats.to_kv());
        kv.push(("wall_time_ms".to_string(), format!("{:.3}", self.wall_time_ms)));
        kv
    }
}

pub fn execute(g: &Graph, algorithm: Algorithm, tau: u32, r: Option<u32>, self_check: bool) -> Execution {
    let start = Instant::now();
    let (labels, stats) = match algorithm {
        Algorithm::Baseline => {
            let (res, stats) = hot_decompose(g, tau);
            (Labels::Full(res), stats)
        }
        Algorithm::Optimized => {
            let (res, stats) = hot_decompose_plus_with(g, tau, PeelOptions { self_check });
            (Labels::Full(res), stats)
        }
        Algorithm::Topr => {
            let (res, stats) = hot_top_r(g, tau, r.unwrap_or(1));
            (Labels::Top(res), stats)
        }
        Algorithm::Oracle => (Labels::Full(oracle::decompose_naive(g, tau)), RunStats::default()),
    };
    Execution {
        algorithm,
        labels,
        stats,
        wall_time_ms: start.elapsed().as_secs_f64() * 1000.0,
    }
}

/// Whether two runs agree: full labelings edge for edge, or the top-`r`
/// slice when either side is a top-r run.
pub fn agree(a: &Labels, b: &Labels, r: Option<u32>) -> bool {
    match (a, b) {
        (Labels::Full(x), Labels::Full(y)) => x.phi_table() == y.phi_table(),
        _ => {
            let r = r.unwrap_or(1);
            let norm = |m: BTreeMap<u32, Vec<EdgeId>>| -> BTreeMap<u32, Vec<EdgeId>> {
                m.into_iter()
                    .map(|(k, mut v)| {
                        v.sort_unstable();
                        (k, v)
                    })
                    .collect()
            };
            a.k_max() == b.k_max() && norm(a.top_slice(r)) == norm(b.top_slice(r))
        }
    }
}

/// Side-by-side counters for two runs.
pub fn compare_report(g: &Graph, tau: u32, a: &Execution, b: &Execution, equal: bool) -> String {
    let (ka, kb) = (a.stats_kv(g, tau), b.stats_kv(g, tau));
    let mut rows: Vec<(String, String, String)> = Vec::new();
    for (key, va) in &ka {
        let vb = kb
            .iter()
            .find(|(k, _)| k == key)
            .map_or("-".to_string(), |(_, v)| v.clone());
        rows.push((key.clone(), va.clone(), vb));
    }
    for (key, vb) in &kb {
        if !ka.iter().any(|(k, _)| k == key) {
            rows.push((key.clone(), "-".to_string(), vb.clone()));
        }
    }
    let mut out = format!("metric\t{}\t{}\n", a.algorithm.name(), b.algorithm.name());
    for (k, x, y) in rows.iter().filter(|(k, _, _)| k != "algorithm") {
        out.push_str(&format!("{k}\t{x}\t{y}\n"));
    }
    out.push_str(&format!("labels_equal\t{equal}\n"));
    out
}

fn write_to(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

pub fn load(path: &Path) -> Result<Graph, CliError> {
    let shown = path.display().to_string();
    let file = File::open(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    let (g, report) = load_edge_list(BufReader::new(file)).map_err(|source| CliError::Graph {
        path: shown.clone(),
        source,
    })?;
    if report.self_loops > 0 || report.duplicates > 0 {
        eprintln!(
            "{shown}: skipped {} self-loops and {} duplicate edges",
            report.self_loops, report.duplicates
        );
    }
    Ok(g)
}

pub fn run(config: &RunConfig) -> Result<(), CliError> {
    config.validate()?;
    if let Some(spec) = &config.generate {
        let (kind, n, m) = parse_spec(spec)?;
        return write_to(config.output.as_deref(), &generate(kind, n, m, config.seed)?);
    }
    let input = config.input.as_deref().expect("validated");
    let g = load(input)?;
    let first = execute(&g, config.algorithm, config.tau, config.r, config.self_check);

    if let Some(other) = config.compare {
        let second = execute(&g, other, config.tau, config.r, config.self_check);
        let equal = agree(&first.labels, &second.labels, config.r);
        write_to(
            config.output.as_deref(),
            &compare_report(&g, config.tau, &first, &second, equal),
        )?;
        check_self(&first)?;
        check_self(&second)?;
        if !equal {
            return Err(CliError::Mismatch(format!(
                "{} and {} disagree",
                first.algorithm.name(),
                second.algorithm.name()
            )));
        }
        return Ok(());
    }

    write_to(config.output.as_deref(), &first.labels.to_tsv(&g))?;
    if let Some(path) = &config.stats {
        let text: String = first
            .stats_kv(&g, config.tau)
            .iter()
            .map(|(k, v)| format!("{k}\t{v}\n"))
            .collect();
        write_to(Some(path), &text)?;
    }
    check_self(&first)
}

fn check_self(run: &Execution) -> Result<(), CliError> {
    match run.stats.self_check_failures {
        0 => Ok(()),
        n => Err(CliError::SelfCheck(n)),
    }
}
