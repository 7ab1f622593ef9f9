//! Command-line surface.
//!
//! Subcommands: `compare` two edge-list graphs, `benchmark` a preset or JSON
//! config, `anomaly` over a dynamic graph, `generate` ensemble samples, and
//! `convert` for correlation-matrix ingestion. Exit codes are stable for
//! scripting: 0 success, 2 parse/parameter errors, 3 size mismatch or
//! disconnected input, 4 degenerate null, 5 zero-mean series, 6 sampler
//! retries exhausted.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;

use netdist_core::anomaly::{self, GraphSequence};
use netdist_core::distances::{self, DistanceKind, DistanceSpec};
use netdist_core::experiment::{box_stats, BoxStats, ExperimentConfig, ScaledSampleSet};
use netdist_core::generators::{self, EnsembleSpec, Model};
use netdist_core::graph::{bucket_contacts, graph_from_correlation, DegreeSequence};
use netdist_core::linalg::{KCount, Representation};
use netdist_core::rng::Seed;

use crate::formats;
use crate::manifest::{PhaseTimer, RunManifest};
use crate::presets;
use crate::runner;
use crate::{CliError, CliResult};

#[derive(Parser)]
#[command(
    name = "netdist",
    version,
    about = "Graph distances, ensemble benchmarks, and dynamic-graph anomaly detection"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute distances between two edge-list graphs
    Compare(CompareArgs),
    /// Run a null-vs-alternative ensemble benchmark
    Benchmark(BenchmarkArgs),
    /// Consecutive-distance series over a dynamic graph
    Anomaly(AnomalyArgs),
    /// Sample graphs from an ensemble into edge-list files
    Generate(GenerateArgs),
    /// Convert other graph encodings to edge lists
    Convert(ConvertArgs),
}

#[derive(Args)]
struct DistanceFlags {
    /// Comma-separated distance ids (adjacency, laplacian,
    /// normalized_laplacian, edit, resistance, resistance_renormalized,
    /// deltacon, netsimile)
    #[arg(long, value_delimiter = ',')]
    distances: Vec<String>,
    /// Eigenvalue count for spectral distances: an integer or "all"
    #[arg(long, default_value = "all")]
    k: String,
    /// l_p exponent for spectral comparison: a real >= 1 or "inf"
    #[arg(long, default_value = "2")]
    p_norm: String,
    /// DeltaCon epsilon: a positive real or "auto"
    #[arg(long, default_value = "auto")]
    eps: String,
    /// Renormalized-resistance penalty: a positive real or "auto" (= n)
    #[arg(long, default_value = "auto")]
    penalty: String,
}

impl DistanceFlags {
    fn parse_k(&self) -> CliResult<KCount> {
        if self.k == "all" {
            return Ok(KCount::All);
        }
        self.k
            .parse::<usize>()
            .map(KCount::First)
            .map_err(|_| CliError::Parse(format!("--k must be an integer or \"all\", got {:?}", self.k)))
    }

    fn parse_p_norm(&self) -> CliResult<f64> {
        if self.p_norm == "inf" || self.p_norm == "infinity" {
            return Ok(f64::INFINITY);
        }
        self.p_norm
            .parse::<f64>()
            .map_err(|_| CliError::Parse(format!("--p-norm must be a real or \"inf\", got {:?}", self.p_norm)))
    }

    fn parse_eps(&self) -> CliResult<Option<f64>> {
        if self.eps == "auto" {
            return Ok(None);
        }
        self.eps
            .parse::<f64>()
            .map(Some)
            .map_err(|_| CliError::Parse(format!("--eps must be a real or \"auto\", got {:?}", self.eps)))
    }

    fn parse_penalty(&self) -> CliResult<Option<f64>> {
        if self.penalty == "auto" {
            return Ok(None);
        }
        self.penalty
            .parse::<f64>()
            .map(Some)
            .map_err(|_| {
                CliError::Parse(format!("--penalty must be a real or \"auto\", got {:?}", self.penalty))
            })
    }

    /// Resolve the requested distance kinds (all eight when the list is
    /// empty) into full specs with the shared hyperparameters applied.
    fn specs(&self, default_all: bool) -> CliResult<Vec<DistanceSpec>> {
        let kinds: Vec<DistanceKind> = if self.distances.is_empty() {
            if !default_all {
                return Err(CliError::Parse("no distances requested".into()));
            }
            DistanceKind::ALL.to_vec()
        } else {
            self.distances
                .iter()
                .map(|name| {
                    DistanceKind::from_id(name.trim())
                        .ok_or_else(|| CliError::Parse(format!("unknown distance {name:?}")))
                })
                .collect::<CliResult<Vec<_>>>()?
        };
        let k = self.parse_k()?;
        let p_norm = self.parse_p_norm()?;
        let eps = self.parse_eps()?;
        let penalty = self.parse_penalty()?;
        let specs = kinds
            .into_iter()
            .map(|kind| {
                let mut spec = DistanceSpec::new(kind).with_k(k).with_p_norm(p_norm);
                spec.eps = eps;
                spec.penalty = penalty;
                spec
            })
            .collect::<Vec<_>>();
        for spec in &specs {
            spec.validate()?;
        }
        Ok(specs)
    }

    fn params_json(&self) -> serde_json::Value {
        json!({
            "k": self.k,
            "p_norm": self.p_norm,
            "eps": self.eps,
            "penalty": self.penalty,
        })
    }
}

#[derive(Args)]
struct CompareArgs {
    /// First edge-list file
    graph1: PathBuf,
    /// Second edge-list file
    graph2: PathBuf,
    /// Compute all eight distances (default when --distances is absent)
    #[arg(long)]
    all: bool,
    #[command(flatten)]
    flags: DistanceFlags,
    /// Also write the JSON report here
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchmarkArgs {
    /// Named preset: sbm, pa, pa-vs-rddg, ws, lattice
    #[arg(long, conflicts_with = "config")]
    preset: Option<String>,
    /// JSON experiment config (see README for the schema)
    #[arg(long)]
    config: Option<PathBuf>,
    /// Master seed; falls back to NETDIST_SEED, then 0
    #[arg(long)]
    seed: Option<u64>,
    /// Sample count override
    #[arg(long)]
    samples: Option<usize>,
    /// Worker threads (results are independent of this)
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Output directory
    #[arg(long, default_value = "netdist-results")]
    out: PathBuf,
}

#[derive(Args)]
struct AnomalyArgs {
    /// Contact-event CSV with header t,u,v
    #[arg(long, conflicts_with = "edges_dir")]
    events: Option<PathBuf>,
    /// Directory of per-interval edge lists (0000.edges, 0001.edges, ...)
    #[arg(long)]
    edges_dir: Option<PathBuf>,
    /// Number of time intervals (events mode)
    #[arg(long)]
    intervals: Option<usize>,
    /// Bucketing window start (default: earliest event)
    #[arg(long)]
    t_start: Option<f64>,
    /// Bucketing window end, exclusive (default: latest event + 1)
    #[arg(long)]
    t_end: Option<f64>,
    /// Vertex count (default: max id + 1 over the events)
    #[arg(long)]
    n: Option<usize>,
    #[command(flatten)]
    flags: DistanceFlags,
    /// How many top anomalies to print per distance
    #[arg(long, default_value_t = 5)]
    top: usize,
    /// Output directory
    #[arg(long, default_value = "netdist-anomaly")]
    out: PathBuf,
}

#[derive(Args)]
struct GenerateArgs {
    /// Model id: gnp, sbm2, preferential_attachment, watts_strogatz,
    /// random_degree_sequence, lattice2d
    #[arg(long)]
    model: String,
    /// Vertex count (inferred for lattice2d and random_degree_sequence)
    #[arg(long)]
    n: Option<usize>,
    /// Edge probability (gnp), within-community probability (sbm2)
    #[arg(long)]
    p: Option<f64>,
    /// Cross-community probability (sbm2)
    #[arg(long)]
    q: Option<f64>,
    /// Attachments per arriving vertex (preferential_attachment)
    #[arg(long)]
    l: Option<usize>,
    /// Ring neighbors, even (watts_strogatz)
    #[arg(long)]
    k_ring: Option<usize>,
    /// Rewiring probability (watts_strogatz)
    #[arg(long)]
    beta: Option<f64>,
    /// Comma-separated target degrees (random_degree_sequence)
    #[arg(long)]
    degrees: Option<String>,
    /// Grid rows (lattice2d)
    #[arg(long)]
    rows: Option<usize>,
    /// Grid columns (lattice2d)
    #[arg(long)]
    cols: Option<usize>,
    /// Accept disconnected draws instead of redrawing
    #[arg(long)]
    allow_disconnected: bool,
    /// Number of graphs to sample
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// Master seed; falls back to NETDIST_SEED, then 0
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory
    #[arg(long, default_value = "netdist-samples")]
    out: PathBuf,
}

#[derive(Args)]
struct ConvertArgs {
    /// Dense correlation CSV (n rows of n comma-separated reals)
    #[arg(long)]
    correlation: PathBuf,
    /// Threshold in [0, 1]: keep entries with |P(u,v)| >= threshold
    #[arg(long)]
    threshold: f64,
    /// Write unit weights instead of |P(u,v)|
    #[arg(long)]
    binarize: bool,
    /// Output edge-list file
    #[arg(long)]
    out: PathBuf,
}

/// Parse the command line and run it; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("netdist: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command) -> CliResult<()> {
    match command {
        Command::Compare(args) => cmd_compare(args),
        Command::Benchmark(args) => cmd_benchmark(args),
        Command::Anomaly(args) => cmd_anomaly(args),
        Command::Generate(args) => cmd_generate(args),
        Command::Convert(args) => cmd_convert(args),
    }
}

fn resolve_seed(flag: Option<u64>) -> CliResult<u64> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("NETDIST_SEED") {
        Ok(text) => text
            .parse::<u64>()
            .map_err(|_| CliError::Parse(format!("NETDIST_SEED is not a u64: {text:?}"))),
        Err(_) => Ok(0),
    }
}

fn cmd_compare(args: CompareArgs) -> CliResult<()> {
    let g1 = formats::read_edge_list(&args.graph1)?;
    let g2 = formats::read_edge_list(&args.graph2)?;
    let specs = args.flags.specs(true)?;

    let mut values = BTreeMap::new();
    for spec in &specs {
        let d = distances::evaluate(spec, &g1, &g2)?;
        values.insert(spec.describe(), d);
    }
    let report = json!({
        "inputs": {
            "graph1": args.graph1.display().to_string(),
            "n1": g1.n(),
            "m1": g1.edge_count(),
            "graph2": args.graph2.display().to_string(),
            "n2": g2.n(),
            "m2": g2.edge_count(),
        },
        "params": args.flags.params_json(),
        "distances": values,
    });
    let text = serde_json::to_string_pretty(&report).expect("report serializes");
    println!("{text}");
    if let Some(out) = &args.out {
        fs::write(out, text)?;
    }
    Ok(())
}

/// On-disk benchmark config: an experiment plus optional eigenvalue sweeps.
#[derive(Serialize, Deserialize)]
struct BenchmarkConfigFile {
    #[serde(flatten)]
    experiment: ExperimentConfig,
    #[serde(default)]
    sweeps: Vec<SweepSpec>,
}

#[derive(Clone, Serialize, Deserialize)]
struct SweepSpec {
    representation: Representation,
    k_values: Vec<usize>,
}

#[derive(Serialize)]
struct ResultEntry {
    #[serde(flatten)]
    set: ScaledSampleSet,
    box_stats: BoxStats,
}

#[derive(Serialize)]
struct SweepResult {
    representation: Representation,
    points: Vec<SweepPoint>,
}

#[derive(Serialize)]
struct SweepPoint {
    k: usize,
    #[serde(flatten)]
    box_stats: BoxStats,
}

fn cmd_benchmark(args: BenchmarkArgs) -> CliResult<()> {
    let seed = Seed::new(resolve_seed(args.seed)?);
    let (mut experiment, sweeps, label) = match (&args.preset, &args.config) {
        (Some(name), None) => {
            let preset = presets::build(
                name,
                seed,
                args.samples.unwrap_or(presets::DEFAULT_SAMPLES),
            )
            .ok_or_else(|| {
                CliError::Parse(format!(
                    "unknown preset {name:?}; expected one of {}",
                    presets::PRESET_NAMES.join(", ")
                ))
            })?;
            let sweeps = preset
                .sweeps
                .into_iter()
                .map(|(representation, k_values)| SweepSpec {
                    representation,
                    k_values,
                })
                .collect();
            (preset.experiment, sweeps, name.clone())
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)?;
            let mut file: BenchmarkConfigFile = serde_json::from_str(&text)
                .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
            if args.seed.is_some() {
                file.experiment.seed = seed;
            }
            if let Some(samples) = args.samples {
                file.experiment.n_samples = samples;
            }
            (file.experiment, file.sweeps, path.display().to_string())
        }
        _ => {
            return Err(CliError::Parse(
                "exactly one of --preset or --config is required".into(),
            ))
        }
    };
    if let Some(samples) = args.samples {
        experiment.n_samples = samples;
    }
    experiment.validate()?;

    fs::create_dir_all(&args.out)?;
    let config_json = serde_json::to_value(&BenchmarkConfigFile {
        experiment: experiment.clone(),
        sweeps: sweeps.clone(),
    })
    .expect("config serializes");
    let mut manifest = RunManifest::new("benchmark", json!({
        "source": label,
        "threads": args.threads,
        "resolved": config_json,
    }));

    let timer = PhaseTimer::start();
    let sets = runner::run_experiment_threaded(&experiment, args.threads)?;
    timer.record(&mut manifest, "experiment");

    let timer = PhaseTimer::start();
    let mut sweep_results = Vec::new();
    for sweep in &sweeps {
        let points = runner::run_sweep_threaded(
            &experiment,
            sweep.representation,
            &sweep.k_values,
            args.threads,
        )?;
        sweep_results.push(SweepResult {
            representation: sweep.representation,
            points: points
                .into_iter()
                .map(|(k, box_stats)| SweepPoint { k, box_stats })
                .collect(),
        });
    }
    timer.record(&mut manifest, "sweeps");

    let timer = PhaseTimer::start();
    let entries: Vec<ResultEntry> = sets
        .into_iter()
        .map(|set| {
            let bs = box_stats(&set.d1_hat).expect("non-empty samples");
            ResultEntry {
                set,
                box_stats: bs,
            }
        })
        .collect();

    let results_json = serde_json::to_string_pretty(&json!({
        "results": entries,
        "sweeps": sweep_results,
    }))
    .expect("results serialize");
    fs::write(args.out.join("results.json"), results_json)?;
    fs::write(args.out.join("boxstats.csv"), boxstats_csv(&entries, &sweep_results))?;
    timer.record(&mut manifest, "write");
    manifest.write(&args.out)?;

    for entry in &entries {
        println!(
            "{:<38} median {:>9.4}  q1 {:>9.4}  q3 {:>9.4}  p5 {:>9.4}  p95 {:>9.4}",
            entry.set.distance_id,
            entry.box_stats.median,
            entry.box_stats.q1,
            entry.box_stats.q3,
            entry.box_stats.p5,
            entry.box_stats.p95,
        );
    }
    println!("wrote {}", args.out.display());
    Ok(())
}

fn csv_float(x: f64) -> String {
    format!("{x:.12e}")
}

fn boxstats_csv(entries: &[ResultEntry], sweeps: &[SweepResult]) -> String {
    let mut out = String::from("distance_id,k,median,q1,q3,p5,p95\n");
    let mut push_row = |id: &str, k: &str, b: &BoxStats| {
        out.push_str(&format!(
            "{id},{k},{},{},{},{},{}\n",
            csv_float(b.median),
            csv_float(b.q1),
            csv_float(b.q3),
            csv_float(b.p5),
            csv_float(b.p95),
        ));
    };
    for entry in entries {
        let k = if entry.set.spec.kind.is_spectral() {
            match entry.set.spec.k {
                KCount::All => "all".to_string(),
                KCount::First(k) => k.to_string(),
            }
        } else {
            String::new()
        };
        push_row(entry.set.spec.id(), &k, &entry.box_stats);
    }
    for sweep in sweeps {
        for point in &sweep.points {
            push_row(
                sweep.representation.id(),
                &point.k.to_string(),
                &point.box_stats,
            );
        }
    }
    out
}

fn cmd_anomaly(args: AnomalyArgs) -> CliResult<()> {
    let (sequence, source) = load_sequence(&args)?;
    let specs = args.flags.specs(true)?;

    fs::create_dir_all(&args.out)?;
    let mut manifest = RunManifest::new("anomaly", json!({
        "source": source,
        "intervals": sequence.len(),
        "n": sequence.graphs().first().map(netdist_core::Graph::n),
        "params": args.flags.params_json(),
        "distances": specs.iter().map(DistanceSpec::describe).collect::<Vec<_>>(),
    }));

    let timer = PhaseTimer::start();
    for spec in &specs {
        let series = anomaly::consecutive_distances(&sequence, spec)?;
        if series.auto_renormalized {
            eprintln!(
                "note: {} switched to the renormalized variant (sequence contains disconnected graphs)",
                spec.id()
            );
        }
        let mut csv = String::from("index,t_label,raw,normalized\n");
        for (i, (raw, norm)) in series.raw.iter().zip(&series.normalized).enumerate() {
            let label = sequence
                .interval_labels
                .as_ref()
                .map_or((i + 1) as f64, |labels| labels[i + 1]);
            csv.push_str(&format!("{i},{label},{},{}\n", csv_float(*raw), csv_float(*norm)));
        }
        fs::write(args.out.join(format!("{}.csv", spec.id())), csv)?;

        let peaks = anomaly::top_anomalies(&series, args.top.min(series.normalized.len()));
        let rendered: Vec<String> = peaks
            .iter()
            .map(|(i, v)| format!("{i}:{v:.3}"))
            .collect();
        println!("{:<38} top {}", series.distance_id, rendered.join(" "));
    }
    timer.record(&mut manifest, "series");
    manifest.write(&args.out)?;
    println!("wrote {}", args.out.display());
    Ok(())
}

fn load_sequence(args: &AnomalyArgs) -> CliResult<(GraphSequence, String)> {
    match (&args.events, &args.edges_dir) {
        (Some(path), None) => {
            let events = formats::read_contacts_csv(path)?;
            let intervals = args.intervals.ok_or_else(|| {
                CliError::Parse("--intervals is required with --events".into())
            })?;
            // an empty event list still buckets into N empty graphs; the
            // zero-mean series error surfaces downstream
            let t_min = events.iter().map(|e| e.t).fold(f64::INFINITY, f64::min);
            let t_max = events.iter().map(|e| e.t).fold(f64::NEG_INFINITY, f64::max);
            let t_start = args.t_start.unwrap_or(if events.is_empty() { 0.0 } else { t_min });
            let t_end = args.t_end.unwrap_or(if events.is_empty() { 1.0 } else { t_max + 1.0 });
            let n = args.n.unwrap_or_else(|| {
                events.iter().map(|e| e.u.max(e.v) + 1).max().unwrap_or(0)
            });
            let graphs = bucket_contacts(&events, t_start, t_end, intervals, n)?;
            let width = (t_end - t_start) / intervals as f64;
            let labels = (0..intervals).map(|i| t_start + i as f64 * width).collect();
            let seq = GraphSequence::new(graphs)?.with_labels(labels)?;
            Ok((seq, path.display().to_string()))
        }
        (None, Some(dir)) => {
            let graphs = formats::read_edges_dir(dir)?;
            Ok((GraphSequence::new(graphs)?, dir.display().to_string()))
        }
        _ => Err(CliError::Parse(
            "exactly one of --events or --edges-dir is required".into(),
        )),
    }
}

fn cmd_generate(args: GenerateArgs) -> CliResult<()> {
    let spec = ensemble_from_flags(&args)?;
    let seed = Seed::new(resolve_seed(args.seed)?);

    fs::create_dir_all(&args.out)?;
    let mut manifest = RunManifest::new("generate", json!({
        "spec": serde_json::to_value(&spec).expect("spec serializes"),
        "count": args.count,
        "seed": seed,
    }));

    let timer = PhaseTimer::start();
    for i in 0..args.count {
        let g = generators::sample(&spec, seed.child(i as u64))?;
        let path = args.out.join(format!("{i:04}.edges"));
        fs::write(&path, formats::write_edge_list(&g))?;
        println!("{} n={} m={}", path.display(), g.n(), g.edge_count());
    }
    timer.record(&mut manifest, "sample");
    manifest.write(&args.out)?;
    Ok(())
}

fn ensemble_from_flags(args: &GenerateArgs) -> CliResult<EnsembleSpec> {
    let require =
        |opt: Option<f64>, name: &str| opt.ok_or_else(|| CliError::Parse(format!("--{name} is required for --model {}", args.model)));
    let require_usize = |opt: Option<usize>, name: &str| {
        opt.ok_or_else(|| CliError::Parse(format!("--{name} is required for --model {}", args.model)))
    };
    let (model, n) = match args.model.as_str() {
        "gnp" => (
            Model::Gnp { p: require(args.p, "p")? },
            require_usize(args.n, "n")?,
        ),
        "sbm2" => (
            Model::Sbm2 {
                p: require(args.p, "p")?,
                q: require(args.q, "q")?,
            },
            require_usize(args.n, "n")?,
        ),
        "preferential_attachment" => (
            Model::PreferentialAttachment { l: require_usize(args.l, "l")? },
            require_usize(args.n, "n")?,
        ),
        "watts_strogatz" => (
            Model::WattsStrogatz {
                k_ring: require_usize(args.k_ring, "k-ring")?,
                beta: require(args.beta, "beta")?,
            },
            require_usize(args.n, "n")?,
        ),
        "random_degree_sequence" => {
            let text = args
                .degrees
                .as_ref()
                .ok_or_else(|| CliError::Parse("--degrees is required for --model random_degree_sequence".into()))?;
            let degrees: Vec<f64> = text
                .split(',')
                .map(|tok| tok.trim().parse::<f64>())
                .collect::<Result<_, _>>()
                .map_err(|_| CliError::Parse(format!("bad --degrees list {text:?}")))?;
            let n = args.n.unwrap_or(degrees.len());
            (Model::RandomDegreeSequence { degrees: DegreeSequence(degrees) }, n)
        }
        "lattice2d" => {
            let rows = require_usize(args.rows, "rows")?;
            let cols = require_usize(args.cols, "cols")?;
            (Model::Lattice2d { rows, cols }, args.n.unwrap_or(rows * cols))
        }
        other => {
            return Err(CliError::Parse(format!(
                "unknown model {other:?}; expected gnp, sbm2, preferential_attachment, watts_strogatz, random_degree_sequence, or lattice2d"
            )))
        }
    };
    let mut spec = EnsembleSpec::new(model, n);
    if args.allow_disconnected {
        spec.require_connected = false;
    }
    spec.validate()?;
    Ok(spec)
}

fn cmd_convert(args: ConvertArgs) -> CliResult<()> {
    let matrix = formats::read_correlation_csv(&args.correlation)?;
    let g = graph_from_correlation(&matrix, args.threshold, args.binarize)?;
    write_file(&args.out, &formats::write_edge_list(&g))?;
    println!("{} n={} m={}", args.out.display(), g.n(), g.edge_count());
    Ok(())
}

fn write_file(path: &Path, content: &str) -> CliResult<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)?;
        }
    }
    fs::write(path, content)?;
    Ok(())
}
