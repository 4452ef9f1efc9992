//! Command-line front end: every library operation behind one binary,
//! with file outputs for figures and reports.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use treebound::bounds::{bounds_ab_consistency, bounds_for};
use treebound::degseq::{enumerate_tree_sequences, DegreeSequence};
use treebound::experiments::{
    probe_lemma1, probe_perturbation, probe_theorem2, record_for, records_to_csv, records_to_svg,
    verify_conjectures, ScanMetric, ScanRecord,
};
use treebound::metrics::{terminal_wiener, tvwwi, vwwi, wiener};
use treebound::spectral::{
    dsr, tdsr, tdsr_ab_closed, terr_ab, tlb_ab_closed, SpectralResult,
};
use treebound::tree::{build_bfs_tree, build_huffman, GeneratingTuple, Tree, WeightedTree};
use treebound::Error;

#[derive(Parser)]
#[command(name = "treebound", version, about = "Distance spectral bounds for trees with a given degree sequence", disable_help_subcommand = true)]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunConfig {
    /// Power-iteration convergence tolerance
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,
    /// Power-iteration iteration cap
    #[arg(long, global = true, default_value_t = 100_000)]
    max_iter: usize,
    /// Labeled-enumeration budget
    #[arg(long, global = true, default_value_t = 1_000_000)]
    budget: u128,
    /// RNG seed for probes
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Directory for file outputs (--csv, --svg, --dot)
    #[arg(long, global = true, env = "TREEBOUND_OUTPUT_DIR", default_value = ".")]
    output_dir: PathBuf,
    /// Worker threads for scans (0 = available parallelism)
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a degree sequence and print its normal form
    Validate { seq: String },
    /// Build the greedy (BFS) tree of a degree sequence
    Bfs {
        seq: String,
        /// Also write a DOT rendering
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Build the generalized Huffman tree of a weighted degree sequence
    Huffman {
        seq: String,
        /// Vertex weights: either all N, or one per pendent vertex
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<f64>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Wiener-type indices of a tree (greedy tree of SEQ, or --tree FILE)
    Indices {
        seq: Option<String>,
        /// Edge-list file instead of a degree sequence
        #[arg(long, conflicts_with = "seq")]
        tree: Option<PathBuf>,
        /// Weights for the weighted indices (all N, or one per pendent vertex)
        #[arg(long, value_delimiter = ',')]
        weights: Option<Vec<f64>>,
    },
    /// Spectral radius of the (terminal) distance matrix
    Spectral {
        seq: Option<String>,
        #[arg(long, conflicts_with = "seq")]
        tree: Option<PathBuf>,
        /// Use the terminal distance matrix
        #[arg(long)]
        terminal: bool,
    },
    /// Bounds report for a degree sequence, as JSON
    Bounds { seq: String },
    /// Closed forms for the d(a,b) family with a numeric cross-check
    ClosedAb { a: usize, b: usize },
    /// Scan all degree sequences up to an order and emit CSV/SVG
    Scan {
        metric: MetricArg,
        #[arg(long)]
        max_n: usize,
        #[arg(long, required = true)]
        csv: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Exhaustive minimality verification for one sequence or all orders
    Verify {
        seq: Option<String>,
        #[arg(long, conflicts_with = "seq")]
        max_n: Option<usize>,
    },
    /// Seeded randomized probes of the weighted-index inequalities
    Probe {
        probe: ProbeArg,
        seq: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricArg {
    Terr,
    Err,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProbeArg {
    Lemma1,
    Theorem2,
    Perturbation,
}

/// Numbers are printed with 12 significant digits.
fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let rounded: f64 = format!("{x:.11e}").parse().unwrap();
    format!("{rounded}")
}

fn resolve(dir: &Path, file: &Path) -> PathBuf {
    if file.is_absolute() {
        file.to_path_buf()
    } else {
        dir.join(file)
    }
}

/// Exit codes: 1 for malformed input, 3 for violated hard assertions,
/// 2 for everything the solver or enumerator can fail on.
fn code_for(e: &Error) -> u8 {
    match e {
        Error::NotGraphicTree(_)
        | Error::TooSmall(_)
        | Error::Parse(_)
        | Error::InvalidArgument(_)
        | Error::RootIsLeaf(_) => 1,
        Error::TheoremViolated(_) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version land on stdout with success; everything
            // else is a usage error.
            let benign = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            e.print().expect("write clap diagnostics");
            return if benign { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    match run(&cli.config, &cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(code_for(&e))
        }
    }
}

fn run(cfg: &RunConfig, cmd: &Command) -> treebound::Result<u8> {
    match cmd {
        Command::Validate { seq } => {
            let s = DegreeSequence::parse(seq)?;
            println!("seq: {}", s.to_compact_string());
            println!("N: {}", s.order());
            println!("n: {}", s.leaf_count());
            Ok(0)
        }
        Command::Bfs { seq, dot } => {
            let s = DegreeSequence::parse(seq)?;
            let t = build_bfs_tree(&s);
            print!("{}", t.to_edge_list());
            if let Some(path) = dot {
                write_file(&resolve(&cfg.output_dir, path), &t.to_dot())?;
            }
            Ok(0)
        }
        Command::Huffman { seq, weights, dot } => {
            let s = DegreeSequence::parse(seq)?;
            let tuple = tuple_for(&s, weights)?;
            let h = build_huffman(&tuple)?;
            print!("{}", h.tree.tree.to_edge_list());
            println!("root: {}", h.root);
            println!("tvwwi: {}", sig12(tvwwi(&h.tree)));
            if let Some(path) = dot {
                write_file(&resolve(&cfg.output_dir, path), &h.tree.tree.to_dot())?;
            }
            Ok(0)
        }
        Command::Indices { seq, tree, weights } => {
            let t = load_tree(seq.as_deref(), tree.as_deref())?;
            println!("wi: {}", wiener(&t));
            println!("twi: {}", terminal_wiener(&t));
            let wt = weighted(&t, weights.as_deref())?;
            println!("vwwi: {}", sig12(vwwi(&wt)));
            println!("tvwwi: {}", sig12(tvwwi(&wt)));
            Ok(0)
        }
        Command::Spectral { seq, tree, terminal } => {
            let t = load_tree(seq.as_deref(), tree.as_deref())?;
            let r = if *terminal {
                tdsr(&t, cfg.tol, cfg.max_iter)?
            } else {
                dsr(&t, cfg.tol, cfg.max_iter)?
            };
            print_spectral(&r);
            Ok(0)
        }
        Command::Bounds { seq } => {
            let s = DegreeSequence::parse(seq)?;
            let report = bounds_for(&s, cfg.tol, cfg.max_iter)?;
            println!("{}", serde_json::to_string_pretty(&report).expect("serialize"));
            Ok(0)
        }
        Command::ClosedAb { a, b } => {
            let (a, b) = (*a, *b);
            if a == 0 || b == 0 {
                return Err(Error::InvalidArgument("a and b must be positive".into()));
            }
            println!("tub_closed: {}", sig12(tdsr_ab_closed(a, b)));
            println!("tlb_closed: {}", sig12(tlb_ab_closed(a, b)));
            println!("terr_closed: {}", sig12(terr_ab(a, b)));
            let check = bounds_ab_consistency(a, b, 1e-8)?;
            println!("tub_residual: {}", sig12(check.tub_residual));
            println!("tlb_residual: {}", sig12(check.tlb_residual));
            println!("consistent: {}", check.ok);
            if check.ok {
                Ok(0)
            } else {
                Err(Error::TheoremViolated(format!(
                    "closed form disagrees with power iteration for a={a}, b={b}"
                )))
            }
        }
        Command::Scan { metric, max_n, csv, svg } => {
            let metric = match metric {
                MetricArg::Terr => ScanMetric::TErr,
                MetricArg::Err => ScanMetric::Err,
            };
            let records = parallel_scan(metric, *max_n, cfg)?;
            write_file(&resolve(&cfg.output_dir, csv), &records_to_csv(&records))?;
            if let Some(path) = svg {
                write_file(&resolve(&cfg.output_dir, path), &records_to_svg(&records))?;
            }
            let max = records.iter().fold(f64::NEG_INFINITY, |m, r| m.max(r.value));
            println!("records: {}", records.len());
            println!("max_{}: {}", metric.as_str().to_lowercase(), sig12(max));
            if metric == ScanMetric::Err && max > 0.06 {
                eprintln!("warning: max Err {} exceeds 0.06", sig12(max));
            }
            Ok(0)
        }
        Command::Verify { seq, max_n } => {
            let seqs = match (seq, max_n) {
                (Some(s), None) => vec![DegreeSequence::parse(s)?],
                (None, Some(n)) => {
                    let mut all = Vec::new();
                    for order in 4..=*n {
                        all.extend(enumerate_tree_sequences(order)?);
                    }
                    all
                }
                _ => {
                    return Err(Error::InvalidArgument(
                        "verify needs either SEQ or --max-n".into(),
                    ))
                }
            };
            let mut counterexamples = 0;
            for s in &seqs {
                let report = verify_conjectures(s, cfg.budget, cfg.tol, cfg.max_iter)?;
                println!("{}", serde_json::to_string(&report).expect("serialize"));
                if !report.conjecture1_holds || !report.conjecture2_holds {
                    eprintln!("counterexample candidate: {}", report.seq);
                    counterexamples += 1;
                }
            }
            if counterexamples > 0 {
                eprintln!("{counterexamples} sequence(s) violate the conjectured minimality");
                Ok(3)
            } else {
                Ok(0)
            }
        }
        Command::Probe { probe, seq, samples } => {
            let s = DegreeSequence::parse(seq)?;
            let report = match probe {
                ProbeArg::Lemma1 => {
                    probe_lemma1(&s, *samples, cfg.seed, cfg.budget, cfg.tol, cfg.max_iter)?
                }
                ProbeArg::Theorem2 => probe_theorem2(&s, *samples, cfg.seed, cfg.budget)?,
                ProbeArg::Perturbation => probe_perturbation(&s, *samples, cfg.seed)?,
            };
            println!("{}", serde_json::to_string_pretty(&report).expect("serialize"));
            if report.violations > 0 {
                eprintln!("{} violation(s) observed", report.violations);
                Ok(3)
            } else {
                Ok(0)
            }
        }
    }
}

/// Scans parallelize over sequences; records keep the sequential order so
/// the CSV is identical for any worker count.
fn parallel_scan(
    metric: ScanMetric,
    max_n: usize,
    cfg: &RunConfig,
) -> treebound::Result<Vec<ScanRecord>> {
    if !(4..=30).contains(&max_n) {
        return Err(Error::InvalidArgument(format!(
            "scan order must be in 4..=30, got {max_n}"
        )));
    }
    let mut seqs = Vec::new();
    for order in 4..=max_n {
        seqs.extend(enumerate_tree_sequences(order)?);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("worker pool: {e}")))?;
    pool.install(|| {
        seqs.par_iter()
            .map(|s| record_for(s, metric, cfg.tol, cfg.max_iter))
            .collect()
    })
}

fn tuple_for(s: &DegreeSequence, weights: &[f64]) -> treebound::Result<GeneratingTuple> {
    if weights.len() == s.order() {
        GeneratingTuple::new(s.clone(), weights.to_vec())
    } else if weights.len() == s.leaf_count() {
        GeneratingTuple::with_leaf_weights(s.clone(), weights)
    } else {
        Err(Error::LengthMismatch(weights.len(), s.order()))
    }
}

fn weighted(t: &Tree, weights: Option<&[f64]>) -> treebound::Result<WeightedTree> {
    match weights {
        None => Ok(WeightedTree::unit(t.clone())),
        Some(w) if w.len() == t.order() => WeightedTree::new(t.clone(), w.to_vec()),
        Some(w) if w.len() == t.leaves().len() => WeightedTree::with_leaf_weights(t.clone(), w),
        Some(w) => Err(Error::LengthMismatch(w.len(), t.order())),
    }
}

fn load_tree(seq: Option<&str>, file: Option<&Path>) -> treebound::Result<Tree> {
    match (seq, file) {
        (Some(s), None) => Ok(build_bfs_tree(&DegreeSequence::parse(s)?)),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
            Tree::from_edge_list(&text)
        }
        _ => Err(Error::InvalidArgument(
            "provide either a degree sequence or --tree FILE".into(),
        )),
    }
}

fn print_spectral(r: &SpectralResult) {
    println!("radius: {}", sig12(r.radius));
    println!("iterations: {}", r.iterations);
    println!("residual: {:e}", r.residual);
    let entries: Vec<String> = r.perron.iter().map(|&x| sig12(x)).collect();
    println!("perron: [{}]", entries.join(", "));
}

fn write_file(path: &Path, content: &str) -> treebound::Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)
                .map_err(|e| Error::InvalidArgument(format!("{}: {e}", parent.display())))?;
        }
    }
    std::fs::write(path, content)
        .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}
