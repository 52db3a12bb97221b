//! `kecs`: compute, maintain, verify, generate, and benchmark maximal
//! k-edge-connected subgraph partitions of undirected multigraphs.
//!
//! Graph files: first nonblank non-comment line is the vertex count, each
//! following line `u v` is an edge (`#` starts a comment, duplicate lines
//! are parallel edges). Partitions print one part per line, vertex labels
//! ascending, lines ordered by smallest label.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;

use kecs::decremental::DecrementalState;
use kecs::gen;
use kecs::graph::{format_partition, parse_graph, serialize_graph, Graph, VertexId};
use kecs::reference::brute_partition_recursive_mincut;
use kecs::solver::{maximal_kecs_opts, SolverOptions, SolverResult};
use kecs::sparsify::kecs_certificate;

#[derive(Parser)]
#[command(name = "kecs", version, about = "maximal k-edge-connected subgraphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

fn parse_k(s: &str) -> Result<u32, String> {
    let k: u32 = s.parse().map_err(|_| format!("invalid k '{s}'"))?;
    if k < 1 {
        return Err("k must be >= 1".into());
    }
    Ok(k)
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the partition of a graph file
    Partition {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_parser = parse_k)]
        k: u32,
        /// Skip the sparse-certificate preprocessing
        #[arg(long)]
        no_certificate: bool,
        /// Write run statistics as JSON to this file
        #[arg(long)]
        stats: Option<PathBuf>,
    },
    /// Replay a deletion/query stream against a graph
    Decremental {
        #[arg(long)]
        input: PathBuf,
        /// Lines "d u v" (delete) and "q u v" (same-part query)
        #[arg(long)]
        stream: PathBuf,
        #[arg(long, value_parser = parse_k)]
        k: u32,
    },
    /// Cross-check the solver against the brute-force reference
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_parser = parse_k)]
        k: u32,
        /// Largest vertex count the brute-force reference will accept
        #[arg(long, default_value_t = 60)]
        cap: usize,
    },
    /// Emit a generated graph in the edge-list format
    Gen {
        /// random | cycle | tree | two-cliques | gadget | petersen
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        m: usize,
        #[arg(long, default_value_t = 4)]
        a: usize,
        #[arg(long, default_value_t = 4)]
        b: usize,
        #[arg(long, default_value_t = 2)]
        bridges: usize,
        #[arg(long, default_value_t = 3)]
        channels: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Emit the partition-preserving sparse certificate of a graph
    Sparsify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_parser = parse_k)]
        k: u32,
    },
    /// Run the solver across generated sizes and emit CSV measurements
    Bench {
        /// Comma-separated vertex counts, e.g. 1000,10000,100000
        #[arg(long)]
        sizes: String,
        #[arg(long, value_parser = parse_k, default_value = "3")]
        k: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Edges per vertex for the generated sparse multigraphs
        #[arg(long, default_value_t = 4)]
        density: usize,
    },
}

#[derive(Serialize)]
struct RunReport {
    n: usize,
    m: usize,
    k: u32,
    oracle_queries: u64,
    oracle_updates: u64,
    recursion_depth: u32,
    wall_time_ms: u128,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph, String> {
    let file = File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_graph(BufReader::new(file)).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Cmd::Partition {
            input,
            k,
            no_certificate,
            stats,
        } => {
            let g = load_graph(&input)?;
            let started = Instant::now();
            let opts = SolverOptions {
                use_certificate: !no_certificate,
            };
            let result = maximal_kecs_opts(&g, k, &opts).map_err(|e| e.to_string())?;
            let wall = started.elapsed().as_millis();
            print!("{}", format_partition(&result.partition, &g));
            if let Some(path) = stats {
                write_stats(&path, &g, k, &result, wall)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Decremental { input, stream, k } => run_decremental(&input, &stream, k),
        Cmd::Verify { input, k, cap } => {
            let g = load_graph(&input)?;
            if g.vertex_count() > cap {
                return Err(format!(
                    "{} vertices exceed the verification cap {cap}",
                    g.vertex_count()
                ));
            }
            let computed = maximal_kecs_opts(&g, k, &SolverOptions::default())
                .map_err(|e| e.to_string())?
                .partition;
            let reference = brute_partition_recursive_mincut(&g, k).map_err(|e| e.to_string())?;
            if computed == reference {
                Ok(ExitCode::SUCCESS)
            } else {
                println!("computed:");
                print!("{}", format_partition(&computed, &g));
                println!("reference:");
                print!("{}", format_partition(&reference, &g));
                Ok(ExitCode::from(1))
            }
        }
        Cmd::Gen {
            kind,
            n,
            m,
            a,
            b,
            bridges,
            channels,
            seed,
        } => {
            let g = match kind.as_str() {
                "random" => gen::random_multigraph(n, m, seed),
                "cycle" => gen::cycle(n),
                "tree" => gen::tree(n, seed),
                "two-cliques" => gen::two_cliques(a, b, bridges),
                "gadget" => gen::clique_pair_with_channels(a, b, channels),
                "petersen" => Ok(gen::petersen()),
                other => return Err(format!("unknown generator kind '{other}'")),
            }
            .map_err(|e| e.to_string())?;
            print!("{}", serialize_graph(&g));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Sparsify { input, k } => {
            let g = load_graph(&input)?;
            let cert = kecs_certificate(&g, k).map_err(|e| e.to_string())?;
            print!("{}", serialize_graph(&cert));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Bench {
            sizes,
            k,
            seed,
            density,
        } => {
            println!("n,m,k,queries,depth,ms");
            for part in sizes.split(',') {
                let n: usize = part
                    .trim()
                    .parse()
                    .map_err(|_| format!("invalid size '{part}'"))?;
                let m = density * n;
                let g = gen::random_multigraph(n, m, seed).map_err(|e| e.to_string())?;
                let started = Instant::now();
                let result = maximal_kecs_opts(&g, k, &SolverOptions::default())
                    .map_err(|e| e.to_string())?;
                println!(
                    "{n},{m},{k},{},{},{}",
                    result.stats.counters.query_count,
                    result.stats.recursion_depth,
                    started.elapsed().as_millis()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn write_stats(
    path: &Path,
    g: &Graph,
    k: u32,
    result: &SolverResult,
    wall_time_ms: u128,
) -> Result<(), String> {
    let report = RunReport {
        n: g.vertex_count(),
        m: g.edge_count(),
        k,
        oracle_queries: result.stats.counters.query_count,
        oracle_updates: result.stats.counters.update_units,
        recursion_depth: result.stats.recursion_depth,
        wall_time_ms,
    };
    let json = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
    let mut file = File::create(path).map_err(|e| format!("{}: {e}", path.display()))?;
    writeln!(file, "{json}").map_err(|e| e.to_string())?;
    Ok(())
}

fn run_decremental(input: &Path, stream: &Path, k: u32) -> Result<ExitCode, String> {
    let g = load_graph(input)?;
    let mut by_label: HashMap<u64, VertexId> = HashMap::new();
    for v in g.vertices() {
        by_label.insert(g.label(v), v);
    }
    let mut state = DecrementalState::init(&g, k).map_err(|e| e.to_string())?;
    let file = File::open(stream).map_err(|e| format!("{}: {e}", stream.display()))?;
    let mut out = std::io::stdout().lock();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let lineno = i + 1;
        let line = line.map_err(|e| format!("line {lineno}: {e}"))?;
        let text = line.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let fields: Vec<&str> = text.split_whitespace().collect();
        if fields.len() != 3 || (fields[0] != "d" && fields[0] != "q") {
            return Err(format!("line {lineno}: expected 'd u v' or 'q u v'"));
        }
        let mut ends = [VertexId(0); 2];
        for (slot, f) in fields[1..].iter().enumerate() {
            let label: u64 = f
                .parse()
                .map_err(|_| format!("line {lineno}: invalid vertex '{f}'"))?;
            ends[slot] = *by_label
                .get(&label)
                .ok_or(format!("line {lineno}: unknown vertex '{label}'"))?;
        }
        match fields[0] {
            "d" => {
                state
                    .delete(ends[0], ends[1])
                    .map_err(|e| format!("line {lineno}: {e}"))?;
            }
            _ => {
                let same = state
                    .same_part(ends[0], ends[1])
                    .map_err(|e| format!("line {lineno}: {e}"))?;
                writeln!(out, "{}", if same { 1 } else { 0 }).map_err(|e| e.to_string())?;
            }
        }
    }
    write!(out, "{}", format_partition(&state.current_partition(), &g))
        .map_err(|e| e.to_string())?;
    Ok(ExitCode::SUCCESS)
}
