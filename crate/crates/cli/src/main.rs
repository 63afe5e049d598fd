use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use biclique::bench::{self, BenchConfig, EdgeExpr, Suite};
use biclique::decomposer::{self, Decomposition};
use biclique::finder::{self, FinderConfig};
use biclique::{gen, io, oracle, params};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "biclique", version, about = "Balanced biclique search and biclique edge partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Gnm,
    Complete,
    CompleteBipartite,
    BipartiteGnm,
    Matching,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph file.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print q, r and the density regime for given counts.
    Params {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        m: usize,
    },
    /// Find a balanced biclique.
    Find {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        bipartite: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Partition all edges into balanced bicliques.
    Decompose {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        bipartite: bool,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        stats: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Check that a decomposition exactly partitions a graph's edges.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        decomp: PathBuf,
        #[arg(long)]
        bipartite: bool,
    },
    /// Exhaustive maximum balanced biclique for small graphs.
    Oracle {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = oracle::DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Time find or decompose on seeded random graphs and write CSV.
    Bench {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        sizes: String,
        #[arg(long)]
        edges: String,
        #[arg(long)]
        seeds: String,
        #[arg(long)]
        csv: PathBuf,
        /// Use square bipartite inputs with both sides of size n.
        #[arg(long)]
        bipartite: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

struct Failure {
    category: &'static str,
    message: String,
}

impl From<biclique::Error> for Failure {
    fn from(e: biclique::Error) -> Self {
        Failure {
            category: e.category(),
            message: e.to_string(),
        }
    }
}

fn failure(category: &'static str, message: impl Into<String>) -> Failure {
    Failure {
        category,
        message: message.into(),
    }
}

type CliResult<T> = Result<T, Failure>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| failure("Io", format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|e| failure("Io", format!("{}: {e}", path.display())))
}

fn required(v: Option<usize>, flag: &str) -> CliResult<usize> {
    v.ok_or_else(|| failure("Usage", format!("--{flag} is required for this kind")))
}

/// Runs `f` on a pool of `threads` workers with the parallel scan enabled,
/// or directly with the sequential scan when `threads <= 1`.
fn with_threads<T: Send>(threads: usize, f: impl FnOnce(FinderConfig) -> CliResult<T> + Send) -> CliResult<T> {
    if threads <= 1 {
        return f(FinderConfig::default());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| failure("Usage", e.to_string()))?;
    pool.install(|| f(FinderConfig::parallel()))
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::Gen {
            kind,
            n,
            m,
            a,
            b,
            s,
            t,
            seed,
            out,
        } => {
            let text = match kind {
                Kind::Gnm => io::serialize_graph(&gen::gnm(required(n, "n")?, required(m, "m")?, seed)?),
                Kind::Complete => io::serialize_graph(&gen::complete(required(n, "n")?)),
                Kind::CompleteBipartite => {
                    io::serialize_graph(&gen::complete_bipartite_general(required(s, "s")?, required(t, "t")?)?)
                }
                Kind::BipartiteGnm => io::serialize_bipartite(&gen::bipartite_gnm(
                    required(a, "a")?,
                    required(b, "b")?,
                    required(m, "m")?,
                    seed,
                )?),
                Kind::Matching => io::serialize_bipartite(&gen::matching_bipartite(required(n, "n")?)),
            };
            write(&out, &text)?;
        }
        Command::Params { n, a, b, m } => {
            let p = match (n, a, b) {
                (Some(n), None, None) => params::general_params(n, m)?,
                (None, Some(a), Some(b)) => params::bipartite_params(a.max(b), a.min(b), m)?,
                _ => return Err(failure("Usage", "give either --n or both --a and --b")),
            };
            println!("{}", json!({"q": p.q, "r": p.r, "regime": p.regime.as_str()}));
        }
        Command::Find {
            input,
            bipartite,
            json,
            threads,
        } => {
            let text = read(&input)?;
            let report = with_threads(threads, |cfg| {
                Ok(if bipartite {
                    finder::find_biclique_bipartite(&io::parse_bipartite(&text)?, cfg)?
                } else {
                    finder::find_biclique(&io::parse_graph(&text)?, cfg)?
                })
            })?;
            if json {
                println!("{}", serde_json::to_string(&report).expect("report serializes"));
            } else {
                println!(
                    "K_{{{q},{q}}} left={:?} right={:?} q_target={} r={} fallback_used={} subsets_scanned={} regime={}",
                    report.biclique.left,
                    report.biclique.right,
                    report.q_target,
                    report.r,
                    report.fallback_used,
                    report.subsets_scanned,
                    report.regime.as_str(),
                    q = report.q_achieved,
                );
            }
        }
        Command::Decompose {
            input,
            bipartite,
            out,
            stats,
            threads,
        } => {
            let text = read(&input)?;
            let d = with_threads(threads, |cfg| {
                Ok(if bipartite {
                    decomposer::decompose_bipartite(&io::parse_bipartite(&text)?, cfg)?
                } else {
                    decomposer::decompose(&io::parse_graph(&text)?, cfg)?
                })
            })?;
            write(&out, &(d.to_json() + "\n"))?;
            if stats {
                print_stats(&d);
            }
        }
        Command::Verify {
            graph,
            decomp,
            bipartite,
        } => {
            let text = read(&graph)?;
            let d = Decomposition::from_json(&read(&decomp)?).map_err(|e| failure("ParseError", e.to_string()))?;
            let report = if bipartite {
                decomposer::verify_bipartite_decomposition(&io::parse_bipartite(&text)?, &d)
            } else {
                decomposer::verify_decomposition(&io::parse_graph(&text)?, &d)
            };
            if report.is_valid() {
                println!("valid parts={} complexity={}", d.parts.len(), report.complexity);
            } else {
                for v in &report.violations {
                    println!("{v}");
                }
                eprintln!("{}", json!({"error": "InvalidDecomposition", "violations": report.violations.len()}));
                return Ok(ExitCode::from(1));
            }
        }
        Command::Oracle { input, limit } => {
            let g = io::parse_graph(&read(&input)?)?;
            let (q_max, witness) = oracle::max_balanced_biclique(&g, limit)?;
            let (left, right) = match witness {
                Some(w) => (json!(w.left), json!(w.right)),
                None => (json!(null), json!(null)),
            };
            println!("{}", json!({"q_max": q_max, "left": left, "right": right}));
        }
        Command::Bench {
            suite,
            sizes,
            edges,
            seeds,
            csv,
            bipartite,
            threads,
        } => {
            let records = with_threads(threads, |finder| {
                let cfg = BenchConfig {
                    suite: suite.parse::<Suite>()?,
                    sizes: bench::parse_sizes(&sizes)?,
                    edges: edges.parse::<EdgeExpr>()?,
                    seeds: bench::parse_seeds(&seeds)?,
                    bipartite,
                    finder,
                };
                Ok(bench::run_bench(&cfg)?)
            })?;
            let file = fs::File::create(&csv).map_err(|e| failure("Io", format!("{}: {e}", csv.display())))?;
            bench::write_csv(&records, file).map_err(|e| failure("Io", e.to_string()))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_stats(d: &Decomposition) {
    eprintln!("{:>8} {:>10} {:>14} {:>6} {:>6}", "ell", "iterations", "edges_removed", "q_min", "q_max");
    for p in &d.phases {
        eprintln!(
            "{:>8} {:>10} {:>14} {:>6} {:>6}",
            p.ell, p.iterations, p.edges_removed, p.q_min, p.q_max
        );
    }
    eprintln!(
        "parts={} singles={} complexity={} ratio={:.6}",
        d.parts.len(),
        d.parts.len() - d.loop_parts(),
        d.complexity,
        d.ratio()
    );
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("{}", json!({"error": f.category, "message": f.message}));
            ExitCode::from(1)
        }
    }
}
