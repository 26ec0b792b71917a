//! Batch command-line surface over the genuslab library. All output is
//! deterministic: exact decimal numbers, fixed field order, no timing.
//!
//! Exit codes: 0 success, 1 verification failure (or internal error),
//! 2 usage error, 3 search budget exceeded.

use clap::{Args, Parser, Subcommand, ValueEnum};
use genuslab::census;
use genuslab::classes::{self, ClassSpec, ClosureMode, Family, GenusFunction, GenusMode};
use genuslab::embedding;
use genuslab::formulas::{self, CompositionIndexing};
use genuslab::graph::Graph;
use genuslab::Error;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "genuslab", version, about = "Exact genus, class and census computations for small graphs")]
struct Cli {
    /// Cap the worker thread count (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum and maximum Euler genus of a graph by exhaustive scheme search.
    Genus(GenusArgs),
    /// Exact class membership of a graph.
    Classes(ClassesArgs),
    /// Run the exhaustive census and write its CSV.
    Census(CensusArgs),
    /// Re-run the census (resuming from its checkpoints) and verify the
    /// inequality registry; exits 1 if any claim fails.
    Verify(VerifyArgs),
    /// Formula-vs-oracle comparison tables.
    Formulas(FormulasArgs),
    /// Scan all 1296 pinned rotation systems of K5 for a certifying system.
    K5,
    /// Write explicit generated graphs as edge lists.
    #[command(subcommand)]
    Generate(GenerateCmd),
    /// Minimum extension count over all class members on [n].
    Minext(MinextArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Edge-list file ("n m" header then one "u v" line per edge).
    #[arg(long)]
    graph: Option<PathBuf>,
    /// graph6 string.
    #[arg(long)]
    graph6: Option<String>,
}

impl GraphInput {
    fn load(&self) -> Result<Graph, Error> {
        match (&self.graph, &self.graph6) {
            (Some(path), None) => Graph::parse_edge_list(&std::fs::read_to_string(path)?),
            (None, Some(s)) => Graph::from_graph6(s),
            _ => Err(Error::Parse("provide exactly one of --graph or --graph6".into())),
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum ModeArg {
    Any,
    Orientable,
    Nonorientable,
}

impl From<ModeArg> for GenusMode {
    fn from(m: ModeArg) -> GenusMode {
        match m {
            ModeArg::Any => GenusMode::Any,
            ModeArg::Orientable => GenusMode::Orientable,
            ModeArg::Nonorientable => GenusMode::Nonorientable,
        }
    }
}

#[derive(Args)]
struct GenusArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Which embeddings the minimum ranges over.
    #[arg(long, value_enum, default_value = "any")]
    mode: ModeArg,
}

#[derive(Args)]
struct ClassesArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Family: E, OE, NE, OE&NE, F or XS.
    #[arg(long)]
    family: String,
    /// Closure: plain, hered, chered, minor or tminor.
    #[arg(long, default_value = "plain")]
    closure: String,
    /// Genus function, e.g. "const 2", "table 0,0,0,0,2",
    /// "floor (n*(n-3))/6", "floor 0.5*n/ln n".
    #[arg(long)]
    genus: String,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long, default_value_t = 5)]
    nmax: usize,
    /// Output directory; receives census.csv and resume checkpoints.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Census directory (checkpoints there are reused if present).
    #[arg(long)]
    census: PathBuf,
    #[arg(long, default_value_t = 5)]
    nmax: usize,
}

#[derive(Args)]
struct FormulasArgs {
    /// Emit the full comparison sweep as CSV on stdout.
    #[arg(long)]
    sweep: bool,
}

#[derive(Subcommand)]
enum GenerateCmd {
    /// Uniform subdivision of a cubic graph: excess k/2, high girth.
    Zk(ZkArgs),
    /// Connected blocks of t consecutive labels joined in a path.
    Blockpath(BlockpathArgs),
}

#[derive(Args)]
struct ZkArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Cubic seed graph on [k] as an edge-list file (default: K4, k = 4).
    #[arg(long)]
    cubic: Option<PathBuf>,
    /// Comma-separated permutation of the labels k+1..n (default: ascending).
    #[arg(long)]
    order: Option<String>,
    /// Output file (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BlockpathArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    t: usize,
    /// Shape of each full block: cycle, path or complete.
    #[arg(long, default_value = "cycle")]
    part: String,
    /// Comma-separated permutation of the 0-based block indices.
    #[arg(long)]
    order: Option<String>,
    /// Output file (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MinextArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    h: usize,
    #[arg(long, value_enum, default_value = "any")]
    mode: ModeArg,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let budget = genuslab::budget_from_env();
    match run(cli.command, budget) {
        Ok(code) => code,
        Err(Error::BudgetExceeded { estimated, budget }) => {
            eprintln!("error: search budget exceeded (estimated {estimated} states, budget {budget}); raise GENUSLAB_BUDGET");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command, budget: u128) -> Result<ExitCode, Error> {
    match command {
        Command::Genus(args) => {
            let g = args.input.load()?;
            let p = embedding::genus_profile(&g, budget)?;
            let min = match args.mode.into() {
                GenusMode::Any => p.min_h,
                GenusMode::Orientable => p.min_orientable_h,
                GenusMode::Nonorientable => {
                    if p.min_orientable_h == 0 {
                        0
                    } else {
                        p.min_nonorientable_h
                            .expect("nonplanar graphs admit nonorientable schemes")
                    }
                }
            };
            println!("min={min} max={}", p.max_h);
            Ok(ExitCode::SUCCESS)
        }
        Command::Classes(args) => {
            let g = args.input.load()?;
            let spec = ClassSpec {
                family: Family::parse(&args.family)?,
                closure: ClosureMode::parse(&args.closure)?,
                genus: GenusFunction::parse(&args.genus)?,
            };
            if classes::member(&g, &spec, budget)? {
                println!("member");
            } else {
                println!("non-member");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Census(args) => {
            std::fs::create_dir_all(&args.out)?;
            let c = census::run_census(args.nmax, budget, Some(&args.out))?;
            let path = args.out.join("census.csv");
            std::fs::write(&path, c.to_csv())?;
            println!("wrote {} records to {}", c.records().len(), path.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let c = census::run_census(args.nmax, budget, Some(&args.census))?;
            let report = census::verify_inequalities(&c, budget);
            let path = args.census.join("verification.json");
            std::fs::write(&path, report.to_json())?;
            for claim in &report.claims {
                println!(
                    "{}: {}",
                    claim.claim,
                    serde_json::to_value(claim.status)
                        .expect("status serializes")
                        .as_str()
                        .expect("status is a string")
                );
            }
            if report.failures() > 0 {
                eprintln!("{} claim(s) failed; see {}", report.failures(), path.display());
                Ok(ExitCode::from(1))
            } else {
                println!("all claims verified; report at {}", path.display());
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Formulas(args) => {
            if args.sweep {
                print!("{}", formula_sweep()?);
            } else {
                println!("use --sweep to emit the comparison table");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::K5 => {
            let report = classes::check_k5_chered();
            if report.certifying == 0 {
                println!("no certifying rotation system ({} examined)", report.examined);
            } else {
                println!(
                    "{} certifying rotation system(s) ({} examined)",
                    report.certifying, report.examined
                );
            }
            for (orders, lens) in report.forced.iter().zip(&report.forced_walk_lengths) {
                let fmt = |o: &Vec<usize>| {
                    o.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
                };
                println!(
                    "forced system: 2:({}) 3:({}) 4:({}) 5:({}); induced {{2,3,4,5}} walk lengths: {}",
                    fmt(&orders[0]),
                    fmt(&orders[1]),
                    fmt(&orders[2]),
                    fmt(&orders[3]),
                    lens.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate(cmd) => {
            let (graph, out) = match cmd {
                GenerateCmd::Zk(a) => {
                    let h = match &a.cubic {
                        Some(path) => Graph::parse_edge_list(&std::fs::read_to_string(path)?)?,
                        None => {
                            if a.k != 4 {
                                return Err(Error::Precondition(
                                    "--cubic is required unless k = 4 (default seed is K4)".into(),
                                ));
                            }
                            Graph::complete(4)
                        }
                    };
                    let order = match &a.order {
                        Some(s) => parse_csv_usize(s)?,
                        None => ((a.k + 1)..=a.n).collect(),
                    };
                    (classes::generate_zk(a.n, a.k, &h, &order)?, a.out)
                }
                GenerateCmd::Blockpath(a) => {
                    let q = a.n / a.t;
                    let u = a.n - q * a.t;
                    let shape = |size: usize| -> Result<Graph, Error> {
                        Ok(match (a.part.as_str(), size) {
                            (_, 0) => Graph::empty(),
                            (_, 1) => Graph::edgeless(1),
                            (_, 2) => Graph::path(2),
                            ("cycle", s) => Graph::cycle(s),
                            ("path", s) => Graph::path(s),
                            ("complete", s) => Graph::complete(s),
                            (other, _) => {
                                return Err(Error::Parse(format!("unknown part shape: {other}")))
                            }
                        })
                    };
                    let mut parts = vec![shape(a.t)?; q];
                    if u > 0 {
                        parts.push(shape(u)?);
                    }
                    let order = match &a.order {
                        Some(s) => parse_csv_usize(s)?,
                        None => (0..parts.len()).collect(),
                    };
                    (classes::generate_block_path(a.n, a.t, &parts, &order)?, a.out)
                }
            };
            let text = graph.to_edge_list();
            match out {
                Some(path) => {
                    std::fs::write(&path, text)?;
                    println!("wrote {}", path.display());
                }
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Minext(args) => {
            let m = classes::minext(args.n, args.h, args.mode.into(), budget)?;
            println!("{m}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_csv_usize(s: &str) -> Result<Vec<usize>, Error> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer in list: {t}")))
        })
        .collect()
}

/// CSV comparing each closed form against its independent oracle at every
/// in-budget point. Columns: kind,n_or_m_or_k,h_or_j,formula,oracle,match.
fn formula_sweep() -> Result<String, Error> {
    use std::fmt::Write as _;
    let mut s = String::from("kind,a,b,formula,oracle,match\n");
    // Rooted orientable unicellular maps, both indexings, n+h-1 <= 5.
    for n in 1..=6usize {
        for h in 0..=5usize {
            if n + h < 1 || n + h - 1 > 5 {
                continue;
            }
            let oracle = formulas::unicellular_orientable_oracle(n, h)?;
            for (label, idx) in [
                ("unicellular-or-genus-indexed", CompositionIndexing::Genus),
                ("unicellular-or-euler-indexed", CompositionIndexing::Euler),
            ] {
                let val = formulas::unicellular_orientable_rooted(n, h, idx)?;
                let matches = val == oracle;
                writeln!(s, "{label},{n},{h},{val},{oracle},{matches}")
                    .expect("writing to a String cannot fail");
            }
        }
    }
    // Rooted precubic nonorientable maps against the signed-scheme oracle.
    for (m, h) in [(3usize, 2usize), (5, 2)] {
        let val = formulas::precubic_nonorientable_rooted(m, h)?;
        let oracle = formulas::precubic_nonorientable_oracle(m, h)?;
        writeln!(s, "precubic-nonor,{m},{h},{val},{oracle},{}", val == oracle)
            .expect("writing to a String cannot fail");
    }
    // Polygon dissections: DP vs subset brute force.
    for k in 3..=8usize {
        for j in 0..=k.saturating_sub(3) {
            let dp = formulas::dissection_count(k, j)?;
            let brute = formulas::dissection_count_oracle(k, j)?;
            writeln!(s, "dissection,{k},{j},{dp},{brute},{}", dp == brute)
                .expect("writing to a String cannot fail");
        }
    }
    Ok(s)
}
