use std::fs::{self, File};
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};

use regraph::bounds::BoundSet;
use regraph::experiment::switch_progression;
use regraph::io::{self, RunRecordJson};
use regraph::mcsa::{coupled_annealing, McsaConfig, RankingMode, StopRule, SwapRule};
use regraph::randomize::random_regular_graph;
use regraph::{seeded_rng, spectrum, Diameter, Error, RegularGraph};

const EXIT_CONFIG: u8 = 2;
const EXIT_INPUT: u8 = 3;

#[derive(Parser)]
#[command(name = "regraph", version, about = "Random regular graphs and Ramanujan graph search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a circulant d-regular graph and randomize it with edge switches.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Switch attempts; defaults to 3|E|.
        #[arg(long)]
        switches: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Defaults to regular_n<N>_d<D>.csv.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Normalized spectrum, lambda2 and bound classification of an adjacency CSV.
    Spectrum {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 20)]
        bins: usize,
        /// Histogram CSV destination.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the spectral thresholds for a degree (and optionally order and diameter).
    Bounds {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: Option<usize>,
        /// Graph diameter used by the strict bound.
        #[arg(long)]
        m: Option<usize>,
        /// Also print the bounds as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Metropolis coupled simulated annealing for a low lambda2.
    Mcsa {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 8)]
        chains: usize,
        #[arg(long, default_value_t = 0.90)]
        min_cooling: f64,
        #[arg(long, default_value_t = 0.99)]
        max_cooling: f64,
        #[arg(long, default_value_t = 1e-3)]
        t_min: f64,
        /// Proposals per chain per coupled step.
        #[arg(long, default_value_t = 10)]
        trials: usize,
        /// none, ramanujan, weak-optimal, or a numeric lambda2 target.
        #[arg(long, default_value = "none")]
        stop_at: StopArg,
        #[arg(long, value_enum, default_value_t = SwapArg::Unconditional)]
        swap_rule: SwapArg,
        #[arg(long, value_enum, default_value_t = RankingArg::ColdestToBest)]
        ranking: RankingArg,
        /// Switch attempts on each starting graph; defaults to 3|E|.
        #[arg(long)]
        warmup: Option<usize>,
        #[arg(long)]
        max_steps: Option<usize>,
        /// Advance chains one after another instead of in parallel.
        #[arg(long)]
        sequential: bool,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value = "mcsa_out")]
        out_dir: PathBuf,
    },
    /// Record lambda2 after each of `count` single switches from the circulant graph.
    SwitchExperiment {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 499)]
        count: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value = "switch_experiment.csv")]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug)]
struct StopArg(StopRule);

impl FromStr for StopArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rule = match s.to_ascii_lowercase().as_str() {
            "none" => StopRule::None,
            "ramanujan" => StopRule::Ramanujan,
            "weak-optimal" | "weak_optimal" => StopRule::WeakOptimal,
            other => StopRule::Target(
                other
                    .parse::<f64>()
                    .map_err(|_| format!("expected none, ramanujan, weak-optimal or a number, got {s:?}"))?,
            ),
        };
        Ok(StopArg(rule))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SwapArg {
    Unconditional,
    Metropolis,
}

#[derive(Clone, Copy, ValueEnum)]
enum RankingArg {
    ColdestToBest,
    ReorderPairs,
}

/// Error plus the exit code it maps to.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::ParityViolation { .. }
            | Error::DegreeTooLarge { .. }
            | Error::InvalidCooling { .. }
            | Error::InvalidConfig(_)
            | Error::DegenerateBase(_) => EXIT_CONFIG,
            Error::InvalidAdjacency(_) | Error::Parse { .. } => EXIT_INPUT,
            _ => 1,
        };
        Failure(code, err.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(err: std::io::Error) -> Self {
        Failure(1, err.to_string())
    }
}

fn resolve_seed(seed: Option<u64>) -> u64 {
    let seed = seed.unwrap_or_else(|| {
        SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_nanos() as u64)
            .unwrap_or(0)
    });
    println!("seed: {seed}");
    seed
}

fn print_classification(graph: &RegularGraph, lambda2: f64) -> Result<(), Failure> {
    let diameter = graph.diameter();
    let bounds = BoundSet::new(Some(graph.order()), graph.degree(), Some(diameter))?;
    let c = bounds.classify(lambda2);
    println!("diameter: {diameter}");
    println!("ramanujan threshold: {:.6} -> {}", bounds.ramanujan, verdict(c.is_ramanujan));
    println!(
        "weak optimal threshold: {:.6} -> {}",
        bounds.weak_optimal,
        verdict(c.below_weak_optimal)
    );
    if let (Some(w), Some(below)) = (bounds.weak_lower, c.below_weak_lower) {
        println!("weak lower bound: {w:.6} -> {}", verdict(below));
    }
    match (bounds.strict_lower, c.above_strict) {
        (Some(s), Some(above)) => println!(
            "strict lower bound: {s:.6} -> {}",
            if above { "above" } else { "NOT above" }
        ),
        _ => println!("strict lower bound: unavailable for diameter {diameter}"),
    }
    Ok(())
}

fn verdict(below: bool) -> &'static str {
    if below {
        "below"
    } else {
        "not below"
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Generate {
            n,
            d,
            switches,
            seed,
            out,
        } => {
            regraph::graph::check_parity(n, d)?;
            let seed = resolve_seed(seed);
            let switches = switches.unwrap_or(3 * n * d / 2);
            let result = random_regular_graph(n, d, switches, &mut seeded_rng(seed))?;
            let out = out.unwrap_or_else(|| PathBuf::from(format!("regular_n{n}_d{d}.csv")));
            io::save_adjacency(&result.graph, &out)?;
            println!("wrote {}", out.display());
            println!("edges: {}", result.graph.edge_count());
            println!("switches: {} attempted, {} accepted", result.attempts, result.accepted);
            println!("lambda2: {}", spectrum::lambda2(&result.graph));
        }
        Command::Spectrum { input, bins, out } => {
            if bins == 0 {
                return Err(Failure(EXIT_CONFIG, "--bins must be at least 1".into()));
            }
            let graph = io::load_adjacency(&input).map_err(|e| Failure(EXIT_INPUT, e.to_string()))?;
            let report = spectrum::normalized_spectrum(&graph)?;
            println!("n: {}  d: {}", report.n, report.degree);
            println!("lambda2: {}", report.lambda2);
            print_classification(&graph, report.lambda2)?;
            if let Some(out) = out {
                io::write_histogram_csv(&report.histogram(bins), BufWriter::new(File::create(&out)?))?;
                println!("wrote {}", out.display());
            }
        }
        Command::Bounds { d, n, m, json } => {
            let bounds = BoundSet::new(n, d, m.map(Diameter::Finite))?;
            println!("ramanujan       {:.6}", bounds.ramanujan);
            println!("weak optimal    {:.6}", bounds.weak_optimal);
            match bounds.weak_lower {
                Some(w) => println!("weak lower      {w:.6}"),
                None => println!("weak lower      n/a"),
            }
            match bounds.strict_lower {
                Some(s) => println!("strict lower    {s:.6}"),
                None => println!("strict lower    n/a"),
            }
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&bounds).map_err(|e| Failure(1, e.to_string()))?
                );
            }
        }
        Command::Mcsa {
            n,
            d,
            chains,
            min_cooling,
            max_cooling,
            t_min,
            trials,
            stop_at,
            swap_rule,
            ranking,
            warmup,
            max_steps,
            sequential,
            seed,
            out_dir,
        } => {
            let config = McsaConfig {
                chains,
                min_cooling,
                max_cooling,
                t_min,
                trials_per_step: trials,
                warmup_switches: warmup,
                stop_rule: stop_at.0,
                swap_rule: match swap_rule {
                    SwapArg::Unconditional => SwapRule::Unconditional,
                    SwapArg::Metropolis => SwapRule::Metropolis,
                },
                ranking: match ranking {
                    RankingArg::ColdestToBest => RankingMode::ColdestToBest,
                    RankingArg::ReorderPairs => RankingMode::ReorderPairs,
                },
                max_steps,
                parallel: !sequential,
                ..McsaConfig::new(n, d)
            };
            config.validate()?;
            let config = McsaConfig {
                seed: resolve_seed(seed),
                ..config
            };
            let outcome = coupled_annealing(&config)?;

            fs::create_dir_all(&out_dir)?;
            let graph_file = "best_graph.csv";
            io::save_adjacency(&outcome.best_graph, out_dir.join(graph_file))?;
            io::write_trace_csv(
                &outcome.record,
                BufWriter::new(File::create(out_dir.join("trace.csv"))?),
            )?;
            RunRecordJson {
                config,
                best_lambda2: outcome.best_lambda,
                best_graph_file: graph_file.into(),
                record: outcome.record.clone(),
            }
            .save(out_dir.join("run_record.json"))?;

            println!("steps: {}", outcome.record.total_steps);
            println!("stop reason: {:?}", outcome.record.stop_reason);
            println!("elapsed: {:.4} s", outcome.record.elapsed_seconds);
            println!("lambda2: {}", outcome.best_lambda);
            print_classification(&outcome.best_graph, outcome.best_lambda)?;
            println!("wrote {}", out_dir.display());
        }
        Command::SwitchExperiment {
            n,
            d,
            count,
            seed,
            out,
        } => {
            regraph::graph::check_parity(n, d)?;
            let seed = resolve_seed(seed);
            let progression = switch_progression(n, d, count, &mut seeded_rng(seed))?;
            io::write_progression_csv(&progression, BufWriter::new(File::create(&out)?))?;
            println!("wrote {}", out.display());
            println!("accepted switches: {}", progression.accepted);
            println!(
                "below ramanujan: {} ({:.4})",
                progression.below_ramanujan(),
                progression.fraction_below_ramanujan()
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
