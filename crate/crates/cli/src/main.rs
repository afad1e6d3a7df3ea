use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use catmouse::bounds;
use catmouse::cats::CatSpec;
use catmouse::game::{play, GameOptions, Transcript};
use catmouse::graph::{parse_graph, scattered_cover, write_graph, DistanceOracle, Graph, GraphSpec};
use catmouse::harness::{exhaustive_game_value, run_experiment, verify_suite, ExperimentConfig, SuiteName};
use catmouse::mice::MouseSpec;

#[derive(Parser)]
#[command(name = "catmouse", version, about = "Cat-and-mouse localization game on graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a graph in edge-list format.
    Gen {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Play one game and print its transcript.
    Simulate(SimulateArgs),
    /// Run an experiment config (TOML) and print its report.
    Experiment {
        config: PathBuf,
        /// Directory for report.csv, report.json and transcripts.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run a named acceptance suite: oracle, fat, thin, sqrt, lower, minimax, structure or all.
    Verify {
        suite: SuiteName,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve the game exactly on a tiny graph.
    Minimax {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        horizon: usize,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
    /// Emit a greedy scattered ball cover as JSON.
    Cover {
        #[command(flatten)]
        graph: GraphArg,
        /// Center separation; defaults to ceil(sqrt(8n)).
        #[arg(long, conflicts_with = "c")]
        separation: Option<u32>,
        /// Separation ceil(c * sqrt(n)).
        #[arg(long)]
        c: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GraphArg {
    /// Generator spec (e.g. `spider:t=12`, `grid:3x4`) or an edge-list file.
    #[arg(long)]
    graph: String,
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    graph: GraphArg,
    #[arg(long, default_value = "sqrt")]
    cat: String,
    #[arg(long, default_value = "stationary:seed=0")]
    mouse: String,
    #[arg(long)]
    horizon: usize,
    /// Overrides the seed of seeded cat and mouse specs.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    track_belief: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

impl GraphArg {
    fn load(&self) -> Result<(Graph, String)> {
        let path = Path::new(&self.graph);
        if path.is_file() {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let g = parse_graph(&text).with_context(|| format!("parsing {}", path.display()))?;
            return Ok((g, self.graph.clone()));
        }
        let spec: GraphSpec = self.graph.parse()?;
        Ok((spec.build()?, spec.to_string()))
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn transcript_csv(tr: &Transcript) -> String {
    let mut s = String::from("step,cat,mouse,bit,radius\n");
    for i in 1..=tr.steps() {
        let bit = tr.b(i).map_or(String::new(), |b| u8::from(b).to_string());
        let radius = tr.radius(i).map_or(String::new(), |r| r.to_string());
        writeln!(s, "{i},{},{},{bit},{radius}", tr.c(i), tr.m(i)).unwrap();
    }
    s
}

fn simulate(args: &SimulateArgs) -> Result<bool> {
    let (g, label) = args.graph.load()?;
    let mut cat: CatSpec = args.cat.parse()?;
    let mut mouse: MouseSpec = args.mouse.parse()?;
    if let Some(seed) = args.seed {
        cat = cat.with_seed(seed);
        mouse = mouse.with_seed(seed);
    }
    if args.horizon == 0 {
        bail!("--horizon must be at least 1");
    }
    let oracle = DistanceOracle::from_graph(g);
    let mut c = cat.build(&oracle)?;
    let mut m = mouse.build(oracle.graph())?;
    let opts = GameOptions { track_belief: args.track_belief, ..GameOptions::new(args.horizon) };
    let mut tr = play(&oracle, c.as_mut(), m.as_mut(), &opts)?;
    tr.graph_spec = label;
    tr.meta.seed = args.seed;
    let text = match args.format {
        Format::Csv => transcript_csv(&tr),
        _ => tr.to_json(),
    };
    emit(args.out.as_deref(), &text)?;
    Ok(true)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen { graph, out } => {
            let (g, _) = graph.load()?;
            emit(out.as_deref(), &write_graph(&g))?;
            Ok(true)
        }
        Command::Simulate(args) => simulate(&args),
        Command::Experiment { config, out, format } => {
            let text = fs::read_to_string(&config).with_context(|| format!("reading {}", config.display()))?;
            let cfg = ExperimentConfig::from_toml(&text)?;
            let report = run_experiment(&cfg, out.as_deref())?;
            match format {
                Format::Json => println!("{}", report.to_json()),
                _ => print!("{}", report.to_csv()),
            }
            Ok(report.pass())
        }
        Command::Verify { suite, format, out } => {
            let report = verify_suite(suite);
            let text = match format {
                Format::Json => report.to_json(),
                _ => {
                    let mut s = String::new();
                    for v in &report.verdicts {
                        writeln!(s, "{}", v.line()).unwrap();
                        for f in &v.failures {
                            writeln!(s, "    {f}").unwrap();
                        }
                    }
                    writeln!(s, "suite {}: {}", report.suite, if report.pass { "PASS" } else { "FAIL" }).unwrap();
                    s
                }
            };
            emit(out.as_deref(), &text)?;
            Ok(report.pass)
        }
        Command::Minimax { graph, horizon, d } => {
            let (g, label) = graph.load()?;
            let sol = exhaustive_game_value(&g, horizon, d)?;
            let json = serde_json::json!({
                "graph": label,
                "horizon": sol.horizon,
                "d": sol.d,
                "value": sol.value,
                "states": sol.states,
            });
            println!("{}", serde_json::to_string_pretty(&json)?);
            Ok(true)
        }
        Command::Cover { graph, separation, c, out } => {
            let (g, _) = graph.load()?;
            let n = g.n();
            let oracle = DistanceOracle::from_graph(g);
            let sep = match (separation, c) {
                (Some(s), _) => s,
                (None, Some(c)) => bounds::ceil_c_sqrt(c, n),
                (None, None) => bounds::sqrt_8n(n),
            };
            if sep == 0 {
                bail!("separation must be at least 1");
            }
            let cover = scattered_cover(&oracle, sep)?;
            emit(out.as_deref(), &serde_json::to_string_pretty(&cover)?)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
