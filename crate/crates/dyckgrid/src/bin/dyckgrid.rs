//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on domain errors (bad instances, violated
//! promises, grids that do not fit), 2 on usage errors (reported by clap).

use std::error::Error as StdError;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::json;

use dyckgrid::bench::{self, Algo, BenchSpec};
use dyckgrid::dyck::decide_dyck;
use dyckgrid::formula::{build_padded, formula_size_bound};
use dyckgrid::grid::GridInstance;
use dyckgrid::reductions::{self, ExParams, FoldMap};
use dyckgrid::substring::{self, Direction, SearchParams};
use dyckgrid::{plot, Backend, CostConstants, ExecutionContext, RunConfig, SignSet, Tape, Word};

type CliResult = Result<(), Box<dyn StdError>>;

#[derive(Parser)]
#[command(
    name = "dyckgrid",
    version,
    about = "Query-counted Dyck recognition, grid reductions and path formulas"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide bounded-depth Dyck membership.
    Dyck {
        #[arg(long)]
        word: Word,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        backend: BackendArgs,
    },
    /// Run one minimal ±k-substring search.
    Find(FindArgs),
    /// Grid instance queries.
    Grid {
        #[command(subcommand)]
        command: GridCommand,
    },
    /// Reductions producing Dyck words.
    Reduce {
        #[command(subcommand)]
        command: ReduceCommand,
    },
    /// Build a grid instance from a reduction.
    Embed(EmbedArgs),
    /// Size and evaluate the connectivity formula of an n×k directed grid.
    Formula {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Emit::Stats)]
        emit: Emit,
        /// `GRID v1` instance to evaluate (with `--emit eval`).
        #[arg(long, required_if_eq("emit", "eval"))]
        instance: Option<PathBuf>,
    },
    /// Scaling benchmark; CSV on stdout.
    Bench(BenchArgs),
    /// Log-log SVG plot of a benchmark CSV.
    Plot {
        #[arg(long)]
        csv: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Clone)]
struct BackendArgs {
    #[arg(long, default_value = "reference")]
    backend: Backend,
    /// Fault rate of the sampled backend.
    #[arg(long, default_value_t = 0.0)]
    eps: f64,
    #[arg(long, env = "DYCKGRID_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1.0)]
    c1: f64,
    #[arg(long, default_value_t = 1.0)]
    c2: f64,
    /// Target failure rate used to size majority repetitions in the cost model.
    #[arg(long, default_value_t = 0.0)]
    repetition_eps: f64,
    /// Random answers in the unconstrained regime of threshold search.
    #[arg(long)]
    adversarial: bool,
    /// Run the doubling prelude of find-first.
    #[arg(long)]
    doubling: bool,
}

impl BackendArgs {
    fn config(&self) -> dyckgrid::Result<RunConfig> {
        let config = RunConfig {
            backend: self.backend,
            epsilon: self.eps,
            seed: self.seed,
            constants: CostConstants {
                c1: self.c1,
                c2: self.c2,
                repetition_eps: self.repetition_eps,
            },
            adversarial: self.adversarial,
            find_first_doubling: self.doubling,
        };
        config.validate()?;
        Ok(config)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FindKind {
    From,
    Fromright,
    Fixedlen,
    Any,
    First,
    Fixedpos,
}

#[derive(Args)]
struct FindArgs {
    #[arg(long, value_enum)]
    kind: FindKind,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    word: Word,
    /// Window start (default 0).
    #[arg(long)]
    l: Option<usize>,
    /// Window end, inclusive (default n-1).
    #[arg(long)]
    r: Option<usize>,
    /// Position the match must contain (default l).
    #[arg(long)]
    t: Option<usize>,
    /// Length bound (default the window length).
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, default_value = "both")]
    sign: SignSet,
    #[arg(long, default_value = "right")]
    direction: Direction,
    #[command(flatten)]
    backend: BackendArgs,
}

#[derive(Subcommand)]
enum GridCommand {
    /// Corner-to-corner connectivity.
    Connect {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Bfs)]
        method: Method,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Bfs,
}

#[derive(Subcommand)]
enum ReduceCommand {
    /// Iterated promise function to a Dyck block.
    Ex2dyck {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        levels: usize,
        /// Input bits as a 0/1 string of length (2m)^levels.
        #[arg(long)]
        input: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EmbedMode {
    Trapezoid,
    Fold,
    DdimFold,
    DdimParallel,
}

#[derive(Args)]
struct EmbedArgs {
    #[arg(long, value_enum)]
    mode: EmbedMode,
    /// Words (trapezoid: one or more; fold: exactly one).
    #[arg(long, value_delimiter = ',')]
    words: Vec<Word>,
    /// Depth bound.
    #[arg(long)]
    d: Option<usize>,
    /// Target dimensions (fold: n,k; ddim-fold: the d-dimensional grid).
    #[arg(long, value_delimiter = ',')]
    dims: Vec<usize>,
    /// Index-axis dimensions for ddim-parallel.
    #[arg(long, value_delimiter = ',')]
    index_dims: Vec<usize>,
    /// Input `GRID v1` files (ddim-fold: one; ddim-parallel: one per slot).
    #[arg(long, value_delimiter = ',')]
    instances: Vec<PathBuf>,
    /// Where to write the instance (default stdout).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Where to write the JSON certificate.
    #[arg(long)]
    certificate: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Stats,
    Eval,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    algo: Algo,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
    #[arg(long, default_value_t = 5)]
    points: usize,
    #[arg(long, default_value_t = 1)]
    trials: usize,
    /// Write the fit report (JSON) here.
    #[arg(long)]
    fit: Option<PathBuf>,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    backend: BackendArgs,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Command::Bench(a) = &cli.command {
        if let Err(e) = bench::sizes(a.n_min, a.n_max, a.points) {
            Cli::command().error(ErrorKind::ValueValidation, e).exit();
        }
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> CliResult {
    match out {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn print_json(value: serde_json::Value) -> CliResult {
    emit(None, &format!("{value}\n"))
}

fn read_grid(path: &Path) -> dyckgrid::Result<GridInstance> {
    let text = fs::read_to_string(path)
        .map_err(|e| dyckgrid::Error::GridFormat(format!("{}: {e}", path.display())))?;
    GridInstance::from_grid_v1(&text)
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Dyck { word, k, backend } => {
            let run = decide_dyck(&word, k, &backend.config()?)?;
            print_json(json!({
                "accept": u8::from(run.accept),
                "k": run.k,
                "ledger": run.ledger,
                "modeled_cost": run.modeled_cost,
            }))
        }
        Command::Find(args) => find(args),
        Command::Grid {
            command:
                GridCommand::Connect {
                    instance,
                    method: Method::Bfs,
                },
        } => {
            let c = read_grid(&instance)?.connectivity();
            print_json(json!({ "connected": c.connected, "vertices_visited": c.vertices_visited }))
        }
        Command::Reduce {
            command: ReduceCommand::Ex2dyck { m, levels, input },
        } => {
            let bits = input
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(dyckgrid::Error::InvalidParams(format!(
                        "input bit {c:?} is not 0 or 1"
                    ))),
                })
                .collect::<dyckgrid::Result<Vec<bool>>>()?;
            let block = reductions::ex_to_block(ExParams { m, levels }, &bits)?;
            print_json(json!({
                "word": block.word.to_binary(),
                "w": block.width,
                "h": block.height,
                "balance": dyckgrid::words::balance(&block.word),
                "dyck": u8::from(reductions::block_to_dyck_answer(&block)),
            }))
        }
        Command::Embed(args) => embed(args),
        Command::Formula {
            n,
            k,
            emit: what,
            instance,
        } => {
            let f = build_padded(n, k)?;
            let mu = n.next_power_of_two().trailing_zeros();
            let mut out = json!({
                "leaf_count": f.leaf_count().to_string(),
                "bound": formula_size_bound(mu, k).to_string(),
                "query_estimate": f.query_estimate().to_string(),
            });
            if what == Emit::Eval {
                let g = read_grid(instance.as_deref().expect("required by clap"))?;
                out["value"] = json!(u8::from(f.evaluate(&g)?));
            }
            print_json(out)
        }
        Command::Bench(args) => {
            let spec = BenchSpec {
                algo: args.algo,
                k: args.k,
                n_min: args.n_min,
                n_max: args.n_max,
                points: args.points,
                trials: args.trials,
                seed: args.backend.seed,
                config: args.backend.config()?,
            };
            let rows = bench::bench_scaling(&spec)?;
            let mut csv = Vec::new();
            bench::write_csv(&rows, &mut csv)?;
            emit(args.out.as_deref(), std::str::from_utf8(&csv)?)?;
            if let Some(path) = args.fit {
                let report = serde_json::to_string_pretty(&bench::fit_report(&rows))?;
                fs::write(path, report + "\n")?;
            }
            Ok(())
        }
        Command::Plot { csv, out } => {
            let text = fs::read_to_string(&csv)?;
            emit(out.as_deref(), &plot::emit_plot(&text)?)
        }
    }
}

fn find(a: FindArgs) -> CliResult {
    let n = a.word.len();
    if n == 0 {
        return Err(dyckgrid::Error::EmptyWord.into());
    }
    let mut p = SearchParams::new(a.l.unwrap_or(0), a.r.unwrap_or(n - 1))
        .s(a.sign)
        .direction(a.direction);
    if let Some(t) = a.t {
        p = p.t(t);
    }
    if let Some(d) = a.d {
        p = p.d(d);
    }
    let mut ctx = ExecutionContext::new(Tape::Plain(a.word), a.backend.config()?)?;
    let found = match a.kind {
        FindKind::From => substring::find_from(&mut ctx, a.k, &p)?,
        FindKind::Fromright => substring::find_from_right(&mut ctx, a.k, &p)?,
        FindKind::Fixedlen => substring::find_fixed_len(&mut ctx, a.k, &p)?,
        FindKind::Any => substring::find_any(&mut ctx, a.k, &p)?,
        FindKind::First => substring::find_first(&mut ctx, a.k, &p)?,
        FindKind::Fixedpos => substring::find_fixed_pos(&mut ctx, a.k, &p)?,
    };
    print_json(json!({
        "match": found,
        "ledger": ctx.ledger(),
        "modeled_cost": ctx.modeled_cost(),
    }))
}

fn require<T>(value: Option<T>, what: &str) -> dyckgrid::Result<T> {
    value.ok_or_else(|| dyckgrid::Error::InvalidParams(format!("this mode needs {what}")))
}

fn embed(a: EmbedArgs) -> CliResult {
    let (grid, certificate) = match a.mode {
        EmbedMode::Trapezoid => {
            let e = reductions::dyck_to_directed_grid(&a.words, require(a.d, "--d")?)?;
            let cert = json!({ "source": e.source, "certificate": e.certificate });
            (e.target, cert)
        }
        EmbedMode::Fold => {
            let [word] = a.words.as_slice() else {
                return Err(
                    dyckgrid::Error::InvalidParams("fold embeds exactly one word".into()).into(),
                );
            };
            let d = require(a.d, "--d")?;
            let dims = match a.dims.as_slice() {
                [] => reductions::fold_dims(word.len(), d)?,
                &[n, k] => (n, k),
                _ => {
                    return Err(
                        dyckgrid::Error::DimensionMismatch("fold needs --dims n,k".into()).into(),
                    )
                }
            };
            let e = reductions::dyck_to_undirected_fold(word, d, dims)?;
            let cert = json!({ "source": e.source, "certificate": e.certificate });
            (e.target, cert)
        }
        EmbedMode::DdimFold => {
            let [path] = a.instances.as_slice() else {
                return Err(dyckgrid::Error::InvalidParams(
                    "ddim-fold lifts exactly one instance".into(),
                )
                .into());
            };
            let map = FoldMap::new(&a.dims)?;
            let lifted = map.lift_instance(&read_grid(path)?)?;
            let cert = json!({
                "folded_dims": map.target_dims(),
                "dims": a.dims,
                "corner_edge": map.needs_corner_edge(),
            });
            (lifted, cert)
        }
        EmbedMode::DdimParallel => {
            let instances = a
                .instances
                .iter()
                .map(|p| read_grid(p))
                .collect::<dyckgrid::Result<Vec<_>>>()?;
            let g = reductions::directed_ddim_parallel(&a.index_dims, &instances)?;
            let cert = json!({ "index_dims": a.index_dims, "slots": instances.len() });
            (g, cert)
        }
    };
    emit(a.out.as_deref(), &grid.to_grid_v1())?;
    if let Some(path) = a.certificate {
        fs::write(path, serde_json::to_string(&certificate)? + "\n")?;
    }
    Ok(())
}
