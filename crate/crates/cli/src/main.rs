use anyhow::{Context, Result};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use grundy_cli::commands::{self, Options, ProductFlags, Shape, SweepSource, TableRequest};
use grundy_cli::parse_range;
use grundy_cli::record::{render_table, Record};
use grundy_cli::spec::{GraphSpec, NamedGraph};
use grundy_core::solver::DEFAULT_CAP;
use grundy_core::{ProductKind, Variant};
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "grundy",
    version,
    about = "Grundy domination invariants of graphs and graph products"
)]
struct Cli {
    /// Largest vertex count the exact search accepts
    #[arg(long, global = true, env = "GRUNDY_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Jsonl)]
    format: Format,
    /// Worker threads for sweeps and tables [default: one per core]
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Add wall-clock milliseconds to every record
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Jsonl,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Exact value of one invariant
    Invariant {
        graph: GraphSpec,
        #[arg(long, default_value = "total")]
        variant: Variant,
        /// Print an optimal sequence
        #[arg(long)]
        witness: bool,
        /// Instead, check the edge-partition bound on this many random
        /// two-part splits of the edge set (all four variants)
        #[arg(long)]
        partitions: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Product experiment; with none of --solve, --predict, --witness given,
    /// all three run
    Product {
        kind: ProductKind,
        g: GraphSpec,
        h: GraphSpec,
        #[arg(long)]
        solve: bool,
        #[arg(long)]
        predict: bool,
        /// Build a constructive witness (and print it)
        #[arg(long)]
        witness: bool,
    },
    /// Compare the direct product with the product of factor values on
    /// every unordered pair of input graphs
    #[command(group(ArgGroup::new("source").required(true).args(["max_n", "file", "graphs"])))]
    SweepConjecture {
        /// Use every connected graph on 2..=N vertices
        #[arg(long)]
        max_n: Option<usize>,
        /// With --max-n, only bipartite graphs
        #[arg(long, requires = "max_n")]
        bipartite: bool,
        /// A graph6 file, one graph per line
        #[arg(long)]
        file: Option<PathBuf>,
        graphs: Vec<GraphSpec>,
    },
    /// Predicted, solved and witness-certified values for path and cycle
    /// products
    Tables {
        kind: ProductKind,
        /// First-factor orders, as A..B or N
        #[arg(long, default_value = "2..5", value_parser = parse_range)]
        k: RangeInclusive<usize>,
        /// Second-factor orders, as A..B or N
        #[arg(long, default_value = "2..5", value_parser = parse_range)]
        l: RangeInclusive<usize>,
        /// Factor shapes: pp, pc, cp, cc
        #[arg(long, value_delimiter = ',', default_value = "pp,pc,cp,cc")]
        shapes: Vec<Shape>,
    },
    /// Grundy edge-cover sequences on hypergraphs in text form
    Hypergraph {
        #[command(subcommand)]
        command: HyperCommand,
    },
}

#[derive(Subcommand)]
enum HyperCommand {
    /// Longest legal edge sequence; FILE may be - for stdin
    Rho {
        file: PathBuf,
        #[arg(long)]
        witness: bool,
    },
    /// Product hypergraph
    Product {
        a: PathBuf,
        b: PathBuf,
        /// Also compute rho of the product
        #[arg(long)]
        rho: bool,
    },
    /// Incidence bipartite graph, as graph6
    Incidence { file: PathBuf },
    /// Neighborhood hypergraph of a graph
    Neighborhood {
        graph: GraphSpec,
        #[arg(long)]
        closed: bool,
    },
}

fn run(cli: Cli) -> Result<Vec<Record>> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("cannot start the worker pool")?;
    }
    let mut opts = Options {
        cap: cli.cap,
        timing: cli.timing,
        ..Options::default()
    };
    match cli.command {
        Command::Invariant {
            graph,
            variant,
            witness,
            partitions,
            seed,
        } => {
            let g = NamedGraph::from_spec(graph)?;
            opts.emit_witness = witness;
            match partitions {
                Some(splits) => commands::partition_checks(&g, seed, splits, &opts),
                None => Ok(vec![commands::invariant(&g, variant, &opts)?]),
            }
        }
        Command::Product {
            kind,
            g,
            h,
            solve,
            predict,
            witness,
        } => {
            let (g, h) = (NamedGraph::from_spec(g)?, NamedGraph::from_spec(h)?);
            let flags = if solve || predict || witness {
                ProductFlags {
                    solve,
                    predict,
                    witness,
                }
            } else {
                ProductFlags::ALL
            };
            opts.emit_witness = witness;
            Ok(vec![commands::product(kind, &g, &h, flags, &opts)?])
        }
        Command::SweepConjecture {
            max_n,
            bipartite,
            file,
            graphs,
        } => {
            let source = match (max_n, file) {
                (Some(max_n), _) => SweepSource::Enumerate { max_n, bipartite },
                (None, Some(p)) => SweepSource::File(p),
                (None, None) => SweepSource::Specs(graphs),
            };
            let inputs = commands::sweep_inputs(&source)?;
            Ok(commands::sweep(&inputs, &opts))
        }
        Command::Tables { kind, k, l, shapes } => commands::tables(&TableRequest { kind, k, l, shapes }, &opts),
        Command::Hypergraph { command } => {
            let name = |p: &PathBuf| p.display().to_string();
            match command {
                HyperCommand::Rho { file, witness } => {
                    opts.emit_witness = witness;
                    let h = commands::read_hypergraph(&file)?;
                    Ok(vec![commands::hypergraph_rho(&name(&file), &h, &opts)?])
                }
                HyperCommand::Product { a, b, rho } => {
                    let (ha, hb) = (commands::read_hypergraph(&a)?, commands::read_hypergraph(&b)?);
                    Ok(vec![commands::hypergraph_product_record(
                        (&name(&a), &ha),
                        (&name(&b), &hb),
                        rho,
                        &opts,
                    )?])
                }
                HyperCommand::Incidence { file } => {
                    let h = commands::read_hypergraph(&file)?;
                    Ok(vec![commands::hypergraph_incidence(&name(&file), &h)])
                }
                HyperCommand::Neighborhood { graph, closed } => {
                    let g = NamedGraph::from_spec(graph)?;
                    Ok(vec![commands::hypergraph_neighborhood(&g, closed)])
                }
            }
        }
    }
}

fn print(records: &[Record], format: Format) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match format {
        Format::Jsonl => {
            for r in records {
                writeln!(out, "{}", r.to_json())?;
            }
        }
        Format::Table => out.write_all(render_table(records).as_bytes())?,
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli).and_then(|records| print(&records, format)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
