//! `matchex`: build matching, bounded-degree and domination complexes, run
//! Morse schedules, compute homology, and verify the structural theorems.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage or I/O error.

mod render;
mod source;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use matchex::io::{read_schedule, write_matching};
use matchex::morse::{kn_schedule, knn_schedule};
use matchex::theorems::{self, jonsson_nu};
use matchex::{graph::Labels, is_acyclic, reduced_homology, run_schedule, Complex, Graph, Schedule};

use render::{emit, Format, Output};
use source::{build_cached, cache_dir, load_complex, save_complex, BoundArgs, GraphArgs, Spec};

#[derive(Parser, Debug)]
#[command(name = "matchex", version, about = "Higher matching complexes: construction, Morse matchings, homology")]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long, value_name = "FILE", global = true)]
    out: Option<PathBuf>,
    /// Complex cache directory (overridden by MATCHEX_CACHE)
    #[arg(long, value_name = "DIR", global = true)]
    cache: Option<PathBuf>,
    /// Record wall-clock milliseconds in verification reports
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a complex and print its f-vector, Euler characteristic and facet dimensions
    Build {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        bound: BoundArgs,
        /// Write the complex to FILE
        #[arg(long, value_name = "FILE")]
        save: Option<PathBuf>,
        /// Read the complex from FILE instead of building it
        #[arg(long, value_name = "FILE")]
        load: Option<PathBuf>,
    },
    /// Reduced integral homology
    Homology {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        bound: BoundArgs,
        /// Domination complex D_{N,GAMMA}
        #[arg(long, num_args = 2, value_names = ["N", "GAMMA"])]
        domination: Option<Vec<usize>>,
        #[arg(long, value_name = "FILE")]
        load: Option<PathBuf>,
    },
    /// Discrete Morse matchings
    Morse {
        #[command(subcommand)]
        action: MorseAction,
    },
    /// Verification reports; exit code 1 if any fails
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Domination complex D_{n,gamma}: statistics and homology
    Domination {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        gamma: usize,
    },
    /// Jonsson's connectivity bound for M_d(K_n)
    Bound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
}

#[derive(Subcommand, Debug)]
enum MorseAction {
    /// Run an element-matching schedule and report the critical cells
    Run {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        bound: BoundArgs,
        /// kn, knn, or a file of edges "u v" in schedule order
        #[arg(long, default_value = "kn")]
        schedule: String,
        /// Write the matching ("lower upper" pairs, "# critical", cells) to FILE
        #[arg(long, value_name = "FILE")]
        export: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyTarget {
    /// M_{n-2}(K_n) is a wedge of n-1 spheres
    Kn {
        #[arg(long)]
        n: usize,
    },
    /// M_{n-1}(K_{n,n}) is a sphere
    Knn {
        #[arg(long)]
        n: usize,
    },
    /// Sharpness of the connectivity bound for M_{n-2}(K_n)
    Sharpness {
        #[arg(long)]
        n: usize,
    },
    /// Homology of D_{6,3}
    Domination,
    /// Domination filtration facts for D_{n,gamma}
    Filtration {
        #[arg(long)]
        n: usize,
    },
    /// Facet size bounds; --bipartite for M_{n-1}(K_{n,n})
    Facets {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bipartite: bool,
    },
    /// M_r(K_{m,n}) as a join of simplex skeleta
    Join {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Homology proxy for the Cohen-Macaulay property of a skeleton (exploratory)
    Cm {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        bound: BoundArgs,
        /// Skeleton dimension; omitted means every dimension
        #[arg(long)]
        k: Option<isize>,
    },
    /// The full suite
    All,
}

/// How a run that did not error ended.
enum Outcome {
    Done,
    Failed,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn write_output(cli: &Cli, out: &Output) -> Result<()> {
    let text = emit(out, cli.format);
    match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn complex_from(cli: &Cli, graph: &GraphArgs, bound: &BoundArgs, load: Option<&Path>) -> Result<Complex> {
    if let Some(path) = load {
        if graph.is_given() || bound.is_given() {
            bail!("--load replaces the graph and bound flags");
        }
        return load_complex(path);
    }
    let g = graph.resolve()?;
    let spec = bound.spec()?;
    build_cached(&g, &spec, cache_dir(cli.cache.as_deref()).as_deref())
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Build {
            graph,
            bound,
            save,
            load,
        } => {
            let k = complex_from(cli, graph, bound, load.as_deref())?;
            if let Some(path) = save {
                save_complex(path, &k)?;
            }
            write_output(cli, &Output::stats(&k.stats()))?;
        }
        Command::Homology {
            graph,
            bound,
            domination,
            load,
        } => {
            let k = match domination {
                Some(ng) => {
                    if graph.is_given() || bound.is_given() || load.is_some() {
                        bail!("--domination replaces the graph and bound flags");
                    }
                    build_cached(
                        &Graph::complete(ng[0])?,
                        &Spec::Domination(ng[1]),
                        cache_dir(cli.cache.as_deref()).as_deref(),
                    )?
                }
                None => complex_from(cli, graph, bound, load.as_deref())?,
            };
            write_output(cli, &Output::homology(&reduced_homology(&k)?))?;
        }
        Command::Morse {
            action:
                MorseAction::Run {
                    graph,
                    bound,
                    schedule,
                    export,
                },
        } => {
            let g = graph.resolve()?;
            let k = build_cached(&g, &bound.spec()?, cache_dir(cli.cache.as_deref()).as_deref())?;
            let s = schedule_for(&g, schedule)?;
            let m = run_schedule(&k, &s)?;
            if let Some(path) = export {
                fs::write(path, write_matching(&m)).with_context(|| format!("cannot write {}", path.display()))?;
            }
            let acyclic = is_acyclic(&k, &m)?.is_acyclic();
            let critical = m.critical().iter().map(|f| f.to_hex()).collect();
            write_output(cli, &Output::morse(&m.summary(), acyclic, critical))?;
        }
        Command::Verify { target } => {
            let mut reports = match target {
                VerifyTarget::Kn { n } => vec![theorems::verify_theorem_kn(*n)?],
                VerifyTarget::Knn { n } => vec![theorems::verify_theorem_knn(*n)?],
                VerifyTarget::Sharpness { n } => vec![theorems::verify_sharpness(*n)?],
                VerifyTarget::Domination => vec![theorems::verify_domination_table()?],
                VerifyTarget::Filtration { n } => vec![theorems::verify_filtration(*n)?],
                VerifyTarget::Facets { n, bipartite: false } => vec![theorems::verify_facet_bounds_kn(*n)?],
                VerifyTarget::Facets { n, bipartite: true } => vec![theorems::verify_facet_bounds_knn(*n)?],
                VerifyTarget::Join { m, n, r } => vec![theorems::verify_join_identity(*m, *n, *r)?],
                VerifyTarget::Cm { graph, bound, k } => {
                    let complex = complex_from(cli, graph, bound, None)?;
                    match k {
                        Some(k) => vec![theorems::cm_proxy_check(&complex, *k)?],
                        None => (0..=complex.dim())
                            .map(|k| theorems::cm_proxy_check(&complex, k))
                            .collect::<matchex::Result<_>>()?,
                    }
                }
                VerifyTarget::All => theorems::verify_all()?,
            };
            if !cli.timing {
                for r in &mut reports {
                    r.millis = 0;
                }
            }
            let out = Output::reports(&reports);
            write_output(cli, &out)?;
            if matches!(target, VerifyTarget::All) && cli.format == Format::Json {
                eprint!("{}", render::table(&out.header, &out.rows));
            }
            if reports.iter().any(|r| !r.pass) {
                return Ok(Outcome::Failed);
            }
        }
        Command::Domination { n, gamma } => {
            let k = build_cached(
                &Graph::complete(*n)?,
                &Spec::Domination(*gamma),
                cache_dir(cli.cache.as_deref()).as_deref(),
            )?;
            write_output(cli, &Output::stats_and_homology(&k.stats(), &reduced_homology(&k)?))?;
        }
        Command::Bound { n, d } => {
            write_output(cli, &Output::bound(&jonsson_nu(*n, *d)?))?;
        }
    }
    Ok(Outcome::Done)
}

fn schedule_for(g: &Graph, selector: &str) -> Result<Schedule> {
    match selector {
        "kn" => {
            let n = g.n_vertices();
            if g.edges() != Graph::complete(n)?.edges() || !matches!(g.labels(), Labels::Plain) {
                bail!("the kn schedule needs a complete graph");
            }
            Ok(kn_schedule(n)?)
        }
        "knn" => match g.labels() {
            Labels::Bipartite { left, right } if left == right && g.n_edges() == left * right => {
                Ok(knn_schedule(*left)?)
            }
            _ => bail!("the knn schedule needs a complete bipartite graph K_{{n,n}}"),
        },
        path => {
            let text = fs::read_to_string(path).with_context(|| format!("cannot read schedule {path}"))?;
            read_schedule(&text, g).with_context(|| format!("in {path}"))
        }
    }
}
