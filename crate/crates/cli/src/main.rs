//! Command-line front door. Exit codes: 0 all checks pass, 1 a violation or
//! failed bound was found, 2 usage or I/O error.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use alphamu::constructions::{NamedGraph, Recipe};
use alphamu::corpus::{enumerate_regular, CorpusSpec};
use alphamu::write_graph6;
use anyhow::{anyhow, bail, Result};
use clap::{Parser, Subcommand, ValueEnum};

use alphamu_cli::report::{self, Format};
use alphamu_cli::runner::{
    check_bounds_suite, parse_corpus_spec, search_counterexample, verify_triple_on_corpus,
};
use alphamu_cli::verdict::classify_triple;

#[derive(Parser)]
#[command(
    name = "alphamu",
    about = "Exact verification of alpha_p(G) <= alpha_q(L(G)) on regular graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format for classify/verify/bounds/search
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Write the report to a file instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify one triple (p, q, r) as valid, refuted, or open
    Classify {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        r: u64,
    },
    /// Solve alpha_p and alpha_q(L) exactly on every corpus graph
    Verify {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        r: u64,
        /// enum:r=R,n=A..B[,connected] or file:PATH
        #[arg(long, value_parser = parse_corpus_spec)]
        corpus: CorpusSpec,
    },
    /// Evaluate every applicable bound on every corpus graph
    Bounds {
        #[arg(long, value_parser = parse_corpus_spec)]
        corpus: CorpusSpec,
    },
    /// Hunt for a graph with alpha_p > alpha_q(L): families first, then corpus
    Search {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        r: u64,
        /// Defaults to the connected r-regular corpus up to order 10
        #[arg(long, value_parser = parse_corpus_spec)]
        corpus: Option<CorpusSpec>,
    },
    /// Emit one witness-family graph as graph6
    Construct {
        /// sharp-bipartite | factorless-regular | p3-packing | petersen |
        /// complete | cycle | path | complete-bipartite | disjoint-edges
        #[arg(long)]
        family: String,
        /// Comma-separated integer parameters, e.g. --params 3,2,1
        #[arg(long, default_value = "")]
        params: String,
    },
    /// Emit all r-regular graphs of one order as graph6, one per line
    Enumerate {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(clean) => {
            if clean {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Returns whether every check passed (exit 0) or a violation exists (exit 1).
fn run(cli: Cli) -> Result<bool> {
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout().lock()),
    };
    let format = Format::from(cli.format);
    match cli.command {
        Command::Classify { p, q, r } => {
            let verdict = classify_triple(p, q, r as usize);
            report::emit_verdicts(&mut out, std::slice::from_ref(&verdict), format)?;
            Ok(true)
        }
        Command::Verify { p, q, r, corpus } => {
            let outcome = verify_triple_on_corpus(p, q, r as usize, &corpus)?;
            report::emit_verify(&mut out, &outcome, format)?;
            Ok(outcome.violations.is_empty())
        }
        Command::Bounds { corpus } => {
            let reports = check_bounds_suite(&corpus)?;
            report::emit_bounds(&mut out, &reports, format)?;
            Ok(reports.iter().all(|r| !r.failed()))
        }
        Command::Search { p, q, r, corpus } => {
            let r = r as usize;
            let spec = corpus.unwrap_or(CorpusSpec::Enumerate {
                r,
                n_min: r + 1,
                n_max: 10,
                connected_only: true,
            });
            let outcome = search_counterexample(p, q, r, &spec)?;
            report::emit_search(&mut out, &outcome, format)?;
            Ok(outcome.witness.is_none())
        }
        Command::Construct { family, params } => {
            let g = build_family(&family, &parse_params(&params)?)?.build()?;
            writeln!(out, "{}", write_graph6(&g)?)?;
            Ok(true)
        }
        Command::Enumerate { r, n, connected } => {
            let load = enumerate_regular(r, n, n, connected)?;
            for (order, reason) in &load.skipped {
                eprintln!("skipped order {order}: {reason}");
            }
            for g in &load.graphs {
                writeln!(out, "{}", write_graph6(g)?)?;
            }
            Ok(true)
        }
    }
}

fn parse_params(s: &str) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|e| anyhow!("bad parameter {part:?}: {e}"))
        })
        .collect()
}

fn build_family(family: &str, params: &[usize]) -> Result<Recipe> {
    let arity = |want: usize| -> Result<()> {
        if params.len() == want {
            Ok(())
        } else {
            bail!("{family} wants {want} parameter(s), got {}", params.len())
        }
    };
    Ok(match family {
        "sharp-bipartite" => {
            arity(3)?;
            Recipe::SharpBipartite {
                r: params[0],
                p: params[1],
                t: params[2],
            }
        }
        "factorless-regular" => {
            arity(1)?;
            Recipe::FactorlessRegular { k: params[0] }
        }
        "p3-packing" => {
            arity(1)?;
            Recipe::P3Packing { x: params[0] }
        }
        "petersen" => {
            arity(0)?;
            Recipe::Named(NamedGraph::Petersen)
        }
        "complete" => {
            arity(1)?;
            Recipe::Named(NamedGraph::Complete(params[0]))
        }
        "cycle" => {
            arity(1)?;
            Recipe::Named(NamedGraph::Cycle(params[0]))
        }
        "path" => {
            arity(1)?;
            Recipe::Named(NamedGraph::Path(params[0]))
        }
        "complete-bipartite" => {
            arity(2)?;
            Recipe::Named(NamedGraph::CompleteBipartite(params[0], params[1]))
        }
        "disjoint-edges" => {
            arity(1)?;
            Recipe::Named(NamedGraph::DisjointEdges(params[0]))
        }
        other => bail!("unknown family {other:?}"),
    })
}
