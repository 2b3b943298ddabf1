use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use graphcensus::census::{budget_from_env, count, CensusQuery, Family};
use graphcensus::fixtures::{census_fixtures, parse_fixtures};
use graphcensus::mset::{k_component_table, PairTable};
use graphcensus::polya::{ancillary_files, connected_multigraph_gf_factored, connected_table};
use graphcensus::verify::{verify_with, Bounds, Scope, COMPONENT_EXTENT};
use graphcensus::{Error, TagPattern};

const EXIT_MISMATCH: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_USAGE: u8 = 4;

/// Counts of small graphs by edges, vertices and structural tags.
#[derive(Parser)]
#[command(name = "graphcensus", version)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count table for a tag pattern.
    Table(TableArgs),
    /// Generating function of connected loopless multigraphs on V vertices.
    Gf {
        #[arg(long)]
        vertices: usize,
        #[arg(long, default_value_t = 15)]
        terms: usize,
    },
    /// Graphs with exactly k components.
    Components {
        /// `simple`, `multigraph`, or a connected-graph table file.
        #[arg(long, default_value = "simple")]
        base: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = COMPONENT_EXTENT.0)]
        max_e: usize,
        #[arg(long, default_value_t = COMPONENT_EXTENT.1)]
        max_v: usize,
    },
    /// Recompute the embedded tables and report differences.
    Verify {
        #[arg(long, value_enum, default_value_t = ScopeArg::All)]
        scope: ScopeArg,
        /// Census bound on E for both directed and undirected tables.
        #[arg(long)]
        max_e: Option<usize>,
        /// Census bound on V for both directed and undirected tables.
        #[arg(long)]
        max_v: Option<usize>,
        /// Census fixture file (`[id]` blocks) instead of the embedded tables.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Write the G.V.E.txt files of connected simple graphs on V vertices.
    Ancillary {
        #[arg(long)]
        vertices: usize,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
}

#[derive(Args)]
struct TableArgs {
    /// Tag pattern, e.g. `-dc-i-m-l` or `d.*Cc`.
    #[arg(long, allow_hyphen_values = true)]
    tags: String,
    #[arg(long, conflicts_with = "unlabeled")]
    labeled: bool,
    #[arg(long)]
    unlabeled: bool,
    #[arg(long, default_value_t = 6)]
    max_e: usize,
    #[arg(long, default_value_t = 6)]
    max_v: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Latex,
    Fixture,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    All,
    Census,
    Gf,
    Mset,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return if usage { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::BudgetExceeded { .. }) => EXIT_BUDGET,
        Some(Error::Pattern { .. } | Error::OutOfRange(_)) => EXIT_USAGE,
        _ => 1,
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Table(a) => {
            let pattern: TagPattern = a.tags.parse()?;
            if pattern.is_impossible() {
                eprintln!("warning: impossible tag combination `{pattern}`; every count is zero");
            }
            let table = count(&CensusQuery::new(pattern, a.labeled, a.max_e, a.max_v))?;
            print!(
                "{}",
                match a.format {
                    Format::Csv => table.to_csv(),
                    Format::Latex => table.to_latex(),
                    Format::Fixture => table.to_fixture(),
                }
            );
        }
        Command::Gf { vertices, terms } => {
            let g = connected_multigraph_gf_factored(vertices)?;
            let s = g.series(terms)?;
            println!("{g}");
            println!("{}", s.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","));
        }
        Command::Components { base, k, max_e, max_v } => {
            if k == 0 {
                return Err(Error::OutOfRange("k must be at least 1".into()).into());
            }
            let base = match base.as_str() {
                "simple" => connected_table(Family::simple(false), max_e, max_v)?,
                "multigraph" => connected_table(Family::loopless(false), max_e, max_v)?,
                path => {
                    let text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
                    PairTable::from_text(&text)?
                }
            };
            print!("{}", k_component_table(&base, k, max_e, max_v)?.to_text());
        }
        Command::Verify { scope, max_e, max_v, fixtures } => {
            let scope = match scope {
                ScopeArg::All => Scope::All,
                ScopeArg::Census => Scope::Census,
                ScopeArg::Gf => Scope::Gf,
                ScopeArg::Mset => Scope::Mset,
            };
            let mut bounds = Bounds::default();
            if let Some(e) = max_e {
                bounds.directed_edges = e;
                bounds.undirected_edges = e;
            }
            if let Some(v) = max_v {
                bounds.directed_vertices = v;
                bounds.undirected_vertices = v;
            }
            let census = match fixtures {
                Some(path) => {
                    let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                    parse_fixtures(&text)?
                }
                None => census_fixtures(),
            };
            let report = verify_with(scope, bounds, budget_from_env(), &census)?;
            for m in &report.mismatches {
                println!("mismatch {m}");
            }
            for m in &report.errata {
                println!("erratum {m}");
            }
            println!(
                "checked {}, skipped {}, errata {}, mismatches {}",
                report.checked,
                report.skipped,
                report.errata.len(),
                report.mismatches.len()
            );
            if !report.passed() {
                return Ok(ExitCode::from(EXIT_MISMATCH));
            }
        }
        Command::Ancillary { vertices, out_dir } => {
            let files = ancillary_files(vertices)?;
            fs::create_dir_all(&out_dir).with_context(|| format!("creating {}", out_dir.display()))?;
            for (name, text) in files {
                let path = out_dir.join(&name);
                fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
                println!("{}", path.display());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
