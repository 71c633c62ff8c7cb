use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use findex_core::edgelist::{parse_edge_list, serialize_edge_list};
use findex_core::indices::{
    f_index, first_zagreb, general_first_zagreb, redefined_zagreb, second_zagreb,
};
use findex_core::transforms::{f_sum_with, hierarchical_product_with, line_graph, ProductOptions};
use findex_core::verifier::{run_suite, SuiteConfig};
use findex_core::{build_family, BigIndexValue, FamilySpec, Graph, SubdivisionOp, VertexSubset};

#[derive(Parser, Debug)]
#[command(
    name = "findex",
    version,
    about = "Exact degree-based indices on graph operations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print topological indices of a graph.
    Compute {
        /// Edge-list file; standard input when omitted or `-`.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// One of f, m1, m2, xi:A, rezm, all.
        #[arg(long, default_value = "all")]
        index: String,
    },
    /// Apply S, R, Q, T or the line graph operator.
    Transform {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// One of s, r, q, t, line.
        #[arg(long)]
        op: String,
    },
    /// Build the F-sum G +_op H.
    Fsum {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        h: PathBuf,
        /// One of s, r, q, t.
        #[arg(long)]
        op: String,
        #[arg(long)]
        allow_disconnected: bool,
    },
    /// Build the generalized hierarchical product G(U)ΠH.
    Hier {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        h: PathBuf,
        /// Comma-separated vertex ids of G.
        #[arg(long, value_delimiter = ',', required = true)]
        u: Vec<usize>,
        #[arg(long)]
        allow_disconnected: bool,
    },
    /// Generate a named graph family.
    Family {
        /// path, cycle, complete, star, complete_bipartite, nanotube, hexagonal_chain
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: usize,
        /// Second parameter (complete_bipartite).
        #[arg(long)]
        m: Option<usize>,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, default_value_t = SuiteConfig::default().max_order)]
        max_order: usize,
        #[arg(long, default_value_t = SuiteConfig::default().cases_per_formula)]
        cases: usize,
        #[arg(long, default_value_t = SuiteConfig::default().seed)]
        seed: u64,
        /// Write one JSON record per case to this file.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        allow_disconnected: bool,
        /// Only print the summary.
        #[arg(long)]
        quiet: bool,
    },
}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        }
        _ => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .context("reading standard input")?;
            Ok(text)
        }
    }
}

fn read_graph(path: Option<&Path>) -> Result<Graph> {
    let text = read_input(path)?;
    let name = path.map_or_else(|| "<stdin>".to_string(), |p| p.display().to_string());
    parse_edge_list(&text).with_context(|| format!("parsing {name}"))
}

fn write_graph(g: &Graph) -> Result<()> {
    io::stdout().write_all(serialize_edge_list(g).as_bytes())?;
    Ok(())
}

fn options(allow_disconnected: bool) -> ProductOptions {
    ProductOptions {
        enforce_connected: !allow_disconnected,
    }
}

fn compute(g: &Graph, index: &str) -> Result<String> {
    let value: BigIndexValue = match index {
        "all" => {
            let rows = [
                ("n", BigIndexValue::from(g.vertex_count())),
                ("m", BigIndexValue::from(g.edge_count())),
                ("m1", first_zagreb(g)?),
                ("m2", second_zagreb(g)?),
                ("f", f_index(g)?),
                ("xi4", general_first_zagreb(g, 4)?),
                ("rezm", redefined_zagreb(g)?),
            ];
            return Ok(rows.iter().map(|(k, v)| format!("{k} {v}\n")).collect());
        }
        "f" => f_index(g)?,
        "m1" => first_zagreb(g)?,
        "m2" => second_zagreb(g)?,
        "rezm" => redefined_zagreb(g)?,
        other => match other.strip_prefix("xi:") {
            Some(exp) => {
                let a: i64 = exp
                    .parse()
                    .with_context(|| format!("invalid exponent `{exp}`"))?;
                general_first_zagreb(g, a)?
            }
            None => bail!("unknown index `{other}` (expected f, m1, m2, xi:A, rezm or all)"),
        },
    };
    Ok(format!("{value}\n"))
}

/// Exit code 0 on success, 2 when verification found unexpected results.
fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Compute { input, index } => {
            let g = read_graph(input.as_deref())?;
            print!("{}", compute(&g, &index)?);
        }
        Command::Transform { input, op } => {
            let g = read_graph(input.as_deref())?;
            let out = if op.eq_ignore_ascii_case("line") {
                line_graph(&g)
            } else {
                op.parse::<SubdivisionOp>()?.apply(&g).graph
            };
            write_graph(&out)?;
        }
        Command::Fsum {
            g,
            h,
            op,
            allow_disconnected,
        } => {
            let op: SubdivisionOp = op.parse()?;
            let (g, h) = (read_graph(Some(&g))?, read_graph(Some(&h))?);
            write_graph(&f_sum_with(&g, &h, op, options(allow_disconnected))?)?;
        }
        Command::Hier {
            g,
            h,
            u,
            allow_disconnected,
        } => {
            let (g, h) = (read_graph(Some(&g))?, read_graph(Some(&h))?);
            let subset = VertexSubset::new(&g, u)?;
            write_graph(&hierarchical_product_with(
                &g,
                &subset,
                &h,
                options(allow_disconnected),
            )?)?;
        }
        Command::Family { name, n, m } => {
            let spec = FamilySpec::from_name(&name, n, m)?;
            write_graph(&build_family(&spec)?)?;
        }
        Command::Verify {
            max_order,
            cases,
            seed,
            report,
            allow_disconnected,
            quiet,
        } => {
            let config = SuiteConfig {
                max_order,
                cases_per_formula: cases,
                seed,
                enforce_connected: !allow_disconnected,
            };
            let outcome = run_suite(&config)?;
            if let Some(path) = report {
                fs::write(&path, outcome.to_json_lines())
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            let text = if quiet {
                outcome.summary_text()
            } else {
                outcome.to_text()
            };
            io::stdout().write_all(text.as_bytes())?;
            if !outcome.all_as_expected() {
                return Ok(2);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
