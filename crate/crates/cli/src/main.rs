use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use oneplanar_total::coloring::{exact_total_chromatic_number, verify_total_coloring, ChromaticOutcome};
use oneplanar_total::discharging::{audit, solve_cluster_program};
use oneplanar_total::drawing::{
    parse_drawing, serialize_drawing, underlying_graph, validate_drawing, OnePlanarDrawing,
};
use oneplanar_total::extend::{color_drawing, EngineError};
use oneplanar_total::generate::{generate_random_1planar, GeneratorConfig};
use oneplanar_total::graph::Graph;
use oneplanar_total::io::{parse_coloring, parse_graph, serialize_coloring};
use oneplanar_total::structure::check_embedding;

/// Total colorings and charge audits for 1-planar drawings.
#[derive(Parser)]
#[command(name = "onepl", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a drawing file for structural problems.
    Validate {
        drawing: PathBuf,
        /// Also evaluate the local face/degree checks at every site.
        #[arg(long)]
        diagnostics: bool,
    },
    /// Total-color the underlying graph of a drawing.
    Color {
        drawing: PathBuf,
        #[arg(long)]
        r: Option<usize>,
        /// Write the reduction trace here, one configuration per line.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Write the coloring here instead of standard output.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Check a coloring against a drawing or a graph file.
    Verify {
        input: PathBuf,
        coloring: PathBuf,
        #[arg(long)]
        k: u32,
    },
    /// Exact total chromatic number of a small graph.
    Oracle {
        graph: PathBuf,
        /// Largest palette to try; defaults to the maximum degree plus 3.
        #[arg(long)]
        max_k: Option<u32>,
    },
    /// Run the discharging rules on a drawing and report final charges.
    Audit {
        drawing: PathBuf,
        #[arg(long, default_value_t = 13)]
        r: usize,
        #[arg(long)]
        transfers: bool,
    },
    /// Optimum of the cluster program for a degree between 8 and 12.
    Qd {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        side_conditions: bool,
    },
    /// Print a random 1-planar drawing.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Share of quadrilateral faces that receive a crossing.
        #[arg(long, default_value_t = 0.5)]
        crossings: f64,
        #[arg(long)]
        max_degree: Option<usize>,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_drawing(path: &Path) -> Result<OnePlanarDrawing> {
    parse_drawing(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

/// A graph file, or the underlying graph of a drawing file together with
/// the drawing id of each graph vertex.
fn load_graph(path: &Path) -> Result<(Graph, Option<Vec<usize>>)> {
    let text = read(path)?;
    let looks_like_graph = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with("c "))
        .is_some_and(|l| l.starts_with("p "));
    if looks_like_graph {
        let g = parse_graph(&text).with_context(|| format!("parsing {}", path.display()))?;
        return Ok((g, None));
    }
    let d = parse_drawing(&text).with_context(|| format!("parsing {}", path.display()))?;
    let g = underlying_graph(&d)?;
    Ok((g, Some(d.true_vertices())))
}

fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::Validate { drawing, diagnostics } => {
            let d = load_drawing(&drawing)?;
            let rep = validate_drawing(&d);
            print!("{rep}");
            if diagnostics && rep.is_ok() {
                print!("{}", check_embedding(&d));
            }
            Ok(rep.is_ok())
        }
        Cmd::Color {
            drawing,
            r,
            trace,
            out,
        } => {
            let d = load_drawing(&drawing)?;
            let labels = d.true_vertices();
            let res = match color_drawing(&d, r) {
                Ok(res) => res,
                Err(EngineError::NoConfigurationFound { residual, audit }) => {
                    eprintln!(
                        "no reducible configuration left ({} edges remain)",
                        residual.num_edges()
                    );
                    if let Some(a) = audit {
                        eprint!("{a}");
                    }
                    return Ok(false);
                }
                Err(e) => return Err(e.into()),
            };
            let text = serialize_coloring(&res.coloring, Some(&labels));
            match out {
                Some(p) => fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?,
                None => print!("{text}"),
            }
            if let Some(p) = trace {
                let mut lines = String::new();
                for s in &res.trace.steps {
                    lines.push_str(&relabeled(&s.config.to_string(), &labels));
                    lines.push('\n');
                }
                fs::write(&p, lines).with_context(|| format!("writing {}", p.display()))?;
            }
            eprintln!(
                "r = {}, {} colors, {} reductions",
                res.r,
                res.r + 2,
                res.trace.steps.len()
            );
            Ok(true)
        }
        Cmd::Verify { input, coloring, k } => {
            let (g, labels) = load_graph(&input)?;
            let c = parse_coloring(&read(&coloring)?, g.num_vertices(), k, labels.as_deref())
                .with_context(|| format!("parsing {}", coloring.display()))?;
            let rep = verify_total_coloring(&g, &c, k);
            print!("{rep}");
            Ok(rep.is_ok())
        }
        Cmd::Oracle { graph, max_k } => {
            let (g, _) = load_graph(&graph)?;
            let max_k = max_k.unwrap_or(g.max_degree() as u32 + 3);
            match exact_total_chromatic_number(&g, max_k) {
                ChromaticOutcome::Exact { k, .. } => {
                    println!("{k}");
                    Ok(true)
                }
                ChromaticOutcome::ExceedsBudget { max_k } => {
                    println!("more than {max_k}");
                    Ok(false)
                }
            }
        }
        Cmd::Audit {
            drawing,
            r,
            transfers,
        } => {
            let d = load_drawing(&drawing)?;
            let rep = audit(&d, r)?;
            print!("{rep}");
            if transfers {
                println!("transfers: {}", rep.transfers.len());
                for t in &rep.transfers {
                    println!("  {t}");
                }
            }
            Ok(rep.conserved)
        }
        Cmd::Qd { d, side_conditions } => {
            let sol = solve_cluster_program(d, side_conditions)?;
            let n = sol.argmax.n;
            println!("q{d} = {}", sol.q);
            println!("n1..n5 = {} {} {} {} {}", n[0], n[1], n[2], n[3], n[4]);
            Ok(true)
        }
        Cmd::Gen {
            n,
            seed,
            crossings,
            max_degree,
        } => {
            let mut cfg = GeneratorConfig::new(n, seed, crossings);
            cfg.max_degree_cap = max_degree;
            print!("{}", serialize_drawing(&generate_random_1planar(&cfg)?));
            Ok(true)
        }
    }
}

/// Rewrites the 1-based graph ids in a configuration line as drawing ids.
fn relabeled(line: &str, labels: &[usize]) -> String {
    line.split(' ')
        .map(|tok| match tok.parse::<usize>() {
            Ok(id) if id >= 1 && id <= labels.len() => (labels[id - 1] + 1).to_string(),
            _ => tok.to_string(),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
