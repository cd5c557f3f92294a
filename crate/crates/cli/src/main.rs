mod config;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use capelli_core::arith::{RatFunc, Rational};
use capelli_core::combinatorics::{Partition, StandardTableau};
use capelli_core::gl::{capelli_eigenvalue, capelli_trace, GlContext};
use capelli_core::osp::{leading_symbol, z_nu, OspContext};
use capelli_core::symgroup::{fusion_idempotent, young_idempotent};
use capelli_core::tensor::Kind;
use capelli_core::verify::{parse_suites, run_suites, Bounds, Suite};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use config::Config;

#[derive(Parser, Debug)]
#[command(name = "capelli", version, about = "Capelli elements of gl_N and their analogues for so_N and sp_N")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// key=value file with defaults for suite, max_n, max_N, format, timing, threads.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the standard tableaux of a shape with their contents.
    Tableaux { shape: String },
    /// Print the idempotent Phi_T of a standard tableau.
    Phi {
        shape: String,
        /// Index of the tableau in the `tableaux` listing.
        #[arg(long, default_value_t = 0)]
        index: usize,
        /// Use the fusion procedure instead of matrix elements.
        #[arg(long)]
        fusion: bool,
    },
    /// Print the Capelli element C_nu of U(gl_N), or an eigenvalue.
    Capelli {
        shape: String,
        #[arg(long = "N")]
        dim: usize,
        /// Shift parameter u (a rational number).
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        u: String,
        /// Print the eigenvalue on the highest-weight vector of this weight instead.
        #[arg(long)]
        eigenvalue: Option<String>,
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
    /// Print Z_nu(u) of U(so_N) or U(sp_N) and its leading symbol.
    Znu {
        shape: String,
        #[arg(long = "N")]
        dim: usize,
        #[arg(long, value_parser = parse_kind)]
        kind: Kind,
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
    /// Run verification suites.
    Verify {
        /// gl, reflection, znu, leading, plethysm, bmu, fusion, hyperoctahedral or all.
        suite: Option<String>,
        #[arg(long = "max-n")]
        max_n: Option<usize>,
        #[arg(long = "max-N")]
        max_dim: Option<usize>,
        /// Omit the elapsed field.
        #[arg(long = "no-timing")]
        no_timing: bool,
        /// Extend the hyperoctahedral suite to n = 4.
        #[arg(long)]
        slow: bool,
    },
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse::<Kind>().map_err(|e| e.to_string())
}

fn parse_shape(s: &str) -> Result<Partition> {
    let p: Partition = s.parse()?;
    if p.is_empty() {
        bail!("shape must have at least one box");
    }
    Ok(p)
}

fn pick_tableau(shape: &Partition, index: usize) -> Result<StandardTableau> {
    let tabs = StandardTableau::all(shape);
    let n = tabs.len();
    tabs.into_iter().nth(index).with_context(|| format!("shape {shape} has only {n} standard tableaux"))
}

struct Output {
    format: Format,
}

impl Output {
    fn emit(&self, table: String, json: serde_json::Value) {
        match self.format {
            Format::Table => print!("{table}"),
            Format::Json => println!("{json}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let config = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    let format = match (cli.format, config.format.as_deref()) {
        (Some(f), _) => f,
        (None, Some(s)) => Format::from_str(s, true).map_err(|e| anyhow::anyhow!("format: {e}"))?,
        (None, None) => Format::Table,
    };
    configure_threads(config.threads)?;
    let out = Output { format };
    match cli.command {
        Command::Tableaux { shape } => tableaux(&parse_shape(&shape)?, &out),
        Command::Phi { shape, index, fusion } => phi(&parse_shape(&shape)?, index, fusion, &out),
        Command::Capelli { shape, dim, u, eigenvalue, index } => {
            capelli(&parse_shape(&shape)?, dim, &u, eigenvalue.as_deref(), index, &out)
        }
        Command::Znu { shape, dim, kind, index } => znu(&parse_shape(&shape)?, dim, kind, index, &out),
        Command::Verify { suite, max_n, max_dim, no_timing, slow } => {
            let name = suite.or(config.suite.clone()).unwrap_or_else(|| "all".to_string());
            let suites = parse_suites(&name)?;
            let timing = !no_timing && config.timing.unwrap_or(true);
            let bounds = Bounds { max_n: max_n.or(config.max_n), max_dim: max_dim.or(config.max_dim), timing };
            verify(&suites, bounds, slow, &out)
        }
    }
}

/// `CAPELLI_THREADS` wins over the config file.
fn configure_threads(from_config: Option<usize>) -> Result<()> {
    let from_env = match std::env::var("CAPELLI_THREADS") {
        Ok(v) => Some(v.parse::<usize>().context("CAPELLI_THREADS must be a positive number")?),
        Err(_) => None,
    };
    if let Some(n) = from_env.or(from_config).filter(|&n| n > 0) {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn tableaux(shape: &Partition, out: &Output) -> Result<ExitCode> {
    let tabs = StandardTableau::all(shape);
    let mut table = String::new();
    let mut items = Vec::new();
    for (i, t) in tabs.iter().enumerate() {
        let c = t.contents();
        table.push_str(&format!("{i}: {t}  contents {}\n", render::tuple(&c)));
        items.push(json!({ "index": i, "rows": t.rows(), "contents": c }));
    }
    out.emit(table, json!({ "shape": shape.parts(), "tableaux": items }));
    Ok(ExitCode::SUCCESS)
}

fn phi(shape: &Partition, index: usize, fusion: bool, out: &Output) -> Result<ExitCode> {
    let t = pick_tableau(shape, index)?;
    let x = if fusion { fusion_idempotent(&t)? } else { young_idempotent(&t) };
    out.emit(format!("{x}\n"), json!({ "tableau": t.rows(), "phi": x.to_json() }));
    Ok(ExitCode::SUCCESS)
}

fn capelli(
    shape: &Partition,
    dim: usize,
    u: &str,
    eigenvalue: Option<&str>,
    index: usize,
    out: &Output,
) -> Result<ExitCode> {
    let ctx = GlContext::new(dim)?;
    let u: Rational = u.parse().map_err(|_| anyhow::anyhow!("cannot parse u = {u:?} as a rational"))?;
    if shape.len() > dim {
        bail!("shape {shape} has more than {dim} rows");
    }
    if let Some(lambda) = eigenvalue {
        let lambda: Partition = lambda.parse()?;
        let value = capelli_eigenvalue(shape, &lambda, dim, &RatFunc::constant(u))?;
        out.emit(format!("{value}\n"), json!({ "shape": shape.parts(), "weight": lambda.parts(), "eigenvalue": value.to_string() }));
        return Ok(ExitCode::SUCCESS);
    }
    let t = pick_tableau(shape, index)?;
    let c = capelli_trace(&t, &ctx, &u)?;
    out.emit(format!("{c}\n"), json!({ "shape": shape.parts(), "N": dim, "u": u.to_string(), "element": c.to_json() }));
    Ok(ExitCode::SUCCESS)
}

fn znu(shape: &Partition, dim: usize, kind: Kind, index: usize, out: &Output) -> Result<ExitCode> {
    let ctx = OspContext::new(dim, kind)?;
    if shape.len() > dim {
        bail!("shape {shape} has more than {dim} rows");
    }
    let t = pick_tableau(shape, index)?;
    let z = z_nu(&t, &ctx)?;
    let symbol = leading_symbol(&z, shape.size(), &ctx)?;
    out.emit(
        format!("Z(u) = {z}\nleading symbol = {symbol}\n"),
        json!({
            "shape": shape.parts(),
            "N": dim,
            "kind": kind.name(),
            "element": z.to_json(),
            "leading_symbol": symbol.to_json(),
        }),
    );
    Ok(ExitCode::SUCCESS)
}

fn verify(suites: &[Suite], bounds: Bounds, slow: bool, out: &Output) -> Result<ExitCode> {
    let mut records = Vec::new();
    for &s in suites {
        let b = if slow && s == Suite::Hyperoctahedral { Bounds { max_n: Some(4), ..bounds } } else { bounds };
        records.extend(run_suites(&[s], b)?);
    }
    match out.format {
        Format::Table => print!("{}", render::verdict_table(&records)),
        Format::Json => {
            for r in &records {
                println!("{}", serde_json::to_string(r)?);
            }
        }
    }
    Ok(if records.iter().all(|r| r.passed()) { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
