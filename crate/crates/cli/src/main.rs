//! `partree`: decomposition trees, planarity, coloring and criticality for
//! biconnected graphs from the command line.
//!
//! Exit codes: 0 ok, 1 parse or usage error, 2 precondition failure,
//! 3 budget exceeded, 4 internal error, 5 certificate rejected.

mod commands;
mod dot;
mod error;
mod input;
mod report;

use std::io::{IsTerminal, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use partree_core::coloring::{ColoringOptions, Strategy, DEFAULT_MAX_PART_VERTICES};
use partree_core::critical::MiddleKind;
use partree_core::planarity::{PlanarityOptions, DEFAULT_MAX_BLOCK_VERTICES};

use commands::{Input, OracleKind, Output, TreeOutput, TreeResult};
use error::{exit, CliError, Result};
use input::Format;
use report::{GraphPayload, Report};

#[derive(Debug, Parser)]
#[command(
    name = "partree",
    version,
    about = "Decompose biconnected graphs by independent 2-cutsets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input graph format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Auto)]
    format: Format,

    /// Record wall-clock time in the report. Output is then no longer
    /// reproducible byte for byte.
    #[arg(long, global = true)]
    timing: bool,

    /// Print a human-readable summary instead of JSON.
    #[arg(long, global = true)]
    text: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List k-cutsets, their independence matrix and the single cutsets.
    Cutsets {
        /// Graph file, or `-` for stdin.
        input: String,
        #[arg(short, long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=2))]
        k: u8,
    },
    /// Build the decomposition tree.
    Tree {
        input: String,
        /// Emit Graphviz DOT.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        /// Emit a JSON report (the default).
        #[arg(long)]
        json: bool,
        /// Build the block-cutpoint tree of a connected graph instead.
        #[arg(long)]
        k1: bool,
    },
    /// Color the graph and emit a certificate.
    Color {
        input: String,
        #[arg(long, default_value = "augmented", value_parser = parse_strategy)]
        strategy: Strategy,
        /// List file with `vertex: color, color` lines (list strategy only).
        #[arg(long)]
        lists: Option<String>,
        /// Largest non-cycle part colored exactly.
        #[arg(long, default_value_t = DEFAULT_MAX_PART_VERTICES)]
        max_part: usize,
    },
    /// Decide planarity; non-planar graphs get a Kuratowski witness.
    Planar {
        input: String,
        /// Largest block searched for a Kuratowski subdivision.
        #[arg(long, default_value_t = DEFAULT_MAX_BLOCK_VERTICES)]
        max_block: usize,
    },
    /// Decide whether the graph is critical biconnected.
    Critical {
        input: String,
        /// Cross-check the verdict by deleting every vertex.
        #[arg(long)]
        deletion_check: bool,
    },
    /// Emit a critical chain graph as an edge list.
    Generate {
        /// Middle parts in order: triangle, cycle4 or block4.
        #[arg(long, value_delimiter = ',', value_parser = parse_middle)]
        middle: Vec<MiddleKind>,
        /// Lengths of the two terminal cycles.
        #[arg(long, value_delimiter = ',', num_args = 1, default_value = "4,4")]
        terminals: Vec<usize>,
        /// Emit JSON instead of an edge list.
        #[arg(long)]
        json: bool,
    },
    /// Re-check the certificate in a `color` or `planar` report.
    Verify {
        input: String,
        /// Report produced by `partree color` or `partree planar`.
        #[arg(long)]
        certificate: String,
        /// List file the coloring was built from.
        #[arg(long)]
        lists: Option<String>,
    },
    /// Run a brute-force reference oracle.
    #[command(hide = true)]
    Oracle {
        #[arg(value_enum)]
        which: OracleKind,
        input: String,
        #[arg(short, long, default_value_t = 2)]
        k: usize,
    },
}

fn parse_strategy(s: &str) -> std::result::Result<Strategy, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Strategy::ALL.iter().map(|s| s.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

fn parse_middle(s: &str) -> std::result::Result<MiddleKind, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = MiddleKind::ALL.iter().map(|k| k.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

fn run(cli: Cli) -> Result<Output> {
    let started = cli.timing.then(Instant::now);
    let load = |path: &str| commands::read_graph(path, cli.format);
    fn wrap<T: serde::Serialize>(
        name: &str,
        args: Vec<String>,
        input: &Input,
        payload: &T,
        started: Option<Instant>,
    ) -> Result<Output> {
        commands::envelope(name, args, input, payload, started).map(Output::Report)
    }
    match &cli.command {
        Command::Cutsets { input, k } => {
            let input = load(input)?;
            let p = commands::cutsets(&input, usize::from(*k))?;
            wrap(
                "cutsets",
                vec!["--k".into(), k.to_string()],
                &input,
                &p,
                started,
            )
        }
        Command::Tree { input, dot, k1, .. } => {
            let input = load(input)?;
            let mode = if *dot {
                TreeOutput::Dot
            } else {
                TreeOutput::Json
            };
            let args = if *k1 { vec!["--k1".into()] } else { Vec::new() };
            match commands::tree(&input, *k1, mode)? {
                TreeResult::Dot(text) => Ok(Output::Text(text)),
                TreeResult::Bt(p) => wrap("tree", args, &input, &p, started),
                TreeResult::BlockCut(p) => wrap("tree", args, &input, &p, started),
            }
        }
        Command::Color {
            input,
            strategy,
            lists,
            max_part,
        } => {
            let input = load(input)?;
            let lists = lists.as_deref().map(commands::read_lists).transpose()?;
            let opts = ColoringOptions {
                max_part_vertices: *max_part,
            };
            let p = commands::color(&input, *strategy, lists.as_ref(), &opts)?;
            let mut args = vec!["--strategy".into(), strategy.name().into()];
            if lists.is_some() {
                args.push("--lists".into());
            }
            if *max_part != DEFAULT_MAX_PART_VERTICES {
                args.extend(["--max-part".into(), max_part.to_string()]);
            }
            wrap("color", args, &input, &p, started)
        }
        Command::Planar { input, max_block } => {
            let input = load(input)?;
            let opts = PlanarityOptions {
                max_block_vertices: *max_block,
            };
            let p = commands::planar(&input, &opts)?;
            let args = if *max_block != DEFAULT_MAX_BLOCK_VERTICES {
                vec!["--max-block".into(), max_block.to_string()]
            } else {
                Vec::new()
            };
            wrap("planar", args, &input, &p, started)
        }
        Command::Critical {
            input,
            deletion_check,
        } => {
            let input = load(input)?;
            let p = commands::critical(&input, *deletion_check)?;
            let args = if *deletion_check {
                vec!["--deletion-check".into()]
            } else {
                Vec::new()
            };
            wrap("critical", args, &input, &p, started)
        }
        Command::Generate {
            middle,
            terminals,
            json,
        } => {
            let &[a, b] = terminals.as_slice() else {
                return Err(CliError::Usage(
                    "--terminals takes two lengths, e.g. 4,5".into(),
                ));
            };
            let g = commands::generate(middle, (a, b))?;
            if *json {
                let text = serde_json::to_string_pretty(&GraphPayload::new(&g))
                    .expect("graph payload serialises");
                Ok(Output::Text(text + "\n"))
            } else {
                Ok(Output::Text(commands::generated_text(&g)))
            }
        }
        Command::Verify {
            input,
            certificate,
            lists,
        } => {
            let input = load(input)?;
            let raw = commands::read_source(certificate)?;
            let report: Report = serde_json::from_slice(&raw)
                .map_err(|e| CliError::parse(e.line(), format!("certificate: {e}")))?;
            let lists = lists.as_deref().map(commands::read_lists).transpose()?;
            let p = commands::verify(&input, &report, lists.as_ref())?;
            wrap(
                "verify",
                vec![report.command.name.clone()],
                &input,
                &p,
                started,
            )
        }
        Command::Oracle { which, input, k } => {
            let input = load(input)?;
            let p = commands::oracle(&input, *which, *k)?;
            let name = format!("{which:?}").to_lowercase();
            wrap(
                "oracle",
                vec![name, "--k".into(), k.to_string()],
                &input,
                &p,
                started,
            )
        }
    }
}

struct Style {
    color: bool,
}

impl Style {
    fn detect() -> Self {
        let no_color = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
        Style {
            color: !no_color && std::io::stdout().is_terminal(),
        }
    }

    fn value(&self, v: &serde_json::Value) -> String {
        let text = v.to_string();
        match (self.color, v) {
            (true, serde_json::Value::Bool(true)) => format!("\x1b[32m{text}\x1b[0m"),
            (true, serde_json::Value::Bool(false)) => format!("\x1b[31m{text}\x1b[0m"),
            _ => text,
        }
    }
}

/// One `key: value` line per top-level result field.
fn human(report: &Report, style: &Style) -> String {
    let mut out = report.command.name.clone();
    for a in &report.command.args {
        out.push(' ');
        out.push_str(a);
    }
    out.push_str(&format!(
        "\ninput: {} vertices, {} edges\n",
        report.input.vertices, report.input.edges
    ));
    match &report.result {
        serde_json::Value::Object(fields) => {
            for (k, v) in fields {
                out.push_str(&format!("{k}: {}\n", style.value(v)));
            }
        }
        other => out.push_str(&format!("result: {}\n", style.value(other))),
    }
    if let Some(ms) = report.elapsed_ms {
        out.push_str(&format!("elapsed: {ms} ms\n"));
    }
    out
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                exit::PARSE
            } else {
                exit::OK
            });
        }
    };
    let text_mode = cli.text;
    match run(cli) {
        Ok(output) => {
            let text = match output {
                Output::Text(t) => t,
                Output::Report(r) if text_mode => human(&r, &Style::detect()),
                Output::Report(r) => {
                    serde_json::to_string_pretty(&r).expect("reports serialise") + "\n"
                }
            };
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(exit::INTERNAL);
            }
            ExitCode::from(exit::OK)
        }
        Err(e) => {
            eprintln!("partree: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
