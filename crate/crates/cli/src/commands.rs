use std::collections::BTreeMap;
use std::io::Read;
use std::time::Instant;

use partree_core::coloring::{
    self, ColoringCertificate, ColoringOptions, ListAssignment, Strategy,
};
use partree_core::connectivity::{self, enumerate_cutsets, is_biconnected, single_cutsets};
use partree_core::critical::{self, ChainSpec, CriticalOptions, MiddleKind};
use partree_core::decomposition::{block_cut_tree, bt_tree};
use partree_core::graph::families;
use partree_core::planarity::{check_planarity_general, PlanarityOptions, SubdivisionWitness};
use partree_core::{Edge, Error as CoreError, Graph, VertexSet};
use partree_oracles as oracles;
use serde::Serialize;

use crate::dot;
use crate::error::{CliError, Result};
use crate::input::{parse_graph, parse_lists, to_edge_list, Format};
use crate::report::*;

/// A graph file as read, kept raw so the digest covers the exact bytes.
pub struct Input {
    pub raw: Vec<u8>,
    pub graph: Graph,
}

pub fn read_source(path: &str) -> Result<Vec<u8>> {
    let io = |source| CliError::Io {
        path: path.to_string(),
        source,
    };
    if path == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf).map_err(io)?;
        Ok(buf)
    } else {
        std::fs::read(path).map_err(io)
    }
}

fn utf8(raw: &[u8]) -> Result<&str> {
    std::str::from_utf8(raw).map_err(|e| CliError::parse(0, format!("input is not UTF-8: {e}")))
}

pub fn read_graph(path: &str, format: Format) -> Result<Input> {
    let raw = read_source(path)?;
    let graph = parse_graph(utf8(&raw)?, format)?;
    Ok(Input { raw, graph })
}

pub fn read_lists(path: &str) -> Result<ListAssignment> {
    parse_lists(utf8(&read_source(path)?)?)
}

/// What a command produced: either a JSON report or raw text.
pub enum Output {
    Report(Report),
    Text(String),
}

/// Wraps a payload into the versioned envelope. `started` is only set when
/// timing was requested, which keeps default output reproducible.
pub fn envelope<T: Serialize>(
    name: &str,
    args: Vec<String>,
    input: &Input,
    payload: &T,
    started: Option<Instant>,
) -> Result<Report> {
    let result = serde_json::to_value(payload)
        .map_err(|e| CliError::Core(CoreError::Internal(format!("serialising report: {e}"))))?;
    Ok(Report {
        schema_version: SCHEMA_VERSION,
        command: CommandEcho {
            name: name.to_string(),
            args,
        },
        input: InputDigest::new(&input.raw, &input.graph),
        result,
        elapsed_ms: started.map(|t| t.elapsed().as_millis() as u64),
    })
}

fn sets<'a>(it: impl Iterator<Item = &'a VertexSet>) -> Vec<Vec<u32>> {
    it.map(|s| s.iter().collect()).collect()
}

pub fn cutsets(input: &Input, k: usize) -> Result<CutsetsPayload> {
    let g = &input.graph;
    let family = enumerate_cutsets(g, k)?;
    let members: Vec<&VertexSet> = family.sets().collect();
    let mut independent = vec![vec![true; members.len()]; members.len()];
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let ind = connectivity::independent(g, members[i], members[j])?;
            independent[i][j] = ind;
            independent[j][i] = ind;
        }
    }
    let single = if k == 2 && is_biconnected(g) {
        Some(sets(single_cutsets(g)?.sets()))
    } else {
        None
    };
    Ok(CutsetsPayload {
        k,
        cutsets: sets(members.into_iter()),
        independent,
        single,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeOutput {
    Json,
    Dot,
}

pub fn tree(input: &Input, k1: bool, out: TreeOutput) -> Result<TreeResult> {
    let g = &input.graph;
    Ok(if k1 {
        let bc = block_cut_tree(g)?;
        match out {
            TreeOutput::Dot => TreeResult::Dot(dot::block_cut_tree(&bc)),
            TreeOutput::Json => TreeResult::BlockCut(BlockCutPayload::new(&bc)),
        }
    } else {
        let t = bt_tree(g)?;
        match out {
            TreeOutput::Dot => TreeResult::Dot(dot::decomposition_tree(&t)),
            TreeOutput::Json => TreeResult::Bt(TreePayload::new(&t)),
        }
    })
}

pub enum TreeResult {
    Dot(String),
    Bt(TreePayload),
    BlockCut(BlockCutPayload),
}

pub fn color(
    input: &Input,
    strategy: Strategy,
    lists: Option<&ListAssignment>,
    opts: &ColoringOptions,
) -> Result<ColorPayload> {
    let g = &input.graph;
    let t = bt_tree(g)?;
    let mut cert = match (strategy, lists) {
        (Strategy::List, Some(l)) => coloring::list_color(g, &t, l, opts)?,
        (_, Some(_)) => {
            return Err(CliError::Usage(
                "--lists only applies to --strategy list".into(),
            ))
        }
        (s, None) => coloring::color(g, &t, s, opts)?,
    };
    cert.canonicalize();
    Ok(ColorPayload::new(&cert))
}

pub fn planar(input: &Input, opts: &PlanarityOptions) -> Result<PlanarPayload> {
    let verdict = check_planarity_general(&input.graph, opts)?;
    if let Some(w) = &verdict.witness {
        w.verify(&input.graph)?;
    }
    Ok(PlanarPayload::new(&verdict))
}

pub fn critical(input: &Input, deletion_check: bool) -> Result<CriticalPayload> {
    let g = &input.graph;
    let t = bt_tree(g)?;
    let report = critical::is_critical(g, &t, &CriticalOptions { deletion_check })?;
    Ok(CriticalPayload::new(&report))
}

pub fn generate(middle: &[MiddleKind], terminals: (usize, usize)) -> Result<Graph> {
    Ok(critical::generate_critical_chain(&ChainSpec {
        middle: middle.to_vec(),
        terminals,
    })?)
}

pub fn generated_text(g: &Graph) -> String {
    to_edge_list(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OracleKind {
    Cutsets,
    Parts,
    Chromatic,
    Choosable,
    Critical,
    Planar,
}

#[derive(Serialize)]
#[serde(untagged)]
pub enum OracleAnswer {
    Sets(Vec<Vec<u32>>),
    Number(usize),
    Verdict(bool),
}

pub fn oracle(input: &Input, which: OracleKind, k: usize) -> Result<OracleAnswer> {
    let g = &input.graph;
    let budget = oracles::OracleBudget::default();
    Ok(match which {
        OracleKind::Cutsets => {
            OracleAnswer::Sets(sets(oracles::oracle_cutsets(g, k, &budget)?.iter()))
        }
        OracleKind::Parts => {
            // Cutpoints are pairwise independent; for k = 2 the family is
            // the single cutsets.
            let family = match k {
                2 => single_cutsets(g)?.sets().cloned().collect(),
                _ => oracles::oracle_cutsets(g, k, &budget)?,
            };
            OracleAnswer::Sets(sets(oracles::oracle_parts(g, &family, &budget)?.iter()))
        }
        OracleKind::Chromatic => OracleAnswer::Number(oracles::oracle_chromatic(g, &budget)?),
        OracleKind::Choosable => OracleAnswer::Verdict(oracles::oracle_choosable(g, k, &budget)?),
        OracleKind::Critical => OracleAnswer::Verdict(oracles::oracle_critical(g, &budget)?),
        OracleKind::Planar => OracleAnswer::Verdict(oracles::oracle_planar(g, &budget)?),
    })
}

#[derive(Debug, Serialize)]
pub struct VerifyPayload {
    pub valid: bool,
    pub checked: String,
}

/// Re-checks the certificate embedded in a `color` or `planar` report
/// against `input`. Any mismatch is a rejection.
pub fn verify(
    input: &Input,
    report: &Report,
    lists: Option<&ListAssignment>,
) -> Result<VerifyPayload> {
    let reject = |m: String| CliError::Rejected(m);
    if report.schema_version != SCHEMA_VERSION {
        return Err(reject(format!(
            "schema version {} is not {SCHEMA_VERSION}",
            report.schema_version
        )));
    }
    let digest = InputDigest::new(&input.raw, &input.graph);
    if report.input != digest {
        return Err(reject("report was produced from a different input".into()));
    }
    let g = &input.graph;
    match report.command.name.as_str() {
        "color" => {
            let p: ColorPayload = serde_json::from_value(report.result.clone())
                .map_err(|e| reject(format!("malformed color payload: {e}")))?;
            let strategy: Strategy = p
                .strategy
                .parse()
                .map_err(|_| reject(format!("unknown strategy `{}`", p.strategy)))?;
            let cert = ColoringCertificate {
                assignment: p.assignment.clone(),
                bound: p.bound,
                strategy,
            };
            if cert.colors_used() != p.colors_used {
                return Err(reject(format!(
                    "report claims {} colors, assignment uses {}",
                    p.colors_used,
                    cert.colors_used()
                )));
            }
            cert.verify(g).map_err(|e| reject(e.to_string()))?;
            if strategy == Strategy::List {
                let uniform;
                let lists = match lists {
                    Some(l) => l,
                    None => {
                        uniform = ListAssignment::uniform(g, p.bound);
                        &uniform
                    }
                };
                cert.verify_lists(g, lists)
                    .map_err(|e| reject(e.to_string()))?;
            }
        }
        "planar" => {
            let p: PlanarPayload = serde_json::from_value(report.result.clone())
                .map_err(|e| reject(format!("malformed planar payload: {e}")))?;
            match (&p.witness, p.planar) {
                (Some(w), false) => {
                    witness_from_payload(w)?
                        .verify(g)
                        .map_err(|e| reject(e.to_string()))?;
                }
                (None, true) => {
                    let fresh = check_planarity_general(g, &PlanarityOptions::default())?;
                    if !fresh.planar {
                        return Err(reject("graph is not planar".into()));
                    }
                }
                _ => return Err(reject("verdict and witness disagree".into())),
            }
        }
        other => {
            return Err(CliError::Usage(format!(
            "`{other}` reports carry no certificate; only color and planar reports can be verified"
        )))
        }
    }
    Ok(VerifyPayload {
        valid: true,
        checked: report.command.name.clone(),
    })
}

fn witness_from_payload(w: &WitnessPayload) -> Result<SubdivisionWitness> {
    let reject = |m: &str| CliError::Rejected(m.to_string());
    let model = match w.model.as_str() {
        "K5" => families::complete(5),
        "K3,3" => families::complete_bipartite(3, 3),
        _ => return Err(reject("unknown model")),
    };
    let model_edges: Vec<Edge> = model.edges().collect();
    if model_edges.len() != w.paths.len() {
        return Err(reject("one path per model edge expected"));
    }
    let mut paths = BTreeMap::new();
    for (e, p) in model_edges.into_iter().zip(&w.paths) {
        if p.len() >= 3 {
            paths.insert(e, p.clone());
        }
    }
    let host = Graph::from_edges(w.edges.iter().map(|&[u, v]| (u, v)))
        .map_err(|e| CliError::Rejected(format!("witness edges: {e}")))?;
    Ok(SubdivisionWitness {
        host,
        model,
        main: w.main.clone(),
        paths,
    })
}
