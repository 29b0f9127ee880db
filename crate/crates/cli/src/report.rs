//! JSON report envelope and payloads.

use std::collections::BTreeMap;

use partree_core::coloring::{Color, ColoringCertificate};
use partree_core::critical::{ChainDescription, CriticalReport, CriticalWitness};
use partree_core::decomposition::{BlockCutTree, DecompositionTree, PartKind};
use partree_core::planarity::{PlanarityVerdict, SubdivisionWitness};
use partree_core::{Graph, Vertex, VertexSet};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Report {
    pub schema_version: u32,
    pub command: CommandEcho,
    pub input: InputDigest,
    pub result: serde_json::Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CommandEcho {
    pub name: String,
    pub args: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct InputDigest {
    pub sha256: String,
    pub vertices: usize,
    pub edges: usize,
}

impl InputDigest {
    pub fn new(raw: &[u8], g: &Graph) -> Self {
        InputDigest {
            sha256: hex::encode(Sha256::digest(raw)),
            vertices: g.num_vertices(),
            edges: g.num_edges(),
        }
    }
}

fn list(s: &VertexSet) -> Vec<Vertex> {
    s.iter().collect()
}

pub fn kind_name(kind: PartKind) -> String {
    match kind {
        PartKind::Cycle(l) => format!("Cycle({l})"),
        PartKind::Block => "Block".into(),
        PartKind::Unclassified => "Unclassified".into(),
    }
}

#[derive(Debug, Serialize)]
pub struct CutsetsPayload {
    pub k: usize,
    pub cutsets: Vec<Vec<Vertex>>,
    /// `independent[i][j]` for cutsets `i` and `j`; the diagonal is true.
    pub independent: Vec<Vec<bool>>,
    /// Single cutsets, when the graph is biconnected and `k = 2`.
    pub single: Option<Vec<Vec<Vertex>>>,
}

#[derive(Debug, Serialize)]
pub struct PartPayload {
    pub members: Vec<Vertex>,
    pub interior: Vec<Vertex>,
    pub boundary: Vec<Vertex>,
    pub kind: String,
}

#[derive(Debug, Serialize)]
pub struct TreePayload {
    pub tree: &'static str,
    pub cutsets: Vec<Vec<Vertex>>,
    pub parts: Vec<PartPayload>,
    /// `[cutset index, part index]`.
    pub edges: Vec<[usize; 2]>,
}

impl TreePayload {
    pub fn new(tree: &DecompositionTree) -> Self {
        TreePayload {
            tree: "bt",
            cutsets: tree.cutsets().map(|c| list(c.members())).collect(),
            parts: tree
                .parts()
                .iter()
                .map(|p| PartPayload {
                    members: list(p.members()),
                    interior: list(p.interior()),
                    boundary: list(p.boundary()),
                    kind: kind_name(p.kind()),
                })
                .collect(),
            edges: tree.edges().into_iter().map(|(c, p)| [c, p]).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct BlockCutPayload {
    pub tree: &'static str,
    pub cutpoints: Vec<Vertex>,
    pub blocks: Vec<Vec<Vertex>>,
    /// `[cutpoint index, block index]`.
    pub edges: Vec<[usize; 2]>,
}

impl BlockCutPayload {
    pub fn new(bc: &BlockCutTree) -> Self {
        BlockCutPayload {
            tree: "block-cut",
            cutpoints: bc.cutpoints.clone(),
            blocks: bc.blocks.iter().map(list).collect(),
            edges: bc.edges.iter().map(|&(c, b)| [c, b]).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ColorPayload {
    pub strategy: String,
    pub bound: usize,
    pub colors_used: usize,
    pub assignment: BTreeMap<Vertex, Color>,
}

impl ColorPayload {
    pub fn new(c: &ColoringCertificate) -> Self {
        ColorPayload {
            strategy: c.strategy.name().into(),
            bound: c.bound,
            colors_used: c.colors_used(),
            assignment: c.assignment.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct WitnessPayload {
    pub model: String,
    /// Model vertex to host vertex.
    pub main: BTreeMap<Vertex, Vertex>,
    /// One host path per model edge, in model edge order.
    pub paths: Vec<Vec<Vertex>>,
    /// Edges of the subdivision in the input graph.
    pub edges: Vec<[Vertex; 2]>,
}

impl WitnessPayload {
    pub fn new(w: &SubdivisionWitness) -> Self {
        let model = if w.model.num_vertices() == 5 {
            "K5"
        } else {
            "K3,3"
        };
        WitnessPayload {
            model: model.into(),
            main: w.main.clone(),
            paths: w
                .model
                .edges()
                .map(|e| {
                    let (u, v) = e.endpoints();
                    w.path(u, v).expect("witness covers its model")
                })
                .collect(),
            edges: w
                .host
                .edges()
                .map(|e| {
                    let (u, v) = e.endpoints();
                    [u, v]
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PlanarPayload {
    pub planar: bool,
    pub offending_part: Option<Vec<Vertex>>,
    pub witness: Option<WitnessPayload>,
}

impl PlanarPayload {
    pub fn new(v: &PlanarityVerdict) -> Self {
        PlanarPayload {
            planar: v.planar,
            offending_part: v.offending_part.as_ref().map(list),
            witness: v.witness.as_ref().map(WitnessPayload::new),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ChainPayload {
    pub shape: &'static str,
    pub parts: Vec<Vec<Vertex>>,
    pub cutsets: Vec<Vec<Vertex>>,
    pub middle: Vec<String>,
    pub terminals: Option<[usize; 2]>,
}

impl ChainPayload {
    pub fn new(c: &ChainDescription) -> Self {
        match c {
            ChainDescription::FourCycle(vs) => ChainPayload {
                shape: "four-cycle",
                parts: vec![list(vs)],
                cutsets: Vec::new(),
                middle: Vec::new(),
                terminals: None,
            },
            ChainDescription::Chain {
                parts,
                cutsets,
                middle,
                terminals,
            } => ChainPayload {
                shape: "chain",
                parts: parts.iter().map(list).collect(),
                cutsets: cutsets.iter().map(list).collect(),
                middle: middle.iter().map(|k| k.name().to_string()).collect(),
                terminals: Some([terminals.0, terminals.1]),
            },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CriticalPayload {
    pub critical: bool,
    /// A vertex whose deletion keeps the graph biconnected, with its part.
    pub deletable: Option<Vertex>,
    pub deletable_part: Option<Vec<Vertex>>,
    pub degree2: Vec<Vertex>,
    pub chain: Option<ChainPayload>,
    pub deletion_verdict: Option<bool>,
}

impl CriticalPayload {
    pub fn new(r: &CriticalReport) -> Self {
        let (deletable, deletable_part) = match &r.witness {
            CriticalWitness::Structural => (None, None),
            CriticalWitness::Deletable { vertex, part } => (Some(*vertex), Some(list(part))),
        };
        CriticalPayload {
            critical: r.critical,
            deletable,
            deletable_part,
            degree2: list(&r.degree2),
            chain: r.chain.as_ref().map(ChainPayload::new),
            deletion_verdict: r.deletion_verdict,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct GraphPayload {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<[Vertex; 2]>,
}

impl GraphPayload {
    pub fn new(g: &Graph) -> Self {
        GraphPayload {
            vertices: g.vertices().collect(),
            edges: g
                .edges()
                .map(|e| {
                    let (u, v) = e.endpoints();
                    [u, v]
                })
                .collect(),
        }
    }
}
