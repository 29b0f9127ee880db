//! Critical biconnected graphs: those where deleting any vertex leaves a
//! graph that is not biconnected.
//!
//! Recognition is structural: a biconnected graph on at least four vertices
//! is critical exactly when every block part and every triangle part of
//! `BT(G)` has empty interior. The deletion test is kept alongside as a
//! cross-check.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::connectivity::is_biconnected;
use crate::decomposition::{DecompositionTree, Node, Part, PartKind};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Kinds of non-terminal parts a chain may contain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MiddleKind {
    Triangle,
    Cycle4,
    Block4,
}

impl MiddleKind {
    pub const ALL: [MiddleKind; 3] = [MiddleKind::Triangle, MiddleKind::Cycle4, MiddleKind::Block4];

    pub fn name(self) -> &'static str {
        match self {
            MiddleKind::Triangle => "triangle",
            MiddleKind::Cycle4 => "cycle4",
            MiddleKind::Block4 => "block4",
        }
    }
}

impl fmt::Display for MiddleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for MiddleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<MiddleKind> {
        MiddleKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::precondition(format!("unknown middle part kind `{s}`")))
    }
}

/// Input to [`generate_critical_chain`], and the shape recovered by
/// [`classify_exactly_four`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainSpec {
    pub middle: Vec<MiddleKind>,
    pub terminals: (usize, usize),
}

/// Shape of a critical graph with exactly four vertices of degree 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainDescription {
    /// The 4-cycle, which has no single cutsets.
    FourCycle(VertexSet),
    /// `BT(G)` is a path `parts[0] – cutsets[0] – parts[1] – …`, starting at
    /// the canonically smaller terminal part.
    Chain {
        parts: Vec<VertexSet>,
        cutsets: Vec<VertexSet>,
        middle: Vec<MiddleKind>,
        terminals: (usize, usize),
    },
}

impl ChainDescription {
    pub fn spec(&self) -> Option<ChainSpec> {
        match self {
            ChainDescription::FourCycle(_) => None,
            ChainDescription::Chain {
                middle, terminals, ..
            } => Some(ChainSpec {
                middle: middle.clone(),
                terminals: *terminals,
            }),
        }
    }
}

/// Result of [`classify_exactly_four`]. A missing description comes with
/// the conditions that failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub description: Option<ChainDescription>,
    pub diagnostics: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CriticalWitness {
    /// All block and triangle parts have empty interior.
    Structural,
    /// An interior vertex of a block or triangle part; deleting it keeps the
    /// graph biconnected.
    Deletable { vertex: Vertex, part: VertexSet },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalReport {
    pub critical: bool,
    pub witness: CriticalWitness,
    pub degree2: VertexSet,
    pub chain: Option<ChainDescription>,
    /// The deletion test's verdict, when it was run.
    pub deletion_verdict: Option<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CriticalOptions {
    /// Also run the deletion test and fail if it disagrees.
    pub deletion_check: bool,
}

impl Default for CriticalOptions {
    fn default() -> Self {
        CriticalOptions {
            deletion_check: cfg!(debug_assertions),
        }
    }
}

/// Critical by definition: `G − x` is not biconnected for every `x`.
pub fn critical_by_deletion(g: &Graph) -> bool {
    g.vertices().all(|x| {
        let h = g
            .delete_vertices(&VertexSet::from([x]))
            .expect("x is a vertex of g");
        !is_biconnected(&h)
    })
}

fn check_input(g: &Graph) -> Result<()> {
    if g.num_vertices() < 4 {
        return Err(Error::precondition(format!(
            "criticality needs at least 4 vertices, got {}",
            g.num_vertices()
        )));
    }
    if !is_biconnected(g) {
        return Err(Error::NotKConnected { k: 2 });
    }
    Ok(())
}

fn offending_part(tree: &DecompositionTree) -> Result<Option<&Part>> {
    for part in tree.parts() {
        match part.kind() {
            PartKind::Unclassified => {
                return Err(Error::internal(format!(
                    "part {} is unclassified",
                    part.members()
                )))
            }
            PartKind::Block | PartKind::Cycle(3) if !part.interior().is_empty() => {
                return Ok(Some(part))
            }
            _ => {}
        }
    }
    Ok(None)
}

pub fn is_critical(
    g: &Graph,
    tree: &DecompositionTree,
    opts: &CriticalOptions,
) -> Result<CriticalReport> {
    check_input(g)?;
    let degree2 = g.vertices_of_degree(2);
    let witness = match offending_part(tree)? {
        None => CriticalWitness::Structural,
        Some(part) => CriticalWitness::Deletable {
            vertex: part.interior().first().expect("nonempty interior"),
            part: part.members().clone(),
        },
    };
    let critical = witness == CriticalWitness::Structural;
    let deletion_verdict = opts.deletion_check.then(|| critical_by_deletion(g));
    if let Some(d) = deletion_verdict {
        if d != critical {
            return Err(Error::internal(format!(
                "structural verdict {critical} disagrees with deletion verdict {d}"
            )));
        }
        if let CriticalWitness::Deletable { vertex, .. } = &witness {
            let h = g.delete_vertices(&VertexSet::from([*vertex]))?;
            if !is_biconnected(&h) {
                return Err(Error::internal(format!(
                    "deleting witness {vertex} breaks biconnectivity"
                )));
            }
        }
    }
    let chain = if critical && degree2.len() == 4 {
        classify_exactly_four(g, tree)?.description
    } else {
        None
    };
    Ok(CriticalReport {
        critical,
        witness,
        degree2,
        chain,
        deletion_verdict,
    })
}

/// Each terminal part of a critical graph is a cycle on at least four
/// vertices whose vertices outside the adjoining cutset all have degree 2.
/// Returns those degree-2 sets, one per terminal part.
pub fn terminal_part_check(
    g: &Graph,
    tree: &DecompositionTree,
) -> Result<Vec<(VertexSet, VertexSet)>> {
    check_input(g)?;
    if offending_part(tree)?.is_some() {
        return Err(Error::precondition("the graph is not critical"));
    }
    let mut out = Vec::new();
    for p in tree.terminal_parts() {
        let part = tree.part(p);
        let cut = match tree.neighbors(Node::Part(p)).as_slice() {
            [Node::Cutset(c)] => tree.cutset(*c).clone(),
            _ => return Err(Error::internal("terminal part without a single cutset")),
        };
        if !matches!(part.kind(), PartKind::Cycle(l) if l >= 4) {
            return Err(Error::internal(format!(
                "terminal part {} is {:?}, not a cycle of length at least 4",
                part.members(),
                part.kind()
            )));
        }
        let rest = part.members().difference(&cut);
        if let Some(v) = rest.iter().find(|&v| g.neighbors(v).len() != 2) {
            return Err(Error::internal(format!(
                "vertex {v} of terminal part {} has degree {}",
                part.members(),
                g.neighbors(v).len()
            )));
        }
        out.push((part.members().clone(), rest));
    }
    Ok(out)
}

/// Recognizes the shape of a critical graph with exactly four degree-2
/// vertices: the 4-cycle, or a chain of parts between two terminal cycles
/// whose middle parts are triangles, 4-cycles or blocks on 4 vertices, each
/// covered by its two flanking cutsets.
pub fn classify_exactly_four(g: &Graph, tree: &DecompositionTree) -> Result<Classification> {
    check_input(g)?;
    if offending_part(tree)?.is_some() {
        return Err(Error::precondition("the graph is not critical"));
    }
    let degree2 = g.vertices_of_degree(2);
    if degree2.len() != 4 {
        return Err(Error::precondition(format!(
            "expected exactly four vertices of degree 2, found {}",
            degree2.len()
        )));
    }
    let mut diagnostics = Vec::new();
    let fail = |diagnostics: Vec<String>| {
        Ok(Classification {
            description: None,
            diagnostics,
        })
    };

    if tree.family().is_empty() {
        if g.num_vertices() == 4 && g.is_cycle() {
            return Ok(Classification {
                description: Some(ChainDescription::FourCycle(g.vertex_set())),
                diagnostics,
            });
        }
        diagnostics.push("no single cutsets, but the graph is not a 4-cycle".into());
        return fail(diagnostics);
    }

    let leaves = tree.terminal_parts();
    if leaves.len() != 2 {
        diagnostics.push(format!("the tree has {} leaves, not 2", leaves.len()));
    }
    for c in 0..tree.family().len() {
        if tree.degree(Node::Cutset(c)) != 2 {
            diagnostics.push(format!(
                "cutset {} lies in {} parts",
                tree.cutset(c),
                tree.degree(Node::Cutset(c))
            ));
        }
    }
    if !diagnostics.is_empty() {
        return fail(diagnostics);
    }

    // Walk the path from the canonically smaller leaf.
    let mut parts = vec![leaves[0]];
    let mut cutsets = Vec::new();
    let mut prev_cut = None;
    loop {
        let here = *parts.last().expect("walk starts at a leaf");
        let Some(c) = tree
            .neighbors(Node::Part(here))
            .into_iter()
            .filter_map(|n| match n {
                Node::Cutset(c) if Some(c) != prev_cut => Some(c),
                _ => None,
            })
            .next()
        else {
            break;
        };
        let next = tree
            .neighbors(Node::Cutset(c))
            .into_iter()
            .find_map(|n| match n {
                Node::Part(p) if p != here => Some(p),
                _ => None,
            })
            .ok_or_else(|| Error::internal("cutset with one part"))?;
        cutsets.push(c);
        parts.push(next);
        prev_cut = Some(c);
        if parts.len() > tree.parts().len() {
            return Err(Error::internal("walk along the tree does not terminate"));
        }
    }
    if parts.len() != tree.parts().len() {
        diagnostics.push("the tree is not a path".into());
        return fail(diagnostics);
    }

    let terminal_len = |p: usize, diagnostics: &mut Vec<String>| match tree.part(p).kind() {
        PartKind::Cycle(l) if l >= 4 => l,
        kind => {
            diagnostics.push(format!(
                "terminal part {} is {kind:?}",
                tree.part(p).members()
            ));
            0
        }
    };
    let first = terminal_len(parts[0], &mut diagnostics);
    let last = terminal_len(*parts.last().expect("nonempty"), &mut diagnostics);

    let mut middle = Vec::new();
    for (i, &p) in parts.iter().enumerate().take(parts.len() - 1).skip(1) {
        let part = tree.part(p);
        let flanks = tree.cutset(cutsets[i - 1]).union(tree.cutset(cutsets[i]));
        if !part.interior().is_empty() {
            diagnostics.push(format!(
                "middle part {} has interior {}",
                part.members(),
                part.interior()
            ));
        }
        if &flanks != part.members() {
            diagnostics.push(format!(
                "middle part {} is not covered by its flanking cutsets",
                part.members()
            ));
        }
        if !matches!(part.boundary().len(), 3 | 4) {
            diagnostics.push(format!(
                "middle part {} has {} boundary vertices",
                part.members(),
                part.boundary().len()
            ));
        }
        let kind = match (part.kind(), part.len()) {
            (PartKind::Cycle(3), _) => Some(MiddleKind::Triangle),
            (PartKind::Cycle(4), _) => Some(MiddleKind::Cycle4),
            (PartKind::Block, 4) => Some(MiddleKind::Block4),
            (kind, n) => {
                diagnostics.push(format!(
                    "middle part {} is {kind:?} on {n} vertices",
                    part.members()
                ));
                None
            }
        };
        middle.extend(kind);
    }
    if !diagnostics.is_empty() {
        return fail(diagnostics);
    }
    Ok(Classification {
        description: Some(ChainDescription::Chain {
            parts: parts
                .iter()
                .map(|&p| tree.part(p).members().clone())
                .collect(),
            cutsets: cutsets.iter().map(|&c| tree.cutset(c).clone()).collect(),
            middle,
            terminals: (first, last),
        }),
        diagnostics,
    })
}

/// Builds a critical graph whose `BT(G)` is the chain described by `spec`.
///
/// Every single cutset `{u, v}` is an edge. The first cutset is `{0, 1}` and
/// the first terminal cycle runs `0, 2, 3, …, 1`, so it is the canonically
/// smallest part. Each middle part then takes the current cutset `{u, v}`:
///
/// * triangle: adds `w` adjacent to both; the next cutset is `{v, w}`,
///   sharing one vertex with the previous one;
/// * 4-cycle: adds `r, s` forming the cycle `u v s r`; the next cutset is
///   `{r, s}`, disjoint from the previous one;
/// * 4-block: adds `r, s` forming a `K4` with `u, v`; the next cutset is
///   `{r, s}`.
///
/// The last terminal cycle closes a fresh path from `u` to `v`.
pub fn generate_critical_chain(spec: &ChainSpec) -> Result<Graph> {
    let (first, last) = spec.terminals;
    if first < 4 || last < 4 {
        return Err(Error::precondition(format!(
            "terminal cycles need length at least 4, got ({first}, {last})"
        )));
    }
    let mut edges: Vec<(Vertex, Vertex)> = vec![(0, 1)];
    let mut next: Vertex = 2;
    let mut fresh = || {
        next += 1;
        next - 1
    };
    fn close_path(
        edges: &mut Vec<(Vertex, Vertex)>,
        fresh: &mut dyn FnMut() -> Vertex,
        u: Vertex,
        v: Vertex,
        len: usize,
    ) {
        let mut prev = u;
        for _ in 0..len - 2 {
            let t = fresh();
            edges.push((prev, t));
            prev = t;
        }
        edges.push((prev, v));
    }
    close_path(&mut edges, &mut fresh, 0, 1, first);
    let (mut u, mut v) = (0, 1);
    for kind in &spec.middle {
        match kind {
            MiddleKind::Triangle => {
                let w = fresh();
                edges.extend([(u, w), (v, w)]);
                (u, v) = (v, w);
            }
            MiddleKind::Cycle4 => {
                let (r, s) = (fresh(), fresh());
                edges.extend([(v, s), (s, r), (r, u)]);
                (u, v) = (r, s);
            }
            MiddleKind::Block4 => {
                let (r, s) = (fresh(), fresh());
                edges.extend([(u, r), (u, s), (v, r), (v, s), (r, s)]);
                (u, v) = (r, s);
            }
        }
    }
    close_path(&mut edges, &mut fresh, u, v, last);
    Graph::from_edges(edges)
}
