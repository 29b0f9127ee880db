//! Parts of a decomposition by pairwise independent cutsets, the tree of
//! decomposition built on them, and its two special cases: the
//! block–cutpoint tree (all 1-cutsets) and `BT(G)` (single 2-cutsets of a
//! biconnected graph).

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::connectivity::{
    enumerate_cutsets, is_biconnected, is_k_connected, single_cutsets, Cutset, CutsetFamily,
};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex, VertexSet};

/// What the augmented induced graph on a part looks like.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartKind {
    /// A simple cycle with this many vertices; triangles included.
    Cycle(usize),
    /// A triconnected graph.
    Block,
    Unclassified,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Part {
    members: VertexSet,
    interior: VertexSet,
    boundary: VertexSet,
    kind: PartKind,
}

impl Part {
    /// Splits `members` into interior and boundary, where the boundary is
    /// everything lying in some family cutset (`covered`).
    pub fn new(members: VertexSet, covered: &VertexSet) -> Part {
        let boundary = members.intersection(covered);
        let interior = members.difference(covered);
        Part {
            members,
            interior,
            boundary,
            kind: PartKind::Unclassified,
        }
    }

    pub fn members(&self) -> &VertexSet {
        &self.members
    }

    pub fn interior(&self) -> &VertexSet {
        &self.interior
    }

    pub fn boundary(&self) -> &VertexSet {
        &self.boundary
    }

    pub fn kind(&self) -> PartKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_block(&self) -> bool {
        self.kind == PartKind::Block
    }

    pub fn is_cycle(&self) -> bool {
        matches!(self.kind, PartKind::Cycle(_))
    }

    pub fn is_triangle(&self) -> bool {
        self.kind == PartKind::Cycle(3)
    }
}

/// A node of a [`DecompositionTree`], by index into the cutset or part list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Node {
    Cutset(usize),
    Part(usize),
}

/// The bipartite tree `T(G, 𝔖)`: cutset `S` and part `A` are adjacent iff
/// `S ⊆ A`. Cutsets and parts are stored in canonical (sorted) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTree {
    family: CutsetFamily,
    parts: Vec<Part>,
    /// For each cutset, the indices of the parts containing it.
    cut_adj: Vec<Vec<usize>>,
    /// For each part, the indices of the cutsets it contains.
    part_adj: Vec<Vec<usize>>,
    root: Option<usize>,
}

impl DecompositionTree {
    fn build(family: CutsetFamily, parts: Vec<Part>) -> DecompositionTree {
        let cut_adj: Vec<Vec<usize>> = family
            .sets()
            .map(|s| {
                parts
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| s.is_subset(&p.members))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let mut part_adj = vec![Vec::new(); parts.len()];
        for (c, ps) in cut_adj.iter().enumerate() {
            for &p in ps {
                part_adj[p].push(c);
            }
        }
        DecompositionTree {
            family,
            parts,
            cut_adj,
            part_adj,
            root: None,
        }
    }

    pub fn family(&self) -> &CutsetFamily {
        &self.family
    }

    pub fn cutsets(&self) -> impl ExactSizeIterator<Item = &Cutset> + '_ {
        self.family.iter()
    }

    pub fn cutset(&self, i: usize) -> &VertexSet {
        self.family
            .iter()
            .nth(i)
            .expect("cutset index in range")
            .members()
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &Part {
        &self.parts[i]
    }

    pub fn num_nodes(&self) -> usize {
        self.family.len() + self.parts.len()
    }

    /// Tree edges `(cutset index, part index)`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.cut_adj
            .iter()
            .enumerate()
            .flat_map(|(c, ps)| ps.iter().map(move |&p| (c, p)))
            .collect()
    }

    pub fn part_index(&self, members: &VertexSet) -> Option<usize> {
        self.parts.binary_search_by(|p| p.members.cmp(members)).ok()
    }

    pub fn cutset_index(&self, members: &VertexSet) -> Option<usize> {
        self.family.sets().position(|s| s == members)
    }

    /// Neighbors in canonical order.
    pub fn neighbors(&self, node: Node) -> Vec<Node> {
        match node {
            Node::Cutset(c) => self.cut_adj[c].iter().map(|&p| Node::Part(p)).collect(),
            Node::Part(p) => self.part_adj[p].iter().map(|&c| Node::Cutset(c)).collect(),
        }
    }

    pub fn degree(&self, node: Node) -> usize {
        match node {
            Node::Cutset(c) => self.cut_adj[c].len(),
            Node::Part(p) => self.part_adj[p].len(),
        }
    }

    /// Parts of tree degree one. A tree with a single node has none.
    pub fn terminal_parts(&self) -> Vec<usize> {
        (0..self.parts.len())
            .filter(|&p| self.part_adj[p].len() == 1)
            .collect()
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        let n = self.num_nodes();
        if n == 0 {
            return false;
        }
        let edges: usize = self.cut_adj.iter().map(Vec::len).sum();
        edges + 1 == n && self.reachable_from(Node::Part(0), None).len() == n
    }

    fn reachable_from(&self, start: Node, blocked: Option<Node>) -> Vec<Node> {
        let mut seen = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(node) = queue.pop_front() {
            for next in self.neighbors(node) {
                if Some(next) != blocked && !seen.contains(&next) {
                    seen.push(next);
                    queue.push_back(next);
                }
            }
        }
        seen
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn with_root(mut self, part: usize) -> Result<DecompositionTree> {
        if part >= self.parts.len() {
            return Err(Error::precondition(format!("no part with index {part}")));
        }
        self.root = Some(part);
        Ok(self)
    }

    /// `G^𝔖` for this tree's family.
    pub fn augmented(&self, g: &Graph) -> Graph {
        augment_unchecked(g, &self.family)
    }
}

fn check_family(g: &Graph, family: &CutsetFamily) -> Result<CutsetFamily> {
    for s in family.iter() {
        Cutset::new(g, s.members().clone())?;
    }
    let family = family.clone().verify_independent(g)?;
    if !family.is_empty() && !is_k_connected(g, family.k()) {
        return Err(Error::NotKConnected { k: family.k() });
    }
    Ok(family)
}

/// `Part(G, 𝔖)` by recursive splitting: take the smallest cutset `S`, split
/// the current vertex set into `component ∪ S` for each component of
/// `G^𝔖 − S`, hand every other cutset to the piece containing it, recurse.
///
/// An empty family gives the single part `V(G)`; otherwise `g` must be
/// `k`-connected and the family pairwise independent.
pub fn parts(g: &Graph, family: &CutsetFamily) -> Result<Vec<Part>> {
    let family = check_family(g, family)?;
    parts_unchecked(g, &family)
}

fn parts_unchecked(g: &Graph, family: &CutsetFamily) -> Result<Vec<Part>> {
    let aug = augment_unchecked(g, family);
    let cutsets: Vec<&Cutset> = family.iter().collect();
    let mut found = Vec::new();
    split(&aug, g.vertex_set(), &cutsets, &mut found)?;
    found.sort();
    if found.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::internal(
            "recursive splitting produced a repeated part",
        ));
    }
    let covered = family.covered();
    Ok(found.into_iter().map(|m| Part::new(m, &covered)).collect())
}

fn split(
    aug: &Graph,
    within: VertexSet,
    cutsets: &[&Cutset],
    out: &mut Vec<VertexSet>,
) -> Result<()> {
    let Some((s, rest)) = cutsets.split_first() else {
        out.push(within);
        return Ok(());
    };
    let pieces: Vec<VertexSet> = aug
        .induced_unchecked(&within)
        .components_avoiding(s.members())
        .into_iter()
        .map(|c| c.union(s.members()))
        .collect();
    for t in rest {
        let homes = pieces.iter().filter(|p| t.members().is_subset(p)).count();
        if homes != 1 {
            return Err(Error::internal(format!(
                "cutset {} lies in {homes} pieces of {}",
                t.members(),
                s.members()
            )));
        }
    }
    for piece in pieces {
        let inside: Vec<&Cutset> = rest
            .iter()
            .copied()
            .filter(|t| t.members().is_subset(&piece))
            .collect();
        split(aug, piece, &inside, out)?;
    }
    Ok(())
}

/// `G^𝔖`: the graph plus every missing edge inside every family cutset.
pub fn augment(g: &Graph, family: &CutsetFamily) -> Result<Graph> {
    for v in family.sets().flat_map(|s| s.iter()) {
        if !g.contains(v) {
            return Err(Error::UnknownVertex(v));
        }
    }
    Ok(augment_unchecked(g, family))
}

pub(crate) fn augment_unchecked(g: &Graph, family: &CutsetFamily) -> Graph {
    let extra = family.sets().flat_map(|s| {
        let m = s.as_slice();
        (0..m.len()).flat_map(move |i| (i + 1..m.len()).map(move |j| Edge::new(m[i], m[j])))
    });
    g.with_edges(extra)
}

/// `T(G, 𝔖)` with unclassified parts.
pub fn decomposition_tree(g: &Graph, family: &CutsetFamily) -> Result<DecompositionTree> {
    let family = check_family(g, family)?;
    let parts = parts_unchecked(g, &family)?;
    Ok(DecompositionTree::build(family, parts))
}

/// `BT(G)`: the decomposition tree over the single cutsets of a biconnected
/// graph, with every part classified.
pub fn bt_tree(g: &Graph) -> Result<DecompositionTree> {
    if !is_biconnected(g) {
        return Err(Error::NotKConnected { k: 2 });
    }
    let family = single_cutsets(g)?;
    let mut parts = parts_unchecked(g, &family)?;
    let aug = augment_unchecked(g, &family);
    for part in &mut parts {
        part.kind = classify_members(&aug, &part.members)?;
    }
    Ok(DecompositionTree::build(family, parts))
}

fn classify_members(aug: &Graph, members: &VertexSet) -> Result<PartKind> {
    let h = aug.induced_unchecked(members);
    if h.is_cycle() {
        Ok(PartKind::Cycle(members.len()))
    } else if is_k_connected(&h, 3) {
        Ok(PartKind::Block)
    } else {
        Err(Error::internal(format!(
            "part {members} is neither a cycle nor triconnected"
        )))
    }
}

/// Classifies a part of `BT(G)`: `Cycle(|A|)` when `G′(A)` is a simple cycle
/// (triangles included), `Block` when it is triconnected.
pub fn classify_part(g: &Graph, family: &CutsetFamily, part: &Part) -> Result<PartKind> {
    let family = check_family(g, family)?;
    let all = parts_unchecked(g, &family)?;
    if !all.iter().any(|p| p.members == part.members) {
        return Err(Error::precondition(format!(
            "{} is not a part of the decomposition",
            part.members
        )));
    }
    classify_members(&augment_unchecked(g, &family), &part.members)
}

/// Pairs of non-neighboring vertices of the cycle parts of length at least
/// four. On `BT(G)` these are exactly the 2-cutsets that are not single.
pub fn nonsingle_from_cycles(g: &Graph, tree: &DecompositionTree) -> Result<CutsetFamily> {
    let aug = tree.augmented(g);
    let mut found = Vec::new();
    for part in tree.parts() {
        let PartKind::Cycle(len) = part.kind else {
            continue;
        };
        if len < 4 {
            continue;
        }
        let order = aug
            .induced_unchecked(&part.members)
            .cycle_order()
            .ok_or_else(|| {
                Error::internal(format!("cycle part {} is not a cycle", part.members))
            })?;
        for i in 0..len {
            // Skip the neighbor at i+1 and, from the first vertex, the one at
            // len-1; every other later vertex is a non-neighbor.
            let last = if i == 0 { len - 1 } else { len };
            for j in i + 2..last {
                let pair = VertexSet::from([order[i], order[j]]);
                let cutset = Cutset::new(g, pair).map_err(|e| {
                    Error::internal(format!("non-neighboring cycle pair is not a cutset: {e}"))
                })?;
                found.push(cutset);
            }
        }
    }
    Ok(CutsetFamily::from_unverified(2, found))
}

/// Whether removing cutset node `s` leaves parts `b` and `b2` in different
/// components of the tree.
pub fn tree_separation(
    tree: &DecompositionTree,
    s: &VertexSet,
    b: &VertexSet,
    b2: &VertexSet,
) -> Result<bool> {
    let s = tree
        .cutset_index(s)
        .ok_or_else(|| Error::UnknownNode(s.clone()))?;
    let find = |p: &VertexSet| {
        tree.part_index(p)
            .ok_or_else(|| Error::UnknownNode(p.clone()))
    };
    let (b, b2) = (find(b)?, find(b2)?);
    if b == b2 {
        return Ok(false);
    }
    let reach = tree.reachable_from(Node::Part(b), Some(Node::Cutset(s)));
    Ok(!reach.contains(&Node::Part(b2)))
}

/// The classic tree of blocks and cutpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCutTree {
    pub cutpoints: Vec<Vertex>,
    pub blocks: Vec<VertexSet>,
    /// `(cutpoint index, block index)` pairs with the cutpoint in the block.
    pub edges: Vec<(usize, usize)>,
}

impl BlockCutTree {
    /// Whether this is the decomposition tree over all 1-cutsets, reading
    /// cutset `{a}` as cutpoint `a`.
    pub fn agrees_with(&self, tree: &DecompositionTree) -> bool {
        let cut_sets: Vec<VertexSet> = self
            .cutpoints
            .iter()
            .map(|&a| VertexSet::from([a]))
            .collect();
        let parts: Vec<VertexSet> = tree.parts().iter().map(|p| p.members.clone()).collect();
        cut_sets == tree.family().sets().cloned().collect::<Vec<_>>()
            && parts == self.blocks
            && self.edges == tree.edges()
    }
}

/// Blocks by the Hopcroft–Tarjan low-point DFS, independent of the generic
/// splitting construction.
pub fn block_cut_tree(g: &Graph) -> Result<BlockCutTree> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let ids: Vec<Vertex> = g.vertices().collect();
    let index = |v: Vertex| ids.binary_search(&v).expect("neighbor is a vertex");
    let n = ids.len();
    let adj: Vec<Vec<usize>> = ids
        .iter()
        .map(|&v| g.neighbors(v).iter().map(|&w| index(w)).collect())
        .collect();

    let mut blocks: Vec<VertexSet> = Vec::new();
    if n == 1 {
        blocks.push(VertexSet::from([ids[0]]));
    } else {
        const UNSEEN: usize = usize::MAX;
        let mut disc = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut time = 0;
        let mut stack: Vec<usize> = Vec::new();
        // Frames: (vertex, parent, next neighbor position).
        let mut frames: Vec<(usize, usize, usize)> = vec![(0, UNSEEN, 0)];
        disc[0] = 0;
        low[0] = 0;
        stack.push(0);
        while let Some(&mut (v, parent, ref mut pos)) = frames.last_mut() {
            if *pos < adj[v].len() {
                let w = adj[v][*pos];
                *pos += 1;
                if disc[w] == UNSEEN {
                    time += 1;
                    disc[w] = time;
                    low[w] = time;
                    stack.push(w);
                    frames.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            if parent == UNSEEN {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                let mut block = vec![ids[parent]];
                loop {
                    let x = stack.pop().expect("vertex stack holds the subtree");
                    block.push(ids[x]);
                    if x == v {
                        break;
                    }
                }
                blocks.push(block.into_iter().collect());
            }
        }
    }
    blocks.sort();

    let mut cutpoints: Vec<Vertex> = ids
        .iter()
        .copied()
        .filter(|&v| blocks.iter().filter(|b| b.contains(v)).count() >= 2)
        .collect();
    cutpoints.sort_unstable();
    let edges = cutpoints
        .iter()
        .enumerate()
        .flat_map(|(c, &a)| {
            blocks
                .iter()
                .enumerate()
                .filter(move |(_, b)| b.contains(a))
                .map(move |(b, _)| (c, b))
        })
        .collect();
    Ok(BlockCutTree {
        cutpoints,
        blocks,
        edges,
    })
}

/// `T(G, 𝔑R₁(G))` for a connected graph on at least two vertices.
pub fn cutpoint_tree(g: &Graph) -> Result<DecompositionTree> {
    decomposition_tree(g, &enumerate_cutsets(g, 1)?)
}
