//! Subdivisions and the part-wise planarity test.
//!
//! A biconnected graph is planar iff `G′(B)` is planar for every block part
//! `B` of `BT(G)`. Each `G′(B)` is decided by the Euler bound plus an
//! exhaustive search for a `K5` or `K3,3` subdivision, which is exponential
//! in the worst case; block parts above
//! [`PlanarityOptions::max_block_vertices`] are refused.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::decomposition::{block_cut_tree, bt_tree, DecompositionTree};
use crate::error::{Error, Result};
use crate::graph::{families, Edge, Graph, Vertex, VertexSet};

pub const DEFAULT_MAX_BLOCK_VERTICES: usize = 16;

/// Hosts for the subdivision search are indexed into 128-bit masks.
const MAX_SEARCH_VERTICES: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlanarityOptions {
    pub max_block_vertices: usize,
}

impl Default for PlanarityOptions {
    fn default() -> Self {
        PlanarityOptions {
            max_block_vertices: DEFAULT_MAX_BLOCK_VERTICES,
        }
    }
}

/// Evidence that a graph contains a subdivision of `model`.
///
/// `main` sends model vertices to host vertices. `paths` holds the host path
/// (both ends included) for each model edge that is subdivided; a model edge
/// missing from `paths` is realised by the host edge between its images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdivisionWitness {
    pub host: Graph,
    pub model: Graph,
    pub main: BTreeMap<Vertex, Vertex>,
    pub paths: BTreeMap<Edge, Vec<Vertex>>,
}

impl SubdivisionWitness {
    fn image(&self, v: Vertex) -> Result<Vertex> {
        self.main
            .get(&v)
            .copied()
            .ok_or_else(|| Error::internal(format!("model vertex {v} has no image")))
    }

    /// The host path for model edge `u–v`, oriented from `main[u]`.
    pub fn path(&self, u: Vertex, v: Vertex) -> Result<Vec<Vertex>> {
        let (a, b) = (self.image(u)?, self.image(v)?);
        let mut p = match self.paths.get(&Edge::new(u, v)) {
            Some(p) => p.clone(),
            None => vec![a, b],
        };
        if p.first() != Some(&a) {
            p.reverse();
        }
        Ok(p)
    }

    /// Checks the witness against `g`: injective main map, paths that are
    /// real paths of `g` between the right images, pairwise internally
    /// disjoint and avoiding main vertices, and a host that is exactly the
    /// union of the paths.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let bad = |msg: alloc::string::String| Err(Error::internal(msg));
        if self.main.keys().copied().collect::<VertexSet>() != self.model.vertex_set() {
            return bad("main map does not cover the model".into());
        }
        let images: VertexSet = self.main.values().copied().collect();
        if images.len() != self.main.len() {
            return bad("main map is not injective".into());
        }
        for e in self.paths.keys() {
            let (u, v) = e.endpoints();
            if !self.model.has_edge(u, v) {
                return bad(format!("path for non-edge {e} of the model"));
            }
        }
        let mut inner: BTreeSet<Vertex> = BTreeSet::new();
        let mut host_edges: BTreeSet<Edge> = BTreeSet::new();
        for e in self.model.edges() {
            let (u, v) = e.endpoints();
            let p = self.path(u, v)?;
            if p.first() != Some(&self.image(u)?) || p.last() != Some(&self.image(v)?) {
                return bad(format!("path for {e} has wrong ends"));
            }
            if self.paths.contains_key(&e) && p.len() < 3 {
                return bad(format!("listed path for {e} is not subdivided"));
            }
            for w in p.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return bad(format!(
                        "{}-{} on the path for {e} is not an edge",
                        w[0], w[1]
                    ));
                }
                host_edges.insert(Edge::new(w[0], w[1]));
            }
            for &x in &p[1..p.len() - 1] {
                if images.contains(x) || !inner.insert(x) {
                    return bad(format!("path for {e} reuses vertex {x}"));
                }
            }
        }
        let vertices = images.iter().chain(inner.iter().copied());
        let expected = Graph::new(vertices, host_edges.iter().map(|e| e.endpoints()))?;
        if expected != self.host {
            return bad("host is not the union of the paths".into());
        }
        Ok(())
    }

    fn from_paths(
        model: Graph,
        main: BTreeMap<Vertex, Vertex>,
        all: BTreeMap<Edge, Vec<Vertex>>,
    ) -> Result<Self> {
        let mut vertices: BTreeSet<Vertex> = main.values().copied().collect();
        let mut edges: BTreeSet<Edge> = BTreeSet::new();
        for p in all.values() {
            vertices.extend(p.iter().copied());
            edges.extend(p.windows(2).map(|w| Edge::new(w[0], w[1])));
        }
        let host = Graph::new(vertices, edges.iter().map(|e| e.endpoints()))?;
        let paths = all.into_iter().filter(|(_, p)| p.len() > 2).collect();
        Ok(SubdivisionWitness {
            host,
            model,
            main,
            paths,
        })
    }
}

/// Shortest `from`–`to` path in `g` whose inner vertices lie in `allowed`.
fn path_through(g: &Graph, from: Vertex, to: Vertex, allowed: &VertexSet) -> Option<Vec<Vertex>> {
    let mut prev: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if w == to {
                let mut path = vec![to, v];
                let mut cur = v;
                while cur != from {
                    cur = prev[&cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            if allowed.contains(w) && w != from && !prev.contains_key(&w) {
                prev.insert(w, v);
                queue.push_back(w);
            }
        }
    }
    None
}

/// Shows `G ⊃ G′(A)` for a part `A` of `tree`: every augmented edge `ab`
/// is replaced by an `ab`-path through the interior of a side of `{a, b}`
/// that does not contain `A`.
pub fn realize_part_subdivision(
    g: &Graph,
    tree: &DecompositionTree,
    part: &VertexSet,
) -> Result<SubdivisionWitness> {
    if tree.part_index(part).is_none() {
        return Err(Error::UnknownNode(part.clone()));
    }
    let model = tree.augmented(g).induced(part)?;
    let mut all = BTreeMap::new();
    for e in model.edges() {
        let (a, b) = e.endpoints();
        if g.has_edge(a, b) {
            all.insert(e, vec![a, b]);
            continue;
        }
        let s = VertexSet::from([a, b]);
        if !tree.family().contains(&s) {
            return Err(Error::internal(format!(
                "augmented edge {e} is not a tree cutset"
            )));
        }
        let rest = part.difference(&s);
        let away = g
            .components_avoiding(&s)
            .into_iter()
            .find(|c| c.is_disjoint(&rest))
            .ok_or_else(|| Error::internal(format!("{s} has no side away from {part}")))?;
        let path = path_through(g, a, b, &away)
            .ok_or_else(|| Error::internal(format!("no {a}-{b} path through {away}")))?;
        all.insert(e, path);
    }
    let main = part.iter().map(|v| (v, v)).collect();
    let w = SubdivisionWitness::from_paths(model, main, all)?;
    w.verify(g)?;
    Ok(w)
}

type Mask = u128;

fn bit(i: usize) -> Mask {
    1 << i
}

fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

struct Search {
    adj: Vec<Mask>,
    model_adj: Vec<Mask>,
    /// Model edges, endpoints by model index.
    model_edges: Vec<(usize, usize)>,
    /// `lower[u] = Some(t)` requires the image of `u` to exceed that of `t`.
    lower: Vec<Option<usize>>,
    main: Vec<usize>,
    paths: Vec<Vec<usize>>,
}

impl Search {
    fn assign(&mut self, u: usize, used: Mask) -> bool {
        if u == self.model_adj.len() {
            self.paths = vec![Vec::new(); self.model_edges.len()];
            return self.route(0, used);
        }
        let need = self.model_adj[u].count_ones();
        let floor = self.lower[u].map_or(0, |t| self.main[t] + 1);
        for h in floor..self.adj.len() {
            if used & bit(h) != 0 || self.adj[h].count_ones() < need {
                continue;
            }
            self.main[u] = h;
            if self.assign(u + 1, used | bit(h)) {
                return true;
            }
        }
        false
    }

    /// Routes model edges `i..` through vertices outside `used`.
    fn route(&mut self, i: usize, used: Mask) -> bool {
        let Some(&(u, v)) = self.model_edges.get(i) else {
            return true;
        };
        let (a, b) = (self.main[u], self.main[v]);
        if self.adj[a] & bit(b) != 0 {
            self.paths[i] = vec![a, b];
            return self.route(i + 1, used);
        }
        let mut path = vec![a];
        self.extend(i, &mut path, bit(a), used)
    }

    /// Grows chordless paths: a chord would give a shorter path on a subset
    /// of the same vertices, so chorded paths never need to be tried.
    fn extend(&mut self, i: usize, path: &mut Vec<usize>, on_path: Mask, used: Mask) -> bool {
        let c = *path.last().expect("path starts at a main vertex");
        let (_, v) = self.model_edges[i];
        let b = self.main[v];
        if path.len() > 1 && self.adj[c] & bit(b) != 0 {
            path.push(b);
            let inner = on_path & !bit(path[0]);
            self.paths[i] = path.clone();
            path.pop();
            let used = used | inner;
            return self.remaining_reachable(i + 1, used) && self.route(i + 1, used);
        }
        let earlier = on_path & !bit(c);
        let candidates = self.adj[c] & !used & !on_path;
        for w in bits(candidates) {
            if self.adj[w] & earlier != 0 {
                continue;
            }
            path.push(w);
            let found = self.extend(i, path, on_path | bit(w), used);
            path.pop();
            if found {
                return true;
            }
        }
        false
    }

    /// Cheap pruning: every unrouted, non-adjacent pair must still be
    /// connected through free vertices.
    fn remaining_reachable(&self, from: usize, used: Mask) -> bool {
        self.model_edges[from..].iter().all(|&(u, v)| {
            let (a, b) = (self.main[u], self.main[v]);
            if self.adj[a] & bit(b) != 0 {
                return true;
            }
            let mut seen = bit(a);
            let mut frontier = bit(a);
            while frontier != 0 {
                let mut next = 0;
                for x in bits(frontier) {
                    next |= self.adj[x];
                }
                if next & bit(b) != 0 {
                    return true;
                }
                next &= !used & !seen;
                seen |= next;
                frontier = next;
            }
            false
        })
    }
}

/// Searches `g` for a subdivision of `model`, by exhaustive assignment of
/// main vertices and disjoint path routing. Interchangeable model vertices
/// (same neighborhood) are assigned in increasing host order only.
pub fn contains_subdivision(g: &Graph, model: &Graph) -> Result<Option<SubdivisionWitness>> {
    let n = g.num_vertices();
    if n > MAX_SEARCH_VERTICES {
        return Err(Error::SizeCap {
            what: "subdivision search host",
            size: n,
            cap: MAX_SEARCH_VERTICES,
        });
    }
    if model.num_vertices() > n || model.num_edges() > g.num_edges() {
        return Ok(None);
    }
    let ids: Vec<Vertex> = g.vertices().collect();
    let index = |v: Vertex| ids.binary_search(&v).expect("vertex of g");
    let adj: Vec<Mask> = ids
        .iter()
        .map(|&v| g.neighbors(v).iter().fold(0, |m, &w| m | bit(index(w))))
        .collect();

    let mids: Vec<Vertex> = model.vertices().collect();
    let mindex = |v: Vertex| mids.binary_search(&v).expect("vertex of model");
    let model_adj: Vec<Mask> = mids
        .iter()
        .map(|&v| {
            model
                .neighbors(v)
                .iter()
                .fold(0, |m, &w| m | bit(mindex(w)))
        })
        .collect();
    let mut lower = vec![None; mids.len()];
    for u in 0..mids.len() {
        for t in (0..u).rev() {
            let open = model_adj[u] == model_adj[t];
            let closed = model_adj[u] | bit(u) == model_adj[t] | bit(t);
            if open || closed {
                lower[u] = Some(t);
                break;
            }
        }
    }
    let mut model_edges: Vec<(usize, usize)> = model
        .edges()
        .map(|e| {
            let (u, v) = e.endpoints();
            (mindex(u), mindex(v))
        })
        .collect();
    model_edges.sort_by_key(|&(u, v)| (u, v));

    let mut search = Search {
        adj,
        model_adj,
        model_edges,
        lower,
        main: vec![0; mids.len()],
        paths: Vec::new(),
    };
    if !search.assign(0, 0) {
        return Ok(None);
    }
    let main = mids
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, ids[search.main[i]]))
        .collect();
    let all = search
        .model_edges
        .iter()
        .zip(&search.paths)
        .map(|(&(u, v), p)| {
            (
                Edge::new(mids[u], mids[v]),
                oriented(p, mids[u] < mids[v], &ids),
            )
        })
        .collect();
    let w = SubdivisionWitness::from_paths(model.clone(), main, all)?;
    w.verify(g)?;
    Ok(Some(w))
}

fn oriented(p: &[usize], forward: bool, ids: &[Vertex]) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = p.iter().map(|&i| ids[i]).collect();
    if !forward {
        out.reverse();
    }
    out
}

/// A `K5` or `K3,3` subdivision in `g`, if there is one.
pub fn kuratowski_witness(g: &Graph) -> Result<Option<SubdivisionWitness>> {
    if let Some(w) = contains_subdivision(g, &families::complete(5))? {
        return Ok(Some(w));
    }
    contains_subdivision(g, &families::complete_bipartite(3, 3))
}

/// Planarity by Kuratowski's theorem, with the Euler bound as a pre-filter.
pub fn base_planar(g: &Graph) -> Result<bool> {
    let (v, e) = (g.num_vertices(), g.num_edges());
    if v < 5 {
        return Ok(true);
    }
    if e > 3 * v - 6 {
        return Ok(false);
    }
    Ok(kuratowski_witness(g)?.is_none())
}

/// Outcome of a planarity check. A non-planar verdict carries a Kuratowski
/// subdivision inside the input graph and the part it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarityVerdict {
    pub planar: bool,
    pub witness: Option<SubdivisionWitness>,
    pub offending_part: Option<VertexSet>,
}

impl PlanarityVerdict {
    fn planar() -> Self {
        PlanarityVerdict {
            planar: true,
            witness: None,
            offending_part: None,
        }
    }
}

fn block_parts_checked<'t>(
    tree: &'t DecompositionTree,
    opts: &PlanarityOptions,
) -> Result<impl Iterator<Item = &'t VertexSet>> {
    for p in tree.parts().iter().filter(|p| p.is_block()) {
        if p.len() > opts.max_block_vertices {
            return Err(Error::SizeCap {
                what: "block part",
                size: p.len(),
                cap: opts.max_block_vertices,
            });
        }
    }
    Ok(tree
        .parts()
        .iter()
        .filter(|p| p.is_block())
        .map(|p| p.members()))
}

/// Planarity of a biconnected graph through its parts: cycle parts are
/// planar, each block part `B` is tested as `G′(B)`.
pub fn is_planar(g: &Graph, opts: &PlanarityOptions) -> Result<bool> {
    let tree = bt_tree(g)?;
    let aug = tree.augmented(g);
    for b in block_parts_checked(&tree, opts)? {
        if !base_planar(&aug.induced_unchecked(b))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Like [`is_planar`], but a non-planar answer comes with a Kuratowski
/// subdivision in `g`, obtained by pulling the block part's witness back
/// through [`realize_part_subdivision`].
pub fn check_planarity(g: &Graph, opts: &PlanarityOptions) -> Result<PlanarityVerdict> {
    let tree = bt_tree(g)?;
    let aug = tree.augmented(g);
    for b in block_parts_checked(&tree, opts)? {
        let part_graph = aug.induced_unchecked(b);
        let Some(local) = kuratowski_witness(&part_graph)? else {
            continue;
        };
        let realized = realize_part_subdivision(g, &tree, b)?;
        let witness = compose(g, &local, &realized)?;
        return Ok(PlanarityVerdict {
            planar: false,
            witness: Some(witness),
            offending_part: Some(b.clone()),
        });
    }
    Ok(PlanarityVerdict::planar())
}

/// Replaces every edge of `inner`'s host that is missing from `g` by the
/// matching path of `outer` (a subdivision of that host's supergraph).
fn compose(
    g: &Graph,
    inner: &SubdivisionWitness,
    outer: &SubdivisionWitness,
) -> Result<SubdivisionWitness> {
    let mut all = BTreeMap::new();
    for e in inner.model.edges() {
        let (u, v) = e.endpoints();
        let p = inner.path(u, v)?;
        let mut full = vec![p[0]];
        for w in p.windows(2) {
            if g.has_edge(w[0], w[1]) {
                full.push(w[1]);
            } else {
                let inv = |x: Vertex| {
                    outer
                        .main
                        .iter()
                        .find(|(_, &h)| h == x)
                        .map(|(&m, _)| m)
                        .ok_or_else(|| Error::internal(format!("{x} is not a main vertex")))
                };
                let detour = outer.path(inv(w[0])?, inv(w[1])?)?;
                full.extend_from_slice(&detour[1..]);
            }
        }
        all.insert(e, full);
    }
    let w = SubdivisionWitness::from_paths(inner.model.clone(), inner.main.clone(), all)?;
    w.verify(g)?;
    Ok(w)
}

/// Planarity of an arbitrary graph: every block of every component is
/// checked; blocks with fewer than three vertices are planar.
pub fn check_planarity_general(g: &Graph, opts: &PlanarityOptions) -> Result<PlanarityVerdict> {
    for comp in g.components() {
        let h = g.induced_unchecked(&comp);
        for block in block_cut_tree(&h)?.blocks {
            if block.len() < 3 {
                continue;
            }
            let verdict = check_planarity(&h.induced_unchecked(&block), opts)?;
            if !verdict.planar {
                return Ok(verdict);
            }
        }
    }
    Ok(PlanarityVerdict::planar())
}
