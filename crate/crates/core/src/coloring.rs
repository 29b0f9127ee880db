//! Colorings built part by part along the levels of `BT(G)`.
//!
//! Every strategy roots the tree at a part, colors that part from scratch and
//! then walks outward. A non-root part meets the already colored graph only
//! in its parent cutset `{x, y}`, so it can be colored on its own with the
//! two colors of `x` and `y` taken into account. The per-part searches are
//! exact and exponential; non-cycle parts above
//! [`ColoringOptions::max_part_vertices`] are refused.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::decomposition::{DecompositionTree, Node, Part};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

pub type Color = u32;

pub const DEFAULT_MAX_PART_VERTICES: usize = 12;

/// The exact solver indexes part vertices into 64-bit masks.
const MAX_SOLVER_VERTICES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColoringOptions {
    pub max_part_vertices: usize,
}

impl Default for ColoringOptions {
    fn default() -> Self {
        ColoringOptions {
            max_part_vertices: DEFAULT_MAX_PART_VERTICES,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Strategy {
    /// `χ(G) ≤ χ(G′) = max χ(G′(A))`.
    Augmented,
    /// `χ(G) ≤ max χ(G(A)) + 1`.
    PartsPlusOne,
    /// `χ(G) ≤ max(3, max over block parts χ(G(A)) + 1)`.
    BlocksPlusOne,
    /// Coloring from lists, erasing cutset colors part by part.
    List,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [
        Strategy::Augmented,
        Strategy::PartsPlusOne,
        Strategy::BlocksPlusOne,
        Strategy::List,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Augmented => "augmented",
            Strategy::PartsPlusOne => "parts+1",
            Strategy::BlocksPlusOne => "blocks+1",
            Strategy::List => "list",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Strategy> {
        Strategy::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::precondition(format!("unknown strategy `{s}`")))
    }
}

/// BFS levels of a decomposition tree from a root part. Parts sit on even
/// levels and cutsets on odd ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelOrder {
    root: usize,
    order: Vec<Node>,
    level: BTreeMap<Node, usize>,
    parent: BTreeMap<Node, Node>,
}

impl LevelOrder {
    pub fn root(&self) -> usize {
        self.root
    }

    /// All nodes in visiting order: by level, then canonically.
    pub fn order(&self) -> &[Node] {
        &self.order
    }

    pub fn level(&self, node: Node) -> Option<usize> {
        self.level.get(&node).copied()
    }

    pub fn parent(&self, node: Node) -> Option<Node> {
        self.parent.get(&node).copied()
    }

    pub fn depth(&self) -> usize {
        self.level.values().copied().max().unwrap_or(0)
    }
}

pub fn level_order(tree: &DecompositionTree, root: &VertexSet) -> Result<LevelOrder> {
    let r = tree
        .part_index(root)
        .ok_or_else(|| Error::UnknownNode(root.clone()))?;
    Ok(level_order_at(tree, r))
}

pub(crate) fn level_order_at(tree: &DecompositionTree, root: usize) -> LevelOrder {
    let start = Node::Part(root);
    let mut order = vec![start];
    let mut level = BTreeMap::from([(start, 0)]);
    let mut parent = BTreeMap::new();
    let mut queue = VecDeque::from([start]);
    while let Some(node) = queue.pop_front() {
        let next_level = level[&node] + 1;
        for next in tree.neighbors(node) {
            if let alloc::collections::btree_map::Entry::Vacant(slot) = level.entry(next) {
                slot.insert(next_level);
                parent.insert(next, node);
                order.push(next);
                queue.push_back(next);
            }
        }
    }
    LevelOrder {
        root,
        order,
        level,
        parent,
    }
}

/// Color lists per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ListAssignment {
    lists: BTreeMap<Vertex, BTreeSet<Color>>,
}

impl ListAssignment {
    pub fn new(lists: BTreeMap<Vertex, BTreeSet<Color>>) -> Result<Self> {
        if let Some((v, _)) = lists.iter().find(|(_, l)| l.is_empty()) {
            return Err(Error::precondition(format!("vertex {v} has an empty list")));
        }
        Ok(ListAssignment { lists })
    }

    /// Every vertex of `g` gets the list `0..size`.
    pub fn uniform(g: &Graph, size: usize) -> Self {
        let list: BTreeSet<Color> = (0..size as Color).collect();
        ListAssignment {
            lists: g.vertices().map(|v| (v, list.clone())).collect(),
        }
    }

    pub fn get(&self, v: Vertex) -> Option<&BTreeSet<Color>> {
        self.lists.get(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, &BTreeSet<Color>)> + '_ {
        self.lists.iter().map(|(&v, l)| (v, l))
    }

    pub fn sizes(&self) -> BTreeMap<Vertex, usize> {
        self.lists.iter().map(|(&v, l)| (v, l.len())).collect()
    }

    pub fn min_size(&self) -> usize {
        self.lists.values().map(BTreeSet::len).min().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("vertex {0} is not colored")]
    Uncolored(Vertex),
    #[error("colored vertex {0} is not in the graph")]
    UnknownVertex(Vertex),
    #[error("edge {0}-{1} has both ends colored {2}")]
    Monochromatic(Vertex, Vertex, Color),
    #[error("{used} colors used, bound is {bound}")]
    TooManyColors { used: usize, bound: usize },
    #[error("vertex {0} has color {1}, which is not in its list")]
    NotInList(Vertex, Color),
}

/// A coloring plus the bound it was built to respect.
///
/// For [`Strategy::List`] the bound is the list size the construction was
/// entitled to, and the check is list membership rather than palette size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringCertificate {
    pub assignment: BTreeMap<Vertex, Color>,
    pub bound: usize,
    pub strategy: Strategy,
}

impl ColoringCertificate {
    pub fn colors_used(&self) -> usize {
        self.assignment.values().collect::<BTreeSet<_>>().len()
    }

    pub fn verify(&self, g: &Graph) -> core::result::Result<(), CertificateError> {
        if let Some(&v) = self.assignment.keys().find(|&&v| !g.contains(v)) {
            return Err(CertificateError::UnknownVertex(v));
        }
        if let Some(v) = g.vertices().find(|v| !self.assignment.contains_key(v)) {
            return Err(CertificateError::Uncolored(v));
        }
        for e in g.edges() {
            let (u, v) = e.endpoints();
            if self.assignment[&u] == self.assignment[&v] {
                return Err(CertificateError::Monochromatic(u, v, self.assignment[&u]));
            }
        }
        let used = self.colors_used();
        if self.strategy != Strategy::List && used > self.bound {
            return Err(CertificateError::TooManyColors {
                used,
                bound: self.bound,
            });
        }
        Ok(())
    }

    pub fn verify_lists(
        &self,
        g: &Graph,
        lists: &ListAssignment,
    ) -> core::result::Result<(), CertificateError> {
        self.verify(g)?;
        for (&v, &c) in &self.assignment {
            if !lists.get(v).is_some_and(|l| l.contains(&c)) {
                return Err(CertificateError::NotInList(v, c));
            }
        }
        Ok(())
    }

    /// Renumbers colors `0, 1, …` by first use in vertex order. List
    /// certificates are left alone, since their colors are meaningful.
    pub fn canonicalize(&mut self) {
        if self.strategy == Strategy::List {
            return;
        }
        let mut renumber = BTreeMap::new();
        for c in self.assignment.values_mut() {
            let next = renumber.len() as Color;
            *c = *renumber.entry(*c).or_insert(next);
        }
    }

    fn checked(self, g: &Graph) -> Result<Self> {
        self.verify(g)
            .map_err(|e| Error::internal(format!("{} coloring is invalid: {e}", self.strategy)))?;
        Ok(self)
    }
}

/// A part's graph re-indexed into bit masks.
struct Local {
    ids: Vec<Vertex>,
    adj: Vec<u64>,
}

impl Local {
    fn new(h: &Graph) -> Result<Local> {
        if h.num_vertices() > MAX_SOLVER_VERTICES {
            return Err(Error::SizeCap {
                what: "exact coloring search",
                size: h.num_vertices(),
                cap: MAX_SOLVER_VERTICES,
            });
        }
        let ids: Vec<Vertex> = h.vertices().collect();
        let index = |v: Vertex| ids.binary_search(&v).expect("vertex of h");
        let adj = ids
            .iter()
            .map(|&v| h.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << index(w)))
            .collect();
        Ok(Local { ids, adj })
    }

    /// Picks the uncolored vertex with the most distinct neighbor colors,
    /// breaking ties by uncolored degree and then by index.
    fn most_saturated<C: Copy + Ord>(&self, colors: &[Option<C>]) -> Option<usize> {
        let uncolored: u64 = colors
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_none())
            .fold(0, |m, (i, _)| m | 1 << i);
        (0..self.ids.len())
            .filter(|&i| colors[i].is_none())
            .max_by_key(|&i| {
                let seen: BTreeSet<C> = bits(self.adj[i]).filter_map(|j| colors[j]).collect();
                (
                    seen.len(),
                    (self.adj[i] & uncolored).count_ones(),
                    core::cmp::Reverse(i),
                )
            })
    }

    fn k_color(&self, k: usize, colors: &mut [Option<u32>], used: usize) -> bool {
        let Some(v) = self.most_saturated(colors) else {
            return true;
        };
        let banned: BTreeSet<u32> = bits(self.adj[v]).filter_map(|j| colors[j]).collect();
        // Colors beyond the first unused one are interchangeable with it.
        for c in 0..k.min(used + 1) as u32 {
            if banned.contains(&c) {
                continue;
            }
            colors[v] = Some(c);
            if self.k_color(k, colors, used.max(c as usize + 1)) {
                return true;
            }
        }
        colors[v] = None;
        false
    }

    fn list_color(&self, lists: &[Vec<Color>], colors: &mut [Option<Color>]) -> bool {
        let open = |i: usize, colors: &[Option<Color>]| -> Vec<Color> {
            lists[i]
                .iter()
                .copied()
                .filter(|&c| bits(self.adj[i]).all(|j| colors[j] != Some(c)))
                .collect()
        };
        let next = (0..self.ids.len())
            .filter(|&i| colors[i].is_none())
            .min_by_key(|&i| (open(i, colors).len(), i));
        let Some(v) = next else {
            return true;
        };
        for c in open(v, colors) {
            colors[v] = Some(c);
            if self.list_color(lists, colors) {
                return true;
            }
        }
        colors[v] = None;
        false
    }

    fn to_map(&self, colors: &[Option<Color>]) -> BTreeMap<Vertex, Color> {
        self.ids
            .iter()
            .zip(colors)
            .map(|(&v, c)| (v, c.expect("complete coloring")))
            .collect()
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        (m != 0).then(|| {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            i
        })
    })
}

/// An optimal coloring of `h` with colors `0..χ(h)`, by exact search.
pub fn optimal_coloring(h: &Graph) -> Result<(usize, BTreeMap<Vertex, Color>)> {
    let local = Local::new(h)?;
    let n = local.ids.len();
    let start = if h.num_edges() > 0 { 2 } else { n.min(1) };
    for k in start..=n {
        let mut colors = vec![None; n];
        if local.k_color(k, &mut colors, 0) {
            return Ok((k, local.to_map(&colors)));
        }
    }
    Ok((0, BTreeMap::new()))
}

pub fn chromatic_number(h: &Graph) -> Result<usize> {
    Ok(optimal_coloring(h)?.0)
}

/// A coloring of `h` from `lists` (missing vertices get no colors), by
/// exact backtracking.
pub fn list_coloring(
    h: &Graph,
    lists: &BTreeMap<Vertex, Vec<Color>>,
) -> Result<Option<BTreeMap<Vertex, Color>>> {
    let local = Local::new(h)?;
    let lists: Vec<Vec<Color>> = local
        .ids
        .iter()
        .map(|v| lists.get(v).cloned().unwrap_or_default())
        .collect();
    let mut colors = vec![None; local.ids.len()];
    Ok(local
        .list_color(&lists, &mut colors)
        .then(|| local.to_map(&colors)))
}

/// The largest `d` such that some subgraph has minimum degree `d`.
pub fn degeneracy(g: &Graph) -> usize {
    let mut deg: BTreeMap<Vertex, usize> =
        g.vertices().map(|v| (v, g.neighbors(v).len())).collect();
    let mut best = 0;
    while let Some((&v, &d)) = deg.iter().min_by_key(|&(&v, &d)| (d, v)) {
        best = best.max(d);
        deg.remove(&v);
        for w in g.neighbors(v) {
            if let Some(dw) = deg.get_mut(w) {
                *dw -= 1;
            }
        }
    }
    best
}

fn check_cap(part: &Part, opts: &ColoringOptions) -> Result<()> {
    if !part.is_cycle() && part.len() > opts.max_part_vertices {
        return Err(Error::SizeCap {
            what: "part",
            size: part.len(),
            cap: opts.max_part_vertices,
        });
    }
    Ok(())
}

/// The per-part quantity each strategy takes the maximum of.
fn part_bound(
    g: &Graph,
    aug: &Graph,
    part: &Part,
    strategy: Strategy,
    opts: &ColoringOptions,
) -> Result<usize> {
    check_cap(part, opts)?;
    let m = part.members();
    match strategy {
        Strategy::Augmented => chromatic_number(&aug.induced_unchecked(m)),
        Strategy::PartsPlusOne | Strategy::BlocksPlusOne => {
            chromatic_number(&g.induced_unchecked(m))
        }
        Strategy::List => Ok(degeneracy(&g.induced_unchecked(m)) + 1),
    }
}

/// The part with the largest per-part bound for `strategy`, so that the
/// extra color the non-root parts may need is not paid on it. Ties go to
/// the canonically smallest part.
pub fn choose_root(
    g: &Graph,
    tree: &DecompositionTree,
    strategy: Strategy,
    opts: &ColoringOptions,
) -> Result<usize> {
    let aug = tree.augmented(g);
    let mut best: Option<(usize, usize)> = None;
    for (i, part) in tree.parts().iter().enumerate() {
        let b = part_bound(g, &aug, part, strategy, opts)?;
        if best.is_none_or(|(_, top)| b > top) {
            best = Some((i, b));
        }
    }
    best.map(|(i, _)| i)
        .ok_or_else(|| Error::precondition("the tree has no parts"))
}

/// Parts in level order, each with its parent cutset (none for the root).
fn walk(tree: &DecompositionTree, root: usize) -> Vec<(usize, Option<VertexSet>)> {
    let levels = level_order_at(tree, root);
    levels
        .order()
        .iter()
        .filter_map(|&node| match node {
            Node::Part(p) => {
                let cut = match levels.parent(node) {
                    Some(Node::Cutset(c)) => Some(tree.cutset(c).clone()),
                    _ => None,
                };
                Some((p, cut))
            }
            Node::Cutset(_) => None,
        })
        .collect()
}

/// Colors pinned on the parent cutset, and a check that nothing else in the
/// part is colored yet.
fn pins(
    part: &Part,
    cut: &VertexSet,
    colors: &BTreeMap<Vertex, Color>,
) -> Result<(Vertex, Color, Vertex, Color)> {
    let (x, y) = match cut.as_slice() {
        &[x, y] => (x, y),
        _ => {
            return Err(Error::precondition(format!(
                "cutset {cut} does not have two vertices"
            )))
        }
    };
    if let Some(v) = part
        .members()
        .iter()
        .find(|&v| !cut.contains(v) && colors.contains_key(&v))
    {
        return Err(Error::internal(format!(
            "vertex {v} colored before its part"
        )));
    }
    let get = |v: Vertex| {
        colors
            .get(&v)
            .copied()
            .ok_or_else(|| Error::internal(format!("cutset vertex {v} is uncolored")))
    };
    Ok((x, get(x)?, y, get(y)?))
}

/// Moves the color classes of `local` onto `targets` in order, sending the
/// class of each pinned vertex to its pinned color first.
fn relabel(
    local: &BTreeMap<Vertex, Color>,
    pinned: &[(Vertex, Color)],
    mut targets: impl Iterator<Item = Color>,
) -> Result<BTreeMap<Vertex, Color>> {
    let mut map: BTreeMap<Color, Color> = BTreeMap::new();
    for &(v, c) in pinned {
        map.insert(local[&v], c);
    }
    let taken: BTreeSet<Color> = map.values().copied().collect();
    let classes: BTreeSet<Color> = local.values().copied().collect();
    for class in classes {
        if map.contains_key(&class) {
            continue;
        }
        let t = targets
            .by_ref()
            .find(|t| !taken.contains(t))
            .ok_or_else(|| Error::internal("palette too small for the part"))?;
        map.insert(class, t);
    }
    Ok(local.iter().map(|(&v, c)| (v, map[c])).collect())
}

fn extend(colors: &mut BTreeMap<Vertex, Color>, new: BTreeMap<Vertex, Color>) {
    for (v, c) in new {
        colors.entry(v).or_insert(c);
    }
}

/// Proper coloring of `G′` with `max χ(G′(A))` colors: each part gets a
/// fresh optimal coloring of `G′(A)`, permuted so the parent cutset keeps
/// its two (distinct, since adjacent in `G′`) colors.
pub fn color_via_augmented(
    g: &Graph,
    tree: &DecompositionTree,
    opts: &ColoringOptions,
) -> Result<ColoringCertificate> {
    let aug = tree.augmented(g);
    let mut k = 0;
    for part in tree.parts() {
        k = k.max(part_bound(g, &aug, part, Strategy::Augmented, opts)?);
    }
    let root = choose_root(g, tree, Strategy::Augmented, opts)?;
    let mut colors = BTreeMap::new();
    for (p, cut) in walk(tree, root) {
        let part = tree.part(p);
        let (_, local) = optimal_coloring(&aug.induced_unchecked(part.members()))?;
        let new = match cut {
            None => local,
            Some(cut) => {
                let (x, cx, y, cy) = pins(part, &cut, &colors)?;
                relabel(&local, &[(x, cx), (y, cy)], 0..k as Color)?
            }
        };
        extend(&mut colors, new);
    }
    ColoringCertificate {
        assignment: colors,
        bound: k,
        strategy: Strategy::Augmented,
    }
    .checked(&aug)?
    .checked(g)
}

/// Colors a non-root part of `g` from a palette of `palette` colors when the
/// parent cutset `{x, y}` is already colored. Equal cutset colors `i`: color
/// `A − {x, y}` optimally and move it off `i`. Distinct colors `i ≠ j`:
/// color `A − y` optimally, pin `x` to `i` and keep everything off `j`.
fn color_pinned_part(
    g: &Graph,
    part: &Part,
    cut: &VertexSet,
    colors: &BTreeMap<Vertex, Color>,
    palette: usize,
) -> Result<BTreeMap<Vertex, Color>> {
    let (x, cx, y, cy) = pins(part, cut, colors)?;
    let m = part.members();
    if cx == cy {
        let (_, local) = optimal_coloring(&g.induced_unchecked(&m.difference(cut)))?;
        relabel(&local, &[], (0..palette as Color).filter(|&c| c != cx))
    } else {
        let (_, local) = optimal_coloring(&g.induced_unchecked(&m.without(y)))?;
        relabel(
            &local,
            &[(x, cx)],
            (0..palette as Color).filter(|&c| c != cy),
        )
    }
}

/// Greedy completion of a cycle part, walking around the cycle of `G′(A)`
/// away from the colored vertices. Each vertex meets at most two colored
/// neighbors, so three available colors always suffice.
fn greedy_cycle(
    g: &Graph,
    aug: &Graph,
    part: &Part,
    colors: &BTreeMap<Vertex, Color>,
    options: impl Fn(Vertex) -> Vec<Color>,
) -> Result<BTreeMap<Vertex, Color>> {
    let order = aug
        .induced_unchecked(part.members())
        .cycle_order()
        .ok_or_else(|| Error::internal(format!("part {} is not a cycle", part.members())))?;
    // Start right after a colored vertex so the walk ends next to one.
    let start = order
        .iter()
        .position(|v| colors.contains_key(v))
        .map_or(0, |i| i + 1);
    let mut out = colors.clone();
    let mut new = BTreeMap::new();
    for i in 0..order.len() {
        let v = order[(start + i) % order.len()];
        if out.contains_key(&v) {
            continue;
        }
        let c = options(v)
            .into_iter()
            .find(|c| g.neighbors(v).iter().all(|w| out.get(w) != Some(c)))
            .ok_or_else(|| Error::internal(format!("no color left for {v} on cycle part")))?;
        out.insert(v, c);
        new.insert(v, c);
    }
    Ok(new)
}

fn plus_one(
    g: &Graph,
    tree: &DecompositionTree,
    opts: &ColoringOptions,
    strategy: Strategy,
) -> Result<ColoringCertificate> {
    let aug = tree.augmented(g);
    let blocks_only = strategy == Strategy::BlocksPlusOne;
    let mut m = 0;
    for part in tree.parts() {
        let b = part_bound(g, &aug, part, strategy, opts)?;
        if !blocks_only || !part.is_cycle() {
            m = m.max(b);
        }
    }
    let palette = if blocks_only { (m + 1).max(3) } else { m + 1 };
    let root = choose_root(g, tree, strategy, opts)?;
    let mut colors = BTreeMap::new();
    for (p, cut) in walk(tree, root) {
        let part = tree.part(p);
        let new = match cut {
            None => optimal_coloring(&g.induced_unchecked(part.members()))?.1,
            Some(cut) if blocks_only && part.is_cycle() => {
                pins(part, &cut, &colors)?;
                greedy_cycle(g, &aug, part, &colors, |_| (0..3).collect())?
            }
            Some(cut) => color_pinned_part(g, part, &cut, &colors, palette)?,
        };
        extend(&mut colors, new);
    }
    ColoringCertificate {
        assignment: colors,
        bound: palette,
        strategy,
    }
    .checked(g)
}

/// Proper coloring of `g` with `max χ(G(A)) + 1` colors; the root part uses
/// at most `max χ(G(A))`.
pub fn color_parts_plus_one(
    g: &Graph,
    tree: &DecompositionTree,
    opts: &ColoringOptions,
) -> Result<ColoringCertificate> {
    plus_one(g, tree, opts, Strategy::PartsPlusOne)
}

/// As [`color_parts_plus_one`], but the maximum runs over block parts only
/// and cycle parts are completed greedily with three colors.
pub fn color_blocks_plus_one(
    g: &Graph,
    tree: &DecompositionTree,
    opts: &ColoringOptions,
) -> Result<ColoringCertificate> {
    plus_one(g, tree, opts, Strategy::BlocksPlusOne)
}

/// The list size [`list_color`] is guaranteed to succeed with:
/// `max(3, max over block parts of (degeneracy(G(A)) + 1) + 2)`. The
/// degeneracy term stands in for the choice number of each block, which it
/// bounds from above.
pub fn guaranteed_list_size(
    g: &Graph,
    tree: &DecompositionTree,
    opts: &ColoringOptions,
) -> Result<usize> {
    let aug = tree.augmented(g);
    let mut top = 0;
    for part in tree.parts().iter().filter(|p| !p.is_cycle()) {
        top = top.max(part_bound(g, &aug, part, Strategy::List, opts)? + 2);
    }
    Ok(top.max(3))
}

/// Colors `g` from `lists`. The root part is list-colored directly; in each
/// later part the two cutset colors are erased from the other lists first.
/// Cycle parts are completed greedily.
///
/// Lists at least [`guaranteed_list_size`] long cannot fail, so a failure
/// there is reported as an internal error. Shorter lists may still work;
/// when they do not, the error is a precondition violation.
pub fn list_color(
    g: &Graph,
    tree: &DecompositionTree,
    lists: &ListAssignment,
    opts: &ColoringOptions,
) -> Result<ColoringCertificate> {
    if let Some(v) = g.vertices().find(|&v| lists.get(v).is_none()) {
        return Err(Error::precondition(format!("vertex {v} has no list")));
    }
    let need = guaranteed_list_size(g, tree, opts)?;
    let entitled = lists.min_size() >= need;
    let fail = |what: alloc::string::String| {
        if entitled {
            Error::internal(what)
        } else {
            Error::precondition(format!(
                "{what}; lists of size {need} are guaranteed to work"
            ))
        }
    };
    let aug = tree.augmented(g);
    let list_of = |v: Vertex| -> Vec<Color> {
        lists
            .get(v)
            .map(|l| l.iter().copied().collect())
            .unwrap_or_default()
    };
    let root = choose_root(g, tree, Strategy::List, opts)?;
    let mut colors: BTreeMap<Vertex, Color> = BTreeMap::new();
    for (p, cut) in walk(tree, root) {
        let part = tree.part(p);
        let pinned = match &cut {
            Some(cut) => {
                let (_, cx, _, cy) = pins(part, cut, &colors)?;
                vec![cx, cy]
            }
            None => Vec::new(),
        };
        let new = if part.is_cycle() {
            greedy_cycle(g, &aug, part, &colors, list_of).map_err(|_| {
                fail(format!(
                    "cycle part {} ran out of list colors",
                    part.members()
                ))
            })?
        } else {
            let rest = match &cut {
                Some(cut) => part.members().difference(cut),
                None => part.members().clone(),
            };
            let reduced: BTreeMap<Vertex, Vec<Color>> = rest
                .iter()
                .map(|v| {
                    (
                        v,
                        list_of(v)
                            .into_iter()
                            .filter(|c| !pinned.contains(c))
                            .collect(),
                    )
                })
                .collect();
            list_coloring(&g.induced_unchecked(&rest), &reduced)?.ok_or_else(|| {
                fail(format!(
                    "part {} is not colorable from its lists",
                    part.members()
                ))
            })?
        };
        extend(&mut colors, new);
    }
    let cert = ColoringCertificate {
        assignment: colors,
        bound: need,
        strategy: Strategy::List,
    };
    cert.verify_lists(g, lists)
        .map_err(|e| Error::internal(format!("list coloring is invalid: {e}")))?;
    Ok(cert)
}

/// Runs `strategy` with uniform lists `0..guaranteed_list_size` for
/// [`Strategy::List`].
pub fn color(
    g: &Graph,
    tree: &DecompositionTree,
    strategy: Strategy,
    opts: &ColoringOptions,
) -> Result<ColoringCertificate> {
    match strategy {
        Strategy::Augmented => color_via_augmented(g, tree, opts),
        Strategy::PartsPlusOne => color_parts_plus_one(g, tree, opts),
        Strategy::BlocksPlusOne => color_blocks_plus_one(g, tree, opts),
        Strategy::List => {
            let size = guaranteed_list_size(g, tree, opts)?;
            list_color(g, tree, &ListAssignment::uniform(g, size), opts)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::Strategy;
    use super::*;
    use crate::decomposition::bt_tree;
    use crate::graph::families::*;
    use proptest::prelude::*;

    fn set<const N: usize>(v: [Vertex; N]) -> VertexSet {
        VertexSet::from(v)
    }

    fn opts() -> ColoringOptions {
        ColoringOptions::default()
    }

    /// K5 on 0..5 with 4-cycles hung on the pairs 0-1 and 2-3.
    fn k5_with_cycles() -> Graph {
        let mut edges: Vec<(Vertex, Vertex)> = complete(5).edges().map(|e| e.endpoints()).collect();
        edges.extend([(0, 5), (5, 6), (6, 1), (2, 7), (7, 8), (8, 3)]);
        Graph::new(0..9, edges).unwrap()
    }

    #[test]
    fn level_order_single_node() {
        let g = complete(4);
        let t = bt_tree(&g).unwrap();
        let l = level_order(&t, &g.vertex_set()).unwrap();
        assert_eq!(l.order(), &[Node::Part(0)]);
        assert_eq!(l.depth(), 0);
    }

    #[test]
    fn level_order_theta_from_a_leaf() {
        let g = theta();
        let t = bt_tree(&g).unwrap();
        let l = level_order(&t, &set([0, 1, 3])).unwrap();
        assert_eq!(
            l.level(Node::Part(t.part_index(&set([0, 1, 3])).unwrap())),
            Some(0)
        );
        assert_eq!(l.level(Node::Cutset(0)), Some(1));
        for other in [set([0, 1, 2]), set([0, 1, 4])] {
            assert_eq!(l.level(Node::Part(t.part_index(&other).unwrap())), Some(2));
        }
        // Same-level parts are visited canonically.
        assert_eq!(
            &l.order()[2..],
            &[
                Node::Part(t.part_index(&set([0, 1, 2])).unwrap()),
                Node::Part(t.part_index(&set([0, 1, 4])).unwrap())
            ]
        );
    }

    #[test]
    fn level_order_two_k4_and_bad_root() {
        let g = two_k4();
        let t = bt_tree(&g).unwrap();
        let l = level_order(&t, &set([0, 1, 2, 3])).unwrap();
        assert_eq!(l.depth(), 2);
        assert_eq!(
            level_order(&t, &set([0, 1])),
            Err(Error::UnknownNode(set([0, 1])))
        );
    }

    #[test]
    fn exact_chromatic_numbers() {
        assert_eq!(chromatic_number(&complete(6)).unwrap(), 6);
        assert_eq!(chromatic_number(&cycle(7)).unwrap(), 3);
        assert_eq!(chromatic_number(&cycle(8)).unwrap(), 2);
        assert_eq!(chromatic_number(&petersen()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::new([5], []).unwrap()).unwrap(), 1);
        assert_eq!(chromatic_number(&Graph::empty()).unwrap(), 0);
    }

    #[test]
    fn augmented_examples() {
        for (g, k) in [(two_k4(), 4), (theta(), 3), (cycle(7), 3)] {
            let t = bt_tree(&g).unwrap();
            let c = color_via_augmented(&g, &t, &opts()).unwrap();
            assert_eq!(c.bound, k);
            assert_eq!(c.colors_used(), k);
            c.verify(&g).unwrap();
        }
    }

    #[test]
    fn parts_plus_one_examples() {
        for (g, m) in [(theta(), 2), (two_k4(), 4), (cycle(4), 2)] {
            let t = bt_tree(&g).unwrap();
            let c = color_parts_plus_one(&g, &t, &opts()).unwrap();
            assert_eq!(c.bound, m + 1);
            c.verify(&g).unwrap();
        }
    }

    #[test]
    fn blocks_plus_one_examples() {
        for (g, bound) in [(theta(), 3), (two_k4(), 5), (cycle(5), 3)] {
            let t = bt_tree(&g).unwrap();
            let c = color_blocks_plus_one(&g, &t, &opts()).unwrap();
            assert_eq!(c.bound, bound);
            c.verify(&g).unwrap();
        }
        let g = cycle(5);
        let c = color_blocks_plus_one(&g, &bt_tree(&g).unwrap(), &opts()).unwrap();
        assert_eq!(c.colors_used(), 3);
    }

    #[test]
    fn list_examples() {
        let g = cycle(5);
        let t = bt_tree(&g).unwrap();
        let lists = ListAssignment::uniform(&g, 3);
        list_color(&g, &t, &lists, &opts())
            .unwrap()
            .verify_lists(&g, &lists)
            .unwrap();

        let g = theta();
        let t = bt_tree(&g).unwrap();
        assert_eq!(guaranteed_list_size(&g, &t, &opts()).unwrap(), 3);
        let lists = ListAssignment::uniform(&g, 3);
        list_color(&g, &t, &lists, &opts())
            .unwrap()
            .verify_lists(&g, &lists)
            .unwrap();

        let g = two_k4();
        let t = bt_tree(&g).unwrap();
        assert_eq!(guaranteed_list_size(&g, &t, &opts()).unwrap(), 6);
        let lists =
            ListAssignment::new(g.vertices().map(|v| (v, (v..v + 6).collect())).collect()).unwrap();
        list_color(&g, &t, &lists, &opts())
            .unwrap()
            .verify_lists(&g, &lists)
            .unwrap();
    }

    #[test]
    fn short_lists_fail_as_precondition() {
        let g = two_k4();
        let t = bt_tree(&g).unwrap();
        let lists = ListAssignment::uniform(&g, 3);
        assert!(matches!(
            list_color(&g, &t, &lists, &opts()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn choose_root_examples() {
        let g = two_k4();
        let t = bt_tree(&g).unwrap();
        assert_eq!(
            choose_root(&g, &t, Strategy::Augmented, &opts()).unwrap(),
            0
        );

        let g = k5_with_cycles();
        let t = bt_tree(&g).unwrap();
        let k5 = t.part_index(&set([0, 1, 2, 3, 4])).unwrap();
        for s in Strategy::ALL {
            assert_eq!(choose_root(&g, &t, s, &opts()).unwrap(), k5);
        }

        let g = cycle(6);
        let t = bt_tree(&g).unwrap();
        assert_eq!(
            choose_root(&g, &t, Strategy::PartsPlusOne, &opts()).unwrap(),
            0
        );
    }

    #[test]
    fn root_part_pays_no_extra_color() {
        let g = k5_with_cycles();
        let t = bt_tree(&g).unwrap();
        let c = color_parts_plus_one(&g, &t, &opts()).unwrap();
        let on_k5: BTreeSet<Color> = (0..5).map(|v| c.assignment[&v]).collect();
        assert_eq!(on_k5.len(), 5);
        assert!(c.colors_used() <= 6);
    }

    #[test]
    fn part_cap() {
        let g = complete(6);
        let t = bt_tree(&g).unwrap();
        let small = ColoringOptions {
            max_part_vertices: 5,
        };
        assert!(color_via_augmented(&g, &t, &small).unwrap_err().is_budget());
    }

    #[test]
    fn certificate_checks() {
        let g = path(3);
        let mut c = ColoringCertificate {
            assignment: BTreeMap::from([(0, 7), (1, 3), (2, 7)]),
            bound: 2,
            strategy: Strategy::PartsPlusOne,
        };
        c.verify(&g).unwrap();
        c.canonicalize();
        assert_eq!(c.assignment, BTreeMap::from([(0, 0), (1, 1), (2, 0)]));
        c.assignment.insert(2, 1);
        assert_eq!(c.verify(&g), Err(CertificateError::Monochromatic(1, 2, 1)));
        c.assignment.remove(&2);
        assert_eq!(c.verify(&g), Err(CertificateError::Uncolored(2)));
        c.assignment.insert(2, 2);
        c.bound = 2;
        assert_eq!(
            c.verify(&g),
            Err(CertificateError::TooManyColors { used: 3, bound: 2 })
        );
    }

    #[test]
    fn strategy_names_round_trip() {
        for s in Strategy::ALL {
            assert_eq!(s.name().parse::<Strategy>().unwrap(), s);
        }
        assert!("dsatur".parse::<Strategy>().is_err());
    }

    fn chain_of_cycles(lengths: &[u32]) -> Graph {
        // Cycles glued in a row, consecutive ones along one edge.
        let mut edges = Vec::new();
        let (mut a, mut b) = (0, 1);
        edges.push((a, b));
        let mut next = 2;
        for &len in lengths {
            let mut prev = a;
            for _ in 0..len - 2 {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, b));
            a = next - 1;
            b = next - 2;
        }
        Graph::from_edges(edges).unwrap()
    }

    proptest! {
        #[test]
        fn all_cycle_parts_need_three_colors(lengths in proptest::collection::vec(3u32..7, 1..5)) {
            let g = chain_of_cycles(&lengths);
            let t = bt_tree(&g).unwrap();
            prop_assert!(t.parts().iter().all(Part::is_cycle));
            let c = color_blocks_plus_one(&g, &t, &opts()).unwrap();
            prop_assert!(c.colors_used() <= 3);
        }

        #[test]
        fn random_lists_of_guaranteed_size_always_work(
            raw in proptest::collection::vec(proptest::collection::btree_set(0u32..12, 7..10), 9)
        ) {
            let g = k5_with_cycles();
            let t = bt_tree(&g).unwrap();
            prop_assert_eq!(guaranteed_list_size(&g, &t, &opts()).unwrap(), 7);
            let lists: BTreeMap<Vertex, BTreeSet<Color>> = g.vertices().zip(raw).collect();
            let lists = ListAssignment::new(lists).unwrap();
            let c = list_color(&g, &t, &lists, &opts()).unwrap();
            prop_assert!(c.verify_lists(&g, &lists).is_ok());
        }
    }
}
