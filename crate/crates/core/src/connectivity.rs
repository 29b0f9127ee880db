//! Vertex cutsets: enumeration, the separates/splits predicates,
//! independence, and the single cutsets of a biconnected graph.
//!
//! Everything here is exhaustive over vertex subsets with one connectivity
//! check per subset, `O(n^k (n + m))`. That is the intended scale; see
//! [`SOFT_VERTEX_CAP`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Above this many vertices the exhaustive routines still work but get slow;
/// front ends should warn.
pub const SOFT_VERTEX_CAP: usize = 64;

/// A vertex set whose removal disconnects its host graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cutset {
    members: VertexSet,
}

impl Cutset {
    /// Checks that `members` belong to `g` and that `g − members` is
    /// disconnected.
    pub fn new(g: &Graph, members: VertexSet) -> Result<Cutset> {
        for v in &members {
            if !g.contains(v) {
                return Err(Error::UnknownVertex(v));
            }
        }
        if disconnects(g, &members) {
            Ok(Cutset { members })
        } else {
            Err(Error::NotACutset(members))
        }
    }

    pub(crate) fn unchecked(members: VertexSet) -> Cutset {
        Cutset { members }
    }

    pub fn members(&self) -> &VertexSet {
        &self.members
    }

    pub fn k(&self) -> usize {
        self.members.len()
    }
}

/// A sorted, duplicate-free family of cutsets of one size `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutsetFamily {
    k: usize,
    cutsets: Vec<Cutset>,
    independent: bool,
}

impl CutsetFamily {
    pub fn empty(k: usize) -> Self {
        CutsetFamily {
            k,
            cutsets: Vec::new(),
            independent: true,
        }
    }

    /// Validates every set as a `k`-cutset of `g`. The family is not marked
    /// independent until [`CutsetFamily::verify_independent`] succeeds.
    pub fn new<I>(g: &Graph, k: usize, sets: I) -> Result<CutsetFamily>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        let mut cutsets = Vec::new();
        for s in sets {
            if s.len() != k {
                return Err(Error::MixedSizes(k, s.len()));
            }
            cutsets.push(Cutset::new(g, s)?);
        }
        Ok(CutsetFamily::from_sorted(k, cutsets, false))
    }

    fn from_sorted(k: usize, mut cutsets: Vec<Cutset>, independent: bool) -> Self {
        cutsets.sort();
        cutsets.dedup();
        let independent = independent || cutsets.len() <= 1;
        CutsetFamily {
            k,
            cutsets,
            independent,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.cutsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cutsets.is_empty()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &Cutset> + '_ {
        self.cutsets.iter()
    }

    pub fn sets(&self) -> impl ExactSizeIterator<Item = &VertexSet> + '_ {
        self.cutsets.iter().map(Cutset::members)
    }

    pub fn contains(&self, set: &VertexSet) -> bool {
        self.cutsets
            .binary_search_by(|c| c.members.cmp(set))
            .is_ok()
    }

    /// Whether the family has been checked to be pairwise independent.
    pub fn is_independent(&self) -> bool {
        self.independent
    }

    /// Checks every pair with the splits predicate, `O(|family|²)` checks.
    pub fn verify_independent(mut self, g: &Graph) -> Result<CutsetFamily> {
        if !self.independent {
            for (i, s) in self.cutsets.iter().enumerate() {
                for t in &self.cutsets[i + 1..] {
                    if !independent_unchecked(g, &s.members, &t.members) {
                        return Err(Error::Dependent(s.members.clone(), t.members.clone()));
                    }
                }
            }
            self.independent = true;
        }
        Ok(self)
    }

    /// The union of all member sets.
    pub fn covered(&self) -> VertexSet {
        self.sets().flat_map(|s| s.iter()).collect()
    }

    pub(crate) fn from_verified(k: usize, cutsets: Vec<Cutset>) -> CutsetFamily {
        CutsetFamily::from_sorted(k, cutsets, true)
    }

    pub(crate) fn from_unverified(k: usize, cutsets: Vec<Cutset>) -> CutsetFamily {
        CutsetFamily::from_sorted(k, cutsets, false)
    }
}

fn disconnects(g: &Graph, removed: &VertexSet) -> bool {
    g.components_avoiding(removed).len() >= 2
}

/// Calls `f` on every `size`-subset of `items` in lexicographic order.
/// Stops early when `f` returns `false`; returns whether it ran to the end.
pub(crate) fn for_each_subset(
    items: &[Vertex],
    size: usize,
    mut f: impl FnMut(&VertexSet) -> bool,
) -> bool {
    if size > items.len() {
        return true;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let set: VertexSet = idx.iter().map(|&i| items[i]).collect();
        if !f(&set) {
            return false;
        }
        // Advance the rightmost index that still has room.
        let mut i = size;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            if idx[i] != i + items.len() - size {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All `k`-vertex cutsets of a connected graph, for `k ∈ {1, 2}`.
pub fn enumerate_cutsets(g: &Graph, k: usize) -> Result<CutsetFamily> {
    if !(1..=2).contains(&k) {
        return Err(Error::UnsupportedK(k));
    }
    if g.num_vertices() <= k {
        return Err(Error::precondition(format!(
            "need more than {k} vertices, graph has {}",
            g.num_vertices()
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let vertices: Vec<Vertex> = g.vertices().collect();
    let mut found = Vec::new();
    for_each_subset(&vertices, k, |s| {
        if disconnects(g, s) {
            found.push(Cutset::unchecked(s.clone()));
        }
        true
    });
    // Distinct 1-cutsets can never split each other.
    Ok(if k == 1 {
        CutsetFamily::from_verified(k, found)
    } else {
        CutsetFamily::from_unverified(k, found)
    })
}

fn component_index(g: &Graph, removed: &VertexSet) -> BTreeMap<Vertex, usize> {
    g.components_avoiding(removed)
        .iter()
        .enumerate()
        .flat_map(|(i, c)| c.iter().map(move |v| (v, i)))
        .collect()
}

/// Whether `r` separates `x` from `y`: no component of `G − r` meets both
/// `x ∖ r` and `y ∖ r`.
pub fn separates(g: &Graph, r: &VertexSet, x: &VertexSet, y: &VertexSet) -> Result<bool> {
    for set in [x, y] {
        if set.is_subset(r) {
            return Err(Error::precondition(format!("{set} is contained in {r}")));
        }
    }
    let comp = component_index(g, r);
    let lookup = |v: Vertex| comp.get(&v).copied().ok_or(Error::UnknownVertex(v));
    let mut x_comps = Vec::new();
    for v in x.difference(r).iter() {
        x_comps.push(lookup(v)?);
    }
    for v in y.difference(r).iter() {
        if x_comps.contains(&lookup(v)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `r` splits `x`: `x ∖ r` meets at least two components of `G − r`.
pub fn splits(g: &Graph, r: &VertexSet, x: &VertexSet) -> Result<bool> {
    if x.is_subset(r) {
        return Err(Error::precondition(format!("{x} is contained in {r}")));
    }
    for v in x {
        if !g.contains(v) {
            return Err(Error::UnknownVertex(v));
        }
    }
    Ok(splits_unchecked(g, r, x))
}

pub(crate) fn splits_unchecked(g: &Graph, r: &VertexSet, x: &VertexSet) -> bool {
    let comp = component_index(g, r);
    let rest = x.difference(r);
    let mut ids = rest.iter().map(|v| comp[&v]);
    match ids.next() {
        Some(first) => ids.any(|c| c != first),
        None => false,
    }
}

/// `v(G) > k`, and no set of fewer than `k` vertices disconnects the graph.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if g.num_vertices() <= k {
        return false;
    }
    let vertices: Vec<Vertex> = g.vertices().collect();
    (0..k).all(|size| for_each_subset(&vertices, size, |s| !disconnects(g, s)))
}

pub fn is_biconnected(g: &Graph) -> bool {
    is_k_connected(g, 2)
}

fn check_pair(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<()> {
    if s.len() != t.len() {
        return Err(Error::MixedSizes(s.len(), t.len()));
    }
    if s == t {
        return Err(Error::precondition(format!("{s} compared with itself")));
    }
    Cutset::new(g, s.clone())?;
    Cutset::new(g, t.clone())?;
    Ok(())
}

/// Two distinct `k`-cutsets are independent when neither splits the other.
pub fn independent(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<bool> {
    check_pair(g, s, t)?;
    Ok(independent_unchecked(g, s, t))
}

pub(crate) fn independent_unchecked(g: &Graph, s: &VertexSet, t: &VertexSet) -> bool {
    !splits_unchecked(g, s, t) && !splits_unchecked(g, t, s)
}

/// Whether the pair obeys the dichotomy "independent, or each splits the
/// other" (never exactly one direction).
pub fn dependence_is_mutual(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<bool> {
    check_pair(g, s, t)?;
    Ok(splits_unchecked(g, s, t) == splits_unchecked(g, t, s))
}

/// The single cutsets of a biconnected graph: 2-cutsets independent of
/// every other 2-cutset. The result is flagged pairwise independent.
pub fn single_cutsets(g: &Graph) -> Result<CutsetFamily> {
    if !is_biconnected(g) {
        return Err(Error::NotKConnected { k: 2 });
    }
    let all = enumerate_cutsets(g, 2)?;
    let single = all
        .iter()
        .filter(|s| {
            all.iter()
                .all(|t| t == *s || independent_unchecked(g, s.members(), t.members()))
        })
        .cloned()
        .collect();
    Ok(CutsetFamily::from_verified(2, single))
}
