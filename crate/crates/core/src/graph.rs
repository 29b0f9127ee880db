//! Simple undirected graphs with stable vertex ids.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub type Vertex = u32;

/// A sorted, duplicate-free set of vertex ids.
///
/// The representation is canonical, so set equality is representation
/// equality and the derived ordering is the lexicographic order of the
/// sorted member lists.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub const fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Vertex> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.len() <= other.len() && self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn with(&self, v: Vertex) -> VertexSet {
        self.iter().chain(core::iter::once(v)).collect()
    }

    pub fn without(&self, v: Vertex) -> VertexSet {
        VertexSet(self.iter().filter(|&w| w != v).collect())
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(v: [Vertex; N]) -> Self {
        v.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = core::iter::Copied<core::slice::Iter<'a, Vertex>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An undirected edge, stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.0, self.1)
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.0 == v || self.1 == v
    }
}

impl From<(Vertex, Vertex)> for Edge {
    fn from((u, v): (Vertex, Vertex)) -> Self {
        Edge::new(u, v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// A simple undirected graph: no loops, no multi-edges.
///
/// Ids are caller-chosen and survive every surgery operation.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BTreeMap<Vertex, Vec<Vertex>>,
    edges: usize,
}

impl Graph {
    pub fn empty() -> Self {
        Graph::default()
    }

    /// Builds a graph, rejecting loops, repeated edges and edges whose
    /// endpoints are not listed as vertices.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Graph>
    where
        V: IntoIterator<Item = Vertex>,
        E: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj: BTreeMap<Vertex, BTreeSet<Vertex>> =
            vertices.into_iter().map(|v| (v, BTreeSet::new())).collect();
        let mut count = 0;
        for (u, v) in edges {
            if u == v {
                return Err(Error::Loop(u));
            }
            for w in [u, v] {
                if !adj.contains_key(&w) {
                    return Err(Error::UnknownVertex(w));
                }
            }
            if !adj.get_mut(&u).is_some_and(|n| n.insert(v)) {
                let e = Edge::new(u, v);
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
            adj.get_mut(&v).map(|n| n.insert(u));
            count += 1;
        }
        Ok(Graph::from_sets(adj, count))
    }

    /// Builds a graph whose vertex set is the set of edge endpoints.
    pub fn from_edges<E>(edges: E) -> Result<Graph>
    where
        E: IntoIterator<Item = (Vertex, Vertex)>,
        E::IntoIter: Clone,
    {
        let edges = edges.into_iter();
        let vertices: BTreeSet<Vertex> = edges.clone().flat_map(|(u, v)| [u, v]).collect();
        Graph::new(vertices, edges)
    }

    fn from_sets(adj: BTreeMap<Vertex, BTreeSet<Vertex>>, edges: usize) -> Graph {
        Graph {
            adj: adj
                .into_iter()
                .map(|(v, n)| (v, n.into_iter().collect()))
                .collect(),
            edges,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn vertices(&self) -> impl DoubleEndedIterator<Item = Vertex> + ExactSizeIterator + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet(self.vertices().collect())
    }

    /// Edges in lexicographic order, smaller endpoint first.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().flat_map(|(&u, n)| {
            n.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| Edge(u, v))
        })
    }

    /// Sorted neighbors of `v`; empty for an unknown vertex.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        self.adj.get(&v).map_or(&[], Vec::as_slice)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    fn check_vertices(&self, set: &VertexSet) -> Result<()> {
        set.iter().try_for_each(|v| self.check_vertex(v))
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.neighbors(v).len())
    }

    pub fn neighborhood(&self, v: Vertex) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.neighbors(v).to_vec()))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(Vec::len).max().unwrap_or(0)
    }

    /// `G − R` for a set of vertices and a set of edges: the listed vertices
    /// and edges go, together with every edge incident to a removed vertex.
    pub fn delete(&self, vertices: &VertexSet, edges: &[Edge]) -> Result<Graph> {
        self.check_vertices(vertices)?;
        for e in edges {
            if !self.has_edge(e.0, e.1) {
                return Err(Error::UnknownEdge(e.0, e.1));
            }
        }
        let adj: BTreeMap<Vertex, BTreeSet<Vertex>> = self
            .adj
            .iter()
            .filter(|(v, _)| !vertices.contains(**v))
            .map(|(&v, n)| {
                let kept = n
                    .iter()
                    .copied()
                    .filter(|&w| !vertices.contains(w) && !edges.contains(&Edge::new(v, w)))
                    .collect();
                (v, kept)
            })
            .collect();
        let count = adj.values().map(BTreeSet::len).sum::<usize>() / 2;
        Ok(Graph::from_sets(adj, count))
    }

    pub fn delete_vertices(&self, vertices: &VertexSet) -> Result<Graph> {
        self.delete(vertices, &[])
    }

    /// `G + xy`.
    pub fn add_edge(&self, x: Vertex, y: Vertex) -> Result<Graph> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(Error::Loop(x));
        }
        if self.has_edge(x, y) {
            let e = Edge::new(x, y);
            return Err(Error::DuplicateEdge(e.0, e.1));
        }
        Ok(self.with_edges(core::iter::once(Edge::new(x, y))))
    }

    /// Adds every listed edge that is not already present. Endpoints must
    /// be vertices of the graph and distinct.
    pub(crate) fn with_edges(&self, new: impl IntoIterator<Item = Edge>) -> Graph {
        let mut adj: BTreeMap<Vertex, BTreeSet<Vertex>> = self
            .adj
            .iter()
            .map(|(&v, n)| (v, n.iter().copied().collect()))
            .collect();
        let mut count = self.edges;
        for Edge(u, v) in new {
            debug_assert!(u != v && self.contains(u) && self.contains(v));
            if adj.get_mut(&u).is_some_and(|n| n.insert(v)) {
                adj.get_mut(&v).map(|n| n.insert(u));
                count += 1;
            }
        }
        Graph::from_sets(adj, count)
    }

    /// The induced subgraph `G(U)`.
    pub fn induced(&self, set: &VertexSet) -> Result<Graph> {
        self.check_vertices(set)?;
        Ok(self.induced_unchecked(set))
    }

    pub(crate) fn induced_unchecked(&self, set: &VertexSet) -> Graph {
        let adj: BTreeMap<Vertex, Vec<Vertex>> = set
            .iter()
            .map(|v| {
                let n = self
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&w| set.contains(w))
                    .collect();
                (v, n)
            })
            .collect();
        let edges = adj.values().map(Vec::len).sum::<usize>() / 2;
        Graph { adj, edges }
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_avoiding(&VertexSet::new())
    }

    /// Components of `G − removed` without materialising the smaller graph.
    /// Vertices of `removed` that are not in the graph are ignored.
    pub fn components_avoiding(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let mut seen: BTreeSet<Vertex> = removed.iter().collect();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in self.vertices() {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = Vec::new();
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in self.neighbors(v) {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp.into_iter().collect::<VertexSet>());
        }
        // Starts are visited in increasing order, so `out` is already sorted
        // by smallest member.
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// True for a connected 2-regular graph on at least three vertices.
    pub fn is_cycle(&self) -> bool {
        self.num_vertices() >= 3 && self.adj.values().all(|n| n.len() == 2) && self.is_connected()
    }

    /// Vertices along the cycle, starting at the smallest id and moving to
    /// its smaller neighbor first. `None` if the graph is not a cycle.
    pub fn cycle_order(&self) -> Option<Vec<Vertex>> {
        if !self.is_cycle() {
            return None;
        }
        let start = self.vertices().next()?;
        let mut order = alloc::vec![start];
        let mut prev = start;
        let mut cur = self.neighbors(start)[0];
        while cur != start {
            order.push(cur);
            let n = self.neighbors(cur);
            let next = if n[0] == prev { n[1] } else { n[0] };
            prev = cur;
            cur = next;
        }
        Some(order)
    }

    /// Vertices with the given degree.
    pub fn vertices_of_degree(&self, d: usize) -> VertexSet {
        VertexSet(
            self.adj
                .iter()
                .filter(|(_, n)| n.len() == d)
                .map(|(&v, _)| v)
                .collect(),
        )
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.vertex_set())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Small named graphs used throughout the tests and the CLI examples.
pub mod families {
    use super::*;

    fn build(n: Vertex, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Graph {
        Graph::new(0..n, edges).expect("family graphs are simple")
    }

    /// The cycle `0–1–…–(n−1)–0`.
    pub fn cycle(n: Vertex) -> Graph {
        assert!(n >= 3);
        build(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: Vertex) -> Graph {
        build(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn complete(n: Vertex) -> Graph {
        build(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    /// `K_{p,q}` with sides `0..p` and `p..p+q`.
    pub fn complete_bipartite(p: Vertex, q: Vertex) -> Graph {
        build(p + q, (0..p).flat_map(|i| (p..p + q).map(move |j| (i, j))))
    }

    /// Vertices `a = 0`, `b = 1` joined by three paths of length two through
    /// `x = 2`, `y = 3`, `z = 4`.
    pub fn theta() -> Graph {
        build(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])
    }

    /// Two copies of `K4` glued along the edge `0–1`; the other vertices
    /// are `2, 3` and `4, 5`.
    pub fn two_k4() -> Graph {
        let side = |c: Vertex, d: Vertex| [(0, c), (0, d), (1, c), (1, d), (c, d)];
        build(
            6,
            core::iter::once((0, 1)).chain(side(2, 3)).chain(side(4, 5)),
        )
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        build(10, outer.chain(spokes).chain(inner))
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;
    use alloc::vec;

    fn set<const N: usize>(v: [Vertex; N]) -> VertexSet {
        VertexSet::from(v)
    }

    #[test]
    fn vertex_set_is_canonical() {
        let a: VertexSet = [3, 1, 2, 1].into();
        assert_eq!(a.as_slice(), &[1, 2, 3]);
        assert_eq!(a, set([1, 2, 3]));
        assert_eq!(alloc::format!("{a}"), "{1,2,3}");
        assert!(set([1, 2]) < set([1, 3]));
    }

    #[test]
    fn rejects_loops_duplicates_and_unknown_endpoints() {
        assert_eq!(Graph::new(0..2, [(0, 0)]), Err(Error::Loop(0)));
        assert_eq!(
            Graph::new(0..2, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::new(0..2, [(0, 5)]), Err(Error::UnknownVertex(5)));
    }

    #[test]
    fn delete_opposite_pair_of_c4() {
        let g = cycle(4).delete_vertices(&set([0, 2])).unwrap();
        assert_eq!(g.vertex_set(), set([1, 3]));
        assert_eq!(g.num_edges(), 0);
        assert_eq!(g.components(), vec![set([1]), set([3])]);
    }

    #[test]
    fn delete_nothing_is_identity() {
        let g = petersen();
        assert_eq!(g.delete(&VertexSet::new(), &[]).unwrap(), g);
    }

    #[test]
    fn delete_vertex_of_k4_leaves_triangle() {
        let g = complete(4).delete_vertices(&set([0])).unwrap();
        assert_eq!(g, Graph::new(1..4, [(1, 2), (1, 3), (2, 3)]).unwrap());
    }

    #[test]
    fn delete_edges_and_errors() {
        let g = cycle(4)
            .delete(&VertexSet::new(), &[Edge::new(1, 0)])
            .unwrap();
        assert_eq!(g, Graph::new(0..4, [(1, 2), (2, 3), (3, 0)]).unwrap());
        assert_eq!(
            cycle(4).delete(&VertexSet::new(), &[Edge::new(0, 2)]),
            Err(Error::UnknownEdge(0, 2))
        );
        assert_eq!(
            cycle(4).delete_vertices(&set([9])),
            Err(Error::UnknownVertex(9))
        );
    }

    #[test]
    fn add_edge_cases() {
        assert_eq!(path(3).add_edge(0, 2).unwrap(), complete(3));
        let chord = theta().add_edge(0, 1).unwrap();
        let mut expected: Vec<Edge> = theta().edges().collect();
        expected.push(Edge::new(0, 1));
        expected.sort();
        assert_eq!(chord.edges().collect::<Vec<_>>(), expected);
        assert_eq!(path(3).add_edge(0, 1), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(path(3).add_edge(1, 1), Err(Error::Loop(1)));
    }

    #[test]
    fn induced_cases() {
        assert_eq!(complete(4).induced(&set([0, 1, 3])).unwrap().num_edges(), 3);
        let g = petersen();
        assert_eq!(g.induced(&g.vertex_set()).unwrap(), g);
        let h = theta().induced(&set([0, 2, 1])).unwrap();
        assert_eq!(
            h.edges().collect::<Vec<_>>(),
            vec![Edge::new(0, 2), Edge::new(1, 2)]
        );
        assert_eq!(theta().induced(&set([7])), Err(Error::UnknownVertex(7)));
    }

    #[test]
    fn components_cases() {
        assert_eq!(petersen().components(), vec![petersen().vertex_set()]);
        assert!(Graph::empty().components().is_empty());
        let g = Graph::new([5, 1, 3, 2], [(5, 2)]).unwrap();
        assert_eq!(g.components(), vec![set([1]), set([2, 5]), set([3])]);
    }

    #[test]
    fn degree_and_neighborhood() {
        assert!(cycle(5).vertices().all(|v| cycle(5).degree(v) == Ok(2)));
        assert!(complete(4)
            .vertices()
            .all(|v| complete(4).degree(v) == Ok(3)));
        assert_eq!(theta().neighborhood(0), Ok(set([2, 3, 4])));
        assert_eq!(theta().degree(0), Ok(3));
        assert_eq!(theta().degree(11), Err(Error::UnknownVertex(11)));
    }

    #[test]
    fn cycle_order_walks_the_cycle() {
        assert_eq!(cycle(5).cycle_order(), Some(vec![0, 1, 2, 3, 4]));
        assert_eq!(theta().cycle_order(), None);
    }

    #[test]
    fn named_graph_sizes() {
        assert_eq!(petersen().num_edges(), 15);
        assert_eq!(two_k4().num_edges(), 11);
        assert_eq!(complete_bipartite(3, 3).num_edges(), 9);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph() -> impl Strategy<Value = Graph> {
            (1u32..9).prop_flat_map(|n| {
                proptest::collection::vec(any::<bool>(), (n * (n - 1) / 2) as usize).prop_map(
                    move |bits| {
                        let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
                        let edges: Vec<_> = pairs
                            .zip(bits)
                            .filter(|(_, b)| *b)
                            .map(|(e, _)| e)
                            .collect();
                        Graph::new(0..n, edges).unwrap()
                    },
                )
            })
        }

        proptest! {
            #[test]
            fn deletion_partitions_vertices(g in arb_graph(), mask in any::<u16>()) {
                let r: VertexSet = g.vertices().filter(|v| mask >> v & 1 == 1).collect();
                let h = g.delete_vertices(&r).unwrap();
                let mut all: Vec<Vertex> = h.components().iter().flat_map(|c| c.iter()).collect();
                all.extend(r.iter());
                all.sort_unstable();
                prop_assert_eq!(all, g.vertices().collect::<Vec<_>>());
                prop_assert_eq!(h.components(), g.components_avoiding(&r));
            }

            #[test]
            fn induced_keeps_ids(g in arb_graph(), mask in any::<u16>()) {
                let a: VertexSet = g.vertices().filter(|v| mask >> v & 1 == 1).collect();
                prop_assert_eq!(g.induced(&a).unwrap().vertex_set(), a);
            }

            #[test]
            fn degrees_sum_to_twice_edges(g in arb_graph()) {
                let total: usize = g.vertices().map(|v| g.degree(v).unwrap()).sum();
                prop_assert_eq!(total, 2 * g.num_edges());
            }
        }
    }
}
