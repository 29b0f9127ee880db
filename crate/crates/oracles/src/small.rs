use partree_core::{Graph, Vertex, VertexSet};

use crate::{OracleError, Result};

/// A graph on at most 32 vertices as adjacency bit masks. Vertex `i` here
/// is `ids[i]` in the original graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    ids: Vec<Vertex>,
    adj: Vec<u32>,
}

pub(crate) fn bit(i: usize) -> u32 {
    1 << i
}

pub(crate) fn members(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            i
        })
    })
}

impl SmallGraph {
    pub const MAX_VERTICES: usize = 32;

    pub fn from_graph(g: &Graph) -> Result<SmallGraph> {
        let n = g.num_vertices();
        if n > Self::MAX_VERTICES {
            return Err(OracleError::Budget {
                what: "bitmask graph",
                size: n as u64,
                cap: Self::MAX_VERTICES as u64,
            });
        }
        let ids: Vec<Vertex> = g.vertices().collect();
        let index = |v: Vertex| ids.binary_search(&v).expect("neighbor is a vertex");
        let adj = ids
            .iter()
            .map(|&v| g.neighbors(v).iter().fold(0, |m, &w| m | bit(index(w))))
            .collect();
        Ok(SmallGraph { ids, adj })
    }

    /// Vertices `0..adj.len()`; `adj` must be symmetric and loop-free.
    pub fn from_masks(adj: Vec<u32>) -> SmallGraph {
        assert!(adj.len() <= Self::MAX_VERTICES);
        for (i, &m) in adj.iter().enumerate() {
            assert_eq!(m & bit(i), 0, "loop at {i}");
            for j in members(m) {
                assert!(adj[j] & bit(i) != 0, "asymmetric edge {i}-{j}");
            }
        }
        SmallGraph {
            ids: (0..adj.len() as Vertex).collect(),
            adj,
        }
    }

    pub fn to_graph(&self) -> Graph {
        let edges = (0..self.n()).flat_map(|i| {
            members(self.adj[i])
                .filter(move |&j| j > i)
                .map(move |j| (self.ids[i], self.ids[j]))
        });
        Graph::new(self.ids.iter().copied(), edges).expect("valid bitmask graph")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn adj(&self) -> &[u32] {
        &self.adj
    }

    pub fn all(&self) -> u32 {
        if self.n() == 32 {
            u32::MAX
        } else {
            bit(self.n()) - 1
        }
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count_ones() as usize
    }

    pub fn to_set(&self, m: u32) -> VertexSet {
        members(m).map(|i| self.ids[i]).collect()
    }

    pub fn to_mask(&self, set: &VertexSet) -> Result<u32> {
        set.iter()
            .try_fold(0, |m, v| match self.ids.binary_search(&v) {
                Ok(i) => Ok(m | bit(i)),
                Err(_) => Err(OracleError::Precondition(format!("{v} is not a vertex"))),
            })
    }

    /// The component of `start` in the subgraph induced by `alive`.
    pub fn reach(&self, start: usize, alive: u32) -> u32 {
        let mut seen = bit(start) & alive;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= self.adj[v];
            }
            next &= alive & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn components(&self, alive: u32) -> Vec<u32> {
        let mut left = alive;
        let mut out = Vec::new();
        while left != 0 {
            let c = self.reach(left.trailing_zeros() as usize, left);
            out.push(c);
            left &= !c;
        }
        out
    }

    /// Exactly one component.
    pub fn is_connected(&self, alive: u32) -> bool {
        alive != 0 && self.reach(alive.trailing_zeros() as usize, alive) == alive
    }

    /// At least three vertices, connected, and no single deletion disconnects.
    pub fn is_biconnected(&self, alive: u32) -> bool {
        alive.count_ones() >= 3
            && self.is_connected(alive)
            && members(alive).all(|v| self.is_connected(alive & !bit(v)))
    }

    /// Adds a vertex adjacent to the vertices in `nbrs`.
    pub fn extended(&self, nbrs: u32) -> SmallGraph {
        let n = self.n();
        assert!(n < Self::MAX_VERTICES && nbrs & !self.all() == 0);
        let mut adj = self.adj.clone();
        for j in members(nbrs) {
            adj[j] |= bit(n);
        }
        adj.push(nbrs);
        let mut ids = self.ids.clone();
        ids.push(ids.last().map_or(0, |&v| v + 1));
        SmallGraph { ids, adj }
    }
}
