//! Exhaustive small-graph corpora.
//!
//! Graphs are listed up to isomorphism with a canonical code: the adjacency
//! bits in the best vertex order found by individualization and refinement.
//! Every candidate order is a leaf of the search tree; no automorphism
//! pruning is done, which is fine at these sizes.

use std::collections::BTreeMap;

use crate::small::{bit, members, SmallGraph};

/// Largest order handled; the code of an 11-vertex graph fills 55 bits.
pub const MAX_CANONICAL_VERTICES: usize = 11;

/// Splits cells by neighbor counts into other cells until nothing changes.
/// Sub-cells are ordered by count, so the result depends only on the
/// isomorphism type of (graph, ordered partition).
fn refine(adj: &[u32], mut cells: Vec<u32>) -> Vec<u32> {
    'outer: loop {
        for si in 0..cells.len() {
            let splitter = cells[si];
            for ci in 0..cells.len() {
                let cell = cells[ci];
                if cell.count_ones() == 1 {
                    continue;
                }
                let mut by_count: BTreeMap<u32, u32> = BTreeMap::new();
                for v in members(cell) {
                    *by_count
                        .entry((adj[v] & splitter).count_ones())
                        .or_default() |= bit(v);
                }
                if by_count.len() > 1 {
                    cells.splice(ci..=ci, by_count.into_values());
                    continue 'outer;
                }
            }
        }
        return cells;
    }
}

fn code(adj: &[u32], order: &[usize]) -> u64 {
    let mut c = 0u64;
    for (p, &u) in order.iter().enumerate() {
        for &v in &order[p + 1..] {
            c = c << 1 | u64::from(adj[u] & bit(v) != 0);
        }
    }
    c
}

fn search(adj: &[u32], cells: Vec<u32>, best: &mut Option<(u64, Vec<usize>)>) {
    let cells = refine(adj, cells);
    match cells.iter().position(|c| c.count_ones() > 1) {
        None => {
            let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
            let c = code(adj, &order);
            if best.as_ref().is_none_or(|(b, _)| c > *b) {
                *best = Some((c, order));
            }
        }
        Some(i) => {
            for v in members(cells[i]) {
                let mut next = cells.clone();
                next.splice(i..=i, [bit(v), cells[i] & !bit(v)]);
                search(adj, next, best);
            }
        }
    }
}

/// Canonical code and ordering: isomorphic graphs, and only they, get the
/// same `(n, code)`.
pub fn canonical(sg: &SmallGraph) -> (usize, u64, Vec<usize>) {
    assert!(
        sg.n() <= MAX_CANONICAL_VERTICES,
        "canonical form is limited to {MAX_CANONICAL_VERTICES} vertices"
    );
    if sg.n() == 0 {
        return (0, 0, Vec::new());
    }
    let mut best = None;
    search(sg.adj(), vec![sg.all()], &mut best);
    let (c, order) = best.expect("at least one leaf");
    (sg.n(), c, order)
}

/// Relabels `sg` into its canonical vertex order.
pub fn canonical_graph(sg: &SmallGraph) -> SmallGraph {
    let (_, _, order) = canonical(sg);
    let mut pos = vec![0; order.len()];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    let adj = order
        .iter()
        .map(|&v| members(sg.adj()[v]).fold(0, |m, w| m | bit(pos[w])))
        .collect();
    SmallGraph::from_masks(adj)
}

/// One representative of every connected graph on `n` vertices, in
/// canonical form and sorted by code.
///
/// Every connected graph on `n ≥ 2` vertices has a vertex whose removal
/// leaves it connected, so extending each connected graph on `n − 1`
/// vertices by a new vertex with every nonempty neighborhood reaches them
/// all.
pub fn connected_graphs(n: usize) -> Vec<SmallGraph> {
    assert!(n <= MAX_CANONICAL_VERTICES);
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![SmallGraph::from_masks(vec![0])];
    for _ in 1..n {
        let mut seen: BTreeMap<u64, SmallGraph> = BTreeMap::new();
        for g in &level {
            for nbrs in 1..=g.all() {
                let h = canonical_graph(&g.extended(nbrs));
                let (_, c, _) = canonical(&h);
                seen.entry(c).or_insert(h);
            }
        }
        level = seen.into_values().collect();
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_graph_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn canonical_code_ignores_labels() {
        // Path 0-1-2-3 and the same path relabelled 2-0-3-1.
        let a = SmallGraph::from_masks(vec![0b0010, 0b0101, 0b1010, 0b0100]);
        let b = SmallGraph::from_masks(vec![0b1100, 0b1000, 0b0001, 0b0011]);
        assert_eq!(canonical(&a).1, canonical(&b).1);
        let star = SmallGraph::from_masks(vec![0b1110, 0b0001, 0b0001, 0b0001]);
        assert_ne!(canonical(&a).1, canonical(&star).1);
    }
}
