use partree_core::Graph;

use crate::chromatic::chromatic_small;
use crate::small::{bit, members, SmallGraph};
use crate::{Deadline, OracleBudget, Result};

/// Whether `g` is `k`-choosable.
///
/// Two shortcuts come first: `k` above the degeneracy means greedy coloring
/// always succeeds, and `k` below the chromatic number means the constant
/// lists already fail. Only the remaining cases fall to
/// [`oracle_choosable_exhaustive`] and its budget.
pub fn oracle_choosable(g: &Graph, k: usize, budget: &OracleBudget) -> Result<bool> {
    budget.validate()?;
    let sg = SmallGraph::from_graph(g)?;
    if k > degeneracy(&sg) {
        return Ok(true);
    }
    if sg.n() <= budget.chromatic_vertices && k < chromatic_small(&sg)? {
        return Ok(false);
    }
    exhaustive(&sg, k, budget)
}

/// Exact `k`-choosability by enumerating every assignment of `k`-lists
/// from a universe of `k·n` colors.
///
/// Vertices of degree below `k` are peeled first, since they can always be
/// colored last. Lists are enumerated up to renaming of colors: each new
/// list is some already used colors plus the next unused ones. The search
/// carries every proper coloring of the listed prefix and stops at the
/// first prefix with none.
pub fn oracle_choosable_exhaustive(g: &Graph, k: usize, budget: &OracleBudget) -> Result<bool> {
    budget.validate()?;
    exhaustive(&SmallGraph::from_graph(g)?, k, budget)
}

fn exhaustive(sg: &SmallGraph, k: usize, budget: &OracleBudget) -> Result<bool> {
    budget.cap(
        "choosability oracle vertices",
        sg.n(),
        budget.choosable_vertices,
    )?;
    budget.cap("choosability oracle list size", k, budget.choosable_colors)?;
    if k == 0 {
        return Ok(sg.n() == 0);
    }
    // Peel vertices of degree < k.
    let mut alive = sg.all();
    while let Some(v) = members(alive).find(|&v| (sg.adj()[v] & alive).count_ones() < k as u32) {
        alive &= !bit(v);
    }
    let order: Vec<usize> = members(alive).collect();
    let earlier: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            (0..i)
                .filter(|&j| sg.adj()[v] & bit(order[j]) != 0)
                .collect()
        })
        .collect();
    let mut search = Search {
        k,
        earlier,
        deadline: budget.deadline("choosability oracle"),
    };
    search.run(0, 0, vec![Vec::new()])
}

struct Search {
    k: usize,
    /// For each position, the earlier positions adjacent to it.
    earlier: Vec<Vec<usize>>,
    deadline: Deadline,
}

impl Search {
    /// True when every list assignment extending the current prefix is
    /// colorable. `colorings` holds the proper colorings of the prefix.
    fn run(&mut self, i: usize, used: usize, colorings: Vec<Vec<u8>>) -> Result<bool> {
        if i == self.earlier.len() {
            return Ok(true);
        }
        let mut old = Vec::new();
        loop {
            self.deadline.tick()?;
            let nbrs: &[usize] = &self.earlier[i];
            let fresh = self.k - old.len();
            let list: Vec<u8> = old
                .iter()
                .copied()
                .chain((used..used + fresh).map(|c| c as u8))
                .collect();
            let next: Vec<Vec<u8>> = colorings
                .iter()
                .flat_map(|c| {
                    list.iter()
                        .filter(move |&&x| nbrs.iter().all(|&j| c[j] != x))
                        .map(move |&x| {
                            let mut d = c.clone();
                            d.push(x);
                            d
                        })
                })
                .collect();
            if next.is_empty() || !self.run(i + 1, used + fresh, next)? {
                return Ok(false);
            }
            if !next_subset(&mut old, used) || old.len() > self.k {
                return Ok(true);
            }
        }
    }
}

/// Steps through all subsets of `0..n` as sorted vectors, in size-then-
/// lexicographic order. Returns false after the last one.
fn next_subset(s: &mut Vec<u8>, n: usize) -> bool {
    let size = s.len();
    for i in (0..size).rev() {
        if (s[i] as usize) < n - (size - i) {
            s[i] += 1;
            for j in i + 1..size {
                s[j] = s[j - 1] + 1;
            }
            return true;
        }
    }
    if size < n {
        *s = (0..=size as u8).collect();
        return true;
    }
    false
}

/// Largest minimum degree over all subgraphs, by repeated min-degree
/// removal.
fn degeneracy(sg: &SmallGraph) -> usize {
    let mut alive = sg.all();
    let mut best = 0;
    while alive != 0 {
        let v = members(alive)
            .min_by_key(|&v| (sg.adj()[v] & alive).count_ones())
            .expect("alive is nonempty");
        best = best.max((sg.adj()[v] & alive).count_ones() as usize);
        alive &= !bit(v);
    }
    best
}
