use partree_core::Graph;

use crate::small::{bit, members, SmallGraph};
use crate::{Deadline, OracleBudget, Result};

/// Planarity by Kuratowski's theorem with a plain search: every choice of
/// branch vertices for `K5` and `K3,3`, then every way of routing the model
/// edges along disjoint simple paths.
pub fn oracle_planar(g: &Graph, budget: &OracleBudget) -> Result<bool> {
    budget.cap("planarity oracle", g.num_vertices(), budget.planar_vertices)?;
    let sg = SmallGraph::from_graph(g)?;
    let (n, e) = (sg.n(), sg.num_edges());
    if n < 5 {
        return Ok(true);
    }
    if e > 3 * n - 6 {
        return Ok(false);
    }
    let mut deadline = budget.deadline("planarity oracle");
    let k5: Vec<(usize, usize)> = (0..5)
        .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
        .collect();
    let k33: Vec<(usize, usize)> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();

    for branch in subsets(sg.all(), 5) {
        if members(branch).any(|v| sg.degree(v) < 4) {
            continue;
        }
        let main: Vec<usize> = members(branch).collect();
        if routable(&sg, &main, &k5, branch, &mut deadline)? {
            return Ok(false);
        }
    }
    for branch in subsets(sg.all(), 6) {
        if members(branch).any(|v| sg.degree(v) < 3) {
            continue;
        }
        let vs: Vec<usize> = members(branch).collect();
        // Sides: the side holding vs[0] plus two of the other five.
        for pair in subsets(0b11111, 2) {
            let side: Vec<usize> = std::iter::once(0)
                .chain(members(pair).map(|i| i + 1))
                .collect();
            let mut main: Vec<usize> = side.iter().map(|&i| vs[i]).collect();
            main.extend((0..6).filter(|i| !side.contains(i)).map(|i| vs[i]));
            if routable(&sg, &main, &k33, branch, &mut deadline)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn subsets(from: u32, k: usize) -> Vec<u32> {
    let items: Vec<usize> = members(from).collect();
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn go(items: &[usize], k: usize, start: usize, pick: &mut Vec<usize>, out: &mut Vec<u32>) {
        if pick.len() == k {
            out.push(pick.iter().fold(0, |m, &i| m | bit(i)));
            return;
        }
        for i in start..items.len() {
            pick.push(items[i]);
            go(items, k, i + 1, pick, out);
            pick.pop();
        }
    }
    go(&items, k, 0, &mut pick, &mut out);
    out
}

/// Routes `edges` (pairs of indices into `main`) one by one along simple
/// paths avoiding `used`, trying every path for each edge.
fn routable(
    sg: &SmallGraph,
    main: &[usize],
    edges: &[(usize, usize)],
    used: u32,
    deadline: &mut Deadline,
) -> Result<bool> {
    let Some((&(i, j), rest)) = edges.split_first() else {
        return Ok(true);
    };
    let (a, b) = (main[i], main[j]);
    let mut visit =
        |inner: u32, deadline: &mut Deadline| routable(sg, main, rest, used | inner, deadline);
    walk(sg, a, b, used, 0, &mut visit, deadline)
}

/// Calls `visit` with the inner vertex set of every simple `cur`–`target`
/// path through vertices outside `used`, until it returns true.
fn walk(
    sg: &SmallGraph,
    cur: usize,
    target: usize,
    used: u32,
    inner: u32,
    visit: &mut dyn FnMut(u32, &mut Deadline) -> Result<bool>,
    deadline: &mut Deadline,
) -> Result<bool> {
    if sg.adj()[cur] & bit(target) != 0 && visit(inner, deadline)? {
        return Ok(true);
    }
    for w in members(sg.adj()[cur] & !used & !inner) {
        deadline.tick()?;
        if walk(sg, w, target, used, inner | bit(w), visit, deadline)? {
            return Ok(true);
        }
    }
    Ok(false)
}
