use partree_core::Graph;

use crate::small::{bit, SmallGraph};
use crate::{OracleBudget, Result};

/// Exact chromatic number by dynamic programming over vertex subsets: the
/// cheapest cover of `S` peels off an independent set containing the lowest
/// vertex of `S`. Runs in `O(3^n)`.
pub fn oracle_chromatic(g: &Graph, budget: &OracleBudget) -> Result<usize> {
    budget.cap(
        "chromatic oracle",
        g.num_vertices(),
        budget.chromatic_vertices,
    )?;
    chromatic_small(&SmallGraph::from_graph(g)?)
}

pub(crate) fn chromatic_small(sg: &SmallGraph) -> Result<usize> {
    let n = sg.n();
    let size = 1usize << n;
    let mut independent = vec![true; size];
    for s in 1..size {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        independent[s] = independent[rest] && sg.adj()[low] & rest as u32 == 0;
    }
    let mut best = vec![u8::MAX; size];
    best[0] = 0;
    for s in 1..size {
        let low = s.trailing_zeros() as usize;
        let others = s & !(bit(low) as usize);
        // Walk all subsets t of `others`; the class is t plus the low vertex.
        let mut t = others;
        loop {
            let class = t | bit(low) as usize;
            if independent[class] {
                best[s] = best[s].min(best[s & !class] + 1);
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & others;
        }
    }
    Ok(best[size - 1] as usize)
}
