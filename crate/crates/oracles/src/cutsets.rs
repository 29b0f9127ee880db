use partree_core::{Graph, VertexSet};

use crate::small::{bit, members, SmallGraph};
use crate::{OracleBudget, OracleError, Result};

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Every `k`-subset whose removal leaves a disconnected graph, for any `k`,
/// sorted.
pub fn oracle_cutsets(g: &Graph, k: usize, budget: &OracleBudget) -> Result<Vec<VertexSet>> {
    budget.validate()?;
    let sg = SmallGraph::from_graph(g)?;
    let n = sg.n();
    let count = binomial(n as u64, k as u64);
    if count > budget.cutset_subsets {
        return Err(OracleError::Budget {
            what: "cutset oracle subsets",
            size: count,
            cap: budget.cutset_subsets,
        });
    }
    if k > n {
        return Ok(Vec::new());
    }
    let all = sg.all();
    let mut deadline = budget.deadline("cutset oracle");
    let mut out = Vec::new();
    // Gosper's hack walks the k-bit masks in increasing order.
    let mut s: u64 = (1u64 << k) - 1;
    while s < 1u64 << n {
        deadline.tick()?;
        let rest = all & !(s as u32);
        if rest != 0 && !sg.is_connected(rest) {
            out.push(sg.to_set(s as u32));
        }
        if s == 0 {
            break;
        }
        let low = s & s.wrapping_neg();
        let ripple = s + low;
        s = (((ripple ^ s) >> 2) / low) | ripple;
    }
    out.sort();
    Ok(out)
}

/// Critical by deletion: `g` is biconnected on at least four vertices and
/// `g − x` is not biconnected for any vertex `x`.
pub fn oracle_critical(g: &Graph, budget: &OracleBudget) -> Result<bool> {
    budget.cap(
        "critical oracle",
        g.num_vertices(),
        budget.critical_vertices,
    )?;
    let sg = SmallGraph::from_graph(g)?;
    if sg.n() < 4 {
        return Err(OracleError::Precondition(format!(
            "{} vertices, need at least 4",
            sg.n()
        )));
    }
    let all = sg.all();
    if !sg.is_biconnected(all) {
        return Err(OracleError::Precondition("graph is not biconnected".into()));
    }
    Ok(members(all).all(|x| !sg.is_biconnected(all & !bit(x))))
}
