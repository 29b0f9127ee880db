use partree_core::{Graph, VertexSet};

use crate::small::{bit, members, SmallGraph};
use crate::{OracleBudget, OracleError, Result};

/// Parts of the decomposition by `family`, straight from the definition:
/// every vertex set `A` that no cutset splits and from which every outside
/// vertex is separated by some cutset, keeping the inclusion-maximal ones.
/// All `2^n` subsets are examined.
pub fn oracle_parts(
    g: &Graph,
    family: &[VertexSet],
    budget: &OracleBudget,
) -> Result<Vec<VertexSet>> {
    budget.cap("parts oracle", g.num_vertices(), budget.parts_vertices)?;
    let sg = SmallGraph::from_graph(g)?;
    let all = sg.all();
    let cuts: Vec<(u32, Vec<u32>)> = family
        .iter()
        .map(|s| {
            let m = sg.to_mask(s)?;
            Ok((m, sg.components(all & !m)))
        })
        .collect::<Result<_>>()?;
    if let Some((m, _)) = cuts.iter().find(|(_, comps)| comps.len() < 2) {
        return Err(OracleError::Precondition(format!(
            "{} is not a cutset",
            sg.to_set(*m)
        )));
    }

    let mut deadline = budget.deadline("parts oracle");
    let mut found: Vec<u32> = Vec::new();
    for a in 1..=all {
        deadline.tick()?;
        let split = cuts
            .iter()
            .any(|(s, comps)| comps.iter().filter(|&&c| c & a & !s != 0).count() >= 2);
        if split {
            continue;
        }
        let every_outside_separated = members(all & !a).all(|b| {
            cuts.iter().any(|(s, comps)| {
                let rest = a & !s;
                s & bit(b) == 0
                    && rest != 0
                    && comps.iter().all(|&c| c & bit(b) == 0 || c & rest == 0)
            })
        });
        if every_outside_separated {
            found.push(a);
        }
    }
    let maximal = found
        .iter()
        .filter(|&&a| !found.iter().any(|&b| b != a && a & b == a))
        .map(|&a| sg.to_set(a));
    let mut parts: Vec<VertexSet> = maximal.collect();
    parts.sort();
    Ok(parts)
}
