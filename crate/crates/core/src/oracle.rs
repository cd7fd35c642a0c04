//! Brute-force references for colorability and maximal independent sets.
//!
//! Nothing here touches the subset tables or the enumerator: adjacency is
//! rebuilt as a plain matrix from the edge list and every check is a direct
//! search.

use std::collections::BTreeSet;

use crate::error::BudgetExceeded;
use crate::graph::Graph;
use crate::instance::{Color, ColorList, Instance};
use crate::subset::VertexSubset;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    /// Largest `|W|` the colorability search accepts.
    pub max_colorable: usize,
    /// Largest `|W|` the subset-exhaustive MIS listing accepts.
    pub max_mis: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_colorable: 12,
            max_mis: 16,
        }
    }
}

fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Whether `G[w]` has a proper coloring with `f(v) ∈ lists[v]`.
pub fn brute_force_colorable(
    inst: &Instance,
    w: VertexSubset,
    lists: &[ColorList],
) -> Result<bool, BudgetExceeded> {
    brute_force_colorable_within(inst, w, lists, &OracleBudget::default())
}

pub fn brute_force_colorable_within(
    inst: &Instance,
    w: VertexSubset,
    lists: &[ColorList],
    budget: &OracleBudget,
) -> Result<bool, BudgetExceeded> {
    if w.len() > budget.max_colorable {
        return Err(BudgetExceeded {
            what: "brute-force colorability",
            size: w.len(),
            budget: budget.max_colorable,
        });
    }
    assert_eq!(lists.len(), inst.order());
    let adj = matrix(inst.graph());
    let order: Vec<usize> = w.iter().collect();
    let mut assigned: Vec<Option<Color>> = vec![None; inst.order()];
    Ok(backtrack(&adj, lists, &order, 0, &mut assigned))
}

fn backtrack(
    adj: &[Vec<bool>],
    lists: &[ColorList],
    order: &[usize],
    depth: usize,
    assigned: &mut [Option<Color>],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for c in lists[v].iter() {
        let clash = order[..depth]
            .iter()
            .any(|&u| adj[u][v] && assigned[u] == Some(c));
        if clash {
            continue;
        }
        assigned[v] = Some(c);
        if backtrack(adj, lists, order, depth + 1, assigned) {
            return true;
        }
    }
    assigned[v] = None;
    false
}

/// Every inclusion-maximal independent set of `G[w]`, found by testing all
/// `2^|w|` subsets.
pub fn brute_force_mis(g: &Graph, w: VertexSubset) -> Result<BTreeSet<VertexSubset>, BudgetExceeded> {
    brute_force_mis_within(g, w, &OracleBudget::default())
}

pub fn brute_force_mis_within(
    g: &Graph,
    w: VertexSubset,
    budget: &OracleBudget,
) -> Result<BTreeSet<VertexSubset>, BudgetExceeded> {
    if w.len() > budget.max_mis {
        return Err(BudgetExceeded {
            what: "brute-force MIS listing",
            size: w.len(),
            budget: budget.max_mis,
        });
    }
    let adj = matrix(g);
    let members: Vec<usize> = w.iter().collect();
    let k = members.len();
    let independent = |s: &[usize]| {
        s.iter()
            .enumerate()
            .all(|(i, &a)| s[i + 1..].iter().all(|&b| !adj[a][b]))
    };
    let mut out = BTreeSet::new();
    for pick in 0u32..(1 << k) {
        let chosen: Vec<usize> = (0..k).filter(|i| pick & (1 << i) != 0).map(|i| members[i]).collect();
        if !independent(&chosen) {
            continue;
        }
        let maximal = (0..k)
            .filter(|i| pick & (1 << i) == 0)
            .all(|i| chosen.iter().any(|&u| adj[u][members[i]]));
        if maximal {
            out.insert(chosen.into_iter().collect());
        }
    }
    Ok(out)
}
