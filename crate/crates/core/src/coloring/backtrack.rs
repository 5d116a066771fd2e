//! Plain backtracking in vertex order, no propagation and no colour
//! symmetry breaking. Kept deliberately simple so it can cross-check the
//! main kernel on small instances.

use super::{full_mask, ColorBudget, Coloring, Decision, PaletteConstraint, MAX_COLORS};
use crate::graph::Graph;

pub fn decide_k_colorable_plain(
    g: &Graph,
    k: usize,
    constraint: Option<&PaletteConstraint>,
    budget: &ColorBudget,
) -> Decision {
    let n = g.order();
    if n == 0 {
        return Decision::Colorable(Coloring::new(Vec::new(), k));
    }
    let k_eff = k.min(MAX_COLORS);
    if k_eff == 0 {
        return Decision::NotColorable;
    }
    let allowed: Vec<u64> =
        (0..n).map(|v| constraint.map_or(full_mask(k_eff), |p| p.mask(v) & full_mask(k_eff))).collect();
    let nbrs_before: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).filter(|&w| w < v).collect()).collect();
    let limits = budget.start();
    let mut color = vec![0usize; n];
    let mut nodes = 0u64;

    // explicit stack of "next colour to try" per depth
    let mut next = vec![0usize; n + 1];
    let mut depth = 0usize;
    loop {
        if depth == n {
            return Decision::Colorable(Coloring::new(color, k));
        }
        nodes += 1;
        if limits.node_limit.is_some_and(|l| nodes > l) || (nodes.is_multiple_of(4096) && limits.expired()) {
            return Decision::BudgetExhausted;
        }
        let v = depth;
        let mut placed = false;
        while next[v] < k_eff {
            let c = next[v];
            next[v] += 1;
            if allowed[v] >> c & 1 == 1 && nbrs_before[v].iter().all(|&w| color[w] != c) {
                color[v] = c;
                placed = true;
                break;
            }
        }
        if placed {
            depth += 1;
            next[depth.min(n)] = 0;
        } else {
            next[v] = 0;
            if depth == 0 {
                return Decision::NotColorable;
            }
            depth -= 1;
        }
    }
}
