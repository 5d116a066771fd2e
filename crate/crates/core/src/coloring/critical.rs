use rayon::prelude::*;

use super::{decide_k_colorable, random_colourable, BudgetExhausted, ColorBudget, Decision, LocalSearchParams};
use crate::graph::Graph;

/// Per-vertex verdict of a criticality check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Criticality {
    Critical,
    /// `G - vertex` is not `(k-1)`-colourable.
    NotCritical {
        vertex: usize,
    },
    /// These deletions ran out of budget and nothing refuted criticality.
    Indeterminate {
        vertices: Vec<usize>,
    },
}

/// Checks that `G - v` is `(k-1)`-colourable for every vertex `v`.
///
/// Assumes `χ(G) = k` has been established. Each deletion is tried with the
/// local search first and settled exactly only if that fails; deletions run
/// in parallel and share the budget's deadline.
pub fn vertex_criticality(g: &Graph, k: usize, budget: &ColorBudget) -> Criticality {
    if k == 0 {
        return Criticality::Critical;
    }
    let limits = budget.start();
    let verdicts: Vec<(usize, Decision)> = (0..g.order())
        .into_par_iter()
        .map(|v| {
            let h = g.delete_vertex(v);
            if let Some(c) = random_colourable(&h, k - 1, &LocalSearchParams::default(), v as u64) {
                return (v, Decision::Colorable(c));
            }
            (v, decide_k_colorable(&h, k - 1, None, &limits.remaining()))
        })
        .collect();
    let mut open = Vec::new();
    for (v, d) in verdicts {
        match d {
            Decision::Colorable(_) => {}
            Decision::NotColorable => return Criticality::NotCritical { vertex: v },
            Decision::BudgetExhausted => open.push(v),
        }
    }
    if open.is_empty() {
        Criticality::Critical
    } else {
        Criticality::Indeterminate { vertices: open }
    }
}

pub fn is_vertex_critical(g: &Graph, k: usize, budget: &ColorBudget) -> Result<bool, BudgetExhausted> {
    match vertex_criticality(g, k, budget) {
        Criticality::Critical => Ok(true),
        Criticality::NotCritical { .. } => Ok(false),
        Criticality::Indeterminate { .. } => Err(BudgetExhausted),
    }
}
