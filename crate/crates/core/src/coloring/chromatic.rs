use std::fmt;

use super::exact::greedy_coloring;
use super::{decide_k_colorable, random_colourable, ColorBudget, Decision, LocalSearchParams};
use crate::graph::{contains_odd_cycle, Graph};

/// Exact chromatic number, or the best interval proven within budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChromaticNumber {
    Exact(usize),
    Bounds { lower: usize, upper: usize },
}

impl ChromaticNumber {
    pub fn exact(self) -> Option<usize> {
        match self {
            ChromaticNumber::Exact(k) => Some(k),
            ChromaticNumber::Bounds { .. } => None,
        }
    }
}

impl fmt::Display for ChromaticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChromaticNumber::Exact(k) => write!(f, "{k}"),
            ChromaticNumber::Bounds { lower, upper } => write!(f, "[{lower}, {upper}]"),
        }
    }
}

/// Greedy maximal clique grown from each vertex in turn; returns the largest.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut best = Vec::new();
    for start in 0..n {
        let mut clique = vec![start];
        let mut cand: Vec<usize> = g.neighbors(start).collect();
        while !cand.is_empty() {
            // pick the candidate with most neighbours among the remaining candidates
            let (i, _) = cand
                .iter()
                .enumerate()
                .map(|(i, &v)| (i, cand.iter().filter(|&&w| g.has_edge(v, w)).count()))
                .max_by_key(|&(i, c)| (c, std::cmp::Reverse(i)))
                .unwrap();
            let v = cand.swap_remove(i);
            clique.push(v);
            cand.retain(|&w| g.has_edge(v, w));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

/// Chromatic number by exact decisions between a clique/odd-cycle lower
/// bound and a heuristic upper bound. The budget is shared by all probes.
pub fn chromatic_number(g: &Graph, budget: &ColorBudget) -> ChromaticNumber {
    let n = g.order();
    if n == 0 {
        return ChromaticNumber::Exact(0);
    }
    if g.size() == 0 {
        return ChromaticNumber::Exact(1);
    }
    let mut lower = greedy_clique(g).len().max(2);
    if contains_odd_cycle(g) {
        lower = lower.max(3);
    }
    let mut upper = greedy_coloring(g).colors_used();
    while upper > lower {
        match random_colourable(g, upper - 1, &LocalSearchParams::default(), 0x5eed ^ upper as u64) {
            Some(_) => upper -= 1,
            None => break,
        }
    }
    let limits = budget.start();
    while lower < upper {
        let remaining = limits.remaining();
        if limits.expired() {
            break;
        }
        match decide_k_colorable(g, lower, None, &remaining) {
            Decision::Colorable(_) => return ChromaticNumber::Exact(lower),
            Decision::NotColorable => lower += 1,
            Decision::BudgetExhausted => break,
        }
    }
    if lower == upper {
        ChromaticNumber::Exact(lower)
    } else {
        ChromaticNumber::Bounds { lower, upper }
    }
}
