use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;

use super::droogendijk::{build, droogendijk_condition_holds, droogendijk_parts, DroogendijkError};
use crate::coloring::{decide_k_colorable, random_colourable, ColorBudget, Coloring, Decision, LocalSearchParams};
use crate::graph::{edge_closes_short_cycle, Graph};

/// Independent sets in order of size, then lexicographically.
#[derive(Debug, Clone)]
pub struct IndependentSets<'g> {
    g: &'g Graph,
    max_size: usize,
    size: usize,
    cur: Vec<usize>,
    fresh: bool,
}

impl<'g> IndependentSets<'g> {
    pub fn new(g: &'g Graph, max_size: usize) -> Self {
        IndependentSets { g, max_size, size: 1, cur: Vec::new(), fresh: true }
    }

    /// Extends `cur` to the lexicographically next set of `size` vertices
    /// whose next element is at least `from`.
    fn fill(&mut self, mut from: usize) -> bool {
        let n = self.g.order();
        loop {
            if self.cur.len() == self.size {
                return true;
            }
            let need = self.size - self.cur.len();
            let next = (from..n).find(|&v| self.cur.iter().all(|&u| !self.g.has_edge(u, v)));
            match next {
                Some(v) if n - v >= need => {
                    self.cur.push(v);
                    from = v + 1;
                }
                _ => match self.cur.pop() {
                    Some(x) => from = x + 1,
                    None => return false,
                },
            }
        }
    }
}

impl Iterator for IndependentSets<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        while self.size <= self.max_size {
            let found = if self.fresh {
                self.fresh = false;
                self.fill(0)
            } else {
                let last = self.cur.pop().expect("a set was produced before");
                self.fill(last + 1)
            };
            if found {
                return Some(self.cur.clone());
            }
            self.size += 1;
            self.cur.clear();
            self.fresh = true;
        }
        None
    }
}

#[derive(Debug, Clone)]
pub struct QualifyingSearchOptions {
    /// The chromatic number of the input graph.
    pub k: usize,
    pub max_set_size: usize,
    /// Skip sets whose neighbourhood covers everything outside `S`.
    pub skip_empty_b: bool,
    /// Settle the surviving candidates exactly rather than stopping at the
    /// heuristic screen.
    pub verify_exact: bool,
    /// Budget for each exact decision.
    pub budget: ColorBudget,
    pub local_search: LocalSearchParams,
    pub seed: u64,
}

impl QualifyingSearchOptions {
    pub fn new(k: usize, max_set_size: usize) -> Self {
        QualifyingSearchOptions {
            k,
            max_set_size,
            skip_empty_b: false,
            verify_exact: true,
            budget: ColorBudget::unlimited(),
            local_search: LocalSearchParams::default(),
            seed: 0,
        }
    }
}

/// What is known about `χ(G*)` for a set that passed the condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CandidateVerdict {
    /// A `k`-colouring of `G*` was found, so `G*` gains nothing.
    KColorable(Coloring),
    /// `G*` is not `k`-colourable; since `χ(G*) ≤ k + 1` it is exactly `k + 1`.
    Confirmed,
    /// The heuristic failed and exact verification was not requested.
    Unverified,
    /// The exact decision ran out of budget.
    Indeterminate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QualifyingCandidate {
    pub set: Vec<usize>,
    pub graph: Graph,
    pub verdict: CandidateVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchItem {
    Candidate(QualifyingCandidate),
    /// The condition check for `set` ran out of budget; the stream ends here.
    BudgetExhausted {
        set: Vec<usize>,
    },
}

/// Stream of independent sets `S` satisfying the Droogendijk condition,
/// each with its construction and a verdict on `χ(G*)`.
///
/// Sets are examined in batches in parallel; items come out in enumeration
/// order, and the heuristic seed for each set depends only on its position.
pub struct QualifyingSets<'g> {
    g: &'g Graph,
    opts: QualifyingSearchOptions,
    sets: IndependentSets<'g>,
    pending: VecDeque<SearchItem>,
    position: u64,
    done: bool,
}

const BATCH: usize = 32;

pub fn search_qualifying_sets(g: &Graph, opts: QualifyingSearchOptions) -> QualifyingSets<'_> {
    QualifyingSets {
        g,
        sets: IndependentSets::new(g, opts.max_set_size),
        opts,
        pending: VecDeque::new(),
        position: 0,
        done: false,
    }
}

enum Examined {
    Rejected,
    Passed(QualifyingCandidate),
    Exhausted(Vec<usize>),
}

impl QualifyingSets<'_> {
    fn examine(&self, set: Vec<usize>, position: u64) -> Examined {
        let parts = droogendijk_parts(self.g, &set).expect("enumerated sets are independent");
        if self.opts.skip_empty_b && parts.b.is_empty() {
            return Examined::Rejected;
        }
        match droogendijk_condition_holds(self.g, &set, self.opts.k, &self.opts.budget) {
            Ok(true) => {}
            Ok(false) => return Examined::Rejected,
            Err(DroogendijkError::BudgetExhausted) => return Examined::Exhausted(set),
            Err(e) => unreachable!("enumerated set rejected: {e}"),
        }
        let graph = build(self.g, &parts);
        let k = self.opts.k;
        let seed = self.opts.seed ^ position.wrapping_mul(0x9e37_79b9_7f4a_7c15);
        let verdict = match random_colourable(&graph, k, &self.opts.local_search, seed) {
            Some(c) => CandidateVerdict::KColorable(c),
            None if !self.opts.verify_exact => CandidateVerdict::Unverified,
            None => match decide_k_colorable(&graph, k, None, &self.opts.budget) {
                Decision::Colorable(c) => CandidateVerdict::KColorable(c),
                Decision::NotColorable => CandidateVerdict::Confirmed,
                Decision::BudgetExhausted => CandidateVerdict::Indeterminate,
            },
        };
        Examined::Passed(QualifyingCandidate { set, graph, verdict })
    }
}

impl Iterator for QualifyingSets<'_> {
    type Item = SearchItem;

    fn next(&mut self) -> Option<SearchItem> {
        while self.pending.is_empty() && !self.done {
            let batch: Vec<(Vec<usize>, u64)> =
                self.sets.by_ref().take(BATCH).enumerate().map(|(i, s)| (s, self.position + i as u64)).collect();
            if batch.len() < BATCH {
                self.done = true;
            }
            self.position += batch.len() as u64;
            let this = &*self;
            let results: Vec<Examined> = batch.into_par_iter().map(|(s, pos)| this.examine(s, pos)).collect();
            for r in results {
                match r {
                    Examined::Rejected => {}
                    Examined::Passed(c) => self.pending.push_back(SearchItem::Candidate(c)),
                    Examined::Exhausted(set) => {
                        self.pending.push_back(SearchItem::BudgetExhausted { set });
                        self.done = true;
                        break;
                    }
                }
            }
        }
        self.pending.pop_front()
    }
}

/// Graphs reached by single-edge additions and removals that keep the girth
/// at least `g_min` and the chromatic number at `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Perturbations {
    /// The start graph first, then each level in generation order.
    pub graphs: Vec<Graph>,
    /// Some candidate could not be settled within budget and was dropped.
    pub exhausted: bool,
}

/// Breadth-first exploration up to `depth` edge moves from `g`.
///
/// Assumes `χ(g) = k` and girth at least `g_min`. Each move is screened
/// with the local search and confirmed exactly before a graph is kept.
/// Graphs are deduplicated by their labelled edge sets.
pub fn explore_edge_perturbations(
    g: &Graph,
    k: usize,
    g_min: usize,
    depth: usize,
    budget: &ColorBudget,
    seed: u64,
) -> Perturbations {
    let mut seen: HashSet<Graph> = HashSet::from([g.clone()]);
    let mut graphs = vec![g.clone()];
    let mut frontier = vec![g.clone()];
    let mut exhausted = false;
    let params = LocalSearchParams::default();
    for _ in 0..depth {
        let mut moves: Vec<(Graph, bool)> = Vec::new();
        for h in &frontier {
            let n = h.order();
            for u in 0..n {
                for v in u + 1..n {
                    let mut next = h.clone();
                    let added = if h.has_edge(u, v) {
                        next.remove_edge(u, v);
                        false
                    } else if edge_closes_short_cycle(h, u, v, g_min) {
                        continue;
                    } else {
                        next.add_edge(u, v);
                        true
                    };
                    if seen.insert(next.clone()) {
                        moves.push((next, added));
                    }
                }
            }
        }
        let checked: Vec<Option<bool>> = moves
            .par_iter()
            .enumerate()
            .map(|(i, (h, added))| {
                let seed = seed ^ (i as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
                // adding an edge cannot lower χ, removing one cannot raise it
                if *added {
                    colorable_with(h, k, &params, seed, budget)
                } else {
                    colorable_with(h, k - 1, &params, seed, budget).map(|c| !c)
                }
            })
            .collect();
        frontier.clear();
        for ((h, _), keep) in moves.into_iter().zip(checked) {
            match keep {
                Some(true) => {
                    graphs.push(h.clone());
                    frontier.push(h);
                }
                Some(false) => {}
                None => exhausted = true,
            }
        }
    }
    Perturbations { graphs, exhausted }
}

fn colorable_with(h: &Graph, k: usize, params: &LocalSearchParams, seed: u64, budget: &ColorBudget) -> Option<bool> {
    if random_colourable(h, k, params, seed).is_some() {
        return Some(true);
    }
    match decide_k_colorable(h, k, None, budget) {
        Decision::Colorable(_) => Some(true),
        Decision::NotColorable => Some(false),
        Decision::BudgetExhausted => None,
    }
}
