//! Randomized searches over `LCF(r, s)` graphs of a given girth for graphs
//! the local-search colouring cannot `k`-colour.
//!
//! Outer iterations are independent: iteration `m` draws from stream `m`
//! of a generator seeded with the search seed, so the first successful
//! iteration does not depend on how many run in parallel.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use super::build::best_orbit_indices;
use super::{get_orbits, update_orbits, EdgeOrbit, LcfGraph, LcfScheme};
use crate::coloring::{random_colourable, LocalSearchParams};
use crate::graph::{contains_odd_cycle, Graph};

#[derive(Debug, Clone, PartialEq)]
pub struct SearchParams {
    pub g: usize,
    pub r: usize,
    pub s: usize,
    /// Colour count the screen tries; candidates defeat it.
    pub k: usize,
    pub seed: u64,
    pub local_search: LocalSearchParams,
}

impl SearchParams {
    pub fn new(g: usize, r: usize, s: usize) -> Self {
        SearchParams { g, r, s, k: 3, seed: 0, local_search: LocalSearchParams::default() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvenGirthHeuristics {
    /// Probability of picking a uniformly random safe orbit instead of a
    /// best one.
    pub random_pick_fraction: f64,
    /// Edge count at which a still-bipartite graph is abandoned. `None`
    /// takes half the mean final edge count of the calibration iterations.
    pub odd_cycle_edge_threshold: Option<usize>,
    /// Leading iterations run without the odd-cycle check to calibrate it.
    pub calibration_iterations: u64,
}

impl Default for EvenGirthHeuristics {
    fn default() -> Self {
        EvenGirthHeuristics { random_pick_fraction: 0.25, odd_cycle_edge_threshold: None, calibration_iterations: 4 }
    }
}

/// Limits on outer iterations; with neither set the search runs until it
/// finds a candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchBudget {
    pub max_iterations: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl SearchBudget {
    pub fn iterations(n: u64) -> Self {
        SearchBudget { max_iterations: Some(n), time_limit: None }
    }

    pub fn time(limit: Duration) -> Self {
        SearchBudget { max_iterations: None, time_limit: Some(limit) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScreenOutcome {
    /// The local search found a `k`-colouring.
    Coloured,
    /// The local search failed; the graph is a candidate.
    NotColoured,
    /// Still bipartite at the odd-cycle threshold; abandoned.
    NoOddCycle,
}

/// One outer iteration's result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScreenRecord {
    pub iteration: u64,
    pub orbits: usize,
    pub edges: usize,
    pub outcome: ScreenOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub iteration: u64,
    pub scheme: LcfScheme,
    pub graph: Graph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub candidate: Option<Candidate>,
    /// Iterations up to and including the candidate's, or all that ran.
    pub iterations: u64,
    /// One record per iteration, in order.
    pub log: Vec<ScreenRecord>,
    pub odd_cycle_edge_threshold: Option<usize>,
}

fn iteration_rng(seed: u64, m: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(m);
    rng
}

fn screen(params: &SearchParams, w: LcfGraph, m: u64, rng: &mut ChaCha8Rng) -> (ScreenRecord, Option<Candidate>) {
    let colour_seed = rng.gen();
    let coloured = random_colourable(w.graph(), params.k, &params.local_search, colour_seed).is_some();
    let record = ScreenRecord {
        iteration: m,
        orbits: w.placed().len(),
        edges: w.graph().size(),
        outcome: if coloured { ScreenOutcome::Coloured } else { ScreenOutcome::NotColoured },
    };
    let candidate = (!coloured).then(|| Candidate { iteration: m, scheme: w.to_scheme(), graph: w.into_graph() });
    (record, candidate)
}

struct Driver<'a> {
    budget: &'a SearchBudget,
    started: Instant,
    next: u64,
    log: Vec<ScreenRecord>,
}

impl Driver<'_> {
    fn out_of_budget(&self) -> bool {
        self.budget.max_iterations.is_some_and(|n| self.next >= n)
            || self.budget.time_limit.is_some_and(|t| self.started.elapsed() >= t)
    }

    /// Runs iterations in parallel batches until one yields a candidate,
    /// `stop_at` is reached, or the budget runs out.
    fn run<F>(&mut self, stop_at: Option<u64>, iteration: F) -> Option<Candidate>
    where
        F: Fn(u64) -> (ScreenRecord, Option<Candidate>) + Sync,
    {
        let batch = rayon::current_num_threads().max(1) as u64;
        while !self.out_of_budget() && stop_at.is_none_or(|s| self.next < s) {
            let mut end = self.next + batch;
            if let Some(n) = self.budget.max_iterations {
                end = end.min(n);
            }
            if let Some(s) = stop_at {
                end = end.min(s);
            }
            let results: Vec<(ScreenRecord, Option<Candidate>)> =
                (self.next..end).into_par_iter().map(&iteration).collect();
            self.next = end;
            for (record, candidate) in results {
                let m = record.iteration;
                self.log.push(record);
                if candidate.is_some() {
                    self.next = m + 1;
                    return candidate;
                }
            }
        }
        None
    }
}

/// Shuffle all orbits, add each that keeps the girth, screen the result;
/// repeat until the screen fails.
pub fn basic_search(params: &SearchParams, budget: &SearchBudget) -> SearchOutcome {
    let orbits = get_orbits(params.r, params.s);
    let mut driver = Driver { budget, started: Instant::now(), next: 0, log: Vec::new() };
    let candidate = driver.run(None, |m| {
        let mut rng = iteration_rng(params.seed, m);
        let mut order: Vec<&EdgeOrbit> = orbits.iter().collect();
        order.shuffle(&mut rng);
        let mut w = LcfGraph::new(params.r, params.s);
        for o in order {
            w.add_orbit_if_girth_safe(o, params.g);
        }
        screen(params, w, m, &mut rng)
    });
    SearchOutcome { candidate, iterations: driver.next, log: driver.log, odd_cycle_edge_threshold: None }
}

/// Grows each graph by orbits that close the most `(g + 1)`-cycles (or,
/// with probability `random_pick_fraction`, a random safe orbit) until no
/// safe orbit remains, abandoning graphs still bipartite at the odd-cycle
/// threshold.
pub fn even_girth_search(
    params: &SearchParams,
    heuristics: &EvenGirthHeuristics,
    budget: &SearchBudget,
) -> SearchOutcome {
    assert!((0.0..=1.0).contains(&heuristics.random_pick_fraction), "random pick fraction must lie in [0, 1]");
    let empty = LcfGraph::new(params.r, params.s);
    let initial: Vec<EdgeOrbit> =
        get_orbits(params.r, params.s).into_iter().filter(|o| empty.is_girth_safe(o, params.g)).collect();
    let iteration = |m: u64, threshold: Option<usize>| {
        let mut rng = iteration_rng(params.seed, m);
        let mut pool = initial.clone();
        let mut w = LcfGraph::new(params.r, params.s);
        let mut checked = false;
        while !pool.is_empty() {
            let idx = if rng.gen_bool(heuristics.random_pick_fraction) {
                rng.gen_range(0..pool.len())
            } else {
                let (best, _) = best_orbit_indices(&pool, &w, params.g);
                best[rng.gen_range(0..best.len())]
            };
            let orbit = pool[idx].clone();
            w.add_orbit(&orbit);
            pool = update_orbits(&pool, &orbit, &w, params.g);
            if let Some(t) = threshold {
                if !checked && w.graph().size() >= t {
                    checked = true;
                    if !contains_odd_cycle(w.graph()) {
                        let record = ScreenRecord {
                            iteration: m,
                            orbits: w.placed().len(),
                            edges: w.graph().size(),
                            outcome: ScreenOutcome::NoOddCycle,
                        };
                        return (record, None);
                    }
                }
            }
        }
        screen(params, w, m, &mut rng)
    };
    let mut driver = Driver { budget, started: Instant::now(), next: 0, log: Vec::new() };
    let mut threshold = heuristics.odd_cycle_edge_threshold;
    if threshold.is_none() {
        let calibration = heuristics.calibration_iterations.max(1);
        if let Some(c) = driver.run(Some(calibration), |m| iteration(m, None)) {
            return SearchOutcome {
                candidate: Some(c),
                iterations: driver.next,
                log: driver.log,
                odd_cycle_edge_threshold: None,
            };
        }
        if driver.log.is_empty() {
            return SearchOutcome { candidate: None, iterations: 0, log: Vec::new(), odd_cycle_edge_threshold: None };
        }
        let total: usize = driver.log.iter().map(|r| r.edges).sum();
        threshold = Some(total / driver.log.len() / 2);
    }
    let candidate = driver.run(None, |m| iteration(m, threshold));
    SearchOutcome { candidate, iterations: driver.next, log: driver.log, odd_cycle_edge_threshold: threshold }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExhaustiveError {
    #[error("{orbits} orbits exceed the exhaustive limit of {limit}")]
    TooManyOrbits { orbits: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExhaustiveOutcome {
    /// The first maximal graph, in orbit order, that the screen fails on.
    pub candidate: Option<Candidate>,
    /// Maximal girth-safe orbit sets screened.
    pub maximal_sets: u64,
}

/// Screens every maximal girth-safe set of orbits, in include-first
/// depth-first order, with a fixed colouring seed.
pub fn exhaustive_search(params: &SearchParams, max_orbits: usize) -> Result<ExhaustiveOutcome, ExhaustiveError> {
    let orbits = get_orbits(params.r, params.s);
    if orbits.len() > max_orbits {
        return Err(ExhaustiveError::TooManyOrbits { orbits: orbits.len(), limit: max_orbits });
    }
    let mut count = 0;
    let mut w = LcfGraph::new(params.r, params.s);
    let candidate = descend(params, &orbits, 0, &mut w, &mut count);
    Ok(ExhaustiveOutcome { candidate, maximal_sets: count })
}

fn descend(
    params: &SearchParams,
    orbits: &[EdgeOrbit],
    i: usize,
    w: &mut LcfGraph,
    count: &mut u64,
) -> Option<Candidate> {
    if i == orbits.len() {
        let maximal = orbits.iter().all(|o| w.placed().contains(o) || !w.is_girth_safe(o, params.g));
        if !maximal {
            return None;
        }
        let m = *count;
        *count += 1;
        if random_colourable(w.graph(), params.k, &params.local_search, params.seed).is_none() {
            return Some(Candidate { iteration: m, scheme: w.to_scheme(), graph: w.graph().clone() });
        }
        return None;
    }
    let before = w.clone();
    if w.add_orbit_if_girth_safe(&orbits[i], params.g) {
        if let Some(c) = descend(params, orbits, i + 1, w, count) {
            return Some(c);
        }
        *w = before;
    }
    descend(params, orbits, i + 1, w, count)
}
