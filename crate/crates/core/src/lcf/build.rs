//! Orbit-by-orbit construction of shift-invariant graphs with a girth floor.
//!
//! Every check here leans on the shift symmetry: a graph built from whole
//! orbits looks the same around each edge of an orbit, so one
//! representative edge speaks for all of them.

use rayon::prelude::*;

use super::{EdgeOrbit, LcfScheme};
use crate::graph::{edge_closes_short_cycle, Graph};

/// A graph under construction, always a union of whole orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcfGraph {
    r: usize,
    s: usize,
    graph: Graph,
    placed: Vec<EdgeOrbit>,
}

impl LcfGraph {
    pub fn new(r: usize, s: usize) -> Self {
        LcfGraph { r, s, graph: Graph::new(r * s), placed: Vec::new() }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Orbits in the order they were added.
    pub fn placed(&self) -> &[EdgeOrbit] {
        &self.placed
    }

    pub fn to_scheme(&self) -> LcfScheme {
        LcfScheme::from_orbits(self.r, self.s, &self.placed)
    }

    fn check_shape(&self, orbit: &EdgeOrbit) {
        assert_eq!((orbit.r, orbit.s), (self.r, self.s), "orbit belongs to a different LCF shape");
    }

    /// Adds `orbit` without any girth check.
    pub fn add_orbit(&mut self, orbit: &EdgeOrbit) {
        self.check_shape(orbit);
        for &(u, v) in orbit.edges() {
            self.graph.add_edge(u, v);
        }
        self.placed.push(orbit.clone());
    }

    /// Adds `orbit` if the result still has no cycle shorter than `g`;
    /// otherwise leaves the graph untouched. Returns whether it was added.
    ///
    /// Assumes the current graph has no cycle shorter than `g`. A new short
    /// cycle would run through some new edge, and the shift carries it onto
    /// one through the representative, so only that edge is tested.
    pub fn add_orbit_if_girth_safe(&mut self, orbit: &EdgeOrbit, g: usize) -> bool {
        self.check_shape(orbit);
        let (a, b) = orbit.representative();
        if self.graph.has_edge(a, b) {
            return false;
        }
        for &(u, v) in orbit.edges() {
            self.graph.add_edge(u, v);
        }
        if edge_closes_short_cycle(&self.graph, a, b, g) {
            for &(u, v) in orbit.edges() {
                self.graph.remove_edge(u, v);
            }
            return false;
        }
        self.placed.push(orbit.clone());
        true
    }

    /// Whether `orbit` could be added without a cycle shorter than `g`.
    pub fn is_girth_safe(&self, orbit: &EdgeOrbit, g: usize) -> bool {
        self.check_shape(orbit);
        is_safe_in(&mut self.graph.clone(), orbit, g)
    }
}

/// Girth-safety of `orbit` tested on a scratch copy, which is restored.
fn is_safe_in(scratch: &mut Graph, orbit: &EdgeOrbit, g: usize) -> bool {
    let (a, b) = orbit.representative();
    if scratch.has_edge(a, b) {
        return false;
    }
    for &(u, v) in orbit.edges() {
        scratch.add_edge(u, v);
    }
    let safe = !edge_closes_short_cycle(scratch, a, b, g);
    for &(u, v) in orbit.edges() {
        scratch.remove_edge(u, v);
    }
    safe
}

fn lcm_up_to(n: usize) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    (1..=n as u64).fold(1, |acc, x| acc / gcd(acc, x) * x)
}

/// Number of cycles of length `len` in `working ∪ orbit` that use at least
/// one edge of `orbit`.
///
/// Cycles through the representative edge are enumerated once each, and a
/// cycle holding `c` orbit edges is weighted `1/c`; by the shift symmetry
/// every orbit edge sees the same weighted total, so multiplying by the
/// number of orbit edges counts each new cycle exactly once.
pub fn new_cycle_count(working: &LcfGraph, orbit: &EdgeOrbit, len: usize) -> u64 {
    working.check_shape(orbit);
    count_in(&mut working.graph.clone(), orbit, len)
}

fn count_in(scratch: &mut Graph, orbit: &EdgeOrbit, len: usize) -> u64 {
    assert!(len >= 3, "cycle length must be at least 3");
    let (a, b) = orbit.representative();
    if scratch.has_edge(a, b) {
        return 0;
    }
    for &(u, v) in orbit.edges() {
        scratch.add_edge(u, v);
    }
    let n = scratch.order();
    let (r, row, t) = (orbit.r, orbit.row, orbit.offset);
    let in_orbit = |u: usize, v: usize| {
        let fwd = |x: usize, y: usize| x % r == row && (x as i64 + t).rem_euclid(n as i64) as usize == y;
        fwd(u, v) || fwd(v, u)
    };
    let dist = bfs(scratch, a);
    let scale = lcm_up_to(len);
    let mut on_path = vec![false; n];
    on_path[a] = true;
    on_path[b] = true;
    let mut weighted = 0u64;
    let mut stack = vec![(b, 1usize, 1u64, scratch.neighbors(b).collect::<Vec<_>>(), 0usize)];
    // iterative DFS over paths b -> a of exactly len - 1 edges
    while let Some(top) = stack.last_mut() {
        let (x, depth, hits) = (top.0, top.1, top.2);
        if top.4 == top.3.len() {
            on_path[x] = x == a || x == b;
            stack.pop();
            continue;
        }
        let w = top.3[top.4];
        top.4 += 1;
        let hits = hits + u64::from(in_orbit(x, w));
        let edges_after = depth + 1;
        if w == a {
            if edges_after == len && !(x == b && depth == 1) {
                weighted += scale / hits;
            }
            continue;
        }
        if on_path[w] || edges_after >= len || dist[w] as usize > len - edges_after {
            continue;
        }
        on_path[w] = true;
        let next: Vec<usize> = scratch.neighbors(w).collect();
        stack.push((w, edges_after, hits, next, 0));
    }
    for &(u, v) in orbit.edges() {
        scratch.remove_edge(u, v);
    }
    let total = weighted * orbit.edges().len() as u64;
    debug_assert_eq!(total % scale, 0, "weighted cycle count is not integral");
    total / scale
}

fn bfs(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; g.order()];
    dist[source] = 0;
    let mut queue = std::collections::VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if dist[w] == u32::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Indices into `candidates` of the orbits creating the most new cycles of
/// length `g + 1`, with that maximum.
pub(crate) fn best_orbit_indices(candidates: &[EdgeOrbit], working: &LcfGraph, g: usize) -> (Vec<usize>, u64) {
    let counts: Vec<u64> =
        candidates.par_iter().map_init(|| working.graph.clone(), |scratch, o| count_in(scratch, o, g + 1)).collect();
    let best = counts.iter().copied().max().unwrap_or(0);
    let idx = counts.iter().enumerate().filter(|&(_, &c)| c == best).map(|(i, _)| i).collect();
    (idx, best)
}

/// The orbits of `candidates` that create the most new `(g + 1)`-cycles
/// when added to `working`, ties kept in input order.
///
/// Assumes each candidate is individually girth-safe.
pub fn best_orbits(candidates: &[EdgeOrbit], working: &LcfGraph, g: usize) -> Vec<EdgeOrbit> {
    best_orbit_indices(candidates, working, g).0.into_iter().map(|i| candidates[i].clone()).collect()
}

/// Filters `old` (minus `added`) to the orbits still girth-safe in
/// `working`, which must already contain `added`.
///
/// A new short cycle through a candidate would reach the new orbit within
/// `g - 3` steps from one of the candidate's rows. Rows the new orbit cannot
/// reach that quickly keep their orbits without a retest.
pub fn update_orbits(old: &[EdgeOrbit], added: &EdgeOrbit, working: &LcfGraph, g: usize) -> Vec<EdgeOrbit> {
    let reached = rows_near(working, added, g.saturating_sub(3));
    let keep: Vec<bool> = old
        .par_iter()
        .map_init(
            || working.graph.clone(),
            |scratch, o| {
                if o == added {
                    return false;
                }
                let (i, j) = o.rows();
                if !reached[i] && !reached[j] {
                    return true;
                }
                is_safe_in(scratch, o, g)
            },
        )
        .collect();
    old.iter().zip(keep).filter(|(_, k)| *k).map(|(o, _)| o.clone()).collect()
}

/// Rows holding a vertex within `depth` of the rows joined by `orbit`.
fn rows_near(working: &LcfGraph, orbit: &EdgeOrbit, depth: usize) -> Vec<bool> {
    let g = &working.graph;
    let r = working.r;
    let (i, j) = orbit.rows();
    let mut dist = vec![usize::MAX; g.order()];
    let mut frontier: Vec<usize> = (0..g.order()).filter(|x| x % r == i || x % r == j).collect();
    for &x in &frontier {
        dist[x] = 0;
    }
    for d in 1..=depth {
        let mut next = Vec::new();
        for &x in &frontier {
            for w in g.neighbors(x) {
                if dist[w] == usize::MAX {
                    dist[w] = d;
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    let mut reached = vec![false; r];
    for (x, &d) in dist.iter().enumerate() {
        if d != usize::MAX {
            reached[x % r] = true;
        }
    }
    reached
}
