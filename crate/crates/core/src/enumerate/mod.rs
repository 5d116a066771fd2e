//! Exhaustive isomorph-free generation of small graphs with girth and
//! degree constraints, by canonical vertex augmentation.
//!
//! Every graph of order `m + 1` is produced from exactly one parent of
//! order `m`: the graph obtained by deleting its canonically chosen last
//! vertex. Girth and maximum degree are hereditary, so the parents of valid
//! graphs are valid and the search tree covers every class.

mod canon;

pub use canon::{canonical_form, CanonicalForm};

use std::collections::HashSet;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use thiserror::Error;

use crate::coloring::{decide_k_colorable, random_colourable, ColorBudget, Decision, LocalSearchParams};
use crate::graph::Graph;

/// Largest order generated unless the caller raises the cap.
pub const DEFAULT_ORDER_CAP: usize = 11;

/// Frontier size at which the tree is split into parallel subtrees.
const SPLIT_FRONTIER: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenerationConstraints {
    pub min_order: usize,
    pub max_order: usize,
    pub girth_min: usize,
    pub min_degree: usize,
    pub max_degree: Option<usize>,
    pub order_cap: usize,
}

impl GenerationConstraints {
    /// All graphs on `1..=max_order` vertices.
    pub fn new(max_order: usize) -> Self {
        GenerationConstraints {
            min_order: 1,
            max_order,
            girth_min: 3,
            min_degree: 0,
            max_degree: None,
            order_cap: DEFAULT_ORDER_CAP,
        }
    }

    pub fn with_girth(mut self, girth_min: usize) -> Self {
        self.girth_min = girth_min;
        self
    }

    pub fn with_degrees(mut self, min_degree: usize, max_degree: Option<usize>) -> Self {
        self.min_degree = min_degree;
        self.max_degree = max_degree;
        self
    }

    pub fn with_min_order(mut self, min_order: usize) -> Self {
        self.min_order = min_order;
        self
    }

    pub fn with_order_cap(mut self, cap: usize) -> Self {
        self.order_cap = cap;
        self
    }

    fn validate(&self) -> Result<(), EnumerateError> {
        if self.max_order > self.order_cap {
            return Err(EnumerateError::OrderCapExceeded { max_order: self.max_order, cap: self.order_cap });
        }
        if self.max_order > 64 {
            return Err(EnumerateError::OrderCapExceeded { max_order: self.max_order, cap: 64 });
        }
        if self.max_order == 0 || self.min_order > self.max_order {
            return Err(EnumerateError::EmptyOrderRange { min: self.min_order, max: self.max_order });
        }
        if self.girth_min < 3 {
            return Err(EnumerateError::GirthTooSmall(self.girth_min));
        }
        if let Some(max) = self.max_degree {
            if self.min_degree > max {
                return Err(EnumerateError::DegreeRange { min: self.min_degree, max });
            }
        }
        Ok(())
    }

    fn max_degree(&self) -> usize {
        self.max_degree.unwrap_or(usize::MAX)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("order {max_order} exceeds the generation cap {cap}")]
    OrderCapExceeded { max_order: usize, cap: usize },
    #[error("order range {min}..={max} is empty")]
    EmptyOrderRange { min: usize, max: usize },
    #[error("girth bound {0} is below 3")]
    GirthTooSmall(usize),
    #[error("minimum degree {min} exceeds maximum degree {max}")]
    DegreeRange { min: usize, max: usize },
}

/// Number of generated classes for each order; index 0 is unused.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GenerationCounts {
    per_order: Vec<u64>,
}

impl GenerationCounts {
    fn with_max(max_order: usize) -> Self {
        GenerationCounts { per_order: vec![0; max_order + 1] }
    }

    pub fn at(&self, order: usize) -> u64 {
        self.per_order.get(order).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.per_order.iter().sum()
    }

    /// `(order, count)` for every order with at least one class.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.per_order.iter().copied().enumerate().filter(|&(_, c)| c > 0)
    }

    fn merge(&mut self, other: &GenerationCounts) {
        for (a, b) in self.per_order.iter_mut().zip(&other.per_order) {
            *a += b;
        }
    }
}

/// Calls `visit` once per isomorphism class satisfying the constraints and
/// returns the per-order counts. Visits happen from several threads and in
/// no particular order.
pub fn generate<F>(constraints: &GenerationConstraints, visit: F) -> Result<GenerationCounts, EnumerateError>
where
    F: Fn(&Graph) + Sync,
{
    let (counts, _) = run::<()>(constraints, &|g| {
        visit(g);
        None
    })?;
    Ok(counts)
}

/// Canonical representatives of every class, sorted by order and then by
/// certificate.
pub fn generate_all(constraints: &GenerationConstraints) -> Result<Vec<Graph>, EnumerateError> {
    let found = std::sync::Mutex::new(Vec::new());
    generate(constraints, |g| {
        let form = canonical_form(g);
        found.lock().expect("collector lock").push((g.order(), form.certificate.clone(), form.graph()));
    })?;
    let mut found = found.into_inner().expect("collector lock");
    found.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(found.into_iter().map(|(_, _, g)| g).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certification {
    /// Every generated graph is `k`-colourable.
    AllColorable { counts: GenerationCounts },
    /// A generated graph with no `k`-colouring.
    Counterexample(Graph),
    /// The exact solver ran out of budget on this graph.
    Indeterminate(Graph),
}

/// Checks that every graph allowed by `constraints` is `k`-colourable.
///
/// Each graph is tried with the local search first and handed to the exact
/// solver only when that fails. The reported counterexample is the first one
/// in a fixed traversal order, independent of the thread count.
pub fn certify_all_colorable(
    constraints: &GenerationConstraints,
    k: usize,
    budget: &ColorBudget,
) -> Result<Certification, EnumerateError> {
    let params = LocalSearchParams::default();
    let (counts, found) = run(constraints, &|g| {
        if random_colourable(g, k, &params, 0).is_some() {
            return None;
        }
        match decide_k_colorable(g, k, None, budget) {
            Decision::Colorable(_) => None,
            Decision::NotColorable => Some(Certification::Counterexample(g.clone())),
            Decision::BudgetExhausted => Some(Certification::Indeterminate(g.clone())),
        }
    })?;
    Ok(found.unwrap_or(Certification::AllColorable { counts }))
}

struct Node {
    graph: Graph,
    certificate: Vec<u64>,
}

/// Walks the generation tree, stopping at the first graph for which `check`
/// returns a value. "First" follows a fixed order: the sequential prefix of
/// the tree, then the parallel subtrees by index.
fn run<R: Send>(
    c: &GenerationConstraints,
    check: &(dyn Fn(&Graph) -> Option<R> + Sync),
) -> Result<(GenerationCounts, Option<R>), EnumerateError> {
    c.validate()?;
    let mut counts = GenerationCounts::with_max(c.max_order);
    if c.max_order - 1 < c.min_degree {
        return Ok((counts, None));
    }
    let root = Node { graph: Graph::new(1), certificate: vec![0] };
    if let Some(r) = emit(c, &root.graph, &mut counts, check) {
        return Ok((counts, Some(r)));
    }
    let mut frontier = vec![root];
    while frontier.len() < SPLIT_FRONTIER && frontier[0].graph.order() < c.max_order {
        let mut next = Vec::new();
        for node in &frontier {
            for child in children(c, node) {
                if let Some(r) = emit(c, &child.graph, &mut counts, check) {
                    return Ok((counts, Some(r)));
                }
                next.push(child);
            }
        }
        if next.is_empty() {
            return Ok((counts, None));
        }
        frontier = next;
    }
    let stop_at = AtomicUsize::new(usize::MAX);
    let results: Vec<(GenerationCounts, Option<R>)> = frontier
        .par_iter()
        .enumerate()
        .map(|(i, node)| {
            let mut local = GenerationCounts::with_max(c.max_order);
            let found = descend(c, node, &mut local, check, &|| stop_at.load(Ordering::Relaxed) < i);
            if found.is_some() {
                stop_at.fetch_min(i, Ordering::Relaxed);
            }
            (local, found)
        })
        .collect();
    let mut first = None;
    for (local, found) in results {
        counts.merge(&local);
        if first.is_none() {
            first = found;
        }
    }
    Ok((counts, first))
}

fn descend<R>(
    c: &GenerationConstraints,
    node: &Node,
    counts: &mut GenerationCounts,
    check: &(dyn Fn(&Graph) -> Option<R> + Sync),
    abandoned: &dyn Fn() -> bool,
) -> Option<R> {
    if node.graph.order() >= c.max_order || abandoned() {
        return None;
    }
    for child in children(c, node) {
        if let Some(r) = emit(c, &child.graph, counts, check) {
            return Some(r);
        }
        if let Some(r) = descend(c, &child, counts, check, abandoned) {
            return Some(r);
        }
    }
    None
}

fn emit<R>(
    c: &GenerationConstraints,
    g: &Graph,
    counts: &mut GenerationCounts,
    check: &(dyn Fn(&Graph) -> Option<R> + Sync),
) -> Option<R> {
    let n = g.order();
    if n < c.min_order || g.degree_summary().min_degree < c.min_degree {
        return None;
    }
    counts.per_order[n] += 1;
    check(g)
}

/// Invariant used to pick the canonical deletion vertex cheaply: only a new
/// vertex maximising it can be the canonical one.
fn vertex_score(g: &Graph, v: usize) -> (usize, usize) {
    (g.degree(v), g.neighbors(v).map(|w| g.degree(w)).sum())
}

/// The accepted children of `node`, one per isomorphism class.
fn children(c: &GenerationConstraints, node: &Node) -> Vec<Node> {
    let p = &node.graph;
    let m = p.order();
    let remaining = c.max_order - (m + 1);
    let max_deg = c.max_degree();

    // vertices too close to each other to share the new neighbour
    let reach = c.girth_min.saturating_sub(3);
    let conflict: Vec<u64> = (0..m).map(|x| ball(p, x, reach)).collect();
    let eligible: u64 = (0..m).filter(|&x| p.degree(x) < max_deg).fold(0, |acc, x| acc | 1 << x);
    let forced: u64 = (0..m).filter(|&x| p.degree(x) + remaining < c.min_degree).fold(0, |acc, x| acc | 1 << x);
    if forced & !eligible != 0 {
        return Vec::new();
    }

    let mut sets = Vec::new();
    let mut stack = vec![(0usize, 0u64, 0u64)];
    while let Some((i, chosen, blocked)) = stack.pop() {
        if i == m {
            let size = chosen.count_ones() as usize;
            if size + remaining >= c.min_degree {
                sets.push(chosen);
            }
            continue;
        }
        let bit = 1u64 << i;
        if forced & bit == 0 {
            stack.push((i + 1, chosen, blocked));
        }
        if eligible & bit != 0 && blocked & bit == 0 && (chosen.count_ones() as usize) < max_deg {
            stack.push((i + 1, chosen | bit, blocked | conflict[i]));
        }
    }
    sets.sort_unstable();

    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for x in sets {
        let mut child = Graph::new(m + 1);
        for (u, v) in p.edges() {
            child.add_edge(u, v);
        }
        for w in crate::graph::Bits::new(&[x]) {
            child.add_edge(m, w);
        }
        let best = (0..=m).map(|v| vertex_score(&child, v)).max().expect("child is nonempty");
        if vertex_score(&child, m) != best {
            continue;
        }
        let form = canonical_form(&child);
        let last =
            *form.labelling.iter().rev().find(|&&v| vertex_score(&child, v) == best).expect("a maximiser exists");
        let accepted = last == m || canonical_form(&child.delete_vertex(last)).certificate == node.certificate;
        if accepted && seen.insert(form.certificate.clone()) {
            out.push(Node { graph: child, certificate: form.certificate });
        }
    }
    out
}

/// Vertices other than `x` within distance `radius` of `x`, as a bit mask.
fn ball(g: &Graph, x: usize, radius: usize) -> u64 {
    let mut seen = 1u64 << x;
    let mut layer = seen;
    for _ in 0..radius {
        let mut next = 0u64;
        for v in crate::graph::Bits::new(&[layer]) {
            next |= g.row(v)[0];
        }
        layer = next & !seen;
        if layer == 0 {
            break;
        }
        seen |= layer;
    }
    seen & !(1 << x)
}
