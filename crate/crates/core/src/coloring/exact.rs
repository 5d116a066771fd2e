//! Exact k-colourability by saturation-ordered backtracking.
//!
//! The kernel keeps a bitmask domain per vertex, propagates forced
//! (single-colour) vertices, and breaks colour symmetry by only opening the
//! lowest unused colour of each interchangeable colour class. Vertices whose
//! palette is larger than their degree are peeled off first and coloured
//! greedily at the end.

use super::{full_mask, greedy_clique, ColorBudget, Coloring, Decision, Limits, PaletteConstraint, MAX_COLORS};
use crate::graph::Graph;

const NONE: u8 = u8::MAX;

/// Decides whether `g` has a proper colouring with colours `0..k` that
/// respects `constraint` (if given).
///
/// `NotColorable` is a proof by exhaustion; `BudgetExhausted` makes no claim.
pub fn decide_k_colorable(
    g: &Graph,
    k: usize,
    constraint: Option<&PaletteConstraint>,
    budget: &ColorBudget,
) -> Decision {
    let n = g.order();
    if let Some(p) = constraint {
        assert_eq!(p.order(), n, "palette constraint order does not match graph");
    }
    if n == 0 {
        return Decision::Colorable(Coloring::new(Vec::new(), k));
    }
    if k == 0 {
        return Decision::NotColorable;
    }
    if k > MAX_COLORS {
        assert!(constraint.is_none(), "palette constraints support at most {MAX_COLORS} colours");
        // more colours than the bitmask kernel holds: greedy settles the
        // cases that matter (k beyond the maximum degree)
        let coloring = greedy_coloring(g);
        if coloring.colors_used() <= k {
            return Decision::Colorable(Coloring::new(coloring.assignment().to_vec(), k));
        }
        return Decision::BudgetExhausted;
    }
    let allowed: Vec<u64> = (0..n).map(|v| constraint.map_or(full_mask(k), |p| p.mask(v) & full_mask(k))).collect();
    if allowed.contains(&0) {
        return Decision::NotColorable;
    }

    // peel vertices that can always be coloured last
    let mut rem_deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut peeled = vec![false; n];
    let mut peel_order = Vec::new();
    let mut stack: Vec<usize> = (0..n).filter(|&v| allowed[v].count_ones() as usize > rem_deg[v]).collect();
    while let Some(v) = stack.pop() {
        if peeled[v] {
            continue;
        }
        peeled[v] = true;
        peel_order.push(v);
        for w in g.neighbors(v) {
            if !peeled[w] {
                rem_deg[w] -= 1;
                if allowed[w].count_ones() as usize > rem_deg[w] {
                    stack.push(w);
                }
            }
        }
    }
    let core: Vec<usize> = (0..n).filter(|&v| !peeled[v]).collect();

    let mut assignment = vec![usize::MAX; n];
    if !core.is_empty() {
        let sub = g.induced_subgraph(&core);
        if greedy_clique(&sub).len() > k {
            return Decision::NotColorable;
        }
        let sub_allowed: Vec<u64> = core.iter().map(|&v| allowed[v]).collect();
        let mut solver = Solver::new(&sub, k, sub_allowed, budget.start());
        match solver.solve() {
            Outcome::Found => {
                for (i, &v) in core.iter().enumerate() {
                    assignment[v] = solver.color[i] as usize;
                }
            }
            Outcome::Refuted => return Decision::NotColorable,
            Outcome::Aborted => return Decision::BudgetExhausted,
        }
    }
    for &v in peel_order.iter().rev() {
        let mut mask = allowed[v];
        for w in g.neighbors(v) {
            if assignment[w] != usize::MAX {
                mask &= !(1 << assignment[w]);
            }
        }
        debug_assert!(mask != 0, "peeled vertex always has a free colour");
        assignment[v] = mask.trailing_zeros() as usize;
    }
    let coloring = Coloring::new(assignment, k);
    debug_assert!(coloring.validate(g, constraint).is_ok());
    Decision::Colorable(coloring)
}

/// Saturation-largest-first greedy colouring (no backtracking).
pub(crate) fn greedy_coloring(g: &Graph) -> Coloring {
    let n = g.order();
    let mut color = vec![usize::MAX; n];
    let mut seen: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut sat = vec![0usize; n];
    let mut max_color = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| (sat[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let c = (0..).find(|&c| !seen[v].get(c).copied().unwrap_or(false)).unwrap();
        color[v] = c;
        max_color = max_color.max(c + 1);
        for w in g.neighbors(v) {
            if seen[w].len() <= c {
                seen[w].resize(c + 1, false);
            }
            if !seen[w][c] {
                seen[w][c] = true;
                sat[w] += 1;
            }
        }
    }
    Coloring::new(color, max_color)
}

enum Outcome {
    Found,
    Refuted,
    Aborted,
}

struct Aborted;

struct Solver {
    nbrs: Vec<Vec<u32>>,
    domain: Vec<u64>,
    color: Vec<u8>,
    free_deg: Vec<u32>,
    trail: Vec<(u32, u64)>,
    assigned: Vec<u32>,
    queue: Vec<u32>,
    used: u64,
    classes: Vec<u64>,
    uncolored: usize,
    nodes: u64,
    limits: Limits,
}

impl Solver {
    fn new(g: &Graph, k: usize, allowed: Vec<u64>, limits: Limits) -> Self {
        let n = g.order();
        let nbrs: Vec<Vec<u32>> = (0..n).map(|v| g.neighbors(v).map(|w| w as u32).collect()).collect();
        let free_deg = nbrs.iter().map(|l| l.len() as u32).collect();
        // colours allowed at exactly the same vertices are interchangeable
        let mut classes: Vec<(Vec<bool>, u64)> = Vec::new();
        for c in 0..k {
            let sig: Vec<bool> = allowed.iter().map(|&m| m >> c & 1 == 1).collect();
            match classes.iter_mut().find(|(s, _)| *s == sig) {
                Some((_, mask)) => *mask |= 1 << c,
                None => classes.push((sig, 1 << c)),
            }
        }
        Solver {
            nbrs,
            domain: allowed,
            color: vec![NONE; n],
            free_deg,
            trail: Vec::new(),
            assigned: Vec::with_capacity(n),
            queue: Vec::new(),
            used: 0,
            classes: classes.into_iter().map(|(_, m)| m).collect(),
            uncolored: n,
            nodes: 0,
            limits,
        }
    }

    fn solve(&mut self) -> Outcome {
        self.queue.extend((0..self.domain.len() as u32).filter(|&v| self.domain[v as usize].count_ones() == 1));
        if !self.propagate() {
            return Outcome::Refuted;
        }
        match self.search() {
            Ok(true) => Outcome::Found,
            Ok(false) => Outcome::Refuted,
            Err(Aborted) => Outcome::Aborted,
        }
    }

    fn assign(&mut self, v: usize, c: u32) -> bool {
        self.color[v] = c as u8;
        self.assigned.push(v as u32);
        self.used |= 1 << c;
        self.uncolored -= 1;
        for &w in &self.nbrs[v] {
            self.free_deg[w as usize] -= 1;
        }
        let bit = 1u64 << c;
        for i in 0..self.nbrs[v].len() {
            let w = self.nbrs[v][i] as usize;
            let d = self.domain[w];
            if self.color[w] == NONE && d & bit != 0 {
                self.trail.push((w as u32, d));
                let nd = d & !bit;
                self.domain[w] = nd;
                if nd == 0 {
                    return false;
                }
                if nd & (nd - 1) == 0 {
                    self.queue.push(w as u32);
                }
            }
        }
        true
    }

    fn propagate(&mut self) -> bool {
        while let Some(w) = self.queue.pop() {
            let w = w as usize;
            if self.color[w] != NONE {
                continue;
            }
            let c = self.domain[w].trailing_zeros();
            if !self.assign(w, c) {
                self.queue.clear();
                return false;
            }
        }
        true
    }

    fn undo(&mut self, trail_mark: usize, assigned_mark: usize, used: u64) {
        while self.trail.len() > trail_mark {
            let (w, d) = self.trail.pop().unwrap();
            self.domain[w as usize] = d;
        }
        while self.assigned.len() > assigned_mark {
            let v = self.assigned.pop().unwrap() as usize;
            self.color[v] = NONE;
            self.uncolored += 1;
            for &w in &self.nbrs[v] {
                self.free_deg[w as usize] += 1;
            }
        }
        self.used = used;
    }

    fn select(&self) -> usize {
        let mut best = usize::MAX;
        let mut best_key = (u32::MAX, 0u32);
        for v in 0..self.color.len() {
            if self.color[v] != NONE {
                continue;
            }
            let size = self.domain[v].count_ones();
            let fd = self.free_deg[v];
            if size < best_key.0 || (size == best_key.0 && fd > best_key.1) {
                best = v;
                best_key = (size, fd);
            }
        }
        best
    }

    fn search(&mut self) -> Result<bool, Aborted> {
        if self.uncolored == 0 {
            return Ok(true);
        }
        self.nodes += 1;
        if self.limits.node_limit.is_some_and(|l| self.nodes > l) {
            return Err(Aborted);
        }
        if self.nodes.is_multiple_of(4096) && self.limits.expired() {
            return Err(Aborted);
        }
        let v = self.select();
        let mut open = self.used;
        for &cls in &self.classes {
            let free = cls & !self.used;
            open |= free & free.wrapping_neg();
        }
        let mut cands = self.domain[v] & open;
        while cands != 0 {
            let c = cands.trailing_zeros();
            cands &= cands - 1;
            let (tm, am, used) = (self.trail.len(), self.assigned.len(), self.used);
            if self.assign(v, c) && self.propagate() && self.search()? {
                return Ok(true);
            }
            self.queue.clear();
            self.undo(tm, am, used);
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unlimited(g: &Graph, k: usize) -> Decision {
        decide_k_colorable(g, k, None, &ColorBudget::unlimited())
    }

    #[test]
    fn odd_cycle_needs_three() {
        let c5 = Graph::cycle(5);
        assert_eq!(unlimited(&c5, 2), Decision::NotColorable);
        let d = unlimited(&c5, 3);
        assert!(d.coloring().unwrap().is_proper(&c5));
    }

    #[test]
    fn grotzsch_is_four_chromatic() {
        let g = Graph::grotzsch();
        assert_eq!(unlimited(&g, 3), Decision::NotColorable);
        assert!(unlimited(&g, 4).is_colorable());
    }

    #[test]
    fn complete_graphs() {
        for n in 1..8 {
            let g = Graph::complete(n);
            assert_eq!(unlimited(&g, n - 1), Decision::NotColorable);
            assert!(unlimited(&g, n).is_colorable());
        }
    }

    #[test]
    fn palette_is_respected() {
        let c4 = Graph::cycle(4);
        let mut p = PaletteConstraint::unrestricted(4, 2).unwrap();
        p.restrict(0, [0]).unwrap();
        p.restrict(1, [0]).unwrap();
        assert_eq!(decide_k_colorable(&c4, 2, Some(&p), &ColorBudget::unlimited()), Decision::NotColorable);
        let mut p = PaletteConstraint::unrestricted(4, 2).unwrap();
        p.restrict(0, [1]).unwrap();
        let d = decide_k_colorable(&c4, 2, Some(&p), &ColorBudget::unlimited());
        let c = d.coloring().unwrap();
        c.validate(&c4, Some(&p)).unwrap();
        assert_eq!(c.color(0), 1);
    }

    #[test]
    fn node_budget_exhausts() {
        let g = Graph::grotzsch();
        // too few nodes to refute 3-colourability
        assert_eq!(decide_k_colorable(&g, 3, None, &ColorBudget::with_nodes(1)), Decision::BudgetExhausted);
    }

    #[test]
    fn empty_and_zero_colours() {
        assert!(unlimited(&Graph::new(0), 0).is_colorable());
        assert_eq!(unlimited(&Graph::new(1), 0), Decision::NotColorable);
        assert!(unlimited(&Graph::new(7), 1).is_colorable());
    }

    #[test]
    fn greedy_is_proper() {
        let g = Graph::petersen();
        let c = greedy_coloring(&g);
        assert!(c.is_proper(&g));
        assert!(c.colors_used() <= 4);
    }
}
