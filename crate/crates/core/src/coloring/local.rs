//! One-sided randomized colouring: tabu-guided min-conflict local search
//! with restarts. A returned colouring is always proper; `None` carries no
//! claim about colourability.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Coloring;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalSearchParams {
    /// Moves per restart; `None` scales with the order.
    pub max_iterations: Option<u64>,
    pub restarts: u32,
    /// Fixed part of the tabu tenure; a random `0..tabu_base` is added.
    pub tabu_base: u32,
    /// Tenure grows by this fraction of the conflicting-vertex count.
    pub tabu_alpha: f64,
}

impl Default for LocalSearchParams {
    fn default() -> Self {
        LocalSearchParams { max_iterations: None, restarts: 4, tabu_base: 10, tabu_alpha: 0.6 }
    }
}

impl LocalSearchParams {
    fn iterations_for(&self, n: usize) -> u64 {
        self.max_iterations.unwrap_or(20_000 + 500 * n as u64)
    }
}

/// Tries to colour `g` with `k` colours. Deterministic in `seed`.
pub fn random_colourable(g: &Graph, k: usize, params: &LocalSearchParams, seed: u64) -> Option<Coloring> {
    let n = g.order();
    if n == 0 {
        return Some(Coloring::new(Vec::new(), k));
    }
    if k == 0 {
        return None;
    }
    if k >= n {
        return Some(Coloring::new((0..n).collect(), k));
    }
    if k == 1 {
        return (g.size() == 0).then(|| Coloring::new(vec![0; n], 1));
    }
    let nbrs: Vec<Vec<u32>> = (0..n).map(|v| g.neighbors(v).map(|w| w as u32).collect()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut state = TabuState::new(n, k);
    let iterations = params.iterations_for(n);
    for _ in 0..params.restarts.max(1) {
        if state.run(&nbrs, params, iterations, &mut rng) {
            let coloring = Coloring::new(state.color.iter().map(|&c| c as usize).collect(), k);
            debug_assert!(coloring.is_proper(g));
            return Some(coloring);
        }
    }
    None
}

struct TabuState {
    k: usize,
    color: Vec<u32>,
    /// gamma[v * k + c]: neighbours of v coloured c
    gamma: Vec<u32>,
    tabu: Vec<u64>,
    conflicted: Vec<u32>,
    pos: Vec<u32>,
    conflicts: u64,
}

const ABSENT: u32 = u32::MAX;

impl TabuState {
    fn new(n: usize, k: usize) -> Self {
        TabuState {
            k,
            color: vec![0; n],
            gamma: vec![0; n * k],
            tabu: vec![0; n * k],
            conflicted: Vec::with_capacity(n),
            pos: vec![ABSENT; n],
            conflicts: 0,
        }
    }

    fn reset(&mut self, nbrs: &[Vec<u32>], rng: &mut ChaCha8Rng) {
        let k = self.k;
        for c in self.color.iter_mut() {
            *c = rng.gen_range(0..k as u32);
        }
        self.gamma.iter_mut().for_each(|x| *x = 0);
        self.tabu.iter_mut().for_each(|x| *x = 0);
        for (v, list) in nbrs.iter().enumerate() {
            for &w in list {
                self.gamma[v * k + self.color[w as usize] as usize] += 1;
            }
        }
        self.conflicted.clear();
        self.pos.iter_mut().for_each(|p| *p = ABSENT);
        let mut twice = 0u64;
        for v in 0..nbrs.len() {
            let own = self.gamma[v * k + self.color[v] as usize];
            twice += own as u64;
            self.sync(v);
        }
        self.conflicts = twice / 2;
    }

    #[inline]
    fn sync(&mut self, v: usize) {
        let bad = self.gamma[v * self.k + self.color[v] as usize] > 0;
        let present = self.pos[v] != ABSENT;
        if bad && !present {
            self.pos[v] = self.conflicted.len() as u32;
            self.conflicted.push(v as u32);
        } else if !bad && present {
            let i = self.pos[v] as usize;
            let last = *self.conflicted.last().unwrap();
            self.conflicted.swap_remove(i);
            if last as usize != v {
                self.pos[last as usize] = i as u32;
            }
            self.pos[v] = ABSENT;
        }
    }

    fn run(&mut self, nbrs: &[Vec<u32>], params: &LocalSearchParams, iterations: u64, rng: &mut ChaCha8Rng) -> bool {
        let k = self.k;
        self.reset(nbrs, rng);
        let mut best = self.conflicts;
        for iter in 1..=iterations {
            if self.conflicts == 0 {
                return true;
            }
            // best non-tabu move among conflicted vertices (aspiration allowed)
            let mut chosen: Option<(usize, usize)> = None;
            let mut chosen_delta = i64::MAX;
            let mut ties = 0u32;
            for &v in &self.conflicted {
                let v = v as usize;
                let own = self.gamma[v * k + self.color[v] as usize] as i64;
                for c in 0..k {
                    if c == self.color[v] as usize {
                        continue;
                    }
                    let delta = self.gamma[v * k + c] as i64 - own;
                    let tabu = self.tabu[v * k + c] >= iter;
                    if tabu && (self.conflicts as i64 + delta) >= best as i64 {
                        continue;
                    }
                    if delta < chosen_delta {
                        chosen_delta = delta;
                        chosen = Some((v, c));
                        ties = 1;
                    } else if delta == chosen_delta {
                        ties += 1;
                        if rng.gen_range(0..ties) == 0 {
                            chosen = Some((v, c));
                        }
                    }
                }
            }
            let (v, c) = chosen.unwrap_or_else(|| {
                let v = self.conflicted[rng.gen_range(0..self.conflicted.len())] as usize;
                let mut c = rng.gen_range(0..k - 1);
                if c >= self.color[v] as usize {
                    c += 1;
                }
                (v, c)
            });
            let old = self.color[v] as usize;
            let delta = self.gamma[v * k + c] as i64 - self.gamma[v * k + old] as i64;
            self.conflicts = (self.conflicts as i64 + delta) as u64;
            self.color[v] = c as u32;
            for &w in &nbrs[v] {
                let w = w as usize;
                self.gamma[w * k + old] -= 1;
                self.gamma[w * k + c] += 1;
                let cw = self.color[w] as usize;
                if cw == old || cw == c {
                    self.sync(w);
                }
            }
            self.sync(v);
            let tenure = rng.gen_range(0..params.tabu_base.max(1)) as u64
                + (params.tabu_alpha * self.conflicted.len() as f64) as u64;
            self.tabu[v * k + old] = iter + tenure;
            best = best.min(self.conflicts);
        }
        self.conflicts == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn easy_instances() {
        let p = LocalSearchParams::default();
        for seed in 0..5 {
            let c5 = Graph::cycle(5);
            assert!(random_colourable(&c5, 3, &p, seed).unwrap().is_proper(&c5));
            let c6 = Graph::cycle(6);
            assert!(random_colourable(&c6, 2, &p, seed).unwrap().is_proper(&c6));
            assert!(random_colourable(&Graph::petersen(), 3, &p, seed).is_some());
        }
    }

    #[test]
    fn never_claims_impossible_colourings() {
        let p = LocalSearchParams { max_iterations: Some(2_000), ..Default::default() };
        assert!(random_colourable(&Graph::cycle(5), 2, &p, 1).is_none());
        assert!(random_colourable(&Graph::grotzsch(), 3, &p, 1).is_none());
        assert!(random_colourable(&Graph::complete(5), 4, &p, 1).is_none());
    }

    #[test]
    fn deterministic_in_seed() {
        let g = Graph::petersen();
        let p = LocalSearchParams::default();
        assert_eq!(random_colourable(&g, 3, &p, 42), random_colourable(&g, 3, &p, 42));
    }
}
