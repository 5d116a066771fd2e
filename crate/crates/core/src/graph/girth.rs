use std::collections::VecDeque;
use std::fmt;

use super::Graph;

/// Length of the shortest cycle, or `Acyclic` for a forest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GirthValue {
    Finite(usize),
    Acyclic,
}

impl GirthValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            GirthValue::Finite(g) => Some(g),
            GirthValue::Acyclic => None,
        }
    }

    /// True if every cycle (if any) has length at least `bound`.
    pub fn at_least(self, bound: usize) -> bool {
        match self {
            GirthValue::Finite(g) => g >= bound,
            GirthValue::Acyclic => true,
        }
    }
}

impl fmt::Display for GirthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GirthValue::Finite(g) => write!(f, "{g}"),
            GirthValue::Acyclic => f.write_str("acyclic"),
        }
    }
}

const UNSEEN: u32 = u32::MAX;

/// Shortest cycle of length strictly below `bound`, if one exists.
///
/// One BFS per root; a non-tree edge `(u, w)` met from root `r` bounds the
/// girth by `d(u) + d(w) + 1`, and the minimum over all roots is exact.
fn shortest_cycle_below(g: &Graph, bound: usize) -> Option<usize> {
    let n = g.order();
    let mut best = bound;
    let mut dist = vec![UNSEEN; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::with_capacity(n);
    let mut touched = Vec::with_capacity(n);
    for root in 0..n {
        if best <= 3 {
            break;
        }
        if g.degree(root) < 2 {
            continue;
        }
        for &t in &touched {
            dist[t] = UNSEEN;
        }
        touched.clear();
        queue.clear();
        dist[root] = 0;
        parent[root] = usize::MAX;
        touched.push(root);
        queue.push_back(root);
        'bfs: while let Some(u) = queue.pop_front() {
            let du = dist[u] as usize;
            // any cycle found from here on is at least 2*du + 1 long
            if 2 * du + 1 >= best {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == UNSEEN {
                    dist[w] = du as u32 + 1;
                    parent[w] = u;
                    touched.push(w);
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = du + dist[w] as usize + 1;
                    if len < best {
                        best = len;
                        if best <= 2 * du + 1 {
                            break 'bfs;
                        }
                    }
                }
            }
        }
    }
    (best < bound).then_some(best)
}

pub fn girth(g: &Graph) -> GirthValue {
    match shortest_cycle_below(g, usize::MAX) {
        Some(len) => GirthValue::Finite(len),
        None => GirthValue::Acyclic,
    }
}

/// True iff `g` has a cycle of length less than `bound`.
pub fn contains_cycle_shorter_than(g: &Graph, bound: usize) -> bool {
    shortest_cycle_below(g, bound).is_some()
}

/// Incremental form of [`contains_cycle_shorter_than`]: assuming `g` minus
/// the edge `{u, v}` has no cycle shorter than `bound`, decides whether `g`
/// with that edge does. Whether `g` currently holds the edge is irrelevant;
/// the direct edge is never used as a path.
pub fn edge_closes_short_cycle(g: &Graph, u: usize, v: usize, bound: usize) -> bool {
    if bound < 3 {
        return false;
    }
    distance_avoiding_edge(g, u, v, bound - 2).is_some()
}

/// Distance from `u` to `v` not using the edge `{u, v}`, if at most `limit`.
pub fn distance_avoiding_edge(g: &Graph, u: usize, v: usize, limit: usize) -> Option<usize> {
    if u == v {
        return Some(0);
    }
    let words = g.words_per_row();
    let mut seen = vec![0u64; words];
    let mut frontier = vec![u];
    seen[u / 64] |= 1 << (u % 64);
    let mut next = Vec::new();
    for depth in 1..=limit {
        next.clear();
        for &x in &frontier {
            for w in g.neighbors(x) {
                if x == u && w == v {
                    continue;
                }
                if w == v {
                    return Some(depth);
                }
                if seen[w / 64] >> (w % 64) & 1 == 0 {
                    seen[w / 64] |= 1 << (w % 64);
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        std::mem::swap(&mut frontier, &mut next);
    }
    None
}

/// True iff `g` is not bipartite.
pub fn contains_odd_cycle(g: &Graph) -> bool {
    let n = g.order();
    let mut side = vec![u8::MAX; n];
    let mut queue = VecDeque::new();
    for start in 0..n {
        if side[start] != u8::MAX {
            continue;
        }
        side[start] = 0;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = side[u] ^ 1;
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return true;
                }
            }
        }
    }
    false
}
