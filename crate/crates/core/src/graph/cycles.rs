use std::collections::VecDeque;

use super::{words_for, Graph};

/// Normalised `(min, max)` key for an undirected edge.
#[inline]
pub fn edge_key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Number of distinct cycles of length exactly `len` in `g`.
///
/// Each cycle is enumerated once: paths start at the cycle's smallest
/// vertex, stay above it, and the second vertex must be smaller than the
/// last one so only one of the two directions is counted.
pub fn count_cycles_of_length(g: &Graph, len: usize) -> u64 {
    assert!(len >= 3, "cycle length must be at least 3");
    let n = g.order();
    let mut total = 0;
    let mut on_path = vec![0u64; words_for(n)];
    let mut path = Vec::with_capacity(len);
    for start in 0..n {
        let dist = bfs_distances(g, start, |v| v >= start, None);
        on_path.iter_mut().for_each(|w| *w = 0);
        path.clear();
        path.push(start);
        set(&mut on_path, start);
        total += extend_from_min(g, start, len, &dist, &mut path, &mut on_path);
    }
    total
}

fn extend_from_min(
    g: &Graph,
    start: usize,
    len: usize,
    dist: &[u32],
    path: &mut Vec<usize>,
    on_path: &mut [u64],
) -> u64 {
    let last = *path.last().unwrap();
    if path.len() == len {
        return u64::from(g.has_edge(last, start) && path[1] < last);
    }
    let remaining = (len - path.len()) as u32;
    let mut count = 0;
    for w in g.neighbors(last) {
        if w <= start || test(on_path, w) || dist[w] > remaining {
            continue;
        }
        path.push(w);
        set(on_path, w);
        count += extend_from_min(g, start, len, dist, path, on_path);
        clear(on_path, w);
        path.pop();
    }
    count
}

/// Number of cycles of length exactly `len` that use at least one edge of
/// `edges`. Edges not present in `g` are ignored.
///
/// Each cycle is charged to the first listed edge it contains: for the
/// `i`-th edge `(a, b)` we count paths from `b` back to `a` of length
/// `len - 1` that avoid every earlier listed edge.
pub fn count_cycles_through_edges(g: &Graph, len: usize, edges: &[(usize, usize)]) -> u64 {
    assert!(len >= 3, "cycle length must be at least 3");
    let n = g.order();
    let mut forbidden = Graph::new(n);
    let mut total = 0;
    let mut on_path = vec![0u64; words_for(n)];
    let mut path = Vec::with_capacity(len);
    for &(a, b) in edges {
        if !g.has_edge(a, b) || forbidden.has_edge(a, b) {
            continue;
        }
        let dist = bfs_distances(g, a, |_| true, Some(&forbidden));
        on_path.iter_mut().for_each(|w| *w = 0);
        path.clear();
        path.push(a);
        path.push(b);
        set(&mut on_path, a);
        set(&mut on_path, b);
        total += extend_to_target(g, a, len, &dist, &forbidden, &mut path, &mut on_path);
        forbidden.add_edge(a, b);
    }
    total
}

fn extend_to_target(
    g: &Graph,
    target: usize,
    len: usize,
    dist: &[u32],
    forbidden: &Graph,
    path: &mut Vec<usize>,
    on_path: &mut [u64],
) -> u64 {
    let last = *path.last().unwrap();
    if path.len() == len {
        return u64::from(g.has_edge(last, target) && !forbidden.has_edge(last, target));
    }
    let remaining = (len - path.len()) as u32;
    let mut count = 0;
    for w in g.neighbors(last) {
        if test(on_path, w) || forbidden.has_edge(last, w) || dist[w] > remaining {
            continue;
        }
        path.push(w);
        set(on_path, w);
        count += extend_to_target(g, target, len, dist, forbidden, path, on_path);
        clear(on_path, w);
        path.pop();
    }
    count
}

/// BFS distances from `source` restricted to vertices accepted by `keep`,
/// skipping edges in `forbidden`. Unreached vertices get `u32::MAX`.
fn bfs_distances(g: &Graph, source: usize, keep: impl Fn(usize) -> bool, forbidden: Option<&Graph>) -> Vec<u32> {
    let mut dist = vec![u32::MAX; g.order()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if dist[w] != u32::MAX || !keep(w) || forbidden.is_some_and(|f| f.has_edge(u, w)) {
                continue;
            }
            dist[w] = dist[u] + 1;
            queue.push_back(w);
        }
    }
    dist
}

#[inline]
fn set(bits: &mut [u64], v: usize) {
    bits[v / 64] |= 1 << (v % 64);
}

#[inline]
fn clear(bits: &mut [u64], v: usize) {
    bits[v / 64] &= !(1 << (v % 64));
}

#[inline]
fn test(bits: &[u64], v: usize) -> bool {
    bits[v / 64] >> (v % 64) & 1 == 1
}
