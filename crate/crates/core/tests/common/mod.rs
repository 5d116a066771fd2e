//! Shared strategies and brute-force oracles for the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use girthcolor::lcf::{get_orbits, EdgeOrbit};
use girthcolor::Graph;
use proptest::prelude::*;

/// Graph on `n` vertices taking edge `{u, v}` (`u < v`, row-major) from `bits`.
pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::new(n);
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[i % bits.len()] {
                g.add_edge(u, v);
            }
            i += 1;
        }
    }
    g
}

/// Random graphs with order in `orders` and edge density drawn per graph.
pub fn arb_graph(orders: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Graph> {
    (orders, 0.0f64..1.0).prop_flat_map(|(n, p)| {
        let pairs = (n * n.saturating_sub(1) / 2).max(1);
        prop::collection::vec(prop::bool::weighted(p.clamp(0.01, 0.99)), pairs)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Tries every assignment of `0..k` to the vertices, subject to `allowed`.
pub fn brute_force_colourable(g: &Graph, k: usize, allowed: Option<&[Vec<bool>]>) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut colour = vec![0usize; n];
    loop {
        let fits = allowed.is_none_or(|a| (0..n).all(|v| a[v][colour[v]]));
        if fits && edges.iter().all(|&(u, v)| colour[u] != colour[v]) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            colour[i] += 1;
            if colour[i] < k {
                break;
            }
            colour[i] = 0;
            i += 1;
        }
    }
}

pub fn brute_force_chromatic(g: &Graph) -> usize {
    (0..=g.order()).find(|&k| brute_force_colourable(g, k, None)).expect("n colours always suffice")
}

/// Shortest cycle by enumerating simple paths from each start vertex.
pub fn brute_force_girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    fn walk(g: &Graph, start: usize, v: usize, len: usize, on_path: &mut Vec<bool>, best: &mut Option<usize>) {
        for w in g.neighbors(v) {
            if w == start && len >= 3 {
                *best = Some(best.map_or(len, |b| b.min(len)));
            }
            if w > start && !on_path[w] {
                on_path[w] = true;
                walk(g, start, w, len + 1, on_path, best);
                on_path[w] = false;
            }
        }
    }
    for start in 0..n {
        let mut on_path = vec![false; n];
        on_path[start] = true;
        walk(g, start, start, 1, &mut on_path, &mut best);
    }
    best
}

/// Number of cycles of exactly `len` vertices, each counted once.
pub fn brute_force_cycle_count(g: &Graph, len: usize) -> u64 {
    let n = g.order();
    let mut count = 0u64;
    fn walk(g: &Graph, start: usize, v: usize, depth: usize, len: usize, on_path: &mut Vec<bool>, count: &mut u64) {
        if depth == len {
            if g.has_edge(v, start) {
                *count += 1;
            }
            return;
        }
        for w in g.neighbors(v) {
            if w > start && !on_path[w] {
                on_path[w] = true;
                walk(g, start, w, depth + 1, len, on_path, count);
                on_path[w] = false;
            }
        }
    }
    for start in 0..n {
        let mut on_path = vec![false; n];
        on_path[start] = true;
        walk(g, start, start, 1, len, &mut on_path, &mut count);
    }
    // each cycle is traced once in each direction from its smallest vertex
    count / 2
}

/// Random graphs with girth at least `bound`, grown by inserting random
/// pairs that do not close a shorter cycle.
pub fn arb_girth_graph(orders: std::ops::RangeInclusive<usize>, bound: usize) -> impl Strategy<Value = Graph> {
    (orders, prop::collection::vec((0usize..64, 0usize..64), 0..80)).prop_map(move |(n, picks)| {
        let mut g = Graph::new(n);
        for (u, v) in picks {
            let (u, v) = (u % n, v % n);
            if u != v && !g.has_edge(u, v) && !girthcolor::graph::edge_closes_short_cycle(&g, u, v, bound) {
                g.add_edge(u, v);
            }
        }
        g
    })
}

/// Greedy independent subset of `picks` (in order), reduced modulo the order.
pub fn independent_from(g: &Graph, picks: &[usize]) -> Vec<usize> {
    let mut s: Vec<usize> = Vec::new();
    for &p in picks {
        let v = p % g.order();
        if !s.contains(&v) && s.iter().all(|&u| !g.has_edge(u, v)) {
            s.push(v);
        }
    }
    s
}

/// Applies `x -> x + r (mod n)` to every edge and looks the image up.
pub fn shift_preserves_edges(g: &Graph, r: usize) -> bool {
    let n = g.order();
    let edges: BTreeSet<(usize, usize)> = g.edges().collect();
    edges.iter().all(|&(u, v)| {
        let (a, b) = ((u + r) % n, (v + r) % n);
        edges.contains(&(a.min(b), a.max(b)))
    })
}

pub fn normalized(edges: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
    edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect()
}

/// Orbits of unordered vertex pairs under the shift, by closing each pair.
pub fn brute_force_pair_orbits(r: usize, s: usize) -> BTreeSet<BTreeSet<(usize, usize)>> {
    let n = r * s;
    let mut seen = BTreeSet::new();
    let mut orbits = BTreeSet::new();
    for u in 0..n {
        for v in u + 1..n {
            if seen.contains(&(u, v)) {
                continue;
            }
            let mut orbit = BTreeSet::new();
            let (mut a, mut b) = (u, v);
            while orbit.insert((a.min(b), a.max(b))) {
                a = (a + r) % n;
                b = (b + r) % n;
            }
            seen.extend(orbit.iter().copied());
            orbits.insert(orbit);
        }
    }
    orbits
}

/// A random `LCF(r, s)` shape with a random subset of its orbits.
pub fn arb_scheme() -> impl Strategy<Value = (usize, usize, Vec<EdgeOrbit>)> {
    (1usize..=6, 3usize..=12).prop_flat_map(|(r, s)| {
        let all = get_orbits(r, s);
        let len = all.len();
        prop::collection::vec(any::<bool>(), len).prop_map(move |mask| {
            let chosen = all.iter().zip(&mask).filter(|(_, &m)| m).map(|(o, _)| o.clone()).collect();
            (r, s, chosen)
        })
    })
}
