use crate::graph::Graph;

/// The Mycielskian of `g`: vertices `0..n` are the originals, `n..2n` the
/// shadows (`n + i` adjacent to `N(i)`), and `2n` the apex adjacent to every
/// shadow. Order `2n + 1`; raises χ by one and keeps triangle-freeness.
pub fn mycielski(g: &Graph) -> Graph {
    let n = g.order();
    let mut h = Graph::new(2 * n + 1);
    for (u, v) in g.edges() {
        h.add_edge(u, v);
        h.add_edge(n + u, v);
        h.add_edge(u, n + v);
    }
    for i in 0..n {
        h.add_edge(n + i, 2 * n);
    }
    h
}
