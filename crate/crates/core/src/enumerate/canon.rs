//! Canonical labelling for small graphs (at most 64 vertices) by
//! equitable-partition refinement and individualization, keeping the
//! lexicographically largest relabelled adjacency matrix over all leaves.
//! Automorphisms discovered at equal leaves prune sibling branches.

use crate::graph::Graph;

/// A canonical labelling and the adjacency rows it produces.
///
/// Two graphs are isomorphic iff their certificates are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    /// `labelling[p]` is the vertex placed at position `p`.
    pub labelling: Vec<usize>,
    /// Row `p` has bit `q` set iff positions `p` and `q` are adjacent.
    pub certificate: Vec<u64>,
}

impl CanonicalForm {
    /// The graph relabelled canonically.
    pub fn graph(&self) -> Graph {
        let n = self.certificate.len();
        let mut g = Graph::new(n);
        for (p, &row) in self.certificate.iter().enumerate() {
            for q in p + 1..n {
                if row >> q & 1 == 1 {
                    g.add_edge(p, q);
                }
            }
        }
        g
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.order();
    assert!(n <= 64, "canonical labelling supports at most 64 vertices");
    let adj: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();
    if n == 0 {
        return CanonicalForm { labelling: Vec::new(), certificate: Vec::new() };
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut search = Search { adj, best: None, autos: Vec::new() };
    search.descend(vec![all], &mut Vec::new());
    let (certificate, labelling) = search.best.expect("the search reaches at least one leaf");
    CanonicalForm { labelling, certificate }
}

struct Search {
    adj: Vec<u64>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

/// Splits cells by neighbour counts into every cell until nothing changes.
/// Sub-cells are ordered by their count vectors, so the result depends only
/// on the graph and the input partition.
fn refine(adj: &[u64], mut cells: Vec<u64>) -> Vec<u64> {
    loop {
        let mut next = Vec::with_capacity(cells.len());
        let mut changed = false;
        for &cell in &cells {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            let mut groups: Vec<(Vec<u32>, u64)> = Vec::new();
            let mut bits = cell;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let sig: Vec<u32> = cells.iter().map(|&c| (adj[v] & c).count_ones()).collect();
                match groups.iter_mut().find(|(s, _)| *s == sig) {
                    Some((_, m)) => *m |= 1 << v,
                    None => groups.push((sig, 1 << v)),
                }
            }
            if groups.len() > 1 {
                changed = true;
                groups.sort();
            }
            next.extend(groups.into_iter().map(|(_, m)| m));
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

impl Search {
    fn descend(&mut self, cells: Vec<u64>, prefix: &mut Vec<usize>) {
        let cells = refine(&self.adj, cells);
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            self.leaf(&cells);
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        let mut bits = cells[t];
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if !explored.is_empty() && self.equivalent_to_any(v, &explored, prefix) {
                continue;
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(1 << v);
            child.push(cells[t] & !(1 << v));
            child.extend_from_slice(&cells[t + 1..]);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    /// Whether an automorphism fixing `prefix` pointwise maps `v` into `explored`.
    fn equivalent_to_any(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let n = self.adj.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in &self.autos {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            for (x, &y) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == root)
    }

    fn leaf(&mut self, cells: &[u64]) {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = vec![0usize; lab.len()];
        for (p, &v) in lab.iter().enumerate() {
            pos[v] = p;
        }
        let cert: Vec<u64> = lab
            .iter()
            .map(|&v| {
                let mut row = 0u64;
                let mut bits = self.adj[v];
                while bits != 0 {
                    let w = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    row |= 1 << pos[w];
                }
                row
            })
            .collect();
        match &self.best {
            Some((best, _)) if cert < *best => {}
            Some((best, best_lab)) if cert == *best => {
                let mut gamma = vec![0; lab.len()];
                for (p, &v) in best_lab.iter().enumerate() {
                    gamma[v] = lab[p];
                }
                self.autos.push(gamma);
            }
            _ => self.best = Some((cert, lab)),
        }
    }
}
