use thiserror::Error;

use crate::coloring::{decide_k_colorable, ColorBudget, Decision, PaletteConstraint};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DroogendijkError {
    #[error("vertices {0} and {1} of S are adjacent")]
    SNotIndependent(usize, usize),
    #[error("vertex {vertex} of S is out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("vertex {0} is listed twice in S")]
    Duplicate(usize),
    #[error("S must contain at least one vertex")]
    EmptySet,
    #[error("budget exhausted before the condition was decided")]
    BudgetExhausted,
}

/// The partition `S | A | B` of `V(G)` and the vertex numbering of `G*`.
///
/// In `G*` the originals keep their labels, `a_prime[i]` copies `a[i]`,
/// `b_prime[i]` copies `b[i]`, and the two apexes come last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DroogendijkParts {
    pub s: Vec<usize>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub a_prime: Vec<usize>,
    pub b_prime: Vec<usize>,
    pub alpha: usize,
    pub beta: usize,
}

impl DroogendijkParts {
    /// Order of the constructed graph, `2n + 2 - |S|`.
    pub fn constructed_order(&self) -> usize {
        self.beta + 1
    }
}

/// Splits `V(G)` into `S`, `A = N(S)` and the remaining `B`, all ascending.
pub fn droogendijk_parts(g: &Graph, s: &[usize]) -> Result<DroogendijkParts, DroogendijkError> {
    let n = g.order();
    if s.is_empty() {
        return Err(DroogendijkError::EmptySet);
    }
    let mut in_s = vec![false; n];
    for &v in s {
        if v >= n {
            return Err(DroogendijkError::VertexOutOfRange { vertex: v, order: n });
        }
        if std::mem::replace(&mut in_s[v], true) {
            return Err(DroogendijkError::Duplicate(v));
        }
    }
    for (i, &u) in s.iter().enumerate() {
        if let Some(&v) = s[i + 1..].iter().find(|&&v| g.has_edge(u, v)) {
            return Err(DroogendijkError::SNotIndependent(u, v));
        }
    }
    let mut in_a = vec![false; n];
    for &v in s {
        for w in g.neighbors(v) {
            in_a[w] = true;
        }
    }
    let mut sorted_s = s.to_vec();
    sorted_s.sort_unstable();
    let a: Vec<usize> = (0..n).filter(|&v| in_a[v]).collect();
    let b: Vec<usize> = (0..n).filter(|&v| !in_a[v] && !in_s[v]).collect();
    let a_prime: Vec<usize> = (n..n + a.len()).collect();
    let b_prime: Vec<usize> = (n + a.len()..n + a.len() + b.len()).collect();
    let alpha = n + a.len() + b.len();
    Ok(DroogendijkParts { s: sorted_s, a, b, a_prime, b_prime, alpha, beta: alpha + 1 })
}

/// Whether no `(k-1)`-colouring of `G - S` uses only `k-2` colours on `B`.
///
/// Decided as a single palette-constrained colourability question on
/// `G - S`: vertices of `B` may use colours `0..k-2`, those of `A` all of
/// `0..k-1`. A colouring existing means the condition fails. With `B` empty
/// this reads as `G - S` not being `(k-1)`-colourable.
pub fn droogendijk_condition_holds(
    g: &Graph,
    s: &[usize],
    k: usize,
    budget: &ColorBudget,
) -> Result<bool, DroogendijkError> {
    let parts = droogendijk_parts(g, s)?;
    if !parts.b.is_empty() && k < 3 {
        return Ok(true);
    }
    if k == 0 {
        return Ok(true);
    }
    let mut keep: Vec<usize> = parts.a.iter().chain(&parts.b).copied().collect();
    keep.sort_unstable();
    let h = g.induced_subgraph(&keep);
    let mut palette = PaletteConstraint::unrestricted(h.order(), k - 1).expect("palette size within bitmask range");
    let mut in_b = vec![false; g.order()];
    for &v in &parts.b {
        in_b[v] = true;
    }
    for (i, &v) in keep.iter().enumerate() {
        if in_b[v] {
            palette.restrict(i, 0..k - 2).expect("k >= 3 leaves B a nonempty palette");
        }
    }
    match decide_k_colorable(&h, k - 1, Some(&palette), budget) {
        Decision::Colorable(_) => Ok(false),
        Decision::NotColorable => Ok(true),
        Decision::BudgetExhausted => Err(DroogendijkError::BudgetExhausted),
    }
}

/// Builds `G*` on `2n + 2 - |S|` vertices: copies `a'` of `A` and `b'` of
/// `B` joined to the neighbourhoods of their originals, an apex `α` joined
/// to `S ∪ B'` and an apex `β` joined to `A' ∪ B'`.
pub fn droogendijk_construct(g: &Graph, s: &[usize]) -> Result<Graph, DroogendijkError> {
    let parts = droogendijk_parts(g, s)?;
    Ok(build(g, &parts))
}

pub(crate) fn build(g: &Graph, parts: &DroogendijkParts) -> Graph {
    let mut h = Graph::new(parts.constructed_order());
    for (u, v) in g.edges() {
        h.add_edge(u, v);
    }
    let copies = parts.a.iter().zip(&parts.a_prime).chain(parts.b.iter().zip(&parts.b_prime));
    for (&orig, &copy) in copies {
        for w in g.neighbors(orig) {
            h.add_edge(copy, w);
        }
    }
    for &v in parts.s.iter().chain(&parts.b_prime) {
        h.add_edge(parts.alpha, v);
    }
    for &v in parts.a_prime.iter().chain(&parts.b_prime) {
        h.add_edge(parts.beta, v);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{chromatic_number, ChromaticNumber};

    #[test]
    fn nine_cycle_parts() {
        let p = droogendijk_parts(&Graph::cycle(9), &[3, 0]).unwrap();
        assert_eq!(p.s, vec![0, 3]);
        assert_eq!(p.a, vec![1, 2, 4, 8]);
        assert_eq!(p.b, vec![5, 6, 7]);
        assert_eq!(p.a_prime, vec![9, 10, 11, 12]);
        assert_eq!(p.b_prime, vec![13, 14, 15]);
        assert_eq!((p.alpha, p.beta), (16, 17));
    }

    #[test]
    fn rejects_bad_sets() {
        let c5 = Graph::cycle(5);
        assert_eq!(droogendijk_parts(&c5, &[0, 1]), Err(DroogendijkError::SNotIndependent(0, 1)));
        assert_eq!(droogendijk_parts(&c5, &[0, 0]), Err(DroogendijkError::Duplicate(0)));
        assert_eq!(droogendijk_parts(&c5, &[7]), Err(DroogendijkError::VertexOutOfRange { vertex: 7, order: 5 }));
        assert_eq!(droogendijk_parts(&c5, &[]), Err(DroogendijkError::EmptySet));
        let p = droogendijk_parts(&c5, &[0]).unwrap();
        assert_eq!((p.a, p.b), (vec![1, 4], vec![2, 3]));
    }

    #[test]
    fn nine_cycle_counterexample() {
        let c9 = Graph::cycle(9);
        let budget = ColorBudget::unlimited();
        assert!(droogendijk_condition_holds(&c9, &[0, 3], 3, &budget).unwrap());
        let h = droogendijk_construct(&c9, &[0, 3]).unwrap();
        assert_eq!(h.order(), 18);
        assert!(h.is_triangle_free());
        assert_eq!(chromatic_number(&h, &budget), ChromaticNumber::Exact(3));
    }

    #[test]
    fn c5_single_vertex() {
        let h = droogendijk_construct(&Graph::cycle(5), &[0]).unwrap();
        assert_eq!(h.order(), 11);
        assert!(h.is_triangle_free());
        assert!(droogendijk_condition_holds(&Graph::cycle(5), &[0], 3, &ColorBudget::unlimited()).unwrap());
        assert_eq!(chromatic_number(&h, &ColorBudget::unlimited()), ChromaticNumber::Exact(4));
    }

    #[test]
    fn condition_on_c5_pair() {
        let c5 = Graph::cycle(5);
        let holds = droogendijk_condition_holds(&c5, &[0, 2], 3, &ColorBudget::unlimited()).unwrap();
        assert_eq!(holds, brute_force_condition(&c5, &[0, 2], 3));
    }

    /// Enumerates every `(k-1)`-colouring of `G - S` and looks for one that
    /// uses only `0..k-2` on `B`.
    pub(crate) fn brute_force_condition(g: &Graph, s: &[usize], k: usize) -> bool {
        let p = droogendijk_parts(g, s).unwrap();
        let rest: Vec<usize> = (0..g.order()).filter(|v| !p.s.contains(v)).collect();
        let colours = k - 1;
        let total = colours.pow(rest.len() as u32);
        for code in 0..total {
            let mut col = vec![usize::MAX; g.order()];
            let mut x = code;
            for &v in &rest {
                col[v] = x % colours;
                x /= colours;
            }
            let proper = g.edges().all(|(u, v)| col[u] == usize::MAX || col[v] == usize::MAX || col[u] != col[v]);
            if proper && p.b.iter().all(|&v| col[v] + 2 < k) {
                return false;
            }
        }
        true
    }
}
