mod common;

use common::{arb_girth_graph, arb_graph, brute_force_chromatic, independent_from};
use girthcolor::coloring::chromatic_number;
use girthcolor::constructions::{droogendijk_condition_holds, droogendijk_construct, droogendijk_parts, mycielski};
use girthcolor::{ChromaticNumber, ColorBudget, Graph};
use proptest::prelude::*;

/// The condition straight from its definition: every `(k-1)`-colouring of
/// `G - S`, enumerated, must use a colour outside `0..k-2` on `B`.
fn condition_by_enumeration(g: &Graph, s: &[usize], k: usize) -> bool {
    let n = g.order();
    let in_s: Vec<bool> = (0..n).map(|v| s.contains(&v)).collect();
    let in_a: Vec<bool> = (0..n).map(|v| !in_s[v] && s.iter().any(|&x| g.has_edge(x, v))).collect();
    let rest: Vec<usize> = (0..n).filter(|&v| !in_s[v]).collect();
    let colours = k - 1;
    if colours == 0 {
        return !rest.is_empty();
    }
    let total = colours.pow(rest.len() as u32);
    for code in 0..total {
        let mut col = vec![usize::MAX; n];
        let mut x = code;
        for &v in &rest {
            col[v] = x % colours;
            x /= colours;
        }
        let proper = g.edges().all(|(u, v)| in_s[u] || in_s[v] || col[u] != col[v]);
        let b_small = rest.iter().filter(|&&v| !in_a[v]).all(|&v| col[v] + 2 < k);
        if proper && b_small {
            return false;
        }
    }
    true
}

fn exact(g: &Graph) -> usize {
    match chromatic_number(g, &ColorBudget::unlimited()) {
        ChromaticNumber::Exact(k) => k,
        other => panic!("unlimited budget left {other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn mycielski_raises_chromatic_number_by_one(g in arb_graph(2..=9)) {
        prop_assume!(g.size() > 0);
        let m = mycielski(&g);
        prop_assert_eq!(m.order(), 2 * g.order() + 1);
        prop_assert_eq!(m.size(), 3 * g.size() + g.order());
        prop_assert_eq!(m.is_triangle_free(), g.is_triangle_free());
        prop_assert_eq!(exact(&m), brute_force_chromatic(&g) + 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn droogendijk_order_and_triangle_freeness(g in arb_girth_graph(2..=12, 4), picks in prop::collection::vec(0usize..64, 1..6)) {
        let s = independent_from(&g, &picks);
        let parts = droogendijk_parts(&g, &s).unwrap();
        let h = droogendijk_construct(&g, &s).unwrap();
        prop_assert_eq!(h.order(), 2 * g.order() + 2 - s.len());
        prop_assert_eq!(parts.constructed_order(), h.order());
        prop_assert_eq!(parts.s.len() + parts.a.len() + parts.b.len(), g.order());
        prop_assert!(h.is_triangle_free());
        // G is an induced subgraph on the original labels
        prop_assert_eq!(h.induced_subgraph(&(0..g.order()).collect::<Vec<_>>()), g);
    }

    #[test]
    fn droogendijk_condition_matches_enumeration(g in arb_graph(2..=8), picks in prop::collection::vec(0usize..64, 1..4), k in 3usize..=4) {
        let s = independent_from(&g, &picks);
        let holds = droogendijk_condition_holds(&g, &s, k, &ColorBudget::unlimited()).unwrap();
        prop_assert_eq!(holds, condition_by_enumeration(&g, &s, k));
    }

    #[test]
    fn single_vertex_sets_qualify_on_triangle_free_graphs(
        cycle in prop::sample::select(vec![5usize, 7]),
        extra in 0usize..=5,
        picks in prop::collection::vec((0usize..64, 0usize..64), 0..60),
        v in 0usize..64,
    ) {
        // an odd cycle plus random triangle-free additions, so chi >= 3
        let n = cycle + extra;
        let mut g = Graph::new(n);
        for i in 0..cycle {
            g.add_edge(i, (i + 1) % cycle);
        }
        for (a, b) in picks {
            let (a, b) = (a % n, b % n);
            if a != b && !g.has_edge(a, b) && !girthcolor::graph::edge_closes_short_cycle(&g, a, b, 4) {
                g.add_edge(a, b);
            }
        }
        let k = exact(&g);
        let v = v % n;
        prop_assert!(droogendijk_condition_holds(&g, &[v], k, &ColorBudget::unlimited()).unwrap());
    }
}

#[test]
fn single_vertex_condition_needs_triangle_freeness() {
    // in K3 with S = {0}, colouring the two neighbours 0 and 1 leaves B empty
    // and G - S is 2-colourable, so the condition fails
    let k3 = Graph::complete(3);
    assert!(!droogendijk_condition_holds(&k3, &[0], 3, &ColorBudget::unlimited()).unwrap());
    assert!(!condition_by_enumeration(&k3, &[0], 3));
}

#[test]
fn nine_cycle_example() {
    let c9 = Graph::cycle(9);
    assert!(condition_by_enumeration(&c9, &[0, 3], 3));
    let h = droogendijk_construct(&c9, &[0, 3]).unwrap();
    assert_eq!(h.order(), 18);
    assert_eq!(exact(&h), 3);
}
