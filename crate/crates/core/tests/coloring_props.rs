mod common;

use common::{arb_graph, brute_force_chromatic, brute_force_colourable};
use girthcolor::coloring::{
    chromatic_number, decide_k_colorable, decide_k_colorable_plain, random_colourable, vertex_criticality, Criticality,
    LocalSearchParams,
};
use girthcolor::{ChromaticNumber, ColorBudget, Decision, Graph, PaletteConstraint};
use proptest::prelude::*;

fn unlimited() -> ColorBudget {
    ColorBudget::unlimited()
}

/// Palette where vertex `v` keeps colour `c` iff bit `v * 4 + c` of `mask`
/// is set; a vertex that would lose every colour keeps them all.
fn palette_from_mask(n: usize, k: usize, mask: u64) -> (PaletteConstraint, Vec<Vec<bool>>) {
    let mut p = PaletteConstraint::unrestricted(n, k).unwrap();
    let mut allowed = vec![vec![true; k]; n];
    for (v, row) in allowed.iter_mut().enumerate() {
        let colours: Vec<usize> = (0..k).filter(|&c| mask >> ((v * 4 + c) % 64) & 1 == 1).collect();
        if !colours.is_empty() {
            for (c, slot) in row.iter_mut().enumerate() {
                *slot = colours.contains(&c);
            }
            p.restrict(v, colours).unwrap();
        }
    }
    (p, allowed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(3_000))]

    #[test]
    fn palette_constrained_solver_matches_brute_force(g in arb_graph(1..=7), k in 1usize..=4, mask in any::<u64>()) {
        let (palette, allowed) = palette_from_mask(g.order(), k, mask);
        let expected = brute_force_colourable(&g, k, Some(&allowed));
        let main = decide_k_colorable(&g, k, Some(&palette), &unlimited());
        let plain = decide_k_colorable_plain(&g, k, Some(&palette), &unlimited());
        prop_assert_eq!(main.is_colorable(), expected);
        prop_assert_eq!(plain.is_colorable(), expected);
        if let Decision::Colorable(c) = main {
            prop_assert!(c.validate(&g, Some(&palette)).is_ok());
        }
        // dropping the constraint can only help
        if expected {
            prop_assert!(decide_k_colorable(&g, k, None, &unlimited()).is_colorable());
        }
    }

    #[test]
    fn colourability_is_monotone_in_k(g in arb_graph(1..=9), k in 0usize..=5) {
        let here = decide_k_colorable(&g, k, None, &unlimited());
        let next = decide_k_colorable(&g, k + 1, None, &unlimited());
        prop_assert!(!here.is_colorable() || next.is_colorable());
    }

    #[test]
    fn chromatic_number_matches_brute_force(g in arb_graph(0..=8)) {
        prop_assert_eq!(chromatic_number(&g, &unlimited()), ChromaticNumber::Exact(brute_force_chromatic(&g)));
    }

    #[test]
    fn local_search_colourings_are_proper(g in arb_graph(1..=12), k in 1usize..=5, seed in any::<u64>()) {
        if let Some(c) = random_colourable(&g, k, &LocalSearchParams::default(), seed) {
            prop_assert!(c.validate(&g, None).is_ok());
            prop_assert!(c.colors_used() <= k);
        }
    }

    #[test]
    fn local_search_is_deterministic(g in arb_graph(1..=12), k in 2usize..=4, seed in any::<u64>()) {
        let p = LocalSearchParams::default();
        prop_assert_eq!(random_colourable(&g, k, &p, seed), random_colourable(&g, k, &p, seed));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn criticality_matches_brute_force(g in arb_graph(2..=8)) {
        let k = brute_force_chromatic(&g);
        let critical = (0..g.order()).all(|v| brute_force_chromatic(&g.delete_vertex(v)) < k);
        let verdict = vertex_criticality(&g, k, &unlimited());
        prop_assert_eq!(verdict == Criticality::Critical, critical);
    }
}

#[test]
fn budget_exhaustion_is_reported() {
    let g = girthcolor::fixtures::load("girth5-chi5-80").unwrap();
    assert_eq!(decide_k_colorable(&g, 4, None, &ColorBudget::with_nodes(5)), Decision::BudgetExhausted);
}

#[test]
fn odd_cycles_need_three_colours() {
    for n in [3, 5, 7, 9, 11] {
        assert!(!decide_k_colorable(&Graph::cycle(n), 2, None, &unlimited()).is_colorable());
        assert!(decide_k_colorable(&Graph::cycle(n + 1), 2, None, &unlimited()).is_colorable());
    }
}
