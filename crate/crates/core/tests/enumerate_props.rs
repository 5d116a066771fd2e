mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::graph_from_bits;
use girthcolor::enumerate::{canonical_form, generate, generate_all, GenerationConstraints};
use girthcolor::graph::contains_cycle_shorter_than;
use girthcolor::Graph;
use proptest::prelude::*;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Number of isomorphism classes of graphs on `n` vertices by Burnside's
/// lemma: average over permutations of 2^(cycles on vertex pairs).
fn burnside_count(n: usize) -> u64 {
    let perms = permutations(n);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let index: BTreeMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut total: u128 = 0;
    for p in &perms {
        let mut seen = vec![false; pairs.len()];
        let mut cycles = 0u32;
        for start in 0..pairs.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                let (u, v) = pairs[i];
                let (a, b) = (p[u], p[v]);
                i = index[&(a.min(b), a.max(b))];
            }
        }
        total += 1u128 << cycles;
    }
    (total / perms.len() as u128) as u64
}

/// Smallest edge bit string over all relabellings.
fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let n = g.order();
    perms
        .iter()
        .map(|p| {
            let mut code = 0u64;
            for (u, v) in g.edges() {
                let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                code |= 1 << (a * n + b);
            }
            code
        })
        .min()
        .unwrap_or(0)
}

/// One representative per class of all graphs on exactly `n` vertices.
fn brute_force_classes(n: usize) -> Vec<Graph> {
    let perms = permutations(n);
    let pairs = n * n.saturating_sub(1) / 2;
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for code in 0u64..1 << pairs {
        let bits: Vec<bool> = (0..pairs.max(1)).map(|i| code >> i & 1 == 1).collect();
        let g = graph_from_bits(n, &bits);
        if seen.insert(brute_canonical(&g, &perms)) {
            reps.push(g);
        }
    }
    reps
}

#[test]
fn unconstrained_counts_match_burnside() {
    let counts = generate(&GenerationConstraints::new(7), |_| {}).unwrap();
    for n in 1..=7 {
        assert_eq!(counts.at(n), burnside_count(n), "order {n}");
    }
}

#[test]
fn generated_graphs_are_pairwise_non_isomorphic() {
    let perms = permutations(7);
    let all = generate_all(&GenerationConstraints::new(7).with_min_order(7)).unwrap();
    let forms: BTreeSet<u64> = all.iter().map(|g| brute_canonical(g, &perms)).collect();
    assert_eq!(forms.len(), all.len());
}

fn satisfies(g: &Graph, girth_min: usize, min_deg: usize, max_deg: Option<usize>) -> bool {
    let d = g.degree_summary();
    !contains_cycle_shorter_than(g, girth_min) && d.min_degree >= min_deg && max_deg.is_none_or(|m| d.max_degree <= m)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn constrained_counts_match_brute_force(
        girth_min in 3usize..=6,
        min_deg in 0usize..=2,
        max_deg in prop::option::of(1usize..=4),
        max_n in 1usize..=6,
    ) {
        prop_assume!(max_deg.is_none_or(|m| m >= min_deg));
        let c = GenerationConstraints::new(max_n).with_girth(girth_min).with_degrees(min_deg, max_deg);
        let counts = generate(&c, |g| assert!(satisfies(g, girth_min, min_deg, max_deg))).unwrap();
        for n in 1..=max_n {
            let expected = brute_force_classes(n).iter().filter(|g| satisfies(g, girth_min, min_deg, max_deg)).count() as u64;
            prop_assert_eq!(counts.at(n), expected, "order {}", n);
        }
    }
}

#[test]
fn canonical_forms_identify_relabellings() {
    let perms = permutations(6);
    for g in brute_force_classes(5) {
        let form = canonical_form(&g).certificate;
        for p in perms.iter().step_by(37) {
            let p: Vec<usize> = p.iter().copied().filter(|&x| x < 5).collect();
            let h = Graph::from_edges(5, g.edges().map(|(u, v)| (p[u], p[v]))).unwrap();
            assert_eq!(canonical_form(&h).certificate, form);
        }
    }
}
