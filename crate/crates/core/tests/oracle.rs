use proptest::prelude::*;

use oneplanar_total::coloring::{
    exact_total_chromatic_number, find_total_coloring, verify_total_coloring, ChromaticOutcome,
};
use oneplanar_total::graph::Graph;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, on)| *on).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<_> = g.edges().map(|(a, b)| (perm[a], perm[b])).collect();
    Graph::from_edges(g.num_vertices(), &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn value_is_tight_and_witnessed(g in graph_strategy(6)) {
        let ChromaticOutcome::Exact { k, coloring } = exact_total_chromatic_number(&g, 12) else {
            return Err(TestCaseError::fail("budget exceeded"));
        };
        prop_assert!(k as usize > g.max_degree());
        prop_assert!(k as usize <= g.max_degree() + 2, "total coloring conjecture holds on tiny graphs");
        prop_assert!(verify_total_coloring(&g, &coloring, k).is_ok());
        prop_assert!(find_total_coloring(&g, k - 1).is_none());
    }

    #[test]
    fn value_ignores_labels(g in graph_strategy(6), seed in any::<u64>()) {
        let n = g.num_vertices();
        let mut perm: Vec<usize> = (0..n).collect();
        // cheap deterministic shuffle
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let a = exact_total_chromatic_number(&g, 12).value();
        let b = exact_total_chromatic_number(&relabel(&g, &perm), 12).value();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn known_values() {
    let cases = [
        (Graph::complete(4), 5),
        (Graph::complete(5), 5),
        (Graph::complete(6), 7),
        (Graph::complete_bipartite(3, 3), 5),
        (Graph::wheel(4), 5),
        (Graph::path(4), 3),
        (Graph::star(5), 6),
    ];
    for (g, want) in cases {
        assert_eq!(exact_total_chromatic_number(&g, 10).value(), Some(want));
    }
}

#[test]
fn budget_and_empty_graph() {
    assert_eq!(
        exact_total_chromatic_number(&Graph::complete(4), 4),
        ChromaticOutcome::ExceedsBudget { max_k: 4 }
    );
    assert_eq!(exact_total_chromatic_number(&Graph::new(0), 3).value(), Some(0));
    assert_eq!(exact_total_chromatic_number(&Graph::new(3), 3).value(), Some(1));
}
