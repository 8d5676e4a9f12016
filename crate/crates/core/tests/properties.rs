use proptest::prelude::*;

use transgraph::formulas::{self, DegreeRole, BOUNDED};
use transgraph::{build, generate, indices, parse_edge_list, Family, Graph, Role, TransformKind};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_kind() -> impl Strategy<Value = TransformKind> {
    proptest::sample::select(TransformKind::ALL.to_vec())
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(
        g.order(),
        g.edges().iter().map(|&(u, v)| (perm[u], perm[v])),
    )
    .unwrap()
}

fn graph_and_permutation() -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(7).prop_flat_map(|g| {
        let ids: Vec<usize> = (0..g.order()).collect();
        (Just(g), Just(ids).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in arb_graph(8)) {
        let c = g.complement();
        prop_assert_eq!(c.complement(), g.clone());
        for v in 0..g.order() {
            prop_assert_eq!(c.degree(v), g.order() - 1 - g.degree(v));
        }
        prop_assert_eq!(g.size() + c.size(), g.order() * (g.order() - 1) / 2);
    }

    #[test]
    fn edge_list_round_trips(g in arb_graph(8)) {
        let text = g.to_edge_list();
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g.clone());
        prop_assert_eq!(text.parse::<Graph>().unwrap().content_hash(), g.content_hash());
    }

    #[test]
    fn indices_ignore_labels((g, perm) in graph_and_permutation()) {
        let h = relabel(&g, &perm);
        prop_assert_eq!(indices::nk(&g), indices::nk(&h));
        prop_assert_eq!(indices::m1(&g), indices::m1(&h));
        prop_assert_eq!(indices::m2(&g), indices::m2(&h));
        prop_assert_eq!(indices::pi2(&g), indices::pi2(&h));
        prop_assert_eq!(indices::pi1star(&g), indices::pi1star(&h));
        for kind in TransformKind::ALL {
            prop_assert_eq!(indices::nk(&build(&g, kind).graph), indices::nk(&build(&h, kind).graph));
        }
    }

    #[test]
    fn closed_degrees_match_construction(g in arb_graph(7), kind in arb_kind()) {
        let (n, m) = (g.order(), g.size());
        let t = build(&g, kind);
        for v in 0..n {
            let closed = formulas::closed_degree(kind, DegreeRole::Vertex { d: g.degree(v) }, n, m);
            prop_assert_eq!(closed, t.degree_of(Role::Vertex(v)).unwrap() as i64, "{} vertex {}", kind, v);
        }
        for &(u, w) in g.edges() {
            let role = DegreeRole::Edge { du: g.degree(u), dv: g.degree(w) };
            let closed = formulas::closed_degree(kind, role, n, m);
            prop_assert_eq!(closed, t.degree_of(Role::Edge(u, w)).unwrap() as i64, "{} edge {}-{}", kind, u, w);
        }
    }

    #[test]
    fn closed_form_matches_oracle_on_random_graphs(
        n in 2usize..=12,
        density in 0.0f64..=1.0,
        seed in any::<u64>(),
        kind in arb_kind(),
    ) {
        let m = ((n * (n - 1) / 2) as f64 * density).round() as usize;
        let g = generate(Family::Gnm { n, m, seed }).unwrap();
        prop_assert_eq!(g.size(), m);
        let oracle = indices::nk(&build(&g, kind).graph);
        prop_assert_eq!(formulas::nk_exact(kind, &g).unwrap(), oracle);
    }

    #[test]
    fn bounds_dominate_exact_values(g in arb_graph(8)) {
        prop_assume!(g.size() >= 1);
        for kind in BOUNDED {
            let b = formulas::nk_bound(kind, &g).unwrap();
            prop_assert!(b.outcome() != formulas::BoundOutcome::Violated, "{} violated", kind);
            if g.is_regular().is_some() {
                prop_assert_eq!(b.outcome(), formulas::BoundOutcome::Tight);
            }
        }
    }
}
