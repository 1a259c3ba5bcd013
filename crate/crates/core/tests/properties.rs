use domicert::domination::{
    gamma_ev_tree_fast, is_ev_dominating_set, is_paired_dominating_set, solve_ev, solve_pr,
    spanned_vertices,
};
use domicert::graph::{canonical_code, emit_graph6, has_perfect_matching, parse_graph6, perfect_matchings};
use domicert::lemma::{detangle, detangle_violations, sharing_pairs};
use domicert::{Edge, Graph, VertexSet};
use proptest::prelude::*;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let all = pairs(n);
        proptest::collection::vec(any::<bool>(), all.len()).prop_map(move |bits| {
            let edges: Vec<_> = all.iter().zip(&bits).filter(|(_, &b)| b).map(|(&p, _)| p).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Random graph on 2..=max_n vertices with every isolated vertex joined to its successor.
fn isolate_free(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("need two vertices", |g| g.n() >= 2).prop_map(|g| {
        let n = g.n();
        let mut edges: Vec<_> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        for v in 0..n {
            if g.degree(v) == 0 {
                edges.push((v, (v + 1) % n));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    })
}

fn tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<prop::sample::Index>(), n - 1).prop_map(move |parents| {
            let edges: Vec<_> = parents.iter().enumerate().map(|(i, p)| (p.index(i + 1), i + 1)).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn brute_matching_count(g: &Graph) -> usize {
    fn go(g: &Graph, free: &mut Vec<bool>) -> usize {
        let Some(v) = free.iter().position(|&f| f) else {
            return 1;
        };
        free[v] = false;
        let mut total = 0;
        for &w in g.neighbors(v) {
            if free[w] {
                free[w] = false;
                total += go(g, free);
                free[w] = true;
            }
        }
        free[v] = true;
        total
    }
    go(g, &mut vec![true; g.n()])
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let text = emit_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn canonical_code_ignores_labels(
        (g, perm) in graph(10).prop_flat_map(|g| {
            let ids: Vec<usize> = (0..g.n()).collect();
            (Just(g), Just(ids).prop_shuffle())
        })
    ) {
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&g.permuted(&perm)).unwrap());
    }

    #[test]
    fn matchings_agree_with_brute_force(g in graph(8)) {
        let count = brute_matching_count(&g);
        prop_assert_eq!(has_perfect_matching(&g).unwrap(), count > 0);
        let listed = perfect_matchings(&g).unwrap();
        prop_assert_eq!(listed.len(), count);
        for m in &listed {
            prop_assert_eq!(spanned_vertices(m).len(), g.n());
        }
    }

    #[test]
    fn paired_family_invariants(g in isolate_free(7)) {
        let paired = solve_pr(&g).unwrap();
        let ev = solve_ev(&g).unwrap();
        prop_assert_eq!(paired.gamma % 2, 0);
        for d in &paired.sets {
            prop_assert_eq!(d.len(), paired.gamma);
            prop_assert!(is_paired_dominating_set(&g, d).unwrap());
            let (sub, ids) = g.induced_subgraph(d).unwrap();
            for local in perfect_matchings(&sub).unwrap() {
                let m = local.iter().map(|e| Edge::new(ids[e.u], ids[e.v])).collect();
                prop_assert!(is_ev_dominating_set(&g, &m));
                prop_assert!(ev.sets.contains(&m));
            }
        }
        // Nothing smaller pairs up.
        let n = g.n();
        for mask in 0u64..1 << n {
            if (mask.count_ones() as usize) < paired.gamma {
                prop_assert!(!is_paired_dominating_set(&g, &VertexSet::from_mask(mask)).unwrap());
            }
        }
    }

    #[test]
    fn paired_is_twice_ev(g in isolate_free(8)) {
        prop_assert_eq!(solve_pr(&g).unwrap().gamma, 2 * solve_ev(&g).unwrap().gamma);
    }

    #[test]
    fn unique_ev_forces_unique_paired(g in isolate_free(8)) {
        if solve_ev(&g).unwrap().is_unique() {
            prop_assert!(solve_pr(&g).unwrap().is_unique());
        }
    }

    #[test]
    fn unique_paired_means_disjoint_ev_sets(g in isolate_free(8)) {
        if solve_pr(&g).unwrap().is_unique() {
            for m in &solve_ev(&g).unwrap().sets {
                prop_assert_eq!(sharing_pairs(m), 0, "{}", m);
            }
        }
    }

    #[test]
    fn detangle_clears_sharing(g in isolate_free(8)) {
        for m in solve_ev(&g).unwrap().sets.iter().filter(|m| sharing_pairs(m) > 0) {
            let result = detangle(&g, m).unwrap();
            prop_assert!(detangle_violations(&g, m, &result).is_empty());
            prop_assert_eq!(sharing_pairs(&result.left), 0);
            prop_assert_eq!(result.left.len(), m.len());
        }
    }

    #[test]
    fn tree_dp_matches_search(t in tree(14)) {
        prop_assert_eq!(gamma_ev_tree_fast(&t).unwrap(), solve_ev(&t).unwrap().gamma);
    }
}
