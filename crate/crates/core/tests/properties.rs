use proptest::prelude::*;

use vc3::oracle::{is_vertex_cover, min_vc_bruteforce};
use vc3::reductions::reduce_to_fixpoint;
use vc3::structure::{circuit_rank, strip_lines, tau};
use vc3::{
    min_vc_forest, nt_partition, vc_decide, vc_minimum, Answer, Graph, ReductionTrace, RuleSet,
    SearchConfig, VertexId,
};

fn graph(max_n: u32, max_edges: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_edges).prop_map(move |pairs| {
            let edges: Vec<(VertexId, VertexId)> = pairs
                .into_iter()
                .filter(|(a, b)| a != b)
                .map(|(a, b)| (VertexId(a), VertexId(b)))
                .collect();
            Graph::from_parts((0..n).map(VertexId), edges).unwrap()
        })
    })
}

/// Max-degree-3 graphs: edges proposed in order, kept while both ends have
/// room.
fn sparse_graph(max_n: u32) -> impl Strategy<Value = Graph> {
    graph(max_n, 3 * max_n as usize).prop_map(|g| {
        let mut h = Graph::from_parts(g.vertices(), []).unwrap();
        for (a, b) in g.edges() {
            if h.degree(a) < 3 && h.degree(b) < 3 {
                h.add_edge(a, b).unwrap();
            }
        }
        h
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn tau_is_circuit_rank(g in graph(24, 60)) {
        prop_assert!(g.check_invariants());
        let t = tau(&g);
        prop_assert_eq!(t + g.num_vertices(), g.num_edges() + g.num_components());
        prop_assert_eq!(t, circuit_rank(&g));
        prop_assert_eq!(tau(&strip_lines(&g)), t);
        prop_assert_eq!(t == 0, g.is_forest());
    }

    #[test]
    fn vertex_removal_never_raises_tau(g in graph(20, 50), pick in any::<prop::sample::Index>()) {
        let vs: Vec<VertexId> = g.vertices().collect();
        let v = vs[pick.index(vs.len())];
        let h = g.without(&[v]);
        prop_assert!(h.check_invariants());
        prop_assert!(tau(&h) <= tau(&g));
    }

    #[test]
    fn fixpoint_lifts_optimal_covers(g in graph(14, 30), struction in any::<bool>()) {
        let (opt, _) = min_vc_bruteforce(&g).unwrap();
        let mut h = g.clone();
        let mut trace = ReductionTrace::new();
        reduce_to_fixpoint(&mut h, &mut trace, RuleSet { domination: true, struction }).unwrap();
        prop_assert!(h.check_invariants());
        prop_assert!(h.is_empty() || h.min_degree() >= 3);
        let (ropt, rcover) = min_vc_bruteforce(&h).unwrap();
        prop_assert_eq!(opt, ropt + trace.k_delta);
        let lifted = trace.lift_cover(&h, &rcover).unwrap();
        prop_assert!(is_vertex_cover(&g, &lifted));
        prop_assert_eq!(lifted.len(), opt);
    }

    #[test]
    fn lp_bound_is_a_lower_bound(g in graph(14, 30)) {
        let (opt, _) = min_vc_bruteforce(&g).unwrap();
        let p = nt_partition(&g);
        prop_assert!(p.lower_bound() <= opt);
        prop_assert!(p.doubled_lp_value() <= 2 * opt);
        for &z in &p.zeros {
            prop_assert!(g.neighbors(z).iter().all(|w| p.ones.contains(w)));
        }
    }

    #[test]
    fn search_matches_oracle(g in graph(16, 40), struction in any::<bool>(), lp in any::<bool>()) {
        let (opt, _) = min_vc_bruteforce(&g).unwrap();
        let cfg = SearchConfig { rules: RuleSet { domination: true, struction }, lp_bound: lp, ..SearchConfig::minimize() };
        let m = vc_minimum(&g, &cfg).unwrap();
        prop_assert_eq!(m.size, opt);
        prop_assert!(is_vertex_cover(&g, &m.cover));
        let yes = vc_decide(&g, opt as i64, &SearchConfig { rules: cfg.rules, ..SearchConfig::decide() }).unwrap();
        prop_assert_eq!(yes.answer, Answer::Yes);
        if opt > 0 {
            let no = vc_decide(&g, opt as i64 - 1, &SearchConfig::decide()).unwrap();
            prop_assert_eq!(no.answer, Answer::No);
            prop_assert!(no.cover.is_none());
        }
    }

    #[test]
    fn branches_respect_tau(g in sparse_graph(30)) {
        let cfg = SearchConfig {
            instrument: true,
            kernelize: false,
            rules: RuleSet { domination: false, struction: false },
            ..SearchConfig::decide()
        };
        let m = vc_minimum(&g, &SearchConfig::minimize()).unwrap();
        let v = vc_decide(&g, m.size as i64, &cfg).unwrap();
        prop_assert_eq!(v.answer, Answer::Yes);
        prop_assert!(v.stats.tau_trajectory_ok);
        prop_assert!(v.stats.tau_drop_ok);
        prop_assert!(v.stats.estimate_ok);
        let again = vc_decide(&g, m.size as i64, &cfg).unwrap();
        prop_assert_eq!(&again.cover, &v.cover);
        prop_assert!(again.stats.same_counters(&v.stats));
    }

    #[test]
    fn forests_are_solved_exactly(g in graph(16, 15)) {
        let forest = {
            let mut f = Graph::from_parts(g.vertices(), []).unwrap();
            for (a, b) in g.edges() {
                f.add_edge(a, b).unwrap();
                if !f.is_forest() {
                    f.remove_edge(a, b).unwrap();
                }
            }
            f
        };
        let (size, cover) = min_vc_forest(&forest).unwrap();
        prop_assert!(is_vertex_cover(&forest, &cover));
        prop_assert_eq!(size, min_vc_bruteforce(&forest).unwrap().0);
    }
}
