use proptest::prelude::*;
use regraph::anneal::AnnealChain;
use regraph::io::{read_adjacency_csv, write_adjacency_csv};
use regraph::mcsa::{coupled_annealing, McsaConfig, StopRule};
use regraph::randomize::{n_switch_neighbor, random_regular_graph, switch_in_place};
use regraph::{seeded_rng, RegularGraph};

fn valid_pair() -> impl Strategy<Value = (usize, usize)> {
    (5usize..40, 2usize..8).prop_filter_map("n > d and nd even", |(n, d)| {
        (d < n && n * d % 2 == 0).then_some((n, d))
    })
}

fn assert_invariants(g: &RegularGraph, d: usize) {
    let m = g.matrix();
    assert!(m.is_symmetric());
    assert!(m.is_binary());
    assert!(!m.has_loops());
    assert_eq!(m.is_regular(), Some(d));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn switches_preserve_invariants((n, d) in valid_pair(), seed in any::<u64>()) {
        let mut rng = seeded_rng(seed);
        let mut g = RegularGraph::circulant(n, d).unwrap();
        for _ in 0..50 {
            let before = g.edge_count();
            switch_in_place(&mut g, &mut rng);
            prop_assert_eq!(g.edge_count(), before);
            assert_invariants(&g, d);
        }
    }

    #[test]
    fn neighbor_moves_preserve_invariants((n, d) in valid_pair(), width in 1usize..6, seed in any::<u64>()) {
        let g = RegularGraph::circulant(n, d).unwrap();
        let h = n_switch_neighbor(&g, width, &mut seeded_rng(seed));
        assert_invariants(&h, d);
    }

    #[test]
    fn csv_round_trip((n, d) in valid_pair(), seed in any::<u64>()) {
        let g = random_regular_graph(n, d, 2 * n * d, &mut seeded_rng(seed)).unwrap().graph;
        let mut buf = Vec::new();
        write_adjacency_csv(&g, &mut buf).unwrap();
        prop_assert_eq!(buf.len(), n * 2 * n);
        prop_assert_eq!(read_adjacency_csv(buf.as_slice()).unwrap(), g);
    }

    #[test]
    fn anneal_best_is_monotone((n, d) in valid_pair(), seed in any::<u64>()) {
        let g = RegularGraph::circulant(n, d).unwrap();
        let mut chain = AnnealChain::new(g, 0.5, 0.9, 1).unwrap();
        let mut rng = seeded_rng(seed);
        let mut prev = chain.best_lambda();
        for _ in 0..5 {
            chain.partial_anneal(4, &mut rng);
            prop_assert!(chain.best_lambda() <= prev);
            prev = chain.best_lambda();
            prop_assert!((regraph::spectrum::lambda2(chain.best_graph()) - prev).abs() < 1e-12);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn mcsa_trace_is_monotone((n, d) in valid_pair(), seed in any::<u64>()) {
        let config = McsaConfig {
            chains: 4,
            max_steps: Some(15),
            stop_rule: StopRule::None,
            seed,
            ..McsaConfig::new(n, d)
        };
        let out = coupled_annealing(&config).unwrap();
        let trace = &out.record.trace;
        prop_assert_eq!(trace[0].step, 0);
        for w in trace.windows(2) {
            prop_assert!(w[1].best_lambda2 <= w[0].best_lambda2);
            prop_assert_eq!(w[1].step, w[0].step + 1);
        }
        prop_assert_eq!(trace.last().unwrap().best_lambda2, out.best_lambda);
        assert_invariants(&out.best_graph, d);
    }
}
