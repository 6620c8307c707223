use super::*;
use crate::generate;
use crate::graph::{EdgeId, Vertex};
use crate::oracle::{self, CliqueSet, DEFAULT_BUDGET};
use proptest::prelude::*;

fn collect(g: &Graph, k: usize, algo: Algorithm, cfg: &ListConfig) -> (Vec<Vec<Vertex>>, ListReport) {
    let mut sink = CliqueSink::collector();
    let report = list(g, k, algo, cfg, &mut sink).unwrap();
    (sink.take_cliques(), report)
}

fn as_set(cliques: &[Vec<Vertex>]) -> CliqueSet {
    let set: CliqueSet = cliques.iter().cloned().collect();
    assert_eq!(set.len(), cliques.len(), "duplicate clique emitted");
    set
}

fn count_with(g: &Graph, k: usize, algo: Algorithm, cfg: &ListConfig) -> ListReport {
    list(g, k, algo, cfg, &mut CliqueSink::counter()).unwrap()
}

/// v1..v4 as 0..3 with edges v1v3, v1v4, v2v3, v2v4, v3v4.
fn four_vertex() -> Graph {
    Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

fn prune_variants() -> Vec<PruneConfig> {
    let mut out = Vec::new();
    for size in [false, true] {
        for rule1 in [false, true] {
            for rule2 in [false, true] {
                for et in [
                    EtPolicy::Disabled,
                    EtPolicy::Auto,
                    EtPolicy::Threshold(1),
                    EtPolicy::Threshold(4),
                ] {
                    out.push(PruneConfig {
                        size,
                        rule1,
                        rule2,
                        et,
                        audit: true,
                    });
                }
            }
        }
    }
    out
}

#[test]
fn complete_and_small_examples() {
    let cases: Vec<(Graph, usize, u64)> = vec![
        (generate::complete(5), 3, 10),
        (four_vertex(), 3, 2),
        (generate::complete(6), 4, 15),
        (generate::bipartite(4, 4), 3, 0),
        (generate::complete(5), 5, 1),
        (generate::complete(7), 5, 21),
        (generate::complete(8), 8, 1),
        (generate::complete(4), 5, 0),
    ];
    for (g, k, want) in &cases {
        for algo in Algorithm::ALL {
            assert_eq!(count_cliques(g, *k, algo).unwrap(), *want, "{algo} k={k}");
            let (cliques, report) = collect(g, *k, algo, &ListConfig::default());
            assert_eq!(cliques.len() as u64, *want);
            assert_eq!(report.count, *want);
        }
    }
}

#[test]
fn four_vertex_triangles() {
    for algo in Algorithm::ALL {
        let (cliques, _) = collect(&four_vertex(), 3, algo, &ListConfig::default());
        let set = as_set(&cliques);
        assert_eq!(set, [vec![0, 2, 3], vec![1, 2, 3]].into_iter().collect());
    }
}

#[test]
fn rejects_bad_arguments() {
    let g = generate::complete(4);
    for algo in Algorithm::ALL {
        assert!(matches!(count_cliques(&g, 2, algo), Err(Error::InvalidK(2))));
        let cfg = ListConfig {
            threads: 0,
            ..ListConfig::default()
        };
        assert!(list(&g, 3, algo, &cfg, &mut CliqueSink::counter()).is_err());
    }
}

#[test]
fn names_round_trip() {
    for algo in Algorithm::ALL {
        assert_eq!(algo.name().parse::<Algorithm>().unwrap(), algo);
    }
    assert!("ebbkc".parse::<Algorithm>().is_err());
    assert_eq!("ep".parse::<Scheme>().unwrap(), Scheme::EdgeParallel);
    assert!("xp".parse::<Scheme>().is_err());
}

#[test]
fn random_graphs_match_oracle() {
    for (n, p, seed) in [(25, 0.4, 7), (40, 0.3, 1), (30, 0.6, 2), (60, 0.15, 3)] {
        let g = generate::gnp(n, p, seed);
        for k in 3..=6 {
            let truth = oracle::brute_force_list(&g, k, DEFAULT_BUDGET).unwrap();
            for algo in Algorithm::ALL {
                let (cliques, _) = collect(&g, k, algo, &ListConfig::default());
                assert_eq!(as_set(&cliques), truth, "{algo} gnp({n},{p},{seed}) k={k}");
            }
        }
    }
}

#[test]
fn every_prune_setting_lists_the_same_cliques() {
    let graphs = [
        generate::gnp(22, 0.5, 11),
        generate::planted_clique(30, 0.2, 9, 4),
        generate::complete_minus(10, &[(0, 1), (2, 3), (4, 5)]),
    ];
    for g in &graphs {
        for k in [3, 4, 5, 6] {
            let truth = oracle::brute_force_list(g, k, DEFAULT_BUDGET).unwrap();
            for algo in Algorithm::ALL {
                for prune in prune_variants() {
                    let cfg = ListConfig {
                        prune,
                        ..ListConfig::default()
                    };
                    let (cliques, report) = collect(g, k, algo, &cfg);
                    assert_eq!(as_set(&cliques), truth, "{algo} k={k} {prune:?}");
                    assert_eq!(report.stats.audit_violations, 0, "{algo} k={k} {prune:?}");
                }
            }
        }
    }
}

#[test]
fn edge_branching_keeps_parity() {
    let g = generate::gnp(40, 0.5, 9);
    let cfg = ListConfig {
        prune: PruneConfig {
            et: EtPolicy::Disabled,
            ..PruneConfig::default()
        },
        ..ListConfig::default()
    };
    for algo in [Algorithm::EbbkcT, Algorithm::EbbkcC, Algorithm::EbbkcH] {
        for k in 5..=8 {
            let report = count_with(&g, k, algo, &cfg);
            let bits = report.stats.edge_branch_parities;
            assert_eq!(bits & !(1 << (k % 2)), 0, "{algo} k={k} bits={bits:b}");
        }
    }
}

#[test]
fn top_level_candidate_bounds() {
    for seed in 0..4 {
        let g = generate::gnp(80, 0.2, seed);
        let delta = crate::ordering::core_decompose(&g).degeneracy as u64;
        let tau = crate::ordering::truss_decompose(&g).tau as u64;
        let cfg = ListConfig::default();
        assert!(count_with(&g, 4, Algorithm::Vbbkc, &cfg).stats.max_top_candidates <= delta);
        for algo in [Algorithm::EbbkcT, Algorithm::EbbkcH] {
            let report = count_with(&g, 4, algo, &cfg);
            assert!(report.stats.max_top_candidates <= tau, "{algo}");
            assert_eq!(report.tau, Some(tau as u32));
        }
    }
}

#[test]
fn schemes_threads_and_successor_modes_agree() {
    let g = generate::gnp(70, 0.3, 21);
    for k in [3, 4, 5] {
        let want = oracle::brute_force_count(&g, k, DEFAULT_BUDGET).unwrap();
        for algo in Algorithm::ALL {
            for threads in [1, 4] {
                for (scheme, cap) in [(Scheme::NodeParallel, DEFAULT_SUCCESSOR_CAP), (Scheme::EdgeParallel, 0)] {
                    let cfg = ListConfig {
                        scheme,
                        threads,
                        successor_cap: cap,
                        ..ListConfig::default()
                    };
                    assert_eq!(
                        count_with(&g, k, algo, &cfg).count,
                        want,
                        "{algo} t={threads} {scheme:?}"
                    );
                    let (cliques, _) = collect(&g, k, algo, &cfg);
                    assert_eq!(cliques.len() as u64, want);
                }
            }
        }
    }
}

#[test]
fn time_limit_is_reported() {
    let g = generate::gnp(400, 0.5, 1);
    let cfg = ListConfig {
        time_limit: Some(Duration::ZERO),
        ..ListConfig::default()
    };
    for threads in [1, 3] {
        let cfg = ListConfig { threads, ..cfg.clone() };
        let got = list(&g, 6, Algorithm::Vbbkc, &cfg, &mut CliqueSink::counter());
        assert!(matches!(got, Err(Error::TimeLimit(_))), "{got:?}");
    }
}

#[test]
fn stream_output_uses_labels() {
    let g = four_vertex();
    let labels: std::sync::Arc<[u64]> = vec![10, 20, 30, 40].into();
    let buf = SharedBuf::default();
    let mut sink = CliqueSink::stream(Box::new(buf.clone()), Some(labels));
    let cfg = ListConfig {
        threads: 2,
        ..ListConfig::default()
    };
    list(&g, 3, Algorithm::EbbkcH, &cfg, &mut sink).unwrap();
    sink.finish().unwrap();
    let text = String::from_utf8(buf.0.lock().unwrap().clone()).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    lines.sort();
    assert_eq!(lines, vec!["10 30 40", "20 30 40"]);
}

#[derive(Clone, Default)]
struct SharedBuf(std::sync::Arc<std::sync::Mutex<Vec<u8>>>);

impl std::io::Write for SharedBuf {
    fn write(&mut self, b: &[u8]) -> std::io::Result<usize> {
        self.0.lock().unwrap().extend_from_slice(b);
        Ok(b.len())
    }

    fn flush(&mut self) -> std::io::Result<()> {
        Ok(())
    }
}

#[test]
fn color_arcs_follow_pair_order() {
    // arcs are visited source-rank first, then target rank, which is the
    // lexicographic order of (rank(u), rank(v)) pairs
    let g = generate::gnp(50, 0.3, 5);
    let c = greedy_color(&g);
    let dag = orient_by_rank(&g, &c.rank);
    let arcs: Vec<(u32, u32)> = (0..dag.edge_count()).map(|j| dag.arc(j)).collect();
    let mut sorted = arcs.clone();
    sorted.sort();
    assert_eq!(arcs, sorted);
    assert_eq!(arcs.len(), g.m());
    for &(a, b) in &arcs {
        let (u, v) = (dag.order[a as usize], dag.order[b as usize]);
        assert!(c.colors[u as usize] >= c.colors[v as usize]);
    }
}

/// Edge (E, H) passes the endpoint-color test for k = 4 but the two common
/// neighbors F and G share one color.
///
/// Ids: A B C D1 D2 E F G H P Q R = 0..11. A, B, C and E form a K4; D1, D2
/// and H a triangle; P, Q, R pad degrees so that E and H are colored late.
fn rule_two_only() -> Graph {
    let (a, b, c, d1, d2, e, f, g, h, p, q, r) = (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11);
    let mut edges = vec![
        (a, b),
        (a, c),
        (b, c),
        (d1, d2),
        (e, h),
        (e, f),
        (e, g),
        (h, f),
        (h, g),
        (h, d1),
        (h, d2),
    ];
    edges.extend([a, b, c].map(|x| (x, e)));
    for pad in [p, q, r] {
        edges.extend([a, b, c, d1, d2].map(|x| (x, pad)));
    }
    Graph::from_edges(12, edges)
}

#[test]
fn rule_two_fires_where_rule_one_does_not() {
    let g = rule_two_only();
    let (e, f, gg, h) = (5usize, 6usize, 7usize, 8usize);
    let c = greedy_color(&g);
    assert_eq!(c.colors[e], 4);
    assert_eq!(c.colors[h], 3);
    assert_eq!(c.colors[f], 1);
    assert_eq!(c.colors[gg], 1);
    let k = 4u32;
    assert!(!(c.colors[e] < k || c.colors[h] < k - 1), "rule one must not fire");
    assert_eq!(
        g.common_neighbors(e as Vertex, h as Vertex),
        vec![f as Vertex, gg as Vertex]
    );

    let cfg = |rule1, rule2| ListConfig {
        prune: PruneConfig {
            rule1,
            rule2,
            et: EtPolicy::Disabled,
            audit: true,
            ..PruneConfig::default()
        },
        ..ListConfig::default()
    };
    let only_r1 = count_with(&g, 4, Algorithm::EbbkcC, &cfg(true, false));
    let both = count_with(&g, 4, Algorithm::EbbkcC, &cfg(true, true));
    let want = oracle::brute_force_count(&g, 4, DEFAULT_BUDGET).unwrap();
    assert_eq!(want, 4);
    assert_eq!(only_r1.count, want);
    assert_eq!(both.count, want);
    assert!(both.stats.pruned_r2 >= 1);
    assert_eq!(both.stats.pruned_r1, only_r1.stats.pruned_r1);
    assert_eq!(both.stats.audit_violations, 0);
}

#[test]
fn generic_branching_matches_oracle() {
    let g = generate::gnp(18, 0.5, 3);
    let t = crate::ordering::truss_decompose(&g);
    let id_order: Vec<EdgeId> = (0..g.m() as EdgeId).collect();
    for k in 3..=6 {
        let truth = oracle::brute_force_list(&g, k, DEFAULT_BUDGET).unwrap();
        for order in [&t.order, &id_order] {
            let mut sink = CliqueSink::collector();
            let n = generic_list(&g, k, order, &mut sink);
            let got = sink.take_cliques();
            assert_eq!(n as usize, got.len());
            assert_eq!(as_set(&got), truth, "k={k}");
        }
    }
}

#[test]
fn early_termination_fires_on_dense_graphs() {
    let g = generate::complete_minus(14, &[(0, 1), (2, 3), (4, 5), (6, 7)]);
    let want = oracle::brute_force_count(&g, 6, DEFAULT_BUDGET).unwrap();
    for algo in Algorithm::ALL {
        let cfg = ListConfig {
            prune: PruneConfig {
                audit: true,
                ..PruneConfig::default()
            },
            ..ListConfig::default()
        };
        let report = count_with(&g, 6, algo, &cfg);
        assert_eq!(report.count, want, "{algo}");
        assert!(report.stats.et_fired > 0, "{algo}");
        assert_eq!(report.stats.audit_violations, 0);
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0..n as Vertex, 0..n as Vertex), 0..=n * (n - 1) / 2 + 1)
            .prop_map(move |pairs| Graph::from_edges(n, pairs))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn listers_agree_with_oracle(g in arb_graph(16), k in 3usize..7, t in 1u32..5) {
        let truth = oracle::brute_force_list(&g, k, DEFAULT_BUDGET).unwrap();
        for algo in Algorithm::ALL {
            for et in [EtPolicy::Auto, EtPolicy::Threshold(t)] {
                let cfg = ListConfig {
                    prune: PruneConfig { et, audit: true, ..PruneConfig::default() },
                    ..ListConfig::default()
                };
                let (cliques, report) = collect(&g, k, algo, &cfg);
                prop_assert_eq!(as_set(&cliques), truth.clone());
                prop_assert_eq!(report.stats.audit_violations, 0);
            }
        }
    }

    #[test]
    fn emitted_sets_are_cliques(seed in 0u64..1000, k in 3usize..6) {
        let g = generate::gnp(30, 0.35, seed);
        for algo in Algorithm::ALL {
            let (cliques, _) = collect(&g, k, algo, &ListConfig::default());
            for c in &cliques {
                prop_assert_eq!(c.len(), k);
                prop_assert!(c.windows(2).all(|w| w[0] < w[1]));
                for (i, &u) in c.iter().enumerate() {
                    for &v in &c[i + 1..] {
                        prop_assert!(g.has_edge(u, v));
                    }
                }
            }
        }
    }
}

#[test]
fn auto_threshold_agrees_across_algorithms() {
    let graphs = [
        generate::complete(20),
        generate::gnp(200, 0.3, 2),
        generate::planted_clique(100, 0.05, 30, 1),
    ];
    for g in &graphs {
        for k in [3, 5, 8, 12] {
            let want = count_with(g, k, Algorithm::EbbkcT, &ListConfig::default()).et_threshold;
            for algo in [Algorithm::Vbbkc, Algorithm::EbbkcC, Algorithm::EbbkcH] {
                assert_eq!(
                    count_with(g, k, algo, &ListConfig::default()).et_threshold,
                    want,
                    "{algo} k={k}"
                );
            }
        }
    }
}
