//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any exact criterion fails. The performance check only
//! warns.

use std::collections::BTreeSet;
use std::time::Instant;

use kclique::combinatorics::binomial;
use kclique::generate::{bipartite, complete, gnp};
use kclique::oracle::{brute_force_list, DEFAULT_BUDGET};
use kclique::ordering::{core_decompose, truss_decompose};
use kclique::plex::{detect_plex, kc2plex_list, kctplex_list};
use kclique::{list, Algorithm, CliqueSink, EtPolicy, Graph, ListConfig, ListReport, LocalGraph, PruneConfig, Vertex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const KS: std::ops::RangeInclusive<usize> = 3..=8;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(failures: &[String], ok: String) -> Self {
        match failures.first() {
            None => Outcome { pass: true, detail: ok },
            Some(first) => Outcome {
                pass: false,
                detail: format!("{} failure(s), first: {first}", failures.len()),
            },
        }
    }
}

fn run(g: &Graph, k: usize, algo: Algorithm, cfg: &ListConfig, collect: bool) -> (ListReport, BTreeSet<Vec<Vertex>>) {
    let mut sink = if collect {
        CliqueSink::collector()
    } else {
        CliqueSink::counter()
    };
    let report = list(g, k, algo, cfg, &mut sink).expect("listing succeeds");
    let cliques = sink.take_cliques().into_iter().collect();
    (report, cliques)
}

fn count(g: &Graph, k: usize, algo: Algorithm, cfg: &ListConfig) -> u64 {
    run(g, k, algo, cfg, false).0.count
}

/// The shared random matrix: 100 graphs with n in [10, 40] and p cycling
/// through 0.2, 0.5, 0.8.
fn matrix() -> Vec<(String, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(20240601);
    (0..100)
        .map(|i| {
            let n = rng.gen_range(10..=40);
            let p = [0.2, 0.5, 0.8][i % 3];
            let seed = 1000 + i as u64;
            (format!("gnp:{n},{p},seed={seed}"), gnp(n, p, seed))
        })
        .collect()
}

fn oracle_equivalence(graphs: &[(String, Graph)]) -> Outcome {
    let cfg = ListConfig::default();
    let mut failures = Vec::new();
    let mut checked = 0;
    for (name, g) in graphs {
        for k in KS {
            let expect = brute_force_list(g, k, DEFAULT_BUDGET).expect("oracle within budget");
            for algo in Algorithm::ALL {
                let (report, got) = run(g, k, algo, &cfg, true);
                if got != expect || report.count != expect.len() as u64 {
                    failures.push(format!(
                        "{name} k={k} {algo}: {} vs oracle {}",
                        report.count,
                        expect.len()
                    ));
                }
                checked += 1;
            }
        }
    }
    Outcome::new(&failures, format!("{checked} clique sets equal the oracle"))
}

fn closed_form() -> Outcome {
    let cfg = ListConfig::default();
    let mut failures = Vec::new();
    for n in 5..=12 {
        let g = complete(n);
        for k in 3..=n {
            for algo in Algorithm::ALL {
                let c = count(&g, k, algo, &cfg);
                if c != binomial(n, k) {
                    failures.push(format!("K{n} k={k} {algo}: {c}"));
                }
            }
        }
    }
    Outcome::new(&failures, "K5..K12 give C(n,k) for every k".into())
}

fn four_vertex_fixture() -> Outcome {
    // v1..v4 as 0..3
    let g = Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    let mut failures = Vec::new();
    for algo in Algorithm::ALL {
        let c = count(&g, 3, algo, &ListConfig::default());
        if c != 2 {
            failures.push(format!("{algo} found {c} triangles"));
        }
    }
    let t = truss_decompose(&g);
    let (u, v) = g.edge(t.order[0]);
    let first = g.common_neighbors(u, v).len();
    if t.support[0] != 1 || first != 1 {
        failures.push(format!(
            "first peeled edge support {} (recomputed {first})",
            t.support[0]
        ));
    }
    if t.tau != 1 {
        failures.push(format!("tau = {}", t.tau));
    }
    Outcome::new(&failures, "2 triangles, first peeled support 1, tau 1".into())
}

fn tau_below_delta(graphs: &[(String, Graph)]) -> Outcome {
    let mut failures = Vec::new();
    let mut all: Vec<(String, Graph)> = graphs.to_vec();
    for p in 2..=6 {
        all.push((format!("K{p},{p}"), bipartite(p, p)));
    }
    for n in 2..=12 {
        all.push((format!("K{n}"), complete(n)));
    }
    let mut checked = 0;
    for (name, g) in &all {
        if g.m() == 0 {
            continue;
        }
        let delta = core_decompose(g).degeneracy;
        let tau = truss_decompose(g).tau;
        if tau >= delta {
            failures.push(format!("{name}: tau {tau} >= delta {delta}"));
        }
        checked += 1;
    }
    for p in 2..=6u32 {
        let g = bipartite(p as usize, p as usize);
        let (delta, tau) = (core_decompose(&g).degeneracy, truss_decompose(&g).tau);
        if delta != p || tau != 0 {
            failures.push(format!("K{p},{p}: delta {delta}, tau {tau}"));
        }
    }
    Outcome::new(&failures, format!("tau < delta on {checked} graphs"))
}

fn size_bounds(graphs: &[(String, Graph)]) -> Outcome {
    let cfg = ListConfig::default();
    let mut failures = Vec::new();
    let mut tight = 0;
    for (name, g) in graphs {
        let delta = core_decompose(g).degeneracy as u64;
        let tau = truss_decompose(g).tau as u64;
        let v = run(g, 3, Algorithm::Vbbkc, &cfg, false).0.stats.max_top_candidates;
        if v > delta {
            failures.push(format!("{name}: vbbkc {v} > delta {delta}"));
        }
        for algo in [Algorithm::EbbkcT, Algorithm::EbbkcH] {
            let s = run(g, 3, algo, &cfg, false).0.stats.max_top_candidates;
            if s > tau {
                failures.push(format!("{name}: {algo} {s} > tau {tau}"));
            }
            if algo == Algorithm::EbbkcT && s == tau {
                tight += 1;
            }
        }
    }
    if tight == 0 {
        failures.push("the tau bound is never reached".into());
    }
    Outcome::new(&failures, format!("bounds hold; tau reached on {tight} graphs"))
}

fn prune_safety(graphs: &[(String, Graph)]) -> Outcome {
    let mut configs = Vec::new();
    for (label, f) in [
        (
            "no rule1",
            (|p: &mut PruneConfig| p.rule1 = false) as fn(&mut PruneConfig),
        ),
        ("no rule2", |p| p.rule2 = false),
        ("no et", |p| p.et = EtPolicy::Disabled),
        ("et t=1", |p| p.et = EtPolicy::Threshold(1)),
        ("et t=2", |p| p.et = EtPolicy::Threshold(2)),
        ("et t=3", |p| p.et = EtPolicy::Threshold(3)),
        ("no size", |p| p.size = false),
        ("nothing", |p| *p = PruneConfig::none()),
    ] {
        let mut cfg = ListConfig::default();
        f(&mut cfg.prune);
        configs.push((label, cfg));
    }
    let base = ListConfig::default();
    let mut failures = Vec::new();
    let mut checked = 0;
    for (name, g) in graphs {
        for k in KS {
            for algo in Algorithm::ALL {
                let expect = count(g, k, algo, &base);
                for (label, cfg) in &configs {
                    let c = count(g, k, algo, cfg);
                    if c != expect {
                        failures.push(format!("{name} k={k} {algo} {label}: {c} vs {expect}"));
                    }
                    checked += 1;
                }
            }
        }
    }
    Outcome::new(&failures, format!("{checked} toggled runs match"))
}

fn local_graph(n: usize, pairs: &[(Vertex, Vertex)]) -> (LocalGraph, Graph) {
    let labels: Vec<Vertex> = (0..n as Vertex).collect();
    (
        LocalGraph::from_local_edges(labels, pairs),
        Graph::from_edges(n, pairs.iter().copied()),
    )
}

/// Complete graph on `n` vertices with non-edges chosen so that no vertex
/// misses more than `t - 1` others.
fn random_plex(rng: &mut ChaCha8Rng, n: usize, t: usize) -> Vec<(Vertex, Vertex)> {
    let mut pairs: Vec<(Vertex, Vertex)> = (0..n as Vertex)
        .flat_map(|u| (u + 1..n as Vertex).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    let mut missing = vec![0usize; n];
    let budget = rng.gen_range(0..=n * (t - 1) / 2);
    let mut removed = 0;
    pairs.retain(|&(u, v)| {
        let (u, v) = (u as usize, v as usize);
        if removed < budget && missing[u] < t - 1 && missing[v] < t - 1 {
            missing[u] += 1;
            missing[v] += 1;
            removed += 1;
            false
        } else {
            true
        }
    });
    pairs
}

fn plex_listing() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut failures = Vec::new();
    let mut cases = Vec::new();
    for _ in 0..50 {
        let n = rng.gen_range(1..=15);
        cases.push((2, n, random_plex(&mut rng, n, 2)));
    }
    for _ in 0..20 {
        let n = rng.gen_range(1..=14);
        cases.push((3, n, random_plex(&mut rng, n, 3)));
    }
    for (t, n, pairs) in &cases {
        let (lg, g) = local_graph(*n, pairs);
        if detect_plex(&lg) > *t {
            failures.push(format!("generated graph is a {}-plex, wanted {t}", detect_plex(&lg)));
            continue;
        }
        for l in 1..=*n {
            let expect = brute_force_list(&g, l, DEFAULT_BUDGET).unwrap();
            let mut sink = CliqueSink::collector();
            let c = if *t == 2 {
                kc2plex_list(&[], &lg, l, &mut sink).expect("2-plex input")
            } else {
                kctplex_list(&[], &lg, l, &mut sink)
            };
            let got: BTreeSet<Vec<Vertex>> = sink.take_cliques().into_iter().collect();
            if got != expect || c != expect.len() as u64 {
                failures.push(format!("{t}-plex n={n} l={l}: {c} vs {}", expect.len()));
            }
            let mut counter = CliqueSink::counter();
            let bulk = if *t == 2 {
                kc2plex_list(&[], &lg, l, &mut counter).unwrap()
            } else {
                kctplex_list(&[], &lg, l, &mut counter)
            };
            if bulk != expect.len() as u64 || counter.count() != bulk {
                failures.push(format!("{t}-plex n={n} l={l}: counted {bulk} vs {}", expect.len()));
            }
        }
    }
    // Six vertices missing (v3,v5) and (v4,v6).
    let fig: Vec<(Vertex, Vertex)> = (0..6u32)
        .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
        .filter(|&e| e != (2, 4) && e != (3, 5))
        .collect();
    let (lg, _) = local_graph(6, &fig);
    let two = kc2plex_list(&[], &lg, 3, &mut CliqueSink::collector()).unwrap();
    let any = kctplex_list(&[], &lg, 3, &mut CliqueSink::collector());
    if detect_plex(&lg) != 2 || two != 12 || any != 12 {
        failures.push(format!(
            "six-vertex 2-plex: t={}, {two} and {any} triangles",
            detect_plex(&lg)
        ));
    }
    Outcome::new(
        &failures,
        format!(
            "{} plexes match brute force; six-vertex 2-plex has 12 triangles",
            cases.len()
        ),
    )
}

fn thread_determinism(graphs: &[(String, Graph)]) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (name, g) in graphs {
        for k in KS {
            for algo in Algorithm::ALL {
                let mut counts = Vec::new();
                for threads in [1, 2, 4, 8] {
                    let cfg = ListConfig {
                        threads,
                        ..ListConfig::default()
                    };
                    counts.push(count(g, k, algo, &cfg));
                }
                if counts.iter().any(|&c| c != counts[0]) {
                    failures.push(format!("{name} k={k} {algo}: {counts:?}"));
                }
                checked += 1;
            }
        }
    }
    Outcome::new(&failures, format!("{checked} runs agree across 1, 2, 4, 8 threads"))
}

fn performance() -> Outcome {
    let g = gnp(3000, 0.02, 0);
    let time = |algo: Algorithm, et: EtPolicy| {
        let mut cfg = ListConfig::default();
        cfg.prune.et = et;
        let start = Instant::now();
        let c = count(&g, 7, algo, &cfg);
        (start.elapsed().as_secs_f64(), c)
    };
    let best = |algo, et| {
        (0..3)
            .map(|_| time(algo, et))
            .fold((f64::MAX, 0), |a, b| if b.0 < a.0 { b } else { a })
    };
    let (th, ch) = best(Algorithm::EbbkcH, EtPolicy::Auto);
    let (tv, cv) = best(Algorithm::Vbbkc, EtPolicy::Disabled);
    let detail = format!("gnp:3000,0.02 k=7: ebbkc-h {th:.4}s, vbbkc {tv:.4}s, counts {ch}/{cv}");
    Outcome {
        pass: ch == cv && th < tv,
        detail,
    }
}

fn truss_replay(graphs: &[(String, Graph)]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut all: Vec<(String, Graph)> = graphs.iter().filter(|(_, g)| g.m() <= 200).cloned().collect();
    for i in 0..40u64 {
        let n = rng.gen_range(5..=30);
        let p = rng.gen_range(0.1..0.9);
        let g = gnp(n, p, i);
        if g.m() <= 200 {
            all.push((format!("gnp:{n},{p:.2},seed={i}"), g));
        }
    }
    all.push(("K4,4".into(), bipartite(4, 4)));
    all.push(("K12".into(), complete(12)));
    let mut failures = Vec::new();
    for (name, g) in &all {
        let t = truss_decompose(g);
        let mut alive = vec![true; g.m()];
        let support = |alive: &[bool], e: usize| {
            let (u, v) = g.edge(e as u32);
            g.common_neighbors(u, v)
                .into_iter()
                .filter(|&w| alive[g.edge_id(u, w).unwrap() as usize] && alive[g.edge_id(v, w).unwrap() as usize])
                .count() as u32
        };
        let mut tau = 0;
        for (i, &e) in t.order.iter().enumerate() {
            let e = e as usize;
            let s = support(&alive, e);
            let least = (0..g.m())
                .filter(|&f| alive[f])
                .map(|f| support(&alive, f))
                .min()
                .unwrap();
            if s != t.support[i] || s != least {
                failures.push(format!(
                    "{name} step {i}: recorded {}, recomputed {s}, minimum {least}",
                    t.support[i]
                ));
                break;
            }
            tau = tau.max(s);
            alive[e] = false;
        }
        if tau != t.tau {
            failures.push(format!("{name}: tau {} vs replay {tau}", t.tau));
        }
    }
    Outcome::new(&failures, format!("{} graphs replayed", all.len()))
}

fn main() {
    let graphs = matrix();
    let mut failed = 0;
    let mut report = |n: usize, what: &str, o: Outcome| {
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!("{status} criterion {n}: {what}: {}", o.detail);
        if !o.pass {
            failed += 1;
        }
    };
    report(1, "oracle equivalence", oracle_equivalence(&graphs));
    report(2, "closed-form counts", closed_form());
    report(3, "four-vertex fixture", four_vertex_fixture());
    report(4, "tau < delta", tau_below_delta(&graphs));
    report(5, "top-level size bounds", size_bounds(&graphs));
    report(6, "prune safety", prune_safety(&graphs));
    report(7, "plex listing", plex_listing());
    report(8, "thread determinism", thread_determinism(&graphs));
    let perf = performance();
    if perf.pass {
        println!("PASS criterion 9: performance smoke: {}", perf.detail);
    } else {
        println!("WARNING criterion 9: performance smoke (report only): {}", perf.detail);
    }
    report(10, "truss replay", truss_replay(&graphs));
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
