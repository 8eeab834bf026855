//! Acceptance criteria, one pass/fail line each. Runs without the libtest
//! harness so the lines always print; exits nonzero if any criterion fails.

use std::fs;
use std::path::Path;
use std::time::{Duration, Instant};

use dindex::graph6::parse_graph6;
use dindex_core::aut::{automorphism_group_with, enumerate_automorphisms, is_distinguishing, Engine};
use dindex_core::construct::{ceil_root, construct_thm23, construct_thm32, paper_bound, ConstructConfig};
use dindex_core::families::{self, BipartiteValue};
use dindex_core::solver::{brute_force_index, exact_distinguishing_index, BruteForceError, NoClock, SolveOutcome, SolverConfig};
use dindex_core::{EdgeLabeling, Graph, Method};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

fn corpus(name: &str) -> Vec<Graph> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name);
    fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()))
        .lines()
        .map(|l| parse_graph6(l).unwrap_or_else(|e| panic!("{name}: {l}: {e}")))
        .collect()
}

/// Exact index, or `None` if the default budget ran out.
fn exact(g: &Graph, d_max: usize) -> Option<Result<usize, usize>> {
    match exact_distinguishing_index(g, d_max, &SolverConfig::default(), &NoClock).expect("solvable input") {
        SolveOutcome::Solved(r) => Some(Ok(r.dprime)),
        SolveOutcome::ExceedsMax { lower_bound, .. } => Some(Err(lower_bound)),
        SolveOutcome::Unknown { .. } => None,
    }
}

/// Failures found, or empty on success.
type Outcome = Vec<String>;

/// Name, check and time limit.
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn families_ground_truth() -> Outcome {
    let mut cases = Vec::new();
    for n in 3..=8 {
        cases.push((format!("P{n}"), families::path(n).unwrap(), 2));
        cases.push((format!("C{n}"), families::cycle(n).unwrap(), if n <= 5 { 3 } else { 2 }));
    }
    cases.push(("K4".into(), families::complete(4).unwrap(), 3));
    cases.push(("K3,3".into(), families::complete_bipartite(3, 3).unwrap(), 3));
    cases
        .into_iter()
        .filter_map(|(name, g, want)| {
            let got = exact(&g, g.m());
            (got != Some(Ok(want))).then(|| format!("{name}: want {want}, got {got:?}"))
        })
        .collect()
}

fn friendship_formula() -> Outcome {
    [(2, 2), (3, 3), (4, 3)]
        .into_iter()
        .filter_map(|(n, want)| {
            let formula = families::formula_friendship(n as u64).unwrap();
            let brute = brute_force_index(&families::friendship(n).unwrap());
            (formula != want || brute != Ok(want)).then(|| format!("F{n}: formula {formula}, brute {brute:?}, expected {want}"))
        })
        .collect()
}

fn bipartite_formula() -> Outcome {
    let pairs: Vec<(usize, usize)> = (2..=12).flat_map(|p| (p..=12).map(move |q| (p, q))).filter(|&(p, q)| p * q <= 12).collect();
    let mut failures: Outcome = pairs
        .par_iter()
        .filter_map(|&(p, q)| {
            let formula = families::formula_complete_bipartite(p, q).unwrap();
            let brute = brute_force_index(&families::complete_bipartite(p, q).unwrap());
            match (formula.value, brute) {
                (BipartiteValue::Exact(v), Ok(b)) if v == b => None,
                other => Some(format!("K{p},{q}: {other:?}")),
            }
        })
        .collect();
    if families::formula_complete_bipartite(2, 3).unwrap().value != BipartiteValue::Exact(2) {
        failures.push("K2,3 boundary not resolved to 2".into());
    }
    failures
}

fn degree_bound_sweep() -> Outcome {
    let graphs: Vec<Graph> = corpus("all_n1_8.g6")
        .into_iter()
        .filter(|g| (4..=8).contains(&g.n()) && g.is_connected() && g.degree_stats().min >= 2)
        .collect();
    if graphs.len() != 3 + 11 + 61 + 507 + 7442 {
        return vec![format!("corpus yielded {} graphs", graphs.len())];
    }
    graphs
        .par_iter()
        .filter_map(|g| {
            let stats = g.degree_stats();
            let bound = paper_bound(stats.min, stats.max).unwrap();
            let text = dindex::graph6::write_graph6(g);
            match exact(g, bound) {
                Some(Ok(_)) => {}
                other => return Some(format!("{text}: exact {other:?} against bound {bound}")),
            }
            match construct_thm23(g, &ConstructConfig::default(), &NoClock) {
                Ok(c) if c.verify(g).is_ok() && c.distinguishing && c.label_count() <= bound => None,
                other => Some(format!("{text}: construction {other:?}")),
            }
        })
        .collect()
}

fn regular_two_labels() -> Outcome {
    let mut graphs = vec![families::complete(6).unwrap()];
    graphs.extend(corpus("quintic_n6_10.g6").into_iter().filter(|g| g.n() > 6));
    let quintic = graphs.len();
    graphs.extend((0..100u64).map(|seed| families::random_regular(12, 5, seed).unwrap()));
    let mut failures: Outcome = graphs
        .par_iter()
        .filter_map(|g| {
            let text = dindex::graph6::write_graph6(g);
            match construct_thm32(g, &ConstructConfig::default(), &NoClock) {
                Ok(c) if c.verify(g).is_ok() && c.distinguishing && c.label_count() <= 2 => {}
                other => return Some(format!("{text}: construction {other:?}")),
            }
            match exact(g, 2) {
                Some(Ok(_)) | None => None,
                Some(Err(lb)) => Some(format!("{text}: exact search needs at least {lb} labels")),
            }
        })
        .collect();
    if quintic != 1 + 3 + 60 {
        failures.push(format!("expected 64 graphs on 6, 8, 10 vertices, found {quintic}"));
    }
    failures
}

fn oracle_equivalence() -> Outcome {
    let small = corpus("connected_m_le_10.g6");
    let mut failures: Outcome = small
        .par_iter()
        .filter_map(|g| {
            let solver = exact(g, g.m());
            let brute = brute_force_index(g);
            let agree = match (&solver, &brute) {
                (Some(Ok(a)), Ok(b)) => a == b,
                (Some(Err(_)), Err(BruteForceError::NoDistinguishingLabeling)) => true,
                _ => false,
            };
            (!agree).then(|| format!("{}: solver {solver:?}, brute {brute:?}", dindex::graph6::write_graph6(g)))
        })
        .collect();
    if small.len() != 3390 {
        failures.push(format!("connected m ≤ 10 corpus has {} graphs", small.len()));
    }
    failures.extend(corpus("all_n1_8.g6").par_iter().filter_map(|g| {
        let refined = automorphism_group_with(g, Engine::Refinement).order;
        let scanned = enumerate_automorphisms(g, usize::MAX).unwrap().len();
        (refined != scanned.into()).then(|| format!("{}: refinement {refined}, scan {scanned}", dindex::graph6::write_graph6(g)))
    }).collect::<Vec<_>>());
    failures
}

fn certificate_fuzz() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let cases: Vec<(Graph, Vec<u32>)> = (0..10_000)
        .map(|_| {
            let n = rng.gen_range(1..=9);
            let density = rng.gen_range(0.1..0.9);
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(density))
                .collect();
            let g = Graph::new(n, &pairs).unwrap();
            let k = rng.gen_range(1..=3);
            let labels = (0..g.m()).map(|_| rng.gen_range(1..=k)).collect();
            (g, labels)
        })
        .collect();
    cases
        .par_iter()
        .filter_map(|(g, labels)| {
            let labeling = EdgeLabeling::new(g, labels.clone()).unwrap();
            let cert = is_distinguishing(g, &labeling, Method::ExactSearch).unwrap();
            let broken_by_all = enumerate_automorphisms(g, usize::MAX)
                .unwrap()
                .iter()
                .all(|p| p.is_identity() || !labeling.is_preserved_by(g, p));
            let text = dindex::graph6::write_graph6(g);
            if cert.distinguishing != broken_by_all {
                Some(format!("{text} {labels:?}: verdict {}, enumeration {broken_by_all}", cert.distinguishing))
            } else if let Err(e) = cert.verify(g) {
                Some(format!("{text} {labels:?}: {e}"))
            } else {
                None
            }
        })
        .collect()
}

fn conjecture_sweep() -> Outcome {
    let graphs: Vec<Graph> = corpus("all_n1_8.g6").into_iter().filter(Graph::is_biconnected).collect();
    let mut failures: Outcome = graphs
        .par_iter()
        .filter_map(|g| {
            let bound = 1 + ceil_root(g.degree_stats().max, 2);
            match exact(g, bound) {
                Some(Ok(_)) => None,
                other => Some(format!("{}: {other:?} against 1 + ⌈√Δ⌉ = {bound}", dindex::graph6::write_graph6(g))),
            }
        })
        .collect();
    if graphs.len() != 1 + 3 + 10 + 56 + 468 + 7123 {
        failures.push(format!("found {} 2-connected graphs", graphs.len()));
    }
    failures
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 family ground truth", families_ground_truth, Duration::from_secs(1)),
        ("2 friendship formula vs brute force", friendship_formula, Duration::from_secs(300)),
        ("3 bipartite formula vs brute force", bipartite_formula, Duration::from_secs(600)),
        ("4 degree bound sweep, n = 4..8, δ ≥ 2", degree_bound_sweep, Duration::from_secs(7200)),
        ("5 two labels on 5-regular graphs", regular_two_labels, Duration::from_secs(3600)),
        ("6 oracle equivalence", oracle_equivalence, Duration::from_secs(3600)),
        ("7 certificate fuzz, 10^4 pairs", certificate_fuzz, Duration::from_secs(3600)),
        ("8 2-connected sweep against 1 + ⌈√Δ⌉", conjecture_sweep, Duration::from_secs(7200)),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let mut failures = run();
        let elapsed = start.elapsed();
        if elapsed > limit {
            failures.push(format!("took {elapsed:.2?}, limit {limit:?}"));
        }
        let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
        println!("acceptance {name}: {verdict} ({elapsed:.2?})");
        for f in failures.iter().take(10) {
            println!("    {f}");
        }
        failed += !failures.is_empty() as usize;
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
