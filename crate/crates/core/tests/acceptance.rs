//! Acceptance checks. Each test prints one PASS/FAIL line; run with
//! `cargo test --test acceptance -- --nocapture --test-threads 1` to see them.

use std::time::Instant;

use blocker_core::blockers::{solve_bruteforce_with, BlockerInstance, BruteForceOptions};
use blocker_core::graph::is_chordal;
use blocker_core::invariants::{alpha_exact_with_limit, check_critical_with_limit};
use blocker_core::reductions::{build_chordal_gadget, Wp2SatInstance};
use blocker_core::suites::{Suite, SuiteConfig, SuiteReport};
use blocker_core::{Operation, ParameterKind, Witness};

const SEED: u64 = 20240617;

fn run(label: &str, suite: Suite, cfg: SuiteConfig, min_instances: usize) -> SuiteReport {
    let start = Instant::now();
    let report = suite.run(&cfg).expect("suite runs");
    let ok = report.passed() && report.instances >= min_instances;
    println!(
        "{} {label}: {} instances, {} checks, {} yes, {} counterexamples, {:.1}s",
        if ok { "PASS" } else { "FAIL" },
        report.instances,
        report.checks,
        report.yes_instances,
        report.counterexamples.len(),
        start.elapsed().as_secs_f64()
    );
    for c in report.counterexamples.iter().take(5) {
        println!("  {} | {}\n{}", c.params, c.reason, c.instance);
    }
    assert!(
        report.instances >= min_instances,
        "{label}: only {} instances",
        report.instances
    );
    assert!(
        report.passed(),
        "{label}: {} counterexamples",
        report.counterexamples.len()
    );
    report
}

#[test]
fn c1_bipartite_solver_matches_brute_force() {
    let cfg = SuiteConfig {
        seed: SEED,
        count: 0,
        max_n: 8,
    };
    // 254 connected bipartite graphs on 1..=8 vertices, 12 (d, k) pairs each.
    run(
        "1 bipartite solver vs brute force, n <= 8",
        Suite::BipartiteOracle,
        cfg,
        254 * 12,
    );
}

#[test]
fn c2_tree_witness_lowers_alpha() {
    let cfg = SuiteConfig {
        seed: SEED,
        count: 500,
        max_n: 14,
    };
    run(
        "2 tree witness, 2d or 2d+1 edges, alpha drops by d",
        Suite::TreeWitness,
        cfg,
        500,
    );
}

#[test]
fn c3_matching_cover_and_complement() {
    let cfg = SuiteConfig {
        seed: SEED,
        count: 1000,
        max_n: 12,
    };
    run(
        "3 mu = tau and tau + alpha = |V| on bipartite graphs",
        Suite::Koenig,
        cfg,
        1000,
    );
}

#[test]
fn c4_minimal_critical_sets_are_forests() {
    let cfg = SuiteConfig {
        seed: SEED,
        count: 0,
        max_n: 6,
    };
    // 1 + 1 + 2 + 4 + 11 + 34 + 156 graphs.
    run(
        "4 minimal alpha-critical contraction sets are forests, n <= 6",
        Suite::ForestCriticality,
        cfg,
        209,
    );
}

#[test]
fn c5_chordal_gadget_equivalence() {
    let cfg = SuiteConfig {
        seed: SEED,
        count: 200,
        max_n: 7,
    };
    run(
        "5a chordal gadget, contraction",
        Suite::ChordalContraction,
        cfg,
        200,
    );
    run(
        "5b chordal gadget, deletion",
        Suite::ChordalDeletion,
        cfg,
        200,
    );
}

#[test]
fn c6_apex_gadget_equivalence() {
    let cfg = SuiteConfig {
        seed: SEED,
        count: 200,
        max_n: 8,
    };
    run(
        "6 apex gadget, omega contraction",
        Suite::ApexClique,
        cfg,
        200,
    );
}

#[test]
fn c7_witness_round_trips() {
    let cfg = SuiteConfig {
        seed: SEED,
        count: 200,
        max_n: 7,
    };
    let report = run("7 witness round trips", Suite::Roundtrips, cfg, 600);
    assert!(report.yes_instances > 0);
}

#[test]
fn c8_worked_example() {
    // Variables w, x, y, z; clauses wx, xy, xz; budget 1.
    let phi = Wp2SatInstance::new(4, vec![(0, 1), (1, 2), (1, 3)], 1).unwrap();
    let gadget = build_chordal_gadget(&phi);
    let g = &gadget.graph;
    let alpha = alpha_exact_with_limit(g, usize::MAX).unwrap().0;
    let x_block: Vec<usize> = std::iter::once(gadget.var_apex[1])
        .chain(gadget.var_clique[1].iter().copied())
        .collect();

    let mut ok = g.n() == 19 && alpha == 5 && is_chordal(g).is_some();
    for op in [Operation::Contract, Operation::Delete] {
        let inst = BlockerInstance::new(g.clone(), op, ParameterKind::Independence, 1, 1).unwrap();
        let res = solve_bruteforce_with(&inst, &BruteForceOptions::with_limit(19)).unwrap();
        let at_x = match &res.witness {
            Some(Witness::Contract(s)) => s
                .iter()
                .all(|(u, v)| x_block.contains(&u) && x_block.contains(&v)),
            Some(Witness::Delete(u)) => u.iter().all(|v| x_block.contains(&v)),
            None => false,
        };
        let verified = res.witness.as_ref().is_some_and(|w| {
            check_critical_with_limit(g, w, ParameterKind::Independence, 1, usize::MAX).unwrap()
        });
        println!("  {op}: {} witness {:?}", res.answer, res.witness);
        ok &= res.is_yes() && at_x && verified && res.pi_after == Some(4);
    }
    println!(
        "{} 8 worked example: {} vertices, alpha {alpha}, yes for contraction and deletion at the x block",
        if ok { "PASS" } else { "FAIL" },
        g.n()
    );
    assert!(ok);
}
