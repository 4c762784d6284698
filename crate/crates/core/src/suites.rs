//! Seeded property suites that cross-check the solvers and reductions
//! against independent brute-force referees. Each suite returns a report;
//! a suite passes iff it found no counterexample.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use crate::blockers::{
    build_tree_witness, solve_bipartite_contraction_alpha, solve_bruteforce_with, BlockerInstance,
    BruteForceOptions,
};
use crate::catalog::{all_graphs, connected_bipartite_graphs, ALL_GRAPHS_LIMIT, BIPARTITE_LIMIT};
use crate::error::{Error, Result};
use crate::generate::{
    random_bipartite, random_connected_bipartite, random_triangle_free, rng_from_seed,
};
use crate::graph::{
    is_c3_plus_p1_free, is_chordal, serialize_edge_list, EdgeSet, Graph, VertexSet,
};
use crate::invariants::{
    alpha_bipartite, alpha_chordal, alpha_exact_with_limit, check_critical_with_limit,
    max_matching_bipartite, omega_exact_with_limit, Operation, ParameterKind, Witness,
};
use crate::reductions::{
    assignment_to_contraction_witness, assignment_to_deletion_witness, build_apex_gadget,
    build_chordal_gadget, contraction_witness_to_assignment, contraction_witness_to_vc,
    deletion_witness_to_assignment, solve_wp2sat_bruteforce, vc_to_wp2sat,
    vc_witness_to_contraction_witness, Assignment, Wp2SatInstance,
};

const ALPHA: ParameterKind = ParameterKind::Independence;
const OMEGA: ParameterKind = ParameterKind::Clique;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Matching number equals vertex cover number, and τ + α = |V|, on
    /// random bipartite graphs.
    Koenig,
    /// Minimal α-contraction-critical edge sets of all small graphs are
    /// forests.
    ForestCriticality,
    /// The polynomial bipartite solver agrees with brute force on every
    /// small connected bipartite graph.
    BipartiteOracle,
    /// The tree witness has 2d or 2d + 1 edges and lowers α by d.
    TreeWitness,
    /// Chordal gadget: formula satisfiable iff one contraction round lowers α.
    ChordalContraction,
    /// Chordal gadget: formula satisfiable iff deletions lower α.
    ChordalDeletion,
    /// Apex gadget: vertex cover iff contractions lower ω.
    ApexClique,
    /// Witness translations in both directions on every yes-instance.
    Roundtrips,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Koenig,
        Suite::ForestCriticality,
        Suite::BipartiteOracle,
        Suite::TreeWitness,
        Suite::ChordalContraction,
        Suite::ChordalDeletion,
        Suite::ApexClique,
        Suite::Roundtrips,
    ];

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            Suite::Koenig => "koenig",
            Suite::ForestCriticality => "forest-criticality",
            Suite::BipartiteOracle => "bipartite-oracle",
            Suite::TreeWitness => "tree-witness",
            Suite::ChordalContraction => "gadget-thm2",
            Suite::ChordalDeletion => "gadget-thm3",
            Suite::ApexClique => "gadget-thm6",
            Suite::Roundtrips => "roundtrips",
        }
    }

    /// `(count, max_n)` used when the caller gives none.
    pub fn defaults(self) -> (usize, usize) {
        match self {
            Suite::Koenig => (1000, 12),
            Suite::ForestCriticality => (0, 6),
            Suite::BipartiteOracle => (0, 8),
            Suite::TreeWitness => (500, 14),
            Suite::ChordalContraction | Suite::ChordalDeletion => (200, 7),
            Suite::ApexClique => (200, 8),
            Suite::Roundtrips => (200, 7),
        }
    }

    pub fn config(self, seed: u64) -> SuiteConfig {
        let (count, max_n) = self.defaults();
        SuiteConfig { seed, count, max_n }
    }

    /// Largest `max_n` the suite's referees can handle.
    pub fn max_n_limit(self) -> usize {
        match self {
            Suite::ForestCriticality => ALL_GRAPHS_LIMIT,
            Suite::BipartiteOracle => BIPARTITE_LIMIT,
            _ => 16,
        }
    }

    pub fn run(self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let limit = self.max_n_limit();
        if cfg.max_n > limit {
            return Err(Error::SizeGuard {
                size: cfg.max_n,
                limit,
            });
        }
        match self {
            Suite::Koenig => koenig(cfg),
            Suite::ForestCriticality => forest_criticality(cfg),
            Suite::BipartiteOracle => bipartite_oracle(cfg),
            Suite::TreeWitness => tree_witness(cfg),
            Suite::ChordalContraction => chordal_gadget_suite(cfg, Operation::Contract),
            Suite::ChordalDeletion => chordal_gadget_suite(cfg, Operation::Delete),
            Suite::ApexClique => apex_gadget_suite(cfg),
            Suite::Roundtrips => roundtrips(cfg),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown suite `{s}`")))
    }
}

/// `count` is ignored by the exhaustive suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub count: usize,
    pub max_n: usize,
}

/// A failing instance, written so it can be fed back to the tools: an edge
/// list or a WP2SAT file, plus the remaining parameters.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    pub instance: String,
    pub params: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub config: SuiteConfig,
    /// Instances examined.
    pub instances: usize,
    /// Individual checks performed.
    pub checks: usize,
    /// Instances whose answer was yes, for the decision suites.
    pub yes_instances: usize,
    /// Sorted by instance encoding.
    pub counterexamples: Vec<Counterexample>,
}

impl SuiteReport {
    fn new(suite: Suite, config: &SuiteConfig) -> Self {
        SuiteReport {
            suite: suite.name().to_string(),
            config: *config,
            instances: 0,
            checks: 0,
            yes_instances: 0,
            counterexamples: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    fn check(
        &mut self,
        ok: bool,
        instance: &str,
        params: impl Into<String>,
        reason: impl Into<String>,
    ) {
        self.checks += 1;
        if !ok {
            self.counterexamples.push(Counterexample {
                instance: instance.to_string(),
                params: params.into(),
                reason: reason.into(),
            });
        }
    }

    fn finish(mut self) -> Self {
        self.counterexamples.sort();
        self
    }
}

fn bitmasks(g: &Graph) -> Vec<u32> {
    assert!(
        g.n() <= 24,
        "brute-force referees handle at most 24 vertices"
    );
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0, |m, &u| m | 1 << u))
        .collect()
}

/// α by trying every vertex subset.
pub fn alpha_by_subsets(g: &Graph) -> usize {
    let adj = bitmasks(g);
    (0u32..1 << g.n())
        .filter(|&s| (0..g.n()).all(|v| s >> v & 1 == 0 || adj[v] & s == 0))
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

/// τ by trying every vertex subset.
pub fn tau_by_subsets(g: &Graph) -> usize {
    let edges: Vec<u32> = g.edges().map(|(u, v)| 1 << u | 1 << v).collect();
    (0u32..1 << g.n())
        .filter(|&s| edges.iter().all(|&e| e & s != 0))
        .map(u32::count_ones)
        .min()
        .unwrap_or(0) as usize
}

fn koenig(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::Koenig, cfg);
    let mut rng = rng_from_seed(cfg.seed);
    for _ in 0..cfg.count {
        let n = rng.gen_range(1..=cfg.max_n.max(1));
        let p = rng.gen_range(0.1..0.7);
        let g = random_bipartite(n, p, &mut rng);
        let text = serialize_edge_list(&g);
        report.instances += 1;

        let m = max_matching_bipartite(&g)?;
        let tau = tau_by_subsets(&g);
        let alpha = alpha_by_subsets(&g);
        let (alpha_fast, set) = alpha_bipartite(&g)?;
        report.check(m.is_valid_in(&g), &text, "", "matching is not valid");
        report.check(
            m.len() == tau,
            &text,
            "",
            format!("matching {} but vertex cover {tau}", m.len()),
        );
        report.check(
            tau + alpha == n,
            &text,
            "",
            format!("tau {tau} + alpha {alpha} != {n}"),
        );
        report.check(
            alpha_fast == alpha && set.len() == alpha && g.is_independent(&set),
            &text,
            "",
            format!("matching-based alpha {alpha_fast} {set:?}, subsets give {alpha}"),
        );
    }
    Ok(report.finish())
}

fn forest_criticality(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::ForestCriticality, cfg);
    for n in 0..=cfg.max_n {
        for g in all_graphs(n) {
            report.instances += 1;
            let text = serialize_edge_list(&g);
            let edges: Vec<(usize, usize)> = g.edges().collect();
            let before = alpha_by_subsets(&g);
            let subsets = 1usize << edges.len();
            let mut critical = vec![false; subsets];
            // has_critical_below[s]: some proper subset of s is critical.
            let mut has_critical_below = vec![false; subsets];
            for s in 0..subsets {
                let set: EdgeSet = (0..edges.len())
                    .filter(|i| s >> i & 1 == 1)
                    .map(|i| edges[i])
                    .collect();
                critical[s] = alpha_by_subsets(&g.contract(&set)?.0) < before;
                has_critical_below[s] = (0..edges.len())
                    .filter(|i| s >> i & 1 == 1)
                    .map(|i| s & !(1 << i))
                    .any(|t| critical[t] || has_critical_below[t]);
                if critical[s] && !has_critical_below[s] {
                    let forest = g.spanning_on_edges(&set)?.is_forest();
                    report.check(
                        forest,
                        &text,
                        format!("S = {:?}", set.to_vec()),
                        "minimal critical set has a cycle",
                    );
                }
            }
        }
    }
    Ok(report.finish())
}

fn bipartite_oracle(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::BipartiteOracle, cfg);
    let opts = BruteForceOptions::default();
    for n in 1..=cfg.max_n {
        for g in connected_bipartite_graphs(n) {
            let text = serialize_edge_list(&g);
            for d in 1..=2 {
                for k in 0..=5 {
                    report.instances += 1;
                    let params = format!("op=contract pi=alpha k={k} d={d}");
                    let fast = solve_bipartite_contraction_alpha(&g, k, d)?;
                    let inst = BlockerInstance::new(g.clone(), Operation::Contract, ALPHA, k, d)?;
                    let slow = solve_bruteforce_with(&inst, &opts)?;
                    report.yes_instances += usize::from(slow.is_yes());
                    report.check(
                        fast.answer == slow.answer,
                        &text,
                        params.clone(),
                        format!(
                            "polynomial solver says {}, brute force says {}",
                            fast.answer, slow.answer
                        ),
                    );
                    if let Some(w) = &fast.witness {
                        let ok =
                            w.len() <= k && check_critical_with_limit(&g, w, ALPHA, d, usize::MAX)?;
                        report.check(ok, &text, params, format!("witness {w:?} does not verify"));
                    }
                }
            }
        }
    }
    Ok(report.finish())
}

fn tree_witness(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::TreeWitness, cfg);
    let mut rng = rng_from_seed(cfg.seed);
    while report.instances < cfg.count {
        let d = rng.gen_range(1..=2);
        if cfg.max_n < 2 * d + 2 {
            return Err(Error::Precondition(format!(
                "max_n must be at least {}",
                2 * d + 2
            )));
        }
        let n = rng.gen_range(2 * d + 2..=cfg.max_n);
        let p = rng.gen_range(0.05..0.6);
        let g = random_connected_bipartite(n, p, &mut rng);
        let alpha = alpha_by_subsets(&g);
        if alpha < d + 1 {
            continue;
        }
        report.instances += 1;
        let text = serialize_edge_list(&g);
        let params = format!("d={d}");
        let m = max_matching_bipartite(&g)?;
        let tree = build_tree_witness(&g, &m, d)?;
        let size = tree.edges.len();
        report.check(
            size == 2 * d || size == 2 * d + 1,
            &text,
            params.clone(),
            format!("tree has {size} edges"),
        );
        report.check(
            tree.is_tree(),
            &text,
            params.clone(),
            "tree witness is not a tree",
        );
        let vs = tree.vertices();
        let closed = vs
            .iter()
            .all(|v| m.partner(v).is_none_or(|u| vs.contains(u)));
        report.check(
            closed,
            &text,
            params.clone(),
            "a matched tree vertex lacks its partner",
        );
        let after = alpha_by_subsets(&g.contract(&tree.edges)?.0);
        report.check(
            after + d <= alpha,
            &text,
            params,
            format!("alpha {alpha} -> {after}"),
        );
    }
    Ok(report.finish())
}

/// Triangle-free base graphs with at least one edge, and budgets, for the
/// gadget suites.
fn gadget_bases(cfg: &SuiteConfig, max_k: usize) -> Vec<(Graph, usize)> {
    let mut rng = rng_from_seed(cfg.seed);
    let mut out = Vec::with_capacity(cfg.count);
    while out.len() < cfg.count {
        let n = rng.gen_range(2..=cfg.max_n.max(2));
        let p = rng.gen_range(0.2..0.8);
        let g = random_triangle_free(n, p, &mut rng);
        let k = rng.gen_range(0..=max_k);
        if g.m() > 0 {
            out.push((g, k));
        }
    }
    out
}

const CHORDAL_MAX_K: usize = 3;
const APEX_MAX_K: usize = 4;

fn unbounded() -> BruteForceOptions {
    BruteForceOptions::with_limit(usize::MAX)
}

fn verify_witness(g: &Graph, w: &Witness, pi: ParameterKind, k: usize) -> Result<bool> {
    Ok(w.len() <= k && check_critical_with_limit(g, w, pi, 1, usize::MAX)?)
}

fn chordal_gadget_suite(cfg: &SuiteConfig, op: Operation) -> Result<SuiteReport> {
    let suite = match op {
        Operation::Contract => Suite::ChordalContraction,
        Operation::Delete => Suite::ChordalDeletion,
    };
    let mut report = SuiteReport::new(suite, cfg);
    for (base, k) in gadget_bases(cfg, CHORDAL_MAX_K) {
        report.instances += 1;
        let phi = vc_to_wp2sat(&base, k);
        let text = phi.to_text();
        let params = format!("op={op} pi=alpha k={k} d=1");
        let gadget = build_chordal_gadget(&phi);
        let g = &gadget.graph;
        report.check(
            is_chordal(g).is_some(),
            &text,
            params.clone(),
            "gadget is not chordal",
        );
        let exact = alpha_exact_with_limit(g, usize::MAX)?.0;
        let peo = alpha_chordal(g).map(|(a, _)| a).unwrap_or(usize::MAX);
        report.check(
            exact == phi.num_vars() + 1 && peo == exact,
            &text,
            params.clone(),
            format!(
                "gadget alpha {exact} (elimination ordering {peo}), expected {}",
                phi.num_vars() + 1
            ),
        );

        let sat = solve_wp2sat_bruteforce(&phi)?.is_some();
        let inst = BlockerInstance::new(g.clone(), op, ALPHA, k, 1)?;
        let res = solve_bruteforce_with(&inst, &unbounded())?;
        report.yes_instances += usize::from(res.is_yes());
        report.check(
            sat == res.is_yes(),
            &text,
            params.clone(),
            format!("formula satisfiable: {sat}, blocker answer: {}", res.answer),
        );
        if let Some(w) = &res.witness {
            report.check(
                verify_witness(g, w, ALPHA, k)?,
                &text,
                params,
                format!("witness {w:?} does not verify"),
            );
        }
    }
    Ok(report.finish())
}

fn apex_gadget_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::ApexClique, cfg);
    for (base, k) in gadget_bases(cfg, APEX_MAX_K) {
        report.instances += 1;
        let text = serialize_edge_list(&base);
        let params = format!("op=contract pi=omega k={k} d=1");
        let gadget = build_apex_gadget(&base)?;
        let g = &gadget.graph;
        report.check(
            is_c3_plus_p1_free(g),
            &text,
            params.clone(),
            "gadget contains C3 + P1",
        );
        let omega = omega_exact_with_limit(g, usize::MAX)?.0;
        report.check(
            omega == 3,
            &text,
            params.clone(),
            format!("gadget omega is {omega}"),
        );

        let has_cover = tau_by_subsets(&base) <= k;
        let inst = BlockerInstance::new(g.clone(), Operation::Contract, OMEGA, k, 1)?;
        let res = solve_bruteforce_with(&inst, &unbounded())?;
        report.yes_instances += usize::from(res.is_yes());
        report.check(
            has_cover == res.is_yes(),
            &text,
            params.clone(),
            format!(
                "vertex cover within k: {has_cover}, blocker answer: {}",
                res.answer
            ),
        );
        if let Some(w) = &res.witness {
            report.check(
                verify_witness(g, w, OMEGA, k)?,
                &text,
                params,
                format!("witness {w:?} does not verify"),
            );
        }
    }
    Ok(report.finish())
}

fn roundtrips(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::Roundtrips, cfg);
    for (base, k) in gadget_bases(cfg, CHORDAL_MAX_K) {
        let phi = vc_to_wp2sat(&base, k);
        for op in [Operation::Contract, Operation::Delete] {
            report.instances += 1;
            chordal_roundtrip(&mut report, &phi, op)?;
        }
    }
    let apex_cfg = SuiteConfig {
        max_n: cfg.max_n.max(Suite::ApexClique.defaults().1),
        ..*cfg
    };
    for (base, k) in gadget_bases(&apex_cfg, APEX_MAX_K) {
        report.instances += 1;
        apex_roundtrip(&mut report, &base, k)?;
    }
    Ok(report.finish())
}

fn chordal_roundtrip(report: &mut SuiteReport, phi: &Wp2SatInstance, op: Operation) -> Result<()> {
    let text = phi.to_text();
    let params = format!("op={op} pi=alpha k={} d=1", phi.k());
    let gadget = build_chordal_gadget(phi);
    let g = &gadget.graph;
    let k = phi.k();
    let to_witness = |a: &Assignment| -> Result<Witness> {
        Ok(match op {
            Operation::Contract => {
                Witness::Contract(assignment_to_contraction_witness(&gadget, a)?)
            }
            Operation::Delete => Witness::Delete(assignment_to_deletion_witness(&gadget, a)?),
        })
    };
    let to_assignment = |w: &Witness| -> Result<Assignment> {
        match w {
            Witness::Contract(s) => contraction_witness_to_assignment(&gadget, s),
            Witness::Delete(u) => deletion_witness_to_assignment(&gadget, u),
        }
    };

    let inst = BlockerInstance::new(g.clone(), op, ALPHA, k, 1)?;
    let res = solve_bruteforce_with(&inst, &unbounded())?;
    let Some(a) = solve_wp2sat_bruteforce(phi)? else {
        report.check(
            !res.is_yes(),
            &text,
            params,
            "blocker yes on an unsatisfiable formula",
        );
        return Ok(());
    };
    report.yes_instances += 1;

    let w = to_witness(&a)?;
    report.check(
        verify_witness(g, &w, ALPHA, k)?,
        &text,
        params.clone(),
        format!("assignment {a:?} gives witness {w:?}"),
    );
    match to_assignment(&w) {
        Ok(back) => report.check(
            phi.accepts(&back),
            &text,
            params.clone(),
            format!("{w:?} translates back to {back:?}"),
        ),
        Err(e) => report.check(
            false,
            &text,
            params.clone(),
            format!("{w:?} fails to translate back: {e}"),
        ),
    }

    let Some(found) = res.witness else {
        report.check(false, &text, params, "blocker no on a satisfiable formula");
        return Ok(());
    };
    match to_assignment(&found) {
        Ok(a) => {
            report.check(
                phi.accepts(&a),
                &text,
                params.clone(),
                format!("{found:?} translates to {a:?}"),
            );
            let again = to_witness(&a)?;
            report.check(
                verify_witness(g, &again, ALPHA, k)?,
                &text,
                params,
                format!("{a:?} gives witness {again:?}"),
            );
        }
        Err(e) => report.check(
            false,
            &text,
            params,
            format!("{found:?} fails to translate: {e}"),
        ),
    }
    Ok(())
}

fn apex_roundtrip(report: &mut SuiteReport, base: &Graph, k: usize) -> Result<()> {
    let text = serialize_edge_list(base);
    let params = format!("op=contract pi=omega k={k} d=1");
    let gadget = build_apex_gadget(base)?;
    let g = &gadget.graph;
    let inst = BlockerInstance::new(g.clone(), Operation::Contract, OMEGA, k, 1)?;
    let res = solve_bruteforce_with(&inst, &unbounded())?;
    let cover = solve_wp2sat_bruteforce(&vc_to_wp2sat(base, k))?.map(|a| a.true_vars);
    let Some(cover) = cover else {
        report.check(
            !res.is_yes(),
            &text,
            params,
            "blocker yes without a vertex cover",
        );
        return Ok(());
    };
    report.yes_instances += 1;

    let accepts = |c: &VertexSet| c.len() <= k && base.is_vertex_cover(c);
    let s = vc_witness_to_contraction_witness(&gadget, &cover)?;
    let w = Witness::Contract(s.clone());
    report.check(
        verify_witness(g, &w, OMEGA, k)?,
        &text,
        params.clone(),
        format!("cover {cover:?} gives {s:?}"),
    );
    match contraction_witness_to_vc(&gadget, &s) {
        Ok(back) => report.check(
            accepts(&back),
            &text,
            params.clone(),
            format!("{s:?} translates back to {back:?}"),
        ),
        Err(e) => report.check(
            false,
            &text,
            params.clone(),
            format!("{s:?} fails to translate back: {e}"),
        ),
    }

    let Some(Witness::Contract(found)) = res.witness else {
        report.check(
            false,
            &text,
            params,
            "blocker no although a vertex cover exists",
        );
        return Ok(());
    };
    match contraction_witness_to_vc(&gadget, &found) {
        Ok(c) => {
            report.check(
                accepts(&c),
                &text,
                params.clone(),
                format!("{found:?} translates to {c:?}"),
            );
            let again = Witness::Contract(vc_witness_to_contraction_witness(&gadget, &c)?);
            report.check(
                verify_witness(g, &again, OMEGA, k)?,
                &text,
                params,
                format!("{c:?} gives {again:?}"),
            );
        }
        Err(e) => report.check(
            false,
            &text,
            params,
            format!("{found:?} fails to translate: {e}"),
        ),
    }
    Ok(())
}
