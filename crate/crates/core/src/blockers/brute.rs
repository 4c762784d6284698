//! Exhaustive reference solver.
//!
//! Candidate sets are tried by increasing size and, within a size, in
//! lexicographic order, so the first hit is a minimum-cardinality witness
//! that is lexicographically smallest among those.
//!
//! Two prunings keep the enumeration exact:
//!
//! - Contraction only visits edge sets that span a forest. Every `S` has a
//!   spanning forest `S'` with the same component partition, hence
//!   `G/S = G/S'`, and `|S'| <= |S|`.
//! - Twin symmetry. Vertices with equal closed neighbourhoods (or equal open
//!   neighbourhoods) can be permuted freely by automorphisms. Only sets that
//!   touch a prefix of every such class are evaluated; the order-preserving
//!   map onto that prefix moves every touched vertex down, so the
//!   lexicographically first witness already has prefix form.

use super::{BlockerInstance, BlockerResult};
use crate::error::{Error, Result};
use crate::graph::{is_bipartite, is_chordal, DisjointSets, Edge, Graph, VertexId, VertexSet};
use crate::invariants::{alpha_along_peo, alpha_bipartite, mis, Operation, ParameterKind, Witness};

/// Default vertex limit for contraction instances whose π needs the exact
/// solver.
pub const CONTRACT_LIMIT: usize = 16;
/// Default vertex limit for deletion instances whose π needs the exact
/// solver.
pub const DELETE_LIMIT: usize = 20;

#[derive(Clone, Debug)]
pub struct BruteForceOptions {
    /// Overrides the per-operation vertex limit.
    pub max_vertices: Option<usize>,
    pub twin_symmetry: bool,
}

impl Default for BruteForceOptions {
    fn default() -> Self {
        BruteForceOptions {
            max_vertices: None,
            twin_symmetry: true,
        }
    }
}

impl BruteForceOptions {
    pub fn with_limit(limit: usize) -> Self {
        BruteForceOptions {
            max_vertices: Some(limit),
            ..Self::default()
        }
    }
}

/// How π is evaluated on modified graphs. Chordality survives both
/// contraction and deletion; bipartiteness survives deletion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Engine {
    Chordal,
    Bipartite,
    Exact,
}

impl Engine {
    fn select(inst: &BlockerInstance) -> Engine {
        if inst.pi != ParameterKind::Independence {
            return Engine::Exact;
        }
        if is_chordal(&inst.graph).is_some() {
            Engine::Chordal
        } else if inst.operation == Operation::Delete && is_bipartite(&inst.graph).is_some() {
            Engine::Bipartite
        } else {
            Engine::Exact
        }
    }

    fn value(self, g: &Graph, pi: ParameterKind) -> usize {
        match (pi, self) {
            (ParameterKind::Clique, _) => mis::independence_number(&g.complement()),
            (_, Engine::Chordal) => match is_chordal(g) {
                Some(peo) => alpha_along_peo(g, &peo).0,
                None => mis::independence_number(g),
            },
            (_, Engine::Bipartite) => match alpha_bipartite(g) {
                Ok((a, _)) => a,
                Err(_) => mis::independence_number(g),
            },
            (_, Engine::Exact) => mis::independence_number(g),
        }
    }
}

/// Per vertex: `(class, position)` inside its twin class, for classes of
/// size at least two.
fn twin_positions(g: &Graph) -> Vec<Option<(usize, usize)>> {
    let mut slots = vec![None; g.n()];
    let mut classes = 0;
    for closed in [true, false] {
        let key = |v: VertexId| {
            let mut nb = g.neighbors(v).to_vec();
            if closed {
                nb.push(v);
                nb.sort_unstable();
            }
            nb
        };
        let mut groups: std::collections::BTreeMap<Vec<VertexId>, Vec<VertexId>> =
            Default::default();
        for v in g.vertices() {
            groups.entry(key(v)).or_default().push(v);
        }
        for members in groups.into_values().filter(|m| m.len() >= 2) {
            for (pos, &v) in members.iter().enumerate() {
                debug_assert!(slots[v].is_none());
                slots[v] = Some((classes, pos));
            }
            classes += 1;
        }
    }
    slots
}

struct PrefixCheck {
    slots: Vec<Option<(usize, usize)>>,
    classes: usize,
}

impl PrefixCheck {
    fn new(g: &Graph, enabled: bool) -> Option<Self> {
        if !enabled {
            return None;
        }
        let slots = twin_positions(g);
        let classes = slots
            .iter()
            .flatten()
            .map(|&(c, _)| c + 1)
            .max()
            .unwrap_or(0);
        (classes > 0).then_some(PrefixCheck { slots, classes })
    }

    /// `touched` must be sorted and deduplicated.
    fn accepts(&self, touched: &[VertexId]) -> bool {
        let mut count = vec![0usize; self.classes];
        let mut top = vec![0usize; self.classes];
        for &v in touched {
            if let Some((c, pos)) = self.slots[v] {
                count[c] += 1;
                top[c] = top[c].max(pos + 1);
            }
        }
        count == top
    }
}

pub fn solve_bruteforce(inst: &BlockerInstance) -> Result<BlockerResult> {
    solve_bruteforce_with(inst, &BruteForceOptions::default())
}

pub fn solve_bruteforce_with(
    inst: &BlockerInstance,
    opts: &BruteForceOptions,
) -> Result<BlockerResult> {
    let g = &inst.graph;
    if inst.d == 0 {
        return Err(Error::Precondition("threshold d must be at least 1".into()));
    }
    let engine = Engine::select(inst);
    // Without an explicit limit, only exact evaluation of π is guarded.
    let limit = match (opts.max_vertices, engine) {
        (Some(limit), _) => limit,
        (None, Engine::Exact) => match inst.operation {
            Operation::Contract => CONTRACT_LIMIT,
            Operation::Delete => DELETE_LIMIT,
        },
        (None, _) => usize::MAX,
    };
    if g.n() > limit {
        return Err(Error::SizeGuard { size: g.n(), limit });
    }
    let before = engine.value(g, inst.pi);
    let search = Search {
        g,
        pi: inst.pi,
        engine,
        target: before.checked_sub(inst.d),
        prefix: PrefixCheck::new(g, opts.twin_symmetry),
    };
    if search.target.is_none() {
        return Ok(BlockerResult::no(before));
    }
    let found = match inst.operation {
        Operation::Contract => search.contractions(inst.k),
        Operation::Delete => search.deletions(inst.k),
    };
    Ok(match found {
        Some((witness, after)) => BlockerResult::yes(witness, before, after),
        None => BlockerResult::no(before),
    })
}

struct Search<'a> {
    g: &'a Graph,
    pi: ParameterKind,
    engine: Engine,
    target: Option<usize>,
    prefix: Option<PrefixCheck>,
}

impl Search<'_> {
    fn hits(&self, h: &Graph) -> Option<usize> {
        let after = self.engine.value(h, self.pi);
        (after <= self.target.expect("target checked before searching")).then_some(after)
    }

    fn prefix_ok(&self, touched: &mut Vec<VertexId>) -> bool {
        match &self.prefix {
            None => true,
            Some(p) => {
                touched.sort_unstable();
                touched.dedup();
                p.accepts(touched)
            }
        }
    }

    fn contractions(&self, k: usize) -> Option<(Witness, usize)> {
        let edges: Vec<Edge> = self.g.edges().collect();
        let max_size = k.min(self.g.n().saturating_sub(1)).min(edges.len());
        (1..=max_size).find_map(|size| {
            let mut chosen = Vec::with_capacity(size);
            self.grow_forest(&edges, size, 0, &mut chosen, &DisjointSets::new(self.g.n()))
        })
    }

    fn grow_forest(
        &self,
        edges: &[Edge],
        size: usize,
        start: usize,
        chosen: &mut Vec<Edge>,
        dsu: &DisjointSets,
    ) -> Option<(Witness, usize)> {
        if chosen.len() == size {
            let mut touched: Vec<VertexId> = chosen.iter().flat_map(|&(u, v)| [u, v]).collect();
            if !self.prefix_ok(&mut touched) {
                return None;
            }
            let (h, _) = self.g.contract_unchecked(chosen.iter().copied());
            return self
                .hits(&h)
                .map(|after| (Witness::Contract(chosen.iter().copied().collect()), after));
        }
        let remaining = size - chosen.len();
        for i in start..=edges.len() - remaining {
            let (u, v) = edges[i];
            let mut next = dsu.clone();
            if !next.union(u, v) {
                continue;
            }
            chosen.push(edges[i]);
            let hit = self.grow_forest(edges, size, i + 1, chosen, &next);
            chosen.pop();
            if hit.is_some() {
                return hit;
            }
        }
        None
    }

    fn deletions(&self, k: usize) -> Option<(Witness, usize)> {
        let n = self.g.n();
        (1..=k.min(n)).find_map(|size| {
            let mut chosen = Vec::with_capacity(size);
            self.grow_deletion(size, 0, &mut chosen)
        })
    }

    fn grow_deletion(
        &self,
        size: usize,
        start: usize,
        chosen: &mut Vec<VertexId>,
    ) -> Option<(Witness, usize)> {
        if chosen.len() == size {
            if !self.prefix_ok(&mut chosen.clone()) {
                return None;
            }
            let set: VertexSet = chosen.iter().copied().collect();
            let (h, _) = self
                .g
                .delete_vertices(&set)
                .expect("chosen ids are in range");
            return self.hits(&h).map(|after| (Witness::Delete(set), after));
        }
        let remaining = size - chosen.len();
        for v in start..=self.g.n() - remaining {
            chosen.push(v);
            let hit = self.grow_deletion(size, v + 1, chosen);
            chosen.pop();
            if hit.is_some() {
                return hit;
            }
        }
        None
    }
}
