//! Contraction-blocking α on connected bipartite graphs in polynomial time
//! for fixed `d`.
//!
//! Dispatch, in order:
//! 1. at most `2d + 1` vertices: plain enumeration of edge subsets;
//! 2. `α(G) <= d`: no, since contraction never empties the graph;
//! 3. `k >= 2d + 1`: yes, witnessed by the tree of [`build_tree_witness`];
//! 4. otherwise every `S` with `|S| <= k` is tried, with `α(G/S)` computed
//!    by [`alpha_after_contraction_bipartite`].

use serde::{Deserialize, Serialize};

use super::{BlockerResult, Witness};
use crate::error::{Error, Result};
use crate::graph::{is_bipartite, Edge, EdgeSet, Graph, VertexId, VertexSet};
use crate::invariants::{
    alpha_bipartite, check_critical_with_limit, max_matching_bipartite, mis, Matching,
    ParameterKind,
};

/// Largest `d` the solver accepts; the enumeration grows like `|E|^(2d)`.
pub const MAX_BIPARTITE_D: usize = 3;

/// Cap on `|U|` in the inner subset loop of
/// [`alpha_after_contraction_bipartite`].
const MAX_MERGED: usize = 20;

/// A subtree of the host graph, given by its edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeWitness {
    pub edges: EdgeSet,
}

impl TreeWitness {
    pub fn vertices(&self) -> VertexSet {
        self.edges.endpoints()
    }

    /// Connected, acyclic, `|V| = |E| + 1`.
    pub fn is_tree(&self) -> bool {
        let verts = self.vertices().to_vec();
        if verts.len() != self.edges.len() + 1 {
            return false;
        }
        let index = |v: VertexId| verts.binary_search(&v).unwrap();
        let local = Graph::from_edges(
            verts.len(),
            self.edges.iter().map(|(u, v)| (index(u), index(v))),
        )
        .expect("local ids are in range");
        local.is_connected()
    }
}

fn require_connected_bipartite(g: &Graph) -> Result<()> {
    if is_bipartite(g).is_none() || !g.is_connected() {
        return Err(Error::ClassViolation("connected and bipartite"));
    }
    Ok(())
}

/// Grows a tree from a matching edge. While the tree has at most `2d - 1`
/// edges, attach the smallest outside neighbour `w` of the tree through its
/// smallest tree neighbour `w'`; if `w` is matched, its partner comes along
/// with the matching edge. The result has `2d` or `2d + 1` edges and
/// contains the partner of each of its matched vertices.
pub fn build_tree_witness(g: &Graph, m: &Matching, d: usize) -> Result<TreeWitness> {
    require_connected_bipartite(g)?;
    if d == 0 {
        return Err(Error::Precondition("d must be at least 1".into()));
    }
    if g.n() < 2 * d + 2 {
        return Err(Error::Precondition(format!(
            "need at least {} vertices, graph has {}",
            2 * d + 2,
            g.n()
        )));
    }
    if !m.is_valid_in(g) {
        return Err(Error::Precondition("not a matching of the graph".into()));
    }
    if m.len() != max_matching_bipartite(g)?.len() {
        return Err(Error::Precondition("matching is not maximum".into()));
    }
    let (u, u2) = m
        .edges
        .iter()
        .next()
        .ok_or_else(|| Error::Precondition("matching is empty".into()))?;

    let mut partner = vec![None; g.n()];
    for (a, b) in m.edges.iter() {
        partner[a] = Some(b);
        partner[b] = Some(a);
    }
    let mut in_tree = vec![false; g.n()];
    in_tree[u] = true;
    in_tree[u2] = true;
    let mut edges = EdgeSet::from([(u, u2)]);

    while edges.len() < 2 * d {
        let w = g
            .vertices()
            .find(|&w| !in_tree[w] && g.neighbors(w).iter().any(|&x| in_tree[x]))
            .expect("a connected graph with more vertices has a tree neighbour");
        let attach = *g
            .neighbors(w)
            .iter()
            .find(|&&x| in_tree[x])
            .expect("w was chosen adjacent to the tree");
        in_tree[w] = true;
        edges.insert(attach, w);
        if let Some(v) = partner[w] {
            debug_assert!(!in_tree[v], "partners of tree vertices are in the tree");
            in_tree[v] = true;
            edges.insert(v, w);
        }
    }
    Ok(TreeWitness { edges })
}

/// α(G/S) for bipartite `G`. With `U` the merged vertices of `G/S`, every
/// independent set of `G/S` splits into an independent `U' ⊆ U` and an
/// independent set of `G/S − (U ∪ N(U'))`, which is an induced subgraph of
/// `G − V(S)` and therefore bipartite.
pub fn alpha_after_contraction_bipartite(g: &Graph, s: &EdgeSet) -> Result<usize> {
    if is_bipartite(g).is_none() {
        return Err(Error::ClassViolation("bipartite"));
    }
    let (h, map) = g.contract(s)?;
    let merged: Vec<VertexId> = h
        .vertices()
        .filter(|&r| map.component_sizes[r] >= 2)
        .collect();
    if merged.len() > MAX_MERGED {
        return Err(Error::Unsupported(format!(
            "{} merged vertices exceed the subset-loop cap of {MAX_MERGED}",
            merged.len()
        )));
    }
    let mut best = 0;
    for mask in 0u32..1 << merged.len() {
        let chosen: VertexSet = (0..merged.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| merged[i])
            .collect();
        if !h.is_independent(&chosen) {
            continue;
        }
        let removed = h
            .closed_neighborhood(&chosen)?
            .union(&merged.iter().copied().collect());
        let (rest, _) = h.delete_vertices(&removed)?;
        let (rest_alpha, _) = alpha_bipartite(&rest)?;
        best = best.max(rest_alpha + chosen.len());
    }
    Ok(best)
}

/// Visits every `size`-subset of `0..len` in lexicographic order until `f`
/// returns `Some`.
fn first_combination<T>(
    len: usize,
    size: usize,
    mut f: impl FnMut(&[usize]) -> Option<T>,
) -> Option<T> {
    if size > len {
        return None;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        if let Some(hit) = f(&idx) {
            return Some(hit);
        }
        let i = (0..size).rev().find(|&i| idx[i] < len - size + i)?;
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Smallest-then-lexicographic `S` with `|S| <= k` and `score(S) <= target`.
fn first_subset(
    edges: &[Edge],
    k: usize,
    mut score: impl FnMut(&EdgeSet) -> Result<usize>,
    target: usize,
) -> Result<Option<(EdgeSet, usize)>> {
    for size in 1..=k.min(edges.len()) {
        let mut failure = None;
        let hit = first_combination(edges.len(), size, |idx| {
            let s: EdgeSet = idx.iter().map(|&i| edges[i]).collect();
            match score(&s) {
                Ok(v) if v <= target => Some((s, v)),
                Ok(_) => None,
                Err(e) => {
                    failure = Some(e);
                    Some((s, usize::MAX))
                }
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        if hit.is_some() {
            return Ok(hit);
        }
    }
    Ok(None)
}

/// Decides d-Contraction Blocker(α) on a connected bipartite graph; every
/// yes-answer carries a witness that has been re-checked.
pub fn solve_bipartite_contraction_alpha(g: &Graph, k: usize, d: usize) -> Result<BlockerResult> {
    if d == 0 {
        return Err(Error::Precondition("threshold d must be at least 1".into()));
    }
    if d > MAX_BIPARTITE_D {
        return Err(Error::Unsupported(format!(
            "d = {d} exceeds the supported maximum of {MAX_BIPARTITE_D}"
        )));
    }
    require_connected_bipartite(g)?;
    let (alpha, _) = alpha_bipartite(g)?;
    let edges: Vec<Edge> = g.edges().collect();

    let found = if g.n() <= 2 * d + 1 {
        let target = alpha.checked_sub(d);
        match target {
            None => None,
            Some(t) => first_subset(
                &edges,
                k,
                |s| Ok(mis::independence_number(&g.contract(s)?.0)),
                t,
            )?,
        }
    } else if alpha <= d {
        None
    } else if k > 2 * d {
        let m = max_matching_bipartite(g)?;
        let tree = build_tree_witness(g, &m, d)?;
        let after = alpha_after_contraction_bipartite(g, &tree.edges)?;
        Some((tree.edges, after))
    } else {
        first_subset(
            &edges,
            k,
            |s| alpha_after_contraction_bipartite(g, s),
            alpha - d,
        )?
    };

    let Some((s, after)) = found else {
        return Ok(BlockerResult::no(alpha));
    };
    let witness = Witness::Contract(s);
    if witness.len() > k
        || !check_critical_with_limit(g, &witness, ParameterKind::Independence, d, usize::MAX)?
    {
        return Err(Error::InvalidWitness(format!(
            "internal: witness {witness:?} failed re-verification"
        )));
    }
    Ok(BlockerResult::yes(witness, alpha, after))
}
