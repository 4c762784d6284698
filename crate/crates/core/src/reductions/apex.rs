//! Vertex Cover on triangle-free graphs to Contraction Blocker(ω) on
//! (C3 + P1)-free graphs: add a universal vertex `w`. Every triangle of the
//! result runs through `w`, and contracting `vw` acts like deleting `v`.

use crate::blockers::minimize_contraction_witness;
use crate::error::{Error, Result};
use crate::graph::{is_c3_free, DisjointSets, EdgeSet, Graph, VertexId, VertexSet};
use crate::invariants::ParameterKind;

use super::chordal::Role;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApexGadget {
    pub graph: Graph,
    /// The universal vertex, numbered after every base vertex.
    pub apex: VertexId,
    pub base_n: usize,
}

impl ApexGadget {
    pub fn base(&self) -> Graph {
        self.graph
            .delete_vertices(&[self.apex].into())
            .expect("apex is a vertex of the gadget")
            .0
    }

    pub fn roles(&self) -> Vec<Role> {
        (0..self.base_n)
            .map(|vertex| Role::Base { vertex })
            .chain(std::iter::once(Role::Universal))
            .collect()
    }
}

pub fn build_apex_gadget(g: &Graph) -> Result<ApexGadget> {
    if !is_c3_free(g) {
        return Err(Error::Precondition("base graph contains a triangle".into()));
    }
    if g.m() == 0 {
        return Err(Error::Precondition("base graph has no edges".into()));
    }
    let mut graph = g.clone();
    let apex = graph.add_universal_vertex();
    Ok(ApexGadget {
        graph,
        apex,
        base_n: g.n(),
    })
}

/// `S = {vw : v ∈ cover}`.
pub fn vc_witness_to_contraction_witness(
    gadget: &ApexGadget,
    cover: &VertexSet,
) -> Result<EdgeSet> {
    if cover.iter().any(|v| v >= gadget.base_n) {
        return Err(Error::InvalidWitness(format!(
            "{cover:?} is not a set of base vertices"
        )));
    }
    if !gadget.base().is_vertex_cover(cover) {
        return Err(Error::InvalidWitness(format!(
            "{cover:?} is not a vertex cover"
        )));
    }
    Ok(cover.iter().map(|v| (v, gadget.apex)).collect())
}

/// From each non-trivial component of `G'|_S` take every vertex except one:
/// `w` where present, the smallest id otherwise. `s` is first reduced to a
/// critical forest from which no single edge can be dropped, so the cover
/// has exactly as many vertices as the reduced set has edges.
pub fn contraction_witness_to_vc(gadget: &ApexGadget, s: &EdgeSet) -> Result<VertexSet> {
    let s = minimize_contraction_witness(&gadget.graph, s, ParameterKind::Clique, 1, usize::MAX)?;
    let mut dsu = DisjointSets::new(gadget.graph.n());
    for (u, v) in s.iter() {
        dsu.union(u, v);
    }
    let touched = s.endpoints();
    let mut spared = std::collections::BTreeMap::new();
    for v in touched.iter() {
        let root = dsu.find(v);
        let keep = spared.entry(root).or_insert(v);
        if v == gadget.apex {
            *keep = v;
        }
    }
    let cover: VertexSet = touched
        .iter()
        .filter(|&v| spared[&dsu.find(v)] != v)
        .collect();
    if cover.len() != s.len() || !gadget.base().is_vertex_cover(&cover) {
        return Err(Error::InvalidWitness(format!(
            "internal: translated set {cover:?} is not a vertex cover of size {}",
            s.len()
        )));
    }
    Ok(cover)
}
