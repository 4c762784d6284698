//! Shrinking a critical witness until no single element can be dropped.

use crate::error::{Error, Result};
use crate::graph::{DisjointSets, EdgeSet, Graph, VertexSet};
use crate::invariants::{check_critical_with_limit, ParameterKind, Witness};

fn still_critical(
    g: &Graph,
    w: &Witness,
    pi: ParameterKind,
    d: usize,
    limit: usize,
) -> Result<bool> {
    check_critical_with_limit(g, w, pi, d, limit)
}

/// Restricts `s` to a spanning forest of `G|_S` (same contraction), then
/// drops edges one at a time, in ascending order, while the set stays
/// critical. The result is a forest and no single edge can be removed.
pub fn minimize_contraction_witness(
    g: &Graph,
    s: &EdgeSet,
    pi: ParameterKind,
    d: usize,
    limit: usize,
) -> Result<EdgeSet> {
    if !still_critical(g, &Witness::Contract(s.clone()), pi, d, limit)? {
        return Err(Error::InvalidWitness(format!(
            "edge set {s:?} is not {pi}-critical"
        )));
    }
    let mut dsu = DisjointSets::new(g.n());
    let mut kept: EdgeSet = s.iter().filter(|&(u, v)| dsu.union(u, v)).collect();
    for e in kept.to_vec() {
        kept.remove(e.0, e.1);
        if !still_critical(g, &Witness::Contract(kept.clone()), pi, d, limit)? {
            kept.insert(e.0, e.1);
        }
    }
    Ok(kept)
}

/// Drops vertices one at a time, in ascending order, while the set stays
/// critical.
pub fn minimize_deletion_witness(
    g: &Graph,
    u: &VertexSet,
    pi: ParameterKind,
    d: usize,
    limit: usize,
) -> Result<VertexSet> {
    if !still_critical(g, &Witness::Delete(u.clone()), pi, d, limit)? {
        return Err(Error::InvalidWitness(format!(
            "vertex set {u:?} is not {pi}-critical"
        )));
    }
    let mut kept = u.clone();
    for v in u.iter() {
        kept.remove(v);
        if !still_critical(g, &Witness::Delete(kept.clone()), pi, d, limit)? {
            kept.insert(v);
        }
    }
    Ok(kept)
}
