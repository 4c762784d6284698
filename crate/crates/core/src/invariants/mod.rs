//! The graph parameters blocker problems act on: independence number α and
//! clique number ω, with polynomial fast paths for bipartite and chordal
//! graphs, and the criticality check every witness goes through.

mod matching;
pub(crate) mod mis;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use matching::{alpha_bipartite, max_matching_bipartite, Matching};

use crate::error::{Error, Result};
use crate::graph::{is_bipartite, is_chordal, EdgeSet, Graph, VertexSet};

/// Exact (exponential) solvers refuse larger inputs unless a limit is given
/// explicitly.
pub const ORACLE_LIMIT: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParameterKind {
    /// α, the independence number.
    #[serde(rename = "alpha")]
    Independence,
    /// ω, the clique number.
    #[serde(rename = "omega")]
    Clique,
}

impl fmt::Display for ParameterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParameterKind::Independence => "alpha",
            ParameterKind::Clique => "omega",
        })
    }
}

impl FromStr for ParameterKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alpha" => Ok(ParameterKind::Independence),
            "omega" => Ok(ParameterKind::Clique),
            other => Err(Error::Unsupported(format!("unknown parameter `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Operation {
    Contract,
    Delete,
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Operation::Contract => "contract",
            Operation::Delete => "delete",
        })
    }
}

impl FromStr for Operation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "contract" => Ok(Operation::Contract),
            "delete" => Ok(Operation::Delete),
            other => Err(Error::Unsupported(format!("unknown operation `{other}`"))),
        }
    }
}

/// An edge set to contract or a vertex set to delete.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "operation", content = "set", rename_all = "lowercase")]
pub enum Witness {
    Contract(EdgeSet),
    Delete(VertexSet),
}

impl Witness {
    pub fn operation(&self) -> Operation {
        match self {
            Witness::Contract(_) => Operation::Contract,
            Witness::Delete(_) => Operation::Delete,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Witness::Contract(s) => s.len(),
            Witness::Delete(u) => u.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The graph after applying the witness; errors if ill-formed for `g`.
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        match self {
            Witness::Contract(s) => Ok(g.contract(s)?.0),
            Witness::Delete(u) => Ok(g.delete_vertices(u)?.0),
        }
    }
}

fn guard(g: &Graph, limit: usize) -> Result<()> {
    if g.n() > limit {
        Err(Error::SizeGuard { size: g.n(), limit })
    } else {
        Ok(())
    }
}

/// α(g) and the lexicographically smallest maximum independent set.
/// Refuses graphs above [`ORACLE_LIMIT`] vertices.
pub fn alpha_exact(g: &Graph) -> Result<(usize, VertexSet)> {
    alpha_exact_with_limit(g, ORACLE_LIMIT)
}

pub fn alpha_exact_with_limit(g: &Graph, limit: usize) -> Result<(usize, VertexSet)> {
    guard(g, limit)?;
    Ok(mis::maximum_independent_set(g))
}

/// ω(g) via α of the complement; the witness is the lexicographically
/// smallest maximum clique.
pub fn omega_exact(g: &Graph) -> Result<(usize, VertexSet)> {
    omega_exact_with_limit(g, ORACLE_LIMIT)
}

pub fn omega_exact_with_limit(g: &Graph, limit: usize) -> Result<(usize, VertexSet)> {
    guard(g, limit)?;
    Ok(mis::maximum_independent_set(&g.complement()))
}

/// Greedy along a perfect elimination ordering: take every vertex not yet
/// dominated, then mark its closed neighbourhood.
pub fn alpha_chordal(g: &Graph) -> Result<(usize, VertexSet)> {
    let peo = is_chordal(g).ok_or(Error::ClassViolation("chordal"))?;
    Ok(alpha_along_peo(g, &peo))
}

pub(crate) fn alpha_along_peo(g: &Graph, peo: &[usize]) -> (usize, VertexSet) {
    let mut marked = vec![false; g.n()];
    let mut set = VertexSet::new();
    for &v in peo {
        if !marked[v] {
            set.insert(v);
            marked[v] = true;
            for &u in g.neighbors(v) {
                marked[u] = true;
            }
        }
    }
    (set.len(), set)
}

/// α(g) value by the cheapest applicable route: bipartite → matching,
/// chordal → elimination ordering, otherwise the exact solver within
/// `limit` vertices.
pub fn alpha_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    if is_bipartite(g).is_some() {
        return Ok(alpha_bipartite(g)?.0);
    }
    if let Some(peo) = is_chordal(g) {
        return Ok(alpha_along_peo(g, &peo).0);
    }
    guard(g, limit)?;
    Ok(mis::independence_number(g))
}

pub fn alpha(g: &Graph) -> Result<usize> {
    alpha_with_limit(g, ORACLE_LIMIT)
}

/// π(g), exact within `limit` vertices.
pub fn parameter_value_with_limit(g: &Graph, pi: ParameterKind, limit: usize) -> Result<usize> {
    match pi {
        ParameterKind::Independence => alpha_with_limit(g, limit),
        ParameterKind::Clique => Ok(omega_exact_with_limit(g, limit)?.0),
    }
}

pub fn parameter_value(g: &Graph, pi: ParameterKind) -> Result<usize> {
    parameter_value_with_limit(g, pi, ORACLE_LIMIT)
}

/// τ(g) = |V(g)| − α(g).
pub fn tau(g: &Graph) -> Result<usize> {
    Ok(g.n() - alpha(g)?)
}

/// Whether applying `witness` lowers π by at least `d`.
pub fn check_critical(g: &Graph, witness: &Witness, pi: ParameterKind, d: usize) -> Result<bool> {
    check_critical_with_limit(g, witness, pi, d, ORACLE_LIMIT)
}

pub fn check_critical_with_limit(
    g: &Graph,
    witness: &Witness,
    pi: ParameterKind,
    d: usize,
    limit: usize,
) -> Result<bool> {
    let after = witness.apply(g)?;
    let before = parameter_value_with_limit(g, pi, limit)?;
    let after = parameter_value_with_limit(&after, pi, limit)?;
    Ok(after + d <= before)
}
