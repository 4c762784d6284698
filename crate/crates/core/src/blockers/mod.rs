//! d-Contraction Blocker(π) and d-Deletion Blocker(π).
//!
//! [`solve_bruteforce`] is the reference solver for any graph at oracle
//! scale. [`solve_bipartite_contraction_alpha`] is the polynomial solver for
//! contraction-blocking α on connected bipartite graphs with small fixed `d`.

mod bipartite;
mod brute;
mod minimize;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use bipartite::{
    alpha_after_contraction_bipartite, build_tree_witness, solve_bipartite_contraction_alpha,
    TreeWitness, MAX_BIPARTITE_D,
};
pub use brute::{
    solve_bruteforce, solve_bruteforce_with, BruteForceOptions, CONTRACT_LIMIT, DELETE_LIMIT,
};
pub use minimize::{minimize_contraction_witness, minimize_deletion_witness};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{Operation, ParameterKind, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockerInstance {
    pub graph: Graph,
    pub operation: Operation,
    pub pi: ParameterKind,
    /// Budget: at most this many edges contracted or vertices deleted.
    pub k: usize,
    /// Required drop of π.
    pub d: usize,
}

impl BlockerInstance {
    pub fn new(
        graph: Graph,
        operation: Operation,
        pi: ParameterKind,
        k: usize,
        d: usize,
    ) -> Result<Self> {
        if d == 0 {
            return Err(Error::Precondition("threshold d must be at least 1".into()));
        }
        Ok(BlockerInstance {
            graph,
            operation,
            pi,
            k,
            d,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "yes",
            Answer::No => "no",
        })
    }
}

/// A yes-answer always carries a witness of size at most `k` whose
/// application lowers π by at least `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockerResult {
    pub answer: Answer,
    pub witness: Option<Witness>,
    pub pi_before: usize,
    pub pi_after: Option<usize>,
}

impl BlockerResult {
    pub fn no(pi_before: usize) -> Self {
        BlockerResult {
            answer: Answer::No,
            witness: None,
            pi_before,
            pi_after: None,
        }
    }

    pub fn yes(witness: Witness, pi_before: usize, pi_after: usize) -> Self {
        BlockerResult {
            answer: Answer::Yes,
            witness: Some(witness),
            pi_before,
            pi_after: Some(pi_after),
        }
    }

    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }
}
