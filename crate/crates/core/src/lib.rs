//! Blocker problems on graphs: can at most `k` edge contractions or vertex
//! deletions lower the independence number α or the clique number ω by at
//! least `d`?
//!
//! - [`graph`]: simple graphs, contraction `G/S`, deletion `G - U`, class
//!   recognizers and the edge-list format.
//! - [`invariants`]: α, ω, bipartite matchings, τ and witness criticality.
//! - [`blockers`]: brute-force reference solvers and the polynomial solver
//!   for contraction-blocking α on bipartite graphs.
//! - [`reductions`]: hardness gadgets from Weighted Positive 2-SAT and
//!   Vertex Cover with witness translation in both directions.
//! - [`generate`], [`catalog`], [`suites`]: seeded generators, exhaustive
//!   small-graph catalogs and the cross-check suites built on them.

pub mod blockers;
pub mod catalog;
pub mod error;
pub mod generate;
pub mod graph;
pub mod invariants;
pub mod reductions;
pub mod suites;

pub use error::{Error, Result};
pub use graph::{ContractionMap, Edge, EdgeSet, Graph, VertexId, VertexSet};
pub use invariants::{Operation, ParameterKind, Witness};
