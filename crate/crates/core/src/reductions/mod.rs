//! Hardness gadgets and the witness translations that go with them.
//!
//! - Weighted Positive 2-SAT (equivalently Vertex Cover) to contraction- and
//!   deletion-blocking α on chordal graphs ([`build_chordal_gadget`]).
//! - Vertex Cover on triangle-free graphs to contraction-blocking ω on
//!   (C3 + P1)-free graphs ([`build_apex_gadget`]).

mod apex;
mod chordal;
mod wp2sat;

pub use apex::{
    build_apex_gadget, contraction_witness_to_vc, vc_witness_to_contraction_witness, ApexGadget,
};
pub use chordal::{
    assignment_to_contraction_witness, assignment_to_deletion_witness, build_chordal_gadget,
    contraction_witness_to_assignment, deletion_witness_to_assignment, ChordalGadget, Role,
};
pub use wp2sat::{solve_wp2sat_bruteforce, vc_to_wp2sat, Assignment, Wp2SatInstance, WP2SAT_LIMIT};
