//! The chordal gadget for Weighted Positive 2-SAT. Each variable `x` gets
//! an apex `v_x` complete to a clique `K_x` of `2k + 1` vertices; each
//! clause `c = (x ∨ y)` gets a vertex `v_c`, the clause vertices form one
//! clique `K_C`, and `v_c` is complete to `K_x` and `K_y`.
//!
//! With at least one clause, α of the gadget is `|X| + 1` and the formula
//! has a solution with at most `k` true variables iff `k` contractions (or
//! `k` deletions) lower α.

use serde::Serialize;

use super::wp2sat::{Assignment, Wp2SatInstance};
use crate::blockers::minimize_contraction_witness;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, VertexId, VertexSet};
use crate::invariants::{check_critical_with_limit, ParameterKind, Witness};

/// What a gadget vertex stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "role", rename_all = "snake_case")]
pub enum Role {
    /// `v_x`.
    VariableApex { var: usize },
    /// Member `index` of `K_x`.
    VariableClique { var: usize, index: usize },
    /// `v_c`.
    Clause { clause: usize },
    /// Original vertex of a base graph.
    Base { vertex: VertexId },
    /// The added universal vertex `w`.
    Universal,
}

#[derive(Clone, Debug)]
pub struct ChordalGadget {
    pub graph: Graph,
    pub instance: Wp2SatInstance,
    /// `v_x` per variable.
    pub var_apex: Vec<VertexId>,
    /// `K_x` per variable, ascending.
    pub var_clique: Vec<Vec<VertexId>>,
    /// `v_c` per clause.
    pub clause_vertex: Vec<VertexId>,
}

impl ChordalGadget {
    pub fn k(&self) -> usize {
        self.instance.k()
    }

    /// The independence number the construction guarantees: `|X| + 1` with
    /// at least one clause, `|X|` without.
    pub fn expected_alpha(&self) -> usize {
        self.instance.num_vars() + usize::from(!self.instance.clauses().is_empty())
    }

    pub fn roles(&self) -> Vec<Role> {
        let mut roles = vec![Role::Universal; self.graph.n()];
        for (x, &v) in self.var_apex.iter().enumerate() {
            roles[v] = Role::VariableApex { var: x };
            for (index, &u) in self.var_clique[x].iter().enumerate() {
                roles[u] = Role::VariableClique { var: x, index };
            }
        }
        for (c, &v) in self.clause_vertex.iter().enumerate() {
            roles[v] = Role::Clause { clause: c };
        }
        roles
    }

    /// Variable whose block `G_x = {v_x} ∪ K_x` contains `v`.
    pub fn block_of(&self, v: VertexId) -> Option<usize> {
        match self.roles().get(v)? {
            Role::VariableApex { var } | Role::VariableClique { var, .. } => Some(*var),
            _ => None,
        }
    }

    /// Conditions under which the gadget is built but the equivalence is
    /// vacuous or does not hold.
    pub fn degeneracies(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.k() == 0 {
            out.push(
                "budget k = 0: every K_x is a single vertex and the reduction is vacuous".into(),
            );
        }
        if self.instance.clauses().is_empty() {
            out.push("no clauses: α is |X| rather than |X| + 1 and no witness can lower it".into());
        }
        let unused = self.instance.unused_vars();
        if !unused.is_empty() {
            out.push(format!("variables {unused:?} occur in no clause"));
        }
        out
    }

    fn require_accepted(&self, a: &Assignment) -> Result<()> {
        if self.instance.accepts(a) {
            Ok(())
        } else {
            Err(Error::InvalidWitness(format!(
                "assignment {:?} does not satisfy the formula with at most {} true variables",
                a.true_vars,
                self.k()
            )))
        }
    }

    fn require_budget(&self, size: usize) -> Result<()> {
        if size > self.k() {
            return Err(Error::Precondition(format!(
                "witness of size {size} exceeds the budget {}",
                self.k()
            )));
        }
        Ok(())
    }
}

/// Vertex layout: for each variable in order, `v_x` then its `K_x` block;
/// then the clause vertices in clause order.
pub fn build_chordal_gadget(phi: &Wp2SatInstance) -> ChordalGadget {
    let clique_size = 2 * phi.k() + 1;
    let mut next = 0;
    let mut var_apex = Vec::with_capacity(phi.num_vars());
    let mut var_clique = Vec::with_capacity(phi.num_vars());
    for _ in 0..phi.num_vars() {
        var_apex.push(next);
        var_clique.push((next + 1..next + 1 + clique_size).collect::<Vec<_>>());
        next += 1 + clique_size;
    }
    let clause_vertex: Vec<VertexId> = (next..next + phi.clauses().len()).collect();
    let n = next + clause_vertex.len();

    let mut edges = Vec::new();
    for (x, block) in var_clique.iter().enumerate() {
        for (i, &a) in block.iter().enumerate() {
            edges.push((var_apex[x], a));
            edges.extend(block[i + 1..].iter().map(|&b| (a, b)));
        }
    }
    for (i, &a) in clause_vertex.iter().enumerate() {
        edges.extend(clause_vertex[i + 1..].iter().map(|&b| (a, b)));
    }
    for (c, &(x, y)) in phi.clauses().iter().enumerate() {
        for &u in var_clique[x].iter().chain(&var_clique[y]) {
            edges.push((clause_vertex[c], u));
        }
    }
    ChordalGadget {
        graph: Graph::from_edges(n, edges).expect("gadget edges are in range"),
        instance: phi.clone(),
        var_apex,
        var_clique,
        clause_vertex,
    }
}

/// One edge `v_x u` per true variable, `u` the smallest vertex of `K_x`.
/// Contracting it acts like deleting `v_x`.
pub fn assignment_to_contraction_witness(
    gadget: &ChordalGadget,
    a: &Assignment,
) -> Result<EdgeSet> {
    gadget.require_accepted(a)?;
    Ok(a.true_vars
        .iter()
        .map(|x| (gadget.var_apex[x], gadget.var_clique[x][0]))
        .collect())
}

/// Sets `x` true when `S` touches `G_x`; every clause whose two blocks are
/// both untouched then gets its smaller variable. `s` is first shrunk to a
/// minimal critical forest.
pub fn contraction_witness_to_assignment(
    gadget: &ChordalGadget,
    s: &EdgeSet,
) -> Result<Assignment> {
    gadget.require_budget(s.len())?;
    let s =
        minimize_contraction_witness(&gadget.graph, s, ParameterKind::Independence, 1, usize::MAX)?;
    let touched_vars: Vec<bool> = {
        let mut t = vec![false; gadget.instance.num_vars()];
        for v in s.endpoints().iter() {
            if let Some(x) = gadget.block_of(v) {
                t[x] = true;
            }
        }
        t
    };
    let mut true_vars: VertexSet = (0..touched_vars.len())
        .filter(|&x| touched_vars[x])
        .collect();
    for &(x, y) in gadget.instance.clauses() {
        if !touched_vars[x] && !touched_vars[y] {
            true_vars.insert(x.min(y));
        }
    }
    let a = Assignment::new(true_vars);
    if a.count() > s.len() || !gadget.instance.satisfies(&a) {
        return Err(Error::InvalidWitness(format!(
            "internal: translated assignment {:?} breaks the size or satisfaction bound",
            a.true_vars
        )));
    }
    Ok(a)
}

/// `W = {v_x : x true}`.
pub fn assignment_to_deletion_witness(gadget: &ChordalGadget, a: &Assignment) -> Result<VertexSet> {
    gadget.require_accepted(a)?;
    Ok(a.true_vars.iter().map(|x| gadget.var_apex[x]).collect())
}

/// `Z = {x : v_x ∈ W}` plus, for each clause vertex in `W`, its smaller
/// variable.
pub fn deletion_witness_to_assignment(gadget: &ChordalGadget, w: &VertexSet) -> Result<Assignment> {
    gadget.require_budget(w.len())?;
    let witness = Witness::Delete(w.clone());
    if !check_critical_with_limit(
        &gadget.graph,
        &witness,
        ParameterKind::Independence,
        1,
        usize::MAX,
    )? {
        return Err(Error::InvalidWitness(format!(
            "vertex set {w:?} is not alpha-critical"
        )));
    }
    let roles = gadget.roles();
    let mut true_vars = VertexSet::new();
    for v in w.iter() {
        match roles[v] {
            Role::VariableApex { var } => {
                true_vars.insert(var);
            }
            Role::Clause { clause } => {
                let (x, y) = gadget.instance.clauses()[clause];
                true_vars.insert(x.min(y));
            }
            _ => {}
        }
    }
    let a = Assignment::new(true_vars);
    if a.count() > w.len() || !gadget.instance.satisfies(&a) {
        return Err(Error::InvalidWitness(format!(
            "internal: translated assignment {:?} breaks the size or satisfaction bound",
            a.true_vars
        )));
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_chordal;
    use crate::invariants::{alpha_chordal, alpha_exact, check_critical};

    /// Variables w, x, y, z as 0..4; clauses wx, xy, xz.
    fn example() -> Wp2SatInstance {
        Wp2SatInstance::new(4, vec![(0, 1), (1, 2), (1, 3)], 1).unwrap()
    }

    fn single_clause(k: usize) -> Wp2SatInstance {
        Wp2SatInstance::new(2, vec![(0, 1)], k).unwrap()
    }

    #[test]
    fn example_gadget_shape() {
        let g = build_chordal_gadget(&example());
        assert_eq!(g.graph.n(), 19);
        assert!(is_chordal(&g.graph).is_some());
        assert_eq!(alpha_chordal(&g.graph).unwrap().0, 5);
        assert_eq!(alpha_exact(&g.graph).unwrap().0, 5);
        assert_eq!(g.var_apex, vec![0, 4, 8, 12]);
        assert_eq!(g.var_clique[1], vec![5, 6, 7]);
        assert_eq!(g.clause_vertex, vec![16, 17, 18]);
        assert!(g.degeneracies().is_empty());
    }

    #[test]
    fn gadget_structure() {
        let gadget = build_chordal_gadget(&example());
        let g = &gadget.graph;
        for (x, block) in gadget.var_clique.iter().enumerate() {
            let mut with_apex: VertexSet = block.iter().copied().collect();
            with_apex.insert(gadget.var_apex[x]);
            assert!(g.is_clique(&with_apex));
        }
        assert!(g.is_clique(&gadget.clause_vertex.iter().copied().collect()));
        for (c, &(x, y)) in gadget.instance.clauses().iter().enumerate() {
            let vc = gadget.clause_vertex[c];
            for z in 0..4 {
                let complete = gadget.var_clique[z].iter().all(|&u| g.has_edge(vc, u));
                let none = gadget.var_clique[z].iter().all(|&u| !g.has_edge(vc, u));
                assert!(if z == x || z == y { complete } else { none });
                assert!(!g.has_edge(vc, gadget.var_apex[z]));
            }
        }
    }

    #[test]
    fn single_clause_gadget() {
        let g = build_chordal_gadget(&single_clause(1));
        assert_eq!(g.graph.n(), 9);
        assert_eq!(alpha_exact(&g.graph).unwrap().0, 3);
    }

    #[test]
    fn zero_budget_gadget() {
        let g = build_chordal_gadget(&Wp2SatInstance::new(3, vec![(0, 1), (1, 2)], 0).unwrap());
        assert!(g.var_clique.iter().all(|b| b.len() == 1));
        assert!(is_chordal(&g.graph).is_some());
        assert_eq!(alpha_exact(&g.graph).unwrap().0, 4);
        assert_eq!(g.degeneracies().len(), 1);
    }

    #[test]
    fn example_contraction_witness() {
        let gadget = build_chordal_gadget(&example());
        let a = Assignment::new([1].into());
        let s = assignment_to_contraction_witness(&gadget, &a).unwrap();
        assert_eq!(s, EdgeSet::from([(4, 5)]));
        let w = Witness::Contract(s.clone());
        assert!(check_critical(&gadget.graph, &w, ParameterKind::Independence, 1).unwrap());
        assert_eq!(alpha_exact(&w.apply(&gadget.graph).unwrap()).unwrap().0, 4);
        assert_eq!(contraction_witness_to_assignment(&gadget, &s).unwrap(), a);
    }

    #[test]
    fn full_assignment_cardinality() {
        let phi = Wp2SatInstance::new(3, vec![(0, 1), (1, 2)], 3).unwrap();
        let gadget = build_chordal_gadget(&phi);
        let a = Assignment::new([0, 1, 2].into());
        assert_eq!(
            assignment_to_contraction_witness(&gadget, &a)
                .unwrap()
                .len(),
            3
        );
    }

    #[test]
    fn single_clause_round_trip() {
        let gadget = build_chordal_gadget(&single_clause(1));
        let s = assignment_to_contraction_witness(&gadget, &Assignment::new([0].into())).unwrap();
        assert_eq!(s.len(), 1);
        let before = alpha_exact(&gadget.graph).unwrap().0;
        let after = alpha_exact(&gadget.graph.contract(&s).unwrap().0)
            .unwrap()
            .0;
        assert_eq!((before, after), (3, 2));
    }

    #[test]
    fn rejects_bad_assignments() {
        let gadget = build_chordal_gadget(&example());
        let unsat = Assignment::new([0].into());
        assert!(matches!(
            assignment_to_contraction_witness(&gadget, &unsat),
            Err(Error::InvalidWitness(_))
        ));
        let over = Assignment::new([1, 2].into());
        assert!(assignment_to_deletion_witness(&gadget, &over).is_err());
    }

    #[test]
    fn rejects_non_critical_sets() {
        let gadget = build_chordal_gadget(&example());
        assert!(matches!(
            contraction_witness_to_assignment(&gadget, &[(5, 6)].into()),
            Err(Error::InvalidWitness(_))
        ));
        assert!(matches!(
            deletion_witness_to_assignment(&gadget, &[5].into()),
            Err(Error::InvalidWitness(_))
        ));
        assert!(matches!(
            deletion_witness_to_assignment(&gadget, &[4, 5].into()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn example_deletion_witness() {
        let gadget = build_chordal_gadget(&example());
        let a = Assignment::new([1].into());
        let w = assignment_to_deletion_witness(&gadget, &a).unwrap();
        assert_eq!(w, VertexSet::from([4]));
        let after = alpha_exact(&gadget.graph.delete_vertices(&w).unwrap().0)
            .unwrap()
            .0;
        assert_eq!(after, 4);
        assert_eq!(deletion_witness_to_assignment(&gadget, &w).unwrap(), a);
    }

    #[test]
    fn clause_vertex_in_deletion_witness() {
        // Without v_c the gadget is two disjoint cliques, so α drops 3 -> 2.
        let gadget = build_chordal_gadget(&single_clause(1));
        let vc = gadget.clause_vertex[0];
        let a = deletion_witness_to_assignment(&gadget, &[vc].into()).unwrap();
        assert_eq!(a.true_vars.to_vec(), vec![0]);
    }

    #[test]
    fn single_clause_deletion_of_second_variable() {
        let gadget = build_chordal_gadget(&single_clause(1));
        let w = assignment_to_deletion_witness(&gadget, &Assignment::new([1].into())).unwrap();
        assert_eq!(w, VertexSet::from([gadget.var_apex[1]]));
        assert!(check_critical(
            &gadget.graph,
            &Witness::Delete(w),
            ParameterKind::Independence,
            1
        )
        .unwrap());
    }

    #[test]
    fn clause_free_instance_is_degenerate() {
        let phi = Wp2SatInstance::new(2, vec![], 1).unwrap();
        let gadget = build_chordal_gadget(&phi);
        assert_eq!(gadget.expected_alpha(), 2);
        assert_eq!(alpha_exact(&gadget.graph).unwrap().0, 2);
        let w = assignment_to_deletion_witness(&gadget, &Assignment::default()).unwrap();
        assert!(w.is_empty());
        assert!(!gadget.degeneracies().is_empty());
    }
}
