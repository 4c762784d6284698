//! Maximum matching in bipartite graphs (Hopcroft–Karp) and the König
//! construction of a maximum independent set from it.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{is_bipartite, EdgeSet, Graph, VertexId, VertexSet};

/// Pairwise vertex-disjoint edges of a host graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub edges: EdgeSet,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Partner of `v`, if matched.
    pub fn partner(&self, v: VertexId) -> Option<VertexId> {
        self.edges.iter().find_map(|(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }

    pub fn covered(&self) -> VertexSet {
        self.edges.endpoints()
    }

    /// Every edge is in `g` and no two edges share an endpoint.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        g.check_edge_set(&self.edges).is_ok() && self.covered().len() == 2 * self.len()
    }
}

const FREE: usize = usize::MAX;

struct HopcroftKarp<'a> {
    g: &'a Graph,
    left: Vec<VertexId>,
    mate: Vec<usize>,
    layer: Vec<usize>,
}

impl<'a> HopcroftKarp<'a> {
    fn bfs(&mut self) -> bool {
        let mut queue = VecDeque::new();
        for &u in &self.left {
            if self.mate[u] == FREE {
                self.layer[u] = 0;
                queue.push_back(u);
            } else {
                self.layer[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in self.g.neighbors(u) {
                match self.mate[v] {
                    FREE => found = true,
                    w if self.layer[w] == usize::MAX => {
                        self.layer[w] = self.layer[u] + 1;
                        queue.push_back(w);
                    }
                    _ => {}
                }
            }
        }
        found
    }

    fn dfs(&mut self, u: VertexId) -> bool {
        for i in 0..self.g.degree(u) {
            let v = self.g.neighbors(u)[i];
            let w = self.mate[v];
            if w == FREE || (self.layer[w] == self.layer[u] + 1 && self.dfs(w)) {
                self.mate[u] = v;
                self.mate[v] = u;
                return true;
            }
        }
        self.layer[u] = usize::MAX;
        false
    }

    fn run(mut self) -> Vec<usize> {
        while self.bfs() {
            for i in 0..self.left.len() {
                let u = self.left[i];
                if self.mate[u] == FREE {
                    self.dfs(u);
                }
            }
        }
        self.mate
    }
}

fn bipartition(g: &Graph) -> Result<(VertexSet, VertexSet)> {
    is_bipartite(g).ok_or(Error::ClassViolation("bipartite"))
}

fn mates(g: &Graph, left: &VertexSet) -> Vec<usize> {
    HopcroftKarp {
        g,
        left: left.to_vec(),
        mate: vec![FREE; g.n()],
        layer: vec![usize::MAX; g.n()],
    }
    .run()
}

pub fn max_matching_bipartite(g: &Graph) -> Result<Matching> {
    let (left, _) = bipartition(g)?;
    let mate = mates(g, &left);
    let edges = left
        .iter()
        .filter(|&u| mate[u] != FREE)
        .map(|u| (u, mate[u]))
        .collect();
    Ok(Matching { edges })
}

/// α(g) = |V| − μ(g) for bipartite `g`. The witness is the complement of a
/// König cover: with `Z` the vertices reachable from free left vertices by
/// alternating paths, the set `(L ∩ Z) ∪ (R \ Z)` is independent.
pub fn alpha_bipartite(g: &Graph) -> Result<(usize, VertexSet)> {
    let (left, right) = bipartition(g)?;
    let mate = mates(g, &left);
    let mut reached = vec![false; g.n()];
    let mut queue: VecDeque<VertexId> = left.iter().filter(|&u| mate[u] == FREE).collect();
    for &u in &queue {
        reached[u] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if reached[v] {
                continue;
            }
            reached[v] = true;
            let w = mate[v];
            if w != FREE && !reached[w] {
                reached[w] = true;
                queue.push_back(w);
            }
        }
    }
    let independent: VertexSet = left
        .iter()
        .filter(|&u| reached[u])
        .chain(right.iter().filter(|&v| !reached[v]))
        .collect();
    let matched = left.iter().filter(|&u| mate[u] != FREE).count();
    debug_assert_eq!(independent.len(), g.n() - matched);
    Ok((g.n() - matched, independent))
}
