//! Simple undirected graphs with dense vertex ids, together with the
//! operations blocker problems are phrased in: vertex deletion, spanning
//! subgraphs on an edge subset, and edge contraction.
//!
//! Every [`Graph`] is simple (no loops, no parallel edges) and symmetric.
//! Operations that change the vertex set relabel densely and return a map
//! back to the original ids.

mod classes;
mod io;
mod sets;

use std::collections::VecDeque;

pub use classes::{
    is_bipartite, is_c3_free, is_c3_plus_p1_free, is_chordal, is_perfect_elimination_ordering,
    triangles,
};
pub use io::{parse_edge_list, serialize_edge_list};
pub use sets::{canonical_edge, EdgeSet, VertexSet};

use crate::error::{Error, Result};

pub type VertexId = usize;

/// An undirected edge; canonical form is `(min, max)`.
pub type Edge = (VertexId, VertexId);

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
}

/// Result of `G/S`: where every original vertex went, and how many originals
/// each result vertex absorbed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionMap {
    pub component_of: Vec<VertexId>,
    pub component_sizes: Vec<usize>,
}

impl ContractionMap {
    /// Original vertices merged into result vertex `r`, ascending.
    pub fn members(&self, r: VertexId) -> Vec<VertexId> {
        (0..self.component_of.len())
            .filter(|&v| self.component_of[v] == r)
            .collect()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Precondition(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Sorts and dedups each list. Callers guarantee symmetry, range and no
    /// loops.
    pub(crate) fn from_raw_adjacency(mut adj: Vec<Vec<VertexId>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Graph { adj }
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges are in range")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are in range")
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star edges are in range")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Self::from_edges(a + b, edges).expect("complete bipartite edges are in range")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges().collect()
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                (0..n)
                    .filter(|&u| u != v && self.adj[v].binary_search(&u).is_err())
                    .collect()
            })
            .collect();
        Graph { adj }
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn check_vertex_set(&self, set: &VertexSet) -> Result<()> {
        set.iter().try_for_each(|v| self.check_vertex(v))
    }

    pub fn check_edge_set(&self, s: &EdgeSet) -> Result<()> {
        for (u, v) in s.iter() {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            if !self.has_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
        }
        Ok(())
    }

    /// Adds a vertex adjacent to every existing vertex; returns its id.
    pub fn add_universal_vertex(&mut self) -> VertexId {
        let w = self.n();
        for list in &mut self.adj {
            list.push(w);
        }
        self.adj.push((0..w).collect());
        w
    }

    /// `G - U` with survivors relabelled densely in ascending order. The map
    /// sends every original id to its new id, or `None` if deleted.
    pub fn delete_vertices(&self, u: &VertexSet) -> Result<(Graph, Vec<Option<VertexId>>)> {
        self.check_vertex_set(u)?;
        let mut map = vec![None; self.n()];
        let mut next = 0;
        for v in self.vertices() {
            if !u.contains(v) {
                map[v] = Some(next);
                next += 1;
            }
        }
        let adj = self
            .vertices()
            .filter(|&v| map[v].is_some())
            .map(|v| self.adj[v].iter().filter_map(|&w| map[w]).collect())
            .collect();
        Ok((Graph { adj }, map))
    }

    /// Induced subgraph on `keep`, relabelled densely in ascending order.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<Graph> {
        self.check_vertex_set(keep)?;
        let removed: VertexSet = self.vertices().filter(|&v| !keep.contains(v)).collect();
        Ok(self.delete_vertices(&removed)?.0)
    }

    /// `G|_S`: same vertex set, edge set exactly `s`.
    pub fn spanning_on_edges(&self, s: &EdgeSet) -> Result<Graph> {
        self.check_edge_set(s)?;
        Graph::from_edges(self.n(), s.iter())
    }

    /// `G/S`. Result vertices are the connected components of `G|_S`,
    /// numbered by ascending minimum original id; two of them are adjacent
    /// iff some edge of `G` joins the corresponding components.
    pub fn contract(&self, s: &EdgeSet) -> Result<(Graph, ContractionMap)> {
        self.check_edge_set(s)?;
        Ok(self.contract_unchecked(s.iter()))
    }

    pub(crate) fn contract_unchecked<I>(&self, s: I) -> (Graph, ContractionMap)
    where
        I: IntoIterator<Item = Edge>,
    {
        let n = self.n();
        let mut dsu = DisjointSets::new(n);
        for (u, v) in s {
            dsu.union(u, v);
        }
        // Roots are always the minimum id of their class, so scanning
        // vertices upward meets representatives in ascending order.
        let mut label = vec![usize::MAX; n];
        let mut sizes = Vec::new();
        let mut component_of = vec![0; n];
        for (v, slot) in component_of.iter_mut().enumerate() {
            let r = dsu.find(v);
            if label[r] == usize::MAX {
                label[r] = sizes.len();
                sizes.push(0);
            }
            *slot = label[r];
            sizes[label[r]] += 1;
        }
        let mut adj = vec![Vec::new(); sizes.len()];
        for (u, v) in self.edges() {
            let (a, b) = (component_of[u], component_of[v]);
            if a != b {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        (
            Graph::from_raw_adjacency(adj),
            ContractionMap {
                component_of,
                component_sizes: sizes,
            },
        )
    }

    /// BFS distance; `None` when `v` is unreachable from `u`.
    pub fn distance(&self, u: VertexId, v: VertexId) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.bfs_distances(u)[v])
    }

    pub fn bfs_distances(&self, source: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap();
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// `N[U]`: `U` together with everything adjacent to it.
    pub fn closed_neighborhood(&self, u: &VertexSet) -> Result<VertexSet> {
        self.check_vertex_set(u)?;
        let mut out = u.clone();
        for v in u.iter() {
            for &w in &self.adj[v] {
                out.insert(w);
            }
        }
        Ok(out)
    }

    /// Connected components, listed by ascending minimum id.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = VertexSet::new();
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                comp.insert(x);
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.connected_components().len() == 1
    }

    /// Every component `C` has exactly `|C| - 1` edges.
    pub fn is_forest(&self) -> bool {
        self.m() + self.connected_components().len() == self.n()
    }

    /// `true` iff `set` is pairwise non-adjacent.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| set.iter().all(|u| !self.has_edge(u, v)))
    }

    /// `true` iff `set` is pairwise adjacent.
    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter()
            .all(|v| set.iter().all(|u| u == v || self.has_edge(u, v)))
    }

    /// `true` iff every edge has an endpoint in `set`.
    pub fn is_vertex_cover(&self, set: &VertexSet) -> bool {
        self.edges()
            .all(|(u, v)| set.contains(u) || set.contains(v))
    }
}

/// Union-find whose roots are always the smallest member of their class.
#[derive(Clone, Debug)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `false` if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::path(3)
    }

    #[test]
    fn delete_center_of_p3() {
        let (h, map) = p3().delete_vertices(&[1].into()).unwrap();
        assert_eq!(h, Graph::empty(2));
        assert_eq!(map, vec![Some(0), None, Some(1)]);
    }

    #[test]
    fn delete_nothing_is_identity() {
        let c4 = Graph::cycle(4);
        let (h, map) = c4.delete_vertices(&VertexSet::new()).unwrap();
        assert_eq!(h, c4);
        assert_eq!(map, (0..4).map(Some).collect::<Vec<_>>());
    }

    #[test]
    fn k4_minus_two_is_k2() {
        let (h, _) = Graph::complete(4).delete_vertices(&[0, 1].into()).unwrap();
        assert_eq!(h, Graph::complete(2));
    }

    #[test]
    fn delete_out_of_range() {
        assert_eq!(
            p3().delete_vertices(&[7].into()).unwrap_err(),
            Error::VertexOutOfRange { vertex: 7, n: 3 }
        );
    }

    #[test]
    fn spanning_subgraphs() {
        let c4 = Graph::cycle(4);
        let h = c4.spanning_on_edges(&[(0, 1)].into()).unwrap();
        assert_eq!(h, Graph::from_edges(4, [(0, 1)]).unwrap());
        assert_eq!(
            c4.spanning_on_edges(&EdgeSet::new()).unwrap(),
            Graph::empty(4)
        );
        let p4 = Graph::path(4);
        let h = p4.spanning_on_edges(&[(0, 1), (2, 3)].into()).unwrap();
        assert_eq!(h, Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap());
        assert_eq!(
            c4.spanning_on_edges(&[(0, 2)].into()).unwrap_err(),
            Error::NotAnEdge(0, 2)
        );
    }

    #[test]
    fn contract_single_edge_of_p3() {
        let (h, map) = p3().contract(&[(0, 1)].into()).unwrap();
        assert_eq!(h, Graph::complete(2));
        assert_eq!(map.component_of, vec![0, 0, 1]);
        assert_eq!(map.component_sizes, vec![2, 1]);
        assert_eq!(map.members(0), vec![0, 1]);
    }

    #[test]
    fn contract_edge_of_c4_gives_triangle() {
        let (h, map) = Graph::cycle(4).contract(&[(0, 1)].into()).unwrap();
        assert_eq!(h, Graph::complete(3));
        assert_eq!(map.component_of, vec![0, 0, 1, 2]);
    }

    #[test]
    fn contract_nothing_is_identity() {
        let g = Graph::from_edges(5, [(0, 3), (1, 4), (3, 4)]).unwrap();
        let (h, map) = g.contract(&EdgeSet::new()).unwrap();
        assert_eq!(h, g);
        assert_eq!(map.component_of, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn contract_rejects_non_edges() {
        assert_eq!(
            p3().contract(&[(0, 2)].into()).unwrap_err(),
            Error::NotAnEdge(0, 2)
        );
    }

    #[test]
    fn contraction_ids_follow_minimum_representatives() {
        // Components {0,3}, {1}, {2,4}: representatives 0, 1, 2.
        let g = Graph::from_edges(5, [(0, 3), (2, 4), (3, 4), (1, 2)]).unwrap();
        let (h, map) = g.contract(&[(0, 3), (2, 4)].into()).unwrap();
        assert_eq!(map.component_of, vec![0, 1, 2, 0, 2]);
        assert_eq!(h, Graph::from_edges(3, [(0, 2), (1, 2)]).unwrap());
    }

    #[test]
    fn distances() {
        let p4 = Graph::path(4);
        assert_eq!(p4.distance(0, 3).unwrap(), Some(3));
        assert_eq!(p4.distance(2, 2).unwrap(), Some(0));
        assert_eq!(Graph::empty(2).distance(0, 1).unwrap(), None);
        assert!(p4.distance(0, 4).is_err());
    }

    #[test]
    fn closed_neighborhoods() {
        let star = Graph::star(3);
        assert_eq!(
            star.closed_neighborhood(&[0].into()).unwrap().to_vec(),
            vec![0, 1, 2, 3]
        );
        assert!(star
            .closed_neighborhood(&VertexSet::new())
            .unwrap()
            .is_empty());
        let p4 = Graph::path(4);
        assert_eq!(
            p4.closed_neighborhood(&[1].into()).unwrap().to_vec(),
            vec![0, 1, 2]
        );
    }

    #[test]
    fn forests_and_components() {
        assert!(Graph::path(4).is_forest());
        assert!(!Graph::cycle(4).is_forest());
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(two_k2.is_forest());
        let comps = two_k2.connected_components();
        assert_eq!(
            comps,
            vec![VertexSet::from([0, 1]), VertexSet::from([2, 3])]
        );
    }

    #[test]
    fn from_edges_collapses_duplicates() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (2, 1)]).unwrap();
        assert_eq!(g.m(), 2);
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
    }

    #[test]
    fn universal_vertex() {
        let mut g = Graph::path(3);
        let w = g.add_universal_vertex();
        assert_eq!(w, 3);
        assert_eq!(g.m(), 5);
        assert_eq!(g.neighbors(w), &[0, 1, 2]);
        assert_eq!(g.neighbors(0), &[1, 3]);
    }
}
