//! Seeded graph generators. The same family, size, density and seed always
//! give the same graph.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{is_c3_free, Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Connected, seeded with a random spanning tree.
    Bipartite,
    Tree,
    /// Intersection graph of random subtrees of a random tree.
    Chordal,
    /// Random edges, each rejected if it would close a triangle.
    TriangleFree,
    Cycle,
    Path,
    /// `n` vertices in total, center 0.
    Star,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Bipartite,
        Family::Tree,
        Family::Chordal,
        Family::TriangleFree,
        Family::Cycle,
        Family::Path,
        Family::Star,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Bipartite => "bipartite",
            Family::Tree => "tree",
            Family::Chordal => "chordal",
            Family::TriangleFree => "triangle-free",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Star => "star",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown graph family `{s}`")))
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p` is the extra-edge density for the random families and is ignored by
/// the fixed ones.
pub fn generate(family: Family, n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Precondition(format!(
            "density p = {p} is outside [0, 1]"
        )));
    }
    let mut rng = rng_from_seed(seed);
    match family {
        Family::Cycle if n < 3 => Err(Error::Precondition("a cycle needs n >= 3".into())),
        Family::Cycle => Ok(Graph::cycle(n)),
        Family::Path => Ok(Graph::path(n)),
        Family::Star if n == 0 => Err(Error::Precondition("a star needs n >= 1".into())),
        Family::Star => Ok(Graph::star(n - 1)),
        Family::Tree => Ok(random_tree(n, &mut rng)),
        Family::Bipartite => Ok(random_connected_bipartite(n, p, &mut rng)),
        Family::Chordal => Ok(random_chordal(n, &mut rng)),
        Family::TriangleFree => Ok(random_triangle_free(n, p, &mut rng)),
    }
}

/// Vertex `v > 0` hangs off a uniformly random earlier vertex.
fn random_parents<R: Rng>(n: usize, rng: &mut R) -> Vec<(VertexId, VertexId)> {
    (1..n).map(|v| (rng.gen_range(0..v), v)).collect()
}

pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    Graph::from_edges(n, random_parents(n, rng)).expect("tree edges are in range")
}

/// Connected bipartite: a random tree coloured by depth parity, plus every
/// other cross pair independently with probability `p`.
pub fn random_connected_bipartite<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let tree = random_parents(n, rng);
    let mut side = vec![false; n];
    for &(parent, v) in &tree {
        side[v] = !side[parent];
    }
    let mut edges = tree;
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("bipartite edges are in range")
}

/// Bipartite, not necessarily connected: random sides, independent edges.
pub fn random_bipartite<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("bipartite edges are in range")
}

/// Each vertex owns a random connected subtree of a random host tree;
/// vertices are adjacent iff their subtrees share a node.
pub fn random_chordal<R: Rng>(n: usize, rng: &mut R) -> Graph {
    if n == 0 {
        return Graph::empty(0);
    }
    let host = random_tree(n, rng);
    let max_size = (n / 2).max(1);
    let subtrees: Vec<Vec<bool>> = (0..n)
        .map(|_| {
            let size = rng.gen_range(1..=max_size);
            let mut inside = vec![false; n];
            let mut members = vec![rng.gen_range(0..n)];
            inside[members[0]] = true;
            while members.len() < size {
                let frontier: Vec<VertexId> = members
                    .iter()
                    .flat_map(|&x| host.neighbors(x).iter().copied())
                    .filter(|&y| !inside[y])
                    .collect();
                let Some(&next) = frontier.choose(rng) else {
                    break;
                };
                inside[next] = true;
                members.push(next);
            }
            inside
        })
        .collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if (0..n).any(|t| subtrees[u][t] && subtrees[v][t]) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("intersection edges are in range")
}

/// Pairs are visited in random order and kept with probability `p` unless
/// their endpoints already share a neighbour.
pub fn random_triangle_free<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut pairs: Vec<(VertexId, VertexId)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    let mut adj = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if rng.gen_bool(p) && !(0..n).any(|w| adj[u][w] && adj[v][w]) {
            adj[u][v] = true;
            adj[v][u] = true;
            edges.push((u, v));
        }
    }
    let g = Graph::from_edges(n, edges).expect("edges are in range");
    debug_assert!(is_c3_free(&g));
    g
}
