//! Exhaustive lists of small graphs, one per isomorphism class.

use crate::graph::Graph;

/// Largest `n` accepted by [`all_graphs`].
pub const ALL_GRAPHS_LIMIT: usize = 6;
/// Largest `n` accepted by [`connected_bipartite_graphs`].
pub const BIPARTITE_LIMIT: usize = 9;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Orbit representatives of bit masks of width `bits` under the given bit
/// maps, smallest mask of each orbit first.
fn orbit_representatives(bits: usize, maps: &[Vec<usize>]) -> Vec<u32> {
    let mut seen = vec![false; 1usize << bits];
    let mut reps = Vec::new();
    for mask in 0..1u32 << bits {
        if seen[mask as usize] {
            continue;
        }
        reps.push(mask);
        for map in maps {
            let mut image = 0u32;
            for (b, &to) in map.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    image |= 1 << to;
                }
            }
            seen[image as usize] = true;
        }
    }
    reps
}

/// Every graph on `n <= 6` vertices up to isomorphism (1, 1, 2, 4, 11, 34,
/// 156 of them).
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(
        n <= ALL_GRAPHS_LIMIT,
        "all_graphs supports n <= {ALL_GRAPHS_LIMIT}"
    );
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let index = |u: usize, v: usize| {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        pairs.iter().position(|&p| p == (u, v)).unwrap()
    };
    let maps: Vec<Vec<usize>> = permutations(n)
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();
    orbit_representatives(pairs.len(), &maps)
        .into_iter()
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e);
            Graph::from_edges(n, edges).expect("catalog edges are valid")
        })
        .collect()
}

/// Every connected bipartite graph on `n` vertices up to isomorphism (1, 1,
/// 1, 3, 5, 17, 44, 182 of them for n = 1..8). Sides are `0..a` and
/// `a..n` with `a <= n - a`.
pub fn connected_bipartite_graphs(n: usize) -> Vec<Graph> {
    assert!(
        n <= BIPARTITE_LIMIT,
        "connected_bipartite_graphs supports n <= {BIPARTITE_LIMIT}"
    );
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![Graph::empty(1)];
    }
    let mut out = Vec::new();
    for a in 1..=n / 2 {
        let b = n - a;
        let bit = |i: usize, j: usize| i * b + j;
        let mut maps = Vec::new();
        let (pa, pb) = (permutations(a), permutations(b));
        for p in &pa {
            for q in &pb {
                maps.push(
                    (0..a * b)
                        .map(|x| bit(p[x / b], q[x % b]))
                        .collect::<Vec<_>>(),
                );
                if a == b {
                    maps.push((0..a * b).map(|x| bit(q[x % b], p[x / b])).collect());
                }
            }
        }
        for mask in orbit_representatives(a * b, &maps) {
            let edges = (0..a * b)
                .filter(|x| mask >> x & 1 == 1)
                .map(|x| (x / b, a + x % b));
            let g = Graph::from_edges(n, edges).expect("catalog edges are valid");
            if g.is_connected() {
                out.push(g);
            }
        }
    }
    out
}
