//! Recognizers for the graph classes the blocker results are stated on.

use std::collections::VecDeque;

use super::{Graph, VertexId, VertexSet};

/// A 2-colouring if one exists. Each component is coloured by BFS from its
/// smallest vertex, which lands on the first side.
pub fn is_bipartite(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let mut colour: Vec<Option<bool>> = vec![None; g.n()];
    for s in g.vertices() {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let cx = colour[x].unwrap();
            for &y in g.neighbors(x) {
                match colour[y] {
                    None => {
                        colour[y] = Some(!cx);
                        queue.push_back(y);
                    }
                    Some(cy) if cy == cx => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let first = g.vertices().filter(|&v| colour[v] == Some(false)).collect();
    let second = g.vertices().filter(|&v| colour[v] == Some(true)).collect();
    Some((first, second))
}

/// Lexicographic BFS order; ties go to the smallest id.
fn lex_bfs(g: &Graph) -> Vec<VertexId> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut numbered = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .fold(None::<VertexId>, |best, v| match best {
                Some(b) if labels[b] >= labels[v] => Some(b),
                _ => Some(v),
            })
            .expect("an unnumbered vertex remains");
        numbered[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !numbered[w] {
                labels[w].push(n - step);
            }
        }
    }
    order
}

/// Checks that every vertex's neighbours later in `order` form a clique.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[VertexId]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let later: Vec<VertexId> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| pos[u] > pos[v])
            .collect();
        later
            .iter()
            .enumerate()
            .all(|(i, &a)| later[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    })
}

/// A perfect elimination ordering when `g` is chordal. Built as the reverse
/// of a lexicographic BFS order and checked before being returned.
pub fn is_chordal(g: &Graph) -> Option<Vec<VertexId>> {
    let mut order = lex_bfs(g);
    order.reverse();
    is_perfect_elimination_ordering(g, &order).then_some(order)
}

/// All triangles as ascending triples.
pub fn triangles(g: &Graph) -> Vec<[VertexId; 3]> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        for &w in g.neighbors(v) {
            if w > v && g.has_edge(u, w) {
                out.push([u, v, w]);
            }
        }
    }
    out
}

pub fn is_c3_free(g: &Graph) -> bool {
    triangles(g).is_empty()
}

/// No triangle together with a vertex that misses all three of its corners.
pub fn is_c3_plus_p1_free(g: &Graph) -> bool {
    triangles(g).iter().all(|t| {
        g.vertices()
            .filter(|v| !t.contains(v))
            .all(|v| t.iter().any(|&c| g.has_edge(v, c)))
    })
}
