//! Exact maximum independent set by branch and bound over bitsets.
//!
//! Simplicial vertices (closed neighbourhood is a clique) are taken without
//! branching; otherwise branch on a maximum-degree vertex, either dropping
//! it or taking it and dropping its neighbourhood. A greedy clique cover
//! bounds the remaining gain.

use crate::graph::{Graph, VertexId, VertexSet};

type Bits = Vec<u64>;

fn ones(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(w * 64 + b)
        })
    })
}

fn first_one(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}

fn popcount(bits: &[u64]) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
fn clear(bits: &mut [u64], v: usize) {
    bits[v / 64] &= !(1u64 << (v % 64));
}

#[inline]
fn test(bits: &[u64], v: usize) -> bool {
    bits[v / 64] >> (v % 64) & 1 == 1
}

pub(crate) struct BitGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl BitGraph {
    pub(crate) fn new(g: &Graph) -> Self {
        let n = g.n();
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        for v in g.vertices() {
            for &u in g.neighbors(v) {
                rows[v * words + u / 64] |= 1u64 << (u % 64);
            }
        }
        BitGraph { n, words, rows }
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    fn full(&self) -> Bits {
        let mut bits = vec![0u64; self.words];
        for v in 0..self.n {
            bits[v / 64] |= 1u64 << (v % 64);
        }
        bits
    }

    /// `cand ∩ N(v)`.
    fn neighbours_in(&self, v: usize, cand: &[u64]) -> Bits {
        self.row(v).iter().zip(cand).map(|(a, b)| a & b).collect()
    }

    fn is_clique(&self, set: &[u64]) -> bool {
        ones(set).all(|u| {
            set.iter()
                .zip(self.row(u))
                .enumerate()
                .all(|(i, (&s, &r))| {
                    let own = if u / 64 == i { 1u64 << (u % 64) } else { 0 };
                    s & !r & !own == 0
                })
        })
    }

    fn clique_cover_bound(&self, cand: &[u64]) -> usize {
        let mut rest = cand.to_vec();
        let mut cliques = 0;
        while let Some(v) = first_one(&rest) {
            clear(&mut rest, v);
            let mut grow = self.neighbours_in(v, &rest);
            while let Some(u) = first_one(&grow) {
                clear(&mut rest, u);
                clear(&mut grow, u);
                for (g, r) in grow.iter_mut().zip(self.row(u)) {
                    *g &= r;
                }
            }
            cliques += 1;
        }
        cliques
    }

    fn search(&self, mut cand: Bits, mut taken: usize, best: &mut usize) {
        'reduce: loop {
            for v in ones(&cand).collect::<Vec<_>>() {
                let nb = self.neighbours_in(v, &cand);
                if self.is_clique(&nb) {
                    taken += 1;
                    clear(&mut cand, v);
                    for (c, x) in cand.iter_mut().zip(&nb) {
                        *c &= !x;
                    }
                    continue 'reduce;
                }
            }
            break;
        }
        if popcount(&cand) == 0 {
            *best = (*best).max(taken);
            return;
        }
        if taken + self.clique_cover_bound(&cand) <= *best {
            return;
        }
        let v = ones(&cand)
            .max_by_key(|&v| {
                (
                    popcount(&self.neighbours_in(v, &cand)),
                    std::cmp::Reverse(v),
                )
            })
            .expect("candidate set is non-empty");

        let mut with_v = cand.clone();
        clear(&mut with_v, v);
        for (c, r) in with_v.iter_mut().zip(self.row(v)) {
            *c &= !r;
        }
        self.search(with_v, taken + 1, best);

        clear(&mut cand, v);
        self.search(cand, taken, best);
    }

    fn alpha_within(&self, cand: Bits) -> usize {
        let mut best = 0;
        self.search(cand, 0, &mut best);
        best
    }
}

/// α(g), value only.
pub(crate) fn independence_number(g: &Graph) -> usize {
    let bg = BitGraph::new(g);
    let full = bg.full();
    bg.alpha_within(full)
}

/// α(g) with the lexicographically smallest maximum independent set: scan
/// vertices upward and keep each one whose inclusion still allows a
/// maximum set.
pub(crate) fn maximum_independent_set(g: &Graph) -> (usize, VertexSet) {
    let bg = BitGraph::new(g);
    let mut cand = bg.full();
    let alpha = bg.alpha_within(cand.clone());
    let mut need = alpha;
    let mut chosen = VertexSet::new();
    for v in 0..bg.n {
        if need == 0 {
            break;
        }
        if !test(&cand, v) {
            continue;
        }
        let mut rest = cand.clone();
        clear(&mut rest, v);
        for (c, r) in rest.iter_mut().zip(bg.row(v)) {
            *c &= !r;
        }
        if 1 + bg.alpha_within(rest.clone()) == need {
            chosen.insert(v as VertexId);
            cand = rest;
            need -= 1;
        } else {
            clear(&mut cand, v);
        }
    }
    (alpha, chosen)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_alpha(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|&mask| {
                g.edges()
                    .all(|(u, v)| mask >> u & 1 == 0 || mask >> v & 1 == 0)
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn small_graphs() {
        assert_eq!(independence_number(&Graph::empty(0)), 0);
        assert_eq!(independence_number(&Graph::empty(5)), 5);
        assert_eq!(independence_number(&Graph::complete(6)), 1);
        assert_eq!(independence_number(&Graph::cycle(7)), 3);
        assert_eq!(
            maximum_independent_set(&Graph::cycle(5)).1.to_vec(),
            vec![0, 2]
        );
    }

    #[test]
    fn crosses_word_boundaries() {
        let g = Graph::cycle(130);
        assert_eq!(independence_number(&g), 65);
        let (a, set) = maximum_independent_set(&g);
        assert_eq!(a, set.len());
        assert!(g.is_independent(&set));
    }

    #[test]
    fn agrees_with_subset_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(0..=11);
            let p: f64 = rng.gen_range(0.1..0.9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let expected = brute_alpha(&g);
            assert_eq!(independence_number(&g), expected, "{g:?}");
            let (a, set) = maximum_independent_set(&g);
            assert_eq!((a, set.len()), (expected, expected));
            assert!(g.is_independent(&set));
        }
    }
}
