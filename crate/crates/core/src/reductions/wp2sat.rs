//! Weighted Positive 2-SAT: every clause is `(x ∨ y)` with two distinct
//! positive literals; satisfy all clauses with at most `k` true variables.
//! It is Vertex Cover with variables as vertices and clauses as edges.
//!
//! Text format:
//!
//! ```text
//! c optional comment lines
//! p wp2sat <num_vars> <num_clauses> <k>
//! <x> <y>        (one line per clause, 0-based)
//! ```

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{canonical_edge, Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Wp2SatInstance {
    num_vars: usize,
    clauses: Vec<(usize, usize)>,
    k: usize,
}

/// The variables set to true.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assignment {
    pub true_vars: VertexSet,
}

impl Assignment {
    pub fn new(true_vars: VertexSet) -> Self {
        Assignment { true_vars }
    }

    pub fn count(&self) -> usize {
        self.true_vars.len()
    }

    pub fn is_true(&self, x: usize) -> bool {
        self.true_vars.contains(x)
    }
}

impl Wp2SatInstance {
    /// Clauses are stored as `(min, max)` in the given order.
    pub fn new(num_vars: usize, clauses: Vec<(usize, usize)>, k: usize) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        let mut canon = Vec::with_capacity(clauses.len());
        for (i, &(x, y)) in clauses.iter().enumerate() {
            if x == y {
                return Err(Error::Precondition(format!(
                    "clause {i} repeats variable {x}"
                )));
            }
            if x >= num_vars || y >= num_vars {
                return Err(Error::Precondition(format!(
                    "clause {i} uses a variable outside 0..{num_vars}"
                )));
            }
            let c = canonical_edge(x, y);
            if !seen.insert(c) {
                return Err(Error::Precondition(format!(
                    "clause {i} duplicates ({}, {})",
                    c.0, c.1
                )));
            }
            canon.push(c);
        }
        Ok(Wp2SatInstance {
            num_vars,
            clauses: canon,
            k,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[(usize, usize)] {
        &self.clauses
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Variables occurring in no clause.
    pub fn unused_vars(&self) -> Vec<usize> {
        let mut used = vec![false; self.num_vars];
        for &(x, y) in &self.clauses {
            used[x] = true;
            used[y] = true;
        }
        (0..self.num_vars).filter(|&x| !used[x]).collect()
    }

    pub fn satisfies(&self, a: &Assignment) -> bool {
        self.clauses
            .iter()
            .all(|&(x, y)| a.is_true(x) || a.is_true(y))
    }

    /// Satisfying and within the budget `k`.
    pub fn accepts(&self, a: &Assignment) -> bool {
        a.count() <= self.k && a.true_vars.iter().all(|x| x < self.num_vars) && self.satisfies(a)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let err = |line: usize, message: String| Error::Parse { line, message };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'));

        let (hline, header) = lines
            .next()
            .ok_or_else(|| err(1, "missing `p wp2sat` header".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 5 || fields[0] != "p" || fields[1] != "wp2sat" {
            return Err(err(
                hline,
                "expected `p wp2sat <num_vars> <num_clauses> <k>`".into(),
            ));
        }
        let num = |tok: &str| -> Result<usize> {
            tok.parse()
                .map_err(|_| err(hline, format!("`{tok}` is not a natural number")))
        };
        let (num_vars, num_clauses, k) = (num(fields[2])?, num(fields[3])?, num(fields[4])?);

        let mut clauses = Vec::with_capacity(num_clauses);
        for _ in 0..num_clauses {
            let (lno, line) = lines.next().ok_or_else(|| {
                err(
                    hline,
                    format!(
                        "header announces {num_clauses} clauses, found {}",
                        clauses.len()
                    ),
                )
            })?;
            let vals: Vec<&str> = line.split_whitespace().collect();
            if vals.len() != 2 {
                return Err(err(lno, "expected a clause `x y`".into()));
            }
            let x: usize = vals[0]
                .parse()
                .map_err(|_| err(lno, format!("`{}` is not a variable index", vals[0])))?;
            let y: usize = vals[1]
                .parse()
                .map_err(|_| err(lno, format!("`{}` is not a variable index", vals[1])))?;
            if x >= num_vars || y >= num_vars || x == y {
                return Err(err(
                    lno,
                    format!("clause ({x}, {y}) is not two distinct variables below {num_vars}"),
                ));
            }
            clauses.push((x, y));
        }
        if let Some((lno, _)) = lines.next() {
            return Err(err(
                lno,
                format!("more than the {num_clauses} announced clauses"),
            ));
        }
        Wp2SatInstance::new(num_vars, clauses, k).map_err(|e| err(hline, e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "p wp2sat {} {} {}\n",
            self.num_vars,
            self.clauses.len(),
            self.k
        );
        for &(x, y) in &self.clauses {
            writeln!(out, "{x} {y}").unwrap();
        }
        out
    }
}

/// One variable per vertex, one clause `(u ∨ v)` per edge, same budget.
pub fn vc_to_wp2sat(g: &Graph, k: usize) -> Wp2SatInstance {
    Wp2SatInstance::new(g.n(), g.edges().collect(), k).expect("graph edges form valid clauses")
}

/// Refuses more variables than this.
pub const WP2SAT_LIMIT: usize = 24;

/// A satisfying assignment with the fewest true variables (ties:
/// lexicographically smallest), if one within budget exists.
pub fn solve_wp2sat_bruteforce(phi: &Wp2SatInstance) -> Result<Option<Assignment>> {
    if phi.num_vars > WP2SAT_LIMIT {
        return Err(Error::SizeGuard {
            size: phi.num_vars,
            limit: WP2SAT_LIMIT,
        });
    }
    let n = phi.num_vars;
    for size in 0..=phi.k.min(n) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let a = Assignment::new(idx.iter().copied().collect());
            if phi.satisfies(&a) {
                return Ok(Some(a));
            }
            let Some(i) = (0..size).rev().find(|&i| idx[i] < n - size + i) else {
                break;
            };
            idx[i] += 1;
            for j in i + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vc_transcription() {
        let phi = vc_to_wp2sat(&Graph::path(3), 1);
        assert_eq!(phi.num_vars(), 3);
        assert_eq!(phi.clauses(), &[(0, 1), (1, 2)]);
        assert_eq!(phi.k(), 1);

        let phi = vc_to_wp2sat(&Graph::empty(4), 0);
        assert!(phi.clauses().is_empty());
        assert_eq!(
            solve_wp2sat_bruteforce(&phi).unwrap(),
            Some(Assignment::default())
        );
    }

    #[test]
    fn triangle_needs_two() {
        let mut phi = vc_to_wp2sat(&Graph::complete(3), 2);
        assert_eq!(phi.clauses(), &[(0, 1), (0, 2), (1, 2)]);
        // All 2^3 assignments: exactly the ones with >= 2 true variables satisfy.
        for mask in 0u32..8 {
            let a = Assignment::new((0..3).filter(|i| mask >> i & 1 == 1).collect());
            assert_eq!(phi.satisfies(&a), mask.count_ones() >= 2);
        }
        assert_eq!(
            solve_wp2sat_bruteforce(&phi)
                .unwrap()
                .unwrap()
                .true_vars
                .to_vec(),
            vec![0, 1]
        );
        phi.k = 1;
        assert_eq!(solve_wp2sat_bruteforce(&phi).unwrap(), None);
    }

    #[test]
    fn brute_force_examples() {
        let phi = Wp2SatInstance::new(3, vec![(0, 1), (1, 2)], 1).unwrap();
        assert_eq!(
            solve_wp2sat_bruteforce(&phi)
                .unwrap()
                .unwrap()
                .true_vars
                .to_vec(),
            vec![1]
        );
        let phi = Wp2SatInstance::new(5, vec![], 0).unwrap();
        assert_eq!(
            solve_wp2sat_bruteforce(&phi).unwrap(),
            Some(Assignment::default())
        );
        let phi = Wp2SatInstance::new(2, vec![(0, 1)], 0).unwrap();
        assert_eq!(solve_wp2sat_bruteforce(&phi).unwrap(), None);
    }

    #[test]
    fn rejects_malformed_instances() {
        assert!(Wp2SatInstance::new(2, vec![(0, 0)], 1).is_err());
        assert!(Wp2SatInstance::new(2, vec![(0, 2)], 1).is_err());
        assert!(Wp2SatInstance::new(3, vec![(0, 1), (1, 0)], 1).is_err());
        let big = Wp2SatInstance::new(WP2SAT_LIMIT + 1, vec![], 0).unwrap();
        assert!(solve_wp2sat_bruteforce(&big).is_err());
    }

    #[test]
    fn text_format() {
        let text = "c example instance\np wp2sat 4 3 1\n0 1\n1 2\n1 3\n";
        let phi = Wp2SatInstance::parse(text).unwrap();
        assert_eq!(phi.clauses(), &[(0, 1), (1, 2), (1, 3)]);
        assert_eq!(phi.to_text(), "p wp2sat 4 3 1\n0 1\n1 2\n1 3\n");
        assert_eq!(Wp2SatInstance::parse(&phi.to_text()).unwrap(), phi);

        for (bad, line) in [
            ("p cnf 2 1 1\n0 1\n", 1),
            ("p wp2sat 2 1 1\n0 2\n", 2),
            ("p wp2sat 2 2 1\n0 1\n", 1),
            ("p wp2sat 3 1 1\n0 1\n1 2\n", 3),
            ("p wp2sat 3 1 x\n0 1\n", 1),
        ] {
            match Wp2SatInstance::parse(bad) {
                Err(Error::Parse { line: got, .. }) => assert_eq!(got, line, "{bad:?}"),
                other => panic!("{bad:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn unused_variables() {
        let phi = Wp2SatInstance::new(4, vec![(0, 2)], 1).unwrap();
        assert_eq!(phi.unused_vars(), vec![1, 3]);
    }
}
