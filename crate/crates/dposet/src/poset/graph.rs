//! Simple graphs: comparability graphs, stable sets, cliques and perfection.

use super::{bit, bits, full, sort_canonical, Poset, Set, DEFAULT_ENUM_CAP};
use crate::{Error, Result};

/// Largest graph for which perfection is decided by hole search.
pub const PERFECT_BOUND: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<Set>,
}

impl Graph {
    pub fn new(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Graph> {
        let n = labels.len();
        if n > super::MAX_ELEMENTS {
            return Err(Error::TooLarge(format!("{n} nodes")));
        }
        let mut adj = vec![0; n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::UnknownLabel(format!("node {}", a.max(b))));
            }
            if a == b {
                return Err(Error::InvalidInput("graphs have no loops".into()));
            }
            adj[a] |= bit(b);
            adj[b] |= bit(a);
        }
        Ok(Graph { labels, adj })
    }

    /// Graph on nodes `0..n` from an edge bitmask over pairs `i < j` in
    /// lexicographic order.
    pub fn from_edge_mask(n: usize, mask: u64) -> Graph {
        let mut edges = Vec::new();
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if mask >> k & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::new((1..=n).map(|i| format!("v{i}")).collect(), &edges).expect("valid edges")
    }

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new((1..=n).map(|i| format!("v{i}")).collect(), &edges).expect("cycle")
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a] & bit(b) != 0
    }

    pub fn neighbours(&self, a: usize) -> Set {
        self.adj[a]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n() {
            for b in bits(self.adj[a]) {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let all = full(self.n());
        let adj = (0..self.n()).map(|a| all & !self.adj[a] & !bit(a)).collect();
        Graph { labels: self.labels.clone(), adj }
    }

    pub fn is_stable(&self, s: Set) -> bool {
        bits(s).all(|a| self.adj[a] & s == 0)
    }

    pub fn is_clique(&self, s: Set) -> bool {
        bits(s).all(|a| (self.adj[a] | bit(a)) & s == s)
    }

    /// All stable sets including the empty set, canonically ordered.
    pub fn stable_sets(&self) -> Result<Vec<Set>> {
        let n = self.n();
        let mut out = Vec::new();
        let mut stack = vec![(0usize, 0 as Set, 0 as Set)];
        while let Some((i, chosen, blocked)) = stack.pop() {
            if i == n {
                out.push(chosen);
                if out.len() > DEFAULT_ENUM_CAP {
                    return Err(Error::TooLarge("stable sets".into()));
                }
                continue;
            }
            stack.push((i + 1, chosen, blocked));
            if blocked & bit(i) == 0 {
                stack.push((i + 1, chosen | bit(i), blocked | self.adj[i]));
            }
        }
        sort_canonical(&mut out);
        Ok(out)
    }

    /// All cliques including the empty set, canonically ordered.
    pub fn cliques(&self) -> Result<Vec<Set>> {
        self.complement().stable_sets()
    }

    pub fn maximal_cliques(&self) -> Result<Vec<Set>> {
        let n = self.n();
        Ok(self
            .cliques()?
            .into_iter()
            .filter(|&c| (0..n).all(|v| c & bit(v) != 0 || !self.is_clique(c | bit(v))))
            .collect())
    }

    /// Decides perfection by searching for odd holes and odd antiholes of
    /// length at least five.
    pub fn is_perfect(&self) -> Result<bool> {
        if self.n() > PERFECT_BOUND {
            return Err(Error::TooLarge(format!("perfection test on {} nodes", self.n())));
        }
        Ok(self.find_odd_hole().is_none() && self.complement().find_odd_hole().is_none())
    }

    /// An induced cycle of odd length at least five, as a node sequence.
    pub fn find_odd_hole(&self) -> Option<Vec<usize>> {
        let n = self.n();
        for s in 0..n {
            let mut path = vec![s];
            if let Some(h) = self.grow_hole(&mut path, bit(s), s) {
                return Some(h);
            }
        }
        None
    }

    // Extends an induced path starting at `s` whose other nodes exceed `s`.
    fn grow_hole(&self, path: &mut Vec<usize>, on: Set, s: usize) -> Option<Vec<usize>> {
        let last = *path.last().unwrap();
        for v in bits(self.adj[last] & !on) {
            if v <= s {
                continue;
            }
            // v may touch only `last` among interior nodes, and `s` only to close
            let interior = on & !bit(s) & !bit(last);
            if self.adj[v] & interior != 0 {
                continue;
            }
            path.push(v);
            if path.len() > 2 && self.adjacent(v, s) {
                if path.len() >= 5 && path.len() % 2 == 1 {
                    return Some(path.clone());
                }
            } else if let Some(h) = self.grow_hole(path, on | bit(v), s) {
                return Some(h);
            }
            path.pop();
        }
        None
    }
}

impl Poset {
    pub fn comparability_graph(&self) -> Graph {
        let n = self.n();
        let adj = (0..n).map(|a| (self.up(a) | self.down(a)) & !bit(a)).collect();
        Graph { labels: self.labels().to_vec(), adj }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::generators as gen;

    #[test]
    fn holes() {
        assert!(!Graph::cycle(5).is_perfect().unwrap());
        assert!(!Graph::cycle(7).complement().is_perfect().unwrap());
        assert!(Graph::cycle(4).is_perfect().unwrap());
        assert!(Graph::cycle(6).is_perfect().unwrap());
        assert!(gen::comb(3).comparability_graph().is_perfect().unwrap());
    }

    #[test]
    fn stable_sets_and_cliques() {
        let g = gen::antichain(2).comparability_graph();
        assert_eq!(g.stable_sets().unwrap().len(), 4);
        let c = gen::chain(3).comparability_graph();
        assert_eq!(c.maximal_cliques().unwrap(), vec![0b111]);
        assert_eq!(c.cliques().unwrap().len(), 8);
    }
}
