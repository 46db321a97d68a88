//! Double posets: compatibility, alternating chains and the transfer-matrix
//! facet count.

use std::fmt;

use num_traits::{One, Zero};

use super::{bit, bits, Poset, Set};
use crate::geometry::linalg;
use crate::{Error, Result, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Two partial orders on a shared, labelled ground set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DoublePoset {
    plus: Poset,
    minus: Poset,
}

/// Result of the compatibility test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Compatibility {
    /// A common linear extension, bottom to top.
    Compatible(Vec<usize>),
    /// An alternating cycle `c_0 <_{s_0} c_1 <_{s_1} ... <_{s_{m-1}} c_0`
    /// listed as `(c_i, s_i)`.
    Cycle(Vec<(usize, Sign)>),
}

impl Compatibility {
    pub fn is_compatible(&self) -> bool {
        matches!(self, Compatibility::Compatible(_))
    }
}

/// An alternating chain `0 <_s p_1 <_{-s} p_2 ... p_{k-1} < 1` of a double
/// poset, with virtual bottom and top.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AltChain {
    /// `p_1 .. p_{k-1}`; empty for the two improper chains.
    pub elements: Vec<usize>,
    /// Sign of the first relation `0 <_s p_1`.
    pub start: Sign,
}

impl AltChain {
    /// Number of relations `k`.
    pub fn length(&self) -> usize {
        self.elements.len() + 1
    }

    pub fn proper(&self) -> bool {
        self.length() > 1
    }

    /// Sign of the relation `p_{i} <_? p_{i+1}` (with `p_0` the bottom).
    pub fn relation_sign(&self, i: usize) -> Sign {
        if i % 2 == 0 {
            self.start
        } else {
            self.start.flip()
        }
    }

    /// Sign of the last relation `p_{k-1} < 1`.
    pub fn last_sign(&self) -> Sign {
        self.relation_sign(self.length() - 1)
    }

    /// Coefficients of `l_C(f) = s * sum_i (-1)^i f(p_i)` on the ground set.
    pub fn functional(&self, n: usize) -> Vec<i64> {
        let mut c = vec![0i64; n];
        let s = self.start.as_i64();
        for (j, &p) in self.elements.iter().enumerate() {
            let i = j + 1;
            c[p] = if i % 2 == 0 { s } else { -s };
        }
        c
    }

    pub fn display(&self, labels: &[String]) -> String {
        let mut out = String::from("0");
        for i in 0..self.length() {
            out.push_str(&format!(" <{} ", self.relation_sign(i).symbol()));
            if i < self.elements.len() {
                out.push_str(&labels[self.elements[i]]);
            } else {
                out.push('1');
            }
        }
        out
    }
}

impl DoublePoset {
    pub fn new(plus: Poset, minus: Poset) -> Result<DoublePoset> {
        if plus.labels() != minus.labels() {
            return Err(Error::InvalidInput("double poset orders must share the ground set".into()));
        }
        Ok(DoublePoset { plus, minus })
    }

    /// The induced double poset `(P, <=, <=)`.
    pub fn induced(p: Poset) -> DoublePoset {
        DoublePoset { minus: p.clone(), plus: p }
    }

    pub fn n(&self) -> usize {
        self.plus.n()
    }

    pub fn labels(&self) -> &[String] {
        self.plus.labels()
    }

    pub fn plus(&self) -> &Poset {
        &self.plus
    }

    pub fn minus(&self) -> &Poset {
        &self.minus
    }

    pub fn side(&self, s: Sign) -> &Poset {
        match s {
            Sign::Plus => &self.plus,
            Sign::Minus => &self.minus,
        }
    }

    /// Both orders coincide.
    pub fn is_induced(&self) -> bool {
        self.plus == self.minus
    }

    /// Swaps the roles of the two orders.
    pub fn swapped(&self) -> DoublePoset {
        DoublePoset { plus: self.minus.clone(), minus: self.plus.clone() }
    }

    /// Decides whether the two orders have a common linear extension by a
    /// topological sort of the union of both strict orders. On failure the
    /// witness is an alternating cycle obtained from a shortest directed
    /// cycle by merging consecutive relations of equal sign.
    pub fn compatibility(&self) -> Compatibility {
        let n = self.n();
        let succ = |a: usize| (self.plus.up(a) | self.minus.up(a)) & !bit(a);
        let mut indeg = vec![0usize; n];
        for a in 0..n {
            for b in bits(succ(a)) {
                indeg[b] += 1;
            }
        }
        let mut order = Vec::with_capacity(n);
        let mut placed: Set = 0;
        while order.len() < n {
            match (0..n).find(|&a| placed & bit(a) == 0 && indeg[a] == 0) {
                Some(a) => {
                    placed |= bit(a);
                    order.push(a);
                    for b in bits(succ(a)) {
                        indeg[b] -= 1;
                    }
                }
                None => return Compatibility::Cycle(self.alternating_cycle(placed)),
            }
        }
        Compatibility::Compatible(order)
    }

    pub fn is_compatible(&self) -> bool {
        self.compatibility().is_compatible()
    }

    fn alternating_cycle(&self, placed: Set) -> Vec<(usize, Sign)> {
        // shortest cycle in the union digraph restricted to unplaced nodes
        let n = self.n();
        let live = !placed;
        let edge_sign = |a: usize, b: usize| {
            if self.plus.lt(a, b) {
                Some(Sign::Plus)
            } else if self.minus.lt(a, b) {
                Some(Sign::Minus)
            } else {
                None
            }
        };
        let mut best: Option<Vec<usize>> = None;
        for s in bits(live & super::full(n)) {
            // BFS from s back to s
            let mut prev = vec![usize::MAX; n];
            let mut queue = std::collections::VecDeque::from([s]);
            let mut seen: Set = 0;
            let mut found = None;
            'bfs: while let Some(a) = queue.pop_front() {
                for b in 0..n {
                    if live & bit(b) == 0 || edge_sign(a, b).is_none() {
                        continue;
                    }
                    if b == s {
                        found = Some(a);
                        break 'bfs;
                    }
                    if seen & bit(b) == 0 {
                        seen |= bit(b);
                        prev[b] = a;
                        queue.push_back(b);
                    }
                }
            }
            if let Some(last) = found {
                let mut cyc = vec![last];
                let mut cur = last;
                while cur != s {
                    cur = prev[cur];
                    cyc.push(cur);
                }
                cyc.reverse();
                if best.as_ref().map_or(true, |b| cyc.len() < b.len()) {
                    best = Some(cyc);
                }
            }
        }
        let cyc = best.expect("an unplaced node lies on a cycle");
        let m = cyc.len();
        let mut out: Vec<(usize, Sign)> = (0..m)
            .map(|i| (cyc[i], edge_sign(cyc[i], cyc[(i + 1) % m]).unwrap()))
            .collect();
        // merge runs of equal sign using transitivity
        loop {
            let m = out.len();
            let Some(i) = (0..m).find(|&i| m > 1 && out[i].1 == out[(i + 1) % m].1) else { break };
            out.remove((i + 1) % m);
        }
        out
    }

    /// All alternating chains including the two improper ones, in a
    /// canonical order (by length, then start sign, then elements).
    pub fn alternating_chains(&self) -> Vec<AltChain> {
        let mut out = Vec::new();
        for start in [Sign::Plus, Sign::Minus] {
            out.push(AltChain { elements: vec![], start });
            for p in 0..self.n() {
                let mut path = vec![p];
                self.extend_alt(&mut path, bit(p), start.flip(), start, &mut out);
            }
        }
        out.sort_by(|a, b| {
            a.elements.len().cmp(&b.elements.len()).then(a.start.cmp(&b.start)).then(a.elements.cmp(&b.elements))
        });
        out
    }

    fn extend_alt(&self, path: &mut Vec<usize>, used: Set, next: Sign, start: Sign, out: &mut Vec<AltChain>) {
        out.push(AltChain { elements: path.clone(), start });
        let last = *path.last().unwrap();
        let up = self.side(next).up(last) & !bit(last) & !used;
        for q in bits(up) {
            path.push(q);
            self.extend_alt(path, used | bit(q), next.flip(), start, out);
            path.pop();
        }
    }

    /// Strict comparability matrix of one order on the bounded poset
    /// `P ∪ {0, 1}` (indices `0` and `n+1` are the virtual bounds).
    fn eta(&self, s: Sign) -> Vec<Vec<Q>> {
        let n = self.n();
        let p = self.side(s);
        let m = n + 2;
        let mut eta = vec![vec![Q::zero(); m]; m];
        for j in 1..m {
            eta[0][j] = Q::one();
        }
        for i in 1..=n {
            eta[i][n + 1] = Q::one();
            for j in 1..=n {
                if p.lt(i - 1, j - 1) {
                    eta[i][j] = Q::one();
                }
            }
        }
        eta
    }

    /// Number of facets of the double order polytope via the transfer
    /// matrices of the two orders.
    pub fn facet_count_transfer_matrix(&self) -> Result<Q> {
        if !self.is_compatible() {
            return Err(Error::NotCompatible("transfer-matrix count needs a compatible double poset".into()));
        }
        let ep = self.eta(Sign::Plus);
        let em = self.eta(Sign::Minus);
        let m = ep.len();
        let id = linalg::identity(m);
        let term = |a: &Vec<Vec<Q>>, b: &Vec<Vec<Q>>| -> Result<Vec<Vec<Q>>> {
            let ab = linalg::mat_mul(a, b);
            let inv = linalg::inverse(&linalg::mat_sub(&id, &ab)).ok_or(Error::SingularMatrix)?;
            Ok(linalg::mat_mul(&inv, &linalg::mat_add(&id, a)))
        };
        let t1 = term(&ep, &em)?;
        let t2 = term(&em, &ep)?;
        Ok(&t1[0][m - 1] + &t2[0][m - 1])
    }

    /// Whether `eta_+ eta_-` is nilpotent on the bounded poset, i.e. no
    /// alternating cycle exists.
    pub fn transfer_product_nilpotent(&self) -> bool {
        let ep = self.eta(Sign::Plus);
        let em = self.eta(Sign::Minus);
        let prod = linalg::mat_mul(&ep, &em);
        let mut power = prod.clone();
        for _ in 0..prod.len() {
            power = linalg::mat_mul(&power, &prod);
        }
        power.iter().all(|r| r.iter().all(|x| x.is_zero()))
    }
}

impl fmt::Display for DoublePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &Poset| {
            p.covers()
                .iter()
                .map(|&(a, b)| format!("{}<{}", p.label(a), p.label(b)))
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "ground {{{}}}; plus: {}; minus: {}", self.labels().join(","), show(&self.plus), show(&self.minus))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::generators as gen;

    #[test]
    fn opposite_pair_is_incompatible() {
        let dp = gen::opposite_pair(2);
        match dp.compatibility() {
            Compatibility::Cycle(c) => {
                assert_eq!(c.len(), 2);
                assert_ne!(c[0].1, c[1].1);
            }
            _ => panic!("expected a cycle"),
        }
        assert!(!dp.transfer_product_nilpotent());
        assert_eq!(dp.facet_count_transfer_matrix().unwrap_err().name(), "NotCompatible");
    }

    #[test]
    fn singularity_does_not_detect_cycles() {
        // ([3], <=, >=) has alternating cycles, yet I - eta_+ eta_- is invertible
        let dp = gen::opposite_pair(3);
        assert!(!dp.is_compatible() && !dp.transfer_product_nilpotent());
        let m = linalg::mat_mul(&dp.eta(Sign::Plus), &dp.eta(Sign::Minus));
        assert_eq!(linalg::det(&linalg::mat_sub(&linalg::identity(m.len()), &m)), -Q::one());
    }

    #[test]
    fn antichain_chain_counts() {
        for n in 0..5 {
            let a = DoublePoset::induced(gen::antichain(n));
            assert_eq!(a.alternating_chains().len(), 2 * n + 2);
            let c = DoublePoset::induced(gen::chain(n));
            assert_eq!(c.alternating_chains().len(), 1 << (n + 1));
            assert_eq!(c.facet_count_transfer_matrix().unwrap(), Q::from_integer((1i64 << (n + 1)).into()));
        }
    }

    #[test]
    fn functional_signs() {
        let dp = DoublePoset::induced(gen::antichain(1));
        let chains = dp.alternating_chains();
        let c = chains.iter().find(|c| c.proper() && c.start == Sign::Plus).unwrap();
        assert_eq!(c.functional(1), vec![-1]);
        assert_eq!(c.last_sign(), Sign::Minus);
        assert_eq!(c.display(dp.labels()), "0 <+ a1 <- 1");
    }
}
