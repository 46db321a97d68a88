//! Finite posets, double posets and their combinatorial invariants.
//!
//! Subsets of the ground set are `u64` bitmasks, so posets have at most
//! [`MAX_ELEMENTS`] elements. Every enumeration returns subsets in the
//! canonical order of [`canon_cmp`].

pub mod double;
pub mod generators;
pub mod graph;

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::poly::Poly;
use crate::{Error, Result};

pub use double::{AltChain, Compatibility, DoublePoset, Sign};
pub use graph::Graph;

/// A subset of the ground set.
pub type Set = u64;

pub const MAX_ELEMENTS: usize = 63;

/// Default cap on the number of filters, chains or antichains enumerated.
pub const DEFAULT_ENUM_CAP: usize = 1 << 20;

/// Largest poset for which order polynomials are computed by enumeration.
pub const ORDER_POLY_BOUND: usize = 8;

pub fn bits(s: Set) -> impl Iterator<Item = usize> {
    let mut s = s;
    std::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let i = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(i)
        }
    })
}

pub fn bit(i: usize) -> Set {
    1u64 << i
}

pub fn full(n: usize) -> Set {
    if n == 0 {
        0
    } else {
        u64::MAX >> (64 - n)
    }
}

pub fn card(s: Set) -> usize {
    s.count_ones() as usize
}

/// Canonical subset order: by cardinality, then lexicographically on the
/// ascending list of element indices.
pub fn canon_cmp(a: Set, b: Set) -> Ordering {
    match a.count_ones().cmp(&b.count_ones()) {
        Ordering::Equal if a == b => Ordering::Equal,
        Ordering::Equal => {
            let low = (a ^ b) & (a ^ b).wrapping_neg();
            if a & low != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
        o => o,
    }
}

pub fn sort_canonical(v: &mut [Set]) {
    v.sort_by(|a, b| canon_cmp(*a, *b));
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    labels: Vec<String>,
    // up[a] = {b : a <= b}, down[a] = {b : b <= a}; both reflexive
    up: Vec<Set>,
    down: Vec<Set>,
}

impl Poset {
    /// Builds the reflexive-transitive closure of `rel` on `labels.len()`
    /// elements and validates antisymmetry.
    pub fn new(labels: Vec<String>, rel: &[(usize, usize)]) -> Result<Poset> {
        let n = labels.len();
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge(format!("{n} elements (max {MAX_ELEMENTS})")));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut up: Vec<Set> = (0..n).map(bit).collect();
        for &(a, b) in rel {
            if a >= n || b >= n {
                return Err(Error::UnknownLabel(format!("index {}", a.max(b))));
            }
            up[a] |= bit(b);
        }
        for k in 0..n {
            for i in 0..n {
                if up[i] & bit(k) != 0 {
                    up[i] |= up[k];
                }
            }
        }
        for a in 0..n {
            for b in bits(up[a]) {
                if b != a && up[b] & bit(a) != 0 {
                    return Err(Error::Cycle(labels[a].clone(), labels[b].clone()));
                }
            }
        }
        let mut down = vec![0; n];
        for a in 0..n {
            for b in bits(up[a]) {
                down[b] |= bit(a);
            }
        }
        Ok(Poset { labels, up, down })
    }

    /// Builds a poset from labels and label pairs `(a, b)` meaning `a <= b`.
    pub fn build<S: AsRef<str>>(labels: &[S], pairs: &[(S, S)]) -> Result<Poset> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let idx = |s: &str| {
            labels
                .iter()
                .position(|l| l == s)
                .ok_or_else(|| Error::UnknownLabel(s.to_string()))
        };
        let rel = pairs
            .iter()
            .map(|(a, b)| Ok((idx(a.as_ref())?, idx(b.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Poset::new(labels, &rel)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn ground(&self) -> Set {
        full(self.n())
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a] & bit(b) != 0
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// `{b : a <= b}`.
    pub fn up(&self, a: usize) -> Set {
        self.up[a]
    }

    /// `{b : b <= a}`.
    pub fn down(&self, a: usize) -> Set {
        self.down[a]
    }

    /// Strict relations `(a, b)` with `a < b`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n() {
            for b in bits(self.up[a] & !bit(a)) {
                out.push((a, b));
            }
        }
        out
    }

    /// Cover relations `a < b` with nothing strictly in between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(a, b)| self.up[a] & self.down[b] == bit(a) | bit(b))
            .collect()
    }

    pub fn min_of(&self, s: Set) -> Set {
        bits(s).filter(|&a| self.down[a] & s == bit(a)).fold(0, |m, a| m | bit(a))
    }

    pub fn max_of(&self, s: Set) -> Set {
        bits(s).filter(|&a| self.up[a] & s == bit(a)).fold(0, |m, a| m | bit(a))
    }

    /// The filter `{a : a >= s for some s in S}`.
    pub fn filter_generated(&self, s: Set) -> Set {
        bits(s).fold(0, |m, a| m | self.up[a])
    }

    /// The order ideal `{a : a <= s for some s in S}`.
    pub fn ideal_generated(&self, s: Set) -> Set {
        bits(s).fold(0, |m, a| m | self.down[a])
    }

    pub fn is_filter(&self, s: Set) -> bool {
        self.filter_generated(s) == s
    }

    pub fn is_chain(&self, s: Set) -> bool {
        bits(s).all(|a| (self.up[a] | self.down[a]) & s == s)
    }

    pub fn is_antichain(&self, s: Set) -> bool {
        bits(s).all(|a| (self.up[a] | self.down[a]) & s == bit(a))
    }

    /// All antichains, including the empty one, in canonical order.
    pub fn antichains(&self) -> Result<Vec<Set>> {
        self.antichains_capped(DEFAULT_ENUM_CAP)
    }

    pub fn antichains_capped(&self, cap: usize) -> Result<Vec<Set>> {
        let n = self.n();
        let mut out = Vec::new();
        let mut stack = vec![(0usize, 0 as Set, 0 as Set)];
        while let Some((i, chosen, blocked)) = stack.pop() {
            if i == n {
                out.push(chosen);
                if out.len() > cap {
                    return Err(Error::TooLarge(format!("more than {cap} antichains")));
                }
                continue;
            }
            stack.push((i + 1, chosen, blocked));
            if blocked & bit(i) == 0 {
                stack.push((i + 1, chosen | bit(i), blocked | self.up[i] | self.down[i]));
            }
        }
        sort_canonical(&mut out);
        Ok(out)
    }

    /// All filters (up-closed subsets), including the empty set and the
    /// ground set, in canonical order.
    pub fn filters(&self) -> Result<Vec<Set>> {
        self.filters_capped(DEFAULT_ENUM_CAP)
    }

    pub fn filters_capped(&self, cap: usize) -> Result<Vec<Set>> {
        let mut out: Vec<Set> = self
            .antichains_capped(cap)?
            .into_iter()
            .map(|a| self.filter_generated(a))
            .collect();
        sort_canonical(&mut out);
        Ok(out)
    }

    /// All chains, including the empty chain, in canonical order.
    pub fn chains(&self) -> Result<Vec<Set>> {
        self.chains_capped(DEFAULT_ENUM_CAP)
    }

    pub fn chains_capped(&self, cap: usize) -> Result<Vec<Set>> {
        let order = self.linear_extension();
        let mut out = vec![0 as Set];
        // (chain, position of its top element in `order`)
        let mut stack: Vec<(Set, usize)> = Vec::new();
        for (pos, &a) in order.iter().enumerate() {
            stack.push((bit(a), pos));
        }
        while let Some((c, pos)) = stack.pop() {
            out.push(c);
            if out.len() > cap {
                return Err(Error::TooLarge(format!("more than {cap} chains")));
            }
            let top = order[pos];
            for (p, &b) in order.iter().enumerate().skip(pos + 1) {
                if self.lt(top, b) {
                    stack.push((c | bit(b), p));
                }
            }
        }
        sort_canonical(&mut out);
        Ok(out)
    }

    /// Nonempty chains, the convention used for reported counts.
    pub fn nonempty_chains(&self) -> Result<Vec<Set>> {
        Ok(self.chains()?.into_iter().filter(|&c| c != 0).collect())
    }

    /// Inclusion-maximal chains. The empty poset has the single empty chain.
    pub fn maximal_chains(&self) -> Result<Vec<Set>> {
        let n = self.n();
        Ok(self
            .chains()?
            .into_iter()
            .filter(|&c| (0..n).all(|a| c & bit(a) != 0 || !self.is_chain(c | bit(a))))
            .collect())
    }

    /// Some linear extension, listed from bottom to top. Ties are broken by
    /// the smallest index, so the result is deterministic.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.n();
        let mut placed: Set = 0;
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let a = (0..n)
                .find(|&a| placed & bit(a) == 0 && self.down[a] & !placed == bit(a))
                .expect("acyclic");
            placed |= bit(a);
            out.push(a);
        }
        out
    }

    /// Number of linear extensions, by counting maximal chains of the
    /// filter lattice.
    pub fn linear_extension_count(&self) -> u128 {
        let filters = self.filters().expect("filter lattice within enumeration cap");
        let mut count: HashMap<Set, u128> = HashMap::with_capacity(filters.len());
        for &f in &filters {
            if f == 0 {
                count.insert(0, 1);
                continue;
            }
            let c = bits(self.min_of(f)).map(|a| count[&(f & !bit(a))]).sum();
            count.insert(f, c);
        }
        count[&self.ground()]
    }

    /// All linear extensions (bottom to top) in lexicographic order.
    pub fn linear_extensions(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        let n = self.n();
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(n);
        self.extend_linear(&mut prefix, 0, cap, &mut out)?;
        Ok(out)
    }

    fn extend_linear(
        &self,
        prefix: &mut Vec<usize>,
        placed: Set,
        cap: usize,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        if prefix.len() == self.n() {
            out.push(prefix.clone());
            if out.len() > cap {
                return Err(Error::TooLarge(format!("more than {cap} linear extensions")));
            }
            return Ok(());
        }
        for a in 0..self.n() {
            if placed & bit(a) == 0 && self.down[a] & !placed == bit(a) {
                prefix.push(a);
                self.extend_linear(prefix, placed | bit(a), cap, out)?;
                prefix.pop();
            }
        }
        Ok(())
    }

    pub fn opposite(&self) -> Poset {
        Poset { labels: self.labels.clone(), up: self.down.clone(), down: self.up.clone() }
    }

    /// Induced subposet on `s`, with elements in increasing index order.
    pub fn restrict(&self, s: Set) -> Poset {
        let idx: Vec<usize> = bits(s).collect();
        let labels = idx.iter().map(|&i| self.labels[i].clone()).collect();
        let squeeze = |m: Set| {
            idx.iter().enumerate().filter(|(_, &i)| m & bit(i) != 0).fold(0, |acc, (j, _)| acc | bit(j))
        };
        let up = idx.iter().map(|&i| squeeze(self.up[i])).collect();
        let down = idx.iter().map(|&i| squeeze(self.down[i])).collect();
        Poset { labels, up, down }
    }

    /// Number of (strictly) order-preserving maps into the chain `[k]`.
    pub fn count_order_maps(&self, k: i64, strict: bool) -> u128 {
        let order = self.linear_extension();
        let mut values = vec![0i64; self.n()];
        self.count_maps_from(&order, 0, k, strict, &mut values)
    }

    fn count_maps_from(&self, order: &[usize], pos: usize, k: i64, strict: bool, values: &mut [i64]) -> u128 {
        if pos == order.len() {
            return 1;
        }
        let a = order[pos];
        let mut lo = 1;
        for b in bits(self.down[a] & !bit(a)) {
            lo = lo.max(values[b] + i64::from(strict));
        }
        let mut total = 0;
        for v in lo..=k {
            values[a] = v;
            total += self.count_maps_from(order, pos + 1, k, strict, values);
        }
        total
    }

    /// The (strict) order polynomial, interpolated from enumerated counts at
    /// `k = 1..=|P|+1`.
    pub fn order_polynomial(&self, strict: bool) -> Result<Poly> {
        let n = self.n();
        if n > ORDER_POLY_BOUND {
            return Err(Error::TooLarge(format!("order polynomial of {n} elements (max {ORDER_POLY_BOUND})")));
        }
        let pts: Vec<(i64, num_bigint::BigInt)> = (1..=n as i64 + 1)
            .map(|k| (k, self.count_order_maps(k, strict).into()))
            .collect();
        Ok(Poly::interpolate_ints(&pts))
    }

    /// Human-readable set `{a,b}`.
    pub fn fmt_set(&self, s: Set) -> String {
        let names: Vec<&str> = bits(s).map(|i| self.label(i)).collect();
        format!("{{{}}}", names.join(","))
    }
}
