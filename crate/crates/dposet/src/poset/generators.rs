//! Named posets and double posets, the example registry, and combinators.

use super::{DoublePoset, Poset};
use crate::{Error, Result};

fn labelled(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// `a1 < a2 < ... < an`.
pub fn chain(n: usize) -> Poset {
    let rel: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Poset::new(labelled("a", n), &rel).expect("chain")
}

pub fn antichain(n: usize) -> Poset {
    Poset::new(labelled("a", n), &[]).expect("antichain")
}

/// The comb: a spine `a1 < ... < an` with a tooth `bi < ai` below each
/// spine element. Elements are listed `a1..an, b1..bn`.
pub fn comb(n: usize) -> Poset {
    let mut labels = labelled("a", n);
    labels.extend(labelled("b", n));
    let mut rel: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    rel.extend((0..n).map(|i| (n + i, i)));
    Poset::new(labels, &rel).expect("comb")
}

/// `i < j` iff `i < j` as integers and `pi_i < pi_j`.
pub fn from_permutation(pi: &[i64]) -> Poset {
    let n = pi.len();
    let mut rel = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if pi[i] < pi[j] {
                rel.push((i, j));
            }
        }
    }
    Poset::new(numbered(n), &rel).expect("permutation poset")
}

/// The plane double poset `(<=_pi, <=_{-pi})`.
pub fn plane_from_permutation(pi: &[i64]) -> DoublePoset {
    let neg: Vec<i64> = pi.iter().map(|x| -x).collect();
    DoublePoset::new(from_permutation(pi), from_permutation(&neg)).expect("same ground set")
}

/// Two minimal elements below a centre below two maximal elements.
pub fn x_poset() -> Poset {
    Poset::build(
        &["a", "b", "c", "d", "e"],
        &[("a", "c"), ("b", "c"), ("c", "d"), ("c", "e")],
    )
    .expect("X")
}

/// The zigzag `W`: minima `a, b`, maxima `c, d, e` with `a < c, d` and
/// `b < c, e`.
pub fn w_poset() -> Poset {
    Poset::build(
        &["a", "b", "c", "d", "e"],
        &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "e")],
    )
    .expect("W")
}

/// The compatible XW double poset: `X` as plus order, `W` as minus order on
/// the same five elements, sharing the relations `a < c` and `b < c`.
pub fn xw() -> DoublePoset {
    DoublePoset::new(x_poset(), w_poset()).expect("XW")
}

/// The double poset on `a1, ..., a_{n+1}` with covers
/// `a1 <+ a2 <- a3 <+ a4 ...` alternating between the two orders.
pub fn alternating_chain_poset(n: usize) -> DoublePoset {
    let labels = labelled("a", n + 1);
    let plus: Vec<_> = (0..n).filter(|i| i % 2 == 0).map(|i| (i, i + 1)).collect();
    let minus: Vec<_> = (0..n).filter(|i| i % 2 == 1).map(|i| (i, i + 1)).collect();
    DoublePoset::new(Poset::new(labels.clone(), &plus).unwrap(), Poset::new(labels, &minus).unwrap())
        .expect("alternating chain poset")
}

/// Chain as plus order, antichain as minus order.
pub fn mixed(n: usize) -> DoublePoset {
    DoublePoset::new(chain(n), antichain(n)).expect("mixed")
}

/// `([n], <=, >=)`, the chain against its opposite.
pub fn opposite_pair(n: usize) -> DoublePoset {
    let p = Poset::new(numbered(n), &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap();
    DoublePoset::new(p.clone(), p.opposite()).expect("opposite pair")
}

fn parse_usize(name: &str, param: Option<&str>) -> Result<usize> {
    param
        .and_then(|p| p.trim().parse().ok())
        .ok_or_else(|| Error::UnknownGenerator(format!("{name} needs a nonnegative integer parameter")))
}

fn parse_perm(name: &str, param: Option<&str>) -> Result<Vec<i64>> {
    let p = param.ok_or_else(|| Error::UnknownGenerator(format!("{name} needs a sequence like 2,1,3")))?;
    let v: std::result::Result<Vec<i64>, _> = p.split(',').map(|s| s.trim().parse()).collect();
    let v = v.map_err(|_| Error::UnknownGenerator(format!("bad sequence '{p}'")))?;
    let mut sorted = v.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != v.len() {
        return Err(Error::UnknownGenerator(format!("sequence '{p}' has repeated values")));
    }
    Ok(v)
}

/// Names accepted by [`from_spec`], for help texts.
pub const REGISTRY: &[&str] = &[
    "xw", "x", "comb:n", "altchain:n", "chain:n", "antichain:n", "mixed:n", "opp-pair:n", "perm:p1,..,pn",
    "plane:p1,..,pn",
];

/// Resolves a generator string such as `comb:3` to a double poset. Plain
/// posets come back as induced double posets.
pub fn from_spec(spec: &str) -> Result<DoublePoset> {
    let (name, param) = match spec.split_once(':') {
        Some((a, b)) => (a.trim(), Some(b)),
        None => (spec.trim(), None),
    };
    let induced = DoublePoset::induced;
    Ok(match name {
        "xw" => xw(),
        "x" => induced(x_poset()),
        "w" => induced(w_poset()),
        "comb" => induced(comb(parse_usize(name, param)?)),
        "chain" => induced(chain(parse_usize(name, param)?)),
        "antichain" => induced(antichain(parse_usize(name, param)?)),
        "altchain" => alternating_chain_poset(parse_usize(name, param)?),
        "mixed" => mixed(parse_usize(name, param)?),
        "opp-pair" => opposite_pair(parse_usize(name, param)?),
        "perm" => induced(from_permutation(&parse_perm(name, param)?)),
        "plane" => plane_from_permutation(&parse_perm(name, param)?),
        _ => return Err(Error::UnknownGenerator(spec.to_string())),
    })
}

pub fn opposite(p: &Poset) -> Poset {
    p.opposite()
}

pub fn induced_double(p: &Poset) -> DoublePoset {
    DoublePoset::induced(p.clone())
}

/// Labels of `q`, renamed where they clash with `taken`.
fn fresh_labels(taken: &[String], q: &Poset) -> Vec<String> {
    let mut used: Vec<String> = taken.to_vec();
    let mut out = Vec::with_capacity(q.n());
    for l in q.labels() {
        let mut cand = l.clone();
        let mut k = 2;
        while used.contains(&cand) {
            cand = format!("{l}_{k}");
            k += 1;
        }
        used.push(cand.clone());
        out.push(cand);
    }
    out
}

fn combine(p: &Poset, q: &Poset, ordinal: bool) -> Poset {
    let n = p.n();
    let mut labels = p.labels().to_vec();
    labels.extend(fresh_labels(p.labels(), q));
    let mut rel = p.relations();
    rel.extend(q.relations().into_iter().map(|(a, b)| (a + n, b + n)));
    if ordinal {
        for a in 0..n {
            for b in 0..q.n() {
                rel.push((a, n + b));
            }
        }
    }
    Poset::new(labels, &rel).expect("unions of posets are posets")
}

pub fn disjoint_union(p: &Poset, q: &Poset) -> Poset {
    combine(p, q, false)
}

/// Every element of `p` below every element of `q`.
pub fn ordinal_sum(p: &Poset, q: &Poset) -> Poset {
    combine(p, q, true)
}

/// Composition: disjoint union of the plus orders, ordinal sum of the minus
/// orders.
pub fn composition(a: &DoublePoset, b: &DoublePoset) -> DoublePoset {
    DoublePoset::new(disjoint_union(a.plus(), b.plus()), ordinal_sum(a.minus(), b.minus()))
        .expect("labels are renamed identically on both sides")
}
