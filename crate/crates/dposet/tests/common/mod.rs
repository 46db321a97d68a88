//! Enumeration helpers shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use dposet::poset::generators as gen;
use dposet::poset::{DoublePoset, Graph, Poset};
use rand::Rng;

/// Strict relation as a bitmask: bit `i * n + j` means `i < j`.
type Rel = u64;

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("p{i}")).collect()
}

pub fn poset_from_rel(n: usize, rel: Rel) -> Poset {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| rel >> (i * n + j) & 1 == 1).collect();
    Poset::new(labels(n), &pairs).expect("closed relation")
}

/// All strict partial orders on `0..n`, grown one element at a time: the new
/// element sits above an ideal and below a filter, every element of the
/// ideal below every element of the filter.
pub fn labeled_relations(n: usize) -> Vec<Rel> {
    let mut layer: Vec<Vec<Vec<bool>>> = vec![vec![]];
    for m in 0..n {
        let mut next = Vec::new();
        for lt in &layer {
            for down in 0u32..1 << m {
                for up in 0u32..1 << m {
                    if down & up != 0 {
                        continue;
                    }
                    let is_ideal = (0..m).all(|a| down >> a & 1 == 0 || (0..m).all(|b| !lt[b][a] || down >> b & 1 == 1));
                    let is_filter = (0..m).all(|a| up >> a & 1 == 0 || (0..m).all(|b| !lt[a][b] || up >> b & 1 == 1));
                    let linked = (0..m).all(|a| down >> a & 1 == 0 || (0..m).all(|b| up >> b & 1 == 0 || lt[a][b]));
                    if !(is_ideal && is_filter && linked) {
                        continue;
                    }
                    let mut r = vec![vec![false; m + 1]; m + 1];
                    for a in 0..m {
                        for b in 0..m {
                            r[a][b] = lt[a][b];
                        }
                        r[a][m] = down >> a & 1 == 1;
                        r[m][a] = up >> a & 1 == 1;
                    }
                    next.push(r);
                }
            }
        }
        layer = next;
    }
    layer
        .into_iter()
        .map(|r| {
            let mut mask = 0;
            for (i, row) in r.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    if x {
                        mask |= 1 << (i * n + j);
                    }
                }
            }
            mask
        })
        .collect()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

fn permute_rel(n: usize, rel: Rel, perm: &[usize]) -> Rel {
    let mut out = 0;
    for i in 0..n {
        for j in 0..n {
            if rel >> (i * n + j) & 1 == 1 {
                out |= 1 << (perm[i] * n + perm[j]);
            }
        }
    }
    out
}

/// One representative per isomorphism class of posets on `n` elements.
pub fn posets_up_to_iso(n: usize) -> Vec<Poset> {
    let perms = permutations(n);
    let classes: BTreeSet<Rel> = labeled_relations(n)
        .into_iter()
        .map(|r| perms.iter().map(|p| permute_rel(n, r, p)).min().unwrap())
        .collect();
    classes.into_iter().map(|r| poset_from_rel(n, r)).collect()
}

/// One representative per class of double posets on `n` elements up to
/// simultaneous relabelling of both orders.
pub fn double_posets_up_to_iso(n: usize) -> Vec<DoublePoset> {
    let perms = permutations(n);
    let rels = labeled_relations(n);
    let mut classes = BTreeSet::new();
    for &a in &rels {
        for &b in &rels {
            let key = perms.iter().map(|p| (permute_rel(n, a, p), permute_rel(n, b, p))).min().unwrap();
            classes.insert(key);
        }
    }
    classes
        .into_iter()
        .map(|(a, b)| DoublePoset::new(poset_from_rel(n, a), poset_from_rel(n, b)).expect("same ground set"))
        .collect()
}

fn edge_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

fn permute_edges(n: usize, mask: u64, perm: &[usize]) -> u64 {
    let mut out = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> edge_index(n, i, j) & 1 == 1 {
                out |= 1 << edge_index(n, perm[i], perm[j]);
            }
        }
    }
    out
}

/// Edge masks (in [`Graph::from_edge_mask`] layout) of one graph per
/// isomorphism class on `n` nodes, by adding a node to each class on `n - 1`.
pub fn graph_masks_up_to_iso(n: usize) -> Vec<u64> {
    let mut classes: BTreeSet<u64> = BTreeSet::from([0]);
    for m in 2..=n {
        let perms = permutations(m);
        let mut next = BTreeSet::new();
        for &g in &classes {
            // re-index the (m-1)-node mask into the m-node layout
            let mut base = 0;
            for i in 0..m - 1 {
                for j in i + 1..m - 1 {
                    if g >> edge_index(m - 1, i, j) & 1 == 1 {
                        base |= 1 << edge_index(m, i, j);
                    }
                }
            }
            for nb in 0u64..1 << (m - 1) {
                let mut h = base;
                for i in 0..m - 1 {
                    if nb >> i & 1 == 1 {
                        h |= 1 << edge_index(m, i, m - 1);
                    }
                }
                next.insert(perms.iter().map(|p| permute_edges(m, h, p)).min().unwrap());
            }
        }
        classes = next;
    }
    if n == 0 {
        return vec![];
    }
    classes.into_iter().collect()
}

pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    graph_masks_up_to_iso(n).into_iter().map(|m| Graph::from_edge_mask(n, m)).collect()
}

/// A random naturally labelled poset: each pair `i < j` related with
/// probability `density`, then closed.
pub fn random_poset(rng: &mut impl Rng, n: usize, density: f64) -> Poset {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((i, j));
            }
        }
    }
    Poset::new(labels(n), &pairs).expect("acyclic")
}

/// A random double poset sharing the natural labelling, hence compatible.
pub fn random_compatible(rng: &mut impl Rng, n: usize) -> DoublePoset {
    DoublePoset::new(random_poset(rng, n, 0.4), random_poset(rng, n, 0.4)).expect("same ground set")
}

/// Named examples of the registry with their parameters spelled out.
pub fn registry_specs() -> Vec<String> {
    let mut v: Vec<String> = ["xw", "x", "w"].iter().map(|s| s.to_string()).collect();
    for n in 1..=6 {
        v.push(format!("chain:{n}"));
        v.push(format!("antichain:{n}"));
        v.push(format!("mixed:{n}"));
    }
    for n in 1..=3 {
        v.push(format!("comb:{n}"));
        v.push(format!("opp-pair:{n}"));
    }
    for n in 1..=5 {
        v.push(format!("altchain:{n}"));
    }
    for s in ["perm:2,1,3", "perm:3,1,4,2", "perm:2,4,1,3,5", "plane:2,1,3", "plane:3,1,4,2", "plane:2,4,1,5,3"] {
        v.push(s.to_string());
    }
    v
}

pub fn registry(max_n: usize) -> Vec<(String, DoublePoset)> {
    registry_specs()
        .into_iter()
        .map(|s| {
            let dp = gen::from_spec(&s).expect("registry spec");
            (s, dp)
        })
        .filter(|(_, dp)| dp.n() <= max_n)
        .collect()
}

/// Plus orders of the registry, deduplicated by name.
pub fn registry_posets(max_n: usize) -> Vec<(String, Poset)> {
    let mut out: Vec<(String, Poset)> = Vec::new();
    for (name, dp) in registry(max_n) {
        if !out.iter().any(|(_, p)| p.labels() == dp.plus().labels() && p.relations() == dp.plus().relations()) {
            out.push((format!("{name} (plus)"), dp.plus().clone()));
        }
    }
    out
}
