//! The acceptance suite: one PASS/FAIL line per criterion. Run a subset with
//! `cargo test --test acceptance -- 3 5`.

mod common;

use std::fmt::Display;
use std::time::Instant;

use dposet::antiblocking::{self as ab, AntiBlockingPolytope};
use dposet::constructors::*;
use dposet::geometry::lattice::{count_points, ehrhart, nvol_from_ehrhart, DEFAULT_POINT_BUDGET};
use dposet::geometry::triangulation::{is_unimodular, pulling_triangulation, pulling_volume};
use dposet::geometry::{q, QPolytope};
use dposet::hibi::{self, Corruption, Ideal};
use dposet::poset::generators as gen;
use dposet::poset::{DoublePoset, Graph, Poset};
use dposet::transfer::{self, Which};
use dposet::Q;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

trait OrFail<T> {
    fn or_fail(self, what: &str) -> Result<T, String>;
}

impl<T, E: Display> OrFail<T> for Result<T, E> {
    fn or_fail(self, what: &str) -> Result<T, String> {
        self.map_err(|e| format!("{what}: {e}"))
    }
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn fvec(p: &QPolytope) -> Result<Vec<usize>, String> {
    Ok(p.face_lattice().or_fail("face lattice")?.f_vector())
}

fn nvol(p: &QPolytope) -> Result<Q, String> {
    pulling_volume(p).or_fail("pulling volume")
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// The same polytope rebuilt from its vertices alone, so that facets come
/// from double description rather than from the constructor.
fn from_vertices(p: &QPolytope) -> Result<QPolytope, String> {
    QPolytope::new(p.ambient_dim, Some(p.vertices().or_fail("vertices")?.clone()), None)
        .with_lattice(p.lattice.clone())
        .ensure_inequalities()
        .or_fail("double description")
}

fn compatible_small(max_n: usize) -> Vec<DoublePoset> {
    (1..=max_n).flat_map(common::double_posets_up_to_iso).filter(|d| d.is_compatible()).collect()
}

/// XW: alternating chains, face numbers and volumes.
fn criterion_1() -> Outcome {
    let dp = gen::xw();
    let chains = dp.alternating_chains();
    ensure!(chains.len() == 28, "{} alternating chains, expected 28", chains.len());
    let to = double_order_polytope(&dp).or_fail("TOrd")?.poly;
    let f = fvec(&to)?;
    ensure!(f == [21, 112, 247, 263, 135, 28], "f(TOrd) = {f:?}");
    let hull = from_vertices(&to)?.irredundant().or_fail("irredundant")?;
    ensure!(hull.inequalities().unwrap().len() == 28, "hull of TOrd has {} facets", hull.inequalities().unwrap().len());
    let tc = double_chain_polytope(&dp).or_fail("TChain")?.poly;
    let (vo, vc) = (nvol(&to)?, nvol(&tc)?);
    ensure!(vo == q(128) && vc == q(128), "nvol TOrd {vo}, TChain {vc}");
    let cells = transfer::predicted_cell_count(&dp);
    ensure!(cells == 128, "independent cell count {cells}");
    let (ro, rc) = reduced_polytopes(&dp).or_fail("reduced")?;
    let (vro, vrc) = (nvol(&ro.poly)?, nvol(&rc.poly)?);
    ensure!(vro == q(880) && vrc == q(880), "nvol DOrd {vro}, DChain {vrc}");
    let by_ehrhart = nvol_from_ehrhart(&ehrhart(&rc.poly).or_fail("ehrhart DChain")?, 5);
    ensure!(by_ehrhart == q(880), "DChain nvol from lattice counts {by_ehrhart}");
    Ok("28 chains, f-vector, nvol 128/128 and 880/880".into())
}

/// The induced X poset: face numbers and pulling triangulations of polars.
fn criterion_2() -> Outcome {
    let dp = gen::from_spec("x").unwrap();
    let to = double_order_polytope(&dp).or_fail("TOrd")?.poly;
    let tc = double_chain_polytope(&dp).or_fail("TChain")?.poly;
    let (fo, fc) = (fvec(&to)?, fvec(&tc)?);
    ensure!(fo == [16, 88, 204, 240, 144, 36], "f(TOrd) = {fo:?}");
    ensure!(fc == [16, 88, 222, 276, 162, 36], "f(TChain) = {fc:?}");
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut seen = Vec::new();
    for (name, p, expected) in [("chain", &tc, 324), ("order", &to, 320)] {
        let polar = p.polar().or_fail("polar")?;
        let fl = polar.face_lattice().or_fail("polar face lattice")?;
        let mut order: Vec<usize> = (0..polar.vertices().unwrap().len()).collect();
        for _ in 0..5 {
            order.shuffle(&mut rng);
            let n = pulling_triangulation(&fl, &order).len();
            ensure!(n == expected, "{name} polar: pulling triangulation with {n} simplices, expected {expected}");
        }
        seen.push(expected);
    }
    Ok(format!("f-vectors; polar pulling counts {seen:?} over 5 orders each"))
}

/// Alternating chains: face numbers, facet counts and the scan.
fn criterion_3() -> Outcome {
    let a3 = gen::alternating_chain_poset(3);
    let fo = fvec(&double_order_polytope(&a3).or_fail("TOrd")?.poly)?;
    let fc = fvec(&double_chain_polytope(&a3).or_fail("TChain")?.poly)?;
    ensure!(fo == [21, 70, 95, 60, 16], "f(TOrd A3) = {fo:?}");
    ensure!(fc == [21, 67, 86, 51, 13], "f(TChain A3) = {fc:?}");
    for n in 1..=6u64 {
        let dp = gen::alternating_chain_poset(n as usize);
        let to = from_vertices(&double_order_polytope(&dp).or_fail("TOrd")?.poly)?.irredundant().or_fail("irr")?;
        let tc = from_vertices(&double_chain_polytope(&dp).or_fail("TChain")?.poly)?.irredundant().or_fail("irr")?;
        let (no, nc) = (to.inequalities().unwrap().len() as u64, tc.inequalities().unwrap().len() as u64);
        ensure!(nc == 3 * n + 4, "A{n}: TChain has {nc} facets, expected {}", 3 * n + 4);
        ensure!(no == binomial(n + 3, 2) + 1, "A{n}: TOrd has {no} facets, expected {}", binomial(n + 3, 2) + 1);
    }
    let rows = dposet::cli::scan(6, true).or_fail("scan")?;
    let mut flagged = Vec::new();
    for r in &rows {
        if let Some(n) = r.name.strip_prefix("altchain:").and_then(|s| s.parse::<usize>().ok()) {
            if n >= 3 {
                ensure!(!r.dominated(), "scan does not flag {}", r.name);
            }
            if !r.dominated() {
                flagged.push(n);
            }
        } else {
            ensure!(r.dominated(), "scan flags induced {}", r.name);
        }
    }
    Ok(format!("facet counts n <= 6; scan flags A_n for n in {flagged:?}"))
}

/// Closed-form normalised volumes.
fn criterion_4() -> Outcome {
    let check = |spec: &str, tchain: u64, dchain: u64| -> Result<(), String> {
        let dp = gen::from_spec(spec).unwrap();
        let tc = nvol(&double_chain_polytope(&dp).or_fail(spec)?.poly)?;
        let to = nvol(&double_order_polytope(&dp).or_fail(spec)?.poly)?;
        let dc = nvol(&reduced_chain_polytope(&dp).or_fail(spec)?.poly)?;
        let dord = nvol(&reduced_order_polytope(&dp).or_fail(spec)?.poly)?;
        ensure!(tc == q(tchain as i64) && to == tc, "{spec}: nvol TChain {tc}, TOrd {to}, expected {tchain}");
        ensure!(dc == q(dchain as i64) && dord == dc, "{spec}: nvol DChain {dc}, DOrd {dord}, expected {dchain}");
        Ok(())
    };
    for d in 1..=6u64 {
        check(&format!("chain:{d}"), 1 << d, binomial(2 * d, d))?;
        check(&format!("antichain:{d}"), factorial(d + 1), (1 << d) * factorial(d))?;
        let ordered: u64 = (0..=d).map(|i| factorial(d) / factorial(i)).sum();
        let partial_perms: u64 = (0..=d).map(|i| binomial(d, i).pow(2) * factorial(i)).sum();
        check(&format!("mixed:{d}"), ordered, partial_perms)?;
    }
    for n in 1..=4u64 {
        let comb = gen::comb(n as usize);
        let double_factorial: u128 = (1..=n as u128).map(|i| 2 * i - 1).product();
        ensure!(comb.linear_extension_count() == double_factorial, "e(C{n}) = {}", comb.linear_extension_count());
        let listed = comb.linear_extensions(1 << 20).or_fail("linear extensions")?.len() as u128;
        ensure!(listed == double_factorial, "listed {listed} linear extensions of C{n}");
        let v = nvol(&double_chain_polytope(&DoublePoset::induced(comb)).or_fail("comb")?.poly)?;
        let expected = 4u64.pow(n as u32) * factorial(n);
        ensure!(v == q(expected as i64), "comb {n}: nvol {v}, expected {expected}");
    }
    Ok("chain, antichain, chain/antichain for d <= 6; comb for n <= 4".into())
}

fn sign_pow(n: usize) -> Q {
    if n % 2 == 0 {
        Q::one()
    } else {
        -Q::one()
    }
}

/// Ehrhart polynomials of order and chain polytopes, and of TOrd and TChain.
fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut posets = common::registry_posets(5);
    for i in 0..50 {
        posets.push((format!("random #{i}"), common::random_poset(&mut rng, 1 + i % 5, 0.4)));
    }
    for (name, p) in &posets {
        let n = p.n();
        let eo = ehrhart(&order_polytope(p).or_fail(name)?.poly).or_fail(name)?;
        let ec = ehrhart(&chain_polytope(p).or_fail(name)?.poly).or_fail(name)?;
        let omega = p.order_polynomial(false).or_fail(name)?.compose_affine(&Q::one(), &Q::one());
        ensure!(eo == ec && eo == omega, "{name}: ehr(O) = {eo}, ehr(C) = {ec}, Omega(n+1) = {omega}");
        let strict = p.order_polynomial(true).or_fail(name)?.compose_affine(&Q::one(), &-Q::one());
        let reciprocal = eo.compose_affine(&-Q::one(), &Q::zero()).scale(&sign_pow(n));
        ensure!(reciprocal == strict, "{name}: (-1)^n ehr(-k) = {reciprocal}, strict Omega(k-1) = {strict}");
        for k in 1..=3 {
            let expected = p.count_order_maps(k - 1, true) as u64;
            for (kind, poly) in [("O", order_polytope(p)), ("C", chain_polytope(p))] {
                let inner = count_points(&poly.or_fail(name)?.poly, k, true, DEFAULT_POINT_BUDGET).or_fail(name)?;
                ensure!(inner == expected, "{name}: interior of {k}{kind}(P) has {inner} points, expected {expected}");
            }
        }
    }
    let mut doubles: Vec<(String, DoublePoset)> =
        compatible_small(4).into_iter().enumerate().map(|(i, d)| (format!("class #{i}"), d)).collect();
    doubles.extend(common::registry(5).into_iter().filter(|(_, d)| d.is_compatible()));
    for (i, p) in common::posets_up_to_iso(5).into_iter().enumerate() {
        doubles.push((format!("induced 5-class #{i}"), DoublePoset::induced(p)));
    }
    for i in 0..100 {
        doubles.push((format!("random compatible #{i}"), common::random_compatible(&mut rng, 5)));
    }
    for (name, dp) in &doubles {
        let eo = ehrhart(&double_order_polytope(dp).or_fail(name)?.poly).or_fail(name)?;
        let ec = ehrhart(&double_chain_polytope(dp).or_fail(name)?.poly).or_fail(name)?;
        ensure!(eo == ec, "{name}: ehr(TOrd) = {eo}, ehr(TChain) = {ec}");
    }
    Ok(format!("{} posets, {} compatible double posets", posets.len(), doubles.len()))
}

fn chain_ab(p: &Poset) -> Result<AntiBlockingPolytope, String> {
    AntiBlockingPolytope::from_polytope(&chain_polytope(p).or_fail("chain polytope")?.poly).or_fail("anti-blocking")
}

fn stable_ab(g: &Graph) -> Result<AntiBlockingPolytope, String> {
    AntiBlockingPolytope::from_polytope(&stable_set_polytope(g).or_fail("stable set polytope")?.poly).or_fail("anti-blocking")
}

/// Anti-blocking duality, volume and lattice point identities.
fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for i in 0..20 {
        let p = ab::random_instance(&mut rng, 1 + i % 5).or_fail("random instance")?;
        let a = p.associated_by_hull().or_fail("A(P)")?;
        ensure!(a == p.associated(), "instance {i}: A(P) by hull differs from the swapped description");
        let aa = a.associated_by_hull().or_fail("A(A(P))")?;
        ensure!(aa == p, "instance {i}: A(A(P)) != P");
    }
    // lattice pairs with dual integral first factor: chain polytopes of all
    // poset classes and stable set polytopes of perfect graphs
    let mut lattice_ab: Vec<Vec<AntiBlockingPolytope>> = vec![Vec::new(); 5];
    for n in 1..=4 {
        for p in common::posets_up_to_iso(n) {
            lattice_ab[n].push(chain_ab(&p)?);
        }
        for g in common::graphs_up_to_iso(n) {
            lattice_ab[n].push(stable_ab(&g)?);
        }
    }
    let mut pairs = 0;
    let mut counts = 0;
    for n in 1..=4 {
        let list = &lattice_ab[n];
        for (i, p1) in list.iter().enumerate() {
            for p2 in list.iter().skip(i % 3).step_by(if n == 4 { 7 } else { 1 }) {
                let diff = ab::minkowski_difference(p1, p2).or_fail("difference")?;
                let by_points = nvol_from_ehrhart(&ehrhart(&diff).or_fail("ehrhart of difference")?, n);
                let formula = ab::nvol_difference_formula(p1, p2).or_fail("difference formula")?;
                ensure!(formula == by_points, "n = {n}: difference volume {formula} by formula, {by_points} by counting");
                let cay = ab::cayley(p1, p2, 1).or_fail("Cayley sum")?;
                let by_points = nvol_from_ehrhart(&ehrhart(&cay).or_fail("ehrhart of Cayley sum")?, n + 1);
                let formula = ab::nvol_cayley_formula(p1, p2).or_fail("Cayley formula")?;
                ensure!(formula == by_points, "n = {n}: Cayley volume {formula} by formula, {by_points} by counting");
                pairs += 1;
            }
            // counts with a rational second factor as well
            let rational = ab::random_instance(&mut rng, n).or_fail("random instance")?;
            let partner = &list[(i * 5 + 3) % list.len()];
            for p2 in [partner, &rational] {
                for a in 1..=3 {
                    for b in 1..=3 {
                        let f = ab::lattice_count_diff(p1, p2, a, b).or_fail("count formula")?;
                        let d = ab::lattice_count_diff_direct(p1, p2, a, b).or_fail("direct count")?;
                        ensure!(f == d, "n = {n}, a = {a}, b = {b}: {f} by formula, {d} by enumeration");
                        counts += 1;
                    }
                }
            }
        }
    }
    let mut cayley_checked = 0;
    for n in 1..=4 {
        for dp in common::double_posets_up_to_iso(n) {
            let (p1, p2) = (chain_ab(dp.plus())?, chain_ab(dp.minus())?);
            let formula = ab::ehrhart_cayley(&p1, &p2).or_fail("Cayley Ehrhart formula")?;
            let k = ab::cayley(&p1, &p2, 2).or_fail("Cayley sum")?;
            let direct = ehrhart(&QPolytope::from_points(k.vertices().unwrap()).or_fail("hull")?).or_fail("ehrhart")?;
            ensure!(formula == direct, "Cayley Ehrhart polynomial {formula} by formula, {direct} directly");
            cayley_checked += 1;
        }
    }
    Ok(format!("20 involutions, {pairs} volume pairs, {counts} counts, {cayley_checked} Cayley sums"))
}

fn polar_matches_complement(g: &Graph) -> Result<bool, String> {
    let h = hansen(g).or_fail("Hansen")?.poly;
    let hc = hansen(&g.complement()).or_fail("Hansen of complement")?.poly;
    let mut f = fvec(&h)?;
    f.reverse();
    if f != fvec(&hc)? {
        return Ok(false);
    }
    // polar(H(G)) is the image of H(complement) under (x, t) -> (x / 2, -t)
    let n = g.n();
    let mut image: Vec<Vec<Q>> = hc
        .vertices()
        .unwrap()
        .iter()
        .map(|v| v.iter().enumerate().map(|(i, x)| if i < n { x / q(2) } else { -x }).collect())
        .collect();
    image.sort();
    let polar = h.polar().or_fail("polar")?;
    let mut pv = polar.vertices().unwrap().clone();
    pv.sort();
    Ok(pv == image)
}

/// 2-level polytopes and polarity.
fn criterion_7() -> Outcome {
    for (name, p) in common::registry_posets(6) {
        let to = double_order_polytope(&DoublePoset::induced(p)).or_fail(&name)?.poly;
        ensure!(to.is_2level().or_fail(&name)?, "TOrd of induced {name} is not 2-level");
    }
    let mut mixed = 0;
    let mut candidates: Vec<(String, DoublePoset)> =
        compatible_small(4).into_iter().enumerate().map(|(i, d)| (format!("class #{i}"), d)).collect();
    candidates.extend(common::registry(6).into_iter().filter(|(_, d)| d.is_compatible()));
    for (name, dp) in candidates.iter().filter(|(_, d)| !d.is_induced()) {
        let to = double_order_polytope(dp).or_fail(name)?.poly;
        ensure!(!to.is_2level().or_fail(name)?, "TOrd of {name} with distinct orders is 2-level");
        mixed += 1;
    }
    let mut perfect = 0;
    for n in 1..=7 {
        for g in common::graphs_up_to_iso(n) {
            if !g.is_perfect().or_fail("perfect")? {
                continue;
            }
            let h = hansen(&g).or_fail("Hansen")?.poly;
            ensure!(h.is_2level().or_fail("2-level")?, "Hansen polytope of {:?} is not 2-level", g.edges());
            ensure!(polar_matches_complement(&g)?, "polar of Hansen({:?}) does not match the complement", g.edges());
            perfect += 1;
        }
    }
    let mut double_graphs = 0;
    for n in 1..=4 {
        let m = 1u64 << (n * (n - 1) / 2);
        for a in 0..m {
            for b in 0..m {
                let (gp, gm) = (Graph::from_edge_mask(n, a), Graph::from_edge_mask(n, b));
                let k = double_stable_set_polytope(&gp, &gm).or_fail("double stable set polytope")?.poly;
                let expected = a == b && gp.is_perfect().or_fail("perfect")?;
                ensure!(k.is_2level().or_fail("2-level")? == expected, "n = {n}, masks {a}/{b}: 2-level should be {expected}");
                double_graphs += 1;
            }
        }
    }
    Ok(format!("{mixed} mixed compatible double posets, {perfect} perfect graph classes, {double_graphs} double graphs"))
}

/// Reflexivity and the origin condition for polars.
fn criterion_8() -> Outcome {
    let mut reflexive = 0;
    for (name, dp) in common::registry(6).into_iter().filter(|(_, d)| d.is_compatible()) {
        let to = double_order_polytope(&dp).or_fail(&name)?.poly;
        ensure!(to.is_reflexive().or_fail(&name)?, "TOrd({name}) is not reflexive");
        reflexive += 1;
    }
    let opp = gen::opposite_pair(2);
    let to = from_vertices(&double_order_polytope(&opp).or_fail("TOrd")?.poly)?;
    match to.polar() {
        Err(e) if e.name() == "OriginNotInterior" => {}
        other => return Err(format!("polar of TOrd([2], <=, >=) gave {other:?}")),
    }
    let mut classes = 0;
    let mut all: Vec<DoublePoset> = (1..=3).flat_map(common::double_posets_up_to_iso).collect();
    all.extend(common::registry(6).into_iter().map(|(_, d)| d));
    for dp in &all {
        let to = from_vertices(&double_order_polytope(dp).or_fail("TOrd")?.poly)?;
        let raised = matches!(to.polar(), Err(e) if e.name() == "OriginNotInterior");
        ensure!(raised != dp.is_compatible(), "polar raised {raised} for compatible = {}", dp.is_compatible());
        classes += 1;
    }
    Ok(format!("{reflexive} reflexive registry polytopes; origin test on {classes} double posets"))
}

/// Transfer maps, the lattice point bijection and the canonical triangulations.
fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut round_trips = 0;
    let mut lifts = 0;
    let mut triangulations = 0;
    for (name, dp) in common::registry(6) {
        let (pp, pm) = (dp.plus(), dp.minus());
        let (op, cp) = (order_polytope(pp).or_fail(&name)?.poly, chain_polytope(pp).or_fail(&name)?.poly);
        let reduced = if dp.is_compatible() { Some(reduced_order_polytope(&dp).or_fail(&name)?.poly) } else { None };
        for _ in 0..100 {
            let f = transfer::random_order_point(pp, &mut rng);
            let g = transfer::transfer(pp, &f).or_fail("phi")?;
            ensure!(cp.contains(&g).unwrap(), "{name}: phi(f) outside the chain polytope");
            ensure!(transfer::inverse_transfer(pp, &g).or_fail("phi inverse")? == f, "{name}: phi round trip");
            let c = transfer::random_chain_point(pp, &mut rng);
            let o = transfer::inverse_transfer(pp, &c).or_fail("phi inverse")?;
            ensure!(op.contains(&o).unwrap(), "{name}: phi inverse outside the order polytope");
            ensure!(transfer::transfer(pp, &o).or_fail("phi")? == c, "{name}: inverse round trip");
            if let Some(red) = &reduced {
                let (cplus, cminus) = (transfer::random_chain_point(pp, &mut rng), transfer::random_chain_point(pm, &mut rng));
                let x: Vec<Q> = cplus.iter().zip(&cminus).map(|(a, b)| a - b).collect();
                let y = transfer::psi(&dp, &x).or_fail("psi")?;
                ensure!(red.contains(&y).unwrap(), "{name}: psi of a difference point leaves DOrd");
                ensure!(transfer::psi_inverse(&dp, &y).or_fail("psi inverse")? == x, "{name}: psi round trip");
                let z: Vec<Q> = (0..dp.n()).map(|_| transfer::random_rational(&mut rng, -1, 1, 7)).collect();
                ensure!(transfer::psi(&dp, &transfer::psi_inverse(&dp, &z).or_fail("psi inverse")?).or_fail("psi")? == z, "{name}: psi inverse round trip");
            }
            round_trips += 1;
        }
        if dp.is_compatible() {
            for k in 1..=3 {
                let (a, b, ok) = transfer::lift_is_bijective(&dp, k, DEFAULT_POINT_BUDGET).or_fail("lift")?;
                ensure!(ok && a == b, "{name}, k = {k}: lift maps {a} points onto {b}, bijective {ok}");
                lifts += 1;
            }
        }
        for which in [Which::TChain, Which::TOrd] {
            if which == Which::TOrd && !dp.is_compatible() {
                continue;
            }
            let t = transfer::triangulate(&dp, which).or_fail("triangulate")?;
            let p = &t.polytope.poly;
            ensure!(is_unimodular(p, &t.cells).or_fail("unimodular")?, "{name} {which:?}: non-unimodular cell");
            let v = nvol(p)?;
            ensure!(v == q(t.cells.len() as i64), "{name} {which:?}: {} cells, nvol {v}", t.cells.len());
            ensure!(t.cells.len() as u128 == transfer::predicted_cell_count(&dp), "{name}: predicted cell count differs");
            if t.cells.len() <= 1500 {
                let r = transfer::verify_triangulation(&t).or_fail("verify")?;
                ensure!(r.ok(), "{name} {which:?}: {r:?}");
            }
            triangulations += 1;
        }
    }
    Ok(format!("{round_trips} point batches, {lifts} lifts, {triangulations} triangulations"))
}

/// Groebner bases of toric ideals.
fn criterion_10() -> Outcome {
    let cap = hibi::DEFAULT_REDUCTION_CAP;
    let mut certified = 0;
    for n in 1..=4 {
        for p in common::posets_up_to_iso(n) {
            let dp = DoublePoset::induced(p.clone());
            let c = hibi::certify(&hibi::hibi_basis(&p).or_fail("hibi basis")?, &dp, Ideal::Hibi, cap).or_fail("certify")?;
            ensure!(c.ok(), "Hibi basis of {:?}: {c:?}", p.relations());
            certified += 1;
        }
        for dp in common::double_posets_up_to_iso(n) {
            let mut kinds = vec![Ideal::TChain];
            if dp.is_compatible() {
                kinds.push(Ideal::TOrd);
            }
            for which in kinds {
                let basis = hibi::basis_for(which, &dp).or_fail("basis")?;
                let c = hibi::certify(&basis, &dp, which, cap).or_fail("certify")?;
                ensure!(c.ok() && c.initial_complex, "{which:?} basis of {:?} / {:?}: {c:?}", dp.plus().relations(), dp.minus().relations());
                certified += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut controls = 0;
    let cases = [("xw", Ideal::TOrd), ("xw", Ideal::TChain), ("comb:2", Ideal::Hibi), ("mixed:3", Ideal::TChain), ("antichain:3", Ideal::TOrd)];
    for (spec, which) in cases {
        let dp = gen::from_spec(spec).unwrap();
        let basis = hibi::basis_for(which, &dp).or_fail("basis")?;
        for how in [Corruption::Drop, Corruption::Retail] {
            for _ in 0..3 {
                let Some(bad) = hibi::corrupt(&basis, how, &mut rng) else { continue };
                let c = hibi::certify(&bad, &dp, which, cap).or_fail("certify")?;
                ensure!(!c.ok(), "{spec} {which:?}: corrupted basis ({how:?}) still certifies");
                controls += 1;
            }
        }
    }
    ensure!(controls > 0, "no corrupted bases produced");
    Ok(format!("{certified} bases certified, {controls} corrupted bases rejected"))
}

/// Facet counts by transfer matrices against enumeration.
fn criterion_11() -> Outcome {
    let mut checked = 0;
    let mut all: Vec<(String, DoublePoset)> = common::registry(6).into_iter().filter(|(_, d)| d.is_compatible()).collect();
    all.extend(compatible_small(4).into_iter().enumerate().map(|(i, d)| (format!("class #{i}"), d)));
    for (name, dp) in all {
        let tm = dp.facet_count_transfer_matrix().or_fail(&name)?;
        let chains = dp.alternating_chains().len();
        ensure!(tm == q(chains as i64), "{name}: transfer matrix gives {tm}, enumeration {chains}");
        let hull = from_vertices(&double_order_polytope(&dp).or_fail(&name)?.poly)?.irredundant().or_fail("irr")?;
        let facets = hull.inequalities().unwrap().len();
        ensure!(facets == chains, "{name}: {facets} facets by double description, {chains} alternating chains");
        checked += 1;
    }
    Ok(format!("{checked} compatible double posets"))
}

const CRITERIA: [(&str, fn() -> Outcome); 11] = [
    ("XW suite", criterion_1),
    ("X-poset suite", criterion_2),
    ("alternating-chain family", criterion_3),
    ("closed-form volumes", criterion_4),
    ("Ehrhart equalities", criterion_5),
    ("anti-blocking calculus", criterion_6),
    ("2-level and polarity", criterion_7),
    ("reflexivity", criterion_8),
    ("transfer and triangulation", criterion_9),
    ("Groebner bases", criterion_10),
    ("transfer-matrix facet count", criterion_11),
];

fn main() {
    let selected: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let start = Instant::now();
    let results: Vec<(usize, Outcome, f64)> = std::thread::scope(|s| {
        let handles: Vec<_> = CRITERIA
            .iter()
            .enumerate()
            .filter(|(i, _)| selected.is_empty() || selected.contains(&(i + 1)))
            .map(|(i, (_, f))| {
                let f = *f;
                let h = std::thread::Builder::new()
                    .stack_size(64 << 20)
                    .spawn_scoped(s, move || {
                        let t = Instant::now();
                        let r = std::panic::catch_unwind(f).unwrap_or_else(|e| {
                            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
                        });
                        (r, t.elapsed().as_secs_f64())
                    })
                    .expect("spawn");
                (i, h)
            })
            .collect();
        handles.into_iter().map(|(i, h)| {
            let (r, t) = h.join().expect("join");
            (i, r, t)
        }).collect()
    });
    let mut failed = Vec::new();
    for (i, r, t) in results {
        let name = CRITERIA[i].0;
        match r {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({t:.1}s)", i + 1),
            Err(why) => {
                println!("criterion {:>2} FAIL  {name}: {why} ({t:.1}s)", i + 1);
                failed.push(i + 1);
            }
        }
    }
    println!("acceptance: {} failed, total {:.1}s", failed.len(), start.elapsed().as_secs_f64());
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
