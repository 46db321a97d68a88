//! Command-line front end.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::antiblocking::{self as ab, AntiBlockingPolytope};
use crate::constructors::{self, chain_polytope, double_chain_polytope, double_order_polytope, LabeledPolytope};
use crate::geometry::{fmt_q, lattice, linalg, q_json, triangulation, QPolytope};
use crate::hibi::{self, Ideal};
use crate::poset::{generators, Compatibility, DoublePoset, Poset};
use crate::transfer::{self, Which};
use crate::{Error, Result, Q};

#[derive(Parser, Debug)]
#[command(name = "dposet", version, about = "Exact polytopes of double posets")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cap on lattice point search nodes.
    #[arg(long, global = true)]
    budget: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
struct Input {
    /// Generator such as `xw`, `comb:3` or `altchain:4`.
    #[arg(long)]
    gen: Option<String>,
    /// Double poset file: {"elements": [...], "plus": [[a, b], ...], "minus": [...]}.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct PolytopeArg {
    /// order, chain, tord, tchain, dord, dchain, hansen, valuation, gamma or twisted-prism.
    #[arg(long, default_value = "tord")]
    polytope: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Property {
    Compatible,
    #[value(name = "2level")]
    TwoLevel,
    Reflexive,
    Perfect,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Map {
    Phi,
    PhiInv,
    Psi,
    PsiInv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TriPolytope {
    Tord,
    Tchain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum IdealArg {
    Tord,
    Tchain,
    Hibi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AbOp {
    Assoc,
    Diff,
    Cayley,
    Subdivide,
    Count,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test a property of the double poset or of a polytope.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(value_enum)]
        property: Property,
        #[command(flatten)]
        polytope: PolytopeArg,
    },
    /// List vertices.
    Vertices {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        polytope: PolytopeArg,
    },
    /// List facet inequalities `<a, x> <= b`.
    Facets {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        polytope: PolytopeArg,
    },
    /// Face numbers f_0, ..., f_{d-1}.
    Fvector {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        polytope: PolytopeArg,
    },
    /// Volume, Euclidean or normalised to the polytope's lattice.
    Volume {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        polytope: PolytopeArg,
        #[arg(long)]
        normalized: bool,
    },
    /// Ehrhart polynomial in the polytope's lattice.
    Ehrhart {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        polytope: PolytopeArg,
        /// Also list lattice point counts of the dilates 0..=k.
        #[arg(long)]
        max_dilate: Option<i64>,
    },
    /// Canonical triangulation by the non-interfering complex.
    Triangulate {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = TriPolytope::Tchain)]
        polytope: TriPolytope,
        #[arg(long, conflicts_with = "list")]
        count: bool,
        #[arg(long)]
        list: bool,
    },
    /// Apply a transfer map to a point given as a JSON list of rationals.
    Transfer {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        map: Map,
        /// JSON list of rationals (integers, "p/q" or [p, q]), or `random`
        /// for a seeded random point of the map's domain.
        #[arg(long)]
        point: String,
    },
    /// Quadratic Groebner basis of a toric ideal.
    Groebner {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = IdealArg::Tord)]
        ideal: IdealArg,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        list: bool,
    },
    /// Anti-blocking calculus on polytope files or `cp:<generator>` (the
    /// chain polytope of the generator's plus order).
    Antiblock {
        #[arg(value_enum)]
        op: AbOp,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: Option<String>,
        /// Dilates `a,b` for `count`.
        #[arg(long, default_value = "1,1")]
        dilates: String,
    },
    /// The named example registry, or one example as a double poset file.
    Examples {
        #[arg(long)]
        name: Option<String>,
    },
    /// Compare face numbers of double order and double chain polytopes on
    /// families of examples. Exploratory: nothing here is a proof.
    ConjectureScan {
        /// Largest family parameter.
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Compare facet counts only.
        #[arg(long)]
        facets_only: bool,
    },
}

/// A command result in all three formats.
struct Report {
    table: String,
    csv: String,
    json: Value,
}

impl Report {
    fn render(&self, f: Format) -> String {
        let mut s = match f {
            Format::Table => self.table.clone(),
            Format::Csv => self.csv.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("json"),
        };
        if !s.ends_with('\n') {
            s.push('\n');
        }
        s
    }

    fn line(s: String, json: Value) -> Report {
        Report { table: s.clone(), csv: s, json }
    }
}

fn csv_q(x: &Q) -> String {
    format!("\"[{},{}]\"", x.numer(), x.denom())
}

fn csv_row(v: &[Q]) -> String {
    v.iter().map(csv_q).collect::<Vec<_>>().join(",")
}

fn table_row(v: &[Q]) -> String {
    v.iter().map(fmt_q).collect::<Vec<_>>().join(" ")
}

fn json_vec(v: &[Q]) -> Value {
    Value::Array(v.iter().map(q_json).collect())
}

#[derive(Deserialize)]
struct PosetFile {
    elements: Vec<String>,
    #[serde(default)]
    plus: Vec<(String, String)>,
    minus: Option<Vec<(String, String)>>,
}

/// Parses a double poset file; a missing `minus` means the induced double
/// poset.
pub fn parse_double_poset(text: &str) -> Result<DoublePoset> {
    let f: PosetFile = serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("poset file: {e}")))?;
    let plus = Poset::build(&f.elements, &f.plus)?;
    match f.minus {
        None => Ok(DoublePoset::induced(plus)),
        Some(m) => DoublePoset::new(plus, Poset::build(&f.elements, &m)?),
    }
}

/// Serializes a double poset by its cover relations; the minus order is
/// omitted for induced double posets.
pub fn double_poset_json(dp: &DoublePoset) -> Value {
    let labels = dp.labels();
    let covers = |p: &Poset| -> Value { p.covers().iter().map(|&(a, b)| json!([labels[a], labels[b]])).collect() };
    let mut v = json!({ "elements": labels, "plus": covers(dp.plus()) });
    if !dp.is_induced() {
        v["minus"] = covers(dp.minus());
    }
    v
}

fn load(input: &Input) -> Result<DoublePoset> {
    match (&input.gen, &input.file) {
        (Some(g), None) => generators::from_spec(g),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
            parse_double_poset(&text)
        }
        _ => Err(Error::InvalidInput("give exactly one of --gen and --file".into())),
    }
}

/// Fills in a missing facet description by double description.
fn complete(p: QPolytope) -> Result<QPolytope> {
    p.ensure_inequalities()
}

fn build(name: &str, dp: &DoublePoset) -> Result<LabeledPolytope> {
    let mut lp = constructors::build(name, dp)?;
    if lp.poly.inequalities.is_none() {
        lp.poly = complete(lp.poly)?;
        lp.facet_tags = vec![constructors::FacetTag::Computed; lp.poly.inequalities()?.len()];
    }
    Ok(lp)
}

fn parse_q(v: &Value) -> Result<Q> {
    let bad = || Error::InvalidInput(format!("not a rational: {v}"));
    match v {
        Value::Number(n) => n.as_i64().map(|x| Q::from_integer(x.into())).ok_or_else(bad),
        Value::String(s) => match s.split_once('/') {
            Some((a, b)) => {
                let (a, b): (i64, i64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
                if b == 0 {
                    return Err(bad());
                }
                Ok(Q::new(a.into(), b.into()))
            }
            None => Ok(Q::from_integer(s.trim().parse::<i64>().map_err(|_| bad())?.into())),
        },
        Value::Array(pair) if pair.len() == 2 => {
            let (a, b) = (pair[0].as_i64().ok_or_else(bad)?, pair[1].as_i64().ok_or_else(bad)?);
            if b == 0 {
                return Err(bad());
            }
            Ok(Q::new(a.into(), b.into()))
        }
        _ => Err(bad()),
    }
}

fn parse_point(v: &Value) -> Result<Vec<Q>> {
    match v {
        Value::Array(xs) => xs.iter().map(parse_q).collect(),
        _ => Err(Error::InvalidInput(format!("not a list of rationals: {v}"))),
    }
}

fn load_antiblocking(spec: &str) -> Result<AntiBlockingPolytope> {
    if let Some(g) = spec.strip_prefix("cp:") {
        let dp = generators::from_spec(g)?;
        return AntiBlockingPolytope::from_polytope(&chain_polytope(dp.plus())?.poly);
    }
    let text = std::fs::read_to_string(spec).map_err(|e| Error::InvalidInput(format!("{spec}: {e}")))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("{spec}: {e}")))?;
    let points = |key: &str| -> Result<Option<Vec<Vec<Q>>>> {
        match v.get(key) {
            Some(Value::Array(rows)) => Ok(Some(rows.iter().map(parse_point).collect::<Result<_>>()?)),
            Some(_) => Err(Error::InvalidInput(format!("{spec}: '{key}' must be a list of points"))),
            None => Ok(None),
        }
    };
    if let Some(g) = points("generators")?.or(points("vertices")?) {
        return AntiBlockingPolytope::from_vrep(&g);
    }
    if let Some(n) = points("normals")? {
        let d = n.first().map(|r| r.len()).ok_or_else(|| Error::InvalidInput(format!("{spec}: no normals")))?;
        return AntiBlockingPolytope::from_normals(d, &n);
    }
    Err(Error::InvalidInput(format!("{spec}: expected 'generators', 'vertices' or 'normals'")))
}

/// A random point of the domain of `map`: the order polytope for `phi`,
/// the chain polytope for its inverse, and the differences of chain or
/// order polytope points for `psi` and its inverse.
fn random_point(dp: &DoublePoset, map: Map, rng: &mut ChaCha8Rng) -> Vec<Q> {
    let diff = |a: Vec<Q>, b: Vec<Q>| a.iter().zip(&b).map(|(x, y)| x - y).collect();
    match map {
        Map::Phi => transfer::random_order_point(dp.plus(), rng),
        Map::PhiInv => transfer::random_chain_point(dp.plus(), rng),
        Map::Psi => {
            let a = transfer::random_chain_point(dp.plus(), rng);
            diff(a, transfer::random_chain_point(dp.minus(), rng))
        }
        Map::PsiInv => {
            let a = transfer::random_order_point(dp.plus(), rng);
            diff(a, transfer::random_order_point(dp.minus(), rng))
        }
    }
}

fn points_report(title: &str, pts: &[Vec<Q>], tags: Option<Vec<String>>) -> Report {
    let mut table = format!("{title}: {}\n", pts.len());
    let mut csv = String::new();
    for (i, p) in pts.iter().enumerate() {
        match &tags {
            Some(t) => writeln!(table, "{}  # {}", table_row(p), t[i]).unwrap(),
            None => writeln!(table, "{}", table_row(p)).unwrap(),
        }
        writeln!(csv, "{}", csv_row(p)).unwrap();
    }
    let json = Value::Array(pts.iter().map(|p| json_vec(p)).collect());
    Report { table, csv, json }
}

fn polytope_summary(p: &QPolytope) -> Result<Value> {
    Ok(json!({
        "vertices": p.vertices()?.iter().map(|v| json_vec(v)).collect::<Vec<_>>(),
        "inequalities": p.inequalities()?.iter().map(|h| json!({"normal": json_vec(&h.normal), "rhs": q_json(&h.rhs)})).collect::<Vec<_>>(),
    }))
}

fn facets_report(p: &QPolytope, tags: Option<Vec<String>>) -> Result<Report> {
    let mut table = format!("facets: {}\n", p.inequalities()?.len());
    let mut csv = String::new();
    let mut js = Vec::new();
    for (i, h) in p.inequalities()?.iter().enumerate() {
        let row = format!("{} <= {}", table_row(&h.normal), fmt_q(&h.rhs));
        match &tags {
            Some(t) => writeln!(table, "{row}  # {}", t[i]).unwrap(),
            None => writeln!(table, "{row}").unwrap(),
        }
        writeln!(csv, "{},{}", csv_row(&h.normal), csv_q(&h.rhs)).unwrap();
        js.push(json!({"normal": json_vec(&h.normal), "rhs": q_json(&h.rhs)}));
    }
    Ok(Report { table, csv, json: Value::Array(js) })
}

fn ints_report(v: &[usize]) -> Report {
    let s = v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    Report::line(s, json!(v))
}

fn bool_report(b: bool, extra: Option<String>, extra_json: Value) -> Report {
    let mut s = b.to_string();
    if let Some(e) = &extra {
        s.push('\n');
        s.push_str(e);
    }
    Report { table: s.clone(), csv: s, json: json!({"result": b, "witness": extra_json}) }
}

fn euclidean_volume(p: &QPolytope, nvol: &Q) -> Q {
    let d = p.ambient_dim;
    let fact: Q = (1..=d as i64).fold(Q::one(), |a, k| a * Q::from_integer(k.into()));
    let det = linalg::det(&p.lattice.basis);
    let det = if det < Q::zero() { -det } else { det };
    nvol * det / fact
}

fn run_command(cli: &Cli) -> Result<Report> {
    let budget = cli.budget.unwrap_or(lattice::DEFAULT_POINT_BUDGET);
    match &cli.command {
        Command::Check { input, property, polytope } => {
            let dp = load(input)?;
            match property {
                Property::Compatible => match dp.compatibility() {
                    Compatibility::Compatible(order) => {
                        let ext: Vec<&str> = order.iter().map(|&i| dp.labels()[i].as_str()).collect();
                        Ok(bool_report(true, Some(format!("common linear extension: {}", ext.join(" < "))), json!(ext)))
                    }
                    Compatibility::Cycle(c) => {
                        let mut s = String::new();
                        for (i, (a, sign)) in c.iter().enumerate() {
                            if i > 0 {
                                s.push(' ');
                            }
                            write!(s, "{} <{}", dp.labels()[*a], sign.symbol()).unwrap();
                        }
                        write!(s, " {}", dp.labels()[c[0].0]).unwrap();
                        let w: Vec<Value> = c.iter().map(|(a, sign)| json!([dp.labels()[*a], sign.symbol().to_string()])).collect();
                        Ok(bool_report(false, Some(format!("alternating cycle: {s}")), Value::Array(w)))
                    }
                },
                Property::TwoLevel => {
                    let lp = build(&polytope.polytope, &dp)?;
                    Ok(bool_report(lp.poly.is_2level()?, None, Value::Null))
                }
                Property::Reflexive => {
                    let lp = build(&polytope.polytope, &dp)?;
                    Ok(bool_report(lp.poly.is_reflexive()?, None, Value::Null))
                }
                Property::Perfect => {
                    let g = dp.plus().comparability_graph();
                    let hole = g.find_odd_hole();
                    let perfect = g.is_perfect()?;
                    let w = hole.map(|h| h.iter().map(|&i| g.labels()[i].clone()).collect::<Vec<_>>());
                    let text = w.as_ref().map(|h| format!("odd hole or antihole: {}", h.join(" ")));
                    Ok(bool_report(perfect, text, json!(w)))
                }
            }
        }
        Command::Vertices { input, polytope } => {
            let dp = load(input)?;
            let lp = build(&polytope.polytope, &dp)?;
            let tags = lp.vertex_tags.iter().map(|t| t.describe(dp.labels())).collect();
            Ok(points_report("vertices", lp.poly.vertices()?, Some(tags)))
        }
        Command::Facets { input, polytope } => {
            let dp = load(input)?;
            let lp = build(&polytope.polytope, &dp)?;
            let tags = lp.facet_tags.iter().map(|t| t.describe(dp.labels())).collect();
            facets_report(&lp.poly, Some(tags))
        }
        Command::Fvector { input, polytope } => {
            let dp = load(input)?;
            let lp = build(&polytope.polytope, &dp)?;
            Ok(ints_report(&lp.poly.face_lattice()?.f_vector()))
        }
        Command::Volume { input, polytope, normalized } => {
            let dp = load(input)?;
            let lp = build(&polytope.polytope, &dp)?;
            let nvol = triangulation::pulling_volume(&lp.poly)?;
            let v = if *normalized { nvol } else { euclidean_volume(&lp.poly, &nvol) };
            Ok(Report { table: fmt_q(&v), csv: csv_q(&v), json: q_json(&v) })
        }
        Command::Ehrhart { input, polytope, max_dilate } => {
            let dp = load(input)?;
            let lp = build(&polytope.polytope, &dp)?;
            let e = lattice::ehrhart_with_budget(&lp.poly, budget)?;
            let mut table = format!("{e}\n");
            let mut csv = format!("{}\n", csv_row(e.coeffs()));
            let mut counts = Vec::new();
            if let Some(k) = max_dilate {
                for j in 0..=*k {
                    let c = if j == 0 { 1 } else { lattice::count_points(&lp.poly, j, false, budget)? };
                    writeln!(table, "{j}: {c}").unwrap();
                    writeln!(csv, "{j},{c}").unwrap();
                    counts.push(c);
                }
            }
            Ok(Report { table, csv, json: json!({"coefficients": json_vec(e.coeffs()), "counts": counts}) })
        }
        Command::Triangulate { input, polytope, count, list } => {
            let dp = load(input)?;
            let which = match polytope {
                TriPolytope::Tord => Which::TOrd,
                TriPolytope::Tchain => Which::TChain,
            };
            let t = transfer::triangulate(&dp, which)?;
            if *count || !*list {
                let n = t.cells.len();
                return Ok(Report::line(n.to_string(), json!(n)));
            }
            let labels = dp.labels();
            let mut table = String::new();
            let mut csv = String::new();
            let mut js = Vec::new();
            for c in &t.cells {
                let names: Vec<String> = c.iter().map(|&i| t.polytope.vertex_tags[i].describe(labels)).collect();
                writeln!(table, "{}", names.join(" | ")).unwrap();
                writeln!(csv, "{}", c.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")).unwrap();
                js.push(json!(names));
            }
            Ok(Report { table, csv, json: Value::Array(js) })
        }
        Command::Transfer { input, map, point } => {
            let dp = load(input)?;
            let random = point.trim() == "random";
            let x = if random {
                random_point(&dp, *map, &mut ChaCha8Rng::seed_from_u64(cli.seed))
            } else {
                let v: Value = serde_json::from_str(point).map_err(|e| Error::InvalidInput(format!("--point: {e}")))?;
                parse_point(&v)?
            };
            let y = match map {
                Map::Phi => transfer::transfer(dp.plus(), &x)?,
                Map::PhiInv => transfer::inverse_transfer(dp.plus(), &x)?,
                Map::Psi => transfer::psi(&dp, &x)?,
                Map::PsiInv => transfer::psi_inverse(&dp, &x)?,
            };
            if random {
                return Ok(Report {
                    table: format!("input: {}\noutput: {}", table_row(&x), table_row(&y)),
                    csv: format!("{}\n{}", csv_row(&x), csv_row(&y)),
                    json: json!({"input": json_vec(&x), "output": json_vec(&y)}),
                });
            }
            Ok(Report { table: table_row(&y), csv: csv_row(&y), json: json_vec(&y) })
        }
        Command::Groebner { input, ideal, verify, list } => {
            let dp = load(input)?;
            let which = match ideal {
                IdealArg::Tord => Ideal::TOrd,
                IdealArg::Tchain => Ideal::TChain,
                IdealArg::Hibi => Ideal::Hibi,
            };
            let basis = hibi::basis_for(which, &dp)?;
            let labels = dp.labels();
            let mut table = format!("binomials: {}\n", basis.len());
            let mut csv = String::new();
            let mut js = json!({"size": basis.len()});
            if *list {
                let set_names = |m: &hibi::Monomial| -> Value {
                    m.iter()
                        .map(|&i| {
                            let v = basis.ring.vars[i];
                            let names: Vec<&str> = crate::poset::bits(v.set).map(|a| labels[a].as_str()).collect();
                            json!({"sign": v.sign.symbol().to_string(), "set": names})
                        })
                        .collect()
                };
                let mut arr = Vec::new();
                for b in &basis.binomials {
                    let (l, t) = (basis.ring.describe_monomial(&b.lead, labels), basis.ring.describe_monomial(&b.trail, labels));
                    writeln!(table, "{l} - {t}").unwrap();
                    writeln!(csv, "\"{l}\",\"{t}\"").unwrap();
                    arr.push(json!({"lead": set_names(&b.lead), "trail": set_names(&b.trail)}));
                }
                js["binomials"] = Value::Array(arr);
            }
            if *verify {
                let c = hibi::certify(&basis, &dp, which, hibi::DEFAULT_REDUCTION_CAP)?;
                writeln!(table, "toric members: {}", c.members).unwrap();
                writeln!(table, "stated leading terms: {}", c.leads_as_stated).unwrap();
                writeln!(table, "groebner (S-pairs reduce to zero): {}", c.groebner).unwrap();
                writeln!(table, "initial complex is the canonical triangulation: {}", c.initial_complex).unwrap();
                writeln!(table, "reduced (observation): {}", c.reduced).unwrap();
                writeln!(csv, "verified,{}", c.ok()).unwrap();
                js["verified"] = json!(c.ok());
                js["reduced"] = json!(c.reduced);
            }
            if csv.is_empty() {
                csv = format!("{}\n", basis.len());
            }
            Ok(Report { table, csv, json: js })
        }
        Command::Antiblock { op, a, b, dilates } => {
            let p1 = load_antiblocking(a)?;
            let second = || -> Result<AntiBlockingPolytope> {
                match b {
                    Some(b) => load_antiblocking(b),
                    None => Err(Error::InvalidInput(format!("{op:?} needs --b").to_lowercase())),
                }
            };
            let ab_json = |p: &AntiBlockingPolytope| {
                json!({
                    "generators": p.generators.iter().map(|g| json_vec(g)).collect::<Vec<_>>(),
                    "normals": p.normals.iter().map(|g| json_vec(g)).collect::<Vec<_>>(),
                })
            };
            match op {
                AbOp::Assoc => {
                    let d = p1.associated();
                    let mut r = points_report("generators", &d.generators, None);
                    r.table.push_str(&points_report("normals", &d.normals, None).table);
                    r.json = ab_json(&d);
                    Ok(r)
                }
                AbOp::Diff | AbOp::Cayley => {
                    let p2 = second()?;
                    let p = if *op == AbOp::Diff { ab::minkowski_difference(&p1, &p2)? } else { ab::cayley(&p1, &p2, 1)? };
                    let mut r = points_report("vertices", &p.sorted_vertices()?, None);
                    r.table.push_str(&facets_report(&p, None)?.table);
                    r.json = polytope_summary(&p)?;
                    Ok(r)
                }
                AbOp::Subdivide => {
                    let p2 = second()?;
                    let cells = ab::canonical_subdivision(&p1, &p2)?;
                    let mut table = format!("cells: {}\n", cells.len());
                    let mut csv = String::new();
                    let mut js = Vec::new();
                    for c in &cells {
                        let j: Vec<usize> = crate::poset::bits(c.j).collect();
                        let vs = c.poly.sorted_vertices()?;
                        writeln!(table, "J = {j:?}: {} vertices", vs.len()).unwrap();
                        for v in &vs {
                            writeln!(table, "  {}", table_row(v)).unwrap();
                            writeln!(csv, "{},{}", c.j, csv_row(v)).unwrap();
                        }
                        js.push(json!({"J": j, "vertices": vs.iter().map(|v| json_vec(v)).collect::<Vec<_>>()}));
                    }
                    Ok(Report { table, csv, json: Value::Array(js) })
                }
                AbOp::Count => {
                    let p2 = second()?;
                    let (x, y) = dilates
                        .split_once(',')
                        .and_then(|(x, y)| Some((x.trim().parse::<i64>().ok()?, y.trim().parse::<i64>().ok()?)))
                        .ok_or_else(|| Error::InvalidInput(format!("--dilates expects a,b, got '{dilates}'")))?;
                    let by_formula = ab::lattice_count_diff(&p1, &p2, x, y)?;
                    let direct = ab::lattice_count_diff_direct(&p1, &p2, x, y)?;
                    let table = format!("formula: {by_formula}\ndirect: {direct}");
                    Ok(Report { table, csv: format!("{by_formula},{direct}"), json: json!({"formula": by_formula, "direct": direct}) })
                }
            }
        }
        Command::Examples { name } => match name {
            None => {
                let table = generators::REGISTRY.join("\n");
                Ok(Report { table: table.clone(), csv: table, json: json!(generators::REGISTRY) })
            }
            Some(n) => {
                let dp = generators::from_spec(n)?;
                let v = double_poset_json(&dp);
                let s = serde_json::to_string_pretty(&v).expect("json");
                Ok(Report { table: s.clone(), csv: s, json: v })
            }
        },
        Command::ConjectureScan { max_n, facets_only } => conjecture_scan(*max_n, *facets_only),
    }
}

/// Families scanned: alternating chains (not induced, where domination is
/// known to fail) and induced double posets of chains, antichains, combs and
/// the X and W posets.
fn scan_family(max_n: usize) -> Vec<(String, DoublePoset)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push((format!("altchain:{n}"), generators::alternating_chain_poset(n)));
    }
    for n in 1..=max_n {
        for g in ["chain", "antichain"] {
            let spec = format!("{g}:{n}");
            out.push((spec.clone(), generators::from_spec(&spec).expect("registry")));
        }
    }
    for n in 1..=(max_n / 2).max(1) {
        let spec = format!("comb:{n}");
        out.push((spec.clone(), generators::from_spec(&spec).expect("registry")));
    }
    for spec in ["x", "w"] {
        out.push((spec.to_string(), generators::from_spec(spec).expect("registry")));
    }
    out
}

/// Rows of the scan: name, induced, face numbers of both polytopes and
/// whether the double chain polytope dominates.
pub struct ScanRow {
    pub name: String,
    pub induced: bool,
    pub tord: Vec<usize>,
    pub tchain: Vec<usize>,
}

impl ScanRow {
    pub fn dominated(&self) -> bool {
        self.tord.iter().zip(&self.tchain).all(|(a, b)| a <= b)
    }
}

pub fn scan(max_n: usize, facets_only: bool) -> Result<Vec<ScanRow>> {
    let mut rows = Vec::new();
    for (name, dp) in scan_family(max_n) {
        let to = double_order_polytope(&dp)?.poly;
        let to = complete(to)?.irredundant()?;
        let tc = double_chain_polytope(&dp)?.poly;
        let (tord, tchain) = if facets_only {
            (vec![to.inequalities()?.len()], vec![tc.inequalities()?.len()])
        } else {
            (to.face_lattice()?.f_vector(), tc.face_lattice()?.f_vector())
        };
        rows.push(ScanRow { name, induced: dp.is_induced(), tord, tchain });
    }
    Ok(rows)
}

fn conjecture_scan(max_n: usize, facets_only: bool) -> Result<Report> {
    let rows = scan(max_n, facets_only)?;
    let what = if facets_only { "facet counts" } else { "f-vectors" };
    let mut table = format!("exploratory scan of {what}, TOrd vs TChain (non-certifying)\n");
    let mut csv = String::from("name,induced,tord,tchain,dominated\n");
    let mut js = Vec::new();
    for r in &rows {
        let j = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let flag = match (r.dominated(), r.induced) {
            (true, _) => "",
            (false, true) => "  COUNTEREXAMPLE (induced)",
            (false, false) => "  COUNTEREXAMPLE (compatible, not induced)",
        };
        writeln!(table, "{:<14} tord ({}) tchain ({}){flag}", r.name, j(&r.tord), j(&r.tchain)).unwrap();
        writeln!(csv, "{},{},\"{}\",\"{}\",{}", r.name, r.induced, j(&r.tord), j(&r.tchain), r.dominated()).unwrap();
        js.push(json!({"name": r.name, "induced": r.induced, "tord": r.tord, "tchain": r.tchain, "dominated": r.dominated()}));
    }
    Ok(Report { table, csv, json: json!({"certifying": false, "rows": js}) })
}

/// Runs the command line, writing to stdout/stderr, and returns the exit
/// code: 0 on success, 1 on usage errors, 2 on domain errors.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run_command(&cli) {
        Ok(r) => {
            print!("{}", r.render(cli.format));
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidInput(_) | Error::UnknownGenerator(_) => 1,
                _ => 2,
            }
        }
    }
}
