//! End-to-end acceptance checks. Prints one PASS or FAIL line per criterion
//! and exits nonzero when any criterion fails.

use nccr::fixtures;
use nccr::graph::DualGraph;
use nccr::io::MfFile;
use nccr::mckay::*;
use nccr::mf::MatrixFactorization;
use nccr::moduli::{commutativize, enumerate_charts_theta, pull_back, transition};
use nccr::quiver::{AlgebraElement, BoundQuiver, Path as QPath};
use nccr::rep::{Entry, Representation};
use nccr::scalars::{rat, ratio, Matrix, Monomial, Polynomial, Rational, Ring};
use nccr::skew::SkewContext;
use nccr::stability::{chambers, classify, star_criterion, Stability, Theta};
use nccr::toricend::{endo_quiver, matches_mckay, AbelianAction};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use serde_json::Value;
use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

const TIME_LIMIT: Duration = Duration::from_secs(60);
const PROPERTY_CASES: u32 = 256;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn fixture_arg(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

fn nccr(args: &[&str]) -> Result<Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_nccr"))
        .args(args)
        .env_remove(nccr_cli::DEGREE_BOUND_ENV)
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(
        out.status.success(),
        "{args:?} exited with {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr).trim()
    );
    let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| format!("{args:?}: {e}"))?;
    ensure!(v["version"] == 1, "{args:?}: missing schema version");
    Ok(v)
}

fn array<'a>(v: &'a Value, key: &str) -> Result<&'a Vec<Value>, String> {
    v[key]
        .as_array()
        .ok_or_else(|| format!("`{key}` is not an array"))
}

fn strs(v: &Value) -> Vec<String> {
    match v {
        Value::Array(xs) => xs
            .iter()
            .filter_map(|x| x.as_str().map(str::to_string))
            .collect(),
        Value::Object(m) => m
            .values()
            .filter_map(|x| x.as_str().map(str::to_string))
            .collect(),
        _ => Vec::new(),
    }
}

fn monomial(s: &str) -> Result<Monomial, String> {
    Polynomial::parse(s)
        .ok()
        .and_then(|p| p.as_monomial().cloned())
        .ok_or_else(|| format!("`{s}` is not a monomial"))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Whether renaming `vars` to `letters` in some order turns `exprs` into
/// `expected`, compared in order when `ordered` and as multisets otherwise.
fn matches_renamed(
    exprs: &[String],
    vars: &[String],
    letters: &[&str],
    expected: &[&str],
    ordered: bool,
) -> Result<bool, String> {
    let ms = exprs
        .iter()
        .map(|s| monomial(s))
        .collect::<Result<Vec<_>, _>>()?;
    let mut want = expected
        .iter()
        .map(|s| monomial(s).map(|m| m.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    if !ordered {
        want.sort();
    }
    for perm in permutations(letters.len()) {
        let subst: BTreeMap<String, Monomial> = vars
            .iter()
            .zip(&perm)
            .map(|(v, &i)| (v.clone(), Monomial::var(letters[i])))
            .collect();
        let mut got: Vec<String> = ms
            .iter()
            .map(|m| m.substitute(&subst).to_string())
            .collect();
        if !ordered {
            got.sort();
        }
        if got == want {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Free coordinates of each chart in a charts or transitions report.
fn chart_frees(report: &Value) -> Result<Vec<Vec<String>>, String> {
    Ok(array(report, "charts")?
        .iter()
        .map(|c| strs(&c["free"]))
        .collect())
}

/// Transitions `(from, to)` whose map matches `expected` after renaming the
/// source coordinates.
fn matching_transitions(
    report: &Value,
    letters: &[&str],
    expected: &[&str],
) -> Result<Vec<(u64, u64)>, String> {
    let frees = chart_frees(report)?;
    let mut out = Vec::new();
    for t in array(report, "transitions")? {
        let (Some(from), Some(to)) = (t["from"].as_u64(), t["to"].as_u64()) else {
            continue;
        };
        if t["map"].is_null() {
            continue;
        }
        if matches_renamed(
            &strs(&t["map"]),
            &frees[from as usize],
            letters,
            expected,
            false,
        )? {
            out.push((from, to));
        }
    }
    Ok(out)
}

fn z3_end_to_end() -> Check {
    let inv = nccr(&["invariants", "--group", "1/3(1,2)"])?;
    let mons: BTreeSet<String> = array(&inv, "generators")?
        .iter()
        .filter_map(|g| g["monomial"].as_str().map(str::to_string))
        .collect();
    let want: BTreeSet<String> = ["x^3", "y^3", "x*y"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    ensure!(mons == want, "invariants {mons:?}");
    ensure!(
        strs(&inv["relations"]) == ["A*B = C^3"],
        "invariant relations {}",
        inv["relations"]
    );

    let endo = nccr(&["endo-quiver", "--group", "1/3(1,2)"])?;
    let arrows = array(&endo, "arrows")?;
    ensure!(arrows.len() == 6, "endo quiver has {} arrows", arrows.len());
    for a in arrows {
        let tail: u32 = a["tail"]
            .as_str()
            .and_then(|s| s.parse().ok())
            .ok_or("bad tail")?;
        let head: u32 = a["head"]
            .as_str()
            .and_then(|s| s.parse().ok())
            .ok_or("bad head")?;
        let step = match a["label"].as_str() {
            Some("x") => 1,
            Some("y") => 2,
            other => return Err(format!("unexpected label {other:?}")),
        };
        ensure!(
            head == (tail + step) % 3,
            "arrow {a} is not a doubled triangle edge"
        );
    }

    // the emitted quiver feeds the moduli commands directly
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let endo_path = dir.path().join("endo.json");
    std::fs::write(&endo_path, endo.to_string()).map_err(|e| e.to_string())?;
    let endo_arg = endo_path.to_string_lossy().into_owned();
    let moduli = nccr(&["moduli", "invariants", "--quiver", &endo_arg])?;
    ensure!(
        array(&moduli, "generators")?.len() == 3,
        "moduli generators {}",
        moduli["generators"]
    );
    ensure!(
        strs(&moduli["relations"]) == ["A*B = C^3"],
        "moduli relations {}",
        moduli["relations"]
    );
    let charts = nccr(&["moduli", "charts", "--quiver", &endo_arg])?;
    ensure!(
        array(&charts, "charts")?.len() == 3,
        "endo quiver gives {} charts",
        charts["charts"]
    );
    let dual = nccr(&["moduli", "dual-graph", "--quiver", &endo_arg])?;
    ensure!(
        dual["ade"] == "A2",
        "endo quiver dual graph {}",
        dual["ade"]
    );

    // the same surface with arrows named c1, c2, c3 and a1, a2, a3
    let z3 = fixture_arg("z3.json");
    let charts = nccr(&["moduli", "charts", "--quiver", &z3])?;
    ensure!(
        charts["theta"] == serde_json::json!([-2, 1, 1]),
        "theta {}",
        charts["theta"]
    );
    ensure!(
        array(&charts, "unresolved")?.is_empty(),
        "unresolved charts"
    );
    let list = array(&charts, "charts")?;
    ensure!(list.len() == 3, "{} charts", list.len());
    for c in list {
        let free = strs(&c["free"]);
        ensure!(free.len() == 2, "chart {} is not a plane", c["index"]);
        let triangle = ["1", "1", "a", "b", "a*b", "a*b"];
        ensure!(
            matches_renamed(
                &strs(&c["expressions"]),
                &free,
                &["a", "b"],
                &triangle,
                false
            )?,
            "chart {} does not match a labelled triangle: {}",
            c["index"],
            c["expressions"]
        );
    }

    let report = nccr(&["moduli", "transitions", "--quiver", &z3])?;
    let first = matching_transitions(&report, &["a", "b"], &["b^-1", "a*b^2"])?;
    let second = matching_transitions(&report, &["c", "d"], &["d^-1", "c*d^2"])?;
    let chained = first
        .iter()
        .any(|&(i, j)| second.iter().any(|&(j2, k)| j2 == j && k != i));
    ensure!(
        chained,
        "no chained transitions (b^-1, ab^2) then (d^-1, cd^2)"
    );

    let frees = chart_frees(&report)?;
    let expected: [(&[&str], [&str; 3]); 3] = [
        (&["a", "b"], ["a", "a^2*b^3", "a*b"]),
        (&["c", "d"], ["c^2*d", "c*d^2", "c*d"]),
        (&["e", "f"], ["e^3*f^2", "f", "e*f"]),
    ];
    let mut used = BTreeSet::new();
    for (letters, triple) in expected {
        let mut hit = None;
        for b in array(&report, "base_maps")? {
            let chart = b["chart"].as_u64().ok_or("bad chart index")? as usize;
            let values: Vec<String> = ["A", "B", "C"]
                .iter()
                .map(|g| b["values"][g].as_str().unwrap_or("").to_string())
                .collect();
            if matches_renamed(&values, &frees[chart], letters, &triple, true)? {
                hit = Some(chart);
            }
        }
        let chart = hit.ok_or_else(|| format!("no chart has base map {triple:?}"))?;
        used.insert(chart);
    }
    ensure!(
        used.len() == 3,
        "base maps do not come from distinct charts"
    );

    let dual = nccr(&["moduli", "dual-graph", "--quiver", &z3])?;
    ensure!(dual["ade"] == "A2", "dual graph {}", dual["ade"]);
    ensure!(
        array(&dual, "nodes")?.len() == 2 && array(&dual, "edges")?.len() == 1,
        "dual graph shape"
    );
    Ok(())
}

fn kronecker_and_blowup() -> Check {
    let k = nccr(&[
        "moduli",
        "transitions",
        "--quiver",
        &fixture_arg("kronecker.json"),
    ])?;
    ensure!(
        chart_frees(&k)?.len() == 2,
        "kronecker charts {}",
        k["charts"]
    );
    ensure!(
        !matching_transitions(&k, &["b"], &["b^-1"])?.is_empty(),
        "no transition b -> b^-1"
    );

    let b = nccr(&[
        "moduli",
        "transitions",
        "--quiver",
        &fixture_arg("blowup.json"),
    ])?;
    ensure!(chart_frees(&b)?.len() == 2, "blowup charts {}", b["charts"]);
    ensure!(
        !matching_transitions(&b, &["b", "t"], &["b^-1", "b*t"])?.is_empty(),
        "no transition (b, t) -> (b^-1, bt)"
    );
    let inv = nccr(&[
        "moduli",
        "invariants",
        "--quiver",
        &fixture_arg("blowup.json"),
    ])?;
    let cycles: BTreeSet<String> = array(&inv, "generators")?
        .iter()
        .filter_map(|g| g["cycle"].as_str().map(str::to_string))
        .collect();
    let want: BTreeSet<String> = ["a*t", "b*t"].iter().map(|s| s.to_string()).collect();
    ensure!(cycles == want, "blowup generators {cycles:?}");
    ensure!(
        array(&inv, "relations")?.is_empty(),
        "blowup relations {}",
        inv["relations"]
    );
    Ok(())
}

fn group(s: &str) -> Result<McKayQuiver, String> {
    let g = GroupKind::parse(s).map_err(|e| e.to_string())?;
    mckay_quiver(&character_table(&g)).map_err(|e| e.to_string())
}

fn shape(m: &McKayQuiver) -> (Vec<u32>, DualGraph) {
    let mut dims = m.dims.clone();
    dims.sort();
    let q = &m.quiver;
    let mut g = DualGraph::new(q.vertices().to_vec());
    for a in 0..q.num_arrows() {
        g.add_edge(q.tail(a), q.head(a));
    }
    (dims, g)
}

fn mckay() -> Check {
    for r in 2..=8usize {
        let m = group(&format!("1/{r}(1,{})", r - 1))?;
        ensure!(
            m.quiver.num_arrows() == 2 * r,
            "1/{r}: {} arrows",
            m.quiver.num_arrows()
        );
        for j in 0..r {
            let next = (j + 1) % r;
            let want = if r == 2 { 2 } else { 1 };
            ensure!(
                m.arrow_count(j, next) == want && m.arrow_count(next, j) == want,
                "1/{r}: vertices {j} and {next} are not doubly joined"
            );
        }
    }
    let bd8 = group("BD8")?;
    let (dims, _) = shape(&bd8);
    ensure!(dims == [1, 1, 1, 1, 2], "BD8 dimensions {dims:?}");
    let centre = bd8.dims.iter().position(|&d| d == 2).ok_or("no centre")?;
    for v in (0..5).filter(|&v| v != centre) {
        ensure!(
            bd8.arrow_count(v, centre) == 1 && bd8.arrow_count(centre, v) == 1,
            "BD8 is not a star"
        );
    }
    let d4 = AdeType {
        family: AdeFamily::D,
        rank: 4,
    };
    let dual = mckay_to_dual_graph(&bd8).map_err(|e| e.to_string())?;
    ensure!(
        classify_ade(&dual).map_err(|e| e.to_string())? == d4,
        "BD8 dual graph is not D4"
    );
    ensure!(
        nccr(&["mckay", "dual-graph", "--group", "BD8"])?["ade"] == "D4",
        "CLI BD8 dual graph"
    );

    let mut types: Vec<AdeType> = (1..=8)
        .map(|rank| AdeType {
            family: AdeFamily::A,
            rank,
        })
        .collect();
    types.extend((4..=8).map(|rank| AdeType {
        family: AdeFamily::D,
        rank,
    }));
    for t in types {
        let d = dynkin(t).map_err(|e| e.to_string())?;
        let m = dual_graph_to_mckay(&d).map_err(|e| e.to_string())?;
        let back = mckay_to_dual_graph(&m).map_err(|e| e.to_string())?;
        ensure!(back.is_isomorphic(&d), "{t}: round trip changes the graph");
        let from_group = match t.family {
            AdeFamily::A => group(&format!("1/{}(1,{})", t.rank + 1, t.rank))?,
            _ => group(&format!("BD{}", 4 * (t.rank - 2)))?,
        };
        let ((d1, g1), (d2, g2)) = (shape(&m), shape(&from_group));
        ensure!(
            d1 == d2 && g1.is_isomorphic(&g2),
            "{t}: dictionary differs from the group quiver"
        );
        ensure!(
            m.quiver.num_arrows() == from_group.quiver.num_arrows(),
            "{t}: arrow counts differ"
        );
    }
    Ok(())
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn endo_vs_mckay(r: u32, weights: Vec<u32>) -> Result<McKayQuiver, String> {
    let act = AbelianAction::Cyclic {
        r,
        weights: weights.clone(),
    };
    let endo = endo_quiver(&act, act.default_bound()).map_err(|e| e.to_string())?;
    let mckay = mckay_quiver(&character_table(
        &GroupKind::cyclic(r, weights.clone()).map_err(|e| e.to_string())?,
    ))
    .map_err(|e| e.to_string())?;
    ensure!(
        matches_mckay(&endo, &mckay),
        "1/{r}{weights:?}: endomorphism quiver differs"
    );
    Ok(endo)
}

fn endo_equals_mckay() -> Check {
    for r in 2..=12u32 {
        for a in (1..r).filter(|&a| gcd(a, r) == 1) {
            endo_vs_mckay(r, vec![1, a])?;
        }
    }
    let q = endo_vs_mckay(3, vec![1, 1])?;
    ensure!(q.quiver.num_arrows() == 6, "1/3(1,1) arrows");
    ensure!(
        (0..3).all(|i| q.arrow_count(i, (i + 1) % 3) == 2),
        "1/3(1,1) is not a doubled 3-cycle"
    );
    let q = endo_vs_mckay(5, vec![1, 2])?;
    ensure!(q.quiver.num_arrows() == 10, "1/5(1,2) arrows");
    ensure!(
        (0..5).all(|i| q.arrow_count(i, (i + 1) % 5) == 1 && q.arrow_count(i, (i + 2) % 5) == 1),
        "1/5(1,2) is not the pentagon with steps 1 and 2"
    );
    Ok(())
}

fn thin_values(bq: &BoundQuiver, values: &[(&str, i64)]) -> Result<Representation, String> {
    let vals: Vec<(&str, Entry)> = values
        .iter()
        .map(|&(n, v)| (n, Entry::constant(rat(v))))
        .collect();
    Representation::thin(bq.quiver.clone(), &vals).map_err(|e| e.to_string())
}

fn stability() -> Check {
    let k = fixtures::kronecker();
    let theta = Theta(vec![-1, 1]);
    ensure!(
        theta.value(&[1, 1]) == 0 && theta.value(&[1, 0]) == -1,
        "theta values"
    );
    for a in -2..=2 {
        for b in -2..=2 {
            let rep = thin_values(&k, &[("a", a), ("b", b)])?;
            let got = classify(&rep, &theta).map_err(|e| e.to_string())?;
            let want = if a != 0 || b != 0 {
                Stability::Stable
            } else {
                Stability::Unstable
            };
            ensure!(got == want, "kronecker a={a} b={b}: {got}");
        }
    }
    for bq in [fixtures::z3(), fixtures::spp()] {
        let q = &bq.quiver;
        let n = q.num_vertices();
        for star in 0..n {
            let theta = Theta::star(n, star);
            for support in 0..1u64 << q.num_arrows() {
                let rep =
                    Representation::thin_support(q.clone(), support).map_err(|e| e.to_string())?;
                let stable =
                    classify(&rep, &theta).map_err(|e| e.to_string())? == Stability::Stable;
                let reach = star_criterion(&rep, &q.vertices()[star]).map_err(|e| e.to_string())?;
                ensure!(
                    stable == reach,
                    "star {star}, support {support:b}: criterion {reach}, stable {stable}"
                );
            }
        }
    }
    ensure!(
        chambers(2).map_err(|e| e.to_string())?.len() == 2,
        "two-vertex chamber count"
    );
    ensure!(
        chambers(3).map_err(|e| e.to_string())?.len() == 6,
        "three-vertex chamber count"
    );
    ensure!(
        nccr(&["stability", "chambers", "--vertices", "3"])?["count"] == 6,
        "CLI chamber count"
    );
    Ok(())
}

fn spp() -> Check {
    let bq = fixtures::spp();
    ensure!(
        bq.relations.len() == 7,
        "spp has {} relations",
        bq.relations.len()
    );
    let rels = commutativize(&bq).map_err(|e| e.to_string())?;
    ensure!(rels.pairs.len() == 7, "{} binomials", rels.pairs.len());
    let cs = chambers(3).map_err(|e| e.to_string())?;
    ensure!(cs.len() == 6, "{} chambers", cs.len());
    for c in cs {
        let theta = Theta(c.representative.clone());
        let atlas = enumerate_charts_theta(&bq, &rels, &theta).map_err(|e| e.to_string())?;
        ensure!(!atlas.charts.is_empty(), "no charts at {:?}", theta.0);
        ensure!(
            atlas.unresolved.is_empty(),
            "unresolved charts at {:?}",
            theta.0
        );
        for chart in &atlas.charts {
            ensure!(
                chart.dimension() == 3,
                "chart of dimension {} at {:?}",
                chart.dimension(),
                theta.0
            );
            ensure!(
                chart.expressions.iter().all(Monomial::is_polynomial),
                "Laurent expression at {:?}",
                theta.0
            );
        }
    }
    Ok(())
}

fn relation_degrees(rel: &str) -> Result<(i64, i64), String> {
    let (l, r) = rel
        .split_once(" = ")
        .ok_or_else(|| format!("relation `{rel}`"))?;
    Ok((monomial(l)?.degree(), monomial(r)?.degree()))
}

fn torus() -> Check {
    let a = nccr(&["invariants", "--torus", "1,1,-1,-1"])?;
    ensure!(
        array(&a, "generators")?.len() == 4,
        "generators {}",
        a["generators"]
    );
    let rels = strs(&a["relations"]);
    ensure!(
        rels.len() == 1 && relation_degrees(&rels[0])? == (2, 2),
        "relations {rels:?}"
    );
    ensure!(
        a["gorenstein"] == true,
        "gorenstein flag {}",
        a["gorenstein"]
    );
    let b = nccr(&["invariants", "--torus", "2,1,-2,-1"])?;
    let certified = b["certified_degree"].as_u64().ok_or("no certificate")?;
    ensure!(
        certified <= nccr::moduli::DEFAULT_DEGREE_BOUND as u64,
        "certificate {certified} beyond the default bound"
    );
    ensure!(
        array(&b, "generators")?.len() == 4,
        "generators {}",
        b["generators"]
    );
    ensure!(
        b["gorenstein"] == true,
        "gorenstein flag {}",
        b["gorenstein"]
    );
    ensure!(
        nccr(&["invariants", "--torus", "1,1,-1"])?["gorenstein"] == false,
        "non-Gorenstein flag"
    );
    Ok(())
}

fn mf_check(name: &str, mf: &MatrixFactorization) -> Check {
    let v = mf.validate();
    ensure!(v.valid, "{name} does not validate: {:?}", v.witness);
    let s = mf.syzygy().map_err(|e| e.to_string())?;
    ensure!(s.validate().valid, "{name}: syzygy invalid");
    ensure!(
        s.syzygy().map_err(|e| e.to_string())? == *mf,
        "{name}: syzygy is not an involution"
    );
    let k = mf.knorrer("u", "v").map_err(|e| e.to_string())?;
    ensure!(k.validate().valid, "{name}: knorrer output invalid");
    ensure!(k.sign == -mf.sign, "{name}: knorrer keeps the sign");
    Ok(())
}

fn matrix_factorizations() -> Check {
    let mut all = Vec::new();
    for name in [
        "mf_cusp.json",
        "mf_e7.json",
        "mf_x_squared.json",
        "mf_split.json",
    ] {
        let text = std::fs::read_to_string(fixture(name)).map_err(|e| e.to_string())?;
        let file = MfFile::parse(&text).map_err(|e| e.to_string())?;
        all.push((
            name.to_string(),
            MatrixFactorization::from_file(&file).map_err(|e| e.to_string())?,
        ));
    }
    ensure!(
        all[0].1.validate().sign == -1,
        "cusp sign {}",
        all[0].1.validate().sign
    );
    // f = x(x² + y⁷) split into its irreducible factors, both ways round
    let p = |s: &str| Polynomial::parse(s).map_err(|e| e.to_string());
    let (f1, f2) = (p("x")?, p("x^2 + y^7")?);
    for (a, b) in [(&f1, &f2), (&f2, &f1)] {
        let one = |q: &Polynomial| Matrix::from_rows(vec![vec![q.clone()]]).ok_or("matrix");
        let mf = MatrixFactorization::new(
            vec!["x".into(), "y".into()],
            f1.mul(&f2),
            one(a)?,
            one(b)?,
            None,
        )
        .map_err(|e| e.to_string())?;
        all.push((format!("({a})({b})"), mf));
    }
    for (name, mf) in &all {
        mf_check(name, mf)?;
    }
    let e7 = &all[1].1;
    let det = e7.phi.det();
    let f2 = e7.f.pow(2);
    ensure!(
        e7.phi.rows() == 4 && (det == f2 || det == f2.neg()),
        "E7 determinant {det}"
    );
    let v = nccr(&["mf", "validate", "--in", &fixture_arg("mf_cusp.json")])?;
    ensure!(
        v["valid"] == true && v["sign"] == -1,
        "CLI cusp validation {v}"
    );
    Ok(())
}

fn loops_counterexample() -> Check {
    let inv = nccr(&[
        "moduli",
        "invariants",
        "--quiver",
        &fixture_arg("loops_counterexample.json"),
    ])?;
    let mut names: BTreeMap<BTreeSet<String>, String> = BTreeMap::new();
    for g in array(&inv, "generators")? {
        let members: BTreeSet<String> = strs(&g["members"]).into_iter().collect();
        names.insert(members, g["name"].as_str().unwrap_or("").to_string());
    }
    let class = |ms: &[&str]| -> Result<String, String> {
        let key: BTreeSet<String> = ms.iter().map(|s| s.to_string()).collect();
        names
            .get(&key)
            .cloned()
            .ok_or_else(|| format!("no generator class {ms:?}"))
    };
    ensure!(names.len() == 5, "{} generator classes", names.len());
    let r1 = class(&["a*s"])?;
    let r2 = class(&["a*t", "b*s"])?;
    let r3 = class(&["b*t"])?;
    let (v, w) = (class(&["v"])?, class(&["w"])?);
    let p = |s: String| Polynomial::parse(&s).map_err(|e| e.to_string());
    let mut expected = vec![p(format!("{r2}^2 - {r1}*{r3}"))?];
    for r in [&r1, &r2, &r3] {
        expected.push(p(format!("({v} - {w})*{r}"))?);
    }
    let mut got = Vec::new();
    for rel in strs(&inv["relations"]) {
        let (l, r) = rel
            .split_once(" = ")
            .ok_or_else(|| format!("relation `{rel}`"))?;
        got.push(p(l.to_string())?.sub(&p(r.to_string())?));
    }
    for e in &expected {
        ensure!(
            got.iter().any(|g| g == e || *g == e.neg()),
            "relation {e} missing from {got:?}"
        );
    }
    ensure!(got.len() == expected.len(), "extra relations {got:?}");
    ensure!(inv["domain"] == false, "reported as a domain");
    ensure!(inv["caveat"].is_string(), "no caveat");
    Ok(())
}

fn run_property<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Check {
    let mut runner = TestRunner::new(Config {
        cases: PROPERTY_CASES,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&strategy, test)
        .map_err(|e| format!("{name}: {e}"))
}

fn small_poly() -> impl Strategy<Value = Polynomial> + Clone {
    prop::collection::vec(((-4i64..=4, 1i64..=3), 0i64..3, 0i64..3), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(Polynomial::zero(), |acc, ((n, d), a, b)| {
                acc.add(&Polynomial::term(
                    Monomial::from_pairs([("x", a), ("y", b)]),
                    ratio(n, d),
                ))
            })
    })
}

fn thin_support_rep(bq: &BoundQuiver, values: &[i64]) -> Representation {
    let vals: Vec<(String, Entry)> = bq
        .quiver
        .arrows()
        .iter()
        .zip(values.iter().cycle())
        .map(|(a, &v)| (a.name.clone(), Entry::constant(rat(v))))
        .collect();
    let refs: Vec<(&str, Entry)> = vals.iter().map(|(n, e)| (n.as_str(), e.clone())).collect();
    Representation::thin(bq.quiver.clone(), &refs).expect("thin representation")
}

fn properties() -> Check {
    run_property(
        "scalar ring axioms",
        (small_poly(), small_poly(), small_poly()),
        |(a, b, c)| {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert!(a.sub(&a).is_zero());
            let q: Rational = ratio(3, 7);
            prop_assert_eq!(a.scale(&q).scale(&q.recip()), a);
            Ok(())
        },
    )?;

    let spp = fixtures::spp();
    let paths: Vec<QPath> = spp.quiver.enumerate_paths(3);
    let element = prop::collection::vec((0..paths.len(), -3i64..=3), 0..5).prop_map(|ts| {
        AlgebraElement::from_terms(ts.into_iter().map(|(i, c)| (paths[i].clone(), rat(c))))
    });
    run_property(
        "path algebra associativity",
        (element.clone(), element.clone(), element),
        |(x, y, z)| {
            let q = &spp.quiver;
            prop_assert_eq!(
                q.multiply(&q.multiply(&x, &y), &z),
                q.multiply(&x, &q.multiply(&y, &z))
            );
            prop_assert_eq!(q.multiply(&q.unit(), &x), x);
            Ok(())
        },
    )?;

    let z3 = fixtures::z3();
    let values = prop::collection::vec(0i64..=1, 6);
    run_property(
        "direct-sum relation compatibility",
        (values.clone(), values),
        |(a, b)| {
            let (m, n) = (thin_support_rep(&z3, &a), thin_support_rep(&z3, &b));
            let s = m.direct_sum(&n).unwrap();
            let ok = |r: &Representation| r.check_relations(&z3.relations).satisfied;
            prop_assert_eq!(ok(&s), ok(&m) && ok(&n));
            Ok(())
        },
    )?;

    run_property("closed-subset lattice", 0u64..256, |support| {
        let r = Representation::thin_support(spp.quiver.clone(), support).unwrap();
        let sets: BTreeSet<BTreeSet<usize>> = r
            .closed_subsets()
            .unwrap()
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        for s in &sets {
            for t in &sets {
                prop_assert!(sets.contains(&s.union(t).copied().collect()));
                prop_assert!(sets.contains(&s.intersection(t).copied().collect()));
            }
        }
        Ok(())
    })?;

    let mut atlases = Vec::new();
    let spp_rels = commutativize(&spp).map_err(|e| e.to_string())?;
    for c in chambers(3).map_err(|e| e.to_string())? {
        let a = enumerate_charts_theta(&spp, &spp_rels, &Theta(c.representative))
            .map_err(|e| e.to_string())?;
        atlases.push((spp.quiver.clone(), a.charts));
    }
    let z3_rels = commutativize(&z3).map_err(|e| e.to_string())?;
    let a = enumerate_charts_theta(&z3, &z3_rels, &Theta::star(3, 0)).map_err(|e| e.to_string())?;
    atlases.push((z3.quiver.clone(), a.charts));
    run_property(
        "transition cocycle",
        (0..atlases.len(), 0usize..8, 0usize..8, 0usize..8),
        |(w, i, j, k)| {
            let (q, charts) = &atlases[w];
            let n = charts.len();
            let (ci, cj, ck) = (&charts[i % n], &charts[j % n], &charts[k % n]);
            let (tij, tjk, tik) = (
                transition(q, ci, cj).unwrap(),
                transition(q, cj, ck).unwrap(),
                transition(q, ci, ck).unwrap(),
            );
            let composed: Vec<(String, Monomial)> = tjk
                .map
                .iter()
                .map(|(v, x)| (v.clone(), pull_back(x, &tij)))
                .collect();
            prop_assert_eq!(composed, tik.map);
            Ok(())
        },
    )?;

    let groups = prop_oneof![
        (1u32..=12)
            .prop_flat_map(|r| (Just(r), prop::collection::vec(0..r, 1..=2)))
            .prop_map(|(r, w)| GroupKind::cyclic(r, w).unwrap()),
        (2u32..=8).prop_map(|n| GroupKind::BinaryDihedral { n }),
    ];
    run_property("character orthonormality", groups, |g| {
        prop_assert!(character_table(&g).is_orthonormal());
        Ok(())
    })?;

    let sl2 = prop_oneof![
        (2u32..=12).prop_flat_map(|r| (1..r).prop_map(move |a| GroupKind::cyclic(
            r,
            vec![a, r - a]
        )
        .unwrap())),
        (2u32..=6).prop_map(|n| GroupKind::BinaryDihedral { n }),
    ];
    run_property("SL2 loop-freeness and arrow symmetry", sl2, |g| {
        let m = mckay_quiver(&character_table(&g)).unwrap();
        prop_assert!(!m.has_loops());
        let n = m.dims.len();
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(m.arrow_count(i, j), m.arrow_count(j, i));
            }
        }
        Ok(())
    })?;

    let part = || (small_poly(), 0u32..6);
    let skew = (
        1u32..=6,
        prop::collection::vec(0u32..6, 2),
        part(),
        part(),
        part(),
    );
    run_property("skew-ring associativity", skew, |(r, w, a, b, c)| {
        let ctx = SkewContext::new(r, w.iter().map(|x| x % r).collect(), 64).unwrap();
        let (a, b, c) = (
            ctx.from_rational(&a.0, a.1),
            ctx.from_rational(&b.0, b.1),
            ctx.from_rational(&c.0, c.1),
        );
        let left = ctx.multiply(&ctx.multiply(&a, &b).0, &c).0;
        let right = ctx.multiply(&a, &ctx.multiply(&b, &c).0).0;
        prop_assert_eq!(left, right);
        Ok(())
    })?;
    Ok(())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Z3 end to end", z3_end_to_end),
        ("Kronecker and blowup charts", kronecker_and_blowup),
        ("McKay quivers and the ADE dictionary", mckay),
        ("endomorphism quiver equals McKay quiver", endo_equals_mckay),
        ("stability and chambers", stability),
        ("suspended pinch point charts", spp),
        ("torus invariants", torus),
        ("matrix factorizations", matrix_factorizations),
        ("loops counterexample", loops_counterexample),
        ("property suites", properties),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            if elapsed > TIME_LIMIT {
                Err(format!("took {:.1}s", elapsed.as_secs_f64()))
            } else {
                Ok(())
            }
        });
        match result {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {e}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
