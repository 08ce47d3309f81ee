//! Command line front end. Every command reads JSON or plain arguments and
//! writes one JSON document carrying `"version": 1`, to `--out` or stdout.

use clap::{Args, Parser, Subcommand};
use nccr::graph::DualGraph;
use nccr::io::{QuiverFile, RepFile, SCHEMA_VERSION};
use nccr::mckay::{self, GroupKind, McKayQuiver};
use nccr::mf::MatrixFactorization;
use nccr::moduli::{self, Chart, ChartAtlas, DEFAULT_DEGREE_BOUND};
use nccr::quiver::{BoundQuiver, Quiver};
use nccr::scalars::{Monomial, Polynomial};
use nccr::skew::{SkewContext, SkewElement, DEFAULT_TRUNCATION};
use nccr::stability::{self, Theta};
use nccr::toricend::{self, AbelianAction};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};
use std::time::Instant;

pub const DEGREE_BOUND_ENV: &str = "NCCR_DEGREE_BOUND";

#[derive(Parser, Debug)]
#[command(
    name = "nccr",
    version,
    about = "Exact computations for quivers, quiver moduli, McKay quivers and matrix factorizations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Common {
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Also write a Graphviz file, for commands that draw a graph.
    #[arg(long, global = true)]
    pub dot: Option<PathBuf>,
    /// Accepted for compatibility; every command is deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Write a run report (command, input digest, outputs, version).
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    /// Include wall-clock timing in the run report.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Inspect quivers with relations.
    #[command(subcommand)]
    Quiver(QuiverCmd),
    /// Check representations against relations.
    #[command(subcommand)]
    Rep(RepCmd),
    /// King stability and chambers.
    #[command(subcommand)]
    Stability(StabilityCmd),
    /// Moduli of representations of dimension vector (1,…,1).
    #[command(subcommand)]
    Moduli(ModuliCmd),
    /// McKay quivers and the ADE dictionary.
    #[command(subcommand)]
    Mckay(McKayCmd),
    /// Invariant ring of a cyclic group or torus acting diagonally.
    Invariants(InvariantsArgs),
    /// Quiver of the endomorphism ring of the modules of covariants.
    EndoQuiver(GroupArgs),
    /// Skew group ring arithmetic.
    #[command(subcommand)]
    Skew(SkewCmd),
    /// Matrix factorizations.
    #[command(subcommand)]
    Mf(MfCmd),
}

#[derive(Args, Debug)]
pub struct QuiverArgs {
    /// Quiver JSON file.
    #[arg(long)]
    pub quiver: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum QuiverCmd {
    /// Summary of a quiver file.
    Show(QuiverArgs),
    /// Paths up to a given length.
    Paths {
        #[command(flatten)]
        q: QuiverArgs,
        /// Longest path length to list.
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
    /// Write a built-in example quiver; lists the names when none is given.
    Fixture {
        /// Fixture name.
        #[arg(long)]
        name: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum RepCmd {
    /// Evaluate the relations on a representation.
    Check {
        #[command(flatten)]
        q: QuiverArgs,
        /// Representation JSON file.
        #[arg(long)]
        rep: PathBuf,
    },
}

#[derive(Args, Debug)]
pub struct ThetaArgs {
    /// Stability parameter such as "-2,1,1".
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<String>,
    /// Vertex carrying the negative weight of θ = (−n,1,…,1).
    #[arg(long)]
    pub star: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum StabilityCmd {
    /// Classify a thin representation.
    Classify {
        #[command(flatten)]
        q: QuiverArgs,
        /// Representation JSON file.
        #[arg(long)]
        rep: PathBuf,
        #[command(flatten)]
        theta: ThetaArgs,
    },
    /// Chambers of generic parameters for dimension vector (1,…,1).
    Chambers {
        /// Number of vertices.
        #[arg(long)]
        vertices: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum ModuliCmd {
    /// Generators and relations of the invariant ring of the representation scheme.
    Invariants {
        #[command(flatten)]
        q: QuiverArgs,
        /// Degree bound for lattice searches; overrides NCCR_DEGREE_BOUND.
        #[arg(long)]
        bound: Option<u32>,
    },
    /// Smooth affine charts.
    Charts {
        #[command(flatten)]
        q: QuiverArgs,
        #[command(flatten)]
        theta: ThetaArgs,
    },
    /// Transition functions and base maps of the charts.
    Transitions {
        #[command(flatten)]
        q: QuiverArgs,
        #[command(flatten)]
        theta: ThetaArgs,
        /// Degree bound for lattice searches; overrides NCCR_DEGREE_BOUND.
        #[arg(long)]
        bound: Option<u32>,
    },
    /// Dual graph of the exceptional curves of a surface.
    DualGraph {
        #[command(flatten)]
        q: QuiverArgs,
        /// Star vertex; defaults to the one recorded in the quiver file.
        #[arg(long)]
        star: Option<String>,
        /// Degree bound for lattice searches; overrides NCCR_DEGREE_BOUND.
        #[arg(long)]
        bound: Option<u32>,
    },
}

#[derive(Args, Debug)]
pub struct GroupArgs {
    /// "1/r(a,b,…)" or "BD4n".
    #[arg(long)]
    pub group: String,
    /// Degree bound for lattice searches; overrides NCCR_DEGREE_BOUND.
    #[arg(long)]
    pub bound: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum McKayCmd {
    /// The McKay quiver, as a quiver file with dimensions and labels.
    Quiver(GroupArgs),
    /// Character table and orthonormality check.
    Characters(GroupArgs),
    /// Dual graph obtained by removing the star, with its ADE type.
    DualGraph(GroupArgs),
    /// McKay quiver of a Dynkin diagram such as "D4".
    FromDynkin {
        /// Dynkin type such as "A3", "D4" or "E8".
        #[arg(long)]
        ade: String,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false, id = "action")]
pub struct ActionArgs {
    /// Cyclic group "1/r(a,b,…)".
    #[arg(long)]
    pub group: Option<String>,
    /// Torus weights such as "1,1,-1,-1".
    #[arg(long, allow_hyphen_values = true)]
    pub torus: Option<String>,
}

#[derive(Args, Debug)]
pub struct InvariantsArgs {
    #[command(flatten)]
    pub action: ActionArgs,
    /// Degree bound for lattice searches; overrides NCCR_DEGREE_BOUND.
    #[arg(long)]
    pub bound: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum SkewCmd {
    /// Product of two elements written "f@k" for f ⊗ gᵏ.
    Multiply {
        /// Cyclic group "1/r(a,b,…)".
        #[arg(long)]
        group: String,
        /// Left factor "f@k"; omitting "@k" means k = 0.
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        /// Right factor.
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
        /// Terms of higher total degree are dropped and reported.
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        max_degree: i64,
    },
}

#[derive(Args, Debug)]
pub struct MfArgs {
    /// Matrix factorization JSON file.
    #[arg(long = "in")]
    pub input: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum MfCmd {
    /// Check φψ = ψφ = s·f·I, with the first failing entry as a witness.
    Validate(MfArgs),
    /// The factorization (ψ, φ) presenting the syzygy module.
    Syzygy(MfArgs),
    /// Knörrer's factorization of uv − f, with the opposite sign.
    Knorrer {
        #[command(flatten)]
        m: MfArgs,
        /// Name of the first new variable.
        #[arg(long, default_value = "u")]
        u: String,
        /// Name of the second new variable.
        #[arg(long, default_value = "v")]
        v: String,
    },
    /// Presentation of the cokernel of φ, one list per relation column.
    Presentation(MfArgs),
}

/// Failures, split by exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or unreadable files: exit 2.
    Usage(String),
    /// Errors reported by the library: exit 1.
    Domain(nccr::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Domain(e) => write!(f, "error: {e}"),
        }
    }
}

impl From<nccr::Error> for CliError {
    fn from(e: nccr::Error) -> Self {
        CliError::Domain(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// What a command produced, before it is written anywhere.
pub struct Output {
    pub json: Value,
    pub dot: Option<String>,
}

/// Reads inputs and records them for the run report digest.
#[derive(Default)]
struct Inputs {
    files: Vec<(String, Vec<u8>)>,
}

impl Inputs {
    fn read(&mut self, path: &Path) -> CliResult<String> {
        let bytes = std::fs::read(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        let text = String::from_utf8(bytes.clone())
            .map_err(|_| CliError::Usage(format!("{} is not UTF-8", path.display())))?;
        self.files.push((path.display().to_string(), bytes));
        Ok(text)
    }

    fn quiver(&mut self, path: &Path) -> CliResult<(QuiverFile, BoundQuiver)> {
        let file = QuiverFile::parse(&self.read(path)?)?;
        let bq = file.to_bound_quiver()?;
        Ok((file, bq))
    }

    fn digest(&self, argv: &[String]) -> String {
        let mut h = Sha256::new();
        for a in argv {
            h.update(a.as_bytes());
            h.update([0]);
        }
        for (name, bytes) in &self.files {
            h.update(name.as_bytes());
            h.update([0]);
            h.update(bytes);
        }
        hex::encode(h.finalize())
    }
}

fn with_version(mut v: Value) -> Value {
    if let Value::Object(m) = &mut v {
        m.insert("version".into(), json!(SCHEMA_VERSION));
    }
    v
}

fn degree_bound(explicit: Option<u32>, default: u32) -> CliResult<u32> {
    if let Some(b) = explicit {
        return Ok(b);
    }
    match std::env::var(DEGREE_BOUND_ENV) {
        Ok(s) => s.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "{DEGREE_BOUND_ENV} must be a positive integer, got `{s}`"
            ))
        }),
        Err(_) => Ok(default),
    }
}

fn default_star(file: &QuiverFile, q: &Quiver, explicit: Option<&String>) -> String {
    explicit
        .cloned()
        .or_else(|| file.star())
        .unwrap_or_else(|| q.vertices()[0].clone())
}

fn resolve_theta(
    file: &QuiverFile,
    q: &Quiver,
    args: &ThetaArgs,
) -> CliResult<(Theta, Option<String>)> {
    if let Some(t) = &args.theta {
        if args.star.is_some() {
            return Err(CliError::Usage(
                "give either --theta or --star, not both".into(),
            ));
        }
        let v = t
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| CliError::Usage(format!("cannot parse theta `{t}`")))?;
        return Ok((Theta(v), None));
    }
    let star = default_star(file, q, args.star.as_ref());
    let i = q.vertex(&star)?;
    Ok((Theta::star(q.num_vertices(), i), Some(star)))
}

fn mono(m: &Monomial) -> String {
    m.to_string()
}

fn chart_json(q: &Quiver, i: usize, c: &Chart) -> Value {
    let exprs: Map<String, Value> = q
        .arrows()
        .iter()
        .zip(&c.expressions)
        .map(|(a, e)| (a.name.clone(), json!(mono(e))))
        .collect();
    json!({
        "index": i,
        "tree": c.tree_names(q),
        "free": c.free_names(q),
        "expressions": exprs,
    })
}

fn atlas_json(q: &Quiver, atlas: &ChartAtlas) -> Value {
    let names =
        |v: &[usize]| -> Vec<String> { v.iter().map(|&a| q.arrows()[a].name.clone()).collect() };
    json!({
        "theta": atlas.theta.0,
        "charts": atlas.charts.iter().enumerate().map(|(i, c)| chart_json(q, i, c)).collect::<Vec<_>>(),
        "unresolved": atlas.unresolved.iter().map(|u| json!({"tree": names(&u.tree), "reason": u.reason})).collect::<Vec<_>>(),
        "pruned": atlas.pruned.iter().map(|p| json!({"tree": names(&p.tree), "contained_in": p.contained_in})).collect::<Vec<_>>(),
        "coverage_gaps": atlas.coverage_gaps.as_ref().map(|g| g.iter().map(|s| names(s)).collect::<Vec<_>>()),
    })
}

fn graph_json(g: &DualGraph) -> Value {
    json!({
        "nodes": g.nodes,
        "edges": g.edges.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
        "ade": mckay::classify_ade(g).ok().map(|t| t.to_string()),
    })
}

fn mckay_output(m: &McKayQuiver) -> CliResult<Output> {
    let file = QuiverFile::from_mckay(m);
    Ok(Output {
        json: serde_json::to_value(file).expect("quiver files serialize"),
        dot: Some(m.to_dot()),
    })
}

fn action(args: &ActionArgs) -> CliResult<AbelianAction> {
    match (&args.group, &args.torus) {
        (Some(g), None) => Ok(AbelianAction::parse_group(g)?),
        (None, Some(t)) => Ok(AbelianAction::parse_torus(t)?),
        _ => Err(CliError::Usage(
            "give exactly one of --group or --torus".into(),
        )),
    }
}

fn skew_element(ctx: &SkewContext, s: &str) -> CliResult<SkewElement> {
    let (f, k) = match s.rsplit_once('@') {
        Some((f, k)) => (
            f,
            k.trim()
                .parse::<u32>()
                .map_err(|_| CliError::Usage(format!("bad group power in `{s}`")))?,
        ),
        None => (s, 0),
    };
    let p = Polynomial::parse(f).map_err(|e| CliError::Usage(format!("`{f}`: {e}")))?;
    if let Some(v) = p.vars().into_iter().find(|v| !ctx.variables.contains(v)) {
        return Err(CliError::Usage(format!(
            "unknown variable `{v}`; expected one of {:?}",
            ctx.variables
        )));
    }
    Ok(ctx.from_rational(&p, k))
}

fn skew_json(e: &SkewElement) -> Value {
    json!(e
        .parts()
        .map(|(k, f)| json!({"g": k, "coeff": f.to_string()}))
        .collect::<Vec<_>>())
}

fn mf_output(mf: &MatrixFactorization) -> Value {
    serde_json::to_value(mf.to_file()).expect("factorizations serialize")
}

fn run_command(cmd: &Command, inputs: &mut Inputs) -> CliResult<Output> {
    let plain = |json: Value| Output { json, dot: None };
    match cmd {
        Command::Quiver(QuiverCmd::Show(a)) => {
            let (file, bq) = inputs.quiver(&a.quiver)?;
            let q = &bq.quiver;
            Ok(Output {
                json: json!({
                    "name": file.name,
                    "vertices": q.vertices(),
                    "arrows": q.arrows().iter().map(|a| json!({"name": a.name, "tail": a.tail, "head": a.head})).collect::<Vec<_>>(),
                    "relations": bq.relations.iter().map(|r| q.element_name(r.element())).collect::<Vec<_>>(),
                    "acyclic": q.is_acyclic(),
                    "star": file.star(),
                }),
                dot: Some(q.to_dot()),
            })
        }
        Command::Quiver(QuiverCmd::Paths { q: a, max_len }) => {
            let (_, bq) = inputs.quiver(&a.quiver)?;
            let q = &bq.quiver;
            let paths: Vec<String> = q
                .enumerate_paths(*max_len)
                .iter()
                .map(|p| q.path_name(p))
                .collect();
            Ok(plain(
                json!({"max_len": max_len, "count": paths.len(), "paths": paths}),
            ))
        }
        Command::Quiver(QuiverCmd::Fixture { name }) => match name {
            None => Ok(plain(json!({
                "fixtures": nccr::fixtures::all().into_iter().map(|(n, _)| n).collect::<Vec<_>>()
            }))),
            Some(n) => {
                let bq = nccr::fixtures::by_name(n)?;
                let mut file = QuiverFile::from_bound_quiver(&bq, Some("0"));
                file.name = Some(n.clone());
                Ok(Output {
                    json: serde_json::to_value(file).expect("quiver files serialize"),
                    dot: Some(bq.quiver.to_dot()),
                })
            }
        },
        Command::Rep(RepCmd::Check { q: a, rep }) => {
            let (_, bq) = inputs.quiver(&a.quiver)?;
            let r = RepFile::parse(&inputs.read(rep)?)?.to_representation(&bq.quiver)?;
            let check = r.check_relations(&bq.relations);
            let vs = bq.quiver.vertices();
            let closed = if r.is_thin() {
                Some(
                    r.closed_subsets()?
                        .iter()
                        .map(|s| s.iter().map(|&i| vs[i].clone()).collect::<Vec<_>>())
                        .collect::<Vec<_>>(),
                )
            } else {
                None
            };
            Ok(plain(json!({
                "dims": vs.iter().zip(r.dims()).map(|(v, d)| (v.clone(), json!(d))).collect::<Map<_, _>>(),
                "satisfied": check.satisfied,
                "violated": check.violated,
                "thin": r.is_thin(),
                "closed_subsets": closed,
            })))
        }
        Command::Stability(StabilityCmd::Classify { q: a, rep, theta }) => {
            let (file, bq) = inputs.quiver(&a.quiver)?;
            let r = RepFile::parse(&inputs.read(rep)?)?.to_representation(&bq.quiver)?;
            let (th, star) = resolve_theta(&file, &bq.quiver, theta)?;
            let result = stability::classify(&r, &th)?;
            let star_ok = match &star {
                Some(s) => Some(stability::star_criterion(&r, s)?),
                None => None,
            };
            Ok(plain(json!({
                "theta": th.0,
                "result": result.to_string(),
                "star": star,
                "star_criterion": star_ok,
            })))
        }
        Command::Stability(StabilityCmd::Chambers { vertices }) => {
            let cs = stability::chambers(*vertices)?;
            let fan = if *vertices == 3 {
                Some(
                    stability::fan_2d(&cs)?
                        .iter()
                        .map(|c| json!({"chamber": c.chamber, "rays": c.rays}))
                        .collect::<Vec<_>>(),
                )
            } else {
                None
            };
            Ok(plain(json!({
                "vertices": vertices,
                "count": cs.len(),
                "chambers": cs.iter().map(|c| json!({
                    "representative": c.representative,
                    "conditions": c.conditions.iter().map(|(s, sign)| json!({"subset": s, "sign": sign})).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
                "fan": fan,
            })))
        }
        Command::Moduli(ModuliCmd::Invariants { q: a, bound }) => {
            let (_, bq) = inputs.quiver(&a.quiver)?;
            let rels = moduli::commutativize(&bq)?;
            let ring = moduli::invariant_generators(
                &bq.quiver,
                &rels,
                degree_bound(*bound, DEFAULT_DEGREE_BOUND)?,
            )?;
            let caveat = (!ring.is_domain()).then(|| {
                "the relation ideal is not prime: this ring has zero divisors, so it is not the coordinate ring of an irreducible variety".to_string()
            });
            Ok(plain(json!({
                "binomial_relations": rels.pairs.len(),
                "generators": ring.generators.iter().map(|g| json!({
                    "name": g.name,
                    "cycle": mono(&g.cycle),
                    "members": g.members.iter().map(mono).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
                "relations": ring.relation_names,
                "zero_divisor_relations": ring.zero_divisor_relations,
                "domain": ring.is_domain(),
                "caveat": caveat,
                "certified_degree": ring.certified_degree,
                "relation_degree": ring.relation_degree,
            })))
        }
        Command::Moduli(ModuliCmd::Charts { q: a, theta }) => {
            let (file, bq) = inputs.quiver(&a.quiver)?;
            let (th, _) = resolve_theta(&file, &bq.quiver, theta)?;
            let rels = moduli::commutativize(&bq)?;
            let atlas = moduli::enumerate_charts_theta(&bq, &rels, &th)?;
            Ok(plain(atlas_json(&bq.quiver, &atlas)))
        }
        Command::Moduli(ModuliCmd::Transitions { q: a, theta, bound }) => {
            let (file, bq) = inputs.quiver(&a.quiver)?;
            let q = &bq.quiver;
            let (th, _) = resolve_theta(&file, q, theta)?;
            let rels = moduli::commutativize(&bq)?;
            let atlas = moduli::enumerate_charts_theta(&bq, &rels, &th)?;
            let ring = moduli::invariant_generators(
                q,
                &rels,
                degree_bound(*bound, DEFAULT_DEGREE_BOUND)?,
            )?;
            let mut transitions = Vec::new();
            for (i, from) in atlas.charts.iter().enumerate() {
                for (j, to) in atlas.charts.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    match moduli::transition(q, from, to) {
                        Ok(t) => transitions.push(json!({
                            "from": i,
                            "to": j,
                            "map": t.map.iter().map(|(n, x)| (n.clone(), json!(mono(x)))).collect::<Map<_, _>>(),
                            "domain": t.domain,
                        })),
                        Err(nccr::Error::NoOverlap(_)) => transitions.push(json!({"from": i, "to": j, "map": null})),
                        Err(e) => return Err(e.into()),
                    }
                }
            }
            let base: Vec<Value> = atlas
                .charts
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let vals = moduli::base_map(c, q, &ring.generators);
                    json!({
                        "chart": i,
                        "values": ring.generators.iter().zip(&vals).map(|(g, v)| (g.name.clone(), json!(mono(v)))).collect::<Map<_, _>>(),
                    })
                })
                .collect();
            Ok(plain(json!({
                "charts": atlas.charts.iter().enumerate().map(|(i, c)| chart_json(q, i, c)).collect::<Vec<_>>(),
                "transitions": transitions,
                "base_maps": base,
            })))
        }
        Command::Moduli(ModuliCmd::DualGraph { q: a, star, bound }) => {
            let (file, bq) = inputs.quiver(&a.quiver)?;
            let star = default_star(&file, &bq.quiver, star.as_ref());
            let locus = moduli::surface_dual_graph(
                &bq,
                &star,
                degree_bound(*bound, DEFAULT_DEGREE_BOUND)?,
            )?;
            let mut j = graph_json(&locus.graph);
            j["members"] = json!(locus
                .members
                .iter()
                .map(|m| m
                    .iter()
                    .map(|x| json!({"chart": x.chart, "coord": x.coord}))
                    .collect::<Vec<_>>())
                .collect::<Vec<_>>());
            Ok(Output {
                json: j,
                dot: Some(locus.graph.to_dot()),
            })
        }
        Command::Mckay(McKayCmd::Quiver(g)) => {
            let data = mckay::character_table(&GroupKind::parse(&g.group)?);
            mckay_output(&mckay::mckay_quiver(&data)?)
        }
        Command::Mckay(McKayCmd::Characters(g)) => {
            let data = mckay::character_table(&GroupKind::parse(&g.group)?);
            Ok(plain(json!({
                "group": data.kind.to_string(),
                "order": data.order(),
                "classes": data.classes.iter().map(|c| json!({"name": c.name, "size": c.size})).collect::<Vec<_>>(),
                "characters": data.irreducibles.iter().map(|c| json!({
                    "name": c.name,
                    "dim": c.dim,
                    "values": c.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
                "natural": data.natural.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "orthonormal": data.is_orthonormal(),
            })))
        }
        Command::Mckay(McKayCmd::DualGraph(g)) => {
            let data = mckay::character_table(&GroupKind::parse(&g.group)?);
            let d = mckay::mckay_to_dual_graph(&mckay::mckay_quiver(&data)?)?;
            Ok(Output {
                json: graph_json(&d),
                dot: Some(d.to_dot()),
            })
        }
        Command::Mckay(McKayCmd::FromDynkin { ade }) => {
            let t = parse_ade(ade)?;
            mckay_output(&mckay::dual_graph_to_mckay(&mckay::dynkin(t)?)?)
        }
        Command::Invariants(a) => {
            let act = action(&a.action)?;
            let inv = toricend::invariant_ring_generators(
                &act,
                degree_bound(a.bound, act.default_bound())?,
            )?;
            Ok(plain(json!({
                "variables": inv.variables,
                "generators": inv.names.iter().zip(&inv.generators).map(|(n, g)| json!({"name": n, "monomial": mono(g)})).collect::<Vec<_>>(),
                "relations": inv.relations,
                "certified_degree": inv.certified_degree,
                "gorenstein": inv.gorenstein,
            })))
        }
        Command::EndoQuiver(g) => {
            let act = AbelianAction::parse_group(&g.group)?;
            mckay_output(&toricend::endo_quiver(
                &act,
                degree_bound(g.bound, act.default_bound())?,
            )?)
        }
        Command::Skew(SkewCmd::Multiply {
            group,
            lhs,
            rhs,
            max_degree,
        }) => {
            let (r, weights) = match GroupKind::parse(group)? {
                GroupKind::Cyclic { r, weights } => (r, weights),
                _ => {
                    return Err(CliError::Usage(
                        "skew group rings need a cyclic group".into(),
                    ))
                }
            };
            let ctx = SkewContext::new(r, weights, *max_degree)?;
            let (x, y) = (skew_element(&ctx, lhs)?, skew_element(&ctx, rhs)?);
            let (p, overflow) = ctx.multiply(&x, &y);
            Ok(plain(json!({
                "group": group,
                "variables": ctx.variables,
                "max_degree": max_degree,
                "lhs": skew_json(&x),
                "rhs": skew_json(&y),
                "product": skew_json(&p),
                "display": p.to_string(),
                "truncated": overflow,
            })))
        }
        Command::Mf(cmd) => {
            let path = match cmd {
                MfCmd::Validate(m)
                | MfCmd::Syzygy(m)
                | MfCmd::Presentation(m)
                | MfCmd::Knorrer { m, .. } => &m.input,
            };
            let file = nccr::io::MfFile::parse(&inputs.read(path)?)?;
            let mf = MatrixFactorization::from_file(&file)?;
            let json = match cmd {
                MfCmd::Validate(_) => {
                    let mut v = serde_json::to_value(mf.validate()).expect("validation serializes");
                    v["determinant_identity"] = json!(mf.determinant_identity());
                    v
                }
                MfCmd::Syzygy(_) => mf_output(&mf.syzygy()?),
                MfCmd::Knorrer { u, v, .. } => mf_output(&mf.knorrer(u, v)?),
                MfCmd::Presentation(_) => serde_json::to_value(mf.cokernel_presentation())
                    .expect("presentation serializes"),
            };
            Ok(plain(json))
        }
    }
}

fn parse_ade(s: &str) -> CliResult<mckay::AdeType> {
    let bad = || {
        CliError::Usage(format!(
            "cannot parse Dynkin type `{s}`; expected A<n>, D<n> or E<n>"
        ))
    };
    let mut chars = s.trim().chars();
    let family = match chars.next() {
        Some('A') => mckay::AdeFamily::A,
        Some('D') => mckay::AdeFamily::D,
        Some('E') => mckay::AdeFamily::E,
        _ => return Err(bad()),
    };
    let rank = chars.as_str().parse().map_err(|_| bad())?;
    Ok(mckay::AdeType { family, rank })
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Quiver(QuiverCmd::Show(_)) => "quiver show",
        Command::Quiver(QuiverCmd::Paths { .. }) => "quiver paths",
        Command::Quiver(QuiverCmd::Fixture { .. }) => "quiver fixture",
        Command::Rep(RepCmd::Check { .. }) => "rep check",
        Command::Stability(StabilityCmd::Classify { .. }) => "stability classify",
        Command::Stability(StabilityCmd::Chambers { .. }) => "stability chambers",
        Command::Moduli(ModuliCmd::Invariants { .. }) => "moduli invariants",
        Command::Moduli(ModuliCmd::Charts { .. }) => "moduli charts",
        Command::Moduli(ModuliCmd::Transitions { .. }) => "moduli transitions",
        Command::Moduli(ModuliCmd::DualGraph { .. }) => "moduli dual-graph",
        Command::Mckay(McKayCmd::Quiver(_)) => "mckay quiver",
        Command::Mckay(McKayCmd::Characters(_)) => "mckay characters",
        Command::Mckay(McKayCmd::DualGraph(_)) => "mckay dual-graph",
        Command::Mckay(McKayCmd::FromDynkin { .. }) => "mckay from-dynkin",
        Command::Invariants(_) => "invariants",
        Command::EndoQuiver(_) => "endo-quiver",
        Command::Skew(SkewCmd::Multiply { .. }) => "skew multiply",
        Command::Mf(MfCmd::Validate(_)) => "mf validate",
        Command::Mf(MfCmd::Syzygy(_)) => "mf syzygy",
        Command::Mf(MfCmd::Knorrer { .. }) => "mf knorrer",
        Command::Mf(MfCmd::Presentation(_)) => "mf presentation",
    }
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text)
        .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// Runs a parsed command line. Returns the text destined for stdout.
pub fn execute(cli: &Cli, argv: &[String]) -> CliResult<String> {
    let start = Instant::now();
    let mut inputs = Inputs::default();
    let out = run_command(&cli.command, &mut inputs)?;
    let json = with_version(out.json);
    let text = pretty(&json);
    let mut stdout = String::new();
    let mut written = Vec::new();
    match &cli.common.out {
        Some(p) => {
            write_file(p, &text)?;
            written.push(p.display().to_string());
        }
        None => stdout.push_str(&text),
    }
    if let Some(p) = &cli.common.dot {
        let dot = out.dot.ok_or_else(|| {
            CliError::Usage(format!(
                "`{}` does not produce a graph",
                command_name(&cli.command)
            ))
        })?;
        write_file(p, &dot)?;
        written.push(p.display().to_string());
    }
    if let Some(p) = &cli.common.report {
        let mut report = json!({
            "command": command_name(&cli.command),
            "inputs_digest": inputs.digest(argv),
            "outputs": written,
            "tool_version": env!("CARGO_PKG_VERSION"),
        });
        if cli.common.timing {
            report["timing_ms"] = json!(start.elapsed().as_secs_f64() * 1000.0);
        }
        write_file(p, &pretty(&with_version(report)))?;
    }
    Ok(stdout)
}

/// Parses and runs `argv` (without the program name); returns the exit
/// code together with stdout and stderr text.
pub fn run<I: IntoIterator<Item = String>>(argv: I) -> (i32, String, String) {
    let argv: Vec<String> = argv.into_iter().collect();
    let cli = match Cli::try_parse_from(
        std::iter::once("nccr".to_string()).chain(argv.iter().cloned()),
    ) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                (0, text, String::new())
            } else {
                (code, String::new(), text)
            };
        }
    };
    match execute(&cli, &argv) {
        Ok(out) => (0, out, String::new()),
        Err(e) => (e.exit_code(), String::new(), format!("{e}\n")),
    }
}
