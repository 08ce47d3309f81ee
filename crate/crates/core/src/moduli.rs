//! Quiver GIT moduli at dimension vector (1,…,1).
//!
//! Relations are commutativized into binomials over the arrows. The
//! invariant ring is generated by cycles; affine charts are indexed by
//! spanning trees whose support is θ-stable, with tree arrows set to 1 and
//! the remaining arrows solved from the relations.

use crate::error::{Error, Result};
use crate::graph::DualGraph;
use crate::lattice::{self, Constraint, GeneratorRelation, Moves};
use crate::quiver::{BoundQuiver, Path, Quiver};
use crate::rep::{Entry, Representation};
use crate::scalars::{Matrix, Monomial, Rational, Ring};
use crate::stability::{classify, Stability, Theta};
use std::collections::{BTreeMap, BTreeSet};

/// Default degree bound for the Hilbert basis search.
pub const DEFAULT_DEGREE_BOUND: u32 = 12;

/// Binomial relations `m₁ = m₂` between arrow monomials (exponent vectors in
/// arrow order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialRelations {
    pub pairs: Vec<(Vec<u32>, Vec<u32>)>,
}

impl BinomialRelations {
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn moves(&self) -> Moves {
        Moves {
            pairs: self.pairs.clone(),
        }
    }

    /// Rank of the differences `m₁ − m₂`.
    pub fn rank(&self, num_arrows: usize) -> usize {
        if self.pairs.is_empty() {
            return 0;
        }
        let rows = self
            .pairs
            .iter()
            .map(|(a, b)| {
                (0..num_arrows)
                    .map(|i| crate::scalars::rat(a[i] as i64 - b[i] as i64))
                    .collect()
            })
            .collect();
        Matrix::<Rational>::from_rows(rows)
            .expect("rectangular")
            .rank()
    }
}

fn path_vector(q: &Quiver, p: &Path) -> Vec<u32> {
    let mut v = vec![0; q.num_arrows()];
    if let Path::Arrows(a) = p {
        for &i in a {
            v[i] += 1;
        }
    }
    v
}

/// Makes the arrows commute. Each relation must be `λ(p − q)` for two paths.
/// Relations that become trivial are dropped, as are repeats.
pub fn commutativize(bq: &BoundQuiver) -> Result<BinomialRelations> {
    let q = &bq.quiver;
    let mut pairs: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
    for (i, r) in bq.relations.iter().enumerate() {
        let terms: Vec<_> = r.element().terms().collect();
        let binomial = terms.len() == 2 && Ring::is_zero(&(terms[0].1 + terms[1].1));
        if !binomial {
            return Err(Error::NotBinomial {
                index: i,
                detail: q.element_name(r.element()),
            });
        }
        let a = path_vector(q, terms[0].0);
        let b = path_vector(q, terms[1].0);
        if a == b {
            continue;
        }
        let pair = if a > b { (a, b) } else { (b, a) };
        if !pairs.contains(&pair) {
            pairs.push(pair);
        }
    }
    Ok(BinomialRelations { pairs })
}

/// A generator of the invariant ring: a class of cycles identified by the relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantGenerator {
    pub name: String,
    pub cycle: Monomial,
    pub members: Vec<Monomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantRing {
    pub generators: Vec<InvariantGenerator>,
    /// Relations as exponent vectors over the generators.
    pub relations: Vec<GeneratorRelation>,
    /// Human readable relations such as `A*B = C^3`.
    pub relation_names: Vec<String>,
    /// Relations whose sides share a generator factor: the ring has zero divisors.
    pub zero_divisor_relations: Vec<String>,
    pub certified_degree: u32,
    pub relation_degree: u32,
}

impl InvariantRing {
    pub fn is_domain(&self) -> bool {
        self.zero_divisor_relations.is_empty()
    }
}

pub fn arrow_monomial(q: &Quiver, v: &[u32]) -> Monomial {
    Monomial::from_pairs(
        v.iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (q.arrows()[i].name.as_str(), e as i64)),
    )
}

/// Constraints cutting out cycles: every vertex has in-degree = out-degree.
pub fn cycle_constraints(q: &Quiver) -> Vec<Constraint> {
    (0..q.num_vertices())
        .map(|v| {
            Constraint::equal_zero(
                (0..q.num_arrows())
                    .map(|a| (q.head(a) == v) as i64 - (q.tail(a) == v) as i64)
                    .collect(),
            )
        })
        .collect()
}

/// Generators of the commutative invariant ring and the relations among them.
pub fn invariant_generators(
    q: &Quiver,
    rels: &BinomialRelations,
    bound: u32,
) -> Result<InvariantRing> {
    if q.num_arrows() > 16 {
        return Err(Error::Regime(
            "invariant generators support at most 16 arrows".into(),
        ));
    }
    // the irreducible cycles are the simple ones, of length ≤ |Q₀|
    let sys = lattice::generator_system(
        q.num_arrows(),
        &cycle_constraints(q),
        &rels.moves(),
        bound,
        q.num_vertices() as u32,
    )?;
    let generators = sys
        .generators
        .iter()
        .map(|g| InvariantGenerator {
            name: g.name.clone(),
            cycle: arrow_monomial(q, &g.representative),
            members: g.members.iter().map(|m| arrow_monomial(q, m)).collect(),
        })
        .collect();
    let relation_names = sys.relations.iter().map(|r| sys.relation_name(r)).collect();
    let zero_divisor_relations = sys
        .zero_divisor_relations()
        .into_iter()
        .map(|i| {
            let r = &sys.relations[i];
            let c = r.common_factor();
            let l: Vec<u32> = r.lhs.iter().zip(&c).map(|(a, b)| a - b).collect();
            let rr: Vec<u32> = r.rhs.iter().zip(&c).map(|(a, b)| a - b).collect();
            format!(
                "({} - {})*{} = 0 with both factors nonzero",
                sys.monomial_name(&l),
                sys.monomial_name(&rr),
                sys.monomial_name(&c)
            )
        })
        .collect();
    Ok(InvariantRing {
        generators,
        relations: sys.relations.clone(),
        relation_names,
        zero_divisor_relations,
        certified_degree: sys.certified_degree,
        relation_degree: sys.relation_degree,
    })
}

/// A smooth affine chart of the moduli space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    /// Tree arrows (set to 1), in arrow order.
    pub tree: Vec<usize>,
    /// Free coordinates, in arrow order; each is named after its arrow.
    pub free: Vec<usize>,
    /// Expression of every arrow as a monomial in the free coordinates.
    pub expressions: Vec<Monomial>,
}

impl Chart {
    pub fn tree_names(&self, q: &Quiver) -> Vec<String> {
        self.tree
            .iter()
            .map(|&a| q.arrows()[a].name.clone())
            .collect()
    }

    pub fn free_names(&self, q: &Quiver) -> Vec<String> {
        self.free
            .iter()
            .map(|&a| q.arrows()[a].name.clone())
            .collect()
    }

    pub fn dimension(&self) -> usize {
        self.free.len()
    }

    /// Thin representation with the free coordinates set to the given values.
    pub fn representation(
        &self,
        q: &Quiver,
        values: &BTreeMap<String, Rational>,
    ) -> Result<Representation> {
        let mut vals = Vec::new();
        for (a, e) in self.expressions.iter().enumerate() {
            let p = Entry::monomial(e.clone());
            let v = p
                .eval(values)
                .ok_or_else(|| Error::InvalidInput("chart point misses a coordinate".into()))?;
            vals.push((q.arrows()[a].name.clone(), Entry::constant(v)));
        }
        let refs: Vec<(&str, Entry)> = vals.iter().map(|(n, v)| (n.as_str(), v.clone())).collect();
        Representation::thin(q.clone(), &refs)
    }

    /// The symbolic representation over the chart coordinates.
    pub fn symbolic_representation(&self, q: &Quiver) -> Result<Representation> {
        let vals: Vec<(String, Entry)> = self
            .expressions
            .iter()
            .enumerate()
            .map(|(a, e)| (q.arrows()[a].name.clone(), Entry::monomial(e.clone())))
            .collect();
        let refs: Vec<(&str, Entry)> = vals.iter().map(|(n, v)| (n.as_str(), v.clone())).collect();
        Representation::thin(q.clone(), &refs)
    }
}

/// A spanning tree whose chart could not be brought to affine space form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnresolvedChart {
    pub tree: Vec<usize>,
    pub reason: String,
}

/// A chart dropped because its locus lies in another chart's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrunedChart {
    pub tree: Vec<usize>,
    pub contained_in: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartAtlas {
    pub theta: Theta,
    pub charts: Vec<Chart>,
    pub unresolved: Vec<UnresolvedChart>,
    pub pruned: Vec<PrunedChart>,
    /// Arrow supports that are θ-stable but contain no stable spanning tree.
    /// `None` when the quiver has too many arrows to check every support.
    pub coverage_gaps: Option<Vec<Vec<usize>>>,
}

/// Spanning trees of the underlying graph (loops excluded), as sorted arrow
/// index lists in lexicographic order.
pub fn spanning_trees(q: &Quiver) -> Vec<Vec<usize>> {
    let n = q.num_vertices();
    let arrows: Vec<usize> = (0..q.num_arrows())
        .filter(|&a| q.tail(a) != q.head(a))
        .collect();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let k = n - 1;
    let mut choice: Vec<usize> = Vec::new();
    fn rec(
        start: usize,
        k: usize,
        arrows: &[usize],
        q: &Quiver,
        choice: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if choice.len() == k {
            if is_forest(q, choice) {
                out.push(choice.clone());
            }
            return;
        }
        for i in start..arrows.len() {
            choice.push(arrows[i]);
            if is_forest(q, choice) {
                rec(i + 1, k, arrows, q, choice, out);
            }
            choice.pop();
        }
    }
    rec(0, k, &arrows, q, &mut choice, &mut out);
    out
}

fn is_forest(q: &Quiver, edges: &[usize]) -> bool {
    let mut parent: Vec<usize> = (0..q.num_vertices()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for &a in edges {
        let (x, y) = (find(&mut parent, q.tail(a)), find(&mut parent, q.head(a)));
        if x == y {
            return false;
        }
        parent[x] = y;
    }
    true
}

fn support_mask(arrows: &[usize]) -> u64 {
    arrows.iter().fold(0, |m, &a| m | 1 << a)
}

fn support_is_stable(q: &Quiver, mask: u64, theta: &Theta) -> Result<bool> {
    let rep = Representation::thin_support(q.clone(), mask)?;
    Ok(classify(&rep, theta)? == Stability::Stable)
}

fn eval_side(v: &[u32], expr: &[Monomial]) -> Monomial {
    let mut m = Monomial::one();
    for (a, &e) in v.iter().enumerate() {
        if e > 0 {
            m = m.mul(&expr[a].pow(e as i64));
        }
    }
    m
}

/// Solves the chart for one tree.
fn solve_chart(
    q: &Quiver,
    rels: &BinomialRelations,
    rank: usize,
    tree: &[usize],
) -> std::result::Result<Chart, String> {
    let names: Vec<&str> = q.arrows().iter().map(|a| a.name.as_str()).collect();
    let mut expr: Vec<Monomial> = (0..q.num_arrows())
        .map(|a| {
            if tree.contains(&a) {
                Monomial::one()
            } else {
                Monomial::var(names[a])
            }
        })
        .collect();
    let mut solved = vec![false; q.num_arrows()];
    for &a in tree {
        solved[a] = true;
    }
    loop {
        // candidates: (degree of the other side, relation, arrow, value)
        let mut best: Option<(i64, usize, usize, Monomial)> = None;
        for (ri, (l, r)) in rels.pairs.iter().enumerate() {
            let (sl, sr) = (eval_side(l, &expr), eval_side(r, &expr));
            if sl == sr {
                continue;
            }
            for (lone, other) in [(&sl, &sr), (&sr, &sl)] {
                let mut it = lone.iter();
                let (Some((var, 1)), None) = (it.next(), it.next()) else {
                    continue;
                };
                if other.exponent(var) != 0 {
                    continue;
                }
                let Some(a) = names.iter().position(|n| *n == var) else {
                    continue;
                };
                if solved[a] {
                    continue;
                }
                let cand = (other.degree(), ri, a, other.clone());
                let better = match &best {
                    None => true,
                    Some(b) => {
                        (cand.0, std::cmp::Reverse(cand.1), cand.2)
                            > (b.0, std::cmp::Reverse(b.1), b.2)
                    }
                };
                if better {
                    best = Some(cand);
                }
            }
        }
        let Some((_, _, a, value)) = best else { break };
        solved[a] = true;
        let subst: BTreeMap<String, Monomial> =
            [(names[a].to_string(), value)].into_iter().collect();
        for e in expr.iter_mut() {
            *e = e.substitute(&subst);
        }
    }
    for (i, (l, r)) in rels.pairs.iter().enumerate() {
        if eval_side(l, &expr) != eval_side(r, &expr) {
            return Err(format!(
                "relation {i} is not resolved by single-variable elimination"
            ));
        }
    }
    let free: Vec<usize> = (0..q.num_arrows()).filter(|&a| !solved[a]).collect();
    if let Some(a) = expr.iter().position(|e| !e.is_polynomial()) {
        return Err(format!("arrow {} has a negative exponent", names[a]));
    }
    let expected = q.num_arrows() as i64 - rank as i64 - tree.len() as i64;
    if free.len() as i64 != expected {
        return Err(format!(
            "{} free coordinates but {} expected for a smooth chart",
            free.len(),
            expected
        ));
    }
    Ok(Chart {
        tree: tree.to_vec(),
        free,
        expressions: expr,
    })
}

/// Charts for the stability parameter θ = (−n, 1, …, 1) concentrated at `star`.
pub fn enumerate_charts(
    bq: &BoundQuiver,
    rels: &BinomialRelations,
    star: &str,
) -> Result<ChartAtlas> {
    let s = bq.quiver.vertex(star)?;
    enumerate_charts_theta(bq, rels, &Theta::star(bq.quiver.num_vertices(), s))
}

/// Charts for a generic θ: one per spanning tree whose support is θ-stable.
pub fn enumerate_charts_theta(
    bq: &BoundQuiver,
    rels: &BinomialRelations,
    theta: &Theta,
) -> Result<ChartAtlas> {
    let q = &bq.quiver;
    let dims = vec![1; q.num_vertices()];
    if !crate::stability::is_generic(theta, &dims)? {
        return Err(Error::Regime(
            "charts need a generic stability parameter".into(),
        ));
    }
    if q.num_arrows() > 63 {
        return Err(Error::Regime("too many arrows".into()));
    }
    let rank = rels.rank(q.num_arrows());
    let mut stable_trees = Vec::new();
    for t in spanning_trees(q) {
        if support_is_stable(q, support_mask(&t), theta)? {
            stable_trees.push(t);
        }
    }
    let mut charts = Vec::new();
    let mut unresolved = Vec::new();
    for t in &stable_trees {
        match solve_chart(q, rels, rank, t) {
            Ok(c) => charts.push(c),
            Err(reason) => unresolved.push(UnresolvedChart {
                tree: t.clone(),
                reason,
            }),
        }
    }
    // prune charts whose locus sits inside another chart's
    let contains =
        |outer: &Chart, inner: &Chart| outer.tree.iter().all(|&a| inner.expressions[a].is_one());
    let mut keep = Vec::new();
    let mut pruned = Vec::new();
    for (i, c) in charts.iter().enumerate() {
        let mut inside: Vec<usize> = Vec::new();
        let mut drop = false;
        for (j, d) in charts.iter().enumerate() {
            if i == j || !contains(d, c) {
                continue;
            }
            inside.push(j);
            // equal loci: keep the first; strictly smaller: drop
            if !contains(c, d) || j < i {
                drop = true;
            }
        }
        if drop {
            pruned.push(PrunedChart {
                tree: c.tree.clone(),
                contained_in: inside,
            });
        } else {
            keep.push(c.clone());
        }
    }
    for p in pruned.iter_mut() {
        p.contained_in = p
            .contained_in
            .iter()
            .map(|&j| charts[j].tree.clone())
            .filter_map(|t| keep.iter().position(|k| k.tree == t))
            .collect();
    }
    let coverage_gaps = if q.num_arrows() <= 16 {
        let masks: Vec<u64> = stable_trees.iter().map(|t| support_mask(t)).collect();
        let mut gaps = Vec::new();
        for e in 0u64..(1u64 << q.num_arrows()) {
            if masks.iter().any(|&m| m & !e == 0) {
                continue;
            }
            if support_is_stable(q, e, theta)? {
                gaps.push((0..q.num_arrows()).filter(|a| e >> a & 1 == 1).collect());
            }
        }
        Some(gaps)
    } else {
        None
    };
    Ok(ChartAtlas {
        theta: theta.clone(),
        charts: keep,
        unresolved,
        pruned,
        coverage_gaps,
    })
}

/// Tree potentials: P(root) = 1 and P(h(a)) = P(t(a))·x_a along tree arrows.
fn potentials(q: &Quiver, tree: &[usize], values: &[Monomial]) -> Vec<Monomial> {
    let n = q.num_vertices();
    let mut p: Vec<Option<Monomial>> = vec![None; n];
    p[0] = Some(Monomial::one());
    let mut changed = true;
    while changed {
        changed = false;
        for &a in tree {
            let (t, h) = (q.tail(a), q.head(a));
            match (&p[t], &p[h]) {
                (Some(pt), None) => {
                    p[h] = Some(pt.mul(&values[a]));
                    changed = true;
                }
                (None, Some(ph)) => {
                    p[t] = Some(ph.div(&values[a]));
                    changed = true;
                }
                _ => {}
            }
        }
    }
    p.into_iter()
        .map(|x| x.unwrap_or_else(Monomial::one))
        .collect()
}

/// Coordinates of `to`, as Laurent monomials in the coordinates of `from`,
/// together with the coordinates of `from` that must be nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transition {
    pub map: Vec<(String, Monomial)>,
    pub domain: Vec<String>,
}

pub fn transition(q: &Quiver, from: &Chart, to: &Chart) -> Result<Transition> {
    if from.expressions.len() != q.num_arrows() || to.expressions.len() != q.num_arrows() {
        return Err(Error::NoOverlap(
            "charts come from different quivers".into(),
        ));
    }
    let pot = potentials(q, &to.tree, &from.expressions);
    let map = to
        .free
        .iter()
        .map(|&a| {
            let v = pot[q.tail(a)]
                .mul(&from.expressions[a])
                .div(&pot[q.head(a)]);
            (q.arrows()[a].name.clone(), v)
        })
        .collect();
    let mut domain: BTreeSet<String> = BTreeSet::new();
    for &a in &to.tree {
        for v in from.expressions[a].vars() {
            domain.insert(v.to_string());
        }
    }
    let order: Vec<String> = from.free_names(q);
    let domain = order.into_iter().filter(|v| domain.contains(v)).collect();
    Ok(Transition { map, domain })
}

/// Substitutes a transition into monomials over the target chart's coordinates.
pub fn pull_back(m: &Monomial, t: &Transition) -> Monomial {
    let subst: BTreeMap<String, Monomial> = t.map.iter().cloned().collect();
    m.substitute(&subst)
}

/// Generator cycles evaluated on the chart.
pub fn base_map(chart: &Chart, q: &Quiver, gens: &[InvariantGenerator]) -> Vec<Monomial> {
    let subst: BTreeMap<String, Monomial> = q
        .arrows()
        .iter()
        .zip(&chart.expressions)
        .map(|(a, e)| (a.name.clone(), e.clone()))
        .collect();
    gens.iter().map(|g| g.cycle.substitute(&subst)).collect()
}

/// An exceptional coordinate axis `{coord = 0}` of a chart.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Axis {
    pub chart: usize,
    pub coord: String,
}

/// Dual graph of the exceptional curves of a surface, with the chart axes
/// making up each node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalLocus {
    pub graph: DualGraph,
    pub members: Vec<Vec<Axis>>,
}

pub fn exceptional_dual_graph(
    q: &Quiver,
    charts: &[Chart],
    gens: &[InvariantGenerator],
) -> Result<ExceptionalLocus> {
    if charts.iter().any(|c| c.dimension() != 2) {
        return Err(Error::Regime(
            "dual graphs are computed for surface charts only".into(),
        ));
    }
    let bases: Vec<Vec<Monomial>> = charts.iter().map(|c| base_map(c, q, gens)).collect();
    let mut axes: Vec<Axis> = Vec::new();
    for (i, c) in charts.iter().enumerate() {
        for coord in c.free_names(q) {
            if !bases[i].is_empty() && bases[i].iter().all(|m| m.exponent(&coord) > 0) {
                axes.push(Axis { chart: i, coord });
            }
        }
    }
    // glue axes along transitions
    let mut parent: Vec<usize> = (0..axes.len()).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for (i, ax) in axes.iter().enumerate() {
        for (j, other) in charts.iter().enumerate() {
            if j == ax.chart {
                continue;
            }
            let t = transition(q, &charts[ax.chart], other)?;
            if t.domain.contains(&ax.coord) {
                continue;
            }
            if t.map.iter().any(|(_, m)| m.exponent(&ax.coord) < 0) {
                continue;
            }
            let vanishing: Vec<&String> = t
                .map
                .iter()
                .filter(|(_, m)| m.exponent(&ax.coord) > 0)
                .map(|(n, _)| n)
                .collect();
            let moving = t
                .map
                .iter()
                .filter(|(_, m)| m.exponent(&ax.coord) == 0 && !m.is_one())
                .count();
            if vanishing.len() == 1 && moving == 1 {
                if let Some(k) = axes
                    .iter()
                    .position(|b| b.chart == j && &b.coord == vanishing[0])
                {
                    let (x, y) = (find(&mut parent, i), find(&mut parent, k));
                    parent[x] = y;
                }
            }
        }
    }
    let mut roots: Vec<usize> = Vec::new();
    let mut members: Vec<Vec<Axis>> = Vec::new();
    let mut node_of = vec![0; axes.len()];
    for i in 0..axes.len() {
        let r = find(&mut parent, i);
        let idx = match roots.iter().position(|&x| x == r) {
            Some(k) => k,
            None => {
                roots.push(r);
                members.push(Vec::new());
                roots.len() - 1
            }
        };
        node_of[i] = idx;
        members[idx].push(axes[i].clone());
    }
    let mut graph = DualGraph::new((0..members.len()).map(|i| format!("E{}", i + 1)).collect());
    for i in 0..axes.len() {
        for k in i + 1..axes.len() {
            if axes[i].chart == axes[k].chart && node_of[i] != node_of[k] {
                graph.add_edge(node_of[i], node_of[k]);
            }
        }
    }
    Ok(ExceptionalLocus { graph, members })
}

/// Full pipeline from a bound quiver: relations, generators, charts at the
/// star parameter and the exceptional dual graph.
pub fn surface_dual_graph(bq: &BoundQuiver, star: &str, bound: u32) -> Result<ExceptionalLocus> {
    let rels = commutativize(bq)?;
    let ring = invariant_generators(&bq.quiver, &rels, bound)?;
    let atlas = enumerate_charts(bq, &rels, star)?;
    if let Some(u) = atlas.unresolved.first() {
        return Err(Error::UnresolvedChart(0, u.reason.clone()));
    }
    exceptional_dual_graph(&bq.quiver, &atlas.charts, &ring.generators)
}

/// Generic point of a chart: free coordinates set to 2, 3, 5, 7, ….
pub fn generic_point(chart: &Chart, q: &Quiver) -> BTreeMap<String, Rational> {
    const PRIMES: [i64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    chart
        .free_names(q)
        .into_iter()
        .enumerate()
        .map(|(i, n)| {
            (
                n,
                crate::scalars::rat(PRIMES[i % PRIMES.len()] + (i / PRIMES.len()) as i64 * 41),
            )
        })
        .collect()
}
