//! Finite subgroups of GL(n), their character tables, McKay quivers and the
//! dictionary between McKay quivers of SL(2) groups and ADE dual graphs.
//!
//! Cyclic groups `1/r(a₁,…,aₙ)` are generated by `g = diag(εᵃ¹,…,εᵃⁿ)` with
//! `ε = e^{2πi/r}`; the character `χⱼ` sends `gᵏ` to `ε^{jk}`. Since
//! `ρⱼ ⊗ V = ⊕ᵢ ρ_{j+aᵢ}`, the McKay quiver has an arrow `ρ_{j+aᵢ} → ρⱼ`
//! labelled by the i-th variable.
//!
//! The binary dihedral group `BD₄ₙ` is generated by `ψ = diag(ε₂ₙ, ε₂ₙ⁻¹)`
//! and `τ = [[0, i], [i, 0]]`.

use crate::error::{Error, Result};
use crate::graph::DualGraph;
use crate::quiver::{Arrow, BoundQuiver, Quiver, Relation};
use crate::scalars::{rat, Cyclotomic, Rational, Ring};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Cyclic { r: u32, weights: Vec<u32> },
    BinaryDihedral { n: u32 },
}

impl GroupKind {
    /// Parses `1/r(a,b,…)` or `BD4n` (for example `BD8`).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || {
            Error::InvalidGroup(format!(
                "cannot parse `{s}`; expected `1/r(a,b)` or `BD<4n>`"
            ))
        };
        if let Some(rest) = s.strip_prefix("BD") {
            let order: u32 = rest.parse().map_err(|_| bad())?;
            if !order.is_multiple_of(4) || order < 8 {
                return Err(Error::InvalidGroup(format!(
                    "binary dihedral order must be a multiple of 4 and at least 8, got {order}"
                )));
            }
            return Ok(GroupKind::BinaryDihedral { n: order / 4 });
        }
        let rest = s.strip_prefix("1/").ok_or_else(bad)?;
        let open = rest.find('(').ok_or_else(bad)?;
        let inner = rest[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let r: u32 = rest[..open].trim().parse().map_err(|_| bad())?;
        let weights = inner
            .split(',')
            .map(|w| w.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Self::cyclic(r, weights)
    }

    pub fn cyclic(r: u32, weights: Vec<u32>) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidGroup("group order must be positive".into()));
        }
        if weights.is_empty() {
            return Err(Error::InvalidGroup("at least one weight is needed".into()));
        }
        if let Some(w) = weights.iter().find(|&&w| w >= r) {
            return Err(Error::InvalidGroup(format!(
                "weight {w} is not below the order {r}"
            )));
        }
        Ok(GroupKind::Cyclic { r, weights })
    }

    pub fn order(&self) -> u32 {
        match self {
            GroupKind::Cyclic { r, .. } => *r,
            GroupKind::BinaryDihedral { n } => 4 * n,
        }
    }

    /// Size of the matrices in the defining representation.
    pub fn rank(&self) -> usize {
        match self {
            GroupKind::Cyclic { weights, .. } => weights.len(),
            GroupKind::BinaryDihedral { .. } => 2,
        }
    }

    /// Whether the group lies in SL: weights summing to 0 mod r, or binary dihedral.
    pub fn is_sl(&self) -> bool {
        match self {
            GroupKind::Cyclic { r, weights } => {
                weights.iter().map(|&w| w as u64).sum::<u64>() % *r as u64 == 0
            }
            GroupKind::BinaryDihedral { .. } => true,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Cyclic { r, weights } => {
                let w: Vec<String> = weights.iter().map(|w| w.to_string()).collect();
                write!(f, "1/{r}({})", w.join(","))
            }
            GroupKind::BinaryDihedral { n } => write!(f, "BD{}", 4 * n),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConjugacyClass {
    pub name: String,
    pub size: u32,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Character {
    pub name: String,
    pub dim: u32,
    /// Values on the conjugacy classes, in class order.
    pub values: Vec<Cyclotomic>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GroupData {
    pub kind: GroupKind,
    pub classes: Vec<ConjugacyClass>,
    /// Irreducible characters; the first is trivial.
    pub irreducibles: Vec<Character>,
    /// Character of the defining representation.
    pub natural: Vec<Cyclotomic>,
}

fn cyc_int(n: i64) -> Cyclotomic {
    Cyclotomic::rational(rat(n))
}

/// Builds the character table from closed formulas.
pub fn character_table(kind: &GroupKind) -> GroupData {
    match kind {
        GroupKind::Cyclic { r, weights } => {
            let r = *r as u64;
            let classes = (0..r)
                .map(|k| ConjugacyClass {
                    name: format!("g^{k}"),
                    size: 1,
                })
                .collect();
            let irreducibles = (0..r)
                .map(|j| Character {
                    name: format!("rho{j}"),
                    dim: 1,
                    values: (0..r)
                        .map(|k| Cyclotomic::root(r, (j * k) as i64))
                        .collect(),
                })
                .collect();
            let natural = (0..r)
                .map(|k| {
                    weights.iter().fold(Cyclotomic::zero(), |acc, &a| {
                        acc.add(&Cyclotomic::root(r, a as i64 * k as i64))
                    })
                })
                .collect();
            GroupData {
                kind: kind.clone(),
                classes,
                irreducibles,
                natural,
            }
        }
        GroupKind::BinaryDihedral { n } => binary_dihedral(*n),
    }
}

fn binary_dihedral(n: u32) -> GroupData {
    let two_n = 2 * n as u64;
    let zeta = |k: i64| Cyclotomic::root(two_n, k);
    let i_unit = Cyclotomic::root(4, 1);
    // classes: e, ψⁿ, ψᵏ (1 ≤ k < n), τ, ψτ
    let mut classes = vec![
        ConjugacyClass {
            name: "e".into(),
            size: 1,
        },
        ConjugacyClass {
            name: format!("psi^{n}"),
            size: 1,
        },
    ];
    for k in 1..n {
        classes.push(ConjugacyClass {
            name: format!("psi^{k}"),
            size: 2,
        });
    }
    classes.push(ConjugacyClass {
        name: "tau".into(),
        size: n,
    });
    classes.push(ConjugacyClass {
        name: "psi*tau".into(),
        size: n,
    });
    let powers: Vec<i64> = std::iter::once(0)
        .chain(std::iter::once(n as i64))
        .chain(1..n as i64)
        .collect();

    // one-dimensional characters: ψ ↦ s, τ ↦ t with t² = sⁿ
    let t_minus = if n.is_multiple_of(2) {
        cyc_int(1)
    } else {
        i_unit.clone()
    };
    let linear = [
        (1i64, cyc_int(1)),
        (1, cyc_int(-1)),
        (-1, t_minus.clone()),
        (-1, t_minus.neg()),
    ];
    let mut irreducibles = Vec::new();
    for (idx, (s, t)) in linear.iter().enumerate() {
        let mut values: Vec<Cyclotomic> =
            powers.iter().map(|&k| cyc_int(s.pow(k as u32))).collect();
        values.push(t.clone());
        values.push(t.mul(&cyc_int(*s)));
        irreducibles.push(Character {
            name: format!("rho{idx}"),
            dim: 1,
            values,
        });
    }
    // two-dimensional characters: ψ ↦ diag(ζˡ, ζ⁻ˡ), trace zero off the cyclic part
    let two_dim = |l: i64| -> Vec<Cyclotomic> {
        let mut values: Vec<Cyclotomic> = powers
            .iter()
            .map(|&k| zeta(l * k).add(&zeta(-l * k)))
            .collect();
        values.push(cyc_int(0));
        values.push(cyc_int(0));
        values
    };
    for l in 1..n as i64 {
        irreducibles.push(Character {
            name: format!("rho{}", 3 + l),
            dim: 2,
            values: two_dim(l),
        });
    }
    GroupData {
        kind: GroupKind::BinaryDihedral { n },
        classes,
        irreducibles,
        natural: two_dim(1),
    }
}

impl GroupData {
    pub fn order(&self) -> u32 {
        self.classes.iter().map(|c| c.size).sum()
    }

    /// `(1/|G|) Σ |C| χ(C) conj(ψ(C))`.
    pub fn inner_product(&self, chi: &[Cyclotomic], psi: &[Cyclotomic]) -> Cyclotomic {
        let total = self
            .classes
            .iter()
            .zip(chi.iter().zip(psi))
            .fold(Cyclotomic::zero(), |acc, (c, (x, y))| {
                acc.add(&x.mul(&y.conj()).scale(&rat(c.size as i64)))
            });
        total.scale(&Rational::new(1.into(), (self.order() as i64).into()))
    }

    /// Gram matrix of the irreducible characters.
    pub fn gram(&self) -> Vec<Vec<Cyclotomic>> {
        self.irreducibles
            .iter()
            .map(|a| {
                self.irreducibles
                    .iter()
                    .map(|b| self.inner_product(&a.values, &b.values))
                    .collect()
            })
            .collect()
    }

    pub fn is_orthonormal(&self) -> bool {
        self.gram().iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, x)| x.as_rational() == Some(rat((i == j) as i64)))
        })
    }

    /// Multiplicity of ρ₁ in ρ₂ ⊗ V.
    pub fn multiplicity(&self, rho1: usize, rho2: usize) -> Result<u32> {
        let prod: Vec<Cyclotomic> = self.irreducibles[rho2]
            .values
            .iter()
            .zip(&self.natural)
            .map(|(a, b)| a.mul(b))
            .collect();
        let ip = self.inner_product(&self.irreducibles[rho1].values, &prod);
        ip.as_rational()
            .filter(|q| q.is_integer() && *q >= rat(0))
            .and_then(|q| crate::scalars::rational_to_i64(&q))
            .map(|k| k as u32)
            .ok_or_else(|| {
                Error::InvalidGroup(format!("inner product {ip} is not a nonnegative integer"))
            })
    }
}

/// Variable names used as arrow labels: x, y, z, w, then x1, x2, ….
pub fn variable_names(n: usize) -> Vec<String> {
    const SHORT: [&str; 4] = ["x", "y", "z", "w"];
    if n <= SHORT.len() {
        SHORT[..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

/// A quiver whose vertices carry dimensions and one of which is marked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McKayQuiver {
    pub quiver: Quiver,
    /// Dimension of the representation at each vertex.
    pub dims: Vec<u32>,
    /// Display label of each arrow (a variable name for cyclic groups).
    pub labels: Vec<String>,
    pub star: usize,
}

impl McKayQuiver {
    /// Number of arrows from `t` to `h`.
    pub fn arrow_count(&self, t: usize, h: usize) -> usize {
        (0..self.quiver.num_arrows())
            .filter(|&a| self.quiver.tail(a) == t && self.quiver.head(a) == h)
            .count()
    }

    /// Arrow multiset as sorted `(tail, head, label)` triples.
    pub fn labelled_arrows(&self) -> Vec<(usize, usize, String)> {
        let mut v: Vec<_> = (0..self.quiver.num_arrows())
            .map(|a| {
                (
                    self.quiver.tail(a),
                    self.quiver.head(a),
                    self.labels[a].clone(),
                )
            })
            .collect();
        v.sort();
        v
    }

    pub fn has_loops(&self) -> bool {
        (0..self.quiver.num_arrows()).any(|a| self.quiver.tail(a) == self.quiver.head(a))
    }

    /// `uv = vu` for every pair of labels at every vertex, when each label
    /// leaves each vertex exactly once (cyclic groups). These present the
    /// skew group ring of the polynomial ring.
    pub fn commutation_relations(&self) -> Option<Vec<Relation>> {
        let q = &self.quiver;
        let mut labels: Vec<&String> = self.labels.iter().collect();
        labels.sort();
        labels.dedup();
        let mut out_arrow = BTreeMap::new();
        for a in 0..q.num_arrows() {
            if out_arrow.insert((q.tail(a), &self.labels[a]), a).is_some() {
                return None;
            }
        }
        if out_arrow.len() != labels.len() * q.num_vertices() {
            return None;
        }
        let step = |v: usize, l: &String| out_arrow[&(v, l)];
        let mut rels = Vec::new();
        for v in 0..q.num_vertices() {
            for (i, u) in labels.iter().enumerate() {
                for w in &labels[i + 1..] {
                    let (a, b) = (step(v, u), step(v, w));
                    let uw = [
                        q.arrows()[a].name.as_str(),
                        q.arrows()[step(q.head(a), w)].name.as_str(),
                    ];
                    let wu = [
                        q.arrows()[b].name.as_str(),
                        q.arrows()[step(q.head(b), u)].name.as_str(),
                    ];
                    rels.push(Relation::binomial(q, &uw, &wu).expect("paths share endpoints"));
                }
            }
        }
        Some(rels)
    }

    /// The quiver with its commutation relations, if it has them.
    pub fn to_bound_quiver(&self) -> BoundQuiver {
        BoundQuiver::new(
            self.quiver.clone(),
            self.commutation_relations().unwrap_or_default(),
        )
    }

    pub fn to_dot(&self) -> String {
        use std::fmt::Write as _;
        let q = &self.quiver;
        let mut s = String::from("digraph mckay {\n");
        for (i, v) in q.vertices().iter().enumerate() {
            let shape = if i == self.star {
                ", shape=doublecircle"
            } else {
                ""
            };
            let _ = writeln!(s, "  \"{v}\" [label=\"{}\"{shape}];", self.dims[i]);
        }
        for (a, arrow) in q.arrows().iter().enumerate() {
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                arrow.tail, arrow.head, self.labels[a]
            );
        }
        s.push_str("}\n");
        s
    }
}

fn build_quiver(
    vertices: Vec<String>,
    arrows: Vec<(usize, usize, String)>,
    dims: Vec<u32>,
    star: usize,
) -> McKayQuiver {
    let mut seen: BTreeMap<(usize, usize, String), usize> = Default::default();
    let mut list = Vec::new();
    let mut labels = Vec::new();
    for (t, h, label) in arrows {
        let k = seen.entry((t, h, label.clone())).or_insert(0);
        *k += 1;
        let name = if *k == 1 {
            format!("{label}_{t}_{h}")
        } else {
            format!("{label}_{t}_{h}_{k}")
        };
        list.push(Arrow {
            name,
            tail: vertices[t].clone(),
            head: vertices[h].clone(),
        });
        labels.push(label);
    }
    McKayQuiver {
        quiver: Quiver::new(vertices, list).expect("generated names are unique"),
        dims,
        labels,
        star,
    }
}

/// The McKay quiver: `dim Hom(ρ₁, ρ₂ ⊗ V)` arrows from ρ₁ to ρ₂.
pub fn mckay_quiver(g: &GroupData) -> Result<McKayQuiver> {
    let m = g.irreducibles.len();
    let mut arrows = Vec::new();
    match &g.kind {
        GroupKind::Cyclic { r, weights } => {
            // arrows ρ_{j+a} → ρ_j labelled by the variable of weight a
            let names = variable_names(weights.len());
            for t in 0..m {
                for h in 0..m {
                    let mult = g.multiplicity(t, h)?;
                    let mut labels: Vec<&String> = weights
                        .iter()
                        .zip(&names)
                        .filter(|(&a, _)| (h as u32 + a) % r == t as u32)
                        .map(|(_, n)| n)
                        .collect();
                    labels.sort();
                    if labels.len() != mult as usize {
                        return Err(Error::InvalidGroup(
                            "character table disagrees with weights".into(),
                        ));
                    }
                    arrows.extend(labels.into_iter().map(|l| (t, h, l.clone())));
                }
            }
        }
        GroupKind::BinaryDihedral { .. } => {
            for t in 0..m {
                for h in 0..m {
                    for _ in 0..g.multiplicity(t, h)? {
                        arrows.push((t, h, "a".to_string()));
                    }
                }
            }
        }
    }
    let dims = g.irreducibles.iter().map(|c| c.dim).collect();
    Ok(build_quiver(
        (0..m).map(|i| i.to_string()).collect(),
        arrows,
        dims,
        0,
    ))
}

/// Deletes the star and merges opposite arrow pairs into edges.
pub fn mckay_to_dual_graph(m: &McKayQuiver) -> Result<DualGraph> {
    let q = &m.quiver;
    let keep: Vec<usize> = (0..q.num_vertices()).filter(|&v| v != m.star).collect();
    let mut g = DualGraph::new(keep.iter().map(|&v| q.vertices()[v].clone()).collect());
    for (i, &u) in keep.iter().enumerate() {
        if m.arrow_count(u, u) > 0 {
            return Err(Error::NotDoubled(format!(
                "loop at vertex {}",
                q.vertices()[u]
            )));
        }
        for (j, &v) in keep.iter().enumerate().skip(i + 1) {
            let (fw, bw) = (m.arrow_count(u, v), m.arrow_count(v, u));
            if fw != bw {
                return Err(Error::NotDoubled(format!(
                    "{fw} arrows {} -> {} but {bw} back",
                    q.vertices()[u],
                    q.vertices()[v]
                )));
            }
            if fw > 1 {
                return Err(Error::NotDoubled(format!(
                    "{fw} arrow pairs between {} and {}",
                    q.vertices()[u],
                    q.vertices()[v]
                )));
            }
            if fw == 1 {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdeFamily {
    A,
    D,
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdeType {
    pub family: AdeFamily,
    pub rank: usize,
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.family {
            AdeFamily::A => 'A',
            AdeFamily::D => 'D',
            AdeFamily::E => 'E',
        };
        write!(f, "{c}{}", self.rank)
    }
}

/// Classifies a graph as a simply laced Dynkin diagram.
pub fn classify_ade(d: &DualGraph) -> Result<AdeType> {
    let n = d.len();
    if n == 0 {
        return Err(Error::NotAde("empty graph".into()));
    }
    if !d.is_connected() {
        return Err(Error::NotAde("graph is not connected".into()));
    }
    if d.edges.len() != n - 1 {
        return Err(Error::NotAde("graph contains a cycle".into()));
    }
    let branches: Vec<usize> = (0..n).filter(|&v| d.degree(v) > 2).collect();
    match branches.as_slice() {
        [] => Ok(AdeType {
            family: AdeFamily::A,
            rank: n,
        }),
        [b] if d.degree(*b) == 3 => {
            let mut arms: Vec<usize> = d
                .neighbours(*b)
                .into_iter()
                .map(|v| arm_length(d, *b, v))
                .collect();
            arms.sort();
            match arms.as_slice() {
                [1, 1, _] => Ok(AdeType {
                    family: AdeFamily::D,
                    rank: n,
                }),
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => Ok(AdeType {
                    family: AdeFamily::E,
                    rank: n,
                }),
                _ => Err(Error::NotAde(format!("arms of lengths {arms:?}"))),
            }
        }
        _ => Err(Error::NotAde(
            "more than one branch point or a vertex of degree above 3".into(),
        )),
    }
}

fn arm_length(d: &DualGraph, from: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, start, 1);
    loop {
        let next: Vec<usize> = d
            .neighbours(cur)
            .into_iter()
            .filter(|&w| w != prev)
            .collect();
        match next.as_slice() {
            [w] => {
                prev = cur;
                cur = *w;
                len += 1;
            }
            _ => return len,
        }
    }
}

/// Highest root of a simply laced Dynkin diagram, as coefficients on the nodes.
fn highest_root(d: &DualGraph) -> Vec<i64> {
    let n = d.len();
    let pairing = |beta: &[i64], i: usize| -> i64 {
        2 * beta[i] - d.neighbours(i).iter().map(|&j| beta[j]).sum::<i64>()
    };
    let mut beta = vec![0; n];
    beta[0] = 1;
    loop {
        match (0..n).find(|&i| pairing(&beta, i) < 0) {
            Some(i) => beta[i] += 1,
            None => return beta,
        }
    }
}

/// Adds the extending vertex (the star) to a Dynkin diagram and doubles
/// every edge. Vertex dimensions are the coefficients of the null root.
pub fn dual_graph_to_mckay(d: &DualGraph) -> Result<McKayQuiver> {
    classify_ade(d)?;
    let n = d.len();
    let theta = highest_root(d);
    let pairing =
        |i: usize| -> i64 { 2 * theta[i] - d.neighbours(i).iter().map(|&j| theta[j]).sum::<i64>() };
    let star = 0;
    let mut arrows = Vec::new();
    for i in 0..n {
        for _ in 0..pairing(i) {
            arrows.push((star, i + 1, "a".to_string()));
            arrows.push((i + 1, star, "a".to_string()));
        }
    }
    for &(a, b) in &d.edges {
        arrows.push((a + 1, b + 1, "a".to_string()));
        arrows.push((b + 1, a + 1, "a".to_string()));
    }
    arrows.sort();
    let dims = std::iter::once(1)
        .chain(theta.iter().map(|&c| c as u32))
        .collect();
    let names: Vec<String> = std::iter::once("*".to_string())
        .chain(d.nodes.iter().cloned())
        .collect();
    if names[1..].contains(&names[0]) {
        return Err(Error::InvalidInput(
            "node name `*` is reserved for the star".into(),
        ));
    }
    Ok(build_quiver(names, arrows, dims, star))
}

/// Dynkin diagram of the given type, with nodes named `1..=rank`.
pub fn dynkin(t: AdeType) -> Result<DualGraph> {
    let n = t.rank;
    // D and E hang one extra node off a path of length n − 1
    let fork = match t.family {
        AdeFamily::A if n >= 1 => return Ok(DualGraph::path(n)),
        AdeFamily::D if n >= 4 => 1,
        AdeFamily::E if (6..=8).contains(&n) => 2,
        _ => return Err(Error::NotAde(format!("no Dynkin diagram {t}"))),
    };
    let mut g = DualGraph::path(n - 1);
    g.nodes.push(n.to_string());
    g.add_edge(fork, n - 1);
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_groups() {
        assert_eq!(
            GroupKind::parse("1/3(1,2)").unwrap(),
            GroupKind::Cyclic {
                r: 3,
                weights: vec![1, 2]
            }
        );
        assert_eq!(
            GroupKind::parse("BD8").unwrap(),
            GroupKind::BinaryDihedral { n: 2 }
        );
        assert!(GroupKind::parse("BD6").is_err());
        assert!(GroupKind::parse("1/3(1,3)").is_err());
        assert_eq!(
            GroupKind::parse("1/5(1,2)").unwrap().to_string(),
            "1/5(1,2)"
        );
    }

    #[test]
    fn tables_are_orthonormal() {
        for n in 2..=6 {
            let g = character_table(&GroupKind::BinaryDihedral { n });
            assert_eq!(g.order(), 4 * n);
            assert!(g.is_orthonormal(), "BD{}", 4 * n);
            let sum: u32 = g.irreducibles.iter().map(|c| c.dim * c.dim).sum();
            assert_eq!(sum, 4 * n);
        }
        let g = character_table(&GroupKind::Cyclic {
            r: 5,
            weights: vec![1, 2],
        });
        assert!(g.is_orthonormal());
    }

    #[test]
    fn bd8_quiver() {
        let g = character_table(&GroupKind::parse("BD8").unwrap());
        assert_eq!(g.irreducibles.iter().filter(|c| c.dim == 1).count(), 4);
        let m = mckay_quiver(&g).unwrap();
        assert_eq!(m.dims, vec![1, 1, 1, 1, 2]);
        assert_eq!(m.quiver.num_arrows(), 8);
        for v in 0..4 {
            assert_eq!(m.arrow_count(v, 4), 1);
            assert_eq!(m.arrow_count(4, v), 1);
        }
        let d = mckay_to_dual_graph(&m).unwrap();
        assert_eq!(classify_ade(&d).unwrap().to_string(), "D4");
    }

    #[test]
    fn trivial_group_has_two_loops() {
        let m = mckay_quiver(&character_table(&GroupKind::parse("1/1(0,0)").unwrap())).unwrap();
        assert_eq!(m.quiver.num_vertices(), 1);
        assert_eq!(m.quiver.num_arrows(), 2);
    }

    #[test]
    fn classification() {
        assert_eq!(classify_ade(&DualGraph::path(2)).unwrap().to_string(), "A2");
        let mut tri = DualGraph::path(3);
        tri.add_edge(0, 2);
        assert!(classify_ade(&tri).is_err());
        for (fam, rank) in [
            (AdeFamily::E, 6),
            (AdeFamily::E, 7),
            (AdeFamily::E, 8),
            (AdeFamily::D, 5),
        ] {
            let t = AdeType { family: fam, rank };
            assert_eq!(classify_ade(&dynkin(t).unwrap()).unwrap(), t);
        }
    }

    #[test]
    fn extended_diagrams() {
        let m = dual_graph_to_mckay(&DualGraph::path(1)).unwrap();
        assert_eq!(m.dims, vec![1, 1]);
        assert_eq!(m.arrow_count(0, 1), 2);
        let e8 = dynkin(AdeType {
            family: AdeFamily::E,
            rank: 8,
        })
        .unwrap();
        let m = dual_graph_to_mckay(&e8).unwrap();
        let mut dims = m.dims.clone();
        dims.sort();
        assert_eq!(dims, vec![1, 2, 2, 3, 3, 4, 4, 5, 6]);
    }
}
