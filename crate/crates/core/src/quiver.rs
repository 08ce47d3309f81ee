//! Quivers, paths and elements of the path algebra.
//!
//! Paths compose left to right: `p·q` means "first `p`, then `q`" and is
//! nonzero only when `h(p) = t(q)`.

use crate::error::{Error, Result};
use crate::scalars::{Rational, Ring};
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub tail: String,
    pub head: String,
}

/// A finite quiver. Vertices and arrows keep their declaration order, which
/// every algorithm in the crate uses as the canonical order.
#[derive(Clone, Debug)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
}

impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.arrows == other.arrows
    }
}

impl Eq for Quiver {}

/// A path, stored by vertex/arrow indices into its quiver.
///
/// Ordered by length, then lexicographically by index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Path {
    Trivial(usize),
    Arrows(Vec<usize>),
}

impl Path {
    pub fn len(&self) -> usize {
        match self {
            Path::Trivial(_) => 0,
            Path::Arrows(a) => a.len(),
        }
    }

    /// True for the trivial paths.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, Path::Trivial(_))
    }

    fn key(&self) -> (usize, Vec<usize>) {
        match self {
            Path::Trivial(v) => (0, vec![*v]),
            Path::Arrows(a) => (a.len(), a.clone()),
        }
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite linear combination of paths with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<Path, Rational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_path(p: Path) -> Self {
        Self::from_terms([(p, <Rational as Ring>::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (Path, Rational)>>(terms: I) -> Self {
        let mut out = Self::default();
        for (p, c) in terms {
            out.add_term(p, c);
        }
        out
    }

    fn add_term(&mut self, p: Path, c: Rational) {
        let cur = self
            .terms
            .remove(&p)
            .unwrap_or_else(<Rational as Ring>::zero);
        let s = cur + c;
        if !Ring::is_zero(&s) {
            self.terms.insert(p, s);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &Path) -> Rational {
        self.terms
            .get(p)
            .cloned()
            .unwrap_or_else(<Rational as Ring>::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(p, a)| (p.clone(), a * c)))
    }
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidInput("empty vertex id".into()));
            }
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let mut arrow_index = HashMap::new();
        for (i, a) in arrows.iter().enumerate() {
            if a.name.is_empty() {
                return Err(Error::InvalidInput("empty arrow name".into()));
            }
            for end in [&a.tail, &a.head] {
                if !vertex_index.contains_key(end) {
                    return Err(Error::UnknownVertex(end.clone()));
                }
            }
            if arrow_index.insert(a.name.clone(), i).is_some() {
                return Err(Error::DuplicateArrow(a.name.clone()));
            }
        }
        Ok(Self {
            vertices,
            arrows,
            vertex_index,
            arrow_index,
        })
    }

    /// Convenience constructor from `(name, tail, head)` triples.
    pub fn from_triples(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        Self::new(
            vertices.iter().map(|s| s.to_string()).collect(),
            arrows
                .iter()
                .map(|(n, t, h)| Arrow {
                    name: n.to_string(),
                    tail: t.to_string(),
                    head: h.to_string(),
                })
                .collect(),
        )
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex(&self, id: &str) -> Result<usize> {
        self.vertex_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    pub fn arrow(&self, name: &str) -> Result<usize> {
        self.arrow_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn tail(&self, arrow: usize) -> usize {
        self.vertex_index[&self.arrows[arrow].tail]
    }

    pub fn head(&self, arrow: usize) -> usize {
        self.vertex_index[&self.arrows[arrow].head]
    }

    pub fn trivial(&self, id: &str) -> Result<Path> {
        Ok(Path::Trivial(self.vertex(id)?))
    }

    /// Builds a path from arrow names; an empty list is rejected since a
    /// trivial path needs a vertex.
    pub fn path(&self, names: &[&str]) -> Result<Path> {
        let idx = names
            .iter()
            .map(|n| self.arrow(n))
            .collect::<Result<Vec<_>>>()?;
        self.path_from_indices(idx)
    }

    pub fn path_from_indices(&self, idx: Vec<usize>) -> Result<Path> {
        if idx.is_empty() {
            return Err(Error::InvalidInput(
                "a path needs at least one arrow".into(),
            ));
        }
        for w in idx.windows(2) {
            if self.head(w[0]) != self.tail(w[1]) {
                return Err(Error::NotComposable(self.arrows[w[1]].name.clone()));
            }
        }
        Ok(Path::Arrows(idx))
    }

    pub fn path_tail(&self, p: &Path) -> usize {
        match p {
            Path::Trivial(v) => *v,
            Path::Arrows(a) => self.tail(a[0]),
        }
    }

    pub fn path_head(&self, p: &Path) -> usize {
        match p {
            Path::Trivial(v) => *v,
            Path::Arrows(a) => self.head(*a.last().expect("nonempty path")),
        }
    }

    /// `p·q` when `h(p) = t(q)`, otherwise `None` (the zero element).
    pub fn compose(&self, p: &Path, q: &Path) -> Option<Path> {
        if self.path_head(p) != self.path_tail(q) {
            return None;
        }
        Some(match (p, q) {
            (Path::Trivial(_), _) => q.clone(),
            (_, Path::Trivial(_)) => p.clone(),
            (Path::Arrows(a), Path::Arrows(b)) => {
                Path::Arrows(a.iter().chain(b.iter()).copied().collect())
            }
        })
    }

    /// Product in the path algebra, extended bilinearly from `compose`.
    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (p, a) in x.terms() {
            for (q, b) in y.terms() {
                if let Some(pq) = self.compose(p, q) {
                    out.add_term(pq, a * b);
                }
            }
        }
        out
    }

    /// The unit Σ eᵢ.
    pub fn unit(&self) -> AlgebraElement {
        AlgebraElement::from_terms(
            (0..self.vertices.len()).map(|i| (Path::Trivial(i), <Rational as Ring>::one())),
        )
    }

    /// All paths of length at most `max_len`, ordered by length and then
    /// lexicographically by vertex/arrow declaration index.
    pub fn enumerate_paths(&self, max_len: usize) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.vertices.len()).map(Path::Trivial).collect();
        let mut frontier: Vec<Vec<usize>> = (0..self.arrows.len()).map(|a| vec![a]).collect();
        for _ in 1..=max_len {
            if frontier.is_empty() {
                break;
            }
            frontier.sort();
            out.extend(frontier.iter().cloned().map(Path::Arrows));
            let mut next = Vec::new();
            for p in &frontier {
                let h = self.head(*p.last().expect("nonempty"));
                for a in 0..self.arrows.len() {
                    if self.tail(a) == h {
                        let mut q = p.clone();
                        q.push(a);
                        next.push(q);
                    }
                }
            }
            frontier = next;
        }
        out
    }

    /// Checks that every path in `x` shares one head and one tail.
    pub fn relation(&self, x: AlgebraElement) -> Result<Relation> {
        let mut ends = None;
        for (p, _) in x.terms() {
            let e = (self.path_tail(p), self.path_head(p));
            match ends {
                None => ends = Some(e),
                Some(prev) if prev != e => {
                    return Err(Error::InvalidRelation(format!(
                        "paths {} and {} have different ends",
                        self.path_name(x.terms().next().expect("term").0),
                        self.path_name(p)
                    )))
                }
                _ => {}
            }
        }
        Ok(Relation(x))
    }

    pub fn path_name(&self, p: &Path) -> String {
        match p {
            Path::Trivial(v) => format!("e_{}", self.vertices[*v]),
            Path::Arrows(a) => a
                .iter()
                .map(|&i| self.arrows[i].name.as_str())
                .collect::<Vec<_>>()
                .join("*"),
        }
    }

    pub fn element_name(&self, x: &AlgebraElement) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (p, c)) in x.terms().enumerate() {
            c.write_term(&self.path_name(p), i == 0, &mut s);
        }
        s
    }

    /// Graphviz rendering.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph quiver {\n");
        for v in &self.vertices {
            let _ = writeln!(s, "  \"{v}\";");
        }
        for a in &self.arrows {
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                a.tail, a.head, a.name
            );
        }
        s.push_str("}\n");
        s
    }

    /// True when the quiver has no oriented cycle (including loops).
    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in 0..self.arrows.len() {
            indeg[self.head(a)] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in 0..self.arrows.len() {
                if self.tail(a) == v {
                    let h = self.head(a);
                    indeg[h] -= 1;
                    if indeg[h] == 0 {
                        stack.push(h);
                    }
                }
            }
        }
        seen == n
    }
}

/// An element of the path algebra whose paths share one head and one tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation(AlgebraElement);

impl Relation {
    pub fn element(&self) -> &AlgebraElement {
        &self.0
    }

    /// `lhs - rhs` for two paths, the shape of every relation in the examples.
    pub fn binomial(q: &Quiver, lhs: &[&str], rhs: &[&str]) -> Result<Self> {
        let one = <Rational as Ring>::one();
        let x = AlgebraElement::from_terms([(q.path(lhs)?, one.clone()), (q.path(rhs)?, -one)]);
        q.relation(x)
    }
}

/// A quiver together with relations generating a two-sided ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundQuiver {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
}

impl BoundQuiver {
    pub fn new(quiver: Quiver, relations: Vec<Relation>) -> Self {
        Self { quiver, relations }
    }

    /// Builds from binomial relations given as pairs of arrow-name lists.
    pub fn with_binomials(quiver: Quiver, rels: &[(&[&str], &[&str])]) -> Result<Self> {
        let relations = rels
            .iter()
            .map(|(l, r)| Relation::binomial(&quiver, l, r))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { quiver, relations })
    }
}
