//! Finite-dimensional representations of quivers.
//!
//! Arrow `a` acts by a matrix of shape `α_{t(a)} × α_{h(a)}`: row vectors at
//! the tail are multiplied on the right and land at the head, so a path
//! evaluates to the product of its arrow matrices in path order.
//!
//! Entries are (Laurent) polynomials. Plain rational data uses constants;
//! chart representations carry monomials in the chart coordinates.

use crate::error::{Error, Result};
use crate::quiver::{AlgebraElement, Path, Quiver, Relation};
use crate::scalars::{Matrix, Polynomial, Rational};

pub type Entry = Polynomial<Rational>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    quiver: Quiver,
    dims: Vec<usize>,
    matrices: Vec<Matrix<Entry>>,
}

/// Result of evaluating relations on a representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub satisfied: bool,
    /// Indices of relations that do not evaluate to zero.
    pub violated: Vec<usize>,
}

impl Representation {
    pub fn new(quiver: Quiver, dims: Vec<usize>, matrices: Vec<Matrix<Entry>>) -> Result<Self> {
        if dims.len() != quiver.num_vertices() {
            return Err(Error::InvalidInput(format!(
                "expected {} dimensions, got {}",
                quiver.num_vertices(),
                dims.len()
            )));
        }
        if matrices.len() != quiver.num_arrows() {
            return Err(Error::InvalidInput(format!(
                "expected {} matrices, got {}",
                quiver.num_arrows(),
                matrices.len()
            )));
        }
        for (a, m) in matrices.iter().enumerate() {
            let expected = (dims[quiver.tail(a)], dims[quiver.head(a)]);
            if m.shape() != expected {
                return Err(Error::ShapeMismatch {
                    arrow: quiver.arrows()[a].name.clone(),
                    expected,
                    got: m.shape(),
                });
            }
        }
        Ok(Self {
            quiver,
            dims,
            matrices,
        })
    }

    /// The zero representation with the given dimension vector.
    pub fn zero(quiver: Quiver, dims: Vec<usize>) -> Result<Self> {
        let matrices = (0..quiver.num_arrows())
            .map(|a| {
                Matrix::zeros(
                    dims.get(quiver.tail(a)).copied().unwrap_or(0),
                    dims.get(quiver.head(a)).copied().unwrap_or(0),
                )
            })
            .collect();
        Self::new(quiver, dims, matrices)
    }

    /// Dimension vector (1,…,1) with the listed arrows set to the given
    /// scalars and every other arrow zero.
    pub fn thin(quiver: Quiver, values: &[(&str, Entry)]) -> Result<Self> {
        let n = quiver.num_vertices();
        let mut rep = Self::zero(quiver, vec![1; n])?;
        for (name, v) in values {
            let a = rep.quiver.arrow(name)?;
            rep.matrices[a] = Matrix::scalar(1, v.clone());
        }
        Ok(rep)
    }

    /// Thin representation whose arrows are nonzero exactly on `support`
    /// (a bit mask over arrows), with every nonzero value equal to 1.
    pub fn thin_support(quiver: Quiver, support: u64) -> Result<Self> {
        let n = quiver.num_vertices();
        let mut rep = Self::zero(quiver, vec![1; n])?;
        for a in 0..rep.quiver.num_arrows() {
            if support >> a & 1 == 1 {
                rep.matrices[a] = Matrix::identity(1);
            }
        }
        Ok(rep)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn matrix(&self, arrow: usize) -> &Matrix<Entry> {
        &self.matrices[arrow]
    }

    pub fn matrices(&self) -> &[Matrix<Entry>] {
        &self.matrices
    }

    pub fn is_thin(&self) -> bool {
        self.dims.iter().all(|&d| d <= 1)
    }

    pub fn arrow_is_nonzero(&self, arrow: usize) -> bool {
        !self.matrices[arrow].is_zero()
    }

    pub fn evaluate_path(&self, p: &Path) -> Matrix<Entry> {
        match p {
            Path::Trivial(v) => Matrix::identity(self.dims[*v]),
            Path::Arrows(a) => {
                let mut m = self.matrices[a[0]].clone();
                for &b in &a[1..] {
                    m = m.mul(&self.matrices[b]);
                }
                m
            }
        }
    }

    /// Σ λₚ f_p. Returns `None` if the element mixes endpoints.
    pub fn evaluate(&self, x: &AlgebraElement) -> Option<Matrix<Entry>> {
        let mut acc: Option<Matrix<Entry>> = None;
        for (p, c) in x.terms() {
            let m = self.evaluate_path(p).scale(&Entry::constant(c.clone()));
            acc = Some(match acc {
                None => m,
                Some(prev) if prev.shape() == m.shape() => prev.add(&m),
                Some(_) => return None,
            });
        }
        Some(acc.unwrap_or_else(|| Matrix::zeros(0, 0)))
    }

    pub fn check_relations(&self, rels: &[Relation]) -> RelationCheck {
        let violated: Vec<usize> = rels
            .iter()
            .enumerate()
            .filter(|(_, r)| !self.evaluate(r.element()).is_some_and(|m| m.is_zero()))
            .map(|(i, _)| i)
            .collect();
        RelationCheck {
            satisfied: violated.is_empty(),
            violated,
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.quiver != other.quiver {
            return Err(Error::InvalidInput(
                "direct sum of representations of different quivers".into(),
            ));
        }
        let dims = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a + b)
            .collect();
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| Matrix::direct_sum(a, b))
            .collect();
        Self::new(self.quiver.clone(), dims, matrices)
    }

    /// Vertex sets `S` inside the support such that every nonzero arrow with
    /// tail in `S` has its head in `S`. For thin representations these are
    /// exactly the dimension vectors of subrepresentations.
    ///
    /// Ordered by size, then lexicographically by vertex index; includes the
    /// empty set and the full support.
    pub fn closed_subsets(&self) -> Result<Vec<Vec<usize>>> {
        if !self.is_thin() {
            return Err(Error::Regime(
                "closed subsets need every dimension at most 1".into(),
            ));
        }
        let support: Vec<usize> = (0..self.dims.len())
            .filter(|&i| self.dims[i] == 1)
            .collect();
        if support.len() > 20 {
            return Err(Error::Regime(
                "support too large for subset enumeration".into(),
            ));
        }
        let edges: Vec<(usize, usize)> = (0..self.quiver.num_arrows())
            .filter(|&a| self.arrow_is_nonzero(a))
            .map(|a| (self.quiver.tail(a), self.quiver.head(a)))
            .collect();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << support.len()) {
            let set: Vec<usize> = support
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            let mut inside = vec![false; self.dims.len()];
            for &v in &set {
                inside[v] = true;
            }
            if edges.iter().all(|&(t, h)| !inside[t] || inside[h]) {
                out.push(set);
            }
        }
        out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn c(n: i64) -> Entry {
        Entry::constant(rat(n))
    }

    fn kronecker() -> Quiver {
        Quiver::from_triples(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]).unwrap()
    }

    #[test]
    fn path_evaluation() {
        let q =
            Quiver::from_triples(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
        let r = Representation::thin(q.clone(), &[("a", c(2)), ("b", c(3))]).unwrap();
        assert_eq!(
            r.evaluate_path(&q.path(&["a", "b"]).unwrap()),
            Matrix::scalar(1, c(6))
        );
        assert_eq!(
            r.evaluate_path(&q.trivial("2").unwrap()),
            Matrix::identity(1)
        );
    }

    #[test]
    fn symbolic_chart_entry() {
        let z3 =
            Quiver::from_triples(&["1", "2", "3"], &[("c1", "1", "2"), ("a1", "2", "1")]).unwrap();
        let ab = Entry::parse("a*b").unwrap();
        let r = Representation::thin(z3.clone(), &[("c1", c(1)), ("a1", ab.clone())]).unwrap();
        assert_eq!(
            r.evaluate_path(&z3.path(&["c1", "a1"]).unwrap()),
            Matrix::scalar(1, ab)
        );
    }

    #[test]
    fn relation_check() {
        let q = Quiver::from_triples(
            &["1", "2", "3"],
            &[("a", "1", "2"), ("b", "1", "2"), ("c", "2", "3")],
        )
        .unwrap();
        let rel = vec![Relation::binomial(&q, &["a", "c"], &["b", "c"]).unwrap()];
        let m = Representation::thin(q.clone(), &[("a", c(1)), ("b", c(1)), ("c", c(1))]).unwrap();
        assert!(m.check_relations(&rel).satisfied);
        let n = Representation::thin(q.clone(), &[("a", c(1)), ("c", c(1))]).unwrap();
        let res = n.check_relations(&rel);
        assert!(!res.satisfied);
        assert_eq!(res.violated, vec![0]);
        let z = Representation::zero(q, vec![0, 0, 0]).unwrap();
        assert!(z.check_relations(&rel).satisfied);
    }

    #[test]
    fn direct_sums() {
        let q = Quiver::from_triples(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let x = Representation::thin(q.clone(), &[("a", c(1))]).unwrap();
        let y = Representation::zero(q.clone(), vec![1, 0]).unwrap();
        let s = x.direct_sum(&y).unwrap();
        assert_eq!(s.dims(), &[2, 1]);
        assert_eq!(
            s.matrix(0),
            &Matrix::from_rows(vec![vec![c(1)], vec![c(0)]]).unwrap()
        );
        let zero = Representation::zero(q.clone(), vec![0, 0]).unwrap();
        assert_eq!(x.direct_sum(&zero).unwrap(), x);
        assert_eq!(x.direct_sum(&x).unwrap().dims(), &[2, 2]);
    }

    #[test]
    fn shape_errors() {
        let q = kronecker();
        let bad = Representation::new(
            q,
            vec![1, 1],
            vec![Matrix::zeros(1, 2), Matrix::zeros(1, 1)],
        );
        assert!(matches!(bad, Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn closed_subsets_of_kronecker() {
        let q = kronecker();
        let r = Representation::thin(q.clone(), &[("a", c(1)), ("b", c(1))]).unwrap();
        assert_eq!(
            r.closed_subsets().unwrap(),
            vec![vec![], vec![1], vec![0, 1]]
        );
        let z = Representation::thin(q.clone(), &[]).unwrap();
        assert_eq!(
            z.closed_subsets().unwrap(),
            vec![vec![], vec![0], vec![1], vec![0, 1]]
        );
        let big = Representation::zero(q, vec![2, 1]).unwrap();
        assert!(matches!(big.closed_subsets(), Err(Error::Regime(_))));
    }
}
