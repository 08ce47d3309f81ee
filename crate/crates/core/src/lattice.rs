//! Hilbert bases of monoids `{m ∈ ℕᵏ : linear constraints}` and the
//! presentation of the algebra they generate modulo binomial moves.
//!
//! This is the shared engine behind quiver invariant rings and abelian
//! invariant rings.

use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// `Σ coeffs[i]·m[i] = 0`, or `≡ 0 mod modulus` when a modulus is given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<i64>,
    pub modulus: Option<i64>,
}

impl Constraint {
    pub fn equal_zero(coeffs: Vec<i64>) -> Self {
        Self {
            coeffs,
            modulus: None,
        }
    }

    pub fn modular(coeffs: Vec<i64>, modulus: i64) -> Self {
        Self {
            coeffs,
            modulus: Some(modulus),
        }
    }

    pub fn holds(&self, v: &[u32]) -> bool {
        let s: i64 = self.coeffs.iter().zip(v).map(|(c, &x)| c * x as i64).sum();
        match self.modulus {
            None => s == 0,
            Some(r) => s.rem_euclid(r) == 0,
        }
    }
}

pub fn degree(v: &[u32]) -> u32 {
    v.iter().sum()
}

pub fn dominates(v: &[u32], g: &[u32]) -> bool {
    v.iter().zip(g).all(|(a, b)| a >= b)
}

fn sub(v: &[u32], g: &[u32]) -> Vec<u32> {
    v.iter().zip(g).map(|(a, b)| a - b).collect()
}

fn add(v: &[u32], g: &[u32]) -> Vec<u32> {
    v.iter().zip(g).map(|(a, b)| a + b).collect()
}

/// Result of a graded Hilbert basis search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertBasis {
    /// Irreducible elements, by degree then lexicographically.
    pub generators: Vec<Vec<u32>>,
    /// Every degree up to this one was searched exhaustively.
    pub certified_degree: u32,
}

/// All vectors of total degree `d` in ℕᵏ that do not dominate any of `gens`.
fn vectors_of_degree(k: usize, d: u32, gens: &[Vec<u32>], out: &mut Vec<Vec<u32>>) {
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, gens: &[Vec<u32>], out: &mut Vec<Vec<u32>>) {
        let k = cur.len();
        if gens.iter().any(|g| dominates(cur, g)) {
            return;
        }
        if pos == k - 1 {
            cur[pos] = left;
            if !gens.iter().any(|g| dominates(cur, g)) {
                out.push(cur.clone());
            }
            cur[pos] = 0;
            return;
        }
        for x in (0..=left).rev() {
            cur[pos] = x;
            rec(pos + 1, left - x, cur, gens, out);
        }
        cur[pos] = 0;
    }
    if k == 0 {
        return;
    }
    let mut cur = vec![0; k];
    rec(0, d, &mut cur, gens, out);
}

/// Degree-by-degree search for the irreducible elements of the monoid.
///
/// `certificate` is an a priori degree that every irreducible element is
/// known not to exceed, so searching up to it is exhaustive. A certificate
/// above `bound` is an error.
pub fn hilbert_basis(
    k: usize,
    constraints: &[Constraint],
    bound: u32,
    certificate: u32,
) -> Result<HilbertBasis> {
    if certificate > bound {
        return Err(Error::DegreeBoundExceeded { bound });
    }
    let mut gens: Vec<Vec<u32>> = Vec::new();
    for d in 1..=certificate {
        let mut cands = Vec::new();
        vectors_of_degree(k, d, &gens, &mut cands);
        let mut new: Vec<Vec<u32>> = cands
            .into_iter()
            .filter(|v| constraints.iter().all(|c| c.holds(v)))
            .collect();
        new.sort();
        gens.extend(new);
    }
    Ok(HilbertBasis {
        generators: gens,
        certified_degree: certificate,
    })
}

/// Binomial exchange moves `m₁ ↔ m₂` acting on exponent vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Moves {
    pub pairs: Vec<(Vec<u32>, Vec<u32>)>,
}

impl Moves {
    /// Every vector reachable from `v` by moves, staying within degree `cap`.
    pub fn class_of(&self, v: &[u32], cap: u32) -> BTreeSet<Vec<u32>> {
        let mut seen = BTreeSet::new();
        seen.insert(v.to_vec());
        let mut queue = VecDeque::from([v.to_vec()]);
        while let Some(u) = queue.pop_front() {
            for (a, b) in &self.pairs {
                for (from, to) in [(a, b), (b, a)] {
                    if dominates(&u, from) {
                        let w = add(&sub(&u, from), to);
                        if degree(&w) <= cap && seen.insert(w.clone()) {
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        seen
    }

    /// Class representative: largest degree, then lexicographically largest.
    pub fn canonical(&self, v: &[u32], cap: u32) -> Vec<u32> {
        if self.pairs.is_empty() {
            return v.to_vec();
        }
        self.class_of(v, cap)
            .into_iter()
            .max_by(|x, y| (degree(x), x).cmp(&(degree(y), y)))
            .expect("class contains v")
    }
}

/// One algebra generator: a class of irreducible monoid elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorClass {
    pub name: String,
    pub representative: Vec<u32>,
    /// Irreducible elements identified with the representative by moves.
    pub members: Vec<Vec<u32>>,
}

/// A relation `Π g^lhs = Π g^rhs` between generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorRelation {
    pub lhs: Vec<u32>,
    pub rhs: Vec<u32>,
}

impl GeneratorRelation {
    /// Common generator factor of both sides, if any.
    pub fn common_factor(&self) -> Vec<u32> {
        self.lhs
            .iter()
            .zip(&self.rhs)
            .map(|(a, b)| *a.min(b))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSystem {
    pub generators: Vec<GeneratorClass>,
    pub relations: Vec<GeneratorRelation>,
    /// Degree up to which the monoid generators were certified.
    pub certified_degree: u32,
    /// Degree (in the original variables) up to which relations were searched.
    pub relation_degree: u32,
}

impl GeneratorSystem {
    /// Indices of relations whose two sides share a generator factor. With a
    /// minimal relation set such a relation means the algebra has zero divisors.
    pub fn zero_divisor_relations(&self) -> Vec<usize> {
        self.relations
            .iter()
            .enumerate()
            .filter(|(_, r)| degree(&r.common_factor()) > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// `A^2*B` style rendering of a generator exponent vector.
    pub fn monomial_name(&self, e: &[u32]) -> String {
        let parts: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(|(i, &x)| {
                let n = &self.generators[i].name;
                if x == 1 {
                    n.clone()
                } else {
                    format!("{n}^{x}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    pub fn relation_name(&self, r: &GeneratorRelation) -> String {
        format!(
            "{} = {}",
            self.monomial_name(&r.lhs),
            self.monomial_name(&r.rhs)
        )
    }

    /// The product of generator representatives for an exponent vector.
    pub fn expand(&self, e: &[u32]) -> Vec<u32> {
        let k = self
            .generators
            .first()
            .map_or(0, |g| g.representative.len());
        let mut v = vec![0; k];
        for (g, &x) in self.generators.iter().zip(e) {
            for (vi, gi) in v.iter_mut().zip(&g.representative) {
                *vi += gi * x;
            }
        }
        v
    }
}

/// Generator names `A`…`Z`, then `G27`, `G28`, ….
pub fn generator_name(i: usize) -> String {
    if i < 26 {
        ((b'A' + i as u8) as char).to_string()
    } else {
        format!("G{}", i + 1)
    }
}

/// Generators and relations of the algebra spanned by the monoid modulo
/// the moves.
pub fn generator_system(
    k: usize,
    constraints: &[Constraint],
    moves: &Moves,
    bound: u32,
    certificate: u32,
) -> Result<GeneratorSystem> {
    let hb = hilbert_basis(k, constraints, bound, certificate)?;
    let max_deg = hb.generators.iter().map(|g| degree(g)).max().unwrap_or(0);
    let cap = (2 * max_deg).max(hb.certified_degree) + 2;
    let basis: BTreeSet<Vec<u32>> = hb.generators.iter().cloned().collect();

    // Group irreducibles into classes under the moves.
    let mut classes: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut assigned: BTreeSet<Vec<u32>> = BTreeSet::new();
    for g in &hb.generators {
        if assigned.contains(g) {
            continue;
        }
        let cls = moves.class_of(g, cap);
        let mut members: Vec<Vec<u32>> =
            cls.iter().filter(|v| basis.contains(*v)).cloned().collect();
        // A class containing a reducible element is generated by the others.
        let reducible = cls
            .iter()
            .any(|v| !basis.contains(v) && !is_power_of_class(v, &members));
        for m in &members {
            assigned.insert(m.clone());
        }
        if reducible {
            continue;
        }
        members.sort_by(|x, y| (degree(y), y).cmp(&(degree(x), x)));
        classes.push(members);
    }
    classes.sort_by(|x, y| (degree(&y[0]), &y[0]).cmp(&(degree(&x[0]), &x[0])));
    let generators: Vec<GeneratorClass> = classes
        .into_iter()
        .enumerate()
        .map(|(i, members)| GeneratorClass {
            name: generator_name(i),
            representative: members[0].clone(),
            members,
        })
        .collect();

    let mut system = GeneratorSystem {
        generators,
        relations: Vec::new(),
        certified_degree: hb.certified_degree,
        relation_degree: 2 * max_deg,
    };
    system.relations = find_relations(&system, moves, 2 * max_deg, cap);
    Ok(system)
}

/// True if `v` is a multiple of a class member (which keeps it from making
/// the class redundant, as in `g ~ g·h`).
fn is_power_of_class(v: &[u32], members: &[Vec<u32>]) -> bool {
    members.iter().any(|m| dominates(v, m))
}

/// Minimal binomial relations among generator monomials of degree ≤ `max`.
fn find_relations(
    sys: &GeneratorSystem,
    moves: &Moves,
    max: u32,
    cap: u32,
) -> Vec<GeneratorRelation> {
    let m = sys.generators.len();
    let degs: Vec<u32> = sys
        .generators
        .iter()
        .map(|g| degree(&g.representative))
        .collect();
    // enumerate generator exponent vectors by degree in the original variables
    // moves need not preserve degree, so classes are keyed by canonical form alone
    let mut by_class: BTreeMap<Vec<u32>, Vec<Vec<u32>>> = BTreeMap::new();
    let mut cur = vec![0u32; m];
    fn rec(pos: usize, budget: u32, cur: &mut Vec<u32>, degs: &[u32], f: &mut dyn FnMut(&[u32])) {
        if pos == cur.len() {
            f(cur);
            return;
        }
        let mut x = 0;
        loop {
            cur[pos] = x;
            rec(pos + 1, budget - x * degs[pos], cur, degs, f);
            x += 1;
            if degs[pos] == 0 || x * degs[pos] > budget {
                break;
            }
        }
        cur[pos] = 0;
    }
    if m > 0 {
        rec(0, max, &mut cur, &degs, &mut |e: &[u32]| {
            if e.iter().sum::<u32>() < 2 {
                return;
            }
            let v = sys.expand(e);
            by_class
                .entry(moves.canonical(&v, cap))
                .or_default()
                .push(e.to_vec());
        });
    }
    // process classes in increasing degree, adding relations only when the
    // existing ones do not already connect the members
    let low = |k: &Vec<u32>| {
        by_class[k]
            .iter()
            .map(|e| degree(&sys.expand(e)))
            .min()
            .unwrap_or(0)
    };
    let mut keys: Vec<&Vec<u32>> = by_class.keys().collect();
    keys.sort_by(|a, b| (low(a), *a).cmp(&(low(b), *b)));
    let mut relations: Vec<GeneratorRelation> = Vec::new();
    for key in keys {
        let members = &by_class[key];
        if members.len() < 2 {
            continue;
        }
        let member_set: BTreeSet<Vec<u32>> = members.iter().cloned().collect();
        let mut comp_of: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
        let mut reps: Vec<Vec<u32>> = Vec::new();
        let mut ordered = members.clone();
        ordered.sort_by(|x, y| y.cmp(x));
        for e in &ordered {
            if comp_of.contains_key(e) {
                continue;
            }
            let c = reps.len();
            reps.push(e.clone());
            let mut queue = VecDeque::from([e.clone()]);
            comp_of.insert(e.clone(), c);
            while let Some(u) = queue.pop_front() {
                for r in &relations {
                    for (from, to) in [(&r.lhs, &r.rhs), (&r.rhs, &r.lhs)] {
                        if dominates(&u, from) {
                            let w = add(&sub(&u, from), to);
                            if member_set.contains(&w) && !comp_of.contains_key(&w) {
                                comp_of.insert(w.clone(), c);
                                queue.push_back(w);
                            }
                        }
                    }
                }
            }
        }
        for other in reps.iter().skip(1) {
            relations.push(GeneratorRelation {
                lhs: reps[0].clone(),
                rhs: other.clone(),
            });
        }
    }
    relations
}
