//! Invariant rings and weight modules of abelian actions, and the quiver of
//! the endomorphism ring of the sum of the weight modules.
//!
//! Weight convention: the generator of `1/r(a₁,…,aₙ)` multiplies `x₁^{p₁}⋯xₙ^{pₙ}`
//! by `ε^{Σ aᵢpᵢ}`, and `Sᵢ` is spanned by the monomials of weight `i mod r`.
//! A torus acts on `xᵢ` with integer weight `wᵢ`.
//!
//! Multiplication by a variable of weight `a` maps `Sᵢ → S_{i+a}`. Matching
//! `Sᵢ` with `ρ_{−i}` identifies the endomorphism quiver with the McKay quiver.

use crate::error::{Error, Result};
use crate::lattice::{self, Constraint, GeneratorSystem, Moves};
use crate::mckay::{variable_names, GroupKind, McKayQuiver};
use crate::quiver::{Arrow, Quiver};
use crate::scalars::Monomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AbelianAction {
    Cyclic { r: u32, weights: Vec<u32> },
    Torus { weights: Vec<i64> },
}

impl AbelianAction {
    /// Parses a cyclic group `1/r(a,b,…)`.
    pub fn parse_group(s: &str) -> Result<Self> {
        match GroupKind::parse(s)? {
            GroupKind::Cyclic { r, weights } => Ok(Self::Cyclic { r, weights }),
            other => Err(Error::InvalidGroup(format!("{other} is not abelian"))),
        }
    }

    /// Parses torus weights `1,1,-1,-1`.
    pub fn parse_torus(s: &str) -> Result<Self> {
        let weights = s
            .split(',')
            .map(|w| {
                w.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidInput(format!("bad torus weight `{w}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if weights.is_empty() {
            return Err(Error::InvalidInput("no torus weights".into()));
        }
        Ok(Self::Torus { weights })
    }

    pub fn num_vars(&self) -> usize {
        match self {
            Self::Cyclic { weights, .. } => weights.len(),
            Self::Torus { weights } => weights.len(),
        }
    }

    /// Variable names: `x, y, z, w` for cyclic actions; for a torus the
    /// positive, negative and zero weights give `x1, x2, …`, `y1, …`, `z1, …`.
    pub fn variables(&self) -> Vec<String> {
        match self {
            Self::Cyclic { weights, .. } => variable_names(weights.len()),
            Self::Torus { weights } => {
                let (mut p, mut n, mut z) = (0, 0, 0);
                weights
                    .iter()
                    .map(|&w| {
                        let (prefix, k) = match w.signum() {
                            1 => ("x", &mut p),
                            -1 => ("y", &mut n),
                            _ => ("z", &mut z),
                        };
                        *k += 1;
                        format!("{prefix}{k}")
                    })
                    .collect()
            }
        }
    }

    /// Default degree bound: `3r` for cyclic actions, 12 for tori.
    pub fn default_bound(&self) -> u32 {
        match self {
            Self::Cyclic { r, .. } => 3 * r,
            Self::Torus { .. } => crate::moduli::DEFAULT_DEGREE_BOUND,
        }
    }

    /// For tori: whether the weights sum to zero.
    pub fn gorenstein(&self) -> Option<bool> {
        match self {
            Self::Torus { weights } => Some(weights.iter().sum::<i64>() == 0),
            Self::Cyclic { .. } => None,
        }
    }

    fn invariant_constraint(&self) -> Constraint {
        match self {
            Self::Cyclic { r, weights } => {
                Constraint::modular(weights.iter().map(|&a| a as i64).collect(), *r as i64)
            }
            Self::Torus { weights } => Constraint::equal_zero(weights.clone()),
        }
    }

    /// A degree no irreducible invariant exceeds.
    fn certificate(&self) -> u32 {
        match self {
            // minimal zero-sum sequences over ℤ/r have length ≤ r (Davenport constant)
            Self::Cyclic { r, .. } => *r,
            // minimal solutions of Σ wᵢmᵢ = 0 have degree ≤ max positive + max |negative| (Lambert)
            Self::Torus { weights } => {
                let pos = weights
                    .iter()
                    .copied()
                    .filter(|&w| w > 0)
                    .max()
                    .unwrap_or(0);
                let neg = weights
                    .iter()
                    .copied()
                    .filter(|&w| w < 0)
                    .map(|w| -w)
                    .max()
                    .unwrap_or(0);
                (pos + neg).max(1) as u32
            }
        }
    }

    fn monomial(&self, v: &[u32]) -> Monomial {
        let names = self.variables();
        Monomial::from_pairs(
            v.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (names[i].as_str(), e as i64)),
        )
    }
}

/// Generators of the invariant ring and the relations among them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricInvariants {
    pub variables: Vec<String>,
    /// Generator monomials, named `A`, `B`, … in this order.
    pub generators: Vec<Monomial>,
    pub names: Vec<String>,
    /// Relations such as `A*B = C^3`, searched up to twice the largest generator degree.
    pub relations: Vec<String>,
    pub certified_degree: u32,
    pub gorenstein: Option<bool>,
}

pub fn invariant_ring_generators(act: &AbelianAction, bound: u32) -> Result<ToricInvariants> {
    if bound == 0 {
        return Err(Error::InvalidInput(
            "degree bound must be at least 1".into(),
        ));
    }
    let sys: GeneratorSystem = lattice::generator_system(
        act.num_vars(),
        &[act.invariant_constraint()],
        &Moves::default(),
        bound,
        act.certificate(),
    )?;
    Ok(ToricInvariants {
        variables: act.variables(),
        generators: sys
            .generators
            .iter()
            .map(|g| act.monomial(&g.representative))
            .collect(),
        names: sys.generators.iter().map(|g| g.name.clone()).collect(),
        relations: sys.relations.iter().map(|r| sys.relation_name(r)).collect(),
        certified_degree: sys.certified_degree,
        gorenstein: act.gorenstein(),
    })
}

fn cyclic_parts(act: &AbelianAction) -> Result<(u32, &[u32])> {
    match act {
        AbelianAction::Cyclic { r, weights } => Ok((*r, weights)),
        AbelianAction::Torus { .. } => Err(Error::Regime(
            "weight modules are computed for cyclic actions".into(),
        )),
    }
}

fn weight(weights: &[u32], r: u32, v: &[u32]) -> u32 {
    (weights
        .iter()
        .zip(v)
        .map(|(&a, &e)| a as u64 * e as u64)
        .sum::<u64>()
        % r as u64) as u32
}

/// Minimal generators of `Sᵢ` over the invariant ring.
///
/// A weight-`i` monomial with an exponent `≥ r` is divisible by an invariant
/// `xⱼʳ`, so every minimal generator has all exponents below `r` and the
/// search over that box is exhaustive.
pub fn module_generators(act: &AbelianAction, i: u32, bound: u32) -> Result<Vec<Monomial>> {
    let (r, weights) = cyclic_parts(act)?;
    let i = i % r;
    let n = weights.len();
    let mut candidates: Vec<Vec<u32>> = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        if weight(weights, r, &cur) == i {
            candidates.push(cur.clone());
        }
        // odometer over {0, …, r−1}ⁿ
        let mut pos = 0;
        while pos < n && cur[pos] + 1 == r {
            cur[pos] = 0;
            pos += 1;
        }
        if pos == n {
            break;
        }
        cur[pos] += 1;
    }
    candidates.sort_by(|a, b| (lattice::degree(a), b).cmp(&(lattice::degree(b), a)));
    let mut minimal: Vec<Vec<u32>> = Vec::new();
    for c in candidates {
        if !minimal.iter().any(|m| lattice::dominates(&c, m)) {
            minimal.push(c);
        }
    }
    if minimal.iter().any(|m| lattice::degree(m) > bound) {
        return Err(Error::DegreeBoundExceeded { bound });
    }
    Ok(minimal.iter().map(|v| act.monomial(v)).collect())
}

/// The quiver of `End(⊕ Sᵢ)`: vertex `i` is `Sᵢ`, and arrows are the monomial
/// maps `Sᵢ → Sⱼ` that do not factor through another `Sₖ`.
///
/// A monomial of degree at least two splits as `x·(m/x)` and so factors
/// through `S_{i+wt(x)}`; the irreducible maps are therefore the variables.
pub fn endo_quiver(act: &AbelianAction, bound: u32) -> Result<McKayQuiver> {
    let (r, weights) = cyclic_parts(act)?;
    if r > 12 {
        return Err(Error::Regime(
            "endomorphism quivers are computed for r ≤ 12".into(),
        ));
    }
    if bound == 0 {
        return Err(Error::InvalidInput(
            "degree bound must be at least 1".into(),
        ));
    }
    let names = act.variables();
    let mut arrows: Vec<(u32, u32, String)> = Vec::new();
    for (var, &a) in weights.iter().enumerate() {
        for i in 0..r {
            arrows.push((i, (i + a) % r, names[var].clone()));
        }
    }
    arrows.sort();
    let vertices: Vec<String> = (0..r).map(|i| i.to_string()).collect();
    let mut list = Vec::new();
    let mut labels = Vec::new();
    for (t, h, l) in arrows {
        list.push(Arrow {
            name: format!("{l}_{t}_{h}"),
            tail: vertices[t as usize].clone(),
            head: vertices[h as usize].clone(),
        });
        labels.push(l);
    }
    Ok(McKayQuiver {
        quiver: Quiver::new(vertices, list)?,
        dims: vec![1; r as usize],
        labels,
        star: 0,
    })
}

/// Compares the endomorphism quiver with the McKay quiver of the same group
/// under `Sᵢ ↔ ρ_{−i}`, as labelled directed multigraphs.
pub fn matches_mckay(endo: &McKayQuiver, mckay: &McKayQuiver) -> bool {
    let r = endo.quiver.num_vertices();
    if mckay.quiver.num_vertices() != r {
        return false;
    }
    let flip = |i: usize| (r - i) % r;
    let mut relabelled: Vec<(usize, usize, String)> = endo
        .labelled_arrows()
        .into_iter()
        .map(|(t, h, l)| (flip(t), flip(h), l))
        .collect();
    relabelled.sort();
    relabelled == mckay.labelled_arrows()
}
