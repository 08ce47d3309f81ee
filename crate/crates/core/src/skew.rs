//! Skew group rings `A # G` for a truncated polynomial ring `A` and a cyclic
//! group `G = 1/r(a₁,…,aₙ)`, with product
//! `(f₁⊗g₁)(f₂⊗g₂) = f₁·g₁(f₂) ⊗ g₁g₂`.
//!
//! `gᵏ` acts on a monomial `x^p` by the scalar `ε^{k·Σaᵢpᵢ}`. Terms of total
//! degree above the truncation degree are discarded and reported.

use crate::error::{Error, Result};
use crate::mckay::variable_names;
use crate::scalars::{Cyclotomic, Monomial, Polynomial, Ring};
use std::collections::BTreeMap;
use std::fmt;

pub const DEFAULT_TRUNCATION: i64 = 10;

pub type CyclotomicPolynomial = Polynomial<Cyclotomic>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewContext {
    pub r: u32,
    pub weights: Vec<u32>,
    pub variables: Vec<String>,
    pub max_degree: i64,
}

impl SkewContext {
    pub fn new(r: u32, weights: Vec<u32>, max_degree: i64) -> Result<Self> {
        if r == 0 || weights.iter().any(|&w| w >= r) {
            return Err(Error::InvalidGroup(format!("weights must lie in [0, {r})")));
        }
        Ok(Self {
            r,
            variables: variable_names(weights.len()),
            weights,
            max_degree,
        })
    }

    /// Scalar by which `gᵏ` multiplies the monomial.
    pub fn character(&self, k: u32, m: &Monomial) -> Cyclotomic {
        let w: i64 = self
            .variables
            .iter()
            .zip(&self.weights)
            .map(|(v, &a)| a as i64 * m.exponent(v))
            .sum();
        Cyclotomic::root(self.r as u64, w * k as i64)
    }

    /// `gᵏ(f)`.
    pub fn act(&self, k: u32, f: &CyclotomicPolynomial) -> CyclotomicPolynomial {
        f.map_terms(|m, c| (m.clone(), c.mul(&self.character(k, m))))
    }

    pub fn zero(&self) -> SkewElement {
        SkewElement::default()
    }

    pub fn one(&self) -> SkewElement {
        self.element(Polynomial::one(), 0)
    }

    /// `f ⊗ gᵏ`.
    pub fn element(&self, f: CyclotomicPolynomial, k: u32) -> SkewElement {
        let mut e = SkewElement::default();
        e.add_term(k % self.r, f);
        e
    }

    /// Lifts a rational polynomial into `A ⊗ gᵏ`.
    pub fn from_rational(&self, f: &Polynomial, k: u32) -> SkewElement {
        self.element(
            f.map_terms(|m, c| (m.clone(), Cyclotomic::rational(c.clone()))),
            k,
        )
    }

    /// Product, with a flag set when truncation discarded terms.
    pub fn multiply(&self, x: &SkewElement, y: &SkewElement) -> (SkewElement, bool) {
        let mut out = SkewElement::default();
        let mut overflow = false;
        for (&g1, f1) in &x.parts {
            for (&g2, f2) in &y.parts {
                let prod = f1.mul(&self.act(g1, f2));
                let (kept, dropped) = prod.truncate(self.max_degree);
                overflow |= dropped;
                out.add_term((g1 + g2) % self.r, kept);
            }
        }
        (out, overflow)
    }

    pub fn add(&self, x: &SkewElement, y: &SkewElement) -> SkewElement {
        let mut out = x.clone();
        for (&g, f) in &y.parts {
            out.add_term(g, f.clone());
        }
        out
    }
}

/// `Σ f_g ⊗ g`, keyed by the exponent of the generator.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SkewElement {
    parts: BTreeMap<u32, CyclotomicPolynomial>,
}

impl SkewElement {
    fn add_term(&mut self, g: u32, f: CyclotomicPolynomial) {
        let sum = match self.parts.remove(&g) {
            Some(prev) => prev.add(&f),
            None => f,
        };
        if !sum.is_zero() {
            self.parts.insert(g, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// Coefficient of `gᵏ`.
    pub fn part(&self, k: u32) -> CyclotomicPolynomial {
        self.parts.get(&k).cloned().unwrap_or_default()
    }

    pub fn parts(&self) -> impl Iterator<Item = (u32, &CyclotomicPolynomial)> {
        self.parts.iter().map(|(k, f)| (*k, f))
    }
}

impl fmt::Display for SkewElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let pieces: Vec<String> = self
            .parts
            .iter()
            .map(|(k, p)| format!("({p})⊗g^{k}"))
            .collect();
        write!(f, "{}", pieces.join(" + "))
    }
}
