use super::{parse_rational, Monomial, Rational, Ring};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A (Laurent) polynomial with coefficients in `C`.
///
/// Ordinary polynomials are the ones whose monomials all have nonnegative
/// exponents (see [`Polynomial::is_polynomial`]); Laurent terms only arise in
/// chart coordinates and symbolic representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<C: Ring = Rational> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Ring> Default for Polynomial<C> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<C: Ring> Polynomial<C> {
    pub fn constant(c: C) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut p = Self::default();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, C::one())
    }

    pub fn var(name: &str) -> Self {
        Self::monomial(Monomial::var(name))
    }

    /// Terms from largest to smallest monomial.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(cur) => {
                let s = cur.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *cur = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::default();
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a.mul(c));
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = Ring::mul(&out, self);
        }
        out
    }

    /// Largest monomial in the lexicographic order, with its coefficient.
    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    /// Returns the constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Returns the single monomial if `self` is exactly `1·m`.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().expect("one term");
            if c.is_one() {
                return Some(m);
            }
        }
        None
    }

    /// True when every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Monomial::is_polynomial)
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn vars(&self) -> BTreeSet<String> {
        self.terms
            .keys()
            .flat_map(|m| m.vars().map(str::to_string))
            .collect()
    }

    /// Drops every term whose total degree exceeds `max`; reports whether any were dropped.
    pub fn truncate(&self, max: i64) -> (Self, bool) {
        let mut out = Self::default();
        let mut dropped = false;
        for (m, c) in &self.terms {
            if m.degree() > max {
                dropped = true;
            } else {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        (out, dropped)
    }

    /// Applies `f` to each term, summing the results.
    pub fn map_terms<D: Ring, F: Fn(&Monomial, &C) -> (Monomial, D)>(&self, f: F) -> Polynomial<D> {
        let mut out = Polynomial::<D>::default();
        for (m, c) in &self.terms {
            let (m2, d) = f(m, c);
            out.add_term(m2, d);
        }
        out
    }

    /// Substitutes polynomials for variables; others are kept.
    /// Negative exponents require the substituted value to be a monomial.
    pub fn substitute(&self, subst: &BTreeMap<String, Polynomial<C>>) -> Option<Self> {
        let mut out = Self::default();
        for (m, c) in &self.terms {
            let mut acc = Self::constant(c.clone());
            for (v, e) in m.iter() {
                let factor = match subst.get(v) {
                    Some(p) if e >= 0 => p.pow(e as u32),
                    Some(p) => Self::monomial(p.as_monomial()?.pow(e)),
                    None => Self::monomial(Monomial::var_pow(v, e)),
                };
                acc = Ring::mul(&acc, &factor);
            }
            out = Ring::add(&out, &acc);
        }
        Some(out)
    }
}

impl Polynomial<Rational> {
    /// Parses expressions such as `x*y^2 - 3/2*z + (a - b)^2`.
    pub fn parse(s: &str) -> Result<Self, ParsePolyError> {
        let mut p = Parser {
            chars: s.chars().collect(),
            pos: 0,
        };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != p.chars.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(out)
    }

    /// Evaluates at a rational point; every variable must be assigned and
    /// nonzero wherever a negative exponent occurs.
    pub fn eval(&self, point: &BTreeMap<String, Rational>) -> Option<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.iter() {
                let x = point.get(v)?;
                if e < 0 && x.is_zero() {
                    return None;
                }
                let base = if e < 0 { x.recip() } else { x.clone() };
                for _ in 0..e.unsigned_abs() {
                    t *= &base;
                }
            }
            total += t;
        }
        Some(total)
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (lm, lc) = d.leading()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = Self::default();
        while let Some((m, c)) = rem.leading() {
            if !m.divisible_by(&lm) {
                return None;
            }
            let qm = m.div(&lm);
            let qc = c / &lc;
            let t = Self::term(qm, qc);
            rem = Ring::sub(&rem, &Ring::mul(&t, d));
            quot = Ring::add(&quot, &t);
        }
        Some(quot)
    }
}

impl<C: Ring> Ring for Polynomial<C> {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::constant(C::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }
    fn from_rational(q: &Rational) -> Self {
        Self::constant(C::from_rational(q))
    }
    fn write_term(&self, mono: &str, first: bool, out: &mut String) {
        if !first {
            out.push_str(" + ");
        }
        out.push('(');
        out.push_str(&self.to_string());
        out.push(')');
        if !mono.is_empty() {
            out.push('*');
            out.push_str(mono);
        }
    }
}

impl<C: Ring> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms().enumerate() {
            let mono = if m.is_one() {
                String::new()
            } else {
                m.to_string()
            };
            c.write_term(&mono, i == 0, &mut s);
        }
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse polynomial at offset {offset}: {message}")]
pub struct ParsePolyError {
    pub offset: usize,
    pub message: String,
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

type P = Polynomial<Rational>;

impl Parser {
    fn err(&self, message: &str) -> ParsePolyError {
        ParsePolyError {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<P, ParsePolyError> {
        let mut acc = P::zero();
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -1
            }
            Some('+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some('-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<P, ParsePolyError> {
        let mut acc = self.power()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = acc.mul(&self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<P, ParsePolyError> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let e = self.integer()?;
        if e >= 0 {
            return Ok(base.pow(e as u32));
        }
        match base.as_monomial() {
            Some(m) => Ok(P::monomial(m.pow(e))),
            None => Err(self.err("negative powers are only allowed on monomials")),
        }
    }

    fn integer(&mut self) -> Result<i64, ParsePolyError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.chars.get(self.pos), Some('-') | Some('+')) {
            self.pos += 1;
        }
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("expected integer exponent"))
    }

    fn atom(&mut self) -> Result<P, ParsePolyError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_ascii_digit() || self.chars[self.pos] == '/')
                {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                let q = parse_rational(&s).ok_or_else(|| self.err("bad number"))?;
                Ok(P::constant(q))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                Ok(P::var(&s))
            }
            _ => Err(self.err("expected number, variable or '('")),
        }
    }
}
