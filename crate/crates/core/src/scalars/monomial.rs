use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// A Laurent monomial: variable name to nonzero integer exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: BTreeMap<String, i64>,
}

impl Monomial {
    /// The empty monomial, i.e. `1`.
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(name: &str) -> Self {
        Self::var_pow(name, 1)
    }

    pub fn var_pow(name: &str, e: i64) -> Self {
        let mut m = Self::one();
        m.set(name, e);
        m
    }

    pub fn from_pairs<'a, I: IntoIterator<Item = (&'a str, i64)>>(pairs: I) -> Self {
        let mut m = Self::one();
        for (v, e) in pairs {
            let cur = m.exponent(v);
            m.set(v, cur + e);
        }
        m
    }

    pub fn exponent(&self, var: &str) -> i64 {
        self.exps.get(var).copied().unwrap_or(0)
    }

    fn set(&mut self, var: &str, e: i64) {
        assert!(!var.is_empty(), "variable names must be nonempty");
        if e == 0 {
            self.exps.remove(var);
        } else {
            self.exps.insert(var.to_string(), e);
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.exps.values().all(|&e| e > 0)
    }

    pub fn degree(&self) -> i64 {
        self.exps.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, i64)> {
        self.exps.iter().map(|(k, &v)| (k.as_str(), v))
    }

    pub fn vars(&self) -> impl Iterator<Item = &str> {
        self.exps.keys().map(|k| k.as_str())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (v, e) in other.iter() {
            let cur = out.exponent(v);
            out.set(v, cur + e);
        }
        out
    }

    pub fn pow(&self, k: i64) -> Self {
        let mut out = Self::one();
        for (v, e) in self.iter() {
            out.set(v, e * k);
        }
        out
    }

    pub fn inverse(&self) -> Self {
        self.pow(-1)
    }

    /// `self / other` as a Laurent monomial.
    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inverse())
    }

    /// True when `other` divides `self` with a nonnegative quotient.
    pub fn divisible_by(&self, other: &Self) -> bool {
        other.iter().all(|(v, e)| self.exponent(v) >= e)
    }

    /// Replaces each variable by a Laurent monomial (variables absent from
    /// `subst` are kept).
    pub fn substitute(&self, subst: &BTreeMap<String, Monomial>) -> Monomial {
        let mut out = Monomial::one();
        for (v, e) in self.iter() {
            match subst.get(v) {
                Some(m) => out = out.mul(&m.pow(e)),
                None => out = out.mul(&Monomial::var_pow(v, e)),
            }
        }
        out
    }
}

/// Lexicographic order: variables by name, larger exponent is larger.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.exps.iter().peekable();
        let mut b = other.exps.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some((_, &ea)), None) => return ea.cmp(&0),
                (None, Some((_, &eb))) => return 0.cmp(&eb),
                (Some((va, &ea)), Some((vb, &eb))) => match va.cmp(vb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in self.iter() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
