use super::{rat, Rational, Ring};
use num_integer::Integer;
use num_traits::ToPrimitive;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// An element of ℚ(ζₙ) stored as coefficients of powers of ζₙ.
///
/// The canonical form is the remainder modulo the n-th cyclotomic polynomial,
/// so only the first φ(n) coefficients can be nonzero. Equal numbers of the
/// same order therefore have identical coefficient lists.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<Rational>,
}

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
fn cyclotomic_poly(n: u64) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("cache lock").get(&n) {
        return p.clone();
    }
    let p = compute_cyclotomic_poly(n);
    cache.lock().expect("cache lock").insert(n, p.clone());
    p
}

fn compute_cyclotomic_poly(n: u64) -> Vec<i64> {
    // Φₙ = (xⁿ − 1) / ∏_{d | n, d < n} Φ_d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = div_exact_int(&num, &cyclotomic_poly(d));
        }
    }
    num
}

fn div_exact_int(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd];
    assert!(lead == 1, "cyclotomic polynomials are monic");
    let qlen = rem.len() - dd;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

impl Cyclotomic {
    /// Builds Σ coeffs[k] ζₙᵏ, reducing exponents mod n.
    pub fn new(order: u64, coeffs: &[Rational]) -> Self {
        assert!(order >= 1, "order must be positive");
        let mut c = vec![Rational::zero(); order as usize];
        for (k, a) in coeffs.iter().enumerate() {
            let idx = k % order as usize;
            c[idx] = &c[idx] + a;
        }
        let mut out = Self { order, coeffs: c };
        out.reduce();
        out
    }

    /// ζₙᵏ for any integer k.
    pub fn root(order: u64, k: i64) -> Self {
        let idx = k.rem_euclid(order as i64) as usize;
        let mut c = vec![Rational::zero(); order as usize];
        c[idx] = rat(1);
        let mut out = Self { order, coeffs: c };
        out.reduce();
        out
    }

    pub fn rational(q: Rational) -> Self {
        Self {
            order: 1,
            coeffs: vec![q],
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Canonical coefficient list (length equals the order).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn reduce(&mut self) {
        let n = self.order;
        if n == 1 {
            return;
        }
        let phi = cyclotomic_poly(n);
        let d = phi.len() - 1;
        for i in (d..n as usize).rev() {
            let c = self.coeffs[i].clone();
            if c.is_zero() {
                continue;
            }
            for (j, &pj) in phi.iter().enumerate() {
                if pj != 0 {
                    let idx = i - d + j;
                    self.coeffs[idx] = &self.coeffs[idx] - &c * rat(pj);
                }
            }
        }
    }

    /// Re-expresses `self` in ℚ(ζ_m) for a multiple m of the order.
    pub fn lift(&self, m: u64) -> Self {
        assert!(
            m.is_multiple_of(self.order),
            "target order must be a multiple"
        );
        let step = (m / self.order) as usize;
        let mut c = vec![Rational::zero(); m as usize];
        for (k, a) in self.coeffs.iter().enumerate() {
            c[k * step] = a.clone();
        }
        let mut out = Self {
            order: m,
            coeffs: c,
        };
        out.reduce();
        out
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let m = self.order.lcm(&other.order);
        (self.lift(m), other.lift(m))
    }

    /// Complex conjugate: ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Self {
        let n = self.order as usize;
        let mut c = vec![Rational::zero(); n];
        for (k, a) in self.coeffs.iter().enumerate() {
            c[(n - k) % n] = a.clone();
        }
        let mut out = Self {
            order: self.order,
            coeffs: c,
        };
        out.reduce();
        out
    }

    /// Returns the rational value if the number lies in ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Numerical value as (re, im), for testing.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, a) in self.coeffs.iter().enumerate() {
            let a = a.to_f64().unwrap_or(f64::NAN);
            let t = 2.0 * std::f64::consts::PI * k as f64 / n;
            re += a * t.cos();
            im += a * t.sin();
        }
        (re, im)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Ring for Cyclotomic {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }
    fn one() -> Self {
        Self::rational(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn add(&self, other: &Self) -> Self {
        let (a, b) = self.common(other);
        Self {
            order: a.order,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.common(other);
        let n = a.order as usize;
        let mut c = vec![Rational::zero(); n];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    c[(i + j) % n] += x * y;
                }
            }
        }
        let mut out = Self {
            order: a.order,
            coeffs: c,
        };
        out.reduce();
        out
    }
    fn neg(&self) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn from_rational(q: &Rational) -> Self {
        Self::rational(q.clone())
    }
    fn write_term(&self, mono: &str, first: bool, out: &mut String) {
        if let Some(q) = self.as_rational() {
            return q.write_term(mono, first, out);
        }
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

impl fmt::Display for Cyclotomic {
    /// Writes e.g. `-1 + 2*E(3)^2`, where `E(n)` is a primitive n-th root of unity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => format!("E({})", self.order),
                _ => format!("E({})^{}", self.order, k),
            };
            a.write_term(&mono, first, &mut s);
            first = false;
        }
        if first {
            s.push('0');
        }
        write!(f, "{s}")
    }
}
