//! Exact scalars: rationals, cyclotomic numbers, Laurent monomials,
//! polynomials and dense matrices over any of them.

mod cyclotomic;
mod matrix;
mod monomial;
mod polynomial;

pub use cyclotomic::Cyclotomic;
pub use matrix::Matrix;
pub use monomial::Monomial;
pub use polynomial::{ParsePolyError, Polynomial};

use num_bigint::BigInt;
use num_traits::Signed;
use std::fmt::Debug;

/// Arbitrary precision rational, always in lowest terms.
pub type Rational = num_rational::BigRational;

/// Commutative ring operations shared by every coefficient type.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_rational(q: &Rational) -> Self;

    /// Writes `coeff*mono` as a signed term. `first` suppresses a leading `+`.
    fn write_term(&self, mono: &str, first: bool, out: &mut String);
}

impl Ring for Rational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn write_term(&self, mono: &str, first: bool, out: &mut String) {
        let negative = self.is_negative();
        let abs = self.abs();
        if first {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if num_traits::One::is_one(&abs) {
            out.push_str(mono);
        } else {
            out.push_str(&abs.to_string());
            out.push('*');
            out.push_str(mono);
        }
    }
}

/// Builds the rational `n`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds the rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` into a rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if num_traits::Zero::is_zero(&d) {
        return None;
    }
    Some(Rational::new(n, d))
}

/// Returns the integer value of `q` if it is integral and fits in `i64`.
pub fn rational_to_i64(q: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    if q.is_integer() {
        q.to_integer().to_i64()
    } else {
        None
    }
}
