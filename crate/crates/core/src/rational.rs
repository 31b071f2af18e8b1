//! Exact rational scalars and vectors.
//!
//! Every invariant computed by this crate is an exact rational number. Scalars
//! are [`num_rational::BigRational`], which keeps itself normalized
//! (`gcd(|num|, den) = 1`, `den > 0`) after every operation.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Integer lattice vector (a point of `M` or `N`).
pub type IVec = Vec<i64>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d`; panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats as `"num/den"`, always with an explicit denominator (`"2/1"`, `"0/1"`).
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `"num/den"` or a bare integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn ceil_to_i64(q: &Rational) -> Result<i64> {
    q.ceil()
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::Overflow(format!("{q} does not fit in i64")))
}

pub fn bigint_to_i64(n: &BigInt) -> Result<i64> {
    n.to_i64()
        .ok_or_else(|| Error::Overflow(format!("{n} does not fit in i64")))
}

pub fn dot_int(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Fixed-length vector of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QVector(Vec<Rational>);

impl QVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        QVector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        QVector(vec![Rational::zero(); dim])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        QVector(v.iter().map(|&x| int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn dot(&self, other: &QVector) -> Rational {
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// Pairing with an integer vector.
    pub fn dot_int(&self, v: &[i64]) -> Rational {
        self.0
            .iter()
            .zip(v)
            .fold(Rational::zero(), |acc, (a, &b)| acc + a * BigInt::from(b))
    }

    pub fn add(&self, other: &QVector) -> QVector {
        QVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn add_int(&self, v: &[i64]) -> QVector {
        QVector(
            self.0
                .iter()
                .zip(v)
                .map(|(a, &b)| a + BigInt::from(b))
                .collect(),
        )
    }

    pub fn sub(&self, other: &QVector) -> QVector {
        QVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &Rational) -> QVector {
        QVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|a| a.is_integer())
    }

    /// Integer entries, or `None` if some entry is fractional or too large.
    pub fn to_ints(&self) -> Option<IVec> {
        self.0
            .iter()
            .map(|a| if a.is_integer() { a.to_integer().to_i64() } else { None })
            .collect()
    }

    /// Least common multiple of the denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.0
            .iter()
            .fold(BigInt::one(), |acc, a| acc.lcm(a.denom()))
    }

    /// Entries as `"num/den"` strings.
    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }
}

impl Index<usize> for QVector {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl From<Vec<Rational>> for QVector {
    fn from(v: Vec<Rational>) -> Self {
        QVector(v)
    }
}

/// Human-readable `(1,1/2,2)`.
impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}
