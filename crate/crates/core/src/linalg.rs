//! Small exact linear algebra over `Z` and `Q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{bigint_to_i64, IVec, QVector, Rational};

fn gcd_slice(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

/// Divides an integer vector by the gcd of its entries.
pub fn primitive_vector(v: &[i64]) -> Result<IVec> {
    let g = gcd_slice(v);
    if g == 0 {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|x| x / g).collect())
}

/// Smallest integer vector on the ray through a nonzero rational vector.
pub fn primitive_from_rational(v: &[Rational]) -> Result<IVec> {
    let l = v.iter().fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
    let scaled: Vec<BigInt> = v.iter().map(|a| (a * &l).to_integer()).collect();
    primitive_from_big(&scaled)
}

pub(crate) fn primitive_from_big(v: &[BigInt]) -> Result<IVec> {
    let g = v.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a));
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    v.iter().map(|a| bigint_to_i64(&(a / &g))).collect()
}

pub(crate) fn to_rows(rows: &[IVec]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
        .collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(m: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let (src, dst) = if r < row {
                    let (a, b) = m.split_at_mut(row);
                    (&b[0], &mut a[r])
                } else {
                    let (a, b) = m.split_at_mut(r);
                    (&a[row], &mut b[0])
                };
                for (d, s) in dst.iter_mut().zip(src) {
                    *d -= &f * s;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let Some(first) = rows.first() else { return 0 };
    let ncols = first.len();
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

pub fn rank_int(rows: &[IVec]) -> usize {
    rank(&to_rows(rows))
}

/// Exact solution of `A x = b` for an `m × d` rational matrix.
///
/// Inconsistent systems give [`Error::NoSolution`]; consistent systems of rank
/// `< d` give [`Error::NonUnique`].
pub fn solve_linear(a: &[QVector], b: &QVector) -> Result<QVector> {
    if a.len() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: b.dim(),
        });
    }
    let Some(first) = a.first() else {
        return Err(Error::NonUnique { rank: 0, dim: 0 });
    };
    let d = first.dim();
    let mut m: Vec<Vec<Rational>> = Vec::with_capacity(a.len());
    for (row, rhs) in a.iter().zip(b.entries()) {
        if row.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: row.dim(),
            });
        }
        let mut r = row.entries().to_vec();
        r.push(rhs.clone());
        m.push(r);
    }
    let pivots = rref(&mut m, d + 1);
    if pivots.last() == Some(&d) {
        return Err(Error::NoSolution);
    }
    if pivots.len() < d {
        return Err(Error::NonUnique {
            rank: pivots.len(),
            dim: d,
        });
    }
    Ok(QVector::new(m[..d].iter().map(|r| r[d].clone()).collect()))
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub fn determinant(rows: &[IVec]) -> BigInt {
    let n = rows.len();
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        BigInt::one()
    } else {
        sign * &m[n - 1][n - 1]
    }
}

/// Integer adjugate and determinant: `adj · A = det · I`.
pub(crate) fn adjugate(rows: &[IVec]) -> Result<(Vec<IVec>, i64)> {
    let n = rows.len();
    let det = bigint_to_i64(&determinant(rows))?;
    let mut adj = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<IVec> = rows
                .iter()
                .enumerate()
                .filter(|&(r, _)| r != i)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let c = bigint_to_i64(&determinant(&minor))?;
            // adj[j][i] = (-1)^{i+j} M_ij
            adj[j][i] = if (i + j) % 2 == 0 { c } else { -c };
        }
    }
    Ok((adj, det))
}

/// `|det|` of a square integer matrix.
pub fn abs_determinant(rows: &[IVec]) -> BigInt {
    determinant(rows).abs()
}
