//! Brute-force oracles and instance generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use fthresh_core::lp::{Constraint, Sense};
use fthresh_core::rational::{int, Rational};
use fthresh_core::{DualPair, IVec, MonomialIdeal, QVector};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn ctx(rays: &[IVec]) -> Arc<DualPair> {
    Arc::new(DualPair::new(rays).unwrap())
}

pub fn orthant(d: usize) -> Arc<DualPair> {
    let rays: Vec<IVec> = (0..d)
        .map(|i| (0..d).map(|k| i64::from(i == k)).collect())
        .collect();
    ctx(&rays)
}

pub fn a1() -> Arc<DualPair> {
    ctx(&[vec![1, 0], vec![1, 2]])
}

pub fn a4() -> Arc<DualPair> {
    ctx(&[vec![1, 0], vec![1, 5]])
}

pub fn c23() -> Arc<DualPair> {
    ctx(&[vec![1, 0], vec![2, 3]])
}

pub fn hmtw() -> Arc<DualPair> {
    ctx(&[vec![1, 0, 0], vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 1]])
}

pub fn r_gorenstein(r: i64) -> Arc<DualPair> {
    ctx(&[vec![1, 0, 0], vec![1, 1, 0], vec![0, 1, r]])
}

pub fn ideal(dp: &Arc<DualPair>, gens: Vec<IVec>) -> MonomialIdeal {
    MonomialIdeal::new(dp, gens).unwrap()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

fn primitive(v: IVec) -> IVec {
    let g = gcd_all(&v);
    v.into_iter().map(|x| x / g).collect()
}

fn det(m: &[IVec]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|c| {
                let minor: Vec<IVec> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, &x)| x).collect())
                    .collect();
                let s = if c % 2 == 0 { 1 } else { -1 };
                s * m[0][c] * det(&minor)
            })
            .sum(),
    }
}

/// Generalized cross product of `d - 1` vectors in `Z^d`.
fn cross(rows: &[IVec], d: usize) -> IVec {
    (0..d)
        .map(|c| {
            let minor: Vec<IVec> = rows
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, &x)| x).collect())
                .collect();
            let s = if (c + d - 1) % 2 == 0 { 1 } else { -1 };
            s * det(&minor)
        })
        .collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Facet normals of `cone(rays)` by trying every `(d-1)`-subset of rays.
pub fn brute_facets(rays: &[IVec]) -> Vec<IVec> {
    let d = rays[0].len();
    let mut out = BTreeSet::new();
    for s in subsets(rays.len(), d - 1) {
        let rows: Vec<IVec> = s.iter().map(|&i| rays[i].clone()).collect();
        let n = cross(&rows, d);
        if n.iter().all(|&x| x == 0) {
            continue;
        }
        let pairs: Vec<i64> = rays.iter().map(|r| dot(r, &n)).collect();
        let n = if pairs.iter().all(|&p| p >= 0) {
            n
        } else if pairs.iter().all(|&p| p <= 0) {
            n.into_iter().map(|x| -x).collect()
        } else {
            continue;
        };
        out.insert(primitive(n));
    }
    out.into_iter().collect()
}

/// Maximum of an LP by enumerating all vertices. Only valid for pointed,
/// bounded feasible regions; `None` if no vertex is feasible.
pub fn brute_lp(objective: &[Rational], cons: &[Constraint]) -> Option<Rational> {
    let d = objective.len();
    let mut best: Option<Rational> = None;
    for s in subsets(cons.len(), d) {
        let Some(x) = gauss(&s.iter().map(|&i| &cons[i]).collect::<Vec<_>>(), d) else {
            continue;
        };
        let feasible = cons.iter().all(|c| {
            let lhs: Rational = c.normal.entries().iter().zip(&x).map(|(a, b)| a * b).sum();
            match c.sense {
                Sense::Ge => lhs >= c.offset,
                Sense::Le => lhs <= c.offset,
            }
        });
        if feasible {
            let v: Rational = objective.iter().zip(&x).map(|(a, b)| a * b).sum();
            if best.as_ref().map_or(true, |b| v > *b) {
                best = Some(v);
            }
        }
    }
    best
}

/// The unique solution of the tight system, if any.
fn gauss(rows: &[&Constraint], d: usize) -> Option<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|c| {
            let mut r = c.normal.entries().to_vec();
            r.push(c.offset.clone());
            r
        })
        .collect();
    for col in 0..d {
        let p = (col..d).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, p);
        let piv = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = &*x / &piv;
        }
        for r in 0..d {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(row) {
                    *x = &*x - &f * y;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[d].clone()).collect())
}

/// Every lattice point of `σ^∨` in `[-r, r]^d` is a nonnegative integer
/// combination of `basis`.
pub fn generates_box(dp: &DualPair, basis: &[IVec], r: i64) -> bool {
    let d = dp.dim();
    let mut memo = std::collections::HashMap::new();
    lattice_box(d, r)
        .into_iter()
        .filter(|u| dp.sigma_dual().contains_int(u))
        .all(|u| representable(dp, basis, &u, &mut memo))
}

fn representable(
    dp: &DualPair,
    basis: &[IVec],
    u: &IVec,
    memo: &mut std::collections::HashMap<IVec, bool>,
) -> bool {
    if u.iter().all(|&x| x == 0) {
        return true;
    }
    if let Some(&b) = memo.get(u) {
        return b;
    }
    let ok = basis.iter().any(|h| {
        let w: IVec = u.iter().zip(h).map(|(a, b)| a - b).collect();
        dp.sigma_dual().contains_int(&w) && representable(dp, basis, &w, memo)
    });
    memo.insert(u.clone(), ok);
    ok
}

/// `h` is not a sum of two nonzero lattice points of `σ^∨` from `[-r, r]^d`.
pub fn irreducible(dp: &DualPair, h: &IVec, r: i64) -> bool {
    lattice_box(h.len(), r).into_iter().all(|w| {
        let rest: IVec = h.iter().zip(&w).map(|(a, b)| a - b).collect();
        w.iter().all(|&x| x == 0)
            || rest.iter().all(|&x| x == 0)
            || !(dp.sigma_dual().contains_int(&w) && dp.sigma_dual().contains_int(&rest))
    })
}

pub fn lattice_box(d: usize, r: i64) -> Vec<IVec> {
    let mut out = vec![vec![]];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|p: IVec| {
                (-r..=r).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// The Newton polygon of a monomial ideal of `k[x, y]` as half-planes
/// `⟨w, n⟩ ≥ c`, from the lower-left convex hull of the exponents.
pub fn plane_newton(gens: &[IVec]) -> Vec<(IVec, i64)> {
    let mut pts: Vec<IVec> = gens.to_vec();
    pts.sort();
    pts.dedup();
    // Staircase: increasing x, strictly decreasing y.
    let mut stair: Vec<IVec> = Vec::new();
    for p in pts {
        if stair.last().map_or(true, |q| p[1] < q[1]) {
            stair.push(p);
        }
    }
    let mut hull: Vec<IVec> = Vec::new();
    for p in stair {
        while hull.len() >= 2 {
            let (a, b) = (&hull[hull.len() - 2], &hull[hull.len() - 1]);
            let turn = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
            if turn <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let mut out = vec![(vec![1, 0], hull[0][0]), (vec![0, 1], hull[hull.len() - 1][1])];
    for w in hull.windows(2) {
        let n = primitive(vec![w[0][1] - w[1][1], w[1][0] - w[0][0]]);
        out.push((n.clone(), dot(&n, &w[0])));
    }
    out
}

/// Howald's rule on the plane: `u ∈ τ(a^c)` iff `u + (1,1)` lies in the
/// interior of `c·P(a)`.
pub fn howald_contains(newton: &[(IVec, i64)], c: &Rational, u: &[i64]) -> bool {
    let w = [u[0] + 1, u[1] + 1];
    newton.iter().all(|(n, k)| int(dot(n, &w)) > c * int(*k))
}

/// `λ_a(w)` on the plane from the same polygon.
pub fn plane_lambda(newton: &[(IVec, i64)], w: &[i64]) -> Rational {
    newton
        .iter()
        .filter(|(_, k)| *k > 0)
        .map(|(n, k)| Rational::new(dot(n, w).into(), (*k).into()))
        .min()
        .unwrap()
}

/// Minimal elements of `{u ∈ N^2 ∩ [0, r]^2 : member(u)}`.
pub fn plane_scan(r: i64, member: impl Fn(&[i64]) -> bool) -> Vec<IVec> {
    let mut members = Vec::new();
    for x in 0..=r {
        for y in 0..=r {
            if member(&[x, y]) {
                members.push(vec![x, y]);
            }
        }
    }
    let mut out: Vec<IVec> = members
        .iter()
        .filter(|u| !members.iter().any(|v| v != *u && v[0] <= u[0] && v[1] <= u[1]))
        .cloned()
        .collect();
    out.sort();
    out
}

/// A random simplicial cone of dimension 2 or 3 with small entries.
pub fn random_simplicial(rng: &mut ChaCha8Rng, d: usize) -> Arc<DualPair> {
    loop {
        let rays: Vec<IVec> = (0..d)
            .map(|_| (0..d).map(|_| rng.gen_range(-1..=3)).collect())
            .collect();
        let det = det(&rays).abs();
        if det == 0 || det > 6 {
            continue;
        }
        if let Ok(dp) = DualPair::new(&rays) {
            if dp.sigma_rays().len() == d && dp.dropped_rays().is_empty() {
                return Arc::new(dp);
            }
        }
    }
}

/// A random nonzero point of `σ^∨ ∩ M` with coordinates in `[-4, 4]`.
pub fn random_point(rng: &mut ChaCha8Rng, dp: &DualPair) -> IVec {
    let basis = dp.hilbert_basis();
    loop {
        let mut u = vec![0; dp.dim()];
        for h in basis {
            let k = rng.gen_range(0..=2);
            for (x, y) in u.iter_mut().zip(h) {
                *x += k * y;
            }
        }
        if u.iter().any(|&x| x != 0) && u.iter().all(|x| x.abs() <= 4) {
            return u;
        }
    }
}

/// A random m-primary ideal: a multiple of every ray of `σ^∨` plus extras.
pub fn random_m_primary(rng: &mut ChaCha8Rng, dp: &Arc<DualPair>) -> MonomialIdeal {
    let mut gens: Vec<IVec> = dp
        .sigma_dual()
        .rays()
        .iter()
        .map(|u| {
            let k = (1..=3)
                .rev()
                .filter(|k| u.iter().all(|x| (k * x).abs() <= 4))
                .nth(rng.gen_range(0..2))
                .unwrap_or(1);
            u.iter().map(|x| k * x).collect()
        })
        .collect();
    for _ in 0..rng.gen_range(0..=2) {
        gens.push(random_point(rng, dp));
    }
    ideal(dp, gens)
}

/// A random proper ideal with one to three generators.
pub fn random_ideal(rng: &mut ChaCha8Rng, dp: &Arc<DualPair>) -> MonomialIdeal {
    let n = rng.gen_range(1..=3);
    ideal(dp, (0..n).map(|_| random_point(rng, dp)).collect())
}

pub fn random_rational_point(rng: &mut ChaCha8Rng, d: usize) -> QVector {
    QVector::new(
        (0..d)
            .map(|_| Rational::new(rng.gen_range(-12..=12).into(), rng.gen_range(1..=4).into()))
            .collect(),
    )
}

pub fn is_normalized(q: &Rational) -> bool {
    q.denom().is_positive() && q.numer().gcd(q.denom()) == 1.into()
}
