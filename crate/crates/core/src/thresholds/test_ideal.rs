//! Test ideals `τ(a^c)` of monomial ideals.
//!
//! `X^u ∈ τ(a^c)` iff some `ω ∈ M_R` with `⟨ω, v_j⟩ ≤ 1` for every ray puts
//! `u + ω` in the interior of `c·P(a)`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lp::{lp_solve, lp_strict_interior, Constraint, HalfSpace, LinearProgram};
use crate::rational::{ceil_to_i64, dot_int, int, IVec, QVector, Rational};

use super::require_positive;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TestIdealOptions {
    /// How often the enumeration box may double before giving up.
    pub max_doublings: u32,
}

impl Default for TestIdealOptions {
    fn default() -> Self {
        TestIdealOptions { max_doublings: 10 }
    }
}

/// Whether `X^u ∈ τ(a^c)`.
pub fn test_ideal_contains(a: &MonomialIdeal, c: &Rational, u: &[i64]) -> Result<bool> {
    require_positive(c)?;
    let dp = a.context();
    if u.len() != dp.dim() {
        return Err(Error::DimensionMismatch {
            expected: dp.dim(),
            found: u.len(),
        });
    }
    if !dp.sigma_dual().contains_int(u) {
        return Err(Error::NotInSemigroup(u.to_vec()));
    }
    Ok(contains_unchecked(a, c, u))
}

fn contains_unchecked(a: &MonomialIdeal, c: &Rational, u: &[i64]) -> bool {
    let mut halfspaces: Vec<HalfSpace> = a
        .context()
        .sigma_rays()
        .iter()
        .map(|v| HalfSpace::closed(Constraint::le(QVector::from_ints(v), int(1))))
        .collect();
    for f in a.newton_polyhedron().facets() {
        // ⟨ω, v'⟩ > c·λ' - ⟨u, v'⟩
        let rhs = c * &f.offset - int(dot_int(u, &f.normal));
        halfspaces.push(HalfSpace::open(Constraint::ge(QVector::from_ints(&f.normal), rhs)));
    }
    lp_strict_interior(a.dim(), &halfspaces).is_some()
}

/// Lattice points of `{u : 0 ≤ ⟨u, v_j⟩ ≤ bound_j}`, coordinate by coordinate
/// with LP bounds on each coordinate given the earlier ones.
fn box_points(rays: &[IVec], bound: &[i64]) -> Vec<IVec> {
    let d = rays[0].len();
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(d);
    fill(rays, bound, &mut prefix, d, &mut out);
    out
}

fn fill(rays: &[IVec], bound: &[i64], prefix: &mut IVec, d: usize, out: &mut Vec<IVec>) {
    let k = prefix.len();
    if k == d {
        if rays
            .iter()
            .zip(bound)
            .all(|(v, &b)| (0..=b).contains(&dot_int(prefix, v)))
        {
            out.push(prefix.clone());
        }
        return;
    }
    let free = d - k;
    let mut cons = Vec::new();
    for (v, &b) in rays.iter().zip(bound) {
        let fixed: i64 = prefix.iter().zip(v).map(|(x, y)| x * y).sum();
        let n = QVector::from_ints(&v[k..]);
        cons.push(Constraint::ge(n.clone(), int(-fixed)));
        cons.push(Constraint::le(n, int(b - fixed)));
    }
    let mut e = vec![Rational::zero(); free];
    e[0] = int(1);
    let obj = QVector::new(e);
    let hi = lp_solve(&LinearProgram {
        objective: obj.clone(),
        constraints: cons.clone(),
    })
    .optimal();
    let lo = lp_solve(&LinearProgram {
        objective: obj.scale(&int(-1)),
        constraints: cons,
    })
    .optimal();
    let (Some((hi, _)), Some((lo, _))) = (hi, lo) else {
        return;
    };
    let lo = ceil_to_i64(&(-lo)).expect("bounded box");
    let hi = hi.floor().to_integer();
    let hi: i64 = hi.try_into().expect("bounded box");
    for x in lo..=hi {
        prefix.push(x);
        fill(rays, bound, prefix, d, out);
        prefix.pop();
    }
}

/// Minimal generators of `τ(a^c)`.
///
/// Lattice points of `σ^∨` with `⟨u, v_j⟩ ≤ ⌈c·M_j⌉ + K_j` are tested, where
/// `M_j` and `K_j` are the largest pairings of a Newton vertex and of a
/// Hilbert basis element with `v_j`. The result is accepted once every member
/// near the outer shell of the box is dominated by a generator found strictly
/// inside it (`⟨g, v_j⟩ ≤ B_j - K_j`); otherwise the box doubles.
pub fn test_ideal_generators(
    a: &MonomialIdeal,
    c: &Rational,
    opts: &TestIdealOptions,
) -> Result<MonomialIdeal> {
    require_positive(c)?;
    a.require_proper()?;
    let dp = a.context();
    let rays = dp.sigma_rays();
    let newton = a.newton_polyhedron();
    let max_pairing = |pts: &[IVec], v: &IVec| pts.iter().map(|w| dot_int(w, v)).max().unwrap_or(0);
    let k: IVec = rays.iter().map(|v| max_pairing(dp.hilbert_basis(), v)).collect();
    let mut bound: IVec = rays
        .iter()
        .zip(&k)
        .map(|(v, kj)| {
            let m = int(max_pairing(newton.vertices(), v));
            Ok(ceil_to_i64(&(c * m))? + kj)
        })
        .collect::<Result<_>>()?;

    let mut doublings = 0;
    loop {
        let generators = enumerate(a, c, rays, &bound);
        let certified = !generators.is_empty()
            && generators.iter().all(|g| {
                rays.iter()
                    .zip(&bound)
                    .zip(&k)
                    .all(|((v, b), kj)| dot_int(g, v) <= b - kj)
            });
        if certified {
            return MonomialIdeal::new(dp, generators);
        }
        if doublings == opts.max_doublings {
            return Err(Error::EnumerationBoundExceeded {
                doublings,
                partial: generators,
            });
        }
        doublings += 1;
        for b in &mut bound {
            *b = b
                .checked_mul(2)
                .ok_or_else(|| Error::Overflow("test ideal enumeration box".into()))?;
        }
    }
}

/// Minimal members among the box points, scanned by increasing total pairing
/// so that a point dominated by a known member skips its LP.
fn enumerate(a: &MonomialIdeal, c: &Rational, rays: &[IVec], bound: &[i64]) -> Vec<IVec> {
    let dual = a.context().sigma_dual();
    let mut points = box_points(rays, bound);
    points.sort_by_cached_key(|u| (rays.iter().map(|v| dot_int(u, v)).sum::<i64>(), u.clone()));
    let mut generators: Vec<IVec> = Vec::new();
    for u in points {
        let dominated = generators.iter().any(|g| {
            let diff: IVec = u.iter().zip(g).map(|(x, y)| x - y).collect();
            dual.contains_int(&diff)
        });
        if !dominated && contains_unchecked(a, c, &u) {
            generators.push(u);
        }
    }
    generators
}
