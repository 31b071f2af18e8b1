//! Threshold invariants of a monomial ideal `a`.
//!
//! Everything is expressed through `λ_a(u) = sup{λ ≥ 0 : u ∈ λP(a)}`, which on
//! `σ^∨` equals `min ⟨u, v'_l⟩ / λ'_l` over the Newton facets with positive
//! offset (the others hold automatically because their normals lie in `σ`).
//! Suprema over open regions are evaluated as maxima over their closures;
//! `λ_a` is continuous, so the values agree.

mod fthreshold;
mod jumping;
mod regularity;
mod test_ideal;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lp::{lp_solve, Constraint, LinearProgram, LpOutcome};
use crate::newton::NewtonPolyhedron;
use crate::rational::{int, QVector, Rational};

pub use fthreshold::{f_threshold, f_threshold_candidates};
pub use jumping::{jumping_coefficients, JumpingChain, JumpingStep};
pub use regularity::{gorenstein_witness_ideal, regularity_probe, RegularityReport};
pub use test_ideal::{test_ideal_contains, test_ideal_generators, TestIdealOptions};

/// How a [`ThresholdValue`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Maximum over the convex cells of `σ^∨ \ Q(J)`.
    Cells,
    /// Maximum over the finite candidate set on `∂Q(J)` (simplicial cones).
    Candidates,
    /// A single linear program.
    Lp,
}

/// An exact invariant together with a point where its defining supremum is attained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdValue {
    pub value: Rational,
    /// `λ_a(witness) = value`.
    pub witness: QVector,
    pub method: Method,
}

/// `λ_a(u)` for `u ∈ σ^∨`.
pub fn lambda_value(a: &MonomialIdeal, u: &QVector) -> Result<Rational> {
    a.require_proper()?;
    if !a.context().sigma_dual().contains(u)? {
        return Err(Error::NotInDualCone(u.to_string()));
    }
    Ok(lambda_unchecked(a.newton_polyhedron(), u))
}

pub(crate) fn lambda_unchecked(p: &NewtonPolyhedron, u: &QVector) -> Rational {
    p.positive_facets()
        .map(|f| u.dot_int(&f.normal) / &f.offset)
        .min()
        .unwrap_or_else(Rational::zero)
}

fn lift(v: &QVector, extra: &[Rational]) -> QVector {
    let mut e = v.entries().to_vec();
    e.extend_from_slice(extra);
    QVector::new(e)
}

/// Maximizes `λ_a(shift + ω)` over `ω` in the bounded polyhedron `region`.
///
/// The witness is balanced: among all optimal `ω`, one maximizing
/// `min_j ⟨shift + ω, v_j⟩` is returned. `None` if `region` is empty.
pub(crate) fn maximize_lambda(
    a: &MonomialIdeal,
    shift: &QVector,
    region: &[Constraint],
) -> Option<(Rational, QVector)> {
    let best = maximize_lambda_value(a, shift, region)?;
    let witness = balanced_witness(a, shift, region, &best.0).unwrap_or(best.1);
    Some((best.0, witness))
}

fn lambda_constraints(a: &MonomialIdeal, shift: &QVector, region: &[Constraint], extra: usize) -> Vec<Constraint> {
    let pad = vec![Rational::zero(); 1 + extra];
    let mut cons: Vec<Constraint> = region
        .iter()
        .map(|c| Constraint {
            normal: lift(&c.normal, &pad),
            offset: c.offset.clone(),
            sense: c.sense,
        })
        .collect();
    let d = shift.dim();
    for f in a.newton_polyhedron().positive_facets() {
        // ⟨shift + ω, v'⟩ ≥ λ' t
        let mut n: Vec<Rational> = f.normal.iter().map(|&x| int(x)).collect();
        n.push(-&f.offset);
        n.extend(std::iter::repeat(Rational::zero()).take(extra));
        debug_assert_eq!(n.len(), d + 1 + extra);
        cons.push(Constraint::ge(QVector::new(n), -shift.dot_int(&f.normal)));
    }
    cons
}

fn axis(dim: usize, k: usize) -> QVector {
    let mut e = vec![Rational::zero(); dim];
    e[k] = Rational::one();
    QVector::new(e)
}

fn maximize_lambda_value(
    a: &MonomialIdeal,
    shift: &QVector,
    region: &[Constraint],
) -> Option<(Rational, QVector)> {
    let d = shift.dim();
    let lp = LinearProgram {
        objective: axis(d + 1, d),
        constraints: lambda_constraints(a, shift, region, 0),
    };
    match lp_solve(&lp) {
        LpOutcome::Optimal { value, point } => {
            let mut e = point.into_entries();
            e.truncate(d);
            Some((value, QVector::new(e)))
        }
        LpOutcome::Infeasible => None,
        LpOutcome::Unbounded => unreachable!("λ is maximized over a bounded region"),
    }
}

fn balanced_witness(
    a: &MonomialIdeal,
    shift: &QVector,
    region: &[Constraint],
    optimum: &Rational,
) -> Option<QVector> {
    let d = shift.dim();
    // Variables (ω, t, s).
    let mut cons = lambda_constraints(a, shift, region, 1);
    cons.push(Constraint::ge(axis(d + 2, d), optimum.clone()));
    for v in a.context().sigma_rays() {
        // ⟨shift + ω, v⟩ - s ≥ 0
        let mut n: Vec<Rational> = v.iter().map(|&x| int(x)).collect();
        n.push(Rational::zero());
        n.push(-Rational::one());
        cons.push(Constraint::ge(QVector::new(n), -shift.dot_int(v)));
    }
    let lp = LinearProgram {
        objective: axis(d + 2, d + 1),
        constraints: cons,
    };
    lp_solve(&lp).optimal().map(|(_, point)| {
        let mut e = point.into_entries();
        e.truncate(d);
        QVector::new(e)
    })
}

/// `0 ≤ ⟨ω, v_j⟩ ≤ 1` for every ray `v_j` of `σ`: the closure of `σ^∨ \ O`.
pub(crate) fn unit_box(a: &MonomialIdeal) -> Vec<Constraint> {
    a.context()
        .sigma_rays()
        .iter()
        .flat_map(|v| {
            let n = QVector::from_ints(v);
            [
                Constraint::ge(n.clone(), Rational::zero()),
                Constraint::le(n, Rational::one()),
            ]
        })
        .collect()
}

/// F-pure threshold `c(a) = sup λ_a` over `{u ∈ σ^∨ : ⟨u, v_j⟩ < 1 ∀j}`.
pub fn fpt(a: &MonomialIdeal) -> Result<ThresholdValue> {
    a.require_proper()?;
    let origin = QVector::zeros(a.dim());
    let (value, witness) =
        maximize_lambda(a, &origin, &unit_box(a)).expect("the unit box contains the origin");
    Ok(ThresholdValue {
        value,
        witness,
        method: Method::Lp,
    })
}

/// `μ_a(u) = sup λ_a(u + ω)` over `ω ∈ σ^∨ \ O`; the witness is `u + ω`.
pub fn mu_value(a: &MonomialIdeal, u: &[i64]) -> Result<ThresholdValue> {
    a.require_proper()?;
    if !a.context().sigma_dual().contains_int(u) {
        return Err(Error::NotInSemigroup(u.to_vec()));
    }
    let shift = QVector::from_ints(u);
    let (value, omega) =
        maximize_lambda(a, &shift, &unit_box(a)).expect("the unit box contains the origin");
    Ok(ThresholdValue {
        value,
        witness: shift.add(&omega),
        method: Method::Lp,
    })
}

pub(crate) fn require_positive(c: &Rational) -> Result<()> {
    if c.is_positive() {
        Ok(())
    } else {
        Err(Error::InvalidExponent(format!("exponent must be positive, got {c}")))
    }
}
