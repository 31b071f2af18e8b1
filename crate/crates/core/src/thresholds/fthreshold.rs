//! F-thresholds `c^J(a) = sup λ_a` over `σ^∨ \ Q(J)`, by two independent routes.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::solve_linear;
use crate::lp::{lp_strict_interior, Constraint, HalfSpace};
use crate::rational::{dot_int, int, QVector, Rational};

use super::{lambda_unchecked, maximize_lambda, maximize_lambda_value, Method, ThresholdValue};

fn validate(a: &MonomialIdeal, j: &MonomialIdeal) -> Result<()> {
    if a.context() != j.context() {
        return Err(Error::ContextMismatch);
    }
    a.require_proper()?;
    if !j.is_m_primary() {
        return Err(Error::UnsupportedJ(format!(
            "J = {:?} is not m-primary",
            j.generators()
        )));
    }
    if !a.is_in_radical_of(j) {
        return Err(Error::UnsupportedJ("a is not contained in the radical of J".into()));
    }
    Ok(())
}

/// Per-ray upper bounds `⟨u, v_j⟩ < T_j` of one convex cell; `None` is `+∞`.
type Thresholds = Vec<Option<i64>>;

/// The maximal cells of `σ^∨ \ Q(J)`.
///
/// A choice map `φ` sending each generator `b_i` to a ray `v_{φ(i)}` gives the
/// cell `{u ∈ σ^∨ : ⟨u, v_{φ(i)}⟩ < ⟨b_i, v_{φ(i)}⟩ ∀i}`, which only depends on
/// the per-ray minima `T_j`. The cells are therefore enumerated by threshold
/// vectors `T`, valid when every generator is excluded by some finite `T_j`,
/// and only the componentwise maximal ones are kept.
pub(crate) fn maximal_cells(j: &MonomialIdeal) -> Vec<Thresholds> {
    let rays = j.context().sigma_rays();
    let gens = j.generators();
    let pair: Vec<Vec<i64>> = gens
        .iter()
        .map(|b| rays.iter().map(|v| dot_int(b, v)).collect())
        .collect();
    // Options per ray, ascending, with +∞ last.
    let options: Vec<Vec<Option<i64>>> = (0..rays.len())
        .map(|k| {
            let mut vals: Vec<i64> = pair.iter().map(|p| p[k]).filter(|&x| x > 0).collect();
            vals.sort_unstable();
            vals.dedup();
            vals.into_iter().map(Some).chain([None]).collect()
        })
        .collect();
    let valid = |t: &[Option<i64>]| {
        pair.iter().all(|p| {
            t.iter()
                .zip(p)
                .any(|(tk, &pk)| matches!(tk, Some(x) if *x <= pk))
        })
    };

    let mut out = Vec::new();
    let mut idx = vec![0usize; rays.len()];
    'outer: loop {
        let t: Thresholds = idx.iter().enumerate().map(|(k, &i)| options[k][i]).collect();
        if valid(&t) {
            let maximal = (0..rays.len()).all(|k| {
                idx[k] + 1 == options[k].len() || {
                    let mut bumped = t.clone();
                    bumped[k] = options[k][idx[k] + 1];
                    !valid(&bumped)
                }
            });
            if maximal {
                out.push(t);
            }
        }
        for k in 0..rays.len() {
            if idx[k] + 1 < options[k].len() {
                idx[k] += 1;
                continue 'outer;
            }
            idx[k] = 0;
        }
        break;
    }
    out
}

fn cell_region(j: &MonomialIdeal, t: &Thresholds) -> (Vec<HalfSpace>, Vec<Constraint>) {
    let mut open = Vec::new();
    let mut closed = Vec::new();
    for (v, tk) in j.context().sigma_rays().iter().zip(t) {
        let n = QVector::from_ints(v);
        let lower = Constraint::ge(n.clone(), Rational::zero());
        open.push(HalfSpace::closed(lower.clone()));
        closed.push(lower);
        if let Some(x) = tk {
            let upper = Constraint::le(n, int(*x));
            open.push(HalfSpace::open(upper.clone()));
            closed.push(upper);
        }
    }
    (open, closed)
}

#[cfg(feature = "parallel")]
fn map_cells<T: Send, F: Fn(&Thresholds) -> T + Sync + Send>(cells: &[Thresholds], f: F) -> Vec<T> {
    use rayon::prelude::*;
    cells.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_cells<T, F: Fn(&Thresholds) -> T>(cells: &[Thresholds], f: F) -> Vec<T> {
    cells.iter().map(f).collect()
}

/// `c^J(a)` by maximizing `λ_a` over the closure of every nonempty convex cell
/// of `σ^∨ \ Q(J)`. Works for any full-dimensional `σ`; `J` must be m-primary.
pub fn f_threshold(a: &MonomialIdeal, j: &MonomialIdeal) -> Result<ThresholdValue> {
    validate(a, j)?;
    let d = a.dim();
    let origin = QVector::zeros(d);
    let cells = maximal_cells(j);
    let values: Vec<Option<Rational>> = map_cells(&cells, |t| {
        let (open, closed) = cell_region(j, t);
        lp_strict_interior(d, &open)?;
        maximize_lambda_value(a, &origin, &closed).map(|(v, _)| v)
    });
    let (best_cell, best) = values
        .iter()
        .enumerate()
        .filter_map(|(i, v)| v.as_ref().map(|v| (i, v)))
        .fold(None::<(usize, &Rational)>, |acc, (i, v)| match acc {
            Some((_, b)) if b >= v => acc,
            _ => Some((i, v)),
        })
        .expect("σ^∨ \\ Q(J) contains a neighbourhood of the origin");
    let (_, closed) = cell_region(j, &cells[best_cell]);
    let (value, witness) = maximize_lambda(a, &origin, &closed).expect("nonempty cell");
    debug_assert_eq!(&value, best);
    Ok(ThresholdValue {
        value,
        witness,
        method: Method::Cells,
    })
}

/// `u` lies on the boundary of `Q(J)` relative to `σ^∨`.
///
/// For each generator `b` with `u ∈ b + σ^∨`, some ray `v` must have
/// `⟨u - b, v⟩ = 0` while `⟨u, v⟩ > 0`; otherwise a whole neighbourhood of `u`
/// in `σ^∨` stays inside `b + σ^∨`.
pub fn on_staircase_boundary(j: &MonomialIdeal, u: &QVector) -> bool {
    let rays = j.context().sigma_rays();
    let mut inside = false;
    for b in j.generators() {
        let diffs: Vec<Rational> = rays.iter().map(|v| u.dot_int(v) - int(dot_int(b, v))).collect();
        if diffs.iter().any(Signed::is_negative) {
            continue;
        }
        inside = true;
        let escapes = rays
            .iter()
            .zip(&diffs)
            .any(|(v, dv)| dv.is_zero() && u.dot_int(v).is_positive());
        if !escapes {
            return false;
        }
    }
    inside
}

/// `c^J(a)` as the maximum of `λ_a` over the finite candidate set of points
/// `u` with `⟨u, v_k⟩ = ⟨b_{i_k}, v_k⟩` for every ray, filtered to the
/// boundary of `Q(J)`. Requires simplicial `σ`.
pub fn f_threshold_candidates(a: &MonomialIdeal, j: &MonomialIdeal) -> Result<ThresholdValue> {
    let dp = a.context();
    if !dp.sigma().is_simplicial() {
        return Err(Error::SimplicialRequired {
            rays: dp.sigma_rays().len(),
            dim: dp.dim(),
        });
    }
    validate(a, j)?;
    let d = dp.dim();
    let rays: Vec<QVector> = dp.sigma_rays().iter().map(|v| QVector::from_ints(v)).collect();
    let gens = j.generators();
    let t = gens.len();
    let newton = a.newton_polyhedron();

    let mut best: Option<(Rational, QVector)> = None;
    let mut tuple = vec![0usize; d];
    'outer: loop {
        let rhs = QVector::new(
            tuple
                .iter()
                .zip(dp.sigma_rays())
                .map(|(&i, v)| int(dot_int(&gens[i], v)))
                .collect(),
        );
        let u = solve_linear(&rays, &rhs).expect("simplicial rays are independent");
        if on_staircase_boundary(j, &u) {
            let l = lambda_unchecked(newton, &u);
            if best.as_ref().map_or(true, |(b, _)| l > *b) {
                best = Some((l, u));
            }
        }
        for k in 0..d {
            if tuple[k] + 1 < t {
                tuple[k] += 1;
                continue 'outer;
            }
            tuple[k] = 0;
        }
        break;
    }
    let (value, witness) = best.expect("the tuple of a single generator lies on ∂Q(J)");
    Ok(ThresholdValue {
        value,
        witness,
        method: Method::Candidates,
    })
}
