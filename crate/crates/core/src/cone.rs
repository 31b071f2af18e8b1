//! Rational polyhedral cones and the pair `(σ, σ^∨)`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{
    abs_determinant, primitive_from_big, primitive_from_rational, primitive_vector, rank_int,
    solve_linear,
};
use crate::lp::{lp_solve, Constraint, LinearProgram, LpOutcome};
use crate::rational::{dot_int, int, IVec, QVector, Rational};

/// A strongly convex, full-dimensional rational cone given by both its
/// extreme rays and its (inward) facet normals, all primitive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    dim: usize,
    rays: Vec<IVec>,
    facet_normals: Vec<IVec>,
}

impl Cone {
    /// Cone generated by `rays` in `R^dim`.
    ///
    /// Rays are made primitive and deduplicated; rays that are not extreme are
    /// returned separately so the caller can warn about them.
    pub fn from_rays(rays: &[IVec], dim: usize) -> Result<(Cone, Vec<IVec>)> {
        if dim == 0 {
            return Err(Error::DegenerateCone("dimension must be positive".into()));
        }
        let mut prim: Vec<IVec> = Vec::with_capacity(rays.len());
        for r in rays {
            if r.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: r.len(),
                });
            }
            let p = primitive_vector(r).map_err(|_| {
                Error::DegenerateCone("the zero vector cannot be a ray".into())
            })?;
            if !prim.contains(&p) {
                prim.push(p);
            }
        }
        if rank_int(&prim) < dim {
            return Err(Error::DegenerateCone(format!(
                "rays span a subspace of dimension {} < {dim}",
                rank_int(&prim)
            )));
        }
        // Strong convexity: some u pairs to >= 1 with every ray.
        let lp = LinearProgram {
            objective: QVector::zeros(dim),
            constraints: prim
                .iter()
                .map(|r| Constraint::ge(QVector::from_ints(r), int(1)))
                .collect(),
        };
        if lp_solve(&lp) == LpOutcome::Infeasible {
            return Err(Error::DegenerateCone(
                "cone contains a line (not strongly convex)".into(),
            ));
        }
        let facets = double_description(&prim, dim)?;
        let (extreme, dropped): (Vec<IVec>, Vec<IVec>) = prim.into_iter().partition(|r| {
            let tight: Vec<IVec> = facets
                .iter()
                .filter(|f| dot_int(f, r) == 0)
                .cloned()
                .collect();
            rank_int(&tight) == dim - 1
        });
        Ok((
            Cone {
                dim,
                rays: extreme,
                facet_normals: facets,
            },
            dropped,
        ))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[IVec] {
        &self.rays
    }

    pub fn facet_normals(&self) -> &[IVec] {
        &self.facet_normals
    }

    /// The dual cone: rays and facet normals swap roles.
    pub fn dual(&self) -> Cone {
        Cone {
            dim: self.dim,
            rays: self.facet_normals.clone(),
            facet_normals: self.rays.clone(),
        }
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if n == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: n,
            })
        }
    }

    pub fn contains(&self, u: &QVector) -> Result<bool> {
        self.check_dim(u.dim())?;
        Ok(self
            .facet_normals
            .iter()
            .all(|n| !u.dot_int(n).is_negative()))
    }

    /// Interior membership: every facet inequality strict.
    pub fn contains_strict(&self, u: &QVector) -> Result<bool> {
        self.check_dim(u.dim())?;
        Ok(self.facet_normals.iter().all(|n| u.dot_int(n).is_positive()))
    }

    pub fn contains_int(&self, u: &[i64]) -> bool {
        u.len() == self.dim && self.facet_normals.iter().all(|n| dot_int(n, u) >= 0)
    }

    pub fn contains_int_strict(&self, u: &[i64]) -> bool {
        u.len() == self.dim && self.facet_normals.iter().all(|n| dot_int(n, u) > 0)
    }

    pub fn is_simplicial(&self) -> bool {
        self.rays.len() == self.dim
    }

    pub fn is_smooth(&self) -> bool {
        self.is_simplicial() && abs_determinant(&self.rays).is_one()
    }
}

/// Extreme rays of the pointed cone `{x : ⟨c, x⟩ ≥ 0 for all c in constraints}`
/// by the double-description method.
pub(crate) fn double_description(constraints: &[IVec], dim: usize) -> Result<Vec<IVec>> {
    let mut order: Vec<usize> = Vec::with_capacity(constraints.len());
    let mut basis_rows: Vec<IVec> = Vec::new();
    for (k, c) in constraints.iter().enumerate() {
        basis_rows.push(c.clone());
        if rank_int(&basis_rows) == basis_rows.len() {
            order.push(k);
        } else {
            basis_rows.pop();
        }
        if order.len() == dim {
            break;
        }
    }
    if order.len() < dim {
        return Err(Error::DegenerateCone(
            "inequalities do not cut out a pointed cone".into(),
        ));
    }

    // Initial simplicial cone: columns of the inverse of the basis matrix.
    let basis_q: Vec<QVector> = basis_rows.iter().map(|r| QVector::from_ints(r)).collect();
    let mut rays: Vec<Vec<BigInt>> = Vec::with_capacity(dim);
    for k in 0..dim {
        let mut e = vec![Rational::zero(); dim];
        e[k] = Rational::one();
        let col = solve_linear(&basis_q, &QVector::new(e))?;
        let p = primitive_from_rational(col.entries())?;
        rays.push(p.into_iter().map(BigInt::from).collect());
    }

    let big = |v: &IVec| -> Vec<BigInt> { v.iter().map(|&x| BigInt::from(x)).collect() };
    let dot = |a: &[BigInt], b: &[BigInt]| -> BigInt {
        a.iter().zip(b).fold(BigInt::zero(), |s, (x, y)| s + x * y)
    };
    let mut processed: Vec<Vec<BigInt>> = order.iter().map(|&k| big(&constraints[k])).collect();

    for (k, c) in constraints.iter().enumerate() {
        if order.contains(&k) {
            continue;
        }
        let c = big(c);
        let vals: Vec<BigInt> = rays.iter().map(|r| dot(&c, r)).collect();
        let mut next: Vec<Vec<BigInt>> = rays
            .iter()
            .zip(&vals)
            .filter(|(_, v)| !v.is_negative())
            .map(|(r, _)| r.clone())
            .collect();
        if dim >= 2 {
            for (p, vp) in rays.iter().zip(&vals).filter(|(_, v)| v.is_positive()) {
                for (n, vn) in rays.iter().zip(&vals).filter(|(_, v)| v.is_negative()) {
                    let common: Vec<IVec> = processed
                        .iter()
                        .filter(|h| dot(h, p).is_zero() && dot(h, n).is_zero())
                        .map(|h| h.iter().map(|x| x.to_i64().unwrap_or(0)).collect())
                        .collect();
                    if rank_int(&common) != dim - 2 {
                        continue;
                    }
                    let combo: Vec<BigInt> = p
                        .iter()
                        .zip(n)
                        .map(|(a, b)| vp * b - vn * a)
                        .collect();
                    let g = combo.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
                    let combo: Vec<BigInt> = combo.into_iter().map(|x| x / &g).collect();
                    if !next.contains(&combo) {
                        next.push(combo);
                    }
                }
            }
        }
        rays = next;
        processed.push(c);
    }

    let mut out: Vec<IVec> = rays
        .iter()
        .map(|r| primitive_from_big(r))
        .collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// The dual cone `σ^∨` of the cone generated by `rays`.
pub fn dual_cone(rays: &[IVec], dim: usize) -> Result<Cone> {
    Ok(Cone::from_rays(rays, dim)?.0.dual())
}

/// Gorenstein data of `σ`: the point `ω` with `⟨ω, v_j⟩ = 1` on every ray.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinData {
    /// `None` when the system `⟨ω, v_j⟩ = 1` is inconsistent.
    pub omega: Option<QVector>,
    /// Minimal `r > 0` with `rω ∈ M`.
    pub index: Option<u64>,
    /// Always true for full-dimensional `σ`; kept for reporting.
    pub unique: bool,
}

impl GorensteinData {
    pub fn is_gorenstein(&self) -> bool {
        self.index == Some(1)
    }
}

/// A cone `σ ⊂ N_R` together with `σ^∨ ⊂ M_R`.
///
/// `σ`'s rays are the facet normals of `σ^∨` and vice versa.
#[derive(Debug, Clone)]
pub struct DualPair {
    sigma: Cone,
    sigma_dual: Cone,
    dropped_rays: Vec<IVec>,
    hilbert: OnceLock<Vec<IVec>>,
}

impl PartialEq for DualPair {
    fn eq(&self, other: &Self) -> bool {
        self.sigma == other.sigma
    }
}

impl Eq for DualPair {}

impl DualPair {
    /// Builds the pair from the rays of `σ`; the dimension is the ray length.
    pub fn new(sigma_rays: &[IVec]) -> Result<DualPair> {
        let dim = sigma_rays
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::DegenerateCone("no rays given".into()))?;
        let (sigma, dropped_rays) = Cone::from_rays(sigma_rays, dim)?;
        Ok(DualPair {
            sigma_dual: sigma.dual(),
            sigma,
            dropped_rays,
            hilbert: OnceLock::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.sigma.dim
    }

    pub fn sigma(&self) -> &Cone {
        &self.sigma
    }

    pub fn sigma_dual(&self) -> &Cone {
        &self.sigma_dual
    }

    /// The primitive rays `v_j` of `σ` (facet normals of `σ^∨`).
    pub fn sigma_rays(&self) -> &[IVec] {
        &self.sigma.rays
    }

    /// Input rays that were not extreme and have been discarded.
    pub fn dropped_rays(&self) -> &[IVec] {
        &self.dropped_rays
    }

    /// Hilbert basis of `σ^∨ ∩ M`, computed once.
    pub fn hilbert_basis(&self) -> &[IVec] {
        self.hilbert
            .get_or_init(|| crate::hilbert::hilbert_basis(&self.sigma_dual))
    }

    pub fn gorenstein_data(&self) -> GorensteinData {
        let a: Vec<QVector> = self.sigma.rays.iter().map(|r| QVector::from_ints(r)).collect();
        let ones = QVector::new(vec![int(1); a.len()]);
        match solve_linear(&a, &ones) {
            Ok(omega) => {
                let index = omega.denominator_lcm().to_u64();
                GorensteinData {
                    omega: Some(omega),
                    index,
                    unique: true,
                }
            }
            Err(_) => GorensteinData {
                omega: None,
                index: None,
                unique: true,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn sorted(mut v: Vec<IVec>) -> Vec<IVec> {
        v.sort();
        v
    }

    pub(crate) fn hmtw() -> Vec<IVec> {
        vec![vec![1, 0, 0], vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 1]]
    }

    #[test]
    fn orthant_is_self_dual() {
        let d = dual_cone(&[vec![1, 0], vec![0, 1]], 2).unwrap();
        assert_eq!(sorted(d.rays().to_vec()), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn a1_dual() {
        let d = dual_cone(&[vec![1, 0], vec![1, 2]], 2).unwrap();
        assert_eq!(sorted(d.rays().to_vec()), vec![vec![0, 1], vec![2, -1]]);
    }

    #[test]
    fn nonsimplicial_example_dual() {
        let d = dual_cone(&hmtw(), 3).unwrap();
        assert_eq!(
            sorted(d.rays().to_vec()),
            sorted(vec![vec![1, 0, 1], vec![0, 1, 1], vec![0, 0, 1], vec![1, 1, 1]])
        );
    }

    #[test]
    fn r_gorenstein_dual_rays() {
        for r in [1i64, 2, 3, 5] {
            let d = dual_cone(&[vec![1, 0, 0], vec![1, 1, 0], vec![0, 1, r]], 3).unwrap();
            assert_eq!(
                sorted(d.rays().to_vec()),
                sorted(vec![vec![r, -r, 1], vec![0, r, -1], vec![0, 0, 1]])
            );
        }
    }

    #[test]
    fn containment() {
        let orthant = dual_cone(&[vec![1, 0], vec![0, 1]], 2).unwrap();
        let p = QVector::from_ints(&[1, 1]);
        assert!(orthant.contains(&p).unwrap() && orthant.contains_strict(&p).unwrap());
        let p = QVector::from_ints(&[1, 0]);
        assert!(orthant.contains(&p).unwrap() && !orthant.contains_strict(&p).unwrap());
        let a1 = dual_cone(&[vec![1, 0], vec![1, 2]], 2).unwrap();
        assert!(!a1.contains(&QVector::from_ints(&[1, -1])).unwrap());
        assert!(matches!(
            a1.contains(&QVector::from_ints(&[1, 1, 1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn simplicial_and_smooth() {
        let (c, _) = Cone::from_rays(&[vec![1, 0], vec![0, 1]], 2).unwrap();
        assert!(c.is_simplicial() && c.is_smooth());
        let (c, _) = Cone::from_rays(&[vec![1, 0], vec![1, 2]], 2).unwrap();
        assert!(c.is_simplicial() && !c.is_smooth());
        let (c, _) = Cone::from_rays(&hmtw(), 3).unwrap();
        assert!(!c.is_simplicial() && !c.is_smooth());
    }

    #[test]
    fn degenerate_inputs() {
        assert!(matches!(
            Cone::from_rays(&[vec![1, 0], vec![-1, 0], vec![0, 1]], 2),
            Err(Error::DegenerateCone(_))
        ));
        assert!(matches!(
            Cone::from_rays(&[vec![1, 0], vec![2, 0]], 2),
            Err(Error::DegenerateCone(_))
        ));
        assert!(matches!(DualPair::new(&[]), Err(Error::DegenerateCone(_))));
    }

    #[test]
    fn non_extreme_and_duplicate_rays_are_dropped() {
        let (c, dropped) =
            Cone::from_rays(&[vec![1, 0], vec![2, 0], vec![1, 1], vec![0, 1]], 2).unwrap();
        assert_eq!(c.rays(), &[vec![1, 0], vec![0, 1]]);
        assert_eq!(dropped, vec![vec![1, 1]]);
    }

    #[test]
    fn gorenstein_examples() {
        let g = DualPair::new(&[vec![1, 0], vec![1, 2]]).unwrap().gorenstein_data();
        assert_eq!(g.omega, Some(QVector::from_ints(&[1, 0])));
        assert_eq!(g.index, Some(1));

        for r in [2i64, 3, 5] {
            let g = DualPair::new(&[vec![1, 0, 0], vec![1, 1, 0], vec![0, 1, r]])
                .unwrap()
                .gorenstein_data();
            assert_eq!(g.omega, Some(QVector::new(vec![int(1), int(0), rat(1, r)])));
            assert_eq!(g.index, Some(r as u64));
        }

        let g = DualPair::new(&hmtw()).unwrap().gorenstein_data();
        assert_eq!(g.omega, Some(QVector::from_ints(&[1, 1, 2])));
        assert!(g.is_gorenstein());

        let g = DualPair::new(&[vec![1, 0], vec![2, 3]]).unwrap().gorenstein_data();
        assert_eq!(g.omega, Some(QVector::new(vec![int(1), rat(-1, 3)])));
        assert_eq!(g.index, Some(3));
    }

    #[test]
    fn inconsistent_gorenstein_system() {
        // The first three rays force ω = (0,0,1); the fourth then pairs to 2.
        let dp = DualPair::new(&[
            vec![1, 0, 1],
            vec![0, 1, 1],
            vec![-1, 0, 1],
            vec![0, -1, 2],
        ])
        .unwrap();
        let g = dp.gorenstein_data();
        assert_eq!(g.omega, None);
        assert_eq!(g.index, None);
    }
}
