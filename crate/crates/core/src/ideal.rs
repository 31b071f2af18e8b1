//! Monomial ideals of `k[σ^∨ ∩ M]`, identified with their exponent vectors.
//!
//! The staircase region `Q(I) = ⋃_{X^u ∈ I} (u + σ^∨)` equals the union over
//! generators only, since `g + s + σ^∨ ⊆ g + σ^∨` for `s ∈ σ^∨`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::Zero;

use crate::cone::DualPair;
use crate::error::{Error, Result};
use crate::newton::NewtonPolyhedron;
use crate::rational::{dot_int, int, IVec, QVector};

#[derive(Clone)]
pub struct MonomialIdeal {
    context: Arc<DualPair>,
    generators: Vec<IVec>,
    newton: OnceLock<NewtonPolyhedron>,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators && *self.context == *other.context
    }
}

impl Eq for MonomialIdeal {}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MonomialIdeal")
            .field("generators", &self.generators)
            .finish()
    }
}

/// Keeps `g` unless `g - g'` lies in `σ^∨` for another kept `g'`.
fn minimalize(dp: &DualPair, exps: impl IntoIterator<Item = IVec>) -> Vec<IVec> {
    let uniq: BTreeSet<IVec> = exps.into_iter().collect();
    let all: Vec<IVec> = uniq.into_iter().collect();
    all.iter()
        .filter(|g| {
            !all.iter().any(|h| {
                h != *g && {
                    let diff: IVec = g.iter().zip(h).map(|(a, b)| a - b).collect();
                    dp.sigma_dual().contains_int(&diff)
                }
            })
        })
        .cloned()
        .collect()
}

impl MonomialIdeal {
    /// The ideal generated by `X^e` for the given exponents, minimalized.
    pub fn new(context: &Arc<DualPair>, exponents: Vec<IVec>) -> Result<MonomialIdeal> {
        if exponents.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        for e in &exponents {
            if e.len() != context.dim() {
                return Err(Error::DimensionMismatch {
                    expected: context.dim(),
                    found: e.len(),
                });
            }
            if !context.sigma_dual().contains_int(e) {
                return Err(Error::NotInSemigroup(e.clone()));
            }
        }
        Ok(Self::from_valid(context, minimalize(context, exponents)))
    }

    fn from_valid(context: &Arc<DualPair>, generators: Vec<IVec>) -> MonomialIdeal {
        MonomialIdeal {
            context: Arc::clone(context),
            generators,
            newton: OnceLock::new(),
        }
    }

    /// `R` itself, generated by `X^0`.
    pub fn unit(context: &Arc<DualPair>) -> MonomialIdeal {
        Self::from_valid(context, vec![vec![0; context.dim()]])
    }

    /// The maximal monomial ideal, generated by the Hilbert basis of `σ^∨ ∩ M`.
    pub fn maximal(context: &Arc<DualPair>) -> MonomialIdeal {
        Self::from_valid(context, context.hilbert_basis().to_vec())
    }

    pub fn context(&self) -> &Arc<DualPair> {
        &self.context
    }

    pub fn dim(&self) -> usize {
        self.context.dim()
    }

    pub fn generators(&self) -> &[IVec] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.iter().all(|&x| x == 0))
    }

    pub fn require_proper(&self) -> Result<()> {
        if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    /// Membership of the monomial `X^u`.
    pub fn contains(&self, u: &[i64]) -> bool {
        let dual = self.context.sigma_dual();
        dual.contains_int(u)
            && self.generators.iter().any(|g| {
                let diff: IVec = u.iter().zip(g).map(|(a, b)| a - b).collect();
                dual.contains_int(&diff)
            })
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    /// Membership of a rational point in the staircase region `Q(I)`.
    pub fn q_region_contains(&self, u: &QVector) -> bool {
        self.generators.iter().any(|g| {
            self.context
                .sigma_rays()
                .iter()
                .all(|v| u.dot_int(v) >= int(dot_int(g, v)))
        })
    }

    /// `I^{[q]}`: generators multiplied by `q ≥ 2`.
    pub fn frobenius_power(&self, q: u64) -> Result<MonomialIdeal> {
        if q < 2 {
            return Err(Error::InvalidFrobeniusPower(q));
        }
        Ok(self.scaled(q as i64))
    }

    pub(crate) fn scaled(&self, k: i64) -> MonomialIdeal {
        let gens = self
            .generators
            .iter()
            .map(|g| g.iter().map(|x| x * k).collect())
            .collect();
        Self::from_valid(&self.context, gens)
    }

    /// `I^r`, with `I^0 = R`.
    pub fn power(&self, r: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(&self.context);
        for _ in 0..r {
            acc = acc.product(self);
        }
        acc
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let sums = self.generators.iter().flat_map(|a| {
            other
                .generators
                .iter()
                .map(move |b| a.iter().zip(b).map(|(x, y)| x + y).collect::<IVec>())
        });
        Self::from_valid(&self.context, minimalize(&self.context, sums))
    }

    /// Newton polyhedron `P(I) = conv(generators) + σ^∨`, computed once.
    pub fn newton_polyhedron(&self) -> &NewtonPolyhedron {
        self.newton
            .get_or_init(|| NewtonPolyhedron::of_generators(&self.context, &self.generators))
    }

    /// Whether some positive multiple of the extreme ray `ray` of `σ^∨` lies in `Q(I)`.
    ///
    /// For a generator `g`, `λ⟨ray, v_j⟩ ≥ ⟨g, v_j⟩` is solvable in `λ` iff
    /// `⟨g, v_j⟩ = 0` whenever `⟨ray, v_j⟩ = 0`.
    fn reaches_ray(&self, ray: &[i64]) -> bool {
        self.reaches(&QVector::from_ints(ray))
    }

    fn reaches(&self, dir: &QVector) -> bool {
        let rays = self.context.sigma_rays();
        self.generators.iter().any(|g| {
            rays.iter()
                .all(|v| !dir.dot_int(v).is_zero() || dot_int(g, v) <= 0)
        })
    }

    /// `√I = m`: every extreme ray of `σ^∨` eventually enters `Q(I)`.
    pub fn is_m_primary(&self) -> bool {
        !self.is_unit()
            && self
                .context
                .sigma_dual()
                .rays()
                .iter()
                .all(|r| self.reaches_ray(r))
    }

    /// `self ⊆ √other`: some multiple of every generator lies in `Q(other)`.
    pub fn is_in_radical_of(&self, other: &MonomialIdeal) -> bool {
        self.generators.iter().all(|g| {
            if g.iter().all(|&x| x == 0) {
                other.is_unit()
            } else {
                other.reaches(&QVector::from_ints(g))
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn ctx(rays: &[IVec]) -> Arc<DualPair> {
        Arc::new(DualPair::new(rays).unwrap())
    }

    fn plane() -> Arc<DualPair> {
        ctx(&[vec![1, 0], vec![0, 1]])
    }

    fn a1() -> Arc<DualPair> {
        ctx(&[vec![1, 0], vec![1, 2]])
    }

    #[test]
    fn make_ideal_minimalizes() {
        let i = MonomialIdeal::new(&plane(), vec![vec![1, 0], vec![2, 0], vec![0, 1]]).unwrap();
        assert_eq!(i.generators(), &[vec![0, 1], vec![1, 0]]);
        let i = MonomialIdeal::new(&plane(), vec![vec![2, 0], vec![0, 3]]).unwrap();
        assert_eq!(i.generators(), &[vec![0, 3], vec![2, 0]]);
        let i = MonomialIdeal::new(&a1(), vec![vec![0, 1], vec![1, 0], vec![2, -1]]).unwrap();
        assert_eq!(i.generators().len(), 3);
    }

    #[test]
    fn make_ideal_errors() {
        assert_eq!(MonomialIdeal::new(&plane(), vec![]), Err(Error::EmptyIdeal));
        assert_eq!(
            MonomialIdeal::new(&plane(), vec![vec![-1, 2]]),
            Err(Error::NotInSemigroup(vec![-1, 2]))
        );
    }

    #[test]
    fn membership() {
        let i = MonomialIdeal::new(&plane(), vec![vec![1, 0], vec![0, 2]]).unwrap();
        assert!(i.contains(&[1, 5]));
        assert!(!i.contains(&[0, 1]));
        let j = MonomialIdeal::new(&a1(), vec![vec![1, 0]]).unwrap();
        assert!(!j.contains(&[2, -1]));
        assert!(j.contains(&[1, 0]) && j.contains(&[1, 1]));
    }

    #[test]
    fn frobenius_powers() {
        let j = MonomialIdeal::new(&plane(), vec![vec![1, 0], vec![0, 2]]).unwrap();
        for q in [2u64, 3, 4, 8] {
            let jq = j.frobenius_power(q).unwrap();
            let qi = q as i64;
            assert_eq!(jq.generators(), &[vec![0, 2 * qi], vec![qi, 0]]);
        }
        assert_eq!(j.scaled(1), j);
        assert_eq!(j.frobenius_power(1), Err(Error::InvalidFrobeniusPower(1)));
    }

    #[test]
    fn staircase_membership() {
        let m = MonomialIdeal::maximal(&plane());
        assert!(!m.q_region_contains(&QVector::new(vec![rat(1, 2), rat(1, 2)])));
        assert!(m.q_region_contains(&QVector::new(vec![int(1), rat(1, 2)])));
        for g in m.generators() {
            assert!(m.q_region_contains(&QVector::from_ints(g)));
        }
    }

    #[test]
    fn maximal_ideals() {
        assert_eq!(MonomialIdeal::maximal(&plane()).generators(), &[vec![0, 1], vec![1, 0]]);
        assert_eq!(
            MonomialIdeal::maximal(&a1()).generators(),
            &[vec![0, 1], vec![1, 0], vec![2, -1]]
        );
        let hmtw = ctx(&[vec![1, 0, 0], vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 1]]);
        assert_eq!(
            MonomialIdeal::maximal(&hmtw).generators(),
            &[vec![0, 0, 1], vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 1]]
        );
    }

    #[test]
    fn m_primary() {
        let p = plane();
        assert!(MonomialIdeal::new(&p, vec![vec![2, 0], vec![0, 3]]).unwrap().is_m_primary());
        assert!(!MonomialIdeal::new(&p, vec![vec![1, 0]]).unwrap().is_m_primary());
        assert!(!MonomialIdeal::unit(&p).is_m_primary());
        // A principal ideal has height one, so it is never m-primary in dimension 3.
        for r in [1i64, 2, 3, 5] {
            let c = ctx(&[vec![1, 0, 0], vec![1, 1, 0], vec![0, 1, r]]);
            let a = MonomialIdeal::new(&c, vec![vec![r, 0, 1]]).unwrap();
            assert!(!a.is_m_primary());
            assert!(a.is_in_radical_of(&MonomialIdeal::maximal(&c)));
            assert!(MonomialIdeal::maximal(&c).is_m_primary());
        }
    }

    #[test]
    fn radical_containment() {
        let p = plane();
        let x = MonomialIdeal::new(&p, vec![vec![1, 0]]).unwrap();
        let m = MonomialIdeal::maximal(&p);
        let x2y = MonomialIdeal::new(&p, vec![vec![2, 1]]).unwrap();
        assert!(x.is_in_radical_of(&m));
        assert!(!m.is_in_radical_of(&x));
        assert!(x2y.is_in_radical_of(&x));
    }

    #[test]
    fn powers() {
        let p = plane();
        let m = MonomialIdeal::maximal(&p);
        assert_eq!(m.power(2).generators(), &[vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert!(m.power(0).is_unit());
        let a = MonomialIdeal::new(&p, vec![vec![2, 0], vec![0, 3]]).unwrap();
        assert_eq!(a.power(2).generators(), &[vec![0, 6], vec![2, 3], vec![4, 0]]);
    }
}
