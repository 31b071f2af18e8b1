//! Newton polyhedra in H-representation.
//!
//! `P(a) = conv(a_1, …, a_s) + σ^∨` is the slice at height one of the cone
//! `τ ⊂ M_R × R` generated by the lifted points `(a_i, 1)` and the lifted rays
//! `(u_j, 0)` of `σ^∨`. Each facet normal `(v', μ)` of `τ` with `v' ≠ 0` gives
//! the half-space `⟨u, v'⟩ ≥ -μ` of `P(a)`.

use num_traits::{Signed, Zero};

use crate::cone::{double_description, DualPair};
use crate::linalg::rank_int;
use crate::rational::{dot_int, rat, IVec, QVector, Rational};

/// The half-space `⟨u, normal⟩ ≥ offset`; `normal` is primitive and lies in `σ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NewtonFacet {
    pub normal: IVec,
    pub offset: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    facets: Vec<NewtonFacet>,
    vertices: Vec<IVec>,
}

impl NewtonPolyhedron {
    pub(crate) fn of_generators(dp: &DualPair, generators: &[IVec]) -> NewtonPolyhedron {
        let d = dp.dim();
        let mut lifted: Vec<IVec> = generators
            .iter()
            .map(|g| {
                let mut v = g.clone();
                v.push(1);
                v
            })
            .collect();
        lifted.extend(dp.sigma_dual().rays().iter().map(|u| {
            let mut v = u.clone();
            v.push(0);
            v
        }));
        // τ is pointed and full-dimensional because σ^∨ is.
        let normals =
            double_description(&lifted, d + 1).expect("lifted cone of a Newton polyhedron");
        let mut facets: Vec<NewtonFacet> = normals
            .into_iter()
            .filter_map(|n| {
                let (v, mu) = n.split_at(d);
                let g = v.iter().fold(0i64, |acc, &x| num_integer::gcd(acc, x));
                (g != 0).then(|| NewtonFacet {
                    normal: v.iter().map(|x| x / g).collect(),
                    offset: rat(-mu[0], g),
                })
            })
            .collect();
        facets.sort_by(|a, b| a.normal.cmp(&b.normal).then(a.offset.cmp(&b.offset)));
        facets.dedup();

        let vertices = generators
            .iter()
            .filter(|g| {
                let tight: Vec<IVec> = facets
                    .iter()
                    .filter(|f| Rational::from_integer(dot_int(g, &f.normal).into()) == f.offset)
                    .map(|f| f.normal.clone())
                    .collect();
                rank_int(&tight) == d
            })
            .cloned()
            .collect();
        NewtonPolyhedron { facets, vertices }
    }

    pub fn facets(&self) -> &[NewtonFacet] {
        &self.facets
    }

    /// Generators that are vertices of the polyhedron.
    pub fn vertices(&self) -> &[IVec] {
        &self.vertices
    }

    /// Facets with strictly positive offset; these alone determine `λ_a`.
    pub fn positive_facets(&self) -> impl Iterator<Item = &NewtonFacet> {
        self.facets.iter().filter(|f| f.offset.is_positive())
    }

    pub fn contains(&self, u: &QVector) -> bool {
        self.facets.iter().all(|f| u.dot_int(&f.normal) >= f.offset)
    }

    /// Membership in the interior of `c·P`: every facet inequality strict.
    pub fn interior_of_scaled_contains(&self, c: &Rational, u: &QVector) -> bool {
        self.facets
            .iter()
            .all(|f| u.dot_int(&f.normal) > c * &f.offset)
    }

    pub fn has_zero_offset_only(&self) -> bool {
        self.facets.iter().all(|f| f.offset.is_zero())
    }
}
