//! Hilbert bases of saturated affine semigroups `C ∩ Z^d`.
//!
//! Simplicial cones: lattice points of the half-open fundamental
//! parallelepiped of the primitive rays, plus the rays. Other cones are
//! triangulated into simplicial cones by pulling the lexicographically first
//! ray; the union of the piece bases generates the semigroup and is reduced to
//! its irreducible elements.

use std::collections::BTreeSet;

use crate::cone::Cone;
use crate::linalg::{adjugate, rank_int};
use crate::rational::{dot_int, IVec};

/// The unique minimal generating set of `cone ∩ Z^d`, sorted.
pub fn hilbert_basis(cone: &Cone) -> Vec<IVec> {
    let mut candidates = BTreeSet::new();
    for simplex in triangulate(cone) {
        let rays: Vec<IVec> = simplex.iter().map(|&i| cone.rays()[i].clone()).collect();
        candidates.extend(parallelepiped_points(&rays));
        candidates.extend(rays);
    }
    candidates.remove(&vec![0; cone.dim()]);
    let candidates: Vec<IVec> = candidates.into_iter().collect();
    candidates
        .iter()
        .filter(|b| !is_reducible(cone, b, &candidates))
        .cloned()
        .collect()
}

/// `b` is reducible iff `b - g` lies in the semigroup for some other nonzero generator `g`.
fn is_reducible(cone: &Cone, b: &IVec, generators: &[IVec]) -> bool {
    generators.iter().any(|g| {
        g != b && {
            let diff: IVec = b.iter().zip(g).map(|(x, y)| x - y).collect();
            cone.contains_int(&diff)
        }
    })
}

/// Nonzero lattice points `Σ λ_i r_i` with `0 ≤ λ_i < 1`.
pub(crate) fn parallelepiped_points(rays: &[IVec]) -> Vec<IVec> {
    let d = rays.len();
    // Rows of `m` are coordinates, columns are rays.
    let m: Vec<IVec> = (0..d).map(|k| rays.iter().map(|r| r[k]).collect()).collect();
    let (adj, det) = adjugate(&m).expect("simplicial piece has a small determinant");
    let (sign, abs_det) = (det.signum() as i128, (det as i128).abs());
    let lo: IVec = (0..d).map(|k| rays.iter().map(|r| r[k].min(0)).sum()).collect();
    let hi: IVec = (0..d).map(|k| rays.iter().map(|r| r[k].max(0)).sum()).collect();

    let mut out = Vec::new();
    let mut x = lo.clone();
    'outer: loop {
        // λ · det = adj · x
        let inside = adj.iter().all(|row| {
            let v: i128 = row.iter().zip(&x).map(|(&a, &b)| a as i128 * b as i128).sum();
            let v = v * sign;
            (0..abs_det).contains(&v)
        });
        if inside && x.iter().any(|&c| c != 0) {
            out.push(x.clone());
        }
        for k in 0..d {
            if x[k] < hi[k] {
                x[k] += 1;
                continue 'outer;
            }
            x[k] = lo[k];
        }
        break;
    }
    out
}

/// Simplicial cones (as ray-index sets) covering `cone`, without new rays.
pub(crate) fn triangulate(cone: &Cone) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (0..cone.rays().len()).collect();
    let mut out = Vec::new();
    triangulate_face(cone, &all, cone.dim(), &mut out);
    out
}

fn triangulate_face(cone: &Cone, face: &[usize], dim: usize, out: &mut Vec<Vec<usize>>) {
    if face.len() == dim {
        out.push(face.to_vec());
        return;
    }
    let rays = cone.rays();
    let apex = *face
        .iter()
        .min_by(|&&a, &&b| rays[a].cmp(&rays[b]))
        .expect("nonempty face");
    // Facets of the face are its intersections with facets of the cone that
    // drop the rank by exactly one.
    let mut seen: Vec<Vec<usize>> = Vec::new();
    for n in cone.facet_normals() {
        let sub: Vec<usize> = face
            .iter()
            .copied()
            .filter(|&i| dot_int(n, &rays[i]) == 0)
            .collect();
        if sub.contains(&apex) || seen.contains(&sub) {
            continue;
        }
        let sub_rays: Vec<IVec> = sub.iter().map(|&i| rays[i].clone()).collect();
        if rank_int(&sub_rays) != dim - 1 {
            continue;
        }
        seen.push(sub.clone());
        let mut pieces = Vec::new();
        triangulate_face(cone, &sub, dim - 1, &mut pieces);
        for mut p in pieces {
            p.push(apex);
            p.sort_unstable();
            out.push(p);
        }
    }
}
