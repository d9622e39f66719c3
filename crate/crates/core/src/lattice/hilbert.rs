//! Hilbert basis of `cone ∩ Z^n` for a pointed cone.
//!
//! The cone is triangulated by pulling its first ray through the face
//! lattice. Lattice points of each simplicial cone's half-open fundamental
//! parallelepiped, together with the rays, generate the semigroup; the basis
//! is what remains after removing reducible candidates.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::Signed;

use super::cone::{ConeFace, RationalCone};
use super::intmat::{dot, inverse, rank, rational, IntVec};
use super::LatticeError;

fn triangulate(faces: &[ConeFace], face: usize, memo: &mut Vec<Option<Vec<Vec<usize>>>>) -> Vec<Vec<usize>> {
    if let Some(t) = &memo[face] {
        return t.clone();
    }
    let f = &faces[face];
    let out = if f.ray_indices.len() == f.dim {
        vec![f.ray_indices.clone()]
    } else {
        let apex = f.ray_indices[0];
        let own: BTreeSet<usize> = f.ray_indices.iter().copied().collect();
        let mut simplices = Vec::new();
        for (g, gf) in faces.iter().enumerate() {
            if gf.dim + 1 != f.dim || gf.ray_indices.contains(&apex) {
                continue;
            }
            if !gf.ray_indices.iter().all(|i| own.contains(i)) {
                continue;
            }
            for mut s in triangulate(faces, g, memo) {
                s.push(apex);
                s.sort();
                simplices.push(s);
            }
        }
        simplices
    };
    memo[face] = Some(out.clone());
    out
}

/// Simplicial cones (as ray index lists) covering the cone.
pub fn triangulation(cone: &RationalCone) -> Result<Vec<Vec<usize>>, LatticeError> {
    let faces = cone.face_lattice()?;
    let top = faces.len() - 1;
    let mut memo = vec![None; faces.len()];
    Ok(triangulate(&faces, top, &mut memo))
}

/// Nonzero lattice points `sum c_i r_i` with every `c_i` in `[0, 1)`.
pub fn parallelepiped_points(rays: &[IntVec]) -> Vec<IntVec> {
    let n = rays[0].len();
    let k = rays.len();
    // choose k coordinates on which the rays are independent
    let mut coords: Vec<usize> = Vec::new();
    for c in 0..n {
        let mut trial = coords.clone();
        trial.push(c);
        let rows: Vec<IntVec> = rays.iter().map(|r| trial.iter().map(|&j| r[j]).collect()).collect();
        if rank(&rows, trial.len()) == trial.len() {
            coords = trial;
        }
        if coords.len() == k {
            break;
        }
    }
    // m[a][b] = rays[b][coords[a]], so m * c = x restricted to coords
    let m: Vec<Vec<BigRational>> = coords
        .iter()
        .map(|&j| rays.iter().map(|r| rational(r[j])).collect())
        .collect();
    let inv = inverse(&m).expect("simplicial rays are independent");
    let lo: IntVec = (0..n).map(|j| rays.iter().map(|r| r[j].min(0)).sum()).collect();
    let hi: IntVec = (0..n).map(|j| rays.iter().map(|r| r[j].max(0)).sum()).collect();

    let mut out = Vec::new();
    let mut x = lo.clone();
    loop {
        if !x.iter().all(|&v| v == 0) {
            let sub: Vec<BigRational> = coords.iter().map(|&j| rational(x[j])).collect();
            let c: Vec<BigRational> = inv
                .iter()
                .map(|row| row.iter().zip(&sub).map(|(a, b)| a * b).sum())
                .collect();
            let in_range = c.iter().all(|v| !v.is_negative() && *v < rational(1));
            if in_range {
                let back: Vec<BigRational> = (0..n)
                    .map(|j| rays.iter().zip(&c).map(|(r, ci)| rational(r[j]) * ci).sum())
                    .collect();
                if back.iter().zip(&x).all(|(b, &v)| *b == rational(v)) {
                    out.push(x.clone());
                }
            }
        }
        // odometer over the box
        let mut j = 0;
        while j < n {
            if x[j] < hi[j] {
                x[j] += 1;
                break;
            }
            x[j] = lo[j];
            j += 1;
        }
        if j == n {
            break;
        }
    }
    out
}

/// Minimal generating set of the semigroup `cone ∩ Z^n`, sorted.
pub fn hilbert_basis(cone: &RationalCone) -> Result<Vec<IntVec>, LatticeError> {
    if !cone.is_pointed() {
        return Err(LatticeError::NotStronglyConvex);
    }
    if cone.rays().is_empty() {
        return Ok(Vec::new());
    }
    let mut candidates: BTreeSet<IntVec> = cone.rays().iter().cloned().collect();
    for simplex in triangulation(cone)? {
        let rays: Vec<IntVec> = simplex.iter().map(|&i| cone.rays()[i].clone()).collect();
        candidates.extend(parallelepiped_points(&rays));
    }
    let cands: Vec<IntVec> = candidates.into_iter().collect();
    let basis = cands
        .iter()
        .filter(|x| {
            !cands.iter().any(|y| {
                y != *x && {
                    let d: IntVec = x.iter().zip(y).map(|(a, b)| a - b).collect();
                    cone.contains_int(&d)
                }
            })
        })
        .cloned()
        .collect();
    Ok(basis)
}

/// Whether `v` is a nonnegative integer combination of `gens` (bounded search
/// along a functional positive on the cone).
pub fn in_semigroup(gens: &[IntVec], v: &[i64], grading: &[i64]) -> bool {
    fn rec(gens: &[IntVec], v: &IntVec, grading: &[i64], start: usize) -> bool {
        if v.iter().all(|&x| x == 0) {
            return true;
        }
        if dot(grading, v) <= 0 {
            return false;
        }
        for (k, g) in gens.iter().enumerate().skip(start) {
            let rest: IntVec = v.iter().zip(g).map(|(a, b)| a - b).collect();
            if dot(grading, &rest) >= 0 && rec(gens, &rest, grading, k) {
                return true;
            }
        }
        false
    }
    rec(gens, &v.to_vec(), grading, 0)
}

/// A linear functional positive on every nonzero point of a pointed cone.
pub fn grading(cone: &RationalCone) -> IntVec {
    let n = cone.ambient_dim();
    let mut g = vec![0i64; n];
    for f in cone.facets() {
        for (a, b) in g.iter_mut().zip(f) {
            *a += b;
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planar_basis() {
        let c = RationalCone::new(2, &[vec![1, 0], vec![1, 2]]).unwrap();
        assert_eq!(hilbert_basis(&c).unwrap(), vec![vec![1, 0], vec![1, 1], vec![1, 2]]);
    }

    #[test]
    fn three_dimensional_basis() {
        // index-8 simplicial cone; all seven parallelepiped points are irreducible
        let c = RationalCone::new(3, &[vec![0, 1, 2], vec![2, 1, 0], vec![1, 0, 3]]).unwrap();
        let hb = hilbert_basis(&c).unwrap();
        assert_eq!(hb.len(), 10);
        assert!(hb.contains(&vec![1, 1, 1]));
        assert!(hb.contains(&vec![1, 1, 2]));
    }

    #[test]
    fn orthant_basis() {
        let c = RationalCone::orthant(3);
        assert_eq!(hilbert_basis(&c).unwrap().len(), 3);
    }
}
