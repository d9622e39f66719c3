use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::dd::{canonicalize, generators_of, Generators};
use super::intmat::{dot, is_zero_vec, primitive, rank, to_big, to_small, BigVec, IntVec};
use super::LatticeError;

/// Largest ambient dimension accepted unless a caller raises the cap.
pub const DEFAULT_MAX_DIM: usize = 4;

pub type RationalVector = Vec<BigRational>;

/// Rational polyhedral cone kept in both descriptions.
///
/// Rays are primitive, non-redundant and sorted, so equal cones compare equal.
/// Cones containing a line carry a canonical lineality basis; the rays are
/// then taken in its orthogonal complement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalCone {
    ambient_dim: usize,
    rays: Vec<IntVec>,
    lineality: Vec<IntVec>,
    /// Inward normals of the facets (rays of the dual cone).
    facets: Vec<IntVec>,
    /// Linear forms vanishing on the cone (lineality of the dual).
    equations: Vec<IntVec>,
}

/// A face of a pointed cone, recorded by the parent rays it contains.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeFace {
    pub ray_indices: Vec<usize>,
    pub rays: Vec<IntVec>,
    pub dim: usize,
    /// Pairs to zero on the face and positively on every other parent ray.
    pub supporting_normal: IntVec,
}

/// Minimum of a linear form over `points + recession`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minimum {
    pub value: i64,
    pub argmin: Vec<IntVec>,
}

fn small(g: &Generators) -> (Vec<IntVec>, Vec<IntVec>) {
    (
        g.rays.iter().map(|r| to_small(r)).collect(),
        g.lineality.iter().map(|r| to_small(r)).collect(),
    )
}

fn check_dims(n: usize, vs: &[IntVec], cap: usize) -> Result<(), LatticeError> {
    if n == 0 || n > cap {
        return Err(LatticeError::AmbientDimTooLarge { dim: n, cap });
    }
    if let Some(v) = vs.iter().find(|v| v.len() != n) {
        return Err(LatticeError::DimensionMismatch { expected: n, found: v.len() });
    }
    Ok(())
}

impl RationalCone {
    /// Cone generated by `gens` in dimension `n`, capped at [`DEFAULT_MAX_DIM`].
    pub fn new(n: usize, gens: &[IntVec]) -> Result<Self, LatticeError> {
        Self::with_cap(n, gens, DEFAULT_MAX_DIM)
    }

    pub fn with_cap(n: usize, gens: &[IntVec], cap: usize) -> Result<Self, LatticeError> {
        check_dims(n, gens, cap)?;
        if gens.is_empty() {
            return Err(LatticeError::EmptyInput);
        }
        Ok(Self::from_generators_unchecked(n, gens))
    }

    /// Cone `{x : <a, x> >= 0 for a in ineqs, <e, x> = 0 for e in eqs}`.
    pub fn from_inequalities(n: usize, ineqs: &[IntVec], eqs: &[IntVec]) -> Self {
        let mut all: Vec<BigVec> = ineqs.iter().map(|a| to_big(a)).collect();
        for e in eqs {
            all.push(to_big(e));
            all.push(e.iter().map(|x| BigInt::from(-x)).collect());
        }
        let g = canonicalize(n, generators_of(n, &all));
        let (rays, lineality) = small(&g);
        let mut gens = rays.clone();
        gens.extend(lineality.iter().cloned());
        gens.extend(lineality.iter().map(|l| l.iter().map(|x| -x).collect()));
        let h = canonicalize(n, generators_of(n, &gens.iter().map(|g| to_big(g)).collect::<Vec<_>>()));
        let (facets, equations) = small(&h);
        Self { ambient_dim: n, rays, lineality, facets, equations }
    }

    pub(crate) fn from_generators_unchecked(n: usize, gens: &[IntVec]) -> Self {
        let gens: Vec<BigVec> = gens.iter().filter(|g| !is_zero_vec(g)).map(|g| to_big(g)).collect();
        let dual = canonicalize(n, generators_of(n, &gens));
        let (facets, equations) = small(&dual);
        let mut hs: Vec<BigVec> = facets.iter().map(|f| to_big(f)).collect();
        for e in &equations {
            hs.push(to_big(e));
            hs.push(e.iter().map(|x| BigInt::from(-x)).collect());
        }
        let primal = canonicalize(n, generators_of(n, &hs));
        let (rays, lineality) = small(&primal);
        Self { ambient_dim: n, rays, lineality, facets, equations }
    }

    /// The cone `{0}`.
    pub fn zero(n: usize) -> Self {
        Self::from_generators_unchecked(n, &[])
    }

    /// Nonnegative orthant of dimension `n`.
    pub fn orthant(n: usize) -> Self {
        let gens: Vec<IntVec> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
        Self::from_generators_unchecked(n, &gens)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rays(&self) -> &[IntVec] {
        &self.rays
    }

    pub fn lineality(&self) -> &[IntVec] {
        &self.lineality
    }

    pub fn facets(&self) -> &[IntVec] {
        &self.facets
    }

    pub fn equations(&self) -> &[IntVec] {
        &self.equations
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.ambient_dim - self.equations.len()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equations.is_empty()
    }

    /// All generators, with both signs of each lineality vector.
    pub fn all_generators(&self) -> Vec<IntVec> {
        let mut out = self.rays.clone();
        for l in &self.lineality {
            out.push(l.clone());
            out.push(l.iter().map(|x| -x).collect());
        }
        out
    }

    pub fn dual(&self) -> Self {
        Self {
            ambient_dim: self.ambient_dim,
            rays: self.facets.clone(),
            lineality: self.equations.clone(),
            facets: self.rays.clone(),
            equations: self.lineality.clone(),
        }
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        let pair = |a: &IntVec| -> BigRational { a.iter().zip(v).map(|(x, y)| BigRational::from(BigInt::from(*x)) * y).sum() };
        self.facets.iter().all(|f| !pair(f).is_negative()) && self.equations.iter().all(|e| pair(e).is_zero())
    }

    pub fn contains_int(&self, v: &[i64]) -> bool {
        self.facets.iter().all(|f| dot(f, v) >= 0) && self.equations.iter().all(|e| dot(e, v) == 0)
    }

    /// Relative interior membership.
    pub fn contains_in_interior(&self, v: &[i64]) -> bool {
        self.facets.iter().all(|f| dot(f, v) > 0) && self.equations.iter().all(|e| dot(e, v) == 0)
    }

    /// Whether every point of the cone pairs nonnegatively with `w`.
    pub fn pairs_nonnegatively(&self, w: &[i64]) -> bool {
        self.rays.iter().all(|r| dot(r, w) >= 0) && self.lineality.iter().all(|l| dot(l, w) == 0)
    }

    fn require_pointed(&self) -> Result<(), LatticeError> {
        if self.is_pointed() {
            Ok(())
        } else {
            Err(LatticeError::NotStronglyConvex)
        }
    }

    /// Incidence: for each facet, the set of ray indices on it.
    fn facet_incidence(&self) -> Vec<BTreeSet<usize>> {
        self.facets
            .iter()
            .map(|f| (0..self.rays.len()).filter(|&i| dot(f, &self.rays[i]) == 0).collect())
            .collect()
    }

    /// Every face of a pointed cone, from `{0}` to the cone itself, ordered
    /// by dimension and then by ray indices.
    pub fn face_lattice(&self) -> Result<Vec<ConeFace>, LatticeError> {
        self.require_pointed()?;
        let inc = self.facet_incidence();
        let all: BTreeSet<usize> = (0..self.rays.len()).collect();
        let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        let mut queue = VecDeque::from([all.clone()]);
        seen.insert(all);
        while let Some(s) = queue.pop_front() {
            for f in &inc {
                let t: BTreeSet<usize> = s.intersection(f).copied().collect();
                if seen.insert(t.clone()) {
                    queue.push_back(t);
                }
            }
        }
        let mut faces: Vec<ConeFace> = seen.into_iter().map(|s| self.face_from_rays(&s, &inc)).collect();
        faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.ray_indices.cmp(&b.ray_indices)));
        Ok(faces)
    }

    fn face_from_rays(&self, s: &BTreeSet<usize>, inc: &[BTreeSet<usize>]) -> ConeFace {
        let rays: Vec<IntVec> = s.iter().map(|&i| self.rays[i].clone()).collect();
        let mut normal = vec![0i64; self.ambient_dim];
        for (f, on) in self.facets.iter().zip(inc) {
            if s.is_subset(on) {
                for (a, b) in normal.iter_mut().zip(f) {
                    *a += b;
                }
            }
        }
        ConeFace {
            ray_indices: s.iter().copied().collect(),
            dim: rank(&rays, self.ambient_dim),
            rays,
            supporting_normal: primitive(&normal),
        }
    }

    /// Smallest face containing `v` (a point of the cone), given by ray indices.
    pub fn minimal_face_of(&self, v: &[i64]) -> BTreeSet<usize> {
        let inc = self.facet_incidence();
        let mut s: BTreeSet<usize> = (0..self.rays.len()).collect();
        for (f, on) in self.facets.iter().zip(&inc) {
            if dot(f, v) == 0 {
                s = s.intersection(on).copied().collect();
            }
        }
        s
    }
}

/// The dual cone `{v : <u, v> >= 0 for all u in cone}`.
pub fn dual_cone(cone: &RationalCone) -> RationalCone {
    cone.dual()
}

/// Minimum of `<w, .>` over `points + recession` and the points attaining it.
pub fn minimize(points: &[IntVec], recession: &RationalCone, w: &[i64]) -> Result<Minimum, LatticeError> {
    if !recession.pairs_nonnegatively(w) {
        return Err(LatticeError::UnboundedBelow);
    }
    let value = points.iter().map(|p| dot(p, w)).min().ok_or(LatticeError::EmptyInput)?;
    let argmin = points.iter().filter(|p| dot(p, w) == value).cloned().collect();
    Ok(Minimum { value, argmin })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planar_dual_and_faces() {
        let s = RationalCone::new(2, &[vec![0, 1], vec![2, -1]]).unwrap();
        assert_eq!(s.dual().rays(), &[vec![1, 0], vec![1, 2]]);
        let faces = s.face_lattice().unwrap();
        assert_eq!(faces.len(), 4);
        for f in &faces {
            for (i, r) in s.rays().iter().enumerate() {
                let p = dot(r, &f.supporting_normal);
                assert!(p >= 0);
                assert_eq!(p == 0, f.ray_indices.contains(&i));
            }
        }
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let c = RationalCone::new(2, &[vec![2, 0], vec![1, 1], vec![0, 3], vec![1, 2]]).unwrap();
        assert_eq!(c.rays(), &[vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn ray_has_two_faces() {
        let c = RationalCone::new(2, &[vec![1, 0]]).unwrap();
        assert_eq!(c.face_lattice().unwrap().len(), 2);
        assert_eq!(c.dual().lineality(), &[vec![0, 1]]);
    }

    #[test]
    fn cap_and_empty_input() {
        assert_eq!(RationalCone::new(5, &[vec![1, 0, 0, 0, 0]]), Err(LatticeError::AmbientDimTooLarge { dim: 5, cap: 4 }));
        assert_eq!(RationalCone::new(2, &[]), Err(LatticeError::EmptyInput));
    }
}
