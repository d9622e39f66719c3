//! Affine toric varieties given by an ordered generator system of `σ̌ ∩ Z^n`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::arith::{field_pow, Field, GaussianRational};
use crate::lattice::intmat::{dot, rank};
use crate::lattice::{hilbert_basis, ConeFace, IntVec, LatticeError, RationalCone, DEFAULT_MAX_DIM};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToricError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("σ is not strongly convex")]
    NotStronglyConvex,
    #[error("σ is not of maximal dimension")]
    NotMaximalDim,
    #[error("generators miss Hilbert basis elements {missing:?}")]
    GeneratorsDontGenerate { missing: Vec<IntVec> },
    #[error("generator {0} is zero")]
    ZeroGenerator(usize),
    #[error("{0} is not a valid index set")]
    InvalidIndexSet(IndexSet),
    #[error("rays {0:?} do not span a face of σ")]
    InvalidFace(Vec<IntVec>),
    #[error("torus point has a zero coordinate")]
    ZeroCoordinate,
    #[error("expected {expected} coordinates, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Set of generator indices. Stored 0-based; displayed and serialized 1-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IndexSet(pub BTreeSet<usize>);

impl IndexSet {
    pub fn empty() -> Self {
        Self(BTreeSet::new())
    }

    pub fn full(r: usize) -> Self {
        Self((0..r).collect())
    }

    pub fn from_one_based(v: &[usize]) -> Self {
        Self(v.iter().map(|i| i - 1).collect())
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IndexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if v.contains(&0) {
            return Err(serde::de::Error::custom("index sets are 1-based"));
        }
        Ok(Self::from_one_based(&v))
    }
}

/// How the variety is specified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VarietyInput {
    SigmaRays(Vec<IntVec>),
    Generators(Vec<IntVec>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    pub max_dim: usize,
    /// Reject explicit generators that span σ̌ but miss Hilbert basis elements.
    pub require_saturation: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        Self { max_dim: DEFAULT_MAX_DIM, require_saturation: true }
    }
}

/// A face of σ̌ with the generators lying on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualFace {
    pub face: ConeFace,
    pub index_set: IndexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricVariety {
    pub n: usize,
    pub r: usize,
    pub sigma: RationalCone,
    pub dual: RationalCone,
    pub generators: Vec<IntVec>,
    pub valid_index_sets: Vec<IndexSet>,
    pub dual_faces: Vec<DualFace>,
    pub warnings: Vec<String>,
}

/// Build the variety from σ or from an ordered generator list.
pub fn build_variety(input: &VarietyInput, opts: &BuildOptions) -> Result<ToricVariety, ToricError> {
    match input {
        VarietyInput::SigmaRays(rays) => {
            let n = rays.first().map_or(0, |r| r.len());
            let sigma = RationalCone::with_cap(n, rays, opts.max_dim)?;
            if !sigma.is_pointed() {
                return Err(ToricError::NotStronglyConvex);
            }
            if !sigma.is_full_dimensional() {
                return Err(ToricError::NotMaximalDim);
            }
            let dual = sigma.dual();
            let generators = hilbert_basis(&dual)?;
            Ok(assemble(n, sigma, dual, generators, Vec::new()))
        }
        VarietyInput::Generators(gens) => {
            let n = gens.first().map_or(0, |r| r.len());
            if let Some(i) = gens.iter().position(|g| g.iter().all(|&x| x == 0)) {
                return Err(ToricError::ZeroGenerator(i + 1));
            }
            let dual = RationalCone::with_cap(n, gens, opts.max_dim)?;
            if !dual.is_full_dimensional() {
                return Err(ToricError::NotStronglyConvex);
            }
            if !dual.is_pointed() {
                return Err(ToricError::NotMaximalDim);
            }
            let hb = hilbert_basis(&dual)?;
            let missing: Vec<IntVec> = hb.into_iter().filter(|h| !gens.contains(h)).collect();
            let mut warnings = Vec::new();
            if !missing.is_empty() {
                if opts.require_saturation {
                    return Err(ToricError::GeneratorsDontGenerate { missing });
                }
                warnings.push(format!(
                    "generators span σ̌ but do not generate its lattice points; missing Hilbert basis elements {missing:?}"
                ));
            }
            let sigma = dual.dual();
            Ok(assemble(n, sigma, dual, gens.clone(), warnings))
        }
    }
}

fn assemble(n: usize, sigma: RationalCone, dual: RationalCone, generators: Vec<IntVec>, warnings: Vec<String>) -> ToricVariety {
    let faces = dual.face_lattice().expect("σ̌ is pointed");
    let mut dual_faces = Vec::new();
    let mut seen = BTreeSet::new();
    for face in faces {
        let index_set: IndexSet = (0..generators.len())
            .filter(|&i| dot(&face.supporting_normal, &generators[i]) == 0)
            .collect();
        seen.insert(index_set.clone());
        dual_faces.push(DualFace { face, index_set });
    }
    let mut valid: Vec<IndexSet> = seen.into_iter().collect();
    valid.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    ToricVariety {
        n,
        r: generators.len(),
        sigma,
        dual,
        generators,
        valid_index_sets: valid,
        dual_faces,
        warnings,
    }
}

impl ToricVariety {
    pub fn valid_index_sets(&self) -> &[IndexSet] {
        &self.valid_index_sets
    }

    pub fn is_valid_index_set(&self, i: &IndexSet) -> bool {
        self.valid_index_sets.contains(i)
    }

    fn require_valid(&self, i: &IndexSet) -> Result<(), ToricError> {
        if self.is_valid_index_set(i) {
            Ok(())
        } else {
            Err(ToricError::InvalidIndexSet(i.clone()))
        }
    }

    /// The face of σ̌ whose generators are exactly `i`.
    pub fn dual_face_of(&self, i: &IndexSet) -> Option<&DualFace> {
        self.dual_faces.iter().find(|f| &f.index_set == i)
    }

    fn check_point(&self, xi: &[GaussianRational]) -> Result<(), ToricError> {
        if xi.len() != self.n {
            return Err(ToricError::DimensionMismatch { expected: self.n, found: xi.len() });
        }
        if xi.iter().any(|x| x.is_zero()) {
            return Err(ToricError::ZeroCoordinate);
        }
        Ok(())
    }

    /// `h(ξ) = (ξ^{b_1}, ..., ξ^{b_r})`.
    pub fn embed(&self, xi: &[GaussianRational]) -> Result<Vec<GaussianRational>, ToricError> {
        self.check_point(xi)?;
        Ok(self.generators.iter().map(|b| monomial_value(xi, b)).collect())
    }

    /// `h^I(ξ)`: coordinates outside `i` set to zero.
    pub fn embed_restricted(&self, i: &IndexSet, xi: &[GaussianRational]) -> Result<Vec<GaussianRational>, ToricError> {
        self.require_valid(i)?;
        self.check_point(xi)?;
        Ok(self
            .generators
            .iter()
            .enumerate()
            .map(|(k, b)| if i.contains(k) { monomial_value(xi, b) } else { GaussianRational::zero() })
            .collect())
    }

    /// Dimension of the orbit attached to `i`: rank of `{b_k : k in i}`.
    pub fn orbit_dimension(&self, i: &IndexSet) -> Result<usize, ToricError> {
        self.require_valid(i)?;
        let rows: Vec<IntVec> = i.iter().map(|k| self.generators[k].clone()).collect();
        Ok(rank(&rows, self.n))
    }

    /// Distinguished point of the face of σ spanned by `rays`: coordinate k is 1
    /// exactly when `b_k` is orthogonal to the face.
    pub fn distinguished_point(&self, rays: &[IntVec]) -> Result<Vec<u8>, ToricError> {
        let mut key: Vec<IntVec> = rays.to_vec();
        key.sort();
        let faces = self.sigma.face_lattice()?;
        if !faces.iter().any(|f| f.rays == key) {
            return Err(ToricError::InvalidFace(rays.to_vec()));
        }
        Ok(self
            .generators
            .iter()
            .map(|b| key.iter().all(|u| dot(b, u) == 0) as u8)
            .collect())
    }

    /// `W = (<w, b_1>, ..., <w, b_r>)`.
    pub fn weight_transport(&self, w: &[i64]) -> Vec<i64> {
        self.generators.iter().map(|b| dot(w, b)).collect()
    }

    /// `λ = Σ Λ_i b_i`.
    pub fn lambda_of(&self, big_lambda: &[i64]) -> IntVec {
        let mut out = vec![0; self.n];
        for (k, b) in big_lambda.iter().zip(&self.generators) {
            for (o, x) in out.iter_mut().zip(b) {
                *o += k * x;
            }
        }
        out
    }
}

fn monomial_value(xi: &[GaussianRational], b: &[i64]) -> GaussianRational {
    xi.iter().zip(b).fold(GaussianRational::one(), |acc, (x, &k)| acc * field_pow(x, k))
}
