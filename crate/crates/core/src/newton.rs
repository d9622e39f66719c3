//! Polynomials on a toric variety, their torus forms and Newton polyhedra.
//!
//! A polynomial `g(z) = Σ a_Λ z^Λ` lives in the coordinates `z_1..z_r` of the
//! embedding. Its torus form `L_g(ξ) = g(h(ξ))` has exponents `λ = Σ Λ_i b_i`.
//! The Newton polyhedron is `conv(supp L_g) + σ̌`; its faces are read off from
//! the cone over `{1} × supp` and `{0} × σ̌`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{Coefficient, Exponent, MPoly};
use crate::lattice::intmat::{dot, primitive, rank};
use crate::lattice::{IntVec, LatticeError, RationalCone};
use crate::toric::{IndexSet, ToricVariety};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NewtonError {
    #[error("polynomial has a constant term")]
    ConstantTermForbidden,
    #[error("exponent vector {0:?} is not in N^r")]
    InvalidExponent(Exponent),
    #[error("torus form has empty support")]
    EmptySupport,
    #[error("weight {0:?} does not lie in σ")]
    WeightNotInSigma(IntVec),
    #[error("face does not belong to this polynomial's Newton polyhedron")]
    FaceMismatch,
    #[error("full face enumeration needs ambient dimension at most 3, got {0}")]
    FaceEnumerationUnsupported(usize),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Polynomial in the embedding coordinates `z_1..z_r` without constant term.
#[derive(Clone, Debug, PartialEq)]
pub struct ToricPolynomial<C: Coefficient> {
    poly: MPoly<C>,
}

impl<C: Coefficient> ToricPolynomial<C> {
    pub fn new(poly: MPoly<C>) -> Result<Self, NewtonError> {
        for e in poly.support() {
            if e.iter().any(|&k| k < 0) {
                return Err(NewtonError::InvalidExponent(e.clone()));
            }
            if e.iter().all(|&k| k == 0) {
                return Err(NewtonError::ConstantTermForbidden);
            }
        }
        Ok(Self { poly })
    }

    pub fn zero(r: usize) -> Self {
        Self { poly: MPoly::zero(r) }
    }

    pub fn poly(&self) -> &MPoly<C> {
        &self.poly
    }

    pub fn r(&self) -> usize {
        self.poly.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Keep the terms selected by `keep`.
    pub fn filter(&self, keep: impl Fn(&Exponent) -> bool) -> Self {
        Self {
            poly: MPoly::from_terms(
                self.r(),
                self.poly.terms().iter().filter(|(e, _)| keep(e)).map(|(e, c)| (e.clone(), c.clone())),
            ),
        }
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> ToricPolynomial<D> {
        ToricPolynomial { poly: self.poly.map_coeffs(f) }
    }

    pub fn display(&self) -> String {
        self.poly.display_with(&crate::arith::var_names("z", self.r()))
    }
}

/// Distinct `Λ` with the same `λ` whose coefficients sum to zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cancellation {
    pub lambda: IntVec,
    pub exponents: Vec<IntVec>,
}

/// Torus form with coefficients collected per `λ`.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusForm<C: Coefficient> {
    pub form: MPoly<C>,
    pub cancellations: Vec<Cancellation>,
}

pub fn torus_form<C: Coefficient>(v: &ToricVariety, g: &ToricPolynomial<C>) -> TorusForm<C> {
    let mut groups: BTreeMap<IntVec, Vec<IntVec>> = BTreeMap::new();
    let mut form = MPoly::zero(v.n);
    for (e, c) in g.poly.terms() {
        let lambda = v.lambda_of(e);
        groups.entry(lambda.clone()).or_default().push(e.clone());
        form.add_term(lambda, c.clone());
    }
    let cancellations = groups
        .into_iter()
        .filter(|(l, es)| es.len() > 1 && form.coeff(l).is_zero())
        .map(|(lambda, exponents)| Cancellation { lambda, exponents })
        .collect();
    TorusForm { form, cancellations }
}

/// A face `Δ_w` of a Newton polyhedron.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyFace {
    pub weight: IntVec,
    pub value: i64,
    /// Support points on the face.
    pub vertex_set: Vec<IntVec>,
    /// Extreme points of the face.
    pub vertices: Vec<IntVec>,
    /// Generators `b_i` with `<w, b_i> = 0`.
    pub recession_rays: Vec<IntVec>,
    /// `I_w`, also the non-compact direction of the face.
    pub noncompact_direction: IndexSet,
    pub is_compact: bool,
    pub dim: usize,
}

/// Structural identity of a face, independent of the witnessing weight.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FaceKey {
    pub vertex_set: Vec<IntVec>,
    pub recession: IndexSet,
}

impl PolyFace {
    pub fn key(&self) -> FaceKey {
        FaceKey { vertex_set: self.vertex_set.clone(), recession: self.noncompact_direction.clone() }
    }

    pub fn contains(&self, lambda: &[i64]) -> bool {
        dot(&self.weight, lambda) == self.value
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    pub n: usize,
    pub support: Vec<IntVec>,
    pub recession: RationalCone,
    pub generators: Vec<IntVec>,
    pub vertices: Vec<IntVec>,
    /// All faces, or `None` when the dimension is too large to enumerate.
    pub faces: Option<Vec<PolyFace>>,
    pub anomalies: Vec<String>,
}

/// Largest `n` for which every face is enumerated.
pub const MAX_ENUMERATION_DIM: usize = 3;

pub fn newton_polyhedron<C: Coefficient>(v: &ToricVariety, g: &ToricPolynomial<C>) -> Result<NewtonPolyhedron, NewtonError> {
    let tf = torus_form(v, g);
    let support: Vec<IntVec> = tf.form.support().cloned().collect();
    newton_from_support(support, &v.dual, &v.generators)
}

/// Newton polyhedron of an arbitrary finite support over a pointed recession
/// cone generated by `generators`.
pub fn newton_from_support(
    mut support: Vec<IntVec>,
    recession: &RationalCone,
    generators: &[IntVec],
) -> Result<NewtonPolyhedron, NewtonError> {
    if support.is_empty() {
        return Err(NewtonError::EmptySupport);
    }
    support.sort();
    support.dedup();
    let n = recession.ambient_dim();
    let mut gens: Vec<IntVec> = support.iter().map(|p| lift(1, p)).collect();
    gens.extend(recession.rays().iter().map(|r| lift(0, r)));
    let cone = RationalCone::with_cap(n + 1, &gens, n + 1)?;
    let vertices: Vec<IntVec> = cone.rays().iter().filter(|r| r[0] == 1).map(|r| r[1..].to_vec()).collect();

    let mut np = NewtonPolyhedron {
        n,
        support,
        recession: recession.clone(),
        generators: generators.to_vec(),
        vertices,
        faces: None,
        anomalies: Vec::new(),
    };
    if n > MAX_ENUMERATION_DIM {
        return Ok(np);
    }

    let mut faces = Vec::new();
    let cone_faces = cone.face_lattice()?;
    let rays = cone.rays();
    for cf in &cone_faces {
        if !cf.ray_indices.iter().any(|&i| rays[i][0] == 1) {
            continue;
        }
        let members: BTreeSet<usize> = cf.ray_indices.iter().copied().collect();
        let tight: Vec<&IntVec> = cone
            .facets()
            .iter()
            .filter(|f| members.iter().all(|&i| dot(f, &rays[i]) == 0))
            .collect();
        let candidates = exposing_normals(&tight, rays, &members);
        let best = candidates
            .iter()
            .min_by(|a, b| max_norm(&a[1..]).cmp(&max_norm(&b[1..])).then_with(|| a.cmp(b)))
            .expect("the sum of tight facet normals exposes the face");
        let face = np.face_for(&best[1..], -best[0]);
        let i_sets: BTreeSet<IndexSet> = candidates
            .iter()
            .map(|c| (0..generators.len()).filter(|&k| dot(&c[1..], &generators[k]) == 0).collect())
            .collect();
        if i_sets.len() > 1 {
            np.anomalies.push(format!(
                "face with vertices {:?} has witnessing weights with different I_w",
                face.vertices
            ));
        }
        faces.push(face);
    }
    faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.key().cmp(&b.key())));
    faces.dedup_by(|a, b| a.key() == b.key());
    np.faces = Some(faces);
    Ok(np)
}

fn lift(x0: i64, v: &[i64]) -> IntVec {
    let mut out = vec![x0];
    out.extend_from_slice(v);
    out
}

fn max_norm(v: &[i64]) -> i64 {
    v.iter().map(|x| x.abs()).max().unwrap_or(0)
}

/// Subset sums of tight facet normals whose zero set on the rays is exactly
/// the face. The full sum always qualifies.
fn exposing_normals(tight: &[&IntVec], rays: &[IntVec], members: &BTreeSet<usize>) -> Vec<IntVec> {
    let dim = rays[0].len();
    let full = sum_of(tight.iter().copied(), dim);
    let mut out = vec![primitive(&full)];
    if tight.len() > 12 {
        return out;
    }
    for mask in 1u32..(1 << tight.len()) {
        let s = primitive(&sum_of((0..tight.len()).filter(|k| mask >> k & 1 == 1).map(|k| tight[k]), dim));
        let zero: BTreeSet<usize> = (0..rays.len()).filter(|&i| dot(&s, &rays[i]) == 0).collect();
        if &zero == members && !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

fn sum_of<'a>(vs: impl Iterator<Item = &'a IntVec>, dim: usize) -> IntVec {
    let mut acc = vec![0; dim];
    for v in vs {
        for (a, b) in acc.iter_mut().zip(v) {
            *a += b;
        }
    }
    acc
}

impl NewtonPolyhedron {
    fn face_for(&self, w: &[i64], value: i64) -> PolyFace {
        let vertex_set: Vec<IntVec> = self.support.iter().filter(|p| dot(w, p) == value).cloned().collect();
        let vertices: Vec<IntVec> = self.vertices.iter().filter(|p| dot(w, p) == value).cloned().collect();
        let i_w: IndexSet = (0..self.generators.len()).filter(|&k| dot(w, &self.generators[k]) == 0).collect();
        let recession_rays: Vec<IntVec> = i_w.iter().map(|k| self.generators[k].clone()).collect();
        let mut rows: Vec<IntVec> = vertex_set.iter().map(|p| lift(1, p)).collect();
        rows.extend(recession_rays.iter().map(|b| lift(0, b)));
        let dim = rank(&rows, self.n + 1) - 1;
        PolyFace {
            weight: w.to_vec(),
            value,
            vertex_set,
            vertices,
            is_compact: recession_rays.is_empty(),
            recession_rays,
            noncompact_direction: i_w,
            dim,
        }
    }

    /// `Δ_w` for a weight `w ∈ σ`.
    pub fn face_of_weight(&self, w: &[i64]) -> Result<PolyFace, NewtonError> {
        if w.len() != self.n || !self.recession.pairs_nonnegatively(w) || self.generators.iter().any(|b| dot(w, b) < 0) {
            return Err(NewtonError::WeightNotInSigma(w.to_vec()));
        }
        let value = self.support.iter().map(|p| dot(w, p)).min().expect("support is nonempty");
        Ok(self.face_for(w, value))
    }

    pub fn faces(&self) -> Result<&[PolyFace], NewtonError> {
        self.faces.as_deref().ok_or(NewtonError::FaceEnumerationUnsupported(self.n))
    }

    /// Compact faces `Γ(g; z)`, each with a weight positive on every `b_i`.
    pub fn compact_boundary(&self) -> Result<Vec<PolyFace>, NewtonError> {
        Ok(self.faces()?.iter().filter(|f| f.is_compact).cloned().collect())
    }

    pub fn noncompact_faces(&self) -> Result<Vec<PolyFace>, NewtonError> {
        Ok(self.faces()?.iter().filter(|f| !f.is_compact).cloned().collect())
    }

    /// Whether `face` (as produced for some polynomial) is a face of this polyhedron.
    pub fn has_face(&self, face: &PolyFace) -> bool {
        match self.face_of_weight(&face.weight) {
            Ok(f) => f.value == face.value && f.vertex_set == face.vertex_set,
            Err(_) => false,
        }
    }
}

/// `g_Δ` (terms whose `λ` lies on the face) and its collected torus form.
pub fn face_function<C: Coefficient>(
    v: &ToricVariety,
    g: &ToricPolynomial<C>,
    face: &PolyFace,
) -> Result<(ToricPolynomial<C>, MPoly<C>), NewtonError> {
    let np = newton_polyhedron(v, g)?;
    if !np.has_face(face) {
        return Err(NewtonError::FaceMismatch);
    }
    Ok(face_function_unchecked(v, g, face))
}

pub(crate) fn face_function_unchecked<C: Coefficient>(
    v: &ToricVariety,
    g: &ToricPolynomial<C>,
    face: &PolyFace,
) -> (ToricPolynomial<C>, MPoly<C>) {
    let g_delta = g.filter(|e| face.contains(&v.lambda_of(e)));
    let l_delta = torus_form(v, &g_delta).form;
    (g_delta, l_delta)
}

/// `W = (<w, b_1>, ..., <w, b_r>)`.
pub fn weight_transport(v: &ToricVariety, w: &[i64]) -> Vec<i64> {
    v.weight_transport(w)
}
