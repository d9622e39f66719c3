//! One-parameter families `f_t`: constancy of the Newton data, non-degeneracy
//! and tameness at `t = 0` and for generic `t`, the canonical stratification
//! and the resulting equisingularity verdict.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::{analyze, Analysis};
use crate::arith::{Field, GaussianRational, MPoly, RatFunc, UPoly};
use crate::checks::{CheckConfig, CheckError, Method, Radius, Status, Verdict};
use crate::lattice::IntVec;
use crate::newton::{PolyFace, ToricPolynomial};
use crate::toric::{IndexSet, ToricVariety};

type G = GaussianRational;

pub const EQUISINGULAR: &str = "Whitney equisingular: the family is admissible";

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("coefficient of z^{0:?} is not a polynomial in t")]
    NotPolynomialInT(Vec<i64>),
    #[error("the family has a term constant in z")]
    ConstantTermForbidden,
    #[error("exponent {0:?} is negative")]
    InvalidExponent(Vec<i64>),
    #[error("condition (I) must hold first")]
    ConditionIRequired,
    #[error(transparent)]
    Check(#[from] CheckError),
}

/// `f(t, z) = Σ c_Λ(t) z^Λ` with polynomial coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyPolynomial {
    poly: MPoly<RatFunc<G>>,
}

impl FamilyPolynomial {
    pub fn new(poly: MPoly<RatFunc<G>>) -> Result<Self, FamilyError> {
        for (e, c) in poly.terms() {
            if e.iter().any(|&x| x < 0) {
                return Err(FamilyError::InvalidExponent(e.clone()));
            }
            if e.iter().all(|&x| x == 0) {
                return Err(FamilyError::ConstantTermForbidden);
            }
            if !c.is_polynomial() {
                return Err(FamilyError::NotPolynomialInT(e.clone()));
            }
        }
        Ok(FamilyPolynomial { poly })
    }

    pub fn r(&self) -> usize {
        self.poly.nvars()
    }

    pub fn poly(&self) -> &MPoly<RatFunc<G>> {
        &self.poly
    }

    /// `c_Λ(t)` for each stored term.
    pub fn coefficients(&self) -> impl Iterator<Item = (&Vec<i64>, &UPoly<G>)> {
        self.poly.terms().iter().map(|(e, c)| (e, c.num()))
    }

    pub fn display(&self) -> String {
        self.poly.display_with(&crate::arith::var_names("z", self.r()))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum At {
    Zero,
    Generic,
    Value(G),
}

pub enum Specialization {
    Exact(ToricPolynomial<G>),
    Generic(ToricPolynomial<RatFunc<G>>),
}

fn at_value(fam: &FamilyPolynomial, t0: &G) -> ToricPolynomial<G> {
    let terms = fam
        .coefficients()
        .map(|(e, c)| (e.clone(), c.eval(t0)))
        .filter(|(_, c)| !c.is_zero());
    ToricPolynomial::new(MPoly::from_terms(fam.r(), terms)).expect("family terms are valid")
}

pub fn specialize(fam: &FamilyPolynomial, at: &At) -> Specialization {
    match at {
        At::Zero => Specialization::Exact(at_value(fam, &G::zero())),
        At::Value(t0) => Specialization::Exact(at_value(fam, t0)),
        At::Generic => Specialization::Generic(ToricPolynomial::new(fam.poly.clone()).expect("family terms are valid")),
    }
}

pub fn specialize_zero(fam: &FamilyPolynomial) -> ToricPolynomial<G> {
    at_value(fam, &G::zero())
}

pub fn specialize_value(fam: &FamilyPolynomial, t0: &G) -> ToricPolynomial<G> {
    at_value(fam, t0)
}

pub fn specialize_generic(fam: &FamilyPolynomial) -> ToricPolynomial<RatFunc<G>> {
    ToricPolynomial::new(fam.poly.clone()).expect("family terms are valid")
}

/// Squarefree polynomial whose roots are the `t` where some stored
/// coefficient vanishes.
pub fn exceptional_polynomial(fam: &FamilyPolynomial) -> UPoly<G> {
    let mut acc = UPoly::one();
    for (_, c) in fam.coefficients() {
        if c.deg0() > 0 {
            acc = acc.mul(c);
        }
    }
    acc.squarefree()
}

fn describe_roots(p: &UPoly<G>) -> Vec<String> {
    if p.deg0() == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let (rest, zero_mult) = p.strip_x();
    if zero_mult > 0 {
        out.push("0".to_string());
    }
    if rest.deg0() == 1 {
        let r = rest.monic();
        out.push((-r.coeff(0)).to_string());
    } else if rest.deg0() > 1 {
        out.push(format!("roots of {}", rest.monic().display_in("t")));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StratumKind {
    A,
    B,
    C,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    pub kind: StratumKind,
    pub index_set: IndexSet,
    pub dim: usize,
    pub description: String,
}

impl Stratum {
    pub fn label(&self) -> String {
        let k = match self.kind {
            StratumKind::A => "A",
            StratumKind::B => "B",
            StratumKind::C => "C",
        };
        if self.index_set.is_empty() {
            format!("{k}_∅")
        } else {
            format!("{k}_{}", self.index_set)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpotCheck {
    pub t: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityReport {
    pub family: String,
    pub condition_i: Verdict,
    pub exceptional_t: Vec<String>,
    pub condition_ii_zero: Verdict,
    pub condition_ii_generic: Verdict,
    pub spot_checks: Vec<SpotCheck>,
    pub uniform_tameness: Radius,
    pub admissible: Verdict,
    pub equisingular: Verdict,
    pub stratification: Vec<Stratum>,
    pub zero: Option<Analysis>,
    pub generic: Option<Analysis>,
    pub warnings: Vec<String>,
}

/// A face as a subset of the polyhedron: extreme vertices and recession.
type Shape = (Vec<IntVec>, IndexSet);

fn shape(f: &PolyFace) -> Shape {
    (f.vertices.clone(), f.noncompact_direction.clone())
}

fn face_shapes(a: &Analysis) -> BTreeSet<Shape> {
    a.faces.iter().map(shape).collect()
}

fn compact_shapes(a: &Analysis) -> BTreeSet<Shape> {
    a.faces.iter().filter(|f| f.is_compact).map(shape).collect()
}

fn essential_shapes(a: &Analysis) -> BTreeSet<Shape> {
    a.essential.essential.iter().map(|e| shape(&e.face)).collect()
}

/// Condition (I) from two completed analyses.
pub fn compare_newton_data(zero: &Analysis, generic: &Analysis) -> Verdict {
    let mut diffs = Vec::new();
    if zero.vertices != generic.vertices {
        diffs.push(format!("vertices differ: {:?} at t = 0, {:?} for generic t", zero.vertices, generic.vertices));
    }
    if face_shapes(zero) != face_shapes(generic) {
        diffs.push("face lattices of Γ₊ differ".to_string());
    }
    if compact_shapes(zero) != compact_shapes(generic) {
        diffs.push("compact boundaries differ".to_string());
    }
    if essential_shapes(zero) != essential_shapes(generic) {
        diffs.push("essential non-compact faces differ".to_string());
    }
    if zero.vanishing != generic.vanishing {
        diffs.push("vanishing and non-vanishing index sets differ".to_string());
    }
    if diffs.is_empty() {
        Verdict::holds(
            Method::ExactSubclass,
            "Newton polyhedron, compact boundary, essential faces and vanishing data agree at t = 0 and generic t",
        )
    } else {
        let mut v = Verdict::unknown(diffs.join("; "));
        v.status = Status::Fails;
        v.method = Method::ExactSubclass;
        v
    }
}

fn condition_i_failure(evidence: String) -> Verdict {
    let mut v = Verdict::unknown(evidence);
    v.status = Status::Fails;
    v.method = Method::ExactSubclass;
    v
}

/// Strata of the canonical stratification from the vanishing data of `f_0`.
pub fn stratification_from(v: &ToricVariety, a: &Analysis) -> Result<Vec<Stratum>, FamilyError> {
    let mut out = Vec::new();
    let dim = |i: &IndexSet| v.orbit_dimension(i).map_err(|e| FamilyError::Check(e.into()));
    for i in &a.vanishing.non_vanishing {
        let d = dim(i)?;
        out.push(Stratum {
            kind: StratumKind::A,
            index_set: i.clone(),
            dim: d,
            description: format!("V(f) ∩ (ℂ × X*^{i})"),
        });
        out.push(Stratum {
            kind: StratumKind::B,
            index_set: i.clone(),
            dim: d + 1,
            description: format!("(ℂ × X*^{i}) minus V(f)"),
        });
    }
    for i in &a.vanishing.vanishing {
        let d = dim(i)?;
        let description = if i.is_empty() { "the t-axis ℂ × {0}".to_string() } else { format!("ℂ × X*^{i}") };
        out.push(Stratum { kind: StratumKind::C, index_set: i.clone(), dim: d + 1, description });
    }
    Ok(out)
}

pub fn check_condition_i(v: &ToricVariety, fam: &FamilyPolynomial, cfg: &CheckConfig) -> Result<(Verdict, Vec<String>), FamilyError> {
    let exceptional = describe_roots(&exceptional_polynomial(fam));
    let f0 = specialize_zero(fam);
    if f0.is_zero() {
        return Ok((condition_i_failure("f_0 is identically zero".into()), exceptional));
    }
    let zero = analyze(v, &f0, cfg)?;
    let generic = analyze(v, &specialize_generic(fam), cfg)?;
    Ok((compare_newton_data(&zero, &generic), exceptional))
}

pub fn check_condition_ii(v: &ToricVariety, fam: &FamilyPolynomial, cfg: &CheckConfig) -> Result<(Verdict, Verdict), FamilyError> {
    let (ci, _) = check_condition_i(v, fam, cfg)?;
    if !ci.is_holds() {
        return Err(FamilyError::ConditionIRequired);
    }
    let zero = analyze(v, &specialize_zero(fam), cfg)?;
    let generic = analyze(v, &specialize_generic(fam), cfg)?;
    Ok((zero.overall, generic.overall))
}

pub fn canonical_stratification(v: &ToricVariety, fam: &FamilyPolynomial, cfg: &CheckConfig) -> Result<Vec<Stratum>, FamilyError> {
    let (ci, _) = check_condition_i(v, fam, cfg)?;
    if !ci.is_holds() {
        return Err(FamilyError::ConditionIRequired);
    }
    let zero = analyze(v, &specialize_zero(fam), cfg)?;
    stratification_from(v, &zero)
}

fn spot_values(fam: &FamilyPolynomial) -> Vec<G> {
    let p = exceptional_polynomial(fam);
    let mut out = Vec::new();
    for k in 1..=12i64 {
        for t0 in [G::from_i64(k), G::from_ratio(1, k + 1)] {
            if !p.eval(&t0).is_zero() && !out.contains(&t0) && out.len() < 3 {
                out.push(t0);
            }
        }
    }
    out
}

/// The full pipeline: condition (I), condition (II) at `t = 0` and generic
/// `t` with spot checks, admissibility, stratification and the final
/// equisingularity verdict.
pub fn equisingularity_verdict(v: &ToricVariety, fam: &FamilyPolynomial, cfg: &CheckConfig) -> Result<AdmissibilityReport, FamilyError> {
    let exceptional_t = describe_roots(&exceptional_polynomial(fam));
    let mut warnings = v.warnings.clone();
    let f0 = specialize_zero(fam);
    let not_run = || Verdict::unknown("not run: condition (I) does not hold");

    if f0.is_zero() {
        let ci = condition_i_failure("f_0 is identically zero".into());
        return Ok(assemble(fam, ci, exceptional_t, not_run(), not_run(), Vec::new(), Radius::Unknown, Vec::new(), None, None, warnings));
    }
    let zero = analyze(v, &f0, cfg)?;
    let generic = analyze(v, &specialize_generic(fam), cfg)?;
    let ci = compare_newton_data(&zero, &generic);
    if !ci.is_holds() {
        return Ok(assemble(fam, ci, exceptional_t, not_run(), not_run(), Vec::new(), Radius::Unknown, Vec::new(), Some(zero), Some(generic), warnings));
    }

    let mut spots = Vec::new();
    for t0 in spot_values(fam) {
        let a = analyze(v, &specialize_value(fam, &t0), cfg)?;
        if generic.overall.is_holds() && a.overall.status == Status::Fails {
            warnings.push(format!("spot check at t = {t0} fails although generic t holds"));
        }
        spots.push(SpotCheck { t: t0.to_string(), verdict: a.overall });
    }
    let radius = if zero.uniform_tameness == Radius::Infinite && generic.uniform_tameness == Radius::Infinite {
        Radius::Infinite
    } else {
        Radius::Unknown
    };
    let strata = stratification_from(v, &zero)?;
    let (cz, cg) = (zero.overall.clone(), generic.overall.clone());
    Ok(assemble(fam, ci, exceptional_t, cz, cg, spots, radius, strata, Some(zero), Some(generic), warnings))
}

#[allow(clippy::too_many_arguments)]
fn assemble(
    fam: &FamilyPolynomial,
    condition_i: Verdict,
    exceptional_t: Vec<String>,
    condition_ii_zero: Verdict,
    condition_ii_generic: Verdict,
    spot_checks: Vec<SpotCheck>,
    uniform_tameness: Radius,
    stratification: Vec<Stratum>,
    zero: Option<Analysis>,
    generic: Option<Analysis>,
    warnings: Vec<String>,
) -> AdmissibilityReport {
    let mut admissible = Verdict::all(
        [&condition_i, &condition_ii_zero, &condition_ii_generic],
        "conditions (I) and (II) hold and every tameness radius is infinite",
    );
    if admissible.is_holds() && uniform_tameness != Radius::Infinite {
        admissible = Verdict::unknown("a tameness radius is not known to be infinite, so no uniform bound is certified");
    }
    let equisingular = if admissible.is_holds() {
        Verdict::holds(Method::SymbolicCriterion, EQUISINGULAR)
            .with_trace("the family is admissible, so the canonical stratification is a Whitney stratification")
    } else {
        Verdict::unknown("the family is not known to be admissible, so equisingularity is not certified")
    };
    AdmissibilityReport {
        family: fam.display(),
        condition_i,
        exceptional_t,
        condition_ii_zero,
        condition_ii_generic,
        spot_checks,
        uniform_tameness,
        admissible,
        equisingular,
        stratification,
        zero,
        generic,
        warnings,
    }
}

pub fn check_admissibility(v: &ToricVariety, fam: &FamilyPolynomial, cfg: &CheckConfig) -> Result<AdmissibilityReport, FamilyError> {
    equisingularity_verdict(v, fam, cfg)
}
