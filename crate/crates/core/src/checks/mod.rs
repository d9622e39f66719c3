//! Non-degeneracy of compact faces, essential non-compact faces and local
//! tameness, each reported as a three-valued [`Verdict`].

pub mod solver;
mod verdict;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{field_pow, var_names, AlgebraicPoint, Coefficient, Field, GaussianRational, MPoly, RatFunc};
use crate::lattice::intmat::{dot, primitive, rank};
use crate::lattice::{IntVec, RationalCone};
use crate::newton::{face_function_unchecked, newton_polyhedron, NewtonError, NewtonPolyhedron, PolyFace, ToricPolynomial};
use crate::toric::{IndexSet, ToricError, ToricVariety};
use solver::{solve_torus, Solve};

pub use verdict::{from_term_list, term_list, Method, Radius, Status, TermList, Verdict, Witness};

#[derive(Debug, Error)]
pub enum CheckError {
    #[error(transparent)]
    Newton(#[from] NewtonError),
    #[error(transparent)]
    Toric(#[from] ToricError),
    #[error("face is not an essential non-compact face")]
    FaceNotEssential,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckConfig {
    pub seed: u64,
    /// Random slices tried per undecided system.
    pub budget: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { seed: 0x5eed, budget: 64 }
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Generator for the search attached to one face, reproducible from the
/// seed and the face alone.
pub fn face_rng(seed: u64, label: &str) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(splitmix(seed ^ h))
}

/// Terms of `g` involving only the variables in `i`.
pub fn restrict<C: Coefficient>(v: &ToricVariety, g: &ToricPolynomial<C>, i: &IndexSet) -> Result<ToricPolynomial<C>, CheckError> {
    if !v.is_valid_index_set(i) {
        return Err(ToricError::InvalidIndexSet(i.clone()).into());
    }
    Ok(g.filter(|e| e.iter().enumerate().all(|(k, &x)| x == 0 || i.contains(k))))
}

/// Whether `g` vanishes identically on the orbit closure `X^I`.
pub fn vanishes_on<C: Coefficient>(v: &ToricVariety, g: &ToricPolynomial<C>, i: &IndexSet) -> Result<bool, CheckError> {
    let r = restrict(v, g, i)?;
    Ok(crate::newton::torus_form(v, &r).form.is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingSplit {
    pub non_vanishing: Vec<IndexSet>,
    pub vanishing: Vec<IndexSet>,
}

pub fn vanishing_split<C: Coefficient>(v: &ToricVariety, g: &ToricPolynomial<C>) -> VanishingSplit {
    let mut split = VanishingSplit { non_vanishing: Vec::new(), vanishing: Vec::new() };
    for i in v.valid_index_sets() {
        if vanishes_on(v, g, i).expect("index set is valid") {
            split.vanishing.push(i.clone());
        } else {
            split.non_vanishing.push(i.clone());
        }
    }
    split
}

// ---------------------------------------------------------------------------
// certification

fn coordinate_names(prefix: &str, n: usize) -> Vec<String> {
    var_names(prefix, n)
}

/// Turn a solution over the coefficient field into a Gaussian-rational
/// witness, specializing the family parameter when there is one.
fn certify<C: Coefficient>(
    eqs: &[MPoly<C>],
    point: &AlgebraicPoint<C>,
    names: Vec<String>,
    rng: &mut ChaCha8Rng,
    budget: usize,
) -> Option<Witness> {
    let zero = GaussianRational::zero();
    if !C::is_parametric() {
        let p = AlgebraicPoint {
            modulus: point.modulus.map(|c| c.specialize(&zero).unwrap()),
            coords: point.coords.iter().map(|c| c.map(|x| x.specialize(&zero).unwrap())).collect(),
        };
        let e: Vec<MPoly<GaussianRational>> = eqs.iter().map(|q| q.map_coeffs(|c| c.specialize(&zero).unwrap())).collect();
        let w = Witness::new(names, &p, &e);
        return w.replay().is_ok().then_some(w);
    }
    for t0 in parameter_samples() {
        let Some(e) = specialize_keeping_support(eqs, &t0) else { continue };
        if let Solve::Solution { point, .. } = solve_torus(&e, rng, budget) {
            let mut w = Witness::new(names.clone(), &point, &e);
            w.t_value = Some(t0.to_string());
            if w.replay().is_ok() {
                return Some(w);
            }
        }
    }
    None
}

/// Small parameter values tried when a generic-`t` statement needs a
/// concrete witness.
pub fn parameter_samples() -> Vec<GaussianRational> {
    [(1, 1), (2, 1), (-1, 1), (3, 1), (1, 2), (-2, 1), (5, 3), (7, 2)]
        .iter()
        .map(|&(a, b)| GaussianRational::from_ratio(a, b))
        .collect()
}

fn specialize_keeping_support<C: Coefficient>(eqs: &[MPoly<C>], t0: &GaussianRational) -> Option<Vec<MPoly<GaussianRational>>> {
    let mut out = Vec::new();
    for q in eqs {
        let mut terms = Vec::new();
        for (e, c) in q.terms() {
            let s = c.specialize(t0)?;
            if s.is_zero() {
                return None;
            }
            terms.push((e.clone(), s));
        }
        out.push(MPoly::from_terms(q.nvars(), terms));
    }
    Some(out)
}

// ---------------------------------------------------------------------------
// non-degeneracy

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceVerdict {
    pub face: PolyFace,
    /// The face function pulled back to the torus.
    pub face_function: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NondegReport {
    pub faces: Vec<FaceVerdict>,
    pub overall: Verdict,
}

/// Critical points of a torus Laurent polynomial `l` whose terms all have
/// the same `w`-degree `value`.
pub fn torus_nondegeneracy<C: Coefficient>(l: &MPoly<C>, value: i64, rng: &mut ChaCha8Rng, budget: usize) -> Verdict {
    let n = l.nvars();
    if l.is_monomial() {
        return Verdict::holds(Method::ExactSubclass, "single monomial: the gradient never vanishes on the torus");
    }
    let exps: Vec<IntVec> = l.support().cloned().collect();
    if rank(&exps, n) == exps.len() {
        return Verdict::holds(
            Method::ExactSubclass,
            "exponents are linearly independent: the logarithmic gradient has no zero on the torus",
        );
    }
    let mut eqs: Vec<MPoly<C>> = (0..n).map(|j| l.log_derivative(j)).collect();
    if value == 0 {
        eqs.insert(0, l.clone());
    }
    let k = solver::reduced_dimension(&eqs);
    match solve_torus(&eqs, rng, budget) {
        Solve::NoSolution(why) => Verdict::holds(Method::ExactSubclass, "gradient system has no zero on the torus").with_trace(why),
        Solve::Solution { point, searched, trace } => match certify(&eqs, &point, coordinate_names("xi", n), rng, budget) {
            Some(w) => {
                let method = if searched { Method::RandomSearchCertified } else { Method::ExactSubclass };
                Verdict::fails(method, w, "the face function has a critical point on the torus").with_trace(trace)
            }
            None => Verdict::unknown("critical points exist generically but no specialized witness was certified").with_trace(trace),
        },
        Solve::Unknown(why) => Verdict::unknown(format!("reduced system in {k} variables is outside the exact subclass")).with_trace(why),
    }
}

fn face_label(face: &PolyFace) -> String {
    format!("{:?}", face.key())
}

pub fn face_nondegeneracy<C: Coefficient>(v: &ToricVariety, g: &ToricPolynomial<C>, face: &PolyFace, cfg: &CheckConfig) -> FaceVerdict {
    let (_, l) = face_function_unchecked(v, g, face);
    let names = coordinate_names("xi", v.n);
    let mut rng = face_rng(cfg.seed, &face_label(face));
    let verdict = torus_nondegeneracy(&l, face.value, &mut rng, cfg.budget);
    FaceVerdict { face: face.clone(), face_function: l.display_with(&names), verdict }
}

pub fn check_nondegeneracy<C: Coefficient>(v: &ToricVariety, g: &ToricPolynomial<C>, cfg: &CheckConfig) -> Result<NondegReport, CheckError> {
    let np = newton_polyhedron(v, g)?;
    nondegeneracy_with(v, g, &np, cfg)
}

pub fn nondegeneracy_with<C: Coefficient>(
    v: &ToricVariety,
    g: &ToricPolynomial<C>,
    np: &NewtonPolyhedron,
    cfg: &CheckConfig,
) -> Result<NondegReport, CheckError> {
    let faces: Vec<FaceVerdict> = np.compact_boundary()?.iter().map(|f| face_nondegeneracy(v, g, f, cfg)).collect();
    let overall = Verdict::all(faces.iter().map(|f| &f.verdict), "every compact face function is non-degenerate");
    Ok(NondegReport { faces, overall })
}

/// Non-degeneracy of each non-vanishing restriction `g|X^I`.
pub fn restriction_nondegeneracy_check<C: Coefficient>(
    v: &ToricVariety,
    g: &ToricPolynomial<C>,
    cfg: &CheckConfig,
) -> Result<Vec<(IndexSet, Verdict)>, CheckError> {
    let split = vanishing_split(v, g);
    let mut out = Vec::new();
    for i in split.non_vanishing {
        let r = restrict(v, g, &i)?;
        out.push((i, check_nondegeneracy(v, &r, cfg)?.overall));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// essential faces and tameness

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EssentialFace {
    pub face: PolyFace,
    pub direction: IndexSet,
    /// `g_Δ` in the coordinates of the ambient space.
    pub face_function: String,
    pub tame: Verdict,
    pub tameness_radius: Radius,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RejectedFace {
    pub face: PolyFace,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EssentialScan {
    pub essential: Vec<EssentialFace>,
    pub rejected: Vec<RejectedFace>,
    pub anomalies: Vec<String>,
}

/// Whether each `b_i`, `i ∈ I_w`, is in the recession cone of the face,
/// computed as the face of `σ̌` cut out by `w`.
fn half_lines_in_face(v: &ToricVariety, face: &PolyFace) -> bool {
    let rec_rays: Vec<IntVec> = v.dual.rays().iter().filter(|r| dot(&face.weight, r) == 0).cloned().collect();
    if rec_rays.is_empty() {
        return face.noncompact_direction.is_empty();
    }
    let Ok(rec) = RationalCone::with_cap(v.n, &rec_rays, v.n) else { return false };
    face.noncompact_direction.iter().all(|i| {
        let b = &v.generators[i];
        dot(&face.weight, b) == 0 && v.dual.contains_int(b) && rec.contains_int(b)
    })
}

fn essential_reason<C: Coefficient>(v: &ToricVariety, g: &ToricPolynomial<C>, face: &PolyFace) -> Result<(), String> {
    if face.is_compact {
        return Err("compact".into());
    }
    if face.noncompact_direction.len() == v.r {
        return Err("the whole polyhedron".into());
    }
    if !vanishes_on(v, g, &face.noncompact_direction).map_err(|e| e.to_string())? {
        return Err(format!("X^{} is not a vanishing variety", face.noncompact_direction));
    }
    Ok(())
}

pub fn essential_noncompact_faces<C: Coefficient>(
    v: &ToricVariety,
    g: &ToricPolynomial<C>,
    cfg: &CheckConfig,
) -> Result<EssentialScan, CheckError> {
    let np = newton_polyhedron(v, g)?;
    essential_with(v, g, &np, cfg)
}

pub fn essential_with<C: Coefficient>(
    v: &ToricVariety,
    g: &ToricPolynomial<C>,
    np: &NewtonPolyhedron,
    cfg: &CheckConfig,
) -> Result<EssentialScan, CheckError> {
    let mut scan = EssentialScan { essential: Vec::new(), rejected: Vec::new(), anomalies: np.anomalies.clone() };
    for face in np.noncompact_faces()? {
        match essential_reason(v, g, &face) {
            Err(reason) => {
                if face.noncompact_direction.len() < v.r {
                    scan.rejected.push(RejectedFace { face, reason });
                }
            }
            Ok(()) => {
                if !half_lines_in_face(v, &face) {
                    scan.anomalies.push(format!(
                        "face with vertices {:?}: some b_i with i in {} is not in its recession cone",
                        face.vertices, face.noncompact_direction
                    ));
                    scan.rejected.push(RejectedFace { face, reason: "half-line condition fails".into() });
                    continue;
                }
                let (tame, radius) = tameness_of(v, g, &face, cfg);
                let (g_delta, _) = face_function_unchecked(v, g, &face);
                scan.essential.push(EssentialFace {
                    direction: face.noncompact_direction.clone(),
                    face_function: g_delta.display(),
                    face,
                    tame,
                    tameness_radius: radius,
                });
            }
        }
    }
    Ok(scan)
}

/// Local tameness of `g_Δ` for an essential non-compact face.
pub fn check_local_tameness<C: Coefficient>(
    v: &ToricVariety,
    g: &ToricPolynomial<C>,
    face: &PolyFace,
    cfg: &CheckConfig,
) -> Result<(Verdict, Radius), CheckError> {
    let np = newton_polyhedron(v, g)?;
    if !np.has_face(face) || essential_reason(v, g, face).is_err() || !half_lines_in_face(v, face) {
        return Err(CheckError::FaceNotEssential);
    }
    Ok(tameness_of(v, g, face, cfg))
}

/// The frozen coordinates `z_i = ξ^{b_i}` (`i ∈ I`) are replaced by the
/// torus parameter `ξ`; the unknowns are `(ξ, z_j : j ∉ I)`.
fn parametrize<C: Coefficient>(v: &ToricVariety, p: &MPoly<C>, i: &IndexSet, free: &[usize]) -> MPoly<C> {
    let dim = v.n + free.len();
    MPoly::from_terms(
        dim,
        p.terms().iter().map(|(e, c)| {
            let mut x = vec![0i64; dim];
            for k in i.iter() {
                for (a, b) in x.iter_mut().zip(&v.generators[k]) {
                    *a += e[k] * b;
                }
            }
            for (slot, &j) in free.iter().enumerate() {
                x[v.n + slot] = e[j];
            }
            (x, c.clone())
        }),
    )
}

/// A weight `x = (a, c)` with `<a, b_i> > 0` for `i ∈ I` under which every
/// equation keeps at least two terms in its initial form. With several
/// equations all terms must have equal weight (a torus action preserving
/// the critical locus); a single equation only needs two minimal terms.
fn degeneration_weight(v: &ToricVariety, exps: &[Vec<IntVec>], i: &IndexSet, dim: usize) -> Option<IntVec> {
    let positive: Vec<IntVec> = i
        .iter()
        .map(|k| {
            let mut row = v.generators[k].clone();
            row.resize(dim, 0);
            row
        })
        .collect();
    let diff = |a: &IntVec, b: &IntVec| -> IntVec { a.iter().zip(b).map(|(x, y)| x - y).collect() };
    let mut candidates: Vec<(Vec<IntVec>, Vec<IntVec>)> = Vec::new();
    if exps.len() == 1 {
        let e = &exps[0];
        for p in 0..e.len() {
            for q in p + 1..e.len() {
                let eqs = vec![diff(&e[p], &e[q])];
                let ineqs: Vec<IntVec> = e.iter().map(|o| diff(o, &e[p])).collect();
                candidates.push((ineqs, eqs));
            }
        }
    } else {
        let eqs: Vec<IntVec> = exps.iter().flat_map(|e| e[1..].iter().map(|o| diff(o, &e[0])).collect::<Vec<_>>()).collect();
        candidates.push((Vec::new(), eqs));
    }
    for (mut ineqs, eqs) in candidates {
        ineqs.extend(positive.iter().cloned());
        let cone = RationalCone::from_inequalities(dim, &ineqs, &eqs);
        let mut s = vec![0i64; dim];
        for r in cone.rays() {
            for (a, b) in s.iter_mut().zip(r) {
                *a += b;
            }
        }
        if positive.iter().all(|p| dot(p, &s) > 0) {
            return Some(primitive(&s));
        }
    }
    None
}

/// Whether the tropical prevariety of the system misses the open cone
/// `<a, b_i> > 0` (`i ∈ I`): no weight keeps two terms in every initial form.
/// Every curve of critical points with `u -> 0` would give such a weight.
fn misses_positive_cone(v: &ToricVariety, exps: &[Vec<IntVec>], i: &IndexSet, dim: usize) -> bool {
    const MAX_SELECTIONS: usize = 1 << 14;
    let positive: Vec<IntVec> = i
        .iter()
        .map(|k| {
            let mut row = v.generators[k].clone();
            row.resize(dim, 0);
            row
        })
        .collect();
    let diff = |a: &IntVec, b: &IntVec| -> IntVec { a.iter().zip(b).map(|(x, y)| x - y).collect() };
    let pairs: Vec<Vec<(usize, usize)>> =
        exps.iter().map(|e| (0..e.len()).flat_map(|p| (p + 1..e.len()).map(move |q| (p, q))).collect()).collect();
    if pairs.iter().any(|p| p.is_empty()) {
        return true;
    }
    if pairs.iter().try_fold(1usize, |acc, p| acc.checked_mul(p.len()).filter(|&n| n <= MAX_SELECTIONS)).is_none() {
        return false;
    }
    let mut choice = vec![0usize; exps.len()];
    loop {
        let mut ineqs = positive.clone();
        let mut eqs = Vec::new();
        for (k, e) in exps.iter().enumerate() {
            let (p, q) = pairs[k][choice[k]];
            eqs.push(diff(&e[p], &e[q]));
            ineqs.extend(e.iter().map(|o| diff(o, &e[p])));
        }
        let cone = RationalCone::from_inequalities(dim, &ineqs, &eqs);
        let mut s = vec![0i64; dim];
        for r in cone.rays() {
            for (a, b) in s.iter_mut().zip(r) {
                *a += b;
            }
        }
        if positive.iter().all(|p| dot(p, &s) > 0) {
            return false;
        }
        let mut k = 0;
        while k < choice.len() && choice[k] + 1 == pairs[k].len() {
            choice[k] = 0;
            k += 1;
        }
        if k == choice.len() {
            return true;
        }
        choice[k] += 1;
    }
}

fn tameness_of<C: Coefficient>(v: &ToricVariety, g: &ToricPolynomial<C>, face: &PolyFace, cfg: &CheckConfig) -> (Verdict, Radius) {
    let i = &face.noncompact_direction;
    let free: Vec<usize> = (0..v.r).filter(|&j| !i.contains(j)).collect();
    let (g_delta, _) = face_function_unchecked(v, g, face);
    let (wrt, partials): (Vec<usize>, Vec<MPoly<C>>) = free
        .iter()
        .map(|&j| (j, g_delta.poly().derivative(j)))
        .filter(|(_, p)| !p.is_zero())
        .unzip();
    let dim = v.n + free.len();
    let eqs: Vec<MPoly<C>> = partials.iter().map(|p| parametrize(v, p, i, &free)).collect();
    let mut rng = face_rng(cfg.seed, &format!("tame {}", face_label(face)));

    if let Some(k) = eqs.iter().position(|e| e.is_monomial()) {
        let j = wrt[k];
        let verdict = Verdict::holds(
            Method::SymbolicCriterion,
            format!("∂g_Δ/∂z{} is a single monomial, nonzero for every u and z in the torus", j + 1),
        );
        return (verdict, Radius::Infinite);
    }
    let exps: Vec<Vec<IntVec>> = eqs.iter().map(|e| e.support().cloned().collect()).collect();
    let away_from_zero = || {
        misses_positive_cone(v, &exps, i, dim).then(|| {
            (
                Verdict::holds(
                    Method::ExactSubclass,
                    "no weight with <a, b_i> > 0 on I keeps two terms in every initial form, so critical points stay away from u = 0",
                ),
                Radius::Unknown,
            )
        })
    };
    match solve_torus(&eqs, &mut rng, cfg.budget) {
        Solve::NoSolution(why) => (
            Verdict::holds(Method::ExactSubclass, "no critical point in the free variables for any u in the orbit").with_trace(why),
            Radius::Infinite,
        ),
        Solve::Unknown(why) => away_from_zero()
            .or_else(|| along_a_curve(v, i, &free, &partials, &mut rng, cfg.budget))
            .unwrap_or_else(|| (Verdict::unknown("critical-point system is outside the exact subclass").with_trace(why), Radius::Unknown)),
        Solve::Solution { point, searched, trace } => {
            let Some(x) = degeneration_weight(v, &exps, i, dim) else {
                return away_from_zero().or_else(|| along_a_curve(v, i, &free, &partials, &mut rng, cfg.budget)).unwrap_or_else(|| {
                    (
                        Verdict::unknown("critical points exist for some u but no degeneration towards u = 0 was found").with_trace(trace),
                        Radius::Unknown,
                    )
                });
            };
            // back to the ambient coordinates
            let mut z_weight = vec![0i64; v.r];
            for k in i.iter() {
                z_weight[k] = dot(&x[..v.n], &v.generators[k]);
            }
            for (slot, &j) in free.iter().enumerate() {
                z_weight[j] = x[v.n + slot];
            }
            let Some(zpoint) = ambient_point(v, &point, i, &free) else {
                return (Verdict::unknown("could not express the critical point in ambient coordinates"), Radius::Unknown);
            };
            match certify(&partials, &zpoint, coordinate_names("z", v.r), &mut rng, cfg.budget) {
                Some(mut w) => {
                    w.degeneration_weight = Some(z_weight.clone());
                    w.frozen = i.iter().collect();
                    if w.replay().is_err() {
                        return (Verdict::unknown("degeneration certificate failed replay"), Radius::Unknown);
                    }
                    let method = if searched { Method::RandomSearchCertified } else { Method::ExactSubclass };
                    let verdict = Verdict::fails(
                        method,
                        w,
                        format!(
                            "critical points of g_Δ occur for u arbitrarily close to 0 (weight {:?} on z)",
                            z_weight
                        ),
                    )
                    .with_trace(trace);
                    (verdict, Radius::Unknown)
                }
                None => (Verdict::unknown("no specialized witness was certified").with_trace(trace), Radius::Unknown),
            }
        }
    }
}

/// Restrict the frozen coordinates to the curve `ξ = λ τ^a`, `u_i = ξ^{b_i}`,
/// with `<a, b_i> > 0`, and solve for the free variables over `Q(i)(τ)`.
/// A generic solution means critical points for all but finitely many `τ`,
/// hence for `u` arbitrarily close to 0. When the orbit is one-dimensional
/// the curve covers it, so no generic solution means the critical `u` form a
/// finite set away from 0.
fn along_a_curve<C: Coefficient>(
    v: &ToricVariety,
    i: &IndexSet,
    free: &[usize],
    partials: &[MPoly<C>],
    rng: &mut ChaCha8Rng,
    budget: usize,
) -> Option<(Verdict, Radius)> {
    if C::is_parametric() {
        return None;
    }
    let zero = GaussianRational::zero();
    let partials: Vec<MPoly<GaussianRational>> = partials.iter().map(|p| p.map_coeffs(|c| c.specialize(&zero).unwrap())).collect();
    let frozen: Vec<IntVec> = i.iter().map(|k| v.generators[k].clone()).collect();
    let orbit_dim = rank(&frozen, v.n);
    let a: IntVec = (0..v.n).map(|j| v.dual.facets().iter().map(|f| f[j]).sum()).collect();
    let lambda: Vec<GaussianRational> =
        if orbit_dim == 1 { vec![GaussianRational::one(); v.n] } else { (0..v.n).map(|_| solver::random_gaussian(rng)).collect() };
    let tau = RatFunc::<GaussianRational>::var();

    // coefficient of each term as a function of τ, exponent in the free variables
    let restricted = |p: &MPoly<GaussianRational>| -> MPoly<RatFunc<GaussianRational>> {
        let mut out = MPoly::zero(free.len());
        for (e, c) in p.terms() {
            let mut x = vec![0i64; v.n];
            for k in i.iter() {
                for (s, b) in x.iter_mut().zip(&v.generators[k]) {
                    *s += e[k] * b;
                }
            }
            let mut coeff = c.clone();
            for (l, &xj) in lambda.iter().zip(&x) {
                coeff = coeff * field_pow(l, xj);
            }
            let y: IntVec = free.iter().map(|&j| e[j]).collect();
            out.add_term(y, RatFunc::from_gaussian(&coeff) * field_pow(&tau, dot(&a, &x)));
        }
        out
    };
    let eqs: Vec<MPoly<RatFunc<GaussianRational>>> = partials.iter().map(restricted).filter(|e| !e.is_zero()).collect();
    let curve = format!("ξ = λ·τ^{a:?}, λ = ({})", lambda.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(", "));
    match solve_torus(&eqs, rng, budget) {
        Solve::NoSolution(why) if orbit_dim == 1 => Some((
            Verdict::holds(
                Method::ExactSubclass,
                "for all but finitely many u the free variables have no critical point, so none occur for small u",
            )
            .with_trace(format!("{curve}: {why}")),
            Radius::Unknown,
        )),
        Solve::Solution { trace, .. } => {
            for (num, den) in [(1, 2), (1, 3), (1, 5), (1, 7), (2, 11), (1, 13)] {
                let t0 = GaussianRational::from_ratio(num, den);
                let Some(special) = eqs
                    .iter()
                    .map(|e| {
                        let mut out = MPoly::zero(free.len());
                        for (y, c) in e.terms() {
                            out.add_term(y.clone(), c.eval(&t0)?);
                        }
                        Some(out)
                    })
                    .collect::<Option<Vec<_>>>()
                else {
                    continue;
                };
                let Solve::Solution { point, .. } = solve_torus(&special, rng, budget) else { continue };
                let constant = |c: GaussianRational| crate::arith::UPoly::constant(c);
                let mut coords = Vec::with_capacity(v.r);
                for k in 0..v.r {
                    if i.contains(k) {
                        let b = &v.generators[k];
                        let mut u = GaussianRational::one();
                        for j in 0..v.n {
                            u = u * field_pow(&(lambda[j].clone() * field_pow(&t0, a[j])), b[j]);
                        }
                        coords.push(constant(u));
                    } else {
                        let slot = free.iter().position(|&j| j == k)?;
                        coords.push(point.coords[slot].clone());
                    }
                }
                let zpoint = AlgebraicPoint { modulus: point.modulus.clone(), coords };
                let mut w = Witness::new(coordinate_names("z", v.r), &zpoint, &partials);
                w.frozen = i.iter().collect();
                if w.replay().is_err() {
                    continue;
                }
                let verdict = Verdict::fails(
                    Method::ExactSubclass,
                    w,
                    format!("critical points of g_Δ exist for all but finitely many τ on the curve {curve}, so for u arbitrarily close to 0; witness at τ = {t0}"),
                )
                .with_trace(trace);
                return Some((verdict, Radius::Unknown));
            }
            None
        }
        _ => None,
    }
}

fn ambient_point<C: Coefficient>(
    v: &ToricVariety,
    point: &AlgebraicPoint<C>,
    i: &IndexSet,
    free: &[usize],
) -> Option<AlgebraicPoint<C>> {
    let dim = point.dim();
    let mut coords = Vec::with_capacity(v.r);
    for k in 0..v.r {
        if i.contains(k) {
            let mut e = v.generators[k].clone();
            e.resize(dim, 0);
            coords.push(point.eval(&MPoly::monomial(dim, e, C::one()))?);
        } else {
            let slot = free.iter().position(|&j| j == k)?;
            coords.push(point.coords[v.n + slot].clone());
        }
    }
    Some(AlgebraicPoint { modulus: point.modulus.clone(), coords })
}
