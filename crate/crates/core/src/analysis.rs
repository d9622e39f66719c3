//! Everything the checks say about one polynomial on one variety.

use serde::{Deserialize, Serialize};

use crate::arith::{var_names, Coefficient};
use crate::checks::{
    essential_with, nondegeneracy_with, CheckConfig, CheckError, EssentialScan, NondegReport, Radius, VanishingSplit,
    Verdict,
};
use crate::lattice::IntVec;
use crate::newton::{newton_polyhedron, torus_form, PolyFace, ToricPolynomial};
use crate::toric::ToricVariety;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub polynomial: String,
    pub torus_form: String,
    pub support: Vec<IntVec>,
    pub vertices: Vec<IntVec>,
    pub faces: Vec<PolyFace>,
    pub vanishing: VanishingSplit,
    pub nondegeneracy: NondegReport,
    pub essential: EssentialScan,
    pub tameness: Verdict,
    pub uniform_tameness: Radius,
    /// Non-degenerate and locally tame along the vanishing varieties.
    pub overall: Verdict,
    pub warnings: Vec<String>,
}

pub fn analyze<C: Coefficient>(v: &ToricVariety, g: &ToricPolynomial<C>, cfg: &CheckConfig) -> Result<Analysis, CheckError> {
    let np = newton_polyhedron(v, g)?;
    let tf = torus_form(v, g);
    let mut warnings = v.warnings.clone();
    for c in &tf.cancellations {
        warnings.push(format!("terms {:?} cancel on the torus at λ = {:?}", c.exponents, c.lambda));
    }
    let nondegeneracy = nondegeneracy_with(v, g, &np, cfg)?;
    let essential = essential_with(v, g, &np, cfg)?;
    let tameness = Verdict::all(
        essential.essential.iter().map(|e| &e.tame),
        "locally tame along every vanishing variety",
    );
    let uniform_tameness = if essential.essential.iter().all(|e| e.tameness_radius == Radius::Infinite) {
        Radius::Infinite
    } else {
        Radius::Unknown
    };
    let overall = Verdict::all([&nondegeneracy.overall, &tameness], "non-degenerate and locally tame");
    Ok(Analysis {
        polynomial: g.display(),
        torus_form: tf.form.display_with(&var_names("xi", v.n)),
        support: np.support.clone(),
        vertices: np.vertices.clone(),
        faces: np.faces()?.to_vec(),
        vanishing: crate::checks::vanishing_split(v, g),
        nondegeneracy,
        essential,
        tameness,
        uniform_tameness,
        overall,
        warnings,
    })
}
