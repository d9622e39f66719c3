//! Problem files: a variety, and optionally a polynomial or a family.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::parse::{parse_family, parse_polynomial};
use super::CliError;
use crate::arith::GaussianRational;
use crate::family::FamilyPolynomial;
use crate::lattice::{IntVec, DEFAULT_MAX_DIM};
use crate::newton::ToricPolynomial;
use crate::toric::{build_variety, BuildOptions, ToricVariety, VarietyInput};

fn yes() -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VarietyBlock {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_rays: Option<Vec<IntVec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<IntVec>>,
    /// When false, explicit generators only need to span the dual cone.
    #[serde(default = "yes")]
    pub require_saturation: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_dim: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub variety: VarietyBlock,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default)]
    pub options: Options,
}

pub enum Subject {
    Nothing,
    Polynomial(ToricPolynomial<GaussianRational>),
    Family(FamilyPolynomial),
}

pub struct Problem {
    pub file: ProblemFile,
    pub variety: ToricVariety,
    pub subject: Subject,
}

pub fn parse_problem_str(text: &str) -> Result<Problem, CliError> {
    let file: ProblemFile = serde_json::from_str(text).map_err(|e| CliError::Parse(format!("problem file {}:{}: {e}", e.line(), e.column())))?;
    let input = match (&file.variety.sigma_rays, &file.variety.generators) {
        (Some(r), None) => VarietyInput::SigmaRays(r.clone()),
        (None, Some(g)) => VarietyInput::Generators(g.clone()),
        _ => return Err(CliError::Parse("variety needs exactly one of `sigma_rays` and `generators`".into())),
    };
    let opts = BuildOptions {
        max_dim: file.options.max_dim.unwrap_or(DEFAULT_MAX_DIM),
        require_saturation: file.variety.require_saturation,
    };
    let variety = build_variety(&input, &opts)?;
    let subject = match (&file.polynomial, &file.family) {
        (Some(_), Some(_)) => return Err(CliError::Parse("give either `polynomial` or `family`, not both".into())),
        (Some(p), None) => {
            let poly = parse_polynomial(p, variety.r).map_err(|e| CliError::Parse(format!("polynomial {e}")))?;
            Subject::Polynomial(ToricPolynomial::new(poly)?)
        }
        (None, Some(f)) => {
            let poly = parse_family(f, variety.r).map_err(|e| CliError::Parse(format!("family {e}")))?;
            Subject::Family(FamilyPolynomial::new(poly)?)
        }
        (None, None) => Subject::Nothing,
    };
    Ok(Problem { file, variety, subject })
}

pub fn parse_problem(path: &Path) -> Result<Problem, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_problem_str(&text)
}
