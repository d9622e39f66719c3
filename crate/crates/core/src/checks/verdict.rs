use serde::{Deserialize, Serialize};

use crate::arith::{AlgebraicPoint, GaussianRational, MPoly, UPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Status {
    Holds,
    Unknown,
    Fails,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    ExactSubclass,
    SymbolicCriterion,
    RandomSearchCertified,
    Capped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Radius {
    Infinite,
    Unknown,
}

/// A Laurent polynomial as `(exponent, coefficient)` pairs, coefficients as strings.
pub type TermList = Vec<(Vec<i64>, String)>;

pub fn term_list(p: &MPoly<GaussianRational>) -> TermList {
    p.terms().iter().map(|(e, c)| (e.clone(), c.to_string())).collect()
}

pub fn from_term_list(n: usize, t: &TermList) -> Result<MPoly<GaussianRational>, String> {
    let mut terms = Vec::new();
    for (e, c) in t {
        if e.len() != n {
            return Err(format!("exponent {e:?} has the wrong length"));
        }
        terms.push((e.clone(), c.parse::<GaussianRational>().map_err(|e| e.to_string())?));
    }
    Ok(MPoly::from_terms(n, terms))
}

/// An exact point at which a system of equations vanishes.
///
/// Coordinates are polynomials in `θ`, where `θ` is any root of `modulus`;
/// every root gives a valid point. A modulus of degree one is a rational point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub variables: Vec<String>,
    /// Coefficients of the modulus, constant term first.
    pub modulus: Vec<String>,
    /// Coefficients of each coordinate in `θ`, constant term first.
    pub coordinates: Vec<Vec<String>>,
    pub equations: Vec<TermList>,
    /// Value of the family parameter the equations were specialized at.
    pub t_value: Option<String>,
    /// A weight, positive on the frozen coordinates, whose initial system
    /// keeps at least two terms in every equation.
    pub degeneration_weight: Option<Vec<i64>>,
    pub frozen: Vec<usize>,
}

fn poly_strings(p: &UPoly<GaussianRational>) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn parse_poly(v: &[String]) -> Result<UPoly<GaussianRational>, String> {
    v.iter()
        .map(|s| s.parse::<GaussianRational>().map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()
        .map(UPoly::new)
}

impl Witness {
    pub fn new(variables: Vec<String>, point: &AlgebraicPoint<GaussianRational>, equations: &[MPoly<GaussianRational>]) -> Self {
        Witness {
            variables,
            modulus: poly_strings(&point.modulus),
            coordinates: point.coords.iter().map(poly_strings).collect(),
            equations: equations.iter().map(term_list).collect(),
            t_value: None,
            degeneration_weight: None,
            frozen: Vec::new(),
        }
    }

    pub fn point(&self) -> Result<AlgebraicPoint<GaussianRational>, String> {
        let modulus = parse_poly(&self.modulus)?;
        if modulus.deg0() == 0 {
            return Err("modulus must have positive degree".into());
        }
        let coords = self.coordinates.iter().map(|c| parse_poly(c)).collect::<Result<Vec<_>, _>>()?;
        Ok(AlgebraicPoint { modulus: modulus.monic(), coords })
    }

    /// Substitute the point into every equation and check all vanish with
    /// every coordinate nonzero, and that the degeneration weight (if any)
    /// is positive on the frozen coordinates and keeps two terms in each
    /// equation's initial form.
    pub fn replay(&self) -> Result<(), String> {
        let pt = self.point()?;
        let n = self.variables.len();
        if pt.dim() != n {
            return Err("coordinate count differs from variable count".into());
        }
        if !pt.in_torus() {
            return Err("a coordinate vanishes".into());
        }
        for (k, eq) in self.equations.iter().enumerate() {
            let p = from_term_list(n, eq)?;
            if !pt.vanishes(&p) {
                return Err(format!("equation {} does not vanish", k + 1));
            }
        }
        if let Some(w) = &self.degeneration_weight {
            if w.len() != n {
                return Err("degeneration weight has the wrong length".into());
            }
            if self.frozen.iter().any(|&i| w[i] <= 0) {
                return Err("degeneration weight is not positive on the frozen coordinates".into());
            }
            for eq in &self.equations {
                let vals: Vec<i64> = eq.iter().map(|(e, _)| e.iter().zip(w).map(|(a, b)| a * b).sum()).collect();
                let min = vals.iter().min().copied().unwrap_or(0);
                if vals.iter().filter(|&&v| v == min).count() < 2 {
                    return Err("initial form of an equation is a monomial".into());
                }
            }
        }
        Ok(())
    }

    pub fn describe(&self) -> String {
        let rational = self.modulus.len() == 2;
        let coord = |c: &Vec<String>| -> String {
            let p = parse_poly(c).unwrap_or_else(|_| UPoly::zero());
            if rational {
                let m = parse_poly(&self.modulus).unwrap_or_else(|_| UPoly::x()).monic();
                p.eval(&-m.coeff(0)).to_string()
            } else {
                p.display_in("θ")
            }
        };
        let pts: Vec<String> = self
            .variables
            .iter()
            .zip(&self.coordinates)
            .map(|(v, c)| format!("{v} = {}", coord(c)))
            .collect();
        let mut s = pts.join(", ");
        if !rational {
            let m = parse_poly(&self.modulus).unwrap_or_else(|_| UPoly::x());
            s = format!("{s} where {} = 0", m.display_in("θ"));
        }
        if let Some(t) = &self.t_value {
            s = format!("{s} (t = {t})");
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub method: Method,
    pub witness: Option<Witness>,
    pub evidence: String,
    pub trace: Vec<String>,
}

impl Verdict {
    pub fn holds(method: Method, evidence: impl Into<String>) -> Self {
        Verdict { status: Status::Holds, method, witness: None, evidence: evidence.into(), trace: Vec::new() }
    }

    pub fn fails(method: Method, witness: Witness, evidence: impl Into<String>) -> Self {
        Verdict { status: Status::Fails, method, witness: Some(witness), evidence: evidence.into(), trace: Vec::new() }
    }

    pub fn unknown(evidence: impl Into<String>) -> Self {
        Verdict { status: Status::Unknown, method: Method::Capped, witness: None, evidence: evidence.into(), trace: Vec::new() }
    }

    pub fn with_trace(mut self, line: impl Into<String>) -> Self {
        self.trace.push(line.into());
        self
    }

    pub fn is_holds(&self) -> bool {
        self.status == Status::Holds
    }

    /// Conjunction: Fails beats Unknown beats Holds. The first worst
    /// component supplies the witness and evidence.
    pub fn all<'a>(parts: impl IntoIterator<Item = &'a Verdict>, holds_evidence: &str) -> Verdict {
        let mut worst: Option<&Verdict> = None;
        let mut method = Method::ExactSubclass;
        let mut count = 0;
        for v in parts {
            count += 1;
            if v.method != Method::ExactSubclass {
                method = v.method;
            }
            if worst.map_or(v.status != Status::Holds, |w| v.status > w.status) {
                worst = Some(v);
            }
        }
        match worst {
            Some(w) => {
                let mut out = w.clone();
                out.trace.insert(0, format!("worst of {count} component verdicts"));
                out
            }
            None => Verdict::holds(method, holds_evidence).with_trace(format!("all {count} components hold")),
        }
    }
}
