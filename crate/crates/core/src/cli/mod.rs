//! Command surface shared by the binary and the tests: problem files in,
//! structured or text reports out.

pub mod parse;
pub mod problem;
pub mod report;

use std::fmt;

use crate::analysis::analyze;
use crate::checks::{check_nondegeneracy, essential_noncompact_faces, CheckConfig, CheckError, Method, Status, Verdict};
use crate::family::{equisingularity_verdict, specialize_zero, stratification_from, FamilyError, EQUISINGULAR};
use crate::lattice::{hilbert_basis, IntVec, LatticeError};
use crate::newton::{newton_polyhedron, torus_form, NewtonError, ToricPolynomial};
use crate::toric::{ToricError, ToricVariety};
use crate::arith::{var_names, GaussianRational};
use problem::{Problem, Subject};
use report::{NewtonSummary, OracleCheck, Report, VarietySummary};

#[derive(Debug)]
pub enum CliError {
    Io(String),
    Parse(String),
    Usage(String),
    Toric(ToricError),
    Newton(NewtonError),
    Check(CheckError),
    Family(FamilyError),
    Lattice(LatticeError),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(s) | CliError::Parse(s) | CliError::Usage(s) => f.write_str(s),
            CliError::Toric(e) => write!(f, "{e}"),
            CliError::Newton(e) => write!(f, "{e}"),
            CliError::Check(e) => write!(f, "{e}"),
            CliError::Family(e) => write!(f, "{e}"),
            CliError::Lattice(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ToricError> for CliError {
    fn from(e: ToricError) -> Self {
        CliError::Toric(e)
    }
}
impl From<NewtonError> for CliError {
    fn from(e: NewtonError) -> Self {
        CliError::Newton(e)
    }
}
impl From<CheckError> for CliError {
    fn from(e: CheckError) -> Self {
        CliError::Check(e)
    }
}
impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        CliError::Family(e)
    }
}
impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        CliError::Lattice(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Dual,
    Hilbert,
    Faces,
    Nondeg,
    Tame,
    Analyze,
    Family,
    Stratify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Dual => "dual",
            Command::Hilbert => "hilbert",
            Command::Faces => "faces",
            Command::Nondeg => "nondeg",
            Command::Tame => "tame",
            Command::Analyze => "analyze",
            Command::Family => "family",
            Command::Stratify => "stratify",
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub seed: Option<u64>,
    pub budget: Option<usize>,
    pub oracle: bool,
}

fn config(p: &Problem, o: &RunOptions) -> CheckConfig {
    let d = CheckConfig::default();
    CheckConfig {
        seed: o.seed.or(p.file.options.seed).unwrap_or(d.seed),
        budget: o.budget.or(p.file.options.budget).unwrap_or(d.budget),
    }
}

fn polynomial_of(p: &Problem) -> Result<ToricPolynomial<GaussianRational>, CliError> {
    match &p.subject {
        Subject::Polynomial(g) => Ok(g.clone()),
        Subject::Family(f) => Ok(specialize_zero(f)),
        Subject::Nothing => Err(CliError::Usage("this command needs a `polynomial` or `family`".into())),
    }
}

fn empty_report(cmd: Command, v: &ToricVariety, cfg: &CheckConfig) -> Report {
    Report {
        command: cmd.name().into(),
        seed: cfg.seed,
        budget: cfg.budget,
        variety: VarietySummary::of(v),
        hilbert_basis: None,
        newton: None,
        nondegeneracy: None,
        essential: None,
        analysis: None,
        family: None,
        stratification: None,
        oracle: Vec::new(),
        status: Status::Holds,
        verdict: String::new(),
    }
}

fn phrase(v: &Verdict, words: &str) -> String {
    match v.status {
        Status::Holds => words.to_string(),
        Status::Fails => format!("not {words}"),
        Status::Unknown => format!("undecided whether {words}"),
    }
}

fn settle(r: &mut Report, v: &Verdict, words: &str) {
    r.status = v.status;
    r.verdict = phrase(v, words);
}

fn lattice_box(n: usize, b: i64) -> impl Iterator<Item = IntVec> {
    let mut x = Some(vec![-b; n]);
    std::iter::from_fn(move || {
        let cur = x.take()?;
        let mut next = cur.clone();
        let mut j = 0;
        while j < n && next[j] == b {
            next[j] = -b;
            j += 1;
        }
        if j < n {
            next[j] += 1;
            x = Some(next);
        }
        Some(cur)
    })
}

/// Brute-force check of a Hilbert basis of `σ̌`: every element is irreducible,
/// and every lattice point of `σ̌` in `[-b, b]^n` is a sum of elements.
pub fn hilbert_box_oracle(v: &ToricVariety, basis: &[IntVec], b: i64) -> Result<usize, String> {
    let cone = &v.dual;
    let n = v.n;
    let grading: IntVec = (0..n).map(|j| cone.facets().iter().map(|f| f[j]).sum()).collect();
    let deg = |x: &[i64]| x.iter().zip(&grading).map(|(a, g)| a * g).sum::<i64>();
    for h in basis {
        if !cone.contains_int(h) || h.iter().all(|&c| c == 0) {
            return Err(format!("{h:?} is not a nonzero point of the cone"));
        }
        // any summand lies in conv(0, (deg h / deg r) r) over the rays r
        let dh = deg(h);
        let radius = cone
            .rays()
            .iter()
            .flat_map(|r| r.iter().map(move |c| (dh * c.abs() + deg(r) - 1) / deg(r)))
            .max()
            .unwrap_or(0);
        for q in lattice_box(n, radius) {
            let rest: IntVec = h.iter().zip(&q).map(|(a, c)| a - c).collect();
            if q.iter().any(|&c| c != 0) && rest.iter().any(|&c| c != 0) && cone.contains_int(&q) && cone.contains_int(&rest) {
                return Err(format!("{h:?} = {q:?} + {rest:?} is reducible"));
            }
        }
    }
    let mut memo: std::collections::HashMap<IntVec, bool> = std::collections::HashMap::new();
    fn generated(
        x: &IntVec,
        basis: &[IntVec],
        v: &ToricVariety,
        memo: &mut std::collections::HashMap<IntVec, bool>,
    ) -> bool {
        if x.iter().all(|&c| c == 0) {
            return true;
        }
        if let Some(&m) = memo.get(x) {
            return m;
        }
        let ok = basis.iter().any(|h| {
            let y: IntVec = x.iter().zip(h).map(|(a, c)| a - c).collect();
            v.dual.contains_int(&y) && generated(&y, basis, v, memo)
        });
        memo.insert(x.clone(), ok);
        ok
    }
    let mut count = 0;
    for x in lattice_box(n, b) {
        if cone.contains_int(&x) {
            count += 1;
            if !generated(&x, basis, v, &mut memo) {
                return Err(format!("{x:?} is not a sum of basis elements"));
            }
        }
    }
    Ok(count)
}

fn witness_oracle(r: &Report) -> Vec<OracleCheck> {
    r.witnesses()
        .iter()
        .map(|w| match w.replay() {
            Ok(()) => OracleCheck { name: "witness replay".into(), agrees: true, detail: w.describe() },
            Err(e) => OracleCheck { name: "witness replay".into(), agrees: false, detail: e },
        })
        .collect()
}

fn euler_oracle(v: &ToricVariety, g: &ToricPolynomial<GaussianRational>) -> Result<OracleCheck, CliError> {
    let np = newton_polyhedron(v, g)?;
    let mut bad = Vec::new();
    let mut count = 0;
    for f in np.compact_boundary()? {
        count += 1;
        let g_delta = g.filter(|e| f.contains(&v.lambda_of(e)));
        let l = torus_form(v, &g_delta).form;
        // Σ w_j ξ_j ∂_j L = d L
        let mut lhs = crate::arith::MPoly::zero(v.n);
        for j in 0..v.n {
            lhs = lhs.add(&l.log_derivative(j).scale(&GaussianRational::from_ratio(f.weight[j], 1)));
        }
        if lhs != l.scale(&GaussianRational::from_ratio(f.value, 1)) {
            bad.push(l.display_with(&var_names("xi", v.n)));
        }
    }
    Ok(OracleCheck {
        name: "weighted Euler identity".into(),
        agrees: bad.is_empty(),
        detail: if bad.is_empty() { format!("{count} compact face functions") } else { bad.join("; ") },
    })
}

/// Run one command on a parsed problem.
pub fn run(cmd: Command, p: &Problem, opts: &RunOptions) -> Result<Report, CliError> {
    let v = &p.variety;
    let cfg = config(p, opts);
    let mut r = empty_report(cmd, v, &cfg);
    match cmd {
        Command::Dual => {
            r.verdict = "dual cone computed".into();
            if opts.oracle {
                let back = v.dual.dual();
                r.oracle.push(OracleCheck {
                    name: "double dual".into(),
                    agrees: back == v.sigma,
                    detail: format!("σ̌̌ rays {:?}", back.rays()),
                });
            }
        }
        Command::Hilbert => {
            let hb = hilbert_basis(&v.dual)?;
            if opts.oracle {
                let check = hilbert_box_oracle(v, &hb, 10);
                r.oracle.push(OracleCheck {
                    name: "box enumeration, B = 10".into(),
                    agrees: check.is_ok(),
                    detail: match check {
                        Ok(k) => format!("basis irreducible; all {k} cone points in the box generated"),
                        Err(e) => e,
                    },
                });
            }
            r.verdict = format!("Hilbert basis has {} elements", hb.len());
            r.hilbert_basis = Some(hb);
        }
        Command::Faces => {
            let g = polynomial_of(p)?;
            let np = newton_polyhedron(v, &g)?;
            let faces = np.faces()?.to_vec();
            r.verdict = format!(
                "{} faces, {} compact",
                faces.len(),
                faces.iter().filter(|f| f.is_compact).count()
            );
            r.newton = Some(NewtonSummary {
                polynomial: g.display(),
                support: np.support.clone(),
                vertices: np.vertices.clone(),
                faces,
                anomalies: np.anomalies.clone(),
            });
            if opts.oracle {
                r.oracle.push(euler_oracle(v, &g)?);
            }
        }
        Command::Nondeg => {
            let g = polynomial_of(p)?;
            let rep = check_nondegeneracy(v, &g, &cfg)?;
            settle(&mut r, &rep.overall, "non-degenerate");
            r.nondegeneracy = Some(rep);
            if opts.oracle {
                r.oracle.push(euler_oracle(v, &g)?);
            }
        }
        Command::Tame => {
            let g = polynomial_of(p)?;
            let scan = essential_noncompact_faces(v, &g, &cfg)?;
            let overall = Verdict::all(scan.essential.iter().map(|e| &e.tame), "locally tame along the vanishing varieties");
            settle(&mut r, &overall, "locally tame along the vanishing varieties");
            r.essential = Some(scan);
        }
        Command::Analyze => {
            let g = polynomial_of(p)?;
            let a = analyze(v, &g, &cfg)?;
            r.status = a.overall.status;
            r.verdict = format!(
                "{}; {}",
                phrase(&a.nondegeneracy.overall, "non-degenerate"),
                phrase(&a.tameness, "locally tame along the vanishing varieties")
            );
            r.analysis = Some(a);
            if opts.oracle {
                r.oracle.push(euler_oracle(v, &g)?);
            }
        }
        Command::Family => {
            let Subject::Family(f) = &p.subject else {
                return Err(CliError::Usage("the family command needs a `family`".into()));
            };
            let rep = equisingularity_verdict(v, f, &cfg)?;
            r.status = rep.admissible.status;
            r.verdict = if rep.equisingular.is_holds() {
                EQUISINGULAR.to_string()
            } else {
                match rep.admissible.status {
                    Status::Fails => "not admissible; equisingularity undecided".to_string(),
                    _ => "admissibility undecided; equisingularity undecided".to_string(),
                }
            };
            r.family = Some(rep);
        }
        Command::Stratify => {
            let (strata, ci, admissible) = match &p.subject {
                Subject::Family(f) => {
                    let rep = equisingularity_verdict(v, f, &cfg)?;
                    (rep.stratification.clone(), rep.condition_i, rep.admissible)
                }
                Subject::Polynomial(g) => {
                    let a = analyze(v, g, &cfg)?;
                    (stratification_from(v, &a)?, Verdict::holds(Method::ExactSubclass, "constant family"), a.overall)
                }
                Subject::Nothing => return Err(CliError::Usage("stratify needs a `polynomial` or `family`".into())),
            };
            if ci.is_holds() {
                r.status = admissible.status;
                r.verdict = format!("{} strata; {}", strata.len(), phrase(&admissible, "admissible"));
                r.stratification = Some(strata);
            } else {
                r.status = ci.status;
                r.verdict = format!("condition (I) does not hold: {}", ci.evidence);
            }
        }
    }
    if opts.oracle {
        let replays = witness_oracle(&r);
        r.oracle.extend(replays);
    }
    Ok(r)
}

/// Replay every witness in a structured report. Returns the number checked
/// and the failures.
pub fn verify_report(text: &str) -> Result<(usize, Vec<String>), CliError> {
    let r = Report::from_json(text).map_err(|e| CliError::Parse(format!("report {}:{}: {e}", e.line(), e.column())))?;
    let ws = r.witnesses();
    let failures = ws
        .iter()
        .filter_map(|w| w.replay().err().map(|e| format!("{}: {e}", w.describe())))
        .collect();
    Ok((ws.len(), failures))
}
