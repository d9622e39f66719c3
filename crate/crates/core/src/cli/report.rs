//! Structured reports and their text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::analysis::Analysis;
use crate::checks::{EssentialScan, NondegReport, Status, Verdict, Witness};
use crate::family::{AdmissibilityReport, Stratum};
use crate::lattice::IntVec;
use crate::newton::PolyFace;
use crate::toric::{IndexSet, ToricVariety};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarietySummary {
    pub n: usize,
    pub r: usize,
    pub sigma_rays: Vec<IntVec>,
    pub dual_rays: Vec<IntVec>,
    pub dual_facets: Vec<IntVec>,
    pub generators: Vec<IntVec>,
    pub valid_index_sets: Vec<IndexSet>,
    pub warnings: Vec<String>,
}

impl VarietySummary {
    pub fn of(v: &ToricVariety) -> Self {
        VarietySummary {
            n: v.n,
            r: v.r,
            sigma_rays: v.sigma.rays().to_vec(),
            dual_rays: v.dual.rays().to_vec(),
            dual_facets: v.dual.facets().to_vec(),
            generators: v.generators.clone(),
            valid_index_sets: v.valid_index_sets.clone(),
            warnings: v.warnings.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonSummary {
    pub polynomial: String,
    pub support: Vec<IntVec>,
    pub vertices: Vec<IntVec>,
    pub faces: Vec<PolyFace>,
    pub anomalies: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub name: String,
    pub agrees: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub seed: u64,
    pub budget: usize,
    pub variety: VarietySummary,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert_basis: Option<Vec<IntVec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub newton: Option<NewtonSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nondegeneracy: Option<NondegReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub essential: Option<EssentialScan>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub analysis: Option<Analysis>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<AdmissibilityReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stratification: Option<Vec<Stratum>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub oracle: Vec<OracleCheck>,
    pub status: Status,
    pub verdict: String,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// Every witness carried by any verdict in the report.
    pub fn witnesses(&self) -> Vec<Witness> {
        let value = serde_json::to_value(self).expect("reports serialize");
        let mut out = Vec::new();
        collect_witnesses(&value, &mut out);
        out
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Holds => 0,
            Status::Fails => 2,
            Status::Unknown => 3,
        }
    }
}

fn collect_witnesses(v: &serde_json::Value, out: &mut Vec<Witness>) {
    match v {
        serde_json::Value::Object(map) => {
            for (k, x) in map {
                if k == "witness" && !x.is_null() {
                    if let Ok(w) = serde_json::from_value::<Witness>(x.clone()) {
                        if !out.contains(&w) {
                            out.push(w);
                        }
                    }
                } else {
                    collect_witnesses(x, out);
                }
            }
        }
        serde_json::Value::Array(xs) => xs.iter().for_each(|x| collect_witnesses(x, out)),
        _ => {}
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Holds => "holds",
        Status::Fails => "FAILS",
        Status::Unknown => "unknown",
    }
}

fn verdict_line(v: &Verdict) -> String {
    let mut s = format!("{} [{:?}] {}", status_word(v.status), v.method, v.evidence);
    if let Some(w) = &v.witness {
        let _ = write!(s, "\n      witness: {}", w.describe());
        if let Some(dw) = &w.degeneration_weight {
            let _ = write!(s, "\n      degeneration weight: {dw:?}");
        }
    }
    s
}

fn vecs(v: &[IntVec]) -> String {
    v.iter().map(|x| format!("({})", x.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))).collect::<Vec<_>>().join(" ")
}

fn sets(v: &[IndexSet]) -> String {
    v.iter().map(|i| if i.is_empty() { "∅".to_string() } else { i.to_string() }).collect::<Vec<_>>().join(" ")
}

fn face_line(f: &PolyFace) -> String {
    let kind = if f.is_compact { "compact".to_string() } else { format!("direction {}", f.noncompact_direction) };
    format!("dim {} {} weight {:?} value {} vertices {}", f.dim, kind, f.weight, f.value, vecs(&f.vertices))
}

fn render_nondeg(out: &mut String, rep: &NondegReport) {
    let _ = writeln!(out, "compact faces: {}", rep.faces.len());
    for f in &rep.faces {
        let _ = writeln!(out, "  {}", face_line(&f.face));
        let _ = writeln!(out, "    face function {}", f.face_function);
        let _ = writeln!(out, "    {}", verdict_line(&f.verdict));
    }
    let _ = writeln!(out, "non-degeneracy: {}", verdict_line(&rep.overall));
}

fn render_essential(out: &mut String, scan: &EssentialScan) {
    let _ = writeln!(out, "essential non-compact faces: {}", scan.essential.len());
    for e in &scan.essential {
        let _ = writeln!(out, "  {}", face_line(&e.face));
        let _ = writeln!(out, "    g_Δ = {}", e.face_function);
        let _ = writeln!(out, "    tame: {} (radius {:?})", verdict_line(&e.tame), e.tameness_radius);
    }
    for r in &scan.rejected {
        let _ = writeln!(out, "  not essential: {} ({})", face_line(&r.face), r.reason);
    }
    for a in &scan.anomalies {
        let _ = writeln!(out, "  anomaly: {a}");
    }
}

fn render_analysis(out: &mut String, a: &Analysis) {
    let _ = writeln!(out, "polynomial {}", a.polynomial);
    let _ = writeln!(out, "on the torus {}", a.torus_form);
    let _ = writeln!(out, "vertices {}", vecs(&a.vertices));
    let _ = writeln!(out, "vanishing index sets {}", sets(&a.vanishing.vanishing));
    let _ = writeln!(out, "non-vanishing index sets {}", sets(&a.vanishing.non_vanishing));
    render_nondeg(out, &a.nondegeneracy);
    render_essential(out, &a.essential);
    let _ = writeln!(out, "locally tame: {}", verdict_line(&a.tameness));
    for w in &a.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
}

fn render_strata(out: &mut String, strata: &[Stratum]) {
    let _ = writeln!(out, "canonical stratification:");
    for s in strata {
        let _ = writeln!(out, "  {} dim {}: {}", s.label(), s.dim, s.description);
    }
}

pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let v = &r.variety;
    let _ = writeln!(out, "command {}", r.command);
    let _ = writeln!(out, "variety: n = {}, r = {}", v.n, v.r);
    let _ = writeln!(out, "σ rays {}", vecs(&v.sigma_rays));
    let _ = writeln!(out, "σ̌ rays {}", vecs(&v.dual_rays));
    let _ = writeln!(out, "σ̌ facets {}", vecs(&v.dual_facets));
    let _ = writeln!(out, "generators {}", vecs(&v.generators));
    let _ = writeln!(out, "valid index sets {}", sets(&v.valid_index_sets));
    for w in &v.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    if let Some(h) = &r.hilbert_basis {
        let _ = writeln!(out, "Hilbert basis of σ̌ ∩ Z^{}: {}", v.n, vecs(h));
    }
    if let Some(n) = &r.newton {
        let _ = writeln!(out, "polynomial {}", n.polynomial);
        let _ = writeln!(out, "support {}", vecs(&n.support));
        let _ = writeln!(out, "vertices {}", vecs(&n.vertices));
        let _ = writeln!(out, "faces: {}", n.faces.len());
        for f in &n.faces {
            let _ = writeln!(out, "  {}", face_line(f));
        }
        for a in &n.anomalies {
            let _ = writeln!(out, "anomaly: {a}");
        }
    }
    if let Some(nd) = &r.nondegeneracy {
        render_nondeg(&mut out, nd);
    }
    if let Some(e) = &r.essential {
        render_essential(&mut out, e);
    }
    if let Some(a) = &r.analysis {
        render_analysis(&mut out, a);
    }
    if let Some(f) = &r.family {
        let _ = writeln!(out, "family {}", f.family);
        let _ = writeln!(out, "exceptional t: {}", if f.exceptional_t.is_empty() { "none".into() } else { f.exceptional_t.join(", ") });
        let _ = writeln!(out, "condition (I): {}", verdict_line(&f.condition_i));
        let _ = writeln!(out, "condition (II) at t = 0: {}", verdict_line(&f.condition_ii_zero));
        let _ = writeln!(out, "condition (II) generic t: {}", verdict_line(&f.condition_ii_generic));
        for s in &f.spot_checks {
            let _ = writeln!(out, "  spot check t = {}: {}", s.t, verdict_line(&s.verdict));
        }
        let _ = writeln!(out, "uniform tameness radius: {:?}", f.uniform_tameness);
        let _ = writeln!(out, "admissible: {}", verdict_line(&f.admissible));
        if !f.stratification.is_empty() {
            render_strata(&mut out, &f.stratification);
        }
        for w in &f.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
    }
    if let Some(s) = &r.stratification {
        render_strata(&mut out, s);
    }
    for o in &r.oracle {
        let _ = writeln!(out, "oracle {}: {} ({})", o.name, if o.agrees { "agrees" } else { "DISAGREES" }, o.detail);
    }
    let _ = writeln!(out, "verdict: {} ({})", r.verdict, status_word(r.status));
    out
}
