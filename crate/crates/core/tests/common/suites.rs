//! Randomized suites shared by the property tests and the acceptance run.
//! Each returns a short summary or the first counterexample.

use super::*;
use toric_whitney::analysis::analyze;
use toric_whitney::checks::{check_nondegeneracy, restriction_nondegeneracy_check, CheckConfig, Status};
use toric_whitney::cli::problem::parse_problem_str;
use toric_whitney::cli::report::Report;
use toric_whitney::cli::{run, Command, RunOptions};
use toric_whitney::lattice::hilbert_basis;
use toric_whitney::newton::{face_function, newton_polyhedron, weight_transport};

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn duality_involution(cases: usize) -> Result<String, String> {
    let mut rng = rng(17);
    for _ in 0..cases {
        let (n, rays) = random_cone(&mut rng, 5);
        let c = RationalCone::new(n, &rays).map_err(|e| e.to_string())?;
        let d = c.dual();
        if !(d.is_pointed() && d.is_full_dimensional()) {
            return Err(format!("dual of {rays:?} is not strongly convex and full"));
        }
        if d.dual() != c {
            return Err(format!("double dual of {rays:?} differs"));
        }
        for r in c.rays() {
            for s in d.rays() {
                if dot(r, s) < 0 {
                    return Err(format!("{r:?} and dual ray {s:?} pair negatively"));
                }
            }
        }
    }
    Ok(format!("{cases} cones"))
}

fn summand_radius(dual_rays: &[IntVec], grading: &[i64], h: &[i64]) -> i64 {
    dual_rays
        .iter()
        .flat_map(|r| r.iter().map(move |c| (dot(h, grading) * c.abs() + dot(r, grading) - 1) / dot(r, grading)))
        .max()
        .unwrap_or(0)
}

pub fn hilbert_box(cases: usize) -> Result<String, String> {
    let mut rng = rng(23);
    for _ in 0..cases {
        let (n, rays) = random_cone(&mut rng, 3);
        let v = build_variety(&VarietyInput::SigmaRays(rays.clone()), &BuildOptions::default()).map_err(|e| e.to_string())?;
        let hb = hilbert_basis(&v.dual).map_err(|e| e.to_string())?;
        let grading: IntVec = (0..n).map(|j| rays.iter().map(|r| r[j]).sum()).collect();
        let radius = hb.iter().map(|h| summand_radius(v.dual.rays(), &grading, h)).max().unwrap_or(0);
        brute_hilbert_check(&rays, &hb, 10, radius).map_err(|e| format!("σ rays {rays:?}: {e}"))?;
    }
    Ok(format!("{cases} cones, B = 10"))
}

pub fn transport_identity(cases: usize) -> Result<String, String> {
    let zoo = zoo();
    let mut rng = rng(101);
    let mut checked = 0;
    for case in 0..cases {
        let v = &zoo[case % zoo.len()];
        let g = random_polynomial(v, &mut rng);
        let np = newton_polyhedron(v, &g).map_err(|e| e.to_string())?;
        let Ok(faces) = np.faces() else { continue };
        for f in faces {
            let big_w = weight_transport(v, &f.weight);
            for e in g.poly().support() {
                let lambda = v.lambda_of(e);
                let ok = dot(&big_w, e) == dot(&f.weight, &lambda)
                    && (dot(&big_w, e) > f.value || f.contains(&lambda) && dot(&big_w, e) == f.value);
                if !ok {
                    return Err(format!("case {case}: {} term {e:?} face weight {:?}", g.display(), f.weight));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{cases} polynomials, {checked} face terms"))
}

pub fn euler_identity(cases: usize) -> Result<String, String> {
    let zoo = zoo();
    let mut rng = rng(202);
    let mut checked = 0;
    for case in 0..cases {
        let v = &zoo[case % zoo.len()];
        let g = random_polynomial(v, &mut rng);
        let np = newton_polyhedron(v, &g).map_err(|e| e.to_string())?;
        let Ok(faces) = np.faces() else { continue };
        for f in faces {
            let (g_delta, l) = face_function(v, &g, f).map_err(|e| e.to_string())?;
            let mut lhs = MPoly::zero(v.n);
            for j in 0..v.n {
                lhs = lhs.add(&MPoly::var(v.n, j).mul(&l.derivative(j)).scale(&G::from_ratio(f.weight[j], 1)));
            }
            let big_w = weight_transport(v, &f.weight);
            let mut lhs_z = MPoly::zero(v.r);
            for i in 0..v.r {
                lhs_z = lhs_z.add(&MPoly::var(v.r, i).mul(&g_delta.poly().derivative(i)).scale(&G::from_ratio(big_w[i], 1)));
            }
            let d = G::from_ratio(f.value, 1);
            if lhs != l.scale(&d) || lhs_z != g_delta.poly().scale(&d) {
                return Err(format!("case {case}: {} face weight {:?}", g.display(), f.weight));
            }
            checked += 1;
        }
    }
    Ok(format!("{cases} polynomials, {checked} face functions"))
}

pub fn restrictions_never_fail(cases: usize) -> Result<String, String> {
    let zoo = zoo();
    let mut rng = rng(303);
    let cfg = CheckConfig::default();
    let mut certified = 0;
    for case in 0..cases {
        let v = &zoo[case % zoo.len()];
        let g = random_polynomial(v, &mut rng);
        if check_nondegeneracy(v, &g, &cfg).map_err(|e| e.to_string())?.overall.status != Status::Holds {
            continue;
        }
        certified += 1;
        for (i, verdict) in restriction_nondegeneracy_check(v, &g, &cfg).map_err(|e| e.to_string())? {
            if verdict.status == Status::Fails {
                return Err(format!("case {case}: {} restricted to {i} fails", g.display()));
            }
        }
    }
    Ok(format!("{cases} polynomials, {certified} certified non-degenerate"))
}

pub fn witness_replay(cases: usize) -> Result<String, String> {
    let zoo = zoo();
    let mut rng = rng(404);
    let cfg = CheckConfig::default();
    let mut witnesses = 0;
    for case in 0..cases {
        let v = &zoo[case % zoo.len()];
        let g = if case % 2 == 0 { squared_binomial(v, &mut rng) } else { random_polynomial(v, &mut rng) };
        let a = analyze(v, &g, &cfg).map_err(|e| e.to_string())?;
        let verdicts = a.nondegeneracy.faces.iter().map(|f| &f.verdict).chain(a.essential.essential.iter().map(|e| &e.tame));
        for verdict in verdicts.filter(|v| v.status == Status::Fails) {
            let w = verdict.witness.as_ref().ok_or(format!("case {case}: failure without witness"))?;
            w.replay().map_err(|e| format!("case {case}: {}: {e}", g.display()))?;
            witnesses += 1;
        }
    }
    Ok(format!("{cases} polynomials, {witnesses} witnesses replayed"))
}

pub fn deterministic_reports(cases: usize) -> Result<String, String> {
    let zoo = zoo();
    let mut rng = rng(505);
    for case in 0..cases {
        let v = &zoo[case % zoo.len()];
        let g = if case % 3 == 0 { squared_binomial(v, &mut rng) } else { random_polynomial(v, &mut rng) };
        let text = serde_json::json!({
            "variety": { "generators": v.generators, "require_saturation": false },
            "polynomial": g.display(),
        })
        .to_string();
        let opts = RunOptions { seed: Some(case as u64), ..Default::default() };
        let once = || -> Result<String, String> {
            let p = parse_problem_str(&text).map_err(|e| e.to_string())?;
            Ok(run(Command::Analyze, &p, &opts).map_err(|e| e.to_string())?.to_json())
        };
        let first = once()?;
        if once()? != first {
            return Err(format!("case {case}: two runs differ"));
        }
        let back = Report::from_json(&first).map_err(|e| e.to_string())?;
        if back.to_json() != first {
            return Err(format!("case {case}: round trip differs"));
        }
    }
    Ok(format!("{cases} problems"))
}
