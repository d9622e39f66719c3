//! Acceptance run: one line per criterion. Everything is exact, so every
//! comparison is equality (tolerance 0).

mod common;

use std::process::ExitCode;

use common::*;
use toric_whitney::arith::{Field, MPoly};
use toric_whitney::checks::{
    check_nondegeneracy, essential_noncompact_faces, CheckConfig, Method, Radius, Status,
};
use toric_whitney::cli::parse::parse_family;
use toric_whitney::family::{equisingularity_verdict, FamilyPolynomial, EQUISINGULAR};
use toric_whitney::lattice::hilbert_basis;
use toric_whitney::newton::{face_function, newton_polyhedron};
use toric_whitney::toric::IndexSet;

type Outcome = Result<String, String>;

fn check(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn sorted<T: Ord + Clone>(v: &[T]) -> Vec<T> {
    let mut v = v.to_vec();
    v.sort();
    v
}

fn set(v: &[usize]) -> IndexSet {
    IndexSet::from_one_based(v)
}

/// Returns the parts that hold and the parts that do not.
fn dual_and_hilbert() -> (Vec<String>, Vec<String>) {
    let mut good = Vec::new();
    let mut bad = Vec::new();
    let mut part = |name: &str, r: Outcome| match r {
        Ok(s) => good.push(format!("{name} ({s})")),
        Err(e) => bad.push(format!("{name}: {e}")),
    };

    let v = plane();
    let hb = hilbert_basis(&v.dual).unwrap();
    part(
        "planar σ̌ and basis",
        check(v.dual.rays() == [vec![1, 0], vec![1, 2]] && hb == [vec![1, 0], vec![1, 1], vec![1, 2]], format!("{:?} {hb:?}", v.dual.rays()))
            .map(|_| "rays (1,0),(1,2); basis of 3".into()),
    );

    let v = sigma(&[&[2, -4, 2], &[3, 2, -1], &[-3, 6, 1]]);
    part(
        "three-dimensional σ̌ rays",
        check(sorted(v.dual.rays()) == [vec![0, 1, 2], vec![1, 0, 3], vec![2, 1, 0]], format!("{:?}", v.dual.rays()))
            .map(|_| "(0,1,2),(2,1,0),(1,0,3)".into()),
    );
    let claimed = vec![vec![0, 1, 2], vec![1, 0, 3], vec![1, 1, 1], vec![2, 1, 0]];
    let hb = hilbert_basis(&v.dual).unwrap();
    part(
        "four-element basis",
        check(sorted(&hb) == claimed, format!("computed {} elements {hb:?}, (1,1,2) is irreducible", hb.len())).map(|_| String::new()),
    );

    part("duality involution", suites::duality_involution(60));
    part("Hilbert box oracle", suites::hilbert_box(25));
    (good, bad)
}

fn valid_index_sets() -> Outcome {
    let v = four_generators();
    let got = sorted(&v.valid_index_sets().iter().map(|i| i.one_based()).collect::<Vec<_>>());
    let want = sorted(&[vec![], vec![1, 2, 3, 4], vec![1, 2, 4], vec![1, 3], vec![2, 3], vec![1], vec![2], vec![3]]);
    check(got == want, format!("{got:?}"))?;
    check(!v.is_valid_index_set(&set(&[1, 4])), "{1,4} present")?;
    Ok("8 sets, {1,4} absent".into())
}

fn newton_data() -> Outcome {
    let cfg = CheckConfig::default();
    let v = plane();
    let g = poly(&v, "z1^4 + z1^2*z2 + z1*z2^2 - z1*z2*z3^2");
    let np = newton_polyhedron(&v, &g).map_err(|e| e.to_string())?;
    check(sorted(&np.vertices) == [vec![3, 1], vec![3, 2], vec![4, 0], vec![4, 5]], format!("vertices {:?}", np.vertices))?;
    let segments = np.compact_boundary().map_err(|e| e.to_string())?.into_iter().filter(|f| f.dim == 1).count();
    check(segments == 3, format!("{segments} compact segments"))?;

    let g = poly(&v, "z1^4 + z2^4*z3 - z2^2*z3^2");
    let np = newton_polyhedron(&v, &g).map_err(|e| e.to_string())?;
    check(np.vertices == [vec![4, 0], vec![4, 6]], format!("vertices {:?}", np.vertices))?;
    let edge = np.compact_boundary().map_err(|e| e.to_string())?.into_iter().find(|f| f.dim == 1).ok_or("no compact edge")?;
    let (_, l) = face_function(&v, &g, &edge).map_err(|e| e.to_string())?;
    let want = MPoly::from_terms(2, [(vec![4, 0], G::one()), (vec![4, 6], G::from_ratio(-1, 1))]);
    check(l == want, format!("face function {l:?}"))?;

    let v = four_generators();
    let g = poly(&v, "z1^2*z3^3 + z2^2*z3^3 + z3^4 - 5*z3^3*z4^3");
    let scan = essential_noncompact_faces(&v, &g, &cfg).map_err(|e| e.to_string())?;
    check(scan.essential.iter().any(|e| e.direction == set(&[1, 2, 4])), "no essential face with I = {1,2,4}")?;
    let through = scan.rejected.iter().filter(|r| r.face.vertices.contains(&vec![4, 0, 12])).count();
    check(through > 0, "no rejected face through (4,0,12)")?;
    check(scan.essential.iter().all(|e| !e.face.vertices.contains(&vec![4, 0, 12])), "an essential face passes through (4,0,12)")?;
    Ok(format!("4 vertices and 3 segments; (4,0),(4,6) with ξ1⁴−ξ1⁴ξ2⁶; I = {{1,2,4}} essential, {through} faces through (4,0,12) rejected"))
}

fn nondegeneracy() -> Outcome {
    let cfg = CheckConfig::default();
    let v = plane();
    let g = poly(&v, "z1^4 + z2^4*z3 - z2^2*z3^2");
    let rep = check_nondegeneracy(&v, &g, &cfg).map_err(|e| e.to_string())?;
    check(rep.overall.status == Status::Holds && rep.overall.method == Method::ExactSubclass, format!("{:?}", rep.overall))?;

    let fixture: serde_json::Value =
        serde_json::from_str(include_str!("fixtures/c3_quartic_oracle.json")).map_err(|e| e.to_string())?;
    let v = c3();
    let g = poly(&v, "z1^4 + z2*z3^4 - z2^2*z3^2");
    let rep = check_nondegeneracy(&v, &g, &cfg).map_err(|e| e.to_string())?;
    let oracle = fixture["nondegenerate"].as_bool().ok_or("fixture lacks a verdict")?;
    check((rep.overall.status == Status::Holds) == oracle, format!("{:?} against oracle {oracle}", rep.overall.status))?;
    Ok(format!(
        "plane: Holds via ExactSubclass; C³: {:?}, matching the elimination oracle fixture",
        rep.overall.status
    ))
}

fn tameness() -> Outcome {
    let cfg = CheckConfig::default();
    let v = plane();
    let g = poly(&v, "z1^2*z3^2 - z2^3*z3^2 + z3^3");
    let scan = essential_noncompact_faces(&v, &g, &cfg).map_err(|e| e.to_string())?;
    check(!scan.essential.is_empty(), "no essential face")?;
    for e in &scan.essential {
        check(e.tame.status == Status::Holds && e.tameness_radius == Radius::Infinite, format!("{:?}", e.tame))?;
    }
    let v = c3();
    let scan = essential_noncompact_faces(&v, &g, &cfg).map_err(|e| e.to_string())?;
    let failing: Vec<_> = scan.essential.iter().filter(|e| e.tame.status == Status::Fails).collect();
    check(!failing.is_empty(), "no failing face on C³")?;
    for e in &failing {
        let w = e.tame.witness.as_ref().ok_or("failure without witness")?;
        w.replay()?;
    }
    Ok(format!("plane: Holds, radius Infinite; C³: {} failing face(s), witnesses replay exactly (budget {})", failing.len(), cfg.budget))
}

fn family_pipeline() -> Outcome {
    let cfg = CheckConfig::default();
    for (q, d, i) in [(5i64, 3u32, 2usize), (6, 2, 3)] {
        let v = ray_variety(q);
        let src = format!("z1^2 + t*z{i}^{d} + z{}", q - 1);
        let f = FamilyPolynomial::new(parse_family(&src, v.r).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let rep = equisingularity_verdict(&v, &f, &cfg).map_err(|e| e.to_string())?;
        for (name, s) in [
            ("condition I", rep.condition_i.status),
            ("condition II at 0", rep.condition_ii_zero.status),
            ("condition II generic", rep.condition_ii_generic.status),
            ("admissible", rep.admissible.status),
            ("equisingular", rep.equisingular.status),
        ] {
            check(s == Status::Holds, format!("q = {q}: {name} {s:?}"))?;
        }
        check(rep.equisingular.evidence == EQUISINGULAR, "verdict text")?;
        let full = set(&(1..=q as usize + 1).collect::<Vec<_>>());
        let want = sorted(&[
            "A_{1}".to_string(),
            "B_{1}".to_string(),
            format!("A_{full}"),
            format!("B_{full}"),
            "C_∅".to_string(),
            format!("C_{{{}}}", q + 1),
        ]);
        let got = sorted(&rep.stratification.iter().map(|s| s.label()).collect::<Vec<_>>());
        check(got == want, format!("q = {q}: strata {got:?}"))?;
    }
    Ok("(5,3,2) and (6,2,3): all conditions Holds, 6 strata each".into())
}

fn property_suites() -> Outcome {
    let parts = [
        ("transport", suites::transport_identity(200)?),
        ("Euler", suites::euler_identity(200)?),
        ("restrictions", suites::restrictions_never_fail(200)?),
        ("witness replay", suites::witness_replay(200)?),
        ("determinism", suites::deterministic_reports(200)?),
    ];
    Ok(parts.iter().map(|(n, s)| format!("{n}: {s}")).collect::<Vec<_>>().join("; "))
}

fn determinantal_minors() -> Outcome {
    let q = 5;
    let v = ray_variety(q);
    let mut rng = rng(808);
    for _ in 0..100 {
        let xi = [small_gaussian(&mut rng), small_gaussian(&mut rng)];
        let z = v.embed(&xi).map_err(|e| e.to_string())?;
        // rows (z_1..z_q) and (z_2..z_{q+1})
        for a in 0..q as usize {
            for b in a + 1..q as usize {
                let minor = z[a].clone() * z[b + 1].clone() - z[b].clone() * z[a + 1].clone();
                check(minor.is_zero(), format!("minor ({a},{b}) at {xi:?}"))?;
            }
        }
    }
    Ok("100 torus points, 10 minors each, all exactly 0".into())
}

fn main() -> ExitCode {
    // criteria left red, with the reason recorded alongside the ledger
    const KNOWN_RED: &[usize] = &[1];

    let (good, bad) = dual_and_hilbert();
    let first = if bad.is_empty() { Ok(good.join("; ")) } else { Err(format!("{}; holds: {}", bad.join("; "), good.join("; "))) };
    let results: Vec<(usize, &str, Outcome)> = vec![
        (1, "dual cones and Hilbert bases", first),
        (2, "valid index sets", valid_index_sets()),
        (3, "Newton data", newton_data()),
        (4, "non-degeneracy", nondegeneracy()),
        (5, "local tameness", tameness()),
        (6, "family pipeline", family_pipeline()),
        (7, "property suites", property_suites()),
        (8, "determinantal consistency", determinantal_minors()),
    ];

    let mut unexpected = Vec::new();
    for (k, name, r) in &results {
        match r {
            Ok(s) => println!("criterion {k} PASS [{name}] tolerance 0: {s}"),
            Err(e) => println!("criterion {k} FAIL [{name}] tolerance 0: {e}"),
        }
        if r.is_ok() == KNOWN_RED.contains(k) {
            unexpected.push(*k);
        }
    }
    // the only red part of criterion 1 is the four-element basis claim
    if bad.len() != 1 || !bad[0].starts_with("four-element basis") {
        unexpected.push(1);
    }
    if unexpected.is_empty() {
        println!("acceptance: {} pass, {} known red", results.len() - KNOWN_RED.len(), KNOWN_RED.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
