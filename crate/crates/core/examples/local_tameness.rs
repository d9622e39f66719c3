//! Essential non-compact faces and local tameness along vanishing varieties.

use toric_whitney::checks::{essential_noncompact_faces, CheckConfig};
use toric_whitney::cli::parse::parse_polynomial;
use toric_whitney::newton::ToricPolynomial;
use toric_whitney::toric::{build_variety, BuildOptions, ToricVariety, VarietyInput};

fn report(name: &str, v: &ToricVariety, src: &str) {
    let g = ToricPolynomial::new(parse_polynomial(src, v.r).unwrap()).unwrap();
    let scan = essential_noncompact_faces(v, &g, &CheckConfig::default()).unwrap();
    println!("{name}: {src}");
    for e in &scan.essential {
        println!("  I = {} at {:?}: g_Δ = {}", e.direction, e.face.vertices, e.face_function);
        println!("    {:?} via {:?}, radius {:?}: {}", e.tame.status, e.tame.method, e.tameness_radius, e.tame.evidence);
        if let Some(w) = &e.tame.witness {
            println!("    witness {} weight {:?}, replay {:?}", w.describe(), w.degeneration_weight, w.replay());
        }
    }
    for r in &scan.rejected {
        println!("  rejected {:?} direction {}: {}", r.face.vertices, r.face.noncompact_direction, r.reason);
    }
}

fn main() {
    let plane = build_variety(&VarietyInput::SigmaRays(vec![vec![0, 1], vec![2, -1]]), &BuildOptions::default()).unwrap();
    let c3 = build_variety(&VarietyInput::Generators(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]), &BuildOptions::default()).unwrap();
    let src = "z1^2*z3^2 - z2^3*z3^2 + z3^3";
    report("plane", &plane, src);
    report("C^3", &c3, src);
}
