//! The whole single-polynomial pipeline: vanishing index sets, compact
//! faces, essential faces and a combined verdict.

use toric_whitney::analysis::analyze;
use toric_whitney::checks::CheckConfig;
use toric_whitney::cli::parse::parse_polynomial;
use toric_whitney::newton::ToricPolynomial;
use toric_whitney::toric::{build_variety, BuildOptions, VarietyInput};

fn main() {
    let gens = vec![vec![0, 1, 2], vec![2, 1, 0], vec![1, 0, 3], vec![1, 1, 1]];
    let opts = BuildOptions { require_saturation: false, ..Default::default() };
    let v = build_variety(&VarietyInput::Generators(gens), &opts).unwrap();
    let src = "z1^2*z3^3 + z2^2*z3^3 + z3^4 - 5*z3^3*z4^3";
    let g = ToricPolynomial::new(parse_polynomial(src, v.r).unwrap()).unwrap();
    let a = analyze(&v, &g, &CheckConfig::default()).unwrap();

    println!("{}", a.polynomial);
    println!("torus form {}", a.torus_form);
    let names = |s: &[toric_whitney::toric::IndexSet]| s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ");
    println!("vanishing on {}", names(&a.vanishing.vanishing));
    println!("not vanishing on {}", names(&a.vanishing.non_vanishing));
    println!("non-degenerate: {:?}", a.nondegeneracy.overall.status);
    println!("essential faces: {}", a.essential.essential.len());
    println!("locally tame: {:?}: {}", a.tameness.status, a.tameness.evidence);
    println!("overall: {:?}", a.overall.status);
}
