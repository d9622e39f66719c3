//! Non-degeneracy on compact faces, with a certified witness when it fails.

use toric_whitney::checks::{check_nondegeneracy, CheckConfig};
use toric_whitney::cli::parse::parse_polynomial;
use toric_whitney::newton::ToricPolynomial;
use toric_whitney::toric::{build_variety, BuildOptions, VarietyInput};

fn main() {
    let cfg = CheckConfig::default();
    let c3 = build_variety(&VarietyInput::Generators(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]), &BuildOptions::default()).unwrap();
    for src in ["z1^4 + z2*z3^4 - z2^2*z3^2", "z1^2 - 2*z1*z2 + z2^2 + z3^3", "z1^3 + z2^3 + z3^3 - 3*z1*z2*z3"] {
        let g = ToricPolynomial::new(parse_polynomial(src, c3.r).unwrap()).unwrap();
        let rep = check_nondegeneracy(&c3, &g, &cfg).unwrap();
        println!("{src}: {:?} ({:?})", rep.overall.status, rep.overall.method);
        for f in &rep.faces {
            println!("  {:?} {:<40} {:?}", f.face.vertices, f.face_function, f.verdict.status);
        }
        if let Some(w) = &rep.overall.witness {
            println!("  witness {}; replay {:?}", w.describe(), w.replay());
        }
    }
}
