//! Newton polyhedra of polynomials on a toric variety, with all faces.

use toric_whitney::cli::parse::parse_polynomial;
use toric_whitney::newton::{face_function, newton_polyhedron, torus_form, ToricPolynomial};
use toric_whitney::toric::{build_variety, BuildOptions, VarietyInput};
use toric_whitney::arith::var_names;

fn main() {
    let v = build_variety(&VarietyInput::SigmaRays(vec![vec![0, 1], vec![2, -1]]), &BuildOptions::default()).unwrap();
    for src in ["z1^4 + z1^2*z2 + z1*z2^2 - z1*z2*z3^2", "z1^4 + z2^4*z3 - z2^2*z3^2", "z1*z3 - z2^2 + z1^3"] {
        let g = ToricPolynomial::new(parse_polynomial(src, v.r).unwrap()).unwrap();
        let tf = torus_form(&v, &g);
        println!("g = {}", g.display());
        println!("  on the torus: {}", tf.form.display_with(&var_names("xi", v.n)));
        for c in &tf.cancellations {
            println!("  cancellation at λ = {:?} from {:?}", c.lambda, c.exponents);
        }
        let np = newton_polyhedron(&v, &g).unwrap();
        println!("  vertices {:?}", np.vertices);
        for f in np.faces().unwrap() {
            let (_, l) = face_function(&v, &g, f).unwrap();
            let kind = if f.is_compact { "compact".to_string() } else { format!("direction {}", f.noncompact_direction) };
            println!("  dim {} {kind:<16} w = {:?}: {}", f.dim, f.weight, l.display_with(&var_names("xi", v.n)));
        }
    }
}
